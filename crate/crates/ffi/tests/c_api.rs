use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use cablefloer_ffi::*;

fn last_error() -> String {
    let p = cf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn knot_roundtrip() {
    let delta = CString::new("t^3 - t^2 + 1 - t^-2 + t^-3").unwrap();
    let mut k = ptr::null_mut();
    unsafe {
        assert_eq!(cf_knot_from_delta(delta.as_ptr(), &mut k), CfStatus::Ok);
        assert!(cf_last_error().is_null());
        let mut g = 0;
        assert_eq!(cf_knot_genus(k, &mut g), CfStatus::Ok);
        assert_eq!(g, 3);
        let hs: Vec<i64> = (-5..=5)
            .map(|s| {
                let mut h = -1;
                assert_eq!(cf_knot_h(k, s, &mut h), CfStatus::Ok);
                h
            })
            .collect();
        assert_eq!(hs, [5, 4, 3, 3, 2, 1, 1, 1, 0, 0, 0]);

        let mut h = 0;
        let mut verified = false;
        assert_eq!(cf_h_stab(k, 2, 6, [-5i64, -5].as_ptr(), &mut h, &mut verified), CfStatus::Ok);
        assert_eq!((h, verified), (6, true));
        assert_eq!(cf_knot_set_threshold(k, 7), CfStatus::Ok);
        assert_eq!(cf_h_stab(k, 2, 6, [-5i64, -5].as_ptr(), &mut h, &mut verified), CfStatus::Ok);
        assert!(!verified);
        cf_knot_free(k);
    }
}

#[test]
fn errors_have_codes_and_messages() {
    let mut k = ptr::null_mut();
    unsafe {
        let bad = CString::new("t + t^-1").unwrap();
        assert_eq!(cf_knot_from_delta(bad.as_ptr(), &mut k), CfStatus::BadPolynomial);
        assert!(last_error().contains("Δ(1)≠1"));
        let junk = CString::new("t^(").unwrap();
        assert_eq!(cf_knot_from_delta(junk.as_ptr(), &mut k), CfStatus::Parse);
        assert_eq!(cf_knot_from_delta(ptr::null(), &mut k), CfStatus::NullPointer);
        assert_eq!(cf_knot_torus(2, 4, &mut k), CfStatus::InvalidArgument);
        assert!(k.is_null());
        let mut h = 0;
        assert_eq!(cf_knot_h(ptr::null(), 0, &mut h), CfStatus::NullPointer);
        assert_eq!(cf_h_torus(2, 1, [0i64, 0].as_ptr(), &mut h), CfStatus::OffLattice);
        cf_knot_free(ptr::null_mut());
        cf_presentation_free(ptr::null_mut());
    }
}

#[test]
fn presentations() {
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(cf_knot_torus(3, 4, &mut k), CfStatus::Ok);
        let mut col = ptr::null_mut();
        let mut ten = ptr::null_mut();
        assert_eq!(cf_presentation_colored(k, 2, 6, &mut col), CfStatus::Ok);
        assert_eq!(cf_presentation_tensor(k, 2, 6, &mut ten), CfStatus::Ok);
        let mut n = 0;
        assert_eq!(cf_presentation_strands(col, &mut n), CfStatus::Ok);
        assert_eq!(n, 2);
        for a in [[-4i64, -4], [0, 2], [-6, 8]] {
            let mut valid = false;
            assert_eq!(cf_presentation_valid_at(col, a.as_ptr(), 2, &mut valid), CfStatus::Ok);
            assert!(valid);
            for d in -10..=0 {
                let (mut x, mut y) = (9, 9);
                assert_eq!(cf_presentation_graded_dim(col, a.as_ptr(), 2, d, &mut x), CfStatus::Ok);
                assert_eq!(cf_presentation_graded_dim(ten, a.as_ptr(), 2, d, &mut y), CfStatus::Ok);
                assert_eq!(x, y);
            }
        }
        let mut valid = false;
        assert_eq!(cf_presentation_valid_at(col, [0i64].as_ptr(), 1, &mut valid), CfStatus::InvalidArgument);
        cf_presentation_free(col);
        cf_presentation_free(ten);
        cf_knot_free(k);

        let mut t = ptr::null_mut();
        assert_eq!(cf_presentation_torus(2, 1, &mut t), CfStatus::Ok);
        let mut dim = 9;
        assert_eq!(cf_presentation_graded_dim(t, [1i64, 1].as_ptr(), 2, 0, &mut dim), CfStatus::Ok);
        assert_eq!(dim, 1);
        cf_presentation_free(t);

        let mut ok = false;
        assert_eq!(cf_verify_hy(4, &mut ok), CfStatus::Ok);
        assert!(ok);
    }
}

/// Builds the static library into a private target directory, so the C program
/// never links against an artifact left over from an older build.
fn static_library() -> PathBuf {
    let target = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("c-link");
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
    let status = Command::new(cargo)
        .args(["build", "--quiet", "-p", "cablefloer-ffi", "--lib", "--target-dir"])
        .arg(&target)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .status()
        .expect("cargo runs");
    assert!(status.success());
    target.join("debug").join("libcablefloer_ffi.a")
}

fn header_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

#[test]
fn header_is_current_and_compiles_as_c() {
    let header = std::fs::read_to_string(header_dir().join("cablefloer.h")).unwrap();
    for name in ["cf_knot_from_delta", "cf_presentation_graded_dim", "cf_last_error", "CF_STATUS_BAD_POLYNOMIAL"] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("header_check.c");
    std::fs::write(&src, "#include \"cablefloer.h\"\nint main(void) { return CF_STATUS_OK; }\n").unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header_dir())
        .arg(&src)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
}

#[test]
fn c_program_links_against_static_library() {
    let lib = static_library();
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("smoke.c");
    let exe = dir.join("smoke");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "cablefloer.h"
int main(void) {
    CfKnot *k = NULL;
    if (cf_knot_torus(3, 4, &k) != CF_STATUS_OK) return 1;
    int64_t sbar[2] = {-5, -5}, h = 0;
    bool ok = false;
    if (cf_h_stab(k, 2, 8, sbar, &h, &ok) != CF_STATUS_OK) return 2;
    cf_knot_free(k);
    if (cf_knot_from_delta("t^2", &k) != CF_STATUS_BAD_POLYNOMIAL) return 3;
    printf("%lld %s\n", (long long)h, cf_last_error());
    return 0;
}
"#,
    )
    .unwrap();
    let linked = Command::new("cc")
        .args(["-std=c99", "-I"])
        .arg(header_dir())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .expect("a C compiler is available");
    assert!(linked.status.success(), "{}", String::from_utf8_lossy(&linked.stderr));
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("5 "), "{text}");
    assert!(text.contains("symmetric"), "{text}");
}
