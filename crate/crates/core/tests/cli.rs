use std::process::{Command, Output};

use serde_json::Value;

fn cablefloer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cablefloer")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hfunc_trefoil_from_delta() {
    let o = cablefloer(&["hfunc", "--delta", "t - 1 + t^-1", "--range", "-2..2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "s\th\n-2\t2\n-1\t1\n0\t1\n1\t0\n2\t0\n");
}

#[test]
fn hfunc_cable_json() {
    let o = cablefloer(&["--format", "json", "hfunc", "--knot", "T(3,4)", "--cable", "2,6", "--range", "-5..-5"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "cablefloer/1");
    assert_eq!(v["rows"][0]["h"], 6);
    assert_eq!(v["rows"][0]["lspace_verified"], true);
}

#[test]
fn below_threshold_is_flagged() {
    let o = cablefloer(&["hfunc", "--knot", "T(3,4)", "--cable", "2,2", "--range", "0..0"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("sbar\th\tlspace_verified\n"), "{out}");
    assert!(out.contains("\tfalse"));
}

#[test]
fn input_errors_exit_1() {
    let o = cablefloer(&["hfunc", "--delta", "t + t^-1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Δ(1)≠1"));
    for args in [
        &["hfunc", "--delta", "t^2"][..],
        &["hfunc", "--delta", "t^(1"],
        &["hfunc", "--knot", "T(2,4)"],
        &["present", "torus", "--n", "0", "--m", "1"],
        &["grading", "phi", "--n", "2", "--k", "2"],
        &["colimit", "--knot", "unknot", "--m-range", "6..7", "--window", "3"],
        &["frobnicate"],
    ] {
        assert_eq!(cablefloer(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn torus_presentation_with_oracle() {
    let o = cablefloer(&["present", "torus", "--n", "2", "--m", "2", "--oracle", "--maslov", "-6..0"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("# valid on"));
    assert_eq!(lines.next().unwrap(), "alexander\tmaslov\tdim\toracle");
    for l in lines {
        let f: Vec<&str> = l.split('\t').collect();
        assert_eq!(f[2], f[3], "{l}");
    }
}

#[test]
fn colored_relations_printed() {
    let o = cablefloer(&["present", "colored", "--knot", "T(3,4)", "--m", "6", "--relations"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("U_1 z̃_3 = V_2(V_1V_2)^2 z̃_0"));
    assert!(!out.contains("z̃_{-4} ="));
    assert!(out.contains("𝖠 z̃_0 = z̃_{-1}"));
}

#[test]
fn colimit_from_degree_file() {
    let dir = std::env::temp_dir().join(format!("cablefloer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("degrees.txt");
    std::fs::write(&path, "# s̄ d\n-5,-5 -10\n-4,-4 -8\n0,3 -2\n").unwrap();
    let o = cablefloer(&["colimit", "--knot", "T(3,4)", "--degrees", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0], ["-5,-5", "-10", "1", "true", "8", "1"]);
    assert_eq!(rows[1], ["-4,-4", "-8", "1", "true", "7", "1"]);
    assert_eq!(rows[2][2], "1");
}

#[test]
fn reports() {
    for args in [
        &["golden"][..],
        &["verify", "--all", "--n", "3"],
        &["hy-check", "--n", "4"],
        &["euler-check", "--knot", "T(2,3)", "--n", "3", "--m", "4"],
        &["algebra", "verify", "--n", "3"],
        &["grading", "crossing", "--n", "3", "--j", "2"],
        &["grading", "psi", "--n", "2", "--z", "1,2;2,2"],
    ] {
        let o = cablefloer(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["schema"], "cablefloer/1", "{args:?}");
    }
    let v: Value = serde_json::from_str(&stdout(&cablefloer(&["grading", "crossing", "--n", "3", "--j", "2"]))).unwrap();
    assert_eq!(v["shift"]["g_col"]["alexander2"], serde_json::json!([-6, -6, -6]));
}

#[test]
fn colored_table() {
    let o = cablefloer(&["colored", "--knot", "unknot", "--n", "2", "--range", "0..0", "--maslov", "-4..0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "sbar\tmaslov\tupower\n0,0\t0\t0\n0,0\t-2\t1\n0,0\t-4\t2\n");
}
