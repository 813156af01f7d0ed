//! The `cablefloer` command line.
//!
//! Tables are written as TSV (header row, degrees in lexicographic order) or as
//! JSON; reports are always JSON with a top-level `"schema"` key. Exit status is
//! 0 on success, 1 on bad input and 2 when a verification fails.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{self, word_to_basis, ColoredModule, Word};
use crate::colimit::lspace_colimit;
use crate::error::{Error, Result};
use crate::golden::golden_suite;
use crate::gradings::{crossing_shifts, phi_shift, phi_shift_general, psi_shift};
use crate::hfunc::{h_stab, HKnot};
use crate::hybridge::{telescope_check, verify_hy};
use crate::laurent::{stable_chi_check, torus_knot_delta, LaurentPoly};
use crate::parallel::par_map;
use crate::presentation::{
    build_colored, build_knot, build_tensor, build_torus, colored_a_lines, colored_relation_lines, lattice_box,
    oracle_scan, Presentation,
};

pub const SCHEMA: &str = "cablefloer/1";

#[derive(Parser, Debug)]
#[command(name = "cablefloer", version, about = "Colored knot Floer homology of L-space knots and cables")]
pub struct Cli {
    /// Output format for tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

/// An inclusive integer range written `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: i64,
    pub hi: i64,
}

impl std::str::FromStr for Range {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got '{s}'"))?;
        let lo = a.trim().parse().map_err(|_| format!("bad range start '{a}'"))?;
        let hi = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range end '{b}'"))?;
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Range { lo, hi })
    }
}

#[derive(Args, Debug, Clone)]
pub struct KnotArg {
    /// Named knot: unknot, T(p,q).
    #[arg(long, conflicts_with = "delta")]
    pub knot: Option<String>,
    /// Alexander polynomial, e.g. "t - 1 + t^-1".
    #[arg(long)]
    pub delta: Option<String>,
    /// Smallest twist trusted to give an L-space cable.
    #[arg(long)]
    pub threshold: Option<i64>,
}

impl KnotArg {
    pub fn delta(&self) -> Result<LaurentPoly> {
        match (&self.knot, &self.delta) {
            (Some(name), _) => preset(name),
            (None, Some(text)) => text.parse(),
            (None, None) => Err(Error::invalid("give --knot or --delta")),
        }
    }

    pub fn hknot(&self) -> Result<HKnot> {
        let k = HKnot::from_delta(&self.delta()?)?;
        Ok(match self.threshold {
            Some(t) => k.with_threshold(t),
            None => k,
        })
    }
}

/// Alexander polynomial of a named knot.
pub fn preset(name: &str) -> Result<LaurentPoly> {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.eq_ignore_ascii_case("unknot") || compact == "O" {
        return Ok(LaurentPoly::one());
    }
    let inner = compact
        .strip_prefix("T(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::invalid(format!("unknown knot '{name}'; use unknot or T(p,q)")))?;
    let (p, q) = inner
        .split_once(',')
        .ok_or_else(|| Error::invalid(format!("unknown knot '{name}'")))?;
    let p = p.parse().map_err(|_| Error::invalid(format!("bad p in '{name}'")))?;
    let q = q.parse().map_err(|_| Error::invalid(format!("bad q in '{name}'")))?;
    torus_knot_delta(p, q)
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// h-function of a knot, or of its (n, mn) cable in normalized degrees.
    Hfunc {
        #[command(flatten)]
        knot: KnotArg,
        /// Cable parameters n,m.
        #[arg(long)]
        cable: Option<String>,
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        range: Range,
    },
    /// Dimensions of a presented module per degree.
    Present {
        #[command(subcommand)]
        which: PresentKind,
    },
    /// Cable algebra: relation verifier and products.
    Algebra {
        #[command(subcommand)]
        op: AlgebraOp,
    },
    /// Dimensions of colored homology of an L-space knot.
    Colored {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "-4..4", allow_hyphen_values = true)]
        range: Range,
        #[arg(long, default_value = "-12..0", allow_hyphen_values = true)]
        maslov: Range,
    },
    /// Colimits of the full-twist directed systems.
    Colimit {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// File of degrees, one per line: `s1,s2,... d`.
        #[arg(long)]
        degrees: Option<PathBuf>,
        /// Box of normalized degrees used when no file is given.
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        range: Range,
        #[arg(long, default_value = "-12..0", allow_hyphen_values = true)]
        maslov: Range,
        #[arg(long, default_value = "6..14", allow_hyphen_values = true)]
        m_range: Range,
        /// Steps at the end of the range that must agree.
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
    /// Degree shifts of cobordism maps.
    Grading {
        #[command(subcommand)]
        which: GradingKind,
    },
    /// Stabilization of the collapsed cable Euler characteristic.
    EulerCheck {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, default_value_t = 2)]
        n: i64,
        #[arg(long)]
        m: i64,
    },
    /// Specialization identity for x_i.
    HyCheck {
        #[arg(long)]
        n: usize,
    },
    /// Relation families, specialization identity and published values.
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Published-value regression suite.
    Golden,
}

#[derive(Args, Debug, Clone)]
pub struct ScanArgs {
    /// Offsets s_i - c (torus) or s̄_i (colored) to scan.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<Range>,
    #[arg(long, default_value = "-12..0", allow_hyphen_values = true)]
    pub maslov: Range,
    /// Append the tower-model value and fail on mismatch.
    #[arg(long)]
    pub oracle: bool,
    /// Print the relations instead of dimensions.
    #[arg(long)]
    pub relations: bool,
}

#[derive(Subcommand, Debug)]
pub enum PresentKind {
    Torus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        scan: ScanArgs,
    },
    Colored {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of generators kept.
        #[arg(long)]
        count: Option<usize>,
        /// Twist used when printing relations.
        #[arg(long, default_value_t = 8)]
        m: i64,
        #[command(flatten)]
        scan: ScanArgs,
    },
    Knot {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long)]
        count: Option<usize>,
        #[command(flatten)]
        scan: ScanArgs,
    },
    Tensor {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        count: Option<usize>,
        #[command(flatten)]
        scan: ScanArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgebraOp {
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
    },
    Mul {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum GradingKind {
    Phi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    Crossing {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: i64,
    },
    /// Pairs as `i,j;i,j;...` (1-based).
    Psi {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        z: String,
    },
    General {
        #[arg(long)]
        lk_total: i64,
        #[arg(long)]
        lk: String,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 1)]
        twist: i64,
    },
}

/// Whether everything that was checked held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
}

impl Outcome {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Success
        } else {
            Outcome::VerificationFailed
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailed => 2,
        }
    }
}

fn parse_ints(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| Error::invalid(format!("bad integer '{s}'"))))
        .collect()
}

fn half(a2: i64) -> String {
    if a2 % 2 == 0 {
        (a2 / 2).to_string()
    } else {
        format!("{a2}/2")
    }
}

fn degree_string(a2: &[i64]) -> String {
    a2.iter().map(|&a| half(a)).collect::<Vec<_>>().join(",")
}

fn report(out: &mut dyn Write, command: &str, body: impl Serialize) -> Result<()> {
    let mut v = json!({ "schema": SCHEMA, "command": command });
    let body = serde_json::to_value(body).map_err(|e| Error::Internal(e.to_string()))?;
    match body {
        Value::Object(map) => v.as_object_mut().expect("object").extend(map),
        other => {
            v["result"] = other;
        }
    }
    writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(|e| Error::Internal(e.to_string()))?)?;
    Ok(())
}

fn maslov_values(r: Range) -> impl Iterator<Item = i64> {
    (r.lo..=r.hi).rev()
}

/// Runs one parsed command, writing to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    match &cli.command {
        Command::Hfunc { knot, cable, range } => hfunc_cmd(cli.format, knot, cable.as_deref(), *range, out),
        Command::Present { which } => present_cmd(cli.format, which, out),
        Command::Algebra { op } => algebra_cmd(op, out),
        Command::Colored { knot, n, range, maslov } => colored_cmd(cli.format, knot, *n, *range, *maslov, out),
        Command::Colimit {
            knot,
            n,
            degrees,
            range,
            maslov,
            m_range,
            window,
        } => {
            let hk = knot.hknot()?;
            let points = match degrees {
                Some(path) => read_degrees(path, *n)?,
                None => {
                    let boxed = lattice_box(&vec![2 * range.lo; *n], &vec![2 * range.hi; *n]);
                    boxed
                        .into_iter()
                        .flat_map(|a| maslov_values(*maslov).map(move |d| (a.iter().map(|x| x / 2).collect(), d)))
                        .collect()
                }
            };
            let results: Vec<Result<_>> =
                par_map(&points, |(s, d)| lspace_colimit(&hk, s, *d, m_range.lo, m_range.hi, *window));
            let entries = results.into_iter().collect::<Result<Vec<_>>>()?;
            let ok = entries.iter().all(|e| e.colimit.stabilized && e.colimit.dim == e.colored_dim);
            match cli.format {
                Format::Json => report(out, "colimit", json!({ "entries": entries, "ok": ok }))?,
                Format::Tsv => {
                    writeln!(out, "sbar\tmaslov\tdim\tstabilized\tfirst_stable_m\tcolored_dim")?;
                    for e in &entries {
                        let fs = e.colimit.first_stable.map_or("-".to_string(), |m| m.to_string());
                        let sb = e.sbar.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                        writeln!(
                            out,
                            "{sb}\t{}\t{}\t{}\t{fs}\t{}",
                            e.maslov, e.colimit.dim, e.colimit.stabilized, e.colored_dim
                        )?;
                    }
                }
            }
            Ok(Outcome::from_ok(ok))
        }
        Command::Grading { which } => {
            let shift = match which {
                GradingKind::Phi { n, k } => serde_json::to_value(phi_shift(*n, *k)?),
                GradingKind::Crossing { n, j } => serde_json::to_value(crossing_shifts(*n, *j)?),
                GradingKind::Psi { n, z } => {
                    let mut pairs = Vec::new();
                    for p in z.split(';').filter(|s| !s.trim().is_empty()) {
                        let v = parse_ints(p)?;
                        if v.len() != 2 || v.iter().any(|&x| x < 1) {
                            return Err(Error::invalid(format!("bad pair '{p}'")));
                        }
                        pairs.push((v[0] as usize, v[1] as usize));
                    }
                    serde_json::to_value(psi_shift(*n, &pairs)?)
                }
                GradingKind::General { lk_total, lk, k, twist } => {
                    serde_json::to_value(phi_shift_general(*lk_total, &parse_ints(lk)?, *k, *twist))
                }
            }
            .map_err(|e| Error::Internal(e.to_string()))?;
            report(out, "grading", json!({ "shift": shift }))?;
            Ok(Outcome::Success)
        }
        Command::EulerCheck { knot, n, m } => {
            let rep = stable_chi_check(&knot.delta()?, *n, *m)?;
            let ok = rep.holds;
            report(out, "euler-check", rep)?;
            Ok(Outcome::from_ok(ok))
        }
        Command::HyCheck { n } => {
            let hy = verify_hy(*n)?;
            let telescopes = (1..=*n).map(|i| telescope_check(*n, i)).collect::<Result<Vec<_>>>()?;
            let ok = hy && telescopes.iter().all(|&t| t);
            report(out, "hy-check", json!({ "n": n, "specialization": hy, "telescopes": telescopes, "ok": ok }))?;
            Ok(Outcome::from_ok(ok))
        }
        Command::Verify { all, n } => {
            let mut sections = serde_json::Map::new();
            let mut ok = true;
            let top = if *all { *n } else { 1.max(*n) };
            let lo = if *all { 1 } else { top };
            for k in lo..=top {
                let rep = algebra::verify_all(k, 4)?;
                ok &= rep.ok();
                let hy = verify_hy(k)?;
                ok &= hy;
                sections.insert(
                    format!("n{k}"),
                    json!({ "relations_ok": rep.ok(), "linear": rep.linear_checked,
                            "quadratic": rep.quadratic_checked, "y": rep.y_checked, "hy": hy }),
                );
            }
            if *all {
                let g = golden_suite();
                ok &= g.ok();
                sections.insert("golden_failures".into(), json!(g.failures()));
            }
            sections.insert("ok".into(), json!(ok));
            report(out, "verify", Value::Object(sections))?;
            Ok(Outcome::from_ok(ok))
        }
        Command::Golden => {
            let rep = golden_suite();
            let ok = rep.ok();
            report(out, "golden", json!({ "ok": ok, "checks": rep.checks }))?;
            Ok(Outcome::from_ok(ok))
        }
    }
}

fn hfunc_cmd(format: Format, knot: &KnotArg, cable: Option<&str>, range: Range, out: &mut dyn Write) -> Result<Outcome> {
    let hk = knot.hknot()?;
    let (n, m) = match cable {
        None => (1, None),
        Some(text) => {
            let v = parse_ints(text)?;
            if v.len() != 2 || v[0] < 1 || v[1] < 0 {
                return Err(Error::invalid(format!("--cable expects n,m with n ≥ 1, m ≥ 0; got '{text}'")));
            }
            (v[0] as usize, Some(v[1]))
        }
    };
    let points = lattice_box(&vec![2 * range.lo; n], &vec![2 * range.hi; n]);
    let mut rows = Vec::with_capacity(points.len());
    for p in &points {
        let sbar: Vec<i64> = p.iter().map(|x| x / 2).collect();
        let (h, verified) = match m {
            None => (hk.h(sbar[0]), true),
            Some(m) => {
                let r = h_stab(&hk, n as i64, m, &sbar)?;
                (r.value, r.lspace_verified)
            }
        };
        rows.push((sbar, h, verified));
    }
    match format {
        Format::Tsv => {
            let unverified = rows.iter().any(|r| !r.2);
            writeln!(out, "{}\th{}", if m.is_some() { "sbar" } else { "s" }, if unverified { "\tlspace_verified" } else { "" })?;
            for (s, h, v) in &rows {
                let s = s.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                if unverified {
                    writeln!(out, "{s}\t{h}\t{v}")?;
                } else {
                    writeln!(out, "{s}\t{h}")?;
                }
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(s, h, v)| json!({ "s̄": s, "h": h, "lspace_verified": v }))
                .collect();
            report(out, "hfunc", json!({ "rows": rows }))?;
        }
    }
    Ok(Outcome::Success)
}

fn tower(h: i64, d: i64) -> usize {
    let e = -2 * h - d;
    (e >= 0 && e % 2 == 0) as usize
}

fn scan_presentation(
    format: Format,
    p: &Presentation,
    points: Vec<Vec<i64>>,
    scan: &ScanArgs,
    oracle: &(dyn Fn(&[i64], i64) -> usize + Sync),
    out: &mut dyn Write,
) -> Result<Outcome> {
    let degrees: Vec<(Vec<i64>, i64)> = points
        .into_iter()
        .filter(|a| p.validity().contains(a))
        .flat_map(|a| maslov_values(scan.maslov).map(move |d| (a.clone(), d)))
        .collect();
    let rep = oracle_scan(p, &degrees, if scan.oracle { Some(oracle) } else { None })?;
    let ok = rep.discrepancies().is_empty();
    match format {
        Format::Json => report(out, "present", &rep)?,
        Format::Tsv => {
            writeln!(out, "# valid on {}", rep.validity)?;
            writeln!(out, "alexander\tmaslov\tdim{}", if scan.oracle { "\toracle" } else { "" })?;
            for e in &rep.entries {
                write!(out, "{}\t{}\t{}", degree_string(&e.alexander2), e.maslov, e.dim)?;
                match e.oracle {
                    Some(o) => writeln!(out, "\t{o}")?,
                    None => writeln!(out)?,
                }
            }
        }
    }
    Ok(Outcome::from_ok(ok))
}

fn print_relations(p: &Presentation, out: &mut dyn Write) -> Result<()> {
    for g in p.generators() {
        writeln!(out, "generator\t{}\t{}\t{}", g.label, degree_string(&g.alexander2), g.maslov)?;
    }
    for r in p.relations() {
        writeln!(out, "relation\t{}", p.relation_string(r))?;
    }
    Ok(())
}

fn default_count(hk: &HKnot, depth: i64) -> usize {
    (depth + hk.genus() + 2).max(1) as usize
}

fn present_cmd(format: Format, which: &PresentKind, out: &mut dyn Write) -> Result<Outcome> {
    match which {
        PresentKind::Torus { n, m, scan } => {
            if *n < 1 {
                return Err(Error::invalid("need n ≥ 1"));
            }
            let p = build_torus(*n, *m)?;
            if scan.relations {
                print_relations(&p, out)?;
                return Ok(Outcome::Success);
            }
            let c2 = (*m * (*n - 1)) as i64;
            let w = scan.window.unwrap_or(Range { lo: -c2 - 2, hi: 3 });
            let points = lattice_box(&vec![c2 + 2 * w.lo; *n], &vec![c2 + 2 * w.hi; *n]);
            let (nn, mm) = (*n as i64, *m as i64);
            let oracle = move |a: &[i64], d: i64| tower(crate::hfunc::h_torus(nn, mm, a).unwrap_or(0), d);
            scan_presentation(format, &p, points, scan, &oracle, out)
        }
        PresentKind::Colored { knot, n, count, m, scan } => {
            let hk = knot.hknot()?;
            let w = scan.window.unwrap_or(Range { lo: -3, hi: 4 });
            let count = count.unwrap_or_else(|| default_count(&hk, -w.lo));
            if scan.relations {
                for line in colored_relation_lines(hk.staircase(), *n, *m) {
                    writeln!(out, "{line}")?;
                }
                for line in colored_a_lines(hk.staircase(), *n, *m) {
                    writeln!(out, "{line}")?;
                }
                return Ok(Outcome::Success);
            }
            let p = build_colored(hk.staircase(), *n, count)?;
            colored_scan(format, &p, &hk, *n, w, scan, out)
        }
        PresentKind::Knot { knot, count, scan } => {
            let hk = knot.hknot()?;
            let w = scan.window.unwrap_or(Range { lo: -3, hi: 4 });
            let count = count.unwrap_or_else(|| default_count(&hk, -w.lo));
            let p = build_knot(hk.staircase(), count)?;
            if scan.relations {
                print_relations(&p, out)?;
                return Ok(Outcome::Success);
            }
            colored_scan(format, &p, &hk, 1, w, scan, out)
        }
        PresentKind::Tensor { knot, n, count, scan } => {
            let hk = knot.hknot()?;
            let w = scan.window.unwrap_or(Range { lo: -3, hi: 4 });
            let count = count.unwrap_or_else(|| default_count(&hk, -w.lo));
            let p = build_tensor(hk.staircase(), *n, count)?;
            if scan.relations {
                print_relations(&p, out)?;
                return Ok(Outcome::Success);
            }
            colored_scan(format, &p, &hk, *n, w, scan, out)
        }
    }
}

fn colored_scan(
    format: Format,
    p: &Presentation,
    hk: &HKnot,
    n: usize,
    w: Range,
    scan: &ScanArgs,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let points = lattice_box(&vec![2 * w.lo; n], &vec![2 * w.hi; n]);
    let module = ColoredModule::new(hk.clone(), n);
    let oracle = move |a: &[i64], d: i64| {
        let sbar: Vec<i64> = a.iter().map(|x| x / 2).collect();
        module.dim(&sbar, d)
    };
    scan_presentation(format, p, points, scan, &oracle, out)
}

fn algebra_cmd(op: &AlgebraOp, out: &mut dyn Write) -> Result<Outcome> {
    match op {
        AlgebraOp::Verify { n, max_m } => {
            if *n < 1 {
                return Err(Error::invalid("need n ≥ 1"));
            }
            let rep = algebra::verify_all(*n, *max_m)?;
            let ok = rep.ok();
            report(out, "algebra-verify", json!({ "report": rep, "ok": ok }))?;
            Ok(Outcome::from_ok(ok))
        }
        AlgebraOp::Mul { n, word } => {
            let w: Word = word.parse()?;
            let x = word_to_basis(*n, &w)?;
            report(out, "algebra-mul", json!({ "m": x.m, "s2": x.s2, "k": x.k, "grw": x.grw() }))?;
            Ok(Outcome::Success)
        }
    }
}

fn colored_cmd(format: Format, knot: &KnotArg, n: usize, range: Range, maslov: Range, out: &mut dyn Write) -> Result<Outcome> {
    if n < 1 {
        return Err(Error::invalid("need n ≥ 1"));
    }
    let module = ColoredModule::new(knot.hknot()?, n);
    let points = lattice_box(&vec![2 * range.lo; n], &vec![2 * range.hi; n]);
    let mut rows = Vec::new();
    for a in points {
        let sbar: Vec<i64> = a.iter().map(|x| x / 2).collect();
        for d in maslov_values(maslov) {
            if let Some(x) = module.element_at(&sbar, d) {
                rows.push((sbar.clone(), d, x.k));
            }
        }
    }
    match format {
        Format::Tsv => {
            writeln!(out, "sbar\tmaslov\tupower")?;
            for (s, d, k) in &rows {
                let s = s.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                writeln!(out, "{s}\t{d}\t{k}")?;
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(s, d, k)| json!({ "s̄": s, "maslov": d, "upower": k, "dim": 1 }))
                .collect();
            report(out, "colored", json!({ "nonzero": rows }))?;
        }
    }
    Ok(Outcome::Success)
}

fn read_degrees(path: &std::path::Path, n: usize) -> Result<Vec<(Vec<i64>, i64)>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(s), Some(d), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::invalid(format!("{}:{}: expected `s1,…,sn d`", path.display(), no + 1)));
        };
        let s = parse_ints(s)?;
        if s.len() != n {
            return Err(Error::invalid(format!("{}:{}: expected {n} coordinates", path.display(), no + 1)));
        }
        let d = d
            .parse()
            .map_err(|_| Error::invalid(format!("{}:{}: bad Maslov degree", path.display(), no + 1)))?;
        out.push((s, d));
    }
    Ok(out)
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(outcome) => outcome.exit_code(),
        // a closed downstream pipe (`| head`) is not an input error
        Err(Error::Io(std::io::ErrorKind::BrokenPipe, _)) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["cablefloer"];
        full.extend_from_slice(args);
        let code = main_with_args(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn presets() {
        assert_eq!(preset("T(3,4)").unwrap().to_string(), "t^3 - t^2 + 1 - t^-2 + t^-3");
        assert_eq!(preset("unknot").unwrap(), LaurentPoly::one());
        assert_eq!(preset("T(2, 3)").unwrap().to_string(), "t - 1 + t^-1");
        assert!(preset("figure8").is_err());
        assert!(preset("T(2,4)").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!("-5..5".parse::<Range>().unwrap(), Range { lo: -5, hi: 5 });
        assert_eq!("1..=3".parse::<Range>().unwrap(), Range { lo: 1, hi: 3 });
        assert!("3..1".parse::<Range>().is_err());
    }

    #[test]
    fn hfunc_table() {
        let (code, out, _) = run_args(&["hfunc", "--knot", "T(3,4)", "--range", "-5..5"]);
        assert_eq!(code, 0);
        let hs: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
        assert_eq!(hs, ["5", "4", "3", "3", "2", "1", "1", "1", "0", "0", "0"]);
    }

    #[test]
    fn bad_delta_exit_1() {
        let (code, _, err) = run_args(&["hfunc", "--delta", "2"]);
        assert_eq!(code, 1);
        assert!(err.contains("Δ(1)≠1"), "{err}");
        let (code, _, err) = run_args(&["hfunc", "--delta", "t^2"]);
        assert_eq!(code, 1);
        assert!(err.contains("symmetric"), "{err}");
    }

    #[test]
    fn json_has_schema() {
        let (code, out, _) = run_args(&["algebra", "mul", "--n", "3", "--word", "a0 a2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["k"], 1);
        assert_eq!(v["grw"], -6);
    }
}
