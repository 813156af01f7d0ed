//! Finitely presented multigraded modules over `F[U₁..Uₙ, V₁..Vₙ]` (optionally
//! extended by `𝖠`) with GF(2) coefficients, and dimension queries per degree.
//!
//! Degrees: `U_i` has Alexander degree `-e_i` and Maslov degree `-2`, `V_i` has
//! `+e_i` and `0`, `𝖠` has `-(1,…,1)` and `-2`. A slice of fixed (Alexander,
//! Maslov) degree is finite, since the Maslov degree fixes `|α| + j` and then the
//! Alexander degree fixes `β`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2;
use crate::hfunc::Staircase;
use crate::parallel;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub alexander2: Vec<i64>,
    pub maslov: i64,
    pub label: String,
}

/// `U^α V^β 𝖠^j · gen`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub a_pow: u32,
    pub gen: usize,
}

/// A GF(2) relation: the sum of its terms is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub terms: Vec<Term>,
}

/// Region of degrees on which a truncated presentation is trusted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Validity {
    Complete,
    /// Valid where every normalized Alexander coordinate exceeds the bound.
    MinAbove(i64),
}

impl Validity {
    pub fn contains(&self, alexander2: &[i64]) -> bool {
        match self {
            Validity::Complete => true,
            Validity::MinAbove(b) => alexander2.iter().all(|&a| a > 2 * b),
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Validity::Complete => f.write_str("all degrees"),
            Validity::MinAbove(b) => write!(f, "min(s̄) > {b}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Presentation {
    n: usize,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    with_a: bool,
    validity: Validity,
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn uniform(n: usize, k: u32) -> Vec<u32> {
    vec![k; n]
}

/// All `α ∈ Z≥0^n` with `|α| = total` and `α ≥ lower`.
fn compositions(lower: &[u32], total: u32, out: &mut Vec<Vec<u32>>) {
    let floor: u32 = lower.iter().sum();
    if floor > total {
        return;
    }
    let mut cur = lower.to_vec();
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, lower: &[u32], out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = lower[i] + left;
            out.push(cur.clone());
            return;
        }
        for extra in 0..=left {
            cur[i] = lower[i] + extra;
            rec(i + 1, left - extra, cur, lower, out);
        }
    }
    if cur.is_empty() {
        if total == 0 {
            out.push(Vec::new());
        }
        return;
    }
    rec(0, total - floor, &mut cur, lower, out);
}

impl Presentation {
    pub fn new(
        n: usize,
        generators: Vec<Generator>,
        relations: Vec<Relation>,
        with_a: bool,
        validity: Validity,
    ) -> Result<Self> {
        let p = Presentation {
            n,
            generators,
            relations,
            with_a,
            validity,
        };
        let mut labels = std::collections::HashSet::new();
        for g in &p.generators {
            if g.alexander2.len() != n {
                return Err(Error::invalid(format!("generator {} has wrong arity", g.label)));
            }
            if !labels.insert(g.label.as_str()) {
                return Err(Error::invalid(format!("duplicate generator label {}", g.label)));
            }
        }
        for (ri, r) in p.relations.iter().enumerate() {
            let mut degs = r.terms.iter().map(|t| p.term_degree(t));
            if let Some(first) = degs.next() {
                let first = first?;
                for d in degs {
                    if d? != first {
                        return Err(Error::Internal(format!(
                            "relation {ri} is not homogeneous: {}",
                            p.relation_string(r)
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn with_a(&self) -> bool {
        self.with_a
    }

    pub fn validity(&self) -> &Validity {
        &self.validity
    }

    /// (doubled Alexander, Maslov) degree of a term.
    pub fn term_degree(&self, t: &Term) -> Result<(Vec<i64>, i64)> {
        if t.gen >= self.generators.len() || t.alpha.len() != self.n || t.beta.len() != self.n {
            return Err(Error::invalid("malformed term"));
        }
        if t.a_pow > 0 && !self.with_a {
            return Err(Error::invalid("𝖠 used in a presentation without it"));
        }
        let g = &self.generators[t.gen];
        let a2 = (0..self.n)
            .map(|i| g.alexander2[i] + 2 * (t.beta[i] as i64 - t.alpha[i] as i64 - t.a_pow as i64))
            .collect();
        let alpha: i64 = t.alpha.iter().map(|&x| x as i64).sum();
        Ok((a2, g.maslov - 2 * alpha - 2 * t.a_pow as i64))
    }

    /// Monomials `(α, j)` (with `β` implied) carrying degree `(a2_src, gr_src)` to `(a2, d)`.
    fn multipliers(&self, a2_src: &[i64], gr_src: i64, a2: &[i64], d: i64) -> Vec<(Vec<u32>, u32, Vec<u32>)> {
        let mut out = Vec::new();
        let diff = gr_src - d;
        if diff < 0 || diff % 2 != 0 {
            return out;
        }
        let t = (diff / 2) as u32;
        let mut delta = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let dd = a2[i] - a2_src[i];
            if dd % 2 != 0 {
                return out;
            }
            delta.push(dd / 2);
        }
        let max_j = if self.with_a { t } else { 0 };
        let mut alphas = Vec::new();
        for j in 0..=max_j {
            let lower: Vec<u32> = delta.iter().map(|&dl| (-dl - j as i64).max(0) as u32).collect();
            alphas.clear();
            compositions(&lower, t - j, &mut alphas);
            for alpha in alphas.drain(..) {
                let beta = (0..self.n)
                    .map(|i| (delta[i] + alpha[i] as i64 + j as i64) as u32)
                    .collect();
                out.push((alpha, j, beta));
            }
        }
        out
    }

    /// Dimension over GF(2) of the slice in degree `(a2, d)`.
    pub fn graded_dim(&self, a2: &[i64], d: i64) -> Result<usize> {
        if a2.len() != self.n {
            return Err(Error::invalid(format!("degree {a2:?} has wrong arity")));
        }
        let mut cols: HashMap<(usize, Vec<u32>, u32), usize> = HashMap::new();
        for (gi, g) in self.generators.iter().enumerate() {
            for (alpha, j, _) in self.multipliers(&g.alexander2, g.maslov, a2, d) {
                let next = cols.len();
                cols.entry((gi, alpha, j)).or_insert(next);
            }
        }
        if cols.is_empty() {
            return Ok(0);
        }
        let mut rows = Vec::new();
        for r in &self.relations {
            let Some(first) = r.terms.first() else {
                continue;
            };
            let (ra2, rgr) = self.term_degree(first)?;
            for (alpha, j, _) in self.multipliers(&ra2, rgr, a2, d) {
                let mut row = Vec::with_capacity(r.terms.len());
                for t in &r.terms {
                    let key_alpha: Vec<u32> = t.alpha.iter().zip(&alpha).map(|(a, b)| a + b).collect();
                    let key = (t.gen, key_alpha, t.a_pow + j);
                    let c = cols.get(&key).ok_or_else(|| {
                        Error::Internal(format!("relation term outside its slice at {a2:?}, {d}"))
                    })?;
                    row.push(*c);
                }
                gf2::normalize_row(&mut row);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        Ok(cols.len() - gf2::rank(&rows, cols.len()))
    }

    /// Dimensions at many degrees, computed in parallel, in input order.
    pub fn graded_dims(&self, degrees: &[(Vec<i64>, i64)]) -> Result<Vec<usize>> {
        parallel::par_map(degrees, |(a, d)| self.graded_dim(a, *d))
            .into_iter()
            .collect()
    }

    fn monomial_string(&self, alpha: &[u32], beta: &[u32], a_pow: u32) -> String {
        let mut s = String::new();
        let var = |s: &mut String, name: &str, i: usize, e: u32| {
            if e == 0 {
                return;
            }
            if self.n == 1 {
                s.push_str(name);
            } else {
                s.push_str(&format!("{name}_{}", i + 1));
            }
            if e > 1 {
                s.push_str(&format!("^{e}"));
            }
        };
        for (i, &e) in alpha.iter().enumerate() {
            var(&mut s, "U", i, e);
        }
        for (i, &e) in beta.iter().enumerate() {
            var(&mut s, "V", i, e);
        }
        if a_pow > 0 {
            s.push('𝖠');
            if a_pow > 1 {
                s.push_str(&format!("^{a_pow}"));
            }
        }
        s
    }

    pub fn relation_string(&self, r: &Relation) -> String {
        let parts: Vec<String> = r
            .terms
            .iter()
            .map(|t| {
                let m = self.monomial_string(&t.alpha, &t.beta, t.a_pow);
                let label = self
                    .generators
                    .get(t.gen)
                    .map(|g| g.label.as_str())
                    .unwrap_or("?");
                if m.is_empty() {
                    label.to_string()
                } else {
                    format!("{m} {label}")
                }
            })
            .collect();
        format!("{} = 0", parts.join(" + "))
    }
}

fn term(alpha: Vec<u32>, beta: Vec<u32>, a_pow: u32, gen: usize) -> Term {
    Term {
        alpha,
        beta,
        a_pow,
        gen,
    }
}

fn equalizers(n: usize, gen: usize, out: &mut Vec<Relation>) {
    for j in 0..n {
        for l in j + 1..n {
            out.push(Relation {
                terms: vec![
                    term(unit(n, j), unit(n, j), 0, gen),
                    term(unit(n, l), unit(n, l), 0, gen),
                ],
            });
        }
    }
}

/// Label of a staircase generator, e.g. `z̃_3`, `z̃_{-4}`.
pub fn z_label(sigma: i64, tilde: bool) -> String {
    let z = if tilde { "z̃" } else { "z" };
    if (0..10).contains(&sigma) {
        format!("{z}_{sigma}")
    } else {
        format!("{z}_{{{sigma}}}")
    }
}

/// `HFL(T(n, mn))`: generators `Y_0..Y_{m(n-1)}` and the relations `U_I Y_i = V_Ī Y_{i+1}`.
pub fn build_torus(n: usize, m: usize) -> Result<Presentation> {
    if n < 1 {
        return Err(Error::invalid("need at least one strand"));
    }
    let top = m * (n - 1);
    let c2 = top as i64;
    let mut gens = Vec::with_capacity(top + 1);
    for i in 0..=top {
        let (q, r) = i.checked_div(m).map_or((0, 0), |q| (q as i64, (i % m) as i64));
        gens.push(Generator {
            alexander2: vec![c2 - 2 * i as i64; n],
            maslov: -(q + 1) * (q * m as i64 + 2 * r),
            label: format!("Y_{i}"),
        });
    }
    let mut rels = Vec::new();
    for i in 0..top {
        let q = i / m;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != q + 1 {
                continue;
            }
            let alpha: Vec<u32> = (0..n).map(|b| (mask >> b) & 1).collect();
            let beta: Vec<u32> = alpha.iter().map(|a| 1 - a).collect();
            rels.push(Relation {
                terms: vec![term(alpha, vec![0; n], 0, i), term(vec![0; n], beta, 0, i + 1)],
            });
        }
    }
    for i in 0..=top {
        equalizers(n, i, &mut rels);
    }
    Presentation::new(n, gens, rels, false, Validity::Complete)
}

fn staircase_prefix(st: &Staircase, count: usize) -> Result<Vec<i64>> {
    if count == 0 {
        return Err(Error::invalid("truncation must keep at least one generator"));
    }
    Ok(st.elements(count))
}

/// `ℋₙ(K)` of an L-space knot, truncated to the generators `z̃_{σ_1}..z̃_{σ_N}`.
pub fn build_colored(st: &Staircase, n: usize, count: usize) -> Result<Presentation> {
    build_staircase(st, n, count, true)
}

/// `HFL(K)` of an L-space knot, truncated to `z_{σ_1}..z_{σ_N}`.
pub fn build_knot(st: &Staircase, count: usize) -> Result<Presentation> {
    build_staircase(st, 1, count, false)
}

fn build_staircase(st: &Staircase, n: usize, count: usize, tilde: bool) -> Result<Presentation> {
    if n < 1 {
        return Err(Error::invalid("need at least one strand"));
    }
    let sig = staircase_prefix(st, count)?;
    let gens = sig
        .iter()
        .enumerate()
        .map(|(i, &s)| Generator {
            alexander2: vec![2 * s; n],
            maslov: -2 * i as i64,
            label: z_label(s, tilde),
        })
        .collect();
    let mut rels = Vec::new();
    for i in 0..count - 1 {
        let gap = (sig[i] - sig[i + 1]) as u32;
        for j in 0..n {
            let mut beta = uniform(n, gap);
            beta[j] -= 1;
            rels.push(Relation {
                terms: vec![term(unit(n, j), vec![0; n], 0, i), term(vec![0; n], beta, 0, i + 1)],
            });
        }
    }
    for i in 0..count {
        equalizers(n, i, &mut rels);
    }
    Presentation::new(n, gens, rels, false, Validity::MinAbove(sig[count - 1]))
}

/// `HFL(K) ⊗_{F[U,V]} 𝒜ₙᶜᵒˡ` with `U ↦ 𝖠` and `V ↦ V₁⋯Vₙ`, truncated like [`build_colored`].
pub fn build_tensor(st: &Staircase, n: usize, count: usize) -> Result<Presentation> {
    if n < 1 {
        return Err(Error::invalid("need at least one strand"));
    }
    let sig = staircase_prefix(st, count)?;
    let gens = sig
        .iter()
        .enumerate()
        .map(|(i, &s)| Generator {
            alexander2: vec![2 * s; n],
            maslov: -2 * i as i64,
            label: z_label(s, false),
        })
        .collect();
    let mut rels = Vec::new();
    for i in 0..count - 1 {
        let gap = (sig[i] - sig[i + 1]) as u32;
        rels.push(Relation {
            terms: vec![
                term(vec![0; n], vec![0; n], 1, i),
                term(vec![0; n], uniform(n, gap - 1), 0, i + 1),
            ],
        });
    }
    // the colored algebra relations U_j = 𝖠 ∏_{l≠j} V_l
    for i in 0..count {
        for j in 0..n {
            let mut beta = uniform(n, 1);
            beta[j] = 0;
            rels.push(Relation {
                terms: vec![term(unit(n, j), vec![0; n], 0, i), term(vec![0; n], beta, 1, i)],
            });
        }
    }
    Presentation::new(n, gens, rels, true, Validity::MinAbove(sig[count - 1]))
}

/// `V_ĵ (V₁⋯Vₙ)^full`, where `V_ĵ` (the product of all `V_l` with `l ≠ j`) is
/// present only when `complement_of = Some(j)`.
fn v_power(n: usize, complement_of: Option<usize>, full: u32) -> String {
    let name = |i: usize| if n == 1 { "V".to_string() } else { format!("V_{}", i + 1) };
    let mut s: String = match complement_of {
        Some(j) => (0..n).filter(|&i| i != j).map(name).collect(),
        None => String::new(),
    };
    if full > 0 && n > 1 {
        let all: String = (0..n).map(name).collect();
        s.push_str(&format!("({all})"));
        if full > 1 {
            s.push_str(&format!("^{full}"));
        }
    } else if full > 0 {
        s.push('V');
        if full > 1 {
            s.push_str(&format!("^{full}"));
        }
    }
    s
}

fn joined(mono: &str, label: &str) -> String {
    if mono.is_empty() {
        label.to_string()
    } else {
        format!("{mono} {label}")
    }
}

/// Indices `i` (0-based) with `z̃_{σ_{i+1}}` a stable generator for the `(n, mn)` cable,
/// i.e. `σ_{i+1} ≥ g - m`.
fn stable_steps(st: &Staircase, m: i64) -> Vec<(i64, i64)> {
    let floor = st.genus() - m;
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        let (a, b) = (st.sigma(i), st.sigma(i + 1));
        if b < floor {
            break;
        }
        out.push((a, b));
        i += 1;
    }
    out
}

/// The relations `U_j z̃_{σ_i} = V^{(σ_i-σ_{i+1})𝟙-e_j} z̃_{σ_{i+1}}` among the stable
/// generators of the `(n, mn)` cable, printed one per line.
pub fn colored_relation_lines(st: &Staircase, n: usize, m: i64) -> Vec<String> {
    let mut out = Vec::new();
    for (a, b) in stable_steps(st, m) {
        let gap = (a - b) as u32;
        for j in 0..n {
            let u = if n == 1 { "U".to_string() } else { format!("U_{}", j + 1) };
            let rhs = v_power(n, Some(j), gap - 1);
            out.push(format!("{u} {} = {}", z_label(a, true), joined(&rhs, &z_label(b, true))));
        }
    }
    out
}

/// The `𝖠`-action `𝖠 z̃_{σ_i} = (V₁⋯Vₙ)^{σ_i-σ_{i+1}-1} z̃_{σ_{i+1}}` on the stable generators.
pub fn colored_a_lines(st: &Staircase, n: usize, m: i64) -> Vec<String> {
    stable_steps(st, m)
        .into_iter()
        .map(|(a, b)| {
            let rhs = v_power(n, None, (a - b - 1) as u32);
            format!("𝖠 {} = {}", z_label(a, true), joined(&rhs, &z_label(b, true)))
        })
        .collect()
}

/// The zigzag relations `U z_{σ_i} = V^{σ_i-σ_{i+1}-1} z_{σ_{i+1}}` for `i < count`.
pub fn knot_relation_lines(st: &Staircase, count: usize) -> Vec<String> {
    (1..count)
        .map(|i| {
            let (a, b) = (st.sigma(i), st.sigma(i + 1));
            let rhs = v_power(1, None, (a - b - 1) as u32);
            format!("U {} = {}", z_label(a, false), joined(&rhs, &z_label(b, false)))
        })
        .collect()
}

/// Reference dimension `(doubled Alexander degree, Maslov degree) ↦ dim`.
pub type DimOracle<'a> = dyn Fn(&[i64], i64) -> usize + Sync + 'a;

/// One row of a dimension scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimEntry {
    pub alexander2: Vec<i64>,
    pub maslov: i64,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimReport {
    pub validity: String,
    pub entries: Vec<DimEntry>,
}

impl DimReport {
    pub fn discrepancies(&self) -> Vec<&DimEntry> {
        self.entries
            .iter()
            .filter(|e| e.oracle.is_some_and(|o| o != e.dim))
            .collect()
    }
}

/// All doubled vectors with `lo2[i] ≤ v[i] ≤ hi2[i]` and `v[i] ≡ lo2[i] (mod 2)`,
/// in lexicographic order.
pub fn lattice_box(lo2: &[i64], hi2: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for (&lo, &hi) in lo2.iter().zip(hi2) {
        let mut next = Vec::new();
        for prefix in &out {
            let mut x = lo;
            while x <= hi {
                let mut v = prefix.clone();
                v.push(x);
                next.push(v);
                x += 2;
            }
        }
        out = next;
    }
    out
}

/// Dimensions on a set of degrees, each compared against `oracle` when given.
pub fn oracle_scan(
    p: &Presentation,
    degrees: &[(Vec<i64>, i64)],
    oracle: Option<&DimOracle<'_>>,
) -> Result<DimReport> {
    let dims = p.graded_dims(degrees)?;
    let entries = degrees
        .iter()
        .zip(dims)
        .map(|((a, d), dim)| DimEntry {
            alexander2: a.clone(),
            maslov: *d,
            dim,
            oracle: oracle.map(|f| f(a, *d)),
        })
        .collect();
    Ok(DimReport {
        validity: p.validity().to_string(),
        entries,
    })
}
