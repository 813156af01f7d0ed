//! The cable algebra `𝒜ₙ` in its tower basis, its localization `𝒜ₙᶜᵒˡ`, and the
//! colored modules of L-space knots.
//!
//! Every graded piece of these objects is at most one-dimensional, so an element
//! is either zero or a single basis element `𝐔^k · (tower top)`. Products are
//! forced by the gradings: the `𝐔`-power of a product is whatever makes the
//! Maslov grading add up, and it must come out non-negative.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hfunc::{h0, h_cable, h_colored, h_stab, h_torus, HKnot};

/// (Alexander, Maslov, twist) degree. Alexander entries are doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TriGrading {
    pub alexander2: Vec<i64>,
    pub maslov: i64,
    pub twist: i64,
}

impl Add for &TriGrading {
    type Output = TriGrading;
    fn add(self, rhs: &TriGrading) -> TriGrading {
        assert_eq!(self.alexander2.len(), rhs.alexander2.len());
        TriGrading {
            alexander2: self
                .alexander2
                .iter()
                .zip(&rhs.alexander2)
                .map(|(a, b)| a + b)
                .collect(),
            maslov: self.maslov + rhs.maslov,
            twist: self.twist + rhs.twist,
        }
    }
}

/// Basis element `𝐔^k · top` of the tower in `HFL(T(n, mn))` at Alexander degree `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TowerBasisElt {
    pub m: i64,
    pub s2: Vec<i64>,
    pub k: i64,
}

impl TowerBasisElt {
    pub fn new(m: i64, s2: Vec<i64>, k: i64) -> Result<Self> {
        if k < 0 {
            return Err(Error::invalid(format!("negative 𝐔-power {k}")));
        }
        h_torus(s2.len() as i64, m, &s2)?;
        Ok(TowerBasisElt { m, s2, k })
    }

    pub fn unit(n: usize) -> Self {
        TowerBasisElt {
            m: 0,
            s2: vec![0; n],
            k: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.s2.len()
    }

    pub fn h(&self) -> i64 {
        h_torus(self.n() as i64, self.m, &self.s2).expect("lattice checked on construction")
    }

    pub fn grw(&self) -> i64 {
        -2 * self.h() - 2 * self.k
    }

    pub fn grading(&self) -> TriGrading {
        TriGrading {
            alexander2: self.s2.clone(),
            maslov: self.grw(),
            twist: self.m,
        }
    }

    /// The unique basis element of a given grading, or `None` if that piece is zero.
    pub fn from_grading(g: &TriGrading) -> Result<Option<Self>> {
        let n = g.alexander2.len() as i64;
        if g.twist < 0 {
            return Ok(None);
        }
        let h = match h_torus(n, g.twist, &g.alexander2) {
            Ok(h) => h,
            Err(Error::OffLattice(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        let excess = -2 * h - g.maslov;
        if excess < 0 || excess % 2 != 0 {
            return Ok(None);
        }
        Ok(Some(TowerBasisElt {
            m: g.twist,
            s2: g.alexander2.clone(),
            k: excess / 2,
        }))
    }
}

impl fmt::Display for TowerBasisElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, s2={:?}, k={})", self.m, self.s2, self.k)
    }
}

/// Generator `a_j`: one full twist in Spin^c structure `j`.
pub fn gen_a(n: usize, j: usize) -> Result<TowerBasisElt> {
    if j >= n {
        return Err(Error::invalid(format!("a_{j} does not exist for n = {n}")));
    }
    let (n_, j_) = (n as i64, j as i64);
    let x = TowerBasisElt {
        m: 1,
        s2: vec![n_ - 1 - 2 * j_; n],
        k: 0,
    };
    if x.grw() != -j_ * j_ - j_ {
        return Err(Error::Internal(format!(
            "a_{j}: tower top in Maslov degree {} instead of {}",
            x.grw(),
            -j_ * j_ - j_
        )));
    }
    Ok(x)
}

/// Product in `𝒜ₙ`. Fails only if the grading bookkeeping produces a negative `𝐔`-power.
pub fn mul(x: &TowerBasisElt, y: &TowerBasisElt) -> Result<TowerBasisElt> {
    if x.n() != y.n() {
        return Err(Error::invalid("factors from different strand counts"));
    }
    let s2: Vec<i64> = x.s2.iter().zip(&y.s2).map(|(a, b)| a + b).collect();
    let m = x.m + y.m;
    let n = x.n() as i64;
    let delta = x.h() + y.h() - h_torus(n, m, &s2)?;
    if delta < 0 {
        return Err(Error::Internal(format!("product {x}·{y} needs 𝐔^{delta}")));
    }
    Ok(TowerBasisElt {
        m,
        s2,
        k: x.k + y.k + delta,
    })
}

/// A letter of a word in the generators of `𝒜ₙ` over `F[U, V]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    /// `a_j`, 0-based.
    A(usize),
    /// `U_i`, 1-based.
    U(usize),
    /// `V_i`, 1-based.
    V(usize),
    /// The central `𝐔 = U_i V_i`.
    BoldU,
}

impl Letter {
    pub fn element(self, n: usize) -> Result<TowerBasisElt> {
        let unit_vec = |i: usize, sign: i64| -> Result<Vec<i64>> {
            if i == 0 || i > n {
                return Err(Error::invalid(format!("variable index {i} outside 1..={n}")));
            }
            let mut v = vec![0; n];
            v[i - 1] = 2 * sign;
            Ok(v)
        };
        match self {
            Letter::A(j) => gen_a(n, j),
            Letter::U(i) => Ok(TowerBasisElt { m: 0, s2: unit_vec(i, -1)?, k: 0 }),
            Letter::V(i) => Ok(TowerBasisElt { m: 0, s2: unit_vec(i, 1)?, k: 0 }),
            Letter::BoldU => Ok(TowerBasisElt { m: 0, s2: vec![0; n], k: 1 }),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::A(j) => write!(f, "a{j}"),
            Letter::U(i) => write!(f, "U{i}"),
            Letter::V(i) => write!(f, "V{i}"),
            Letter::BoldU => f.write_str("U"),
        }
    }
}

/// A word such as `a0 a1^2 U1 V2 U`; `U` without an index is the central `𝐔`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word(pub Vec<Letter>);

impl FromStr for Word {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == '*' || c == '·') {
            let pos = token.as_ptr() as usize - text.as_ptr() as usize;
            if token.is_empty() {
                continue;
            }
            let syntax = |msg: &str| Error::Syntax { pos, msg: format!("{msg} in '{token}'") };
            let (base, power) = match token.split_once('^') {
                Some((b, p)) => (b, p.parse::<usize>().map_err(|_| syntax("bad power"))?),
                None => (token, 1),
            };
            let mut chars = base.chars();
            let head = chars.next().ok_or_else(|| syntax("empty letter"))?;
            let rest = chars.as_str();
            let index = || rest.parse::<usize>().map_err(|_| syntax("bad index"));
            let letter = match head {
                'a' => Letter::A(index()?),
                'U' | '𝐔' if rest.is_empty() => Letter::BoldU,
                'U' => Letter::U(index()?),
                'V' => Letter::V(index()?),
                _ => return Err(syntax("unknown letter")),
            };
            letters.extend(std::iter::repeat_n(letter, power));
        }
        Ok(Word(letters))
    }
}

/// The basis element represented by a monomial word.
pub fn word_to_basis(n: usize, word: &Word) -> Result<TowerBasisElt> {
    word.0.iter().try_fold(TowerBasisElt::unit(n), |acc, l| {
        mul(&acc, &l.element(n)?)
    })
}

/// Result of checking one defining relation in the tower model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RelationCheck {
    Holds { lhs: TowerBasisElt },
    Fails { lhs: TowerBasisElt, rhs: TowerBasisElt },
    NotApplicable { reason: String },
}

impl RelationCheck {
    fn compare(lhs: TowerBasisElt, rhs: TowerBasisElt) -> Self {
        if lhs == rhs {
            RelationCheck::Holds { lhs }
        } else {
            RelationCheck::Fails { lhs, rhs }
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, RelationCheck::Holds { .. })
    }
}

/// `U_I a_{k-1} = V_Ī a_k` with `k = |I|`; `subset` is 1-based.
pub fn verify_linear(n: usize, subset: &[usize]) -> Result<RelationCheck> {
    let k = subset.len();
    if k == 0 || k >= n {
        return Ok(RelationCheck::NotApplicable {
            reason: format!("linear relations need 1 ≤ |I| ≤ n-1, got |I| = {k}"),
        });
    }
    let mut lhs: Vec<Letter> = subset.iter().map(|&i| Letter::U(i)).collect();
    lhs.push(Letter::A(k - 1));
    let mut rhs: Vec<Letter> = (1..=n)
        .filter(|i| !subset.contains(i))
        .map(Letter::V)
        .collect();
    rhs.push(Letter::A(k));
    Ok(RelationCheck::compare(
        word_to_basis(n, &Word(lhs))?,
        word_to_basis(n, &Word(rhs))?,
    ))
}

/// `a_i a_j = 𝐔^{kℓ - ij} a_k a_ℓ` for `i + j = k + ℓ`, `i ≤ k ≤ ℓ ≤ j`.
pub fn verify_quadratic(n: usize, i: usize, j: usize, k: usize, l: usize) -> Result<RelationCheck> {
    if i + j != k + l || !(i <= k && k <= l && l <= j) || j >= n {
        return Ok(RelationCheck::NotApplicable {
            reason: format!("({i},{j},{k},{l}) is not an admissible index set for n = {n}"),
        });
    }
    let lhs = Word(vec![Letter::A(i), Letter::A(j)]);
    let mut rhs = vec![Letter::A(k), Letter::A(l)];
    rhs.extend(std::iter::repeat_n(Letter::BoldU, k * l - i * j));
    Ok(RelationCheck::compare(
        word_to_basis(n, &lhs)?,
        word_to_basis(n, &Word(rhs))?,
    ))
}

/// All non-empty proper subsets of `{1..n}`, in increasing bitmask order.
pub fn linear_instances(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n) - 1)
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// All admissible `(i, j, k, ℓ)` with `j < n`.
pub fn quadratic_instances(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in i..=j {
                let l = i + j - k;
                if k <= l && l <= j {
                    out.push((i, j, k, l));
                }
            }
        }
    }
    out
}

/// The monomial `a_q^{m-r} a_{q+1}^r` for `i = qm + r`, identified with `Y_i ∈ HFL(T(n, mn))`.
pub fn y_tilde_word(n: usize, m: usize, i: usize) -> Result<Word> {
    if m == 0 || i > m * (n - 1) {
        return Err(Error::invalid(format!("Y_{i} does not exist for n={n}, m={m}")));
    }
    let (q, r) = (i / m, i % m);
    let mut w = vec![Letter::A(q); m - r];
    w.extend(std::iter::repeat_n(Letter::A(q + 1), r));
    Ok(Word(w))
}

/// Summary of the exhaustive relation scan.
#[derive(Clone, Debug, Default, Serialize)]
pub struct AlgebraReport {
    pub n: usize,
    pub linear_checked: usize,
    pub linear_failed: Vec<Vec<usize>>,
    pub quadratic_checked: usize,
    pub quadratic_failed: Vec<(usize, usize, usize, usize)>,
    pub y_checked: usize,
    pub y_failed: Vec<(usize, usize)>,
}

impl AlgebraReport {
    pub fn ok(&self) -> bool {
        self.linear_failed.is_empty() && self.quadratic_failed.is_empty() && self.y_failed.is_empty()
    }
}

/// Checks every linear and quadratic relation and the `Y_i` gradings for `m ≤ max_m`.
pub fn verify_all(n: usize, max_m: usize) -> Result<AlgebraReport> {
    let mut rep = AlgebraReport {
        n,
        ..Default::default()
    };
    for subset in linear_instances(n) {
        rep.linear_checked += 1;
        if !verify_linear(n, &subset)?.holds() {
            rep.linear_failed.push(subset);
        }
    }
    for (i, j, k, l) in quadratic_instances(n) {
        rep.quadratic_checked += 1;
        if !verify_quadratic(n, i, j, k, l)?.holds() {
            rep.quadratic_failed.push((i, j, k, l));
        }
    }
    for m in 1..=max_m {
        let c2 = (m * (n - 1)) as i64;
        for i in 0..=m * (n - 1) {
            rep.y_checked += 1;
            let y = word_to_basis(n, &y_tilde_word(n, m, i)?)?;
            let (q, r) = ((i / m) as i64, (i % m) as i64);
            let want_grw = -(q + 1) * (q * m as i64 + 2 * r);
            let want_s2 = vec![c2 - 2 * i as i64; n];
            if y.s2 != want_s2 || y.grw() != want_grw || y.k != 0 {
                rep.y_failed.push((m, i));
            }
        }
    }
    Ok(rep)
}

/// Basis element `𝐔^k z(s̄)` of a colored module (or of `𝒜ₙᶜᵒˡ` for the unknot).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredBasisElt {
    pub sbar: Vec<i64>,
    pub k: i64,
}

impl ColoredBasisElt {
    pub fn unit(n: usize) -> Self {
        ColoredBasisElt {
            sbar: vec![0; n],
            k: 0,
        }
    }

    /// The unknot element corresponding to the monomial `V^β 𝖠^j`.
    pub fn from_monomial(beta: &[i64], j: i64) -> Self {
        let sbar: Vec<i64> = beta.iter().map(|b| b - j).collect();
        let min = sbar.iter().copied().min().unwrap_or(0);
        ColoredBasisElt {
            k: j - h0(min),
            sbar,
        }
    }

    /// For the unknot: `(β, j)` with this element equal to `V^β 𝖠^j`.
    pub fn to_monomial(&self) -> (Vec<i64>, i64) {
        let min = self.sbar.iter().copied().min().unwrap_or(0);
        let j = h0(min) + self.k;
        (self.sbar.iter().map(|s| s + j).collect(), j)
    }
}

impl fmt::Display for ColoredBasisElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(s̄={:?}, k={})", self.sbar, self.k)
    }
}

/// Generators of `𝒜ₙᶜᵒˡ` acting on a colored module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoredOp {
    U(usize),
    V(usize),
    A,
    BoldU,
}

/// `ℋₙ(K)` for an L-space knot, one `F[𝐔]`-tower per normalized Alexander degree.
#[derive(Clone, Debug)]
pub struct ColoredModule {
    knot: HKnot,
    n: usize,
}

impl ColoredModule {
    pub fn new(knot: HKnot, n: usize) -> Self {
        assert!(n >= 1, "need at least one strand");
        ColoredModule { knot, n }
    }

    /// `𝒜ₙᶜᵒˡ` itself, i.e. the colored homology of the unknot.
    pub fn unknot(n: usize) -> Self {
        Self::new(HKnot::unknot(), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn knot(&self) -> &HKnot {
        &self.knot
    }

    pub fn h(&self, sbar: &[i64]) -> i64 {
        h_colored(&self.knot, sbar)
    }

    pub fn grw(&self, x: &ColoredBasisElt) -> i64 {
        -2 * self.h(&x.sbar) - 2 * x.k
    }

    /// The generator `z̃_{σ_i}` (1-based `i`).
    pub fn generator(&self, i: usize) -> ColoredBasisElt {
        ColoredBasisElt {
            sbar: vec![self.knot.staircase().sigma(i); self.n],
            k: 0,
        }
    }

    /// The basis element in bidegree `(s̄, d)`, if that piece is non-zero.
    pub fn element_at(&self, sbar: &[i64], d: i64) -> Option<ColoredBasisElt> {
        let excess = -2 * self.h(sbar) - d;
        (excess >= 0 && excess % 2 == 0).then(|| ColoredBasisElt {
            sbar: sbar.to_vec(),
            k: excess / 2,
        })
    }

    /// `dim ℋₙ(K, s̄)` in Maslov degree `d`: 0 or 1.
    pub fn dim(&self, sbar: &[i64], d: i64) -> usize {
        self.element_at(sbar, d).is_some() as usize
    }

    fn shifted(&self, x: &ColoredBasisElt, delta: &[i64], maslov: i64) -> Result<ColoredBasisElt> {
        let sbar: Vec<i64> = x.sbar.iter().zip(delta).map(|(a, b)| a + b).collect();
        let target = self.grw(x) + maslov;
        let excess = -2 * self.h(&sbar) - target;
        if excess < 0 || excess % 2 != 0 {
            return Err(Error::Internal(format!(
                "action lands below the tower top at s̄={sbar:?}, gr={target}"
            )));
        }
        Ok(ColoredBasisElt { sbar, k: excess / 2 })
    }

    fn unit_vec(&self, i: usize, sign: i64) -> Result<Vec<i64>> {
        if i == 0 || i > self.n {
            return Err(Error::invalid(format!("variable index {i} outside 1..={}", self.n)));
        }
        let mut v = vec![0; self.n];
        v[i - 1] = sign;
        Ok(v)
    }

    /// Action of one generator of `𝒜ₙᶜᵒˡ`, determined by its degree.
    pub fn act(&self, op: ColoredOp, x: &ColoredBasisElt) -> Result<ColoredBasisElt> {
        match op {
            ColoredOp::V(i) => self.shifted(x, &self.unit_vec(i, 1)?, 0),
            ColoredOp::U(i) => self.shifted(x, &self.unit_vec(i, -1)?, -2),
            ColoredOp::A => self.shifted(x, &vec![-1; self.n], -2),
            ColoredOp::BoldU => Ok(ColoredBasisElt {
                sbar: x.sbar.clone(),
                k: x.k + 1,
            }),
        }
    }

    pub fn act_word(&self, ops: &[ColoredOp], x: &ColoredBasisElt) -> Result<ColoredBasisElt> {
        ops.iter().try_fold(x.clone(), |acc, &op| self.act(op, &acc))
    }

    /// Action of an element of `𝒜ₙᶜᵒˡ` (a basis element of the unknot module).
    pub fn act_algebra(&self, a: &ColoredBasisElt, x: &ColoredBasisElt) -> Result<ColoredBasisElt> {
        let unknot = ColoredModule::unknot(self.n);
        self.shifted(x, &a.sbar, unknot.grw(a))
    }
}

/// The colimit class of a cable tower element `x ∈ HFL(K_{n,mn})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Localized {
    pub elt: ColoredBasisElt,
    pub lspace_verified: bool,
}

/// Sends `x` (read as an element of `HFL(K_{n,mn})`) to `ℋₙ(K)`, i.e. `x / a₀^m`.
pub fn localize(x: &TowerBasisElt, hk: &HKnot) -> Result<Localized> {
    let n = x.n() as i64;
    let c2 = x.m * (n - 1);
    let sbar: Vec<i64> = x.s2.iter().map(|s| (s - c2) / 2).collect();
    let stab = h_stab(hk, n, x.m, &sbar)?;
    let k = x.k + stab.value - h_colored(hk, &sbar);
    if k < 0 {
        return Err(Error::Internal(format!("localization of {x} needs 𝐔^{k}")));
    }
    Ok(Localized {
        elt: ColoredBasisElt { sbar, k },
        lspace_verified: stab.lspace_verified,
    })
}

/// Action of `y ∈ 𝒜ₙ` on a tower element `x` of `Cabₙ(K)`.
///
/// Returns an error when the degrees force a negative `𝐔`-power, which means the
/// action cannot be injective there (outside the L-space regime).
pub fn cable_act(hk: &HKnot, y: &TowerBasisElt, x: &TowerBasisElt) -> Result<TowerBasisElt> {
    if x.n() != y.n() {
        return Err(Error::invalid("elements from different strand counts"));
    }
    let n = x.n() as i64;
    let s2: Vec<i64> = x.s2.iter().zip(&y.s2).map(|(a, b)| a + b).collect();
    let m = x.m + y.m;
    let delta = h_cable(hk, n, x.m, &x.s2)?.value + y.h() - h_cable(hk, n, m, &s2)?.value;
    if delta < 0 {
        return Err(Error::Internal(format!("{y} acting on {x} needs 𝐔^{delta}")));
    }
    Ok(TowerBasisElt {
        m,
        s2,
        k: x.k + y.k + delta,
    })
}
