//! Staircases of L-space knots and the h-functions of knots, torus links and cables.
//!
//! Alexander vectors of links are passed doubled (`s2[i] = 2 s_i`), because
//! the lattice of `T(n, mn)` is `Z^n + c·1` with `c = m(n-1)/2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{chi_series, validate_knot_delta, LaurentPoly};

/// The exponent set `S` of `χ_K = Δ_K / (1 - t⁻¹)` for an L-space knot.
///
/// Elements above `-g` are stored explicitly; below that `S` contains every integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Staircase {
    genus: i64,
    head: Vec<i64>,
}

impl Staircase {
    /// Builds a staircase from its genus and the elements of `S` greater than `-genus`.
    pub fn new(genus: i64, head: Vec<i64>) -> Result<Self> {
        if genus < 0 {
            return Err(Error::NotLSpace(format!("negative genus {genus}")));
        }
        if head.len() as i64 != genus {
            return Err(Error::NotLSpace(format!(
                "{} staircase elements above -g, expected g = {genus}",
                head.len()
            )));
        }
        if genus > 0 && head[0] != genus {
            return Err(Error::NotLSpace(format!("σ₁ = {} ≠ g = {genus}", head[0])));
        }
        if head.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotLSpace("staircase head not strictly decreasing".into()));
        }
        if head.iter().any(|&s| s <= -genus) {
            return Err(Error::NotLSpace("staircase head reaches into the tail".into()));
        }
        let st = Staircase { genus, head };
        let hk = HKnot::new(st.clone());
        for s in -(genus + 1)..=genus + 1 {
            if hk.h(-s) != hk.h(s) + s {
                return Err(Error::NotLSpace(format!("h(-s) ≠ h(s) + s at s = {s}")));
            }
        }
        Ok(st)
    }

    /// Reads the staircase off `χ_K`, checking that its coefficients are 0 or 1.
    pub fn from_delta(delta: &LaurentPoly) -> Result<Self> {
        validate_knot_delta(delta)?;
        let genus = delta.max_exp2().unwrap_or(0) / 2;
        let safety = 4;
        let chi = chi_series(delta, -2 * (genus + safety))?;
        let mut head = Vec::new();
        for s in (-(genus + safety)..=genus).rev() {
            let c = chi.coeff(2 * s).expect("within floor");
            match c {
                0 if s <= -genus => {
                    return Err(Error::NotLSpace(format!("χ vanishes at t^{s} inside the tail")))
                }
                0 => {}
                1 if s > -genus => head.push(s),
                1 => {}
                _ => {
                    return Err(Error::NotLSpace(format!("χ has coefficient {c} at t^{s}")))
                }
            }
        }
        Staircase::new(genus, head)
    }

    pub fn unknot() -> Self {
        Staircase {
            genus: 0,
            head: Vec::new(),
        }
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    /// `σ_i` for `i ≥ 1`.
    pub fn sigma(&self, i: usize) -> i64 {
        assert!(i >= 1, "staircase elements are indexed from 1");
        if i <= self.head.len() {
            self.head[i - 1]
        } else {
            1 - i as i64
        }
    }

    /// The first `count` elements `σ₁ > σ₂ > …`.
    pub fn elements(&self, count: usize) -> Vec<i64> {
        (1..=count).map(|i| self.sigma(i)).collect()
    }

    pub fn contains(&self, s: i64) -> bool {
        s <= -self.genus || self.head.contains(&s)
    }

    /// Index `i` with `σ_i = s`, if `s ∈ S`.
    pub fn index_of(&self, s: i64) -> Option<usize> {
        if s <= -self.genus {
            Some((1 - s) as usize)
        } else {
            self.head.iter().position(|&x| x == s).map(|p| p + 1)
        }
    }
}

/// The h-function of an L-space knot, `h(s) = |{σ ∈ S : σ > s}|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HKnot {
    staircase: Staircase,
    // h(s) for s in [-g, g]
    table: Vec<i64>,
    threshold: i64,
}

impl HKnot {
    pub fn new(staircase: Staircase) -> Self {
        let g = staircase.genus;
        let table = (-g..=g)
            .map(|s| {
                let head = staircase.head.iter().filter(|&&x| x > s).count() as i64;
                head + (-g - s).max(0)
            })
            .collect();
        let threshold = if g == 0 { 0 } else { (2 * g - 1).max(1) };
        HKnot {
            staircase,
            table,
            threshold,
        }
    }

    pub fn from_delta(delta: &LaurentPoly) -> Result<Self> {
        Ok(Self::new(Staircase::from_delta(delta)?))
    }

    pub fn unknot() -> Self {
        Self::new(Staircase::unknot())
    }

    /// Overrides the slope from which cables are trusted to be L-space links.
    pub fn with_threshold(mut self, m: i64) -> Self {
        self.threshold = m;
        self
    }

    pub fn staircase(&self) -> &Staircase {
        &self.staircase
    }

    pub fn genus(&self) -> i64 {
        self.staircase.genus
    }

    pub fn lspace_threshold(&self) -> i64 {
        self.threshold
    }

    pub fn h(&self, s: i64) -> i64 {
        let g = self.staircase.genus;
        if s >= g {
            0
        } else if s <= -g {
            -s
        } else {
            self.table[(s + g) as usize]
        }
    }
}

/// `max(0, -x)`: the h-function of the unknot.
pub fn h0(x: i64) -> i64 {
    (-x).max(0)
}

fn check_lattice(n: i64, m: i64, s2: &[i64]) -> Result<()> {
    if n < 1 || m < 0 {
        return Err(Error::invalid(format!("need n ≥ 1, m ≥ 0; got n={n}, m={m}")));
    }
    if s2.len() as i64 != n {
        return Err(Error::invalid(format!(
            "Alexander vector has {} entries, expected {n}",
            s2.len()
        )));
    }
    let c2 = m * (n - 1);
    if s2.iter().any(|&x| (x - c2).rem_euclid(2) != 0) {
        return Err(Error::OffLattice(s2.to_vec()));
    }
    Ok(())
}

/// Sum over sorted coordinates of `h(s_(i) - c + (i-1) m)`, given doubled `s2`.
fn sorted_sum(n: i64, m: i64, s2: &[i64], h: impl Fn(i64) -> i64) -> i64 {
    let c2 = m * (n - 1);
    let mut sorted = s2.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| h((x - c2) / 2 + i as i64 * m))
        .sum()
}

/// h-function of the torus link `T(n, mn)` at doubled Alexander vector `s2`.
pub fn h_torus(n: i64, m: i64, s2: &[i64]) -> Result<i64> {
    check_lattice(n, m, s2)?;
    Ok(sorted_sum(n, m, s2, h0))
}

/// An h-value of a cable together with whether `m` is in the trusted L-space range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CableH {
    pub value: i64,
    pub lspace_verified: bool,
}

/// h-function of the cable `K_{n,mn}` at doubled Alexander vector `s2`.
pub fn h_cable(hk: &HKnot, n: i64, m: i64, s2: &[i64]) -> Result<CableH> {
    check_lattice(n, m, s2)?;
    Ok(CableH {
        value: sorted_sum(n, m, s2, |x| hk.h(x)),
        lspace_verified: m >= hk.lspace_threshold(),
    })
}

/// h-function of `K_{n,mn}` in the normalized Alexander grading `s̄ = s - c_m·1`.
pub fn h_stab(hk: &HKnot, n: i64, m: i64, sbar: &[i64]) -> Result<CableH> {
    let c2 = m * (n - 1);
    let s2: Vec<i64> = sbar.iter().map(|&x| 2 * x + c2).collect();
    h_cable(hk, n, m, &s2)
}

/// h-function of the colored homology: `h_K(min s̄)`.
pub fn h_colored(hk: &HKnot, sbar: &[i64]) -> i64 {
    hk.h(sbar.iter().copied().min().expect("non-empty Alexander vector"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t34() -> HKnot {
        HKnot::from_delta(&"t^3 - t^2 + 1 - t^-2 + t^-3".parse().unwrap()).unwrap()
    }

    fn t23() -> HKnot {
        HKnot::from_delta(&"t - 1 + t^-1".parse().unwrap()).unwrap()
    }

    #[test]
    fn t34_staircase_and_table() {
        let k = t34();
        assert_eq!(k.genus(), 3);
        assert_eq!(k.staircase().head(), &[3, 0, -1]);
        assert_eq!(k.staircase().elements(6), vec![3, 0, -1, -3, -4, -5]);
        let row: Vec<i64> = (-5..=5).map(|s| k.h(s)).collect();
        assert_eq!(row, vec![5, 4, 3, 3, 2, 1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn unknot_and_trefoil() {
        let u = HKnot::from_delta(&LaurentPoly::one()).unwrap();
        assert_eq!(u.genus(), 0);
        assert!(u.staircase().head().is_empty());
        for s in -6..6 {
            assert_eq!(u.h(s), h0(s));
        }
        let t = t23();
        assert_eq!(t.staircase().elements(3), vec![1, -1, -2]);
        assert_eq!(t.h(0), 1);
        assert_eq!(t.h(-2), 2);
    }

    #[test]
    fn staircase_rejections() {
        assert!(Staircase::new(2, vec![2]).is_err());
        assert!(Staircase::new(2, vec![1, 0]).is_err());
        // count is right but h(-s) = h(s) + s fails
        assert!(Staircase::new(3, vec![3, 2, -2]).is_err());
        assert!(Staircase::new(3, vec![3, 0, -1]).is_ok());
        let fig8: LaurentPoly = "-t + 3 - t^-1".parse().unwrap();
        assert!(matches!(Staircase::from_delta(&fig8), Err(Error::NotLSpace(_))));
    }

    #[test]
    fn index_of_matches_sigma() {
        let st = t34().staircase().clone();
        for i in 1..12 {
            assert_eq!(st.index_of(st.sigma(i)), Some(i));
        }
        assert_eq!(st.index_of(1), None);
        assert!(!st.contains(-2));
    }

    #[test]
    fn torus_examples() {
        // diagonal (c - i)·1 gives (q+1)(qm+2r)/2
        for (n, m) in [(2, 3), (3, 2), (4, 3)] {
            let c2 = m * (n - 1);
            for i in 0..=m * (n - 1) {
                let (q, r) = (i / m, i % m);
                let s2 = vec![c2 - 2 * i; n as usize];
                assert_eq!(h_torus(n, m, &s2).unwrap(), (q + 1) * (q * m + 2 * r) / 2);
            }
        }
        assert_eq!(h_torus(2, 3, &[-3, 5]).unwrap(), 3);
        assert_eq!(h_torus(3, 2, &[4, 6, 10]).unwrap(), 0);
        assert!(matches!(h_torus(2, 3, &[0, 5]), Err(Error::OffLattice(_))));
        assert!(h_torus(2, 3, &[3]).is_err());
    }

    #[test]
    fn cable_examples_from_t34() {
        let k = t34();
        assert_eq!(h_stab(&k, 2, 6, &[3, 3]).unwrap().value, 0);
        assert_eq!(h_stab(&k, 2, 6, &[-5, -5]).unwrap().value, 6);
        assert_eq!(h_stab(&k, 2, 7, &[-5, -5]).unwrap().value, 6);
        assert_eq!(h_stab(&k, 2, 8, &[-5, -5]).unwrap().value, 5);
        assert_eq!(h_stab(&k, 2, 7, &[-4, -4]).unwrap().value, 4);
        assert_eq!(h_stab(&k, 2, 7, &[-4, -5]).unwrap().value, 5);
        assert_eq!(h_colored(&k, &[-1, 4]), 2);
    }

    #[test]
    fn regime_flag() {
        let k = t34();
        assert_eq!(k.lspace_threshold(), 5);
        assert!(!h_stab(&k, 2, 4, &[0, 0]).unwrap().lspace_verified);
        assert!(h_stab(&k, 2, 5, &[0, 0]).unwrap().lspace_verified);
        let k = k.with_threshold(9);
        assert!(!h_stab(&k, 2, 8, &[0, 0]).unwrap().lspace_verified);
        assert_eq!(HKnot::unknot().lspace_threshold(), 0);
    }

    #[test]
    fn trefoil_three_strand_cable() {
        // brute force from χ: count exponents with coefficient 1 above the argument
        let chi = chi_series(&"t - 1 + t^-1".parse().unwrap(), -40).unwrap();
        let brute = |x: i64| {
            ((x + 1)..=2)
                .filter(|&e| chi.coeff(2 * e) == Some(1))
                .count() as i64
        };
        let want = brute(-1) + brute(4) + brute(2 + 8);
        assert_eq!(want, 1);
        assert_eq!(h_stab(&t23(), 3, 4, &[-1, 0, 2]).unwrap().value, want);
    }

    #[test]
    fn colored_agrees_with_stab_in_stable_region() {
        for k in [t34(), t23(), HKnot::unknot()] {
            let g = k.genus();
            let m = 2 * g + 6;
            for a in (g - m + 1)..=g {
                for b in (g - m + 1)..=g {
                    assert_eq!(h_colored(&k, &[a, b]), h_stab(&k, 2, m, &[a, b]).unwrap().value);
                }
            }
        }
    }
}
