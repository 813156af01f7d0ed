//! Degree shifts of the cobordism maps between cables: the full-twist maps `φ_k`,
//! the crossing-change maps `G_j`, `F_j` and their colored versions, and `Ψ_Z`.
//!
//! These are pure calculators. Alexander shifts are doubled, like everywhere else.

use std::ops::Add;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingShift {
    pub grw: i64,
    pub alexander2: Vec<i64>,
    pub twist: i64,
}

impl Add for &GradingShift {
    type Output = GradingShift;
    fn add(self, rhs: &GradingShift) -> GradingShift {
        assert_eq!(self.alexander2.len(), rhs.alexander2.len(), "shifts of different arity");
        GradingShift {
            grw: self.grw + rhs.grw,
            alexander2: self.alexander2.iter().zip(&rhs.alexander2).map(|(a, b)| a + b).collect(),
            twist: self.twist + rhs.twist,
        }
    }
}

impl GradingShift {
    /// The same map read in normalized Alexander grading `s̄ = s - c_m·𝟙`: the
    /// source is at twist `m`, the target at `m + twist`.
    pub fn colored(&self) -> GradingShift {
        let n = self.alexander2.len() as i64;
        GradingShift {
            grw: self.grw,
            alexander2: self.alexander2.iter().map(|a| a - self.twist * (n - 1)).collect(),
            twist: self.twist,
        }
    }
}

/// `φ_k`: one full twist, Spin^c structure `k`.
pub fn phi_shift(n: usize, k: usize) -> Result<GradingShift> {
    if k >= n {
        return Err(Error::invalid(format!("φ_{k} does not exist for n = {n}")));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(GradingShift {
        grw: -k * k - k,
        alexander2: vec![n - 1 - 2 * k; n as usize],
        twist: 1,
    })
}

/// Blow-down of an unknot `M` with linking numbers `lk_i = lk(L_i, M)` and
/// `lk_total = lk(L, M)`, in Spin^c structure `k`, adding `twist` full twists.
pub fn phi_shift_general(lk_total: i64, lk: &[i64], k: i64, twist: i64) -> GradingShift {
    GradingShift {
        grw: -k * k - k,
        alexander2: lk.iter().map(|&l| (-2 * k - 1 + lk_total) * l).collect(),
        twist,
    }
}

/// Crossing-change maps between `K⁻` and `K⁺` cables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingShifts {
    pub g: GradingShift,
    pub f: GradingShift,
    pub g_col: GradingShift,
    pub f_col: GradingShift,
}

/// `G_j` (twist `+4`, every strand links the blown-down circle twice) and `F_j`
/// (twist `-2`, Alexander degree 0), with their colored versions.
pub fn crossing_shifts(n: usize, j: i64) -> Result<CrossingShifts> {
    if n == 0 || j < 0 {
        return Err(Error::invalid(format!("no crossing maps for n={n}, j={j}")));
    }
    let nn = n as i64;
    let g = phi_shift_general(2 * nn, &vec![2; n], j, 4);
    let f = GradingShift {
        grw: -j * j - j,
        alexander2: vec![0; n],
        twist: -2,
    };
    let out = CrossingShifts {
        g_col: g.colored(),
        f_col: f.colored(),
        g,
        f,
    };
    // c_m - c_{m+t} must not depend on m, otherwise the colored shift is not defined
    for shift in [&out.g, &out.f] {
        let c2 = |m: i64| m * (nn - 1);
        let base = c2(0) - c2(shift.twist);
        if (1..8).any(|m| c2(m) - c2(m + shift.twist) != base) {
            return Err(Error::Internal("renormalization is not affine in m".into()));
        }
    }
    if out.g_col.alexander2.iter().any(|&a| a != -4 * j + 2) || out.f_col.alexander2.iter().any(|&a| a != 2 * (nn - 1)) {
        return Err(Error::Internal(format!("colored crossing shifts disagree for n={n}, j={j}")));
    }
    Ok(out)
}

/// `Ψ_Z` for `Z ⊂ {1..n}²` (1-based pairs): Maslov degree 0, twist `-2`,
/// Alexander degree `½(Σ_{Z}(e_i - e_j) - Σ_{∉Z}(e_i - e_j))`.
pub fn psi_shift(n: usize, z: &[(usize, usize)]) -> Result<GradingShift> {
    if let Some(bad) = z.iter().find(|&&(i, j)| i == 0 || j == 0 || i > n || j > n) {
        return Err(Error::invalid(format!("pair {bad:?} outside 1..={n}")));
    }
    let mut a2 = vec![0i64; n];
    for i in 1..=n {
        for j in 1..=n {
            let sign = if z.contains(&(i, j)) { 1 } else { -1 };
            a2[i - 1] += sign;
            a2[j - 1] -= sign;
        }
    }
    Ok(GradingShift {
        grw: 0,
        alexander2: a2,
        twist: -2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(phi_shift(2, 0).unwrap(), GradingShift { grw: 0, alexander2: vec![1, 1], twist: 1 });
        assert_eq!(phi_shift(4, 3).unwrap(), GradingShift { grw: -12, alexander2: vec![-3; 4], twist: 1 });
        assert!(phi_shift(3, 3).is_err());
    }

    #[test]
    fn general_specializes() {
        for n in 1..=6usize {
            for k in 0..n {
                let g = phi_shift_general(n as i64, &vec![1; n], k as i64, 1);
                assert_eq!(g, phi_shift(n, k).unwrap());
            }
        }
        let zero = phi_shift_general(3, &[0, 0, 0], 2, 0);
        assert_eq!(zero.alexander2, vec![0, 0, 0]);
    }

    #[test]
    fn crossing_values() {
        let c = crossing_shifts(2, 1).unwrap();
        assert_eq!(c.g.alexander2, vec![2; 2]);
        assert_eq!(c.g_col.alexander2, vec![-2; 2]);
        assert_eq!(c.f_col.alexander2, vec![2; 2]);
        assert_eq!(c.g.grw, -2);
        let c = crossing_shifts(1, 0).unwrap();
        assert_eq!((c.g_col.alexander2.clone(), c.f_col.alexander2.clone()), (vec![2], vec![0]));
    }

    #[test]
    fn psi_values() {
        let all: Vec<_> = (1..=3).flat_map(|i| (1..=3).map(move |j| (i, j))).collect();
        assert_eq!(psi_shift(3, &all).unwrap().alexander2, vec![0; 3]);
        assert_eq!(psi_shift(3, &[]).unwrap().alexander2, vec![0; 3]);
        assert_eq!(psi_shift(2, &[(1, 2)]).unwrap().alexander2, vec![2, -2]);
        assert!(psi_shift(2, &[(0, 1)]).is_err());
    }
}
