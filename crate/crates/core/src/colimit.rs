//! Colimits of directed systems of finite-dimensional GF(2) vector spaces,
//! computed degree by degree from a finite truncation.
//!
//! A truncation `V_{i₀} → … → V_M` only bounds the colimit. The engine reports
//! the image rank `r_i = rank(V_i → V_M)` and calls the result stabilized when
//! `r_i` and `dim V_i` are constant over a trailing window.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2;
use crate::hfunc::{h_colored, h_stab, HKnot};

/// Dense GF(2) matrix, `rows × cols`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![false; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid("ragged matrix rows"));
        }
        Ok(Gf2Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| x & 1 == 1).collect(),
        })
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.data[r * self.cols + c] = v;
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::invalid(format!(
                "cannot compose {:?} after {:?}",
                self.shape(),
                rhs.shape()
            )));
        }
        let mut out = Gf2Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for j in 0..rhs.cols {
                        if rhs.get(k, j) {
                            let v = out.get(i, j);
                            out.set(i, j, !v);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<usize>> = (0..self.rows)
            .map(|r| (0..self.cols).filter(|&c| self.get(r, c)).collect())
            .collect();
        gf2::rank(&rows, self.cols)
    }
}

/// `V_{i₀} → V_{i₀+1} → … → V_M` in one degree; `maps[k]` goes from `V_{i₀+k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedSystem {
    start: i64,
    dims: Vec<usize>,
    maps: Vec<Gf2Matrix>,
}

impl DirectedSystem {
    pub fn new(start: i64, dims: Vec<usize>, maps: Vec<Gf2Matrix>) -> Result<Self> {
        if dims.is_empty() || maps.len() + 1 != dims.len() {
            return Err(Error::invalid("a directed system needs one map per step"));
        }
        for (k, f) in maps.iter().enumerate() {
            if f.shape() != (dims[k + 1], dims[k]) {
                return Err(Error::invalid(format!(
                    "map {k} has shape {:?}, expected {:?}",
                    f.shape(),
                    (dims[k + 1], dims[k])
                )));
            }
        }
        Ok(DirectedSystem { start, dims, maps })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.dims.len() as i64 - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, i: i64) -> Option<&Gf2Matrix> {
        usize::try_from(i - self.start).ok().and_then(|k| self.maps.get(k))
    }

    pub fn dim(&self, i: i64) -> Option<usize> {
        usize::try_from(i - self.start).ok().and_then(|k| self.dims.get(k).copied())
    }

    /// `r_i` for every index, i.e. ranks of the composites into the last space.
    pub fn image_ranks(&self) -> Vec<usize> {
        let last = self.dims.len() - 1;
        let mut ranks = vec![0; self.dims.len()];
        let mut composite = Gf2Matrix::identity(self.dims[last]);
        ranks[last] = self.dims[last];
        for k in (0..last).rev() {
            composite = composite
                .compose(&self.maps[k])
                .expect("shapes checked on construction");
            ranks[k] = composite.rank();
        }
        ranks
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColimitDim {
    pub dim: usize,
    pub stabilized: bool,
    /// First index from which every map into the last space is an isomorphism onto it.
    pub first_stable: Option<i64>,
}

/// Colimit dimension of a truncated system with a stabilization certificate over
/// the last `window` steps.
pub fn colimit_dim(sys: &DirectedSystem, window: usize) -> Result<ColimitDim> {
    let len = sys.dims.len();
    if window + 1 > len {
        return Err(Error::WindowOutOfRange(format!(
            "window of {window} steps in a system with {} steps",
            len - 1
        )));
    }
    let ranks = sys.image_ranks();
    let from = len - 1 - window;
    let dim = ranks[from];
    let stabilized = ranks[from..].iter().all(|&r| r == dim) && sys.dims[from..].iter().all(|&d| d == dim);
    let mut first_stable = None;
    for k in (0..len).rev() {
        if ranks[k] == dim && sys.dims[k] == dim {
            first_stable = Some(sys.start + k as i64);
        } else {
            break;
        }
    }
    Ok(ColimitDim {
        dim,
        stabilized,
        first_stable,
    })
}

/// One degree `(s̄, d)` of the `φ₀`-system `HFL(K_{n,mn}) → HFL(K_{n,(m+1)n}) → …`
/// in the tower model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi0System {
    pub sbar: Vec<i64>,
    pub maslov: i64,
    pub system: DirectedSystem,
    /// Whether every stage lies in the trusted L-space range of the cable.
    pub lspace_verified: bool,
}

fn tower_dim(h: i64, d: i64) -> usize {
    let e = -2 * h - d;
    (e >= 0 && e % 2 == 0) as usize
}

/// The system for `m` in `m_lo..=m_hi` in normalized degree `(s̄, d)`. Each step is
/// multiplication by `a₀`, i.e. the identity on a nonzero tower element, with
/// `𝐔`-power shifting by `h_stab(m) - h_stab(m+1) ≥ 0`.
pub fn lspace_phi0_system(hk: &HKnot, sbar: &[i64], d: i64, m_lo: i64, m_hi: i64) -> Result<Phi0System> {
    if m_lo < 0 || m_hi < m_lo {
        return Err(Error::invalid(format!("bad twist range {m_lo}..{m_hi}")));
    }
    let n = sbar.len() as i64;
    let mut dims = Vec::new();
    let mut hs = Vec::new();
    let mut verified = true;
    for m in m_lo..=m_hi {
        let h = h_stab(hk, n, m, sbar)?;
        verified &= h.lspace_verified;
        hs.push(h.value);
        dims.push(tower_dim(h.value, d));
    }
    let mut maps = Vec::new();
    for k in 0..dims.len() - 1 {
        if hs[k] < hs[k + 1] {
            return Err(Error::Internal(format!(
                "h_stab increases from m={} to m={} at {sbar:?}",
                m_lo + k as i64,
                m_lo + k as i64 + 1
            )));
        }
        let mut f = Gf2Matrix::zero(dims[k + 1], dims[k]);
        if dims[k] == 1 && dims[k + 1] == 1 {
            f.set(0, 0, true);
        }
        maps.push(f);
    }
    Ok(Phi0System {
        sbar: sbar.to_vec(),
        maslov: d,
        system: DirectedSystem::new(m_lo, dims, maps)?,
        lspace_verified: verified,
    })
}

/// Colimit entry for one degree, with the colored-homology value for comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColimitEntry {
    pub sbar: Vec<i64>,
    pub maslov: i64,
    #[serde(flatten)]
    pub colimit: ColimitDim,
    pub colored_dim: usize,
    pub lspace_verified: bool,
}

/// Runs [`lspace_phi0_system`] and [`colimit_dim`] on one degree.
pub fn lspace_colimit(hk: &HKnot, sbar: &[i64], d: i64, m_lo: i64, m_hi: i64, window: usize) -> Result<ColimitEntry> {
    let sys = lspace_phi0_system(hk, sbar, d, m_lo, m_hi)?;
    Ok(ColimitEntry {
        sbar: sbar.to_vec(),
        maslov: d,
        colimit: colimit_dim(&sys.system, window)?,
        colored_dim: tower_dim(h_colored(hk, sbar), d),
        lspace_verified: sys.lspace_verified,
    })
}

/// Checks `g_{i+s} ∘ h_i = h_{i+1} ∘ f_i` wherever both sides are defined, where
/// `h[k]` maps `V_{start(V)+k}` to `W_{start(V)+k+s}`. Returns whether the maps
/// induce a map of colimits.
pub fn shifted_map_compat(v: &DirectedSystem, w: &DirectedSystem, h: &[Gf2Matrix], s: i64) -> Result<bool> {
    for (k, hk) in h.iter().enumerate() {
        let i = v.start + k as i64;
        let (Some(dv), Some(dw)) = (v.dim(i), w.dim(i + s)) else {
            return Err(Error::WindowOutOfRange(format!("h_{i} has no source or target")));
        };
        if hk.shape() != (dw, dv) {
            return Err(Error::invalid(format!("h_{i} has shape {:?}, expected {:?}", hk.shape(), (dw, dv))));
        }
    }
    for k in 0..h.len().saturating_sub(1) {
        let i = v.start + k as i64;
        let (Some(f), Some(g)) = (v.map(i), w.map(i + s)) else {
            continue;
        };
        if g.compose(&h[k])? != h[k + 1].compose(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t34() -> HKnot {
        HKnot::from_delta(&"t^3 - t^2 + 1 - t^-2 + t^-3".parse().unwrap()).unwrap()
    }

    #[test]
    fn identity_system() {
        let sys = DirectedSystem::new(0, vec![2; 5], vec![Gf2Matrix::identity(2); 4]).unwrap();
        let c = colimit_dim(&sys, 3).unwrap();
        assert_eq!(c, ColimitDim { dim: 2, stabilized: true, first_stable: Some(0) });
    }

    #[test]
    fn projection_then_identity() {
        let proj = Gf2Matrix::from_rows(&[vec![1, 0]]).unwrap();
        let sys = DirectedSystem::new(1, vec![2, 1, 1, 1], vec![proj, Gf2Matrix::identity(1), Gf2Matrix::identity(1)])
            .unwrap();
        let c = colimit_dim(&sys, 2).unwrap();
        assert_eq!((c.dim, c.stabilized, c.first_stable), (1, true, Some(2)));
        assert_eq!(sys.image_ranks(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn window_too_large() {
        let sys = DirectedSystem::new(0, vec![1, 1], vec![Gf2Matrix::identity(1)]).unwrap();
        assert!(matches!(colimit_dim(&sys, 2), Err(Error::WindowOutOfRange(_))));
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(DirectedSystem::new(0, vec![1, 2], vec![Gf2Matrix::identity(1)]).is_err());
    }

    #[test]
    fn t34_late_generator() {
        // z̃_{-4} in gr -8 appears at m = 7
        let sys = lspace_phi0_system(&t34(), &[-4, -4], -8, 6, 12).unwrap();
        assert_eq!(sys.system.dims(), &[0, 1, 1, 1, 1, 1, 1]);
        let c = colimit_dim(&sys.system, 3).unwrap();
        assert_eq!((c.dim, c.first_stable), (1, Some(7)));
        let e = lspace_colimit(&t34(), &[-5, -5], -10, 6, 12, 3).unwrap();
        assert_eq!((e.colimit.dim, e.colimit.first_stable, e.colored_dim), (1, Some(8), 1));
    }

    #[test]
    fn above_top_is_zero() {
        let e = lspace_colimit(&HKnot::unknot(), &[0, 1], 2, 1, 6, 2).unwrap();
        assert_eq!((e.colimit.dim, e.colored_dim), (0, 0));
        assert!(e.colimit.stabilized);
    }

    #[test]
    fn broken_square_detected() {
        let v = DirectedSystem::new(0, vec![1, 1, 1], vec![Gf2Matrix::identity(1); 2]).unwrap();
        let h = vec![Gf2Matrix::identity(1); 3];
        assert!(shifted_map_compat(&v, &v, &h, 0).unwrap());
        let mut bad = h.clone();
        bad[1] = Gf2Matrix::zero(1, 1);
        assert!(!shifted_map_compat(&v, &v, &bad, 0).unwrap());
    }
}
