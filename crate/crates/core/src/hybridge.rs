//! Integer polynomials in several commuting variables, used to check that the
//! specialization `y_i ↦ V_i`, `u_k ↦ (-1)^k e_{n-1-k}(V) 𝖠` sends
//! `x_i = u_0 + u_1 y_i + … + u_{n-1} y_i^{n-1}` to `𝖠 ∏_{j≠i} V_j`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Polynomial with `i64` coefficients in `nvars` variables; no zero terms stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(nvars);
        if c != 0 {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of {nvars}");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, 1);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, e: Vec<u32>, c: i64) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if c != 0 {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.nvars, 1), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut p = Self::zero(self.nvars);
        if c != 0 {
            p.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        }
        p
    }

    /// The ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::invalid(format!("{} images for {} variables", images.len(), self.nvars)));
        }
        let target = images.first().map_or(0, |p| p.nvars);
        if images.iter().any(|p| p.nvars != target) {
            return Err(Error::invalid("images live in different rings"));
        }
        let mut out = MultiPoly::zero(target);
        for (e, &c) in &self.terms {
            let mono = e
                .iter()
                .zip(images)
                .fold(MultiPoly::constant(target, c), |acc, (&k, img)| &acc * &img.pow(k));
            out = &out + &mono;
        }
        Ok(out)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(-1)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (a, &x) in &self.terms {
            for (b, &y) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *acc.entry(e).or_insert(0) += x * y;
            }
        }
        acc.retain(|_, v| *v != 0);
        MultiPoly {
            nvars: self.nvars,
            terms: acc,
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, &c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if idx > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                .collect();
            match (c.abs(), mono.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", mono.join("*"))?,
                (a, false) => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `e_m` of the variables `vars` (indices into a ring with `nvars` variables).
pub fn elementary_symmetric(nvars: usize, vars: &[usize], m: usize) -> MultiPoly {
    // e_m of x_1..x_k via the recursion e_m(x_1..x_k) = e_m(x_1..x_{k-1}) + x_k e_{m-1}(x_1..x_{k-1})
    let mut e = vec![MultiPoly::zero(nvars); m + 1];
    e[0] = MultiPoly::constant(nvars, 1);
    for &v in vars {
        let x = MultiPoly::var(nvars, v);
        for d in (1..=m).rev() {
            e[d] = &e[d] + &(&x * &e[d - 1]);
        }
    }
    e.swap_remove(m)
}

/// Variables `V_1..V_n` are `0..n`, `𝖠` is `n`.
fn colored_ring(n: usize) -> usize {
    n + 1
}

/// Whether the specialization of every `x_i` equals `𝖠 ∏_{j≠i} V_j`.
pub fn verify_hy(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::invalid("need at least one strand"));
    }
    let target = colored_ring(n);
    let vs: Vec<usize> = (0..n).collect();
    let a = MultiPoly::var(target, n);
    // source ring: u_0..u_{n-1}, then y_1..y_n
    let source = 2 * n;
    let mut images = Vec::with_capacity(source);
    for k in 0..n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        images.push(&elementary_symmetric(target, &vs, n - 1 - k).scale(sign) * &a);
    }
    for i in 0..n {
        images.push(MultiPoly::var(target, i));
    }
    for i in 0..n {
        let y = MultiPoly::var(source, n + i);
        let x = (0..n).fold(MultiPoly::zero(source), |acc, k| {
            &acc + &(&MultiPoly::var(source, k) * &y.pow(k as u32))
        });
        let image = x.substitute(&images)?;
        let expected = (0..n)
            .filter(|&j| j != i)
            .fold(a.clone(), |acc, j| &acc * &MultiPoly::var(target, j));
        if image != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `e_m = ê_m + V_i ê_{m-1}` for `m ≤ n`, where `ê` omits `V_i` (1-based),
/// and the alternating sum `Σ_k (-1)^k V_i^k e_{n-1-k} = ê_{n-1}`.
pub fn telescope_check(n: usize, i: usize) -> Result<bool> {
    if i == 0 || i > n {
        return Err(Error::invalid(format!("index {i} outside 1..={n}")));
    }
    let all: Vec<usize> = (0..n).collect();
    let rest: Vec<usize> = (0..n).filter(|&j| j != i - 1).collect();
    let vi = MultiPoly::var(n, i - 1);
    let hat = |m: i64| {
        if m < 0 {
            MultiPoly::zero(n)
        } else {
            elementary_symmetric(n, &rest, m as usize)
        }
    };
    for m in 0..=n {
        let e = elementary_symmetric(n, &all, m);
        if e != &hat(m as i64) + &(&vi * &hat(m as i64 - 1)) {
            return Ok(false);
        }
    }
    let alt = (0..n).fold(MultiPoly::zero(n), |acc, k| {
        let term = &vi.pow(k as u32) * &elementary_symmetric(n, &all, n - 1 - k);
        if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        }
    });
    Ok(alt == hat(n as i64 - 1))
}
