//! Exact Laurent polynomials and truncated series on the half-integer lattice.
//!
//! Exponents are stored doubled: the key `e2` stands for `t^(e2/2)`. Knot
//! polynomials live on even keys, torus-link factors on arbitrary keys.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finitely supported integer Laurent polynomial in `t^(1/2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coef · t^(exp2/2)`.
    pub fn monomial(exp2: i64, coef: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp2, coef);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp2: i64, coef: i64) {
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(exp2).or_insert(0);
        *entry += coef;
        if *entry == 0 {
            self.terms.remove(&exp2);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp2: i64) -> i64 {
        self.terms.get(&exp2).copied().unwrap_or(0)
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_exp2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// True when every exponent is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiply by `t^(exp2/2)`.
    pub fn shift(&self, exp2: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + exp2, c)).collect(),
        }
    }

    /// Substitute `t ↦ t⁻¹`.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.mirror()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (d_max, d_lead) = match divisor.terms.iter().next_back() {
            Some((&e, &c)) => (e, c),
            None => return Err(Error::NonDivisible("division by zero".into())),
        };
        let d_min = divisor.min_exp2().unwrap_or(d_max);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let lowest = match self.min_exp2() {
            Some(e) => e - d_min,
            None => return Ok(quot),
        };
        while let Some((&r_max, &r_lead)) = rem.terms.iter().next_back() {
            let q_exp = r_max - d_max;
            if q_exp < lowest || r_lead % d_lead != 0 {
                break;
            }
            let q = LaurentPoly::monomial(q_exp, r_lead / d_lead);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonDivisible(format!("({self}) / ({divisor}) leaves ({rem})")))
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, &x) in &self.terms {
            for (&b, &y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Formats a doubled exponent as `t`, `t^k` or `t^p/2`.
fn fmt_power(exp2: i64) -> String {
    if exp2 == 2 {
        "t".to_string()
    } else if exp2 % 2 == 0 {
        format!("t^{}", exp2 / 2)
    } else {
        format!("t^{exp2}/2")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match (e, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => f.write_str(&fmt_power(e))?,
                _ => write!(f, "{mag}{}", fmt_power(e))?,
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<Option<i64>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<i64>()
            .map(Some)
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: format!("integer {text} out of range"),
            })
    }

    /// `['-'|'+'] digits ['/' digits]`, optionally parenthesised; returns the doubled value.
    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let start = self.pos;
        let num = self
            .digits()?
            .ok_or_else(|| self.err("expected exponent digits"))?;
        let exp2 = if self.eat(b'/') {
            let den = self
                .digits()?
                .ok_or_else(|| self.err("expected denominator"))?;
            match den {
                1 => 2 * num,
                2 => num,
                _ => {
                    let text = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                    return Err(Error::BadExponent(text));
                }
            }
        } else {
            2 * num
        };
        if paren && !self.eat(b')') {
            return Err(self.err("expected ')'"));
        }
        Ok(if neg { -exp2 } else { exp2 })
    }

    fn term(&mut self, sign: i64, out: &mut LaurentPoly) -> Result<()> {
        let coef = self.digits()?;
        if coef.is_some() {
            self.eat(b'*');
        }
        let exp2 = if self.eat(b't') {
            if self.eat(b'^') {
                self.exponent()?
            } else {
                2
            }
        } else if coef.is_none() {
            return Err(self.err("expected a coefficient or 't'"));
        } else {
            0
        };
        out.add_term(exp2, sign * coef.unwrap_or(1));
        Ok(())
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        if self.peek().is_none() {
            return Err(self.err("empty expression"));
        }
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            self.term(sign, &mut out)?;
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                Some(c) => return Err(self.err(format!("unexpected '{}'", c as char))),
            }
        }
        Ok(out)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

/// Parses a polynomial expression such as `t^3 - t^2 + 1 - t^-2 + t^-3`.
pub fn parse_poly(text: &str) -> Result<LaurentPoly> {
    text.parse()
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp2: i64,
    coef: i64,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            terms: self
                .terms()
                .map(|(exp2, coef)| JsonTerm { exp2, coef })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(d)?;
        Ok(LaurentPoly::from_terms(
            raw.terms.into_iter().map(|t| (t.exp2, t.coef)),
        ))
    }
}

/// A series in `t⁻¹` known exactly for exponents `≥ floor2/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: LaurentPoly,
    floor2: i64,
}

impl TruncatedSeries {
    pub fn new(poly: LaurentPoly, floor2: i64) -> Self {
        let poly = LaurentPoly::from_terms(poly.terms().filter(|&(e, _)| e >= floor2));
        Self { poly, floor2 }
    }

    pub fn floor2(&self) -> i64 {
        self.floor2
    }

    /// The coefficient of `t^(exp2/2)`, or `None` below the floor.
    pub fn coeff(&self, exp2: i64) -> Option<i64> {
        (exp2 >= self.floor2).then(|| self.poly.coeff(exp2))
    }

    /// The known part of the series as a polynomial.
    pub fn known(&self) -> &LaurentPoly {
        &self.poly
    }

    /// Multiply by a Laurent polynomial; the floor rises by the polynomial's top exponent.
    pub fn mul_poly(&self, p: &LaurentPoly) -> TruncatedSeries {
        match p.max_exp2() {
            None => TruncatedSeries::new(LaurentPoly::zero(), self.floor2),
            Some(top) => TruncatedSeries::new(&self.poly * p, self.floor2 + top),
        }
    }

    pub fn shift(&self, exp2: i64) -> TruncatedSeries {
        TruncatedSeries {
            poly: self.poly.shift(exp2),
            floor2: self.floor2 + exp2,
        }
    }

    /// Forget everything below `floor2` (which must not be below the current floor).
    pub fn truncate(&self, floor2: i64) -> TruncatedSeries {
        TruncatedSeries::new(self.poly.clone(), floor2.max(self.floor2))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(&self.poly + &rhs.poly, self.floor2.max(rhs.floor2))
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(&self.poly - &rhs.poly, self.floor2.max(rhs.floor2))
    }
}

/// Checks `Δ(1) = 1`, integer exponents and `Δ(t) = Δ(t⁻¹)`.
pub fn validate_knot_delta(delta: &LaurentPoly) -> Result<()> {
    if !delta.has_integer_exponents() {
        return Err(Error::HalfIntegerKnot);
    }
    let at_one = delta.eval_one();
    if at_one != 1 {
        return Err(Error::NotNormalized(at_one));
    }
    if !delta.is_symmetric() {
        return Err(Error::Asymmetric);
    }
    Ok(())
}

/// `Δ(t) / (1 - t⁻¹)` expanded down to `floor2`.
pub fn chi_series(delta: &LaurentPoly, floor2: i64) -> Result<TruncatedSeries> {
    validate_knot_delta(delta)?;
    let top = delta.max_exp2().unwrap_or(0);
    let mut acc = 0;
    let mut terms = Vec::new();
    // integer lattice only: step by one full power of t
    let mut e = top;
    while e >= floor2 {
        acc += delta.coeff(e);
        terms.push((e, acc));
        e -= 2;
    }
    Ok(TruncatedSeries::new(LaurentPoly::from_terms(terms), floor2))
}

/// Full L-space validation: normalization, symmetry, and 0/1 coefficients of χ
/// down to two steps past the genus.
pub fn validate_lspace_delta(delta: &LaurentPoly) -> Result<()> {
    let g = delta.max_exp2().unwrap_or(0) / 2;
    let chi = chi_series(delta, -2 * (g + 2))?;
    for (e, c) in chi.known().terms() {
        if c != 0 && c != 1 {
            return Err(Error::NotLSpace(format!(
                "χ has coefficient {c} at t^{}",
                e / 2
            )));
        }
    }
    Ok(())
}

/// `(t^(m/2) - t^(-m/2))^k`.
fn twist_factor(m: i64, k: u32) -> LaurentPoly {
    LaurentPoly::from_terms([(m, 1), (-m, -1)]).pow(k)
}

/// χ of the torus link `T(n, mn)` collapsed to the single variable `t = t₁⋯tₙ`.
///
/// `n = 1` has no polynomial answer (χ of the unknot is a series); callers
/// wanting the knot normalization should use [`chi_series`].
pub fn torus_chi(n: i64, m: i64) -> Result<LaurentPoly> {
    if n < 1 || m < 0 {
        return Err(Error::invalid(format!("torus_chi needs n ≥ 1, m ≥ 0; got n={n}, m={m}")));
    }
    if n == 1 {
        return Err(Error::invalid(
            "torus_chi(1, m) is the unknot series 1/(1 - t⁻¹); use chi_series(1)",
        ));
    }
    let numerator = twist_factor(m, (n - 1) as u32);
    let denominator = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    numerator.div_exact(&denominator)
}

/// χ of the cable `K_{n,mn}` collapsed to `t = t₁⋯tₙ`, exact down to `floor2`.
///
/// For `n = 1` every cable is `K` itself and χ_K is returned unchanged.
pub fn cable_chi(delta: &LaurentPoly, n: i64, m: i64, floor2: i64) -> Result<TruncatedSeries> {
    if n < 1 || m < 0 {
        return Err(Error::invalid(format!("cable_chi needs n ≥ 1, m ≥ 0; got n={n}, m={m}")));
    }
    if n == 1 {
        return chi_series(delta, floor2);
    }
    let factor = twist_factor(m, (n - 1) as u32);
    let top = factor.max_exp2().unwrap_or(0);
    // t^{-1/2} shifts the floor by -1 (doubled)
    let chi = chi_series(delta, floor2 + 1 - top)?;
    Ok(chi.mul_poly(&factor).shift(-1).truncate(floor2))
}

/// Outcome of comparing `t^{-c_m} χ_{K_{n,mn}}` with `t^{-1/2} χ_K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub n: i64,
    pub m: i64,
    /// Terms of doubled exponent `≤ modulus_exp2` are ignored.
    pub modulus_exp2: i64,
    /// Lowest doubled exponent that was compared.
    pub compared_down_to: i64,
    /// Highest doubled exponent where the two sides differ, if any was seen.
    pub first_disagreement: Option<i64>,
    pub holds: bool,
}

/// Compares both sides of the cable congruence down to `compare_floor2`
/// and decides the congruence modulo `t^(modulus_exp2/2) Z[[t⁻¹]]`.
pub fn chi_congruence(
    delta: &LaurentPoly,
    n: i64,
    m: i64,
    modulus_exp2: i64,
    compare_floor2: i64,
) -> Result<StabilityReport> {
    if n < 2 || m < 1 {
        return Err(Error::invalid(format!("congruence check needs n ≥ 2, m ≥ 1; got n={n}, m={m}")));
    }
    let floor2 = compare_floor2.min(modulus_exp2 + 1);
    let c2 = m * (n - 1);
    let lhs = cable_chi(delta, n, m, floor2 + c2)?.shift(-c2);
    let rhs = chi_series(delta, floor2 + 1)?.shift(-1);
    let top = lhs
        .known()
        .max_exp2()
        .into_iter()
        .chain(rhs.known().max_exp2())
        .max()
        .unwrap_or(floor2);
    let first_disagreement = (floor2..=top)
        .rev()
        .find(|&e| lhs.coeff(e) != rhs.coeff(e));
    Ok(StabilityReport {
        n,
        m,
        modulus_exp2,
        compared_down_to: floor2,
        first_disagreement,
        holds: first_disagreement.is_none_or(|e| e <= modulus_exp2),
    })
}

/// Stabilization of the collapsed cable χ.
///
/// The two sides differ by `t^{-1/2} χ_K(t) [(1 - t^{-m})^{n-1} - 1]`, whose top
/// term sits at `t^{g-m-1/2}`, so the congruence is checked modulo
/// `t^{g-m-1/2} Z[[t⁻¹]]` (for the unknot this is the modulus `t^{-m}`).
/// The comparison continues two steps below the modulus so the report also
/// shows where agreement ends.
pub fn stable_chi_check(delta: &LaurentPoly, n: i64, m: i64) -> Result<StabilityReport> {
    let g = delta.max_exp2().unwrap_or(0) / 2;
    let modulus = 2 * (g - m) - 1;
    chi_congruence(delta, n, m, modulus, modulus - 4)
}

/// Symmetrized Alexander polynomial of the torus knot `T(p, q)`, `p, q ≥ 1` coprime.
pub fn torus_knot_delta(p: i64, q: i64) -> Result<LaurentPoly> {
    if p < 1 || q < 1 || gcd(p, q) != 1 {
        return Err(Error::invalid(format!("T({p},{q}) is not a torus knot")));
    }
    let x = |k: i64| LaurentPoly::from_terms([(2 * k, 1), (0, -1)]);
    let num = &x(p * q) * &x(1);
    let den = &x(p) * &x(q);
    let raw = num.div_exact(&den)?;
    Ok(raw.shift(-(p - 1) * (q - 1)))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parse_t34() {
        let d = p("t^3 - t^2 + 1 - t^-2 + t^-3");
        let support: Vec<i64> = d.terms().map(|(e, _)| e / 2).collect();
        assert_eq!(support, vec![3, 2, 0, -2, -3]);
        assert_eq!(d.coeff(4), -1);
        assert_eq!(d.to_string(), "t^3 - t^2 + 1 - t^-2 + t^-3");
    }

    #[test]
    fn parse_constants_and_trefoil() {
        assert_eq!(p("1"), LaurentPoly::one());
        let tref = p("t - 1 + t^-1");
        assert_eq!(tref.eval_one(), 1);
        assert!(tref.is_symmetric());
    }

    #[test]
    fn parse_half_integers_and_coefficients() {
        let q = p("2t^3/2 - 3*t^(-1/2) + t^(2)");
        assert_eq!(q.coeff(3), 2);
        assert_eq!(q.coeff(-1), -3);
        assert_eq!(q.coeff(4), 1);
        assert_eq!(q.to_string().parse::<LaurentPoly>().unwrap(), q);
    }

    #[test]
    fn parse_errors_carry_position() {
        match "t^3 + * 2".parse::<LaurentPoly>() {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "t^1/3".parse::<LaurentPoly>(),
            Err(Error::BadExponent(_))
        ));
        assert!(matches!("".parse::<LaurentPoly>(), Err(Error::Syntax { .. })));
        assert!(matches!("t^".parse::<LaurentPoly>(), Err(Error::Syntax { .. })));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(chi_series(&p("t^2"), 0), Err(Error::Asymmetric));
        assert_eq!(validate_knot_delta(&p("2")), Err(Error::NotNormalized(2)));
        assert_eq!(validate_knot_delta(&p("t^2 - t + 1")), Err(Error::Asymmetric));
        assert_eq!(validate_knot_delta(&p("t^1/2")), Err(Error::HalfIntegerKnot));
        // not an L-space knot: figure eight
        assert!(matches!(
            validate_lspace_delta(&p("-t + 3 - t^-1")),
            Err(Error::NotLSpace(_))
        ));
    }

    #[test]
    fn chi_unknot_is_geometric() {
        let chi = chi_series(&LaurentPoly::one(), -8).unwrap();
        for e in (-8..=0).step_by(2) {
            assert_eq!(chi.coeff(e), Some(1));
        }
        assert_eq!(chi.coeff(2), Some(0));
        assert_eq!(chi.coeff(-10), None);
    }

    #[test]
    fn torus_chi_small_cases() {
        assert_eq!(torus_chi(2, 1).unwrap(), LaurentPoly::one());
        assert!(torus_chi(1, 3).is_err());
        assert_eq!(torus_chi(2, 0).unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn cable_chi_split_factor_vanishes() {
        let s = cable_chi(&LaurentPoly::one(), 2, 0, -10).unwrap();
        assert!(s.known().is_zero());
    }

    #[test]
    fn cable_chi_n1_is_chi() {
        let d = p("t - 1 + t^-1");
        assert_eq!(cable_chi(&d, 1, 7, -6).unwrap(), chi_series(&d, -6).unwrap());
    }

    #[test]
    fn torus_knot_presets() {
        assert_eq!(torus_knot_delta(2, 3).unwrap(), p("t - 1 + t^-1"));
        assert_eq!(torus_knot_delta(3, 4).unwrap(), p("t^3 - t^2 + 1 - t^-2 + t^-3"));
        assert_eq!(torus_knot_delta(1, 5).unwrap(), LaurentPoly::one());
        assert!(torus_knot_delta(2, 4).is_err());
    }

    #[test]
    fn division_reports_remainder() {
        assert!(p("t^2 + 1").div_exact(&p("t - 1")).is_err());
        assert_eq!(p("t^2 - 1").div_exact(&p("t - 1")).unwrap(), p("t + 1"));
    }

    #[test]
    fn json_shape() {
        let d = p("t - 1 + t^-1");
        let js = serde_json::to_string(&d).unwrap();
        assert_eq!(
            js,
            r#"{"terms":[{"exp2":2,"coef":1},{"exp2":0,"coef":-1},{"exp2":-2,"coef":1}]}"#
        );
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, d);
    }
}
