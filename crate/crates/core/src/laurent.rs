//! Laurent polynomials in one variable `q` with arbitrary-precision integer
//! coefficients.
//!
//! Every sl(2)-character in this crate is a [`LaurentPoly`]. The
//! representation is a sparse exponent map kept in canonical form (no zero
//! coefficients), so derived `PartialEq` is mathematical equality.
//! Convolution and the generating-function recurrences run on dense
//! vectors internally.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff · q^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in pairs {
            *terms.entry(e).or_insert_with(BigInt::zero) += c.into();
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `c_k = c_{-k}` for every `k`.
    pub fn is_palindromic(&self) -> bool {
        self.terms
            .iter()
            .all(|(&e, c)| self.terms.get(&-e) == Some(c))
    }

    /// Sum of all coefficients; the dimension when `self` is a character.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Substitutes `q ↦ q^factor`. `factor` must be nonzero.
    pub fn scale_exponents(&self, factor: i64) -> Self {
        assert!(factor != 0, "exponent scale factor must be nonzero");
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e * factor, c.clone())).collect(),
        }
    }

    pub(crate) fn from_dense(dense: Dense) -> Self {
        let Dense { low, coeffs } = dense;
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (low + i as i64, c))
            .collect();
        Self { terms }
    }

    pub(crate) fn to_dense(&self) -> Option<Dense> {
        let low = self.min_exponent()?;
        let high = self.max_exponent()?;
        let mut coeffs = vec![BigInt::zero(); (high - low) as usize + 1];
        for (&e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        Some(Dense { low, coeffs })
    }
}

/// Dense coefficient vector: `coeffs[i]` is the coefficient of `q^(low + i)`.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub(crate) low: i64,
    pub(crate) coeffs: Vec<BigInt>,
}

impl Dense {
    pub(crate) fn zeros(low: i64, len: usize) -> Self {
        Self {
            low,
            coeffs: vec![BigInt::zero(); len],
        }
    }
}

fn convolve(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::zeros(a.low + b.low, a.coeffs.len() + b.coeffs.len() - 1);
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                out.coeffs[i + j] += x * y;
            }
        }
    }
    out
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let slot = terms.entry(e).or_insert_with(BigInt::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentPoly { terms }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        match (self.to_dense(), rhs.to_dense()) {
            (Some(a), Some(b)) => LaurentPoly::from_dense(convolve(&a, &b)),
            _ => LaurentPoly::zero(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `q^2 + 2 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// {"terms": [[exponent, "coefficient"], ...]}, ascending exponents.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<i64, BigInt>);

        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (e, c) in self.0 {
                    seq.serialize_element(&(e, c.to_string()))?;
                }
                seq.end()
            }
        }

        #[derive(Serialize)]
        struct Wire<'a> {
            terms: Terms<'a>,
        }

        Wire {
            terms: Terms(&self.terms),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            terms: Vec<(i64, String)>,
        }

        let wire = Wire::deserialize(deserializer)?;
        let mut pairs = Vec::with_capacity(wire.terms.len());
        for (e, c) in wire.terms {
            let c: BigInt = c
                .parse()
                .map_err(|_| de::Error::custom(format!("bad coefficient {c:?}")))?;
            pairs.push((e, c));
        }
        Ok(LaurentPoly::from_terms(pairs))
    }
}

/// Character of the irreducible sl(2)-module `F_d`:
/// `q^d + q^(d-2) + ... + q^(-d)`.
pub fn chi(d: u32) -> LaurentPoly {
    let d = i64::from(d);
    LaurentPoly::from_terms((0..=d).map(|i| (d - 2 * i, 1)))
}

fn weight_span(weights: &[i64]) -> (i64, i64) {
    let lo = weights.iter().copied().min().unwrap_or(0);
    let hi = weights.iter().copied().max().unwrap_or(0);
    (lo, hi)
}

/// Complete homogeneous symmetric functions of the monomials `q^w`.
///
/// Returns `[h_0, ..., h_m]` where `h_k` is the coefficient of `t^k` in
/// `∏_w 1/(1 - t q^w)`. Weights are absorbed one at a time; dividing the
/// running series by `1 - t q^w` is the recurrence `h'_k = h_k + q^w h'_(k-1)`.
pub fn sym_powers_from_weights(weights: &[i64], m: usize) -> Vec<LaurentPoly> {
    let (lo, hi) = weight_span(weights);
    let span = (hi - lo) as usize;
    let mut h: Vec<Dense> = (0..=m)
        .map(|k| Dense::zeros(k as i64 * lo, k * span + 1))
        .collect();
    h[0].coeffs[0] = BigInt::one();

    for &w in weights {
        let offset = (w - lo) as usize;
        for k in 1..=m {
            let (prev, rest) = h.split_at_mut(k);
            let src = &prev[k - 1].coeffs;
            let dst = &mut rest[0].coeffs;
            for (i, c) in src.iter().enumerate() {
                if !c.is_zero() {
                    dst[i + offset] += c;
                }
            }
        }
    }
    h.into_iter().map(LaurentPoly::from_dense).collect()
}

/// Elementary symmetric functions of the monomials `q^w`.
///
/// Returns `[e_0, ..., e_kmax]`, the coefficients of `t^k` in
/// `∏_w (1 + t q^w)`, built with `e'_k = e_k + q^w e_(k-1)`.
/// Entries with `k > weights.len()` are zero.
pub fn ext_powers_from_weights(weights: &[i64], kmax: usize) -> Vec<LaurentPoly> {
    let (lo, hi) = weight_span(weights);
    let span = (hi - lo) as usize;
    let mut e: Vec<Dense> = (0..=kmax)
        .map(|k| Dense::zeros(k as i64 * lo, k * span + 1))
        .collect();
    e[0].coeffs[0] = BigInt::one();

    for (seen, &w) in weights.iter().enumerate() {
        let offset = (w - lo) as usize;
        // Descending k so e_(k-1) is still the old value.
        for k in (1..=kmax.min(seen + 1)).rev() {
            let (prev, rest) = e.split_at_mut(k);
            let src = &prev[k - 1].coeffs;
            let dst = &mut rest[0].coeffs;
            for (i, c) in src.iter().enumerate() {
                if !c.is_zero() {
                    dst[i + offset] += c;
                }
            }
        }
    }
    e.into_iter().map(LaurentPoly::from_dense).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().copied())
    }

    #[test]
    fn add_cancels_and_prunes() {
        let a = p(&[(1, 1), (-1, 1)]);
        let b = p(&[(1, 1), (-1, -1)]);
        let sum = &a + &b;
        assert_eq!(sum, p(&[(1, 2)]));
        assert_eq!(sum.num_terms(), 1);
        assert_eq!(&a + &LaurentPoly::zero(), a);
        assert_eq!(&chi(1) + &chi(1), p(&[(1, 2), (-1, 2)]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&chi(1) * &chi(1), p(&[(2, 1), (0, 2), (-2, 1)]));
        let x = p(&[(3, 5), (-7, -2)]);
        assert_eq!(&x * &LaurentPoly::one(), x);
        assert!((&x * &LaurentPoly::zero()).is_zero());
        // Clebsch-Gordan: F_1 ⊗ F_2 = F_3 ⊕ F_1
        assert_eq!(&chi(1) * &chi(2), &chi(3) + &chi(1));
    }

    #[test]
    fn chi_values() {
        assert_eq!(chi(0), LaurentPoly::one());
        assert_eq!(chi(2), p(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(chi(3).eval_at_one(), BigInt::from(4));
        for d in 0..20 {
            assert!(chi(d).is_palindromic());
            assert_eq!(chi(d).eval_at_one(), BigInt::from(d + 1));
        }
    }

    #[test]
    fn eval_zero() {
        assert_eq!(LaurentPoly::zero().eval_at_one(), BigInt::zero());
    }

    #[test]
    fn sym_powers_examples() {
        let h = sym_powers_from_weights(&[1, -1], 2);
        assert_eq!(h[2], chi(2));
        let h = sym_powers_from_weights(&[], 3);
        assert_eq!(h, vec![LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::zero()]);
        let h = sym_powers_from_weights(&[0, 0], 1);
        assert_eq!(h[1], p(&[(0, 2)]));
    }

    #[test]
    fn ext_powers_examples() {
        assert_eq!(ext_powers_from_weights(&[2, 0, -2], 3)[3], LaurentPoly::one());
        assert_eq!(ext_powers_from_weights(&[1, -1], 1)[1], chi(1));
        // (1+tq^3)(1+tq)(1+tq^-1)(1+tq^-3), t^2 coefficient expanded by hand:
        // pairs q^4, q^2, 1, 1, q^-2, q^-4
        let e = ext_powers_from_weights(&[3, 1, -1, -3], 2);
        assert_eq!(e[2], p(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
        let e = ext_powers_from_weights(&[1, -1], 5);
        assert!(e[3..].iter().all(LaurentPoly::is_zero));
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[(2, 1), (0, 2), (-2, 1)]).to_string(), "q^2 + 2 + q^-2");
        assert_eq!(p(&[(1, -3), (0, 1)]).to_string(), "-3q + 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_wire_format() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let poly = LaurentPoly::from_terms(vec![(3, big.clone()), (-2, BigInt::from(-4))]);
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(json, r#"{"terms":[[-2,"-4"],[3,"123456789012345678901234567890"]]}"#);
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, poly);
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"terms":[[0,"x"]]}"#).is_err());
        // Zero coefficients on the wire are pruned on the way in.
        let z: LaurentPoly = serde_json::from_str(r#"{"terms":[[0,"0"]]}"#).unwrap();
        assert!(z.is_zero());
    }
}
