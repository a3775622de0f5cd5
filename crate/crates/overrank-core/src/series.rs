//! Truncated formal power series in q with exact integer coefficients.
//!
//! A [`QSeries`] stores every coefficient from q^0 through q^T inclusive,
//! where T is the truncation order. All arithmetic is exact; binary
//! operations truncate to the smaller of the two operand orders, so a caller
//! that needs a result correct through q^T must build both operands at order
//! at least T. Rational functions of q (geometric denominators and friends)
//! only ever appear here in expanded truncated form.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// A formal power series truncated at order T (inclusive): exactly T+1
/// integer coefficients, indexed by exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// Wrap a dense coefficient vector; the truncation order is `len - 1`.
    ///
    /// Panics on an empty vector (the truncation order must be >= 0).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the q^0 coefficient"
        );
        QSeries { coeffs }
    }

    /// Convenience constructor from small integers, zero-padded to
    /// truncation order `trunc`.
    pub fn from_ints(values: &[i64], trunc: usize) -> Self {
        assert!(
            values.len() <= trunc + 1,
            "more coefficients than the truncation order admits"
        );
        let mut coeffs: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
        coeffs.resize(trunc + 1, BigInt::zero());
        QSeries { coeffs }
    }

    /// The zero series at truncation order `trunc`.
    pub fn zero(trunc: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    /// The constant series 1 at truncation order `trunc`.
    pub fn one(trunc: usize) -> Self {
        Self::monomial(1, 0, trunc)
    }

    /// The monomial c·q^e at truncation order `trunc` (zero if e > trunc).
    pub fn monomial(c: i64, e: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if e <= trunc {
            s.coeffs[e] = BigInt::from(c);
        }
        s
    }

    /// Truncation order T: coefficients are exact for exponents 0..=T.
    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^i. Panics if i exceeds the truncation order, where
    /// the coefficient is unknown.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// All stored coefficients, indexed by exponent.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// True if every stored coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest exponent with a nonzero coefficient, if any.
    pub fn min_nonzero_exponent(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True if no stored coefficient is negative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Restrict to a smaller truncation order. Panics if `trunc` exceeds the
    /// current order: the missing coefficients would be unknown, not zero.
    pub fn truncated(&self, trunc: usize) -> QSeries {
        assert!(
            trunc <= self.trunc_order(),
            "cannot extend a series from order {} to order {}",
            self.trunc_order(),
            trunc
        );
        QSeries {
            coeffs: self.coeffs[..=trunc].to_vec(),
        }
    }

    /// Multiply by the scalar `c`.
    pub fn scaled(&self, c: i64) -> QSeries {
        let c = BigInt::from(c);
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    /// Multiply by q^s at fixed truncation order; coefficients pushed past
    /// the order are discarded.
    pub fn shift(&self, s: usize) -> QSeries {
        let trunc = self.trunc_order();
        let mut out = Self::zero(trunc);
        for i in 0..=trunc.saturating_sub(s) {
            if i + s <= trunc {
                out.coeffs[i + s] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Substitute q -> q^d (d >= 1). The result is exact through order T·d.
    pub fn substitute_power(&self, d: usize) -> QSeries {
        assert!(d >= 1, "substitution power must be at least 1");
        let trunc = self.trunc_order();
        let mut out = Self::zero(trunc * d);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * d] = c.clone();
        }
        out
    }

    /// Multiplicative inverse up to the truncation order, by the triangular
    /// recurrence. The constant term must be +1 or -1 (the units of the
    /// integer coefficient ring), so the inverse is again integral.
    pub fn inverse(&self) -> Result<QSeries, Error> {
        let a0 = &self.coeffs[0];
        if !a0.magnitude().is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let trunc = self.trunc_order();
        let mut inv = Self::zero(trunc);
        inv.coeffs[0] = a0.clone();
        for n in 1..=trunc {
            let mut acc = BigInt::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() && !inv.coeffs[n - j].is_zero() {
                    acc += &self.coeffs[j] * &inv.coeffs[n - j];
                }
            }
            // 1/a0 = a0 for a unit constant term.
            inv.coeffs[n] = -(a0 * acc);
        }
        Ok(inv)
    }
}

/// The finite q-Pochhammer product Π_{i=0}^{n-1} (1 - c·q^{e+i·step}),
/// i.e. (c·q^e; q^step)_n, expanded exactly through order `trunc`.
///
/// n = 0 yields the constant series 1. Factors whose exponent exceeds the
/// truncation order are congruent to 1 and are skipped.
pub fn finite_pochhammer(c: i64, e: usize, step: usize, n: usize, trunc: usize) -> QSeries {
    assert!(step >= 1, "pochhammer step must be at least 1");
    let c = BigInt::from(c);
    let mut out = QSeries::one(trunc);
    for i in 0..n {
        let exp = e + i * step;
        if exp > trunc {
            break;
        }
        // In-place multiply by (1 - c·q^exp), descending so the low
        // coefficients read are still the previous factor's.
        for idx in (exp..=trunc).rev() {
            let delta = &c * &out.coeffs[idx - exp];
            out.coeffs[idx] -= delta;
        }
    }
    out
}

impl Add for &QSeries {
    type Output = QSeries;

    /// Coefficientwise sum at the smaller of the two truncation orders.
    fn add(self, rhs: &QSeries) -> QSeries {
        let trunc = self.trunc_order().min(rhs.trunc_order());
        let coeffs = (0..=trunc)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        QSeries { coeffs }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        let trunc = self.trunc_order().min(rhs.trunc_order());
        let coeffs = (0..=trunc)
            .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
            .collect();
        QSeries { coeffs }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    /// Cauchy convolution at the smaller of the two truncation orders.
    fn mul(self, rhs: &QSeries) -> QSeries {
        let trunc = self.trunc_order().min(rhs.trunc_order());
        let mut out = QSeries::zero(trunc);
        for (i, a) in self.coeffs.iter().enumerate().take(trunc + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(trunc + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}
