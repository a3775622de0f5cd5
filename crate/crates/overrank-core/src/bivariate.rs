//! Exact coefficient tables for bivariate series Σ c(m,n) z^m q^n.
//!
//! A [`RankTable`] is a dense rectangle of integer coefficients: the z-degree
//! m runs over a signed window and the q-degree n runs from 0 to an inclusive
//! truncation order. Tables of this shape carry the rank-count statistics
//! N(m,n) as well as the rank kernel 1/((zq^s;q^s)_k (q^s/z;q^s)_k) and the
//! a/b coefficient families derived from it. Entries outside the stored
//! m-window are identically zero because every power of z in any kernel
//! factor carries at least one power of q, so |m| > n forces a zero
//! coefficient.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::series::QSeries;
use crate::Error;

/// Dense table of the coefficients c(m,n) of a bivariate series, exact for
/// all n up to `max_n` and all m in `m_min..=m_max`. Storage is row-major by
/// n, then m ascending, which fixes the serialization order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    label: String,
    max_n: usize,
    m_min: i64,
    m_max: i64,
    values: Vec<BigInt>,
}

impl RankTable {
    /// An all-zero table over the given window.
    pub fn zeroed(label: impl Into<String>, max_n: usize, m_min: i64, m_max: i64) -> Self {
        assert!(m_min <= m_max, "empty m-window");
        let width = (m_max - m_min + 1) as usize;
        RankTable {
            label: label.into(),
            max_n,
            m_min,
            m_max,
            values: vec![BigInt::zero(); width * (max_n + 1)],
        }
    }

    /// Which statistic or kernel the table represents.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn m_min(&self) -> i64 {
        self.m_min
    }

    pub fn m_max(&self) -> i64 {
        self.m_max
    }

    fn width(&self) -> usize {
        (self.m_max - self.m_min + 1) as usize
    }

    fn offset(&self, m: i64, n: usize) -> usize {
        debug_assert!(self.m_min <= m && m <= self.m_max && n <= self.max_n);
        n * self.width() + (m - self.m_min) as usize
    }

    /// Stored coefficient, or None when m lies outside the window (where the
    /// coefficient is zero by the support bound). Panics if n exceeds the
    /// truncation order — that coefficient is unknown, not zero.
    pub fn get(&self, m: i64, n: usize) -> Option<&BigInt> {
        assert!(
            n <= self.max_n,
            "coefficient of q^{} beyond truncation order {}",
            n,
            self.max_n
        );
        if m < self.m_min || m > self.m_max {
            return None;
        }
        Some(&self.values[self.offset(m, n)])
    }

    /// Coefficient c(m,n) as a value; zero outside the stored m-window.
    pub fn entry(&self, m: i64, n: usize) -> BigInt {
        self.get(m, n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn set(&mut self, m: i64, n: usize, value: BigInt) {
        let idx = self.offset(m, n);
        self.values[idx] = value;
    }

    pub(crate) fn add_to(&mut self, m: i64, n: usize, delta: &BigInt) {
        let idx = self.offset(m, n);
        self.values[idx] += delta;
    }

    pub(crate) fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    /// The univariate slice Σ_n c(m,n) q^n at the table's truncation order.
    pub fn extract_z_coefficient(&self, m: i64) -> Result<QSeries, Error> {
        if m < self.m_min || m > self.m_max {
            return Err(Error::IndexOutOfRange {
                m,
                m_min: self.m_min,
                m_max: self.m_max,
            });
        }
        let coeffs = (0..=self.max_n)
            .map(|n| self.values[self.offset(m, n)].clone())
            .collect();
        Ok(QSeries::from_coeffs(coeffs))
    }

    /// Σ_m c(m,n): the total object count at size n for rank-count tables.
    pub fn row_total(&self, n: usize) -> BigInt {
        let mut total = BigInt::zero();
        for m in self.m_min..=self.m_max {
            total += &self.values[self.offset(m, n)];
        }
        total
    }

    /// All nonzero entries as (m, n, value), ordered by n then m ascending.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (i64, usize, &BigInt)> + '_ {
        let width = self.width();
        self.values.iter().enumerate().filter_map(move |(idx, v)| {
            if v.is_zero() {
                None
            } else {
                Some((self.m_min + (idx % width) as i64, idx / width, v))
            }
        })
    }

    /// In-place multiplication by the geometric factor 1/(1 − z^eps q^j):
    /// the result R satisfies R(m,n) = C(m,n) + R(m−eps, n−j), so ascending n
    /// only ever reads completed rows.
    pub(crate) fn mul_geometric_z_factor(&mut self, eps: i64, j: usize) {
        assert!(j >= 1, "the factor must carry a positive power of q");
        for n in j..=self.max_n {
            for m in self.m_min..=self.m_max {
                let src_m = m - eps;
                if src_m < self.m_min || src_m > self.m_max {
                    continue;
                }
                let carried = self.values[self.offset(src_m, n - j)].clone();
                if !carried.is_zero() {
                    let idx = self.offset(m, n);
                    self.values[idx] += carried;
                }
            }
        }
    }

    /// Multiply every z-slice by a univariate series in q, truncating at the
    /// table's order.
    pub(crate) fn mul_univariate(&self, s: &QSeries) -> RankTable {
        let mut out = RankTable::zeroed(self.label.clone(), self.max_n, self.m_min, self.m_max);
        for n_src in 0..=self.max_n {
            for m in self.m_min..=self.m_max {
                let v = &self.values[self.offset(m, n_src)];
                if v.is_zero() {
                    continue;
                }
                for j in 0..=(self.max_n - n_src).min(s.trunc_order()) {
                    let c = s.coeff(j);
                    if !c.is_zero() {
                        let idx = out.offset(m, n_src + j);
                        out.values[idx] += v * c;
                    }
                }
            }
        }
        out
    }

    /// Entrywise sum; both tables must share the same window.
    pub(crate) fn add_assign_entries(&mut self, other: &RankTable) {
        assert!(
            self.max_n == other.max_n && self.m_min == other.m_min && self.m_max == other.m_max,
            "mismatched table windows"
        );
        for (dst, src) in self.values.iter_mut().zip(&other.values) {
            *dst += src;
        }
    }
}

/// Expand the rank kernel 1/((zq^s;q^s)_k (q^s/z;q^s)_k) exactly through
/// q^max_n, with the full m-window |m| ≤ max_n. k = 0 is the empty product,
/// i.e. the constant 1.
pub fn expand_rank_kernel(k: usize, step: usize, max_n: usize) -> RankTable {
    assert!(step >= 1, "kernel step must be at least 1");
    let t = max_n as i64;
    let mut table = RankTable::zeroed(format!("rank-kernel k={k} step={step}"), max_n, -t, t);
    table.set(0, 0, BigInt::one());
    for i in 1..=k {
        let j = step * i;
        if j > max_n {
            // Factors with exponent beyond the truncation order are 1 + O(q^{T+1}).
            break;
        }
        table.mul_geometric_z_factor(1, j);
        table.mul_geometric_z_factor(-1, j);
    }
    table
}

/// Build the coefficient tables of 1/((qz;q)_k (q/z;q)_k) for k = 0..=k_max
/// purely from the level-to-level recurrence
///
///   a_{k+1,m}(n) = Σ_{r=0}^{⌊n/(k+1)⌋} Σ_{i=0}^{r} a_{k, m−r+2i}(n − r(k+1)),
///
/// starting from a_{0,m}(n) = [m=0][n=0]. Independent of
/// [`expand_rank_kernel`], which the result must match entrywise.
pub fn akm_table_by_recurrence(k_max: usize, max_n: usize) -> Vec<RankTable> {
    let t = max_n as i64;
    let mut tables = Vec::with_capacity(k_max + 1);
    let mut base = RankTable::zeroed("a-table k=0", max_n, -t, t);
    base.set(0, 0, BigInt::one());
    tables.push(base);
    for k in 0..k_max {
        let level = k + 1;
        let prev = &tables[k];
        let mut next = RankTable::zeroed(format!("a-table k={level}"), max_n, -t, t);
        for n in 0..=max_n {
            for m in -t..=t {
                let mut acc = BigInt::zero();
                for r in 0..=n / level {
                    let n_src = n - r * level;
                    for i in 0..=r {
                        let m_src = m - r as i64 + 2 * i as i64;
                        if let Some(v) = prev.get(m_src, n_src) {
                            acc += v;
                        }
                    }
                }
                if !acc.is_zero() {
                    next.set(m, n, acc);
                }
            }
        }
        tables.push(next);
    }
    tables
}

/// The pair-difference table b_{k,m}(n) = a_{k,m}(n) − a_{k,m+2}(n) of a
/// given a-table, with the m-window extended down to −max_n − 2 so the
/// antisymmetry b_{k,m}(n) = −b_{k,−m−2}(n) is checkable on stored entries.
pub fn bkm_from_atable(a: &RankTable) -> RankTable {
    let t = a.max_n() as i64;
    let mut b = RankTable::zeroed(
        format!("pair-difference of {}", a.label()),
        a.max_n(),
        -t - 2,
        t,
    );
    for n in 0..=a.max_n() {
        for m in (-t - 2)..=t {
            let v = a.entry(m, n) - a.entry(m + 2, n);
            if !v.is_zero() {
                b.set(m, n, v);
            }
        }
    }
    b
}

/// b_{k,m}(n) built directly from the kernel expansion at level k.
pub fn bkm_table(k: usize, max_n: usize) -> RankTable {
    let mut b = bkm_from_atable(&expand_rank_kernel(k, 1, max_n));
    b.set_label(format!("b-table k={k}"));
    b
}
