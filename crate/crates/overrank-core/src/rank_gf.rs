//! Generating-function side: rank tables expanded from bivariate series,
//! the coefficient family f_{m,k}(q) computed three independent ways, and
//! the first-difference series whose nonnegativity is the monotonicity
//! statement.
//!
//! The family f_{m,k}(q) is defined by
//!
//!   Σ_m z^m f_{m,k}(q) = (1−q) / ((zq;q)_k (q/z;q)_k),
//!
//! so each row is (1−q) times a z-slice of the rank kernel. The rows also
//! satisfy a level-to-level recurrence and, for k ≤ 2, closed forms; all
//! three constructions are exposed and must agree.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bivariate::{expand_rank_kernel, RankTable};
use crate::series::{finite_pochhammer, QSeries};
use crate::{Error, RankStatistic};

/// All rows f_{m,k}(q) for |m| ≤ T at a fixed level k, each exact through
/// q^T. Rows with |m| > T would have no nonzero coefficient below q^T for
/// k ≥ 1, since every power of z carries at least one power of q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FmkTable {
    k: usize,
    trunc: usize,
    rows: Vec<QSeries>,
}

impl FmkTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn trunc_order(&self) -> usize {
        self.trunc
    }

    /// The row f_{m,k}(q).
    pub fn row(&self, m: i64) -> Result<&QSeries, Error> {
        let t = self.trunc as i64;
        if m < -t || m > t {
            return Err(Error::IndexOutOfRange {
                m,
                m_min: -t,
                m_max: t,
            });
        }
        Ok(&self.rows[(m + t) as usize])
    }
}

/// 1/(1 − q^d) expanded through `trunc`.
fn geometric(d: usize, trunc: usize) -> QSeries {
    (&QSeries::one(trunc) - &QSeries::monomial(1, d, trunc))
        .inverse()
        .expect("unit constant term")
}

/// f_{m,k} straight from the definition: (1−q) times each z-slice of the
/// expanded kernel 1/((zq;q)_k (q/z;q)_k).
pub fn fmk_by_definition(k: usize, trunc: usize) -> FmkTable {
    let kernel = expand_rank_kernel(k, 1, trunc);
    let one_minus_q = QSeries::from_ints(&[1, -1], trunc);
    let t = trunc as i64;
    let rows = (-t..=t)
        .map(|m| {
            let slice = kernel
                .extract_z_coefficient(m)
                .expect("m within kernel window");
            &one_minus_q * &slice
        })
        .collect();
    FmkTable { k, trunc, rows }
}

/// One step of the level recurrence
///
///   f_{m,k+1}(q) = Σ_n f_{n,k}(q) · q^{(k+1)|m−n|} / (1 − q^{2k+2}),
///
/// with the sum restricted to |n| ≤ T: rows beyond the stored window only
/// contribute above the truncation order.
pub fn fmk_by_recurrence(base: &FmkTable) -> FmkTable {
    let trunc = base.trunc;
    let t = trunc as i64;
    let level = base.k as i64 + 1;
    let denominator_inverse = geometric(2 * base.k + 2, trunc);
    let mut rows = Vec::with_capacity(2 * trunc + 1);
    for m in -t..=t {
        let mut acc = QSeries::zero(trunc);
        for n in -t..=t {
            let row = base.row(n).expect("n within window");
            if row.is_zero() {
                continue;
            }
            let shift = (level * (m - n).abs()) as usize;
            if shift <= trunc {
                acc = &acc + &row.shift(shift);
            }
        }
        rows.push(&acc * &denominator_inverse);
    }
    FmkTable {
        k: base.k + 1,
        trunc,
        rows,
    }
}

/// Tables for levels 0..=k_max, built purely by iterating the recurrence
/// from the level-0 base f_{0,0} = 1−q, f_{m,0} = 0.
pub fn fmk_tables_up_to(k_max: usize, trunc: usize) -> Vec<FmkTable> {
    let mut tables = vec![fmk_by_definition(0, trunc)];
    for _ in 0..k_max {
        tables.push(fmk_by_recurrence(tables.last().expect("nonempty")));
    }
    tables
}

/// The closed forms known for levels 0, 1 and 2:
///
///   f_{m,1} = q^{|m|}/(1+q),
///   f_{0,2} = −q + 1/(1−q³) + q²/(1−q⁴) + q⁸/((1−q³)(1−q⁴)),
///   f_{m,2} = q^{|m|}((1−q^{|m|+1})/((1−q²)(1−q³)) + q^{|m|+3}/((1−q³)(1−q⁴)))
///
/// for m ≠ 0. Levels k ≥ 3 have no closed form here.
pub fn fmk_closed_form(m: i64, k: usize, trunc: usize) -> Result<QSeries, Error> {
    let a = m.unsigned_abs() as usize;
    match k {
        0 => Ok(if m == 0 {
            QSeries::from_ints(&[1, -1], trunc)
        } else {
            QSeries::zero(trunc)
        }),
        1 => {
            let inv = QSeries::from_ints(&[1, 1], trunc)
                .inverse()
                .expect("unit constant term");
            Ok(inv.shift(a))
        }
        2 => {
            let inv3 = geometric(3, trunc);
            let inv4 = geometric(4, trunc);
            if m == 0 {
                let mut s = &inv3 - &QSeries::monomial(1, 1, trunc);
                s = &s + &inv4.shift(2);
                Ok(&s + &(&inv3 * &inv4).shift(8))
            } else {
                let inv2 = geometric(2, trunc);
                let numerator = &QSeries::one(trunc) - &QSeries::monomial(1, a + 1, trunc);
                let head = &(&numerator * &inv2) * &inv3;
                let tail = (&inv3 * &inv4).shift(a + 3);
                Ok((&head + &tail).shift(a))
            }
        }
        _ => Err(Error::UnsupportedLevel { k }),
    }
}

/// Largest k whose summand can still contribute at or below q^trunc: the
/// minimal q-order of the k-th summand is k² (ordinary rank), k(k+1)/2
/// (D-rank) or k (M2-rank).
fn summation_cutoff(statistic: RankStatistic, trunc: usize) -> usize {
    let reaches = |k: usize| match statistic {
        RankStatistic::Dyson => k * k <= trunc,
        RankStatistic::DRank => k * (k + 1) / 2 <= trunc,
        RankStatistic::M2Rank => k <= trunc,
    };
    let mut k = 0;
    while reaches(k + 1) {
        k += 1;
    }
    k
}

/// Expand the rank-count table from its generating function:
///
///   ordinary rank  Σ_k q^{k²} / ((zq;q)_k (q/z;q)_k),
///   D-rank         Σ_k (−1;q)_k q^{k(k+1)/2} / ((zq;q)_k (q/z;q)_k),
///   M2-rank        Σ_k (−1;q)_{2k} q^k / ((zq²;q²)_k (q²/z;q²)_k).
///
/// The kernel is extended one level at a time, so the whole sum costs two
/// geometric-factor passes per level. Entirely independent of the
/// enumeration oracle.
pub fn gf_rank_table(statistic: RankStatistic, max_n: usize) -> RankTable {
    let t = max_n as i64;
    let step = match statistic {
        RankStatistic::M2Rank => 2,
        _ => 1,
    };
    let mut acc = RankTable::zeroed(
        format!("{} by generating function", statistic.label()),
        max_n,
        -t,
        t,
    );
    let mut kernel = expand_rank_kernel(0, step, max_n);
    for k in 0..=summation_cutoff(statistic, max_n) {
        if k > 0 {
            kernel.mul_geometric_z_factor(1, step * k);
            kernel.mul_geometric_z_factor(-1, step * k);
        }
        let weight = match statistic {
            RankStatistic::Dyson => QSeries::monomial(1, k * k, max_n),
            RankStatistic::DRank => finite_pochhammer(-1, 0, 1, k, max_n).shift(k * (k + 1) / 2),
            RankStatistic::M2Rank => finite_pochhammer(-1, 0, 1, 2 * k, max_n).shift(k),
        };
        acc.add_assign_entries(&kernel.mul_univariate(&weight));
    }
    acc
}

/// The f-tables needed by [`first_difference_series`]: at the statistic's
/// own truncation order for step-1 kernels, and at half order (rounded up)
/// for the M2 sum, whose rows enter as f_{m,k}(q²).
pub(crate) fn difference_tables(statistic: RankStatistic, trunc: usize) -> Vec<FmkTable> {
    let order = match statistic {
        RankStatistic::M2Rank => trunc.div_ceil(2),
        _ => trunc,
    };
    fmk_tables_up_to(summation_cutoff(statistic, trunc), order)
}

/// As [`first_difference_series`], reusing prebuilt tables from
/// [`difference_tables`] so sweeps over many m share the expensive part.
pub(crate) fn first_difference_from(
    statistic: RankStatistic,
    m: i64,
    trunc: usize,
    tables: &[FmkTable],
) -> QSeries {
    let mut acc = QSeries::zero(trunc);
    match statistic {
        RankStatistic::Dyson | RankStatistic::DRank => {
            for table in tables {
                let k = table.k();
                let row = table.row(m).expect("m within window");
                if row.is_zero() {
                    continue;
                }
                let weight = match statistic {
                    RankStatistic::Dyson => QSeries::monomial(1, k * k, trunc),
                    _ => finite_pochhammer(-1, 0, 1, k, trunc).shift(k * (k + 1) / 2),
                };
                acc = &acc + &(&weight * row);
            }
        }
        RankStatistic::M2Rank => {
            // k = 0 contributes (1−q)f_{m,0}(q²)/(1+q) = (1−q) at m = 0 only.
            if m == 0 {
                acc = QSeries::from_ints(&[1, -1], trunc);
            }
            let half = trunc.div_ceil(2) as i64;
            if m.abs() > half {
                // f_{m,k}(q²) starts at q^{2|m|} > q^trunc: nothing to add.
                return acc;
            }
            for table in tables.iter().skip(1) {
                let k = table.k();
                let row = table.row(m).expect("m within window");
                if row.is_zero() {
                    continue;
                }
                let squared = row.substitute_power(2).truncated(trunc);
                let weight = finite_pochhammer(-1, 2, 1, 2 * k - 2, trunc)
                    .shift(k)
                    .scaled(2);
                acc = &acc + &(&weight * &squared);
            }
        }
    }
    acc
}

/// The series Σ_n (c(m,n) − c(m,n−1)) qⁿ expanded from the summand form
///
///   D-rank   Σ_k (−1;q)_k q^{k(k+1)/2} f_{m,k}(q),
///   M2-rank  (1−q)[m=0] + Σ_{k≥1} 2(−q²;q)_{2k−2} q^k f_{m,k}(q²),
///   ordinary Σ_k q^{k²} f_{m,k}(q),
///
/// rather than from any rank table. Its coefficients at n ≥ 1 must equal
/// the first differences of the corresponding table row.
pub fn first_difference_series(statistic: RankStatistic, m: i64, trunc: usize) -> QSeries {
    assert!(
        m.unsigned_abs() as usize <= trunc,
        "|m| beyond truncation order"
    );
    let tables = difference_tables(statistic, trunc);
    first_difference_from(statistic, m, trunc, &tables)
}
