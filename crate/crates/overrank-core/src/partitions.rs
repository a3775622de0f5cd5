//! Brute-force combinatorial side: enumerate partitions and overpartitions,
//! compute the three rank statistics object-by-object, and tally them into
//! oracle rank tables by direct counting.
//!
//! Everything here is independent of the generating-function pipeline; the
//! two are compared entrywise as the central cross-check.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::bivariate::RankTable;
use crate::{M2Convention, RankStatistic};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part minus number of parts; 0 for the empty partition.
    pub fn dyson_rank(&self) -> i64 {
        match self.parts.first() {
            Some(&largest) => largest as i64 - self.parts.len() as i64,
            None => 0,
        }
    }
}

/// An overpartition: a partition in which the first occurrence of a part
/// size may be overlined. Canonical form is the multiset of sizes plus the
/// set of overlined sizes, so no two decorated sequences collide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverPartition {
    parts: Vec<usize>,
    overlined: Vec<usize>,
}

impl OverPartition {
    pub fn new(parts: Vec<usize>, overlined: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        assert!(
            overlined.windows(2).all(|w| w[0] > w[1]),
            "overlined sizes must be distinct"
        );
        assert!(
            overlined.iter().all(|s| parts.contains(s)),
            "every overlined size must occur as a part"
        );
        OverPartition { parts, overlined }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn overlined(&self) -> &[usize] {
        &self.overlined
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    fn is_overlined(&self, size: usize) -> bool {
        self.overlined.contains(&size)
    }

    /// Largest part minus number of parts, overlines ignored; 0 when empty.
    pub fn d_rank(&self) -> i64 {
        match self.parts.first() {
            Some(&largest) => largest as i64 - self.parts.len() as i64,
            None => 0,
        }
    }

    /// Half the largest part (floor or ceiling per `convention`), minus the
    /// number of parts, plus the number of non-overlined odd parts counted
    /// with multiplicity, minus 1 if the largest part is odd and its size is
    /// not overlined. The empty overpartition has rank 0.
    pub fn m2_rank(&self, convention: M2Convention) -> i64 {
        let Some(&largest) = self.parts.first() else {
            return 0;
        };
        let half = match convention {
            M2Convention::Floor => largest / 2,
            M2Convention::Ceiling => largest.div_ceil(2),
        } as i64;
        let length = self.parts.len() as i64;
        let mut odd_non_overlined = 0i64;
        for (i, &p) in self.parts.iter().enumerate() {
            if p % 2 == 1 {
                // Only the first copy of a size can carry its overline.
                let first_copy = i == 0 || self.parts[i - 1] != p;
                if !(first_copy && self.is_overlined(p)) {
                    odd_non_overlined += 1;
                }
            }
        }
        let chi = i64::from(largest % 2 == 1 && !self.is_overlined(largest));
        half - length + odd_non_overlined - chi
    }
}

/// Stream of all partitions of n in reverse lexicographic order, starting
/// from the single-part partition (n) and ending at all-ones. n = 0 yields
/// exactly the empty partition.
pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

/// The partition after `parts` in reverse lexicographic order, or None at
/// the end: strip trailing ones, decrement the new last part, and refill the
/// stripped weight greedily with copies of that part.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let mut next = parts.to_vec();
    let mut reclaimed = 0usize;
    while next.last() == Some(&1) {
        next.pop();
        reclaimed += 1;
    }
    let last = next.last_mut()?;
    *last -= 1;
    reclaimed += 1;
    let cap = *last;
    while reclaimed > cap {
        next.push(cap);
        reclaimed -= cap;
    }
    if reclaimed > 0 {
        next.push(reclaimed);
    }
    Some(next)
}

pub fn enumerate_partitions(n: usize) -> PartitionIter {
    let start = if n == 0 { vec![] } else { vec![n] };
    PartitionIter { next: Some(start) }
}

/// Stream of all overpartitions of n: each partition of n in reverse
/// lexicographic order, refined by every subset of its distinct sizes as the
/// overline set (subsets in increasing bitmask order over the distinct sizes
/// taken largest first).
pub struct OverPartitionIter {
    partitions: PartitionIter,
    current: Option<(Vec<usize>, Vec<usize>)>,
    mask: u32,
}

impl Iterator for OverPartitionIter {
    type Item = OverPartition;

    fn next(&mut self) -> Option<OverPartition> {
        if self.current.is_none() {
            let p = self.partitions.next()?;
            let mut distinct = p.parts.clone();
            distinct.dedup();
            self.current = Some((p.parts, distinct));
            self.mask = 0;
        }
        let (parts, distinct) = self.current.as_ref().unwrap();
        let overlined = distinct
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask & (1 << i) != 0)
            .map(|(_, &s)| s)
            .collect();
        let item = OverPartition {
            parts: parts.clone(),
            overlined,
        };
        self.mask += 1;
        if self.mask >= 1 << distinct.len() {
            self.current = None;
        }
        Some(item)
    }
}

pub fn enumerate_overpartitions(n: usize) -> OverPartitionIter {
    OverPartitionIter {
        partitions: enumerate_partitions(n),
        current: None,
        mask: 0,
    }
}

/// Count objects of each size n ≤ max_n by their rank statistic: the table
/// entry (m,n) is the number of objects of size n whose statistic equals m.
/// The convention parameter only affects the M2-rank.
pub fn oracle_rank_table(
    statistic: RankStatistic,
    max_n: usize,
    convention: M2Convention,
) -> RankTable {
    let t = max_n as i64;
    let mut table = RankTable::zeroed(
        format!("{} by enumeration", statistic.label()),
        max_n,
        -t,
        t,
    );
    let one = BigInt::one();
    for n in 0..=max_n {
        match statistic {
            RankStatistic::Dyson => {
                for p in enumerate_partitions(n) {
                    table.add_to(p.dyson_rank(), n, &one);
                }
            }
            RankStatistic::DRank => {
                for o in enumerate_overpartitions(n) {
                    table.add_to(o.d_rank(), n, &one);
                }
            }
            RankStatistic::M2Rank => {
                for o in enumerate_overpartitions(n) {
                    table.add_to(o.m2_rank(convention), n, &one);
                }
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    /// Independent count of partitions of n: classic dynamic program over
    /// allowed part sizes.
    fn partition_count(n: usize) -> u64 {
        let mut ways = vec![0u64; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for total in part..=n {
                ways[total] += ways[total - part];
            }
        }
        ways[n]
    }

    /// Independent count of overpartitions for all sizes ≤ max_n: expand
    /// Π_j (1+q^j)/(1−q^j) term by term as integer vectors.
    fn overpartition_counts(max_n: usize) -> Vec<u64> {
        let mut counts = vec![0u64; max_n + 1];
        counts[0] = 1;
        for j in 1..=max_n {
            // Multiply by (1 + q^j): one optional overlined copy of size j.
            for n in (j..=max_n).rev() {
                counts[n] += counts[n - j];
            }
            // Multiply by 1/(1 − q^j): any number of plain copies of size j.
            for n in j..=max_n {
                counts[n] += counts[n - j];
            }
        }
        counts
    }

    #[test]
    fn partitions_of_zero_and_four() {
        let of_zero: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(of_zero, vec![Partition::new(vec![])]);

        let of_four: Vec<_> = enumerate_partitions(4)
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            of_four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn partition_counts_match_dynamic_program() {
        for n in 0..=20 {
            let enumerated = enumerate_partitions(n).count() as u64;
            assert_eq!(enumerated, partition_count(n), "at n={n}");
        }
        assert_eq!(partition_count(20), 627);
    }

    #[test]
    fn every_enumerated_partition_is_valid_and_distinct() {
        for n in 0..=12 {
            let all: Vec<_> = enumerate_partitions(n).collect();
            for p in &all {
                assert_eq!(p.weight(), n);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
            for i in 1..all.len() {
                assert!(
                    all[i..].iter().all(|q| *q != all[i - 1]),
                    "duplicate at n={n}"
                );
            }
        }
    }

    #[test]
    fn overpartitions_of_three_listed_in_order() {
        let got: Vec<(Vec<usize>, Vec<usize>)> = enumerate_overpartitions(3)
            .map(|o| (o.parts().to_vec(), o.overlined().to_vec()))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![3], vec![]),
                (vec![3], vec![3]),
                (vec![2, 1], vec![]),
                (vec![2, 1], vec![2]),
                (vec![2, 1], vec![1]),
                (vec![2, 1], vec![2, 1]),
                (vec![1, 1, 1], vec![]),
                (vec![1, 1, 1], vec![1]),
            ]
        );
    }

    #[test]
    fn fourteen_overpartitions_of_four() {
        assert_eq!(enumerate_overpartitions(4).count(), 14);
        assert_eq!(enumerate_overpartitions(0).count(), 1);
    }

    #[test]
    fn overpartition_counts_match_product_expansion() {
        let expect = overpartition_counts(12);
        for (n, expected) in expect.iter().enumerate() {
            assert_eq!(enumerate_overpartitions(n).count() as u64, *expected, "at n={n}");
        }
    }

    #[test]
    fn dyson_rank_values() {
        assert_eq!(Partition::new(vec![4, 1]).dyson_rank(), 2);
        assert_eq!(Partition::new(vec![]).dyson_rank(), 0);
        assert_eq!(Partition::new(vec![1, 1, 1, 1]).dyson_rank(), -3);
    }

    #[test]
    fn d_rank_values() {
        assert_eq!(OverPartition::new(vec![3, 1], vec![3]).d_rank(), 1);
        assert_eq!(OverPartition::new(vec![1, 1, 1, 1], vec![1]).d_rank(), -3);
        assert_eq!(OverPartition::new(vec![], vec![]).d_rank(), 0);
    }

    #[test]
    fn d_rank_distribution_at_three() {
        let mut by_rank = [0usize; 7];
        for o in enumerate_overpartitions(3) {
            by_rank[(o.d_rank() + 3) as usize] += 1;
        }
        // ranks −3..3 → counts: rank 2 twice, rank 0 four times, rank −2 twice.
        assert_eq!(by_rank, [0, 2, 0, 4, 0, 2, 0]);
    }

    #[test]
    fn m2_rank_worked_example() {
        let o = OverPartition::new(vec![7, 5, 4, 4, 2, 2, 1, 1], vec![7, 4, 2]);
        assert_eq!(o.m2_rank(M2Convention::Floor), -2);
        assert_eq!(o.m2_rank(M2Convention::Ceiling), -1);
    }

    #[test]
    fn m2_rank_at_one_under_each_convention() {
        let plain = OverPartition::new(vec![1], vec![]);
        let lined = OverPartition::new(vec![1], vec![1]);
        assert_eq!(plain.m2_rank(M2Convention::Ceiling), 0);
        assert_eq!(lined.m2_rank(M2Convention::Ceiling), 0);
        assert_eq!(plain.m2_rank(M2Convention::Floor), -1);
        assert_eq!(lined.m2_rank(M2Convention::Floor), -1);
    }

    #[test]
    fn statistic_bounded_by_weight() {
        for n in 1..=10 {
            for o in enumerate_overpartitions(n) {
                assert!(o.d_rank().unsigned_abs() as usize <= n);
                assert!(o.m2_rank(M2Convention::Ceiling).unsigned_abs() as usize <= n);
                assert!(o.m2_rank(M2Convention::Floor).unsigned_abs() as usize <= n);
            }
            for p in enumerate_partitions(n) {
                assert!(p.dyson_rank().unsigned_abs() as usize <= n);
            }
        }
    }

    #[test]
    fn oracle_d_rank_table_small_values() {
        let t = oracle_rank_table(RankStatistic::DRank, 4, M2Convention::Ceiling);
        assert_eq!(t.row_total(4), BigInt::from(14));
        assert_eq!(t.entry(0, 4), BigInt::from(2));
        assert_eq!(t.entry(0, 3), BigInt::from(4));
        assert_eq!(t.entry(2, 3), BigInt::from(2));
        assert_eq!(t.entry(-2, 3), BigInt::from(2));
        assert_eq!(t.entry(1, 3), BigInt::zero());
    }

    #[test]
    fn oracle_dyson_table_base_entry() {
        let t = oracle_rank_table(RankStatistic::Dyson, 3, M2Convention::Ceiling);
        assert_eq!(t.entry(0, 0), BigInt::one());
        assert_eq!(t.entry(0, 1), BigInt::one());
    }

    #[test]
    fn oracle_tables_symmetric_in_m() {
        let d = oracle_rank_table(RankStatistic::DRank, 10, M2Convention::Ceiling);
        let m2 = oracle_rank_table(RankStatistic::M2Rank, 10, M2Convention::Ceiling);
        let dy = oracle_rank_table(RankStatistic::Dyson, 10, M2Convention::Ceiling);
        for n in 0..=10 {
            for m in 0..=10i64 {
                assert_eq!(d.entry(m, n), d.entry(-m, n), "d-rank m={m} n={n}");
                assert_eq!(m2.entry(m, n), m2.entry(-m, n), "m2 m={m} n={n}");
                assert_eq!(dy.entry(m, n), dy.entry(-m, n), "dyson m={m} n={n}");
            }
        }
    }

    #[test]
    fn floor_convention_breaks_m2_symmetry_at_one() {
        let t = oracle_rank_table(RankStatistic::M2Rank, 1, M2Convention::Floor);
        assert_eq!(t.entry(-1, 1), BigInt::from(2));
        assert_eq!(t.entry(1, 1), BigInt::zero());
        assert_eq!(t.entry(0, 1), BigInt::zero());
    }
}
