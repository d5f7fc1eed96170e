//! A sum-of-tails identity whose correction term is a mock theta function,
//! and the rank statistic it reduces to.
//!
//! For `b_j = 1 + q^j` the identity reads, after doubling to clear halves,
//!
//! ```text
//! 2 sum_N [prod (1+q^j) - prod_{j<=N} (1+q^j)]
//!     = prod (1+q^j) [-1 + 2 sum_d q^d/(1-q^d)] + sum_{n>=0} prod_{j<=n} q^j/(1+q^j)
//! ```
//!
//! Read through partitions into distinct parts it becomes: the sum of
//! `ceil(rank/2)` over distinct-part partitions of `m` equals the number of
//! partitions of `m` with exactly one repeated part value.

use std::fmt::Write as _;

use serde::Serialize;

use crate::identities::VerificationReport;
use crate::partitions::{self, Partition, PartitionFamily};
use crate::series::{self, Result, TruncatedSeries};

fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn distinct_product(order: usize) -> Result<TruncatedSeries> {
    series::product_converging(|j| Ok(TruncatedSeries::binomial(1, j, order)), |j| j, order)
}

fn divisor_sum(order: usize) -> Result<TruncatedSeries> {
    series::sum_converging(|d| Ok(TruncatedSeries::geometric(d, order)), |d| d, order)
}

/// `sum_{n>=0} prod_{j<=n} q^j/(1+q^j)`
pub fn mock_theta_sum(order: usize) -> Result<TruncatedSeries> {
    let mut prefix = TruncatedSeries::one(order);
    let tail = series::sum_converging(
        |n| {
            let factor = TruncatedSeries::monomial(1, n, order).div_unit(&TruncatedSeries::binomial(1, n, order))?;
            prefix = prefix.mul(&factor)?;
            Ok(prefix.clone())
        },
        |n| n * (n + 1) / 2,
        order,
    )?;
    tail.add(&TruncatedSeries::one(order))
}

/// Doubled identity, verified by five routes.
pub fn verify_identity9(order: usize) -> Result<VerificationReport> {
    let product = distinct_product(order)?;

    let mut partial = TruncatedSeries::one(order);
    let mut tail = product.sub(&partial)?;
    for n in 1..=order {
        partial = partial.mul(&TruncatedSeries::binomial(1, n, order))?;
        tail = tail.add(&product.sub(&partial)?)?;
    }

    let mut prefix = TruncatedSeries::one(order);
    let rearranged = series::sum_converging(
        |n| {
            let term = TruncatedSeries::monomial(n as i64, n, order).mul(&prefix)?;
            prefix = prefix.mul(&TruncatedSeries::binomial(1, n, order))?;
            Ok(term)
        },
        |n| n,
        order,
    )?;

    let comb_lhs = partitions::weighted_gf(PartitionFamily::Distinct, |l| 2 * l.largest() as i64, order)?;

    let bracket = divisor_sum(order)?.scale(2)?.sub(&TruncatedSeries::one(order))?;
    let series_rhs = product.mul(&bracket)?.add(&mock_theta_sum(order)?)?;

    let distinct_part = partitions::weighted_gf(
        PartitionFamily::Distinct,
        |l| -1 + 2 * l.len() as i64 + sign(l.rank()),
        order,
    )?;
    let one_repeat = one_repeat_series(order)?.scale(4)?;
    let comb_rhs = distinct_part.add(&one_repeat)?;

    VerificationReport::from_routes(
        "mock9",
        order,
        vec![
            ("tail", tail.scale(2)?),
            ("rearranged", rearranged.scale(2)?),
            ("comb-lhs", comb_lhs),
            ("series-rhs", series_rhs),
            ("comb-rhs", comb_rhs),
        ],
    )
}

/// `sum ceil(rank/2) q^N` over partitions into distinct parts.
pub fn rank_sum_series(order: usize) -> Result<TruncatedSeries> {
    partitions::weighted_gf(PartitionFamily::Distinct, |l| half_rank(l) as i64, order)
}

/// `sum q^N` over partitions with exactly one repeated part value.
pub fn one_repeat_series(order: usize) -> Result<TruncatedSeries> {
    partitions::weighted_gf(PartitionFamily::ExactlyOneRepeated, |_| 1, order)
}

pub fn verify_rank(order: usize) -> Result<VerificationReport> {
    VerificationReport::from_routes(
        "rank",
        order,
        vec![
            ("rank-sum", rank_sum_series(order)?),
            ("one-repeat", one_repeat_series(order)?),
        ],
    )
}

/// `ceil(rank / 2)`; the rank of a distinct-part partition is never negative.
fn half_rank(l: &Partition) -> u64 {
    (l.rank().max(0) as u64).div_ceil(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogSide {
    DistinctWithRankWeight,
    OneRepeated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankCatalogEntry {
    pub side: CatalogSide,
    pub partition: Partition,
    pub rank: i64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankCatalog {
    pub n: u32,
    pub left: Vec<RankCatalogEntry>,
    pub right: Vec<RankCatalogEntry>,
}

impl RankCatalog {
    pub fn left_total(&self) -> u64 {
        self.left.iter().map(|e| e.multiplicity).sum()
    }

    pub fn right_total(&self) -> u64 {
        self.right.iter().map(|e| e.multiplicity).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = &RankCatalogEntry> {
        self.left.iter().chain(&self.right)
    }

    /// One JSON object per entry, left side first.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in self.entries() {
            out.push_str(&serde_json::to_string(e).expect("catalog entries serialize"));
            out.push('\n');
        }
        out
    }

    /// The distinct-part table (`λ`, rank, `⌈rank/2⌉`) followed by the list
    /// of one-repeat partitions.
    pub fn to_table(&self) -> String {
        let width = self
            .left
            .iter()
            .map(|e| e.partition.to_string().chars().count())
            .max()
            .unwrap_or(1)
            .max(1);
        let mut out = String::new();
        let _ = writeln!(out, "distinct partitions of {} weighted by ceil(rank/2)", self.n);
        let _ = writeln!(out, "{:<width$}  {:>4}  {:>4}", "λ", "r", "⌈r/2⌉", width = width);
        for e in &self.left {
            let shown = e.partition.to_string();
            let pad = width.saturating_sub(shown.chars().count());
            let _ = writeln!(
                out,
                "{}{}  {:>4}  {:>4}",
                shown,
                " ".repeat(pad),
                e.rank,
                e.multiplicity
            );
        }
        let _ = writeln!(out, "total {}", self.left_total());
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "partitions of {} with exactly one repeated part ({})",
            self.n,
            self.right_total()
        );
        let list: Vec<String> = self.right.iter().map(|e| e.partition.to_string()).collect();
        let _ = writeln!(out, "{}", list.join(", "));
        out
    }
}

/// Both sides of the rank identity at `n`, in reverse lexicographic order.
/// Distinct-part partitions with `ceil(rank/2) = 0` are omitted.
pub fn catalog(n: u32) -> RankCatalog {
    let mut left = Vec::new();
    partitions::for_each(n, PartitionFamily::Distinct, |l| {
        let m = half_rank(l);
        if m > 0 {
            left.push(RankCatalogEntry {
                side: CatalogSide::DistinctWithRankWeight,
                partition: l.clone(),
                rank: l.rank(),
                multiplicity: m,
            });
        }
    });
    let right = partitions::enumerate(n, PartitionFamily::ExactlyOneRepeated)
        .into_iter()
        .map(|l| RankCatalogEntry {
            side: CatalogSide::OneRepeated,
            rank: l.rank(),
            partition: l,
            multiplicity: 1,
        })
        .collect();
    RankCatalog { n, left, right }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rank_identity_at_eight() {
        assert_eq!(rank_sum_series(8).unwrap().coeff(8).unwrap(), 13);
        assert_eq!(one_repeat_series(8).unwrap().coeff(8).unwrap(), 13);
    }

    #[test]
    fn catalog_of_eight() {
        let c = catalog(8);
        let left: Vec<(Partition, u64)> = c.left.iter().map(|e| (e.partition.clone(), e.multiplicity)).collect();
        assert_eq!(
            left,
            vec![
                (p(&[8]), 4),
                (p(&[7, 1]), 3),
                (p(&[6, 2]), 2),
                (p(&[5, 3]), 2),
                (p(&[5, 2, 1]), 1),
                (p(&[4, 3, 1]), 1)
            ]
        );
        let ranks: Vec<i64> = c.left.iter().map(|e| e.rank).collect();
        assert_eq!(ranks, [7, 5, 4, 3, 2, 1]);
        let right: Vec<String> = c.right.iter().map(|e| e.partition.to_string()).collect();
        assert_eq!(
            right,
            [
                "61²", "51³", "4²", "42²", "421²", "41⁴", "3²2", "32²1", "321³", "31⁵", "2⁴", "21⁶", "1⁸"
            ]
        );
        assert_eq!((c.left_total(), c.right_total()), (13, 13));
    }

    #[test]
    fn catalog_of_one() {
        let c = catalog(1);
        assert!(c.left.is_empty());
        assert!(c.right.is_empty());
        assert_eq!(c.left_total(), c.right_total());
    }

    #[test]
    fn constant_terms_cancel() {
        let r = verify_identity9(0).unwrap();
        assert!(r.equal);
        let product = distinct_product(0).unwrap();
        let bracket = divisor_sum(0)
            .unwrap()
            .scale(2)
            .unwrap()
            .sub(&TruncatedSeries::one(0))
            .unwrap();
        let rhs = product.mul(&bracket).unwrap().add(&mock_theta_sum(0).unwrap()).unwrap();
        assert_eq!(rhs.coeffs(), &[0]);
    }

    #[test]
    fn table_text() {
        let t = catalog(8).to_table();
        assert!(t.contains("431"));
        assert!(t.contains("total 13"));
        assert!(t.contains("61², 51³"));
    }
}
