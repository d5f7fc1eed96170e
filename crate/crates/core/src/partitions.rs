//! Integer partitions, their statistics, and exhaustive enumeration by family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::{SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive")]
    ZeroPart,
    #[error("parts must be non-increasing ({0} followed by {1})")]
    Increasing(u32, u32),
    #[error("cannot parse partition literal {0:?}")]
    Parse(String),
    #[error("{partition} is not in family {family}")]
    NotInFamily { partition: String, family: String },
}

/// A partition: a non-increasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Deserialize)]
struct RawPartition {
    parts: Vec<u32>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = PartitionError;

    fn try_from(raw: RawPartition) -> Result<Self, PartitionError> {
        Partition::new(raw.parts)
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(PartitionError::Increasing(w[0], w[1]));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into non-increasing order first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `N`, the number being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `n`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn smallest(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Number of parts equal to `d`.
    pub fn multiplicity(&self, d: u32) -> usize {
        self.parts.iter().filter(|&&p| p == d).count()
    }

    pub fn distinct_count(&self) -> usize {
        self.runs().count()
    }

    pub fn odd_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn even_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// Largest part minus number of parts.
    pub fn rank(&self) -> i64 {
        self.largest() as i64 - self.len() as i64
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn runs(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.parts.chunk_by(|a, b| a == b).map(|c| (c[0], c.len()))
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            size: self.size(),
            length: self.len(),
            largest: self.largest(),
            multiplicities: self.runs().collect(),
            distinct_count: self.distinct_count(),
            odd_count: self.odd_count(),
            even_count: self.even_count(),
            rank: self.rank(),
        }
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let largest = self.largest() as usize;
        let mut parts = vec![0u32; largest];
        for &p in &self.parts {
            for c in &mut parts[..p as usize] {
                *c += 1;
            }
        }
        Partition { parts }
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Partition {
        debug_assert!(Partition::new(parts.clone()).is_ok(), "{parts:?}");
        Partition { parts }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub size: u32,
    pub length: usize,
    pub largest: u32,
    /// `(part, multiplicity)` for every distinct part, largest first.
    pub multiplicities: Vec<(u32, usize)>,
    pub distinct_count: usize,
    pub odd_count: usize,
    pub even_count: usize,
    pub rank: i64,
}

impl PartitionStats {
    pub fn n_at(&self, d: u32) -> usize {
        self.multiplicities.iter().find(|(p, _)| *p == d).map_or(0, |(_, m)| *m)
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript(n: usize) -> String {
    n.to_string()
        .bytes()
        .map(|b| SUPERSCRIPTS[(b - b'0') as usize])
        .collect()
}

/// Concatenated parts with multiplicity exponents, e.g. `42²1²`. Parts of
/// two or more digits are comma separated to stay unambiguous; the empty
/// partition prints as `∅`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let sep = if self.largest() >= 10 { "," } else { "" };
        for (i, (p, m)) in self.runs().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{}", p)?;
            if m > 1 {
                f.write_str(&superscript(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Parses comma or whitespace separated parts, e.g. `8,7,5,4` or `(3 2 1)`.
/// `()` and the empty string give the empty partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| PartitionError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// The partition classes summed over by the generating functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionFamily {
    All,
    Distinct,
    NoRepeatedOdd,
    NoRepeatedEven,
    /// Exactly one part value occurs two or more times.
    ExactlyOneRepeated,
    /// Distinct parts, one of which is `d`.
    DistinctContaining(u32),
    /// `d` occurs at least twice and no other part repeats.
    OnlyRepeatIs(u32),
    /// Every part is at most `n` and each of `1..=n` occurs.
    CompleteUpTo(u32),
}

impl PartitionFamily {
    pub fn contains(&self, p: &Partition) -> bool {
        match *self {
            PartitionFamily::All => true,
            PartitionFamily::Distinct => p.runs().all(|(_, m)| m == 1),
            PartitionFamily::NoRepeatedOdd => p.runs().all(|(v, m)| v % 2 == 0 || m == 1),
            PartitionFamily::NoRepeatedEven => p.runs().all(|(v, m)| v % 2 == 1 || m == 1),
            PartitionFamily::ExactlyOneRepeated => p.runs().filter(|&(_, m)| m >= 2).count() == 1,
            PartitionFamily::DistinctContaining(d) => p.runs().all(|(_, m)| m == 1) && p.parts.contains(&d),
            PartitionFamily::OnlyRepeatIs(d) => {
                p.runs().all(|(v, m)| if v == d { m >= 2 } else { m == 1 }) && p.parts.contains(&d)
            }
            PartitionFamily::CompleteUpTo(n) => p.largest() <= n && p.distinct_count() == n as usize,
        }
    }

    /// Whether a part value may appear more than once. Used to prune the
    /// enumeration; membership is still confirmed with [`Self::contains`].
    fn allows_repeat(&self, part: u32) -> bool {
        match *self {
            PartitionFamily::Distinct | PartitionFamily::DistinctContaining(_) => false,
            PartitionFamily::NoRepeatedOdd => part.is_multiple_of(2),
            PartitionFamily::NoRepeatedEven => part % 2 == 1,
            PartitionFamily::OnlyRepeatIs(d) => part == d,
            PartitionFamily::All | PartitionFamily::ExactlyOneRepeated | PartitionFamily::CompleteUpTo(_) => true,
        }
    }

    fn max_part(&self, n: u32) -> u32 {
        match *self {
            PartitionFamily::CompleteUpTo(k) => k.min(n),
            _ => n,
        }
    }

    fn needs_filter(&self) -> bool {
        matches!(
            self,
            PartitionFamily::ExactlyOneRepeated
                | PartitionFamily::DistinctContaining(_)
                | PartitionFamily::OnlyRepeatIs(_)
                | PartitionFamily::CompleteUpTo(_)
        )
    }
}

impl fmt::Display for PartitionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionFamily::All => f.write_str("all"),
            PartitionFamily::Distinct => f.write_str("distinct"),
            PartitionFamily::NoRepeatedOdd => f.write_str("no-repeated-odd"),
            PartitionFamily::NoRepeatedEven => f.write_str("no-repeated-even"),
            PartitionFamily::ExactlyOneRepeated => f.write_str("exactly-one-repeated"),
            PartitionFamily::DistinctContaining(d) => write!(f, "distinct-containing-{}", d),
            PartitionFamily::OnlyRepeatIs(d) => write!(f, "only-repeat-is-{}", d),
            PartitionFamily::CompleteUpTo(n) => write!(f, "complete-up-to-{}", n),
        }
    }
}

impl FromStr for PartitionFamily {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let err = || PartitionError::Parse(s.to_string());
        let param = |prefix: &str| -> Option<Result<u32, PartitionError>> {
            s.strip_prefix(prefix).map(|rest| rest.parse().map_err(|_| err()))
        };
        Ok(match s {
            "all" => PartitionFamily::All,
            "distinct" => PartitionFamily::Distinct,
            "no-repeated-odd" => PartitionFamily::NoRepeatedOdd,
            "no-repeated-even" => PartitionFamily::NoRepeatedEven,
            "exactly-one-repeated" => PartitionFamily::ExactlyOneRepeated,
            _ => {
                if let Some(d) = param("distinct-containing-") {
                    PartitionFamily::DistinctContaining(d?)
                } else if let Some(d) = param("only-repeat-is-") {
                    PartitionFamily::OnlyRepeatIs(d?)
                } else if let Some(n) = param("complete-up-to-") {
                    PartitionFamily::CompleteUpTo(n?)
                } else {
                    return Err(err());
                }
            }
        })
    }
}

/// Calls `visit` on every partition of `n` in `family`, in reverse
/// lexicographic order. The partition handed to `visit` is a reused buffer.
pub fn for_each<F>(n: u32, family: PartitionFamily, mut visit: F)
where
    F: FnMut(&Partition),
{
    let mut buf = Partition::empty();
    let filter = family.needs_filter();
    descend(n, family.max_part(n), &family, filter, &mut buf, &mut visit);
}

fn descend<F>(remaining: u32, max_part: u32, family: &PartitionFamily, filter: bool, buf: &mut Partition, visit: &mut F)
where
    F: FnMut(&Partition),
{
    if remaining == 0 {
        if !filter || family.contains(buf) {
            visit(buf);
        }
        return;
    }
    let prev = buf.parts.last().copied();
    for p in (1..=max_part.min(remaining)).rev() {
        if prev == Some(p) && !family.allows_repeat(p) {
            continue;
        }
        buf.parts.push(p);
        descend(remaining - p, p, family, filter, buf, visit);
        buf.parts.pop();
    }
}

/// All partitions of `n` in `family`, reverse lexicographic.
pub fn enumerate(n: u32, family: PartitionFamily) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each(n, family, |p| out.push(p.clone()));
    out
}

/// `sum weight(λ) q^N(λ)` over `family`, truncated at `order`.
pub fn weighted_gf<W>(family: PartitionFamily, mut weight: W, order: usize) -> Result<TruncatedSeries, SeriesError>
where
    W: FnMut(&Partition) -> i64,
{
    let mut coeffs = vec![0i64; order + 1];
    for (m, slot) in coeffs.iter_mut().enumerate() {
        let mut acc: Option<i64> = Some(0);
        for_each(m as u32, family, |p| {
            acc = acc.and_then(|a| a.checked_add(weight(p)));
        });
        *slot = acc.ok_or(SeriesError::Overflow("weighted_gf"))?;
    }
    TruncatedSeries::from_coeffs(order, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn distinct_partitions_of_eight() {
        let got = enumerate(8, PartitionFamily::Distinct);
        let want = vec![
            p(&[8]),
            p(&[7, 1]),
            p(&[6, 2]),
            p(&[5, 3]),
            p(&[5, 2, 1]),
            p(&[4, 3, 1]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn empty_partition_membership() {
        assert_eq!(enumerate(0, PartitionFamily::All), vec![Partition::empty()]);
        let e = Partition::empty();
        for fam in [
            PartitionFamily::All,
            PartitionFamily::Distinct,
            PartitionFamily::NoRepeatedOdd,
            PartitionFamily::NoRepeatedEven,
            PartitionFamily::CompleteUpTo(0),
        ] {
            assert!(fam.contains(&e), "{fam}");
        }
        assert!(!PartitionFamily::ExactlyOneRepeated.contains(&e));
        assert!(enumerate(0, PartitionFamily::ExactlyOneRepeated).is_empty());
    }

    #[test]
    fn exactly_one_repeated_of_eight() {
        let got = enumerate(8, PartitionFamily::ExactlyOneRepeated);
        assert_eq!(got.len(), 13);
        let shown: Vec<String> = got.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            [
                "61²", "51³", "4²", "42²", "421²", "41⁴", "3²2", "32²1", "321³", "31⁵", "2⁴", "21⁶", "1⁸"
            ]
        );
    }

    #[test]
    fn statistics() {
        let s = p(&[4, 3, 1]).stats();
        assert_eq!((s.size, s.length, s.largest, s.distinct_count, s.rank), (8, 3, 4, 3, 1));
        let s = Partition::empty().stats();
        assert_eq!(
            (
                s.size,
                s.length,
                s.largest,
                s.distinct_count,
                s.odd_count,
                s.even_count,
                s.rank
            ),
            (0, 0, 0, 0, 0, 0, 0)
        );
        let s = p(&[2, 2, 2, 1]).stats();
        assert_eq!((s.n_at(2), s.n_at(1), s.n_at(5)), (3, 1, 0));
        assert_eq!((s.odd_count, s.even_count, s.rank), (1, 3, -2));
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..=20 {
            for_each(n, PartitionFamily::All, |l| assert_eq!(&l.conjugate().conjugate(), l));
        }
    }

    #[test]
    fn validation_and_parsing() {
        assert_eq!(Partition::new(vec![2, 0]).unwrap_err(), PartitionError::ZeroPart);
        assert_eq!(
            Partition::new(vec![1, 2]).unwrap_err(),
            PartitionError::Increasing(1, 2)
        );
        assert_eq!("8,7,5".parse::<Partition>().unwrap(), p(&[8, 7, 5]));
        assert_eq!("(3 2 1)".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap(), p(&[3, 2, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[4, 2, 2, 1, 1]).to_string(), "42²1²");
        assert_eq!(p(&[12, 3, 3]).to_string(), "12,3²");
        assert_eq!(Partition::empty().to_string(), "∅");
        assert_eq!(p(&[1; 12]).to_string(), "1¹²");
    }

    #[test]
    fn family_names_round_trip() {
        for fam in [
            PartitionFamily::All,
            PartitionFamily::Distinct,
            PartitionFamily::NoRepeatedOdd,
            PartitionFamily::NoRepeatedEven,
            PartitionFamily::ExactlyOneRepeated,
            PartitionFamily::DistinctContaining(3),
            PartitionFamily::OnlyRepeatIs(2),
            PartitionFamily::CompleteUpTo(4),
        ] {
            assert_eq!(fam.to_string().parse::<PartitionFamily>().unwrap(), fam);
        }
        assert!("weird".parse::<PartitionFamily>().is_err());
    }

    #[test]
    fn weighted_counts() {
        let largest = weighted_gf(PartitionFamily::All, |l| l.largest() as i64, 3).unwrap();
        assert_eq!(largest.coeff(3).unwrap(), 6);
        let length = weighted_gf(PartitionFamily::All, |l| l.len() as i64, 3).unwrap();
        assert_eq!(length.coeff(3).unwrap(), 6);
    }

    #[test]
    fn weighted_gf_overflow() {
        let e = weighted_gf(PartitionFamily::All, |_| i64::MAX, 2).unwrap_err();
        assert_eq!(e, SeriesError::Overflow("weighted_gf"));
    }
}
