//! Exhaustive property sweeps over the pairings in [`crate::involutions`].
//!
//! Each sweep visits every partition of every `N <= max_n` in the pairing's
//! family and records a [`Violation`] for every failed property.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagrams;
use crate::identities::CaseId;
use crate::involutions::{self, classify_exceptional};
use crate::partitions::{self, Partition, PartitionFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvolutionName {
    Franklin,
    SigmaOdd,
    Paths,
    SigmaEven,
}

impl InvolutionName {
    pub const ALL: [InvolutionName; 4] = [
        InvolutionName::Franklin,
        InvolutionName::SigmaOdd,
        InvolutionName::Paths,
        InvolutionName::SigmaEven,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InvolutionName::Franklin => "franklin",
            InvolutionName::SigmaOdd => "sigma-odd",
            InvolutionName::Paths => "paths",
            InvolutionName::SigmaEven => "sigma-even",
        }
    }
}

impl fmt::Display for InvolutionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InvolutionName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        InvolutionName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown involution {:?}", s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub size: u32,
    pub partition: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PathStats {
    pub paths: usize,
    pub vertices: usize,
    pub longest: usize,
    /// Number of paths by vertex count.
    pub by_length: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub involution: InvolutionName,
    #[serde(rename = "maxN")]
    pub max_n: u32,
    /// Partitions visited.
    pub checked: usize,
    /// Exceptional partitions seen (left unpaired).
    pub exceptional: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path_stats: Option<PathStats>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for InvolutionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} up to N = {}: {} partitions, {} exceptional, {} violations",
            self.involution,
            self.max_n,
            self.checked,
            self.exceptional,
            self.violations.len()
        )?;
        if let Some(s) = &self.path_stats {
            write!(
                f,
                "\n  {} paths over {} vertices, longest {}",
                s.paths, s.vertices, s.longest
            )?;
            for (len, count) in &s.by_length {
                write!(f, "\n  {} vertices: {} paths", len, count)?;
            }
        }
        for v in &self.violations {
            write!(f, "\n  N={} {}: {}", v.size, v.partition, v.message)?;
        }
        Ok(())
    }
}

struct Recorder {
    violations: Vec<Violation>,
}

impl Recorder {
    fn check(&mut self, ok: bool, lambda: &Partition, message: impl FnOnce() -> String) {
        if !ok {
            self.violations.push(Violation {
                size: lambda.size(),
                partition: lambda.to_string(),
                message: message(),
            });
        }
    }
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn run(name: InvolutionName, max_n: u32) -> InvolutionReport {
    match name {
        InvolutionName::Franklin => check_franklin(max_n),
        InvolutionName::SigmaOdd => check_sigma_odd(max_n),
        InvolutionName::Paths => check_paths(max_n),
        InvolutionName::SigmaEven => check_sigma_even(max_n),
    }
}

/// Franklin: an involution on non-exceptional distinct-part partitions that
/// preserves `N` and `λ1 + n` and changes `n` by one.
pub fn check_franklin(max_n: u32) -> InvolutionReport {
    let mut rec = Recorder { violations: Vec::new() };
    let (mut checked, mut exceptional) = (0, 0);
    for n in 0..=max_n {
        let (mut all_signed, mut exc_signed) = (0i64, 0i64);
        let (mut all_weighted, mut exc_weighted) = (0i64, 0i64);
        partitions::for_each(n, PartitionFamily::Distinct, |l| {
            checked += 1;
            let s = sign(l.len());
            let w = (l.largest() as i64 + l.len() as i64) * s;
            all_signed += s;
            all_weighted += w;
            if classify_exceptional(l, CaseId::Iv).ok().flatten().is_some() {
                exceptional += 1;
                exc_signed += s;
                exc_weighted += w;
                return;
            }
            let mu = match involutions::franklin(l) {
                Ok(mu) => mu,
                Err(e) => return rec.check(false, l, || e.to_string()),
            };
            rec.check(PartitionFamily::Distinct.contains(&mu), l, || {
                format!("image {} has a repeated part", mu)
            });
            rec.check(
                classify_exceptional(&mu, CaseId::Iv).ok().flatten().is_none(),
                l,
                || format!("image {} is exceptional", mu),
            );
            rec.check(mu.size() == l.size(), l, || format!("image {} changes N", mu));
            rec.check(
                mu.largest() as usize + mu.len() == l.largest() as usize + l.len(),
                l,
                || format!("image {} changes λ1 + n", mu),
            );
            rec.check(mu.len().abs_diff(l.len()) == 1, l, || {
                format!("image {} does not change n by one", mu)
            });
            let back = involutions::franklin(&mu);
            rec.check(back.as_ref() == Ok(l), l, || {
                format!("not an involution: back to {:?}", back)
            });
        });
        let witness = Partition::empty();
        rec.check(all_signed == exc_signed, &witness, || {
            format!(
                "N={}: signed count {} differs from exceptional {}",
                n, all_signed, exc_signed
            )
        });
        rec.check(all_weighted == exc_weighted, &witness, || {
            format!(
                "N={}: weighted sum {} differs from exceptional {}",
                n, all_weighted, exc_weighted
            )
        });
    }
    InvolutionReport {
        involution: InvolutionName::Franklin,
        max_n,
        checked,
        exceptional,
        violations: rec.violations,
        path_stats: None,
    }
}

/// Odd-restricted diagram conjugation: an involution that preserves `N` and
/// the number of odd parts and swaps `n` with `⌈λ1/2⌉`.
pub fn check_sigma_odd(max_n: u32) -> InvolutionReport {
    let mut rec = Recorder { violations: Vec::new() };
    let mut checked = 0;
    for n in 0..=max_n {
        partitions::for_each(n, PartitionFamily::NoRepeatedOdd, |l| {
            checked += 1;
            let d = match diagrams::to_odd_diagram(l) {
                Ok(d) => d,
                Err(e) => return rec.check(false, l, || e.to_string()),
            };
            rec.check(d.row_count() == l.len(), l, || "row count is not n".into());
            rec.check(d.column_count() == l.largest().div_ceil(2) as usize, l, || {
                "column count is not ⌈λ1/2⌉".into()
            });
            rec.check(diagrams::from_odd_diagram(&d).as_ref() == Ok(l), l, || {
                "diagram round trip fails".into()
            });
            let mu = match involutions::sigma_odd(l) {
                Ok(mu) => mu,
                Err(e) => return rec.check(false, l, || e.to_string()),
            };
            rec.check(PartitionFamily::NoRepeatedOdd.contains(&mu), l, || {
                format!("image {} repeats an odd part", mu)
            });
            rec.check(mu.size() == l.size(), l, || format!("image {} changes N", mu));
            rec.check(mu.odd_count() == l.odd_count(), l, || {
                format!("image {} changes the odd count", mu)
            });
            rec.check(mu.len() == l.largest().div_ceil(2) as usize, l, || {
                format!("image {} has n != ⌈λ1/2⌉", mu)
            });
            rec.check(mu.largest().div_ceil(2) as usize == l.len(), l, || {
                format!("image {} has ⌈μ1/2⌉ != n", mu)
            });
            let cells = |p: &Partition| {
                let d = diagrams::to_odd_diagram(p).unwrap();
                let ones = d.rows().iter().flatten().filter(|&&c| c == 1).count();
                let twos = d.rows().iter().flatten().filter(|&&c| c == 2).count();
                (ones, twos)
            };
            rec.check(cells(&mu) == cells(l), l, || {
                format!("image {} changes the cell multiset", mu)
            });
            let back = involutions::sigma_odd(&mu);
            rec.check(back.as_ref() == Ok(l), l, || {
                format!("not an involution: back to {:?}", back)
            });
        });
    }
    InvolutionReport {
        involution: InvolutionName::SigmaOdd,
        max_n,
        checked,
        exceptional: 0,
        violations: rec.violations,
        path_stats: None,
    }
}

/// The neighbour graph on non-exceptional partitions: degrees 1 or 2, moves
/// inverse to each other, components are paths on which `N` and `λ1 + n` are
/// constant, signs alternate, and the weighted signed sums vanish.
pub fn check_paths(max_n: u32) -> InvolutionReport {
    let mut rec = Recorder { violations: Vec::new() };
    let (mut checked, mut exceptional) = (0, 0);
    let mut stats = PathStats::default();
    for n in 0..=max_n {
        let mut vertices: Vec<Partition> = Vec::new();
        partitions::for_each(n, PartitionFamily::All, |l| {
            checked += 1;
            if classify_exceptional(l, CaseId::V).ok().flatten().is_some() {
                exceptional += 1;
            } else {
                vertices.push(l.clone());
            }
        });
        let vertex_set: HashSet<&Partition> = vertices.iter().collect();
        let mut edges = 0usize;
        for l in &vertices {
            let (left, right) = match involutions::neighbours(l) {
                Ok(pair) => pair,
                Err(e) => {
                    rec.check(false, l, || e.to_string());
                    continue;
                }
            };
            let degree = left.is_some() as usize + right.is_some() as usize;
            rec.check(degree == 1 || degree == 2, l, || format!("degree {}", degree));
            if let Some(r) = &right {
                edges += 1;
                rec.check(vertex_set.contains(r), l, || {
                    format!("right neighbour {} is not a vertex", r)
                });
                rec.check(r.len() + 1 == l.len(), l, || {
                    format!("right neighbour {} does not drop one part", r)
                });
                let back = involutions::left_neighbour(r);
                rec.check(back.as_ref() == Ok(l), l, || {
                    format!("left of right neighbour is {:?}", back)
                });
            }
            if let Some(left) = &left {
                rec.check(vertex_set.contains(left), l, || {
                    format!("left neighbour {} is not a vertex", left)
                });
                let back = involutions::right_neighbour(left);
                rec.check(back.as_ref() == Ok(l), l, || {
                    format!("right of left neighbour is {:?}", back)
                });
            }
        }

        // walk every path once, from its left endpoint
        let mut seen: BTreeSet<Partition> = BTreeSet::new();
        let mut path_vertices = 0usize;
        let mut path_edges = 0usize;
        for l in &vertices {
            if seen.contains(l) {
                continue;
            }
            let path = match involutions::neighbour_path(l) {
                Ok(p) => p,
                Err(e) => {
                    rec.check(false, l, || e.to_string());
                    continue;
                }
            };
            rec.check(path.contains(l), l, || "path does not contain its seed".into());
            rec.check(path.len() >= 2, l, || format!("path has {} vertex", path.len()));
            for v in &path {
                rec.check(seen.insert(v.clone()), v, || "vertex lies on two paths".into());
            }
            check_path(&mut rec, &path);
            path_vertices += path.len();
            path_edges += path.len() - 1;
            stats.paths += 1;
            stats.longest = stats.longest.max(path.len());
            *stats.by_length.entry(path.len()).or_default() += 1;
        }
        let witness = Partition::empty();
        rec.check(path_vertices == vertices.len(), &witness, || {
            format!("N={}: paths cover {} of {} vertices", n, path_vertices, vertices.len())
        });
        rec.check(path_edges == edges, &witness, || {
            format!("N={}: paths use {} of {} edges", n, path_edges, edges)
        });
        stats.vertices += vertices.len();
    }
    InvolutionReport {
        involution: InvolutionName::Paths,
        max_n,
        checked,
        exceptional,
        violations: rec.violations,
        path_stats: Some(stats),
    }
}

fn check_path(rec: &mut Recorder, path: &[Partition]) {
    let head = &path[0];
    let n0 = head.size();
    let t0 = head.largest() as usize + head.len();
    let mut signed = 0i64;
    let mut weighted = 0i64;
    for (i, v) in path.iter().enumerate() {
        rec.check(v.size() == n0, v, || "N changes along the path".into());
        rec.check(v.largest() as usize + v.len() == t0, v, || {
            "λ1 + n changes along the path".into()
        });
        if i > 0 {
            rec.check(sign(v.len()) == -sign(path[i - 1].len()), v, || {
                "sign does not alternate".into()
            });
        }
        let s = sign(v.len()) << v.distinct_count();
        signed += s;
        weighted += s * t0 as i64;
    }
    // endpoint pattern: d, d+1, ..., d+1, d
    let d = head.distinct_count();
    let tail = path.last().unwrap();
    rec.check(tail.distinct_count() == d, tail, || {
        format!("endpoint has {} distinct parts, other has {}", tail.distinct_count(), d)
    });
    for v in &path[1..path.len() - 1] {
        rec.check(v.distinct_count() == d + 1, v, || {
            format!("interior vertex does not have {} distinct parts", d + 1)
        });
    }
    rec.check(signed == 0, head, || format!("signed path sum {}", signed));
    rec.check(weighted == 0, head, || format!("weighted path sum {}", weighted));
}

/// Even-restricted exchange: an involution on non-exceptional partitions
/// with no repeated even part that preserves `N` and `⌊λ1/2⌋ + n` and flips
/// both `(-1)^n` and `(-1)^(even parts)`.
pub fn check_sigma_even(max_n: u32) -> InvolutionReport {
    let mut rec = Recorder { violations: Vec::new() };
    let (mut checked, mut exceptional) = (0, 0);
    for n in 0..=max_n {
        partitions::for_each(n, PartitionFamily::NoRepeatedEven, |l| {
            checked += 1;
            let distinct_even = l.runs().filter(|&(v, _)| v % 2 == 0).count();
            rec.check(distinct_even == l.even_count(), l, || "even parts repeat".into());
            if let Ok(d) = diagrams::to_even_diagram(l) {
                rec.check(d.row_count() == l.len(), l, || "row count is not n".into());
                rec.check(
                    d.column_count()
                        == if l.is_empty() {
                            0
                        } else {
                            1 + (l.largest() / 2) as usize
                        },
                    l,
                    || "column count is not 1 + ⌊λ1/2⌋".into(),
                );
                rec.check(diagrams::from_even_diagram(&d).as_ref() == Ok(l), l, || {
                    "diagram round trip fails".into()
                });
            }
            if classify_exceptional(l, CaseId::Vi).ok().flatten().is_some() {
                exceptional += 1;
                return;
            }
            let mu = match involutions::sigma_even(l) {
                Ok(mu) => mu,
                Err(e) => return rec.check(false, l, || e.to_string()),
            };
            rec.check(PartitionFamily::NoRepeatedEven.contains(&mu), l, || {
                format!("image {} repeats an even part", mu)
            });
            rec.check(
                classify_exceptional(&mu, CaseId::Vi).ok().flatten().is_none(),
                l,
                || format!("image {} is exceptional", mu),
            );
            rec.check(mu.size() == l.size(), l, || format!("image {} changes N", mu));
            rec.check(
                mu.largest() / 2 + mu.len() as u32 == l.largest() / 2 + l.len() as u32,
                l,
                || format!("image {} changes ⌊λ1/2⌋ + n", mu),
            );
            rec.check(mu.len().abs_diff(l.len()) == 1, l, || {
                format!("image {} does not change n by one", mu)
            });
            rec.check(sign(mu.even_count()) == -sign(l.even_count()), l, || {
                format!("image {} keeps the even-part sign", mu)
            });
            let back = involutions::sigma_even(&mu);
            rec.check(back.as_ref() == Ok(l), l, || {
                format!("not an involution: back to {:?}", back)
            });
        });
    }
    InvolutionReport {
        involution: InvolutionName::SigmaEven,
        max_n,
        checked,
        exceptional,
        violations: rec.violations,
        path_stats: None,
    }
}
