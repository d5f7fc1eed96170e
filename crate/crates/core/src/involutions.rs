//! Sign-reversing pairings on partition classes.
//!
//! * [`franklin`]: Franklin's involution on partitions into distinct parts.
//! * [`sigma_odd`]: conjugation of odd-restricted 2/1 diagrams.
//! * [`right_neighbour`] / [`left_neighbour`] / [`neighbour_path`]: the path
//!   structure on ordinary partitions, which has no single involution.
//! * [`sigma_even`]: last-row / last-column exchange on even-restricted
//!   diagrams.
//!
//! Each pairing leaves a small set of exceptional partitions unpaired, see
//! [`classify_exceptional`].

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::diagrams::{self, Diagram, DiagramError, DiagramStyle};
use crate::identities::CaseId;
use crate::partitions::{Partition, PartitionFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("{partition} is exceptional ({kind})")]
    Exceptional { partition: String, kind: ExceptionalKind },
    #[error("{partition} is not in family {family}")]
    NotInFamily { partition: String, family: PartitionFamily },
    #[error("{0}")]
    Guard(String),
    #[error("case {0} has no exceptional set")]
    NoExceptionalSet(CaseId),
    #[error("move on {partition} does not produce a valid result: {reason}")]
    Undefined { partition: String, reason: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// The unpaired partitions of cases iv, v and vi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "r", rename_all = "kebab-case")]
pub enum ExceptionalKind {
    Empty,
    /// `(2r-1, 2r-2, ..., r)`
    PentagonalA(u32),
    /// `(2r, 2r-1, ..., r+1)`
    PentagonalB(u32),
    /// `(r^r)`
    Square(u32),
    /// `((2s-1)^s)`
    StaircaseOdd(u32),
    /// `((2s+1)^s)`
    StaircaseEven(u32),
}

impl ExceptionalKind {
    pub fn partition(&self) -> Partition {
        let parts = match *self {
            ExceptionalKind::Empty => Vec::new(),
            ExceptionalKind::PentagonalA(r) => (r..=2 * r - 1).rev().collect(),
            ExceptionalKind::PentagonalB(r) => (r + 1..=2 * r).rev().collect(),
            ExceptionalKind::Square(r) => vec![r; r as usize],
            ExceptionalKind::StaircaseOdd(s) => vec![2 * s - 1; s as usize],
            ExceptionalKind::StaircaseEven(s) => vec![2 * s + 1; s as usize],
        };
        Partition::from_vec_unchecked(parts)
    }

    /// The number partitioned, from the closed forms.
    pub fn size(&self) -> u64 {
        match *self {
            ExceptionalKind::Empty => 0,
            ExceptionalKind::PentagonalA(r) => r as u64 * (3 * r as u64 - 1) / 2,
            ExceptionalKind::PentagonalB(r) => r as u64 * (3 * r as u64 + 1) / 2,
            ExceptionalKind::Square(r) => r as u64 * r as u64,
            ExceptionalKind::StaircaseOdd(s) => s as u64 * (2 * s as u64 - 1),
            ExceptionalKind::StaircaseEven(s) => s as u64 * (2 * s as u64 + 1),
        }
    }
}

impl fmt::Display for ExceptionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionalKind::Empty => f.write_str("empty"),
            ExceptionalKind::PentagonalA(r) => write!(f, "pentagonal-a({})", r),
            ExceptionalKind::PentagonalB(r) => write!(f, "pentagonal-b({})", r),
            ExceptionalKind::Square(r) => write!(f, "square({})", r),
            ExceptionalKind::StaircaseOdd(s) => write!(f, "staircase-odd({})", s),
            ExceptionalKind::StaircaseEven(s) => write!(f, "staircase-even({})", s),
        }
    }
}

/// The partition family each pairing acts on.
pub fn pairing_family(case: CaseId) -> Option<PartitionFamily> {
    match case {
        CaseId::Iv => Some(PartitionFamily::Distinct),
        CaseId::V => Some(PartitionFamily::All),
        CaseId::Vi => Some(PartitionFamily::NoRepeatedEven),
        _ => None,
    }
}

fn require_family(lambda: &Partition, family: PartitionFamily) -> Result<(), InvolutionError> {
    if family.contains(lambda) {
        Ok(())
    } else {
        Err(InvolutionError::NotInFamily {
            partition: lambda.to_string(),
            family,
        })
    }
}

/// All parts equal; returns `(value, count)`.
fn constant_parts(lambda: &Partition) -> Option<(u32, u32)> {
    let mut runs = lambda.runs();
    let (v, m) = runs.next()?;
    runs.next().is_none().then_some((v, m as u32))
}

/// Length of the initial run `λ_t = λ_1 + 1 - t`.
fn staircase_run(lambda: &Partition) -> usize {
    let top = lambda.largest();
    lambda
        .parts()
        .iter()
        .enumerate()
        .take_while(|&(i, &p)| p as usize + i == top as usize)
        .count()
}

/// The exceptional kind of `lambda` for the pairing of `case` (iv, v or vi).
pub fn classify_exceptional(lambda: &Partition, case: CaseId) -> Result<Option<ExceptionalKind>, InvolutionError> {
    let family = pairing_family(case).ok_or(InvolutionError::NoExceptionalSet(case))?;
    require_family(lambda, family)?;
    if lambda.is_empty() {
        return Ok(Some(ExceptionalKind::Empty));
    }
    let kind = match case {
        CaseId::Iv => {
            let r = lambda.len() as u32;
            if staircase_run(lambda) != lambda.len() {
                None
            } else if lambda.largest() == 2 * r - 1 {
                Some(ExceptionalKind::PentagonalA(r))
            } else if lambda.largest() == 2 * r {
                Some(ExceptionalKind::PentagonalB(r))
            } else {
                None
            }
        }
        CaseId::V => constant_parts(lambda)
            .filter(|&(v, m)| v == m)
            .map(|(v, _)| ExceptionalKind::Square(v)),
        CaseId::Vi => constant_parts(lambda).and_then(|(v, s)| {
            if v == 2 * s - 1 {
                Some(ExceptionalKind::StaircaseOdd(s))
            } else if v == 2 * s + 1 {
                Some(ExceptionalKind::StaircaseEven(s))
            } else {
                None
            }
        }),
        _ => unreachable!(),
    };
    Ok(kind)
}

/// Exceptional partitions of the pairing for `case` with size at most
/// `max_size`, by closed form.
pub fn exceptional_up_to(case: CaseId, max_size: u64) -> Result<Vec<ExceptionalKind>, InvolutionError> {
    let makers: &[fn(u32) -> ExceptionalKind] = match case {
        CaseId::Iv => &[ExceptionalKind::PentagonalA, ExceptionalKind::PentagonalB],
        CaseId::V => &[ExceptionalKind::Square],
        CaseId::Vi => &[ExceptionalKind::StaircaseOdd, ExceptionalKind::StaircaseEven],
        _ => return Err(InvolutionError::NoExceptionalSet(case)),
    };
    let mut out = vec![ExceptionalKind::Empty];
    for make in makers {
        out.extend((1..).map(make).take_while(|k| k.size() <= max_size));
    }
    Ok(out)
}

fn reject_exceptional(lambda: &Partition, case: CaseId) -> Result<(), InvolutionError> {
    match classify_exceptional(lambda, case)? {
        Some(kind) => Err(InvolutionError::Exceptional {
            partition: lambda.to_string(),
            kind,
        }),
        None => Ok(()),
    }
}

fn undefined(lambda: &Partition, reason: impl Into<String>) -> InvolutionError {
    InvolutionError::Undefined {
        partition: lambda.to_string(),
        reason: reason.into(),
    }
}

/// Removes the smallest part and adds 1 to each of the `k` largest of the
/// remaining parts.
fn spread_smallest(lambda: &Partition, k: usize) -> Result<Partition, InvolutionError> {
    let mut parts = lambda.parts().to_vec();
    parts.pop();
    if k > parts.len() {
        return Err(undefined(
            lambda,
            format!("cannot add to {} parts of {}", k, parts.len()),
        ));
    }
    for p in &mut parts[..k] {
        *p += 1;
    }
    Partition::new(parts).map_err(|e| undefined(lambda, e.to_string()))
}

/// Subtracts 1 from each of the `k` largest parts and appends a part `k`.
fn gather_into_new_part(lambda: &Partition, k: usize) -> Result<Partition, InvolutionError> {
    let mut parts = lambda.parts().to_vec();
    if k == 0 || k > parts.len() {
        return Err(undefined(
            lambda,
            format!("cannot take from {} parts of {}", k, parts.len()),
        ));
    }
    for p in &mut parts[..k] {
        *p -= 1;
    }
    parts.retain(|&p| p > 0);
    parts.push(k as u32);
    Partition::new(parts).map_err(|e| undefined(lambda, e.to_string()))
}

/// Franklin's involution on non-exceptional partitions into distinct parts.
pub fn franklin(lambda: &Partition) -> Result<Partition, InvolutionError> {
    reject_exceptional(lambda, CaseId::Iv)?;
    let s = lambda.smallest() as usize;
    let t = staircase_run(lambda);
    if s <= t {
        spread_smallest(lambda, s)
    } else {
        gather_into_new_part(lambda, t)
    }
}

/// Conjugation of the odd-restricted diagram; defined on every partition
/// with no repeated odd part.
pub fn sigma_odd(lambda: &Partition) -> Result<Partition, InvolutionError> {
    let d = diagrams::to_odd_diagram(lambda)?;
    Ok(diagrams::conjugate_diagram(&d)?.to_partition())
}

/// Number of parts equal to the largest part.
pub fn top_multiplicity(lambda: &Partition) -> usize {
    lambda.runs().next().map_or(0, |(_, m)| m)
}

/// Defined when the smallest part is at most the multiplicity of the
/// largest part.
pub fn right_neighbour(lambda: &Partition) -> Result<Partition, InvolutionError> {
    reject_exceptional(lambda, CaseId::V)?;
    let s = lambda.smallest() as usize;
    let s_top = top_multiplicity(lambda);
    if s > s_top {
        return Err(InvolutionError::Guard(format!(
            "right neighbour of {} needs smallest part {} <= {}",
            lambda, s, s_top
        )));
    }
    spread_smallest(lambda, s)
}

/// Defined when the smallest part is at least the multiplicity of the
/// largest part.
pub fn left_neighbour(lambda: &Partition) -> Result<Partition, InvolutionError> {
    reject_exceptional(lambda, CaseId::V)?;
    let s = lambda.smallest() as usize;
    let s_top = top_multiplicity(lambda);
    if s < s_top {
        return Err(InvolutionError::Guard(format!(
            "left neighbour of {} needs smallest part {} >= {}",
            lambda, s, s_top
        )));
    }
    gather_into_new_part(lambda, s_top)
}

/// Both neighbours of a non-exceptional partition, `(left, right)`.
pub fn neighbours(lambda: &Partition) -> Result<(Option<Partition>, Option<Partition>), InvolutionError> {
    reject_exceptional(lambda, CaseId::V)?;
    let s = lambda.smallest() as usize;
    let s_top = top_multiplicity(lambda);
    let left = if s >= s_top {
        Some(left_neighbour(lambda)?)
    } else {
        None
    };
    let right = if s <= s_top {
        Some(right_neighbour(lambda)?)
    } else {
        None
    };
    Ok((left, right))
}

/// The maximal neighbour path through `lambda`, ordered left to right
/// (the number of parts decreases along it).
pub fn neighbour_path(lambda: &Partition) -> Result<Vec<Partition>, InvolutionError> {
    let mut start = lambda.clone();
    while let (Some(left), _) = neighbours(&start)? {
        start = left;
    }
    let mut path = vec![start];
    while let (_, Some(right)) = neighbours(path.last().unwrap())? {
        path.push(right);
    }
    Ok(path)
}

/// The last-row / last-column exchange on non-exceptional partitions with no
/// repeated even part.
pub fn sigma_even(lambda: &Partition) -> Result<Partition, InvolutionError> {
    reject_exceptional(lambda, CaseId::Vi)?;
    let d = diagrams::to_even_diagram(lambda)?;
    let s = lambda.smallest();
    let s_col = d.last_column_sum()?;
    let mut rows = d.rows().to_vec();
    if s < s_col || (s == s_col && s.is_multiple_of(2)) {
        // move the last row into a new final column
        rows.pop();
        let col = d.column_count();
        let height = s.div_ceil(2) as usize;
        if height > rows.len() || rows[..height].iter().any(|r| r.len() != col) {
            return Err(undefined(lambda, format!("no room for a column of sum {}", s)));
        }
        for r in &mut rows[..height] {
            r.push(2);
        }
        if s % 2 == 1 {
            *rows[height - 1].last_mut().unwrap() = 1;
        }
    } else {
        // move the last column into a new final row
        let col = d.column_count();
        for r in rows.iter_mut().filter(|r| r.len() == col) {
            r.pop();
        }
        rows.push(diagrams::row_for(DiagramStyle::EvenRestricted, s_col));
    }
    let out = Diagram::new(DiagramStyle::EvenRestricted, rows).map_err(|e| undefined(lambda, e.to_string()))?;
    Ok(out.to_partition())
}
