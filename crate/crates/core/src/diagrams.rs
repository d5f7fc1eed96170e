//! Ferrers diagrams filled with 2s and 1s.
//!
//! In the odd-restricted style (partitions with no repeated odd part) a part
//! `2k` is a row of `k` 2s and a part `2k+1` is `k` 2s followed by a 1. In the
//! even-restricted style (no repeated even part) every row starts with a 1:
//! `2k+1` is a 1 followed by `k` 2s and `2k` is a 1, then `k-1` 2s, then a 1.
//!
//! Outside the first column of the even style a 1 may only occupy an extreme
//! box, one that ends its row and has no box below it.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{Partition, PartitionFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("{0} is not in the {1} family")]
    NotInFamily(String, DiagramStyle),
    #[error("cell value {value} at ({row}, {col}) is not 1 or 2")]
    BadCell { row: usize, col: usize, value: u8 },
    #[error("row {0} is empty")]
    EmptyRow(usize),
    #[error("row {0} is longer than the row above it")]
    NotFerrers(usize),
    #[error("a 1 at ({row}, {col}) is not in an extreme box")]
    MisplacedOne { row: usize, col: usize },
    #[error("a 2 at ({row}, 0) in an even-restricted diagram")]
    FirstColumnNotOne { row: usize },
    #[error("the empty diagram has no final column")]
    Empty,
    #[error("operation needs a {expected} diagram, got {actual}")]
    WrongStyle {
        expected: DiagramStyle,
        actual: DiagramStyle,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagramStyle {
    OddRestricted,
    EvenRestricted,
}

impl DiagramStyle {
    pub fn family(self) -> PartitionFamily {
        match self {
            DiagramStyle::OddRestricted => PartitionFamily::NoRepeatedOdd,
            DiagramStyle::EvenRestricted => PartitionFamily::NoRepeatedEven,
        }
    }
}

impl fmt::Display for DiagramStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagramStyle::OddRestricted => "odd-restricted",
            DiagramStyle::EvenRestricted => "even-restricted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct Diagram {
    style: DiagramStyle,
    rows: Vec<Vec<u8>>,
}

#[derive(Deserialize)]
struct RawDiagram {
    style: DiagramStyle,
    rows: Vec<Vec<u8>>,
}

impl TryFrom<RawDiagram> for Diagram {
    type Error = DiagramError;

    fn try_from(raw: RawDiagram) -> Result<Self, DiagramError> {
        Diagram::new(raw.style, raw.rows)
    }
}

impl Diagram {
    /// Validates `rows` against the style's invariants.
    pub fn new(style: DiagramStyle, rows: Vec<Vec<u8>>) -> Result<Self, DiagramError> {
        let d = Diagram { style, rows };
        d.validate()?;
        Ok(d)
    }

    pub fn style(&self) -> DiagramStyle {
        self.style
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Height of column `col`.
    pub fn column_height(&self, col: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() > col).count()
    }

    pub fn is_extreme(&self, row: usize, col: usize) -> bool {
        self.rows[row].len() == col + 1 && self.rows.get(row + 1).is_none_or(|below| below.len() <= col)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(DiagramError::EmptyRow(i));
            }
            if i > 0 && row.len() > self.rows[i - 1].len() {
                return Err(DiagramError::NotFerrers(i));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != 1 && v != 2 {
                    return Err(DiagramError::BadCell {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
                let first_col_even = self.style == DiagramStyle::EvenRestricted && j == 0;
                if first_col_even {
                    if v != 1 {
                        return Err(DiagramError::FirstColumnNotOne { row: i });
                    }
                } else if v == 1 && !self.is_extreme(i, j) {
                    return Err(DiagramError::MisplacedOne { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// Row sums, read as a partition.
    pub fn to_partition(&self) -> Partition {
        let parts = self.rows.iter().map(|r| r.iter().map(|&c| c as u32).sum()).collect();
        // a valid diagram always has non-increasing row sums
        Partition::from_vec_unchecked(parts)
    }

    /// Sum of the cells in the rightmost column.
    pub fn last_column_sum(&self) -> Result<u32, DiagramError> {
        let c = self.column_count();
        if c == 0 {
            return Err(DiagramError::Empty);
        }
        Ok(self
            .rows
            .iter()
            .take_while(|r| r.len() == c)
            .map(|r| r[c - 1] as u32)
            .sum())
    }

    /// One row per line, cells separated by a space.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", c)?;
            }
        }
        Ok(())
    }
}

fn odd_row(part: u32) -> Vec<u8> {
    let mut row = vec![2u8; (part / 2) as usize];
    if part % 2 == 1 {
        row.push(1);
    }
    row
}

fn even_row(part: u32) -> Vec<u8> {
    let mut row = vec![1u8];
    if part % 2 == 1 {
        row.extend(std::iter::repeat_n(2, (part / 2) as usize));
    } else {
        row.extend(std::iter::repeat_n(2, (part / 2 - 1) as usize));
        row.push(1);
    }
    row
}

pub(crate) fn row_for(style: DiagramStyle, part: u32) -> Vec<u8> {
    match style {
        DiagramStyle::OddRestricted => odd_row(part),
        DiagramStyle::EvenRestricted => even_row(part),
    }
}

fn to_diagram(lambda: &Partition, style: DiagramStyle) -> Result<Diagram, DiagramError> {
    if !style.family().contains(lambda) {
        return Err(DiagramError::NotInFamily(lambda.to_string(), style));
    }
    let rows = lambda.parts().iter().map(|&p| row_for(style, p)).collect();
    Ok(Diagram { style, rows })
}

fn from_diagram(d: &Diagram, style: DiagramStyle) -> Result<Partition, DiagramError> {
    if d.style != style {
        return Err(DiagramError::WrongStyle {
            expected: style,
            actual: d.style,
        });
    }
    d.validate()?;
    Ok(d.to_partition())
}

pub fn to_odd_diagram(lambda: &Partition) -> Result<Diagram, DiagramError> {
    to_diagram(lambda, DiagramStyle::OddRestricted)
}

pub fn from_odd_diagram(d: &Diagram) -> Result<Partition, DiagramError> {
    from_diagram(d, DiagramStyle::OddRestricted)
}

pub fn to_even_diagram(lambda: &Partition) -> Result<Diagram, DiagramError> {
    to_diagram(lambda, DiagramStyle::EvenRestricted)
}

pub fn from_even_diagram(d: &Diagram) -> Result<Partition, DiagramError> {
    from_diagram(d, DiagramStyle::EvenRestricted)
}

/// Transposes an odd-restricted diagram; cell values travel with their boxes.
pub fn conjugate_diagram(d: &Diagram) -> Result<Diagram, DiagramError> {
    if d.style != DiagramStyle::OddRestricted {
        return Err(DiagramError::WrongStyle {
            expected: DiagramStyle::OddRestricted,
            actual: d.style,
        });
    }
    let rows = (0..d.column_count())
        .map(|col| d.rows.iter().take_while(|r| r.len() > col).map(|r| r[col]).collect())
        .collect();
    Ok(Diagram { style: d.style, rows })
}
