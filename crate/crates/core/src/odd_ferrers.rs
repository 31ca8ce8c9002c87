//! Odd Ferrers graphs: a Ferrers shape whose top-left cell holds 0, the rest
//! of the first row and first column hold 1, and every other cell holds 2.
//!
//! A graph is identified with its shape. Statistics come from closed forms;
//! the filled grid is only built on request for display.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Partition", into = "Partition")]
pub struct OddFerrersGraph {
    shape: Partition,
}

impl OddFerrersGraph {
    pub fn from_shape(shape: Partition) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if shape.has_zero() {
            return Err(Error::ZeroPart {
                op: "odd Ferrers graph",
                input: shape.to_string(),
            });
        }
        Ok(Self { shape })
    }

    /// The one-row graph `F_(k)`, of size `k − 1`.
    pub fn single_row(cols: u32) -> Result<Self> {
        Self::from_shape(Partition::single(cols))
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> usize {
        self.shape.len()
    }

    pub fn cols(&self) -> u32 {
        self.shape.parts()[0]
    }

    /// `2|λ| − λ₁ − ℓ(λ)`: every cell counts 2, minus one per first-row and
    /// first-column cell.
    pub fn size(&self) -> u64 {
        2 * self.shape.size() - u64::from(self.cols()) - self.rows() as u64
    }

    /// Number of cells labelled 1: `λ₁ + ℓ(λ) − 2`.
    pub fn sharp(&self) -> u64 {
        u64::from(self.cols()) + self.rows() as u64 - 2
    }

    pub fn is_distinct(&self) -> bool {
        self.shape.is_distinct()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            shape: self
                .shape
                .conjugate()
                .expect("graph shapes are nonempty with positive parts"),
        }
    }

    /// Label of the cell in row `r`, column `c` (both 0-based).
    pub fn label(&self, r: usize, c: usize) -> Option<u8> {
        let row_len = *self.shape.parts().get(r)? as usize;
        if c >= row_len {
            return None;
        }
        Some(match (r, c) {
            (0, 0) => 0,
            (0, _) | (_, 0) => 1,
            _ => 2,
        })
    }

    pub fn grid(&self) -> Vec<Vec<u8>> {
        self.shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                (0..len as usize)
                    .map(|c| self.label(r, c).unwrap())
                    .collect()
            })
            .collect()
    }

    pub fn cell_sum(&self) -> u64 {
        self.grid().iter().flatten().map(|&v| u64::from(v)).sum()
    }

    /// Rows of space-separated labels, one line per row.
    pub fn render(&self) -> String {
        self.grid()
            .iter()
            .map(|row| row.iter().map(u8::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl TryFrom<Partition> for OddFerrersGraph {
    type Error = Error;

    fn try_from(shape: Partition) -> Result<Self> {
        Self::from_shape(shape)
    }
}

impl From<OddFerrersGraph> for Partition {
    fn from(g: OddFerrersGraph) -> Self {
        g.shape
    }
}

impl fmt::Display for OddFerrersGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.shape)
    }
}
