use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use super::partition::Partition;

/// Skew shape λ/μ with μ ⊆ λ.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidPartition(format!(
                "{} does not contain {}",
                outer, inner
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of skew cells.
    pub fn cells(&self) -> usize {
        self.outer.n() - self.inner.n()
    }

    /// Standard fillings with 1..cells, strictly increasing along rows and
    /// down columns. Each filling lists the skew cells of each row, left to
    /// right (inner cells omitted).
    pub fn standard_fillings(&self) -> Vec<Vec<Vec<u8>>> {
        let s = self.outer.len();
        let total = self.cells();
        let mut grid: Vec<Vec<u8>> = (0..s)
            .map(|r| vec![0u8; self.outer.part(r)])
            .collect();
        // next unfilled skew column per row
        let mut fill: Vec<usize> = (0..s).map(|r| self.inner.part(r)).collect();
        let mut out = Vec::new();
        self.rec(0, total, &mut grid, &mut fill, &mut out);
        out
    }

    fn rec(
        &self,
        placed: usize,
        total: usize,
        grid: &mut Vec<Vec<u8>>,
        fill: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if placed == total {
            out.push(
                (0..self.outer.len())
                    .map(|r| grid[r][self.inner.part(r)..].to_vec())
                    .collect(),
            );
            return;
        }
        for r in 0..self.outer.len() {
            let c = fill[r];
            if c >= self.outer.part(r) {
                continue;
            }
            // Upper neighbor constrains only if it is itself a skew cell.
            if r > 0 && c >= self.inner.part(r - 1) {
                if c >= self.outer.part(r - 1) || grid[r - 1][c] == 0 {
                    continue;
                }
            }
            grid[r][c] = placed as u8 + 1;
            fill[r] += 1;
            self.rec(placed + 1, total, grid, fill, out);
            fill[r] -= 1;
            grid[r][c] = 0;
        }
    }

    /// ♯S^st_{λ/μ}, by enumeration.
    pub fn standard_count(&self) -> u64 {
        // Same recursion as standard_fillings, counting only.
        fn count(shape: &SkewShape, placed: usize, total: usize, fill: &mut Vec<usize>) -> u64 {
            if placed == total {
                return 1;
            }
            let mut acc = 0;
            for r in 0..shape.outer.len() {
                let c = fill[r];
                if c >= shape.outer.part(r) {
                    continue;
                }
                if r > 0 && c >= shape.inner.part(r - 1) && fill[r - 1] <= c {
                    continue;
                }
                fill[r] += 1;
                acc += count(shape, placed + 1, total, fill);
                fill[r] -= 1;
            }
            acc
        }
        let mut fill: Vec<usize> = (0..self.outer.len())
            .map(|r| self.inner.part(r))
            .collect();
        count(self, 0, self.cells(), &mut fill)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
