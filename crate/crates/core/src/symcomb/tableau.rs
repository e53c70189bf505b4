use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use super::partition::Partition;
use super::permutation::Permutation;

/// Filling of the Young diagram of a shape with distinct positive integers,
/// stored row by row. Entries are usually {1..n} but any distinct set is
/// allowed (Def "standard with respect to S").
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Partition::new(lens)
            .map_err(|_| Error::InvalidPartition(format!("row lengths of {:?}", rows)))?;
        let mut entries: Vec<u8> = rows.iter().flatten().copied().collect();
        let count = entries.len();
        entries.sort_unstable();
        entries.dedup();
        if entries.len() != count || entries.iter().any(|&e| e == 0) {
            return Err(Error::Parse(format!(
                "tableau entries must be distinct positive integers: {:?}",
                rows
            )));
        }
        Ok(Tableau { rows })
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("valid by construction")
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> u8 {
        self.rows[r][c]
    }

    /// Sorted entry list.
    pub fn entries(&self) -> Vec<u8> {
        let mut e: Vec<u8> = self.rows.iter().flatten().copied().collect();
        e.sort_unstable();
        e
    }

    /// Column c, top to bottom.
    pub fn column(&self, c: usize) -> Vec<u8> {
        self.rows
            .iter()
            .filter_map(|r| r.get(c).copied())
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<u8>> {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width).map(|c| self.column(c)).collect()
    }

    pub fn from_columns(cols: &[Vec<u8>]) -> Tableau {
        let height = cols.iter().map(|c| c.len()).max().unwrap_or(0);
        let rows = (0..height)
            .map(|r| cols.iter().filter_map(|c| c.get(r).copied()).collect())
            .collect();
        Tableau { rows }
    }

    /// Strictly increasing along rows and down columns.
    pub fn is_standard(&self) -> bool {
        for (ri, row) in self.rows.iter().enumerate() {
            for (ci, &v) in row.iter().enumerate() {
                if ci + 1 < row.len() && row[ci + 1] <= v {
                    return false;
                }
                if ri + 1 < self.rows.len() {
                    if let Some(&below) = self.rows[ri + 1].get(ci) {
                        if below <= v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Entries read down columns, left to right. Standard basis order sorts
    /// by this word.
    pub fn column_word(&self) -> Vec<u8> {
        self.columns().into_iter().flatten().collect()
    }

    /// Apply σ to every entry (entries must lie in {1..n(σ)}).
    pub fn relabel(&self, sigma: &Permutation) -> Tableau {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| sigma.apply(v)).collect())
                .collect(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", v)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Parses row-list syntax, e.g. "[[1,3,5],[2,4]]".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("tableau must look like [[..],[..]]: {:?}", s)))?;
        let rows: Vec<Vec<u8>> = inner
            .split("],[")
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u8>()
                            .map_err(|_| Error::Parse(format!("bad tableau entry {:?}", t)))
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<_>>()?;
        Tableau::new(rows)
    }
}

/// All tableaux of shape λ with entry set S that are strictly increasing in
/// rows and columns; |result| = hook_dimension(λ) for any S. Output sorted by
/// column-reading word.
pub fn standard_tableaux(shape: &Partition, entries: &[u8]) -> Result<Vec<Tableau>> {
    let n = shape.n();
    if entries.len() != n {
        return Err(Error::SizeMismatch(format!(
            "shape {} has {} cells but {} entries supplied",
            shape,
            n,
            entries.len()
        )));
    }
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != n {
        return Err(Error::SizeMismatch("duplicate entries in S".into()));
    }

    // Place values smallest to largest; each goes in any cell whose left and
    // upper neighbors are already filled (depth-first).
    let mut rows: Vec<Vec<u8>> = shape.parts().iter().map(|&l| vec![0u8; l]).collect();
    let mut fill = vec![0usize; shape.len()]; // cells filled per row
    let mut out = Vec::new();
    fn rec(
        vi: usize,
        vals: &[u8],
        shape: &Partition,
        rows: &mut Vec<Vec<u8>>,
        fill: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if vi == vals.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let c = fill[r];
            if c < shape.part(r) && (r == 0 || fill[r - 1] > c) {
                rows[r][c] = vals[vi];
                fill[r] += 1;
                rec(vi + 1, vals, shape, rows, fill, out);
                fill[r] -= 1;
            }
        }
    }
    rec(0, &sorted, shape, &mut rows, &mut fill, &mut out);
    out.sort_by_key(|t| t.column_word());
    Ok(out)
}
