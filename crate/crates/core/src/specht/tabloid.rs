use std::fmt;

use crate::error::{Error, Result};
use crate::symcomb::Tableau;

/// Sign-normalized column tabloid: every column strictly increasing, and
/// among columns of equal length the contents in increasing lexicographic
/// order. f(base)·sign = f(original tableau).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColumnTabloid {
    pub base: Tableau,
    pub sign: i64,
}

impl fmt::Debug for ColumnTabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.sign < 0 { "-" } else { "+" }, self.base)
    }
}

fn sort_counting_parity(v: &mut [u8]) -> i64 {
    // Insertion sort; parity of the number of swaps = sign of the sorting
    // permutation (column lengths here are tiny).
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

/// Sort each column ascending (sign = product of sorting-permutation signs),
/// then sort equal-length column blocks lexicographically (sign-free, since
/// the Specht polynomial is a product over column sets).
pub fn canonicalize(t: &Tableau) -> ColumnTabloid {
    let mut cols = t.columns();
    let mut sign = 1i64;
    for col in cols.iter_mut() {
        sign *= sort_counting_parity(col);
    }
    let mut start = 0;
    while start < cols.len() {
        let len = cols[start].len();
        let mut end = start + 1;
        while end < cols.len() && cols[end].len() == len {
            end += 1;
        }
        cols[start..end].sort();
        start = end;
    }
    ColumnTabloid {
        base: Tableau::from_columns(&cols),
        sign,
    }
}

/// Parity of a sequence of distinct values as a permutation of its sorted
/// order: (−1)^inversions.
fn seq_parity(seq: &[u8]) -> i64 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Garnir move on a canonical tabloid at the column pair (col, col+1) and
/// row `row` (0-based). With t = len(col), s = len(col+1), the combined set
/// is A ∪ B where A = column col entries in rows row..t and B = column col+1
/// entries in rows 0..=row.
#[derive(Clone, Debug)]
pub struct GarnirMove {
    pub tabloid: Tableau,
    pub col: usize,
    pub row: usize,
}

impl GarnirMove {
    pub fn new(tabloid: &Tableau, col: usize, row: usize) -> Result<Self> {
        let cols = tabloid.columns();
        if col + 1 >= cols.len() {
            return Err(Error::OutOfRange(format!(
                "no column pair ({}, {}) in {}",
                col + 1,
                col + 2,
                tabloid
            )));
        }
        if row >= cols[col + 1].len() {
            return Err(Error::OutOfRange(format!(
                "row {} exceeds column {} of {}",
                row + 1,
                col + 2,
                tabloid
            )));
        }
        for c in &cols {
            if c.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(format!(
                    "Garnir move requires sorted columns, got {}",
                    tabloid
                )));
            }
        }
        Ok(GarnirMove {
            tabloid: tabloid.clone(),
            col,
            row,
        })
    }

    /// The Garnir relation f(y) = −Σ_{ν ∈ W(q)∖{1}} (sgn ν) f(νy), with the
    /// coset representatives realized directly as sorted redistributions of
    /// the combined entry set. Each output pair (tabloid, c) contributes
    /// c · tabloid.sign · f(tabloid.base); c = −sgn(ν) ∈ {±1}.
    pub fn expand(&self) -> Vec<(ColumnTabloid, i64)> {
        let cols = self.tabloid.columns();
        let a: Vec<u8> = cols[self.col][self.row..].to_vec();
        let b: Vec<u8> = cols[self.col + 1][..=self.row].to_vec();
        let mut combined: Vec<u8> = a.iter().chain(b.iter()).copied().collect();
        combined.sort_unstable();
        let old_seq: Vec<u8> = a.iter().chain(b.iter()).copied().collect();
        let old_parity = seq_parity(&old_seq);

        let k = a.len();
        let m = combined.len();
        let mut out = Vec::new();
        // Choose which k of the combined entries sit in the column-`col`
        // segment; both segments stay sorted. m ≤ column length + 1, so a
        // bitmask scan is plenty.
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let new_a: Vec<u8> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| combined[i]).collect();
            if new_a == a {
                continue; // identity coset representative, moved to the LHS
            }
            let new_b: Vec<u8> = (0..m).filter(|i| mask >> i & 1 == 0).map(|i| combined[i]).collect();
            let new_seq: Vec<u8> = new_a.iter().chain(new_b.iter()).copied().collect();
            let sgn_nu = old_parity * seq_parity(&new_seq);
            let mut new_cols = cols.clone();
            new_cols[self.col].truncate(self.row);
            new_cols[self.col].extend_from_slice(&new_a);
            new_cols[self.col + 1] = new_b
                .iter()
                .chain(cols[self.col + 1][self.row + 1..].iter())
                .copied()
                .collect();
            let tab = Tableau::from_columns(&new_cols);
            out.push((canonicalize(&tab), -sgn_nu));
        }
        out
    }
}

/// Leftmost violating column pair, then smallest violating row, on a
/// canonical tabloid; None iff standard.
pub fn find_violation(tabloid: &Tableau) -> Option<(usize, usize)> {
    let cols = tabloid.columns();
    for c in 0..cols.len().saturating_sub(1) {
        for q in 0..cols[c + 1].len() {
            if cols[c][q] > cols[c + 1][q] {
                return Some((c, q));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::poly::specht_polynomial;

    #[test]
    fn canonicalize_column_sort_sign() {
        // [[3,2,5],[4,1]] = −[[1,3,5],[2,4]]
        let t: Tableau = "[[3,2,5],[4,1]]".parse().unwrap();
        let ct = canonicalize(&t);
        assert_eq!(ct.sign, -1);
        assert_eq!(ct.base, "[[1,3,5],[2,4]]".parse().unwrap());
        // polynomial identity
        let lhs = specht_polynomial(&t);
        let rhs = specht_polynomial(&ct.base).scale(&(ct.sign).into());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonicalize_fixes_standard() {
        let t: Tableau = "[[1,3,5],[2,4]]".parse().unwrap();
        let ct = canonicalize(&t);
        assert_eq!(ct.sign, 1);
        assert_eq!(ct.base, t);
    }

    #[test]
    fn canonicalize_equal_columns_swap() {
        // Equal-length column swap is sign-free.
        let t: Tableau = "[[3,1],[4,2]]".parse().unwrap();
        let ct = canonicalize(&t);
        assert_eq!(ct.sign, 1);
        assert_eq!(ct.base, "[[1,3],[2,4]]".parse().unwrap());
    }

    #[test]
    fn garnir_worked_identity() {
        // f([[1,3,5],[2,4]]) = f([[1,5,3],[2,4]]) + f([[1,3,4],[2,5]])
        // (q=1 at columns 2,3; 0-based: col=1, row=0).
        let y: Tableau = "[[1,3,5],[2,4]]".parse().unwrap();
        let mv = GarnirMove::new(&y, 1, 0).unwrap();
        let terms = mv.expand();
        assert_eq!(terms.len(), 2);
        // polynomial identity: f(y) = Σ c·sign·f(base)
        let mut rhs = specht_polynomial(&y).scale(&0.into());
        for (ct, c) in &terms {
            rhs = rhs.add(&specht_polynomial(&ct.base).scale(&(c * ct.sign).into()));
        }
        assert_eq!(specht_polynomial(&y), rhs);
        // the two terms are the canonical forms of the displayed tableaux
        let shown1 = canonicalize(&"[[1,5,3],[2,4]]".parse().unwrap());
        let shown2 = canonicalize(&"[[1,3,4],[2,5]]".parse().unwrap());
        for shown in [shown1, shown2] {
            assert!(terms
                .iter()
                .any(|(ct, c)| ct.base == shown.base && c * ct.sign == shown.sign));
        }
    }

    #[test]
    fn garnir_out_of_range() {
        let y: Tableau = "[[1,3,5],[2,4]]".parse().unwrap();
        assert!(GarnirMove::new(&y, 2, 0).is_err());
        assert!(GarnirMove::new(&y, 1, 1).is_err());
        assert!(GarnirMove::new(&y, 0, 1).is_ok());
    }

    #[test]
    fn annihilation_sum() {
        // Σ_{σ ∈ S(q)} sgn(σ) f(σy) = 0 for y = [[1,3,5],[2,4]], q=1 at
        // columns 2,3: S(q) permutes {3,4,5}.
        let y: Tableau = "[[1,3,5],[2,4]]".parse().unwrap();
        let n = 5usize;
        let mut total = specht_polynomial(&y).scale(&0.into());
        let moved = [3u8, 4, 5];
        let perms3 = [
            ([0usize, 1, 2], 1i64),
            ([0, 2, 1], -1),
            ([1, 0, 2], -1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([2, 1, 0], -1),
        ];
        for (img, sgn) in perms3 {
            // σ maps moved[i] → moved[img[i]], fixes everything else
            let mut images: Vec<u8> = (1..=n as u8).collect();
            for (i, &m) in moved.iter().enumerate() {
                images[m as usize - 1] = moved[img[i]];
            }
            let sigma = crate::symcomb::Permutation::new(images).unwrap();
            let sy = y.relabel(&sigma);
            total = total.add(&specht_polynomial(&sy).scale(&sgn.into()));
        }
        assert!(total.is_zero());
    }

    #[test]
    fn find_violation_basics() {
        let std: Tableau = "[[1,3,5],[2,4]]".parse().unwrap();
        assert_eq!(find_violation(&std), None);
        let bad: Tableau = "[[1,4,3],[2,5]]".parse().unwrap();
        assert_eq!(find_violation(&bad), Some((1, 0)));
    }
}
