use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A family of 3-element subsets of X_n = {1..n} intended to cover every
/// pair {i,j}.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverDesign {
    pub n: usize,
    pub triples: Vec<[u8; 3]>,
}

impl CoverDesign {
    pub fn size(&self) -> usize {
        self.triples.len()
    }

    /// Every pair {i,j} ⊆ {1..n} lies in some triple.
    pub fn covers_all_edges(&self) -> bool {
        for i in 1..=self.n as u8 {
            for j in i + 1..=self.n as u8 {
                let hit = self
                    .triples
                    .iter()
                    .any(|t| t.contains(&i) && t.contains(&j));
                if !hit {
                    return false;
                }
            }
        }
        true
    }
}

fn triple(a: u8, b: u8, c: u8) -> [u8; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Inductive edge cover: F(2k+1) ≤ k², F(2k) ≤ k²−1, hence size ≤ (n²−4)/4.
/// Odd step n=2k+1 → 2k+3 adds {2k+3, 2i−1, 2i} for i=1..k+1 and
/// {2k+2, 2i−1, 2i} for i=1..k; even step n=2k → 2k+2 adds
/// {2k+2, 2i−1, 2i} for i=1..k, {2k+2, 2k+1, 2k}, and {2k+1, 2i−1, 2i}
/// for i=1..k.
pub fn cover_design(n: usize) -> Result<CoverDesign> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("cover design needs n ≥ 3, got {}", n)));
    }
    let mut triples: Vec<[u8; 3]>;
    let mut cur;
    if n % 2 == 1 {
        triples = vec![triple(1, 2, 3)];
        cur = 3;
    } else {
        triples = vec![triple(1, 2, 3), triple(1, 3, 4), triple(2, 3, 4)];
        cur = 4;
    }
    while cur < n {
        if cur % 2 == 1 {
            // 2k+1 → 2k+3
            let k = (cur - 1) / 2;
            let new = (cur + 2) as u8;
            for i in 1..=k + 1 {
                triples.push(triple(new, (2 * i - 1) as u8, (2 * i) as u8));
            }
            let mid = (cur + 1) as u8; // 2k+2
            for i in 1..=k {
                triples.push(triple(mid, (2 * i - 1) as u8, (2 * i) as u8));
            }
        } else {
            // 2k → 2k+2, with cur = 2k
            let k = cur / 2;
            let new = (cur + 2) as u8;
            for i in 1..=k {
                triples.push(triple(new, (2 * i - 1) as u8, (2 * i) as u8));
            }
            triples.push(triple(new, (2 * k + 1) as u8, (2 * k) as u8));
            let odd = (cur + 1) as u8;
            for i in 1..=k {
                triples.push(triple(odd, (2 * i - 1) as u8, (2 * i) as u8));
            }
        }
        cur += 2;
    }
    Ok(CoverDesign { n, triples })
}

/// True minimum cover size by branch and bound; desk scale only (n ≤ 7).
pub fn exact_min_cover(n: usize) -> Result<usize> {
    if !(3..=7).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "exact minimum cover is searched only for 3 ≤ n ≤ 7, got {}",
            n
        )));
    }
    // Pairs as bit positions; each triple covers three pairs.
    let pair_idx = |i: usize, j: usize| -> usize {
        // i < j, 1-based
        (j - 2) * (j - 1) / 2 + (i - 1)
    };
    let num_pairs = n * (n - 1) / 2;
    let full: u64 = (1u64 << num_pairs) - 1;
    let mut triples: Vec<u64> = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                triples.push(
                    (1u64 << pair_idx(a, b)) | (1u64 << pair_idx(a, c)) | (1u64 << pair_idx(b, c)),
                );
            }
        }
    }
    let upper = (n * n - 4) / 4 + 1;
    fn search(covered: u64, full: u64, triples: &[u64], depth: usize, best: &mut usize) {
        if covered == full {
            *best = (*best).min(depth);
            return;
        }
        if depth + 1 >= *best {
            return;
        }
        // Branch on the first uncovered pair: some chosen triple must cover it.
        let missing = (!covered & full).trailing_zeros();
        for t in triples {
            if t >> missing & 1 == 1 {
                search(covered | t, full, triples, depth + 1, best);
            }
        }
    }
    let mut best = upper;
    search(0, full, &triples, 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(exact_min_cover(3).unwrap(), 1);
        assert_eq!(exact_min_cover(4).unwrap(), 3);
        assert_eq!(exact_min_cover(5).unwrap(), 4);
        assert!(exact_min_cover(8).is_err());
    }

    #[test]
    fn inductive_designs_cover_and_respect_bound() {
        for n in 3..=40 {
            let d = cover_design(n).unwrap();
            assert!(d.covers_all_edges(), "n={} not covered", n);
            assert!(
                4 * d.size() <= n * n - 4,
                "n={}: size {} exceeds (n²−4)/4",
                n,
                d.size()
            );
            for t in &d.triples {
                assert!(t[0] < t[1] && t[1] < t[2] && t[2] as usize <= n);
            }
        }
        assert_eq!(cover_design(3).unwrap().triples, vec![[1, 2, 3]]);
        assert_eq!(cover_design(4).unwrap().size(), 3);
        assert_eq!(cover_design(5).unwrap().size(), 4);
    }

    #[test]
    fn inductive_design_is_tight_where_minimum_known() {
        for n in 3..=7 {
            let d = cover_design(n).unwrap();
            let min = exact_min_cover(n).unwrap();
            assert!(d.size() >= min);
        }
    }
}
