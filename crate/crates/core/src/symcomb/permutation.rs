use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use super::partition::{partitions_of, CycleType, Partition};

/// Permutation of {1..n}, stored as the one-line image array:
/// `images[i-1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::Parse(format!("not a permutation: {:?}", images)));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, v: u8) -> u8 {
        self.images[v as usize - 1]
    }

    /// (self ∘ other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.n()];
        let mut sign = 1i64;
        for i in 0..self.n() {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut seen = vec![false; self.n()];
        let mut lens = Vec::new();
        for i in 0..self.n() {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize - 1;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(Partition::new(lens).expect("cycle lengths form a partition"))
    }

    /// Adjacent transposition s_i = (i, i+1), 1 ≤ i ≤ n−1.
    pub fn adjacent_transposition(n: usize, i: usize) -> Permutation {
        assert!(1 <= i && i < n);
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Permutation at position `idx` (0-based) in lexicographic one-line
    /// order of S_n, via the factorial number system.
    pub fn from_lex_index(n: usize, mut idx: u64) -> Permutation {
        let mut fact = vec![1u64; n];
        for i in 1..n {
            fact[i] = fact[i - 1] * i as u64;
        }
        let mut avail: Vec<u8> = (1..=n as u8).collect();
        let mut images = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = fact[i];
            let pos = (idx / f) as usize;
            idx %= f;
            images.push(avail.remove(pos));
        }
        Permutation { images }
    }

    pub fn lex_index(&self) -> u64 {
        let n = self.n();
        let mut fact = vec![1u64; n];
        for i in 1..n {
            fact[i] = fact[i - 1] * i as u64;
        }
        let mut avail: Vec<u8> = (1..=n as u8).collect();
        let mut idx = 0u64;
        for (i, &v) in self.images.iter().enumerate() {
            let pos = avail.iter().position(|&a| a == v).unwrap();
            idx += pos as u64 * fact[n - 1 - i];
            avail.remove(pos);
        }
        idx
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images: Vec<u8> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {:?}", t)))
            })
            .collect::<Result<_>>()?;
        Permutation::new(images)
    }
}

/// One conjugacy class of S_n.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub cycle_type: CycleType,
    pub representative: Permutation,
    pub size: u64,
}

/// Canonical representative of a cycle type: cycles laid out on {1..n} in
/// increasing blocks, e.g. type (3,2) on n=5 → (1 2 3)(4 5) = [2,3,1,5,4].
pub fn class_representative(ct: &CycleType) -> Permutation {
    let n = ct.n();
    let mut images: Vec<u8> = (1..=n as u8).collect();
    let mut start = 0usize;
    for &len in ct.partition().parts() {
        for k in 0..len {
            images[start + k] = (start + (k + 1) % len) as u8 + 1;
        }
        start += len;
    }
    Permutation { images }
}

/// All conjugacy classes of S_n, indexed canonically by `partitions_of(n)`.
pub fn conjugacy_classes(n: usize) -> Vec<ConjClass> {
    partitions_of(n)
        .into_iter()
        .map(|p| {
            let ct = CycleType(p);
            let representative = class_representative(&ct);
            let size = ct.class_size();
            ConjClass {
                cycle_type: ct,
                representative,
                size,
            }
        })
        .collect()
}

/// Cycle type of σ^k: each ℓ-cycle splits into gcd(ℓ,k) cycles of length
/// ℓ/gcd(ℓ,k).
pub fn power_cycle_type(ct: &CycleType, k: usize) -> CycleType {
    let mut lens = Vec::new();
    for &len in ct.partition().parts() {
        let g = num_integer::gcd(len, k);
        for _ in 0..g {
            lens.push(len / g);
        }
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    CycleType(Partition::new(lens).expect("power cycle type is a partition"))
}
