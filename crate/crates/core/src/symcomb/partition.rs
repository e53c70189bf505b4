use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition λ = (m_1 ≥ m_2 ≥ … ≥ m_s ≥ 1) of n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {:?}",
                parts
            )));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("zero part in {:?}", parts)));
        }
        Ok(Partition { parts })
    }

    /// Empty partition; valid only as a skew inner shape.
    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts s.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// ᵗλ: transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Column lengths (= parts of ᵗλ), one per column of the diagram.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().parts
    }

    /// μ ⊆ λ cell-wise.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &m)| m <= self.part(i))
    }

    /// Hook length of cell (r, c), 0-based.
    pub fn hook_length(&self, r: usize, c: usize) -> usize {
        let arm = self.part(r) - c - 1;
        let leg = self.parts.iter().skip(r + 1).filter(|&&p| p > c).count();
        arm + leg + 1
    }

    /// d(λ) = n! / Π hooks, the number of standard tableaux.
    pub fn hook_dimension(&self) -> u64 {
        let n = self.n();
        let mut num = BigUint::one();
        for k in 1..=n {
            num *= BigUint::from(k);
        }
        let mut den = BigUint::one();
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                den *= BigUint::from(self.hook_length(r, c));
            }
        }
        (num / den)
            .to_u64()
            .expect("hook dimension exceeds u64 range")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {:?}", t)))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// All partitions of n in reverse-lexicographic order, (n) first, (1ⁿ) last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for k in 1..=n {
        f *= BigUint::from(k);
    }
    f
}

/// d(m1, m2) = (m1+m2)! (m1−m2+1) / ((m1+1)! m2!)
pub fn dim_two_row(m1: usize, m2: usize) -> Result<u64> {
    if m1 < m2 || m2 == 0 {
        return Err(Error::InvalidPartition(format!(
            "two-row shape needs m1 ≥ m2 ≥ 1, got ({}, {})",
            m1, m2
        )));
    }
    let num = factorial(m1 + m2) * BigUint::from(m1 - m2 + 1);
    let den = factorial(m1 + 1) * factorial(m2);
    Ok((num / den).to_u64().expect("dim_two_row exceeds u64"))
}

/// d(m1, m2, m3) =
/// (m1+m2+m3)! (m1−m2+1)(m1−m3+2)(m2−m3+1) / ((m1+2)! (m2+1)! m3!)
pub fn dim_three_row(m1: usize, m2: usize, m3: usize) -> Result<u64> {
    if m1 < m2 || m2 < m3 || m3 == 0 {
        return Err(Error::InvalidPartition(format!(
            "three-row shape needs m1 ≥ m2 ≥ m3 ≥ 1, got ({}, {}, {})",
            m1, m2, m3
        )));
    }
    let num = factorial(m1 + m2 + m3)
        * BigUint::from(m1 - m2 + 1)
        * BigUint::from(m1 - m3 + 2)
        * BigUint::from(m2 - m3 + 1);
    let den = factorial(m1 + 2) * factorial(m2 + 1) * factorial(m3);
    Ok((num / den).to_u64().expect("dim_three_row exceeds u64"))
}

/// Cycle type of a permutation in S_n: a partition of n listing cycle lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// Size of the conjugacy class: n! / z where z = Π ℓ^{mult} mult!.
    pub fn class_size(&self) -> u64 {
        let n = self.0.n();
        let mut z = BigUint::one();
        let mut i = 0;
        let parts = self.0.parts();
        while i < parts.len() {
            let len = parts[i];
            let mut mult = 0usize;
            while i < parts.len() && parts[i] == len {
                mult += 1;
                i += 1;
            }
            for _ in 0..mult {
                z *= BigUint::from(len);
            }
            z *= factorial(mult);
        }
        (factorial(n) / z).to_u64().expect("class size exceeds u64")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert_eq!(p("2,2,1").conjugate(), p("3,2"));
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
        for n in 1..=8 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn hook_dimensions() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(p("2,2").hook_dimension(), 2);
        assert_eq!(p("3,3,3").hook_dimension(), 42);
        assert_eq!(p("4,4,2").hook_dimension(), 252);
        assert_eq!(p("7").hook_dimension(), 1);
        assert_eq!(p("2,1").hook_dimension(), 2);
    }

    #[test]
    fn wedderburn_small() {
        for n in 1..=8 {
            let total: u128 = partitions_of(n)
                .iter()
                .map(|l| {
                    let d = l.hook_dimension() as u128;
                    d * d
                })
                .sum();
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(dim_two_row(2, 1).unwrap(), 2);
        assert_eq!(dim_three_row(4, 4, 4).unwrap(), 462);
        for n in 5..=12 {
            // d(n−2, 2) = n(n−3)/2
            assert_eq!(dim_two_row(n - 2, 2).unwrap() as usize, n * (n - 3) / 2);
        }
    }

    #[test]
    fn class_sizes_s3() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(CycleType(p("1,1,1")).class_size(), 1);
        assert_eq!(CycleType(p("2,1")).class_size(), 3);
        assert_eq!(CycleType(p("3")).class_size(), 2);
    }

    #[test]
    fn parse_roundtrip() {
        let p: Partition = "4,4,2".parse().unwrap();
        assert_eq!(p.to_string(), "4,4,2");
        assert!("4,5".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }
}
