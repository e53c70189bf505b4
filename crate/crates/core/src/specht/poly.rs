use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::symcomb::Tableau;

/// Sparse multivariate polynomial in x_1..x_n with exact integer
/// coefficients; monomials keyed by exponent vectors. Used as the
/// ground-truth oracle for tabloid identities and straightening.
#[derive(Clone, PartialEq, Eq)]
pub struct SpechtPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl SpechtPolynomial {
    pub fn zero(n: usize) -> Self {
        SpechtPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0u8; n], BigInt::one());
        SpechtPolynomial { n, terms }
    }

    /// x_a − x_b (1-based variable indices).
    pub fn diff(n: usize, a: u8, b: u8) -> Self {
        let mut terms = BTreeMap::new();
        let mut ea = vec![0u8; n];
        ea[a as usize - 1] = 1;
        let mut eb = vec![0u8; n];
        eb[b as usize - 1] = 1;
        terms.insert(ea, BigInt::one());
        terms.insert(eb, -BigInt::one());
        SpechtPolynomial { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SpechtPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms = self.terms.clone();
        for (m, v) in &other.terms {
            let e = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *e += v;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        SpechtPolynomial { n: self.n, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms: BTreeMap<Vec<u8>, BigInt> = BTreeMap::new();
        for (ma, va) in &self.terms {
            for (mb, vb) in &other.terms {
                let m: Vec<u8> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                let e = terms.entry(m.clone()).or_insert_with(BigInt::zero);
                *e += va * vb;
                if e.is_zero() {
                    terms.remove(&m);
                }
            }
        }
        SpechtPolynomial { n: self.n, terms }
    }
}

impl fmt::Debug for SpechtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    write!(f, "*x{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// f(y): product over columns of Vandermonde differences
/// Δ(x_{a_1},…,x_{a_t}) = Π_{i<j} (x_{a_i} − x_{a_j}); Δ of a singleton is 1.
/// Variables run over 1..max entry of the tableau.
pub fn specht_polynomial(t: &Tableau) -> SpechtPolynomial {
    let n = t.entries().last().copied().unwrap_or(0) as usize;
    let mut f = SpechtPolynomial::one(n);
    for col in t.columns() {
        for i in 0..col.len() {
            for j in i + 1..col.len() {
                f = f.mul(&SpechtPolynomial::diff(n, col[i], col[j]));
            }
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_factorization_example() {
        // Tableau with columns (3,7,4), (1,5), (6), (2):
        // f = (x3−x7)(x3−x4)(x7−x4)(x1−x5)
        let t: Tableau = "[[3,1,6,2],[7,5],[4]]".parse().unwrap();
        let f = specht_polynomial(&t);
        let n = 7;
        let want = SpechtPolynomial::diff(n, 3, 7)
            .mul(&SpechtPolynomial::diff(n, 3, 4))
            .mul(&SpechtPolynomial::diff(n, 7, 4))
            .mul(&SpechtPolynomial::diff(n, 1, 5));
        assert_eq!(f, want);
    }

    #[test]
    fn single_row_is_one() {
        let t: Tableau = "[[2,4,1,3]]".parse().unwrap();
        assert_eq!(specht_polynomial(&t), SpechtPolynomial::one(4));
    }

    #[test]
    fn single_column_pair() {
        let t: Tableau = "[[1],[2]]".parse().unwrap();
        assert_eq!(specht_polynomial(&t), SpechtPolynomial::diff(2, 1, 2));
    }

    #[test]
    fn vandermonde_term_count() {
        // Δ(x1..x4) expands to 4! monomials.
        let t: Tableau = "[[1],[2],[3],[4]]".parse().unwrap();
        assert_eq!(specht_polynomial(&t).num_terms(), 24);
    }

    #[test]
    fn ring_identities() {
        let a = SpechtPolynomial::diff(3, 1, 2);
        let b = SpechtPolynomial::diff(3, 2, 3);
        assert_eq!(a.sub(&a), SpechtPolynomial::zero(3));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert!(a.add(&b).sub(&b).eq(&a));
    }
}
