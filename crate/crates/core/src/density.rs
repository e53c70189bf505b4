//! Characters of V_λ from exact action-matrix traces, exterior-power
//! characters via the Newton recurrence, and m-density / density decisions
//! by exact inner products.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::specht::SpechtModule;
use crate::symcomb::{
    conjugacy_classes, partitions_of, power_cycle_type, CycleType, Partition,
};

/// Class function on S_n: one exact rational value per cycle type, indexed
/// canonically by `partitions_of(n)` order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterVector {
    n: usize,
    classes: Vec<CycleType>,
    values: Vec<BigRational>,
}

impl CharacterVector {
    pub fn new(n: usize, values: Vec<BigRational>) -> Result<Self> {
        let classes: Vec<CycleType> = partitions_of(n).into_iter().map(CycleType).collect();
        if values.len() != classes.len() {
            return Err(Error::SizeMismatch(format!(
                "{} class values for {} classes of S_{}",
                values.len(),
                classes.len(),
                n
            )));
        }
        Ok(CharacterVector { n, classes, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Value at the identity class = dimension.
    pub fn dimension(&self) -> BigRational {
        let id_pos = self
            .classes
            .iter()
            .position(|c| c.partition().parts().iter().all(|&p| p == 1))
            .expect("identity class present");
        self.values[id_pos].clone()
    }

    pub fn value_at(&self, ct: &CycleType) -> Option<&BigRational> {
        self.classes
            .iter()
            .position(|c| c == ct)
            .map(|i| &self.values[i])
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "classes": self.classes.iter().map(|c| c.partition().parts().to_vec()).collect::<Vec<_>>(),
            "values": self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// χ_λ by exact traces of the standard-basis action, one per conjugacy
/// class representative.
pub fn character(shape: &Partition) -> Result<CharacterVector> {
    let module = SpechtModule::new(shape)?;
    character_from_module(&module)
}

pub fn character_from_module(module: &SpechtModule) -> Result<CharacterVector> {
    let n = module.n();
    let values = conjugacy_classes(n)
        .iter()
        .map(|c| {
            Ok(BigRational::from_integer(
                module.trace(&c.representative)?,
            ))
        })
        .collect::<Result<_>>()?;
    CharacterVector::new(n, values)
}

/// All exterior characters E_0..E_max of χ at once, by the Newton recurrence
/// E_m(σ) = (1/m) Σ_{k=1..m} (−1)^{k−1} χ(σ^k) E_{m−k}(σ), with σ^k read off
/// the cycle type.
fn exterior_table(chi: &CharacterVector, max: usize) -> Result<Vec<Vec<BigRational>>> {
    let n = chi.n();
    let class_index: HashMap<&CycleType, usize> = chi
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let nclasses = chi.classes().len();
    // powvals[j][k] = χ at class of σ_j^k, k = 1..max
    let mut powvals: Vec<Vec<BigRational>> = Vec::with_capacity(nclasses);
    for ct in chi.classes() {
        let mut row = Vec::with_capacity(max);
        for k in 1..=max {
            let pct = power_cycle_type(ct, k);
            let idx = *class_index
                .get(&pct)
                .expect("power of a cycle type is a cycle type of S_n");
            row.push(chi.values()[idx].clone());
        }
        powvals.push(row);
    }
    let mut table: Vec<Vec<BigRational>> = vec![vec![BigRational::one(); nclasses]];
    for m in 1..=max {
        let mut row = Vec::with_capacity(nclasses);
        for j in 0..nclasses {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                let term = &powvals[j][k - 1] * &table[m - k][j];
                if k % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            row.push(acc / BigRational::from_integer(BigInt::from(m)));
        }
        table.push(row);
    }
    let _ = n;
    Ok(table)
}

/// Character of ⋀^m of the representation with character χ.
pub fn exterior_character(chi: &CharacterVector, m: usize) -> Result<CharacterVector> {
    let d = chi
        .dimension()
        .to_integer()
        .to_usize()
        .ok_or(Error::Overflow("character dimension"))?;
    if m > d {
        return Err(Error::OutOfRange(format!(
            "⋀^{} of a {}-dimensional representation",
            m, d
        )));
    }
    let table = exterior_table(chi, m)?;
    CharacterVector::new(chi.n(), table[m].clone())
}

/// ⟨a, b⟩ = (1/n!) Σ_classes size · a · b, exact.
pub fn inner_product(a: &CharacterVector, b: &CharacterVector) -> Result<BigRational> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(format!(
            "inner product across S_{} and S_{}",
            a.n(),
            b.n()
        )));
    }
    let mut acc = BigRational::zero();
    let mut order = BigInt::one();
    for k in 1..=a.n() {
        order *= BigInt::from(k);
    }
    for (i, ct) in a.classes().iter().enumerate() {
        let size = BigRational::from_integer(BigInt::from(ct.class_size()));
        acc += size * &a.values()[i] * &b.values()[i];
    }
    Ok(acc / BigRational::from_integer(order))
}

/// Is ⋀^m V_λ irreducible? Decided by ⟨χ_{⋀^m}, χ_{⋀^m}⟩ = 1, exactly.
pub fn is_m_dense(shape: &Partition, m: usize) -> Result<bool> {
    let chi = character(shape)?;
    is_m_dense_from(&chi, m)
}

pub fn is_m_dense_from(chi: &CharacterVector, m: usize) -> Result<bool> {
    let d = chi
        .dimension()
        .to_integer()
        .to_usize()
        .ok_or(Error::Overflow("character dimension"))?;
    if m == 0 || m >= d {
        return Err(Error::OutOfRange(format!(
            "m-density needs 0 < m < d = {}, got m = {}",
            d, m
        )));
    }
    let em = exterior_character(chi, m)?;
    Ok(inner_product(&em, &em)? == BigRational::one())
}

/// Verdict of the density scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityVerdict {
    pub dense: bool,
    /// Smallest failing m, confirmed by the inner product.
    pub witness: Option<usize>,
    /// Whether the √(n!) filter (C(d,r)² > n!) located the witness first.
    pub filter_hit: bool,
}

fn binomial(d: usize, r: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..r.min(d - r) {
        num *= BigInt::from(d - k);
        den *= BigInt::from(k + 1);
    }
    num / den
}

/// All 0 < m < d pass is_m_dense. The √(n!) filter short-circuits with a
/// candidate witness, which is still confirmed by the inner product.
pub fn is_dense(shape: &Partition) -> Result<DensityVerdict> {
    let chi = character(shape)?;
    is_dense_from(&chi)
}

pub fn is_dense_from(chi: &CharacterVector) -> Result<DensityVerdict> {
    let n = chi.n();
    let d = chi
        .dimension()
        .to_integer()
        .to_usize()
        .ok_or(Error::Overflow("character dimension"))?;
    if d <= 1 {
        return Ok(DensityVerdict {
            dense: true,
            witness: None,
            filter_hit: false,
        });
    }
    let mut fact = BigInt::one();
    for k in 1..=n {
        fact *= BigInt::from(k);
    }
    // C(d,r)² > n! ⟹ ⟨·,·⟩ > 1 for ⋀^r (dimension exceeds the largest
    // irreducible); confirm the witness by the inner product anyway.
    for r in 1..d {
        let c = binomial(d, r);
        if &c * &c > fact {
            if is_m_dense_from(chi, r)? {
                return Err(Error::ClaimMismatch(format!(
                    "filter flagged m = {} but ⋀^m is irreducible",
                    r
                )));
            }
            // The filter witness is the smallest flagged r, but an earlier m
            // may already fail; report the smallest failing m.
            for m in 1..r {
                if !is_m_dense_from(chi, m)? {
                    return Ok(DensityVerdict {
                        dense: false,
                        witness: Some(m),
                        filter_hit: true,
                    });
                }
            }
            return Ok(DensityVerdict {
                dense: false,
                witness: Some(r),
                filter_hit: true,
            });
        }
    }
    for m in 1..d {
        if !is_m_dense_from(chi, m)? {
            return Ok(DensityVerdict {
                dense: false,
                witness: Some(m),
                filter_hit: false,
            });
        }
    }
    Ok(DensityVerdict {
        dense: true,
        witness: None,
        filter_hit: false,
    })
}

/// The partitions of n whose Specht module is dense, by exhaustive exact
/// scan. Desk scale: n ≤ 8.
pub fn dense_list(n: usize) -> Result<Vec<Partition>> {
    if n == 0 || n > 8 {
        return Err(Error::OutOfRange(format!(
            "dense_list is decided computationally only for 1 ≤ n ≤ 8, got {}",
            n
        )));
    }
    let mut out = Vec::new();
    for lam in partitions_of(n) {
        if is_dense(&lam)?.dense {
            out.push(lam);
        }
    }
    Ok(out)
}

/// The classification's list of dense (= thick) shapes restricted to n:
/// (n), (1ⁿ), (n−1,1), (2,1^{n−2}), (2,2), (2,2,2), (3,3).
pub fn theorem_dense_list(n: usize) -> Vec<Partition> {
    let mut cand: Vec<Vec<usize>> = vec![vec![n], vec![1; n]];
    if n >= 2 {
        cand.push({
            let mut v = vec![n - 1];
            if n > 1 {
                v.push(1);
            }
            v
        });
        let mut hook = vec![2];
        hook.extend(vec![1; n - 2]);
        cand.push(hook);
    }
    cand.push(vec![2, 2]);
    cand.push(vec![2, 2, 2]);
    cand.push(vec![3, 3]);
    let mut out: Vec<Partition> = cand
        .into_iter()
        .filter(|p| p.iter().sum::<usize>() == n && !p.contains(&0))
        .map(|p| Partition::new(p).expect("candidate is a partition"))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn trivial_and_sign_characters() {
        let chi = character(&"4".parse().unwrap()).unwrap();
        assert!(chi.values().iter().all(|v| *v == q(1)));
        let sgn = character(&"1,1,1,1".parse().unwrap()).unwrap();
        for (ct, v) in sgn.classes().iter().zip(sgn.values()) {
            let parity: i64 = ct
                .partition()
                .parts()
                .iter()
                .map(|&l| if l % 2 == 0 { -1 } else { 1 })
                .product();
            assert_eq!(*v, q(parity));
        }
        let std = character(&"4,1".parse().unwrap()).unwrap();
        assert_eq!(std.dimension(), q(4));
    }

    #[test]
    fn orthogonality_small() {
        for n in 2..=5usize {
            let chis: Vec<CharacterVector> = partitions_of(n)
                .iter()
                .map(|l| character(l).unwrap())
                .collect();
            for (i, a) in chis.iter().enumerate() {
                for (j, b) in chis.iter().enumerate() {
                    let ip = inner_product(a, b).unwrap();
                    assert_eq!(ip, if i == j { q(1) } else { q(0) });
                }
            }
        }
    }

    #[test]
    fn exterior_basics() {
        let chi = character(&"3,2".parse().unwrap()).unwrap();
        let e0 = exterior_character(&chi, 0).unwrap();
        assert!(e0.values().iter().all(|v| *v == q(1)));
        // dim ⋀^m = C(5, m)
        for m in 0..=5usize {
            let em = exterior_character(&chi, m).unwrap();
            assert_eq!(em.dimension(), BigRational::from_integer(binomial(5, m)));
        }
        // top exterior power = determinant character, values ±1
        let etop = exterior_character(&chi, 5).unwrap();
        assert!(etop.values().iter().all(|v| *v == q(1) || *v == q(-1)));
        assert!(exterior_character(&chi, 6).is_err());
    }

    #[test]
    fn density_examples() {
        assert!(is_m_dense(&"2,2".parse().unwrap(), 1).unwrap());
        assert!(!is_m_dense(&"3,2".parse().unwrap(), 2).unwrap());
        assert!(is_dense(&"2,2,2".parse().unwrap()).unwrap().dense);
        let v = is_dense(&"2,2,1".parse().unwrap()).unwrap();
        assert!(!v.dense);
        assert!(v.witness.is_some());
        assert!(is_dense(&"5".parse().unwrap()).unwrap().dense);
    }

    #[test]
    fn dense_lists_small() {
        // n ≤ 4: everything dense
        for n in 1..=4 {
            assert_eq!(dense_list(n).unwrap().len(), partitions_of(n).len());
        }
        let mut want = theorem_dense_list(6);
        let mut got = dense_list(6).unwrap();
        want.sort();
        got.sort();
        assert_eq!(got, want);
        assert!(dense_list(9).is_err());
    }

    #[test]
    fn symmetry_m_vs_d_minus_m() {
        let chi = character(&"3,1,1".parse().unwrap()).unwrap();
        let d = 6usize;
        for m in 1..d {
            let a = exterior_character(&chi, m).unwrap();
            let b = exterior_character(&chi, d - m).unwrap();
            assert_eq!(
                inner_product(&a, &a).unwrap(),
                inner_product(&b, &b).unwrap()
            );
        }
    }

    #[test]
    fn conjugate_twist() {
        for n in 2..=6usize {
            for lam in partitions_of(n) {
                let a = character(&lam).unwrap();
                let b = character(&lam.conjugate()).unwrap();
                for (i, ct) in a.classes().iter().enumerate() {
                    let parity: i64 = ct
                        .partition()
                        .parts()
                        .iter()
                        .map(|&l| if l % 2 == 0 { -1 } else { 1 })
                        .product();
                    assert_eq!(a.values()[i].clone() * q(parity), b.values()[i]);
                }
            }
        }
    }
}
