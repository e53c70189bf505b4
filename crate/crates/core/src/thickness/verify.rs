//! Exhaustive (or, past desk scale, sampled) verification that
//! σW1 ∩ W2 ≠ 0 for every σ ∈ S_n.
//!
//! The workhorse identity: let N be an integer basis of the left kernel of
//! the W2 basis matrix, so ker(N as a map) = W2 exactly. Then for any σ,
//! rank N·(σ-images of the W1 generators) = dim σW1 − dim(σW1 ∩ W2), and
//! dim σW1 = dim W1. Because every generator image is ± a straightening-table
//! row, the per-σ work is a table lookup plus one small integer rank.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{
    bareiss_rank_bigint, bareiss_rank_i128, is_prime, left_kernel_int, rank_mod_p_rows,
    DEFAULT_PRIME,
};
use crate::specht::shared_module;
use crate::symcomb::{Permutation, Tableau};

use super::cert::{AmbientKind, NonThickCertificate};

/// Seed for sampled verification; fixed so reruns are byte-identical.
pub const DEFAULT_SEED: u64 = 1729;
/// Sample count used once exhausting S_n stops being desk-scale (n ≥ 10).
pub const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyMode {
    /// Every σ ∈ S_n checked with exact ranks; a genuine proof.
    Full,
    /// Seeded random sample, intersection dims bounded mod p. Only a
    /// counterexample (full rank mod p, confirmed exactly) is conclusive;
    /// "verified" here is evidence, not proof.
    Sampled,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub prime: u64,
    pub seed: u64,
    pub samples: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            prime: DEFAULT_PRIME,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub verified: bool,
    pub mode: VerifyMode,
    pub sigma_count: u64,
    pub min_intersection_dim: usize,
    pub counterexample: Option<Permutation>,
    /// intersection dim → number of σ attaining it (mod-p upper bounds in
    /// sampled mode).
    pub histogram: BTreeMap<usize, u64>,
    #[serde(skip, default)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Per-thread accumulator for the σ sweep.
#[derive(Clone)]
struct Acc {
    min_dim: usize,
    hist: BTreeMap<usize, u64>,
    counterexample: Option<u64>,
}

impl Acc {
    fn empty() -> Self {
        Acc {
            min_dim: usize::MAX,
            hist: BTreeMap::new(),
            counterexample: None,
        }
    }

    fn record(&mut self, idx: u64, dim: usize) {
        *self.hist.entry(dim).or_insert(0) += 1;
        self.min_dim = self.min_dim.min(dim);
        if dim == 0 {
            self.counterexample = Some(self.counterexample.map_or(idx, |c| c.min(idx)));
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        for (d, c) in other.hist {
            *self.hist.entry(d).or_insert(0) += c;
        }
        self.min_dim = self.min_dim.min(other.min_dim);
        self.counterexample = match (self.counterexample, other.counterexample) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

fn sweep<F>(indices: Vec<u64>, dim_at: F) -> Acc
where
    F: Fn(u64) -> usize + Sync,
{
    indices
        .into_par_iter()
        .fold(Acc::empty, |mut acc, idx| {
            acc.record(idx, dim_at(idx));
            acc
        })
        .reduce(Acc::empty, Acc::merge)
}

fn group_order(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn sample_indices(order: u64, samples: u64, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|_| rng.gen_range(0..order)).collect()
}

fn report_from(acc: Acc, n: usize, mode: VerifyMode, sigma_count: u64, start: Instant) -> VerificationReport {
    VerificationReport {
        verified: acc.min_dim >= 1,
        mode,
        sigma_count,
        min_intersection_dim: acc.min_dim,
        counterexample: acc.counterexample.map(|idx| Permutation::from_lex_index(n, idx)),
        histogram: acc.hist,
        elapsed: start.elapsed(),
    }
}

fn trivial_report(dim1: usize, order: u64, start: Instant) -> VerificationReport {
    // W2 is the whole module: σW1 ∩ W2 = σW1 for every σ.
    let mut hist = BTreeMap::new();
    hist.insert(dim1, order);
    VerificationReport {
        verified: dim1 >= 1,
        mode: VerifyMode::Full,
        sigma_count: order,
        min_intersection_dim: dim1,
        counterexample: None,
        histogram: hist,
        elapsed: start.elapsed(),
    }
}

pub fn verify_certificate(cert: &NonThickCertificate) -> Result<VerificationReport> {
    verify_certificate_with(cert, &VerifyOptions::default())
}

pub fn verify_certificate_with(
    cert: &NonThickCertificate,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if !is_prime(opts.prime) {
        return Err(Error::NotPrime(opts.prime));
    }
    match cert.ambient {
        AmbientKind::Specht => verify_specht(cert, opts),
        AmbientKind::ExteriorSquare => verify_exterior(cert, opts),
    }
}

fn verify_specht(cert: &NonThickCertificate, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let module = shared_module(&cert.base_shape)?;
    let w1: &[Tableau] = cert.w1.tableaux()?;
    let w2: &[Tableau] = cert.w2.tableaux()?;
    let d = module.dim();
    let b1 = module.subspace_from_tableaux(w1)?;
    let b2 = module.subspace_from_tableaux(w2)?;
    check_claim(cert, b1.dim(), b2.dim(), d)?;
    let dim1 = b1.dim();
    let n = module.n();
    let order = group_order(n);

    let kernel = left_kernel_int(b2.basis());
    if kernel.is_empty() {
        return Ok(trivial_report(dim1, order, start));
    }

    // K[r] = N · (standard-basis expansion of tabloid r), one row per
    // canonical tabloid: the σ-image of any generator is ± one of these.
    let k_big: Vec<Vec<BigInt>> = (0..module.tabloid_count())
        .map(|r| {
            let mut out = vec![BigInt::from(0); kernel.len()];
            for &(pos, c) in module.table_row(r as u32) {
                let c = BigInt::from(c);
                for (o, krow) in out.iter_mut().zip(kernel.iter()) {
                    *o += &krow[pos as usize] * &c;
                }
            }
            out
        })
        .collect();

    let tabloid_of = |sigma: &Permutation, g: &Tableau| -> usize {
        let (_, tid) = module
            .canon_index(&g.relabel(sigma))
            .expect("relabeled generator stays in range");
        tid as usize
    };

    if n <= 9 {
        // i128 rows when they fit; Bareiss falls back to BigInt on overflow.
        let k_small: Option<Vec<Vec<i128>>> = k_big
            .iter()
            .map(|row| row.iter().map(|v| v.to_i128()).collect::<Option<Vec<_>>>())
            .collect();
        let dim_at = |idx: u64| -> usize {
            let sigma = Permutation::from_lex_index(n, idx);
            if let Some(ks) = &k_small {
                let mut rows: Vec<Vec<i128>> =
                    w1.iter().map(|g| ks[tabloid_of(&sigma, g)].clone()).collect();
                if let Some(rank) = bareiss_rank_i128(&mut rows) {
                    return dim1 - rank;
                }
            }
            let rows: Vec<Vec<BigInt>> =
                w1.iter().map(|g| k_big[tabloid_of(&sigma, g)].clone()).collect();
            dim1 - bareiss_rank_bigint(rows)
        };
        let acc = sweep((0..order).collect(), &dim_at);
        return Ok(report_from(acc, n, VerifyMode::Full, order, start));
    }

    // Past S9: seeded sample, ranks mod p. The mod-p rank only undershoots,
    // so dim1 − rank_p is an upper bound on the true intersection dim; a zero
    // estimate means full rank mod p, hence full exact rank, hence a genuine
    // counterexample (re-checked exactly all the same).
    let p = opts.prime;
    let pe = BigInt::from(p);
    let k_p: Vec<Vec<u64>> = k_big
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.mod_floor(&pe).to_u64().expect("residue fits u64"))
                .collect()
        })
        .collect();
    let dim_at = |idx: u64| -> usize {
        let sigma = Permutation::from_lex_index(n, idx);
        let tids: Vec<usize> = w1.iter().map(|g| tabloid_of(&sigma, g)).collect();
        let mut rows: Vec<Vec<u64>> = tids.iter().map(|&t| k_p[t].clone()).collect();
        let est = dim1 - rank_mod_p_rows(&mut rows, p);
        if est > 0 {
            return est;
        }
        let rows: Vec<Vec<BigInt>> = tids.iter().map(|&t| k_big[t].clone()).collect();
        dim1 - bareiss_rank_bigint(rows)
    };
    let acc = sweep(sample_indices(order, opts.samples, opts.seed), &dim_at);
    Ok(report_from(acc, n, VerifyMode::Sampled, opts.samples, start))
}

fn verify_exterior(cert: &NonThickCertificate, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let module = shared_module(&cert.base_shape)?;
    let d0 = module.dim();
    let total = d0 * (d0 - 1) / 2;
    let w1 = cert.w1.wedge_pairs()?;
    let w2 = cert.w2.wedge_pairs()?;
    for &[p, q] in w1.iter().chain(w2.iter()) {
        if p >= q || q >= d0 {
            return Err(Error::OutOfRange(format!(
                "wedge pair ({}, {}) outside 0 ≤ p < q < {}",
                p, q, d0
            )));
        }
    }
    let w1_set: BTreeSet<[usize; 2]> = w1.iter().copied().collect();
    let w2_set: BTreeSet<[usize; 2]> = w2.iter().copied().collect();
    // Distinct wedge basis vectors are independent, so the spans have exactly
    // the set sizes as dimensions.
    check_claim(cert, w1_set.len(), w2_set.len(), total)?;

    // W2 is spanned by unit wedge vectors, so its left kernel is spanned by
    // the coordinate functionals at the complementary pairs.
    let complement: Vec<[usize; 2]> = (0..d0)
        .flat_map(|p| (p + 1..d0).map(move |q| [p, q]))
        .filter(|pair| !w2_set.contains(pair))
        .collect();
    let n = module.n();
    let order = group_order(n);
    if complement.is_empty() {
        return Ok(trivial_report(w1_set.len(), order, start));
    }

    let dim1 = w1_set.len();
    let dim_at = |idx: u64| -> usize {
        let sigma = Permutation::from_lex_index(n, idx);
        let cols: Vec<Vec<i64>> = (0..d0)
            .map(|pos| module.action_column(&sigma, pos).expect("basis position in range"))
            .collect();
        // Coefficient of σ(e_p ∧ e_q) at e_r ∧ e_s.
        let mut rows: Vec<Vec<i128>> = w1
            .iter()
            .map(|&[p, q]| {
                complement
                    .iter()
                    .map(|&[r, s]| {
                        cols[p][r] as i128 * cols[q][s] as i128
                            - cols[p][s] as i128 * cols[q][r] as i128
                    })
                    .collect()
            })
            .collect();
        match bareiss_rank_i128(&mut rows) {
            Some(rank) => dim1 - rank,
            None => {
                let big: Vec<Vec<BigInt>> = w1
                    .iter()
                    .map(|&[p, q]| {
                        complement
                            .iter()
                            .map(|&[r, s]| {
                                BigInt::from(cols[p][r]) * BigInt::from(cols[q][s])
                                    - BigInt::from(cols[p][s]) * BigInt::from(cols[q][r])
                            })
                            .collect()
                    })
                    .collect();
                dim1 - bareiss_rank_bigint(big)
            }
        }
    };
    if n <= 9 {
        let acc = sweep((0..order).collect(), &dim_at);
        Ok(report_from(acc, n, VerifyMode::Full, order, start))
    } else {
        let acc = sweep(sample_indices(order, opts.samples, opts.seed), &dim_at);
        Ok(report_from(acc, n, VerifyMode::Sampled, opts.samples, start))
    }
}

fn check_claim(
    cert: &NonThickCertificate,
    dim1: usize,
    dim2: usize,
    ambient: usize,
) -> Result<()> {
    if (dim1, dim2) != cert.claim {
        return Err(Error::ClaimMismatch(format!(
            "certificate for {} claims ({}, {}) but the spans have dims ({}, {})",
            cert.shape, cert.claim.0, cert.claim.1, dim1, dim2
        )));
    }
    if dim1 == 0 {
        return Err(Error::ClaimMismatch(format!(
            "certificate for {} has W1 = 0; σW1 ∩ W2 = 0 vacuously",
            cert.shape
        )));
    }
    if dim1 + dim2 > ambient {
        return Err(Error::ClaimMismatch(format!(
            "certificate for {}: {} + {} exceeds ambient dimension {}",
            cert.shape, dim1, dim2, ambient
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::cert::{
        cert_exterior_square, cert_two_row_n22, conjugate_transfer, swap_certificate, Generators,
    };
    use super::*;
    use crate::symcomb::Partition;

    #[test]
    fn two_row_n5_verifies() {
        let cert = cert_two_row_n22(5).unwrap();
        let report = verify_certificate(&cert).unwrap();
        assert!(report.verified);
        assert_eq!(report.mode, VerifyMode::Full);
        assert_eq!(report.sigma_count, 120);
        assert!(report.min_intersection_dim >= 1);
        assert!(report.counterexample.is_none());
        assert_eq!(report.histogram.values().sum::<u64>(), 120);
    }

    #[test]
    fn swap_preserves_histogram() {
        let cert = cert_two_row_n22(5).unwrap();
        let a = verify_certificate(&cert).unwrap();
        let b = verify_certificate(&swap_certificate(&cert)).unwrap();
        assert!(b.verified);
        // σ ↦ σ⁻¹ matches dim(σW1 ∩ W2) = dim(W1 ∩ σ⁻¹W2), so the multiset
        // of intersection dims is shared.
        assert_eq!(a.histogram, b.histogram);
    }

    #[test]
    fn conjugate_transfer_verifies_identically() {
        let cert = cert_two_row_n22(5).unwrap();
        let transferred = conjugate_transfer(&cert);
        assert_eq!(transferred.shape.parts(), &[2, 2, 1]);
        let a = verify_certificate(&cert).unwrap();
        let b = verify_certificate(&transferred).unwrap();
        assert_eq!(a.verified, b.verified);
        assert_eq!(a.histogram, b.histogram);
    }

    #[test]
    fn exterior_square_n5_verifies() {
        let cert = cert_exterior_square(5).unwrap();
        let report = verify_certificate(&cert).unwrap();
        assert!(report.verified);
        assert_eq!(report.sigma_count, 120);
        let swapped = verify_certificate(&swap_certificate(&cert)).unwrap();
        assert!(swapped.verified);
        assert_eq!(report.histogram, swapped.histogram);
    }

    #[test]
    fn corrupted_claim_is_rejected() {
        let mut cert = cert_two_row_n22(5).unwrap();
        cert.claim = (cert.claim.0 + 1, cert.claim.1);
        assert!(matches!(
            verify_certificate(&cert),
            Err(Error::ClaimMismatch(_))
        ));
    }

    #[test]
    fn overfull_budget_is_rejected() {
        // W1 = W2 = everything: i + j = 2d > d.
        let shape = Partition::new(vec![2, 1]).unwrap();
        let module = shared_module(&shape).unwrap();
        let all: Vec<_> = module.basis().to_vec();
        let cert = NonThickCertificate {
            shape: shape.clone(),
            ambient: AmbientKind::Specht,
            w1: Generators::Tableaux(all.clone()),
            w2: Generators::Tableaux(all),
            claim: (2, 2),
            provenance: "test".into(),
            twisted: false,
            base_shape: shape,
        };
        assert!(matches!(
            verify_certificate(&cert),
            Err(Error::ClaimMismatch(_))
        ));
    }

    #[test]
    fn separable_pair_finds_counterexample() {
        // W1 = W2 = a single basis line of V_{(2,1)}: some σ moves it off
        // itself, so the verifier must refute.
        let shape = Partition::new(vec![2, 1]).unwrap();
        let module = shared_module(&shape).unwrap();
        let one = vec![module.basis()[0].clone()];
        let cert = NonThickCertificate {
            shape: shape.clone(),
            ambient: AmbientKind::Specht,
            w1: Generators::Tableaux(one.clone()),
            w2: Generators::Tableaux(one),
            claim: (1, 1),
            provenance: "test".into(),
            twisted: false,
            base_shape: shape,
        };
        let report = verify_certificate(&cert).unwrap();
        assert!(!report.verified);
        assert_eq!(report.min_intersection_dim, 0);
        let sigma = report.counterexample.expect("counterexample σ");
        assert_eq!(sigma.n(), 3);
    }
}
