//! Dispatch from a shape to its certificate, the dense/not-thick
//! classification, and (i,j)-exclusion bookkeeping for the thick diagram.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::density;
use crate::error::{Error, Result};
use crate::symcomb::{partitions_of, Partition};

use super::cert::{
    cert_deep, cert_exterior_square, cert_m1m2_1, cert_m1m2_2, cert_three_row, cert_two_row_general,
    cert_two_row_n22, cert_example_64, conjugate_transfer, swap_certificate, NonThickCertificate,
};
use super::verify::{verify_certificate_with, VerificationReport, VerifyOptions};

/// Not (i,j)-thick propagates to not m-thick. The rule yields the intervals
/// [min, d−max] and [max, d−min]; they mirror each other under m ↔ d−m, so
/// the canonical answer is the merged interval [min, d−min] when the two are
/// contiguous and just the lower one otherwise.
pub fn propagate(i: usize, j: usize, d: usize) -> Result<Vec<usize>> {
    if i == 0 || j == 0 || i + j > d {
        return Err(Error::OutOfRange(format!(
            "propagate needs i, j ≥ 1 and i + j ≤ d, got ({}, {}) with d = {}",
            i, j, d
        )));
    }
    let lo = i.min(j);
    let hi = i.max(j);
    let upper = if 2 * hi <= d + 1 { d - lo } else { d - hi };
    Ok((lo..=upper).collect())
}

/// Pick the construction for a non-dense shape. Shapes on the dense list are
/// refused: no certificate exists for them.
pub fn construct_certificate(shape: &Partition) -> Result<NonThickCertificate> {
    let n = shape.n();
    if density::theorem_dense_list(n).contains(shape) {
        return Err(Error::OutOfRange(format!(
            "{} is dense, hence thick; no non-thickness certificate exists",
            shape
        )));
    }
    let parts = shape.parts();
    match parts.len() {
        2 => {
            if parts[1] == 2 {
                cert_two_row_n22(n)
            } else {
                cert_two_row_general(parts[0], parts[1])
            }
        }
        3 => {
            if parts[1] == 1 {
                cert_exterior_square(n)
            } else if parts == [2, 2, 1] {
                Ok(conjugate_transfer(&cert_two_row_n22(5)?))
            } else if parts[2] == 1 {
                cert_m1m2_1(parts[0], parts[1])
            } else if parts[2] == 2 {
                cert_m1m2_2(parts[0], parts[1])
            } else {
                cert_three_row(parts[0], parts[1], parts[2])
            }
        }
        s if s >= 4 => {
            if parts[0] >= 4 {
                cert_deep(shape)
            } else {
                // At most 3 columns: certify the conjugate (≤ 3 rows) and
                // carry it back across the sign twist.
                Ok(conjugate_transfer(&construct_certificate(
                    &shape.conjugate(),
                )?))
            }
        }
        _ => Err(Error::OutOfRange(format!(
            "no certificate construction for {}",
            shape
        ))),
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    DenseAndThick {
        /// true when the density module confirmed it exactly (n ≤ 8);
        /// false for larger n, where the list is taken as given.
        density_verified: bool,
    },
    NotThick {
        certificate: NonThickCertificate,
        report: VerificationReport,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub shape: Partition,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl Classification {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("classification serializes")
    }
}

pub fn classify_thick(shape: &Partition) -> Result<Classification> {
    classify_thick_with(shape, &VerifyOptions::default())
}

pub fn classify_thick_with(shape: &Partition, opts: &VerifyOptions) -> Result<Classification> {
    let n = shape.n();
    if density::theorem_dense_list(n).contains(shape) {
        let density_verified = if n <= 8 {
            let verdict = density::is_dense(shape)?;
            if !verdict.dense {
                return Err(Error::ClaimMismatch(format!(
                    "{} is on the dense list but the character check disagrees",
                    shape
                )));
            }
            true
        } else {
            false
        };
        return Ok(Classification {
            shape: shape.clone(),
            verdict: Verdict::DenseAndThick { density_verified },
        });
    }
    let certificate = construct_certificate(shape)?;
    let report = verify_certificate_with(&certificate, opts)?;
    Ok(Classification {
        shape: shape.clone(),
        verdict: Verdict::NotThick {
            certificate,
            report,
        },
    })
}

pub fn classify_all(n: usize) -> Result<Vec<Classification>> {
    partitions_of(n).iter().map(classify_thick).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ExclusionSeed {
    pub i: usize,
    pub j: usize,
    pub provenance: String,
}

/// Certified exclusions from the thick diagram: (i,j) pairs at which the
/// representation is known not to be (i,j)-thick. Exclusions close upward
/// (more room in V1 and V2 only helps non-separation), and the diagram is
/// symmetric in (i,j).
#[derive(Clone, Debug, Serialize)]
pub struct DiagramBounds {
    pub shape: Partition,
    pub dim: usize,
    pub seeds: Vec<ExclusionSeed>,
    pub excluded_count: usize,
}

impl DiagramBounds {
    pub fn contains(&self, i: usize, j: usize) -> bool {
        if i + j > self.dim {
            return false;
        }
        self.seeds
            .iter()
            .any(|s| (i >= s.i && j >= s.j) || (i >= s.j && j >= s.i))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serializes")
    }
}

pub fn diagram_bounds(shape: &Partition) -> Result<DiagramBounds> {
    let dim = shape.hook_dimension() as usize;
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut seeds: Vec<ExclusionSeed> = Vec::new();
    let mut add_cert = |cert: &NonThickCertificate| -> Result<()> {
        let mut push = |i: usize, j: usize, prov: String| {
            if seen.insert((i, j)) {
                seeds.push(ExclusionSeed { i, j, provenance: prov });
            }
        };
        let (i, j) = cert.claim;
        push(i, j, cert.provenance.clone());
        let swapped = swap_certificate(cert);
        push(swapped.claim.0, swapped.claim.1, swapped.provenance);
        for m in propagate(i, j, dim)? {
            push(m, dim - m, format!("propagation of {}", cert.provenance));
        }
        Ok(())
    };
    add_cert(&construct_certificate(shape)?)?;
    let n = shape.n();
    if shape.parts().len() == 2 && shape.part(1) == 2 && n >= 7 {
        add_cert(&cert_example_64(n)?)?;
    }
    let mut bounds = DiagramBounds {
        shape: shape.clone(),
        dim,
        seeds,
        excluded_count: 0,
    };
    bounds.excluded_count = (0..=dim)
        .flat_map(|i| (0..=dim - i).map(move |j| (i, j)))
        .filter(|&(i, j)| bounds.contains(i, j))
        .count();
    Ok(bounds)
}
