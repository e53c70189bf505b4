//! Non-thickness certificates: explicit invariant pairs (W1, W2) with
//! dim W1 + dim W2 ≤ dim V and σW1 ∩ W2 ≠ 0 for all σ, their exhaustive
//! verification, covering designs, and (i,j)-propagation of the exclusions.

mod cert;
mod classify;
mod cover;
mod verify;

pub use cert::{
    cert_deep, cert_example_64, cert_exterior_square, cert_m1m2_1, cert_m1m2_2, cert_three_row,
    cert_two_row_general, cert_two_row_n22, conjugate_transfer, swap_certificate, AmbientKind,
    Generators, NonThickCertificate,
};
pub use classify::{
    classify_all, classify_thick, classify_thick_with, construct_certificate, diagram_bounds,
    propagate, Classification, DiagramBounds, ExclusionSeed, Verdict,
};
pub use cover::{cover_design, exact_min_cover, CoverDesign};
pub use verify::{
    verify_certificate, verify_certificate_with, VerificationReport, VerifyMode, VerifyOptions,
    DEFAULT_SAMPLES, DEFAULT_SEED,
};
