//! Randomized property tests: structural invariants that must hold for every
//! input, exercised over proptest-generated cases.

use num_traits::Zero;
use proptest::prelude::*;

use symthick_core::exactla::{intersect_dim, Subspace};
use symthick_core::specht::{specht_polynomial, SpechtModule, SpechtPolynomial, SpechtVector};
use symthick_core::symcomb::{partitions_of, Partition, Permutation, Tableau};
use symthick_core::thickness::{
    cert_two_row_n22, conjugate_transfer, cover_design, propagate, swap_certificate,
    verify_certificate, NonThickCertificate,
};

fn poly_of_vector(m: &SpechtModule, v: &SpechtVector) -> SpechtPolynomial {
    let mut total = SpechtPolynomial::zero(m.n());
    for (t, c) in v.coords() {
        assert!(c.is_integer(), "straightening coefficients are integral");
        total = total.add(&specht_polynomial(t).scale(&c.to_integer()));
    }
    total
}

/// Fill `shape` with the images of σ in reading order.
fn fill(shape: &Partition, sigma: &Permutation) -> Tableau {
    let mut it = sigma.images().iter().copied();
    let rows = shape
        .parts()
        .iter()
        .map(|&len| (0..len).map(|_| it.next().unwrap()).collect())
        .collect();
    Tableau::new(rows).unwrap()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn straightening_matches_polynomial_oracle(
        n in 3usize..=6,
        shape_sel in 0usize..100,
        perm_sel in 0u64..u64::MAX,
    ) {
        let shapes = partitions_of(n);
        let shape = &shapes[shape_sel % shapes.len()];
        let sigma = Permutation::from_lex_index(n, perm_sel % factorial(n));
        let t = fill(shape, &sigma);
        let m = SpechtModule::new(shape).unwrap();
        let v = m.straighten(&t).unwrap();
        prop_assert_eq!(poly_of_vector(&m, &v), specht_polynomial(&t));
    }

    #[test]
    fn action_respects_composition(
        a in 0u64..120,
        b in 0u64..120,
        basis_sel in 0usize..5,
    ) {
        let m = SpechtModule::new(&"3,2".parse().unwrap()).unwrap();
        let s = Permutation::from_lex_index(5, a);
        let t = Permutation::from_lex_index(5, b);
        let v = m.unit(&m.basis()[basis_sel % m.dim()].clone()).unwrap();
        let lhs = m.act(&s.compose(&t), &v).unwrap();
        let rhs = m.act(&s, &m.act(&t, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn propagation_is_symmetric_and_contiguous(
        d in 3usize..200,
        i in 1usize..100,
        j in 1usize..100,
    ) {
        prop_assume!(i + j <= d);
        let fwd = propagate(i, j, d).unwrap();
        let rev = propagate(j, i, d).unwrap();
        prop_assert_eq!(&fwd, &rev);
        let lo = i.min(j);
        prop_assert_eq!(fwd[0], lo);
        for w in fwd.windows(2) {
            prop_assert_eq!(w[1], w[0] + 1);
        }
        let last = *fwd.last().unwrap();
        prop_assert!(last <= d - lo);
        prop_assert!(fwd.contains(&i.max(j)) || i.max(j) + i.max(j) > d);
    }

    #[test]
    fn swap_is_an_involution(n in 5usize..=8) {
        let cert = cert_two_row_n22(n).unwrap();
        let back = swap_certificate(&swap_certificate(&cert));
        // provenance records the history; everything mathematical returns.
        prop_assert_eq!(&back.shape, &cert.shape);
        prop_assert_eq!(&back.base_shape, &cert.base_shape);
        prop_assert_eq!(back.claim, cert.claim);
        prop_assert_eq!(back.twisted, cert.twisted);
        prop_assert_eq!(
            serde_json::to_string(&back.w1).unwrap(),
            serde_json::to_string(&cert.w1).unwrap()
        );
        prop_assert_eq!(
            serde_json::to_string(&back.w2).unwrap(),
            serde_json::to_string(&cert.w2).unwrap()
        );
    }

    #[test]
    fn conjugate_transfer_twice_restores_shape(n in 5usize..=8) {
        let cert = cert_two_row_n22(n).unwrap();
        let back = conjugate_transfer(&conjugate_transfer(&cert));
        prop_assert_eq!(&back.shape, &cert.shape);
        prop_assert_eq!(&back.base_shape, &cert.base_shape);
        prop_assert_eq!(back.claim, cert.claim);
        prop_assert!(!back.twisted);
    }

    #[test]
    fn certificate_json_roundtrip_is_identity(n in 5usize..=8) {
        let cert = cert_two_row_n22(n).unwrap();
        let json = cert.to_json();
        let back = NonThickCertificate::from_json(&json).unwrap();
        prop_assert_eq!(back.to_json(), json);
    }

    #[test]
    fn subspace_intersection_is_symmetric(
        cols_a in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..=3),
        cols_b in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..=3),
    ) {
        let to_q = |cols: &[Vec<i64>]| -> Vec<Vec<num_rational::BigRational>> {
            cols.iter()
                .map(|c| c.iter().map(|&x| num_rational::BigRational::from_integer(x.into())).collect())
                .collect()
        };
        let qa = to_q(&cols_a);
        let qb = to_q(&cols_b);
        prop_assume!(qa.iter().any(|c| c.iter().any(|x| !x.is_zero())));
        prop_assume!(qb.iter().any(|c| c.iter().any(|x| !x.is_zero())));
        let a = Subspace::from_columns(4, &qa).unwrap();
        let b = Subspace::from_columns(4, &qb).unwrap();
        let ab = intersect_dim(&a, &b).unwrap();
        prop_assert_eq!(ab, intersect_dim(&b, &a).unwrap());
        prop_assert!(ab <= a.dim().min(b.dim()));
    }

    #[test]
    fn cover_designs_cover(n in 3usize..=40) {
        let f = cover_design(n).unwrap();
        prop_assert!(f.covers_all_edges());
        prop_assert!(4 * f.size() <= n * n - 4);
    }
}

#[test]
fn verification_report_survives_certificate_roundtrip() {
    // certificate → JSON → verify must reproduce in-process verification.
    let cert = cert_two_row_n22(5).unwrap();
    let direct = verify_certificate(&cert).unwrap();
    let thawed = NonThickCertificate::from_json(&cert.to_json()).unwrap();
    let again = verify_certificate(&thawed).unwrap();
    assert_eq!(direct.verified, again.verified);
    assert_eq!(direct.mode, again.mode);
    assert_eq!(direct.sigma_count, again.sigma_count);
    assert_eq!(direct.min_intersection_dim, again.min_intersection_dim);
    assert_eq!(direct.histogram, again.histogram);
}
