use braidslice_core::braid::{closure_components, BraidWord};
use braidslice_core::exact_algebra::LaurentPoly;
use braidslice_core::seifert::*;
use braidslice_core::string_calculus::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn zp(v: &[i64]) -> LaurentPoly<BigInt> {
    LaurentPoly::from_coeffs(0, v.iter().map(|&x| BigInt::from(x)).collect())
}

fn knots() -> Vec<(BraidWord, LaurentPoly<BigInt>, i64)> {
    vec![
        (
            BraidWord::from_exponents(&[2, -2, 2, -2, 1, -2, 2, -2, 2, -1]),
            zp(&[1, -3, 7, -10, 11, -10, 7, -3, 1]),
            2809,
        ),
        (
            BraidWord::from_exponents(&[3, -2, 1, -1, 2, -3, 2, -1, 1, -2]),
            zp(&[1, -3, 6, -9, 11, -9, 6, -3, 1]),
            2401,
        ),
        (
            BraidWord::from_exponents(&[2, -1, 1, -2, 1, -1, 1, -2, 1, -1, 2, -1, 1, -1]),
            zp(&[1, -4, 8, -11, 13, -11, 8, -4, 1]),
            3721,
        ),
    ]
}

#[test]
fn alexander_polynomials_are_squares() {
    for (w, p, det) in knots() {
        let s = seifert_matrix(&w).unwrap();
        assert_eq!(s.size(), 16);
        let sq = (&p * &p).shift(-8);
        assert_eq!(alexander_polynomial(&s), sq, "{w}");
        let raw = alexander_raw(&s);
        assert!(
            raw == sq.shift(8) || raw == -&sq.shift(8),
            "raw det(tS-S^T) for {w}"
        );
        assert_eq!(signature_suite(&w).unwrap().determinant, BigInt::from(det));
    }
}

#[test]
fn invariants_over_enumerated_strings() {
    for r in enumerate(16, None).unwrap() {
        let w = to_braid(&r.string);
        let s = seifert_matrix(&w).unwrap();
        assert_eq!(s.size(), w.len() - 2);
        let suite = signature_suite(&w).unwrap();
        assert_eq!(suite.determinant, goeritz_det(&r.string), "{}", r.string);
        if let Some(cf) = suite.closed_form {
            assert_eq!(cf, suite.signature, "{}", r.string);
        }
        if closure_components(&w) == 1 {
            let d = alexander_polynomial(&s);
            let at_one: BigInt = d.coeffs().iter().sum();
            assert_eq!(at_one, BigInt::from(1), "{}", r.string);
            assert_eq!(d, d.bar());
        }
    }
}

#[test]
fn table_knots_have_vanishing_signatures() {
    for r in enumerate(20, Some(Family::S2cDagger)).unwrap() {
        if r.crossings < 18 {
            continue;
        }
        let suite = signature_suite(&to_braid(&r.string)).unwrap();
        assert_eq!(suite.signature, 0, "{}", r.string);
        if r.components == 1 {
            assert!(
                suite.tl_signatures.values().all(|&v| v == 0),
                "{}: {:?}",
                r.string,
                suite.tl_signatures
            );
        }
    }
}

#[test]
fn k7_determinant_matches_goeritz() {
    let a: AssocString = "3,3,3,3,3,3,3".parse().unwrap();
    let s = seifert_matrix(&to_braid(&a)).unwrap();
    let d = alexander_polynomial(&s);
    let at_minus_one: BigInt = d
        .terms()
        .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
        .sum();
    assert_eq!(goeritz_det(&a), at_minus_one.magnitude().clone().into());
    assert_eq!(
        signature_suite(&to_braid(&a)).unwrap().determinant,
        goeritz_det(&a)
    );
}

fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut p: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i != j {
            for row in p.iter_mut() {
                row[j] += c * row[i];
            }
        }
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn congruence_preserves_invariants(
        v in prop::collection::vec(2u32..5, 2..6),
        ops in prop::collection::vec((0usize..12, 0usize..12, -1i64..=1), 0..6),
    ) {
        prop_assume!(v.iter().any(|&e| e > 2));
        let a = AssocString::new(v).unwrap();
        let s = seifert_matrix(&to_braid(&a)).unwrap();
        let t = s.congruent(&unimodular(s.size(), &ops));
        prop_assert_eq!(alexander_polynomial(&t), alexander_polynomial(&s));
        prop_assert_eq!(signature(&t), signature(&s));
        prop_assert_eq!(tristram_levine(&t, 1, 6).unwrap(), tristram_levine(&s, 1, 6).unwrap());
    }
}
