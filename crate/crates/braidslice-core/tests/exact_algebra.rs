use braidslice_core::exact_algebra::norm::associated;
use braidslice_core::exact_algebra::{factor, is_norm, CPoly, CycNum, LaurentPoly, NormVerdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng, q: u32, deg: usize) -> CPoly {
    let d = if q == 1 { 1 } else { q as usize - 1 };
    loop {
        let coeffs: Vec<CycNum> = (0..=deg)
            .map(|_| {
                let v: Vec<i64> = (0..d).map(|_| rng.gen_range(-2..=2)).collect();
                CycNum::from_int_coeffs(q, &v)
            })
            .collect();
        let p = LaurentPoly::from_coeffs(0, coeffs);
        if p.high() >= 1 && p.low() == 0 {
            return p;
        }
    }
}

fn random_unit(rng: &mut ChaCha8Rng, q: u32) -> CPoly {
    let c = CycNum::zeta_pow(q, rng.gen_range(0..q as i64)).scale_rational(
        &num_rational::BigRational::from_integer(rng.gen_range(1..5).into()),
    );
    LaurentPoly::monomial(c, rng.gen_range(-3..=3))
}

#[test]
fn norm_test_on_constructed_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut norms = 0;
    let mut non_norms = 0;
    for case in 0..200 {
        let q = [3u32, 5, 7][case % 3];
        let deg = rng.gen_range(1..=2);
        let f = random_poly(&mut rng, q, deg);
        let ffbar = &(&f * &f.bar()) * &random_unit(&mut rng, q);
        if case % 2 == 0 {
            match is_norm(&ffbar).unwrap() {
                NormVerdict::Norm { witness } => {
                    assert!(associated(&(&witness * &witness.bar()), &ffbar))
                }
                v => panic!("f f̄ with f = {f} reported {v:?}"),
            }
            norms += 1;
        } else {
            // an extra self-conjugate factor 1 + t of odd multiplicity
            let one = CycNum::from_int(q, 1);
            let s = LaurentPoly::from_coeffs(0, vec![one.clone(), one]);
            let p = &ffbar * &s;
            assert!(!is_norm(&p).unwrap().is_norm(), "{p}");
            assert!(is_norm(&(&p * &s)).unwrap().is_norm());
            non_norms += 1;
        }
    }
    assert_eq!((norms, non_norms), (100, 100));
}

#[test]
fn unpaired_factor_is_not_a_norm() {
    // t − 2 pairs with 1 − 2t, which is a different monic factor
    for q in [3u32, 7] {
        let c = |k: i64| CycNum::from_int(q, k);
        let g = LaurentPoly::from_coeffs(0, vec![c(-2), c(1)]);
        let v = is_norm(&g).unwrap();
        assert!(
            matches!(
                v,
                NormVerdict::NotNorm {
                    self_conjugate: false,
                    ..
                }
            ),
            "{v:?}"
        );
        assert!(is_norm(&(&g * &g.bar())).unwrap().is_norm());
    }
}

#[test]
fn factorisation_multiplies_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let a = random_poly(&mut rng, 7, 2);
        let b = random_poly(&mut rng, 7, 3);
        let p = &a * &b;
        let fac = factor(&p).unwrap();
        assert!(associated(&fac.expand(), &p));
    }
}
