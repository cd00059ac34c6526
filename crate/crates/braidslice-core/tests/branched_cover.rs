use braidslice_core::branched_cover::*;
use braidslice_core::exact_algebra::{Coeff, CycNum};
use braidslice_core::known::{K1, KNOWN};
use braidslice_core::seifert::{alexander_raw, seifert_matrix, SeifertMatrix};
use braidslice_core::string_calculus::{enumerate, to_braid};
use num_traits::Signed;
use proptest::prelude::*;

fn resultant_with_cyclotomic(s: &SeifertMatrix, p: u32) -> u64 {
    let d = alexander_raw(s);
    let mut v = CycNum::zero(p);
    for (e, c) in d.terms() {
        let c: i64 = c.try_into().unwrap();
        v = v.add_ref(&CycNum::zeta_pow(p, e).mul_ref(&CycNum::from_int(p, c)));
    }
    v.norm().abs().to_integer().try_into().unwrap()
}

fn check_linking(bl: &BlanchfieldMatrix) {
    let l = linking_form(bl);
    assert!(l.is_symmetric());
    let q = l.q;
    let basis: Vec<Vec<u64>> = (0..4)
        .map(|i| (0..4).map(|j| u64::from(i == j)).collect())
        .collect();
    for x in &basis {
        for y in &basis {
            assert_eq!(l.eval(&t_on_basis(x, q), &t_on_basis(y, q)), l.eval(x, y));
        }
    }
}

#[test]
fn reference_knots_reproduce_stored_pairings() {
    for k in KNOWN {
        let s = seifert_matrix(&k.word()).unwrap();
        let h = branched_homology(&s, 3).unwrap();
        assert_eq!(h.invariant_factors, vec![7; 4], "{}", k.name);
        assert!(check_module_structure(&h, 7), "{}", k.name);
        assert_eq!(h.order(), Some(resultant_with_cyclotomic(&s, 3)));
        let bl = blanchfield(&s, &h, k.generators, 7).unwrap();
        assert!(bl.is_hermitian());
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(
                    bl.entries[i][j],
                    M3::new(7, k.blanchfield[i][j]),
                    "{} Bl[{i}][{j}]",
                    k.name
                );
            }
        }
        let l = linking_form(&bl);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(
                    l.matrix[i][j] as i64,
                    k.linking[i][j].rem_euclid(7),
                    "{} λ[{i}][{j}]",
                    k.name
                );
            }
        }
        check_linking(&bl);
        let scanned = h.scan_generators(7).unwrap();
        check_linking(&blanchfield(&s, &h, scanned, 7).unwrap());
    }
}

#[test]
fn non_generating_pair_is_rejected() {
    let s = seifert_matrix(&K1.word()).unwrap();
    let h = branched_homology(&s, 3).unwrap();
    let bad = (0..s.size())
        .flat_map(|i| (i + 1..s.size()).map(move |j| (i, j)))
        .find(|&(i, j)| !h.generates(i, j, 7));
    let (i, j) = bad.expect("some pair fails to generate");
    assert!(blanchfield(&s, &h, (i, j), 7).is_err());
}

#[test]
fn homology_orders_match_resultants() {
    let mut module_cases = 0;
    for r in enumerate(16, None)
        .unwrap()
        .into_iter()
        .filter(|r| r.components == 1)
    {
        let s = seifert_matrix(&to_braid(&r.string)).unwrap();
        for p in [2, 3, 5] {
            let h = branched_homology(&s, p).unwrap();
            assert_eq!(
                h.order(),
                Some(resultant_with_cyclotomic(&s, p)),
                "{} p={p}",
                r.string
            );
            for j in 0..h.t_action.len() {
                let e: Vec<i64> = (0..h.t_action.len()).map(|i| i64::from(i == j)).collect();
                let mut v = e.clone();
                for _ in 0..p {
                    v = h.apply_t(&v);
                }
                assert_eq!(v, e, "t^p on {} p={p}", r.string);
            }
        }
        let h = branched_homology(&s, 3).unwrap();
        if let [q, ..] = h.invariant_factors[..] {
            if q != 3 && check_module_structure(&h, q) {
                let g = h.scan_generators(q).unwrap();
                let bl = blanchfield(&s, &h, g, q).unwrap();
                assert!(bl.is_hermitian(), "{}", r.string);
                check_linking(&bl);
                module_cases += 1;
            }
        }
    }
    assert!(module_cases > 0);
}

#[test]
fn figure_eight_is_not_a_double() {
    let s = seifert_matrix(&to_braid(&"3,3".parse().unwrap())).unwrap();
    let h = branched_homology(&s, 2).unwrap();
    assert_eq!(h.invariant_factors, vec![5]);
    assert!(!check_module_structure(
        &branched_homology(&s, 3).unwrap(),
        7
    ));
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
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn basis_change_keeps_group_and_hermitian_pairing(
        ops in prop::collection::vec((0usize..16, 0usize..16, -1i64..=1), 0..8),
        which in 0usize..3,
    ) {
        let s = seifert_matrix(&KNOWN[which].word()).unwrap();
        let t = s.congruent(&unimodular(s.size(), &ops));
        let h = branched_homology(&t, 3).unwrap();
        prop_assert_eq!(&h.invariant_factors, &vec![7; 4]);
        prop_assert!(check_module_structure(&h, 7));
        let g = h.scan_generators(7).unwrap();
        let bl = blanchfield(&t, &h, g, 7).unwrap();
        prop_assert!(bl.is_hermitian());
        prop_assert!(linking_form(&bl).is_symmetric());
    }
}
