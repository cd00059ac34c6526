use braidslice_core::branched_cover::{blanchfield, branched_homology, linking_form, LinkingForm};
use braidslice_core::known::{KnownKnot, K1, K2, K3, KNOWN};
use braidslice_core::metabolisers::*;
use braidslice_core::seifert::seifert_matrix;
use std::collections::BTreeSet;

fn lambda(k: &KnownKnot) -> LinkingForm {
    let s = seifert_matrix(&k.word()).unwrap();
    let h = branched_homology(&s, 3).unwrap();
    linking_form(&blanchfield(&s, &h, k.generators, 7).unwrap())
}

fn as_sets(v: Vec<Vec<[u64; 4]>>) -> BTreeSet<Vec<[u64; 4]>> {
    v.into_iter().collect()
}

#[test]
fn submodule_lists_match_brute_force() {
    for (q, count) in [(7, 66), (13, 198)] {
        let subs = enumerate_submodules(q).unwrap();
        assert_eq!(subs.len(), count, "q = {q}");
        assert!(subs
            .iter()
            .all(|n| n.order_exponent() == 2 && n.is_t_invariant()));
        let ours = as_sets(subs.into_iter().map(|n| n.basis).collect());
        assert_eq!(ours.len(), count, "tags name distinct submodules");
        assert_eq!(ours, as_sets(brute_force_submodules(q)), "q = {q}");
    }
}

#[test]
fn metabolisers_of_reference_knots() {
    use SubmoduleTag::*;
    let expect = [
        (&K1, vec![Alpha, Beta, AlphaBeta(6), BetaAlpha(4)]),
        (&K2, vec![Alpha, Beta, AlphaBeta(1), BetaAlpha(1)]),
        (&K3, vec![Alpha, Beta, AlphaBeta(2), BetaAlpha(3)]),
    ];
    for (k, tags) in expect {
        let l = lambda(k);
        let found: Vec<SubmoduleTag> = metabolisers(&l, 7).unwrap().iter().map(|n| n.tag).collect();
        // λ pairs the two t-eigenspaces, so there are always q + 3 metabolisers:
        // the two eigenspace sums and q + 1 line pairs
        assert_eq!(found.len(), 10, "{}: {found:?}", k.name);
        assert!(
            tags.iter().all(|t| found.contains(t)),
            "{}: {found:?}",
            k.name
        );
        let lines = found
            .iter()
            .filter(|t| matches!(t, Graph(..) | N0 | AlphaBeta(_) | BetaAlpha(_)))
            .count();
        assert_eq!(lines, 8);
    }
    let n0 = enumerate_submodules(7)
        .unwrap()
        .into_iter()
        .find(|n| n.tag == N0)
        .unwrap();
    assert!(!is_metaboliser(&lambda(&K1), &n0));
}

fn mod7(v: [i64; 4]) -> [u64; 4] {
    v.map(|x| x.rem_euclid(7) as u64)
}

#[test]
fn characters_match_table() {
    let table: [(&KnownKnot, [i64; 4], [i64; 4]); 3] = [
        (&K1, [1, 2, 1, -2], [1, -3, 1, -2]),
        (&K2, [1, 2, 1, -4], [1, -3, 1, 1]),
        // the tabulated K3 βα character (1, −3, 1, 1) does not vanish on N_3^βα
        (&K3, [1, 2, 1, 2], [1, -3, 1, -1]),
    ];
    let mut total = 0;
    for (k, ab, ba) in table {
        let mets: Vec<Submodule> = metabolisers(&lambda(k), 7)
            .unwrap()
            .into_iter()
            .filter(|n| !matches!(n.tag, SubmoduleTag::Graph(..) | SubmoduleTag::N0))
            .collect();
        let mut chars = BTreeSet::new();
        for n in &mets {
            let chi = vanishing_character(n).unwrap();
            assert!(!chi.is_trivial());
            assert!(n.basis.iter().all(|v| chi.eval(v) == 0));
            match n.tag {
                SubmoduleTag::Alpha => assert_eq!(chi.values, mod7([1, 2, 1, 2])),
                SubmoduleTag::Beta => assert_eq!(chi.values, mod7([1, -3, 1, -3])),
                SubmoduleTag::AlphaBeta(_) => assert_eq!(chi.values, mod7(ab), "{}", k.name),
                SubmoduleTag::BetaAlpha(_) => assert_eq!(chi.values, mod7(ba), "{}", k.name),
                _ => unreachable!(),
            }
            chars.insert(chi.values);
        }
        total += chars.len();
    }
    assert_eq!(total, 11);
    let n3 = metabolisers(&lambda(&K3), 7)
        .unwrap()
        .into_iter()
        .find(|n| n.tag == SubmoduleTag::BetaAlpha(3))
        .unwrap();
    let misprint = Character {
        q: 7,
        values: [1, 4, 1, 1],
    };
    assert!(n3.basis.iter().any(|v| misprint.eval(v) != 0));
}

#[test]
fn every_metaboliser_is_isotropic_for_all_translates() {
    for k in KNOWN {
        let l = lambda(k);
        for n in metabolisers(&l, 7).unwrap() {
            for &(x, y) in &n.generators {
                let g = vector(x, y);
                let tg = braidslice_core::branched_cover::t_on_basis(&g, 7);
                for &(x2, y2) in &n.generators {
                    let h = vector(x2, y2);
                    assert_eq!(l.eval(&g, &h), 0);
                    assert_eq!(l.eval(&tg, &h), 0);
                }
            }
        }
    }
}
