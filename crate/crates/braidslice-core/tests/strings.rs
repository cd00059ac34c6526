use braidslice_core::braid::{dual_subbraids, verify_dual_cancellation};
use braidslice_core::string_calculus::*;
use proptest::prelude::*;

fn linear_strings(max_sum: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: u32, out: &mut Vec<Vec<u32>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for e in 2..=left {
            prefix.push(e);
            rec(prefix, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), max_sum, &mut out);
    out
}

#[test]
fn linear_dual_is_an_involution_and_matches_continued_fractions() {
    for b in linear_strings(20) {
        let c = linear_dual(&b).unwrap();
        assert_eq!(linear_dual(&c).unwrap(), b, "dual of dual of {b:?}");
        let (p, q) = hj_fraction(&b);
        let (p2, q2) = hj_fraction(&c);
        assert_eq!((p2, q2), (p, p - q), "{b:?} -> {c:?}");
    }
}

#[test]
fn concatenated_dual_pairs_have_i_invariant_two() {
    for b in linear_strings(20) {
        let c = linear_dual(&b).unwrap();
        let s: i64 = b.iter().chain(&c).map(|&e| 3 - e as i64).sum();
        assert_eq!(s, 2, "{b:?} | {c:?}");
    }
}

#[test]
fn s2c_dagger_count_and_table() {
    let all = enumerate(20, Some(Family::S2cDagger)).unwrap();
    // 33 is the commonly quoted count; exhaustive enumeration finds 32 classes.
    assert_eq!(all.len(), 32);
    let table: [(u32, &str, &str, usize); 10] = [
        (18, "3,3,3,3,3,3,3,3,3", "[0,0,0,0,0,0,0,0,0]", 3),
        (18, "2,4,2,4,4,2,4,2,3", "[1,1,1,1,0]", 1),
        (18, "2,2,4,3,2,5,2,3,4", "[2,1,0,0,1]", 1),
        (18, "2,3,4,3,4,3,2,3,3", "[1,0,0,0,1,0,0]", 1),
        (20, "2,2,2,3,3,3,6,3,3,3", "[3,0,0,0,0,0,0]", 3),
        (20, "2,4,2,4,2,4,2,4,2,4", "[1,1,1,1,1]", 3),
        (20, "2,4,2,3,3,4,2,4,3,3", "[1,1,1,0,0,0,0]", 3),
        (20, "2,4,3,2,3,4,2,3,4,3", "[1,1,0,0,1,0,0]", 3),
        (20, "2,3,2,3,2,3,4,4,4,3", "[1,0,1,0,1,0,0]", 3),
        (20, "2,2,2,4,3,2,6,2,3,4", "[3,1,0,0,1]", 3),
    ];
    for (cr, s, x, comp) in table {
        let a: AssocString = s.parse().unwrap();
        let rec = all
            .iter()
            .find(|r| r.string == a.canonical())
            .unwrap_or_else(|| panic!("{s} missing"));
        assert_eq!(rec.crossings, cr);
        assert_eq!(rec.components, comp, "{s}");
        let xs: XString = x.parse().unwrap();
        assert_eq!(rec.x_string.as_ref().unwrap(), &xs.canonical(), "{s}");
        assert!(from_x_string(&xs).equivalent(&a));
    }
    let k7: AssocString = "3,3,3,3,3,3,3".parse().unwrap();
    assert!(enumerate(14, Some(Family::S2cDagger))
        .unwrap()
        .iter()
        .any(|r| r.string == k7));
}

#[test]
fn family_properties_up_to_twenty_crossings() {
    let all = enumerate(20, None).unwrap();
    for r in &all {
        let f = &r.families;
        let c = f.contains(&Family::S2c);
        assert!(!(c && f.contains(&Family::S2d)), "{}", r.string);
        assert!(!(c && f.contains(&Family::S2e)), "{}", r.string);
        if c {
            assert_eq!(r.string.i_invariant(), 0, "{}", r.string);
            assert_eq!(r.string.entry_count() % 4, 2, "{}", r.string);
            let l = x_string_patterns(&r.string).unwrap();
            assert_eq!(
                l.s2a_pattern,
                f.contains(&Family::S2a),
                "S2a pattern on {}",
                r.string
            );
            assert_eq!(
                l.s2b_pattern,
                f.contains(&Family::S2b),
                "S2b pattern on {}",
                r.string
            );
        } else {
            assert!(x_string_patterns(&r.string).is_err());
        }
        if f.contains(&Family::S2d) {
            assert_eq!(r.string.i_invariant(), 1, "{}", r.string);
        }
        if f.contains(&Family::S2e) {
            assert_eq!(r.string.i_invariant(), 3, "{}", r.string);
        }
    }
}

#[test]
fn dual_cancellation_exhaustive() {
    for b in linear_strings(12) {
        let c = linear_dual(&b).unwrap();
        for xl in 0..2 {
            for xr in 0..2 {
                for yl in 0..2 {
                    for yr in 0..2 {
                        let (bw, cw) = dual_subbraids(&b, &c, (xl, xr), (yl, yr)).unwrap();
                        assert!(
                            verify_dual_cancellation(&bw, &cw),
                            "{b:?} {c:?} {xl}{xr}{yl}{yr}"
                        );
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn x_string_round_trip(v in prop::collection::vec(0u32..4, 0..4usize).prop_map(|mut v| { if v.len() % 2 == 0 { v.push(0); } v })) {
        let x = XString::new(v).unwrap();
        let a = from_x_string(&x);
        prop_assert_eq!(x_string(&a).unwrap(), x.canonical());
    }

    #[test]
    fn braid_round_trip(v in prop::collection::vec(2u32..6, 1..10)) {
        prop_assume!(v.iter().any(|&e| e > 2));
        let a = AssocString::new(v).unwrap();
        let back = from_braid(&to_braid(&a)).unwrap();
        prop_assert!(back.equivalent(&a));
        prop_assert_eq!(to_braid(&a).len() as u32, a.crossings());
    }
}
