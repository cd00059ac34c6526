//! Reference data for the three knots `K1`, `K2`, `K3` and the other
//! closures that the tools report on.

use crate::braid::BraidWord;
use crate::string_calculus::AssocString;

pub struct KnownKnot {
    pub name: &'static str,
    pub exponents: &'static [i64],
    /// `Δ = p(t)²`, coefficients of `p` from `t⁰`.
    pub sqrt_alexander: &'static [i64],
    pub determinant: u64,
    /// Standard generators (0-based) used for `a` and `b`.
    pub generators: (usize, usize),
    /// Blanchfield numerators over 7 on `{a, b}`, coefficients of `1, t, t²`.
    pub blanchfield: [[[i64; 3]; 2]; 2],
    /// Linking form numerators over 7 on `{a, ta, b, tb}`.
    pub linking: [[i64; 4]; 4],
    /// Dual curves of the two generators as read off the diagram.
    pub dual_words: (&'static str, &'static str),
    /// `v_1 … v_18` in the unshifted frame.
    pub lifts: [&'static str; 18],
}

impl KnownKnot {
    pub fn word(&self) -> BraidWord {
        BraidWord::from_exponents(self.exponents)
    }

    pub fn string(&self) -> AssocString {
        crate::string_calculus::from_braid(&self.word()).expect("reference words are alternating")
    }
}

pub const K1: KnownKnot = KnownKnot {
    name: "K1",
    exponents: &[2, -2, 2, -2, 1, -2, 2, -2, 2, -1],
    sqrt_alexander: &[1, -3, 7, -10, 11, -10, 7, -3, 1],
    determinant: 2809,
    generators: (14, 15),
    blanchfield: [[[-4, 2, 2], [-2, 4, -2]], [[-2, -2, 4], [8, -4, -4]]],
    linking: [
        [-4, 2, -2, 4],
        [2, -4, -2, -2],
        [-2, -2, 1, -4],
        [4, -2, -4, 1],
    ],
    dual_words: ("g8*g12^-1", "g1^-1*g7"),
    lifts: [
        "0",
        "(6t+5)a + (5t+6)b",
        "5ta + 5b",
        "(2t+5)a + 6b",
        "(6t+5)a + (5t+3)b",
        "5tb",
        "b",
        "(5t+6)a + b",
        "(3t+2)a + (4t+1)b",
        "(t+2)a + (5t+1)b",
        "6a + (4t+1)b",
        "6ta + b",
        "6a + (6t+6)b",
        "(3t+4)a + (6t+2)b",
        "3a + (2t+4)b",
        "5a + (2t+3)b",
        "4a + (2t+2)b",
        "(6t+1)b",
    ],
};

pub const K2: KnownKnot = KnownKnot {
    name: "K2",
    exponents: &[3, -2, 1, -1, 2, -3, 2, -1, 1, -2],
    sqrt_alexander: &[1, -3, 6, -9, 11, -9, 6, -3, 1],
    determinant: 2401,
    generators: (13, 15),
    blanchfield: [[[6, -3, -3], [0, -3, 3]], [[0, 3, -3], [-6, 3, 3]]],
    linking: [[6, -3, 0, -3], [-3, 6, 3, 0], [0, 3, -6, 3], [-3, 0, 3, -6]],
    dual_words: ("g1^-1*g6", "g14*g7^-1"),
    lifts: [
        "0",
        "(5t+6)a + (4t+4)b",
        "3a + (3t+1)b",
        "(2t+6)a + 2b",
        "(4t+1)a + (6t+5)b",
        "a",
        "a + (6t+1)b",
        "(6t+6)a + (6t+5)b",
        "5ta + (3t+5)b",
        "(2t+3)a + (3t+3)b",
        "(3t+6)a + 5b",
        "(6t+2)a + (6t+6)b",
        "a + b",
        "a + 5tb",
        "(5t+3)a + 6b",
        "(5t+5)a + (3t+5)b",
        "ta + (5t+3)b",
        "(6t+1)a",
    ],
};

pub const K3: KnownKnot = KnownKnot {
    name: "K3",
    exponents: &[2, -1, 1, -2, 1, -1, 1, -2, 1, -1, 2, -1, 1, -1],
    sqrt_alexander: &[1, -4, 8, -11, 13, -11, 8, -4, 1],
    determinant: 3721,
    generators: (14, 15),
    blanchfield: [[[8, -4, -4], [-2, -2, 4]], [[-2, 4, -2], [-4, 2, 2]]],
    linking: [
        [1, -4, -2, -2],
        [-4, 1, 4, -2],
        [-2, 4, -4, 2],
        [-2, -2, 2, -4],
    ],
    dual_words: ("g1^-1*g7", "g8*g13^-1"),
    lifts: [
        "0",
        "(5t+6)a + (6t+5)b",
        "(4t+3)a + (t+1)b",
        "(6t+3)a + b",
        "(6t+4)a + (4t+6)b",
        "(4t+1)a + (t+6)b",
        "a",
        "a + (5t+6)b",
        "(3t+6)a + (5t+3)b",
        "(4t+6)a + (3t+3)b",
        "(3t+6)a + 2tb",
        "(6t+2)a + 6b",
        "a + 6tb",
        "(6t+6)a + 6b",
        "(6t+2)a + (3t+4)b",
        "(t+1)a + (2t+6)b",
        "ta + (2t+5)b",
        "(6t+1)a",
    ],
};

pub const KNOWN: [&KnownKnot; 3] = [&K1, &K2, &K3];

pub fn by_name(name: &str) -> Option<&'static KnownKnot> {
    KNOWN
        .iter()
        .copied()
        .find(|k| k.name.eq_ignore_ascii_case(name))
}

/// Looks a word up among the reference knots, up to rotation.
pub fn identify(w: &BraidWord) -> Option<&'static KnownKnot> {
    let s = crate::string_calculus::from_braid(w).ok()?;
    KNOWN.iter().copied().find(|k| k.string().equivalent(&s))
}

/// The closures left without a ribbon certificate, as strings.
pub const TABLE: [&str; 10] = [
    "3,3,3,3,3,3,3,3,3",
    "2,4,2,4,4,2,4,2,3",
    "2,2,4,3,2,5,2,3,4",
    "2,3,4,3,4,3,2,3,3",
    "2,2,2,3,3,3,6,3,3,3",
    "2,4,2,4,2,4,2,4,2,4",
    "2,4,2,3,3,4,2,4,3,3",
    "2,4,3,2,3,4,2,3,4,3",
    "2,3,2,3,2,3,4,4,4,3",
    "2,2,2,4,3,2,6,2,3,4",
];

/// The 14-crossing Turk's head closure, known not to be slice.
pub const K7: &str = "3,3,3,3,3,3,3";
