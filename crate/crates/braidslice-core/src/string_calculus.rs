//! Associated strings of alternating 3-braids, linear duals, x-strings, the
//! families S2a–S2e and S2c†, and enumeration up to a crossing bound.
//!
//! The braid `σ1^{a1} σ2^{-b1} ... σ1^{an} σ2^{-bn}` has associated string
//! `(2^[a1-1], b1+2, ..., 2^[an-1], bn+2)`. Strings are cyclic and are
//! identified up to rotation and reversal.

use crate::braid::{closure_components, BraidWord};
use crate::error::StringError;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AssocString {
    entries: Vec<u32>,
}

/// All rotations and reversals of a cyclic sequence.
pub fn dihedral_images<T: Clone>(v: &[T]) -> Vec<Vec<T>> {
    let n = v.len();
    let mut rev = v.to_vec();
    rev.reverse();
    let mut out = Vec::with_capacity(2 * n);
    for base in [v.to_vec(), rev] {
        for k in 0..n.max(1) {
            let mut r = base.clone();
            if n > 0 {
                r.rotate_left(k);
            }
            out.push(r);
        }
    }
    out
}

/// Lexicographically least rotation or reversal.
pub fn canonical_cyclic<T: Clone + Ord>(v: &[T]) -> Vec<T> {
    dihedral_images(v).into_iter().min().unwrap_or_default()
}

fn is_canonical(v: &[u32]) -> bool {
    let n = v.len();
    for k in 0..n {
        for rev in [false, true] {
            let at = |i: usize| {
                if rev {
                    v[(k + n - i) % n]
                } else {
                    v[(k + i) % n]
                }
            };
            for i in 0..n {
                match at(i).cmp(&v[i]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    true
}

impl AssocString {
    /// Entries must be at least 2 and not all equal to 2 (an all-2 string
    /// would need a braid with no `σ2` letters).
    pub fn new(entries: Vec<u32>) -> Result<Self, StringError> {
        if entries.is_empty() {
            return Err(StringError::Invalid("empty string".into()));
        }
        if let Some((i, e)) = entries.iter().enumerate().find(|(_, &e)| e < 2) {
            return Err(StringError::Invalid(format!(
                "entry {} is {e}; entries must be at least 2",
                i + 1
            )));
        }
        if entries.iter().all(|&e| e == 2) {
            return Err(StringError::Invalid(
                "a string of 2s is not realised by an alternating 3-braid".into(),
            ));
        }
        Ok(AssocString { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn crossings(&self) -> u32 {
        self.entries.iter().map(|e| e - 1).sum()
    }

    pub fn canonical(&self) -> AssocString {
        AssocString {
            entries: canonical_cyclic(&self.entries),
        }
    }

    pub fn equivalent(&self, o: &AssocString) -> bool {
        self.canonical() == o.canonical()
    }

    pub fn components(&self) -> usize {
        closure_components(&to_braid(self))
    }

    /// Number of maximal substrings `(3+x)` or `(2^[x])` (the latter possibly
    /// empty) when the string is read in the alternating form of an x-string.
    pub fn entry_count(&self) -> usize {
        2 * self.entries.iter().filter(|&&e| e >= 3).count()
    }

    pub fn i_invariant(&self) -> i64 {
        self.entries.iter().map(|&e| 3 - e as i64).sum()
    }
}

impl fmt::Display for AssocString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>, StringError> {
    let t = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .enumerate()
        .map(|(i, tok)| {
            tok.trim().parse::<u32>().map_err(|_| {
                StringError::Invalid(format!(
                    "token {} ({:?}) is not a non-negative integer",
                    i + 1,
                    tok.trim()
                ))
            })
        })
        .collect()
}

impl FromStr for AssocString {
    type Err = StringError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AssocString::new(parse_list(s)?)
    }
}

/// Linear dual of a (non-cyclic) string. Writing
/// `b = (2^[m1], 3+n1, ..., 2^[mj], 2+nj)`, the dual is
/// `(2+m1, 2^[n1], 3+m2, 2^[n2], ..., 3+mj, 2^[nj])`; `(1)` maps to `()`.
pub fn linear_dual(b: &[u32]) -> Result<Vec<u32>, StringError> {
    if b.is_empty() {
        return Err(StringError::Invalid(
            "linear dual of the empty string is undefined".into(),
        ));
    }
    if b == [1] {
        return Ok(Vec::new());
    }
    if let Some(e) = b.iter().find(|&&e| e < 2) {
        return Err(StringError::Invalid(format!(
            "entry {e} in {b:?}; entries must be at least 2"
        )));
    }
    // blocks (m_i, n_i)
    let mut blocks = Vec::new();
    let mut m = 0u32;
    let last = b.len() - 1;
    for (i, &e) in b.iter().enumerate() {
        if i == last {
            blocks.push((m, e - 2));
        } else if e == 2 {
            m += 1;
        } else {
            blocks.push((m, e - 3));
            m = 0;
        }
    }
    let mut c = Vec::new();
    for (idx, &(m, n)) in blocks.iter().enumerate() {
        c.push(if idx == 0 { 2 + m } else { 3 + m });
        c.extend(std::iter::repeat_n(2, n as usize));
    }
    Ok(c)
}

/// `[b1, ..., bk]^- = b1 - 1/(b2 - 1/(... - 1/bk))` as `(p, q)`.
pub fn hj_fraction(b: &[u32]) -> (i64, i64) {
    let (mut p, mut q) = (1i64, 0i64);
    for &e in b.iter().rev() {
        let np = e as i64 * p - q;
        q = p;
        p = np;
    }
    (p, q)
}

/// A linear string together with its dual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPair {
    pub b: Vec<u32>,
    pub c: Vec<u32>,
}

impl DualPair {
    pub fn new(b: Vec<u32>) -> Result<Self, StringError> {
        let c = linear_dual(&b)?;
        Ok(DualPair { b, c })
    }
}

/// Braid `σ1^{a1} σ2^{-b1} ...` realising the string.
pub fn to_braid(a: &AssocString) -> BraidWord {
    let e = &a.entries;
    let n = e.len();
    // start right after an entry >= 3
    let start = (0..n)
        .find(|&i| e[i] >= 3)
        .map(|i| (i + 1) % n)
        .unwrap_or(0);
    let mut letters = Vec::new();
    let mut run = 0usize;
    for k in 0..n {
        let x = e[(start + k) % n];
        if x == 2 {
            run += 1;
        } else {
            letters.extend(std::iter::repeat_n(1i8, run + 1));
            letters.extend(std::iter::repeat_n(-2i8, x as usize - 2));
            run = 0;
        }
    }
    BraidWord::new(letters).expect("letters are valid")
}

/// Inverse of [`to_braid`]: the word must be a cyclic rotation of
/// `σ1^{a1} σ2^{-b1} ... σ1^{an} σ2^{-bn}` with all exponents positive.
pub fn from_braid(w: &BraidWord) -> Result<AssocString, StringError> {
    let l = w.letters();
    if let Some(bad) = l.iter().find(|&&x| x != 1 && x != -2) {
        return Err(StringError::NotNormalForm(format!(
            "letter {bad} not allowed; only σ1 and σ2⁻¹ occur in the alternating normal form"
        )));
    }
    let Some(start) = (0..l.len()).find(|&i| l[i] == 1 && l[(i + l.len() - 1) % l.len()] == -2)
    else {
        return Err(StringError::NotNormalForm(
            "word must contain both σ1 and σ2⁻¹".into(),
        ));
    };
    let rot: Vec<i8> = (0..l.len()).map(|k| l[(start + k) % l.len()]).collect();
    let mut entries = Vec::new();
    let mut i = 0;
    while i < rot.len() {
        let a = rot[i..].iter().take_while(|&&x| x == 1).count();
        i += a;
        let b = rot[i..].iter().take_while(|&&x| x == -2).count();
        i += b;
        entries.extend(std::iter::repeat_n(2, a - 1));
        entries.push(b as u32 + 2);
    }
    AssocString::new(entries)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct XString {
    values: Vec<u32>,
}

impl XString {
    pub fn new(values: Vec<u32>) -> Result<Self, StringError> {
        if values.len().is_multiple_of(2) {
            return Err(StringError::Invalid(format!(
                "x-string must have odd length, got {}",
                values.len()
            )));
        }
        Ok(XString { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn canonical(&self) -> XString {
        XString {
            values: canonical_cyclic(&self.values),
        }
    }
}

impl fmt::Display for XString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for XString {
    type Err = StringError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        XString::new(parse_list(s)?)
    }
}

/// `(3+x1, 2^[x2], 3+x3, 2^[x4], ...)` read cyclically with step two.
pub fn from_x_string(x: &XString) -> AssocString {
    let v = &x.values;
    let n = v.len();
    let mut out = Vec::new();
    for j in 0..n {
        let i = (2 * j) % n;
        out.push(3 + v[i]);
        out.extend(std::iter::repeat_n(2, v[(i + 1) % n] as usize));
    }
    AssocString::new(out).expect("x-strings give valid strings")
}

/// The x-string of `c` when `c` lies in S2c.
pub fn x_string(c: &AssocString) -> Option<XString> {
    let e = &c.entries;
    let n = e.len();
    let first = (0..n).find(|&i| e[i] >= 3)?;
    // big entries and the runs of 2s following them
    let mut bigs = Vec::new();
    let mut runs = Vec::new();
    for k in 0..n {
        let x = e[(first + k) % n];
        if x >= 3 {
            bigs.push(x - 3);
            runs.push(0u32);
        } else {
            *runs.last_mut().unwrap() += 1;
        }
    }
    let m = bigs.len();
    if m % 2 == 0 {
        return None;
    }
    let mut best: Option<XString> = None;
    for rev in [false, true] {
        // reversing the string reverses the order of bigs and shifts runs
        let (bs, rs): (Vec<u32>, Vec<u32>) = if rev {
            let bs: Vec<u32> = bigs.iter().rev().copied().collect();
            let rs: Vec<u32> = (0..m).map(|j| runs[(2 * m - 2 - j) % m]).collect();
            (bs, rs)
        } else {
            (bigs.clone(), runs.clone())
        };
        for s in 0..m {
            let mut x = vec![0u32; m];
            for j in 0..m {
                x[(2 * j) % m] = bs[(s + j) % m];
            }
            if (0..m).all(|j| x[(2 * j + 1) % m] == rs[(s + j) % m]) {
                let cand = XString { values: x }.canonical();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    S2a,
    S2b,
    S2c,
    S2d,
    S2e,
    S2cDagger,
}

impl Family {
    pub const BASIC: [Family; 5] = [
        Family::S2a,
        Family::S2b,
        Family::S2c,
        Family::S2d,
        Family::S2e,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::S2a => "S2a",
            Family::S2b => "S2b",
            Family::S2c => "S2c",
            Family::S2d => "S2d",
            Family::S2e => "S2e",
            Family::S2cDagger => "S2c-dagger",
        }
    }
}

impl FromStr for Family {
    type Err = StringError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s
            .to_ascii_lowercase()
            .replace(['_', '†'], "-")
            .trim_end_matches('-')
        {
            "s2a" => Ok(Family::S2a),
            "s2b" => Ok(Family::S2b),
            "s2c" => Ok(Family::S2c),
            "s2d" => Ok(Family::S2d),
            "s2e" => Ok(Family::S2e),
            "s2c-dagger" | "s2cdagger" | "s2c-" => Ok(Family::S2cDagger),
            other => Err(StringError::Invalid(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a string matched a family pattern, read off a suitable rotation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    DualPair {
        rotation: Vec<u32>,
        b: Vec<u32>,
        c: Vec<u32>,
        x: u32,
    },
    XString(XString),
    Twist {
        rotation: Vec<u32>,
        x: u32,
    },
    Singleton(Vec<u32>),
}

fn dual_is(b: &[u32], c: &[u32]) -> bool {
    matches!(linear_dual(b), Ok(d) if d == c)
}

fn match_s2a(r: &[u32]) -> Option<Witness> {
    let n = r.len();
    if n < 2 || r[0] < 4 {
        return None;
    }
    for k in 1..n {
        if r[k] != 2 {
            continue;
        }
        let mut b = vec![r[0] - 3];
        b.extend_from_slice(&r[1..k]);
        let c: Vec<u32> = r[k + 1..].iter().rev().copied().collect();
        if dual_is(&b, &c) {
            return Some(Witness::DualPair {
                rotation: r.to_vec(),
                b,
                c,
                x: 0,
            });
        }
    }
    None
}

fn match_s2b(r: &[u32]) -> Option<Witness> {
    let n = r.len();
    if r[0] < 3 {
        return None;
    }
    let x = (r[0] - 3) as usize;
    for k in 1..n {
        let cl = k + x + 1;
        if cl >= n || r[k] < 2 || r[k + 1..cl].iter().any(|&e| e != 2) || r[cl] < 2 {
            continue;
        }
        let mut b = r[1..k].to_vec();
        b.push(r[k] - 1);
        let mut c: Vec<u32> = r[cl + 1..].iter().rev().copied().collect();
        c.push(r[cl] - 1);
        if k + c.len() >= 2 && dual_is(&b, &c) {
            return Some(Witness::DualPair {
                rotation: r.to_vec(),
                b,
                c,
                x: x as u32,
            });
        }
    }
    None
}

fn match_s2d(r: &[u32]) -> Option<Witness> {
    if r == [2, 2, 2, 4, 4] {
        return Some(Witness::Singleton(r.to_vec()));
    }
    let n = r.len();
    if n < 7 {
        return None;
    }
    let x = (n - 6) as u32;
    let mut pat = vec![2, 2 + x, 2, 3];
    pat.extend(std::iter::repeat_n(2, x as usize - 1));
    pat.extend([3, 4]);
    (pat == r).then(|| Witness::Twist {
        rotation: r.to_vec(),
        x,
    })
}

fn match_s2e(r: &[u32]) -> Option<Witness> {
    if r == [2, 2, 2, 3] {
        return Some(Witness::Singleton(r.to_vec()));
    }
    let n = r.len();
    if n < 6 || r[0] != 2 || r[n - 1] != 2 {
        return None;
    }
    for k in 1..n {
        if k + 2 >= n - 1 || r[k + 1] != 2 {
            continue;
        }
        let l = n - 3 - k;
        if l < 1 || k + l < 3 || r[1] < 3 || r[n - 2] < 3 {
            continue;
        }
        let mut b = vec![r[1] - 1];
        b.extend_from_slice(&r[2..k + 1]);
        // r[k+2 .. n-2] = c_l .. c_2, r[n-2] = c_1 + 1
        let mut c = vec![r[n - 2] - 1];
        c.extend(r[k + 2..n - 2].iter().rev().copied());
        if c.len() == l && dual_is(&b, &c) {
            return Some(Witness::DualPair {
                rotation: r.to_vec(),
                b,
                c,
                x: 0,
            });
        }
    }
    None
}

/// Membership in a family, with a witness.
pub fn in_family(a: &AssocString, f: Family) -> Option<Witness> {
    match f {
        Family::S2c => x_string(a).map(Witness::XString),
        Family::S2cDagger => {
            let w = x_string(a)?;
            let others = [Family::S2a, Family::S2b, Family::S2d, Family::S2e];
            others
                .iter()
                .all(|&g| in_family(a, g).is_none())
                .then_some(Witness::XString(w))
        }
        _ => {
            let m: fn(&[u32]) -> Option<Witness> = match f {
                Family::S2a => match_s2a,
                Family::S2b => match_s2b,
                Family::S2d => match_s2d,
                Family::S2e => match_s2e,
                _ => unreachable!(),
            };
            dihedral_images(&a.entries).iter().find_map(|r| m(r))
        }
    }
}

pub fn families(a: &AssocString) -> Vec<Family> {
    let mut out: Vec<Family> = Family::BASIC
        .iter()
        .copied()
        .filter(|&f| in_family(a, f).is_some())
        .collect();
    if out == [Family::S2c] {
        out.push(Family::S2cDagger);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XStringPatterns {
    pub s2a_pattern: bool,
    pub s2b_pattern: bool,
}

fn palindromic(v: &[u32]) -> bool {
    v.iter().eq(v.iter().rev())
}

fn s2a_pattern(x: &[u32]) -> bool {
    let n = x.len();
    if n == 1 {
        return x[0] >= 1;
    }
    x[0] == x[n - 1] + 2 && palindromic(&x[1..n - 1])
}

fn s2b_pattern(x: &[u32]) -> bool {
    let n = x.len();
    if n == 3 {
        return x[1] == 0;
    }
    n >= 5 && x[1] == 0 && x[n - 1] == x[2] + 1 && palindromic(&x[3..n - 1])
}

/// Classify an S2c string by the x-string patterns characterising
/// S2a ∩ S2c and S2b ∩ S2c.
pub fn x_string_patterns(a: &AssocString) -> Result<XStringPatterns, StringError> {
    let x = x_string(a).ok_or_else(|| StringError::Domain(format!("{a} is not in S2c")))?;
    let images = dihedral_images(x.values());
    Ok(XStringPatterns {
        s2a_pattern: images.iter().any(|v| s2a_pattern(v)),
        s2b_pattern: images.iter().any(|v| s2b_pattern(v)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumerated {
    pub string: AssocString,
    pub x_string: Option<XString>,
    pub crossings: u32,
    pub components: usize,
    pub families: Vec<Family>,
}

impl Enumerated {
    pub fn of(a: &AssocString) -> Self {
        let string = a.canonical();
        Enumerated {
            x_string: x_string(&string),
            crossings: string.crossings(),
            components: string.components(),
            families: families(&string),
            string,
        }
    }
}

fn extend_canonical(prefix: &mut Vec<u32>, budget: u32, out: &mut Vec<Vec<u32>>) {
    if !prefix.is_empty() && prefix.iter().any(|&e| e > 2) && is_canonical(prefix) {
        out.push(prefix.clone());
    }
    let min = prefix[0];
    for e in min..=budget + 1 {
        prefix.push(e);
        extend_canonical(prefix, budget - (e - 1), out);
        prefix.pop();
    }
}

/// All strings with at most `max_crossings` crossings, one per
/// rotation/reversal class, sorted by crossings then canonical entries;
/// optionally filtered by family.
pub fn enumerate(
    max_crossings: u32,
    filter: Option<Family>,
) -> Result<Vec<Enumerated>, StringError> {
    if max_crossings < 2 {
        return Err(StringError::Domain(
            "max_crossings must be at least 2".into(),
        ));
    }
    // a canonical string starts with its smallest entry
    let firsts: Vec<u32> = (2..=max_crossings + 1).collect();
    let raw: Vec<Vec<u32>> = firsts
        .par_iter()
        .flat_map_iter(|&e0| {
            let mut out = Vec::new();
            let mut prefix = vec![e0];
            extend_canonical(&mut prefix, max_crossings - (e0 - 1), &mut out);
            out
        })
        .collect();
    let uniq: BTreeSet<Vec<u32>> = raw.into_iter().collect();
    let mut recs: Vec<Enumerated> = uniq
        .into_par_iter()
        .filter_map(|v| {
            let a = AssocString { entries: v };
            match filter {
                Some(f) if in_family(&a, f).is_none() => None,
                _ => Some(Enumerated::of(&a)),
            }
        })
        .collect();
    recs.sort_by(|x, y| (x.crossings, &x.string).cmp(&(y.crossings, &y.string)));
    Ok(recs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> AssocString {
        AssocString::new(v.to_vec()).unwrap()
    }

    #[test]
    fn duals() {
        assert_eq!(linear_dual(&[2, 2, 3, 3]).unwrap(), vec![4, 3, 2]);
        assert_eq!(linear_dual(&[2, 2, 2]).unwrap(), vec![4]);
        assert_eq!(linear_dual(&[1]).unwrap(), Vec::<u32>::new());
        assert_eq!(linear_dual(&[2]).unwrap(), vec![2]);
        assert_eq!(linear_dual(&[3]).unwrap(), vec![2, 2]);
        assert!(linear_dual(&[]).is_err());
        assert!(linear_dual(&[0, 3]).is_err());
    }

    #[test]
    fn braid_round_trip() {
        let b1 = BraidWord::from_exponents(&[2, -2, 2, -2, 1, -2, 2, -2, 2, -1]);
        assert_eq!(from_braid(&b1).unwrap(), s(&[2, 4, 2, 4, 4, 2, 4, 2, 3]));
        let b2 = BraidWord::from_exponents(&[3, -2, 1, -1, 2, -3, 2, -1, 1, -2]);
        assert!(from_braid(&b2)
            .unwrap()
            .equivalent(&s(&[2, 2, 4, 3, 2, 5, 2, 3, 4])));
        assert_eq!(to_braid(&s(&[3])).letters(), &[1, -2]);
        assert_eq!(to_braid(&s(&[3, 3])).letters(), &[1, -2, 1, -2]);
        assert!(from_braid(&"1,2".parse().unwrap()).is_err());
    }

    #[test]
    fn x_strings() {
        assert_eq!(x_string(&s(&[3; 7])).unwrap().values(), &[0; 7]);
        assert_eq!(x_string(&s(&[2, 2, 2, 3])), None);
        let row2 = from_x_string(&"[1,1,1,1,0]".parse().unwrap());
        assert!(row2.equivalent(&s(&[2, 4, 2, 4, 4, 2, 4, 2, 3])));
        let row5 = from_x_string(&"[3,0,0,0,0,0,0]".parse().unwrap());
        assert!(row5.equivalent(&s(&[2, 2, 2, 3, 3, 3, 6, 3, 3, 3])));
        let m = 4;
        let mut v = vec![3 + m, 3, 3];
        v.extend(std::iter::repeat_n(2, m as usize));
        v.extend([3, 3]);
        assert_eq!(
            x_string(&s(&v)).unwrap().canonical(),
            XString::new(vec![0, 0, 0, 0, m]).unwrap().canonical()
        );
    }

    #[test]
    fn singleton_families() {
        assert!(in_family(&s(&[2, 2, 2, 3]), Family::S2e).is_some());
        assert!(in_family(&s(&[2, 2, 2, 4, 4]), Family::S2d).is_some());
        assert!(in_family(&s(&[4, 2]), Family::S2a).is_some());
        assert!(in_family(&s(&[2, 4, 2, 4, 4, 2, 4, 2, 3]), Family::S2cDagger).is_some());
        assert_eq!(s(&[2, 2, 2, 4, 4]).i_invariant(), 1);
        assert_eq!(s(&[2, 2, 2, 3]).i_invariant(), 3);
    }

    #[test]
    fn small_enumeration_is_complete() {
        let e = enumerate(3, None).unwrap();
        let strs: Vec<String> = e.iter().map(|r| r.string.to_string()).collect();
        assert_eq!(strs, vec!["(3)", "(2,3)", "(4)"]);
    }
}
