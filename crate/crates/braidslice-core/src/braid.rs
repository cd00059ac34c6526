//! Words in the three-strand braid group, closure combinatorics, the dual
//! sub-braid cancellation identity and Wirtinger presentations of closures.

use crate::error::{PipelineError, StringError};
use crate::exact_algebra::{Coeff, LaurentPoly, Matrix};
use crate::string_calculus::linear_dual;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Letters are signed generator indices: `1 = σ1`, `-1 = σ1⁻¹`, `2 = σ2`, `-2 = σ2⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct BraidWord {
    letters: Vec<i8>,
}

impl BraidWord {
    pub fn new(letters: Vec<i8>) -> Result<Self, StringError> {
        if let Some(bad) = letters.iter().find(|l| !matches!(l.abs(), 1 | 2)) {
            return Err(StringError::Invalid(format!(
                "braid letter {bad} is not one of ±1, ±2"
            )));
        }
        Ok(BraidWord { letters })
    }

    pub fn empty() -> Self {
        BraidWord {
            letters: Vec::new(),
        }
    }

    /// `σ1^{e0} σ2^{e1} σ1^{e2} ...` from a list of exponents.
    pub fn from_exponents(exps: &[i64]) -> Self {
        let mut letters = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            let g: i8 = if i % 2 == 0 { 1 } else { 2 };
            let s = if e > 0 { g } else { -g };
            letters.extend(std::iter::repeat_n(s, e.unsigned_abs() as usize));
        }
        BraidWord { letters }
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, o: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        BraidWord { letters }
    }

    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { letters }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Image in S3 acting on strand positions `0, 1, 2`.
    pub fn permutation(&self) -> [usize; 3] {
        let mut p = [0, 1, 2];
        for l in &self.letters {
            let g = l.unsigned_abs() as usize;
            p.swap(g - 1, g);
        }
        p
    }

    pub fn uses_both_generators(&self) -> bool {
        self.letters.iter().any(|l| l.abs() == 1) && self.letters.iter().any(|l| l.abs() == 2)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for BraidWord {
    type Err = StringError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let letters = s
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                tok.trim().parse::<i8>().map_err(|_| {
                    StringError::Invalid(format!(
                        "token {} ({:?}) is not an integer",
                        i + 1,
                        tok.trim()
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(letters)
    }
}

/// Number of cycles of the permutation image.
pub fn closure_components(w: &BraidWord) -> usize {
    let p = w.permutation();
    let mut seen = [false; 3];
    let mut cycles = 0;
    for s in 0..3 {
        if !seen[s] {
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
            }
        }
    }
    cycles
}

pub type BurauMatrix = Matrix<LaurentPoly<BigInt>>;

/// Reduced Burau image of a single letter.
pub fn burau_letter(l: i8) -> BurauMatrix {
    let c = |v: i64, e: i64| LaurentPoly::monomial(BigInt::from(v), e);
    let z = LaurentPoly::<BigInt>::zero;
    let rows = match l {
        1 => vec![vec![c(-1, 1), c(1, 0)], vec![z(), c(1, 0)]],
        -1 => vec![vec![c(-1, -1), c(1, -1)], vec![z(), c(1, 0)]],
        2 => vec![vec![c(1, 0), z()], vec![c(1, 1), c(-1, 1)]],
        -2 => vec![vec![c(1, 0), z()], vec![c(1, 0), c(-1, -1)]],
        _ => unreachable!("validated letter"),
    };
    Matrix::from_rows(rows)
}

pub fn burau(w: &BraidWord) -> BurauMatrix {
    let one = LaurentPoly::constant(BigInt::one());
    let mut acc = Matrix::from_fn(2, 2, |i, j| {
        if i == j {
            one.clone()
        } else {
            LaurentPoly::zero()
        }
    });
    for &l in w.letters() {
        acc = acc.mul(&burau_letter(l));
    }
    acc
}

/// Word problem in B3 via the (faithful) reduced Burau representation.
pub fn is_identity_b3(w: &BraidWord) -> bool {
    let m = burau(w);
    (0..2).all(|i| {
        (0..2).all(|j| {
            let e = m.get(i, j);
            if i == j {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    })
}

/// Independent oracle: B3 → SL2(Z) has kernel generated by the square of the
/// full twist, on which the exponent sum is injective.
pub fn is_identity_sl2(w: &BraidWord) -> bool {
    let mut m = [
        [BigInt::one(), BigInt::zero()],
        [BigInt::zero(), BigInt::one()],
    ];
    for &l in w.letters() {
        let g: [[i64; 2]; 2] = match l {
            1 => [[1, 1], [0, 1]],
            -1 => [[1, -1], [0, 1]],
            2 => [[1, 0], [-1, 1]],
            -2 => [[1, 0], [1, 1]],
            _ => unreachable!(),
        };
        let mut n = [
            [BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::zero()],
        ];
        for i in 0..2 {
            for j in 0..2 {
                n[i][j] = &m[i][0] * g[0][j] + &m[i][1] * g[1][j];
            }
        }
        m = n;
    }
    let id = [[1, 0], [0, 1]];
    (0..2).all(|i| (0..2).all(|j| m[i][j] == BigInt::from(id[i][j]))) && w.exponent_sum() == 0
}

/// `σ1 (σ2⁻¹)^{e1−2} σ1 (σ2⁻¹)^{e2−2} σ1 ... σ1`.
fn ladder(entries: &[u32]) -> Vec<i8> {
    let mut out = vec![1];
    for &e in entries {
        out.extend(std::iter::repeat_n(-2, e as usize - 2));
        out.push(1);
    }
    out
}

fn trimmed(mut v: Vec<i8>, left: usize, right: usize) -> Vec<i8> {
    if left + right >= v.len() {
        return Vec::new();
    }
    v.truncate(v.len() - right);
    v.drain(..left);
    v
}

/// The sub-braids `B` and `C` cut out of the closure of a string containing
/// the dual pair `(b, c)` with boundary perturbations `x_l, x_r` on the `b`
/// side and `y_l, y_r` on the `c` side. Each is the ladder of its perturbed
/// string with the outermost crossings (those shared with neighbouring
/// regions) removed.
pub fn dual_subbraids(
    b: &[u32],
    c: &[u32],
    x: (u32, u32),
    y: (u32, u32),
) -> Result<(BraidWord, BraidWord), StringError> {
    if b.is_empty() || c.is_empty() {
        return Err(StringError::Domain(
            "dual sub-braids need two non-empty strings".into(),
        ));
    }
    if linear_dual(b)? != c {
        return Err(StringError::Domain(format!(
            "{c:?} is not the linear dual of {b:?}"
        )));
    }
    let perturb = |s: &[u32], l: u32, r: u32| {
        let mut v = s.to_vec();
        v[0] += l;
        let n = v.len();
        v[n - 1] += r;
        v
    };
    let bb = perturb(b, x.0, x.1);
    let crev: Vec<u32> = c.iter().rev().copied().collect();
    let cc = perturb(&crev, y.0, y.1);
    let bw = trimmed(ladder(&bb), x.0 as usize + 1, x.1 as usize + 1);
    let cw = trimmed(ladder(&cc), y.0 as usize + 1, y.1 as usize + 1);
    Ok((BraidWord { letters: bw }, BraidWord { letters: cw }))
}

/// Checks `B Δ⁻¹ C = Δ⁻¹` with `Δ = σ2 σ1 σ2`.
pub fn verify_dual_cancellation(b: &BraidWord, c: &BraidWord) -> bool {
    let delta = BraidWord {
        letters: vec![2, 1, 2],
    };
    let w = b.concat(&delta.inverse()).concat(c).concat(&delta);
    is_identity_b3(&w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    /// Position of the letter in the braid word.
    pub letter: usize,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub arcs: usize,
    pub crossings: Vec<Crossing>,
}

/// Relation `g_i g_j g_i⁻¹ g_k⁻¹` stored as `(i, j, k)`, generators 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WirtingerPresentation {
    pub n: usize,
    pub relations: Vec<(usize, usize, usize)>,
}

/// Arcs are numbered from 1 along the closure, starting on the top strand at
/// the left edge and increasing at each undercrossing. At a positive letter
/// the strand moving down is over; at a negative letter the one moving up.
pub fn wirtinger(w: &BraidWord) -> Result<(Diagram, WirtingerPresentation), PipelineError> {
    if w.is_empty() || closure_components(w) != 1 {
        return Err(PipelineError::Unsupported(format!(
            "closure has {} components; only knots are supported",
            closure_components(w)
        )));
    }
    let n = w.len();
    let mut over = vec![0usize; n];
    let mut under_in = vec![0usize; n];
    let mut under_out = vec![0usize; n];
    let mut pos = 0usize;
    let mut arc = 1usize;
    loop {
        for (k, &l) in w.letters().iter().enumerate() {
            let lo = l.unsigned_abs() as usize - 1;
            if pos != lo && pos != lo + 1 {
                continue;
            }
            let going_down = pos == lo;
            if going_down == (l > 0) {
                over[k] = arc;
            } else {
                under_in[k] = arc;
                arc += 1;
                under_out[k] = arc;
            }
            pos = if going_down { lo + 1 } else { lo };
        }
        if pos == 0 {
            break;
        }
    }
    let arcs = arc - 1;
    let wrap = |a: usize| (a - 1) % arcs + 1;
    let mut crossings = Vec::with_capacity(n);
    let mut relations = Vec::with_capacity(n);
    for (k, &l) in w.letters().iter().enumerate() {
        let (o, i, j) = (wrap(over[k]), wrap(under_in[k]), wrap(under_out[k]));
        crossings.push(Crossing {
            letter: k,
            over: o,
            under_in: i,
            under_out: j,
            sign: l.signum(),
        });
        relations.push(if l > 0 { (o, j, i) } else { (o, i, j) });
    }
    Ok((
        Diagram { arcs, crossings },
        WirtingerPresentation { n: arcs, relations },
    ))
}
