//! Order-q² submodules of `M ⊕ M`, `M = (Z/q)[t]/(t² + t + 1)`, the ones on
//! which the linking form vanishes, and characters killing them.
//!
//! Vectors use coordinates on `{a, ta, b, tb}`.

use crate::branched_cover::{t_on_basis, LinkingForm};
use crate::error::PipelineError;
use crate::exact_algebra::modp::{is_prime, mulmod, nullspace_mod, rref};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The two roots of `t² + t + 1` mod `q`, smaller first; `None` when it is irreducible.
pub fn cube_roots(q: u64) -> Option<(u64, u64)> {
    let r: Vec<u64> = (0..q).filter(|&r| (r * r + r + 1) % q == 0).collect();
    match r[..] {
        [a, b] => Some((a, b)),
        _ => None,
    }
}

/// Element `c0 + c1·t` of `M`.
pub type MElem = [u64; 2];

pub fn m_mul(x: MElem, y: MElem, q: u64) -> MElem {
    let (a, b) = (x[0] % q, x[1] % q);
    let (c, d) = (y[0] % q, y[1] % q);
    let bd = mulmod(b, d, q);
    [
        (mulmod(a, c, q) + q - bd) % q,
        (mulmod(a, d, q) + mulmod(b, c, q) + q - bd) % q,
    ]
}

fn neg(x: u64, q: u64) -> u64 {
    (q - x % q) % q
}

/// `x·a + y·b` in coordinates.
pub fn vector(x: MElem, y: MElem) -> [u64; 4] {
    [x[0], x[1], y[0], y[1]]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubmoduleTag {
    /// `span{a}`
    N0,
    /// `span{(k0 + k1 t)a + b}`
    Graph(u64, u64),
    /// `span{αa, αb}`
    Alpha,
    /// `span{βa, βb}`
    Beta,
    /// `span{αa, k0 a + βb}`
    AlphaBeta(u64),
    /// `span{βa, k0 a + αb}`
    BetaAlpha(u64),
}

impl fmt::Display for SubmoduleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubmoduleTag::N0 => write!(f, "N_0"),
            SubmoduleTag::Graph(a, b) => write!(f, "N_{{{a},{b}}}"),
            SubmoduleTag::Alpha => write!(f, "N_0^α"),
            SubmoduleTag::Beta => write!(f, "N_0^β"),
            SubmoduleTag::AlphaBeta(k) => write!(f, "N_{k}^αβ"),
            SubmoduleTag::BetaAlpha(k) => write!(f, "N_{k}^βα"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Submodule {
    pub q: u64,
    pub tag: SubmoduleTag,
    /// Module generators as `(coefficient of a, coefficient of b)`.
    pub generators: Vec<(MElem, MElem)>,
    /// Reduced row echelon basis over `Z/q`.
    pub basis: Vec<[u64; 4]>,
}

/// Reduced echelon basis of the `Z/q`-span of the vectors.
pub fn span(vectors: &[[u64; 4]], q: u64) -> Vec<[u64; 4]> {
    let mut m: Vec<Vec<u64>> = vectors
        .iter()
        .map(|v| v.iter().map(|x| x % q).collect())
        .collect();
    let r = rref(&mut m, q).len();
    m.truncate(r);
    m.into_iter().map(|v| [v[0], v[1], v[2], v[3]]).collect()
}

impl Submodule {
    fn new(q: u64, tag: SubmoduleTag, generators: Vec<(MElem, MElem)>) -> Self {
        let mut vs = Vec::new();
        for &(x, y) in &generators {
            let v = vector(x, y);
            let tv = t_on_basis(&v, q);
            vs.push(v);
            vs.push([tv[0], tv[1], tv[2], tv[3]]);
        }
        let basis = span(&vs, q);
        Submodule {
            q,
            tag,
            generators,
            basis,
        }
    }

    pub fn order_exponent(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[u64; 4]) -> bool {
        let mut vs = self.basis.clone();
        vs.push(*v);
        span(&vs, self.q).len() == self.basis.len()
    }

    pub fn is_t_invariant(&self) -> bool {
        self.basis.iter().all(|v| {
            let tv = t_on_basis(v, self.q);
            self.contains(&[tv[0], tv[1], tv[2], tv[3]])
        })
    }
}

/// Every order-q² `t`-invariant submodule of `M ⊕ M`, as tagged families.
pub fn enumerate_submodules(q: u64) -> Result<Vec<Submodule>, PipelineError> {
    if !is_prime(q) {
        return Err(PipelineError::Unsupported(format!("{q} is not prime")));
    }
    let Some((r, rp)) = cube_roots(q) else {
        return Err(PipelineError::Unsupported(format!(
            "t² + t + 1 is irreducible mod {q}; M has no proper submodules"
        )));
    };
    let alpha: MElem = [neg(r, q), 1];
    let beta: MElem = [neg(rp, q), 1];
    let zero: MElem = [0, 0];
    let one: MElem = [1, 0];
    let mut out = vec![Submodule::new(q, SubmoduleTag::N0, vec![(one, zero)])];
    for k0 in 0..q {
        for k1 in 0..q {
            out.push(Submodule::new(
                q,
                SubmoduleTag::Graph(k0, k1),
                vec![([k0, k1], one)],
            ));
        }
    }
    out.push(Submodule::new(
        q,
        SubmoduleTag::Alpha,
        vec![(alpha, zero), (zero, alpha)],
    ));
    out.push(Submodule::new(
        q,
        SubmoduleTag::Beta,
        vec![(beta, zero), (zero, beta)],
    ));
    for k0 in 0..q {
        out.push(Submodule::new(
            q,
            SubmoduleTag::AlphaBeta(k0),
            vec![(alpha, zero), ([k0, 0], beta)],
        ));
    }
    for k0 in 0..q {
        out.push(Submodule::new(
            q,
            SubmoduleTag::BetaAlpha(k0),
            vec![(beta, zero), ([k0, 0], alpha)],
        ));
    }
    Ok(out)
}

/// Independent check: every 2-dimensional subspace of `(Z/q)⁴` closed under `t`.
pub fn brute_force_submodules(q: u64) -> Vec<Vec<[u64; 4]>> {
    let mut out = Vec::new();
    // reduced echelon 2×4 matrices, by pivot pair
    for p0 in 0..4 {
        for p1 in p0 + 1..4 {
            let free0: Vec<usize> = (p0 + 1..4).filter(|&c| c != p1).collect();
            let free1: Vec<usize> = (p1 + 1..4).collect();
            let nfree = free0.len() + free1.len();
            let total = q.pow(nfree as u32);
            for code in 0..total {
                let mut c = code;
                let mut v0 = [0u64; 4];
                let mut v1 = [0u64; 4];
                v0[p0] = 1;
                v1[p1] = 1;
                for &f in &free0 {
                    v0[f] = c % q;
                    c /= q;
                }
                for &f in &free1 {
                    v1[f] = c % q;
                    c /= q;
                }
                let basis = vec![v0, v1];
                let closed = basis.iter().all(|v| {
                    let tv = t_on_basis(v, q);
                    let mut vs = basis.clone();
                    vs.push([tv[0], tv[1], tv[2], tv[3]]);
                    span(&vs, q).len() == 2
                });
                if closed {
                    out.push(basis);
                }
            }
        }
    }
    out
}

/// `λ` vanishes on `N × N`.
pub fn is_metaboliser(lambda: &LinkingForm, n: &Submodule) -> bool {
    n.basis
        .iter()
        .all(|x| n.basis.iter().all(|y| lambda.eval(x, y) == 0))
}

pub fn metabolisers(lambda: &LinkingForm, q: u64) -> Result<Vec<Submodule>, PipelineError> {
    if lambda.q != q {
        return Err(PipelineError::Unsupported(format!(
            "linking form has denominator {}, not {q}",
            lambda.q
        )));
    }
    Ok(enumerate_submodules(q)?
        .into_iter()
        .filter(|n| is_metaboliser(lambda, n))
        .collect())
}

/// Values on `{a, ta, b, tb}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Character {
    pub q: u64,
    pub values: [u64; 4],
}

impl Character {
    pub fn eval(&self, v: &[u64]) -> u64 {
        (0..4).fold(0, |acc, i| {
            (acc + mulmod(self.values[i], v[i] % self.q, self.q)) % self.q
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&x| x == 0)
    }

    pub fn symmetric(&self) -> [i64; 4] {
        let q = self.q;
        self.values.map(|x| {
            if 2 * x > q {
                x as i64 - q as i64
            } else {
                x as i64
            }
        })
    }

    pub fn scaled(&self, k: u64) -> Character {
        Character {
            q: self.q,
            values: self.values.map(|x| mulmod(x, k, self.q)),
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.symmetric();
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// A nontrivial character vanishing on `N`. The annihilator of an order-q²
/// submodule is two-dimensional; the character is pinned by `χ(a) = χ(b) = 1`
/// when possible, and otherwise by the first of `χ(a) = 1`, `χ(b) = 1`,
/// `χ(ta) = 1` that applies.
pub fn vanishing_character(n: &Submodule) -> Result<Character, PipelineError> {
    let q = n.q;
    let rows: Vec<Vec<u64>> = n.basis.iter().map(|v| v.to_vec()).collect();
    let ann = nullspace_mod(&rows, 4, q);
    let mk = |v: &[u64]| Character {
        q,
        values: [v[0], v[1], v[2], v[3]],
    };
    let solve = |fix: &[(usize, u64)]| -> Option<Character> {
        // coefficients x on the annihilator basis with prescribed coordinates
        let m: Vec<Vec<u64>> = fix
            .iter()
            .map(|&(i, _)| ann.iter().map(|a| a[i]).collect())
            .collect();
        let rhs: Vec<u64> = fix.iter().map(|&(_, v)| v).collect();
        let (x, _) = crate::exact_algebra::modp::solve_mod(&m, &rhs, q)?;
        let mut out = [0u64; 4];
        for (c, a) in x.iter().zip(&ann) {
            for i in 0..4 {
                out[i] = (out[i] + mulmod(*c, a[i], q)) % q;
            }
        }
        Some(mk(&out))
    };
    [&[(0, 1), (2, 1)][..], &[(0, 1)], &[(2, 1)], &[(1, 1)]]
        .iter()
        .find_map(|fix| solve(fix))
        .filter(|c| !c.is_trivial() && n.basis.iter().all(|v| c.eval(v) == 0))
        .ok_or_else(|| PipelineError::Construction(format!("no character vanishes on {}", n.tag)))
}

/// Every character vanishing on `n`, the trivial one included.
pub fn annihilator(n: &Submodule) -> Vec<Character> {
    let q = n.q;
    let rows: Vec<Vec<u64>> = n.basis.iter().map(|v| v.to_vec()).collect();
    let ann = nullspace_mod(&rows, 4, q);
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; ann.len()];
    loop {
        let mut values = [0u64; 4];
        for (c, a) in coeffs.iter().zip(&ann) {
            for i in 0..4 {
                values[i] = (values[i] + mulmod(*c, a[i], q)) % q;
            }
        }
        out.push(Character { q, values });
        let Some(pos) = coeffs.iter().position(|&c| c + 1 < q) else {
            break;
        };
        coeffs[pos] += 1;
        coeffs[..pos].iter_mut().for_each(|c| *c = 0);
    }
    out
}
