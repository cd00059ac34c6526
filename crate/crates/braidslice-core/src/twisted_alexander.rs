//! Metabelian representations of the knot group and reduced twisted
//! Alexander polynomials.
//!
//! `M = (Z/q)[t]/(t² + t + 1)` and elements of `M ⊕ M` are stored in the
//! coordinates `(a, ta, b, tb)`. The semidirect product `Z ⋉ (M ⊕ M)` uses
//! `(t^m, x)(t^n, y) = (t^{m+n}, t^{-n}x + y)`, and each meridian `g_i` maps
//! to `(t, v_i)`.

use crate::braid::{wirtinger, BraidWord, Diagram, WirtingerPresentation};
use crate::branched_cover::{blanchfield, branched_homology, check_module_structure, linking_form};
use crate::error::PipelineError;
use crate::exact_algebra::det::det_poly_matrix;
use crate::exact_algebra::factor::poly_key;
use crate::exact_algebra::modp::{is_prime, mulmod, solve_mod};
use crate::exact_algebra::norm::{is_norm, NormVerdict};
use crate::exact_algebra::{CPoly, CycNum, LaurentPoly, Matrix};
use crate::metabolisers::{annihilator, metabolisers, vanishing_character, Character, Submodule};
use crate::seifert::{seifert_matrix, SeifertMatrix};
use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub type MVec = [u64; 4];
type Mat4 = [[u64; 4]; 4];

/// Word in the Wirtinger generators; `(index, ±1)` with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupWord(pub Vec<(usize, i8)>);

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .0
            .iter()
            .map(|&(g, e)| {
                if e > 0 {
                    format!("g{g}")
                } else {
                    format!("g{g}^-1")
                }
            })
            .join("*");
        write!(f, "{s}")
    }
}

impl FromStr for GroupWord {
    type Err = PipelineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PipelineError::Construction(format!("cannot parse generator word {s:?}"));
        let mut out = Vec::new();
        for tok in s.split('*').map(str::trim) {
            let tok = tok.strip_prefix('g').ok_or_else(bad)?;
            let (idx, e) = match tok.split_once('^') {
                Some((i, "-1")) => (i, -1),
                Some((i, "1")) => (i, 1),
                Some(_) => return Err(bad()),
                None => (tok, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 {
                return Err(bad());
            }
            out.push((idx, e));
        }
        Ok(GroupWord(out))
    }
}

fn t_matrix(q: u64) -> Mat4 {
    let m = q - 1;
    [[0, m, 0, 0], [1, m, 0, 0], [0, 0, 0, m], [0, 0, 1, m]]
}

fn mat_mul(a: &Mat4, b: &Mat4, q: u64) -> Mat4 {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).fold(0, |acc, k| (acc + mulmod(a[i][k], b[k][j], q)) % q);
        }
    }
    out
}

fn mat_vec(a: &Mat4, v: &MVec, q: u64) -> MVec {
    let mut out = [0; 4];
    for i in 0..4 {
        out[i] = (0..4).fold(0, |acc, k| (acc + mulmod(a[i][k], v[k], q)) % q);
    }
    out
}

fn mat_scale(a: &Mat4, c: u64, q: u64) -> Mat4 {
    a.map(|r| r.map(|x| mulmod(x, c, q)))
}

fn mat_add(a: &Mat4, b: &Mat4, q: u64) -> Mat4 {
    let mut out = *a;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (a[i][j] + b[i][j]) % q;
        }
    }
    out
}

fn identity4() -> Mat4 {
    let mut m = [[0; 4]; 4];
    for (i, r) in m.iter_mut().enumerate() {
        r[i] = 1;
    }
    m
}

fn t_pow(k: i64, q: u64) -> Mat4 {
    let t = t_matrix(q);
    (0..k.rem_euclid(3)).fold(identity4(), |acc, _| mat_mul(&t, &acc, q))
}

/// `t^k · v`.
pub fn t_shift(v: &MVec, k: i64, q: u64) -> MVec {
    mat_vec(&t_pow(k, q), v, q)
}

/// Linear form of `l(word)` in the unknowns: generator index to coefficient matrix.
fn l_linear(word: &GroupWord, q: u64) -> Result<BTreeMap<usize, Mat4>, PipelineError> {
    let t = t_matrix(q);
    let t2 = mat_mul(&t, &t, q);
    let mut comb: BTreeMap<usize, Mat4> = BTreeMap::new();
    let mut m = 0i64;
    for &(g, e) in &word.0 {
        let (twist, y) = if e > 0 {
            (t2, identity4())
        } else {
            (t, mat_scale(&t, q - 1, q))
        };
        for c in comb.values_mut() {
            *c = mat_mul(&twist, c, q);
        }
        let slot = comb.entry(g).or_insert([[0; 4]; 4]);
        *slot = mat_add(slot, &y, q);
        m += i64::from(e);
    }
    if m != 0 {
        return Err(PipelineError::Construction(format!(
            "{word} has exponent sum {m}, so it does not lift to the cover"
        )));
    }
    Ok(comb)
}

/// Evaluates `l(word)` for known `v_i`.
pub fn l_value(word: &GroupWord, v: &[MVec], q: u64) -> Result<MVec, PipelineError> {
    let comb = l_linear(word, q)?;
    let mut out = [0; 4];
    for (g, c) in comb {
        let x = v
            .get(g - 1)
            .ok_or_else(|| PipelineError::Construction(format!("g{g} out of range")))?;
        let y = mat_vec(&c, x, q);
        for i in 0..4 {
            out[i] = (out[i] + y[i]) % q;
        }
    }
    Ok(out)
}

/// Closed curve dual to one Seifert band loop, as a word in the meridians.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCurve {
    /// Generator row (1 or 2) the loop runs along.
    pub row: u8,
    pub word: GroupWord,
}

/// Row shift: loops on the second generator row pick up one factor of `t`.
pub fn row_shift(row: u8) -> i64 {
    i64::from(row) - 1
}

/// One dual curve per Seifert loop. The curve around loop `(s, e)` crosses the
/// belts at every later loop end on the same row.
pub fn dual_curve_words(w: &BraidWord, s: &SeifertMatrix) -> Result<Vec<DualCurve>, PipelineError> {
    let (d, _) = wirtinger(w)?;
    Ok(dual_curves_from(w, &d, s))
}

fn dual_curves_from(w: &BraidWord, d: &Diagram, s: &SeifertMatrix) -> Vec<DualCurve> {
    let x = w.letters();
    let belt = |k: usize| -> [(usize, i8); 2] {
        let c = &d.crossings[k];
        if x[k] > 0 {
            [(c.under_out, -1), (c.over, 1)]
        } else {
            [(c.under_out, 1), (c.over, -1)]
        }
    };
    s.loops()
        .iter()
        .map(|&(start, end)| {
            let row = x[start].unsigned_abs();
            let word = s
                .loops()
                .iter()
                .filter(|&&(s2, e2)| x[s2].unsigned_abs() == row && e2 >= end)
                .flat_map(|&(_, e2)| belt(e2))
                .collect();
            DualCurve {
                row,
                word: GroupWord(word),
            }
        })
        .collect()
}

/// How the two module generators are tied to the dual curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Frame {
    /// `l(ŝ) = t^{-s(row)}` times the generator, so that every dual curve
    /// satisfies the Seifert relations.
    RowShifted,
    /// `l(ŝ)` equals the generator, as read off the diagram.
    Unshifted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchor {
    pub word: GroupWord,
    pub target: MVec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LMapSolution {
    pub q: u64,
    /// `v_i = l(g_1^{-1} g_i)`, index 0 is `v_1`.
    pub v: Vec<MVec>,
}

fn fmt_m(c0: u64, c1: u64) -> Option<String> {
    match (c0, c1) {
        (0, 0) => None,
        (c0, 0) => Some(if c0 == 1 {
            String::new()
        } else {
            c0.to_string()
        }),
        (0, c1) => Some(if c1 == 1 {
            "t".into()
        } else {
            format!("{c1}t")
        }),
        (c0, c1) => Some(if c1 == 1 {
            format!("(t+{c0})")
        } else {
            format!("({c1}t+{c0})")
        }),
    }
}

/// `(6t+5)a + 5tb` style.
pub fn format_m2(v: &MVec) -> String {
    let parts: Vec<String> = [(v[0], v[1], "a"), (v[2], v[3], "b")]
        .iter()
        .filter_map(|&(c0, c1, s)| fmt_m(c0, c1).map(|c| format!("{c}{s}")))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl LMapSolution {
    pub fn formatted(&self) -> Vec<String> {
        self.v.iter().map(format_m2).collect()
    }

    /// `(1 − t)v_i + t v_j − v_k = 0` for each relation.
    pub fn satisfies(&self, pres: &WirtingerPresentation) -> bool {
        let q = self.q;
        pres.relations.iter().all(|&(i, j, k)| {
            let (vi, vj, vk) = (self.v[i - 1], self.v[j - 1], self.v[k - 1]);
            let ti = t_shift(&vi, 1, q);
            let tj = t_shift(&vj, 1, q);
            (0..4).all(|c| (vi[c] + 2 * q - ti[c] + tj[c] + q - vk[c]).is_multiple_of(q))
        }) && self.v[0] == [0; 4]
    }
}

pub fn solve_lmap(
    pres: &WirtingerPresentation,
    anchors: &[Anchor],
    q: u64,
) -> Result<LMapSolution, PipelineError> {
    let n = pres.n;
    let t = t_matrix(q);
    let one_minus_t = mat_add(&identity4(), &mat_scale(&t, q - 1, q), q);
    let minus_one = mat_scale(&identity4(), q - 1, q);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut rhs: Vec<u64> = Vec::new();
    let mut push = |blocks: &BTreeMap<usize, Mat4>, target: &MVec| {
        for r in 0..4 {
            let mut row = vec![0u64; 4 * n];
            for (&g, m) in blocks {
                for c in 0..4 {
                    let slot = &mut row[4 * (g - 1) + c];
                    *slot = (*slot + m[r][c]) % q;
                }
            }
            rows.push(row);
            rhs.push(target[r]);
        }
    };
    for &(i, j, k) in &pres.relations {
        let mut b: BTreeMap<usize, Mat4> = BTreeMap::new();
        for (g, m) in [(i, one_minus_t), (j, t), (k, minus_one)] {
            let e = b.entry(g).or_insert([[0; 4]; 4]);
            *e = mat_add(e, &m, q);
        }
        push(&b, &[0; 4]);
    }
    push(&BTreeMap::from([(1, identity4())]), &[0; 4]);
    for a in anchors {
        if a.word.0.iter().any(|&(g, _)| g == 0 || g > n) {
            return Err(PipelineError::Construction(format!(
                "{} uses a generator outside g1..g{n}",
                a.word
            )));
        }
        push(&l_linear(&a.word, q)?, &a.target);
    }
    let (x, free) = solve_mod(&rows, &rhs, q)
        .ok_or_else(|| PipelineError::Construction("l-map system is inconsistent".into()))?;
    if free != 0 {
        return Err(PipelineError::Construction(format!(
            "l-map system leaves {free} free coordinates"
        )));
    }
    let v = x.chunks(4).map(|c| [c[0], c[1], c[2], c[3]]).collect();
    Ok(LMapSolution { q, v })
}

/// Anchors tying `a` and `b` to the dual curves of Seifert loops `gens`.
pub fn anchors_for(duals: &[DualCurve], gens: (usize, usize), frame: Frame, q: u64) -> Vec<Anchor> {
    [(gens.0, [1, 0, 0, 0]), (gens.1, [0, 0, 1, 0])]
        .into_iter()
        .map(|(g, target)| {
            let d = &duals[g];
            let k = match frame {
                Frame::RowShifted => -row_shift(d.row),
                Frame::Unshifted => 0,
            };
            Anchor {
                word: d.word.clone(),
                target: t_shift(&target, k, q),
            }
        })
        .collect()
}

/// Number of Seifert relations `Σ_j (t S_{jr} − S_{rj}) t^{s_j} l(ŝ_j) = 0`
/// that fail.
pub fn dual_relation_failures(
    s: &SeifertMatrix,
    duals: &[DualCurve],
    sol: &LMapSolution,
) -> Result<usize, PipelineError> {
    let q = sol.q;
    let d: Vec<MVec> = duals
        .iter()
        .map(|c| l_value(&c.word, &sol.v, q).map(|x| t_shift(&x, row_shift(c.row), q)))
        .collect::<Result<_, _>>()?;
    let n = s.size();
    let mut bad = 0;
    for r in 0..n {
        let mut tot = [0u64; 4];
        for (j, dj) in d.iter().enumerate() {
            let tdj = t_shift(dj, 1, q);
            let a = s.get(j, r).rem_euclid(q as i64) as u64;
            let b = s.get(r, j).rem_euclid(q as i64) as u64;
            for c in 0..4 {
                tot[c] = (tot[c] + mulmod(a, tdj[c], q) + q - mulmod(b, dj[c], q)) % q;
            }
        }
        if tot != [0; 4] {
            bad += 1;
        }
    }
    Ok(bad)
}

type PMat = Matrix<LaurentPoly<CycNum>>;

fn cconst(q: u32, k: i64) -> LaurentPoly<CycNum> {
    LaurentPoly::constant(CycNum::from_int(q, k))
}

/// `φ_χ(g_i) = P · diag(ζ^{χ(v)}, ζ^{χ(tv)}, ζ^{χ(t²v)})` with
/// `P = [[0, 1, 0], [0, 0, 1], [t, 0, 0]]`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub q: u64,
    pub character: Character,
    pub exponents: Vec<[u64; 3]>,
    pub matrices: Vec<PMat>,
}

pub fn meridian_matrix(q: u32, e: [u64; 3]) -> PMat {
    let z = LaurentPoly::zero();
    let zeta = |k: u64| LaurentPoly::constant(CycNum::zeta_pow(q, k as i64));
    let tz = LaurentPoly::monomial(CycNum::zeta_pow(q, e[0] as i64), 1);
    Matrix::from_rows(vec![
        vec![z.clone(), zeta(e[1]), z.clone()],
        vec![z.clone(), z.clone(), zeta(e[2])],
        vec![tz, z.clone(), z],
    ])
}

pub fn representation(
    sol: &LMapSolution,
    chi: &Character,
    pres: &WirtingerPresentation,
) -> Result<Representation, PipelineError> {
    let q = sol.q;
    if chi.q != q {
        return Err(PipelineError::Conventions(format!(
            "character mod {} on a module mod {q}",
            chi.q
        )));
    }
    let exponents: Vec<[u64; 3]> = sol
        .v
        .iter()
        .map(|v| [0, 1, 2].map(|k| chi.eval(&t_shift(v, k, q))))
        .collect();
    let matrices: Vec<PMat> = exponents
        .iter()
        .map(|&e| meridian_matrix(q as u32, e))
        .collect();
    let rep = Representation {
        q,
        character: *chi,
        exponents,
        matrices,
    };
    if let Some(r) = pres.relations.iter().find(|&&r| !rep.relation_holds(r)) {
        return Err(PipelineError::Conventions(format!(
            "φ does not kill relation {r:?}"
        )));
    }
    Ok(rep)
}

impl Representation {
    /// `φ(g_i)φ(g_j) = φ(g_k)φ(g_i)`.
    pub fn relation_holds(&self, (i, j, k): (usize, usize, usize)) -> bool {
        let m = &self.matrices;
        m[i - 1].mul(&m[j - 1]) == m[k - 1].mul(&m[i - 1])
    }
}

/// Element of `Z[F]`: generator (0 for the identity) to integer coefficient.
pub type GroupRingElem = BTreeMap<usize, i64>;

/// Fox Jacobian of the relations `g_i g_j g_i⁻¹ g_k⁻¹`.
pub fn fox_matrix(pres: &WirtingerPresentation) -> Vec<Vec<GroupRingElem>> {
    let n = pres.n;
    pres.relations
        .iter()
        .map(|&(i, j, k)| {
            let mut row = vec![GroupRingElem::new(); n];
            let mut add = |col: usize, g: usize, c: i64| {
                *row[col - 1].entry(g).or_insert(0) += c;
            };
            add(i, 0, 1);
            add(i, k, -1);
            add(j, i, 1);
            add(k, 0, -1);
            for e in row.iter_mut() {
                e.retain(|_, c| *c != 0);
            }
            row
        })
        .collect()
}

/// Image of a group-ring element under `g ↦ t`, as coefficients of `1, t`.
pub fn abelianize(e: &GroupRingElem) -> [i64; 2] {
    e.iter().fold([0, 0], |mut acc, (&g, &c)| {
        acc[usize::from(g != 0)] += c;
        acc
    })
}

/// `Φ_χ` applied to the Fox matrix with the first row and column removed.
pub fn reduced_twisted_matrix(fox: &[Vec<GroupRingElem>], rep: &Representation) -> PMat {
    let q = rep.q as u32;
    let n = fox.len();
    let size = 3 * (n - 1);
    let id = Matrix::from_fn(3, 3, |i, j| cconst(q, i64::from(i == j)));
    let mut out = Matrix::from_fn(size, size, |_, _| LaurentPoly::zero());
    for (r, row) in fox.iter().enumerate().skip(1) {
        for (c, e) in row.iter().enumerate().skip(1) {
            if e.is_empty() {
                continue;
            }
            let mut block = Matrix::from_fn(3, 3, |_, _| LaurentPoly::zero());
            for (&g, &k) in e {
                let m = if g == 0 { &id } else { &rep.matrices[g - 1] };
                block = block.add(&m.map(|x| x.scale(&CycNum::from_int(q, k))));
            }
            for bi in 0..3 {
                for bj in 0..3 {
                    out.set(
                        3 * (r - 1) + bi,
                        3 * (c - 1) + bj,
                        block.get(bi, bj).clone(),
                    );
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistedPolynomial {
    pub q: u64,
    pub character: Character,
    /// Monic, lowest exponent zero.
    pub normalized: CPoly,
    pub det: CPoly,
}

impl TwistedPolynomial {
    /// Representative of the class under scalars, `t`-shifts and the Galois action.
    pub fn galois_canonical(&self) -> CPoly {
        galois_canonical(&self.normalized)
    }
}

pub fn galois_canonical(p: &CPoly) -> CPoly {
    let q = p.lead().map_or(1, |c| c.q());
    (1..q.max(2) as i64)
        .filter(|j| q == 1 || j % q as i64 != 0)
        .map(|j| p.map(|c| c.galois(j)).monic_normalized().0)
        .min_by_key(poly_key)
        .unwrap()
}

/// `det Φ_χ` of the reduced Fox matrix.
pub fn twisted_determinant(
    pres: &WirtingerPresentation,
    rep: &Representation,
) -> Result<CPoly, PipelineError> {
    let m = reduced_twisted_matrix(&fox_matrix(pres), rep);
    Ok(det_poly_matrix(&m, rep.q as u32)?)
}

pub fn twisted_polynomial(
    pres: &WirtingerPresentation,
    rep: &Representation,
) -> Result<TwistedPolynomial, PipelineError> {
    let q = rep.q as u32;
    if rep.character.is_trivial() {
        return Err(PipelineError::Conventions(
            "the trivial character gives a rational function, not a polynomial".into(),
        ));
    }
    let det = twisted_determinant(pres, rep)?;
    let one = cconst(q, 1);
    let id = Matrix::from_fn(3, 3, |i, j| cconst(q, i64::from(i == j)));
    let d1 = rep.matrices[0].sub(&id).det_laplace();
    let t_minus_1 = &LaurentPoly::monomial(CycNum::from_int(q, 1), 1) - &one;
    let denom = &t_minus_1 * &d1;
    if det.is_zero() {
        return Err(PipelineError::Conventions(
            "twisted determinant vanishes".into(),
        ));
    }
    let quot = det.exact_div(&denom).ok_or_else(|| {
        PipelineError::Conventions("(t − 1)·det(φ(g1) − I) does not divide det Φ".into())
    })?;
    Ok(TwistedPolynomial {
        q: rep.q,
        character: rep.character,
        normalized: quot.monic_normalized().0,
        det,
    })
}

/// Everything needed to attach polynomials to characters of one knot.
#[derive(Clone, Debug)]
pub struct KnotContext {
    pub word: BraidWord,
    pub q: u64,
    pub seifert: SeifertMatrix,
    pub presentation: WirtingerPresentation,
    pub duals: Vec<DualCurve>,
    pub generators: (usize, usize),
    pub lmap: LMapSolution,
    pub lambda: crate::branched_cover::LinkingForm,
}

#[derive(Clone, Debug, Default)]
pub struct ContextOptions {
    /// Standard generators for `a`, `b` (0-based); scanned when absent.
    pub generators: Option<(usize, usize)>,
    /// Explicit words for the dual curves of `a` and `b`; these use the
    /// unshifted frame.
    pub anchor_words: Option<(GroupWord, GroupWord)>,
    pub frame: Option<Frame>,
}

/// Runs the pipeline up to the l-map for a knot whose triple cover has
/// homology `M ⊕ M` over `Z/q`.
pub fn knot_context(
    w: &BraidWord,
    q: u64,
    opts: &ContextOptions,
) -> Result<KnotContext, PipelineError> {
    if !is_prime(q) || q == 3 {
        return Err(PipelineError::Unsupported(format!(
            "q = {q} must be a prime other than 3"
        )));
    }
    let s = seifert_matrix(w)?;
    let (diagram, pres) = wirtinger(w)?;
    let h = branched_homology(&s, 3)?;
    if !check_module_structure(&h, q) {
        return Err(PipelineError::Unsupported(format!(
            "H1 of the triple cover is {:?}, not M ⊕ M over Z/{q}",
            h.invariant_factors
        )));
    }
    let generators = match opts.generators {
        Some(g) => g,
        None => h.scan_generators(q).ok_or_else(|| {
            PipelineError::Construction("no pair of standard generators spans H1".into())
        })?,
    };
    let bl = blanchfield(&s, &h, generators, q)?;
    let lambda = linking_form(&bl);
    let duals = dual_curves_from(w, &diagram, &s);
    let frame = opts.frame.unwrap_or(Frame::RowShifted);
    let anchors = match &opts.anchor_words {
        Some((wa, wb)) => vec![
            Anchor {
                word: wa.clone(),
                target: [1, 0, 0, 0],
            },
            Anchor {
                word: wb.clone(),
                target: [0, 0, 1, 0],
            },
        ],
        None => anchors_for(&duals, generators, frame, q),
    };
    let lmap = solve_lmap(&pres, &anchors, q)?;
    if opts.anchor_words.is_none() && frame == Frame::RowShifted {
        let bad = dual_relation_failures(&s, &duals, &lmap)?;
        if bad != 0 {
            return Err(PipelineError::Construction(format!(
                "{bad} Seifert relations fail on the dual curves"
            )));
        }
    }
    Ok(KnotContext {
        word: w.clone(),
        q,
        seifert: s,
        presentation: pres,
        duals,
        generators,
        lmap,
        lambda,
    })
}

impl KnotContext {
    pub fn polynomial(&self, chi: &Character) -> Result<TwistedPolynomial, PipelineError> {
        let rep = representation(&self.lmap, chi, &self.presentation)?;
        twisted_polynomial(&self.presentation, &rep)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterResult {
    pub character: Character,
    pub polynomial: CPoly,
    pub is_norm: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetaboliserResult {
    pub submodule: Submodule,
    /// Characters tried in order; stops at the first non-norm.
    pub characters: Vec<CharacterResult>,
    pub obstructed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// Every metaboliser carries a character with non-norm polynomial.
    Obstructed,
    /// Some metaboliser has only norms among the characters tried.
    NotObstructed,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub q: u64,
    pub generators: (usize, usize),
    pub metabolisers: Vec<MetaboliserResult>,
    pub verdict: Verdict,
}

/// Characters vanishing on `n`, one per class under scalars and `t`; the
/// normalised character comes first.
pub fn character_classes(n: &Submodule) -> Result<Vec<Character>, PipelineError> {
    let q = n.q;
    let first = vanishing_character(n)?;
    let mut seen: Vec<Character> = Vec::new();
    let mut out = Vec::new();
    let orbit = |c: &Character| -> Vec<Character> {
        let mut o = Vec::new();
        for k in 1..q {
            for s in 0..3 {
                let vals = first_shift(c, s, q).scaled(k);
                o.push(vals);
            }
        }
        o
    };
    for c in std::iter::once(first).chain(annihilator(n)) {
        if c.is_trivial() || seen.contains(&c) {
            continue;
        }
        seen.extend(orbit(&c));
        out.push(c);
    }
    Ok(out)
}

/// `χ ∘ t^s`.
fn first_shift(c: &Character, s: i64, q: u64) -> Character {
    let basis: Vec<MVec> = (0..4)
        .map(|i| {
            let mut e = [0; 4];
            e[i] = 1;
            t_shift(&e, s, q)
        })
        .collect();
    Character {
        q,
        values: [0, 1, 2, 3].map(|i| c.eval(&basis[i])),
    }
}

fn norm_verdict(p: &CPoly) -> Result<bool, PipelineError> {
    Ok(matches!(is_norm(p)?, NormVerdict::Norm { .. }))
}

/// For every metaboliser, looks for a character with non-norm polynomial.
/// With `exhaustive` unset only the normalised character is tried.
pub fn obstruct_context(
    ctx: &KnotContext,
    exhaustive: bool,
) -> Result<ObstructionReport, PipelineError> {
    let mets = metabolisers(&ctx.lambda, ctx.q)?;
    let cache: std::sync::Mutex<BTreeMap<[u64; 4], (CPoly, bool)>> = Default::default();
    let eval = |chi: &Character| -> Result<CharacterResult, PipelineError> {
        if let Some((p, b)) = cache.lock().unwrap().get(&chi.values).cloned() {
            return Ok(CharacterResult {
                character: *chi,
                polynomial: p,
                is_norm: b,
            });
        }
        let p = ctx.polynomial(chi)?.normalized;
        let b = norm_verdict(&p)?;
        cache.lock().unwrap().insert(chi.values, (p.clone(), b));
        Ok(CharacterResult {
            character: *chi,
            polynomial: p,
            is_norm: b,
        })
    };
    let results: Vec<MetaboliserResult> = mets
        .into_par_iter()
        .map(|n| {
            let classes = if exhaustive {
                character_classes(&n)?
            } else {
                vec![vanishing_character(&n)?]
            };
            let mut characters = Vec::new();
            for chi in classes {
                let r = eval(&chi)?;
                let stop = !r.is_norm;
                characters.push(r);
                if stop {
                    break;
                }
            }
            let obstructed = characters.iter().any(|c| !c.is_norm);
            Ok(MetaboliserResult {
                submodule: n,
                characters,
                obstructed,
            })
        })
        .collect::<Result<_, PipelineError>>()?;
    let verdict = if results.iter().all(|m| m.obstructed) {
        Verdict::Obstructed
    } else {
        Verdict::NotObstructed
    };
    Ok(ObstructionReport {
        q: ctx.q,
        generators: ctx.generators,
        metabolisers: results,
        verdict,
    })
}

pub fn obstruct(
    w: &BraidWord,
    q: u64,
    opts: &ContextOptions,
) -> Result<ObstructionReport, PipelineError> {
    let ctx = knot_context(w, q, opts)?;
    obstruct_context(&ctx, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        let w: GroupWord = "g8*g12^-1".parse().unwrap();
        assert_eq!(w.0, vec![(8, 1), (12, -1)]);
        assert_eq!(w.to_string(), "g8*g12^-1");
        assert!("g0".parse::<GroupWord>().is_err());
        assert!("h3".parse::<GroupWord>().is_err());
    }

    #[test]
    fn module_formatting() {
        assert_eq!(format_m2(&[0, 6, 1, 0]), "6ta + b");
        assert_eq!(format_m2(&[0, 0, 1, 6]), "(6t+1)b");
        assert_eq!(format_m2(&[0, 0, 0, 0]), "0");
        assert_eq!(format_m2(&[1, 1, 6, 2]), "(t+1)a + (2t+6)b");
    }

    #[test]
    fn meridian_of_trivial_lift() {
        let p = meridian_matrix(7, [0, 0, 0]);
        let id = Matrix::from_fn(3, 3, |i, j| cconst(7, i64::from(i == j)));
        let d = p.sub(&id).det_laplace();
        let t1 = &LaurentPoly::monomial(CycNum::from_int(7, 1), 1) - &cconst(7, 1);
        assert_eq!(d, t1);
    }

    #[test]
    fn semidirect_inverse() {
        let q = 7;
        let v: Vec<MVec> = vec![[0; 4], [3, 1, 4, 1]];
        let w: GroupWord = "g2*g2^-1".parse().unwrap();
        assert_eq!(l_value(&w, &v, q).unwrap(), [0; 4]);
        assert!(l_value(&"g2".parse().unwrap(), &v, q).is_err());
    }
}
