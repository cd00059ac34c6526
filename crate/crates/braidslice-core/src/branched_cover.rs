//! Homology of the p-fold cyclic branched cover with its deck action, the
//! Blanchfield pairing on two module generators, and the linking form on
//! `{a, ta, b, tb}`.

use crate::error::{AlgebraError, PipelineError};
use crate::exact_algebra::coeff::{rat, Coeff};
use crate::exact_algebra::cyclo::CycNum;
use crate::exact_algebra::matrix::Matrix;
use crate::exact_algebra::modp::{invmod, is_prime, rank_mod, reduce_i64};
use crate::exact_algebra::snf::{int_det, snf, snf_mod, IntMatrix};
use crate::seifert::{alexander_raw, SeifertMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchedHomology {
    pub p: u32,
    /// Nontrivial cyclic factors; 0 stands for a copy of Z.
    pub invariant_factors: Vec<u64>,
    /// `t` on the cyclic summands: column `j` is `t·g_j`.
    pub t_action: Vec<Vec<i64>>,
    /// Column `i` is the class of the standard generator `ŝ_i`.
    pub projection: Vec<Vec<i64>>,
    /// `det(tS − Sᵀ)` reduced modulo `Φ_p`, coefficients of `1, t, …, t^{p−2}`.
    pub delta_residue: Vec<i64>,
}

impl BranchedHomology {
    pub fn order(&self) -> Option<u64> {
        if self.invariant_factors.contains(&0) {
            None
        } else {
            Some(self.invariant_factors.iter().product())
        }
    }

    /// Class of `ŝ_i` mod `q`.
    pub fn generator_mod(&self, i: usize, q: u64) -> Vec<u64> {
        self.projection
            .iter()
            .map(|row| reduce_i64(row[i], q))
            .collect()
    }

    /// `t·v` with coordinate `i` taken modulo the `i`-th factor.
    pub fn apply_t(&self, v: &[i64]) -> Vec<i64> {
        self.t_action
            .iter()
            .zip(&self.invariant_factors)
            .map(|(row, &d)| {
                let acc: i128 = row
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum();
                if d == 0 {
                    acc as i64
                } else {
                    acc.rem_euclid(d as i128) as i64
                }
            })
            .collect()
    }

    pub fn t_mod(&self, v: &[u64], q: u64) -> Vec<u64> {
        let r = self.t_action.len();
        (0..r)
            .map(|i| {
                (0..r).fold(0u64, |acc, j| {
                    (acc + reduce_i64(self.t_action[i][j], q) * v[j]) % q
                })
            })
            .collect()
    }

    /// Whether `ŝ_i, ŝ_j` generate the group over `Z[t]` (all factors equal to `q`).
    pub fn generates(&self, i: usize, j: usize, q: u64) -> bool {
        if self.invariant_factors.iter().any(|&d| d != q) {
            return false;
        }
        let a = self.generator_mod(i, q);
        let b = self.generator_mod(j, q);
        let rows = vec![self.t_mod(&a, q), a, self.t_mod(&b, q), b];
        rank_mod(&rows, q) == self.invariant_factors.len()
    }

    /// First pair `(i, j)`, `i < j`, of standard generators generating the module.
    pub fn scan_generators(&self, q: u64) -> Option<(usize, usize)> {
        let n = self.projection.first().map_or(0, |r| r.len());
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.generates(i, j, q))
    }
}

/// Multiplication by `t` on `Z[t]/Φ_p` in the basis `1, t, …, t^{p−2}`.
fn companion_times_t(v: &[BigInt]) -> Vec<BigInt> {
    let d = v.len();
    let top = v[d - 1].clone();
    let mut out = vec![BigInt::zero(); d];
    for k in 1..d {
        out[k] = &v[k - 1] - &top;
    }
    out[0] = -top;
    out
}

fn unimodular_inverse(u: &IntMatrix) -> IntMatrix {
    let n = u.len();
    let m = Matrix::from_fn(n, n, |i, j| BigRational::from_integer(u[i][j].clone()));
    let inv = m.inverse().expect("unimodular matrix is invertible");
    (0..n)
        .map(|i| (0..n).map(|j| inv.get(i, j).to_integer()).collect())
        .collect()
}

fn to_i64(x: &BigInt) -> Result<i64, PipelineError> {
    x.to_i64()
        .ok_or_else(|| PipelineError::Unsupported("homology entry exceeds 64 bits".into()))
}

/// Multiplication by `t` on a vector of `Z^{n(p−1)}`, blocks indexed `k·n + i`.
fn block_times_t(v: &[BigInt], n: usize, d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); v.len()];
    for i in 0..n {
        let block: Vec<BigInt> = (0..d).map(|k| v[k * n + i].clone()).collect();
        for (k, x) in companion_times_t(&block).into_iter().enumerate() {
            out[k * n + i] = x;
        }
    }
    out
}

type Presentation = (Vec<u64>, Vec<Vec<i64>>, Vec<Vec<i64>>);

fn modular_presentation(rel: &IntMatrix, m: i128, n: usize, d: usize) -> Presentation {
    let a: Vec<Vec<i128>> = rel
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i128().expect("presentation entries are small"))
                .collect()
        })
        .collect();
    let res = snf_mod(&a, m);
    let keep: Vec<usize> = (0..res.diagonal.len())
        .filter(|&i| res.diagonal[i] != 1)
        .collect();
    let factors: Vec<i128> = keep.iter().map(|&i| res.diagonal[i]).collect();
    let projection = keep
        .iter()
        .zip(&factors)
        .map(|(&r, f)| (0..n).map(|i| res.u[r][i].rem_euclid(*f) as i64).collect())
        .collect();
    let big = rel.len();
    let mut t_action = vec![vec![0i64; keep.len()]; keep.len()];
    for (c, &r) in keep.iter().enumerate() {
        let rep: Vec<BigInt> = (0..big).map(|x| BigInt::from(res.u_inv[x][r])).collect();
        let trep = block_times_t(&rep, n, d);
        for (row, (&rr, f)) in keep.iter().zip(&factors).enumerate() {
            let v: i128 = (0..big)
                .map(|x| {
                    (res.u[rr][x] * trep[x].to_i128().unwrap_or(0).rem_euclid(m)).rem_euclid(m)
                })
                .fold(0, |acc, y| (acc + y) % m);
            t_action[row][c] = v.rem_euclid(*f) as i64;
        }
    }
    (
        factors.iter().map(|&f| f as u64).collect(),
        projection,
        t_action,
    )
}

fn integer_presentation(
    rel: &IntMatrix,
    n: usize,
    d: usize,
) -> Result<Presentation, PipelineError> {
    let res = snf(rel);
    let big = rel.len();
    let diag = res.diagonal();
    let keep: Vec<usize> = (0..big)
        .filter(|&i| i >= diag.len() || !One::is_one(&diag[i]))
        .collect();
    let factors: Vec<BigInt> = keep
        .iter()
        .map(|&i| diag.get(i).cloned().unwrap_or_default())
        .collect();
    let invariant_factors = factors
        .iter()
        .map(|f| {
            f.to_u64().ok_or_else(|| {
                PipelineError::Unsupported("invariant factor exceeds 64 bits".into())
            })
        })
        .collect::<Result<Vec<u64>, _>>()?;
    let reduce = |x: &BigInt, f: &BigInt| {
        if Zero::is_zero(f) {
            x.clone()
        } else {
            x.mod_floor(f)
        }
    };
    let projection = keep
        .iter()
        .zip(&factors)
        .map(|(&r, f)| (0..n).map(|i| to_i64(&reduce(&res.u[r][i], f))).collect())
        .collect::<Result<Vec<Vec<i64>>, _>>()?;
    let u_inv = unimodular_inverse(&res.u);
    let mut t_action = vec![vec![0i64; keep.len()]; keep.len()];
    for (c, &r) in keep.iter().enumerate() {
        let rep: Vec<BigInt> = (0..big).map(|x| u_inv[x][r].clone()).collect();
        let trep = block_times_t(&rep, n, d);
        for (row, (&rr, f)) in keep.iter().zip(&factors).enumerate() {
            let v: BigInt = (0..big).map(|x| &res.u[rr][x] * &trep[x]).sum();
            t_action[row][c] = to_i64(&reduce(&v, f))?;
        }
    }
    Ok((invariant_factors, projection, t_action))
}

/// `H1(Σ_p)` as the cokernel of `tSᵀ − S` over `Z[t]/Φ_p`.
pub fn branched_homology(s: &SeifertMatrix, p: u32) -> Result<BranchedHomology, PipelineError> {
    if p < 2 || !is_prime(p as u64) {
        return Err(PipelineError::Unsupported(format!(
            "fold count {p} is not prime"
        )));
    }
    let n = s.size();
    let d = (p - 1) as usize;
    let big = n * d;
    let idx = |i: usize, k: usize| k * n + i;
    // relation columns t^m (t S_ji − S_ij) e_i
    let mut rel: IntMatrix = vec![vec![BigInt::zero(); big]; big];
    for j in 0..n {
        let mut col: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut c = vec![BigInt::zero(); d];
                c[0] = BigInt::from(-s.get(i, j));
                let lin = BigInt::from(s.get(j, i));
                if d == 1 {
                    c[0] -= lin;
                } else {
                    c[1] = lin;
                }
                c
            })
            .collect();
        for m in 0..d {
            for (i, c) in col.iter().enumerate() {
                for (k, x) in c.iter().enumerate() {
                    rel[idx(i, k)][idx(j, m)] = x.clone();
                }
            }
            col = col.iter().map(|c| companion_times_t(c)).collect();
        }
    }
    let order = int_det(&rel).abs();
    let (invariant_factors, projection, t_action) =
        match order.to_i128().filter(|&m| m > 0 && m < 1 << 62) {
            Some(m) => modular_presentation(&rel, m, n, d),
            None => integer_presentation(&rel, n, d)?,
        };
    let delta = alexander_raw(s);
    let mut acc = vec![BigInt::zero(); d];
    let mut pw = vec![BigInt::zero(); d];
    pw[0] = BigInt::one();
    let mut e = 0i64;
    for (k, c) in delta.terms() {
        while e < k {
            pw = companion_times_t(&pw);
            e += 1;
        }
        for (a, x) in acc.iter_mut().zip(&pw) {
            *a += c * x;
        }
    }
    let delta_residue = acc.iter().map(to_i64).collect::<Result<Vec<_>, _>>()?;
    Ok(BranchedHomology {
        p,
        invariant_factors,
        t_action,
        projection,
        delta_residue,
    })
}

/// `H1(Σ3) ≅ M ⊕ M` for `M = (Z/q)[t]/(t² + t + 1)`, and `Δ ≡ ±q²·t^k` modulo
/// `t² + t + 1`.
pub fn check_module_structure(h: &BranchedHomology, q: u64) -> bool {
    if h.p != 3 || !is_prime(q) || h.invariant_factors != vec![q; 4] {
        return false;
    }
    let r = h.t_action.len();
    let basis: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let cyclotomic = basis.iter().all(|v| {
        let tv = h.t_mod(v, q);
        let ttv = h.t_mod(&tv, q);
        (0..r).all(|i| (v[i] + tv[i] + ttv[i]).is_multiple_of(q))
    });
    let q2 = (q * q) as i64;
    let residue_ok = matches!(
        (h.delta_residue[0], h.delta_residue[1]),
        (x, 0) | (0, x) if x.abs() == q2
    ) || (h.delta_residue[0] == h.delta_residue[1]
        && h.delta_residue[0].abs() == q2);
    cyclotomic && residue_ok && h.scan_generators(q).is_some()
}

/// Element of `(Z/q)[t]/(t³ − 1)`, coefficients of `1, t, t²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct M3 {
    pub q: u64,
    pub c: [u64; 3],
}

impl M3 {
    pub fn new(q: u64, c: [i64; 3]) -> Self {
        M3 {
            q,
            c: c.map(|x| reduce_i64(x, q)),
        }
    }

    /// `t ↦ t⁻¹ = t²`.
    pub fn bar(&self) -> Self {
        M3 {
            q: self.q,
            c: [self.c[0], self.c[2], self.c[1]],
        }
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> u64 {
        self.c[k.rem_euclid(3) as usize]
    }

    /// Representatives in `(−q/2, q/2]`.
    pub fn symmetric(&self) -> [i64; 3] {
        self.c.map(|x| {
            if 2 * x > self.q {
                x as i64 - self.q as i64
            } else {
                x as i64
            }
        })
    }
}

impl fmt::Display for M3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.symmetric();
        let mut out = String::new();
        for (k, x) in [(2, c), (1, b), (0, a)] {
            if x == 0 {
                continue;
            }
            let sign = if x < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = x.unsigned_abs();
            let coef = if mag == 1 && k > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var = ["", "t", "t^2"][k];
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&format!(
                "{sign}{}{coef}{var}",
                if out.is_empty() || sign.is_empty() {
                    ""
                } else {
                    " "
                }
            ));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Blanchfield values on `{a, b}`, each `(1/q)·entry`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlanchfieldMatrix {
    pub q: u64,
    pub generators: (usize, usize),
    pub entries: [[M3; 2]; 2],
}

impl BlanchfieldMatrix {
    pub fn is_hermitian(&self) -> bool {
        (0..2).all(|i| (0..2).all(|j| self.entries[i][j] == self.entries[j][i].bar()))
    }
}

fn cyc_to_rat_pair(x: &CycNum) -> (BigRational, BigRational) {
    (x.coords()[0].clone(), x.coords()[1].clone())
}

fn rat_mod(x: &BigRational, q: u64) -> Result<u64, PipelineError> {
    let qb = BigInt::from(q);
    let den = x.denom().mod_floor(&qb);
    if Zero::is_zero(&den) {
        return Err(PipelineError::Algebra(AlgebraError::Domain(format!(
            "pairing value {x} is not q-integral"
        ))));
    }
    let num = x.numer().mod_floor(&qb).to_u64().unwrap_or(0);
    Ok(num * invmod(den.to_u64().unwrap_or(1), q) % q)
}

/// `Bl(ŝ_x, ŝ_y) = (1 − t)·[(tS − Sᵀ)⁻¹]_{y,x}` at `t = ω`, lifted to
/// `(Z/q)[t]/(t³ − 1)` through the root `t = 1`.
pub fn blanchfield_pair(
    s: &SeifertMatrix,
    x: usize,
    y: usize,
    q: u64,
) -> Result<M3, PipelineError> {
    Ok(blanchfield_values(s, &[x, y], q)?[1][0])
}

fn blanchfield_values(
    s: &SeifertMatrix,
    gens: &[usize],
    q: u64,
) -> Result<Vec<Vec<M3>>, PipelineError> {
    if q == 3 || !is_prime(q) {
        return Err(PipelineError::Unsupported(format!(
            "pairing denominator {q} must be a prime other than 3"
        )));
    }
    let n = s.size();
    if let Some(&g) = gens.iter().find(|&&g| g >= n) {
        return Err(PipelineError::Unsupported(format!(
            "generator {g} out of range"
        )));
    }
    let w = CycNum::zeta_pow(3, 1);
    let a = Matrix::from_fn(n, n, |i, j| {
        w.mul_ref(&CycNum::from_int(3, s.get(i, j)))
            .sub_ref(&CycNum::from_int(3, s.get(j, i)))
    });
    let inv = a.inverse().ok_or_else(|| {
        PipelineError::Algebra(AlgebraError::Domain("tS − Sᵀ is singular at ω".into()))
    })?;
    let one_minus = w.one_like().sub_ref(&w);
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let qr = rat(q as i64);
    gens.iter()
        .map(|&gx| {
            gens.iter()
                .map(|&gy| {
                    let v = one_minus.mul_ref(inv.get(gy, gx));
                    let (a, b) = cyc_to_rat_pair(&v);
                    let c2 = -(&a + &b) * &third;
                    let c = [&a + &c2, &b + &c2, c2];
                    let mut out = [0u64; 3];
                    for (o, ci) in out.iter_mut().zip(&c) {
                        *o = rat_mod(&(ci * &qr), q)?;
                    }
                    Ok(M3 { q, c: out })
                })
                .collect()
        })
        .collect()
}

/// Blanchfield matrix on the chosen pair of standard generators.
pub fn blanchfield(
    s: &SeifertMatrix,
    h: &BranchedHomology,
    gens: (usize, usize),
    q: u64,
) -> Result<BlanchfieldMatrix, PipelineError> {
    if !h.generates(gens.0, gens.1, q) {
        return Err(PipelineError::Algebra(AlgebraError::Domain(format!(
            "ŝ{} and ŝ{} do not generate the module",
            gens.0 + 1,
            gens.1 + 1
        ))));
    }
    let v = blanchfield_values(s, &[gens.0, gens.1], q)?;
    Ok(BlanchfieldMatrix {
        q,
        generators: gens,
        entries: [[v[0][0], v[0][1]], [v[1][0], v[1][1]]],
    })
}

/// Linking form on `{a, ta, b, tb}` with values in `(1/q)Z/Z`, stored as numerators mod `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingForm {
    pub q: u64,
    pub matrix: [[u64; 4]; 4],
}

impl LinkingForm {
    pub fn symmetric_entries(&self) -> [[i64; 4]; 4] {
        let q = self.q;
        self.matrix.map(|r| {
            r.map(|x| {
                if 2 * x > q {
                    x as i64 - q as i64
                } else {
                    x as i64
                }
            })
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    /// `λ(x, y)` for coordinate vectors in the basis `{a, ta, b, tb}`.
    pub fn eval(&self, x: &[u64], y: &[u64]) -> u64 {
        let q = self.q;
        let mut acc = 0u64;
        for i in 0..4 {
            for j in 0..4 {
                acc = (acc + x[i] * y[j] % q * self.matrix[i][j]) % q;
            }
        }
        acc
    }
}

/// Multiplication by `t` on `{a, ta, b, tb}` coordinates (using `t² = −1 − t`).
pub fn t_on_basis(v: &[u64], q: u64) -> Vec<u64> {
    let neg = |x: u64| (q - x % q) % q;
    vec![
        neg(v[1]),
        (v[0] + neg(v[1])) % q,
        neg(v[3]),
        (v[2] + neg(v[3])) % q,
    ]
}

/// `λ(t^α u, t^β v)` is the coefficient of `t^{β−α}` in `Bl(u, v)`.
pub fn linking_form(bl: &BlanchfieldMatrix) -> LinkingForm {
    let mut matrix = [[0u64; 4]; 4];
    for (i, row) in matrix.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let (u, alpha) = (i / 2, (i % 2) as i64);
            let (v, beta) = (j / 2, (j % 2) as i64);
            *e = bl.entries[u][v].coeff(beta - alpha);
        }
    }
    LinkingForm { q: bl.q, matrix }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::seifert::seifert_matrix;

    #[test]
    fn figure_eight_double_cover() {
        let s = seifert_matrix(&BraidWord::new(vec![1, -2, 1, -2]).unwrap()).unwrap();
        let h = branched_homology(&s, 2).unwrap();
        assert_eq!(h.invariant_factors, vec![5]);
        assert_eq!(h.t_action, vec![vec![4]]);
        let h3 = branched_homology(&s, 3).unwrap();
        assert!(!check_module_structure(&h3, 7));
        assert!(branched_homology(&s, 4).is_err());
    }

    #[test]
    fn m3_bar_and_display() {
        let x = M3::new(7, [-2, -2, 4]);
        assert_eq!(x.bar(), M3::new(7, [-2, 4, -2]));
        assert_eq!(x.to_string(), "-3t^2 - 2t - 2");
        assert_eq!(M3::new(7, [1, 1, 0]).to_string(), "t + 1");
        assert_eq!(x.coeff(-1), x.coeff(2));
    }

    #[test]
    fn t_on_basis_has_order_three() {
        let v = vec![1, 2, 3, 4];
        let w = t_on_basis(&t_on_basis(&t_on_basis(&v, 7), 7), 7);
        assert_eq!(w, v);
    }
}
