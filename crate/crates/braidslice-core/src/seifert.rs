//! Seifert matrices of closed 3-braids and the classical invariants read off
//! from them. The surface is three stacked discs joined by one half-twisted
//! band per crossing; H1 has one loop per pair of consecutive bands on the
//! same generator.

use crate::braid::BraidWord;
use crate::error::PipelineError;
use crate::exact_algebra::coeff::rat_sign;
use crate::exact_algebra::cyclo::CycNum;
use crate::exact_algebra::det::det_poly_matrix;
use crate::exact_algebra::laurent::LaurentPoly;
use crate::exact_algebra::matrix::Matrix;
use crate::exact_algebra::modp::is_prime;
use crate::exact_algebra::snf::{int_det, int_matrix};
use crate::exact_algebra::Coeff;
use crate::string_calculus::AssocString;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertMatrix {
    word: BraidWord,
    matrix: Vec<Vec<i64>>,
    loops: Vec<(usize, usize)>,
}

impl SeifertMatrix {
    /// Build directly from a matrix; loops are left empty.
    pub fn from_matrix(matrix: Vec<Vec<i64>>) -> Result<Self, PipelineError> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(PipelineError::Unsupported(
                "Seifert matrix must be square".into(),
            ));
        }
        Ok(SeifertMatrix {
            word: BraidWord::empty(),
            matrix,
            loops: Vec::new(),
        })
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    /// Loop `k` runs between bands `loops[k].0` and `loops[k].1` (word positions).
    pub fn loops(&self) -> &[(usize, usize)] {
        &self.loops
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn transpose(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[j][i]).collect())
            .collect()
    }

    /// `S + Sᵀ`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.matrix[i][j] + self.matrix[j][i])
                    .collect()
            })
            .collect()
    }

    /// `PᵀSP` for an integer change of basis `P` (loops are dropped).
    pub fn congruent(&self, p: &[Vec<i64>]) -> SeifertMatrix {
        let n = self.size();
        let m = &self.matrix;
        let sp: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| m[i][k] * p[k][j]).sum())
                    .collect()
            })
            .collect();
        let out = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| p[k][i] * sp[k][j]).sum())
                    .collect()
            })
            .collect();
        SeifertMatrix {
            word: self.word.clone(),
            matrix: out,
            loops: Vec::new(),
        }
    }

    /// `a·t·S + b·Sᵀ` as a matrix over Q[t^±1] (q = 1 cyclotomic coefficients).
    pub fn pencil(&self, a: i64, b: i64) -> Matrix<LaurentPoly<CycNum>> {
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| {
            LaurentPoly::from_coeffs(
                0,
                vec![
                    CycNum::from_int(1, b * self.matrix[j][i]),
                    CycNum::from_int(1, a * self.matrix[i][j]),
                ],
            )
        })
    }
}

/// Seifert matrix of the braid closure, by linking of the band loops.
pub fn seifert_matrix(w: &BraidWord) -> Result<SeifertMatrix, PipelineError> {
    if !w.uses_both_generators() {
        return Err(PipelineError::Unsupported(format!(
            "{w} does not use both generators"
        )));
    }
    let x = w.letters();
    let gen = |k: usize| x[k].unsigned_abs();
    let sgn = |k: usize| if x[k] > 0 { 1i64 } else { -1 };
    let n = x.len();
    // h[j]: next band on the same generator after j, 0 if none
    let h: Vec<usize> = (0..n - 1)
        .map(|j| (j + 1..n).find(|&i| gen(i) == gen(j)).unwrap_or(0))
        .collect();
    let hl = h.len();
    let mut a = vec![vec![0i64; hl]; hl];
    let idx: Vec<usize> = (0..hl).filter(|&i| h[i] != 0).collect();
    for &i in &idx {
        let hi = h[i];
        for j in i..hl {
            if i == j {
                a[i][i] = -(sgn(i) + sgn(hi)) / 2;
            } else if hi > h[j] || hi < j {
                continue;
            } else if hi == j {
                if x[j] > 0 {
                    a[j][i] = 1;
                } else {
                    a[i][j] = -1;
                }
            } else {
                let d = gen(i) as i64 - gen(j) as i64;
                if d == 1 {
                    a[j][i] = -1;
                } else if d == -1 {
                    a[i][j] = 1;
                }
            }
        }
    }
    let matrix = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| a[i][j]).collect())
        .collect();
    let loops = idx.iter().map(|&i| (i, h[i])).collect();
    Ok(SeifertMatrix {
        word: w.clone(),
        matrix,
        loops,
    })
}

/// `det(tS − Sᵀ)` with no normalisation.
pub fn alexander_raw(s: &SeifertMatrix) -> LaurentPoly<BigInt> {
    let d = det_poly_matrix(&s.pencil(1, -1), 1).expect("square matrix");
    d.map(|c| c.coords()[0].to_integer())
}

/// Alexander polynomial normalised so that `Δ(t) = Δ(t⁻¹)` (centred) and,
/// for knots, `Δ(1) = 1`. For links the lowest coefficient is made positive.
pub fn alexander_polynomial(s: &SeifertMatrix) -> LaurentPoly<BigInt> {
    let d = alexander_raw(s);
    if d.is_zero() {
        return d;
    }
    let (d, _) = d.normalize_low();
    let d = d.shift(-(d.high() / 2));
    let at_one: BigInt = d.coeffs().iter().sum();
    let flip = if Zero::is_zero(&at_one) {
        d.trailing().is_some_and(|c| c.is_negative())
    } else {
        at_one.is_negative()
    };
    if flip {
        -&d
    } else {
        d
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureSuite {
    pub signature: i64,
    /// Closed-form value from the braid exponents, when it applies.
    pub closed_form: Option<i64>,
    /// Keys are `"k/n"` for `ω = e^{2πik/n}`.
    pub tl_signatures: BTreeMap<String, i64>,
    pub tl_nullities: BTreeMap<String, usize>,
    pub determinant: BigInt,
}

/// `Σ b_i − Σ a_i` for `σ1^{a1} σ2^{-b1} ...`, defined when both sums exceed one.
pub fn closed_form_signature(w: &BraidWord) -> Option<i64> {
    let l = w.letters();
    if l.iter().any(|&x| x != 1 && x != -2) {
        return None;
    }
    let a = l.iter().filter(|&&x| x == 1).count() as i64;
    let b = l.len() as i64 - a;
    (a > 1 && b > 1).then_some(b - a)
}

fn ratm(m: &[Vec<i64>]) -> Matrix<BigRational> {
    Matrix::from_rows(
        m.iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect(),
    )
}

/// Signature of `S + Sᵀ`.
pub fn signature(s: &SeifertMatrix) -> i64 {
    crate::exact_algebra::matrix::signature_rational(&ratm(&s.symmetrized()))
}

/// `ω = e^{2πik/n}` as an element of `Q(ζ_p)`, for `n` equal to 1, 2, an odd
/// prime `p`, or twice an odd prime.
pub fn root_of_unity(k: i64, n: u32) -> Result<CycNum, PipelineError> {
    let k = k.rem_euclid(n as i64);
    match n {
        1 => Ok(CycNum::from_int(1, 1)),
        2 => Ok(CycNum::from_int(1, if k == 0 { 1 } else { -1 })),
        _ if n % 2 == 1 && is_prime(n as u64) => Ok(CycNum::zeta_pow(n, k)),
        _ if n % 4 == 2 && is_prime(n as u64 / 2) => {
            let p = n / 2;
            if k % 2 == 0 {
                Ok(CycNum::zeta_pow(p, k / 2))
            } else {
                Ok(CycNum::zeta_pow(p, (k - p as i64) / 2).neg_ref())
            }
        }
        _ => Err(PipelineError::Unsupported(format!(
            "roots of unity of order {n}"
        ))),
    }
}

/// Signature and nullity of `(1−ω)S + (1−ω̄)Sᵀ`.
pub fn tristram_levine(s: &SeifertMatrix, k: i64, n: u32) -> Result<(i64, usize), PipelineError> {
    let w = root_of_unity(k, n)?;
    let one = w.one_like();
    let a = one.sub_ref(&w);
    let b = a.conj();
    let sz = s.size();
    let h = Matrix::from_fn(sz, sz, |i, j| {
        a.mul_ref(&CycNum::from_int(w.q(), s.get(i, j)))
            .add_ref(&b.mul_ref(&CycNum::from_int(w.q(), s.get(j, i))))
    });
    if sz == 0 {
        return Ok((0, 0));
    }
    let mut sig = 0;
    let mut null = 0;
    for d in h.hermitian_diagonal() {
        if !d.is_rational() {
            return Err(PipelineError::Construction(
                "hermitian pivot is not real".into(),
            ));
        }
        match rat_sign(&d.coords()[0]) {
            0 => null += 1,
            x => sig += x as i64,
        }
    }
    Ok((sig, null))
}

pub fn signature_suite(w: &BraidWord) -> Result<SignatureSuite, PipelineError> {
    let s = seifert_matrix(w)?;
    let mut tl_signatures = BTreeMap::new();
    let mut tl_nullities = BTreeMap::new();
    for (k, n) in [(1, 6), (1, 3)] {
        let (sig, null) = tristram_levine(&s, k, n)?;
        tl_signatures.insert(format!("{k}/{n}"), sig);
        tl_nullities.insert(format!("{k}/{n}"), null);
    }
    Ok(SignatureSuite {
        signature: signature(&s),
        closed_form: closed_form_signature(w),
        tl_signatures,
        tl_nullities,
        determinant: int_det(&int_matrix(&s.symmetrized())).abs(),
    })
}

/// Goeritz matrix on the black regions: the string entries on the diagonal
/// and −1 for each crossing shared by cyclically adjacent regions.
pub fn goeritz_matrix(a: &AssocString) -> Vec<Vec<i64>> {
    let e = a.entries();
    let n = e.len();
    let mut g: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { e[i] as i64 } else { 0 })
                .collect()
        })
        .collect();
    for i in 0..n {
        let j = (i + 1) % n;
        g[i][j] -= 1;
        g[j][i] -= 1;
    }
    g
}

pub fn goeritz_det(a: &AssocString) -> BigInt {
    int_det(&int_matrix(&goeritz_matrix(a))).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string_calculus::to_braid;

    fn zp(v: &[i64]) -> LaurentPoly<BigInt> {
        LaurentPoly::from_coeffs(0, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn figure_eight() {
        let w: BraidWord = BraidWord::new(vec![1, -2, 1, -2]).unwrap();
        let s = seifert_matrix(&w).unwrap();
        assert_eq!(s.size(), 2);
        let d = alexander_polynomial(&s);
        assert_eq!(d, zp(&[-1, 3, -1]).shift(-1));
        let suite = signature_suite(&w).unwrap();
        assert_eq!(suite.signature, 0);
        assert_eq!(suite.determinant, BigInt::from(5));
        assert_eq!(goeritz_det(&"3,3".parse().unwrap()), BigInt::from(5));
    }

    #[test]
    fn goeritz_degenerate_lengths() {
        let a: AssocString = "3".parse().unwrap();
        assert_eq!(goeritz_matrix(&a), vec![vec![1]]);
        let b: AssocString = "3,3".parse().unwrap();
        assert_eq!(goeritz_matrix(&b), vec![vec![3, -2], vec![-2, 3]]);
    }

    #[test]
    fn one_generator_rejected() {
        assert!(seifert_matrix(&BraidWord::new(vec![1, 1, 1]).unwrap()).is_err());
    }

    #[test]
    fn roots_of_unity() {
        let w = root_of_unity(1, 6).unwrap();
        let mut p = w.one_like();
        for _ in 0..6 {
            p = p.mul_ref(&w);
        }
        assert!(p.is_one());
        let cube = w.mul_ref(&w).mul_ref(&w);
        assert_eq!(cube, CycNum::from_int(3, -1));
        assert!(root_of_unity(1, 4).is_err());
    }

    #[test]
    fn matrix_size_is_crossings_minus_two() {
        let a: AssocString = "2,4,2,3,5".parse().unwrap();
        let w = to_braid(&a);
        assert_eq!(seifert_matrix(&w).unwrap().size(), w.len() - 2);
    }
}
