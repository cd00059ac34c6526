//! Determinants of matrices over Q(zeta_q)[t^{+-1}] by evaluation at
//! (t, zeta) points modulo word-sized primes, interpolation, and CRT.

use super::cyclo::{cyclotomic_degree, CycNum};
use super::laurent::LaurentPoly;
use super::matrix::Matrix;
use super::modp::{
    addmod, det_mod, invmod, mulmod, powmod, primes_one_mod, primitive_root, submod,
};
use crate::error::AlgebraError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

/// One nonzero entry after row normalisation: polynomial in t (low exponent
/// 0) with integral coordinate vectors.
struct IntEntry {
    row: usize,
    col: usize,
    coeffs: Vec<Vec<BigInt>>,
}

pub struct DetReport {
    pub det: LaurentPoly<CycNum>,
    pub degree_bound: usize,
    pub primes_used: usize,
    pub coefficient_bound_bits: u64,
}

pub fn det_poly_matrix(
    m: &Matrix<LaurentPoly<CycNum>>,
    q: u32,
) -> Result<LaurentPoly<CycNum>, AlgebraError> {
    det_poly_matrix_report(m, q).map(|r| r.det)
}

pub fn det_poly_matrix_report(
    m: &Matrix<LaurentPoly<CycNum>>,
    q: u32,
) -> Result<DetReport, AlgebraError> {
    if m.rows != m.cols {
        return Err(AlgebraError::Shape(format!(
            "{}x{} is not square",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let deg = cyclotomic_degree(q);
    if n == 0 {
        return Ok(DetReport {
            det: LaurentPoly::constant(CycNum::from_int(q, 1)),
            degree_bound: 0,
            primes_used: 0,
            coefficient_bound_bits: 0,
        });
    }

    // Row normalisation: clear denominators and Laurent shifts.
    let mut entries = Vec::new();
    let mut total_shift = 0i64;
    let mut denom_product = BigInt::one();
    let mut degree_bound = 0usize;
    let mut bound_sq = BigInt::one();
    for i in 0..n {
        let row: Vec<(usize, &LaurentPoly<CycNum>)> = (0..n)
            .map(|j| (j, m.get(i, j)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        if row.is_empty() {
            return Ok(DetReport {
                det: LaurentPoly::zero(),
                degree_bound: 0,
                primes_used: 0,
                coefficient_bound_bits: 0,
            });
        }
        let low = row.iter().map(|(_, p)| p.low()).min().unwrap();
        let den = row
            .iter()
            .flat_map(|(_, p)| p.coeffs().iter())
            .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator()));
        total_shift += low;
        denom_product *= &den;
        let mut row_deg = 0;
        let mut row_norm_sq = BigInt::zero();
        for (j, p) in row {
            let mut coeffs = vec![vec![BigInt::zero(); deg]; (p.high() - low + 1) as usize];
            let mut abs_sum = BigInt::zero();
            for (e, c) in p.terms() {
                let slot = &mut coeffs[(e - low) as usize];
                for (k, x) in c.coords().iter().enumerate() {
                    let v = (x * BigRational::from_integer(den.clone())).to_integer();
                    abs_sum += v.abs();
                    slot[k] = v;
                }
            }
            row_deg = row_deg.max(coeffs.len() - 1);
            row_norm_sq += &abs_sum * &abs_sum;
            entries.push(IntEntry {
                row: i,
                col: j,
                coeffs,
            });
        }
        degree_bound += row_deg;
        bound_sq *= row_norm_sq;
    }

    // Coordinates of det coefficients are bounded by 2 * prod ||row||.
    let hadamard = bound_sq.sqrt() + BigInt::one();
    let coord_bound = hadamard * 2u32;
    let need = &coord_bound * 2u32 + BigInt::one();
    let coefficient_bound_bits = coord_bound.bits();

    let step = if q <= 2 { 2 } else { q as u64 };
    let mut primes = Vec::new();
    let mut modulus = BigInt::one();
    for p in primes_one_mod(step) {
        if modulus > need {
            break;
        }
        modulus *= p;
        primes.push(p);
    }

    let per_prime: Vec<Vec<Vec<u64>>> = primes
        .par_iter()
        .map(|&p| det_coords_mod_p(&entries, n, q, deg, degree_bound, p))
        .collect();

    // CRT combine: result[m][j] residues over primes
    let mut out = Vec::with_capacity(degree_bound + 1);
    for mdeg in 0..=degree_bound {
        let mut coords = Vec::with_capacity(deg);
        for j in 0..deg {
            let residues: Vec<u64> = per_prime.iter().map(|r| r[mdeg][j]).collect();
            let v = crt_symmetric(&residues, &primes, &modulus);
            coords.push(BigRational::new(v, denom_product.clone()));
        }
        out.push(CycNum::from_coeffs(q, coords));
    }
    Ok(DetReport {
        det: LaurentPoly::from_coeffs(total_shift, out),
        degree_bound,
        primes_used: primes.len(),
        coefficient_bound_bits,
    })
}

fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

/// For one prime: result[m][j] = j-th power-basis coordinate of the t^m coefficient.
fn det_coords_mod_p(
    entries: &[IntEntry],
    n: usize,
    q: u32,
    deg: usize,
    dbound: usize,
    p: u64,
) -> Vec<Vec<u64>> {
    // embeddings zeta -> w^k
    let embeds: Vec<u64> = if deg == 1 {
        vec![if q == 2 { p - 1 } else { 1 }]
    } else {
        let w = powmod(primitive_root(p), (p - 1) / q as u64, p);
        (1..q as u64).map(|k| powmod(w, k, p)).collect()
    };
    // entry values per embedding: polynomial in t mod p
    let reduced: Vec<Vec<Vec<u64>>> = entries
        .iter()
        .map(|e| {
            e.coeffs
                .iter()
                .map(|c| c.iter().map(|x| bigint_mod(x, p)).collect())
                .collect()
        })
        .collect();
    let jobs: Vec<(usize, usize)> = (0..embeds.len())
        .flat_map(|k| (0..=dbound).map(move |t| (k, t)))
        .collect();
    let values: Vec<u64> = jobs
        .par_iter()
        .map(|&(k, t0)| {
            let z = embeds[k];
            let t0 = t0 as u64 % p;
            let mut a = vec![0u64; n * n];
            for (e, red) in entries.iter().zip(&reduced) {
                let mut acc = 0u64;
                for c in red.iter().rev() {
                    // value of coordinate vector at z
                    let mut cz = 0u64;
                    let mut zp = 1u64;
                    for &x in c {
                        cz = addmod(cz, mulmod(x, zp, p), p);
                        zp = mulmod(zp, z, p);
                    }
                    acc = addmod(mulmod(acc, t0, p), cz, p);
                }
                a[e.row * n + e.col] = acc;
            }
            det_mod(&mut a, n, p)
        })
        .collect();
    // interpolate each embedding's values
    let npts = dbound + 1;
    let xs: Vec<u64> = (0..npts as u64).collect();
    let polys: Vec<Vec<u64>> = (0..embeds.len())
        .map(|k| interpolate(&xs, &values[k * npts..(k + 1) * npts], p))
        .collect();
    // recover power-basis coordinates from embeddings
    (0..npts)
        .map(|mdeg| {
            if deg == 1 {
                return vec![polys[0][mdeg]];
            }
            let s: Vec<u64> = polys.iter().map(|poly| poly[mdeg]).collect();
            let trace = |j: u64| -> u64 {
                // Tr(c zeta^{-j}) = sum_k s_k w^{-jk}
                let mut acc = 0u64;
                for (k, sk) in s.iter().enumerate() {
                    let kk = (k + 1) as u64;
                    let e = (q as u64 - (j * kk) % q as u64) % q as u64;
                    let wpow = if e == 0 { 1 } else { embeds[(e - 1) as usize] };
                    acc = addmod(acc, mulmod(*sk, wpow, p), p);
                }
                acc
            };
            let tlast = trace(q as u64 - 1);
            let qinv = invmod(q as u64, p);
            (0..deg as u64)
                .map(|j| mulmod(submod(trace(j), tlast, p), qinv, p))
                .collect()
        })
        .collect()
}

/// Newton interpolation through `(xs[i], ys[i])`, returning monomial coefficients.
pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for lvl in 1..n {
        for i in (lvl..n).rev() {
            let num = submod(dd[i], dd[i - 1], p);
            let den = submod(xs[i], xs[i - lvl], p);
            dd[i] = mulmod(num, invmod(den, p), p);
        }
    }
    let mut coeffs = vec![0u64; n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![0u64; n];
        for k in 0..n {
            if coeffs[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = addmod(next[k + 1], coeffs[k], p);
            }
            next[k] = submod(next[k], mulmod(coeffs[k], xs[i], p), p);
        }
        next[0] = addmod(next[0], dd[i], p);
        coeffs = next;
    }
    coeffs
}

/// Chinese remaindering to the symmetric range.
pub fn crt_symmetric(residues: &[u64], primes: &[u64], modulus: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for (&r, &p) in residues.iter().zip(primes) {
        let mi = modulus / p;
        let mi_mod = bigint_mod(&mi, p);
        let coef = mulmod(r, invmod(mi_mod, p), p);
        acc += mi * coef;
    }
    acc = acc.mod_floor(modulus);
    let half: BigInt = modulus >> 1u32;
    if acc > half {
        acc -= modulus;
    }
    acc
}

/// Convenience: promote an integer polynomial matrix into cyclotomic entries.
pub fn from_int_entries(rows: &[Vec<Vec<i64>>], q: u32) -> Matrix<LaurentPoly<CycNum>> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|p| {
                        LaurentPoly::from_coeffs(
                            0,
                            p.iter().map(|&c| CycNum::from_int(q, c)).collect(),
                        )
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Cofactor-expansion determinant; exponential, for cross-checks only.
pub fn det_laplace_poly(m: &Matrix<LaurentPoly<CycNum>>) -> LaurentPoly<CycNum> {
    m.det_laplace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::coeff::rat;

    #[test]
    fn identity_and_companion() {
        let q = 7;
        let id = Matrix::from_fn(5, 5, |i, j| {
            if i == j {
                LaurentPoly::constant(CycNum::from_int(q, 1))
            } else {
                LaurentPoly::zero()
            }
        });
        assert_eq!(
            det_poly_matrix(&id, q).unwrap(),
            LaurentPoly::constant(CycNum::from_int(q, 1))
        );
        // tI - C for C the companion of t^2 + t + 1
        let m = from_int_entries(&[vec![vec![0, 1], vec![1]], vec![vec![-1], vec![1, 1]]], 1);
        let d = det_poly_matrix(&m, 1).unwrap();
        let expect = LaurentPoly::from_coeffs(0, vec![CycNum::from_int(1, 1); 3]);
        assert_eq!(d, expect);
    }

    #[test]
    fn laurent_and_rational_entries() {
        let q = 5;
        let half = CycNum::from_rational(q, rat(1) / rat(2));
        let z = CycNum::zeta_pow(q, 1);
        let m = Matrix::from_rows(vec![
            vec![
                LaurentPoly::monomial(half.clone(), -1),
                LaurentPoly::monomial(z.clone(), 2),
            ],
            vec![
                LaurentPoly::constant(z.clone()),
                LaurentPoly::from_coeffs(0, vec![z.clone(), half.clone()]),
            ],
        ]);
        assert_eq!(det_poly_matrix(&m, q).unwrap(), det_laplace_poly(&m));
    }
}
