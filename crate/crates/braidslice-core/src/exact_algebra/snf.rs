use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Smith normal form `U A V = D` with `d_i | d_(i+1)` and nonnegative diagonal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..n).map(|i| self.d[i][i].clone()).collect()
    }

    /// Nontrivial torsion factors and the free rank of the cokernel.
    pub fn invariant_factors(&self) -> (Vec<BigInt>, usize) {
        let cols = self.d.first().map_or(0, |r| r.len());
        let diag = self.diagonal();
        let tors = diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        (tors, cols - rank)
    }
}

pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn int_det(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn row_combine(
    m: &mut IntMatrix,
    i: usize,
    j: usize,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    d: &BigInt,
) {
    // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j)
    for k in 0..m[i].len() {
        let x = m[i][k].clone();
        let y = m[j][k].clone();
        m[i][k] = a * &x + b * &y;
        m[j][k] = c * &x + d * &y;
    }
}

fn col_combine(
    m: &mut IntMatrix,
    i: usize,
    j: usize,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    d: &BigInt,
) {
    for row in m.iter_mut() {
        let x = row[i].clone();
        let y = row[j].clone();
        row[i] = a * &x + b * &y;
        row[j] = c * &x + d * &y;
    }
}

/// Smith normal form with unimodular transforms.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut d = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut vi = identity(cols);
    let one = BigInt::one();
    let zero = BigInt::zero();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero() && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        vi.swap(t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if d[i][t].is_zero() {
                    continue;
                }
                let eg = d[t][t].extended_gcd(&d[i][t]);
                let (g, x, y) = (eg.gcd, eg.x, eg.y);
                let p = &d[t][t] / &g;
                let q = &d[i][t] / &g;
                let mq = -q.clone();
                row_combine(&mut d, t, i, &x, &y, &mq, &p);
                row_combine(&mut u, t, i, &x, &y, &mq, &p);
                changed = true;
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let eg = d[t][t].extended_gcd(&d[t][j]);
                let (g, x, y) = (eg.gcd, eg.x, eg.y);
                let p = &d[t][t] / &g;
                let q = &d[t][j] / &g;
                let mq = -q.clone();
                col_combine(&mut d, t, j, &x, &y, &mq, &p);
                col_combine(&mut v, t, j, &x, &y, &mq, &p);
                // inverse of [[x, -q],[y, p]] acting on rows of v_inv is [[p, q],[-y, x]]
                let my = -y.clone();
                row_combine(&mut vi, t, j, &p, &q, &my, &x);
                changed = true;
            }
            if !changed {
                // divisibility: if some entry is not divisible by the pivot, fold its row in
                let piv = d[t][t].clone();
                let bad =
                    (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&d[i][j] % &piv).is_zero()));
                match bad {
                    Some(i) => {
                        row_combine(&mut d, t, i, &one, &one, &zero, &one);
                        row_combine(&mut u, t, i, &one, &one, &zero, &one);
                    }
                    None => break,
                }
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
        t += 1;
    }
    SnfResult { d, u, v, v_inv: vi }
}

/// Smith form of a matrix whose cokernel is annihilated by `modulus`, with
/// all arithmetic in `Z/modulus`. Returns the cokernel's cyclic factors
/// (trivial ones included) together with `U` and `U⁻¹` reduced mod `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfMod {
    pub modulus: i128,
    pub diagonal: Vec<i128>,
    pub u: Vec<Vec<i128>>,
    pub u_inv: Vec<Vec<i128>>,
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Bezout coefficients preferring `(1, 0)` when `a | b`, so that exact
/// multiples never trigger a row swap.
fn bezout(a: i128, b: i128) -> (i128, i128, i128) {
    if b % a == 0 {
        (a, 1, 0)
    } else {
        egcd(a, b)
    }
}

fn gcd_i(a: i128, b: i128) -> i128 {
    egcd(a.abs(), b.abs()).0
}

pub fn snf_mod(a: &[Vec<i128>], modulus: i128) -> SnfMod {
    let m = modulus;
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let red = |x: i128| x.rem_euclid(m);
    let mut d: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| red(x)).collect())
        .collect();
    let eye = |n: usize| -> Vec<Vec<i128>> {
        (0..n)
            .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
            .collect()
    };
    let mut u = eye(rows);
    let mut ui = eye(rows);
    // rows (i, j) <- (a r_i + b r_j, c r_i + e r_j)
    let rows2 = |mx: &mut Vec<Vec<i128>>, i: usize, j: usize, c: [i128; 4]| {
        for k in 0..mx[i].len() {
            let (x, y) = (mx[i][k], mx[j][k]);
            mx[i][k] = red(red(c[0] * x) + red(c[1] * y));
            mx[j][k] = red(red(c[2] * x) + red(c[3] * y));
        }
    };
    let cols2 = |mx: &mut Vec<Vec<i128>>, i: usize, j: usize, c: [i128; 4]| {
        for row in mx.iter_mut() {
            let (x, y) = (row[i], row[j]);
            row[i] = red(red(c[0] * x) + red(c[1] * y));
            row[j] = red(red(c[2] * x) + red(c[3] * y));
        }
    };
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j] < d[bi][bj]) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else {
            diagonal.extend(std::iter::repeat_n(m, rows.min(cols) - t));
            break;
        };
        d.swap(t, pi);
        u.swap(t, pi);
        for row in ui.iter_mut() {
            row.swap(t, pi);
        }
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if d[i][t] == 0 {
                    continue;
                }
                let (g, x, y) = bezout(d[t][t], d[i][t]);
                let (p, q) = (d[t][t] / g, d[i][t] / g);
                let e = [red(x), red(y), red(-q), red(p)];
                rows2(&mut d, t, i, e);
                rows2(&mut u, t, i, e);
                cols2(&mut ui, t, i, [red(p), red(q), red(-y), red(x)]);
                changed = true;
            }
            for j in t + 1..cols {
                if d[t][j] == 0 {
                    continue;
                }
                let (g, x, y) = bezout(d[t][t], d[t][j]);
                let (p, q) = (d[t][t] / g, d[t][j] / g);
                cols2(&mut d, t, j, [red(x), red(y), red(-q), red(p)]);
                changed = true;
            }
            if !changed {
                let piv = d[t][t];
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[i][j] % piv != 0));
                match bad {
                    Some(i) => {
                        rows2(&mut d, t, i, [1, 1, 0, 1]);
                        rows2(&mut u, t, i, [1, 1, 0, 1]);
                        cols2(&mut ui, t, i, [1, 0, red(-1), 1]);
                    }
                    None => break,
                }
            }
        }
        diagonal.push(gcd_i(d[t][t], m));
    }
    SnfMod {
        modulus: m,
        diagonal,
        u,
        u_inv: ui,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SnfResult {
        let r = snf(a);
        assert_eq!(mat_mul(&mat_mul(&r.u, a), &r.v), r.d);
        assert_eq!(mat_mul(&r.v, &r.v_inv), identity(r.v.len()));
        assert!(int_det(&r.u).abs().is_one());
        let diag = r.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        r
    }

    #[test]
    fn small_cases() {
        let r = check(&int_matrix(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(r.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        let r = check(&int_matrix(&[vec![7, 0], vec![0, 7]]));
        assert_eq!(r.diagonal(), vec![BigInt::from(7), BigInt::from(7)]);
        let r = check(&int_matrix(&[vec![2, 0, 0], vec![0, 3, 0]]));
        assert_eq!(r.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let r = check(&int_matrix(&[vec![0, 0], vec![0, 0]]));
        assert_eq!(r.invariant_factors(), (vec![], 2));
    }

    #[test]
    fn modular_matches_integer() {
        let rows = vec![vec![7, 14, 0], vec![0, 7, 21], vec![7, 0, 49]];
        let a = int_matrix(&rows);
        let det = int_det(&a).abs();
        let m: i128 = det.try_into().unwrap();
        let r = snf_mod(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect::<Vec<_>>(),
            m,
        );
        let z: Vec<i128> = snf(&a)
            .diagonal()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(r.diagonal, z);
        let n = rows.len();
        for i in 0..n {
            for j in 0..n {
                let s: i128 = (0..n)
                    .map(|k| r.u[i][k] * r.u_inv[k][j])
                    .sum::<i128>()
                    .rem_euclid(m);
                assert_eq!(s, i128::from(i == j));
            }
        }
    }

    #[test]
    fn bareiss_det() {
        let a = int_matrix(&[vec![0, 2, 1], vec![3, 1, 4], vec![1, 5, 9]]);
        assert_eq!(int_det(&a), BigInt::from(-32));
    }
}
