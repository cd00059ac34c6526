//! Dense matrices over a coefficient ring, plus exact elimination over fields.

use super::coeff::{rat_sign, Coeff, Field};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Matrix<R> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<R>,
}

impl<R: Coeff> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> R) -> Self {
        let mut f = f;
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let zero = self
            .data
            .first()
            .or(o.data.first())
            .expect("empty product")
            .zero_like();
        Self::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(zero.clone(), |acc, k| {
                acc.add_ref(&self.get(i, k).mul_ref(o.get(k, j)))
            })
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Determinant by cofactor expansion; exponential, used only as a test oracle.
    pub fn det_laplace(&self) -> R {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            panic!("empty matrix has no sample element");
        }
        let idx: Vec<usize> = (0..n).collect();
        laplace(self, 0, &idx)
    }
}

fn laplace<R: Coeff>(m: &Matrix<R>, row: usize, cols: &[usize]) -> R {
    if cols.len() == 1 {
        return m.get(row, cols[0]).clone();
    }
    let mut acc = m.get(0, 0).zero_like();
    for (pos, &c) in cols.iter().enumerate() {
        let e = m.get(row, c);
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = e.mul_ref(&laplace(m, row + 1, &rest));
        acc = if pos % 2 == 0 {
            acc.add_ref(&term)
        } else {
            acc.sub_ref(&term)
        };
    }
    acc
}

impl<R: Field> Matrix<R> {
    pub fn identity_like(n: usize, sample: &R) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                sample.one_like()
            } else {
                sample.zero_like()
            }
        })
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let sample = self.data.first()?.clone();
        let mut a = self.clone();
        let mut inv = Self::identity_like(n, &sample);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).inv();
            for j in 0..n {
                a.set(col, j, a.get(col, j).mul_ref(&p));
                inv.set(col, j, inv.get(col, j).mul_ref(&p));
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    a.set(r, j, a.get(r, j).sub_ref(&f.mul_ref(a.get(col, j))));
                    inv.set(r, j, inv.get(r, j).sub_ref(&f.mul_ref(inv.get(col, j))));
                }
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> R {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut d = self.data[0].one_like();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return d.zero_like();
            };
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                }
                d = d.neg_ref();
            }
            let p = a.get(col, col).clone();
            d = d.mul_ref(&p);
            let pinv = p.inv();
            for r in col + 1..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).mul_ref(&pinv);
                for j in col..n {
                    a.set(r, j, a.get(r, j).sub_ref(&f.mul_ref(a.get(col, j))));
                }
            }
        }
        d
    }

    /// Diagonal of a congruence diagonalisation `P A P* = D` of a hermitian
    /// matrix (symmetric when the involution is trivial). Zero diagonal
    /// pivots are repaired by adding a conjugate-scaled column.
    pub fn hermitian_diagonal(&self) -> Vec<R> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut out = Vec::with_capacity(n);
        let mut active: Vec<usize> = (0..n).collect();
        while let Some(&first) = active.first() {
            let mut piv = active.iter().copied().find(|&i| !a.get(i, i).is_zero());
            if piv.is_none() {
                // find i, j with a_ij != 0 and make a_ii nonzero
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a.get(i, j).is_zero());
                let Some((i, j)) = pair else {
                    out.extend(active.iter().map(|_| self.data[0].zero_like()));
                    break;
                };
                // x_i <- x_i + a_ij x_j turns a_ii into 2 |a_ij|^2
                let c = a.get(i, j).clone();
                add_scaled(&mut a, i, j, &c);
                assert!(!a.get(i, i).is_zero(), "failed to create nonzero pivot");
                piv = Some(i);
            }
            let p = piv.unwrap_or(first);
            let d = a.get(p, p).clone();
            let dinv = d.inv();
            for &r in active.iter() {
                if r == p || a.get(r, p).is_zero() {
                    continue;
                }
                // row_r -= (a_rp / d) row_p; col_r -= conj(...) col_p
                let f = a.get(r, p).mul_ref(&dinv);
                let fc = f.conj();
                for &j in active.iter() {
                    let v = a.get(r, j).sub_ref(&f.mul_ref(a.get(p, j)));
                    a.set(r, j, v);
                }
                for &j in active.iter() {
                    let v = a.get(j, r).sub_ref(&a.get(j, p).mul_ref(&fc));
                    a.set(j, r, v);
                }
            }
            out.push(d);
            active.retain(|&x| x != p);
        }
        out
    }
}

/// `x_i <- x_i + c x_j` applied as a congruence (row op and conjugate column op).
fn add_scaled<R: Field>(a: &mut Matrix<R>, i: usize, j: usize, c: &R) {
    let n = a.rows;
    for k in 0..n {
        let v = a.get(i, k).add_ref(&c.mul_ref(a.get(j, k)));
        a.set(i, k, v);
    }
    let cc = c.conj();
    for k in 0..n {
        let v = a.get(k, i).add_ref(&a.get(k, j).mul_ref(&cc));
        a.set(k, i, v);
    }
}

/// Signature (positive minus negative count) of a rational symmetric matrix.
pub fn signature_rational(m: &Matrix<BigRational>) -> i64 {
    if m.rows == 0 {
        return 0;
    }
    m.hermitian_diagonal()
        .iter()
        .map(|d| rat_sign(d) as i64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::coeff::rat;

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn inverse_roundtrip() {
        let a = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let b = a.inverse().unwrap();
        assert_eq!(a.mul(&b), Matrix::identity_like(3, &rat(1)));
        assert_eq!(a.det(), a.det_laplace());
    }

    #[test]
    fn signature_with_zero_diagonal() {
        let h = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature_rational(&h), 0);
        let h = qm(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -3]]);
        assert_eq!(signature_rational(&h), -1);
        let h = qm(&[&[-2, 1], &[1, -2]]);
        assert_eq!(signature_rational(&h), -2);
    }
}
