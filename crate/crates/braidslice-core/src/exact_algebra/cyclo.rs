use super::coeff::{rat, Coeff, Field};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Element of the cyclotomic field Q(zeta_q) for `q = 1` (the rationals) or
/// `q` prime, stored in the power basis `1, zeta, ..., zeta^(d-1)` with
/// `d = q - 1` (and `d = 1` when `q = 1`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CycNum {
    q: u32,
    c: Vec<BigRational>,
}

pub fn cyclotomic_degree(q: u32) -> usize {
    if q <= 2 {
        1
    } else {
        (q - 1) as usize
    }
}

impl CycNum {
    pub fn zero(q: u32) -> Self {
        CycNum {
            q,
            c: vec![BigRational::zero(); cyclotomic_degree(q)],
        }
    }

    pub fn from_rational(q: u32, x: BigRational) -> Self {
        let mut z = Self::zero(q);
        z.c[0] = x;
        z
    }

    pub fn from_int(q: u32, x: i64) -> Self {
        Self::from_rational(q, rat(x))
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(q: u32, k: i64) -> Self {
        let mut acc = vec![BigRational::zero(); q.max(1) as usize];
        let k = k.rem_euclid(q.max(1) as i64) as usize;
        acc[k] = BigRational::one();
        Self::reduce(q, acc)
    }

    /// Build from arbitrary coefficients of `1, zeta, zeta^2, ...`.
    pub fn from_coeffs(q: u32, coeffs: Vec<BigRational>) -> Self {
        Self::reduce(q, coeffs)
    }

    pub fn from_int_coeffs(q: u32, coeffs: &[i64]) -> Self {
        Self::reduce(q, coeffs.iter().map(|&x| rat(x)).collect())
    }

    fn reduce(q: u32, raw: Vec<BigRational>) -> Self {
        let n = q.max(1) as usize;
        let mut a = vec![BigRational::zero(); n];
        for (i, x) in raw.into_iter().enumerate() {
            a[i % n] += x;
        }
        let d = cyclotomic_degree(q);
        if n > d {
            // zeta^(q-1) = -(1 + ... + zeta^(q-2))
            let top = a[n - 1].clone();
            a.truncate(d);
            if !Zero::is_zero(&top) {
                for x in a.iter_mut() {
                    *x -= &top;
                }
            }
        }
        CycNum { q, c: a }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().skip(1).all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator(&self) -> BigInt {
        self.c
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Galois automorphism `zeta -> zeta^j`.
    pub fn galois(&self, j: i64) -> Self {
        let n = self.q.max(1) as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (k, x) in self.c.iter().enumerate() {
            let e = ((k as i64) * j).rem_euclid(n as i64) as usize;
            raw[e] += x;
        }
        Self::reduce(self.q, raw)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> BigRational {
        if self.q <= 2 {
            return self.c[0].clone();
        }
        let mut acc = self.clone();
        for j in 2..self.q as i64 {
            acc = acc.mul_ref(&self.galois(j));
        }
        debug_assert!(acc.is_rational());
        acc.c[0].clone()
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        CycNum {
            q: self.q,
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    /// Sum of absolute values of the coordinates.
    pub fn l1(&self) -> BigRational {
        self.c
            .iter()
            .fold(BigRational::zero(), |acc, x| acc + x.abs())
    }
}

impl Coeff for CycNum {
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.q)
    }
    fn one_like(&self) -> Self {
        Self::from_int(self.q, 1)
    }
    fn add_ref(&self, o: &Self) -> Self {
        debug_assert_eq!(self.q, o.q);
        CycNum {
            q: self.q,
            c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect(),
        }
    }
    fn sub_ref(&self, o: &Self) -> Self {
        debug_assert_eq!(self.q, o.q);
        CycNum {
            q: self.q,
            c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect(),
        }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        debug_assert_eq!(self.q, o.q);
        let n = self.c.len();
        let mut raw = vec![BigRational::zero(); 2 * n];
        for (i, a) in self.c.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !Zero::is_zero(b) {
                    raw[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.q, raw)
    }
    fn neg_ref(&self) -> Self {
        CycNum {
            q: self.q,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
    fn conj(&self) -> Self {
        self.galois(-1)
    }
}

impl Field for CycNum {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.q <= 2 {
            return Self::from_rational(self.q, self.c[0].recip());
        }
        let mut rest = self.one_like();
        for j in 2..self.q as i64 {
            rest = rest.mul_ref(&self.galois(j));
        }
        let n = self.mul_ref(&rest);
        debug_assert!(n.is_rational());
        rest.scale_rational(&n.c[0].recip())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, x) in self.c.iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{x}")?,
                1 => write!(f, "{x}z")?,
                _ => write!(f, "{x}z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_relations() {
        for q in [3u32, 5, 7, 13] {
            let z = CycNum::zeta_pow(q, 1);
            let mut p = z.one_like();
            for _ in 0..q {
                p = p.mul_ref(&z);
            }
            assert!(p.is_one());
            let s = (0..q as i64).fold(CycNum::zero(q), |acc, k| {
                acc.add_ref(&CycNum::zeta_pow(q, k))
            });
            assert!(s.is_zero());
        }
    }

    #[test]
    fn inverse_and_norm() {
        let q = 7;
        let x = CycNum::from_int_coeffs(q, &[1, 2, 0, -1]);
        let y = x.inv();
        assert!(x.mul_ref(&y).is_one());
        // N(1 - zeta) = q
        let one_minus = CycNum::from_int_coeffs(q, &[1, -1]);
        assert_eq!(one_minus.norm(), rat(7));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn rationals_as_q1() {
        let a = CycNum::from_int(1, 3);
        assert_eq!(CycNum::zeta_pow(1, 5), CycNum::from_int(1, 1));
        assert_eq!(a.inv().mul_ref(&a), a.one_like());
    }
}
