use serde::{Deserialize, Serialize};
use std::fmt;

/// Element `c0 + c1 t` of M = (Z/q)[t^{+-1}]/(t^2 + t + 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuotRingElem {
    pub q: u64,
    pub c0: u64,
    pub c1: u64,
}

impl QuotRingElem {
    pub fn new(q: u64, c0: i64, c1: i64) -> Self {
        QuotRingElem {
            q,
            c0: c0.rem_euclid(q as i64) as u64,
            c1: c1.rem_euclid(q as i64) as u64,
        }
    }

    pub fn zero(q: u64) -> Self {
        Self::new(q, 0, 0)
    }

    pub fn one(q: u64) -> Self {
        Self::new(q, 1, 0)
    }

    pub fn t(q: u64) -> Self {
        Self::new(q, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            q: self.q,
            c0: (self.c0 + o.c0) % self.q,
            c1: (self.c1 + o.c1) % self.q,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            q: self.q,
            c0: (self.q - self.c0) % self.q,
            c1: (self.q - self.c1) % self.q,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let q = self.q;
        // (a0 + a1 t)(b0 + b1 t) with t^2 = -1 - t
        let s = self.c0 * o.c0 % q;
        let m = (self.c0 * o.c1 + self.c1 * o.c0) % q;
        let h = self.c1 * o.c1 % q;
        Self {
            q,
            c0: (s + q - h) % q,
            c1: (m + q - h) % q,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        self.mul(&Self::new(self.q, k, 0))
    }

    pub fn times_t(&self) -> Self {
        self.mul(&Self::t(self.q))
    }

    /// Multiply by `t^k` for any integer `k`.
    pub fn times_t_pow(&self, k: i64) -> Self {
        (0..k.rem_euclid(3)).fold(*self, |acc, _| acc.times_t())
    }

    /// Coordinates `(c0, c1)` as a 2-vector over Z/q.
    pub fn coords(&self) -> [u64; 2] {
        [self.c0, self.c1]
    }

    /// Multiplication-by-t matrix acting on column coordinates.
    pub fn t_matrix(q: u64) -> [[u64; 2]; 2] {
        [[0, q - 1], [1, q - 1]]
    }
}

impl fmt::Display for QuotRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c0, self.c1) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "t"),
            (0, b) => write!(f, "{b}t"),
            (a, 1) => write!(f, "t+{a}"),
            (a, b) => write!(f, "{b}t+{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_cubed_is_one() {
        for q in [7u64, 13] {
            for c0 in 0..q as i64 {
                for c1 in 0..q as i64 {
                    let x = QuotRingElem::new(q, c0, c1);
                    assert_eq!(x.times_t().times_t().times_t(), x);
                }
            }
        }
    }

    #[test]
    fn t_inverse_is_t_squared() {
        let t = QuotRingElem::t(7);
        assert_eq!(t.mul(&t).mul(&t), QuotRingElem::one(7));
        // t^2 + t + 1 = 0
        assert!(t.mul(&t).add(&t).add(&QuotRingElem::one(7)).is_zero());
    }
}
