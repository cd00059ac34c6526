use super::coeff::{Coeff, Field};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial `sum c_i t^(low + i)`; the coefficient vector never
/// has zero entries at either end, and the zero polynomial has no entries.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct LaurentPoly<R> {
    low: i64,
    coeffs: Vec<R>,
}

impl<R: Coeff> LaurentPoly<R> {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<R>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn monomial(c: R, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with nonzero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    /// Width of the exponent support, `high - low`; 0 for constants.
    pub fn span(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.high() - self.low
        }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> Option<&R> {
        if exp < self.low {
            return None;
        }
        self.coeffs.get((exp - self.low) as usize)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn trailing(&self) -> Option<&R> {
        self.coeffs.first()
    }

    /// Iterator over `(exponent, coefficient)` for nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_coeffs(self.low, self.coeffs.iter().map(f).collect())
    }

    /// `p(t) -> conj(p)(t^-1)`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs = self.coeffs.iter().rev().map(|c| c.conj()).collect();
        LaurentPoly {
            low: -self.high(),
            coeffs,
        }
    }

    /// `p(t) -> p(t^k)` for `k != 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0);
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out = &out + &Self::monomial(c.clone(), e * k);
        }
        out
    }

    /// Shift so the lowest exponent is zero; returns the shift applied.
    pub fn normalize_low(&self) -> (Self, i64) {
        (self.shift(-self.low), self.low)
    }

    pub fn eval(&self, x: &R) -> Option<R> {
        if self.low < 0 {
            return None;
        }
        let mut acc = self.coeffs.last()?.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        for _ in 0..self.low {
            acc = acc.mul_ref(x);
        }
        Some(acc)
    }

    pub fn pow(&self, n: u32) -> Self {
        let one = match self.coeffs.first() {
            Some(c) => Self::constant(c.one_like()),
            None => return if n == 0 { panic!("0^0") } else { Self::zero() },
        };
        (0..n).fold(one, |acc, _| &acc * self)
    }
}

impl<R: Field> LaurentPoly<R> {
    /// Divide by a unit so that the leading coefficient is one and shift to
    /// lowest exponent zero. Returns `(normalized, unit, shift)` with
    /// `self = unit * t^shift * normalized`.
    pub fn monic_normalized(&self) -> (Self, R, i64) {
        assert!(!self.is_zero(), "cannot normalize zero");
        let lc = self.lead().unwrap().clone();
        let inv = lc.inv();
        let (n, s) = self.normalize_low();
        (n.scale(&inv), lc, s)
    }

    /// Long division of polynomials (low exponent 0 assumed for both);
    /// returns `(quotient, remainder)`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        assert!(
            self.low >= 0 && d.low >= 0,
            "div_rem expects ordinary polynomials"
        );
        let dd = d.high() as usize;
        let mut r: Vec<R> = (0..=self.high().max(0) as usize)
            .map(|e| match self.coeff(e as i64) {
                Some(c) => c.clone(),
                None => d.lead().unwrap().zero_like(),
            })
            .collect();
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let dv: Vec<R> = (0..=dd)
            .map(|e| {
                d.coeff(e as i64)
                    .cloned()
                    .unwrap_or_else(|| d.lead().unwrap().zero_like())
            })
            .collect();
        let inv = dv[dd].inv();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![inv.zero_like(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].mul_ref(&inv);
            if !c.is_zero() {
                for (j, dj) in dv.iter().enumerate() {
                    r[i + j] = r[i + j].sub_ref(&c.mul_ref(dj));
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(0, q), Self::from_coeffs(0, r))
    }

    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (a, sa) = self.normalize_low();
        let (b, sb) = d.normalize_low();
        let (q, r) = a.div_rem(&b);
        if r.is_zero() {
            Some(q.shift(sa - sb))
        } else {
            None
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, _) = self.normalize_low();
        let (mut b, _) = other.normalize_low();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic_normalized().0
        }
    }

    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            if e != 0 {
                let k =
                    (0..e.unsigned_abs()).fold(c.zero_like(), |acc, _| acc.add_ref(&c.one_like()));
                let k = if e < 0 { k.neg_ref() } else { k };
                out = &out + &Self::monomial(c.mul_ref(&k), e - 1);
            }
        }
        out
    }
}

impl<'a, R: Coeff> Add for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, o: &'a LaurentPoly<R>) -> LaurentPoly<R> {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let z = self.coeffs[0].zero_like();
        let coeffs = (low..=high)
            .map(|e| match (self.coeff(e), o.coeff(e)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => z.clone(),
            })
            .collect();
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl<R: Coeff> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }
}

impl<'a, R: Coeff> Sub for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, o: &'a LaurentPoly<R>) -> LaurentPoly<R> {
        self + &(-o)
    }
}

impl<'a, R: Coeff> Mul for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, o: &'a LaurentPoly<R>) -> LaurentPoly<R> {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut out = vec![z; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        LaurentPoly::from_coeffs(self.low + o.low, out)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl<R: Coeff> $tr for LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $f(self, o: LaurentPoly<R>) -> LaurentPoly<R> {
                (&self).$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

/// Polynomials are themselves coefficients (for matrices of polynomials).
/// `one_like` needs a nonzero sample to read the coefficient ring from.
impl<R: Coeff> Coeff for LaurentPoly<R> {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::constant(
            self.coeffs
                .first()
                .expect("one_like of zero polynomial")
                .one_like(),
        )
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        self.bar()
    }
}

impl<R: Coeff + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{e}")?,
            }
        }
        Ok(())
    }
}
