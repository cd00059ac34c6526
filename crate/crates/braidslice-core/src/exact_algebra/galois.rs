//! Finite residue fields GF(l^d) = F_l[z]/Phi_q(z) for primes l that are
//! inert in Q(zeta_q), polynomial arithmetic over them (including
//! Cantor-Zassenhaus factorisation), and Hensel lifting over the Galois
//! ring (Z/l^k)[z]/Phi_q(z).

use super::cyclo::{cyclotomic_degree, CycNum};
use super::modp::{addmod, invmod, is_prime, mulmod, powmod, submod};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Fe = Vec<u64>;
pub type FPoly = Vec<Fe>;

#[derive(Clone, Debug)]
pub struct ResidueField {
    pub l: u64,
    pub q: u32,
    pub deg: usize,
}

/// Multiplicative order of `a` modulo the prime `q`.
fn order_mod(a: u64, q: u64) -> u64 {
    let mut x = a % q;
    let mut k = 1;
    while x != 1 {
        x = x * (a % q) % q;
        k += 1;
    }
    k
}

impl ResidueField {
    /// `None` unless `l` is an odd prime with Phi_q irreducible mod `l`.
    pub fn new(l: u64, q: u32) -> Option<Self> {
        if l == 2 || !is_prime(l) {
            return None;
        }
        let deg = cyclotomic_degree(q);
        if q > 2 && (l.is_multiple_of(q as u64) || order_mod(l, q as u64) != q as u64 - 1) {
            return None;
        }
        Some(ResidueField { l, q, deg })
    }

    /// Inert odd primes in increasing order.
    pub fn inert_primes(q: u32) -> impl Iterator<Item = u64> {
        (3u64..).filter(move |&l| ResidueField::new(l, q).is_some())
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.l).pow(self.deg as u32)
    }

    pub fn zero(&self) -> Fe {
        vec![0; self.deg]
    }

    pub fn one(&self) -> Fe {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    pub fn is_zero(a: &Fe) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| addmod(x, y, self.l))
            .collect()
    }

    pub fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| submod(x, y, self.l))
            .collect()
    }

    pub fn neg(&self, a: &Fe) -> Fe {
        a.iter().map(|&x| submod(0, x, self.l)).collect()
    }

    pub fn scale(&self, a: &Fe, c: u64) -> Fe {
        a.iter().map(|&x| mulmod(x, c, self.l)).collect()
    }

    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        let l = self.l;
        let n = (self.q.max(1)) as usize;
        let mut raw = vec![0u64; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    let k = (i + j) % n;
                    raw[k] = addmod(raw[k], mulmod(x, y, l), l);
                }
            }
        }
        self.fold(raw)
    }

    fn fold(&self, mut raw: Vec<u64>) -> Fe {
        let n = raw.len();
        if n > self.deg {
            let top = raw[n - 1];
            raw.truncate(self.deg);
            if top != 0 {
                for x in raw.iter_mut() {
                    *x = submod(*x, top, self.l);
                }
            }
        }
        raw
    }

    pub fn pow(&self, a: &Fe, e: &BigUint) -> Fe {
        let mut r = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            r = self.mul(&r, &r);
            if e.bit(i) {
                r = self.mul(&r, a);
            }
        }
        r
    }

    pub fn inv(&self, a: &Fe) -> Fe {
        assert!(!Self::is_zero(a), "inverse of zero in residue field");
        let e = self.size() - 2u32;
        self.pow(a, &e)
    }

    /// Reduction of an element with coordinates integral at `l`.
    pub fn from_cyc(&self, c: &CycNum) -> Option<Fe> {
        let lb = BigInt::from(self.l);
        c.coords()
            .iter()
            .map(|x| {
                let d = x.denom().mod_floor(&lb).to_u64().unwrap();
                if d == 0 {
                    return None;
                }
                let n = x.numer().mod_floor(&lb).to_u64().unwrap();
                Some(mulmod(n, invmod(d, self.l), self.l))
            })
            .collect()
    }

    pub fn random(&self, rng: &mut ChaCha8Rng) -> Fe {
        (0..self.deg).map(|_| rng.gen_range(0..self.l)).collect()
    }

    // ---- polynomials over the residue field (index = degree) ----

    pub fn p_trim(&self, mut p: FPoly) -> FPoly {
        while p.last().is_some_and(Self::is_zero) {
            p.pop();
        }
        p
    }

    pub fn p_deg(p: &FPoly) -> isize {
        p.len() as isize - 1
    }

    pub fn p_add(&self, a: &FPoly, b: &FPoly) -> FPoly {
        let n = a.len().max(b.len());
        let z = self.zero();
        let v = (0..n)
            .map(|i| self.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.p_trim(v)
    }

    pub fn p_sub(&self, a: &FPoly, b: &FPoly) -> FPoly {
        let n = a.len().max(b.len());
        let z = self.zero();
        let v = (0..n)
            .map(|i| self.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.p_trim(v)
    }

    pub fn p_mul(&self, a: &FPoly, b: &FPoly) -> FPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if Self::is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let prod = self.mul(x, y);
                out[i + j] = self.add(&out[i + j], &prod);
            }
        }
        self.p_trim(out)
    }

    pub fn p_scale(&self, a: &FPoly, c: &Fe) -> FPoly {
        self.p_trim(a.iter().map(|x| self.mul(x, c)).collect())
    }

    pub fn p_divrem(&self, a: &FPoly, d: &FPoly) -> (FPoly, FPoly) {
        assert!(!d.is_empty(), "division by zero polynomial");
        if a.len() < d.len() {
            return (Vec::new(), a.clone());
        }
        let mut r = a.clone();
        let dd = d.len() - 1;
        let inv = self.inv(&d[dd]);
        let mut q = vec![self.zero(); a.len() - dd];
        for i in (0..q.len()).rev() {
            let c = self.mul(&r[i + dd], &inv);
            if !Self::is_zero(&c) {
                for (j, dj) in d.iter().enumerate() {
                    let s = self.mul(&c, dj);
                    r[i + j] = self.sub(&r[i + j], &s);
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (self.p_trim(q), self.p_trim(r))
    }

    pub fn p_rem(&self, a: &FPoly, d: &FPoly) -> FPoly {
        self.p_divrem(a, d).1
    }

    pub fn p_monic(&self, a: &FPoly) -> FPoly {
        match a.last() {
            None => Vec::new(),
            Some(lc) => {
                let inv = self.inv(lc);
                self.p_scale(a, &inv)
            }
        }
    }

    pub fn p_gcd(&self, a: &FPoly, b: &FPoly) -> FPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_empty() {
            let r = self.p_rem(&x, &y);
            x = y;
            y = r;
        }
        self.p_monic(&x)
    }

    /// Extended gcd: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn p_xgcd(&self, a: &FPoly, b: &FPoly) -> (FPoly, FPoly, FPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![self.one()], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![self.one()]);
        while !r1.is_empty() {
            let (qt, r) = self.p_divrem(&r0, &r1);
            let s2 = self.p_sub(&s0, &self.p_mul(&qt, &s1));
            let t2 = self.p_sub(&t0, &self.p_mul(&qt, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(r0.last().expect("gcd of zeros"));
        (
            self.p_scale(&r0, &inv),
            self.p_scale(&s0, &inv),
            self.p_scale(&t0, &inv),
        )
    }

    pub fn p_deriv(&self, a: &FPoly) -> FPoly {
        let v = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.scale(c, i as u64 % self.l))
            .collect();
        self.p_trim(v)
    }

    pub fn p_powmod(&self, base: &FPoly, e: &BigUint, m: &FPoly) -> FPoly {
        let mut r = vec![self.one()];
        let b = self.p_rem(base, m);
        for i in (0..e.bits()).rev() {
            r = self.p_rem(&self.p_mul(&r, &r), m);
            if e.bit(i) {
                r = self.p_rem(&self.p_mul(&r, &b), m);
            }
        }
        r
    }

    pub fn is_squarefree(&self, f: &FPoly) -> bool {
        let d = self.p_deriv(f);
        if d.is_empty() {
            return f.len() <= 1;
        }
        self.p_gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorisation of a monic squarefree polynomial.
    pub fn ddf(&self, f: &FPoly) -> Vec<(FPoly, usize)> {
        let qsz = self.size();
        let x: FPoly = vec![self.zero(), self.one()];
        let mut out = Vec::new();
        let mut rest = f.clone();
        let mut h = x.clone();
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((rest.clone(), deg));
                break;
            }
            h = self.p_powmod(&h, &qsz, &rest);
            let g = self.p_gcd(&rest, &self.p_sub(&h, &x));
            if g.len() > 1 {
                rest = self.p_divrem(&rest, &g).0;
                h = self.p_rem(&h, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Equal-degree splitting (odd characteristic).
    pub fn edf(&self, f: &FPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.clone()];
        }
        let e: BigUint = (self.size().pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: FPoly = self.p_trim((0..n).map(|_| self.random(rng)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.p_sub(&self.p_powmod(&a, &e, f), &vec![self.one()]);
            let g = self.p_gcd(f, &b);
            if g.len() > 1 && g.len() < f.len() {
                let other = self.p_divrem(f, &g).0;
                let mut out = self.edf(&g, d, rng);
                out.extend(self.edf(&self.p_monic(&other), d, rng));
                return out;
            }
        }
    }

    /// Irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree(&self, f: &FPoly, rng: &mut ChaCha8Rng) -> Vec<FPoly> {
        let mut out = Vec::new();
        for (g, d) in self.ddf(f) {
            out.extend(self.edf(&g, d, rng));
        }
        out
    }
}

/// Polynomials over the Galois ring (Z/l^k)[z]/Phi_q with BigInt coordinates
/// kept in `[0, l^k)`.
#[derive(Clone, Debug)]
pub struct GaloisRing {
    pub field: ResidueField,
    pub k: u32,
    pub modulus: BigInt,
}

pub type GElem = Vec<BigInt>;
pub type GPoly = Vec<GElem>;

impl GaloisRing {
    pub fn new(field: ResidueField, k: u32) -> Self {
        let modulus = BigInt::from(field.l).pow(k);
        GaloisRing { field, k, modulus }
    }

    fn deg(&self) -> usize {
        self.field.deg
    }

    pub fn elem_mul(&self, a: &GElem, b: &GElem, m: &BigInt) -> GElem {
        let n = self.field.q.max(1) as usize;
        let mut raw = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[(i + j) % n] += x * y;
                }
            }
        }
        let d = self.deg();
        if n > d {
            let top = raw[n - 1].clone();
            raw.truncate(d);
            for x in raw.iter_mut() {
                *x -= &top;
            }
        }
        raw.into_iter().map(|x| x.mod_floor(m)).collect()
    }

    pub fn poly_mul(&self, a: &GPoly, b: &GPoly, m: &BigInt) -> GPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let d = self.deg();
        let mut out = vec![vec![BigInt::zero(); d]; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let prod = self.elem_mul(x, y, m);
                for (o, p) in out[i + j].iter_mut().zip(prod) {
                    *o += p;
                }
            }
        }
        out.into_iter()
            .map(|c| c.into_iter().map(|x| x.mod_floor(m)).collect())
            .collect()
    }

    pub fn lift_field_poly(&self, p: &FPoly) -> GPoly {
        p.iter()
            .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn to_field_poly(&self, p: &GPoly) -> FPoly {
        let lb = BigInt::from(self.field.l);
        let v = p
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| x.mod_floor(&lb).to_u64().unwrap())
                    .collect()
            })
            .collect();
        self.field.p_trim(v)
    }

    /// Lift `f = a0 b0 (mod l)` with coprime monic `a0, b0` to `mod l^k`.
    /// `f` must be monic with coordinates reduced mod `l^k`.
    pub fn lift_pair(&self, f: &GPoly, a0: &FPoly, b0: &FPoly) -> (GPoly, GPoly) {
        let fld = &self.field;
        let (g, s, t) = fld.p_xgcd(a0, b0);
        assert_eq!(g.len(), 1, "Hensel lifting needs coprime factors");
        let _ = s;
        let mut a = self.lift_field_poly(a0);
        let mut b = self.lift_field_poly(b0);
        let lb = BigInt::from(fld.l);
        let mut pj = lb.clone();
        for _ in 1..self.k {
            let next = &pj * &lb;
            let ab = self.poly_mul(&a, &b, &next);
            let n = f.len().max(ab.len());
            let zero = vec![BigInt::zero(); self.deg()];
            let err: GPoly = (0..n)
                .map(|i| {
                    let x = f.get(i).unwrap_or(&zero);
                    let y = ab.get(i).unwrap_or(&zero);
                    x.iter()
                        .zip(y)
                        .map(|(u, v)| (u - v).mod_floor(&next) / &pj)
                        .collect()
                })
                .collect();
            let e = self.to_field_poly(&err);
            if !e.is_empty() {
                let alpha = fld.p_rem(&fld.p_mul(&t, &e), a0);
                let (beta, rem) = fld.p_divrem(&fld.p_sub(&e, &fld.p_mul(&alpha, b0)), a0);
                debug_assert!(rem.is_empty());
                add_scaled(&mut a, &self.lift_field_poly(&alpha), &pj, self.deg());
                add_scaled(&mut b, &self.lift_field_poly(&beta), &pj, self.deg());
            }
            pj = next;
        }
        (a, b)
    }

    /// Lift a factorisation of monic `f` modulo `l` into pairwise coprime
    /// monic factors to a factorisation modulo `l^k`.
    pub fn multi_lift(&self, f: &GPoly, factors: &[FPoly]) -> Vec<GPoly> {
        if factors.len() == 1 {
            return vec![f.clone()];
        }
        let mid = factors.len() / 2;
        let fld = &self.field;
        let prod = |fs: &[FPoly]| fs.iter().fold(vec![fld.one()], |acc, x| fld.p_mul(&acc, x));
        let (a, b) = self.lift_pair(f, &prod(&factors[..mid]), &prod(&factors[mid..]));
        let mut out = self.multi_lift(&a, &factors[..mid]);
        out.extend(self.multi_lift(&b, &factors[mid..]));
        out
    }
}

fn add_scaled(a: &mut GPoly, delta: &GPoly, s: &BigInt, deg: usize) {
    while a.len() < delta.len() {
        a.push(vec![BigInt::zero(); deg]);
    }
    for (x, d) in a.iter_mut().zip(delta) {
        for (u, v) in x.iter_mut().zip(d) {
            *u += v * s;
        }
    }
}

/// Symmetric representative of `x mod m`.
pub fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub fn one_biguint() -> BigUint {
    BigUint::one()
}

pub fn powmod_u64(b: u64, e: u64, m: u64) -> u64 {
    powmod(b, e, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn inert_primes_for_seven() {
        let ls: Vec<u64> = ResidueField::inert_primes(7).take(4).collect();
        assert_eq!(ls, vec![3, 5, 17, 19]);
    }

    #[test]
    fn field_inverse() {
        let f = ResidueField::new(3, 7).unwrap();
        let a = vec![1, 2, 0, 1, 0, 2];
        let b = f.inv(&a);
        assert_eq!(f.mul(&a, &b), f.one());
    }

    #[test]
    fn factor_and_lift() {
        let fld = ResidueField::new(5, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // (x-1)(x-2)(x+1) over F_5
        let p = |v: &[u64]| -> FPoly { v.iter().map(|&x| vec![x]).collect() };
        let f = fld.p_mul(&fld.p_mul(&p(&[4, 1]), &p(&[3, 1])), &p(&[1, 1]));
        let fs = fld.factor_squarefree(&f, &mut rng);
        assert_eq!(fs.len(), 3);
        // lift x^2 - 2 = (x-3)(x+3) mod 7? use l=5: x^2 - 6 = x^2 - 1 mod 5 = (x-1)(x+1)
        let gr = GaloisRing::new(fld.clone(), 6);
        let fz: GPoly = vec![
            vec![(BigInt::from(-6)).mod_floor(&gr.modulus)],
            vec![BigInt::zero()],
            vec![BigInt::one()],
        ];
        let lifted = gr.multi_lift(&fz, &[p(&[4, 1]), p(&[1, 1])]);
        let prod = gr.poly_mul(&lifted[0], &lifted[1], &gr.modulus);
        assert_eq!(prod, fz);
    }
}
