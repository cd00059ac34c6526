//! Factorisation over Q and Q(zeta_q): squarefree decomposition, then
//! Zassenhaus with an inert prime (Hensel lifting in the Galois ring and
//! subset recombination with trial division).

use super::coeff::{Coeff, Field};
use super::cyclo::CycNum;
use super::galois::{symmetric, FPoly, GPoly, GaloisRing, ResidueField};
use super::laurent::LaurentPoly;
use crate::error::AlgebraError;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub type CPoly = LaurentPoly<CycNum>;

/// `p = unit * t^shift * prod f_i^e_i` with monic `f_i` having nonzero
/// constant term, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Factorization {
    pub unit: CycNum,
    pub shift: i64,
    pub factors: Vec<(CPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> CPoly {
        let mut acc = LaurentPoly::monomial(self.unit.clone(), self.shift);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = &acc * f;
            }
        }
        acc
    }
}

/// Sort key making factor order deterministic.
pub fn poly_key(p: &CPoly) -> (i64, Vec<Vec<BigRational>>) {
    (
        p.high(),
        p.coeffs().iter().map(|c| c.coords().to_vec()).collect(),
    )
}

pub fn factor(p: &CPoly) -> Result<Factorization, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::Domain(
            "cannot factor the zero polynomial".into(),
        ));
    }
    let (f, unit, shift) = p.monic_normalized();
    let mut factors = Vec::new();
    for (g, e) in squarefree_decomposition(&f) {
        for h in factor_squarefree(&g)? {
            factors.push((h, e));
        }
    }
    factors.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)).then(a.1.cmp(&b.1)));
    Ok(Factorization {
        unit,
        shift,
        factors,
    })
}

/// Rational-coefficient convenience wrapper.
pub fn factor_rational(p: &LaurentPoly<BigRational>) -> Result<Factorization, AlgebraError> {
    factor(&p.map(|c| CycNum::from_rational(1, c.clone())))
}

/// Yun's algorithm over the field; input monic with nonzero constant term.
pub fn squarefree_decomposition(f: &CPoly) -> Vec<(CPoly, u32)> {
    if f.high() <= 0 {
        return Vec::new();
    }
    if squarefree_mod_some_prime(f) {
        return vec![(f.clone(), 1)];
    }
    let d = f.derivative();
    let g = f.gcd(&d);
    if g.high() == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut b = f.exact_div(&g).expect("gcd divides");
    let c = d.exact_div(&g).expect("gcd divides derivative");
    let mut dd = &c - &b.derivative();
    let mut i = 1;
    while b.high() > 0 {
        let a = b.gcd(&dd);
        if a.high() > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        let c = dd.exact_div(&a).expect("gcd divides");
        dd = &c - &b.derivative();
        i += 1;
    }
    out
}

fn to_field_poly(fld: &ResidueField, f: &CPoly) -> Option<FPoly> {
    let v: Option<FPoly> = (0..=f.high())
        .map(|e| fld.from_cyc(f.coeff(e).unwrap_or(&f.lead().unwrap().zero_like())))
        .collect();
    v.map(|p| fld.p_trim(p))
}

fn squarefree_mod_some_prime(f: &CPoly) -> bool {
    let q = f.lead().unwrap().q();
    ResidueField::inert_primes(q).take(8).any(|l| {
        let fld = ResidueField::new(l, q).unwrap();
        match to_field_poly(&fld, f) {
            Some(fp) => fp.len() == f.coeffs().len() && fld.is_squarefree(&fp),
            None => false,
        }
    })
}

/// Irreducible monic factors of a monic squarefree polynomial with nonzero
/// constant term.
pub fn factor_squarefree(f: &CPoly) -> Result<Vec<CPoly>, AlgebraError> {
    let n = f.high();
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let q = f.lead().unwrap().q();
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator()));
    let dd = BigRational::from_integer(den.clone());
    let fint: Vec<Vec<BigInt>> = f
        .coeffs()
        .iter()
        .map(|c| c.coords().iter().map(|x| (x * &dd).to_integer()).collect())
        .collect();

    // choose an inert prime with few modular factors
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(ResidueField, Vec<FPoly>)> = None;
    let mut tried = 0;
    for l in ResidueField::inert_primes(q).take(40) {
        if Zero::is_zero(&(&den % l)) {
            continue;
        }
        let fld = ResidueField::new(l, q).unwrap();
        let Some(fp) = to_field_poly(&fld, f) else {
            continue;
        };
        if fp.len() != f.coeffs().len() || !fld.is_squarefree(&fp) {
            continue;
        }
        let count: usize = fld.ddf(&fp).iter().map(|(g, d)| (g.len() - 1) / d).sum();
        if count == 1 {
            return Ok(vec![f.clone()]);
        }
        if best.as_ref().is_none_or(|(_, fs)| count < fs.len()) {
            let fs = fld.factor_squarefree(&fp, &mut rng);
            best = Some((fld, fs));
        }
        tried += 1;
        if tried >= 4 {
            break;
        }
    }
    let Some((fld, modular)) = best else {
        return Err(AlgebraError::Internal(
            "no suitable inert prime found".into(),
        ));
    };

    // coordinate bound for den * (monic factor): 2 * 2^n * ||f_int||_2 (embedding-wise)
    let l1sq = fint.iter().fold(BigInt::zero(), |acc, c| {
        let s: BigInt = c.iter().map(|x| x.abs()).sum();
        acc + &s * &s
    });
    let bound = (l1sq.sqrt() + 1u32) * (BigInt::one() << (n as usize + 1));
    let lb = BigInt::from(fld.l);
    let mut k = 1u32;
    let mut pk = lb.clone();
    while pk <= &bound * 2u32 {
        pk *= &lb;
        k += 1;
    }
    let gr = GaloisRing::new(fld.clone(), k);
    // monic lift target: f itself has coordinates den^{-1} * fint; reduce mod l^k
    let den_inv = den
        .modinv(&gr.modulus)
        .expect("denominator invertible mod l^k");
    let fmon: GPoly = fint
        .iter()
        .map(|c| {
            c.iter()
                .map(|x| (x * &den_inv).mod_floor(&gr.modulus))
                .collect()
        })
        .collect();
    let lifted = gr.multi_lift(&fmon, &modular);

    recombine(f, &lifted, &gr, &den)
}

fn recombine(
    f: &CPoly,
    lifted: &[GPoly],
    gr: &GaloisRing,
    den: &BigInt,
) -> Result<Vec<CPoly>, AlgebraError> {
    let q = f.lead().unwrap().q();
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut cur = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    let m = &gr.modulus;
    let den_g: Vec<BigInt> = {
        let mut v = vec![BigInt::zero(); gr.field.deg];
        v[0] = den.mod_floor(m);
        v
    };
    while 2 * size <= remaining.len() {
        let mut found = None;
        for subset in remaining.iter().copied().combinations(size) {
            let mut prod: GPoly = vec![den_g.clone()];
            for &i in &subset {
                prod = gr.poly_mul(&prod, &lifted[i], m);
            }
            let cand: Vec<CycNum> = prod
                .iter()
                .map(|c| {
                    CycNum::from_coeffs(
                        q,
                        c.iter()
                            .map(|x| BigRational::from_integer(symmetric(x, m)))
                            .collect(),
                    )
                })
                .collect();
            let cand = LaurentPoly::from_coeffs(0, cand);
            if cand.is_zero() || cand.trailing().is_none_or(|c| c.is_zero()) {
                continue;
            }
            let (monic, _, _) = cand.monic_normalized();
            if let Some(quot) = cur.exact_div(&monic) {
                found = Some((subset, monic, quot));
                break;
            }
        }
        match found {
            Some((subset, monic, quot)) => {
                out.push(monic);
                cur = quot;
                remaining.retain(|i| !subset.contains(i));
            }
            None => size += 1,
        }
    }
    if cur.high() > 0 {
        out.push(cur.monic_normalized().0);
    }
    Ok(out)
}

/// Value of the field norm of `p(t0)`, i.e. the norm polynomial at `t0`.
pub fn norm_at(p: &CPoly, t0: &BigRational) -> BigRational {
    let q = p.lead().map_or(1, |c| c.q());
    let x = CycNum::from_rational(q, t0.clone());
    let mut acc = CycNum::zero(q);
    let mut pw = x.one_like();
    if p.low() < 0 {
        let xi = x.inv();
        for _ in 0..(-p.low()) {
            pw = pw.mul_ref(&xi);
        }
    } else {
        for _ in 0..p.low() {
            pw = pw.mul_ref(&x);
        }
    }
    for c in p.coeffs() {
        acc = acc.add_ref(&c.mul_ref(&pw));
        pw = pw.mul_ref(&x);
    }
    acc.norm()
}
