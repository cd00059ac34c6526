//! Norm test: is `p` equal, up to a unit `c t^k`, to `f * f̄` for some `f`
//! over Q(zeta_q)? Here `f̄` conjugates coefficients and sends `t` to `t^-1`.

use super::coeff::Coeff;
use super::factor::{factor, CPoly, Factorization};
use super::laurent::LaurentPoly;
use crate::error::AlgebraError;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum NormVerdict {
    /// `p ≐ f f̄` with the given `f`.
    Norm { witness: CPoly },
    /// The factor has no matching conjugate partner, or is self-conjugate
    /// with odd multiplicity.
    NotNorm {
        offending: CPoly,
        multiplicity: u32,
        self_conjugate: bool,
    },
}

impl NormVerdict {
    pub fn is_norm(&self) -> bool {
        matches!(self, NormVerdict::Norm { .. })
    }
}

/// Monic, low-zero representative of `f̄`.
pub fn bar_normalized(f: &CPoly) -> CPoly {
    f.bar().monic_normalized().0
}

pub fn is_norm(p: &CPoly) -> Result<NormVerdict, AlgebraError> {
    let fac = factor(p)?;
    Ok(norm_from_factorization(&fac))
}

pub fn norm_from_factorization(fac: &Factorization) -> NormVerdict {
    let mult = |g: &CPoly| {
        fac.factors
            .iter()
            .find(|(h, _)| h == g)
            .map_or(0, |(_, e)| *e)
    };
    let mut witness: Option<CPoly> = None;
    let mut used: Vec<CPoly> = Vec::new();
    for (g, e) in &fac.factors {
        if used.contains(g) {
            continue;
        }
        let gb = bar_normalized(g);
        let half = if &gb == g {
            if e % 2 == 1 {
                return NormVerdict::NotNorm {
                    offending: g.clone(),
                    multiplicity: *e,
                    self_conjugate: true,
                };
            }
            e / 2
        } else {
            if mult(&gb) != *e {
                return NormVerdict::NotNorm {
                    offending: g.clone(),
                    multiplicity: *e,
                    self_conjugate: false,
                };
            }
            used.push(gb);
            *e
        };
        let pw = g.pow(half);
        witness = Some(match witness {
            None => pw,
            Some(w) => &w * &pw,
        });
    }
    let witness = witness.unwrap_or_else(|| LaurentPoly::constant(fac.unit.one_like()));
    NormVerdict::Norm { witness }
}

/// `a ≐ b`: equal up to a nonzero scalar and a power of `t`.
pub fn associated(a: &CPoly, b: &CPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.monic_normalized().0 == b.monic_normalized().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::cyclo::CycNum;

    fn cp(q: u32, v: &[&[i64]]) -> CPoly {
        LaurentPoly::from_coeffs(0, v.iter().map(|c| CycNum::from_int_coeffs(q, c)).collect())
    }

    #[test]
    fn product_with_conjugate_is_norm() {
        let f = cp(7, &[&[1, 2], &[0, 0, 1], &[3]]);
        let p = &f * &f.bar();
        match is_norm(&p).unwrap() {
            NormVerdict::Norm { witness } => assert!(associated(&(&witness * &witness.bar()), &p)),
            v => panic!("expected norm, got {v:?}"),
        }
    }

    #[test]
    fn odd_self_conjugate_is_not_norm() {
        // 1 - t + t^2 is self-conjugate over Q(zeta_7)
        let p = cp(7, &[&[1], &[-1], &[1]]);
        let v = is_norm(&p).unwrap();
        assert!(!v.is_norm());
        let sq = &p * &p;
        assert!(is_norm(&sq).unwrap().is_norm());
    }

    #[test]
    fn units_are_norms() {
        let p = LaurentPoly::monomial(CycNum::from_int(7, 5), 3);
        assert!(is_norm(&p).unwrap().is_norm());
    }
}
