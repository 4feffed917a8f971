use crate::error::{Error, Result};
use crate::num::Cyclo;
use crate::poly::{
    lagrange_interpolate, post_mobius, pre_mobius, Laurent, Mobius, Poly, ProjValue, RatFunc,
};

/// A certified normalization mu1 o F o mu2 = L with L a Laurent polynomial,
/// together with the small-fiber value that witnesses membership in the
/// two-pole class.
#[derive(Clone, Debug)]
pub struct R2Form {
    pub mu1: Mobius,
    pub mu2: Mobius,
    pub laurent: Laurent,
    pub witness_value: ProjValue,
}

impl R2Form {
    pub fn identity_on(l: Laurent) -> Self {
        R2Form {
            mu1: Mobius::identity(),
            mu2: Mobius::identity(),
            laurent: l,
            witness_value: ProjValue::Inf,
        }
    }
}

/// Finite critical values of F as a polynomial in t:
/// Res_z(num - t den, num' den - num den'), by evaluation and interpolation.
fn critical_value_poly(f: &RatFunc) -> Result<Poly> {
    let wr = &(&f.num().derivative() * f.den()) - &(f.num() * &f.den().derivative());
    if wr.is_zero() {
        return Err(Error::domain("constant function has no critical values"));
    }
    let dt = wr.degree();
    let nodes: Vec<Cyclo> = (0..=dt as i64).map(Cyclo::from_int).collect();
    let mut vals = Vec::new();
    for t in &nodes {
        let shifted = f.num() - &f.den().scale(t);
        vals.push(shifted.resultant(&wr)?);
    }
    Ok(lagrange_interpolate(&nodes, &vals))
}

/// Roots, inside cyclotomic extensions, of a polynomial of degree <= 2.
fn small_roots(p: &Poly) -> Option<Vec<Cyclo>> {
    match p.deg()? {
        0 => Some(vec![]),
        1 => Some(vec![-&(&p.coeff(0) * &p.coeff(1).inv().ok()?)]),
        2 => {
            let a = p.coeff(2);
            let b = p.coeff(1);
            let c = p.coeff(0);
            let disc = &(&b * &b) - &(&(&a * &c) * &Cyclo::from_int(4));
            let sq = disc.nth_root(2, true)?;
            let two_a_inv = (&a * &Cyclo::from_int(2)).inv().ok()?;
            Some(vec![
                &(&(-&b) + &sq) * &two_a_inv,
                &(&(-&b) - &sq) * &two_a_inv,
            ])
        }
        _ => None,
    }
}

/// Cheap candidate small-fiber values, all exactly representable.
fn cheap_candidates(f: &RatFunc) -> Vec<ProjValue> {
    let out = vec![
        ProjValue::Inf,
        f.eval_proj(&ProjValue::Inf),
        f.eval_proj(&ProjValue::Finite(Cyclo::zero())),
        f.eval_proj(&ProjValue::Finite(Cyclo::one())),
    ];
    let mut dedup: Vec<ProjValue> = Vec::new();
    for v in out {
        if !dedup.contains(&v) {
            dedup.push(v);
        }
    }
    dedup
}

/// Rational critical values, used only when the cheap candidates fail: the
/// resultant computation is the expensive path.
fn critical_candidates(f: &RatFunc) -> Vec<ProjValue> {
    let mut out = Vec::new();
    if let Ok(crit) = critical_value_poly(f) {
        let sf = crit.squarefree_part();
        if let Some(coeffs) = sf.rational_coeffs() {
            let (roots, _) = crate::genus::rational_roots_public(&coeffs);
            for r in roots {
                out.push(ProjValue::Finite(Cyclo::from_rat(r)));
            }
        }
    }
    out
}

/// Certify membership in the two-pole class and produce the normalization:
/// a value w with fiber of cardinality <= 2 is located among exactly
/// representable candidates, w is sent to infinity, and the fiber points to
/// {0, infinity}. Fiber points may require a cyclotomic extension; failing
/// that, an explicit field-obstruction error is returned, distinct from
/// "not in the class".
pub fn r2_normalize(f: &RatFunc) -> Result<R2Form> {
    if f.is_constant() {
        return Err(Error::domain("constant functions are not normalized"));
    }
    if let Some(l) = f.as_laurent() {
        return Ok(R2Form::identity_on(l));
    }
    let mut candidates = cheap_candidates(f);
    let mut tried_critical = false;
    let mut i = 0;
    while i < candidates.len() {
        let w = candidates[i].clone();
        i += 1;
        if i == candidates.len() && !tried_critical {
            tried_critical = true;
            for extra in critical_candidates(f) {
                if !candidates.contains(&extra) {
                    candidates.push(extra);
                }
            }
        }
        let (fiber, inf_in) = f.fiber_poly(&w);
        let distinct = fiber.squarefree_part();
        let finite_count = distinct.deg().unwrap_or(0);
        let count = finite_count + usize::from(inf_in);
        if count == 0 || count > 2 {
            continue;
        }
        let Some(mut pts): Option<Vec<ProjValue>> =
            small_roots(&distinct).map(|roots| roots.into_iter().map(ProjValue::Finite).collect())
        else {
            continue;
        };
        if inf_in {
            pts.push(ProjValue::Inf);
        }
        // mu2 sends {0, inf} onto the fiber
        let mu2 = match pts.as_slice() {
            [ProjValue::Finite(p)] => {
                Mobius::new(p.clone(), Cyclo::one(), Cyclo::one(), Cyclo::zero()).unwrap()
            } // (p z + 1)/z: infinity -> p, 0 -> infinity
            [ProjValue::Inf] => Mobius::identity(),
            [ProjValue::Finite(p), ProjValue::Finite(q)] => {
                Mobius::new(q.clone(), p.clone(), Cyclo::one(), Cyclo::one()).unwrap()
            } // (q z + p)/(z + 1): 0 -> p, infinity -> q
            [ProjValue::Finite(p), ProjValue::Inf] | [ProjValue::Inf, ProjValue::Finite(p)] => {
                Mobius::affine(Cyclo::one(), p.clone())
            }
            _ => continue,
        };
        let mu1 = match &w {
            ProjValue::Inf => Mobius::identity(),
            ProjValue::Finite(v) => {
                // 1/(z - v)
                Mobius::new(Cyclo::zero(), Cyclo::one(), Cyclo::one(), -v).unwrap()
            }
        };
        let normalized = post_mobius(&mu1, &pre_mobius(f, &mu2));
        if let Some(l) = normalized.as_laurent() {
            return Ok(R2Form {
                mu1,
                mu2,
                laurent: l,
                witness_value: w,
            });
        }
    }
    Err(Error::field(
        "cannot certify membership in the two-pole class over this field: \
         no exactly-representable value with fiber of cardinality <= 2 was found",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::laurent_d;

    #[test]
    fn laurent_is_fixed() {
        let f = RatFunc::from_laurent(&laurent_d(3));
        let r = r2_normalize(&f).unwrap();
        assert!(r.mu1.is_identity() && r.mu2.is_identity());
        assert_eq!(r.laurent, laurent_d(3));
    }

    #[test]
    fn inverse_square() {
        // 1/z^2: swap 0 and infinity
        let f = RatFunc::new(Poly::one(), Poly::monomial(Cyclo::one(), 2)).unwrap();
        let r = r2_normalize(&f).unwrap();
        assert_eq!(r.laurent.degree(), 2);
    }

    #[test]
    fn squared_quotient() {
        // F = ((z^2-1)/(z^2+1))^2: value 1 has fiber {0, inf}
        let base = RatFunc::new(
            Poly::from_int_coeffs(&[-1, 0, 1]),
            Poly::from_int_coeffs(&[1, 0, 1]),
        )
        .unwrap();
        let f = base.mul(&base);
        let r = r2_normalize(&f).unwrap();
        // the normalized function is a genuine Laurent polynomial of the
        // same mapping degree
        assert_eq!(r.laurent.degree() as usize, f.degree());
        // re-verify: mu1 o F o mu2 = L
        let again = post_mobius(&r.mu1, &pre_mobius(&f, &r.mu2));
        assert_eq!(again, RatFunc::from_laurent(&r.laurent));
    }

    #[test]
    fn case2_composite_normalizes() {
        // (z^2-1)^2/(z^2+1)^2 has poles only at +/- i; fiber points need
        // a cyclotomic extension and are found
        let f = RatFunc::new(
            Poly::from_int_coeffs(&[-1, 0, 1]).pow(2),
            Poly::from_int_coeffs(&[1, 0, 1]).pow(2),
        )
        .unwrap();
        let r = r2_normalize(&f).unwrap();
        assert_eq!(r.laurent.degree(), 4);
    }
}
