use crate::decomp::{recognize_chebyshev, recognize_power};
use crate::error::Result;
use crate::mono::{fiber_product, MonodromyTuple};
use crate::poly::{Mobius, Poly};

/// Verdict on the irreducibility of A(x) - B(y) = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrredVerdict {
    Irreducible {
        reason: String,
    },
    Reducible {
        o: Option<usize>,
        reason: String,
    },
    /// The implemented criteria do not decide this pair; never a guess.
    Unknown,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Is mu(z) = p z with p = 1 or p = -1 (up to projective scaling)?
fn mobius_sign(mu: &Mobius) -> Option<i64> {
    if !mu.c.is_zero() || !mu.b.is_zero() {
        return None;
    }
    let r = &mu.a * &mu.d.inv().ok()?;
    if r.is_one() {
        Some(1)
    } else if r == crate::num::Cyclo::from_int(-1) {
        Some(-1)
    } else {
        None
    }
}

/// Irreducibility of A(x) - B(y): coprime degrees decide immediately;
/// supplied monodromy tuples decide exactly through the fiber product;
/// Chebyshev-family pairs T_N(x) -/+ T_M(y) follow the dichotomy in the
/// gcd of the degrees; power families x^N = p y^M + q are decided by the
/// shape of the right side. Anything else is reported unknown.
pub fn irreducibility(
    a: &Poly,
    b: &Poly,
    tuples: Option<(&MonodromyTuple, &MonodromyTuple)>,
) -> Result<IrredVerdict> {
    let (Some(n), Some(m)) = (a.deg(), b.deg()) else {
        return Ok(IrredVerdict::Unknown);
    };
    if n == 0 || m == 0 {
        return Ok(IrredVerdict::Unknown);
    }
    if gcd(n, m) == 1 {
        return Ok(IrredVerdict::Irreducible {
            reason: "coprime degrees".into(),
        });
    }
    if let Some((tf, tg)) = tuples {
        let o = fiber_product(tf, tg)?.count();
        return Ok(if o == 1 {
            IrredVerdict::Irreducible {
                reason: "fiber product has one orbit".into(),
            }
        } else {
            IrredVerdict::Reducible {
                o: Some(o),
                reason: "fiber product orbit count".into(),
            }
        });
    }
    // Chebyshev family: A = alpha o T_N o beta, B = alpha o (sign T_M) o beta'
    if let (Some(ra), Some(rb)) = (recognize_chebyshev(a, true), recognize_chebyshev(b, true)) {
        // lambda = mu_A o mu_B^{-1} relates the outer normalizations;
        // the family verdict applies when lambda = +/- z
        let lambda = ra.outer.compose(&rb.outer.inverse());
        if let Some(sign) = mobius_sign(&lambda) {
            let l = gcd(ra.n as usize, rb.n as usize);
            if sign == 1 {
                // T_N(x) - T_M(y): reducible iff gcd >= 2
                return Ok(if l >= 2 {
                    IrredVerdict::Reducible {
                        o: None,
                        reason: format!("Chebyshev pair with gcd {l}"),
                    }
                } else {
                    IrredVerdict::Irreducible {
                        reason: "coprime Chebyshev pair".into(),
                    }
                });
            }
            // T_N(x) + T_M(y): reducible iff l > 2
            return Ok(if l > 2 {
                IrredVerdict::Reducible {
                    o: None,
                    reason: format!("sign-twisted Chebyshev pair with l = {l} > 2"),
                }
            } else {
                IrredVerdict::Irreducible {
                    reason: format!("sign-twisted Chebyshev pair with l = {l} <= 2"),
                }
            });
        }
    }
    // power family: x^N = p y^M + q after normalizing A
    if let (Some(ra), Some(rb)) = (recognize_power(a), recognize_power(b)) {
        let lambda = ra.outer.compose(&rb.outer.inverse());
        if lambda.c.is_zero() {
            let q = &lambda.b * &lambda.d.inv().unwrap();
            if q.is_zero() {
                let l = gcd(ra.n as usize, rb.n as usize);
                return Ok(if l >= 2 {
                    IrredVerdict::Reducible {
                        o: Some(l),
                        reason: format!("x^N = p y^M splits into {l} components"),
                    }
                } else {
                    IrredVerdict::Irreducible {
                        reason: "coprime power pair".into(),
                    }
                });
            }
            // x^N = p y^M + q with q != 0: the right side is never a proper
            // power of a rational function, so the curve is irreducible
            return Ok(IrredVerdict::Irreducible {
                reason: "shifted power pair".into(),
            });
        }
    }
    Ok(IrredVerdict::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mono::{builtin_tuple, BuiltinKind};
    use crate::poly::chebyshev;

    #[test]
    fn coprime_shortcut() {
        let a = Poly::from_int_coeffs(&[1, 0, 0, 0, 1]); // deg 4
        let b = Poly::from_int_coeffs(&[0, 2, 0, 0, 0, 0, 0, 0, 0, 1]); // deg 9
        assert!(matches!(
            irreducibility(&a, &b, None).unwrap(),
            IrredVerdict::Irreducible { .. }
        ));
    }

    #[test]
    fn chebyshev_sum_dichotomy() {
        // T_4(x) + T_4(y) reducible (l = 4 > 2)
        let t4 = chebyshev(4);
        let neg_t4 = -&t4;
        assert!(matches!(
            irreducibility(&t4, &neg_t4, None).unwrap(),
            IrredVerdict::Reducible { .. }
        ));
        // T_2(x) + T_2(y) irreducible (l = 2)
        let t2 = chebyshev(2);
        let neg_t2 = -&t2;
        assert!(matches!(
            irreducibility(&t2, &neg_t2, None).unwrap(),
            IrredVerdict::Irreducible { .. }
        ));
    }

    #[test]
    fn tuple_route() {
        let f = builtin_tuple(&BuiltinKind::Chebyshev(4));
        let g = builtin_tuple(&BuiltinKind::ChebyshevNeg(4));
        let t4 = chebyshev(4);
        let v = irreducibility(&t4, &(-&t4), Some((&f, &g))).unwrap();
        assert!(matches!(v, IrredVerdict::Reducible { o: Some(o), .. } if o >= 2));
    }

    #[test]
    fn plain_chebyshev_difference() {
        // T_6(x) - T_2(y): gcd 2 -> reducible
        assert!(matches!(
            irreducibility(&chebyshev(6), &chebyshev(2), None).unwrap(),
            IrredVerdict::Reducible { .. }
        ));
    }
}
