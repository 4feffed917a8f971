use crate::num::Cyclo;
use crate::poly::{chebyshev, Laurent, Mobius, Poly};

/// Conjugators mu, nu with mu o P o nu equal to the named normal form.
#[derive(Clone, Debug)]
pub struct Recognition {
    pub outer: Mobius,
    pub inner: Mobius,
    pub n: u32,
}

/// mu o P o nu = z^n: P must be alpha (z - z0)^n + beta.
pub fn recognize_power(p: &Poly) -> Option<Recognition> {
    let n = p.deg()?;
    if n == 0 {
        return None;
    }
    if n == 1 {
        // mu = P^{-1}
        let a = p.coeff(1);
        let b = p.coeff(0);
        let outer = Mobius::affine(a.inv().unwrap(), -&(&b * &a.inv().unwrap()));
        return Some(Recognition {
            outer,
            inner: Mobius::identity(),
            n: 1,
        });
    }
    let lc = p.lc();
    let z0 = -&(&p.coeff(n - 1) * &(&Cyclo::from_int(n as i64) * &lc).inv().unwrap());
    let shifted = p.compose_affine(&Cyclo::one(), &z0);
    for i in 1..n {
        if !shifted.coeff(i).is_zero() {
            return None;
        }
    }
    let beta = shifted.coeff(0);
    let ai = lc.inv().unwrap();
    let outer = Mobius::affine(ai.clone(), -&(&beta * &ai));
    let inner = Mobius::affine(Cyclo::one(), z0);
    Some(Recognition {
        outer,
        inner,
        n: n as u32,
    })
}

/// mu o P o nu = T_n, verified through the Chebyshev differential equation
/// n^2 (y^2 - 1) = (y')^2 (z^2 - 1) after conjugator normalization. The
/// scaling conjugator involves a square root; `extend` allows it to live in
/// a larger cyclotomic field.
pub fn recognize_chebyshev(p: &Poly, extend: bool) -> Option<Recognition> {
    let n = p.deg()?;
    if n == 0 {
        return None;
    }
    if n == 1 {
        return recognize_power(p).map(|r| Recognition { n: 1, ..r });
    }
    let lc = p.lc();
    let t = -&(&p.coeff(n - 1) * &(&Cyclo::from_int(n as i64) * &lc).inv().unwrap());
    let shifted = p.compose_affine(&Cyclo::one(), &t);
    let target = chebyshev(n as u32);
    let candidates: Vec<Cyclo> = if n == 2 {
        vec![Cyclo::one()]
    } else {
        let c_n2 = shifted.coeff(n - 2);
        if c_n2.is_zero() {
            return None;
        }
        // w^2 = -4 c_{n-2} / (n c_n)
        let w2 =
            &(&c_n2 * &Cyclo::from_int(-4)) * &(&Cyclo::from_int(n as i64) * &lc).inv().unwrap();
        let w = w2.nth_root(2, true)?;
        if !extend
            && !crate::num::subfield_of(w.descend().conductor(), super::rightfactor::poly_field(p))
        {
            return None;
        }
        vec![w.clone(), -&w]
    };
    for w in candidates {
        if w.is_zero() {
            continue;
        }
        // u from the leading coefficient: u lc w^n = 2^(n-1)
        let u = &Cyclo::from_rat(crate::num::Rat::from_int(2).pow(n as i64 - 1).unwrap())
            * &(&lc * &w.pow(n as i64).unwrap()).inv().unwrap();
        let q = shifted.compose_affine(&w, &Cyclo::zero()).scale(&u);
        let v = &target.coeff(0) - &q.coeff(0);
        let cand = &q + &Poly::constant(v.clone());
        if chebyshev_ode_holds(&cand, n as u32) {
            return Some(Recognition {
                outer: Mobius::affine(u, v),
                inner: Mobius::affine(w, t.clone()),
                n: n as u32,
            });
        }
    }
    None
}

/// n^2 (y^2 - 1) - (y')^2 (z^2 - 1) = 0 with leading coefficient 2^(n-1).
fn chebyshev_ode_holds(y: &Poly, n: u32) -> bool {
    let two_pow = Cyclo::from_rat(crate::num::Rat::from_int(2).pow(n as i64 - 1).unwrap());
    if y.lc() != two_pow {
        return false;
    }
    let n2 = Cyclo::from_int((n as i64) * (n as i64));
    let lhs = (&(y * y) - &Poly::one()).scale(&n2);
    let d = y.derivative();
    let rhs = &(&d * &d) * &Poly::from_int_coeffs(&[-1, 0, 1]);
    &lhs - &rhs == Poly::zero()
}

/// mu o L o nu = D_n with nu a pole-preserving scaling z -> a z: the support
/// must be {-n, 0, n} and a^(2n) = c_{-n}/c_n must have a root in the field
/// (or an extension when `extend` is set).
pub fn recognize_laurent_d(l: &Laurent, extend: bool) -> Option<Recognition> {
    let a = l.pole_inf();
    let b = l.pole_zero();
    if a == 0 || a != b {
        return None;
    }
    let n = a;
    for (&e, _) in l.terms() {
        if e != n && e != -n && e != 0 {
            return None;
        }
    }
    let cn = l.coeff(n);
    let cm = l.coeff(-n);
    if cn.is_zero() || cm.is_zero() {
        return None;
    }
    let ratio = &cm * &cn.inv().unwrap();
    let scale = ratio.nth_root(2 * n as u32, true)?;
    if !extend {
        let mut field = 1;
        for (_, c) in l.terms() {
            field = crate::num::lcm_u32(field, c.descend().conductor());
        }
        if !crate::num::subfield_of(scale.descend().conductor(), field) {
            return None;
        }
    }
    // L(scale * z) = u z^n + u z^-n + c0 with u = c_n scale^n
    let u = &cn * &scale.pow(n).unwrap();
    debug_assert_eq!(u, &cm * &scale.pow(-n).unwrap());
    let half_u_inv = (&Cyclo::from_int(2) * &u).inv().unwrap();
    let c0 = l.coeff(0);
    let outer = Mobius::affine(half_u_inv.clone(), -&(&c0 * &half_u_inv));
    let inner = Mobius::affine(scale, Cyclo::zero());
    Some(Recognition {
        outer,
        inner,
        n: n as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{laurent_d, post_mobius, pre_mobius, RatFunc};

    fn check_cheb(p: &Poly, n: u32) {
        let r = recognize_chebyshev(p, false).unwrap();
        assert_eq!(r.n, n);
        let f = RatFunc::from_poly(p.clone());
        let normalized = post_mobius(&r.outer, &pre_mobius(&f, &r.inner));
        assert_eq!(normalized, RatFunc::from_poly(chebyshev(n)));
    }

    #[test]
    fn chebyshev_direct_and_scaled() {
        check_cheb(&chebyshev(2), 2);
        check_cheb(&chebyshev(5), 5);
        // z^3 - 3z = 2 T_3(z/2)
        check_cheb(&Poly::from_int_coeffs(&[0, -3, 0, 1]), 3);
    }

    #[test]
    fn non_chebyshev_rejected() {
        // a pure power has one finite critical value, never Chebyshev shape
        assert!(recognize_chebyshev(&Poly::from_int_coeffs(&[0, 0, 0, 1]), true).is_none());
        // three distinct critical values: not Chebyshev for degree 4
        assert!(recognize_chebyshev(&Poly::from_int_coeffs(&[0, 1, 1, 0, 1]), true).is_none());
        // z^3 + z is Chebyshev only over an extension (w^2 = -4/3)
        assert!(recognize_chebyshev(&Poly::from_int_coeffs(&[0, 1, 0, 1]), false).is_none());
        assert!(recognize_chebyshev(&Poly::from_int_coeffs(&[0, 1, 0, 1]), true).is_some());
        assert!(recognize_power(&Poly::from_int_coeffs(&[0, 0, 1, 1])).is_none());
    }

    #[test]
    fn cubic_with_two_critical_values_is_chebyshev() {
        // 27/2 (z^3 + z^2) o ((2z-1)/3) - 1 = T_3, exactly
        check_cheb(&Poly::from_int_coeffs(&[0, 0, 1, 1]), 3);
    }

    #[test]
    fn power_recognition() {
        // 3(z-1)^4 + 5
        let p = &Poly::from_int_coeffs(&[-1, 1])
            .pow(4)
            .scale(&Cyclo::from_int(3))
            + &Poly::constant(Cyclo::from_int(5));
        let r = recognize_power(&p).unwrap();
        assert_eq!(r.n, 4);
        let f = RatFunc::from_poly(p);
        let normalized = post_mobius(&r.outer, &pre_mobius(&f, &r.inner));
        assert_eq!(
            normalized,
            RatFunc::from_poly(Poly::monomial(Cyclo::one(), 4))
        );
    }

    #[test]
    fn laurent_d_recognition() {
        // 3 D_2(2z) + 1
        let twisted = laurent_d(2).twist(&Cyclo::from_int(2));
        let l = &twisted.scale(&Cyclo::from_int(3)) + &Laurent::constant(Cyclo::one());
        let r = recognize_laurent_d(&l, false).unwrap();
        assert_eq!(r.n, 2);
        let f = RatFunc::from_laurent(&l);
        let normalized = post_mobius(&r.outer, &pre_mobius(&f, &r.inner));
        assert_eq!(normalized, RatFunc::from_laurent(&laurent_d(2)));
    }

    #[test]
    fn d_with_root_of_unity_twist() {
        // D_3(zeta_6 z) needs an extension scaling; in-field recognition
        // over the same conductor succeeds
        let l = laurent_d(3).twist(&Cyclo::root_of_unity(6, 1));
        assert!(recognize_laurent_d(&l, true).is_some());
    }
}
