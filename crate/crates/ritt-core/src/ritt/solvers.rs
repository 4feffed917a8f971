//! Exact conjugator solving: given two functions known to differ by
//! degree-one maps on both sides, find all (lambda, rho) with
//! f = lambda o g o rho. Shapes are matched first (polynomial against
//! polynomial, two-pole against two-pole), and scalings come from
//! coefficient ratios with exact root extraction.

use crate::num::Cyclo;
use crate::poly::{post_mobius, pre_mobius, Laurent, Mobius, Poly, RatFunc};

/// f = lambda o g o rho for polynomials; lambda, rho affine.
pub fn sandwich_poly(f: &Poly, g: &Poly) -> Vec<(Mobius, Mobius)> {
    let (Some(n), Some(ng)) = (f.deg(), g.deg()) else {
        return vec![];
    };
    if n != ng || n == 0 {
        return vec![];
    }
    let depress = |p: &Poly| -> (Poly, Cyclo) {
        let shift = -&(&p.coeff(n - 1) * &(&Cyclo::from_int(n as i64) * &p.lc()).inv().unwrap());
        (p.compose_affine(&Cyclo::one(), &shift), shift)
    };
    let (fh, rf) = depress(f);
    let (gh, sg) = depress(g);
    let support_f: Vec<usize> = (1..=n).filter(|&i| !fh.coeff(i).is_zero()).collect();
    let support_g: Vec<usize> = (1..=n).filter(|&i| !gh.coeff(i).is_zero()).collect();
    if support_f != support_g {
        return vec![];
    }
    let mut w_candidates = Vec::new();
    if support_f.len() == 1 {
        w_candidates.push(Cyclo::one());
    } else {
        let i1 = n;
        let i2 = support_f[support_f.len() - 2];
        let e = (i1 - i2) as u32;
        let ratio =
            &(&fh.coeff(i1) * &gh.coeff(i2)) * &(&fh.coeff(i2) * &gh.coeff(i1)).inv().unwrap();
        w_candidates = ratio.nth_roots_extended(e);
    }
    let mut out = Vec::new();
    for w in w_candidates {
        if w.is_zero() {
            continue;
        }
        let u = &fh.lc() * &(&gh.lc() * &w.pow(n as i64).unwrap()).inv().unwrap();
        let v = &fh.coeff(0) - &(&u * &gh.coeff(0));
        let cand = &gh.compose_affine(&w, &Cyclo::zero()).scale(&u) + &Poly::constant(v.clone());
        if cand == fh {
            // f(z) = u g(w(z - rf) + sg) + v
            let t = &sg - &(&w * &rf);
            out.push((Mobius::affine(u, v), Mobius::affine(w, t)));
        }
    }
    out
}

/// f = lambda o g o rho for genuinely two-pole Laurent polynomials;
/// lambda affine and rho in {w z, w / z}.
pub fn sandwich_laurent(f: &Laurent, g: &Laurent) -> Vec<(Mobius, Mobius)> {
    let mut out = Vec::new();
    for reflected in [false, true] {
        let gg = if reflected {
            g.twist_inv(&Cyclo::one())
        } else {
            g.clone()
        };
        let sf: Vec<i64> = f.support().into_iter().filter(|&e| e != 0).collect();
        let sg: Vec<i64> = gg.support().into_iter().filter(|&e| e != 0).collect();
        if sf != sg || sf.is_empty() {
            continue;
        }
        let e1 = *sf.last().unwrap();
        let e2 = sf[0];
        let mut w_candidates = Vec::new();
        if e1 == e2 {
            w_candidates.push(Cyclo::one());
        } else {
            let ratio =
                &(&f.coeff(e1) * &gg.coeff(e2)) * &(&f.coeff(e2) * &gg.coeff(e1)).inv().unwrap();
            w_candidates = ratio.nth_roots_extended((e1 - e2) as u32);
        }
        for w in w_candidates {
            if w.is_zero() {
                continue;
            }
            let u = &f.coeff(e1) * &(&gg.coeff(e1) * &w.pow(e1).unwrap()).inv().unwrap();
            let v = &f.coeff(0) - &(&u * &gg.coeff(0));
            let cand = &gg.twist(&w).scale(&u) + &Laurent::constant(v.clone());
            if cand == *f {
                let rho = if reflected {
                    // f = u g(1/(w z)) + v, so rho = (1/w) / z
                    Mobius::inversion(w.inv().unwrap())
                } else {
                    Mobius::affine(w, Cyclo::zero())
                };
                out.push((Mobius::affine(u, v), rho));
            }
        }
    }
    out
}

/// All (lambda, rho) with `f` (a Laurent polynomial) equal to
/// lambda o normal o rho, where `normal` is an arbitrary rational function:
/// the normal composite is itself brought to Laurent form first, and the
/// normalizers are folded into the answer.
pub fn sandwich_vs_normal(f: &Laurent, normal: &RatFunc) -> Vec<(Mobius, Mobius)> {
    let Ok(nf) = super::r2::r2_normalize(normal) else {
        return vec![];
    };
    let mut out = Vec::new();
    // polynomial route
    if let (Some(fp), Some(gp)) = (f.as_poly(), nf.laurent.as_poly()) {
        for (l, r) in sandwich_poly(&fp, &gp) {
            out.push((l.compose(&nf.mu1), nf.mu2.compose(&r)));
        }
    }
    for (l, r) in sandwich_laurent(f, &nf.laurent) {
        let pair = (l.compose(&nf.mu1), nf.mu2.compose(&r));
        if !out.iter().any(|p| *p == pair) {
            out.push(pair);
        }
    }
    // exact verification of every candidate
    let frat = RatFunc::from_laurent(f);
    out.retain(|(l, r)| post_mobius(l, &pre_mobius(normal, r)) == frat);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{chebyshev, laurent_d};

    #[test]
    fn poly_sandwich_roundtrip() {
        // f = 3 T_4(2z - 1) + 5
        let f = &chebyshev(4)
            .compose_affine(&Cyclo::from_int(2), &Cyclo::from_int(-1))
            .scale(&Cyclo::from_int(3))
            + &Poly::constant(Cyclo::from_int(5));
        let sols = sandwich_poly(&f, &chebyshev(4));
        assert!(!sols.is_empty());
        for (l, r) in sols {
            let built = post_mobius(&l, &pre_mobius(&RatFunc::from_poly(chebyshev(4)), &r));
            assert_eq!(built, RatFunc::from_poly(f.clone()));
        }
    }

    #[test]
    fn laurent_sandwich_with_reflection() {
        // f = D_3(2/z) scaled
        let g = laurent_d(3);
        let f = g.twist_inv(&Cyclo::from_int(2)).scale(&Cyclo::from_int(7));
        let sols = sandwich_laurent(&f, &g);
        assert!(!sols.is_empty());
        for (l, r) in sols {
            let built = post_mobius(&l, &pre_mobius(&RatFunc::from_laurent(&g), &r));
            assert_eq!(built, RatFunc::from_laurent(&f));
        }
    }
}
