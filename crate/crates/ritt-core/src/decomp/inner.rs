use crate::error::{Error, Result};
use crate::num::{lcm_u32, Cyclo};
use crate::poly::{laurent_d, linalg, pre_mobius, Laurent, Mobius, Poly, RatFunc};

/// If L1 o z^d1 = L2 o z^d2, the common source R with L1 = R o z^(D/d1),
/// L2 = R o z^(D/d2), D = lcm(d1, d2).
pub fn solve_zc(l1: &Laurent, d1: i64, l2: &Laurent, d2: i64) -> Option<Laurent> {
    assert!(d1 >= 1 && d2 >= 1);
    let f1 = l1.compose_power(d1);
    let f2 = l2.compose_power(d2);
    if f1 != f2 {
        return None;
    }
    let dd = d1 / gcd_i64(d1, d2) * d2;
    // equality forces the support of F into lcm multiples
    if f1.support().iter().any(|e| e % dd != 0) {
        return None;
    }
    let r = f1.decompress_power(dd);
    debug_assert_eq!(r.compose_power(dd / d1), *l1);
    debug_assert_eq!(r.compose_power(dd / d2), *l2);
    Some(r)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// If F(z) = F(1/z) = F(zeta_n z), produce R with F = R o D_n. The
/// invariance is checked exactly; R is found by a linear kernel computation
/// in the coefficients of its numerator and denominator.
pub fn symmetry_extract(f: &RatFunc, n: u32) -> Result<Option<RatFunc>> {
    if f.is_constant() {
        return Err(Error::domain(
            "symmetry_extract needs a nonconstant function",
        ));
    }
    let inv = Mobius::inversion(Cyclo::one());
    if pre_mobius(f, &inv) != *f {
        return Ok(None);
    }
    let zeta = Cyclo::root_of_unity(n, 1);
    let twist = Mobius::affine(zeta, Cyclo::zero());
    if pre_mobius(f, &twist) != *f {
        return Ok(None);
    }
    let dn = RatFunc::from_laurent(&laurent_d(n));
    let deg = f.degree();
    if deg % (2 * n as usize) != 0 {
        return Ok(None);
    }
    let e = deg / (2 * n as usize);
    // R = p/q, deg <= e, with p(Dn) f_den = q(Dn) f_num; homogenized in Dn
    let lift = |coeff_index: usize| -> Poly {
        // Dn_num^i * Dn_den^(e-i)
        let ni = dn.num().pow(coeff_index as u32);
        let di = dn.den().pow((e - coeff_index) as u32);
        &ni * &di
    };
    let mut cols: Vec<Poly> = Vec::new();
    for i in 0..=e {
        cols.push(&lift(i) * f.den());
    }
    for i in 0..=e {
        cols.push(-&(&lift(i) * f.num()));
    }
    let maxdeg = cols.iter().filter_map(|p| p.deg()).max().unwrap_or(0);
    let rows: Vec<Vec<Cyclo>> = (0..=maxdeg)
        .map(|d| cols.iter().map(|p| p.coeff(d)).collect())
        .collect();
    for v in linalg::kernel(&rows) {
        let p = Poly::new(v[..=e].to_vec());
        let q = Poly::new(v[e + 1..].to_vec());
        if q.is_zero() || p.is_zero() {
            continue;
        }
        let Ok(r) = RatFunc::new(p, q) else { continue };
        if let Ok(check) = r.compose(&dn) {
            if check == *f {
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}

/// Largest-degree W with f = f1 o W and g = g1 o W, via the y-primitive part
/// of the bivariate gcd of the separated differences. The pencil spanned by
/// two generic sections of the gcd is a Lueroth generator; when a constant
/// lies in the pencil the generator is normalized to a monic polynomial
/// vanishing at 0.
pub fn common_inner_factor(f: &RatFunc, g: &RatFunc) -> Result<RatFunc> {
    if f.is_constant() || g.is_constant() {
        return Err(Error::domain(
            "common_inner_factor needs nonconstant inputs",
        ));
    }
    let nf = crate::poly::BiPoly::separated_difference(f);
    let ng = crate::poly::BiPoly::separated_difference(g);
    let k = crate::poly::bivariate_gcd(&nf, &ng)?;
    let d = k.x_deg().unwrap_or(0);
    if d <= 1 {
        return Ok(RatFunc::var());
    }
    // two independent sections of maximal x-degree
    let mut sections: Vec<Poly> = Vec::new();
    let mut y0 = 0i64;
    while sections.len() < 2 && y0 < 64 {
        let s = k.eval_y(&Cyclo::from_int(y0));
        y0 += 1;
        if s.deg() != Some(d) {
            continue;
        }
        if let Some(first) = sections.first() {
            // skip if proportional to the first section
            if &(&s.scale(&first.lc()) - &first.scale(&s.lc())) == &Poly::zero() {
                continue;
            }
        }
        sections.push(s);
    }
    if sections.len() < 2 {
        return Err(Error::bound(
            "could not find two independent sections of the bivariate gcd",
        ));
    }
    let (u, v) = (sections[0].clone(), sections[1].clone());

    // look for a constant in the pencil alpha u + beta v
    let rows: Vec<Vec<Cyclo>> = (1..=d).map(|i| vec![u.coeff(i), v.coeff(i)]).collect();
    let kernel = linalg::kernel(&rows);
    let w = if let Some(coefs) = kernel.first() {
        let e = &u.scale(&coefs[0]) + &v.scale(&coefs[1]);
        // e is constant; pick an independent pencil member as the numerator
        let p = if coefs[1].is_zero() {
            v.clone()
        } else {
            u.clone()
        };
        if e.is_zero() {
            return Err(Error::bound("degenerate pencil sections"));
        }
        // polynomial generator, normalized monic with W(0) = 0
        let shifted = &p - &Poly::constant(p.coeff(0));
        RatFunc::from_poly(shifted.monic())
    } else {
        RatFunc::new(u, v)?
    };

    // verify maximal common inner factor by exhibiting the outer parts
    if left_divide_ratfunc(f, &w).is_none() || left_divide_ratfunc(g, &w).is_none() {
        return Err(Error::bound(
            "pencil candidate failed left-division verification",
        ));
    }
    Ok(w)
}

/// The outer part f1 with f = f1 o w, when it exists: a kernel computation
/// over the coefficients of f1's numerator and denominator.
pub fn left_divide_ratfunc(f: &RatFunc, w: &RatFunc) -> Option<RatFunc> {
    let dw = w.degree();
    let df = f.degree();
    if dw == 0 || df % dw != 0 {
        return None;
    }
    let e = df / dw;
    let lift = |i: usize| -> Poly {
        let ni = w.num().pow(i as u32);
        let di = w.den().pow((e - i) as u32);
        &ni * &di
    };
    let mut cols: Vec<Poly> = Vec::new();
    for i in 0..=e {
        cols.push(&lift(i) * f.den());
    }
    for i in 0..=e {
        cols.push(-&(&lift(i) * f.num()));
    }
    let maxdeg = cols.iter().filter_map(|p| p.deg()).max().unwrap_or(0);
    let rows: Vec<Vec<Cyclo>> = (0..=maxdeg)
        .map(|d| cols.iter().map(|p| p.coeff(d)).collect())
        .collect();
    for v in linalg::kernel(&rows) {
        let p = Poly::new(v[..=e].to_vec());
        let q = Poly::new(v[e + 1..].to_vec());
        if q.is_zero() || p.is_zero() {
            continue;
        }
        let Ok(f1) = RatFunc::new(p, q) else { continue };
        if let Ok(check) = f1.compose(w) {
            if check == *f {
                return Some(f1);
            }
        }
    }
    None
}

/// Conductor big enough to hold every coefficient of both functions.
pub fn ratfunc_field(f: &RatFunc) -> u32 {
    let mut k = 1;
    for c in f.num().coeffs().iter().chain(f.den().coeffs()) {
        k = lcm_u32(k, c.descend().conductor());
    }
    k
}
