use crate::num::{lcm_u32, Cyclo};
use crate::poly::Poly;

/// lcm of the (descended) conductors of all coefficients: the smallest
/// cyclotomic field containing the polynomial.
pub fn poly_field(p: &Poly) -> u32 {
    let mut k = 1;
    for c in p.coeffs() {
        k = lcm_u32(k, c.descend().conductor());
    }
    k
}

/// Roots of unity lying in Q(zeta_k): the group generated by -1 and zeta_k.
pub fn roots_of_unity_in_field(k: u32) -> Vec<Cyclo> {
    let n = lcm_u32(2, k);
    let zeta = Cyclo::root_of_unity(n, 1);
    let mut out = Vec::with_capacity(n as usize);
    let mut w = Cyclo::one();
    for _ in 0..n {
        out.push(w.clone());
        w = &w * &zeta;
    }
    out
}

/// If P = G o H with deg H = d, returns the unique pair with H monic and
/// H(0) = 0. The candidate H is solved triangularly from the top
/// coefficients of P, then G is recovered by H-adic expansion, accepting
/// only if every remainder is constant.
pub fn right_factor(p: &Poly, d: usize) -> Option<(Poly, Poly)> {
    let n = p.deg()?;
    if d == 0 || n == 0 || n % d != 0 {
        return None;
    }
    if d == n {
        let (h, mu) = normalize_inner(p);
        let inv = mu.inverse();
        let g = Poly::new(vec![
            &inv.b * &inv.d.inv().unwrap(),
            &inv.a * &inv.d.inv().unwrap(),
        ]);
        return Some((g, h));
    }
    let e = (n / d) as u32;
    let mut h = Poly::monomial(Cyclo::one(), d);
    let lc_inv = p.lc().inv().unwrap();
    let pm = p.scale(&lc_inv);
    let e_inv = Cyclo::from_int(e as i64).inv().unwrap();
    for j in 1..d {
        let he = h.pow(e);
        let delta = &pm.coeff(n - j) - &he.coeff(n - j);
        let c = &delta * &e_inv;
        if !c.is_zero() {
            h = &h + &Poly::monomial(c, d - j);
        }
    }
    let g = left_divide(p, &h)?;
    Some((g, h))
}

/// H-adic expansion: the unique G with P = G o H, when it exists.
pub fn left_divide(p: &Poly, h: &Poly) -> Option<Poly> {
    if h.deg().map_or(true, |d| d == 0) {
        return None;
    }
    let mut r = p.clone();
    let mut coeffs = Vec::new();
    while !r.is_zero() {
        let (q, rem) = r.divrem(h);
        if rem.deg().map_or(false, |d| d > 0) {
            return None;
        }
        coeffs.push(rem.coeff(0));
        r = q;
    }
    if coeffs.is_empty() {
        coeffs.push(Cyclo::zero());
    }
    Some(Poly::new(coeffs))
}

/// Normalize an inner polynomial factor to monic with zero constant term,
/// returning (normalized, mu) with normalized = mu o original.
pub fn normalize_inner(h: &Poly) -> (Poly, crate::poly::Mobius) {
    let a = h.lc().inv().unwrap();
    let scaled = h.scale(&a);
    let b = -&scaled.coeff(0);
    let normalized = &scaled + &Poly::constant(b.clone());
    let mu = crate::poly::Mobius::affine(a, b);
    (normalized, mu)
}

/// All Q with P = U o Q for a fixed outer U. Leading coefficients of Q are
/// the roots of lc(U) x^(deg U) = lc(P); each choice determines Q
/// triangularly and is kept only if the composition verifies.
pub fn inner_divide(u: &Poly, p: &Poly) -> Vec<Poly> {
    let (Some(du), Some(n)) = (u.deg(), p.deg()) else {
        return vec![];
    };
    if du == 0 || n == 0 || n % du != 0 {
        return vec![];
    }
    let e = n / du;
    let target = &p.lc() * &u.lc().inv().unwrap();
    let mut out = Vec::new();
    for qe in target.nth_roots_extended(du as u32) {
        if qe.is_zero() {
            continue;
        }
        let mut q = Poly::monomial(qe.clone(), e);
        // diagonal factor for the triangular solve
        let diag = &(&Cyclo::from_int(du as i64) * &u.lc()) * &qe.pow(du as i64 - 1).unwrap();
        let diag_inv = diag.inv().unwrap();
        for j in 1..=e {
            let current = u.compose(&q);
            let delta = &p.coeff(n - j) - &current.coeff(n - j);
            let c = &delta * &diag_inv;
            if !c.is_zero() {
                q = &q + &Poly::monomial(c, e - j);
            }
        }
        if u.compose(&q) == *p {
            out.push(q);
        }
    }
    out
}

/// Affine maps w with U o w = U (the deck transformations of a polynomial).
pub fn poly_deck(u: &Poly) -> Vec<(Cyclo, Cyclo)> {
    let Some(du) = u.deg() else { return vec![] };
    if du == 0 {
        return vec![];
    }
    let k = poly_field(u);
    let mut out = Vec::new();
    for a in roots_of_unity_in_field(k) {
        if a.pow(du as i64).unwrap() != Cyclo::one() {
            continue;
        }
        // match the coefficient of z^(du-1) to pin b
        let lc = u.lc();
        let sub = u.coeff(du - 1);
        let an1 = a.pow(du as i64 - 1).unwrap();
        // du * lc * a^(du-1) * b + sub * a^(du-1) = sub
        let denom = &(&Cyclo::from_int(du as i64) * &lc) * &an1;
        let b = &(&sub - &(&sub * &an1)) * &denom.inv().unwrap();
        if u.compose_affine(&a, &b) == *u {
            out.push((a, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::chebyshev;

    #[test]
    fn power_split() {
        // z^6 + 1 = (z^3 + 1) o z^2
        let p = Poly::from_int_coeffs(&[1, 0, 0, 0, 0, 0, 1]);
        let (g, h) = right_factor(&p, 2).unwrap();
        assert_eq!(h, Poly::from_int_coeffs(&[0, 0, 1]));
        assert_eq!(g, Poly::from_int_coeffs(&[1, 0, 0, 1]));
    }

    #[test]
    fn chebyshev_split() {
        // T_6 = G o H with deg H = 3; H is the monic zero-constant
        // normalization of T_3
        let t6 = chebyshev(6);
        let (g, h) = right_factor(&t6, 3).unwrap();
        assert_eq!(g.compose(&h), t6);
        // H = (T_3 + c)/4-style normalization: monic, H(0) = 0
        assert!(h.lc().is_one());
        assert!(h.coeff(0).is_zero());
    }

    #[test]
    fn no_quadratic_factor() {
        // z^6 + z + 1 has no degree-2 right factor
        let p = Poly::from_int_coeffs(&[1, 1, 0, 0, 0, 0, 1]);
        assert!(right_factor(&p, 2).is_none());
        assert!(right_factor(&p, 3).is_none());
    }

    #[test]
    fn inner_division() {
        // T_6 = T_2 o T_3: recover T_3 from outer T_2
        let sols = inner_divide(&chebyshev(2), &chebyshev(6));
        assert!(sols.contains(&chebyshev(3)));
    }

    #[test]
    fn decks_of_even_polynomial() {
        // z^4 - 2z^2: decks are z and -z
        let u = Poly::from_int_coeffs(&[0, 0, -2, 0, 1]);
        let decks = poly_deck(&u);
        assert_eq!(decks.len(), 2);
    }
}
