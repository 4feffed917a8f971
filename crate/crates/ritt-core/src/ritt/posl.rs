use crate::decomp::left_divide;
use crate::error::{Error, Result};
use crate::num::Cyclo;
use crate::poly::{chebyshev, laurent_d, Poly};

/// Solution of A o D_n o (mu z) = B o D_m with gcd(n, m) = 1 and mu a root
/// of unity: a polynomial R and l >= 1 with mu^(2nml) = 1,
/// A = R o (mu^(nml) T_lm) and B = R o T_ln. Returns None when the
/// necessary root-of-unity condition fails.
pub fn solve_posl(a: &Poly, b: &Poly, n: u32, m: u32, mu: &Cyclo) -> Result<Option<(Poly, u32)>> {
    if gcd(n, m) != 1 {
        return Err(Error::domain("solve_posl requires gcd(n, m) = 1"));
    }
    if mu.root_of_unity_order().is_none() {
        return Err(Error::domain(
            "solve_posl requires mu to be a root of unity",
        ));
    }
    // verify the hypothesis exactly
    let lhs = laurent_d(n).twist(mu).compose_poly_outer(a);
    let rhs = laurent_d(m).compose_poly_outer(b);
    if lhs != rhs {
        return Err(Error::domain("A o D_n o (mu z) and B o D_m differ"));
    }
    let da = a.deg().unwrap_or(0) as u32;
    if da == 0 || da % m != 0 {
        return Ok(None);
    }
    let l = da / m;
    if b.deg() != Some((n * l) as usize) {
        return Ok(None);
    }
    if mu.pow(2 * (n * m * l) as i64)? != Cyclo::one() {
        return Ok(None);
    }
    let r = match left_divide(b, &chebyshev(n * l)) {
        Some(r) => r,
        None => return Ok(None),
    };
    // A = R o (mu^(nml) T_lm); the sign mu^(nml) is +/- 1
    let sign = mu.pow((n * m * l) as i64)?;
    let t_scaled = chebyshev(m * l).scale(&sign);
    if r.compose(&t_scaled) != *a {
        return Ok(None);
    }
    Ok(Some((r, l)))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
