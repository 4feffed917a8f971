use crate::error::{Error, Result};
use crate::num::Cyclo;
use crate::poly::{chebyshev, laurent_d, Laurent, Poly, RatFunc};

/// Parameters for the six double-decomposition families. Cases follow the
/// main classification: powers with a Laurent cofactor, the quadratic
/// rational family, commuting Chebyshev pairs, the Chebyshev/power mixed
/// family, the sign-twisted Chebyshev family, and one exceptional pair of
/// degrees 6 and 4.
#[derive(Clone, Debug)]
pub enum FamilyCase {
    /// z^n o z^r L(z^n) = z^r L^n(z) o z^n, gcd(n, r) = 1.
    C1 { n: u32, r: u32, l: Laurent },
    /// z^2 o [(z^2-1)/(z^2+1)] S(2z/(z^2+1)) = (1-z^2) S^2(z) o 2z/(z^2+1).
    C2 { s: Poly },
    /// T_n o T_m = T_m o T_n, gcd(n, m) = 1.
    C3 { n: u32, m: u32 },
    /// T_n o D_m = D_m o z^n, gcd(n, m) = 1.
    C4 { n: u32, m: u32 },
    /// -T_nl o (eps z^m + 1/(eps z^m))/2 = T_ml o D_n,
    /// l > 1, eps^(nl) = -1, gcd(n, m) = 1.
    C5 { n: u32, m: u32, l: u32, eps: Cyclo },
    /// (z^2-1)^3 o 3(3z^4+4z^3-6z^2+4z-1)/(3z^2-1)^2
    ///   = (3z^4-4z^3) o 4(9z^6-9z^4+18z^3-15z^2+6z-1)/(3z^2-1)^3.
    C6,
}

/// A verified double decomposition A o C = B o D.
#[derive(Clone, Debug, PartialEq)]
pub struct Quad {
    pub a: RatFunc,
    pub c: RatFunc,
    pub b: RatFunc,
    pub d: RatFunc,
}

impl Quad {
    pub fn verify(&self) -> Result<bool> {
        Ok(self.a.compose(&self.c)? == self.b.compose(&self.d)?)
    }

    pub fn composite(&self) -> Result<RatFunc> {
        self.a.compose(&self.c)
    }
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Build the A o C = B o D quadruple for one family; the identity is
/// verified exactly before returning, and violated parameter constraints
/// are rejected by name.
pub fn family_generator(case: &FamilyCase) -> Result<Quad> {
    let quad = match case {
        FamilyCase::C1 { n, r, l } => {
            if *n < 1 {
                return Err(Error::domain("case 1 requires n >= 1"));
            }
            if gcd_u32(*n, *r) != 1 {
                return Err(Error::domain("case 1 requires gcd(n, r) = 1"));
            }
            if l.is_zero() {
                return Err(Error::domain("case 1 requires L != 0"));
            }
            let a = RatFunc::from_poly(Poly::monomial(Cyclo::one(), *n as usize));
            // C = z^r L(z^n)
            let c_l = &Laurent::monomial(Cyclo::one(), *r as i64) * &l.compose_power(*n as i64);
            // B = z^r L^n(z)
            let b_l = &Laurent::monomial(Cyclo::one(), *r as i64) * &l.pow(*n);
            let d = RatFunc::from_poly(Poly::monomial(Cyclo::one(), *n as usize));
            Quad {
                a,
                c: RatFunc::from_laurent(&c_l),
                b: RatFunc::from_laurent(&b_l),
                d,
            }
        }
        FamilyCase::C2 { s } => {
            if s.is_zero() {
                return Err(Error::domain("case 2 requires S != 0"));
            }
            let z2p1 = Poly::from_int_coeffs(&[1, 0, 1]);
            let z2m1 = Poly::from_int_coeffs(&[-1, 0, 1]);
            let two_z = Poly::from_int_coeffs(&[0, 2]);
            let frac = RatFunc::new(two_z, z2p1.clone())?; // 2z/(z^2+1)
            let a = RatFunc::from_poly(Poly::monomial(Cyclo::one(), 2));
            let c = RatFunc::new(z2m1, z2p1)?.mul(&RatFunc::from_poly(s.clone()).compose(&frac)?);
            let b = RatFunc::from_poly(&Poly::from_int_coeffs(&[1, 0, -1]) * &(s * s));
            Quad { a, c, b, d: frac }
        }
        FamilyCase::C3 { n, m } => {
            if gcd_u32(*n, *m) != 1 {
                return Err(Error::domain("case 3 requires gcd(n, m) = 1"));
            }
            Quad {
                a: RatFunc::from_poly(chebyshev(*n)),
                c: RatFunc::from_poly(chebyshev(*m)),
                b: RatFunc::from_poly(chebyshev(*m)),
                d: RatFunc::from_poly(chebyshev(*n)),
            }
        }
        FamilyCase::C4 { n, m } => {
            if gcd_u32(*n, *m) != 1 {
                return Err(Error::domain("case 4 requires gcd(n, m) = 1"));
            }
            if *m < 1 || *n < 1 {
                return Err(Error::domain("case 4 requires n, m >= 1"));
            }
            Quad {
                a: RatFunc::from_poly(chebyshev(*n)),
                c: RatFunc::from_laurent(&laurent_d(*m)),
                b: RatFunc::from_laurent(&laurent_d(*m)),
                d: RatFunc::from_poly(Poly::monomial(Cyclo::one(), *n as usize)),
            }
        }
        FamilyCase::C5 { n, m, l, eps } => {
            if gcd_u32(*n, *m) != 1 {
                return Err(Error::domain("case 5 requires gcd(n, m) = 1"));
            }
            if *l <= 1 {
                return Err(Error::domain("case 5 requires l > 1"));
            }
            let nl = (*n * *l) as i64;
            if eps.pow(nl)? != Cyclo::from_int(-1) {
                return Err(Error::domain("case 5 requires eps^(nl) = -1"));
            }
            let half = Cyclo::from_frac(1, 2);
            // C = (eps z^m + 1/(eps z^m)) / 2
            let c_l = Laurent::from_terms([
                (*m as i64, &half * eps),
                (-(*m as i64), &half * &eps.inv()?),
            ]);
            Quad {
                a: RatFunc::from_poly(-&chebyshev(*n * *l)),
                c: RatFunc::from_laurent(&c_l),
                b: RatFunc::from_poly(chebyshev(*m * *l)),
                d: RatFunc::from_laurent(&laurent_d(*n)),
            }
        }
        FamilyCase::C6 => {
            let a = RatFunc::from_poly(Poly::from_int_coeffs(&[-1, 0, 1]).pow(3));
            let b = RatFunc::from_poly(Poly::from_int_coeffs(&[0, 0, 0, -4, 3]));
            let den = Poly::from_int_coeffs(&[-1, 0, 3]);
            let c = RatFunc::new(
                Poly::from_int_coeffs(&[-1, 4, -6, 4, 3]).scale(&Cyclo::from_int(3)),
                den.pow(2),
            )?;
            let d = RatFunc::new(
                Poly::from_int_coeffs(&[-1, 6, -15, 18, -9, 0, 9]).scale(&Cyclo::from_int(4)),
                den.pow(3),
            )?;
            Quad { a, c, b, d }
        }
    };
    if !quad.verify()? {
        return Err(Error::domain(
            "family generator produced an unequal composition (internal error)",
        ));
    }
    Ok(quad)
}
