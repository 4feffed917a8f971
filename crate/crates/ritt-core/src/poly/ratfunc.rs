use super::laurent::Laurent;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::num::Cyclo;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Point of the projective line over the working field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProjValue {
    Finite(Cyclo),
    Inf,
}

impl ProjValue {
    pub fn finite(c: i64) -> Self {
        ProjValue::Finite(Cyclo::from_int(c))
    }
}

/// Rational function in canonical form: numerator and denominator coprime,
/// denominator monic and nonzero. Construction is normalizing, so two ways
/// of building the same function yield identical representations.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.deg() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lci = den.lc().inv().unwrap();
        Ok(RatFunc {
            num: num.scale(&lci),
            den: den.scale(&lci),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_laurent(l: &Laurent) -> Self {
        let b = l.pole_zero();
        let mut num = Poly::zero();
        for (&e, c) in l.terms() {
            num = &num + &Poly::monomial(c.clone(), (e + b) as usize);
        }
        RatFunc {
            num,
            den: Poly::monomial(Cyclo::one(), b as usize),
        }
    }

    pub fn constant(c: Cyclo) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Mapping degree: max(deg num, deg den) in reduced form.
    pub fn degree(&self) -> usize {
        self.num.deg().unwrap_or(0).max(self.den.deg().unwrap_or(0))
    }

    pub fn as_poly(&self) -> Option<Poly> {
        if self.den.deg() == Some(0) {
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// Laurent form when the denominator is a power of z.
    pub fn as_laurent(&self) -> Option<Laurent> {
        let b = self.den.degree();
        // den monic: must be exactly z^b
        for i in 0..b {
            if !self.den.coeff(i).is_zero() {
                return None;
            }
        }
        Some(Laurent::from_terms(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 - b as i64, c.clone())),
        ))
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::constant(Cyclo::one()).div(self)
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = RatFunc::constant(Cyclo::one());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// P(g) written over a common denominator: sum p_i N^i D^(n-i) / D^n.
    fn lift(p: &Poly, n: usize, gn: &Poly, gd: &Poly) -> Poly {
        let mut acc = Poly::zero();
        // Horner in N/D: ((p_n N + p_{n-1} D) N + p_{n-2} D^2) ...
        for i in (0..=n).rev() {
            acc = &acc * gn;
            let c = p.coeff(i);
            if !c.is_zero() {
                acc = &acc + &gd.pow((n - i) as u32).scale(&c);
            }
        }
        acc
    }

    /// Exact composition self(rhs(z)).
    pub fn compose(&self, rhs: &RatFunc) -> Result<RatFunc> {
        let n = self.num.deg().unwrap_or(0).max(self.den.deg().unwrap_or(0));
        let pn = Self::lift(&self.num, n, &rhs.num, &rhs.den);
        let pd = Self::lift(&self.den, n, &rhs.num, &rhs.den);
        if pd.is_zero() {
            return Err(Error::domain(
                "composition evaluates the outer function at a constant pole",
            ));
        }
        RatFunc::new(pn, pd)
    }

    pub fn eval_proj(&self, x: &ProjValue) -> ProjValue {
        match x {
            ProjValue::Finite(v) => {
                let d = self.den.eval(v);
                if d.is_zero() {
                    ProjValue::Inf
                } else {
                    ProjValue::Finite(&self.num.eval(v) * &d.inv().unwrap())
                }
            }
            ProjValue::Inf => {
                let dn = self.num.deg().map_or(-1, |d| d as i64);
                let dd = self.den.deg().map_or(-1, |d| d as i64);
                if dn > dd {
                    ProjValue::Inf
                } else if dn < dd {
                    ProjValue::Finite(Cyclo::zero())
                } else {
                    ProjValue::Finite(&self.num.lc() * &self.den.lc().inv().unwrap())
                }
            }
        }
    }

    pub fn derivative(&self) -> RatFunc {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(n, &self.den * &self.den).unwrap()
    }

    /// Polynomial whose finite roots are the preimages of w, plus a flag for
    /// infinity lying in the fiber.
    pub fn fiber_poly(&self, w: &ProjValue) -> (Poly, bool) {
        let deg = self.degree();
        match w {
            ProjValue::Inf => {
                let inf_in = self.num.deg().unwrap_or(0) > self.den.deg().unwrap_or(0);
                (self.den.clone(), inf_in)
            }
            ProjValue::Finite(v) => {
                let p = &self.num - &self.den.scale(v);
                let inf_in = p.deg().map_or(true, |d| d < deg);
                (p, inf_in)
            }
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::add(self, rhs)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::sub(self, rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::mul(self, rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::expr::print_ratfunc(self))
    }
}

/// Degree-one rational map (a z + b) / (c z + d) with nonzero determinant.
#[derive(Clone, PartialEq, Eq)]
pub struct Mobius {
    pub a: Cyclo,
    pub b: Cyclo,
    pub c: Cyclo,
    pub d: Cyclo,
}

impl Mobius {
    pub fn new(a: Cyclo, b: Cyclo, c: Cyclo, d: Cyclo) -> Result<Self> {
        let m = Mobius { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::domain("degenerate Mobius map"));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Mobius::affine(Cyclo::one(), Cyclo::zero())
    }

    /// z -> a z + b, a != 0.
    pub fn affine(a: Cyclo, b: Cyclo) -> Self {
        assert!(!a.is_zero());
        Mobius {
            a,
            b,
            c: Cyclo::zero(),
            d: Cyclo::one(),
        }
    }

    /// z -> c / z.
    pub fn inversion(c: Cyclo) -> Self {
        assert!(!c.is_zero());
        Mobius {
            a: Cyclo::zero(),
            b: c,
            c: Cyclo::one(),
            d: Cyclo::zero(),
        }
    }

    pub fn det(&self) -> Cyclo {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn is_affine(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.c.is_zero() && self.b.is_zero() && self.a == self.d
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// self(rhs(z)) as a Mobius map (matrix product).
    pub fn compose(&self, rhs: &Mobius) -> Mobius {
        Mobius {
            a: &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            c: &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            d: &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        }
    }

    pub fn apply(&self, v: &ProjValue) -> ProjValue {
        match v {
            ProjValue::Finite(x) => {
                let den = &(&self.c * x) + &self.d;
                if den.is_zero() {
                    ProjValue::Inf
                } else {
                    ProjValue::Finite(&(&(&self.a * x) + &self.b) * &den.inv().unwrap())
                }
            }
            ProjValue::Inf => {
                if self.c.is_zero() {
                    ProjValue::Inf
                } else {
                    ProjValue::Finite(&self.a * &self.c.inv().unwrap())
                }
            }
        }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::new(
            Poly::new(vec![self.b.clone(), self.a.clone()]),
            Poly::new(vec![self.d.clone(), self.c.clone()]),
        )
        .unwrap()
    }

    /// Extract a Mobius map from a degree-one rational function.
    pub fn from_ratfunc(f: &RatFunc) -> Option<Mobius> {
        if f.degree() != 1 {
            return None;
        }
        Mobius::new(
            f.num().coeff(1),
            f.num().coeff(0),
            f.den().coeff(1),
            f.den().coeff(0),
        )
        .ok()
    }
}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_ratfunc())
    }
}

/// mu o F for a rational F: (a F + b) / (c F + d), computed on num/den.
pub fn post_mobius(mu: &Mobius, f: &RatFunc) -> RatFunc {
    let n = &f.num().scale(&mu.a) + &f.den().scale(&mu.b);
    let d = &f.num().scale(&mu.c) + &f.den().scale(&mu.d);
    RatFunc::new(n, d).expect("nondegenerate Mobius keeps functions nonconstant")
}

/// F o mu for a rational F.
pub fn pre_mobius(f: &RatFunc, mu: &Mobius) -> RatFunc {
    f.compose(&mu.to_ratfunc()).expect("Mobius is nonconstant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly::chebyshev;

    #[test]
    fn canonical_stability() {
        // (z^2-1)/(z-1) reduces to z+1 with monic denominator
        let f = RatFunc::new(
            Poly::from_int_coeffs(&[-1, 0, 1]),
            Poly::from_int_coeffs(&[-1, 1]),
        )
        .unwrap();
        let g = RatFunc::from_poly(Poly::from_int_coeffs(&[1, 1]));
        assert_eq!(f, g);
        // scaling numerator and denominator together changes nothing
        let h = RatFunc::new(
            Poly::from_int_coeffs(&[-3, 0, 3]),
            Poly::from_int_coeffs(&[-3, 3]),
        )
        .unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn degree_multiplicativity() {
        let f = RatFunc::new(
            Poly::from_int_coeffs(&[1, 0, 1]),
            Poly::from_int_coeffs(&[0, 1]),
        )
        .unwrap(); // (z^2+1)/z, degree 2
        let g = RatFunc::from_poly(chebyshev(3));
        let h = f.compose(&g).unwrap();
        assert_eq!(h.degree(), 6);
    }

    #[test]
    fn composition_power_maps() {
        let z2 = RatFunc::from_poly(Poly::from_int_coeffs(&[0, 0, 1]));
        let z3 = RatFunc::from_poly(Poly::from_int_coeffs(&[0, 0, 0, 1]));
        let z6 = z2.compose(&z3).unwrap();
        assert_eq!(z6, RatFunc::from_poly(Poly::monomial(Cyclo::one(), 6)));
    }

    #[test]
    fn mobius_inverse() {
        let m = Mobius::new(
            Cyclo::from_int(2),
            Cyclo::from_int(1),
            Cyclo::from_int(1),
            Cyclo::from_int(3),
        )
        .unwrap();
        let comp = m.compose(&m.inverse());
        // composition is a scalar multiple of the identity matrix
        assert!(comp.b.is_zero() && comp.c.is_zero() && comp.a == comp.d);
    }

    #[test]
    fn laurent_roundtrip() {
        let l = Laurent::from_terms([
            (2, Cyclo::from_int(3)),
            (0, Cyclo::from_int(1)),
            (-1, Cyclo::from_frac(1, 2)),
        ]);
        let f = RatFunc::from_laurent(&l);
        assert_eq!(f.as_laurent().unwrap(), l);
        assert_eq!(f.degree(), 3);
    }

    #[test]
    fn fiber_poly_detects_infinity() {
        // F = (z^2-1)/(z^2+1): F = 1 has fiber {0-ish...}: num - den = -2,
        // degree drop => infinity is in the fiber
        let f = RatFunc::new(
            Poly::from_int_coeffs(&[-1, 0, 1]),
            Poly::from_int_coeffs(&[1, 0, 1]),
        )
        .unwrap();
        let (p, inf) = f.fiber_poly(&ProjValue::finite(1));
        assert!(inf);
        assert_eq!(p.deg(), Some(0));
    }
}
