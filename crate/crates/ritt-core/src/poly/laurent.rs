use super::poly::Poly;
use crate::error::{Error, Result};
use crate::num::Cyclo;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial: finitely many terms c_e z^e with integer exponents of
/// either sign. No zero coefficients are stored. As a map of the sphere its
/// poles lie within {0, infinity}; the pole orders are O(1) reads.
#[derive(Clone, PartialEq, Eq)]
pub struct Laurent {
    t: BTreeMap<i64, Cyclo>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { t: BTreeMap::new() }
    }

    pub fn constant(c: Cyclo) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(0, c);
        }
        Laurent { t }
    }

    pub fn var() -> Self {
        Laurent::monomial(Cyclo::one(), 1)
    }

    pub fn monomial(c: Cyclo, e: i64) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(e, c);
        }
        Laurent { t }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Cyclo)>) -> Self {
        let mut l = Laurent::zero();
        for (e, c) in terms {
            l.add_term(e, c);
        }
        l
    }

    pub fn from_poly(p: &Poly) -> Self {
        Laurent::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }

    fn add_term(&mut self, e: i64, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        let entry = self.t.entry(e).or_insert_with(Cyclo::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.t.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.t.keys().all(|&e| e == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Cyclo)> {
        self.t.iter()
    }

    pub fn support(&self) -> Vec<i64> {
        self.t.keys().copied().collect()
    }

    pub fn coeff(&self, e: i64) -> Cyclo {
        self.t.get(&e).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.t.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.t.keys().next().copied()
    }

    /// Pole order at infinity: max positive exponent, clamped at 0.
    pub fn pole_inf(&self) -> i64 {
        self.max_exp().map_or(0, |e| e.max(0))
    }

    /// Pole order at zero: -(min negative exponent), clamped at 0.
    pub fn pole_zero(&self) -> i64 {
        self.min_exp().map_or(0, |e| (-e).max(0))
    }

    /// Mapping degree as a rational function.
    pub fn degree(&self) -> i64 {
        self.pole_inf() + self.pole_zero()
    }

    pub fn is_genuinely_laurent(&self) -> bool {
        self.pole_inf() > 0 && self.pole_zero() > 0
    }

    /// Leading coefficient on the infinity side.
    pub fn lc_inf(&self) -> Cyclo {
        self.max_exp().map_or_else(Cyclo::zero, |e| self.coeff(e))
    }

    pub fn lc_zero(&self) -> Cyclo {
        self.min_exp().map_or_else(Cyclo::zero, |e| self.coeff(e))
    }

    /// gcd of all exponents in the support; the largest d with L = M o z^d.
    /// Returns 0 for constants.
    pub fn exp_gcd(&self) -> i64 {
        let mut g: i64 = 0;
        for &e in self.t.keys() {
            g = gcd_i64(g, e.abs());
        }
        g
    }

    pub fn as_poly(&self) -> Option<Poly> {
        if self.min_exp().map_or(true, |e| e >= 0) {
            let n = self.max_exp().unwrap_or(0) as usize;
            let mut v = vec![Cyclo::zero(); n + 1];
            for (&e, c) in &self.t {
                v[e as usize] = c.clone();
            }
            Some(Poly::new(v))
        } else {
            None
        }
    }

    pub fn derivative(&self) -> Laurent {
        Laurent::from_terms(
            self.t
                .iter()
                .map(|(&e, c)| (e - 1, c * &Cyclo::from_int(e))),
        )
    }

    pub fn eval(&self, x: &Cyclo) -> Result<Cyclo> {
        let mut acc = Cyclo::zero();
        for (&e, c) in &self.t {
            if e < 0 && x.is_zero() {
                return Err(Error::DivisionByZero);
            }
            acc = &acc + &(c * &x.pow(e)?);
        }
        Ok(acc)
    }

    pub fn scale(&self, s: &Cyclo) -> Laurent {
        if s.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            t: self.t.iter().map(|(&e, c)| (e, c * s)).collect(),
        }
    }

    /// L(c z).
    pub fn twist(&self, c: &Cyclo) -> Laurent {
        Laurent::from_terms(
            self.t
                .iter()
                .map(|(&e, x)| (e, x * &c.pow(e).expect("nonzero twist"))),
        )
    }

    /// L(c / z).
    pub fn twist_inv(&self, c: &Cyclo) -> Laurent {
        Laurent::from_terms(
            self.t
                .iter()
                .map(|(&e, x)| (-e, x * &c.pow(e).expect("nonzero twist"))),
        )
    }

    /// L(z^d) for d >= 1.
    pub fn compose_power(&self, d: i64) -> Laurent {
        assert!(d >= 1);
        Laurent {
            t: self.t.iter().map(|(&e, c)| (e * d, c.clone())).collect(),
        }
    }

    /// The M with self = M o z^d; requires d | every support exponent.
    pub fn decompress_power(&self, d: i64) -> Laurent {
        assert!(d >= 1);
        Laurent {
            t: self
                .t
                .iter()
                .map(|(&e, c)| {
                    assert!(e % d == 0, "support not divisible by {d}");
                    (e / d, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Laurent {
        let mut acc = Laurent::constant(Cyclo::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// P(L) for a polynomial outer factor P.
    pub fn compose_poly_outer(&self, outer: &Poly) -> Laurent {
        let mut acc = Laurent::zero();
        for c in outer.coeffs().iter().rev() {
            acc = &(&acc * self) + &Laurent::constant(c.clone());
        }
        acc
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// D_n = (z^n + z^(-n)) / 2, the two-pole Chebyshev analogue.
pub fn laurent_d(n: u32) -> Laurent {
    assert!(n >= 1);
    Laurent::from_terms([
        (n as i64, Cyclo::from_frac(1, 2)),
        (-(n as i64), Cyclo::from_frac(1, 2)),
    ])
}

impl<'a> Add for &'a Laurent {
    type Output = Laurent;
    fn add(self, rhs: &'a Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.t {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub for &'a Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &'a Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.t {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Neg for &'a Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            t: self.t.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a> Mul for &'a Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &'a Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&e1, c1) in &self.t {
            for (&e2, c2) in &rhs.t {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::expr::print_laurent(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly::chebyshev;

    #[test]
    fn d_identities() {
        // D_6 = T_2 o D_3 = T_3 o D_2 = D_1 o z^6
        let d6 = laurent_d(6);
        assert_eq!(laurent_d(3).compose_poly_outer(&chebyshev(2)), d6);
        assert_eq!(laurent_d(2).compose_poly_outer(&chebyshev(3)), d6);
        assert_eq!(laurent_d(1).compose_power(6), d6);
    }

    #[test]
    fn pole_orders() {
        let l = Laurent::from_terms([(4, Cyclo::one()), (-2, Cyclo::one())]);
        assert_eq!(l.pole_inf(), 4);
        assert_eq!(l.pole_zero(), 2);
        assert_eq!(l.degree(), 6);
        assert_eq!(l.exp_gcd(), 2);
    }

    #[test]
    fn t_d_composition_is_d() {
        // T_d o (z + 1/z)/1... : T_d o D_1 = D_d
        for d in 1..=8u32 {
            assert_eq!(laurent_d(1).compose_poly_outer(&chebyshev(d)), laurent_d(d));
        }
    }
}
