use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use crate::num::Cyclo;
use std::fmt;

/// Bivariate polynomial in x and y over Q(zeta), stored as coefficients in
/// `Q(zeta)[x]` indexed by the power of y. No zero leading rows are kept.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    /// yc[j] is the coefficient of y^j, a polynomial in x.
    yc: Vec<Poly>,
}

impl BiPoly {
    pub fn new(yc: Vec<Poly>) -> Self {
        let mut yc = yc;
        while yc.last().map_or(false, |p| p.is_zero()) {
            yc.pop();
        }
        BiPoly { yc }
    }

    pub fn zero() -> Self {
        BiPoly { yc: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.yc.is_empty()
    }

    pub fn y_deg(&self) -> Option<usize> {
        if self.yc.is_empty() {
            None
        } else {
            Some(self.yc.len() - 1)
        }
    }

    pub fn x_deg(&self) -> Option<usize> {
        self.yc.iter().filter_map(|p| p.deg()).max()
    }

    pub fn y_coeffs(&self) -> &[Poly] {
        &self.yc
    }

    pub fn coeff(&self, i: usize, j: usize) -> Cyclo {
        self.yc.get(j).map_or_else(Cyclo::zero, |p| p.coeff(i))
    }

    /// Entries (i, j, c) for x^i y^j; only nonzero entries.
    pub fn entries(&self) -> Vec<(usize, usize, Cyclo)> {
        let mut out = Vec::new();
        for (j, p) in self.yc.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, usize, Cyclo)>) -> Self {
        let mut rows: Vec<Vec<Cyclo>> = Vec::new();
        for (i, j, c) in entries {
            while rows.len() <= j {
                rows.push(vec![]);
            }
            while rows[j].len() <= i {
                rows[j].push(Cyclo::zero());
            }
            rows[j][i] = &rows[j][i] + &c;
        }
        BiPoly::new(rows.into_iter().map(Poly::new).collect())
    }

    /// F(x, y0) as a polynomial in x.
    pub fn eval_y(&self, y0: &Cyclo) -> Poly {
        let mut acc = Poly::zero();
        for p in self.yc.iter().rev() {
            acc = &acc.scale(y0) + p;
        }
        acc
    }

    /// numerator of f(x) - f(y): P(x) Q(y) - P(y) Q(x).
    pub fn separated_difference(f: &RatFunc) -> BiPoly {
        let p = f.num();
        let q = f.den();
        let mut entries = Vec::new();
        for (i, a) in p.coeffs().iter().enumerate() {
            for (j, b) in q.coeffs().iter().enumerate() {
                if !a.is_zero() && !b.is_zero() {
                    entries.push((i, j, a * b));
                    entries.push((j, i, -&(a * b)));
                }
            }
        }
        BiPoly::from_entries(entries)
    }

    /// Content in y: gcd over `Q(zeta)[x]` of the y-coefficients.
    pub fn content_y(&self) -> Poly {
        let mut g = Poly::zero();
        for p in &self.yc {
            if !p.is_zero() {
                g = if g.is_zero() { p.monic() } else { g.gcd(p) };
            }
            if g.deg() == Some(0) {
                break;
            }
        }
        g
    }

    pub fn primitive_y(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let c = self.content_y();
        if c.deg() == Some(0) {
            return self.normalized();
        }
        BiPoly::new(self.yc.iter().map(|p| p.exact_div(&c)).collect()).normalized()
    }

    /// Divide through so the x-leading coefficient of the y-leading row is 1.
    pub fn normalized(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let lc = self.yc.last().unwrap().lc();
        let inv = lc.inv().unwrap();
        BiPoly::new(self.yc.iter().map(|p| p.scale(&inv)).collect())
    }

    fn lc_y(&self) -> &Poly {
        self.yc.last().expect("nonzero")
    }

    fn mul_xpoly(&self, p: &Poly) -> BiPoly {
        BiPoly::new(self.yc.iter().map(|q| q * p).collect())
    }

    fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.yc.len().max(rhs.yc.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let a = self.yc.get(j).cloned().unwrap_or_else(Poly::zero);
            let b = rhs.yc.get(j).cloned().unwrap_or_else(Poly::zero);
            out.push(&a - &b);
        }
        BiPoly::new(out)
    }

    fn shift_y(&self, k: usize) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![Poly::zero(); k];
        out.extend(self.yc.iter().cloned());
        BiPoly::new(out)
    }

    /// Pseudo-remainder of self by rhs with respect to y.
    fn prem_y(&self, rhs: &BiPoly) -> BiPoly {
        let db = rhs.y_deg().expect("nonzero divisor");
        let lb = rhs.lc_y().clone();
        let mut r = self.clone();
        while let Some(dr) = r.y_deg() {
            if dr < db {
                break;
            }
            let lr = r.lc_y().clone();
            // r := lb * r - lr * y^(dr-db) * rhs
            r = r.mul_xpoly(&lb).sub(&rhs.mul_xpoly(&lr).shift_y(dr - db));
            debug_assert!(r.y_deg().map_or(true, |d| d < dr));
        }
        r
    }
}

/// gcd in `Q(zeta)(x)[y]`, returned primitive in y, cleared of denominators
/// in x, with a deterministic leading normalization. Computed by the
/// primitive polynomial remainder sequence on y-primitive parts.
pub fn bivariate_gcd(f: &BiPoly, g: &BiPoly) -> Result<BiPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::domain("bivariate gcd of a zero polynomial"));
    }
    // operands with y-degree 0 act through the content only; the gcd in
    // (fraction field in x)[y] of such an operand with anything is 1.
    let mut a = f.primitive_y();
    let mut b = g.primitive_y();
    if a.y_deg() == Some(0) || b.y_deg() == Some(0) {
        return Ok(BiPoly::new(vec![Poly::one()]));
    }
    if a.y_deg() < b.y_deg() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = a.prem_y(&b);
        if r.is_zero() {
            return Ok(b.primitive_y());
        }
        if r.y_deg() == Some(0) {
            return Ok(BiPoly::new(vec![Poly::one()]));
        }
        a = b;
        b = r.primitive_y();
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, c) in self.entries() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({:?})x^{}y^{}", c, i, j)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly::chebyshev;

    fn x_minus_y() -> BiPoly {
        BiPoly::from_entries([(1, 0, Cyclo::one()), (0, 1, Cyclo::from_int(-1))])
    }

    #[test]
    fn gcd_trivial_factor() {
        let a = x_minus_y();
        let x_plus_y = BiPoly::from_entries([(1, 0, Cyclo::one()), (0, 1, Cyclo::one())]);
        let prod = {
            // (x-y)(x+y) = x^2 - y^2
            BiPoly::from_entries([(2, 0, Cyclo::one()), (0, 2, Cyclo::from_int(-1))])
        };
        let _ = x_plus_y;
        let g = bivariate_gcd(&a, &prod).unwrap();
        assert_eq!(g, x_minus_y().primitive_y());
    }

    #[test]
    fn gcd_x2y2_x3y3() {
        let a = BiPoly::from_entries([(2, 0, Cyclo::one()), (0, 2, Cyclo::from_int(-1))]);
        let b = BiPoly::from_entries([(3, 0, Cyclo::one()), (0, 3, Cyclo::from_int(-1))]);
        let g = bivariate_gcd(&a, &b).unwrap();
        assert_eq!(g, x_minus_y().primitive_y());
    }

    #[test]
    fn gcd_chebyshev_difference() {
        // gcd(T2(x)-T2(y), T6(x)-T6(y)) equals T2(x)-T2(y) up to constant
        let d2 = BiPoly::separated_difference(&RatFunc::from_poly(chebyshev(2)));
        let d6 = BiPoly::separated_difference(&RatFunc::from_poly(chebyshev(6)));
        let g = bivariate_gcd(&d2, &d6).unwrap();
        assert_eq!(g, d2.primitive_y());
        // and the factor (x-y)(x+y) divides it: check by evaluating at y=x
        // and y=-x via entries: T2(x)-T2(y) = 2x^2-2y^2
        assert_eq!(g.y_deg(), Some(2));
    }
}
