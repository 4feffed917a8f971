use crate::error::{Error, Result};
use crate::num::{Cyclo, Rat};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over Q(zeta). Trailing zeros are trimmed;
/// the zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    c: Vec<Cyclo>,
}

impl Poly {
    pub fn new(coeffs: Vec<Cyclo>) -> Self {
        let mut c = coeffs;
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Cyclo::one())
    }

    pub fn constant(c: Cyclo) -> Self {
        Poly::new(vec![c])
    }

    pub fn var() -> Self {
        Poly::new(vec![Cyclo::zero(), Cyclo::one()])
    }

    pub fn monomial(c: Cyclo, e: usize) -> Self {
        let mut v = vec![Cyclo::zero(); e + 1];
        v[e] = c;
        Poly::new(v)
    }

    pub fn from_int_coeffs(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&x| Cyclo::from_int(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn degree(&self) -> usize {
        self.deg().expect("zero polynomial has no degree")
    }

    pub fn lc(&self) -> Cyclo {
        self.c.last().cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn coeff(&self, i: usize) -> Cyclo {
        self.c.get(i).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.c
    }

    pub fn map_coeffs(&self, f: impl Fn(&Cyclo) -> Cyclo) -> Poly {
        Poly::new(self.c.iter().map(f).collect())
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().all(|x| x.is_rational())
    }

    pub fn rational_coeffs(&self) -> Option<Vec<Rat>> {
        self.c.iter().map(|x| x.as_rat()).collect()
    }

    pub fn scale(&self, s: &Cyclo) -> Poly {
        Poly::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.lc().inv().unwrap())
    }

    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, x)| x * &Cyclo::from_int((i + 1) as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        let mut acc = Cyclo::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Composition self(rhs(z)) by Horner.
    pub fn compose(&self, rhs: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * rhs) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
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

    /// Substitute z -> a*z + b.
    pub fn compose_affine(&self, a: &Cyclo, b: &Cyclo) -> Poly {
        self.compose(&Poly::new(vec![b.clone(), a.clone()]))
    }

    /// Euclidean division; rhs must be nonzero.
    pub fn divrem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let db = rhs.degree();
        let li = rhs.lc().inv().unwrap();
        let mut r = self.c.clone();
        let mut q = vec![Cyclo::zero(); self.c.len().saturating_sub(db)];
        while r.len() > db {
            let dr = r.len() - 1;
            let c = &r[dr] * &li;
            let shift = dr - db;
            if !c.is_zero() {
                q[shift] = c.clone();
                for (i, bc) in rhs.c.iter().enumerate() {
                    let t = &r[shift + i] - &(bc * &c);
                    r[shift + i] = t;
                }
            }
            r.pop();
            while r.last().map_or(false, |x| x.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, rhs: &Poly) -> Poly {
        self.divrem(rhs).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, rhs: &Poly) -> Poly {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// P divided by gcd(P, P'): same roots, all simple, monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Resultant of two polynomials via the Euclidean remainder sequence.
    /// Errors when both inputs are zero.
    pub fn resultant(&self, rhs: &Poly) -> Result<Cyclo> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::domain("resultant of two zero polynomials"));
        }
        if self.is_zero() || rhs.is_zero() {
            return Ok(Cyclo::zero());
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        let mut res = Cyclo::one();
        if a.degree() < b.degree() {
            if (a.degree() * b.degree()) % 2 == 1 {
                res = -res;
            }
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.degree() == 0 {
                return Ok(&res * &b.lc().pow(a.degree() as i64).unwrap());
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return Ok(Cyclo::zero());
            }
            // Res(A,B) = (-1)^(dA dB) lc(B)^(dA - dR) Res(B, R)
            if (a.degree() * b.degree()) % 2 == 1 {
                res = -res;
            }
            res = &res * &b.lc().pow((a.degree() - r.degree()) as i64).unwrap();
            a = b;
            b = r;
        }
    }

    /// Res_z(P(z) - t, P'(z)) as a polynomial in t, computed by evaluation
    /// at rational nodes and Lagrange interpolation. Vanishes exactly at the
    /// finite critical values of P.
    pub fn critical_resultant(&self) -> Result<Poly> {
        let n = self.deg().ok_or_else(|| Error::domain("zero polynomial"))?;
        if n < 1 {
            return Err(Error::domain("constant polynomial"));
        }
        let dp = self.derivative();
        if n == 1 {
            return Ok(Poly::one());
        }
        let dt = dp.degree(); // t-degree of the resultant
        let nodes: Vec<Cyclo> = (0..=dt as i64).map(Cyclo::from_int).collect();
        let vals: Vec<Cyclo> = nodes
            .iter()
            .map(|t| {
                let shifted = self - &Poly::constant(t.clone());
                shifted.resultant(&dp)
            })
            .collect::<Result<_>>()?;
        Ok(lagrange_interpolate(&nodes, &vals))
    }
}

/// Unique polynomial of degree < nodes.len() through the given points.
pub fn lagrange_interpolate(nodes: &[Cyclo], vals: &[Cyclo]) -> Poly {
    let mut acc = Poly::zero();
    for (i, xi) in nodes.iter().enumerate() {
        let mut li = Poly::one();
        let mut denom = Cyclo::one();
        for (j, xj) in nodes.iter().enumerate() {
            if i != j {
                li = &li * &Poly::new(vec![-xj, Cyclo::one()]);
                denom = &denom * &(xi - xj);
            }
        }
        acc = &acc + &li.scale(&(&vals[i] * &denom.inv().unwrap()));
    }
    acc
}

/// Chebyshev polynomial T_n via T_0 = 1, T_1 = z, T_{n+1} = 2 z T_n - T_{n-1}.
pub fn chebyshev(n: u32) -> Poly {
    let mut t0 = Poly::one();
    let mut t1 = Poly::var();
    if n == 0 {
        return t0;
    }
    let two_z = Poly::new(vec![Cyclo::zero(), Cyclo::from_int(2)]);
    for _ in 1..n {
        let t2 = &(&two_z * &t1) - &t0;
        t0 = t1;
        t1 = t2;
    }
    t1
}

impl<'a> Add for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl<'a> Sub for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.c.iter().map(|x| -x).collect())
    }
}

impl<'a> Mul for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Cyclo::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        Poly::new(out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::expr::print_poly(self))
    }
}
