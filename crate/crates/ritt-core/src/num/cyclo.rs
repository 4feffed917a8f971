//! Exact arithmetic in cyclotomic extensions Q(zeta_k).
//!
//! An element is stored as its canonical residue in Q[z]/(Phi_k(z)) in the
//! power basis zeta^0 .. zeta^(phi(k)-1). Mixed-conductor operations embed
//! both operands into the lcm conductor; results are not automatically
//! descended to a smaller subfield (see [`Cyclo::descend`]).

use super::polyvec as pv;
use super::rational::Rat;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;
use std::sync::OnceLock;

pub fn euler_phi(k: u32) -> u32 {
    let mut n = k;
    let mut result = k;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u32) -> Vec<u32> {
    let mut d = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            d.push(i);
            if i != n / i {
                d.push(n / i);
            }
        }
        i += 1;
    }
    d.sort_unstable();
    d
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    (a as u64 * b as u64 / a.gcd(&b) as u64) as u32
}

/// Conductor of the field Q(zeta_k): k itself unless k = 2 mod 4, in which
/// case Q(zeta_k) = Q(zeta_{k/2}).
pub fn field_conductor(k: u32) -> u32 {
    if k % 4 == 2 {
        k / 2
    } else {
        k
    }
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Vec<Rat>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rat>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The k-th cyclotomic polynomial as a dense coefficient vector, computed by
/// dividing z^k - 1 by Phi_d for all proper divisors d of k.
pub fn cyclotomic_poly(k: u32) -> Vec<Rat> {
    assert!(k >= 1);
    if let Some(p) = cyclo_cache().lock().unwrap().get(&k) {
        return p.clone();
    }
    let poly = if k == 1 {
        vec![Rat::from_int(-1), Rat::from_int(1)]
    } else {
        let mut num = vec![Rat::zero(); k as usize + 1];
        num[0] = Rat::from_int(-1);
        num[k as usize] = Rat::from_int(1);
        let mut acc = num;
        for d in divisors(k) {
            if d == k {
                continue;
            }
            let phi_d = cyclotomic_poly(d);
            let (q, r) = pv::divrem(&acc, &phi_d);
            debug_assert!(r.is_empty());
            acc = q;
        }
        acc
    };
    cyclo_cache().lock().unwrap().insert(k, poly.clone());
    poly
}

/// Element of Q(zeta_k) in the power basis, length exactly phi(k).
#[derive(Clone)]
pub struct Cyclo {
    k: u32,
    c: Vec<Rat>,
}

impl Cyclo {
    fn make(k: u32, coeffs: Vec<Rat>) -> Self {
        let phi = euler_phi(k) as usize;
        let reduced = if coeffs.len() > phi {
            pv::rem(&coeffs, &cyclotomic_poly(k))
        } else {
            coeffs
        };
        let mut c = reduced;
        c.resize(phi, Rat::zero());
        Cyclo { k, c }
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyclo { k: 1, c: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rat(Rat::from_frac(n, d))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// zeta_k^j.
    pub fn root_of_unity(k: u32, j: i64) -> Self {
        assert!(k >= 1, "conductor must be positive");
        let jj = j.rem_euclid(k as i64) as usize;
        let mut v = vec![Rat::zero(); jj + 1];
        v[jj] = Rat::one();
        Cyclo::make(k, v)
    }

    pub fn conductor(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rat().map_or(false, |r| r.is_one())
    }

    /// The canonical residue is a plain rational exactly when every
    /// non-constant coordinate vanishes.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rat().is_some()
    }

    /// Embed into Q(zeta_bigk); requires k | bigk.
    pub fn embed(&self, bigk: u32) -> Cyclo {
        if bigk == self.k {
            return self.clone();
        }
        assert!(bigk % self.k == 0, "embedding requires divisibility");
        let m = (bigk / self.k) as usize;
        let mut v = vec![Rat::zero(); (self.c.len() - 1) * m + 1];
        for (i, x) in self.c.iter().enumerate() {
            if !x.is_zero() {
                v[i * m] = x.clone();
            }
        }
        Cyclo::make(bigk, v)
    }

    fn common(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo, u32) {
        let k = lcm_u32(a.k, b.k);
        (a.embed(k), b.embed(k), k)
    }

    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rat() {
            return Ok(Cyclo {
                k: self.k,
                c: {
                    let mut v = vec![Rat::zero(); self.c.len()];
                    v[0] = r.inv()?;
                    v
                },
            });
        }
        let phi_k = cyclotomic_poly(self.k);
        let a = pv::trim(self.c.clone());
        let (g, u, _) = pv::ext_gcd(&a, &phi_k);
        debug_assert_eq!(g, vec![Rat::one()], "Phi_k is irreducible");
        Ok(Cyclo::make(self.k, u))
    }

    pub fn div(&self, rhs: &Cyclo) -> Result<Cyclo> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Cyclo> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut e = e as u64;
        let mut acc = Cyclo::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Minimal-conductor form of the same value. Tries divisors of the
    /// current conductor in increasing order and solves the linear
    /// membership system for the embedded power basis.
    pub fn descend(&self) -> Cyclo {
        if self.is_rational() {
            return Cyclo {
                k: 1,
                c: vec![self.c[0].clone()],
            };
        }
        for d in divisors(self.k) {
            if d == self.k {
                break;
            }
            if d % 4 == 2 {
                continue; // same field as d/2, already tried
            }
            let phid = euler_phi(d) as usize;
            // basis vectors: embeddings of zeta_d^i, i < phi(d)
            let cols: Vec<Vec<Rat>> = (0..phid)
                .map(|i| Cyclo::root_of_unity(d, i as i64).embed(self.k).c)
                .collect();
            if let Some(x) = solve_rat_system(&cols, &self.c) {
                return Cyclo { k: d, c: x };
            }
        }
        self.clone()
    }

    /// Total order on values (used only for deterministic sorting); computed
    /// on the descended canonical form so it is compatible with `==`.
    pub fn canonical_cmp(&self, other: &Cyclo) -> Ordering {
        let a = self.descend();
        let b = other.descend();
        a.k.cmp(&b.k).then_with(|| a.c.cmp(&b.c))
    }

    /// Deterministic text key, stable across representations of one value.
    pub fn canonical_key(&self) -> String {
        self.descend().to_string()
    }

    /// Multiplicative order when the value is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = lcm_u32(2, self.k);
        let mut p = self.clone();
        for ord in 1..=bound {
            if ord > 1 {
                p = &p * self;
            }
            if p.is_one() {
                return Some(ord);
            }
        }
        None
    }

    /// Writes the value as q * zeta_n^j with q rational, when possible.
    pub fn as_rat_times_root(&self) -> Option<(Rat, u32, u32)> {
        if let Some(q) = self.as_rat() {
            return Some((q, 1, 0));
        }
        let n = lcm_u32(2, self.k);
        let zeta = Cyclo::root_of_unity(n, 1);
        let mut zpow = Cyclo::one();
        for j in 0..n {
            if j > 0 {
                zpow = &zpow * &zeta;
            }
            if let Some(q) = (self * &zpow.inv().unwrap()).as_rat() {
                return Some((q, n, j));
            }
        }
        None
    }

    /// Exact e-th root. Succeeds on rationals with perfect e-th power
    /// numerator and denominator, on rational multiples of roots of unity
    /// (the root may live in a larger cyclotomic field when `extend` is
    /// set), and, for e = 2, on arbitrary rationals via Gauss sums.
    pub fn nth_root(&self, e: u32, extend: bool) -> Option<Cyclo> {
        assert!(e >= 1);
        if self.is_zero() {
            return Some(Cyclo::zero());
        }
        if e == 1 {
            return Some(self.clone());
        }
        let (q, n, j) = self.as_rat_times_root()?;
        // root-of-unity part: zeta_n^j has e-th root zeta_{ne}^j
        let sign_neg = q.is_negative();
        let qa = q.abs();
        let mut root: Option<Cyclo> = rational_root(&qa, e).map(Cyclo::from_rat);
        if root.is_none() && e == 2 {
            root = sqrt_rational(&qa);
        }
        let mut r = root?;
        if sign_neg {
            // fold the sign into the root-of-unity part: -1 = zeta_{2e}^e
            r = &r * &Cyclo::root_of_unity(2 * e, 1);
        }
        if j != 0 {
            r = &r * &Cyclo::root_of_unity(n * e, j as i64);
        }
        let r = r.descend();
        if !extend && !subfield_of(r.conductor(), self.k) {
            return None;
        }
        debug_assert!(r.pow(e as i64).unwrap() == *self);
        Some(r)
    }

    /// All e-th roots of this value that lie in Q(zeta_bound_k) style
    /// extensions: the principal root times the in-field e-th roots of unity.
    pub fn nth_roots_extended(&self, e: u32) -> Vec<Cyclo> {
        match self.nth_root(e, true) {
            None => vec![],
            Some(r) => {
                let zeta = Cyclo::root_of_unity(e, 1);
                let mut out = Vec::with_capacity(e as usize);
                let mut w = Cyclo::one();
                for _ in 0..e {
                    out.push((&r * &w).descend());
                    w = &w * &zeta;
                }
                out
            }
        }
    }
}

/// Is Q(zeta_a) a subfield of Q(zeta_b)?
pub fn subfield_of(a: u32, b: u32) -> bool {
    field_conductor(a) % 4 != 2 && field_conductor(b) % field_conductor(a) == 0
}

/// Exact e-th root of a nonnegative rational, when numerator and denominator
/// are perfect e-th powers.
fn rational_root(q: &Rat, e: u32) -> Option<Rat> {
    let n = q.numer().nth_root(e);
    let d = q.denom().nth_root(e);
    if &num_traits::pow::pow(n.clone(), e as usize) == q.numer()
        && &num_traits::pow::pow(d.clone(), e as usize) == q.denom()
    {
        Some(Rat::new(n, d).unwrap())
    } else {
        None
    }
}

/// Square root of a positive rational as a cyclotomic number, via quadratic
/// Gauss sums: for an odd prime p, sum_a (a|p) zeta_p^a squares to (-1|p) p.
fn sqrt_rational(q: &Rat) -> Option<Cyclo> {
    let sq = |n: &BigInt| -> Option<(BigInt, Vec<u64>)> {
        // n = s^2 * prod(primes), primes squarefree, by trial division
        let mut n = n.clone();
        let mut s = BigInt::from(1);
        let mut primes = Vec::new();
        let mut p = BigInt::from(2);
        let limit = BigInt::from(1_000_000u64);
        while &p * &p <= n {
            if p > limit {
                return None; // refuse to factor big leftovers
            }
            let mut m = 0u32;
            while (&n % &p).is_zero() {
                n = &n / &p;
                m += 1;
            }
            if m > 0 {
                s *= num_traits::pow::pow(p.clone(), (m / 2) as usize);
                if m % 2 == 1 {
                    primes.push(p.to_u64().unwrap());
                }
            }
            p += 1;
        }
        if n > BigInt::from(1) {
            if n > limit {
                return None;
            }
            primes.push(n.to_u64().unwrap());
        }
        Some((s, primes))
    };
    let (sn, pn) = sq(q.numer())?;
    let (sd, pd) = sq(q.denom())?;
    // sqrt(q) = (sn/sd) * prod sqrt(p in pn) * prod (1/sqrt(p in pd))
    let mut acc = Cyclo::from_rat(Rat::new(sn, sd).unwrap());
    let mut fold = |p: u64, invert: bool| -> Result<()> {
        let r = sqrt_prime(p as u32);
        if invert {
            acc = &acc * &r.inv()?;
        } else {
            acc = &acc * &r;
        }
        Ok(())
    };
    for p in pn {
        fold(p, false).ok()?;
    }
    for p in pd {
        fold(p, true).ok()?;
    }
    debug_assert!(acc.pow(2).unwrap() == Cyclo::from_rat(q.clone()));
    Some(acc.descend())
}

/// sqrt(p) for a prime p, as an element of a cyclotomic field.
fn sqrt_prime(p: u32) -> Cyclo {
    if p == 2 {
        // zeta_8 + zeta_8^-1 = sqrt(2)
        let z = Cyclo::root_of_unity(8, 1);
        return &z + &z.pow(-1).unwrap();
    }
    // Gauss sum g = sum_{a=1}^{p-1} (a|p) zeta_p^a, g^2 = (-1)^((p-1)/2) p
    let mut g = Cyclo::zero();
    for a in 1..p {
        let mut legendre = 1i64;
        // Euler's criterion by repeated squaring mod p
        let mut base = a as u64 % p as u64;
        let mut e = (p as u64 - 1) / 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        if acc == p as u64 - 1 {
            legendre = -1;
        }
        let term = Cyclo::root_of_unity(p, a as i64);
        g = if legendre == 1 {
            &g + &term
        } else {
            &g - &term
        };
    }
    if p % 4 == 1 {
        g
    } else {
        // g^2 = -p, so sqrt(p) = g / i with i = zeta_4
        (&g * &Cyclo::root_of_unity(4, 1).inv().unwrap()).descend()
    }
}

/// Solve sum_i x_i * cols[i] = target over Q; all columns same length.
fn solve_rat_system(cols: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let rows = target.len();
    let ncols = cols.len();
    // augmented matrix
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) {
            m.swap(r, pr);
            let inv = m[r][c].inv().unwrap();
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..=ncols {
                        let t = &m[i][j] - &(&f * &m[r][j]);
                        m[i][j] = t;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
    }
    // consistency: rows beyond rank must have zero rhs
    for i in r..rows {
        if !m[i][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); ncols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][ncols].clone();
    }
    Some(x)
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.k == other.k {
            return self.c == other.c;
        }
        let (a, b, _) = Cyclo::common(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclo {}

impl<'a> Add for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        if self.k == rhs.k {
            let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect();
            return Cyclo { k: self.k, c };
        }
        let (a, b, k) = Cyclo::common(self, rhs);
        Cyclo {
            k,
            c: a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl<'a> Neg for &'a Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            k: self.k,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl<'a> Mul for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        if self.k == rhs.k {
            let prod = pv::mul(&pv::trim(self.c.clone()), &pv::trim(rhs.c.clone()));
            return Cyclo::make(self.k, prod);
        }
        let (a, b, k) = Cyclo::common(self, rhs);
        let prod = pv::mul(&pv::trim(a.c), &pv::trim(b.c));
        Cyclo::make(k, prod)
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        &self + &rhs
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        &self - &rhs
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        &self * &rhs
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.descend();
        if let Some(r) = v.as_rat() {
            return write!(f, "{}", r);
        }
        let mut first = true;
        for (i, coef) in v.c.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "zeta{}^{}", v.k, i)?;
            } else {
                write!(f, "{}*zeta{}^{}", mag, v.k, i)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
