use crate::error::{Error, Result};
use crate::expr::print_ratfunc;
use crate::num::Cyclo;
use crate::poly::{linalg, post_mobius, pre_mobius, Laurent, Mobius, Poly, RatFunc};

/// Ordered decomposition F_r o ... o F_1. Factors are stored innermost
/// first: `factors[0]` is applied first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompChain {
    factors: Vec<RatFunc>,
}

impl DecompChain {
    pub fn new(factors: Vec<RatFunc>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::domain("empty decomposition chain"));
        }
        for f in &factors {
            if f.is_constant() {
                return Err(Error::domain("constant factor in chain"));
            }
        }
        Ok(DecompChain { factors })
    }

    pub fn single(f: RatFunc) -> Self {
        DecompChain { factors: vec![f] }
    }

    /// Innermost-first factor list.
    pub fn factors(&self) -> &[RatFunc] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Composite F_r o ... o F_1.
    pub fn composite(&self) -> Result<RatFunc> {
        let mut acc = self.factors[0].clone();
        for f in &self.factors[1..] {
            acc = f.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Factor degrees, innermost first.
    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.degree()).collect()
    }

    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Append an outer factor.
    pub fn extend_outer(&self, f: RatFunc) -> Result<Self> {
        let mut v = self.factors.clone();
        v.push(f);
        DecompChain::new(v)
    }

    /// Prepend an inner factor.
    pub fn extend_inner(&self, f: RatFunc) -> Result<Self> {
        let mut v = vec![f];
        v.extend(self.factors.iter().cloned());
        DecompChain::new(v)
    }

    /// Concatenate: self applied after `inner`.
    pub fn after(&self, inner: &DecompChain) -> Result<Self> {
        let mut v = inner.factors.clone();
        v.extend(self.factors.iter().cloned());
        DecompChain::new(v)
    }

    /// Deterministic text key of the canonical form, for visited sets.
    pub fn canonical_key(&self) -> String {
        let c = self.canonicalize();
        c.factors
            .iter()
            .map(|f| print_ratfunc(f))
            .collect::<Vec<_>>()
            .join(" | ")
    }

    /// Tie-break key: factor degree sequence, then the printed form.
    pub fn order_key(&self) -> (Vec<usize>, String) {
        (self.degrees(), self.canonical_key())
    }

    /// Push conjugators right to left: each factor except the outermost is
    /// replaced by its normalized representative (inversion-reflected when
    /// it has no pole at infinity, then scaled monic with zero constant
    /// term), the correction being absorbed by the next factor out.
    pub fn canonicalize(&self) -> DecompChain {
        let mut factors = self.factors.clone();
        for i in 0..factors.len() - 1 {
            if let Some(mu) = normalizing_mobius(&factors[i]) {
                factors[i] = post_mobius(&mu, &factors[i]);
                factors[i + 1] = pre_mobius(&factors[i + 1], &mu.inverse());
            }
        }
        DecompChain { factors }
    }
}

/// A Mobius map sending the factor to a normal form: Laurent-like factors
/// become monic with zero constant term after an optional z -> 1/z
/// reflection (applied on the output side this is 1/F, used when F has a
/// pole at 0 but not at infinity).
fn normalizing_mobius(f: &RatFunc) -> Option<Mobius> {
    let mut work = f.clone();
    let mut pre = Mobius::identity();
    if let Some(l) = work.as_laurent() {
        if l.pole_inf() == 0 && l.pole_zero() > 0 {
            // no pole at infinity: reflect through 1/F to move it there
            let inv = Mobius::inversion(Cyclo::one());
            work = post_mobius(&inv, &work);
            pre = inv;
        }
    }
    let l = work.as_laurent()?;
    let lc = l.lc_inf();
    if lc.is_zero() {
        return None;
    }
    let a = lc.inv().unwrap();
    let b = -&(&l.coeff(0) * &a);
    Some(Mobius::affine(a, b).compose(&pre))
}

/// Solve G = mu o F for a degree-one mu, exactly. Unique when it exists.
pub fn solve_post_mobius(f: &RatFunc, g: &RatFunc) -> Option<Mobius> {
    // a f_n g_d + b f_d g_d - c f_n g_n - d f_d g_n = 0 as polynomials
    let fngd = f.num() * g.den();
    let fdgd = f.den() * g.den();
    let fngn = f.num() * g.num();
    let fdgn = f.den() * g.num();
    let deg = [&fngd, &fdgd, &fngn, &fdgn]
        .iter()
        .filter_map(|p| p.deg())
        .max()?;
    let mut rows = Vec::new();
    for i in 0..=deg {
        rows.push(vec![
            fngd.coeff(i),
            fdgd.coeff(i),
            -&fngn.coeff(i),
            -&fdgn.coeff(i),
        ]);
    }
    for v in linalg::kernel(&rows) {
        if let Ok(mu) = Mobius::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()) {
            if &post_mobius(&mu, f) == g {
                return Some(mu);
            }
        }
    }
    None
}

/// Factor-wise equivalence of two chains via degree-one conjugators.
pub fn chains_equivalent(c1: &DecompChain, c2: &DecompChain) -> bool {
    if c1.len() != c2.len() || c1.degrees() != c2.degrees() {
        return false;
    }
    let r = c1.len();
    let mut inner = Mobius::identity();
    for i in 0..r {
        let f_adj = pre_mobius(&c1.factors[i], &inner.inverse());
        if i == r - 1 {
            return f_adj == c2.factors[i];
        }
        match solve_post_mobius(&f_adj, &c2.factors[i]) {
            Some(mu) => inner = mu,
            None => return false,
        }
    }
    true
}

/// Helpers for wrapping exact factors.
pub fn poly_factor(p: Poly) -> RatFunc {
    RatFunc::from_poly(p)
}

pub fn laurent_factor(l: &Laurent) -> RatFunc {
    RatFunc::from_laurent(l)
}
