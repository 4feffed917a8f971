use crate::decomp::{
    chains_equivalent, decompose_laurent, decompose_poly, is_indecomposable_laurent,
    is_indecomposable_poly, laurent_right_factors, right_factor, DecompChain,
};
use crate::error::{Error, Result};
use crate::num::{divisors, Cyclo};
use crate::poly::{Laurent, Mobius, RatFunc};
use std::collections::HashSet;

/// A chain of maximal decompositions, each obtained from the previous by
/// replacing two adjacent factors with another pair having the same
/// composition. `moves[k]` is the junction index changed between states
/// k and k+1 (0 = innermost pair).
#[derive(Clone, Debug)]
pub struct MoveChain {
    pub states: Vec<DecompChain>,
    pub moves: Vec<usize>,
}

impl MoveChain {
    /// Re-verify that every step replaces exactly one adjacent pair and
    /// preserves the composite.
    pub fn verify(&self) -> Result<bool> {
        if self.states.len() != self.moves.len() + 1 {
            return Ok(false);
        }
        let composite = self.states[0].composite()?;
        for (k, step) in self.moves.iter().enumerate() {
            let s = &self.states[k];
            let t = &self.states[k + 1];
            if s.len() != t.len() {
                return Ok(false);
            }
            if t.composite()? != composite {
                return Ok(false);
            }
            for i in 0..s.len() {
                if i != *step && i != *step + 1 && s.factors()[i] != t.factors()[i] {
                    return Ok(false);
                }
            }
            let su = s.factors()[*step + 1].compose(&s.factors()[*step])?;
            let tu = t.factors()[*step + 1].compose(&t.factors()[*step])?;
            if su != tu {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug)]
pub enum MoveSearch {
    Found(MoveChain),
    /// The depth or state bound was exhausted; not a proof of inequivalence.
    NotWithinBounds,
}

/// All maximal two-factor decompositions (outer, inner) of a two-pole
/// function, up to equivalence.
pub fn maximal_pairs(f: &RatFunc) -> Result<Vec<(RatFunc, RatFunc)>> {
    let mut out = Vec::new();
    if let Some(p) = f.as_poly() {
        let n = p.degree();
        for d in divisors(n as u32) {
            let d = d as usize;
            if d <= 1 || d >= n {
                continue;
            }
            if let Some((g, h)) = right_factor(&p, d) {
                if is_indecomposable_poly(&g) && is_indecomposable_poly(&h) {
                    out.push((RatFunc::from_poly(g), RatFunc::from_poly(h)));
                }
            }
        }
        return Ok(out);
    }
    let Some(l) = f.as_laurent() else {
        return Err(Error::domain(
            "move generation expects polynomial or Laurent composites",
        ));
    };
    if l.min_exp().map_or(false, |e| e <= 0) && l.max_exp().map_or(false, |e| e <= 0) {
        // pole only at zero: reflect to the standard orientation
        let refl = l.twist_inv(&Cyclo::one());
        let inv = Mobius::inversion(Cyclo::one());
        for (g, h) in maximal_pairs(&RatFunc::from_laurent(&refl))? {
            out.push((g, crate::poly::pre_mobius(&h, &inv)));
        }
        return Ok(out);
    }
    let deg = l.degree();
    // inner power maps
    let egcd = l.exp_gcd();
    for p in primes_of(egcd) {
        if p >= deg {
            continue;
        }
        let m = l.decompress_power(p);
        if is_indecomposable_laurent(&m) {
            out.push((
                RatFunc::from_laurent(&m),
                RatFunc::from_poly(crate::poly::Poly::monomial(Cyclo::one(), p as usize)),
            ));
        }
    }
    // polynomial outer factors
    let pg = gcd_i64(l.pole_inf(), l.pole_zero());
    for k in divisors(pg as u32) {
        let k = k as i64;
        if k < 2 {
            continue;
        }
        for (outer, inner) in laurent_right_factors(&l, k) {
            if is_indecomposable_poly(&outer) && is_indecomposable_laurent(&inner) {
                out.push((RatFunc::from_poly(outer), RatFunc::from_laurent(&inner)));
            }
        }
    }
    Ok(out)
}

fn primes_of(n: i64) -> Vec<i64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// Breadth-first search over maximal chains modulo equivalence, expanding
/// each adjacent pair into its alternative double decompositions. Depth
/// exhaustion is reported as a distinct outcome.
pub fn weak_equivalence(
    d1: &DecompChain,
    d2: &DecompChain,
    depth: usize,
    state_cap: usize,
) -> Result<MoveSearch> {
    if d1.composite()? != d2.composite()? {
        return Err(Error::domain(
            "weak equivalence requires chains of the same function",
        ));
    }
    if chains_equivalent(d1, d2) {
        return Ok(MoveSearch::Found(MoveChain {
            states: vec![d1.clone()],
            moves: vec![],
        }));
    }
    let mut visited: HashSet<String> = HashSet::new();
    visited.insert(d1.canonical_key());
    // frontier holds (chain, path-of-states, path-of-moves)
    let mut frontier = vec![(d1.clone(), vec![d1.clone()], Vec::<usize>::new())];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (chain, states, moves) in frontier {
            for i in 0..chain.len() - 1 {
                let pair_composite = chain.factors()[i + 1].compose(&chain.factors()[i])?;
                for (g, h) in maximal_pairs(&pair_composite)? {
                    let mut factors = chain.factors().to_vec();
                    factors[i] = h;
                    factors[i + 1] = g;
                    let cand = DecompChain::new(factors)?;
                    let key = cand.canonical_key();
                    if visited.contains(&key) {
                        continue;
                    }
                    if visited.len() >= state_cap {
                        return Ok(MoveSearch::NotWithinBounds);
                    }
                    visited.insert(key);
                    let mut st = states.clone();
                    st.push(cand.clone());
                    let mut mv = moves.clone();
                    mv.push(i);
                    if chains_equivalent(&cand, d2) {
                        return Ok(MoveSearch::Found(MoveChain {
                            states: st,
                            moves: mv,
                        }));
                    }
                    next.push((cand, st, mv));
                }
            }
        }
        if next.is_empty() {
            return Ok(MoveSearch::NotWithinBounds);
        }
        frontier = next;
    }
    Ok(MoveSearch::NotWithinBounds)
}

/// Full first-Ritt report for one function in the two-pole class.
#[derive(Clone, Debug)]
pub struct FirstRittReport {
    pub chains: Vec<DecompChain>,
    pub lengths_equal: bool,
    pub degree_multisets_equal: bool,
    /// Pairwise connectivity by move chains within the given depth.
    pub connected: bool,
    /// Edges of the move graph actually exhibited: (from, to, moves used).
    pub edges: Vec<(usize, usize, usize)>,
}

/// Enumerate all maximal chains and check the first-Ritt behavior: equal
/// lengths and pairwise weak equivalence within the depth bound.
pub fn first_ritt_check(f: &RatFunc, depth: usize, state_cap: usize) -> Result<FirstRittReport> {
    let chains: Vec<DecompChain> = if let Some(p) = f.as_poly() {
        decompose_poly(&p)?
    } else if let Some(l) = f.as_laurent() {
        decompose_laurent(&l)?
    } else {
        let nf = super::r2::r2_normalize(f)?;
        decompose_laurent(&nf.laurent)?.into_iter().collect()
    };
    let lengths_equal = chains.windows(2).all(|w| w[0].len() == w[1].len());
    let degree_multisets_equal = chains
        .windows(2)
        .all(|w| w[0].degree_multiset() == w[1].degree_multiset());
    let mut connected = true;
    let mut edges = Vec::new();
    for i in 1..chains.len() {
        match weak_equivalence(&chains[0], &chains[i], depth, state_cap)? {
            MoveSearch::Found(mc) => edges.push((0, i, mc.moves.len())),
            MoveSearch::NotWithinBounds => {
                connected = false;
            }
        }
    }
    Ok(FirstRittReport {
        chains,
        lengths_equal,
        degree_multisets_equal,
        connected,
        edges,
    })
}

/// A Laurent polynomial wrapper for convenience in tests and the CLI.
pub fn chains_of_laurent(l: &Laurent) -> Result<Vec<DecompChain>> {
    decompose_laurent(l)
}
