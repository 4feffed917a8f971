use super::r2::r2_normalize;
use crate::decomp::{inner_divide, is_indecomposable_laurent, laurent_right_factors, right_factor};
use crate::error::{Error, Result};
use crate::genus::{irreducibility, IrredVerdict};
use crate::num::divisors;
use crate::poly::RatFunc;

/// Verdict of the special-double-decomposition detector.
#[derive(Clone, Debug)]
pub enum SpecialVerdict {
    /// C, D indecomposable, the pair (A, B) reducible, and the exhaustive
    /// compatible-left-factor search failed.
    Special,
    /// An inner factor is decomposable.
    NotSpecialInnerDecomposable,
    /// The outer pair is irreducible.
    NotSpecialPairIrreducible,
    /// A compatible common left factor of degree > 1 exists.
    NotSpecialLeftFactor {
        u: RatFunc,
        a_t: RatFunc,
        b_t: RatFunc,
    },
}

fn indecomposable_in_r2(f: &RatFunc) -> Result<bool> {
    if f.degree() <= 1 {
        return Ok(false);
    }
    let nf = r2_normalize(f)?;
    Ok(is_indecomposable_laurent(&nf.laurent))
}

/// Enumerate compatible common left factors U (degree > 1) with
/// A = U o A~, B = U o B~ and A~ o C = B~ o D; polynomial sides are
/// searched through right factors and inner division, Laurent sides
/// through the Laurent splitting machinery.
fn find_left_factor(
    a: &RatFunc,
    c: &RatFunc,
    b: &RatFunc,
    d: &RatFunc,
) -> Result<Option<(RatFunc, RatFunc, RatFunc)>> {
    let na = a.degree();
    let nb = b.degree();
    let g = gcd(na, nb);
    let mut divs: Vec<usize> = divisors(g as u32).iter().map(|&x| x as usize).collect();
    divs.reverse();

    // candidates (U, A~) for each degree u
    let candidates_a = |u: usize| -> Vec<(RatFunc, RatFunc)> {
        let mut out = Vec::new();
        if let Some(pa) = a.as_poly() {
            if let Some((ua, at)) = right_factor(&pa, na / u) {
                out.push((RatFunc::from_poly(ua), RatFunc::from_poly(at)));
            }
        } else if let Some(la) = a.as_laurent() {
            let k = u as i64;
            if la.pole_inf() > 0 && la.pole_zero() > 0 {
                for (outer, inner) in laurent_right_factors(&la, k) {
                    out.push((RatFunc::from_poly(outer), RatFunc::from_laurent(&inner)));
                }
            }
        }
        out
    };

    for u in divs {
        if u <= 1 {
            break;
        }
        for (ucand, at) in candidates_a(u) {
            // all B~ with B = U o B~
            let mut bts: Vec<RatFunc> = Vec::new();
            if let (Some(up), Some(bp)) = (ucand.as_poly(), b.as_poly()) {
                bts.extend(inner_divide(&up, &bp).into_iter().map(RatFunc::from_poly));
            } else if let Some(lb) = b.as_laurent() {
                // enumerate right factors of B of matching degree and check
                if lb.pole_inf() > 0 && lb.pole_zero() > 0 {
                    for (outer, inner) in laurent_right_factors(&lb, u as i64) {
                        let _ = outer;
                        let cand = RatFunc::from_laurent(&inner);
                        if let Ok(comp) = ucand.compose(&cand) {
                            if &comp == b {
                                bts.push(cand);
                            }
                        }
                    }
                }
            }
            for bt in bts {
                let lhs = at.compose(c)?;
                let rhs = bt.compose(d)?;
                if lhs == rhs {
                    return Ok(Some((ucand, at, bt)));
                }
            }
        }
    }
    Ok(None)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Detect special double decompositions: C, D indecomposable, the pair
/// (A, B) reducible, and no common left factor of degree > 1 satisfying the
/// compatibility identity. Undecidable reducibility within the implemented
/// criteria is a bound error, never a silent verdict.
pub fn detect_special(
    a: &RatFunc,
    c: &RatFunc,
    b: &RatFunc,
    d: &RatFunc,
) -> Result<SpecialVerdict> {
    if a.compose(c)? != b.compose(d)? {
        return Err(Error::domain("compositions differ"));
    }
    if !indecomposable_in_r2(c)? || !indecomposable_in_r2(d)? {
        return Ok(SpecialVerdict::NotSpecialInnerDecomposable);
    }
    // a compatible left factor immediately settles non-specialness
    if let Some((u, a_t, b_t)) = find_left_factor(a, c, b, d)? {
        return Ok(SpecialVerdict::NotSpecialLeftFactor { u, a_t, b_t });
    }
    // reducibility of the outer pair
    let verdict = match (a.as_poly(), b.as_poly()) {
        (Some(pa), Some(pb)) => irreducibility(&pa, &pb, None)?,
        _ => IrredVerdict::Unknown,
    };
    match verdict {
        IrredVerdict::Irreducible { .. } => Ok(SpecialVerdict::NotSpecialPairIrreducible),
        IrredVerdict::Reducible { .. } => Ok(SpecialVerdict::Special),
        IrredVerdict::Unknown => Err(Error::bound(
            "reducibility of the outer pair is undecidable within the implemented criteria",
        )),
    }
}
