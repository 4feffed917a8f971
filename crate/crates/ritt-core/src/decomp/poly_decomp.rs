use super::chain::{poly_factor, DecompChain};
use super::rightfactor::right_factor;
use crate::error::{Error, Result};
use crate::num::divisors;
use crate::poly::Poly;

/// A polynomial is indecomposable iff it has no right factor of any proper
/// degree.
pub fn is_indecomposable_poly(p: &Poly) -> bool {
    let Some(n) = p.deg() else { return false };
    if n <= 1 {
        return false; // degree-one maps are units, not factors
    }
    for d in divisors(n as u32) {
        let d = d as usize;
        if d > 1 && d < n && right_factor(p, d).is_some() {
            return false;
        }
    }
    true
}

/// All maximal decompositions of a polynomial, up to equivalence. Every
/// returned chain recomposes to the input; completeness comes from
/// exhausting the divisors of the degree for normalized right factors,
/// which are unique per degree for polynomials.
pub fn decompose_poly(p: &Poly) -> Result<Vec<DecompChain>> {
    let n = p
        .deg()
        .ok_or_else(|| Error::domain("cannot decompose the zero polynomial"))?;
    if n == 0 {
        return Err(Error::domain("cannot decompose a constant"));
    }
    if n == 1 {
        return Ok(vec![DecompChain::single(poly_factor(p.clone()))]);
    }
    let mut chains = Vec::new();
    let mut decomposable = false;
    for d in divisors(n as u32) {
        let d = d as usize;
        if d <= 1 || d >= n {
            continue;
        }
        if let Some((g, h)) = right_factor(p, d) {
            decomposable = true;
            if !is_indecomposable_poly(&h) {
                continue; // maximal chains start with an indecomposable factor
            }
            for outer in decompose_poly(&g)? {
                chains.push(outer.extend_inner(poly_factor(h.clone()))?);
            }
        }
    }
    if !decomposable {
        return Ok(vec![DecompChain::single(poly_factor(p.clone()))]);
    }
    chains.sort_by_key(|c| c.order_key());
    Ok(chains)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::chebyshev;

    #[test]
    fn power_sum_two_chains() {
        // z^6 + 1: (z^2+1) o z^3 and (z^3+1) o z^2
        let p = Poly::from_int_coeffs(&[1, 0, 0, 0, 0, 0, 1]);
        let chains = decompose_poly(&p).unwrap();
        assert_eq!(chains.len(), 2);
        for c in &chains {
            assert_eq!(c.composite().unwrap(), poly_factor(p.clone()));
            assert_eq!(c.degree_multiset(), vec![2, 3]);
        }
    }

    #[test]
    fn chebyshev_six() {
        use super::super::chain::chains_equivalent;
        let chains = decompose_poly(&chebyshev(6)).unwrap();
        assert_eq!(chains.len(), 2);
        for c in &chains {
            assert_eq!(c.composite().unwrap(), poly_factor(chebyshev(6)));
        }
        // the two chains are equivalent to (T_2, T_3) and (T_3, T_2)
        let t23 =
            DecompChain::new(vec![poly_factor(chebyshev(3)), poly_factor(chebyshev(2))]).unwrap();
        let t32 =
            DecompChain::new(vec![poly_factor(chebyshev(2)), poly_factor(chebyshev(3))]).unwrap();
        assert!(chains.iter().any(|c| chains_equivalent(c, &t23)));
        assert!(chains.iter().any(|c| chains_equivalent(c, &t32)));
    }

    #[test]
    fn prime_degree_single_chain() {
        let p = Poly::from_int_coeffs(&[4, 1, 0, 0, 0, 2]); // degree 5
        let chains = decompose_poly(&p).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].len(), 1);
    }

    #[test]
    fn t12_chains_all_length_three() {
        let chains = decompose_poly(&chebyshev(12)).unwrap();
        assert!(!chains.is_empty());
        for c in &chains {
            assert_eq!(c.len(), 3);
            assert_eq!(c.degree_multiset(), vec![2, 2, 3]);
            assert_eq!(c.composite().unwrap(), poly_factor(chebyshev(12)));
        }
    }
}
