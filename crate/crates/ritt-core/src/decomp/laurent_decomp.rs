use super::chain::{laurent_factor, DecompChain};
use super::poly_decomp::{decompose_poly, is_indecomposable_poly};
use crate::error::{Error, Result};
use crate::num::{divisors, lcm_u32, subfield_of, Cyclo};
use crate::poly::{Laurent, Mobius, Poly};

fn laurent_field(l: &Laurent) -> u32 {
    let mut k = 1;
    for (_, c) in l.terms() {
        k = lcm_u32(k, c.descend().conductor());
    }
    k
}

/// The largest d with L = M o z^d, together with M.
pub fn inner_power(l: &Laurent) -> Result<(Laurent, i64)> {
    if l.is_constant() {
        return Err(Error::domain("inner_power of a constant"));
    }
    let d = l.exp_gcd();
    debug_assert!(d >= 1);
    Ok((l.decompress_power(d), d))
}

/// Right factors L1 of a genuinely two-poled Laurent polynomial with a
/// polynomial outer factor of degree k: pole orders split as (a/k, b/k),
/// the infinity-side principal part is solved triangularly, the zero-side
/// leading coefficient is a k-th root, and the outer polynomial is peeled
/// off the top. Normalization: L1 monic at infinity with zero constant
/// term. Solutions with coefficients outside the field of L are discarded.
pub fn laurent_right_factors(l: &Laurent, k: i64) -> Vec<(Poly, Laurent)> {
    let a = l.pole_inf();
    let b = l.pole_zero();
    debug_assert!(a > 0 && b > 0);
    if k < 2 || a % k != 0 || b % k != 0 {
        return vec![];
    }
    let m1 = a / k;
    let m2 = b / k;
    let field = laurent_field(l);
    let lc = l.lc_inf();
    let lm = l.scale(&lc.inv().unwrap());
    let k_inv = Cyclo::from_int(k).inv().unwrap();

    // infinity-side principal part, triangular
    let mut top = Laurent::monomial(Cyclo::one(), m1);
    for j in 1..m1 {
        let cur = top.pow(k as u32);
        let delta = &lm.coeff(a - j) - &cur.coeff(a - j);
        let c = &delta * &k_inv;
        if !c.is_zero() {
            top = &top + &Laurent::monomial(c, m1 - j);
        }
    }

    // zero-side leading coefficient: k-th roots of the bottom coefficient
    let bottom_target = lm.coeff(-b);
    let mut out = Vec::new();
    for root in bottom_target.nth_roots_extended(k as u32) {
        if root.is_zero() {
            continue;
        }
        if !subfield_of(root.descend().conductor(), field) {
            continue;
        }
        let mut cand = &top + &Laurent::monomial(root.clone(), -m2);
        let diag = &(&Cyclo::from_int(k) * &root.pow(k - 1).unwrap())
            .inv()
            .unwrap()
            * &Cyclo::one();
        for j in 1..m2 {
            let cur = cand.pow(k as u32);
            let delta = &lm.coeff(-b + j) - &cur.coeff(-b + j);
            let c = &delta * &diag;
            if !c.is_zero() {
                cand = &cand + &Laurent::monomial(c, -m2 + j);
            }
        }
        // peel the outer polynomial off the top exponents
        let mut rest = l.clone();
        let mut coeffs = vec![Cyclo::zero(); k as usize + 1];
        let mut ok = true;
        for i in (0..=k).rev() {
            let ci = rest.coeff(i * m1);
            coeffs[i as usize] = ci.clone();
            if !ci.is_zero() {
                rest = &rest - &cand.pow(i as u32).scale(&ci);
            }
            if rest.max_exp().map_or(false, |e| e >= i * m1) {
                ok = false;
                break;
            }
        }
        if !ok || !rest.is_zero() {
            continue;
        }
        let outer = Poly::new(coeffs);
        debug_assert_eq!(cand.compose_poly_outer(&outer), *l);
        out.push((outer, cand));
    }
    out
}

/// Indecomposability for Laurent polynomials with both poles present.
pub fn is_indecomposable_laurent(l: &Laurent) -> bool {
    let deg = l.degree();
    if deg <= 1 {
        return false;
    }
    if l.pole_zero() == 0 || l.pole_inf() == 0 {
        // polynomial-shaped; defer to the polynomial test after normalizing
        let p = if l.pole_zero() == 0 {
            l.as_poly().unwrap()
        } else {
            l.twist_inv(&Cyclo::one()).as_poly().unwrap()
        };
        return is_indecomposable_poly(&p);
    }
    if l.exp_gcd() > 1 {
        return false;
    }
    let g = gcd_i64(l.pole_inf(), l.pole_zero());
    for k in divisors(g as u32) {
        let k = k as i64;
        if k >= 2 && !laurent_right_factors(l, k).is_empty() {
            return false;
        }
    }
    true
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
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

/// All maximal decompositions of a Laurent polynomial up to equivalence.
/// Rightmost factors are exhausted along the two shapes every decomposition
/// of a two-poled function is equivalent to: a power map inside a Laurent
/// polynomial, or a Laurent polynomial inside a polynomial.
pub fn decompose_laurent(l: &Laurent) -> Result<Vec<DecompChain>> {
    if l.is_constant() {
        return Err(Error::domain("cannot decompose a constant"));
    }
    if l.min_exp().map_or(false, |e| e >= 0) {
        // polynomial
        return decompose_poly(&l.as_poly().unwrap());
    }
    if l.max_exp().map_or(false, |e| e <= 0) {
        // pole only at 0: reflect the innermost variable through 1/z
        let refl = l.twist_inv(&Cyclo::one());
        let chains = decompose_laurent(&refl)?;
        let inv = Mobius::inversion(Cyclo::one());
        return chains
            .into_iter()
            .map(|c| {
                let mut fs: Vec<_> = c.factors().to_vec();
                fs[0] = crate::poly::pre_mobius(&fs[0], &inv);
                DecompChain::new(fs)
            })
            .collect();
    }

    let deg = l.degree();
    if deg == 1 {
        return Ok(vec![DecompChain::single(laurent_factor(l))]);
    }
    let mut chains = Vec::new();
    let mut decomposable = false;

    // inner power maps: L = M o z^p for primes p dividing the support gcd
    let g = l.exp_gcd();
    for p in primes_of(g) {
        if p >= deg {
            continue;
        }
        decomposable = true;
        let m = l.decompress_power(p);
        for outer in decompose_laurent(&m)? {
            chains.push(outer.extend_inner(laurent_factor(&Laurent::monomial(Cyclo::one(), p)))?);
        }
    }

    // Laurent inner factors under a polynomial outer factor
    let pg = gcd_i64(l.pole_inf(), l.pole_zero());
    for k in divisors(pg as u32) {
        let k = k as i64;
        if k < 2 {
            continue;
        }
        for (outer, l1) in laurent_right_factors(l, k) {
            decomposable = true;
            if !is_indecomposable_laurent(&l1) {
                continue;
            }
            for oc in decompose_poly(&outer)? {
                chains.push(oc.extend_inner(laurent_factor(&l1))?);
            }
        }
    }

    if !decomposable {
        return Ok(vec![DecompChain::single(laurent_factor(l))]);
    }
    // distinct rightmost normal forms give inequivalent chains; dedup only
    // identical keys produced by overlapping recursions
    let mut seen = std::collections::HashSet::new();
    let mut unique = Vec::new();
    for c in chains {
        if seen.insert(c.canonical_key()) {
            unique.push(c);
        }
    }
    unique.sort_by_key(|c| c.order_key());
    Ok(unique)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::laurent_d;

    #[test]
    fn inner_power_examples() {
        // z^4 + z^-2 -> (z^2 + z^-1, 2)
        let l = Laurent::from_terms([(4, Cyclo::one()), (-2, Cyclo::one())]);
        let (m, d) = inner_power(&l).unwrap();
        assert_eq!(d, 2);
        assert_eq!(
            m,
            Laurent::from_terms([(2, Cyclo::one()), (-1, Cyclo::one())])
        );
        // D_6 -> (D_1, 6)
        let (m, d) = inner_power(&laurent_d(6)).unwrap();
        assert_eq!(d, 6);
        assert_eq!(m, laurent_d(1));
        // z + 1 -> (z + 1, 1)
        let l = Laurent::from_terms([(1, Cyclo::one()), (0, Cyclo::one())]);
        let (m, d) = inner_power(&l).unwrap();
        assert_eq!(d, 1);
        assert_eq!(m, l);
    }

    #[test]
    fn cube_sum_two_shapes() {
        // z^3 + z^-3: (z + 1/z) o z^3 and (z^3 - 3z) o (z + 1/z)
        let l = Laurent::from_terms([(3, Cyclo::one()), (-3, Cyclo::one())]);
        let chains = decompose_laurent(&l).unwrap();
        assert_eq!(chains.len(), 2);
        let mut multisets: Vec<Vec<usize>> = chains.iter().map(|c| c.degrees()).collect();
        multisets.sort();
        assert_eq!(multisets, vec![vec![2, 3], vec![3, 2]]);
        for c in &chains {
            assert_eq!(c.composite().unwrap(), laurent_factor(&l));
        }
    }

    #[test]
    fn prime_degree_laurent() {
        // z + 1/z + 1 has degree 2: single chain
        let l = Laurent::from_terms([(1, Cyclo::one()), (0, Cyclo::one()), (-1, Cyclo::one())]);
        let chains = decompose_laurent(&l).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].len(), 1);
    }

    #[test]
    fn d6_chains() {
        let chains = decompose_laurent(&laurent_d(6)).unwrap();
        for c in &chains {
            assert_eq!(c.composite().unwrap(), laurent_factor(&laurent_d(6)));
            assert_eq!(c.len(), 3);
        }
        // chains include a pure-power shape (D_1 outermost) and
        // Chebyshev-shaped ones
        let has_power_shape = chains.iter().any(|c| {
            c.degrees()[0] == 2 && c.degrees()[1] == 3 || c.degrees()[0] == 3 && c.degrees()[1] == 2
        });
        assert!(has_power_shape);
        assert!(chains.len() >= 3);
    }

    #[test]
    fn asymmetric_poles() {
        // L = (z + 1/z)^2 o z ... build L = D-ish with poles (4, 2):
        // (z^2 + 1/z)^2 = z^4 + 2z + 1/z^2
        let inner = Laurent::from_terms([(2, Cyclo::one()), (-1, Cyclo::one())]);
        let l = inner.pow(2);
        let chains = decompose_laurent(&l).unwrap();
        assert!(!chains.is_empty());
        for c in &chains {
            assert_eq!(c.composite().unwrap(), laurent_factor(&l));
        }
        // the square split must be found
        assert!(chains.iter().any(|c| c.degrees() == vec![3, 2]));
    }
}
