use crate::error::{Error, Result};
use crate::mono::{merge_labels, MonodromyTuple};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Right side of the genus-sum formula, purely from cycle types:
/// sum_j (2 - 2 g_j) = sum_i sum_{c1, c2} gcd(|c1|, |c2|) - (r - 2) n m.
pub fn genus_sum_rh0(f: &MonodromyTuple, g: &MonodromyTuple) -> Result<i64> {
    let (f, g) = merge_labels(f, g)?;
    let n = f.degree() as i64;
    let m = g.degree() as i64;
    let r = f.num_branches() as i64;
    let mut total: i64 = 0;
    for i in 0..f.num_branches() {
        for c1 in f.perms()[i].cycle_type() {
            for c2 in g.perms()[i].cycle_type() {
                total += gcd(c1, c2) as i64;
            }
        }
    }
    Ok(total - (r - 2) * n * m)
}

/// Genus of the curve A(x) - B(y) = 0 for an irreducible pair, from aligned
/// passports: -2g = gcd(m, n) - 1 + sum of s-terms. The alignment is a list
/// of (count, partition of A, partition of B) rows over the merged finite
/// branch set. Negative or non-integral output is surfaced as an error.
pub fn genus_pair_rh2(
    deg_a: usize,
    deg_b: usize,
    aligned: &[(usize, Vec<usize>, Vec<usize>)],
) -> Result<i64> {
    let mut s_sum: i64 = 0;
    for (count, pa, pb) in aligned {
        let q = pb.len();
        for &a in pa {
            s_sum += *count as i64 * super::sterm::s_term(a, q, pb).value;
        }
    }
    let rhs = gcd(deg_a, deg_b) as i64 - 1 + s_sum;
    if rhs % 2 != 0 {
        return Err(Error::Tuple(format!(
            "rh2 right side {rhs} is odd; passports are inconsistent"
        )));
    }
    let g = -rhs / 2;
    if g < 0 {
        return Err(Error::Tuple(format!(
            "rh2 yields negative genus {g}: invalid passports or a reducible pair"
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::passport::{merge_passports, passport_of_poly};
    use crate::mono::{builtin_tuple, fiber_product, BuiltinKind};
    use crate::poly::Poly;

    #[test]
    fn rh0_matches_component_sum_on_builtins() {
        let cases = [
            (BuiltinKind::Power(2), BuiltinKind::Power(3)),
            (BuiltinKind::Power(4), BuiltinKind::Power(4)),
            (BuiltinKind::Chebyshev(2), BuiltinKind::Chebyshev(3)),
            (BuiltinKind::Chebyshev(4), BuiltinKind::ChebyshevNeg(4)),
            (BuiltinKind::LaurentD(3), BuiltinKind::Chebyshev(4)),
        ];
        for (kf, kg) in cases {
            let f = builtin_tuple(&kf);
            let g = builtin_tuple(&kg);
            let lhs = fiber_product(&f, &g).unwrap().chi_sum();
            let rhs = genus_sum_rh0(&f, &g).unwrap();
            assert_eq!(lhs, rhs, "{kf:?} vs {kg:?}");
        }
    }

    #[test]
    fn rh0_spot_values() {
        // power 2 vs power 3: one genus-0 component -> 2
        let f = builtin_tuple(&BuiltinKind::Power(2));
        let g = builtin_tuple(&BuiltinKind::Power(3));
        assert_eq!(genus_sum_rh0(&f, &g).unwrap(), 2);
        // power n vs power n -> 2n
        let f = builtin_tuple(&BuiltinKind::Power(5));
        assert_eq!(genus_sum_rh0(&f, &f).unwrap(), 10);
        // chebyshev 2 vs chebyshev 3 -> 2
        let f = builtin_tuple(&BuiltinKind::Chebyshev(2));
        let g = builtin_tuple(&BuiltinKind::Chebyshev(3));
        assert_eq!(genus_sum_rh0(&f, &g).unwrap(), 2);
    }

    #[test]
    fn rh2_smooth_cubic() {
        // A = z^2, B = z^3 - 3z: x^2 = y^3 - 3y has genus 1
        let pa = passport_of_poly(&Poly::from_int_coeffs(&[0, 0, 1])).unwrap();
        let pb = passport_of_poly(&Poly::from_int_coeffs(&[0, -3, 0, 1])).unwrap();
        let merged = merge_passports(&pa, &pb).unwrap();
        let aligned: Vec<(usize, Vec<usize>, Vec<usize>)> =
            merged.into_iter().map(|(_, c, a, b)| (c, a, b)).collect();
        assert_eq!(genus_pair_rh2(2, 3, &aligned).unwrap(), 1);
    }

    #[test]
    fn rh2_shifted_squares() {
        // A = z^2 + 1, B = z^2 + 2: distinct special values, genus 0
        let pa = passport_of_poly(&Poly::from_int_coeffs(&[1, 0, 1])).unwrap();
        let pb = passport_of_poly(&Poly::from_int_coeffs(&[2, 0, 1])).unwrap();
        let merged = merge_passports(&pa, &pb).unwrap();
        let aligned: Vec<(usize, Vec<usize>, Vec<usize>)> =
            merged.into_iter().map(|(_, c, a, b)| (c, a, b)).collect();
        assert_eq!(genus_pair_rh2(2, 2, &aligned).unwrap(), 0);
    }

    #[test]
    fn rh2_chebyshev_pair() {
        // A = T_2, B = T_3 -> genus 0
        let pa = passport_of_poly(&crate::poly::chebyshev(2)).unwrap();
        let pb = passport_of_poly(&crate::poly::chebyshev(3)).unwrap();
        let merged = merge_passports(&pa, &pb).unwrap();
        let aligned: Vec<(usize, Vec<usize>, Vec<usize>)> =
            merged.into_iter().map(|(_, c, a, b)| (c, a, b)).collect();
        assert_eq!(genus_pair_rh2(2, 3, &aligned).unwrap(), 0);
    }
}
