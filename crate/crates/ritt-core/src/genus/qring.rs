//! Multiplicity partitions of P(z) - tau for tau a root of a squarefree
//! factor m(t) of the critical-value polynomial, computed by gcd chains in
//! Q[t]/(m)[z]. Inversions that encounter a zero divisor split the modulus
//! (dynamic evaluation), so no irreducible factorization over Q is needed;
//! cycle structure is constant across the roots of each returned factor.

use crate::num::polyvec as pv;
use crate::num::Rat;

/// A computation step either produces a value or discovers a proper monic
/// factor of the modulus, in which case the caller recurses on both parts.
enum Step<T> {
    Ok(T),
    Split(Vec<Rat>),
}

/// Element of Q[t]/(m), reduced.
type Elem = Vec<Rat>;

struct Ring {
    m: Vec<Rat>, // monic, degree >= 1
}

impl Ring {
    fn reduce(&self, v: Vec<Rat>) -> Elem {
        pv::rem(&v, &self.m)
    }

    fn is_zero(&self, e: &Elem) -> bool {
        e.is_empty()
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(pv::mul(a, b))
    }

    fn inv(&self, a: &Elem) -> Step<Elem> {
        debug_assert!(!self.is_zero(a));
        let (g, u, _) = pv::ext_gcd(a, &self.m);
        if pv::deg(&g) == 0 {
            Step::Ok(self.reduce(u))
        } else {
            // g is a proper monic factor of m: a is a zero divisor
            Step::Split(g)
        }
    }
}

/// Polynomial in z with coefficients in Q[t]/(m).
type ZPoly = Vec<Elem>;

fn ztrim(mut p: ZPoly, ring: &Ring) -> ZPoly {
    while p.last().map_or(false, |c| ring.is_zero(c)) {
        p.pop();
    }
    p
}

fn zderiv(p: &ZPoly) -> ZPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| pv::scale(c, &Rat::from_int(i as i64)))
        .collect()
}

fn zrem(a: &ZPoly, b: &ZPoly, ring: &Ring) -> Step<ZPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let li = match ring.inv(lb) {
        Step::Ok(x) => x,
        Step::Split(g) => return Step::Split(g),
    };
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let c = ring.mul(&r[dr], &li);
        let shift = dr - db;
        if !ring.is_zero(&c) {
            for (i, bc) in b.iter().enumerate() {
                let t = pv::sub(&r[shift + i], &ring.mul(bc, &c));
                r[shift + i] = t;
            }
        }
        r.pop();
        r = ztrim(r, ring);
    }
    Step::Ok(r)
}

fn zgcd_deg(a: &ZPoly, b: &ZPoly, ring: &Ring) -> Step<ZPoly> {
    let mut x = ztrim(a.clone(), ring);
    let mut y = ztrim(b.clone(), ring);
    while !y.is_empty() {
        let r = match zrem(&x, &y, ring) {
            Step::Ok(r) => r,
            Step::Split(g) => return Step::Split(g),
        };
        x = y;
        y = r;
    }
    Step::Ok(x)
}

/// Multiplicity partition of W over the field (or ring) Q[t]/(m) via the
/// repeated-gcd chain: with W_0 = W and W_{k+1} = gcd(W_k, W_k'), the number
/// of distinct roots of multiplicity >= k+1 is deg W_k - deg W_{k+1}.
fn partition_once(w: &ZPoly, ring: &Ring) -> Step<Vec<usize>> {
    let mut degs = vec![w.len() - 1];
    let mut cur = w.clone();
    while degs.last() != Some(&0) {
        let d = zderiv(&cur);
        let g = match zgcd_deg(&cur, &ztrim(d, ring), ring) {
            Step::Ok(g) => g,
            Step::Split(f) => return Step::Split(f),
        };
        degs.push(if g.is_empty() { 0 } else { g.len() - 1 });
        cur = g;
    }
    // m_k = degs[k-1] - degs[k] = #roots with multiplicity >= k
    let mut ge: Vec<usize> = degs.windows(2).map(|w| w[0] - w[1]).collect();
    ge.push(0);
    let mut partition = Vec::new();
    for k in 0..ge.len() - 1 {
        let exactly = ge[k] - ge[k + 1];
        for _ in 0..exactly {
            partition.push(k + 1);
        }
    }
    partition.sort_unstable();
    Step::Ok(partition)
}

/// For each certified-uniform factor of m, the multiplicity partition of
/// P(z) - tau at the roots tau of that factor. `p` is the rational
/// coefficient vector of P in z.
pub fn partitions_over_modulus(p: &[Rat], m: &[Rat]) -> Vec<(Vec<Rat>, Vec<usize>)> {
    let m = pv::make_monic(m);
    let ring = Ring { m: m.clone() };
    // W = P(z) - tau: constant coefficient picks up -t
    let w: ZPoly = {
        let mut w: ZPoly = p.iter().map(|c| vec![c.clone()]).collect();
        // subtract t (the residue class) from the constant term
        let t_elem = ring.reduce(vec![Rat::zero(), Rat::one()]);
        w[0] = pv::sub(&w[0], &t_elem);
        ztrim(w, &ring)
    };
    match partition_once(&w, &ring) {
        Step::Ok(part) => vec![(m, part)],
        Step::Split(g) => {
            let (q, r) = pv::divrem(&m, &g);
            debug_assert!(r.is_empty());
            let mut out = partitions_over_modulus(p, &g);
            out.extend(partitions_over_modulus(p, &pv::make_monic(&q)));
            out
        }
    }
}

/// Rational roots of a rational-coefficient polynomial, found by clearing
/// denominators and trying divisor candidates of the ends. Returns the roots
/// and the cofactor with those roots divided out.
pub fn rational_roots(poly: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};
    let mut p = pv::make_monic(poly);
    let mut roots = Vec::new();
    // integer-ize: common denominator
    loop {
        if pv::deg(&p) == 0 {
            break;
        }
        // candidate roots p/q: with monic rational polynomial, roots are
        // among num/den divisor quotients of the constant term; try the
        // divisors of the cleared-denominator constant
        let mut den_lcm = BigInt::from(1);
        for c in &p {
            let d = c.denom();
            let g = num_integer::Integer::gcd(&den_lcm, d);
            den_lcm = &den_lcm * d / g;
        }
        let ints: Vec<BigInt> = p
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let a0 = &ints[0];
        let lead = ints.last().unwrap();
        if a0.is_zero() {
            roots.push(Rat::zero());
            p = pv::divrem(&p, &[Rat::zero(), Rat::one()]).0;
            continue;
        }
        let mut found = None;
        'search: for num_d in divisors_bounded(&a0.abs()) {
            for den_d in divisors_bounded(&lead.abs()) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(&num_d * BigInt::from(sign), den_d.clone()).unwrap();
                    if eval_rat(&p, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                p = pv::divrem(&p, &[-&r, Rat::one()]).0;
                roots.push(r);
            }
            None => break,
        }
    }
    roots.sort();
    (roots, p)
}

fn eval_rat(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn divisors_bounded(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    let mut out = Vec::new();
    let mut i = BigInt::from(1);
    let limit = BigInt::from(1_000_000u64);
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            out.push(i.clone());
            out.push(n / &i);
        }
        if i > limit {
            break; // huge constant terms: accept missing some candidates
        }
        i += 1;
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn rational_roots_of_quadratic() {
        // t^2 - 4
        let (roots, rest) = rational_roots(&p(&[-4, 0, 1]));
        assert_eq!(roots, vec![Rat::from_int(-2), Rat::from_int(2)]);
        assert_eq!(pv::deg(&rest), 0);
    }

    #[test]
    fn partition_over_irrational_modulus() {
        // P = z^2: over m(t) = t^2 - 2 (tau = sqrt(2)), P - tau has two
        // simple roots
        let out = partitions_over_modulus(&p(&[0, 0, 1]), &p(&[-2, 0, 1]));
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].1, vec![1, 1]);
    }

    #[test]
    fn split_on_zero_divisor() {
        // P = z^3 - 3z over m = (t-2)(t+2) = t^2 - 4: at tau = 2 the
        // partition is (1,2), same at -2; the chain may or may not split,
        // but the union of factors must cover m with correct partitions
        let out = partitions_over_modulus(&p(&[0, -3, 0, 1]), &p(&[-4, 0, 1]));
        let total: usize = out.iter().map(|(f, _)| pv::deg(f)).sum();
        assert_eq!(total, 2);
        for (_, part) in out {
            assert_eq!(part, vec![1, 2]);
        }
    }
}
