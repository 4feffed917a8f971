//! Dense polynomial helpers over `Vec<Rat>`, used internally by the
//! cyclotomic field arithmetic and the branch-value quotient rings.
//! The zero polynomial is the empty vector; all vectors are trimmed.

use super::rational::Rat;

pub fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Degree of a nonzero vector.
pub fn deg(v: &[Rat]) -> usize {
    debug_assert!(!v.is_empty());
    v.len() - 1
}

#[cfg(test)]
pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c.clone();
    }
    trim(out)
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c.clone();
    }
    trim(out)
}

pub fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    if c.is_zero() {
        return vec![];
    }
    a.iter().map(|x| x * c).collect()
}

/// Euclidean division; `b` must be nonzero. Returns `(q, r)`.
pub fn divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = deg(b);
    let lb = b[db].clone();
    let mut r: Vec<Rat> = a.to_vec();
    let mut q = vec![Rat::zero(); a.len().saturating_sub(db)];
    while !r.is_empty() && deg(&r) >= db {
        let dr = deg(&r);
        let c = r[dr].clone() / lb.clone();
        let shift = dr - db;
        q[shift] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let t = &r[shift + i] - &(bc * &c);
            r[shift + i] = t;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    divrem(a, b).1
}

pub fn make_monic(a: &[Rat]) -> Vec<Rat> {
    if a.is_empty() {
        return vec![];
    }
    let lc = a[deg(a)].clone();
    scale(a, &lc.inv().expect("nonzero leading coefficient"))
}

pub fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&x)
}

/// Extended gcd: returns `(g, u, v)` monic with `u*a + v*b = g`.
pub fn ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0: Vec<Rat> = vec![Rat::one()];
    let mut s1: Vec<Rat> = vec![];
    let mut t0: Vec<Rat> = vec![];
    let mut t1: Vec<Rat> = vec![Rat::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        let t = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_empty() {
        return (vec![], s0, t0);
    }
    let lc = r0[deg(&r0)].clone();
    let li = lc.inv().unwrap();
    (scale(&r0, &li), scale(&s0, &li), scale(&t0, &li))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Vec<Rat> {
        trim(v.iter().map(|&x| Rat::from_int(x)).collect())
    }

    #[test]
    fn division() {
        // (z^2 - 1) / (z - 1) = z + 1
        let (q, r) = divrem(&p(&[-1, 0, 1]), &p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = p(&[-1, 0, 1]); // z^2-1
        let b = p(&[2, 1]); // z+2
        let (g, u, v) = ext_gcd(&a, &b);
        assert_eq!(g, p(&[1]));
        assert_eq!(add(&mul(&u, &a), &mul(&v, &b)), p(&[1]));
    }
}
