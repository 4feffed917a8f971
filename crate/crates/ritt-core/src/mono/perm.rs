use crate::error::{Error, Result};
use std::fmt;

/// Permutation of {1..n}, stored 0-based as an image array.
/// Composition convention is left-to-right throughout the crate:
/// `a.then(b)` maps x to b(a(x)), matching the product a1 a2 ... ar = 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            img: (0..n).collect(),
        }
    }

    /// From 1-based images as they appear in the JSON form.
    pub fn from_images_one_based(img: &[usize]) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        let mut v = Vec::with_capacity(n);
        for &x in img {
            if x < 1 || x > n {
                return Err(Error::Tuple(format!("image {x} out of range 1..{n}")));
            }
            if seen[x - 1] {
                return Err(Error::Tuple(format!("duplicate image {x}")));
            }
            seen[x - 1] = true;
            v.push(x - 1);
        }
        Ok(Perm { img: v })
    }

    /// Build from disjoint cycles in 1-based notation; unmentioned points fix.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Self {
        let mut img: Vec<usize> = (0..n).collect();
        for cyc in cycles {
            for w in 0..cyc.len() {
                let from = cyc[w] - 1;
                let to = cyc[(w + 1) % cyc.len()] - 1;
                img[from] = to;
            }
        }
        Perm { img }
    }

    /// x -> x + shift (mod n).
    pub fn rotation(n: usize, shift: i64) -> Self {
        Perm {
            img: (0..n)
                .map(|x| (x as i64 + shift).rem_euclid(n as i64) as usize)
                .collect(),
        }
    }

    /// x -> c - x (mod n).
    pub fn reflection(n: usize, c: i64) -> Self {
        Perm {
            img: (0..n)
                .map(|x| (c - x as i64).rem_euclid(n as i64) as usize)
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.img.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// self then rhs (left-to-right product).
    pub fn then(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree());
        Perm {
            img: self.img.iter().map(|&x| rhs.img[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x] = i;
        }
        Perm { img }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.img[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.img[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle lengths sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        t
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for c in self.cycles() {
            if c.len() > 1 {
                write!(f, "(")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", x + 1)?;
                }
                write!(f, ")")?;
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_to_right_product() {
        let a = Perm::from_cycles(3, &[&[1, 2]]);
        let b = Perm::from_cycles(3, &[&[2, 3]]);
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).apply(0), 2);
    }

    #[test]
    fn cycle_types() {
        let r = Perm::rotation(6, 2);
        assert_eq!(r.cycle_type(), vec![3, 3]);
        let s = Perm::reflection(6, 0);
        assert_eq!(s.cycle_type(), vec![1, 1, 2, 2]);
    }

    #[test]
    fn inverse_law() {
        let p = Perm::from_cycles(5, &[&[1, 3, 4], &[2, 5]]);
        assert!(p.then(&p.inverse()).is_identity());
    }
}
