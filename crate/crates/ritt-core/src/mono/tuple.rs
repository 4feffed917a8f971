use super::perm::Perm;
use crate::error::{Error, Result};
use crate::num::Cyclo;
use std::cmp::Ordering;
use std::fmt;

/// Branch point label: an exact field element, or infinity (kept last).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BranchLabel {
    Finite(Cyclo),
    Inf,
}

impl BranchLabel {
    pub fn finite(v: i64) -> Self {
        BranchLabel::Finite(Cyclo::from_int(v))
    }

    pub fn canonical_cmp(&self, other: &BranchLabel) -> Ordering {
        match (self, other) {
            (BranchLabel::Inf, BranchLabel::Inf) => Ordering::Equal,
            (BranchLabel::Inf, _) => Ordering::Greater,
            (_, BranchLabel::Inf) => Ordering::Less,
            (BranchLabel::Finite(a), BranchLabel::Finite(b)) => a.canonical_cmp(b),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            BranchLabel::Inf => "inf".into(),
            BranchLabel::Finite(c) => c.to_string(),
        }
    }

    pub fn from_text(s: &str) -> Result<Self> {
        if s.trim() == "inf" {
            return Ok(BranchLabel::Inf);
        }
        Ok(BranchLabel::Finite(crate::expr::parse_scalar(s)?))
    }
}

/// Which invariant a tuple violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TupleViolation {
    DegreeMismatch { index: usize },
    DuplicateLabel { index: usize },
    ProductNotIdentity,
    NotTransitive,
}

impl fmt::Display for TupleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TupleViolation::DegreeMismatch { index } => {
                write!(f, "permutation {index} has wrong degree")
            }
            TupleViolation::DuplicateLabel { index } => {
                write!(f, "branch label {index} repeats an earlier label")
            }
            TupleViolation::ProductNotIdentity => write!(f, "product of permutations is not 1"),
            TupleViolation::NotTransitive => write!(f, "generated group is not transitive"),
        }
    }
}

/// Permutation r-tuple with product one and transitive span: the
/// combinatorial stand-in for a branched covering. The label sequence fixes
/// the loop order; infinity, when present, is conventionally last.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonodromyTuple {
    degree: usize,
    labels: Vec<BranchLabel>,
    perms: Vec<Perm>,
}

impl MonodromyTuple {
    pub fn new(degree: usize, labels: Vec<BranchLabel>, perms: Vec<Perm>) -> Result<Self> {
        if labels.len() != perms.len() {
            return Err(Error::Tuple(format!(
                "{} labels but {} permutations",
                labels.len(),
                perms.len()
            )));
        }
        let t = MonodromyTuple {
            degree,
            labels,
            perms,
        };
        // shape problems are construction errors; product/transitivity are
        // checked by validate() so that they can be *reported*
        for (i, p) in t.perms.iter().enumerate() {
            if p.degree() != degree {
                return Err(Error::Tuple(format!("permutation {i} has wrong degree")));
            }
        }
        for i in 1..t.labels.len() {
            for j in 0..i {
                if t.labels[i] == t.labels[j] {
                    return Err(Error::Tuple(format!("duplicate branch label at {i}")));
                }
            }
        }
        Ok(t)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn labels(&self) -> &[BranchLabel] {
        &self.labels
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn num_branches(&self) -> usize {
        self.perms.len()
    }

    pub fn product(&self) -> Perm {
        let mut acc = Perm::identity(self.degree);
        for p in &self.perms {
            acc = acc.then(p);
        }
        acc
    }

    pub fn is_transitive(&self) -> bool {
        if self.degree <= 1 {
            return true;
        }
        let mut seen = vec![false; self.degree];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for p in &self.perms {
                for y in [p.apply(x), p.inverse().apply(x)] {
                    if !seen[y] {
                        seen[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
        }
        count == self.degree
    }

    /// Checks product-one and transitivity, reporting which fails.
    pub fn validate(&self) -> std::result::Result<(), TupleViolation> {
        if !self.product().is_identity() {
            return Err(TupleViolation::ProductNotIdentity);
        }
        if !self.is_transitive() {
            return Err(TupleViolation::NotTransitive);
        }
        Ok(())
    }

    /// Riemann-Hurwitz genus: 2 - 2g = sum_i cycles(perm_i) - (r-2) n.
    /// A negative or non-integral result signals an invalid tuple.
    pub fn genus(&self) -> Result<i64> {
        let n = self.degree as i64;
        let r = self.perms.len() as i64;
        let cycles: i64 = self.perms.iter().map(|p| p.num_cycles() as i64).sum();
        let chi = cycles - (r - 2) * n;
        if chi % 2 != 0 {
            return Err(Error::Tuple(format!(
                "non-integral genus: Euler characteristic {chi} is odd"
            )));
        }
        let g = 1 - chi / 2;
        if g < 0 {
            return Err(Error::Tuple(format!("negative genus {g}")));
        }
        Ok(g)
    }

    /// Cycle-type passport: one partition per label, parts ascending.
    pub fn passport(&self) -> Vec<(BranchLabel, Vec<usize>)> {
        self.labels
            .iter()
            .cloned()
            .zip(self.perms.iter().map(|p| p.cycle_type()))
            .collect()
    }

    /// The permutation attached to a label, identity if the label is absent.
    pub fn perm_at(&self, label: &BranchLabel) -> Perm {
        for (l, p) in self.labels.iter().zip(&self.perms) {
            if l == label {
                return p.clone();
            }
        }
        Perm::identity(self.degree)
    }

    /// Single full-length cycle over infinity: the generalized-polynomial
    /// shape.
    pub fn is_generalized_polynomial(&self) -> bool {
        self.perm_at(&BranchLabel::Inf).cycle_type() == vec![self.degree]
    }
}

/// Union of the two label sets, canonically sorted with infinity last;
/// both tuples are padded with identity permutations at missing labels.
/// Insertion of identities never disturbs the product-one invariant.
pub fn merge_labels(
    f: &MonodromyTuple,
    g: &MonodromyTuple,
) -> Result<(MonodromyTuple, MonodromyTuple)> {
    let mut union: Vec<BranchLabel> = f.labels.clone();
    for l in &g.labels {
        if !union.contains(l) {
            union.push(l.clone());
        }
    }
    union.sort_by(|a, b| a.canonical_cmp(b));

    // each tuple's own labels must appear in the union in their original
    // order; otherwise the padded tuple would not be product-one
    let check_order = |t: &MonodromyTuple| -> Result<()> {
        let positions: Vec<usize> = t
            .labels
            .iter()
            .map(|l| union.iter().position(|u| u == l).unwrap())
            .collect();
        if positions.windows(2).all(|w| w[0] < w[1]) {
            Ok(())
        } else {
            Err(Error::Tuple(
                "label sets cannot be merged without reordering loops".into(),
            ))
        }
    };
    check_order(f)?;
    check_order(g)?;

    let pad = |t: &MonodromyTuple| {
        let perms = union.iter().map(|l| t.perm_at(l)).collect();
        MonodromyTuple::new(t.degree, union.clone(), perms)
    };
    Ok((pad(f)?, pad(g)?))
}

/// Built-in covering models with exact branch labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltinKind {
    /// z^n, branched over 0 and infinity.
    Power(u32),
    /// Chebyshev T_n, branched over -1, 1, infinity.
    Chebyshev(u32),
    /// -T_n: the sign twist relabels the finite branch values.
    ChebyshevNeg(u32),
    /// D_n = (z^n + z^-n)/2, degree 2n, cycle type (n, n) at infinity.
    LaurentD(u32),
}

pub fn builtin_tuple(kind: &BuiltinKind) -> MonodromyTuple {
    match *kind {
        BuiltinKind::Power(n) => {
            let n = n as usize;
            MonodromyTuple::new(
                n,
                vec![BranchLabel::finite(0), BranchLabel::Inf],
                vec![Perm::rotation(n, 1), Perm::rotation(n, -1)],
            )
            .unwrap()
        }
        BuiltinKind::Chebyshev(n) => {
            let m = n as usize;
            if m == 1 {
                return MonodromyTuple::new(1, vec![], vec![]).unwrap();
            }
            // labels (-1, 1, inf); product (x -> -1-x)(x -> -x)(x -> x-1) = 1
            MonodromyTuple::new(
                m,
                vec![
                    BranchLabel::finite(-1),
                    BranchLabel::finite(1),
                    BranchLabel::Inf,
                ],
                vec![
                    Perm::reflection(m, -1),
                    Perm::reflection(m, 0),
                    Perm::rotation(m, -1),
                ],
            )
            .unwrap()
        }
        BuiltinKind::ChebyshevNeg(n) => {
            let m = n as usize;
            if m == 1 {
                return MonodromyTuple::new(1, vec![], vec![]).unwrap();
            }
            // -T_n is branched over -1 (where T_n = 1) and 1 (where T_n = -1):
            // the finite cycle data swaps labels; rebuilt so the product is 1
            MonodromyTuple::new(
                m,
                vec![
                    BranchLabel::finite(-1),
                    BranchLabel::finite(1),
                    BranchLabel::Inf,
                ],
                vec![
                    Perm::reflection(m, 0),
                    Perm::reflection(m, 1),
                    Perm::rotation(m, -1),
                ],
            )
            .unwrap()
        }
        BuiltinKind::LaurentD(n) => {
            let deg = 2 * n as usize;
            MonodromyTuple::new(
                deg,
                vec![
                    BranchLabel::finite(-1),
                    BranchLabel::finite(1),
                    BranchLabel::Inf,
                ],
                vec![
                    Perm::reflection(deg, 1),
                    Perm::reflection(deg, -1),
                    Perm::rotation(deg, 2),
                ],
            )
            .unwrap()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_validity() {
        for k in [
            BuiltinKind::Power(5),
            BuiltinKind::Chebyshev(4),
            BuiltinKind::Chebyshev(7),
            BuiltinKind::ChebyshevNeg(4),
            BuiltinKind::ChebyshevNeg(9),
            BuiltinKind::LaurentD(1),
            BuiltinKind::LaurentD(6),
        ] {
            let t = builtin_tuple(&k);
            assert_eq!(t.validate(), Ok(()), "{k:?}");
            assert_eq!(t.genus().unwrap(), 0, "{k:?}");
        }
    }

    #[test]
    fn chebyshev_passports() {
        // T_4: (1,1,2) over one finite value, (2,2) over the other, 4-cycle
        // at infinity
        let t = builtin_tuple(&BuiltinKind::Chebyshev(4));
        let p = t.passport();
        assert_eq!(p[0].1, vec![2, 2]); // over -1
        assert_eq!(p[1].1, vec![1, 1, 2]); // over +1
        assert_eq!(p[2].1, vec![4]);
        // odd degree: (1,2,...,2) over both
        let t = builtin_tuple(&BuiltinKind::Chebyshev(5));
        let p = t.passport();
        assert_eq!(p[0].1, vec![1, 2, 2]);
        assert_eq!(p[1].1, vec![1, 2, 2]);
    }

    #[test]
    fn laurent_d_passport() {
        // D_2: degree 4, (2,2) over both -1 and 1, (2,2) at infinity
        let t = builtin_tuple(&BuiltinKind::LaurentD(2));
        let p = t.passport();
        assert_eq!(p[0].1, vec![2, 2]);
        assert_eq!(p[1].1, vec![2, 2]);
        assert_eq!(p[2].1, vec![2, 2]);
    }

    #[test]
    fn validate_reports_which_invariant() {
        let bad = MonodromyTuple::new(
            3,
            vec![BranchLabel::finite(0), BranchLabel::Inf],
            vec![
                Perm::from_cycles(3, &[&[1, 2]]),
                Perm::from_cycles(3, &[&[1, 3]]),
            ],
        )
        .unwrap();
        assert_eq!(bad.validate(), Err(TupleViolation::ProductNotIdentity));

        let intransitive = MonodromyTuple::new(
            4,
            vec![BranchLabel::finite(0), BranchLabel::Inf],
            vec![
                Perm::from_cycles(4, &[&[1, 2], &[3, 4]]),
                Perm::from_cycles(4, &[&[1, 2], &[3, 4]]),
            ],
        )
        .unwrap();
        assert_eq!(intransitive.validate(), Err(TupleViolation::NotTransitive));
    }

    #[test]
    fn power_genus_zero() {
        let t = builtin_tuple(&BuiltinKind::Power(6));
        assert_eq!(t.genus().unwrap(), 0);
        assert!(t.is_generalized_polynomial());
        assert!(!builtin_tuple(&BuiltinKind::LaurentD(3)).is_generalized_polynomial());
    }

    #[test]
    fn merge_pads_with_identities() {
        let f = builtin_tuple(&BuiltinKind::Power(2));
        let g = builtin_tuple(&BuiltinKind::Chebyshev(3));
        let (fm, gm) = merge_labels(&f, &g).unwrap();
        assert_eq!(fm.labels(), gm.labels());
        assert_eq!(fm.labels().len(), 4); // -1, 0, 1, inf
        assert_eq!(fm.validate(), Ok(()));
        assert_eq!(gm.validate(), Ok(()));
    }
}
