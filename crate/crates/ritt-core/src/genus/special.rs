use super::passport::Passport;

/// How a branch value is special: all parts (all but one, all but two)
/// divisible by the reported d > 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    Special,
    OneSpecial,
    TwoSpecial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialTag {
    pub kind: SpecialKind,
    pub divisor: usize,
}

/// Strongest applicable tag for one partition, with the largest witnessing
/// divisor; `None` when no d > 1 leaves at most two parts undivided.
pub fn classify_partition(partition: &[usize]) -> Option<SpecialTag> {
    let n: usize = partition.iter().sum();
    let mut best: Option<SpecialTag> = None;
    for d in 2..=n {
        let nondiv = partition.iter().filter(|&&p| p % d != 0).count();
        let kind = match nondiv {
            0 => SpecialKind::Special,
            1 => SpecialKind::OneSpecial,
            2 => SpecialKind::TwoSpecial,
            _ => continue,
        };
        let better = match &best {
            None => true,
            Some(t) => {
                rank(&kind) < rank(&t.kind) || (rank(&kind) == rank(&t.kind) && d > t.divisor)
            }
        };
        if better {
            best = Some(SpecialTag { kind, divisor: d });
        }
    }
    best
}

fn rank(k: &SpecialKind) -> u8 {
    match k {
        SpecialKind::Special => 0,
        SpecialKind::OneSpecial => 1,
        SpecialKind::TwoSpecial => 2,
    }
}

/// Outcome of the special-value constraint check for a passport.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialVerdict {
    /// No clause is violated; when a clause's premise applied, it is named.
    Consistent { clause: Option<&'static str> },
    /// A forbidden combination of special values.
    ViolatesCountRule(String),
    /// Two 1-special values without the forced Chebyshev shape.
    ViolatesChebyshevShape(String),
    /// A 1-special plus 2-special pair without either allowed shape.
    ViolatesExceptionalShape(String),
}

#[derive(Clone, Debug)]
pub struct SpecialReport {
    /// One tag per passport entry (entries repeat per `count`).
    pub tags: Vec<(usize, Option<SpecialTag>)>,
    pub verdict: SpecialVerdict,
}

fn is_one_two_dots_two(p: &[usize]) -> bool {
    // (1, 2, 2, ..., 2)
    !p.is_empty() && p[0] == 1 && p[1..].iter().all(|&x| x == 2) && p.len() >= 2
}

/// Per-entry special tags plus the count constraints: a polynomial may not
/// have two special values, a special plus a 1-special, or three 1-special
/// values; two 1-special values force the Chebyshev passport; a 1-special
/// with a 2-special forces one of the two exceptional shapes.
pub fn special_values(p: &Passport) -> SpecialReport {
    let tags: Vec<(usize, Option<SpecialTag>)> = p
        .entries
        .iter()
        .map(|e| (e.count, classify_partition(&e.partition)))
        .collect();
    let count_kind = |k: SpecialKind| -> usize {
        tags.iter()
            .filter_map(|(c, t)| t.as_ref().filter(|t| t.kind == k).map(|_| *c))
            .sum()
    };
    let n_special = count_kind(SpecialKind::Special);
    let n_one = count_kind(SpecialKind::OneSpecial);
    let n_two = count_kind(SpecialKind::TwoSpecial);

    let verdict = if n_special >= 2 {
        SpecialVerdict::ViolatesCountRule(format!("{n_special} special values"))
    } else if n_special >= 1 && n_one >= 1 {
        SpecialVerdict::ViolatesCountRule("a special and a 1-special value".into())
    } else if n_one >= 3 {
        SpecialVerdict::ViolatesCountRule(format!("{n_one} 1-special values"))
    } else if n_one == 2 {
        let nontrivial: Vec<&Vec<usize>> = p
            .entries
            .iter()
            .filter(|e| !e.is_trivial())
            .map(|e| &e.partition)
            .collect();
        if p.s_count() == 2 && nontrivial.iter().all(|q| is_one_two_dots_two(q)) {
            SpecialVerdict::Consistent { clause: Some("b") }
        } else {
            SpecialVerdict::ViolatesChebyshevShape(format!(
                "two 1-special values but passport is {p}"
            ))
        }
    } else if n_one == 1 && n_two == 1 {
        let mut shapes: Vec<Vec<usize>> = p
            .entries
            .iter()
            .filter(|e| !e.is_trivial())
            .map(|e| e.partition.clone())
            .collect();
        shapes.sort();
        let allowed1 = vec![vec![1, 1, 2], vec![1, 3]];
        let allowed2 = vec![vec![1, 1, 3], vec![1, 2, 2]];
        if p.s_count() == 2 && (shapes == allowed1 || shapes == allowed2) {
            SpecialVerdict::Consistent { clause: Some("c") }
        } else {
            SpecialVerdict::ViolatesExceptionalShape(format!(
                "1-special with 2-special but passport is {p}"
            ))
        }
    } else {
        SpecialVerdict::Consistent { clause: None }
    };
    SpecialReport { tags, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::passport::{BranchValue, PassportEntry};

    fn pp(degree: usize, parts: Vec<Vec<usize>>) -> Passport {
        Passport::new(
            degree,
            parts
                .into_iter()
                .enumerate()
                .map(|(i, partition)| PassportEntry {
                    value: BranchValue::Named(format!("z{i}")),
                    count: 1,
                    partition,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn pure_power_is_special() {
        let p = pp(6, vec![vec![6]]);
        let r = special_values(&p);
        assert_eq!(
            r.tags[0].1,
            Some(SpecialTag {
                kind: SpecialKind::Special,
                divisor: 6
            })
        );
        assert!(matches!(r.verdict, SpecialVerdict::Consistent { .. }));
    }

    #[test]
    fn chebyshev_passport_consistent() {
        let p = pp(5, vec![vec![1, 2, 2], vec![1, 2, 2]]);
        let r = special_values(&p);
        assert_eq!(r.verdict, SpecialVerdict::Consistent { clause: Some("b") });
    }

    #[test]
    fn exceptional_pair_consistent() {
        let p = pp(4, vec![vec![1, 3], vec![1, 1, 2]]);
        let r = special_values(&p);
        assert_eq!(r.verdict, SpecialVerdict::Consistent { clause: Some("c") });
        // the degree-5 exceptional shape too
        let p = pp(5, vec![vec![1, 2, 2], vec![1, 1, 3]]);
        let r = special_values(&p);
        assert_eq!(r.verdict, SpecialVerdict::Consistent { clause: Some("c") });
    }

    #[test]
    fn two_special_values_flagged() {
        let p = pp(4, vec![vec![4], vec![2, 2]]);
        let r = special_values(&p);
        assert!(matches!(r.verdict, SpecialVerdict::ViolatesCountRule(_)));
    }

    #[test]
    fn three_one_special_flagged() {
        let p = pp(4, vec![vec![1, 3], vec![1, 3], vec![1, 3]]);
        let r = special_values(&p);
        assert!(matches!(r.verdict, SpecialVerdict::ViolatesCountRule(_)));
    }
}
