/// Which clause of the s-term estimate applies, by the number of opposite
/// parts not divisible by a.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum STermClause {
    /// At least three parts not divisible by a: s <= -2.
    AtLeastThreeNondivisible,
    /// Exactly two: s <= -1, equality iff both gcds equal a/2.
    ExactlyTwoNondivisible { at_equality: bool },
    /// Exactly one: s = -1 + gcd(a, b_l); zero iff that gcd is 1.
    ExactlyOneNondivisible { gcd: usize },
    /// Every part divisible by a (the special-value situation): s = a - 1.
    AllDivisible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct STerm {
    pub value: i64,
    pub clause: STermClause,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// s_{i,j1} = a (1 - q) - 1 + sum_j gcd(a, b_j), with q the number of parts
/// in the opposite partition, plus the clause certificate.
pub fn s_term(a: usize, q: usize, b_parts: &[usize]) -> STerm {
    assert!(a >= 1);
    assert_eq!(q, b_parts.len(), "q must count the opposite parts");
    let gcd_sum: i64 = b_parts.iter().map(|&b| gcd(a, b) as i64).sum();
    let value = a as i64 * (1 - q as i64) - 1 + gcd_sum;
    let nondiv: Vec<usize> = b_parts.iter().copied().filter(|&b| b % a != 0).collect();
    let clause = match nondiv.len() {
        0 => STermClause::AllDivisible,
        1 => STermClause::ExactlyOneNondivisible {
            gcd: gcd(a, nondiv[0]),
        },
        2 => STermClause::ExactlyTwoNondivisible {
            at_equality: a % 2 == 0 && gcd(a, nondiv[0]) == a / 2 && gcd(a, nondiv[1]) == a / 2,
        },
        _ => STermClause::AtLeastThreeNondivisible,
    };
    STerm { value, clause }
}

/// The bound asserted by the reported clause.
pub fn clause_bound(t: &STerm, a: usize) -> bool {
    match &t.clause {
        STermClause::AtLeastThreeNondivisible => t.value <= -2,
        STermClause::ExactlyTwoNondivisible { at_equality } => {
            t.value <= -1 && ((t.value == -1) == *at_equality)
        }
        STermClause::ExactlyOneNondivisible { gcd } => t.value == -1 + *gcd as i64,
        STermClause::AllDivisible => t.value == a as i64 - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_values() {
        // a = 2, q = 3, b = (1,1,1) -> -2
        let t = s_term(2, 3, &[1, 1, 1]);
        assert_eq!(t.value, -2);
        assert!(clause_bound(&t, 2));
        // a = 1 -> 0
        let t = s_term(1, 2, &[1, 3]);
        assert_eq!(t.value, 0);
        // a = 2, b = (1,2) -> 0
        let t = s_term(2, 2, &[1, 2]);
        assert_eq!(t.value, 0);
        assert_eq!(t.clause, STermClause::ExactlyOneNondivisible { gcd: 1 });
    }

    #[test]
    fn equality_case_of_two_nondivisible() {
        // a = 4, opposite (2, 2, 4): two nondivisible parts with gcd 2 = a/2
        let t = s_term(4, 3, &[2, 2, 4]);
        assert_eq!(t.value, 4 * (1 - 3) - 1 + 2 + 2 + 4);
        assert!(clause_bound(&t, 4));
    }
}
