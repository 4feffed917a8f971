//! Exercises for the operation-level contracts that sit above single
//! modules: the mixed-equation solver, the trivial-witness paths of the
//! classifier, the special-double-decomposition detector, and the
//! normalization of two-pole functions.

use ritt_core::decomp::{family_generator, FamilyCase};
use ritt_core::expr::parse_ratfunc;
use ritt_core::num::Cyclo;
use ritt_core::poly::{chebyshev, laurent_d, Laurent, Poly, RatFunc};
use ritt_core::ritt::{
    classify_double, detect_special, r2_normalize, solve_eq2, CaseTag, ClassifyOutcome,
    SpecialVerdict,
};

#[test]
fn solve_eq2_chebyshev_branch() {
    // T_3 o D_2 = D_2 o z^3
    let out = solve_eq2(&chebyshev(3), &laurent_d(2), &laurent_d(2), 3).unwrap();
    match out {
        ClassifyOutcome::Classified(w) => {
            assert_eq!(w.tag, CaseTag::Eq2ChebyshevBranch);
            assert!(w.all_tags.contains(&CaseTag::Case4));
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
}

#[test]
fn solve_eq2_power_branch() {
    // A = z^2, L1 = z L(z^2) with L = z + 1 + 2/z, d = 2:
    // A o L1 = z^2 L^2(z^2) = L2 o z^2 with L2 = z L^2(z)
    let l = Laurent::from_terms([
        (1, Cyclo::one()),
        (0, Cyclo::one()),
        (-1, Cyclo::from_int(2)),
    ]);
    let l1 = &Laurent::var() * &l.compose_power(2);
    let l2 = &Laurent::var() * &l.pow(2);
    let a = Poly::from_int_coeffs(&[0, 0, 1]);
    let out = solve_eq2(&a, &l1, &l2, 2).unwrap();
    match out {
        ClassifyOutcome::Classified(w) => {
            assert_eq!(w.tag, CaseTag::Eq2PowerBranch);
            assert!(w.all_tags.contains(&CaseTag::Case1));
            assert_eq!(w.params.n, Some(2));
            assert_eq!(w.params.r, Some(1));
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
}

#[test]
fn solve_eq2_trivial_outer() {
    // A = z: the identity-witness path
    let l1 = laurent_d(2);
    let out = solve_eq2(&Poly::var(), &l1, &l1, 1).unwrap();
    match out {
        ClassifyOutcome::Classified(w) => {
            assert!(w.all_tags.contains(&CaseTag::Case1));
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
}

#[test]
fn classify_spec_examples() {
    // (T_2, T_3, T_3, T_2) -> case 3 among the matches
    let q = family_generator(&FamilyCase::C3 { n: 2, m: 3 }).unwrap();
    match classify_double(&q.a, &q.c, &q.b, &q.d).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert!(w.all_tags.contains(&CaseTag::Case3));
            assert!(w.reverify(&q.a, &q.c, &q.b, &q.d).unwrap());
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
    // (T_3, D_2, D_2, z^3) -> case 4
    let q = family_generator(&FamilyCase::C4 { n: 3, m: 2 }).unwrap();
    match classify_double(&q.a, &q.c, &q.b, &q.d).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert!(w.all_tags.contains(&CaseTag::Case4));
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
    // a case-5 instance classifies as case 5 and reports the reducible pair
    let eps = Cyclo::root_of_unity(6, 1);
    let q = family_generator(&FamilyCase::C5 {
        n: 1,
        m: 1,
        l: 3,
        eps,
    })
    .unwrap();
    match classify_double(&q.a, &q.c, &q.b, &q.d).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert!(w.all_tags.contains(&CaseTag::Case5));
            assert_eq!(w.pair_reducible, Some(true));
            assert!(w.all_tags.contains(&CaseTag::ReducibleChebyshev));
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
}

#[test]
fn classify_rejects_unequal_compositions() {
    let a = RatFunc::from_poly(chebyshev(2));
    let b = RatFunc::from_poly(chebyshev(3));
    assert!(classify_double(&a, &b, &b, &b).is_err());
}

#[test]
fn r2_error_is_explicit_for_unreachable_witness() {
    // a degree-2 map whose small fibers need an unavailable square root:
    // F = (z^3 + 2)/z^3 has fiber structure found over an extension, so it
    // normalizes; but a function with every small-fiber value irrational
    // and non-cyclotomic cannot be certified. F = z^3 + z has distinct
    // critical values (fiber size 2 each) at non-representable points only
    // when restricted to Q; the error must be the field obstruction, not a
    // wrong "no".
    let f = parse_ratfunc("(z^3+z+1)/(z^3+2*z+1)").unwrap();
    match r2_normalize(&f) {
        Ok(form) => {
            // if it normalizes, the witness must re-verify
            assert_eq!(form.laurent.degree() as usize, f.degree());
        }
        Err(e) => {
            let msg = e.to_string();
            assert!(msg.contains("cannot certify"), "unexpected error: {msg}");
        }
    }
}

#[test]
fn detect_special_on_sign_twisted_family() {
    // the n = m = 1, l = 3 sign-twisted instance: inner factors are
    // indecomposable, the outer pair is reducible, and no compatible left
    // factor exists
    let eps = Cyclo::root_of_unity(6, 1);
    let q = family_generator(&FamilyCase::C5 {
        n: 1,
        m: 1,
        l: 3,
        eps,
    })
    .unwrap();
    match detect_special(&q.a, &q.c, &q.b, &q.d).unwrap() {
        SpecialVerdict::Special => {}
        v => panic!("expected a special double decomposition, got {v:?}"),
    }
}

#[test]
fn detect_special_left_factor_witness_reverifies() {
    let a = RatFunc::from_poly(chebyshev(6));
    let c = RatFunc::from_poly(chebyshev(2));
    let b = RatFunc::from_poly(chebyshev(4));
    let d = RatFunc::from_poly(chebyshev(3));
    match detect_special(&a, &c, &b, &d).unwrap() {
        SpecialVerdict::NotSpecialLeftFactor { u, a_t, b_t } => {
            assert_eq!(u.compose(&a_t).unwrap(), a);
            assert_eq!(u.compose(&b_t).unwrap(), b);
            assert_eq!(a_t.compose(&c).unwrap(), b_t.compose(&d).unwrap());
        }
        v => panic!("unexpected verdict {v:?}"),
    }
}

#[test]
fn classify_trivial_degree_one_paths() {
    // deg A = 1
    let a = parse_ratfunc("2*z+1").unwrap();
    let c = RatFunc::from_poly(chebyshev(4));
    let b = a.compose(&RatFunc::from_poly(chebyshev(2))).unwrap();
    let d = RatFunc::from_poly(chebyshev(2));
    match classify_double(&a, &c, &b, &d).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert!(w.reverify(&a, &c, &b, &d).unwrap());
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
    // deg D = 1
    let a2 = RatFunc::from_poly(chebyshev(2));
    let c2 = RatFunc::from_poly(chebyshev(3));
    let b2 = RatFunc::from_poly(chebyshev(6));
    let d2 = RatFunc::var();
    match classify_double(&a2, &c2, &b2, &d2).unwrap() {
        ClassifyOutcome::Classified(w) => {
            assert!(w.reverify(&a2, &c2, &b2, &d2).unwrap());
        }
        ClassifyOutcome::UnclassifiedBound(m) => panic!("bound: {m}"),
    }
}

#[test]
fn detect_special_analyzes_decomposable_inners() {
    // quads shaped (T_4, D_3 o (mu z), T_3, D_4) have decomposable inner
    // factors; the detector reports the reason rather than specialness
    let mu = Cyclo::one();
    let c = RatFunc::from_laurent(&laurent_d(3).twist(&mu));
    let d = RatFunc::from_laurent(&laurent_d(4));
    let a = RatFunc::from_poly(chebyshev(4));
    let b = RatFunc::from_poly(chebyshev(3));
    assert_eq!(a.compose(&c).unwrap(), b.compose(&d).unwrap());
    match detect_special(&a, &c, &b, &d).unwrap() {
        SpecialVerdict::NotSpecialInnerDecomposable => {}
        v => panic!("unexpected {v:?}"),
    }
}

#[test]
fn decompose_laurent_pole_only_at_zero() {
    use ritt_core::decomp::decompose_laurent;
    let l = Laurent::from_terms([(-6, Cyclo::one()), (-3, Cyclo::from_int(2))]);
    let chains = decompose_laurent(&l).unwrap();
    assert!(!chains.is_empty());
    for c in &chains {
        assert_eq!(c.composite().unwrap(), RatFunc::from_laurent(&l));
        assert_eq!(c.len(), 2);
    }
}

#[test]
fn first_ritt_on_twisted_rational() {
    use ritt_core::poly::{post_mobius, pre_mobius, Mobius};
    use ritt_core::ritt::first_ritt_check;
    // a rational function that is only Laurent after renormalization
    let mu = Mobius::new(
        Cyclo::one(),
        Cyclo::from_int(1),
        Cyclo::one(),
        Cyclo::from_int(-1),
    )
    .unwrap();
    let f = post_mobius(
        &mu,
        &pre_mobius(&RatFunc::from_laurent(&laurent_d(6)), &mu.inverse()),
    );
    let rep = first_ritt_check(&f, 8, 10_000).unwrap();
    assert!(rep.lengths_equal && rep.connected);
    assert!(rep.chains.len() >= 3);
}
