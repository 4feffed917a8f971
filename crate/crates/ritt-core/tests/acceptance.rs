//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with --nocapture). Every tolerance is exact; nothing here is
//! calibrated after the fact.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ritt_core::decomp::{decompose_poly, family_generator, right_factor, solve_zc, FamilyCase};
use ritt_core::genus::{
    genus_pair_rh2, genus_sum_rh0, merge_passports, passport_of_poly, special_values,
    SpecialVerdict,
};
use ritt_core::mono::{
    builtin_tuple, fiber_product, merge_labels, reduce_pair, BranchLabel, BuiltinKind,
    MonodromyTuple, Perm,
};
use ritt_core::num::Cyclo;
use ritt_core::poly::{chebyshev, laurent_d, Laurent, Poly, RatFunc};
use ritt_core::ritt::{first_ritt_check, weak_equivalence, MoveSearch};
use std::time::Instant;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn random_laurent(rng: &mut StdRng, max_deg: i64) -> Laurent {
    loop {
        let lo = -rng.gen_range(0..=max_deg / 2);
        let hi = rng.gen_range(1..=max_deg - (-lo));
        let mut terms = Vec::new();
        for e in lo..=hi {
            if rng.gen_bool(0.6) {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    terms.push((e, Cyclo::from_int(c)));
                }
            }
        }
        terms.push((hi, Cyclo::from_int(rng.gen_range(1..=3))));
        let l = Laurent::from_terms(terms);
        if !l.is_constant() {
            return l;
        }
    }
}

/// Criterion 1: the normal-form identity sweep over the stated grids.
#[test]
fn acceptance_1_family_identity_sweep() {
    let t0 = Instant::now();
    let mut rng = StdRng::seed_from_u64(11);
    let mut count = 0usize;

    // case 1: n <= 6, r < n coprime, random Laurent of degree <= 4
    for n in 1..=6u32 {
        for r in 0..n.max(1) {
            if gcd(n, r.max(1)) != 1 || (r == 0 && n != 1) {
                continue;
            }
            for _ in 0..3 {
                let l = random_laurent(&mut rng, 4);
                let q = family_generator(&FamilyCase::C1 { n, r, l }).unwrap();
                assert!(q.verify().unwrap());
                count += 1;
            }
        }
    }
    // case 2: random S of degree <= 4
    for deg in 0..=4usize {
        for _ in 0..3 {
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 1;
            }
            let s = Poly::from_int_coeffs(&coeffs);
            if s.is_zero() {
                continue;
            }
            let q = family_generator(&FamilyCase::C2 { s }).unwrap();
            assert!(q.verify().unwrap());
            count += 1;
        }
    }
    // cases 3 and 4: n, m <= 8 coprime
    for n in 1..=8u32 {
        for m in 1..=8u32 {
            if gcd(n, m) != 1 {
                continue;
            }
            let q = family_generator(&FamilyCase::C3 { n, m }).unwrap();
            assert!(q.verify().unwrap());
            let q = family_generator(&FamilyCase::C4 { n, m }).unwrap();
            assert!(q.verify().unwrap());
            count += 2;
        }
    }
    // case 5: n, m <= 4 coprime, l in {2,3,4}, all valid epsilon
    for n in 1..=4u32 {
        for m in 1..=4u32 {
            if gcd(n, m) != 1 {
                continue;
            }
            for l in 2..=4u32 {
                let order = 2 * n * l;
                for j in (1..order).step_by(2) {
                    let eps = Cyclo::root_of_unity(order, j as i64);
                    let q = family_generator(&FamilyCase::C5 { n, m, l, eps }).unwrap();
                    assert!(q.verify().unwrap());
                    count += 1;
                }
            }
        }
    }
    // case 6: the fixed pair
    let q = family_generator(&FamilyCase::C6).unwrap();
    assert!(q.verify().unwrap());
    count += 1;

    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 60, "sweep took {elapsed:?}");
    println!("criterion 1 PASS: {count} identities verified exactly in {elapsed:?}");
}

/// Criterion 2: o(T_nl, -T_ml) = 1 iff l <= 2 for coprime n, m.
#[test]
fn acceptance_2_reducibility_dichotomy() {
    let t0 = Instant::now();
    let mut checked = 0usize;
    for l in 1..=12u32 {
        for n in 1..=12u32 {
            for m in 1..=12u32 {
                if gcd(n, m) != 1 || n * l > 12 || m * l > 12 {
                    continue;
                }
                let f = builtin_tuple(&BuiltinKind::Chebyshev(n * l));
                let g = builtin_tuple(&BuiltinKind::ChebyshevNeg(m * l));
                let o = fiber_product(&f, &g).unwrap().count();
                assert_eq!(
                    o == 1,
                    l <= 2,
                    "T_{}(x) + T_{}(y): o = {o}, l = {l}",
                    n * l,
                    m * l
                );
                checked += 1;
            }
        }
    }
    // the anchor instance
    let f = builtin_tuple(&BuiltinKind::Chebyshev(4));
    let g = builtin_tuple(&BuiltinKind::ChebyshevNeg(4));
    assert!(fiber_product(&f, &g).unwrap().count() >= 2);
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 30);
    println!("criterion 2 PASS: dichotomy exact on {checked} pairs in {elapsed:?}");
}

fn random_perm(rng: &mut StdRng, n: usize) -> Perm {
    let mut img: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        img.swap(i, j);
    }
    Perm::from_images_one_based(&img).unwrap()
}

/// Random valid tuple: product-one by construction, retried until
/// transitive. Labels 0, 1, 2, ... with infinity last.
fn random_tuple(rng: &mut StdRng, n: usize, r: usize) -> MonodromyTuple {
    loop {
        let mut perms: Vec<Perm> = (0..r - 1).map(|_| random_perm(rng, n)).collect();
        let mut prod = Perm::identity(n);
        for p in &perms {
            prod = prod.then(p);
        }
        perms.push(prod.inverse());
        let labels: Vec<BranchLabel> = (0..r - 1)
            .map(|i| BranchLabel::finite(i as i64))
            .chain([BranchLabel::Inf])
            .collect();
        let t = MonodromyTuple::new(n, labels, perms).unwrap();
        if t.validate().is_ok() {
            return t;
        }
    }
}

/// Random polynomial monodromy: genus 0 with a full cycle at infinity,
/// by rejection.
fn random_poly_tuple(rng: &mut StdRng, n: usize, r: usize) -> MonodromyTuple {
    loop {
        let full = Perm::rotation(n, 1);
        let mut perms: Vec<Perm> = (0..r - 2).map(|_| random_perm(rng, n)).collect();
        let mut prod = Perm::identity(n);
        for p in &perms {
            prod = prod.then(p);
        }
        // last finite = prod^-1 * full^-1 so that the total product is 1
        perms.push(prod.inverse().then(&full.inverse()));
        perms.push(full);
        let labels: Vec<BranchLabel> = (0..r - 1)
            .map(|i| BranchLabel::finite(i as i64))
            .chain([BranchLabel::Inf])
            .collect();
        let t = MonodromyTuple::new(n, labels, perms).unwrap();
        if t.validate().is_ok() && t.genus() == Ok(0) {
            return t;
        }
    }
}

/// Criterion 3: genus-sum formula equals the component-wise sum on >= 200
/// random pairs; rh2 agrees on polynomial-shaped irreducible pairs.
#[test]
fn acceptance_3_genus_formula_consistency() {
    let t0 = Instant::now();
    let mut rng = StdRng::seed_from_u64(23);
    let mut rh0_checked = 0usize;
    while rh0_checked < 200 {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(1..=8);
        let r = rng.gen_range(2..=4);
        let f = random_tuple(&mut rng, n, r);
        let g = random_tuple(&mut rng, m, r);
        let fc = fiber_product(&f, &g).unwrap();
        let rhs = genus_sum_rh0(&f, &g).unwrap();
        assert_eq!(fc.chi_sum(), rhs, "rh0 mismatch at pair {rh0_checked}");
        rh0_checked += 1;
    }

    // rh2 agreement on polynomial-shaped irreducible pairs
    let mut rh2_checked = 0usize;
    while rh2_checked < 50 {
        let n = rng.gen_range(2..=7);
        let m = rng.gen_range(2..=7);
        let r = rng.gen_range(3..=4);
        let f = random_poly_tuple(&mut rng, n, r);
        let g = random_poly_tuple(&mut rng, m, r);
        let fc = fiber_product(&f, &g).unwrap();
        if fc.count() != 1 {
            continue;
        }
        let g1 = fc.components[0].genus;
        // passports over the merged finite branch set, from cycle types
        let (fm, gm) = merge_labels(&f, &g).unwrap();
        let aligned: Vec<(usize, Vec<usize>, Vec<usize>)> = fm
            .labels()
            .iter()
            .zip(fm.perms().iter().zip(gm.perms()))
            .filter(|(l, _)| **l != BranchLabel::Inf)
            .map(|(_, (pf, pg))| (1usize, pf.cycle_type(), pg.cycle_type()))
            .collect();
        let rh2 = genus_pair_rh2(n, m, &aligned).unwrap();
        assert_eq!(rh2, g1, "rh2 disagrees with the orbit genus");
        rh2_checked += 1;
    }
    let elapsed = t0.elapsed();
    println!(
        "criterion 3 PASS: rh0 exact on {rh0_checked} pairs, rh2 exact on {rh2_checked} polynomial pairs in {elapsed:?}"
    );
}

/// Criterion 4: coprime degrees force a single component.
#[test]
fn acceptance_4_coprime_irreducibility() {
    let mut rng = StdRng::seed_from_u64(37);
    let mut done = 0usize;
    while done < 100 {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(1..=8);
        if gcd(n as u32, m as u32) != 1 {
            continue;
        }
        let r = rng.gen_range(2..=4);
        let f = random_tuple(&mut rng, n, r);
        let g = random_tuple(&mut rng, m, r);
        assert_eq!(fiber_product(&f, &g).unwrap().count(), 1);
        done += 1;
    }
    println!("criterion 4 PASS: o = 1 on {done} coprime-degree pairs");
}

/// Criterion 5: spot genus values via both formulas and the orbit route.
#[test]
fn acceptance_5_spot_genus_values() {
    // g(z^2, z^3 - 3z) = 1. Orbit route: z^3 - 3z = 2 T_3(z/2) has the
    // Chebyshev cycle structure over branch values -2, 2.
    let f = builtin_tuple(&BuiltinKind::Power(2));
    let g = MonodromyTuple::new(
        3,
        vec![
            BranchLabel::finite(-2),
            BranchLabel::finite(2),
            BranchLabel::Inf,
        ],
        vec![
            Perm::reflection(3, -1),
            Perm::reflection(3, 0),
            Perm::rotation(3, -1),
        ],
    )
    .unwrap();
    assert_eq!(g.validate(), Ok(()));
    let fc = fiber_product(&f, &g).unwrap();
    assert_eq!(fc.count(), 1);
    assert_eq!(fc.components[0].genus, 1);

    // rh2 route from exact passports
    let pa = passport_of_poly(&Poly::from_int_coeffs(&[0, 0, 1])).unwrap();
    let pb = passport_of_poly(&Poly::from_int_coeffs(&[0, -3, 0, 1])).unwrap();
    let merged = merge_passports(&pa, &pb).unwrap();
    let aligned: Vec<(usize, Vec<usize>, Vec<usize>)> =
        merged.into_iter().map(|(_, c, x, y)| (c, x, y)).collect();
    assert_eq!(genus_pair_rh2(2, 3, &aligned).unwrap(), 1);

    // g(T_2, T_3) = 0 via both routes
    let f = builtin_tuple(&BuiltinKind::Chebyshev(2));
    let g = builtin_tuple(&BuiltinKind::Chebyshev(3));
    let fc = fiber_product(&f, &g).unwrap();
    assert_eq!(fc.count(), 1);
    assert_eq!(fc.components[0].genus, 0);
    let pa = passport_of_poly(&chebyshev(2)).unwrap();
    let pb = passport_of_poly(&chebyshev(3)).unwrap();
    let merged = merge_passports(&pa, &pb).unwrap();
    let aligned: Vec<(usize, Vec<usize>, Vec<usize>)> =
        merged.into_iter().map(|(_, c, x, y)| (c, x, y)).collect();
    assert_eq!(genus_pair_rh2(2, 3, &aligned).unwrap(), 0);

    println!("criterion 5 PASS: g(z^2, z^3-3z) = 1 and g(T_2, T_3) = 0 by both routes");
}

fn random_poly(rng: &mut StdRng, deg: usize) -> Poly {
    let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-4..=4)).collect();
    if coeffs[deg] == 0 {
        coeffs[deg] = rng.gen_range(1..=4);
    }
    Poly::from_int_coeffs(&coeffs)
}

/// Criterion 6: decomposition round trip on 100 random composites, plus the
/// first-Ritt length/multiset property for every test function.
#[test]
fn acceptance_6_decomposition_roundtrip() {
    let t0 = Instant::now();
    let mut rng = StdRng::seed_from_u64(41);
    for i in 0..100 {
        let dg = rng.gen_range(2..=6);
        let dh = rng.gen_range(2..=6);
        let g = random_poly(&mut rng, dg);
        let h = random_poly(&mut rng, dh);
        let p = g.compose(&h);
        // the split at deg H is recovered
        let (g2, h2) =
            right_factor(&p, dh).unwrap_or_else(|| panic!("composite {i} not recovered"));
        assert_eq!(g2.compose(&h2), p);
        // maximal chains recompose and share length and degree multiset
        let chains = decompose_poly(&p).unwrap();
        assert!(!chains.is_empty());
        let len0 = chains[0].len();
        let ms0 = chains[0].degree_multiset();
        for c in &chains {
            assert_eq!(c.composite().unwrap(), RatFunc::from_poly(p.clone()));
            assert_eq!(c.len(), len0);
            assert_eq!(c.degree_multiset(), ms0);
        }
    }
    println!(
        "criterion 6 PASS: 100 composites recovered, chain lengths and degree multisets equal ({:?})",
        t0.elapsed()
    );
}

/// Criterion 7: weak-equivalence connectivity for D_12, T_12, z^12 within
/// depth 8; every move re-verified exactly.
#[test]
fn acceptance_7_weak_equivalence_chains() {
    let t0 = Instant::now();
    let targets: Vec<(&str, RatFunc)> = vec![
        ("T_12", RatFunc::from_poly(chebyshev(12))),
        ("z^12", RatFunc::from_poly(Poly::monomial(Cyclo::one(), 12))),
        ("D_12", RatFunc::from_laurent(&laurent_d(12))),
    ];
    for (name, f) in targets {
        let rep = first_ritt_check(&f, 8, 10_000).unwrap();
        assert!(rep.lengths_equal, "{name}: chain lengths differ");
        assert!(
            rep.degree_multisets_equal,
            "{name}: factor degree multisets differ"
        );
        let chains = rep.chains;
        for i in 0..chains.len() {
            for j in (i + 1)..chains.len() {
                match weak_equivalence(&chains[i], &chains[j], 8, 10_000).unwrap() {
                    MoveSearch::Found(mc) => {
                        assert!(
                            mc.verify().unwrap(),
                            "{name}: move chain failed re-verification"
                        );
                    }
                    MoveSearch::NotWithinBounds => {
                        panic!("{name}: chains {i} and {j} not connected within depth 8")
                    }
                }
            }
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 120);
    println!("criterion 7 PASS: all chain pairs connected, every move exact ({elapsed:?})");
}

/// Criterion 8: common-source recovery for 50 random Laurent polynomials.
#[test]
fn acceptance_8_common_source_recovery() {
    let mut rng = StdRng::seed_from_u64(53);
    let mut done = 0usize;
    while done < 50 {
        let r = random_laurent(&mut rng, 5);
        let d1 = rng.gen_range(1..=4i64);
        let d2 = rng.gen_range(1..=4i64);
        let g = {
            let mut a = d1;
            let mut b = d2;
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a
        };
        let dd = d1 / g * d2;
        let l1 = r.compose_power(dd / d1);
        let l2 = r.compose_power(dd / d2);
        let rec = solve_zc(&l1, d1, &l2, d2).expect("solvable by construction");
        assert_eq!(rec.compose_power(dd / d1), l1);
        assert_eq!(rec.compose_power(dd / d2), l2);
        done += 1;
    }
    println!("criterion 8 PASS: 50 common sources recovered exactly");
}

/// Criterion 9: pair reduction on the sign-twisted Chebyshev pairs with
/// l > 2 terminates with equal degrees and preserved component count.
#[test]
fn acceptance_9_pair_reduction() {
    let mut done = 0usize;
    for l in 3..=12u32 {
        for n in 1..=12u32 {
            for m in 1..=12u32 {
                if gcd(n, m) != 1 || n * l > 12 || m * l > 12 {
                    continue;
                }
                let f = builtin_tuple(&BuiltinKind::Chebyshev(n * l));
                let g = builtin_tuple(&BuiltinKind::ChebyshevNeg(m * l));
                let o_before = fiber_product(&f, &g).unwrap().count();
                let out = reduce_pair(&f, &g, 1_000_000).unwrap();
                assert_eq!(out.o, o_before, "o changed during reduction");
                assert_eq!(
                    out.f.degree(),
                    out.g.degree(),
                    "reduced degrees differ for nl={}, ml={}",
                    n * l,
                    m * l
                );
                done += 1;
            }
        }
    }
    assert!(done > 0);
    println!("criterion 9 PASS: {done} reductions with equal degrees and preserved o");
}

/// Criterion 10: special-value verdicts and the exceptional passport.
#[test]
fn acceptance_10_special_value_verdicts() {
    use ritt_core::genus::{BranchValue, Passport, PassportEntry};
    let mk = |parts: Vec<Vec<usize>>| {
        let degree = parts[0].iter().sum();
        Passport::new(
            degree,
            parts
                .into_iter()
                .enumerate()
                .map(|(i, partition)| PassportEntry {
                    value: BranchValue::Named(format!("v{i}")),
                    count: 1,
                    partition,
                })
                .collect(),
        )
        .unwrap()
    };
    // violations of the count rule are all flagged
    let violating = vec![
        mk(vec![vec![4], vec![2, 2]]),                   // two special values
        mk(vec![vec![6], vec![1, 5]]),                   // special + 1-special
        mk(vec![vec![1, 3], vec![1, 3], vec![1, 3]]),    // three 1-special
        mk(vec![vec![2, 2], vec![1, 1, 2], vec![1, 3]]), // special + 1-special
    ];
    for p in &violating {
        assert!(
            !matches!(special_values(p).verdict, SpecialVerdict::Consistent { .. }),
            "violation not flagged: {p}"
        );
    }
    // the allowed exceptional shapes pass
    for p in [
        mk(vec![vec![1, 2, 2], vec![1, 2, 2]]),
        mk(vec![vec![1, 3], vec![1, 1, 2]]),
        mk(vec![vec![1, 2, 2], vec![1, 1, 3]]),
    ] {
        assert!(
            matches!(
                special_values(&p).verdict,
                SpecialVerdict::Consistent { .. }
            ),
            "exceptional shape rejected: {p}"
        );
    }
    // passport_of_poly(3z^4 - 4z^3) = {(1,3), (1,1,2)}
    let pp = passport_of_poly(&Poly::from_int_coeffs(&[0, 0, 0, -4, 3])).unwrap();
    let mut shapes: Vec<Vec<usize>> = pp.entries.iter().map(|e| e.partition.clone()).collect();
    shapes.sort();
    assert_eq!(shapes, vec![vec![1, 1, 2], vec![1, 3]]);
    println!("criterion 10 PASS: count-rule violations flagged, exceptional shapes pass, quartic passport exact");
}
