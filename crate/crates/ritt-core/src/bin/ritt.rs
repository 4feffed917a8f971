//! Command-line front end: expression parsing, JSON ingestion and emission,
//! and subcommands exposing the toolkit's operations for scripted
//! verification runs.
//!
//! Exit codes: 0 = verified / positive verdict, 1 = mathematical negative,
//! 2 = parse errors, invariant violations, or search-bound exhaustion.

use clap::{Args, Parser, Subcommand};
use ritt_core::decomp::{
    common_inner_factor, decompose_laurent, decompose_poly, family_generator, solve_zc,
    symmetry_extract, FamilyCase,
};
use ritt_core::error::Error;
use ritt_core::expr::{parse_func, parse_laurent, parse_poly, parse_scalar, print_func, FuncVal};
use ritt_core::genus::{
    genus_pair_rh2, genus_sum_rh0, irreducibility, merge_passports, passport_of_poly,
    special_values, IrredVerdict, SpecialVerdict,
};
use ritt_core::jsonio::{
    parse_func_arg, read_tuple_file, ChainJson, MoveChainJson, PassportJson, TupleJson, WitnessJson,
};
use ritt_core::mono::{block_systems, builtin_tuple, fiber_product, reduce_pair, BuiltinKind};
use ritt_core::num::Cyclo;
use ritt_core::poly::Laurent;
use ritt_core::ritt::{
    classify_double, first_ritt_check, weak_equivalence, ClassifyOutcome, MoveSearch,
};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ritt",
    about = "Exact functional decomposition, monodromy, and double-decomposition classification"
)]
struct Cli {
    /// Emit machine-readable JSON (always on; accepted for compatibility).
    #[arg(long, global = true, default_value_t = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compose two functions: A o B.
    Compose(ComposeArgs),
    /// All maximal decompositions of a polynomial or Laurent polynomial.
    Decompose(DecomposeArgs),
    /// Classify a double decomposition A o C = B o D.
    Classify(QuadArgs),
    /// Orbits, restricted tuples, and genera of the pair action.
    FiberProduct(TwoTuples),
    /// Genus bookkeeping: rh0, rh2, passport, special.
    #[command(subcommand)]
    Genus(GenusCmd),
    /// Irreducibility verdict for A(x) - B(y) = 0.
    Irreducible(IrredArgs),
    /// Passport of a rational-coefficient polynomial.
    Passport(PassportArgs),
    /// Move-chain search between two maximal decompositions.
    RittChain(RittChainArgs),
    /// First-Ritt report: all maximal chains, lengths, connectivity.
    FirstRitt(FirstRittArgs),
    /// Generate and verify one normal-form family instance.
    VerifyThm11(VerifyArgs),
    /// Monodromy-tuple operations: validate, product, blocks, reduce.
    #[command(subcommand)]
    Mono(MonoCmd),
    /// Common source of L1 o z^d1 = L2 o z^d2.
    SolveZc(SolveZcArgs),
    /// Extract R with F = R o D_n from a doubly symmetric function.
    Symmetry(SymmetryArgs),
    /// Largest common inner factor of two functions.
    CommonInner(ComposeArgs),
}

#[derive(Args)]
struct ComposeArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: String,
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(allow_hyphen_values = true)]
    expr: String,
}

#[derive(Args)]
struct QuadArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    #[arg(long = "C", allow_hyphen_values = true)]
    c: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: String,
    #[arg(long = "D", allow_hyphen_values = true)]
    d: String,
}

#[derive(Args)]
struct TwoTuples {
    #[arg(long)]
    tuple: String,
    #[arg(long)]
    tuple2: String,
}

#[derive(Subcommand)]
enum GenusCmd {
    /// Genus-sum formula from cycle types of two tuples.
    Rh0(TwoTuples),
    /// Pair genus from merged passports of two polynomials.
    Rh2(ComposeArgs),
    /// Passport of a polynomial.
    Passport(PassportArgs),
    /// Special-value tags and the count constraints.
    Special(PassportArgs),
}

#[derive(Args)]
struct IrredArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: String,
    #[arg(long)]
    tuple: Option<String>,
    #[arg(long)]
    tuple2: Option<String>,
}

#[derive(Args)]
struct PassportArgs {
    #[arg(long = "P", allow_hyphen_values = true)]
    p: Option<String>,
    /// Hand-entered passport JSON file (for special-value analysis).
    #[arg(long)]
    passport: Option<String>,
    expr: Option<String>,
}

#[derive(Args)]
struct RittChainArgs {
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    #[arg(long, default_value_t = 8)]
    depth: usize,
    #[arg(long, default_value_t = 10_000)]
    bound: usize,
}

#[derive(Args)]
struct FirstRittArgs {
    #[arg(allow_hyphen_values = true)]
    expr: String,
    #[arg(long, default_value_t = 8)]
    depth: usize,
    #[arg(long, default_value_t = 10_000)]
    bound: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    case: u32,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    /// Laurent polynomial parameter for case 1.
    #[arg(long = "L", allow_hyphen_values = true)]
    laurent: Option<String>,
    /// Polynomial parameter for case 2.
    #[arg(long = "S", allow_hyphen_values = true)]
    s: Option<String>,
    /// Root of unity for case 5 (defaults to zeta_{2nl}).
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    /// Also classify the generated quadruple.
    #[arg(long, default_value_t = false)]
    classify: bool,
    /// Sweep the whole verification grid for the case instead of a single
    /// instance.
    #[arg(long, default_value_t = false)]
    sweep: bool,
}

#[derive(Subcommand)]
enum MonoCmd {
    /// Check product-one and transitivity of a tuple.
    Validate(OneTuple),
    /// Fiber product of two tuples (alias of fiber-product).
    Product(TwoTuples),
    /// All imprimitivity systems of the generated group.
    Blocks(BlocksArgs),
    /// Pair reduction through the opposite kernels.
    Reduce(ReduceArgs),
    /// Emit a built-in tuple: power n, chebyshev n, chebyshev-neg n, d n.
    Builtin(BuiltinArgs),
}

#[derive(Args)]
struct OneTuple {
    #[arg(long)]
    tuple: String,
}

#[derive(Args)]
struct BlocksArgs {
    #[arg(long)]
    tuple: String,
    #[arg(long, default_value_t = 64)]
    bound: usize,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    tuple: String,
    #[arg(long)]
    tuple2: String,
    #[arg(long, default_value_t = 1_000_000)]
    bound: usize,
}

#[derive(Args)]
struct BuiltinArgs {
    kind: String,
    n: u32,
}

#[derive(Args)]
struct SolveZcArgs {
    #[arg(long = "L1", allow_hyphen_values = true)]
    l1: String,
    #[arg(long)]
    d1: i64,
    #[arg(long = "L2", allow_hyphen_values = true)]
    l2: String,
    #[arg(long)]
    d2: i64,
}

#[derive(Args)]
struct SymmetryArgs {
    #[arg(long = "F", allow_hyphen_values = true)]
    f: String,
    #[arg(long)]
    n: u32,
}

fn emit(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).unwrap());
}

fn fiber_cmd(t: TwoTuples) -> Result<ExitCode, Error> {
    let f = read_tuple_file(&t.tuple)?;
    let g = read_tuple_file(&t.tuple2)?;
    let fc = fiber_product(&f, &g)?;
    emit(json!({
        "o": fc.count(),
        "components": fc
            .components
            .iter()
            .map(|c| json!({
                "size": c.orbit.len(),
                "genus": c.genus,
                "tuple": TupleJson::from_tuple(&c.tuple),
            }))
            .collect::<Vec<_>>(),
    }));
    Ok(ExitCode::SUCCESS)
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Verify every instance of one family over its standard grid.
fn sweep_case(case: u32) -> Result<usize, Error> {
    let mut count = 0usize;
    let mut run = |fc: FamilyCase| -> Result<(), Error> {
        let q = family_generator(&fc)?;
        if !q.verify()? {
            return Err(Error::domain(format!("identity failed for {fc:?}")));
        }
        count += 1;
        Ok(())
    };
    match case {
        1 => {
            for n in 1..=6u32 {
                for r in 0..n.max(1) {
                    if gcd_u32(n, r.max(1)) != 1 || (r == 0 && n != 1) {
                        continue;
                    }
                    for t in 0..3i64 {
                        let l = Laurent::from_terms([
                            (2, Cyclo::from_int(t + 1)),
                            (0, Cyclo::from_int(1 - t)),
                            (-1, Cyclo::from_int(2)),
                        ]);
                        run(FamilyCase::C1 { n, r, l })?;
                    }
                }
            }
        }
        2 => {
            for d in 0..=4usize {
                let mut coeffs = vec![1i64; d + 1];
                coeffs[0] = 2;
                run(FamilyCase::C2 {
                    s: ritt_core::poly::Poly::from_int_coeffs(&coeffs),
                })?;
            }
        }
        3 | 4 => {
            for n in 1..=8u32 {
                for m in 1..=8u32 {
                    if gcd_u32(n, m) != 1 {
                        continue;
                    }
                    run(if case == 3 {
                        FamilyCase::C3 { n, m }
                    } else {
                        FamilyCase::C4 { n, m }
                    })?;
                }
            }
        }
        5 => {
            for n in 1..=4u32 {
                for m in 1..=4u32 {
                    if gcd_u32(n, m) != 1 {
                        continue;
                    }
                    for l in 2..=4u32 {
                        let order = 2 * n * l;
                        for j in (1..order).step_by(2) {
                            run(FamilyCase::C5 {
                                n,
                                m,
                                l,
                                eps: Cyclo::root_of_unity(order, j as i64),
                            })?;
                        }
                    }
                }
            }
        }
        6 => run(FamilyCase::C6)?,
        other => return Err(Error::domain(format!("unknown case {other}"))),
    }
    Ok(count)
}

fn verify_cmd(a: VerifyArgs) -> Result<ExitCode, Error> {
    if a.sweep {
        let count = sweep_case(a.case)?;
        emit(json!({"case": a.case, "verified": true, "instances": count}));
        return Ok(ExitCode::SUCCESS);
    }
    let case = match a.case {
        1 => FamilyCase::C1 {
            n: a.n.ok_or_else(|| Error::domain("case 1 needs --n"))?,
            r: a.r.unwrap_or(0),
            l: a.laurent
                .as_deref()
                .map(parse_laurent)
                .transpose()?
                .unwrap_or_else(|| Laurent::from_terms([(1, Cyclo::one()), (0, Cyclo::one())])),
        },
        2 => FamilyCase::C2 {
            s: a.s
                .as_deref()
                .map(parse_poly)
                .transpose()?
                .unwrap_or_else(ritt_core::poly::Poly::one),
        },
        3 => FamilyCase::C3 {
            n: a.n.ok_or_else(|| Error::domain("case 3 needs --n"))?,
            m: a.m.ok_or_else(|| Error::domain("case 3 needs --m"))?,
        },
        4 => FamilyCase::C4 {
            n: a.n.ok_or_else(|| Error::domain("case 4 needs --n"))?,
            m: a.m.ok_or_else(|| Error::domain("case 4 needs --m"))?,
        },
        5 => {
            let n = a.n.ok_or_else(|| Error::domain("case 5 needs --n"))?;
            let l = a.l.ok_or_else(|| Error::domain("case 5 needs --l"))?;
            let eps = match a.eps.as_deref() {
                Some(src) => parse_scalar(src)?,
                None => Cyclo::root_of_unity(2 * n * l, 1),
            };
            FamilyCase::C5 {
                n,
                m: a.m.ok_or_else(|| Error::domain("case 5 needs --m"))?,
                l,
                eps,
            }
        }
        6 => FamilyCase::C6,
        other => return Err(Error::domain(format!("unknown case {other}"))),
    };
    let quad = family_generator(&case)?;
    let verified = quad.verify()?;
    let mut out = json!({
        "case": a.case,
        "verified": verified,
        "A": ritt_core::expr::print_ratfunc(&quad.a),
        "C": ritt_core::expr::print_ratfunc(&quad.c),
        "B": ritt_core::expr::print_ratfunc(&quad.b),
        "D": ritt_core::expr::print_ratfunc(&quad.d),
    });
    if a.classify {
        match classify_double(&quad.a, &quad.c, &quad.b, &quad.d)? {
            ClassifyOutcome::Classified(w) => {
                out["classified"] = json!(WitnessJson::from_witness(&w));
            }
            ClassifyOutcome::UnclassifiedBound(msg) => {
                out["classified"] = json!({"bound": msg});
            }
        }
    }
    emit(out);
    Ok(if verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Compose(a) => {
            let f = parse_func_arg(&a.a)?;
            let g = parse_func_arg(&a.b)?;
            let h = f.compose(&g)?;
            emit(json!({"result": print_func(&FuncVal::classify(h))}));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decompose(a) => {
            let v = parse_func(&a.expr)?;
            let chains = match v {
                FuncVal::Poly(p) => decompose_poly(&p)?,
                FuncVal::Laurent(l) => decompose_laurent(&l)?,
                FuncVal::Rat(f) => {
                    let nf = ritt_core::ritt::r2_normalize(&f)?;
                    decompose_laurent(&nf.laurent)?
                }
            };
            emit(json!({
                "count": chains.len(),
                "chains": chains.iter().map(ChainJson::from_chain).collect::<Vec<_>>(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Classify(q) => {
            let a = parse_func_arg(&q.a)?;
            let c = parse_func_arg(&q.c)?;
            let b = parse_func_arg(&q.b)?;
            let d = parse_func_arg(&q.d)?;
            match classify_double(&a, &c, &b, &d)? {
                ClassifyOutcome::Classified(w) => {
                    let ok = w.reverify(&a, &c, &b, &d)?;
                    emit(json!({
                        "verdict": "classified",
                        "reverified": ok,
                        "witness": WitnessJson::from_witness(&w),
                    }));
                    Ok(ExitCode::SUCCESS)
                }
                ClassifyOutcome::UnclassifiedBound(msg) => {
                    emit(json!({"verdict": "unclassified", "bound": msg}));
                    Ok(ExitCode::from(2))
                }
            }
        }
        Cmd::FiberProduct(t) => fiber_cmd(t),
        Cmd::Genus(GenusCmd::Rh0(t)) => {
            let f = read_tuple_file(&t.tuple)?;
            let g = read_tuple_file(&t.tuple2)?;
            let v = genus_sum_rh0(&f, &g)?;
            emit(json!({"rh0_chi_sum": v}));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Genus(GenusCmd::Rh2(a)) => {
            let pa = passport_of_poly(&parse_poly(&a.a)?)?;
            let pb = passport_of_poly(&parse_poly(&a.b)?)?;
            let merged = merge_passports(&pa, &pb)?;
            let aligned: Vec<(usize, Vec<usize>, Vec<usize>)> =
                merged.into_iter().map(|(_, c, x, y)| (c, x, y)).collect();
            let g = genus_pair_rh2(pa.degree, pb.degree, &aligned)?;
            emit(json!({"genus": g}));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Genus(GenusCmd::Passport(p)) | Cmd::Passport(p) => {
            let src =
                p.p.or(p.expr)
                    .ok_or_else(|| Error::domain("missing polynomial"))?;
            let pp = passport_of_poly(&parse_poly(&src)?)?;
            emit(json!(PassportJson::from_passport(&pp)));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Genus(GenusCmd::Special(p)) => {
            let pp = if let Some(path) = p.passport {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::domain(format!("cannot read {path}: {e}")))?;
                let pj: PassportJson = serde_json::from_str(&text)
                    .map_err(|e| Error::domain(format!("bad passport JSON: {e}")))?;
                pj.to_passport()?
            } else {
                let src =
                    p.p.or(p.expr)
                        .ok_or_else(|| Error::domain("missing polynomial or passport"))?;
                passport_of_poly(&parse_poly(&src)?)?
            };
            let rep = special_values(&pp);
            let tags: Vec<serde_json::Value> = rep
                .tags
                .iter()
                .map(|(count, t)| match t {
                    None => json!({"count": count, "tag": "none"}),
                    Some(tag) => json!({
                        "count": count,
                        "tag": format!("{:?}", tag.kind),
                        "divisor": tag.divisor,
                    }),
                })
                .collect();
            let (verdict, ok) = match &rep.verdict {
                SpecialVerdict::Consistent { clause } => {
                    (json!({"consistent": true, "clause": clause}), true)
                }
                v => (
                    json!({"consistent": false, "detail": format!("{v:?}")}),
                    false,
                ),
            };
            emit(json!({"tags": tags, "verdict": verdict}));
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Irreducible(a) => {
            let pa = parse_poly(&a.a)?;
            let pb = parse_poly(&a.b)?;
            let tf = a.tuple.as_deref().map(read_tuple_file).transpose()?;
            let tg = a.tuple2.as_deref().map(read_tuple_file).transpose()?;
            let tuples = match (&tf, &tg) {
                (Some(f), Some(g)) => Some((f, g)),
                _ => None,
            };
            match irreducibility(&pa, &pb, tuples)? {
                IrredVerdict::Irreducible { reason } => {
                    emit(json!({"verdict": "irreducible", "reason": reason}));
                    Ok(ExitCode::SUCCESS)
                }
                IrredVerdict::Reducible { o, reason } => {
                    emit(json!({"verdict": "reducible", "o": o, "reason": reason}));
                    Ok(ExitCode::from(1))
                }
                IrredVerdict::Unknown => {
                    emit(json!({"verdict": "unknown"}));
                    Ok(ExitCode::from(2))
                }
            }
        }
        Cmd::RittChain(a) => {
            let read_chain = |path: &str| -> Result<ChainJson, Error> {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::domain(format!("cannot read {path}: {e}")))?;
                serde_json::from_str(&text)
                    .map_err(|e| Error::domain(format!("bad chain JSON: {e}")))
            };
            let c1 = read_chain(&a.from)?.to_chain()?;
            let c2 = read_chain(&a.to)?.to_chain()?;
            match weak_equivalence(&c1, &c2, a.depth, a.bound)? {
                MoveSearch::Found(mc) => {
                    let ok = mc.verify()?;
                    emit(json!({
                        "verdict": "connected",
                        "reverified": ok,
                        "moves": MoveChainJson::from_move_chain(&mc),
                    }));
                    Ok(ExitCode::SUCCESS)
                }
                MoveSearch::NotWithinBounds => {
                    emit(json!({"verdict": "not-within-bounds"}));
                    Ok(ExitCode::from(2))
                }
            }
        }
        Cmd::FirstRitt(a) => {
            let f = parse_func_arg(&a.expr)?;
            let rep = first_ritt_check(&f, a.depth, a.bound)?;
            emit(json!({
                "chains": rep.chains.iter().map(ChainJson::from_chain).collect::<Vec<_>>(),
                "lengths_equal": rep.lengths_equal,
                "degree_multisets_equal": rep.degree_multisets_equal,
                "connected": rep.connected,
                "edges": rep.edges,
            }));
            Ok(if rep.lengths_equal && rep.connected {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::VerifyThm11(a) => verify_cmd(a),
        Cmd::Mono(MonoCmd::Validate(t)) => {
            // ingest without auto-validation so the violated invariant is
            // reported rather than erred on
            let text = std::fs::read_to_string(&t.tuple)
                .map_err(|e| Error::domain(format!("cannot read {}: {e}", t.tuple)))?;
            let tj: TupleJson = serde_json::from_str(&text)
                .map_err(|e| Error::domain(format!("bad tuple JSON: {e}")))?;
            let labels = tj
                .branch_labels
                .iter()
                .map(|s| ritt_core::mono::BranchLabel::from_text(s))
                .collect::<Result<Vec<_>, _>>()?;
            let perms = tj
                .perms
                .iter()
                .map(|img| ritt_core::mono::Perm::from_images_one_based(img))
                .collect::<Result<Vec<_>, _>>()?;
            let tuple = ritt_core::mono::MonodromyTuple::new(tj.degree, labels, perms)?;
            match tuple.validate() {
                Ok(()) => {
                    emit(json!({"verdict": "ok", "genus": tuple.genus()?}));
                    Ok(ExitCode::SUCCESS)
                }
                Err(v) => {
                    emit(json!({"verdict": "violation", "detail": v.to_string()}));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::Mono(MonoCmd::Product(t)) => fiber_cmd(t),
        Cmd::Mono(MonoCmd::Blocks(a)) => {
            let t = read_tuple_file(&a.tuple)?;
            let systems = block_systems(&t, a.bound)?;
            emit(json!({
                "count": systems.len(),
                "systems": systems
                    .iter()
                    .map(|s| {
                        s.iter()
                            .map(|b| b.iter().map(|x| x + 1).collect::<Vec<_>>())
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Mono(MonoCmd::Reduce(a)) => {
            let f = read_tuple_file(&a.tuple)?;
            let g = read_tuple_file(&a.tuple2)?;
            let out = reduce_pair(&f, &g, a.bound)?;
            emit(json!({
                "o": out.o,
                "steps": out.steps.len(),
                "f_reduced": TupleJson::from_tuple(&out.f),
                "g_reduced": TupleJson::from_tuple(&out.g),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Mono(MonoCmd::Builtin(a)) => {
            let kind = match a.kind.as_str() {
                "power" => BuiltinKind::Power(a.n),
                "chebyshev" => BuiltinKind::Chebyshev(a.n),
                "chebyshev-neg" => BuiltinKind::ChebyshevNeg(a.n),
                "d" => BuiltinKind::LaurentD(a.n),
                other => return Err(Error::domain(format!("unknown builtin kind `{other}`"))),
            };
            emit(json!(TupleJson::from_tuple(&builtin_tuple(&kind))));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::SolveZc(a) => {
            let l1 = parse_laurent(&a.l1)?;
            let l2 = parse_laurent(&a.l2)?;
            match solve_zc(&l1, a.d1, &l2, a.d2) {
                Some(r) => {
                    emit(json!({"verdict": "solved", "R": ritt_core::expr::print_laurent(&r)}));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    emit(json!({"verdict": "no-solution"}));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::Symmetry(a) => {
            let f = parse_func_arg(&a.f)?;
            match symmetry_extract(&f, a.n)? {
                Some(r) => {
                    emit(json!({"verdict": "extracted", "R": ritt_core::expr::print_ratfunc(&r)}));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    emit(json!({"verdict": "not-invariant"}));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::CommonInner(a) => {
            let f = parse_func_arg(&a.a)?;
            let g = parse_func_arg(&a.b)?;
            let w = common_inner_factor(&f, &g)?;
            emit(json!({"W": ritt_core::expr::print_ratfunc(&w)}));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.json;
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({"error": e.to_string()})).unwrap()
            );
            ExitCode::from(2)
        }
    }
}
