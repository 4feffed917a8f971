//! Python bindings for the exact decomposition toolkit. Functions take and
//! return exact strings (the shared expression grammar) or JSON, never
//! floats.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use ritt_core::decomp as rd;
use ritt_core::expr;
use ritt_core::jsonio::{ChainJson, PassportJson, TupleJson, WitnessJson};
use ritt_core::mono;
use ritt_core::num::Cyclo;
use ritt_core::ritt as engine;
use serde_json::json;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Evaluate an expression to its canonical exact form.
#[pyfunction]
fn eval_expr(src: &str) -> PyResult<String> {
    let v = expr::parse_func(src).map_err(err)?;
    Ok(expr::print_func(&v))
}

/// Compose two expressions: a o b.
#[pyfunction]
fn compose(a: &str, b: &str) -> PyResult<String> {
    let f = expr::parse_ratfunc(a).map_err(err)?;
    let g = expr::parse_ratfunc(b).map_err(err)?;
    let h = f.compose(&g).map_err(err)?;
    Ok(expr::print_func(&expr::FuncVal::classify(h)))
}

/// Chebyshev polynomial T_n.
#[pyfunction]
fn chebyshev(n: u32) -> String {
    expr::print_poly(&ritt_core::poly::chebyshev(n))
}

/// D_n = (z^n + z^-n)/2.
#[pyfunction]
fn laurent_d(n: u32) -> PyResult<String> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be positive"));
    }
    Ok(expr::print_laurent(&ritt_core::poly::laurent_d(n)))
}

/// All maximal decompositions; innermost factor first in each chain.
#[pyfunction]
fn decompose(src: &str) -> PyResult<Vec<Vec<String>>> {
    let v = expr::parse_func(src).map_err(err)?;
    let chains = match v {
        expr::FuncVal::Poly(p) => rd::decompose_poly(&p).map_err(err)?,
        expr::FuncVal::Laurent(l) => rd::decompose_laurent(&l).map_err(err)?,
        expr::FuncVal::Rat(f) => {
            let nf = engine::r2_normalize(&f).map_err(err)?;
            rd::decompose_laurent(&nf.laurent).map_err(err)?
        }
    };
    Ok(chains
        .iter()
        .map(|c| c.factors().iter().map(expr::print_ratfunc).collect())
        .collect())
}

/// Built-in monodromy tuple as JSON: kind in {"power", "chebyshev",
/// "chebyshev-neg", "d"}.
#[pyfunction]
fn builtin_tuple(kind: &str, n: u32) -> PyResult<String> {
    let k = match kind {
        "power" => mono::BuiltinKind::Power(n),
        "chebyshev" => mono::BuiltinKind::Chebyshev(n),
        "chebyshev-neg" => mono::BuiltinKind::ChebyshevNeg(n),
        "d" => mono::BuiltinKind::LaurentD(n),
        _ => return Err(PyValueError::new_err("unknown builtin kind")),
    };
    let t = mono::builtin_tuple(&k);
    Ok(serde_json::to_string(&TupleJson::from_tuple(&t)).unwrap())
}

/// Validate a tuple; returns its genus or raises with the violated
/// invariant.
#[pyfunction]
fn validate_tuple(tuple_json: &str) -> PyResult<i64> {
    let tj: TupleJson = serde_json::from_str(tuple_json).map_err(err)?;
    let t = tj.to_tuple().map_err(err)?;
    t.genus().map_err(err)
}

/// Fiber product of two tuples: JSON with o and the per-component data.
#[pyfunction]
fn fiber_product(f_json: &str, g_json: &str) -> PyResult<String> {
    let f: TupleJson = serde_json::from_str(f_json).map_err(err)?;
    let g: TupleJson = serde_json::from_str(g_json).map_err(err)?;
    let fc = mono::fiber_product(&f.to_tuple().map_err(err)?, &g.to_tuple().map_err(err)?)
        .map_err(err)?;
    let out = json!({
        "o": fc.count(),
        "components": fc.components.iter().map(|c| json!({
            "size": c.orbit.len(),
            "genus": c.genus,
            "tuple": TupleJson::from_tuple(&c.tuple),
        })).collect::<Vec<_>>(),
    });
    Ok(out.to_string())
}

/// Right side of the genus-sum formula from cycle types.
#[pyfunction]
fn genus_rh0(f_json: &str, g_json: &str) -> PyResult<i64> {
    let f: TupleJson = serde_json::from_str(f_json).map_err(err)?;
    let g: TupleJson = serde_json::from_str(g_json).map_err(err)?;
    ritt_core::genus::genus_sum_rh0(&f.to_tuple().map_err(err)?, &g.to_tuple().map_err(err)?)
        .map_err(err)
}

/// Genus of A(x) - B(y) for an irreducible pair of polynomials, through
/// merged passports.
#[pyfunction]
fn genus_rh2(a: &str, b: &str) -> PyResult<i64> {
    let pa = ritt_core::genus::passport_of_poly(&expr::parse_poly(a).map_err(err)?).map_err(err)?;
    let pb = ritt_core::genus::passport_of_poly(&expr::parse_poly(b).map_err(err)?).map_err(err)?;
    let merged = ritt_core::genus::merge_passports(&pa, &pb).map_err(err)?;
    let aligned: Vec<(usize, Vec<usize>, Vec<usize>)> =
        merged.into_iter().map(|(_, c, x, y)| (c, x, y)).collect();
    ritt_core::genus::genus_pair_rh2(pa.degree, pb.degree, &aligned).map_err(err)
}

/// Passport of a rational-coefficient polynomial as JSON.
#[pyfunction]
fn passport(p: &str) -> PyResult<String> {
    let pp = ritt_core::genus::passport_of_poly(&expr::parse_poly(p).map_err(err)?).map_err(err)?;
    Ok(serde_json::to_string(&PassportJson::from_passport(&pp)).unwrap())
}

/// Irreducibility verdict for A(x) - B(y): "irreducible", "reducible", or
/// "unknown".
#[pyfunction]
fn irreducible(a: &str, b: &str) -> PyResult<String> {
    let pa = expr::parse_poly(a).map_err(err)?;
    let pb = expr::parse_poly(b).map_err(err)?;
    Ok(
        match ritt_core::genus::irreducibility(&pa, &pb, None).map_err(err)? {
            ritt_core::genus::IrredVerdict::Irreducible { .. } => "irreducible".into(),
            ritt_core::genus::IrredVerdict::Reducible { .. } => "reducible".into(),
            ritt_core::genus::IrredVerdict::Unknown => "unknown".into(),
        },
    )
}

/// Classify a double decomposition A o C = B o D; JSON witness with every
/// conjugator needed to re-verify it offline.
#[pyfunction]
fn classify(a: &str, c: &str, b: &str, d: &str) -> PyResult<String> {
    let fa = expr::parse_ratfunc(a).map_err(err)?;
    let fc = expr::parse_ratfunc(c).map_err(err)?;
    let fb = expr::parse_ratfunc(b).map_err(err)?;
    let fd = expr::parse_ratfunc(d).map_err(err)?;
    match engine::classify_double(&fa, &fc, &fb, &fd).map_err(err)? {
        engine::ClassifyOutcome::Classified(w) => Ok(json!({
            "verdict": "classified",
            "witness": WitnessJson::from_witness(&w),
        })
        .to_string()),
        engine::ClassifyOutcome::UnclassifiedBound(msg) => {
            Ok(json!({"verdict": "unclassified", "bound": msg}).to_string())
        }
    }
}

/// Generate one normal-form family instance and verify A o C = B o D.
#[pyfunction]
#[pyo3(signature = (case, n=None, m=None, r=None, l=None, s=None, laurent=None, eps=None))]
#[allow(clippy::too_many_arguments)]
fn verify_family(
    case: u32,
    n: Option<u32>,
    m: Option<u32>,
    r: Option<u32>,
    l: Option<u32>,
    s: Option<String>,
    laurent: Option<String>,
    eps: Option<String>,
) -> PyResult<String> {
    let need = |x: Option<u32>, what: &str| {
        x.ok_or_else(|| PyValueError::new_err(format!("case {case} needs {what}")))
    };
    let fc = match case {
        1 => rd::FamilyCase::C1 {
            n: need(n, "n")?,
            r: r.unwrap_or(0),
            l: laurent
                .as_deref()
                .map(expr::parse_laurent)
                .transpose()
                .map_err(err)?
                .unwrap_or_else(ritt_core::poly::Laurent::var),
        },
        2 => rd::FamilyCase::C2 {
            s: s.as_deref()
                .map(expr::parse_poly)
                .transpose()
                .map_err(err)?
                .unwrap_or_else(ritt_core::poly::Poly::one),
        },
        3 => rd::FamilyCase::C3 {
            n: need(n, "n")?,
            m: need(m, "m")?,
        },
        4 => rd::FamilyCase::C4 {
            n: need(n, "n")?,
            m: need(m, "m")?,
        },
        5 => {
            let nn = need(n, "n")?;
            let ll = need(l, "l")?;
            rd::FamilyCase::C5 {
                n: nn,
                m: need(m, "m")?,
                l: ll,
                eps: match eps.as_deref() {
                    Some(src) => expr::parse_scalar(src).map_err(err)?,
                    None => Cyclo::root_of_unity(2 * nn * ll, 1),
                },
            }
        }
        6 => rd::FamilyCase::C6,
        _ => return Err(PyValueError::new_err("case must be 1..6")),
    };
    let q = rd::family_generator(&fc).map_err(err)?;
    Ok(json!({
        "verified": q.verify().map_err(err)?,
        "A": expr::print_ratfunc(&q.a),
        "C": expr::print_ratfunc(&q.c),
        "B": expr::print_ratfunc(&q.b),
        "D": expr::print_ratfunc(&q.d),
    })
    .to_string())
}

/// Move-chain search between two maximal chains (factor lists, innermost
/// first). Returns JSON: found/states/moves or a bound report.
#[pyfunction]
#[pyo3(signature = (from_factors, to_factors, depth=8, bound=10000))]
fn ritt_chain(
    from_factors: Vec<String>,
    to_factors: Vec<String>,
    depth: usize,
    bound: usize,
) -> PyResult<String> {
    let c1 = ChainJson {
        factors: from_factors,
    }
    .to_chain()
    .map_err(err)?;
    let c2 = ChainJson {
        factors: to_factors,
    }
    .to_chain()
    .map_err(err)?;
    match engine::weak_equivalence(&c1, &c2, depth, bound).map_err(err)? {
        engine::MoveSearch::Found(mc) => Ok(json!({
            "found": true,
            "moves": mc.moves,
            "states": mc.states.iter().map(|s| ChainJson::from_chain(s).factors).collect::<Vec<_>>(),
        })
        .to_string()),
        engine::MoveSearch::NotWithinBounds => Ok(json!({"found": false}).to_string()),
    }
}

/// First-Ritt report for a two-pole function.
#[pyfunction]
#[pyo3(signature = (src, depth=8, bound=10000))]
fn first_ritt(src: &str, depth: usize, bound: usize) -> PyResult<String> {
    let f = expr::parse_ratfunc(src).map_err(err)?;
    let rep = engine::first_ritt_check(&f, depth, bound).map_err(err)?;
    Ok(json!({
        "chains": rep.chains.iter().map(|c| ChainJson::from_chain(c).factors).collect::<Vec<_>>(),
        "lengths_equal": rep.lengths_equal,
        "connected": rep.connected,
    })
    .to_string())
}

/// Largest common inner factor of two functions.
#[pyfunction]
fn common_inner_factor(f: &str, g: &str) -> PyResult<String> {
    let ff = expr::parse_ratfunc(f).map_err(err)?;
    let gg = expr::parse_ratfunc(g).map_err(err)?;
    Ok(expr::print_ratfunc(
        &rd::common_inner_factor(&ff, &gg).map_err(err)?,
    ))
}

#[pymodule]
fn ritt_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(eval_expr, m)?)?;
    m.add_function(wrap_pyfunction!(compose, m)?)?;
    m.add_function(wrap_pyfunction!(chebyshev, m)?)?;
    m.add_function(wrap_pyfunction!(laurent_d, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(builtin_tuple, m)?)?;
    m.add_function(wrap_pyfunction!(validate_tuple, m)?)?;
    m.add_function(wrap_pyfunction!(fiber_product, m)?)?;
    m.add_function(wrap_pyfunction!(genus_rh0, m)?)?;
    m.add_function(wrap_pyfunction!(genus_rh2, m)?)?;
    m.add_function(wrap_pyfunction!(passport, m)?)?;
    m.add_function(wrap_pyfunction!(irreducible, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_family, m)?)?;
    m.add_function(wrap_pyfunction!(ritt_chain, m)?)?;
    m.add_function(wrap_pyfunction!(first_ritt, m)?)?;
    m.add_function(wrap_pyfunction!(common_inner_factor, m)?)?;
    Ok(())
}
