//! JSON forms of the toolkit's objects. All numbers are exact strings in
//! the shared expression grammar; nothing is ever emitted as a float.

use crate::decomp::DecompChain;
use crate::error::{Error, Result};
use crate::expr::{parse_ratfunc, print_ratfunc};
use crate::genus::{Passport, PassportEntry};
use crate::mono::{BranchLabel, MonodromyTuple, Perm};
use crate::poly::RatFunc;
use crate::ritt::{CaseWitness, MoveChain};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TupleJson {
    pub degree: usize,
    pub branch_labels: Vec<String>,
    pub perms: Vec<Vec<usize>>,
}

impl TupleJson {
    pub fn from_tuple(t: &MonodromyTuple) -> Self {
        TupleJson {
            degree: t.degree(),
            branch_labels: t.labels().iter().map(|l| l.to_text()).collect(),
            perms: t.perms().iter().map(|p| p.one_based_images()).collect(),
        }
    }

    /// Validation runs on ingest: shape errors and invariant violations are
    /// reported, never silently accepted.
    pub fn to_tuple(&self) -> Result<MonodromyTuple> {
        let labels = self
            .branch_labels
            .iter()
            .map(|s| BranchLabel::from_text(s))
            .collect::<Result<Vec<_>>>()?;
        let perms = self
            .perms
            .iter()
            .map(|img| Perm::from_images_one_based(img))
            .collect::<Result<Vec<_>>>()?;
        let t = MonodromyTuple::new(self.degree, labels, perms)?;
        t.validate().map_err(|v| Error::Tuple(v.to_string()))?;
        Ok(t)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ChainJson {
    /// Rightmost-applied-first: `factors[0]` is the innermost factor.
    pub factors: Vec<String>,
}

impl ChainJson {
    pub fn from_chain(c: &DecompChain) -> Self {
        ChainJson {
            factors: c.factors().iter().map(print_ratfunc).collect(),
        }
    }

    pub fn to_chain(&self) -> Result<DecompChain> {
        let factors = self
            .factors
            .iter()
            .map(|s| parse_ratfunc(s))
            .collect::<Result<Vec<_>>>()?;
        DecompChain::new(factors)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PassportEntryJson {
    pub label: String,
    #[serde(default = "one")]
    pub count: usize,
    pub partition: Vec<usize>,
}

fn one() -> usize {
    1
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PassportJson {
    pub degree: usize,
    pub entries: Vec<PassportEntryJson>,
}

impl PassportJson {
    pub fn from_passport(p: &Passport) -> Self {
        PassportJson {
            degree: p.degree,
            entries: p
                .entries
                .iter()
                .map(|e| PassportEntryJson {
                    label: e.value.label(),
                    count: e.count,
                    partition: e.partition.clone(),
                })
                .collect(),
        }
    }

    pub fn to_passport(&self) -> Result<Passport> {
        Passport::new(
            self.degree,
            self.entries
                .iter()
                .map(|e| {
                    let mut partition = e.partition.clone();
                    partition.sort_unstable();
                    PassportEntry {
                        value: crate::genus::BranchValue::Named(e.label.clone()),
                        count: e.count,
                        partition,
                    }
                })
                .collect(),
        )
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct WitnessJson {
    pub case: String,
    pub all_cases: Vec<String>,
    pub r_outer: String,
    pub w_inner: String,
    pub a_tilde: String,
    pub c_tilde: String,
    pub b_tilde: String,
    pub d_tilde: String,
    pub normal_a: String,
    pub normal_c: String,
    pub normal_b: String,
    pub normal_d: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub laurent: Option<String>,
    pub swapped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_reducible: Option<bool>,
}

impl WitnessJson {
    pub fn from_witness(w: &CaseWitness) -> Self {
        WitnessJson {
            case: w.tag.to_string(),
            all_cases: w.all_tags.iter().map(|t| t.to_string()).collect(),
            r_outer: print_ratfunc(&w.r_outer),
            w_inner: print_ratfunc(&w.w_inner),
            a_tilde: print_ratfunc(&w.a_t),
            c_tilde: print_ratfunc(&w.c_t),
            b_tilde: print_ratfunc(&w.b_t),
            d_tilde: print_ratfunc(&w.d_t),
            normal_a: print_ratfunc(&w.normal.a),
            normal_c: print_ratfunc(&w.normal.c),
            normal_b: print_ratfunc(&w.normal.b),
            normal_d: print_ratfunc(&w.normal.d),
            n: w.params.n,
            m: w.params.m,
            r: w.params.r,
            l: w.params.l,
            eps: w.params.eps.as_ref().map(|e| e.to_string()),
            s: w.params.s.as_ref().map(|p| crate::expr::print_poly(p)),
            laurent: w
                .params
                .laurent
                .as_ref()
                .map(|l| crate::expr::print_laurent(l)),
            swapped: w.swapped,
            pair_reducible: w.pair_reducible,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct MoveChainJson {
    pub states: Vec<ChainJson>,
    pub moves: Vec<usize>,
}

impl MoveChainJson {
    pub fn from_move_chain(mc: &MoveChain) -> Self {
        MoveChainJson {
            states: mc.states.iter().map(ChainJson::from_chain).collect(),
            moves: mc.moves.clone(),
        }
    }
}

/// Parse a CLI function argument: either an inline expression or
/// `@file.json` holding a chain whose composite is used.
pub fn parse_func_arg(src: &str) -> Result<RatFunc> {
    if let Some(path) = src.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read {path}: {e}")))?;
        let cj: ChainJson = serde_json::from_str(&text)
            .map_err(|e| Error::domain(format!("bad chain JSON in {path}: {e}")))?;
        return cj.to_chain()?.composite();
    }
    parse_ratfunc(src)
}

pub fn read_tuple_file(path: &str) -> Result<MonodromyTuple> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::domain(format!("cannot read {path}: {e}")))?;
    let tj: TupleJson = serde_json::from_str(&text)
        .map_err(|e| Error::domain(format!("bad tuple JSON in {path}: {e}")))?;
    tj.to_tuple()
}
