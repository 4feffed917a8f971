use crate::decomp::{chains_equivalent, DecompChain, Quad};
use crate::error::Result;
use crate::num::Cyclo;
use crate::poly::{Laurent, Poly, RatFunc};
use std::fmt;

/// Which normal-form family (or solver branch) a double decomposition
/// belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    Case6,
    Eq2PowerBranch,
    Eq2ChebyshevBranch,
    ReducibleChebyshev,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::Case1 => "case-1",
            CaseTag::Case2 => "case-2",
            CaseTag::Case3 => "case-3",
            CaseTag::Case4 => "case-4",
            CaseTag::Case5 => "case-5",
            CaseTag::Case6 => "case-6",
            CaseTag::Eq2PowerBranch => "eq2-power-branch",
            CaseTag::Eq2ChebyshevBranch => "eq2-chebyshev-branch",
            CaseTag::ReducibleChebyshev => "reducible-chebyshev",
        };
        write!(f, "{s}")
    }
}

/// Free parameters carried by a verdict.
#[derive(Clone, Debug, Default)]
pub struct WitnessParams {
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub r: Option<u32>,
    pub l: Option<u32>,
    pub eps: Option<Cyclo>,
    pub s: Option<Poly>,
    pub laurent: Option<Laurent>,
}

/// A classification verdict: the case tag, all parameters and conjugation
/// data needed to re-verify the identity by composition alone.
#[derive(Clone, Debug)]
pub struct CaseWitness {
    pub tag: CaseTag,
    /// Every case whose normal form matched (lowest is `tag`).
    pub all_tags: Vec<CaseTag>,
    /// Common left factor: A = R o A~, B = R o B~.
    pub r_outer: RatFunc,
    /// Common inner factor: C = C~ o W, D = D~ o W.
    pub w_inner: RatFunc,
    pub a_t: RatFunc,
    pub c_t: RatFunc,
    pub b_t: RatFunc,
    pub d_t: RatFunc,
    /// The exact normal-form quadruple the reduced pair is equivalent to.
    pub normal: Quad,
    pub params: WitnessParams,
    /// Sides swapped relative to the input (the classification is stated up
    /// to replacing A by B and C by D).
    pub swapped: bool,
    /// For the sign-twisted Chebyshev family: whether the reduced outer
    /// pair is reducible (exactly when l > 2).
    pub pair_reducible: Option<bool>,
}

impl CaseWitness {
    /// Re-verify every stored identity by pure composition: the splittings
    /// through R and W, the equality of the reduced compositions, and the
    /// factor-wise equivalence with the stored normal form.
    pub fn reverify(&self, a: &RatFunc, c: &RatFunc, b: &RatFunc, d: &RatFunc) -> Result<bool> {
        let (a, c, b, d) = if self.swapped {
            (b, d, a, c)
        } else {
            (a, c, b, d)
        };
        let ra = self.r_outer.compose(&self.a_t)?;
        let rb = self.r_outer.compose(&self.b_t)?;
        let cw = self.c_t.compose(&self.w_inner)?;
        let dw = self.d_t.compose(&self.w_inner)?;
        if &ra != a || &rb != b || &cw != c || &dw != d {
            return Ok(false);
        }
        let ac = self.a_t.compose(&self.c_t)?;
        let bd = self.b_t.compose(&self.d_t)?;
        if ac != bd {
            return Ok(false);
        }
        if !self.normal.verify()? {
            return Ok(false);
        }
        let side_a = DecompChain::new(vec![self.c_t.clone(), self.a_t.clone()])?;
        let side_a_nf = DecompChain::new(vec![self.normal.c.clone(), self.normal.a.clone()])?;
        let side_b = DecompChain::new(vec![self.d_t.clone(), self.b_t.clone()])?;
        let side_b_nf = DecompChain::new(vec![self.normal.d.clone(), self.normal.b.clone()])?;
        Ok(chains_equivalent(&side_a, &side_a_nf) && chains_equivalent(&side_b, &side_b_nf))
    }
}

/// Outcome of the classifier: a verified witness, or an explicit statement
/// that the recognizers were exhausted within their bounds (distinct from
/// mathematical impossibility).
#[derive(Clone, Debug)]
pub enum ClassifyOutcome {
    Classified(Box<CaseWitness>),
    UnclassifiedBound(String),
}
