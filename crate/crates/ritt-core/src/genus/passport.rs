use super::qring;
use crate::error::{Error, Result};
use crate::num::{polyvec as pv, Rat};
use crate::poly::Poly;
use std::fmt;

/// Where a passport entry's branch points live.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BranchValue {
    /// A single rational branch value.
    Rational(Rat),
    /// The roots of a squarefree rational factor m(t); `count` such points.
    Factor(Vec<Rat>),
    /// Free-form label for hand-entered passports.
    Named(String),
}

impl BranchValue {
    pub fn label(&self) -> String {
        match self {
            BranchValue::Rational(r) => r.to_string(),
            BranchValue::Factor(m) => {
                let p = Poly::new(
                    m.iter()
                        .map(|c| crate::num::Cyclo::from_rat(c.clone()))
                        .collect(),
                );
                format!("roots of {}", crate::expr::print_poly(&p).replace('z', "t"))
            }
            BranchValue::Named(s) => s.clone(),
        }
    }
}

/// One passport row: `count` branch points sharing a multiplicity partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PassportEntry {
    pub value: BranchValue,
    pub count: usize,
    /// Parts ascending; sums to the degree.
    pub partition: Vec<usize>,
}

impl PassportEntry {
    pub fn is_trivial(&self) -> bool {
        self.partition.iter().all(|&p| p == 1)
    }
}

/// Passport: the multiset of cycle-type partitions of a function at its
/// finite branch points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Passport {
    pub degree: usize,
    pub entries: Vec<PassportEntry>,
}

impl Passport {
    pub fn new(degree: usize, entries: Vec<PassportEntry>) -> Result<Self> {
        for e in &entries {
            let sum: usize = e.partition.iter().sum();
            if sum != degree {
                return Err(Error::domain(format!(
                    "partition {:?} does not sum to degree {degree}",
                    e.partition
                )));
            }
            if e.count == 0 {
                return Err(Error::domain("entry with zero branch points"));
            }
        }
        Ok(Passport { degree, entries })
    }

    /// Number of branch points carrying a nontrivial partition.
    pub fn s_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| !e.is_trivial())
            .map(|e| e.count)
            .sum()
    }

    /// Riemann-Hurwitz consistency for polynomial passports over the finite
    /// branch points: sum of part-counts equals (s-1) n + 1, with s the
    /// number of listed branch points.
    pub fn polynomial_consistency(&self) -> bool {
        let s: usize = self.entries.iter().map(|e| e.count).sum();
        let parts: usize = self
            .entries
            .iter()
            .map(|e| e.count * e.partition.len())
            .sum();
        parts == (s.saturating_sub(1)) * self.degree + 1
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}:", self.degree)?;
        for e in &self.entries {
            write!(
                f,
                " {}x({}) at {};",
                e.count,
                e.partition
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                e.value.label()
            )?;
        }
        Ok(())
    }
}

/// Passport of a rational-coefficient polynomial. Branch values are never
/// isolated numerically: rational critical values are divided out of the
/// t-resultant, and the rest is handled per squarefree factor by gcd chains
/// over `Q[t]/(m(t))`.
pub fn passport_of_poly(p: &Poly) -> Result<Passport> {
    let n = p
        .deg()
        .ok_or_else(|| Error::domain("zero polynomial has no passport"))?;
    if n < 1 {
        return Err(Error::domain("constant polynomial has no passport"));
    }
    let rp: Vec<Rat> = p
        .rational_coeffs()
        .ok_or_else(|| Error::domain("passport_of_poly requires rational coefficients"))?;
    let crit = p.critical_resultant()?;
    let crit_sf = crit.squarefree_part();
    let crit_coeffs = crit_sf
        .rational_coeffs()
        .expect("rational input gives rational resultant");

    let mut entries = Vec::new();
    if crit_sf.deg() == Some(0) {
        // no finite branch points (degree-1 polynomial)
        return Passport::new(n, entries);
    }
    let (roots, rest) = qring::rational_roots(&crit_coeffs);
    for tau in roots {
        // partition of P - tau over Q
        let shifted: Vec<Rat> = {
            let mut v = rp.clone();
            v[0] = &v[0] - &tau;
            v
        };
        let partition = rational_multiplicity_partition(&shifted);
        entries.push(PassportEntry {
            value: BranchValue::Rational(tau),
            count: 1,
            partition,
        });
    }
    if !rest.is_empty() && pv::deg(&rest) >= 1 {
        for (factor, partition) in qring::partitions_over_modulus(&rp, &rest) {
            let count = pv::deg(&factor);
            entries.push(PassportEntry {
                value: BranchValue::Factor(factor),
                count,
                partition,
            });
        }
    }
    entries.sort_by(|a, b| entry_sort_key(a).cmp(&entry_sort_key(b)));
    Passport::new(n, entries)
}

fn entry_sort_key(e: &PassportEntry) -> (usize, String) {
    match &e.value {
        BranchValue::Rational(_) => (0, e.value.label()),
        BranchValue::Factor(_) => (1, e.value.label()),
        BranchValue::Named(_) => (2, e.value.label()),
    }
}

/// Multiplicity partition of a rational polynomial via the repeated-gcd
/// chain over Q.
fn rational_multiplicity_partition(w: &[Rat]) -> Vec<usize> {
    let mut degs = vec![pv::deg(w)];
    let mut cur = w.to_vec();
    while degs.last() != Some(&0) {
        let d: Vec<Rat> = cur
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rat::from_int(i as i64))
            .collect();
        let g = pv::gcd(&cur, &pv::trim(d));
        degs.push(if g.is_empty() { 0 } else { pv::deg(&g) });
        cur = g;
    }
    let mut ge: Vec<usize> = degs.windows(2).map(|w| w[0] - w[1]).collect();
    ge.push(0);
    let mut partition = Vec::new();
    for k in 0..ge.len() - 1 {
        for _ in 0..(ge[k] - ge[k + 1]) {
            partition.push(k + 1);
        }
    }
    partition.sort_unstable();
    partition
}

/// Align two passports over the union of their finite branch values,
/// materializing trivial all-ones rows where one side is unramified.
/// Factor labels are refined by pairwise gcd so that matching is exact.
pub fn merge_passports(
    pa: &Passport,
    pb: &Passport,
) -> Result<Vec<(String, usize, Vec<usize>, Vec<usize>)>> {
    // refine factor entries until the factor sets are equal-or-coprime
    let refine = |p: &Passport| -> Vec<PassportEntry> { p.entries.clone() };
    let mut ea = refine(pa);
    let mut eb = refine(pb);
    // cross-refinement of Factor entries
    loop {
        let mut changed = false;
        'outer: for i in 0..ea.len() {
            let BranchValue::Factor(fa) = &ea[i].value else {
                continue;
            };
            for j in 0..eb.len() {
                let BranchValue::Factor(fb) = &eb[j].value else {
                    continue;
                };
                let g = pv::gcd(fa, fb);
                if pv::deg(&g) >= 1 {
                    if g != *fa {
                        let (q, _) = pv::divrem(fa, &g);
                        let part = ea[i].partition.clone();
                        let dq = pv::deg(&q);
                        let dg = pv::deg(&g);
                        ea[i] = PassportEntry {
                            value: BranchValue::Factor(g.clone()),
                            count: dg,
                            partition: part.clone(),
                        };
                        ea.push(PassportEntry {
                            value: BranchValue::Factor(pv::make_monic(&q)),
                            count: dq,
                            partition: part,
                        });
                        changed = true;
                        break 'outer;
                    }
                    if g != *fb {
                        let (q, _) = pv::divrem(fb, &g);
                        let part = eb[j].partition.clone();
                        let dq = pv::deg(&q);
                        let dg = pv::deg(&g);
                        eb[j] = PassportEntry {
                            value: BranchValue::Factor(g.clone()),
                            count: dg,
                            partition: part.clone(),
                        };
                        eb.push(PassportEntry {
                            value: BranchValue::Factor(pv::make_monic(&q)),
                            count: dq,
                            partition: part,
                        });
                        changed = true;
                        break 'outer;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    // now match by label equality
    let mut labels: Vec<(String, usize)> = Vec::new();
    for e in ea.iter().chain(eb.iter()) {
        let l = e.value.label();
        if !labels.iter().any(|(x, _)| *x == l) {
            labels.push((l, e.count));
        }
    }
    labels.sort();
    let find = |entries: &[PassportEntry], label: &str, n: usize| -> Vec<usize> {
        for e in entries {
            if e.value.label() == label {
                return e.partition.clone();
            }
        }
        vec![1; n]
    };
    let mut out = Vec::new();
    for (label, count) in labels {
        let a = find(&ea, &label, pa.degree);
        let b = find(&eb, &label, pb.degree);
        out.push((label, count, a, b));
    }
    Ok(out)
}
