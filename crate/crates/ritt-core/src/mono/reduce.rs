use super::fiber::fiber_product;
use super::perm::Perm;
use super::tuple::{merge_labels, MonodromyTuple};
use crate::error::{Error, Result};
use std::collections::HashSet;

/// One step of the pair reduction: which side was replaced by its action on
/// the orbits of the opposite kernel, and the orbit partition used.
#[derive(Clone, Debug)]
pub struct ReduceStep {
    pub side_f: bool,
    pub orbits: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct ReduceOutcome {
    pub f: MonodromyTuple,
    pub g: MonodromyTuple,
    pub steps: Vec<ReduceStep>,
    /// Component count, preserved by every step.
    pub o: usize,
}

/// Enumerate the pair group generated by (alpha_i, beta_i) by breadth-first
/// closure, up to `cap` elements.
fn pair_group(f: &MonodromyTuple, g: &MonodromyTuple, cap: usize) -> Result<Vec<(Perm, Perm)>> {
    let gens: Vec<(Perm, Perm)> = f
        .perms()
        .iter()
        .cloned()
        .zip(g.perms().iter().cloned())
        .collect();
    let id = (Perm::identity(f.degree()), Perm::identity(g.degree()));
    let mut seen: HashSet<(Perm, Perm)> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut out = Vec::new();
    while let Some(x) = queue.pop() {
        out.push(x.clone());
        for (a, b) in &gens {
            let y = (x.0.then(a), x.1.then(b));
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::bound(format!("pair group exceeds {cap} elements")));
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    Ok(out)
}

fn orbits_of(perms: &[&Perm], n: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for perm in perms {
        for x in 0..n {
            let (ra, rb) = (find(&mut parent, x), find(&mut parent, perm.apply(x)));
            if ra != rb {
                parent[rb] = ra;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        let r = find(&mut parent, x);
        groups[r].push(x);
    }
    let mut out: Vec<Vec<usize>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
    out.sort_by_key(|b| b[0]);
    out
}

/// Induced tuple on the blocks of an invariant partition.
fn induced(t: &MonodromyTuple, blocks: &[Vec<usize>]) -> Result<MonodromyTuple> {
    let mut block_of = vec![usize::MAX; t.degree()];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = i;
        }
    }
    let perms: Vec<Perm> = t
        .perms()
        .iter()
        .map(|p| {
            let images: Vec<usize> = blocks.iter().map(|b| block_of[p.apply(b[0])] + 1).collect();
            Perm::from_images_one_based(&images)
        })
        .collect::<Result<_>>()?;
    MonodromyTuple::new(blocks.len(), t.labels().to_vec(), perms)
}

/// Pair reduction: repeatedly replace a side by its action on the orbits of
/// the opposite side's kernel inside the pair group, until the two kernels
/// coincide. The component count o is preserved at every step; for a pair of
/// generalized-polynomial tuples the reduced degrees are equal.
pub fn reduce_pair(f: &MonodromyTuple, g: &MonodromyTuple, cap: usize) -> Result<ReduceOutcome> {
    let (mut f, mut g) = merge_labels(f, g)?;
    let o = fiber_product(&f, &g)?.count();
    let mut steps = Vec::new();
    loop {
        let elements = pair_group(&f, &g, cap)?;
        let ker_g: Vec<&Perm> = elements
            .iter()
            .filter(|(_, b)| b.is_identity())
            .map(|(a, _)| a)
            .collect();
        let ker_f: Vec<&Perm> = elements
            .iter()
            .filter(|(a, _)| a.is_identity())
            .map(|(_, b)| b)
            .collect();

        let f_orbits = orbits_of(&ker_g, f.degree());
        if f_orbits.len() < f.degree() {
            let reduced = induced(&f, &f_orbits)?;
            steps.push(ReduceStep {
                side_f: true,
                orbits: f_orbits,
            });
            f = reduced;
            debug_assert_eq!(fiber_product(&f, &g)?.count(), o);
            continue;
        }
        let g_orbits = orbits_of(&ker_f, g.degree());
        if g_orbits.len() < g.degree() {
            let reduced = induced(&g, &g_orbits)?;
            steps.push(ReduceStep {
                side_f: false,
                orbits: g_orbits,
            });
            g = reduced;
            debug_assert_eq!(fiber_product(&f, &g)?.count(), o);
            continue;
        }
        break;
    }
    let o_after = fiber_product(&f, &g)?.count();
    if o_after != o {
        return Err(Error::Tuple(format!(
            "component count changed during reduction: {o} -> {o_after}"
        )));
    }
    Ok(ReduceOutcome { f, g, steps, o })
}
