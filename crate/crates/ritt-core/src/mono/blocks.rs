use super::perm::Perm;
use super::tuple::MonodromyTuple;
use crate::error::{Error, Result};

/// A partition of {0..n-1} into blocks, each sorted, blocks ordered by
/// their minimum.
pub type BlockSystem = Vec<Vec<usize>>;

fn canonical(mut parts: Vec<Vec<usize>>) -> BlockSystem {
    for b in parts.iter_mut() {
        b.sort_unstable();
    }
    parts.sort_by_key(|b| b[0]);
    parts
}

fn from_uf(parent: &mut [usize]) -> BlockSystem {
    let n = parent.len();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        let r = find(parent, x);
        groups[r].push(x);
    }
    canonical(groups.into_iter().filter(|g| !g.is_empty()).collect())
}

fn find(parent: &mut [usize], x: usize) -> usize {
    if parent[x] != x {
        let r = find(parent, parent[x]);
        parent[x] = r;
    }
    parent[x]
}

fn union(parent: &mut [usize], a: usize, b: usize) -> bool {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra == rb {
        return false;
    }
    parent[rb] = ra;
    true
}

/// Finest block system of the group generated by `gens` in which a and b
/// share a block (Atkinson's algorithm).
pub fn minimal_block_system(n: usize, gens: &[Perm], a: usize, b: usize) -> BlockSystem {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut queue = vec![(a, b)];
    union(&mut parent, a, b);
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let gx = g.apply(x);
            let gy = g.apply(y);
            if union(&mut parent, gx, gy) {
                queue.push((gx, gy));
            }
        }
    }
    from_uf(&mut parent)
}

fn join(n: usize, s1: &BlockSystem, s2: &BlockSystem) -> BlockSystem {
    let mut parent: Vec<usize> = (0..n).collect();
    for sys in [s1, s2] {
        for b in sys {
            for w in b.windows(2) {
                union(&mut parent, w[0], w[1]);
            }
        }
    }
    from_uf(&mut parent)
}

/// Every imprimitivity system of the generated group, including the two
/// trivial ones. Obtained as the join-closure of the minimal systems; a
/// degree bound keeps the enumeration at desk scale.
pub fn block_systems(t: &MonodromyTuple, degree_bound: usize) -> Result<Vec<BlockSystem>> {
    let n = t.degree();
    if n > degree_bound {
        return Err(Error::bound(format!(
            "degree {n} exceeds block-system enumeration bound {degree_bound}"
        )));
    }
    t.validate().map_err(|v| Error::Tuple(v.to_string()))?;
    let gens = t.perms().to_vec();
    let singletons: BlockSystem = (0..n).map(|x| vec![x]).collect();
    let mut systems: Vec<BlockSystem> = vec![singletons];
    if n == 0 {
        return Ok(systems);
    }
    let mut frontier: Vec<BlockSystem> = Vec::new();
    for b in 1..n {
        let s = minimal_block_system(n, &gens, 0, b);
        if !systems.contains(&s) {
            systems.push(s.clone());
            frontier.push(s);
        }
    }
    // close under joins
    while let Some(s) = frontier.pop() {
        let snapshot = systems.clone();
        for other in &snapshot {
            let j = join(n, &s, other);
            if !systems.contains(&j) {
                systems.push(j.clone());
                frontier.push(j);
            }
        }
    }
    // transitivity makes every system equicardinal; order deterministically
    for s in &systems {
        let size = s[0].len();
        debug_assert!(s.iter().all(|b| b.len() == size));
    }
    systems.sort_by_key(|s| (s[0].len(), s.iter().map(|b| b[0]).collect::<Vec<_>>()));
    Ok(systems)
}

/// Block sizes present among the systems, ascending.
pub fn block_sizes(systems: &[BlockSystem]) -> Vec<usize> {
    let mut sizes: Vec<usize> = systems.iter().map(|s| s[0].len()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mono::tuple::{builtin_tuple, BuiltinKind};

    #[test]
    fn cyclic_six_has_four_systems() {
        let t = builtin_tuple(&BuiltinKind::Power(6));
        let systems = block_systems(&t, 64).unwrap();
        assert_eq!(block_sizes(&systems), vec![1, 2, 3, 6]);
        assert_eq!(systems.len(), 4);
    }

    #[test]
    fn chebyshev_six_systems_match_decompositions() {
        // T_6 = T_2 o T_3 = T_3 o T_2: systems with block sizes 1, 2, 3, 6
        let t = builtin_tuple(&BuiltinKind::Chebyshev(6));
        let systems = block_systems(&t, 64).unwrap();
        assert_eq!(block_sizes(&systems), vec![1, 2, 3, 6]);
    }

    #[test]
    fn prime_degree_with_full_cycle_only_trivial() {
        let t = builtin_tuple(&BuiltinKind::Chebyshev(5));
        let systems = block_systems(&t, 64).unwrap();
        assert_eq!(systems.len(), 2);
    }

    #[test]
    fn bound_is_reported() {
        let t = builtin_tuple(&BuiltinKind::Power(10));
        assert!(matches!(block_systems(&t, 5), Err(Error::Bound(_))));
    }
}
