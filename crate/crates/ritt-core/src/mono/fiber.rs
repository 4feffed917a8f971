use super::perm::Perm;
use super::tuple::{merge_labels, BranchLabel, MonodromyTuple};
use crate::error::{Error, Result};

/// One transitivity set of the pair action, with its restricted tuple,
/// genus, and the two projection block systems.
#[derive(Clone, Debug)]
pub struct FiberComponent {
    /// Orbit members as (row, col) = (f-point, g-point), 0-based.
    pub orbit: Vec<(usize, usize)>,
    pub tuple: MonodromyTuple,
    pub genus: i64,
    /// Blocks of the projection onto f's fiber: positions in `orbit`
    /// grouped by row.
    pub blocks_f: Vec<Vec<usize>>,
    /// Blocks grouped by column.
    pub blocks_g: Vec<Vec<usize>>,
}

/// All components of the fiber product of two coverings.
#[derive(Clone, Debug)]
pub struct FiberComponents {
    pub labels: Vec<BranchLabel>,
    pub components: Vec<FiberComponent>,
}

impl FiberComponents {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Sum over components of 2 - 2g, the left side of the genus-sum
    /// formula.
    pub fn chi_sum(&self) -> i64 {
        self.components.iter().map(|c| 2 - 2 * c.genus).sum()
    }
}

/// The row-and-column action: delta_i sends (a, b) to (alpha_i(a), beta_i(b)),
/// orbits are enumerated, and each restricted tuple is validated and given
/// its Riemann-Hurwitz genus.
pub fn fiber_product(f: &MonodromyTuple, g: &MonodromyTuple) -> Result<FiberComponents> {
    let (f, g) = merge_labels(f, g)?;
    let n = f.degree();
    let m = g.degree();
    let r = f.num_branches();
    let idx = |a: usize, b: usize| a * m + b;

    // orbit sweep
    let mut comp = vec![usize::MAX; n * m];
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for start in 0..n * m {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        let mut stack = vec![(start / m, start % m)];
        comp[start] = id;
        while let Some((a, b)) = stack.pop() {
            orbit.push((a, b));
            for i in 0..r {
                let fa = f.perms()[i].apply(a);
                let gb = g.perms()[i].apply(b);
                if comp[idx(fa, gb)] == usize::MAX {
                    comp[idx(fa, gb)] = id;
                    stack.push((fa, gb));
                }
                let fa = f.perms()[i].inverse().apply(a);
                let gb = g.perms()[i].inverse().apply(b);
                if comp[idx(fa, gb)] == usize::MAX {
                    comp[idx(fa, gb)] = id;
                    stack.push((fa, gb));
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }

    let mut components = Vec::new();
    for orbit in orbits {
        let size = orbit.len();
        let pos_of = |a: usize, b: usize| orbit.binary_search(&(a, b)).unwrap();
        let perms: Vec<Perm> = (0..r)
            .map(|i| {
                let images: Vec<usize> = orbit
                    .iter()
                    .map(|&(a, b)| pos_of(f.perms()[i].apply(a), g.perms()[i].apply(b)) + 1)
                    .collect();
                Perm::from_images_one_based(&images)
            })
            .collect::<Result<_>>()?;
        let tuple = MonodromyTuple::new(size, f.labels().to_vec(), perms)?;
        tuple
            .validate()
            .map_err(|v| Error::Tuple(format!("restricted tuple invalid: {v}")))?;
        let genus = tuple.genus()?;

        let mut blocks_f: Vec<Vec<usize>> = Vec::new();
        {
            let mut rows: Vec<usize> = orbit.iter().map(|&(a, _)| a).collect();
            rows.sort_unstable();
            rows.dedup();
            for row in rows {
                blocks_f.push(
                    orbit
                        .iter()
                        .enumerate()
                        .filter(|(_, &(a, _))| a == row)
                        .map(|(p, _)| p)
                        .collect(),
                );
            }
        }
        let mut blocks_g: Vec<Vec<usize>> = Vec::new();
        {
            let mut cols: Vec<usize> = orbit.iter().map(|&(_, b)| b).collect();
            cols.sort_unstable();
            cols.dedup();
            for col in cols {
                blocks_g.push(
                    orbit
                        .iter()
                        .enumerate()
                        .filter(|(_, &(_, b))| b == col)
                        .map(|(p, _)| p)
                        .collect(),
                );
            }
        }
        components.push(FiberComponent {
            orbit,
            tuple,
            genus,
            blocks_f,
            blocks_g,
        });
    }

    Ok(FiberComponents {
        labels: f.labels().to_vec(),
        components,
    })
}

/// Check that the permutations induced on the row blocks of a component
/// reproduce the original tuple exactly (and likewise for columns).
pub fn projection_consistent(
    comp: &FiberComponent,
    f: &MonodromyTuple,
    g: &MonodromyTuple,
) -> bool {
    let check = |blocks: &[Vec<usize>], source: &MonodromyTuple, row: bool| -> bool {
        // block identity: which source point each block sits over
        let block_point: Vec<usize> = blocks
            .iter()
            .map(|b| {
                let (a, bcol) = comp.orbit[b[0]];
                if row {
                    a
                } else {
                    bcol
                }
            })
            .collect();
        for (i, p) in comp.tuple.perms().iter().enumerate() {
            for (bi, block) in blocks.iter().enumerate() {
                let image_pos = p.apply(block[0]);
                let (a, bcol) = comp.orbit[image_pos];
                let target = if row { a } else { bcol };
                // the whole block must land in the block over `target`
                for &member in block {
                    let (aa, bb) = comp.orbit[p.apply(member)];
                    if (if row { aa } else { bb }) != target {
                        return false;
                    }
                }
                let expected = source.perms()[i].apply(block_point[bi]);
                if target != expected {
                    return false;
                }
            }
        }
        true
    };
    check(&comp.blocks_f, f, true) && check(&comp.blocks_g, g, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mono::tuple::{builtin_tuple, merge_labels, BuiltinKind};

    #[test]
    fn coprime_powers_irreducible() {
        let f = builtin_tuple(&BuiltinKind::Power(2));
        let g = builtin_tuple(&BuiltinKind::Power(3));
        let fc = fiber_product(&f, &g).unwrap();
        assert_eq!(fc.count(), 1);
        assert_eq!(fc.components[0].genus, 0);
    }

    #[test]
    fn equal_powers_split_into_lines() {
        let n = 5;
        let f = builtin_tuple(&BuiltinKind::Power(n));
        let fc = fiber_product(&f, &f).unwrap();
        assert_eq!(fc.count(), n as usize);
        for c in &fc.components {
            assert_eq!(c.orbit.len(), n as usize);
            assert_eq!(c.genus, 0);
        }
    }

    #[test]
    fn t2_plus_t2_is_irreducible() {
        // x^2 + y^2 - 1 = 0 in disguise: o(T_2, -T_2) = 1
        let f = builtin_tuple(&BuiltinKind::Chebyshev(2));
        let g = builtin_tuple(&BuiltinKind::ChebyshevNeg(2));
        let fc = fiber_product(&f, &g).unwrap();
        assert_eq!(fc.count(), 1);
        assert_eq!(fc.components[0].genus, 0);
    }

    #[test]
    fn t4_plus_t4_is_reducible() {
        let f = builtin_tuple(&BuiltinKind::Chebyshev(4));
        let g = builtin_tuple(&BuiltinKind::ChebyshevNeg(4));
        let fc = fiber_product(&f, &g).unwrap();
        assert!(fc.count() >= 2, "o = {}", fc.count());
    }

    #[test]
    fn orbit_sizes_sum_and_projections() {
        let f = builtin_tuple(&BuiltinKind::Chebyshev(4));
        let g = builtin_tuple(&BuiltinKind::LaurentD(3));
        let fc = fiber_product(&f, &g).unwrap();
        let total: usize = fc.components.iter().map(|c| c.orbit.len()).sum();
        assert_eq!(total, 4 * 6);
        let (fm, gm) = merge_labels(&f, &g).unwrap();
        for c in &fc.components {
            assert!(projection_consistent(c, &fm, &gm));
        }
    }
}
