//! Exact dense linear algebra over Q(zeta), enough for the coefficient
//! matching problems in decomposition and recognition.

use crate::num::Cyclo;

/// Basis of the kernel of M (rows are equations).
pub fn kernel(m: &[Vec<Cyclo>]) -> Vec<Vec<Cyclo>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<Cyclo>> = m.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let inv = a[r][c].inv().unwrap();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let t = &a[i][j] - &(&f * &a[r][j]);
                    a[i][j] = t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![Cyclo::zero(); cols];
        v[fc] = Cyclo::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[i][fc];
        }
        basis.push(v);
    }
    basis
}
