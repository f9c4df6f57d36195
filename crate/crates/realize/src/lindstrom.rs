use gammoid_digraph::{complete_lifting, Digraph, Representation};
use matroid_core::Subset;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::RealizeError;
use crate::matrix::ExactMatrix;
use crate::weights::{canonical_weighting, HeavyWeighting};

/// `μ(e, t)` = sum over all paths from `e` to `t` of the product of arc
/// weights. Rows are the vertices of `ground`, columns those of `targets`,
/// both in increasing order.
pub fn lindstrom_matrix(
    d: &Digraph,
    targets: Subset,
    ground: Subset,
    weight: impl Fn(usize, usize) -> BigInt,
) -> Result<ExactMatrix, RealizeError> {
    let order = d.topological_order().ok_or(RealizeError::CyclicInput)?;
    let rows: Vec<usize> = ground.iter().collect();
    let cols: Vec<usize> = targets.iter().collect();
    let mut m = ExactMatrix::zeros(rows.clone(), cols.clone());
    for (i, &e) in rows.iter().enumerate() {
        let mut f = vec![BigInt::zero(); d.vertex_count()];
        f[e] = BigInt::one();
        for &u in order.iter().skip_while(|&&u| u != e) {
            if f[u].is_zero() {
                continue;
            }
            for v in d.out_neighbours(u).iter() {
                let add = &f[u] * weight(u, v);
                f[v] += add;
            }
        }
        for (j, &t) in cols.iter().enumerate() {
            m.entries[i][j] = BigRational::from_integer(f[t].clone());
        }
    }
    Ok(m)
}

pub fn lindstrom_heavy(d: &Digraph, targets: Subset, ground: Subset, w: &HeavyWeighting) -> Result<ExactMatrix, RealizeError> {
    lindstrom_matrix(d, targets, ground, |u, v| w.weight(u, v).clone())
}

/// A rational matrix with `rk(E)` columns whose row matroid is the gammoid
/// of `rep`: lift cycles, take the heavy Lindström matrix of the acyclic
/// digraph, contract the lifted rows, and keep a column basis.
pub fn represent_gammoid(rep: &Representation) -> ExactMatrix {
    let (lifted, lifts) = complete_lifting(rep);
    let w = canonical_weighting(&lifted.digraph);
    let mut m = lindstrom_heavy(&lifted.digraph, lifted.targets, lifted.ground, &w).expect("lifting is acyclic");
    for lift in &lifts {
        let row = m.rows.iter().position(|&v| v == lift.x).expect("lifted row");
        let col = (0..m.n_cols()).find(|&j| !m.get(row, j).is_zero()).expect("lifted vertices are independent");
        m = m.contract(row, col).expect("nonzero pivot");
    }
    m.column_basis()
}
