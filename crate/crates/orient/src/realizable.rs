use gammoid_realize::ExactMatrix;
use matroid_core::Subset;
use num_traits::{Signed, Zero};

use crate::om::{cocircuits_from_circuits, OrientedMatroid};
use crate::signed::SignedSubset;

/// Rows of `rows` are independent; pick columns giving a nonsingular
/// square submatrix.
fn square_columns(m: &ExactMatrix, rows: &[usize]) -> Vec<usize> {
    let mut cols = Vec::new();
    for j in 0..m.n_cols() {
        cols.push(j);
        if m.submatrix(rows, &cols).rank() < cols.len() {
            cols.pop();
        }
    }
    cols
}

/// Signs of the linear dependency on circuit `c`, anchored at `anchor`
/// (which gets `-1`), by Cramer's rule.
pub fn cramer_signature(m: &ExactMatrix, c: Subset, anchor: usize) -> SignedSubset {
    let rows: Vec<usize> = c.without(anchor).iter().collect();
    let cols = square_columns(m, &rows);
    assert_eq!(cols.len(), rows.len(), "circuit minus one element is independent");
    let base = m.submatrix(&rows, &cols).det().expect("square");
    let mut s = SignedSubset::default();
    s.set(anchor, -1);
    for (k, &e) in rows.iter().enumerate() {
        let mut r2 = rows.clone();
        r2[k] = anchor;
        let det = m.submatrix(&r2, &cols).det().expect("square");
        let q = det / &base;
        debug_assert!(!q.is_zero());
        s.set(e, if q.is_positive() { 1 } else { -1 });
    }
    s
}

/// The oriented matroid of the row vectors of `m`.
pub fn orientation_from_matrix(m: &ExactMatrix) -> OrientedMatroid {
    let mat = m.matroid();
    let circuits: Vec<SignedSubset> = mat
        .circuits()
        .iter()
        .flat_map(|&c| {
            let s = cramer_signature(m, c, c.min().expect("non-empty"));
            [s, s.negate()]
        })
        .collect();
    let cocircuits = cocircuits_from_circuits(&mat, &circuits).expect("realizable signings are consistent");
    OrientedMatroid { n: mat.n(), circuits: circuits.into_iter().collect(), cocircuits: cocircuits.into_iter().collect() }
}
