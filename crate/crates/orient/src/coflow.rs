use rayon::prelude::*;

use crate::om::OrientedMatroid;
use crate::signed::SignedSubset;

/// Row-style Hermite normal form of an integer lattice basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub dim: usize,
    /// `(pivot column, row)`, pivots strictly increasing and positive,
    /// entries above each pivot reduced modulo it.
    pub rows: Vec<(usize, Vec<i128>)>,
}

impl Lattice {
    /// The integer span of `gens`.
    pub fn span(dim: usize, gens: &[Vec<i128>]) -> Lattice {
        let mut a: Vec<Vec<i128>> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
        let mut rows: Vec<(usize, Vec<i128>)> = Vec::new();
        for c in 0..dim {
            // Euclid on column c until at most one row is nonzero there
            loop {
                let nz: Vec<usize> = (0..a.len()).filter(|&i| a[i][c] != 0).collect();
                if nz.len() <= 1 {
                    break;
                }
                let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).expect("non-empty");
                for &i in &nz {
                    if i != p {
                        let q = a[i][c] / a[p][c];
                        let (lo, hi) = if i < p { a.split_at_mut(p) } else { a.split_at_mut(i) };
                        let (row_i, row_p) = if i < p { (&mut lo[i], &hi[0]) } else { (&mut hi[0], &lo[p]) };
                        for (x, y) in row_i.iter_mut().zip(row_p) {
                            *x -= q * y;
                        }
                    }
                }
            }
            if let Some(p) = (0..a.len()).find(|&i| a[i][c] != 0) {
                let mut row = a.swap_remove(p);
                if row[c] < 0 {
                    row.iter_mut().for_each(|x| *x = -*x);
                }
                for (_, prev) in rows.iter_mut() {
                    let q = prev[c].div_euclid(row[c]);
                    if q != 0 {
                        for (x, y) in prev.iter_mut().zip(&row) {
                            *x -= q * y;
                        }
                    }
                }
                rows.push((c, row));
            }
            a.retain(|r| r.iter().any(|&x| x != 0));
        }
        Lattice { dim, rows }
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        let mut v = v.to_vec();
        for (c, row) in &self.rows {
            if v[*c] % row[*c] != 0 {
                return false;
            }
            let q = v[*c] / row[*c];
            if q != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= q * y;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn signed_vector(s: SignedSubset, n: usize) -> Vec<i128> {
    (0..n).map(|e| s.sign(e) as i128).collect()
}

/// The coflow lattice: integer combinations of signed cocircuits.
pub fn coflow_lattice(o: &OrientedMatroid) -> Lattice {
    let gens: Vec<Vec<i128>> = o.cocircuit_representatives().into_iter().map(|d| signed_vector(d, o.n)).collect();
    Lattice::span(o.n, &gens)
}

pub fn coflow_member(cocircuits: &[SignedSubset], n: usize, f: &[i64]) -> bool {
    let gens: Vec<Vec<i128>> = cocircuits.iter().map(|&d| signed_vector(d, n)).collect();
    Lattice::span(n, &gens).contains(&f.iter().map(|&x| x as i128).collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chromatic {
    Value(usize),
    /// Some element lies in no cocircuit, so no coflow is nowhere zero.
    Unbounded,
    /// No nowhere-zero coflow with entries below the given bound.
    Exceeds(usize),
}

/// Smallest `B <= max_bound` with a nowhere-zero coflow bounded by `B - 1`
/// in absolute value.
pub fn chromatic_number(o: &OrientedMatroid, max_bound: usize) -> Chromatic {
    let n = o.n;
    if n == 0 {
        return Chromatic::Value(1);
    }
    let covered = o.cocircuits.iter().fold(matroid_core::Subset::EMPTY, |acc, d| acc | d.support());
    if covered.len() < n {
        return Chromatic::Unbounded;
    }
    let lattice = coflow_lattice(o);
    for b in 2..=max_bound {
        if has_nowhere_zero(&lattice, n, b as i128 - 1) {
            return Chromatic::Value(b);
        }
    }
    Chromatic::Exceeds(max_bound)
}

/// Whether the lattice has a vector with entries in `±1..=±k`. The
/// lattice is symmetric, so the first entry is taken positive.
fn has_nowhere_zero(lattice: &Lattice, n: usize, k: i128) -> bool {
    let vals: Vec<i128> = (1..=k).flat_map(|v| [v, -v]).collect();
    let base = vals.len() as u64;
    let total = (k as u64) * base.pow(n as u32 - 1);
    (0..total).into_par_iter().any(|mut idx| {
        let mut v = vec![0i128; n];
        v[0] = 1 + (idx % k as u64) as i128;
        idx /= k as u64;
        for x in v.iter_mut().skip(1) {
            *x = vals[(idx % base) as usize];
            idx /= base;
        }
        lattice.contains(&v)
    })
}
