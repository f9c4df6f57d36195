use matroid_core::{Matroid, Subset};
use rayon::prelude::*;

/// `rk(W) + rk(X) + rk(W∪X∪Y) + rk(W∪X∪Z) + rk(Y∪Z)` is at most
/// `rk(W∪X) + rk(W∪Y) + rk(W∪Z) + rk(X∪Y) + rk(X∪Z)`.
pub fn ingleton_holds(m: &Matroid, w: Subset, x: Subset, y: Subset, z: Subset) -> bool {
    let rk = |s: Subset| m.rank(s) as i64;
    let lhs = rk(w) + rk(x) + rk(w | x | y) + rk(w | x | z) + rk(y | z);
    let rhs = rk(w | x) + rk(w | y) + rk(w | z) + rk(x | y) + rk(x | z);
    lhs <= rhs
}

/// Search for `(W, X, Y, Z)` violating Ingleton's inequality. Every term
/// only depends on closures, so the search runs over flats of rank at most
/// `max_size` and reports an independent spanning subset of each. Sets are
/// tried in order of increasing rank.
pub fn ingleton_violation(m: &Matroid, max_size: usize) -> Option<[Subset; 4]> {
    if max_size == 0 {
        return None;
    }
    let mut flats: Vec<Subset> = m.flats().iter().copied().filter(|&f| m.rank(f) <= max_size).collect();
    flats.sort_by_key(|&f| (m.rank(f), f));
    let k = flats.len();
    // W <-> X and Y <-> Z are symmetries of the inequality
    let found = (0..k).into_par_iter().find_map_first(|a| {
        for b in a..k {
            for c in 0..k {
                for d in c..k {
                    let (w, x, y, z) = (flats[a], flats[b], flats[c], flats[d]);
                    if !ingleton_holds(m, w, x, y, z) {
                        return Some([w, x, y, z]);
                    }
                }
            }
        }
        None
    })?;
    Some(found.map(|f| basis_of(m, f)))
}

fn basis_of(m: &Matroid, f: Subset) -> Subset {
    let mut b = Subset::EMPTY;
    for e in f.iter() {
        if m.rank(b.with(e)) > b.len() {
            b.insert(e);
        }
    }
    b
}
