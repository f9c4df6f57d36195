use crate::matroid::Matroid;
use crate::minors::{contract_set, restrict};
use crate::subset::{k_subsets, Subset};

/// Cheap isomorphism invariant: ground size, rank, base count and the
/// multiset of circuit sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub n: usize,
    pub r: usize,
    pub base_count: usize,
    pub circuit_sizes: Vec<usize>,
}

pub fn signature(m: &Matroid) -> Signature {
    let mut circuit_sizes = vec![0; m.n() + 2];
    for c in m.circuits() {
        circuit_sizes[c.len()] += 1;
    }
    Signature {
        n: m.n(),
        r: m.rank_total(),
        base_count: m.bases().len(),
        circuit_sizes,
    }
}

/// Per-element invariant: how many bases and how many circuits of each size
/// contain the element.
fn element_profile(m: &Matroid) -> Vec<Vec<usize>> {
    let width = m.rank_total() + 3;
    let mut out = vec![vec![0usize; width]; m.n()];
    for b in m.bases() {
        for e in b.iter() {
            out[e][0] += 1;
        }
    }
    for c in m.circuits() {
        for e in c.iter() {
            out[e][c.len() + 1] += 1;
        }
    }
    out
}

/// A bijection `φ` with `φ[B]` a base of `n` exactly when `B` is a base of
/// `m`, if there is one.
pub fn find_isomorphism(m: &Matroid, n: &Matroid) -> Option<Vec<usize>> {
    if signature(m) != signature(n) {
        return None;
    }
    let pm = element_profile(m);
    let pn = element_profile(n);
    {
        let mut a = pm.clone();
        let mut b = pn.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    // assign the rarest profiles first
    let mut order: Vec<usize> = (0..m.n()).collect();
    order.sort_by_key(|&e| (pm.iter().filter(|p| **p == pm[e]).count(), e));
    let mut image = vec![usize::MAX; m.n()];
    let mut used = Subset::EMPTY;
    if extend(m, n, &pm, &pn, &order, 0, &mut image, &mut used, Subset::EMPTY) {
        Some(image)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    m: &Matroid,
    n: &Matroid,
    pm: &[Vec<usize>],
    pn: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut Subset,
    assigned: Subset,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let e = order[depth];
    let limit = m.rank_total() + 1;
    for f in 0..n.n() {
        if used.contains(f) || pm[e] != pn[f] {
            continue;
        }
        image[e] = f;
        let consistent = assigned.subsets().all(|s| {
            if s.len() >= limit {
                return true;
            }
            let s = s.with(e);
            let t: Subset = s.iter().map(|x| image[x]).collect();
            m.rank(s) == n.rank(t)
        });
        if consistent {
            used.insert(f);
            if extend(m, n, pm, pn, order, depth + 1, image, used, assigned.with(e)) {
                return true;
            }
            used.remove(f);
        }
    }
    image[e] = usize::MAX;
    false
}

pub fn is_isomorphic(m: &Matroid, n: &Matroid) -> bool {
    find_isomorphism(m, n).is_some()
}

/// Does `m` have a minor isomorphic to `n`? Every minor can be written as
/// `M / Z \ W` with `Z` independent and `|Z| = rk(M) - rk(N)`.
pub fn is_minor_isomorphic(m: &Matroid, n: &Matroid) -> bool {
    find_minor(m, n).is_some()
}

/// Witness `(Z, Y)`: `n ≅ (M / Z) | Y`.
pub fn find_minor(m: &Matroid, n: &Matroid) -> Option<(Subset, Subset)> {
    if n.n() > m.n() || n.rank_total() > m.rank_total() {
        return None;
    }
    let k = m.rank_total() - n.rank_total();
    if m.n() - k < n.n() {
        return None;
    }
    let target = signature(n);
    for z in k_subsets(m.ground(), k) {
        if !m.is_independent(z) {
            continue;
        }
        let rest = m.ground() - z;
        let mz = contract_set(m, z);
        for y in k_subsets(mz.ground(), n.n()) {
            if mz.rank(y) != n.rank_total() {
                continue;
            }
            let candidate = restrict(&mz, y);
            if signature(&candidate) != target {
                continue;
            }
            if is_isomorphic(&candidate, n) {
                return Some((z, y.expand(rest)));
            }
        }
    }
    None
}
