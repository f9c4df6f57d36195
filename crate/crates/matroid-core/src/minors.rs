use crate::matroid::Matroid;
use crate::subset::Subset;

/// Bases are the complements of the bases of `m`. In kth order this is the
/// base bit string reversed.
pub fn dual(m: &Matroid) -> Matroid {
    let n = m.n();
    let bases = m.bases().iter().map(|b| b.complement(n)).collect();
    Matroid::from_bases_unchecked(n, n - m.rank_total(), bases)
}

/// `M|X`, relabeled onto `{0, .., |X|-1}` preserving order.
pub fn restrict(m: &Matroid, x: Subset) -> Matroid {
    let x = x & m.ground();
    let r = m.rank(x);
    let mut bases: Vec<Subset> = m
        .bases()
        .iter()
        .map(|b| *b & x)
        .filter(|b| b.len() == r)
        .map(|b| b.compress(x))
        .collect();
    bases.sort();
    bases.dedup();
    Matroid::from_bases_unchecked(x.len(), r, bases)
}

/// Contraction of `E \ X`, leaving a matroid on `X` (relabeled like
/// [`restrict`]).
pub fn contract(m: &Matroid, x: Subset) -> Matroid {
    dual(&restrict(&dual(m), x))
}

/// `M \ Z`.
pub fn delete_set(m: &Matroid, z: Subset) -> Matroid {
    restrict(m, m.ground() - z)
}

/// `M / Z`.
pub fn contract_set(m: &Matroid, z: Subset) -> Matroid {
    contract(m, m.ground() - z)
}

/// Elements of `n` follow those of `m`.
pub fn direct_sum(m: &Matroid, n: &Matroid) -> Matroid {
    let shift = m.n();
    let mut bases = Vec::with_capacity(m.bases().len() * n.bases().len());
    for b in m.bases() {
        for c in n.bases() {
            bases.push(*b | Subset(c.0 << shift));
        }
    }
    Matroid::from_bases_unchecked(m.n() + n.n(), m.rank_total() + n.rank_total(), bases)
}

/// Image of `m` under the bijection `e ↦ perm[e]`.
pub fn relabel(m: &Matroid, perm: &[usize]) -> Matroid {
    assert_eq!(perm.len(), m.n(), "permutation length");
    let bases = m.bases().iter().map(|b| map_subset(*b, perm)).collect();
    Matroid::from_bases_unchecked(m.n(), m.rank_total(), bases)
}

pub fn map_subset(x: Subset, perm: &[usize]) -> Subset {
    x.iter().map(|e| perm[e]).collect()
}
