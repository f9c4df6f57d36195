use matroid_core::{Matroid, Subset};
use rayon::prelude::*;

/// Searches a bijection `φ: B1 -> B2` with `(B1 \ X) ∪ φ[X]` a base for all
/// `X ⊆ B1`, assigning images one element at a time and checking the new
/// subsets after each step.
pub fn full_exchange(m: &Matroid, b1: Subset, b2: Subset) -> Option<Vec<(usize, usize)>> {
    let src: Vec<usize> = b1.iter().collect();
    let mut phi: Vec<usize> = Vec::with_capacity(src.len());

    fn ok_with_last(m: &Matroid, b1: Subset, src: &[usize], phi: &[usize]) -> bool {
        let k = phi.len() - 1;
        // subsets of the first k+1 sources that contain source k
        for mask in 0u64..(1 << k) {
            let mut x = b1.without(src[k]).with(phi[k]);
            let mut img = Subset::singleton(phi[k]);
            for i in 0..k {
                if mask >> i & 1 == 1 {
                    x.remove(src[i]);
                    img.insert(phi[i]);
                }
            }
            let x = x | img;
            if x.len() != b1.len() || !m.is_base(x) {
                return false;
            }
        }
        true
    }

    fn rec(m: &Matroid, b1: Subset, b2: Subset, src: &[usize], phi: &mut Vec<usize>, used: Subset) -> bool {
        if phi.len() == src.len() {
            return true;
        }
        for t in (b2 - used).iter() {
            phi.push(t);
            if ok_with_last(m, b1, src, phi) && rec(m, b1, b2, src, phi, used.with(t)) {
                return true;
            }
            phi.pop();
        }
        false
    }

    rec(m, b1, b2, &src, &mut phi, Subset::EMPTY).then(|| src.into_iter().zip(phi).collect())
}

/// Whether every ordered pair of bases has the full exchange property.
pub fn strongly_base_orderable(m: &Matroid) -> bool {
    sbo_counterexample(m).is_none()
}

/// A pair of bases without a full exchange bijection.
pub fn sbo_counterexample(m: &Matroid) -> Option<(Subset, Subset)> {
    let bases = m.bases();
    bases
        .par_iter()
        .enumerate()
        .find_map_first(|(i, &b1)| {
            bases
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .find(|&(_, &b2)| full_exchange(m, b1, b2).is_none())
                .map(|(_, &b2)| (b1, b2))
        })
}
