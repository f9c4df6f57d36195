//! Rank-3 excluded minors for the class of gammoids.
//!
//! In rank 3 a matroid is a gammoid exactly when α is non-negative, and an
//! excluded minor is simple (a parallel pair or a loop would leave a smaller
//! non-gammoid after deletion). Every simple rank-3 matroid on `k+1`
//! elements other than a free one is a simple single-element extension of a
//! simple rank-3 matroid on `k` elements, so starting from the free matroid
//! on three elements the census grows level by level: strict extensions
//! feed the next level, non-strict extensions all of whose deletions are
//! strict are excluded minors.

use std::collections::BTreeMap;

use gammoid_alpha::{alpha_invariant, alpha_of_extension, extend_unchecked, is_strict_gammoid, modular_cuts};
use matroid_core::{is_isomorphic, restrict, signature, Matroid, Signature};

#[derive(Clone, Debug)]
pub struct CensusLevel {
    pub n: usize,
    /// Simple rank-3 gammoids on `n` elements, one per isomorphism class.
    pub gammoids: Vec<Matroid>,
    /// Rank-3 excluded minors on `n` elements, one per isomorphism class.
    pub excluded_minors: Vec<Matroid>,
}

#[derive(Default)]
struct IsoSet {
    buckets: BTreeMap<Signature, Vec<Matroid>>,
}

impl IsoSet {
    /// Insert unless an isomorphic copy is present.
    fn insert(&mut self, m: Matroid) -> bool {
        let bucket = self.buckets.entry(signature(&m)).or_default();
        if bucket.iter().any(|o| is_isomorphic(o, &m)) {
            return false;
        }
        bucket.push(m);
        true
    }

    fn into_vec(self) -> Vec<Matroid> {
        self.buckets.into_values().flatten().collect()
    }
}

fn all_deletions_strict(m: &Matroid) -> bool {
    m.ground().iter().all(|e| is_strict_gammoid(&restrict(m, m.ground().without(e))).expect("small"))
}

/// Levels `4..=max_n` (level 3 has only the free matroid).
pub fn rank3_census(max_n: usize) -> Vec<CensusLevel> {
    let mut gammoids = vec![Matroid::free(3)];
    let mut out = Vec::new();
    for n in 4..=max_n {
        let mut next = IsoSet::default();
        let mut excluded = IsoSet::default();
        for m in &gammoids {
            let alpha = alpha_invariant(m).expect("small");
            for cut in modular_cuts(m) {
                // simple and of the same rank: no coloop, loop or parallel element
                if cut.is_empty() || cut.minimal().iter().any(|&f| m.rank(f) < 2) {
                    continue;
                }
                let strict = alpha_of_extension(m, &alpha, &cut).expect("small").is_nonnegative();
                let ext = extend_unchecked(m, &cut);
                if strict {
                    next.insert(ext);
                } else if all_deletions_strict(&ext) {
                    excluded.insert(ext);
                }
            }
        }
        gammoids = next.into_vec();
        out.push(CensusLevel { n, gammoids: gammoids.clone(), excluded_minors: excluded.into_vec() });
    }
    out
}
