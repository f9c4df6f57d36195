//! Exhaustive search over base families of extensions.
//!
//! Candidate extensions live on `{0, .., k-1}` with `E = {0, .., n-1}` and
//! `k` running from `n` up to the vertex bound; smaller ground sets are the
//! same candidates padded with loops. A candidate whose bases restrict to
//! `B(M)` on `E` and that satisfies the base axioms is tested for being a
//! strict gammoid with the α criterion.

use gammoid_alpha::is_strict_gammoid;
use gammoid_digraph::vertex_bound;
use matroid_core::{k_subsets, Matroid, Subset};

use crate::error::RecognitionError;

/// Largest ground set accepted.
pub const BRUTE_FORCE_MAX_N: usize = 4;
/// Largest number of undecided candidate bases per ground-set size.
pub const BRUTE_FORCE_MAX_FREE: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BruteForceVerdict {
    /// A strict gammoid whose restriction to `E` is `M`.
    Gammoid(Matroid),
    NotGammoid,
}

pub fn recognize_bruteforce(m: &Matroid) -> Result<BruteForceVerdict, RecognitionError> {
    let n = m.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(RecognitionError::SizeLimitExceeded(format!(
            "brute force accepts at most {BRUTE_FORCE_MAX_N} elements, got {n}"
        )));
    }
    let r = m.rank_total();
    for k in n..=vertex_bound(m) {
        let ground = Subset::full(k);
        let old = Subset::full(n);
        // r-subsets meeting the new elements are free to choose
        let free: Vec<Subset> = k_subsets(ground, r).into_iter().filter(|x| !x.is_subset(old)).collect();
        if free.len() > BRUTE_FORCE_MAX_FREE {
            return Err(RecognitionError::SizeLimitExceeded(format!(
                "{} candidate bases on {k} elements",
                free.len()
            )));
        }
        for mask in 0u64..1 << free.len() {
            let mut bases: Vec<Subset> = m.bases().to_vec();
            bases.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
            let Ok(ext) = Matroid::from_bases(k, r, bases) else {
                continue;
            };
            if is_strict_gammoid(&ext).expect("small ground set") {
                return Ok(BruteForceVerdict::Gammoid(ext));
            }
        }
    }
    Ok(BruteForceVerdict::NotGammoid)
}
