//! Matroids on `{1..n}` encoded by the bit string of their bases over the
//! lexicographic enumeration of r-subsets.
//!
//! Elements are 0-based internally; [`Subset`] prints them 1-based.

pub mod error;
pub mod io;
pub mod iso;
pub mod kth;
pub mod matroid;
pub mod minors;
pub mod subset;

pub use error::MatroidError;
pub use io::{parse_matroid, print_matroid, MatroidFile};
pub use iso::{find_isomorphism, find_minor, is_isomorphic, is_minor_isomorphic, signature, Signature};
pub use kth::{binomial, kth_cmp, kth_index, kth_subset};
pub use matroid::{Matroid, MAX_TABLE};
pub use minors::{contract, contract_set, delete_set, direct_sum, dual, relabel, restrict};
pub use subset::{k_subsets, Subset};

/// Convenience wrapper matching the `.mtr` bit-string constructor.
pub fn matroid_from_bases(n: usize, r: usize, bits: &[bool]) -> Result<Matroid, MatroidError> {
    Matroid::from_bits(n, r, bits)
}

/// Build a matroid from a list of dependent r-sets: every other r-subset is
/// a base. Validated.
pub fn from_nonbases(n: usize, r: usize, nonbases: &[Subset]) -> Result<Matroid, MatroidError> {
    let bases = k_subsets(Subset::full(n), r)
        .into_iter()
        .filter(|s| !nonbases.contains(s))
        .collect();
    Matroid::from_bases(n, r, bases)
}

/// Small named matroids used throughout tests and the CLI.
pub mod named {
    use super::*;

    /// The cycle matroid of K4 on `a..f` = `1..6`; its 3-circuits are
    /// `abd, ace, bcf, def`.
    pub fn mk4() -> Matroid {
        let nb: Vec<Subset> = [[1, 2, 4], [1, 3, 5], [2, 3, 6], [4, 5, 6]]
            .iter()
            .map(|s| Subset::from_labels(s))
            .collect();
        from_nonbases(6, 3, &nb).expect("M(K4) is a matroid")
    }

    pub fn u24() -> Matroid {
        Matroid::uniform(4, 2)
    }

    /// Rank-3 on 7 points with three-point lines `712, 734, 756, 135, 246`.
    pub fn p7() -> Matroid {
        rank3_from_lines(7, &[&[7, 1, 2], &[7, 3, 4], &[7, 5, 6], &[1, 3, 5], &[2, 4, 6]])
    }

    /// Sparse paving rank-4 on `1..8` with circuit-hyperplanes
    /// `1378, 1568, 2368, 4567, 2478`.
    pub fn g841() -> Matroid {
        let h: Vec<Subset> = [[1, 3, 7, 8], [1, 5, 6, 8], [2, 3, 6, 8], [4, 5, 6, 7], [2, 4, 7, 8]]
            .iter()
            .map(|s| Subset::from_labels(s))
            .collect();
        from_nonbases(8, 4, &h).expect("sparse paving")
    }

    /// The Vámos matroid: pairs `12, 34, 56, 78`; every union of two pairs is
    /// a circuit-hyperplane except `34 ∪ 78`.
    pub fn vamos() -> Matroid {
        let h: Vec<Subset> = [[1, 2, 3, 4], [1, 2, 5, 6], [1, 2, 7, 8], [3, 4, 5, 6], [5, 6, 7, 8]]
            .iter()
            .map(|s| Subset::from_labels(s))
            .collect();
        from_nonbases(8, 4, &h).expect("sparse paving")
    }

    /// Simple rank-3 matroid on `1..n` whose only dependent triples are the
    /// three-subsets of the given lines.
    pub fn rank3_from_lines(n: usize, lines: &[&[usize]]) -> Matroid {
        let mut nb = Vec::new();
        for l in lines {
            let line = Subset::from_labels(l);
            nb.extend(k_subsets(line, 3));
        }
        from_nonbases(n, 3, &nb).expect("lines form a linear space")
    }
}
