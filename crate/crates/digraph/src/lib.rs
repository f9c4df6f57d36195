//! Digraphs, routings and gammoids represented by `(D, T, E)`.

pub mod error;
pub mod flow;
pub mod graph;
pub mod io;
pub mod repr;

pub use error::DigraphError;
pub use flow::{all_linkings, connectivity, is_linkable, max_connector, Routing};
pub use graph::{canonical_key, Digraph, MAX_VERTICES};
pub use io::{letter_names, parse_digraph, print_digraph};
pub use repr::{
    base_target_representation, complete_lifting, gammoid_matroid, induced_matroid, is_duality_respecting,
    is_essential_arc, linkage_system, standard_representation, transversal_matroid, transversal_rank,
    uniform_representation, vertex_bound, Lift, Representation,
};

/// Small representations used by tests and the command line tool.
pub mod named {
    use super::*;
    use matroid_core::Subset;

    fn letters(s: &str) -> Subset {
        s.bytes().map(|b| (b - b'a') as usize).collect()
    }

    fn arcs(spec: &[&str]) -> Vec<(usize, usize)> {
        spec.iter()
            .map(|a| {
                let b = a.as_bytes();
                ((b[0] - b'a') as usize, (b[1] - b'a') as usize)
            })
            .collect()
    }

    /// A seven-element rank-4 gammoid on `a..g` that is not a strict
    /// gammoid; auxiliary vertices `x, y` are the vertices 7 and 8
    /// (written `h`, `i` below).
    pub fn g7() -> Representation {
        let d = Digraph::from_arcs(9, &arcs(&["ha", "hb", "ib", "ic", "eh", "ei", "fd", "fh", "gd", "gi"]));
        let mut names = letter_names(7);
        names.push("x".into());
        names.push("y".into());
        Representation::new(d, letters("abcd"), letters("abcdefg")).with_names(names)
    }

    /// Eight-element gammoid on `a..h` with auxiliary `x, y`: every one of
    /// `e, f, g, h` points to `x` and `y`; `x` points to `a, b, d`, `y` to
    /// `a, c, d`.
    pub fn pivot10() -> Representation {
        let mut a = Vec::new();
        for u in "efgh".bytes() {
            for v in [b'i', b'j'] {
                a.push(((u - b'a') as usize, (v - b'a') as usize));
            }
        }
        a.extend(arcs(&["ia", "ib", "id", "ja", "jc", "jd"]));
        let d = Digraph::from_arcs(10, &a);
        let mut names = letter_names(8);
        names.push("x".into());
        names.push("y".into());
        Representation::new(d, letters("abcd"), letters("abcdefgh")).with_names(names)
    }

    /// Gammoid on `a..i` with auxiliary `x, y` (vertices 9 and 10, written
    /// `j`, `k` below) and targets `a, b, c, d`. Contains the cycle
    /// `g -> h -> i -> g`.
    pub fn ghig() -> Representation {
        let d = Digraph::from_arcs(
            11,
            &arcs(&["ej", "ek", "fd", "fj", "gh", "gk", "hi", "if", "ig", "jb", "kc"]),
        );
        let mut names = letter_names(9);
        names.push("x".into());
        names.push("y".into());
        Representation::new(d, letters("abcd"), letters("abcdefghi")).with_names(names)
    }
}
