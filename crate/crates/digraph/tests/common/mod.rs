#![allow(dead_code)]

use gammoid_digraph::Digraph;
use matroid_core::{Matroid, Subset};

/// Whether the vertices `starts` can be joined to `targets` by disjoint
/// paths, by exhaustive path search.
pub fn linkable(d: &Digraph, starts: &[usize], targets: Subset, used: Subset) -> bool {
    let Some((&s, rest)) = starts.split_first() else { return true };
    let blocked: Subset = rest.iter().copied().collect::<Subset>() | used;
    fn walk(d: &Digraph, v: usize, rest: &[usize], targets: Subset, used: Subset, blocked: Subset) -> bool {
        if targets.contains(v) && linkable(d, rest, targets, used) {
            return true;
        }
        (0..d.vertex_count())
            .filter(|&w| d.has_arc(v, w) && !used.contains(w) && !blocked.contains(w))
            .any(|w| walk(d, w, rest, targets, used.with(w), blocked.with(w)))
    }
    walk(d, s, rest, targets, used.with(s), blocked.with(s))
}

pub fn brute_rank(d: &Digraph, x: Subset, targets: Subset) -> usize {
    x.subsets()
        .filter(|y| linkable(d, &y.iter().collect::<Vec<_>>(), targets, Subset::EMPTY))
        .map(|y| y.len())
        .max()
        .unwrap_or(0)
}

pub fn brute_gammoid(d: &Digraph, targets: Subset, ground: Subset) -> Matroid {
    let n = ground.len();
    let r = brute_rank(d, ground, targets);
    Matroid::from_rank_fn(n, r, |x| brute_rank(d, x.expand(ground), targets))
}

pub fn set(s: &str) -> Subset {
    s.bytes().map(|b| (b - b'a') as usize).collect()
}
