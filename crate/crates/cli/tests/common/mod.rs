#![allow(dead_code)]

use std::path::PathBuf;

use gammoid_alpha::{extend_unchecked, modular_cuts};
use gammoid_digraph::{Digraph, Representation};
use matroid_core::{Matroid, Subset};
use rand::Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

/// Letters `a, b, ...` as 0-based elements.
pub fn set(s: &str) -> Subset {
    s.bytes().map(|b| (b - b'a') as usize).collect()
}

pub fn is_flat(m: &Matroid, x: Subset) -> bool {
    let r = m.rank(x);
    (m.ground() - x).iter().all(|e| m.rank(x.with(e)) > r)
}

/// α from the defining recurrence, indexed by subset mask.
pub fn alpha_oracle(m: &Matroid) -> Vec<i64> {
    let size = 1usize << m.n();
    let flat: Vec<bool> = (0..size).map(|x| is_flat(m, Subset(x as u64))).collect();
    let mut a = vec![0i64; size];
    for x in 0..size {
        let xs = Subset(x as u64);
        let below: i64 =
            xs.subsets().filter(|&f| f != xs && flat[f.bits() as usize]).map(|f| a[f.bits() as usize]).sum();
        a[x] = (xs.len() - m.rank(xs)) as i64 - below;
    }
    a
}

/// Whether `starts` can be linked by vertex-disjoint paths onto distinct
/// vertices of `ends`, by enumerating simple paths one start at a time.
pub fn linkable(d: &Digraph, starts: Subset, ends: Subset) -> bool {
    let s: Vec<usize> = starts.iter().collect();
    link(d, &s, ends, starts)
}

fn link(d: &Digraph, starts: &[usize], ends: Subset, used: Subset) -> bool {
    let Some((&s, rest)) = starts.split_first() else { return true };
    walk(d, s, rest, ends, used)
}

fn walk(d: &Digraph, v: usize, rest: &[usize], ends: Subset, used: Subset) -> bool {
    if ends.contains(v) && link(d, rest, ends.without(v), used) {
        return true;
    }
    d.out_neighbours(v).iter().any(|w| !used.contains(w) && walk(d, w, rest, ends, used.with(w)))
}

/// The gammoid by checking every subset of the ground set for a linking
/// into the targets.
pub fn brute_gammoid(rep: &Representation) -> Matroid {
    let ground: Vec<usize> = rep.ground.iter().collect();
    let n = ground.len();
    let indep: Vec<Subset> = Subset::full(n)
        .subsets()
        .filter(|x| linkable(&rep.digraph, x.iter().map(|i| ground[i]).collect(), rep.targets))
        .collect();
    let r = indep.iter().map(|x| x.len()).max().unwrap_or(0);
    Matroid::from_bases(n, r, indep.into_iter().filter(|x| x.len() == r).collect()).unwrap()
}

/// A chain of random single-element extensions starting from the empty
/// matroid; loops and coloops included.
pub fn random_matroid(rng: &mut impl Rng, n: usize) -> Matroid {
    let mut m = Matroid::free(0);
    while m.n() < n {
        let cuts = modular_cuts(&m);
        let cut = &cuts[rng.gen_range(0..cuts.len())];
        m = extend_unchecked(&m, cut);
    }
    m
}

/// Random acyclic digraph on `n` vertices with arcs from lower to higher
/// index after a random relabeling; random targets and ground set.
pub fn random_acyclic(rng: &mut impl Rng, n: usize) -> Representation {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.35) {
                d.add_arc(perm[u], perm[v]);
            }
        }
    }
    let targets: Subset = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    let mut ground: Subset = (0..n).filter(|_| rng.gen_bool(0.7)).collect();
    if ground.is_empty() {
        ground.insert(perm[0]);
    }
    Representation::new(d, targets, ground)
}

/// Random digraph with at least one cycle.
pub fn random_cyclic(rng: &mut impl Rng) -> Representation {
    let n = rng.gen_range(4..=7);
    let mut d = Digraph::new(n);
    for _ in 0..rng.gen_range(3..=10) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            d.add_arc(u, v);
        }
    }
    if d.is_acyclic() {
        d.add_arc(0, 1);
        d.add_arc(1, 0);
    }
    let t = rng.gen_range(1..=3);
    let targets: Subset = (n - t..n).collect();
    let ground: Subset = (0..n).filter(|&v| v == n - 1 || rng.gen_bool(0.6)).collect();
    Representation::new(d, targets, ground)
}
