#![allow(dead_code)]

use std::collections::BTreeSet;

use gammoid_alpha::{extend_unchecked, modular_cuts, ModularCut};
use gammoid_digraph::Digraph;
use matroid_core::{dual, Matroid, Subset};
use rand::Rng;

/// A matroid built by single-element extensions along random modular cuts,
/// starting from a loop or a coloop.
pub fn random_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    let mut m = if rng.gen_bool(0.2) { Matroid::loops(1) } else { Matroid::free(1) };
    while m.n() < n {
        let mut cuts = modular_cuts(&m);
        // keep loops and coloops rare
        let loops = m.closure(Subset::EMPTY);
        cuts.retain(|c| !c.contains(loops) || rng.gen_bool(0.05));
        if cuts.is_empty() || rng.gen_bool(0.1) {
            cuts = vec![ModularCut::empty()];
        }
        let cut = &cuts[rng.gen_range(0..cuts.len())];
        m = extend_unchecked(&m, cut);
    }
    m
}

/// Flats by definition.
pub fn is_flat(m: &Matroid, x: Subset) -> bool {
    let r = m.rank(x);
    (m.ground() - x).iter().all(|e| m.rank(x.with(e)) > r)
}

/// α from its recurrence over all subsets.
pub fn alpha_nonnegative(m: &Matroid) -> bool {
    let size = 1usize << m.n();
    let flat: Vec<bool> = (0..size).map(|x| is_flat(m, Subset(x as u64))).collect();
    let mut a = vec![0i64; size];
    for x in 0..size {
        let xs = Subset(x as u64);
        let below: i64 = xs.subsets().filter(|&f| f != xs && flat[f.bits() as usize]).map(|f| a[f.bits() as usize]).sum();
        a[x] = (xs.len() - m.rank(xs)) as i64 - below;
        if a[x] < 0 {
            return false;
        }
    }
    true
}

/// Gammoid or not, for matroids with rank or corank at most 3.
pub fn gammoid_oracle(m: &Matroid) -> Option<bool> {
    let (n, r) = (m.n(), m.rank_total());
    if r <= 2 || n - r <= 2 {
        Some(true)
    } else if r == 3 {
        Some(alpha_nonnegative(m))
    } else if n - r == 3 {
        Some(alpha_nonnegative(&dual(m)))
    } else {
        None
    }
}

/// Every simple path of `d` as a vertex sequence, trivial ones included.
pub fn all_paths(d: &Digraph) -> BTreeSet<Vec<u8>> {
    fn walk(d: &Digraph, path: &mut Vec<u8>, out: &mut BTreeSet<Vec<u8>>) {
        out.insert(path.clone());
        let v = *path.last().unwrap() as usize;
        for w in 0..d.vertex_count() {
            if d.has_arc(v, w) && !path.contains(&(w as u8)) {
                path.push(w as u8);
                walk(d, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for v in 0..d.vertex_count() {
        walk(d, &mut vec![v as u8], &mut out);
    }
    out
}

/// Every family of pairwise disjoint paths starting in `{0..n}` with
/// exactly one path ending at each vertex of `base`.
pub fn linkings_onto(d: &Digraph, n: usize, base: Subset) -> BTreeSet<BTreeSet<Vec<u8>>> {
    let paths = all_paths(d);
    let targets: Vec<usize> = base.iter().collect();
    let by_end: Vec<Vec<&Vec<u8>>> = targets
        .iter()
        .map(|&b| paths.iter().filter(|p| *p.last().unwrap() as usize == b && (p[0] as usize) < n).collect())
        .collect();
    let mut out = BTreeSet::new();
    fn rec<'a>(i: usize, by_end: &[Vec<&'a Vec<u8>>], used: u64, cur: &mut Vec<&'a Vec<u8>>, out: &mut BTreeSet<BTreeSet<Vec<u8>>>) {
        if i == by_end.len() {
            out.insert(cur.iter().map(|p| (*p).clone()).collect());
            return;
        }
        for p in &by_end[i] {
            let set: u64 = p.iter().map(|&v| 1u64 << v).sum();
            if set & used == 0 {
                cur.push(p);
                rec(i + 1, by_end, used | set, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, &by_end, 0, &mut Vec::new(), &mut out);
    out
}

/// Cycle matroid of a multigraph on `vertices` vertices.
pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Matroid {
    let forest = |x: Subset| -> usize {
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(p: &mut Vec<usize>, mut a: usize) -> usize {
            while p[a] != a {
                a = p[a];
            }
            a
        }
        let mut rank = 0;
        for e in x.iter() {
            let (a, b) = (find(&mut parent, edges[e].0), find(&mut parent, edges[e].1));
            if a != b {
                parent[a] = b;
                rank += 1;
            }
        }
        rank
    };
    let n = edges.len();
    let r = forest(Subset::full(n));
    Matroid::from_rank_fn(n, r, forest)
}
