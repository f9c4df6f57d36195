//! Vertex-disjoint paths by unit-capacity augmenting paths on the
//! vertex-split network.

use std::collections::VecDeque;

use matroid_core::Subset;

use crate::graph::Digraph;

/// A family of pairwise vertex-disjoint paths, each given by its vertex
/// sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Routing {
    pub paths: Vec<Vec<usize>>,
}

impl Routing {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn starts(&self) -> Subset {
        self.paths.iter().map(|p| p[0]).collect()
    }

    pub fn ends(&self) -> Subset {
        self.paths.iter().map(|p| *p.last().unwrap()).collect()
    }

    pub fn vertices(&self) -> Subset {
        self.paths.iter().flatten().copied().collect()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut a: Vec<_> = self.paths.iter().flat_map(|p| p.windows(2).map(|w| (w[0], w[1]))).collect();
        a.sort_unstable();
        a
    }

    /// Checks the routing conditions against `d` and the target set.
    pub fn is_valid(&self, d: &Digraph, targets: Subset) -> bool {
        let mut seen = Subset::EMPTY;
        for p in &self.paths {
            for &v in p {
                if seen.contains(v) {
                    return false;
                }
                seen.insert(v);
            }
            if !p.windows(2).all(|w| d.has_arc(w[0], w[1])) || !targets.contains(*p.last().unwrap()) {
                return false;
            }
        }
        true
    }
}

struct Edge {
    to: usize,
    cap: u8,
    rev: usize,
}

struct Network {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Network {
    fn new(nodes: usize) -> Network {
        Network { adj: vec![Vec::new(); nodes], edges: Vec::new() }
    }

    fn add(&mut self, u: usize, v: usize) {
        let i = self.edges.len();
        self.edges.push(Edge { to: v, cap: 1, rev: i + 1 });
        self.edges.push(Edge { to: u, cap: 0, rev: i });
        self.adj[u].push(i);
        self.adj[v].push(i + 1);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut pred = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::from([s]);
        pred[s] = usize::MAX - 1;
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let Edge { to, cap, .. } = self.edges[e];
                if cap > 0 && pred[to] == usize::MAX {
                    pred[to] = e;
                    if to == t {
                        let mut v = t;
                        while v != s {
                            let e = pred[v];
                            self.edges[e].cap -= 1;
                            let r = self.edges[e].rev;
                            self.edges[r].cap += 1;
                            v = self.edges[r].to;
                        }
                        return true;
                    }
                    queue.push_back(to);
                }
            }
        }
        false
    }
}

/// A maximum family of vertex-disjoint paths from `from` to `to`. Its size
/// equals the minimum size of a separator. Paths are ordered by start
/// vertex.
pub fn max_connector(d: &Digraph, from: Subset, to: Subset) -> Routing {
    let n = d.vertex_count();
    let (src, snk) = (2 * n, 2 * n + 1);
    let mut net = Network::new(2 * n + 2);
    for v in 0..n {
        net.add(2 * v, 2 * v + 1);
    }
    for (u, v) in d.arcs() {
        net.add(2 * u + 1, 2 * v);
    }
    for v in from.iter() {
        net.add(src, 2 * v);
    }
    for v in to.iter() {
        net.add(2 * v + 1, snk);
    }
    while net.augment(src, snk) {}

    let saturated = |net: &Network, u: usize| -> Option<usize> {
        net.adj[u]
            .iter()
            .find(|&&e| e % 2 == 0 && net.edges[e].cap == 0)
            .map(|&e| net.edges[e].to)
    };
    let mut paths = Vec::new();
    for s in from.iter() {
        // is s used?
        if !net.adj[src].iter().any(|&e| net.edges[e].to == 2 * s && net.edges[e].cap == 0) {
            continue;
        }
        let mut path = vec![s];
        let mut v = s;
        loop {
            let next = saturated(&net, 2 * v + 1).expect("flow conservation");
            if next == snk {
                break;
            }
            v = next / 2;
            path.push(v);
        }
        paths.push(path);
    }
    Routing { paths }
}

/// Size of a maximum connector; same as `max_connector(..).len()`.
pub fn connectivity(d: &Digraph, from: Subset, to: Subset) -> usize {
    max_connector(d, from, to).len()
}

/// Whether `from` can be linked into `to` entirely.
pub fn is_linkable(d: &Digraph, from: Subset, to: Subset) -> bool {
    connectivity(d, from, to) == from.len()
}

/// Every routing that links all of `from` into `to`, in no particular order.
/// Exponential; intended for small digraphs.
pub fn all_linkings(d: &Digraph, from: Subset, to: Subset) -> Vec<Routing> {
    fn rec(
        d: &Digraph,
        starts: &[usize],
        to: Subset,
        used: Subset,
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Routing>,
    ) {
        let Some((&s, rest)) = starts.split_first() else {
            out.push(Routing { paths: current.clone() });
            return;
        };
        let mut path = vec![s];
        extend(d, rest, to, used.with(s), &mut path, current, out);
    }
    fn extend(
        d: &Digraph,
        rest: &[usize],
        to: Subset,
        used: Subset,
        path: &mut Vec<usize>,
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Routing>,
    ) {
        let v = *path.last().unwrap();
        if to.contains(v) {
            current.push(path.clone());
            rec(d, rest, to, used, current, out);
            current.pop();
        }
        let blocked: Subset = used | rest.iter().copied().collect();
        for w in (d.out_neighbours(v) - blocked).iter() {
            path.push(w);
            extend(d, rest, to, used.with(w), path, current, out);
            path.pop();
        }
    }
    let starts: Vec<usize> = from.iter().collect();
    let mut out = Vec::new();
    rec(d, &starts, to, Subset::EMPTY, &mut Vec::new(), &mut out);
    out
}
