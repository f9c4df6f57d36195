use std::collections::VecDeque;

use matroid_core::Subset;

use crate::error::DigraphError;

pub const MAX_VERTICES: usize = 64;

/// Sort key of the canonical arc order; see [`Digraph::canonical_arcs`].
pub fn canonical_key(u: usize, v: usize) -> (usize, bool, usize) {
    if u < v {
        (v, false, u)
    } else {
        (u, true, v)
    }
}

/// A digraph on `{0, .., n-1}` without loop arcs, stored as out-neighbour
/// sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Digraph {
    out: Vec<Subset>,
}

impl Digraph {
    pub fn new(n: usize) -> Digraph {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Digraph { out: vec![Subset::EMPTY; n] }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn vertices(&self) -> Subset {
        Subset::full(self.out.len())
    }

    /// Self-loops are dropped silently.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        if u != v {
            self.out[u].insert(v);
        }
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out[u].remove(v);
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn out_neighbours(&self, u: usize) -> Subset {
        self.out[u]
    }

    pub fn in_neighbours(&self, v: usize) -> Subset {
        (0..self.out.len()).filter(|&u| self.out[u].contains(v)).collect()
    }

    /// Append a fresh isolated vertex and return its index.
    pub fn add_vertex(&mut self) -> usize {
        assert!(self.out.len() < MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        self.out.push(Subset::EMPTY);
        self.out.len() - 1
    }

    /// Arcs in lexicographic order of (tail, head).
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, s) in self.out.iter().enumerate() {
            for v in s.iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Arcs ordered by their larger endpoint `m`; for equal `m`, first the
    /// arcs `(j, m)` with `j < m` by `j`, then the arcs `(m, j)` by `j`.
    pub fn canonical_arcs(&self) -> Vec<(usize, usize)> {
        let mut a = self.arcs();
        a.sort_by_key(|&(u, v)| canonical_key(u, v));
        a
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v].is_empty()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.out.iter().all(|s| !s.contains(v))
    }

    /// Reverse every arc.
    pub fn opposite(&self) -> Digraph {
        let mut d = Digraph::new(self.vertex_count());
        for (u, v) in self.arcs() {
            d.add_arc(v, u);
        }
        d
    }

    /// Vertices reachable from `from` (including `from`).
    pub fn reachable(&self, from: Subset) -> Subset {
        let mut seen = from;
        let mut stack: Vec<usize> = from.iter().collect();
        while let Some(u) = stack.pop() {
            for v in (self.out[u] - seen).iter() {
                seen.insert(v);
                stack.push(v);
            }
        }
        seen
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for (_, v) in self.arcs() {
            indeg[v] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in self.out[u].iter() {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// A shortest cycle walk `v1 v2 .. vk` (arcs `vi -> vi+1` and `vk -> v1`);
    /// among the shortest ones, the one through the smallest vertex, starting
    /// there.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut best: Option<Vec<usize>> = None;
        for s in 0..n {
            // BFS from s for a shortest path back to s
            let mut pred = vec![usize::MAX; n];
            let mut dist = vec![usize::MAX; n];
            let mut queue = VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            let mut closing = None;
            'bfs: while let Some(u) = queue.pop_front() {
                for v in self.out[u].iter() {
                    if v == s {
                        closing = Some(u);
                        break 'bfs;
                    }
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        pred[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if let Some(last) = closing {
                let mut walk = vec![last];
                while *walk.last().unwrap() != s {
                    let p = pred[*walk.last().unwrap()];
                    walk.push(p);
                }
                walk.reverse();
                if best.as_ref().map_or(true, |b| walk.len() < b.len()) {
                    best = Some(walk);
                }
            }
        }
        best
    }

    /// The `r`-`s`-pivot: arcs leaving `r` are dropped and replaced by arcs
    /// from `s` to `r` and to every former out-neighbour of `r` other than
    /// `s`.
    pub fn pivot(&self, r: usize, s: usize) -> Result<Digraph, DigraphError> {
        if !self.has_arc(r, s) {
            return Err(DigraphError::ArcMissing(r, s));
        }
        let mut d = self.clone();
        let moved = self.out[r].with(r);
        d.out[r] = Subset::EMPTY;
        for x in moved.iter() {
            d.add_arc(s, x);
        }
        Ok(d)
    }

    /// Replace the arc `(c1, c2)` of the cycle walk `c` by `(c1, t)`,
    /// `(x, c2)`, `(x, t)` for two fresh vertices; returns `(D', x, t)`.
    pub fn lift_cycle(&self, cycle: &[usize]) -> Result<(Digraph, usize, usize), DigraphError> {
        let k = cycle.len();
        let distinct = cycle.iter().copied().collect::<Subset>().len() == k;
        if k < 2 || !distinct || !(0..k).all(|i| self.has_arc(cycle[i], cycle[(i + 1) % k])) {
            return Err(DigraphError::NotACycle);
        }
        let mut d = self.clone();
        let x = d.add_vertex();
        let t = d.add_vertex();
        let (c1, c2) = (cycle[0], cycle[1]);
        d.remove_arc(c1, c2);
        d.add_arc(c1, t);
        d.add_arc(x, c2);
        d.add_arc(x, t);
        Ok((d, x, t))
    }

    /// Subdivide arcs so that every arc joins consecutive layers of the
    /// longest-path layering.
    pub fn to_cascade(&self) -> Result<Digraph, DigraphError> {
        let order = self.topological_order().ok_or(DigraphError::CyclicInput)?;
        let mut layer = vec![0usize; self.vertex_count()];
        for &u in &order {
            for v in self.out[u].iter() {
                layer[v] = layer[v].max(layer[u] + 1);
            }
        }
        let mut d = Digraph::new(self.vertex_count());
        for (u, v) in self.arcs() {
            let mut prev = u;
            for _ in layer[u] + 1..layer[v] {
                let w = d.add_vertex();
                d.add_arc(prev, w);
                prev = w;
            }
            d.add_arc(prev, v);
        }
        Ok(d)
    }

    pub fn to_dot(&self, names: &[String], targets: Subset) -> String {
        let mut s = String::from("digraph D {\n");
        for v in 0..self.vertex_count() {
            let shape = if targets.contains(v) { "doublecircle" } else { "circle" };
            s.push_str(&format!("  \"{}\" [shape={shape}];\n", names[v]));
        }
        for (u, v) in self.arcs() {
            s.push_str(&format!("  \"{}\" -> \"{}\";\n", names[u], names[v]));
        }
        s.push_str("}\n");
        s
    }
}
