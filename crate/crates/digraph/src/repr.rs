use matroid_core::{dual, k_subsets, Matroid, Subset};

use crate::error::DigraphError;
use crate::flow::{connectivity, max_connector};
use crate::graph::Digraph;

/// A triple `(D, T, E)`: digraph, target vertices, ground vertices. The
/// matroid elements are the vertices of `ground` in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub digraph: Digraph,
    pub targets: Subset,
    pub ground: Subset,
    pub names: Vec<String>,
}

/// Default vertex names: `a`, `b`, ... then `v27`, `v28`, ...
pub fn default_name(v: usize) -> String {
    if v < 26 {
        ((b'a' + v as u8) as char).to_string()
    } else {
        format!("v{}", v + 1)
    }
}

impl Representation {
    pub fn new(digraph: Digraph, targets: Subset, ground: Subset) -> Representation {
        let names = (0..digraph.vertex_count()).map(default_name).collect();
        Representation { digraph, targets, ground, names }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Representation {
        assert_eq!(names.len(), self.digraph.vertex_count());
        self.names = names;
        self
    }

    /// Vertex index of the matroid element `e`.
    pub fn vertex_of(&self, e: usize) -> usize {
        self.ground.iter().nth(e).expect("element out of range")
    }

    /// Translate a subset of matroid elements to vertices.
    pub fn to_vertices(&self, x: Subset) -> Subset {
        x.expand(self.ground)
    }

    /// Translate a vertex subset of the ground set to matroid elements.
    pub fn to_elements(&self, x: Subset) -> Subset {
        x.compress(self.ground)
    }

    pub fn vertex_names(&self, x: Subset) -> String {
        let v: Vec<&str> = x.iter().map(|v| self.names[v].as_str()).collect();
        format!("{{{}}}", v.join(","))
    }

    fn add_vertex(&mut self, name: String) -> usize {
        let v = self.digraph.add_vertex();
        self.names.push(name);
        v
    }

    fn fresh_name(&self, base: &str) -> String {
        let mut s = base.to_string();
        while self.names.contains(&s) {
            s.push('\'');
        }
        s
    }

    /// Rank of an element subset: the size of a maximum connector to `T`.
    pub fn rank(&self, x: Subset) -> usize {
        connectivity(&self.digraph, self.to_vertices(x), self.targets)
    }

    /// The represented gammoid.
    pub fn gammoid(&self) -> Matroid {
        gammoid_matroid(self)
    }

    /// Same digraph and targets with every vertex in the ground set.
    pub fn strict(&self) -> Representation {
        Representation { ground: self.digraph.vertices(), ..self.clone() }
    }

    /// Reverse all arcs and take `E \ T` as targets.
    pub fn opposite(&self) -> Representation {
        Representation {
            digraph: self.digraph.opposite(),
            targets: self.ground - self.targets,
            ground: self.ground,
            names: self.names.clone(),
        }
    }

    pub fn without_arc(&self, u: usize, v: usize) -> Result<Representation, DigraphError> {
        if !self.digraph.has_arc(u, v) {
            return Err(DigraphError::ArcMissing(u, v));
        }
        let mut r = self.clone();
        r.digraph.remove_arc(u, v);
        Ok(r)
    }
}

pub fn gammoid_matroid(rep: &Representation) -> Matroid {
    let n = rep.ground.len();
    let r = connectivity(&rep.digraph, rep.ground, rep.targets);
    Matroid::from_rank_fn(n, r, |x| rep.rank(x))
}

/// Pivot along the paths of one maximal linking from `base` to the targets,
/// so that afterwards the targets are exactly `base` and all of them are
/// sinks. `base` is given as a set of matroid elements.
pub fn base_target_representation(rep: &Representation, base: Subset) -> Result<Representation, DigraphError> {
    let bv = rep.to_vertices(base);
    let r = connectivity(&rep.digraph, rep.ground, rep.targets);
    if base.len() != r || !base.is_subset(Subset::full(rep.ground.len())) {
        return Err(DigraphError::NotABase(base));
    }
    let mut out = rep.clone();
    for t in rep.targets.iter() {
        for v in out.digraph.out_neighbours(t).iter() {
            out.digraph.remove_arc(t, v);
        }
    }
    if rep.targets.len() != r {
        // route the old targets into r fresh sinks
        let mut fresh = Subset::EMPTY;
        for i in 0..r {
            let t = out.add_vertex(out.fresh_name(&format!("t{}", i + 1)));
            for u in rep.targets.iter() {
                out.digraph.add_arc(u, t);
            }
            fresh.insert(t);
        }
        out.targets = fresh;
    }
    let linking = max_connector(&out.digraph, bv, out.targets);
    if linking.len() != r {
        return Err(DigraphError::NotABase(base));
    }
    for path in &linking.paths {
        for j in (0..path.len() - 1).rev() {
            out.digraph = out.digraph.pivot(path[j], path[j + 1])?;
            out.targets.remove(path[j + 1]);
            out.targets.insert(path[j]);
        }
    }
    debug_assert_eq!(out.targets, bv);
    Ok(out)
}

/// A representation whose targets are sinks inside `E` and whose other
/// ground vertices are sources. Built from the first base in kth order.
pub fn standard_representation(rep: &Representation) -> Representation {
    let m = gammoid_matroid(rep);
    let base = m.bases()[0];
    let mut out = base_target_representation(rep, base).expect("first base is a base");
    for e in (out.ground - out.targets).iter() {
        if out.digraph.is_source(e) {
            continue;
        }
        let name = out.fresh_name(&format!("{}'", out.names[e]));
        let e2 = out.add_vertex(name);
        for v in out.digraph.out_neighbours(e).iter() {
            out.digraph.remove_arc(e, v);
            out.digraph.add_arc(e2, v);
        }
        for u in out.digraph.in_neighbours(e).iter() {
            out.digraph.remove_arc(u, e);
            out.digraph.add_arc(u, e2);
        }
        out.digraph.add_arc(e, e2);
    }
    out
}

/// `Γ(D^opp, E \ T, E)` equals the dual of `Γ(D, T, E)`.
pub fn is_duality_respecting(rep: &Representation) -> bool {
    gammoid_matroid(&rep.opposite()) == dual(&gammoid_matroid(rep))
}

/// Whether deleting the arc changes the represented gammoid.
pub fn is_essential_arc(rep: &Representation, u: usize, v: usize) -> Result<bool, DigraphError> {
    let smaller = rep.without_arc(u, v)?;
    Ok(gammoid_matroid(&smaller) != gammoid_matroid(rep))
}

/// One lifted cycle: `x` joins the ground set, `t` the targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lift {
    pub x: usize,
    pub t: usize,
}

/// Lift shortest cycles until the digraph is acyclic. The original gammoid
/// is the contraction of the result by all lifted `x` vertices.
pub fn complete_lifting(rep: &Representation) -> (Representation, Vec<Lift>) {
    let mut out = rep.clone();
    let mut lifts = Vec::new();
    while let Some(cycle) = out.digraph.shortest_cycle() {
        let (d, x, t) = out.digraph.lift_cycle(&cycle).expect("shortest_cycle returns cycles");
        out.digraph = d;
        out.names.push(format!("x{}", lifts.len() + 1));
        out.names.push(format!("t{}", lifts.len() + 1));
        out.ground.insert(x);
        out.targets.insert(t);
        lifts.push(Lift { x, t });
    }
    (out, lifts)
}

/// Complete bipartite digraph from `n - r` sources onto `r` targets; the
/// targets are the first `r` vertices.
pub fn uniform_representation(n: usize, r: usize) -> Result<Representation, DigraphError> {
    if r > n {
        return Err(DigraphError::RankTooLarge { n, r });
    }
    let mut d = Digraph::new(n);
    for u in r..n {
        for t in 0..r {
            d.add_arc(u, t);
        }
    }
    Ok(Representation::new(d, Subset::full(r), Subset::full(n)))
}

/// Upper bound on the number of vertices needed to represent a gammoid.
pub fn vertex_bound(m: &Matroid) -> usize {
    let (r, n) = (m.rank_total(), m.n());
    r * r * n + r + n
}

/// `(v, out(v) ∪ {v})` for every non-target vertex.
pub fn linkage_system(d: &Digraph, targets: Subset) -> Vec<(usize, Subset)> {
    (d.vertices() - targets).iter().map(|v| (v, d.out_neighbours(v).with(v))).collect()
}

/// Size of a maximum matching of `x` into the family.
pub fn transversal_rank(family: &[Subset], x: Subset) -> usize {
    fn try_assign(e: usize, family: &[Subset], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for (i, a) in family.iter().enumerate() {
            if a.contains(e) && !seen[i] {
                seen[i] = true;
                if owner[i].map_or(true, |f| try_assign(f, family, owner, seen)) {
                    owner[i] = Some(e);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; family.len()];
    let mut size = 0;
    for e in x.iter() {
        let mut seen = vec![false; family.len()];
        if try_assign(e, family, &mut owner, &mut seen) {
            size += 1;
        }
    }
    size
}

/// The transversal matroid on `{0..n}` whose independent sets are the
/// partial transversals of `family`.
pub fn transversal_matroid(n: usize, family: &[Subset]) -> Matroid {
    let r = transversal_rank(family, Subset::full(n));
    Matroid::from_rank_fn(n, r, |x| transversal_rank(family, x))
}

/// The matroid induced on `ground` from `target_matroid` (whose elements
/// are the vertices `targets`, in order) by the digraph: `X` is independent
/// iff it links onto an independent set of the target matroid.
pub fn induced_matroid(d: &Digraph, targets: &[usize], target_matroid: &Matroid, ground: Subset) -> Matroid {
    let tv: Subset = targets.iter().copied().collect();
    let independent = |x: Subset| -> bool {
        let xv = x.expand(ground);
        k_subsets(Subset::full(targets.len()), x.len()).into_iter().any(|y| {
            target_matroid.is_independent(y)
                && connectivity(d, xv, y.iter().map(|i| targets[i]).collect()) == x.len()
        })
    };
    let n = ground.len();
    let mut r = connectivity(d, ground, tv).min(target_matroid.rank_total());
    loop {
        let bases: Vec<Subset> = k_subsets(Subset::full(n), r).into_iter().filter(|&x| independent(x)).collect();
        if !bases.is_empty() {
            return Matroid::from_bases_unchecked(n, r, bases);
        }
        r -= 1;
    }
}
