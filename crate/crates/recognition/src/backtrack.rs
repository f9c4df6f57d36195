//! Exhaustive search over digraphs on a fixed vertex set.
//!
//! Vertices `0..n` carry the matroid elements, `n..max_vertices` are
//! auxiliary. The targets are a fixed base `B` of `M`. Arcs are decided one
//! at a time in a fixed order; the search keeps every path of the partial
//! digraph, every linking from a subset of `E` onto `B`, and the sets that
//! such linkings start from. A branch dies as soon as one of those sets is
//! not a base of `M`.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use gammoid_digraph::{is_linkable, Digraph, Representation, MAX_VERTICES};
use matroid_core::{Matroid, Subset};

use crate::error::RecognitionError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BacktrackVerdict {
    Gammoid(Representation),
    NotGammoidWithin(usize),
    /// The deadline passed before the search finished.
    Interrupted,
}

#[derive(Clone, Debug)]
pub struct BacktrackOptions {
    pub max_vertices: usize,
    pub deadline: Option<Instant>,
}

impl BacktrackOptions {
    pub fn new(max_vertices: usize) -> BacktrackOptions {
        BacktrackOptions { max_vertices, deadline: None }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Number of partial digraphs visited.
    pub nodes: u64,
    pub max_depth: usize,
}

/// A path stored as its vertex sequence and vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub vertices: Vec<u8>,
    pub set: u64,
}

impl Path {
    fn trivial(v: usize) -> Path {
        Path { vertices: vec![v as u8], set: 1 << v }
    }

    pub fn start(&self) -> usize {
        self.vertices[0] as usize
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths are non-empty") as usize
    }
}

/// A linking onto `B`: indices into the path store, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linking {
    pub paths: Vec<u32>,
    pub vertices: u64,
    pub starts: u64,
}

struct Frame {
    paths: usize,
    linkings: usize,
    bases: usize,
}

/// The state of the search: current arcs, all paths, all linkings onto the
/// base, and the starting sets of those linkings. Undo information is kept
/// as store lengths per added arc.
pub struct SearchState {
    pub n: usize,
    pub vertex_count: usize,
    pub base: Subset,
    pub digraph: Digraph,
    pub paths: Vec<Path>,
    pub linkings: Vec<Linking>,
    linking_keys: HashSet<Vec<u32>>,
    bases_log: Vec<u64>,
    bases_found: HashSet<u64>,
    frames: Vec<Frame>,
}

impl SearchState {
    pub fn new(m: &Matroid, vertex_count: usize) -> SearchState {
        let n = m.n();
        let base = m.bases()[0];
        let paths: Vec<Path> = (0..vertex_count).map(Path::trivial).collect();
        let trivial = Linking {
            paths: base.iter().map(|b| b as u32).collect(),
            vertices: base.bits(),
            starts: base.bits(),
        };
        let mut s = SearchState {
            n,
            vertex_count,
            base,
            digraph: Digraph::new(vertex_count),
            paths,
            linkings: Vec::new(),
            linking_keys: HashSet::new(),
            bases_log: Vec::new(),
            bases_found: HashSet::new(),
            frames: Vec::new(),
        };
        s.linking_keys.insert(trivial.paths.clone());
        s.linkings.push(trivial);
        s.bases_log.push(base.bits());
        s.bases_found.insert(base.bits());
        s
    }

    pub fn bases_found(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self.bases_found.iter().map(|&b| Subset(b)).collect();
        v.sort();
        v
    }

    pub fn depth(&self) -> usize {
        self.frames.len()
    }

    /// Smallest auxiliary vertex without entering arcs.
    pub fn first_unentered(&self) -> Option<usize> {
        (self.n..self.vertex_count).find(|&v| self.digraph.in_neighbours(v).is_empty())
    }

    /// Add the arc `u -> v` and extend the stores. Returns `false` as soon
    /// as a linking starts from a set that is not a base of `m`; the arc
    /// must be removed with [`SearchState::pop`] either way.
    pub fn push(&mut self, m: &Matroid, u: usize, v: usize) -> bool {
        let old_paths = self.paths.len();
        let old_linkings = self.linkings.len();
        self.frames.push(Frame { paths: old_paths, linkings: old_linkings, bases: self.bases_log.len() });
        self.digraph.add_arc(u, v);

        // new paths: l.r with l ending in u, r starting in v, disjoint
        let mut new_by_seq: HashMap<Vec<u8>, u32> = HashMap::new();
        let ends_in_u: Vec<usize> = (0..old_paths).filter(|&i| self.paths[i].end() == u).collect();
        let starts_in_v: Vec<usize> = (0..old_paths).filter(|&i| self.paths[i].start() == v).collect();
        for &li in &ends_in_u {
            for &ri in &starts_in_v {
                let (l, r) = (&self.paths[li], &self.paths[ri]);
                if l.set & r.set != 0 {
                    continue;
                }
                let mut vertices = l.vertices.clone();
                vertices.extend_from_slice(&r.vertices);
                let p = Path { set: l.set | r.set, vertices };
                new_by_seq.insert(p.vertices.clone(), self.paths.len() as u32);
                self.paths.push(p);
            }
        }
        let mut new_ending_at: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for i in old_paths..self.paths.len() {
            let p = &self.paths[i];
            if p.start() < self.n {
                new_ending_at[p.end()].push(i);
            }
        }

        // new linkings: replace some path r of an old linking by l.r where l
        // is a new path from E ending at the start of r and otherwise
        // avoiding the linking
        for ri in 0..old_linkings {
            let lk = self.linkings[ri].clone();
            for (slot, &pid) in lk.paths.iter().enumerate() {
                let r = &self.paths[pid as usize];
                let r1 = r.start();
                for &li in &new_ending_at[r1] {
                    let l = &self.paths[li];
                    if l.set & lk.vertices != 1 << r1 {
                        continue;
                    }
                    let joined_id = if r.vertices.len() == 1 {
                        li as u32
                    } else {
                        let mut seq = l.vertices.clone();
                        seq.extend_from_slice(&r.vertices[1..]);
                        new_by_seq[&seq]
                    };
                    let mut ids = lk.paths.clone();
                    ids[slot] = joined_id;
                    ids.sort_unstable();
                    if self.linking_keys.contains(&ids) {
                        continue;
                    }
                    let starts = (lk.starts & !(1 << r1)) | 1 << l.start();
                    let vertices = lk.vertices | l.set;
                    self.linking_keys.insert(ids.clone());
                    self.linkings.push(Linking { paths: ids, vertices, starts });
                    if self.bases_found.insert(starts) {
                        self.bases_log.push(starts);
                        if !m.is_base(Subset(starts)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Undo the most recent [`SearchState::push`].
    pub fn pop(&mut self, u: usize, v: usize) {
        let f = self.frames.pop().expect("pop without push");
        self.digraph.remove_arc(u, v);
        self.paths.truncate(f.paths);
        for lk in self.linkings.drain(f.linkings..) {
            self.linking_keys.remove(&lk.paths);
        }
        for b in self.bases_log.drain(f.bases..) {
            self.bases_found.remove(&b);
        }
    }

    fn representation(&self) -> Representation {
        let mut names: Vec<String> = (0..self.n).map(|e| (e + 1).to_string()).collect();
        names.extend((self.n..self.vertex_count).map(|k| format!("x{}", k - self.n + 1)));
        Representation::new(self.digraph.clone(), self.base, Subset::full(self.n)).with_names(names)
    }
}

/// All arcs on `count` vertices: by largest endpoint, then arcs entering
/// that endpoint before arcs leaving it, each by the other endpoint.
pub fn arc_order(count: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(count * count.saturating_sub(1));
    for k in 1..count {
        out.extend((0..k).map(|j| (j, k)));
        out.extend((0..k).map(|j| (k, j)));
    }
    out
}

struct Search<'a> {
    m: &'a Matroid,
    arcs: Vec<(usize, usize)>,
    target: usize,
    deadline: Option<Instant>,
    stats: SearchStats,
    interrupted: bool,
}

impl Search<'_> {
    /// Whether every base of `M` still links onto `B` once all undecided
    /// arcs from `next` on are added. Linkability only grows with arcs, so
    /// if this fails no completion of the branch represents `M`.
    fn completable(&self, s: &SearchState, next: usize) -> bool {
        let mut d = s.digraph.clone();
        for &(u, v) in &self.arcs[next..] {
            if !s.base.contains(u) {
                d.add_arc(u, v);
            }
        }
        self.m.bases().iter().all(|&x| s.bases_found.contains(&x.bits()) || is_linkable(&d, x, s.base))
    }

    fn explore(&mut self, s: &mut SearchState, start: usize, observer: &mut dyn FnMut(&SearchState)) -> bool {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(s.depth());
        observer(s);
        if s.bases_found.len() == self.target {
            return true;
        }
        if self.stats.nodes % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.interrupted = true;
                }
            }
        }
        if self.interrupted {
            return false;
        }
        for i in start..self.arcs.len() {
            let (u, v) = self.arcs[i];
            let i0 = s.first_unentered();
            if i0.is_some_and(|i0| v > i0) {
                return false;
            }
            // no linking onto B passes through a target, and nothing from E
            // reaches an unentered auxiliary vertex
            if s.base.contains(u) || i0 == Some(u) {
                continue;
            }
            let ok = s.push(self.m, u, v);
            if ok && self.explore(s, i + 1, observer) {
                return true;
            }
            s.pop(u, v);
            if self.interrupted || !self.completable(s, i + 1) {
                return false;
            }
        }
        false
    }
}

/// Search for a representation of `m` on at most `max_vertices` vertices.
/// `max_vertices` below `|E|` is raised to `|E|`.
pub fn recognize_backtracking(m: &Matroid, max_vertices: usize) -> Result<BacktrackVerdict, RecognitionError> {
    backtrack(m, &BacktrackOptions::new(max_vertices), &mut |_| {}).map(|(v, _)| v)
}

/// [`recognize_backtracking`] with a deadline, statistics, and a callback
/// that sees the state at the head of every search step.
pub fn backtrack(
    m: &Matroid,
    opts: &BacktrackOptions,
    observer: &mut dyn FnMut(&SearchState),
) -> Result<(BacktrackVerdict, SearchStats), RecognitionError> {
    let count = opts.max_vertices.max(m.n());
    if count > MAX_VERTICES {
        return Err(RecognitionError::TooManyVertices { requested: count, max: MAX_VERTICES });
    }
    let mut state = SearchState::new(m, count);
    let mut search = Search {
        m,
        arcs: arc_order(count),
        target: m.bases().len(),
        deadline: opts.deadline,
        stats: SearchStats::default(),
        interrupted: false,
    };
    let found = search.explore(&mut state, 0, observer);
    let verdict = if found {
        BacktrackVerdict::Gammoid(state.representation())
    } else if search.interrupted {
        BacktrackVerdict::Interrupted
    } else {
        BacktrackVerdict::NotGammoidWithin(count)
    };
    Ok((verdict, search.stats))
}
