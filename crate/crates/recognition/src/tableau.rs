//! Matroid tableaux: a goal matroid plus families of known gammoids,
//! matroids known not to be strict gammoids, known non-gammoids, and an
//! equivalence under which each class is all gammoids or contains none.
//!
//! Matroids are interned in a registry; the families hold registry ids and
//! the equivalence is a union-find over ids.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use gammoid_alpha::{is_strict_gammoid, is_transversal};
use gammoid_digraph::{induced_matroid, Digraph};
use matroid_core::{dual, is_isomorphic, is_minor_isomorphic, Matroid, Subset};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::RecognitionError;

pub type Id = usize;

/// Why a tableau is decisive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    /// The goal is equivalent to this member of the gammoid family.
    Gammoid(Id),
    /// This member of the excluded family is a minor of the goal.
    ExcludedMinor(Id),
}

/// `I(D, M, E')`: vertices `targets[i]` carry element `i` of the source
/// matroid, and the induced matroid lives on the vertices of `ground`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induction {
    pub digraph: Digraph,
    pub targets: Vec<usize>,
    pub ground: Subset,
}

impl Induction {
    pub fn apply(&self, source: &Matroid) -> Matroid {
        induced_matroid(&self.digraph, &self.targets, source, self.ground)
    }
}

#[derive(Clone, Debug)]
pub struct Tableau {
    matroids: Vec<Matroid>,
    index: HashMap<Matroid, Id>,
    parent: Vec<Id>,
    goal: Id,
    pub gammoids: BTreeSet<Id>,
    pub intermediates: BTreeSet<Id>,
    pub excluded: BTreeSet<Id>,
}

impl Tableau {
    /// `(G, ∅, ∅, ∅)` with the trivial equivalence.
    pub fn init(goal: &Matroid) -> Tableau {
        let mut t = Tableau {
            matroids: Vec::new(),
            index: HashMap::new(),
            parent: Vec::new(),
            goal: 0,
            gammoids: BTreeSet::new(),
            intermediates: BTreeSet::new(),
            excluded: BTreeSet::new(),
        };
        t.goal = t.register(goal);
        t
    }

    /// A tableau with the given families and the trivial equivalence. The
    /// caller vouches for validity.
    pub fn from_parts(goal: &Matroid, gammoids: &[Matroid], intermediates: &[Matroid], excluded: &[Matroid]) -> Tableau {
        let mut t = Tableau::init(goal);
        for m in gammoids {
            let id = t.register(m);
            t.gammoids.insert(id);
        }
        for m in intermediates {
            let id = t.register(m);
            t.intermediates.insert(id);
        }
        for m in excluded {
            let id = t.register(m);
            t.excluded.insert(id);
        }
        t
    }

    pub fn goal(&self) -> &Matroid {
        &self.matroids[self.goal]
    }

    pub fn goal_id(&self) -> Id {
        self.goal
    }

    pub fn matroid(&self, id: Id) -> &Matroid {
        &self.matroids[id]
    }

    pub fn len(&self) -> usize {
        self.matroids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matroids.is_empty()
    }

    pub fn id_of(&self, m: &Matroid) -> Option<Id> {
        self.index.get(m).copied()
    }

    /// Intern `m`, returning its id.
    pub fn register(&mut self, m: &Matroid) -> Id {
        if let Some(&id) = self.index.get(m) {
            return id;
        }
        let id = self.matroids.len();
        self.matroids.push(m.clone());
        self.index.insert(m.clone(), id);
        self.parent.push(id);
        id
    }

    /// The same tableau with `m` as goal.
    pub fn with_goal(&self, m: &Matroid) -> Tableau {
        let mut t = self.clone();
        t.goal = t.register(m);
        t
    }

    fn find(&self, mut a: Id) -> Id {
        while self.parent[a] != a {
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: Id, b: Id) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    pub fn equivalent(&self, a: Id, b: Id) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn class_of(&self, a: Id) -> Vec<Id> {
        let root = self.find(a);
        (0..self.len()).filter(|&b| self.find(b) == root).collect()
    }

    /// All classes with more than one member.
    pub fn classes(&self) -> Vec<Vec<Id>> {
        let mut by_root: BTreeMap<Id, Vec<Id>> = BTreeMap::new();
        for a in 0..self.len() {
            by_root.entry(self.find(a)).or_default().push(a);
        }
        by_root.into_values().filter(|c| c.len() > 1).collect()
    }

    /// Union of families and of equivalences; the goal is the first
    /// tableau's.
    pub fn join(tableaux: &[&Tableau]) -> Tableau {
        let (first, rest) = tableaux.split_first().expect("at least one tableau");
        let mut out = (*first).clone();
        for t in rest {
            out.absorb(t);
        }
        out
    }

    fn absorb(&mut self, t: &Tableau) {
        let ids: Vec<Id> = t.matroids.iter().map(|m| self.register(m)).collect();
        self.gammoids.extend(t.gammoids.iter().map(|&i| ids[i]));
        self.intermediates.extend(t.intermediates.iter().map(|&i| ids[i]));
        self.excluded.extend(t.excluded.iter().map(|&i| ids[i]));
        for a in 0..t.len() {
            self.union(ids[a], ids[t.find(a)]);
        }
    }

    /// Close the gammoid and excluded families under the equivalence.
    pub fn expand(&self) -> Tableau {
        let mut t = self.clone();
        let g_roots: BTreeSet<Id> = t.gammoids.iter().map(|&i| t.find(i)).collect();
        let x_roots: BTreeSet<Id> = t.excluded.iter().map(|&i| t.find(i)).collect();
        for a in 0..t.len() {
            let root = t.find(a);
            if g_roots.contains(&root) {
                t.gammoids.insert(a);
            }
            if x_roots.contains(&root) {
                t.excluded.insert(a);
            }
        }
        t
    }

    /// Add duals of gammoids and excluded matroids, move excluded matroids
    /// into the intermediates, and merge matroids that are isomorphic to
    /// each other or to each other's duals.
    pub fn extend(&self) -> Tableau {
        let mut t = self.clone();
        for id in self.gammoids.iter().copied().collect::<Vec<_>>() {
            let d = t.register(&dual(&self.matroids[id]));
            t.gammoids.insert(d);
        }
        for id in self.excluded.iter().copied().collect::<Vec<_>>() {
            let d = t.register(&dual(&self.matroids[id]));
            t.excluded.insert(d);
        }
        // a non-gammoid is not a strict gammoid either
        let ex: Vec<Id> = t.excluded.iter().copied().collect();
        t.intermediates.extend(ex);
        t.merge_isomorphic();
        t
    }

    fn merge_isomorphic(&mut self) {
        let k = self.len();
        let duals: Vec<Matroid> = self.matroids.iter().map(dual).collect();
        for a in 0..k {
            for b in a + 1..k {
                if self.equivalent(a, b) {
                    continue;
                }
                let (ma, mb) = (&self.matroids[a], &self.matroids[b]);
                if ma.n() != mb.n() {
                    continue;
                }
                let same = (ma.rank_total() == mb.rank_total() && is_isomorphic(ma, mb))
                    || (ma.rank_total() == duals[b].rank_total() && is_isomorphic(ma, &duals[b]));
                if same {
                    self.union(a, b);
                }
            }
        }
    }

    /// `[[T]≡]≃`, the normal form used after every derivation step.
    pub fn normalize(&self) -> Tableau {
        self.extend().expand()
    }

    pub fn decisive(&self) -> Option<Decision> {
        if let Some(&g) = self.gammoids.iter().find(|&&g| self.equivalent(g, self.goal)) {
            return Some(Decision::Gammoid(g));
        }
        let goal = self.goal();
        self.excluded
            .iter()
            .copied()
            .find(|&x| is_minor_isomorphic(goal, &self.matroids[x]))
            .map(Decision::ExcludedMinor)
    }

    /// The conclusion tableau: the goal joins the gammoids or the excluded
    /// matroids, depending on why the tableau is decisive. Minors of a
    /// gammoid goal are gammoids too but are not enumerated.
    pub fn conclude(&self) -> Result<Tableau, RecognitionError> {
        let decision = self.decisive().ok_or(RecognitionError::NotDecisive)?;
        let mut t = self.clone();
        match decision {
            Decision::Gammoid(_) => t.gammoids.insert(t.goal),
            Decision::ExcludedMinor(_) => t.excluded.insert(t.goal),
        };
        Ok(t)
    }

    /// Merge the classes of `a` and `b`, given inductions taking each
    /// matroid to one isomorphic to the other.
    pub fn identify(&self, a: Id, b: Id, a_to_b: &Induction, b_to_a: &Induction) -> Result<Tableau, RecognitionError> {
        for id in [a, b] {
            if id >= self.len() {
                return Err(RecognitionError::UnknownMatroid(format!("#{id}")));
            }
        }
        let (ma, mb) = (&self.matroids[a], &self.matroids[b]);
        check_induction(a_to_b, ma, mb, "first")?;
        check_induction(b_to_a, mb, ma, "second")?;
        let mut t = self.clone();
        t.union(a, b);
        Ok(t)
    }

    /// Check conditions (i)-(iv) of a valid tableau. `oracle` decides
    /// gammoids where it can; members it cannot decide are counted as
    /// unchecked. The intermediate condition is checked exactly.
    pub fn check_validity(&self, oracle: &dyn Fn(&Matroid) -> Option<bool>) -> ValidityReport {
        let mut report = ValidityReport::default();
        let facts: Vec<Option<bool>> = self.matroids.iter().map(oracle).collect();
        for &g in &self.gammoids {
            match facts[g] {
                Some(false) => report.violations.push(format!("#{g} is listed as a gammoid but is not one")),
                None => report.unchecked += 1,
                Some(true) => {}
            }
        }
        for &x in &self.excluded {
            match facts[x] {
                Some(true) => report.violations.push(format!("#{x} is listed as a non-gammoid but is a gammoid")),
                None => report.unchecked += 1,
                Some(false) => {}
            }
        }
        for &i in &self.intermediates {
            match is_strict_gammoid(&self.matroids[i]) {
                Ok(true) => report.violations.push(format!("#{i} is listed as intermediate but is a strict gammoid")),
                Ok(false) => {}
                Err(_) => report.unchecked += 1,
            }
        }
        for class in self.classes() {
            let known: BTreeSet<bool> = class.iter().filter_map(|&i| facts[i]).collect();
            if known.len() > 1 {
                report.violations.push(format!("class {class:?} mixes gammoids and non-gammoids"));
            }
            let has_g = class.iter().any(|i| self.gammoids.contains(i));
            let has_x = class.iter().any(|i| self.excluded.contains(i));
            if has_g && has_x {
                report.violations.push(format!("class {class:?} meets both the gammoids and the excluded family"));
            }
        }
        if self.gammoids.iter().any(|g| self.excluded.contains(g)) {
            report.violations.push("a matroid is listed both as gammoid and as non-gammoid".into());
        }
        report
    }

    pub fn to_json(&self) -> String {
        let hashes: Vec<String> = self.matroids.iter().map(canonical_hash).collect();
        let list = |s: &BTreeSet<Id>| s.iter().map(|&i| hashes[i].clone()).collect();
        let file = TableauFile {
            goal: hashes[self.goal].clone(),
            gammoids: list(&self.gammoids),
            intermediates: list(&self.intermediates),
            excluded: list(&self.excluded),
            equivalence: (0..self.len())
                .filter(|&a| self.find(a) != a)
                .map(|a| (hashes[self.find(a)].clone(), hashes[a].clone()))
                .collect(),
            matroids: self
                .matroids
                .iter()
                .zip(&hashes)
                .map(|(m, h)| (h.clone(), MatroidEntry { n: m.n(), r: m.rank_total(), bases: m.bit_string() }))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Tableau, RecognitionError> {
        let file: TableauFile = serde_json::from_str(s).map_err(|e| RecognitionError::Parse(e.to_string()))?;
        let mut by_hash: HashMap<String, Matroid> = HashMap::new();
        for (h, e) in &file.matroids {
            let bits: Vec<bool> = e
                .bases
                .chars()
                .map(|c| match c {
                    '1' => Ok(true),
                    '0' => Ok(false),
                    _ => Err(RecognitionError::Parse(format!("bad base bit {c:?}"))),
                })
                .collect::<Result<_, _>>()?;
            let m = Matroid::from_bits(e.n, e.r, &bits).map_err(|e| RecognitionError::Parse(e.to_string()))?;
            by_hash.insert(h.clone(), m);
        }
        let get = |h: &String| by_hash.get(h).ok_or_else(|| RecognitionError::UnknownMatroid(h.clone()));
        let mut t = Tableau::init(get(&file.goal)?);
        let mut keys: Vec<&String> = file.matroids.keys().collect();
        keys.sort();
        for h in keys {
            t.register(&by_hash[h]);
        }
        for h in &file.gammoids {
            let id = t.register(get(h)?);
            t.gammoids.insert(id);
        }
        for h in &file.intermediates {
            let id = t.register(get(h)?);
            t.intermediates.insert(id);
        }
        for h in &file.excluded {
            let id = t.register(get(h)?);
            t.excluded.insert(id);
        }
        for (a, b) in &file.equivalence {
            let (ia, ib) = (t.register(get(a)?), t.register(get(b)?));
            t.union(ia, ib);
        }
        Ok(t)
    }

    /// Same goal, families and classes, compared by matroid.
    pub fn same_as(&self, other: &Tableau) -> bool {
        let set = |t: &Tableau, s: &BTreeSet<Id>| -> BTreeSet<String> { s.iter().map(|&i| canonical_hash(&t.matroids[i])).collect() };
        let classes = |t: &Tableau| -> BTreeSet<BTreeSet<String>> {
            t.classes().iter().map(|c| c.iter().map(|&i| canonical_hash(&t.matroids[i])).collect()).collect()
        };
        self.goal() == other.goal()
            && set(self, &self.gammoids) == set(other, &other.gammoids)
            && set(self, &self.intermediates) == set(other, &other.intermediates)
            && set(self, &self.excluded) == set(other, &other.excluded)
            && classes(self) == classes(other)
    }
}

fn check_induction(w: &Induction, source: &Matroid, expected: &Matroid, which: &str) -> Result<(), RecognitionError> {
    if w.targets.len() != source.n() {
        return Err(RecognitionError::InvalidWitness(format!(
            "{which} witness has {} targets for a matroid on {} elements",
            w.targets.len(),
            source.n()
        )));
    }
    let bad_vertex = w.targets.iter().any(|&v| v >= w.digraph.vertex_count())
        || w.ground.max().is_some_and(|v| v >= w.digraph.vertex_count());
    if bad_vertex {
        return Err(RecognitionError::InvalidWitness(format!("{which} witness refers to missing vertices")));
    }
    let induced = w.apply(source);
    if !is_isomorphic(&induced, expected) {
        return Err(RecognitionError::InvalidWitness(format!(
            "{which} witness induces a matroid not isomorphic to the other side"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidityReport {
    pub violations: Vec<String>,
    /// Members the oracle could not decide.
    pub unchecked: usize,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct MatroidEntry {
    n: usize,
    r: usize,
    bases: String,
}

#[derive(Serialize, Deserialize)]
struct TableauFile {
    goal: String,
    gammoids: Vec<String>,
    intermediates: Vec<String>,
    excluded: Vec<String>,
    equivalence: Vec<(String, String)>,
    matroids: BTreeMap<String, MatroidEntry>,
}

/// SHA-256 over `n`, `r` and the base bit string, as lowercase hex.
pub fn canonical_hash(m: &Matroid) -> String {
    let mut h = Sha256::new();
    h.update(format!("{} {} {}", m.n(), m.rank_total(), m.bit_string()));
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Exact answer where one is cheap: every matroid of rank at most 2 or
/// corank at most 2 is a gammoid, in rank 3 exactly the strict gammoids
/// are, and in corank 3 exactly the transversal matroids. This covers all
/// matroids on at most 7 elements.
pub fn small_gammoid_oracle(m: &Matroid) -> Option<bool> {
    let (n, r) = (m.n(), m.rank_total());
    if r <= 2 || r + 2 >= n {
        return Some(true);
    }
    if r == 3 {
        return is_strict_gammoid(m).ok();
    }
    if r + 3 == n {
        return is_transversal(m).ok();
    }
    None
}
