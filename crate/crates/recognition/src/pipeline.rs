//! Guided tableau derivation. Each round checks whether the tableau is
//! decisive, picks an unprocessed matroid equivalent to the goal, and runs
//! the structural tests on it in a fixed order until one of them adds
//! information.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use gammoid_alpha::{
    find_deflate, ingleton_violation, is_strict_gammoid, modular_cuts, strongly_base_orderable, extend_unchecked,
};
use gammoid_digraph::{vertex_bound, Digraph};
use matroid_core::{
    contract_set, dual, is_isomorphic, is_minor_isomorphic, k_subsets, named, signature, Matroid, Signature, Subset,
};

use crate::tableau::{canonical_hash, Decision, Induction, Tableau};

#[derive(Clone, Debug)]
pub struct Budget {
    /// Largest flat rank tried in the Ingleton search; 0 skips the step.
    pub ingleton_max: usize,
    /// Number of single-element extensions examined per extension search.
    pub extension_limit: usize,
    /// How many elements an extension search may add.
    pub extension_depth: usize,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { ingleton_max: 4, extension_limit: 2000, extension_depth: 2, deadline: None }
    }
}

#[derive(Clone, Debug)]
pub enum PipelineVerdict {
    Gammoid(Tableau),
    NotGammoid(Tableau),
    /// Nothing applied within the budget; the tableau can be resumed.
    Undecided(Tableau),
}

impl PipelineVerdict {
    pub fn tableau(&self) -> &Tableau {
        match self {
            PipelineVerdict::Gammoid(t) | PipelineVerdict::NotGammoid(t) | PipelineVerdict::Undecided(t) => t,
        }
    }

    pub fn is_gammoid(&self) -> Option<bool> {
        match self {
            PipelineVerdict::Gammoid(_) => Some(true),
            PipelineVerdict::NotGammoid(_) => Some(false),
            PipelineVerdict::Undecided(_) => None,
        }
    }
}

/// One applied step: its number, the matroid it was applied to (short
/// hash, size and rank), and what it found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub step: u8,
    pub subject: String,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub verdict: PipelineVerdict,
    pub log: Vec<StepRecord>,
    /// Every tableau the run derived, in order.
    pub history: Vec<Tableau>,
}

fn describe(m: &Matroid) -> String {
    format!("{}[n={},r={}]", &canonical_hash(m)[..8], m.n(), m.rank_total())
}

fn strict(m: &Matroid) -> Option<bool> {
    is_strict_gammoid(m).ok()
}

/// `(M, {M, M*}, ∅, ∅)`.
fn gammoid_pair(m: &Matroid) -> Tableau {
    Tableau::from_parts(m, &[m.clone(), dual(m)], &[], &[])
}

/// `(M, ∅, ∅, {M, M*} ∪ extra)`.
fn excluded_pair(m: &Matroid, extra: &[Matroid]) -> Tableau {
    let mut x = vec![m.clone(), dual(m)];
    x.extend_from_slice(extra);
    Tableau::from_parts(m, &[], &[], &x)
}

/// The tableau for a deflate `N`: a gammoid pair if `N` is a strict
/// gammoid, otherwise `N` as intermediate.
fn deflate_tableau(n: &Matroid) -> Tableau {
    if strict(n) == Some(true) {
        gammoid_pair(n)
    } else {
        Tableau::from_parts(n, &[], &[n.clone()], &[])
    }
}

/// Inductions between `M` and its restriction to `keep`, where each removed
/// element `e` is added back as a source with arcs to its flat.
pub fn deflate_witnesses(m: &Matroid, keep: Subset, order: &[(usize, Subset)]) -> (Induction, Induction) {
    let n = m.n();
    let down = Induction { digraph: Digraph::new(n), targets: (0..n).collect(), ground: keep };
    let mut d = Digraph::new(n);
    for &(e, flat) in order {
        for f in flat.iter() {
            d.add_arc(e, f);
        }
    }
    let up = Induction { digraph: d, targets: keep.iter().collect(), ground: m.ground() };
    (down, up)
}

struct Run<'a> {
    budget: &'a Budget,
    t: Tableau,
    log: Vec<StepRecord>,
    history: Vec<Tableau>,
}

impl Run<'_> {
    fn note(&mut self, step: u8, m: &Matroid, note: impl Into<String>) {
        self.log.push(StepRecord { step, subject: describe(m), note: note.into() });
    }

    fn merge(&mut self, other: &Tableau) {
        self.t = Tableau::join(&[&self.t, other]).normalize();
        self.history.push(self.t.clone());
    }

    fn out_of_time(&self) -> bool {
        self.budget.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// An unprocessed matroid of the goal's class, or failing that an
    /// unprocessed intermediate, smallest first.
    fn choose(&self, processed: &HashSet<Matroid>) -> Option<Matroid> {
        let t = &self.t;
        let goal = t.goal_id();
        let mut candidates: Vec<usize> = t.class_of(goal);
        candidates.extend(t.intermediates.iter().copied());
        candidates.retain(|&i| !t.gammoids.contains(&i) && !t.excluded.contains(&i) && !processed.contains(t.matroid(i)));
        candidates.sort_by_key(|&i| (!t.equivalent(i, goal), t.matroid(i).n(), i));
        candidates.first().map(|&i| t.matroid(i).clone())
    }

    /// Steps 3-14 on `m`, stopping at the first step that decides
    /// something. Returns whether one did.
    fn process(&mut self, m: &Matroid) -> bool {
        let md = dual(m);

        // 3: is the tableau already decisive for m?
        let local = self.t.with_goal(m);
        if local.decisive().is_some() {
            let concluded = local.conclude().expect("decisive");
            self.note(3, m, "decided by the current tableau");
            self.merge(&concluded);
            return true;
        }
        // 4
        if is_minor_isomorphic(m, &named::mk4()) {
            self.note(4, m, "has an M(K4) minor");
            self.merge(&excluded_pair(m, &[]));
            return true;
        }
        // 5
        if !is_minor_isomorphic(m, &named::u24()) {
            self.note(5, m, "binary without M(K4) minor");
            self.merge(&gammoid_pair(m));
            return true;
        }
        // 6, 7
        for (step, a, b) in [(6u8, m, &md), (7, &md, m)] {
            if self.t.id_of(a).is_some_and(|i| self.t.intermediates.contains(&i)) {
                continue;
            }
            match strict(a) {
                Some(true) => {
                    self.note(step, a, "α is non-negative");
                    self.merge(&Tableau::from_parts(a, &[a.clone(), b.clone()], &[], &[]));
                    return true;
                }
                Some(false) => {
                    self.note(step, a, "α has a negative value");
                    self.merge(&Tableau::from_parts(a, &[], &[a.clone()], &[]));
                }
                None => {}
            }
        }
        // 8
        if !strongly_base_orderable(m) {
            self.note(8, m, "not strongly base orderable");
            self.merge(&excluded_pair(m, &[]));
            return true;
        }
        // 9, 10: rank-3 contractions
        for (step, a) in [(9u8, m), (10, &md)] {
            let ra = a.rank_total();
            if ra < 3 {
                continue;
            }
            for x in k_subsets(a.ground(), ra - 3) {
                if !a.is_independent(x) {
                    continue;
                }
                let c = contract_set(a, x);
                if strict(&c) == Some(false) {
                    self.note(step, a, format!("contracting {x} leaves a rank-3 non-gammoid"));
                    self.merge(&excluded_pair(m, &[c]));
                    return true;
                }
            }
        }
        // 11
        if self.budget.ingleton_max > 0 {
            if let Some(v) = ingleton_violation(m, self.budget.ingleton_max) {
                self.note(11, m, format!("violates Ingleton's inequality at {v:?}"));
                self.merge(&excluded_pair(m, &[]));
                return true;
            }
        }
        // 12, 13
        for (step, a) in [(12u8, m), (13, &md)] {
            let Some(d) = find_deflate(a) else { continue };
            let n = d.matroid.clone();
            let (down, up) = deflate_witnesses(a, d.keep, &d.order);
            let mut joined = Tableau::join(&[&self.t, &deflate_tableau(&n)]);
            let (ia, in_) = (joined.register(a), joined.register(&n));
            match joined.identify(ia, in_, &down, &up) {
                Ok(t) => {
                    self.note(step, a, format!("identified with its deflate on {}", d.keep));
                    self.t = t.normalize();
                    self.history.push(self.t.clone());
                    return true;
                }
                Err(e) => self.note(step, a, format!("deflate witness rejected: {e}")),
            }
        }
        // 14
        match self.strict_extension(m) {
            Some(ext) => {
                self.note(14, m, format!("restriction of a strict gammoid on {} elements", ext.n()));
                let mut t = gammoid_pair(&ext);
                // the conclusion for ext makes all its minors gammoids
                let id = t.register(m);
                t.gammoids.insert(id);
                self.merge(&t);
                true
            }
            None => {
                self.note(14, m, "no strict extension within budget");
                false
            }
        }
    }

    /// Breadth-first search over same-rank single-element extensions, up to
    /// isomorphism, for one with non-negative α.
    fn strict_extension(&self, m: &Matroid) -> Option<Matroid> {
        let max_n = (m.n() + self.budget.extension_depth).min(vertex_bound(m));
        let mut level = vec![m.clone()];
        let mut examined = 0usize;
        while level[0].n() < max_n {
            let mut seen: BTreeMap<Signature, Vec<Matroid>> = BTreeMap::new();
            let mut next = Vec::new();
            for base in &level {
                let loops = base.closure(Subset::EMPTY);
                for cut in modular_cuts(base) {
                    if cut.is_empty() || cut.contains(loops) {
                        continue;
                    }
                    examined += 1;
                    if examined > self.budget.extension_limit || self.out_of_time() {
                        return None;
                    }
                    let ext = extend_unchecked(base, &cut);
                    let bucket = seen.entry(signature(&ext)).or_default();
                    if bucket.iter().any(|o| is_isomorphic(o, &ext)) {
                        continue;
                    }
                    if strict(&ext) == Some(true) {
                        return Some(ext);
                    }
                    bucket.push(ext.clone());
                    next.push(ext);
                }
            }
            if next.is_empty() {
                return None;
            }
            level = next;
        }
        None
    }
}

/// Run the guided derivation on `m` within `budget`.
pub fn auto_pipeline(m: &Matroid, budget: &Budget) -> PipelineRun {
    let t = Tableau::init(m);
    let mut run = Run { budget, history: vec![t.clone()], t, log: Vec::new() };
    let mut processed: HashSet<Matroid> = HashSet::new();
    loop {
        // 1
        if let Some(d) = run.t.decisive() {
            let concluded = run.t.conclude().expect("decisive");
            run.history.push(concluded.clone());
            let verdict = match d {
                Decision::Gammoid(_) => {
                    run.note(1, m, "equivalent to a known gammoid");
                    PipelineVerdict::Gammoid(concluded)
                }
                Decision::ExcludedMinor(x) => {
                    let note = format!("has a minor isomorphic to {}", describe(run.t.matroid(x)));
                    run.note(1, m, note);
                    PipelineVerdict::NotGammoid(concluded)
                }
            };
            return PipelineRun { verdict, log: run.log, history: run.history };
        }
        if run.out_of_time() {
            run.note(1, m, "deadline reached");
            break;
        }
        // 2
        let Some(cur) = run.choose(&processed) else {
            break;
        };
        run.process(&cur);
        processed.insert(cur);
    }
    let t = run.t.clone();
    PipelineRun { verdict: PipelineVerdict::Undecided(t), log: run.log, history: run.history }
}
