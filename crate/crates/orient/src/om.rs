use std::collections::BTreeSet;
use std::fmt;

use matroid_core::{k_subsets, relabel as relabel_matroid, Matroid, Subset};
use rayon::prelude::*;

use crate::error::OrientError;
use crate::signed::SignedSubset;

/// Signed circuits and cocircuits on `{0, .., n-1}`. Both families are
/// closed under negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedMatroid {
    pub n: usize,
    pub circuits: BTreeSet<SignedSubset>,
    pub cocircuits: BTreeSet<SignedSubset>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    C1,
    C2,
    C3,
    C4,
    Co1,
    Co2,
    Co3,
    Co4,
    O1,
    O2,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::C4 => "C4",
            Axiom::Co1 => "C*1",
            Axiom::Co2 => "C*2",
            Axiom::Co3 => "C*3",
            Axiom::Co4 => "C*4",
            Axiom::O1 => "O1",
            Axiom::O2 => "O2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<SignedSubset>,
}

/// Outcome of [`check_axioms`]: the first violated axiom, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub violation: Option<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }

    pub fn failed(&self) -> Option<Axiom> {
        self.violation.as_ref().map(|v| v.axiom)
    }
}

/// C1..C4 on one family, reported under the names in `axioms`.
fn check_family(fam: &[SignedSubset], axioms: [Axiom; 4]) -> Option<Violation> {
    let set: BTreeSet<SignedSubset> = fam.iter().copied().collect();
    if let Some(&x) = fam.iter().find(|x| x.is_empty()) {
        return Some(Violation { axiom: axioms[0], witnesses: vec![x] });
    }
    if let Some(&x) = fam.iter().find(|x| !set.contains(&x.negate())) {
        return Some(Violation { axiom: axioms[1], witnesses: vec![x] });
    }
    for &x in fam {
        for &y in fam {
            if x.support().is_subset(y.support()) && x != y && x != y.negate() {
                return Some(Violation { axiom: axioms[2], witnesses: vec![x, y] });
            }
        }
    }
    let bad = fam.par_iter().find_map_first(|&x| {
        for &y in fam {
            if x == y.negate() || (x.pos & y.neg).is_empty() {
                continue;
            }
            let up = x.pos | y.pos;
            let un = x.neg | y.neg;
            let free_f = x.support() - x.separator(y);
            for e in (x.pos & y.neg).iter() {
                let cands: Vec<SignedSubset> = fam
                    .iter()
                    .copied()
                    .filter(|z| !z.support().contains(e) && z.pos.is_subset(up) && z.neg.is_subset(un))
                    .collect();
                for f in free_f.iter() {
                    if !cands.iter().any(|z| z.sign(f) == x.sign(f)) {
                        return Some(Violation { axiom: axioms[3], witnesses: vec![x, y] });
                    }
                }
            }
        }
        None
    });
    bad
}

/// Checks all oriented matroid axioms exhaustively and reports the first
/// failure in the order C1..C4, C*1..C*4, O1, O2.
pub fn check_axioms(n: usize, circuits: &[SignedSubset], cocircuits: &[SignedSubset]) -> AxiomReport {
    use Axiom::*;
    let report = |v| AxiomReport { violation: v };
    if let Some(v) = check_family(circuits, [C1, C2, C3, C4]) {
        return report(Some(v));
    }
    if let Some(v) = check_family(cocircuits, [Co1, Co2, Co3, Co4]) {
        return report(Some(v));
    }
    for &c in circuits {
        if let Some(&d) = cocircuits.iter().find(|d| !c.is_orthogonal(**d)) {
            return report(Some(Violation { axiom: O1, witnesses: vec![c, d] }));
        }
    }
    let supports: BTreeSet<Subset> = circuits.iter().map(|c| c.support()).collect();
    let cosupports: BTreeSet<Subset> = cocircuits.iter().map(|c| c.support()).collect();
    let ok = matroid_with_circuits(n, &supports)
        .map(|m| m.cocircuits().into_iter().collect::<BTreeSet<_>>() == cosupports)
        .unwrap_or(false);
    if !ok {
        return report(Some(Violation { axiom: O2, witnesses: vec![] }));
    }
    report(None)
}

/// The matroid whose circuits are exactly `supports`, if there is one.
pub fn matroid_with_circuits(n: usize, supports: &BTreeSet<Subset>) -> Option<Matroid> {
    if n > matroid_core::MAX_TABLE {
        return None;
    }
    let independent = |x: Subset| !supports.iter().any(|c| c.is_subset(x));
    let mut r = 0;
    let mut greedy = Subset::EMPTY;
    for e in 0..n {
        if independent(greedy.with(e)) {
            greedy.insert(e);
            r += 1;
        }
    }
    let bases: Vec<Subset> = k_subsets(Subset::full(n), r).into_iter().filter(|&b| independent(b)).collect();
    let m = Matroid::from_bases(n, r, bases).ok()?;
    let mc: BTreeSet<Subset> = m.circuits().iter().copied().collect();
    (mc == *supports).then_some(m)
}

impl OrientedMatroid {
    /// Circuits given up to negation; cocircuits derived.
    pub fn from_circuits(m: &Matroid, circuits: &[SignedSubset]) -> Result<OrientedMatroid, OrientError> {
        let circuits: BTreeSet<SignedSubset> = circuits.iter().flat_map(|&c| [c, c.negate()]).collect();
        let list: Vec<SignedSubset> = circuits.iter().copied().collect();
        let cocircuits = cocircuits_from_circuits(m, &list)?.into_iter().collect();
        Ok(OrientedMatroid { n: m.n(), circuits, cocircuits })
    }

    pub fn circuit_list(&self) -> Vec<SignedSubset> {
        self.circuits.iter().copied().collect()
    }

    pub fn cocircuit_list(&self) -> Vec<SignedSubset> {
        self.cocircuits.iter().copied().collect()
    }

    pub fn check(&self) -> AxiomReport {
        check_axioms(self.n, &self.circuit_list(), &self.cocircuit_list())
    }

    /// The matroid formed by the circuit supports.
    pub fn underlying(&self) -> Option<Matroid> {
        matroid_with_circuits(self.n, &self.circuits.iter().map(|c| c.support()).collect())
    }

    pub fn dual(&self) -> OrientedMatroid {
        OrientedMatroid { n: self.n, circuits: self.cocircuits.clone(), cocircuits: self.circuits.clone() }
    }

    /// One representative of every `±X` pair, normalized.
    pub fn circuit_representatives(&self) -> Vec<SignedSubset> {
        let s: BTreeSet<SignedSubset> = self.circuits.iter().map(|c| c.normalized()).collect();
        s.into_iter().collect()
    }

    pub fn cocircuit_representatives(&self) -> Vec<SignedSubset> {
        let s: BTreeSet<SignedSubset> = self.cocircuits.iter().map(|c| c.normalized()).collect();
        s.into_iter().collect()
    }
}

/// Sign every cocircuit of `m`: fix its smallest element to `+`, then
/// each further element `c` from a circuit meeting the cocircuit in
/// exactly `{c, d}`. Both signs of each cocircuit are returned.
pub fn cocircuits_from_circuits(m: &Matroid, circuits: &[SignedSubset]) -> Result<Vec<SignedSubset>, OrientError> {
    let mut out = Vec::new();
    for d_support in m.cocircuits() {
        let d = d_support.min().expect("cocircuits are non-empty");
        let mut s = SignedSubset::default();
        s.set(d, 1);
        for c in d_support.without(d).iter() {
            let pair = Subset::from_elements([c, d]);
            let x = circuits
                .iter()
                .find(|x| x.support() & d_support == pair)
                .ok_or(OrientError::InconsistentSigning(d_support))?;
            s.set(c, if x.sign(c) != x.sign(d) { 1 } else { -1 });
        }
        if circuits.iter().any(|x| !x.is_orthogonal(s)) {
            return Err(OrientError::InconsistentSigning(d_support));
        }
        out.push(s);
        out.push(s.negate());
    }
    out.sort();
    Ok(out)
}

/// Flip the signs of `x` in every circuit and cocircuit.
pub fn reorient(o: &OrientedMatroid, x: Subset) -> OrientedMatroid {
    OrientedMatroid {
        n: o.n,
        circuits: o.circuits.iter().map(|c| c.flip(x)).collect(),
        cocircuits: o.cocircuits.iter().map(|c| c.flip(x)).collect(),
    }
}

fn map_signed(s: SignedSubset, perm: &[usize]) -> SignedSubset {
    let map = |x: Subset| x.iter().map(|e| perm[e]).collect();
    SignedSubset::new(map(s.pos), map(s.neg))
}

/// Image under `e -> perm[e]`, which must be an automorphism of the
/// underlying matroid.
pub fn relabel(o: &OrientedMatroid, perm: &[usize]) -> Result<OrientedMatroid, OrientError> {
    let m = o.underlying().ok_or(OrientError::NotAutomorphism)?;
    if perm.len() != o.n || relabel_matroid(&m, perm) != m {
        return Err(OrientError::NotAutomorphism);
    }
    Ok(OrientedMatroid {
        n: o.n,
        circuits: o.circuits.iter().map(|&c| map_signed(c, perm)).collect(),
        cocircuits: o.cocircuits.iter().map(|&c| map_signed(c, perm)).collect(),
    })
}

/// A set `X` with `o1` reoriented on `X` equal to `o2`, if any.
pub fn reorientation_between(o1: &OrientedMatroid, o2: &OrientedMatroid) -> Option<Subset> {
    if o1.n != o2.n {
        return None;
    }
    Subset::full(o1.n).subsets().find(|&x| reorient(o1, x).circuits == o2.circuits)
}
