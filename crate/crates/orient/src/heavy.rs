use std::collections::HashMap;

use gammoid_digraph::{all_linkings, Representation, Routing};
use matroid_core::Subset;

use crate::error::OrientError;
use crate::om::{cocircuits_from_circuits, OrientedMatroid};
use crate::signed::SignedSubset;

/// A linear order on arcs plus a sign for each arc.
#[derive(Clone, Debug)]
pub struct ArcSignature {
    rank: HashMap<(usize, usize), usize>,
    negative: Vec<bool>,
}

impl ArcSignature {
    /// `order` lists arcs from lowest to highest.
    pub fn new(order: &[(usize, usize)], sign: impl Fn((usize, usize)) -> i8) -> ArcSignature {
        ArcSignature {
            rank: order.iter().enumerate().map(|(i, &a)| (a, i)).collect(),
            negative: order.iter().map(|&a| sign(a) < 0).collect(),
        }
    }

    /// All arcs positive.
    pub fn positive(order: &[(usize, usize)]) -> ArcSignature {
        ArcSignature::new(order, |_| 1)
    }

    fn rank_of(&self, a: (usize, usize)) -> usize {
        self.rank[&a]
    }

    /// Ranks of the traversed arcs, highest first. Comparing these
    /// lexicographically compares routings by the highest arc in their
    /// symmetric difference.
    pub fn routing_key(&self, r: &Routing) -> Vec<usize> {
        let mut k: Vec<usize> = r.arcs().into_iter().map(|a| self.rank_of(a)).collect();
        k.sort_unstable_by(|a, b| b.cmp(a));
        k
    }

    /// Permutation sign of starts against ends times the product of arc
    /// signs.
    pub fn routing_sign(&self, r: &Routing) -> i8 {
        let mut paths: Vec<&Vec<usize>> = r.paths.iter().collect();
        paths.sort_by_key(|p| p[0]);
        let ends: Vec<usize> = paths.iter().map(|p| *p.last().expect("non-empty path")).collect();
        let mut sign = 1i8;
        for i in 0..ends.len() {
            for j in i + 1..ends.len() {
                if ends[i] > ends[j] {
                    sign = -sign;
                }
            }
        }
        for a in r.arcs() {
            if self.negative[self.rank_of(a)] {
                sign = -sign;
            }
        }
        sign
    }

    /// The routing from `from` into `targets` with the largest key.
    pub fn max_routing(&self, rep: &Representation, from: Subset) -> Option<Routing> {
        all_linkings(&rep.digraph, from, rep.targets).into_iter().max_by_key(|r| self.routing_key(r))
    }
}

/// The heavy arc signature of circuit `c` (element labels), anchored at
/// its first element: `c_j` gets `(-1)^j sgn(R_j)` for 1-based `j`, where
/// `R_j` is the maximal routing from `c` minus `c_j`.
pub fn circuit_signature(rep: &Representation, c: Subset, sig: &ArcSignature) -> SignedSubset {
    let verts: Vec<usize> = rep.to_vertices(c).iter().collect();
    let mut s = SignedSubset::default();
    let mut ends: Option<Subset> = None;
    for (j, &v) in verts.iter().enumerate() {
        let from: Subset = verts.iter().copied().filter(|&u| u != v).collect();
        let r = sig.max_routing(rep, from).expect("a circuit minus one element is linked");
        let e = r.ends();
        assert!(ends.is_none_or(|x| x == e), "maximal routings of a circuit share their ends");
        ends = Some(e);
        let sign = sig.routing_sign(&r) * if j % 2 == 0 { -1 } else { 1 };
        s.set(rep.to_elements(Subset::singleton(v)).min().expect("ground vertex"), sign);
    }
    s
}

/// The unique orientation of the gammoid of an acyclic representation
/// whose signed circuits are the heavy arc signatures.
pub fn heavy_arc_orientation(rep: &Representation, sig: &ArcSignature) -> Result<OrientedMatroid, OrientError> {
    if !rep.digraph.is_acyclic() {
        return Err(OrientError::CyclicInput);
    }
    let m = rep.gammoid();
    let circuits: Vec<SignedSubset> = m
        .circuits()
        .iter()
        .flat_map(|&c| {
            let s = circuit_signature(rep, c, sig);
            [s, s.negate()]
        })
        .collect();
    let cocircuits = cocircuits_from_circuits(&m, &circuits)?;
    Ok(OrientedMatroid { n: m.n(), circuits: circuits.into_iter().collect(), cocircuits: cocircuits.into_iter().collect() })
}
