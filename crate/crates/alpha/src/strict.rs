use gammoid_digraph::{Digraph, Representation};
use matroid_core::{Matroid, Subset};

use crate::error::AlphaError;
use crate::table::alpha_invariant;

/// The α-system: every flat `F` listed `α(F)` times.
pub fn alpha_system(m: &Matroid) -> Result<Vec<Subset>, AlphaError> {
    let t = alpha_invariant(m)?;
    let mut out = Vec::new();
    for &f in m.flats() {
        let a = t.get(f);
        if a < 0 {
            return Err(AlphaError::NotStrict(f));
        }
        out.extend(std::iter::repeat(f).take(a as usize));
    }
    Ok(out)
}

/// A strict representation on `E` itself: `T0` is a transversal of the
/// α-system, `T = E \ T0`, and every `u ∈ T0` points into the flat it
/// represents.
pub fn strict_representation(m: &Matroid) -> Result<Representation, AlphaError> {
    if let Some(neg) = crate::table::first_negative(m)? {
        return Err(AlphaError::NotStrict(neg));
    }
    let system = alpha_system(m)?;
    // match each member of the family to a distinct element
    let mut owner: Vec<Option<usize>> = vec![None; m.n()];
    fn assign(i: usize, system: &[Subset], owner: &mut [Option<usize>], seen: &mut Subset) -> bool {
        for e in system[i].iter() {
            if seen.contains(e) {
                continue;
            }
            seen.insert(e);
            if owner[e].map_or(true, |j| assign(j, system, owner, seen)) {
                owner[e] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..system.len() {
        let mut seen = Subset::EMPTY;
        let matched = assign(i, &system, &mut owner, &mut seen);
        assert!(matched, "alpha >= 0 guarantees a transversal");
    }
    let mut d = Digraph::new(m.n());
    let mut t0 = Subset::EMPTY;
    for (u, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            t0.insert(u);
            for v in system[*i].iter() {
                d.add_arc(u, v);
            }
        }
    }
    let targets = m.ground() - t0;
    // arcs into vertices that cannot reach a target are never on a path
    let useful = d.opposite().reachable(targets);
    for (u, v) in d.arcs() {
        if !useful.contains(v) {
            d.remove_arc(u, v);
        }
    }
    Ok(Representation::new(d, targets, m.ground()).with_names((1..=m.n()).map(|i| i.to_string()).collect()))
}
