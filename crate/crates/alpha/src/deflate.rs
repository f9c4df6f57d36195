use matroid_core::{restrict, Matroid, Subset};

/// Flats of `M | keep` whose closure in `M` contains `e`.
pub fn restriction_cut(m: &Matroid, keep: Subset, e: usize) -> Vec<Subset> {
    let r = restrict(m, keep);
    r.flats()
        .iter()
        .map(|f| f.expand(keep))
        .filter(|&f| m.closure(f).contains(e))
        .collect()
}

/// The unique inclusion-minimal member of the cut `e` induces on
/// `M | keep`, if there is exactly one.
pub fn unique_minimal(m: &Matroid, keep: Subset, e: usize) -> Option<Subset> {
    let cut = restriction_cut(m, keep, e);
    let mut minimal = cut.iter().copied().filter(|&f| !cut.iter().any(|g| g.is_proper_subset(f)));
    let first = minimal.next()?;
    minimal.next().is_none().then_some(first)
}

/// A deflate found by repeatedly removing the first element (by index)
/// whose cut on the remaining restriction has a unique minimal member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deflate {
    /// The remaining ground set, as a subset of `M`.
    pub keep: Subset,
    pub matroid: Matroid,
    /// Removed elements in the order they are added back, each with the
    /// minimal flat of its cut (in `M`'s labels).
    pub order: Vec<(usize, Subset)>,
}

pub fn find_deflate(m: &Matroid) -> Option<Deflate> {
    let mut keep = m.ground();
    let mut removed = Vec::new();
    'outer: loop {
        for e in keep.iter() {
            if let Some(f) = unique_minimal(m, keep.without(e), e) {
                keep.remove(e);
                removed.push((e, f));
                continue 'outer;
            }
        }
        break;
    }
    if removed.is_empty() {
        return None;
    }
    removed.reverse();
    Some(Deflate { keep, matroid: restrict(m, keep), order: removed })
}

pub fn is_deflated(m: &Matroid) -> bool {
    find_deflate(m).is_none()
}
