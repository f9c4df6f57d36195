use gammoid_digraph::transversal_matroid;
use matroid_core::{Matroid, Subset};

use crate::error::OrientError;

/// `true` for a North step.
pub fn parse_path(s: &str) -> Result<Vec<bool>, OrientError> {
    s.chars()
        .enumerate()
        .map(|(i, c)| match c.to_ascii_uppercase() {
            'N' => Ok(true),
            'E' => Ok(false),
            _ => Err(OrientError::Parse { line: 1, msg: format!("step {} is `{c}`, expected N or E", i + 1) }),
        })
        .collect()
}

/// `p` never rises above `q` and both end at the same height.
pub fn is_south_of(p: &[bool], q: &[bool]) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let (mut hp, mut hq) = (0, 0);
    for (&a, &b) in p.iter().zip(q) {
        hp += a as usize;
        hq += b as usize;
        if hp > hq {
            return false;
        }
    }
    hp == hq
}

fn north_positions(p: &[bool]) -> Vec<usize> {
    (0..p.len()).filter(|&i| p[i]).collect()
}

/// The `i`-th North step of a path between `p` and `q` can be any step
/// from the `i`-th North of `q` to the `i`-th North of `p`.
pub fn presentation(p: &[bool], q: &[bool]) -> Result<Vec<Subset>, OrientError> {
    if !is_south_of(p, q) {
        return Err(OrientError::NotComparable(show(p), show(q)));
    }
    Ok(north_positions(q).into_iter().zip(north_positions(p)).map(|(lo, hi)| (lo..=hi).collect()).collect())
}

pub fn lattice_path_matroid(p: &[bool], q: &[bool]) -> Result<Matroid, OrientError> {
    Ok(transversal_matroid(p.len(), &presentation(p, q)?))
}

pub fn show(p: &[bool]) -> String {
    p.iter().map(|&b| if b { 'N' } else { 'E' }).collect()
}

/// Simple and multiple copoints on a coline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColineCensus {
    pub coline: Subset,
    pub simple: usize,
    pub multiple: usize,
}

impl ColineCensus {
    pub fn is_quite_simple(&self) -> bool {
        self.simple > self.multiple
    }
}

pub fn coline_census(m: &Matroid, coline: Subset) -> ColineCensus {
    let r = m.rank_total();
    let (mut simple, mut multiple) = (0, 0);
    for &y in m.flats() {
        if coline.is_proper_subset(y) && m.rank(y) + 1 == r {
            if (y - coline).len() == 1 {
                simple += 1;
            } else {
                multiple += 1;
            }
        }
    }
    ColineCensus { coline, simple, multiple }
}

fn check_simple(m: &Matroid) -> Result<(), OrientError> {
    if m.rank_total() < 2 {
        return Err(OrientError::LowRank(m.rank_total()));
    }
    if !m.is_simple() {
        return Err(OrientError::NotSimple);
    }
    Ok(())
}

/// Every quite simple coline, in flat order.
pub fn quite_simple_colines(m: &Matroid) -> Result<Vec<ColineCensus>, OrientError> {
    check_simple(m)?;
    let r = m.rank_total();
    Ok(m.flats()
        .iter()
        .filter(|&&x| m.rank(x) + 2 == r)
        .map(|&x| coline_census(m, x))
        .filter(|c| c.is_quite_simple())
        .collect())
}

/// A quite simple coline, preferring initial segments `{1, .., k}` (the
/// Western coline of a lattice path matroid) and then flat order.
pub fn quite_simple_coline(m: &Matroid) -> Result<Option<ColineCensus>, OrientError> {
    let all = quite_simple_colines(m)?;
    let initial = |x: Subset| x.bits() & (x.bits() + 1) == 0;
    Ok(all.iter().find(|c| initial(c.coline)).or(all.first()).copied())
}

/// `{1, .., j2 - 1}` where `j2` is the second to last North step of `q`.
pub fn western_coline(q: &[bool]) -> Option<Subset> {
    let ns = north_positions(q);
    (ns.len() >= 2).then(|| (0..ns[ns.len() - 2]).collect())
}
