use std::collections::BTreeSet;

use matroid_core::{Matroid, Subset};

use crate::error::AlphaError;
use crate::table::{check_size, zeta, AlphaTable};

/// A set of flats closed upwards and under intersections of modular pairs.
/// Each single-element extension of `M` corresponds to exactly one cut.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ModularCut {
    pub flats: BTreeSet<Subset>,
}

impl ModularCut {
    pub fn empty() -> ModularCut {
        ModularCut::default()
    }

    pub fn contains(&self, f: Subset) -> bool {
        self.flats.contains(&f)
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    /// Inclusion-minimal members.
    pub fn minimal(&self) -> Vec<Subset> {
        self.flats
            .iter()
            .copied()
            .filter(|&f| !self.flats.iter().any(|g| g.is_proper_subset(f)))
            .collect()
    }

    /// All flats containing `f`.
    pub fn principal(m: &Matroid, f: Subset) -> ModularCut {
        let f = m.closure(f);
        ModularCut { flats: m.flats().iter().copied().filter(|g| f.is_subset(*g)).collect() }
    }

    /// Smallest cut containing `generators` (closed upwards and under
    /// modular intersections).
    pub fn generated(m: &Matroid, generators: &[Subset]) -> ModularCut {
        let mut set: BTreeSet<Subset> = BTreeSet::new();
        for &g in generators {
            set.extend(ModularCut::principal(m, g).flats);
        }
        loop {
            let cur: Vec<Subset> = set.iter().copied().collect();
            let mut added = false;
            for (i, &a) in cur.iter().enumerate() {
                for &b in &cur[i + 1..] {
                    let c = a & b;
                    if !set.contains(&c) && is_modular_pair(m, a, b) {
                        set.extend(ModularCut::principal(m, c).flats);
                        added = true;
                    }
                }
            }
            if !added {
                return ModularCut { flats: set };
            }
        }
    }

    /// Check the cut axioms against `m`.
    pub fn validate(&self, m: &Matroid) -> Result<(), AlphaError> {
        for &f in &self.flats {
            if !m.is_flat(f) {
                return Err(AlphaError::InvalidCut(format!("{f} is not a flat")));
            }
        }
        for &f in &self.flats {
            for &g in m.flats() {
                if f.is_subset(g) && !self.contains(g) {
                    return Err(AlphaError::InvalidCut(format!("{g} contains {f} but is missing")));
                }
            }
            for &g in &self.flats {
                if is_modular_pair(m, f, g) && !self.contains(f & g) {
                    return Err(AlphaError::InvalidCut(format!("{} missing for modular pair {f}, {g}", f & g)));
                }
            }
        }
        Ok(())
    }
}

pub fn is_modular_pair(m: &Matroid, a: Subset, b: Subset) -> bool {
    m.rank(a) + m.rank(b) == m.rank(a | b) + m.rank(a & b)
}

/// Every modular cut of `m`, each once, in a deterministic order.
///
/// Flats are decided from the top rank down. A flat must be in the cut if
/// two incomparable members intersect in it as a modular pair; it must be
/// out if one of its upper covers is out; otherwise both choices are
/// explored.
pub fn modular_cuts(m: &Matroid) -> Vec<ModularCut> {
    let flats = m.flats();
    let mut order: Vec<usize> = (0..flats.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(m.rank(flats[i])), flats[i]));
    let pos: std::collections::HashMap<Subset, usize> = order.iter().enumerate().map(|(p, &i)| (flats[i], p)).collect();
    let fl: Vec<Subset> = order.iter().map(|&i| flats[i]).collect();
    let rank: Vec<usize> = fl.iter().map(|&f| m.rank(f)).collect();
    let k = fl.len();

    let covers: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).filter(|&j| rank[j] == rank[i] + 1 && fl[i].is_subset(fl[j])).collect())
        .collect();
    // modular incomparable pairs meeting in each flat
    let mut meets: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for a in 0..k {
        for b in a + 1..k {
            let (x, y) = (fl[a], fl[b]);
            if x.is_subset(y) || y.is_subset(x) {
                continue;
            }
            if rank[a] + rank[b] == m.rank(x | y) + m.rank(x & y) {
                meets[pos[&(x & y)]].push((a, b));
            }
        }
    }

    fn rec(i: usize, state: &mut Vec<bool>, covers: &[Vec<usize>], meets: &[Vec<(usize, usize)>], fl: &[Subset], out: &mut Vec<ModularCut>) {
        if i == fl.len() {
            let flats = (0..fl.len()).filter(|&j| state[j]).map(|j| fl[j]).collect();
            out.push(ModularCut { flats });
            return;
        }
        let forced_out = covers[i].iter().any(|&c| !state[c]);
        let forced_in = meets[i].iter().any(|&(a, b)| state[a] && state[b]);
        if forced_in && forced_out {
            return;
        }
        if !forced_in {
            state.push(false);
            rec(i + 1, state, covers, meets, fl, out);
            state.pop();
        }
        if !forced_out {
            state.push(true);
            rec(i + 1, state, covers, meets, fl, out);
            state.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, &mut Vec::with_capacity(k), &covers, &meets, &fl, &mut out);
    out
}

/// The single-element extension of `m` by the new element `n` (0-based)
/// corresponding to `cut`.
pub fn extend(m: &Matroid, cut: &ModularCut) -> Result<Matroid, AlphaError> {
    cut.validate(m)?;
    Ok(extend_unchecked(m, cut))
}

pub fn extend_unchecked(m: &Matroid, cut: &ModularCut) -> Matroid {
    let n = m.n();
    let e = n;
    let r = m.rank_total() + usize::from(cut.is_empty());
    Matroid::from_rank_fn(n + 1, r, |x| {
        if x.contains(e) {
            let y = x.without(e);
            m.rank(y) + usize::from(!cut.contains(m.closure(y)))
        } else {
            m.rank(x)
        }
    })
}

/// `{F ∈ F(M) : e ∈ cl_N(F)}` for an extension `N` of `M = N \ e`.
pub fn cut_of_extension(n: &Matroid, e: usize) -> ModularCut {
    let ground = n.ground().without(e);
    let flats = n
        .ground()
        .without(e)
        .subsets()
        .filter(|&f| {
            // flats of the deletion are the traces of flats of N
            n.closure(f) & ground == f && n.closure(f).contains(e)
        })
        .collect();
    ModularCut { flats }
}

/// Flats of the extension by `cut`, without building it: flats outside the
/// cut, members of the cut with `e` added, and flats outside the cut
/// with `e` added that have no upper cover in the cut.
pub fn flats_of_extension(m: &Matroid, cut: &ModularCut) -> Vec<Subset> {
    let e = m.n();
    let mut out = Vec::new();
    for &f in m.flats() {
        if cut.contains(f) {
            out.push(f.with(e));
        } else {
            out.push(f);
            let rf = m.rank(f);
            let covered = m.flats().iter().any(|&g| cut.contains(g) && f.is_subset(g) && m.rank(g) == rf + 1);
            if !covered {
                out.push(f.with(e));
            }
        }
    }
    out.sort();
    out
}

/// `Δα(C, X) = Σ α_M(Z)` over `Z ∈ C` with `Z ⊊ X`, and the three-case
/// `Δ̃α(C, X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionDelta {
    pub cut: ModularCut,
    pub delta: Vec<i64>,
    pub delta_tilde: Vec<i64>,
}

pub fn extension_delta(m: &Matroid, alpha: &AlphaTable, cut: &ModularCut) -> ExtensionDelta {
    let n = m.n();
    let size = 1usize << n;
    let mut in_cut = vec![0i64; size];
    for f in &cut.flats {
        in_cut[f.bits() as usize] = alpha.get(*f);
    }
    let mut delta = in_cut.clone();
    zeta(&mut delta, n);
    for f in &cut.flats {
        delta[f.bits() as usize] -= alpha.get(*f);
    }

    // members of the cut first, by size: d(F) = 1 - Σ_{G ∈ C, G ⊊ F} d(G)
    let mut members: Vec<Subset> = cut.flats.iter().copied().collect();
    members.sort_by_key(|f| (f.len(), *f));
    let mut member_val = vec![0i64; size];
    for (i, &f) in members.iter().enumerate() {
        let below: i64 = members[..i].iter().filter(|g| g.is_proper_subset(f)).map(|g| member_val[g.bits() as usize]).sum();
        member_val[f.bits() as usize] = 1 - below;
    }
    let mut sums = member_val.clone();
    zeta(&mut sums, n);
    let delta_tilde = (0..size)
        .map(|x| {
            let s = Subset(x as u64);
            if cut.contains(m.closure(s)) {
                1 - (sums[x] - member_val[x])
            } else if alpha.is_flat(s) {
                -alpha.values[x]
            } else {
                0
            }
        })
        .collect();
    ExtensionDelta { cut: cut.clone(), delta, delta_tilde }
}

/// α of the extension by `cut`, from α of `m` and the two deltas. The new
/// element is bit `n`.
pub fn alpha_of_extension(m: &Matroid, alpha: &AlphaTable, cut: &ModularCut) -> Result<AlphaTable, AlphaError> {
    check_size(m)?;
    if m.n() + 1 > matroid_core::MAX_TABLE {
        return Err(AlphaError::TooLarge { n: m.n() + 1, max: matroid_core::MAX_TABLE });
    }
    let d = extension_delta(m, alpha, cut);
    let size = 1usize << m.n();
    let mut values = vec![0i64; 2 * size];
    for x in 0..size {
        values[x] = alpha.values[x] + d.delta[x];
        values[x + size] = alpha.values[x] + d.delta_tilde[x];
    }
    let mut flat_marks = vec![false; 2 * size];
    for f in flats_of_extension(m, cut) {
        flat_marks[f.bits() as usize] = true;
    }
    Ok(AlphaTable { n: m.n() + 1, values, flat_marks })
}
