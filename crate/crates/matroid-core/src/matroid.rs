use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::MatroidError;
use crate::kth::{binomial, kth_cmp};
use crate::subset::{k_subsets, Subset};

/// Largest ground set accepted at all.
pub const MAX_GROUND: usize = 63;
/// Largest ground set for which dense per-subset tables are built.
pub const MAX_TABLE: usize = 20;

/// A matroid on `{0, .., n-1}`, stored as its family of bases.
///
/// Values are immutable; derived data (rank table, circuits, flats) is
/// computed at most once and shared between clones.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

struct Inner {
    n: usize,
    r: usize,
    /// Bases sorted in kth order.
    bases: Vec<Subset>,
    base_set: HashSet<u64>,
    rank_table: OnceLock<Vec<u8>>,
    circuits: OnceLock<Vec<Subset>>,
    flats: OnceLock<Vec<Subset>>,
}

impl Matroid {
    /// Validate B1 and B3 and build the matroid from base bits given in kth
    /// order.
    pub fn from_bits(n: usize, r: usize, bits: &[bool]) -> Result<Matroid, MatroidError> {
        check_size(n, r)?;
        let expected = binomial(n, r);
        if bits.len() as u64 != expected {
            return Err(MatroidError::BadLength { expected, got: bits.len() });
        }
        let bases: Vec<Subset> = k_subsets(Subset::full(n), r)
            .into_iter()
            .zip(bits)
            .filter(|(_, &b)| b)
            .map(|(s, _)| s)
            .collect();
        Matroid::from_bases(n, r, bases)
    }

    /// Validate B1 and B3 for an explicit family of r-subsets.
    pub fn from_bases(n: usize, r: usize, bases: Vec<Subset>) -> Result<Matroid, MatroidError> {
        check_size(n, r)?;
        let full = Subset::full(n);
        for b in &bases {
            if !b.is_subset(full) || b.len() != r {
                return Err(MatroidError::NotInGround(*b));
            }
        }
        if bases.is_empty() {
            return Err(MatroidError::EmptyBaseFamily);
        }
        let m = Matroid::from_bases_unchecked(n, r, bases);
        m.check_exchange()?;
        Ok(m)
    }

    /// Build without validating the base axioms. The caller guarantees that
    /// `bases` is a non-empty family of r-subsets satisfying base exchange.
    pub fn from_bases_unchecked(n: usize, r: usize, mut bases: Vec<Subset>) -> Matroid {
        bases.sort_by(|a, b| kth_cmp(*a, *b));
        bases.dedup();
        let base_set = bases.iter().map(|b| b.0).collect();
        Matroid {
            inner: Arc::new(Inner {
                n,
                r,
                bases,
                base_set,
                rank_table: OnceLock::new(),
                circuits: OnceLock::new(),
                flats: OnceLock::new(),
            }),
        }
    }

    /// Build from a rank function evaluated on all r-subsets.
    pub fn from_rank_fn(n: usize, r: usize, mut rank: impl FnMut(Subset) -> usize) -> Matroid {
        let bases = k_subsets(Subset::full(n), r)
            .into_iter()
            .filter(|&s| rank(s) == r)
            .collect();
        Matroid::from_bases_unchecked(n, r, bases)
    }

    /// The uniform matroid U(r, n).
    pub fn uniform(n: usize, r: usize) -> Matroid {
        Matroid::from_bases_unchecked(n, r, k_subsets(Subset::full(n), r))
    }

    /// Every subset independent.
    pub fn free(n: usize) -> Matroid {
        Matroid::uniform(n, n)
    }

    /// Every element a loop.
    pub fn loops(n: usize) -> Matroid {
        Matroid::uniform(n, 0)
    }

    fn check_exchange(&self) -> Result<(), MatroidError> {
        for &x in self.bases() {
            for &y in self.bases() {
                for e in (x - y).iter() {
                    let ok = (y - x).iter().any(|f| self.is_base(x.without(e).with(f)));
                    if !ok {
                        return Err(MatroidError::ExchangeViolation { x, y, element: e });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    /// Rank of the whole ground set.
    pub fn rank_total(&self) -> usize {
        self.inner.r
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.inner.n)
    }

    pub fn bases(&self) -> &[Subset] {
        &self.inner.bases
    }

    pub fn is_base(&self, x: Subset) -> bool {
        self.inner.base_set.contains(&x.0)
    }

    /// The base bit string in kth order.
    pub fn bits(&self) -> Vec<bool> {
        k_subsets(self.ground(), self.inner.r)
            .into_iter()
            .map(|s| self.is_base(s))
            .collect()
    }

    pub fn bit_string(&self) -> String {
        self.bits().iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    fn rank_table(&self) -> Option<&[u8]> {
        if self.inner.n > MAX_TABLE {
            return None;
        }
        Some(self.inner.rank_table.get_or_init(|| self.build_rank_table()))
    }

    fn build_rank_table(&self) -> Vec<u8> {
        let n = self.inner.n;
        let size = 1usize << n;
        let mut indep = vec![false; size];
        for b in self.bases() {
            indep[b.0 as usize] = true;
        }
        // downward closure: walk masks from the top so supersets come first
        for x in (0..size).rev() {
            if indep[x] {
                continue;
            }
            let missing = !x & (size - 1);
            let mut m = missing;
            while m != 0 {
                let bit = m & m.wrapping_neg();
                if indep[x | bit] {
                    indep[x] = true;
                    break;
                }
                m &= m - 1;
            }
        }
        let mut rank = vec![0u8; size];
        for x in 1..size {
            if indep[x] {
                rank[x] = x.count_ones() as u8;
            } else {
                let mut best = 0;
                let mut m = x;
                while m != 0 {
                    let bit = m & m.wrapping_neg();
                    best = best.max(rank[x & !bit]);
                    m &= m - 1;
                }
                rank[x] = best;
            }
        }
        rank
    }

    /// `max |X ∩ B|` over all bases `B`.
    pub fn rank(&self, x: Subset) -> usize {
        if let Some(t) = self.rank_table() {
            return t[(x.0 & self.ground().0) as usize] as usize;
        }
        self.bases().iter().map(|b| (x & *b).len()).max().unwrap_or(0)
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        if let Some(t) = self.rank_table() {
            return x.is_subset(self.ground()) && t[x.0 as usize] as usize == x.len();
        }
        self.bases().iter().any(|b| x.is_subset(*b))
    }

    /// `|X| - rk(X)`.
    pub fn nullity(&self, x: Subset) -> usize {
        x.len() - self.rank(x)
    }

    pub fn closure(&self, x: Subset) -> Subset {
        let rx = self.rank(x);
        let mut out = x;
        for e in (self.ground() - x).iter() {
            if self.rank(x.with(e)) == rx {
                out.insert(e);
            }
        }
        out
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        let rx = self.rank(x);
        (self.ground() - x).iter().all(|e| self.rank(x.with(e)) > rx)
    }

    /// Inclusion-minimal dependent sets, ordered by bit pattern.
    pub fn circuits(&self) -> &[Subset] {
        self.inner.circuits.get_or_init(|| {
            let mut out = Vec::new();
            for k in 1..=self.inner.r + 1 {
                for c in k_subsets(self.ground(), k) {
                    if self.rank(c) + 1 == k && c.iter().all(|e| self.is_independent(c.without(e))) {
                        out.push(c);
                    }
                }
            }
            out.sort();
            out
        })
    }

    /// Closed sets, ordered by bit pattern.
    pub fn flats(&self) -> &[Subset] {
        self.inner.flats.get_or_init(|| {
            let mut out: Vec<Subset> = if self.inner.n <= MAX_TABLE {
                (0..1u64 << self.inner.n)
                    .map(Subset)
                    .filter(|&x| self.is_flat(x))
                    .collect()
            } else {
                let mut seen: HashSet<Subset> = HashSet::new();
                let mut frontier = vec![self.closure(Subset::EMPTY)];
                while let Some(f) = frontier.pop() {
                    if !seen.insert(f) {
                        continue;
                    }
                    for e in (self.ground() - f).iter() {
                        frontier.push(self.closure(f.with(e)));
                    }
                }
                seen.into_iter().collect()
            };
            out.sort();
            out
        })
    }

    /// Circuits of the dual, i.e. complements of hyperplanes.
    pub fn cocircuits(&self) -> Vec<Subset> {
        let r = self.inner.r;
        let mut out: Vec<Subset> = self
            .flats()
            .iter()
            .filter(|f| r > 0 && self.rank(**f) + 1 == r)
            .map(|f| f.complement(self.inner.n))
            .collect();
        out.sort();
        out
    }

    pub fn loops_set(&self) -> Subset {
        self.closure(Subset::EMPTY)
    }

    pub fn coloops_set(&self) -> Subset {
        self.bases().iter().fold(self.ground(), |acc, b| acc & *b)
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        self.circuits().iter().all(|c| c.len() > 2)
    }
}

fn check_size(n: usize, r: usize) -> Result<(), MatroidError> {
    if n > MAX_GROUND {
        return Err(MatroidError::TooLarge { max: MAX_GROUND });
    }
    if r > n {
        return Err(MatroidError::RankTooLarge { n, r });
    }
    Ok(())
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.inner.n == other.inner.n
            && self.inner.r == other.inner.r
            && self.inner.bases == other.inner.bases
    }
}

impl Eq for Matroid {}

impl Hash for Matroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.n.hash(state);
        self.inner.r.hash(state);
        self.inner.bases.hash(state);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, r={}, {})", self.n(), self.rank_total(), self.bit_string())
    }
}
