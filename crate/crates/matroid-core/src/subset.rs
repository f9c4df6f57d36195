use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

/// A subset of a ground set `{0, .., 63}`. Bit `i` stands for element `i`,
/// which is printed 1-based.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        let mut s = Subset::EMPTY;
        for e in it {
            s.insert(e);
        }
        s
    }

    /// Build from 1-based element labels.
    pub fn from_labels(labels: &[usize]) -> Subset {
        Subset::from_elements(labels.iter().map(|&l| l - 1))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1u64 << e))
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Subset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// Renumber the members of `self` (a subset of `within`) by their rank
    /// inside `within`, i.e. relabel `within` onto `{0, .., |within|-1}`.
    pub fn compress(self, within: Subset) -> Subset {
        let mut out = 0u64;
        for (i, e) in within.iter().enumerate() {
            if self.contains(e) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, within: Subset) -> Subset {
        let mut out = 0u64;
        for (i, e) in within.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << e;
            }
        }
        Subset(out)
    }

    /// All subsets of `self`, including `∅` and `self`.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf { mask: self.0, next: Some(0) }
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|e| e + 1).collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        f.write_str("}")
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct SubsetsOf {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Subset(cur))
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitOrAssign for Subset {
    fn bitor_assign(&mut self, rhs: Subset) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitAndAssign for Subset {
    fn bitand_assign(&mut self, rhs: Subset) {
        self.0 &= rhs.0;
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}

/// All `k`-subsets of `within`, in increasing order of their bit patterns'
/// lexicographic (kth) order.
pub fn k_subsets(within: Subset, k: usize) -> Vec<Subset> {
    let elems: Vec<usize> = within.iter().collect();
    let mut out = Vec::new();
    if k > elems.len() {
        return out;
    }
    let n = elems.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Subset::from_elements(idx.iter().map(|&i| elems[i])));
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
