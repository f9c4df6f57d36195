//! The lexicographic enumeration of r-subsets of `{1..n}`: `S` comes before
//! `S'` iff the smallest element of `S △ S'` lies in `S`.

use std::cmp::Ordering;

use crate::error::MatroidError;
use crate::subset::Subset;

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Compare two subsets in kth order.
pub fn kth_cmp(a: Subset, b: Subset) -> Ordering {
    let diff = a.0 ^ b.0;
    if diff == 0 {
        Ordering::Equal
    } else if a.0 & (diff & diff.wrapping_neg()) != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// The `index`-th (1-based) r-subset of `{1..n}`.
pub fn kth_subset(n: usize, r: usize, index: u64) -> Result<Subset, MatroidError> {
    let total = binomial(n, r);
    if index == 0 || index > total || r > n {
        return Err(MatroidError::IndexOutOfRange { n, r, index });
    }
    let mut rest = index - 1;
    let mut out = Subset::EMPTY;
    let mut next = 0usize;
    for i in 0..r {
        // pick the smallest element whose block contains `rest`
        loop {
            let block = binomial(n - next - 1, r - i - 1);
            if rest < block {
                break;
            }
            rest -= block;
            next += 1;
        }
        out.insert(next);
        next += 1;
    }
    Ok(out)
}

/// Inverse of [`kth_subset`].
pub fn kth_index(n: usize, s: Subset) -> u64 {
    let r = s.len();
    let mut index = 1u64;
    let mut prev = 0usize;
    for (i, e) in s.iter().enumerate() {
        for j in prev..e {
            index += binomial(n - j - 1, r - i - 1);
        }
        prev = e + 1;
    }
    index
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::k_subsets;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(64, 32), 1832624140942590534);
    }

    #[test]
    fn enumeration_matches_kth_order() {
        for n in 0..8 {
            for r in 0..=n {
                let all = k_subsets(Subset::full(n), r);
                assert_eq!(all.len() as u64, binomial(n, r));
                for w in all.windows(2) {
                    assert_eq!(kth_cmp(w[0], w[1]), Ordering::Less);
                }
                for (i, s) in all.iter().enumerate() {
                    assert_eq!(kth_subset(n, r, i as u64 + 1).unwrap(), *s);
                    assert_eq!(kth_index(n, *s), i as u64 + 1);
                }
            }
        }
    }
}
