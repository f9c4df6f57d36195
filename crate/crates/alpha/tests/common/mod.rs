#![allow(dead_code)]

use std::collections::BTreeSet;

use matroid_core::{Matroid, Subset};

pub fn is_flat(m: &Matroid, x: Subset) -> bool {
    let r = m.rank(x);
    (m.ground() - x).iter().all(|e| m.rank(x.with(e)) > r)
}

/// α straight from the recurrence, on every subset in mask order.
pub fn alpha_oracle(m: &Matroid) -> Vec<i64> {
    let size = 1usize << m.n();
    let flat: Vec<bool> = (0..size).map(|x| is_flat(m, Subset(x as u64))).collect();
    let mut a = vec![0i64; size];
    for x in 0..size {
        let xs = Subset(x as u64);
        let below: i64 = xs
            .subsets()
            .filter(|&f| f != xs && flat[f.bits() as usize])
            .map(|f| a[f.bits() as usize])
            .sum();
        a[x] = (xs.len() - m.rank(xs)) as i64 - below;
    }
    a
}

/// All modular cuts by brute force over up-closed families of flats.
pub fn cuts_oracle(m: &Matroid) -> BTreeSet<BTreeSet<Subset>> {
    let flats = m.flats();
    assert!(flats.len() <= 20);
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << flats.len()) {
        let c: BTreeSet<Subset> = (0..flats.len()).filter(|i| mask >> i & 1 == 1).map(|i| flats[i]).collect();
        let up = c.iter().all(|&f| flats.iter().all(|&g| !f.is_subset(g) || c.contains(&g)));
        let modular = c.iter().all(|&f| {
            c.iter().all(|&g| {
                m.rank(f) + m.rank(g) != m.rank(f | g) + m.rank(f & g) || c.contains(&(f & g))
            })
        });
        if up && modular {
            out.insert(c);
        }
    }
    out
}

/// Independent sets of the extension straight from the definition.
pub fn extension_oracle(m: &Matroid, cut: &BTreeSet<Subset>) -> Matroid {
    let n = m.n();
    let indep = |x: Subset| -> bool {
        if x.contains(n) {
            let y = x.without(n);
            m.is_independent(y) && !cut.contains(&m.closure(y))
        } else {
            m.is_independent(x)
        }
    };
    let r = (0..1u64 << (n + 1)).map(Subset).filter(|&x| indep(x)).map(|x| x.len()).max().unwrap();
    let bases = (0..1u64 << (n + 1)).map(Subset).filter(|&x| x.len() == r && indep(x)).collect();
    Matroid::from_bases_unchecked(n + 1, r, bases)
}

pub fn set(s: &str) -> Subset {
    s.bytes().map(|b| (b - b'a') as usize).collect()
}
