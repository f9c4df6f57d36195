use matroid_core::{Matroid, Subset, MAX_TABLE};

use crate::error::AlphaError;

/// Dense table of `α_M` over all `2^n` subsets, indexed by subset mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    pub n: usize,
    pub values: Vec<i64>,
    pub flat_marks: Vec<bool>,
}

impl AlphaTable {
    pub fn get(&self, x: Subset) -> i64 {
        self.values[x.bits() as usize]
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        self.flat_marks[x.bits() as usize]
    }

    pub fn min(&self) -> i64 {
        self.values.iter().copied().min().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0)
    }

    /// `subset_bits,alpha` lines; the bit string lists element 1 first.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("subset_bits,alpha\n");
        for (mask, v) in self.values.iter().enumerate() {
            let bits: String = (0..self.n).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect();
            s.push_str(&format!("{bits},{v}\n"));
        }
        s
    }
}

pub(crate) fn check_size(m: &Matroid) -> Result<(), AlphaError> {
    if m.n() > MAX_TABLE {
        return Err(AlphaError::TooLarge { n: m.n(), max: MAX_TABLE });
    }
    Ok(())
}

/// In-place subset-sum transform: `f(X) <- Σ_{Y ⊆ X} f(Y)`.
pub(crate) fn zeta(f: &mut [i64], n: usize) {
    for i in 0..n {
        let bit = 1usize << i;
        for x in 0..f.len() {
            if x & bit != 0 {
                f[x] += f[x ^ bit];
            }
        }
    }
}

fn nullity(m: &Matroid, x: Subset) -> i64 {
    (x.len() - m.rank(x)) as i64
}

/// Values of α on the flats (in the order of `m.flats()`), stopping at the
/// first negative value when `early_stop` is set.
fn alpha_on_flats(m: &Matroid, early_stop: bool) -> (Vec<i64>, Option<Subset>) {
    let flats = m.flats();
    let mut order: Vec<usize> = (0..flats.len()).collect();
    order.sort_by_key(|&i| (flats[i].len(), flats[i]));
    let mut val = vec![0i64; flats.len()];
    let mut done: Vec<usize> = Vec::with_capacity(flats.len());
    for &i in &order {
        let f = flats[i];
        let below: i64 = done.iter().filter(|&&j| flats[j].is_proper_subset(f)).map(|&j| val[j]).sum();
        val[i] = nullity(m, f) - below;
        if early_stop && val[i] < 0 {
            return (val, Some(f));
        }
        done.push(i);
    }
    (val, None)
}

/// `α(X) = |X| - rk(X) - Σ α(F)` over flats `F ⊊ X`.
pub fn alpha_invariant(m: &Matroid) -> Result<AlphaTable, AlphaError> {
    check_size(m)?;
    let n = m.n();
    let size = 1usize << n;
    let (flat_vals, _) = alpha_on_flats(m, false);
    let mut flat_marks = vec![false; size];
    let mut values = vec![0i64; size];
    for (f, v) in m.flats().iter().zip(&flat_vals) {
        flat_marks[f.bits() as usize] = true;
        values[f.bits() as usize] = *v;
    }
    let mut below = values.clone();
    zeta(&mut below, n);
    for x in 0..size {
        if !flat_marks[x] {
            values[x] = nullity(m, Subset(x as u64)) - below[x];
        }
    }
    Ok(AlphaTable { n, values, flat_marks })
}

/// Mason's criterion: `M` is a strict gammoid iff α is nonnegative. Stops
/// at the first negative value.
pub fn is_strict_gammoid(m: &Matroid) -> Result<bool, AlphaError> {
    Ok(first_negative(m)?.is_none())
}

/// Some set with negative α, found flats first.
pub fn first_negative(m: &Matroid) -> Result<Option<Subset>, AlphaError> {
    check_size(m)?;
    let (_, neg) = alpha_on_flats(m, true);
    if neg.is_some() {
        return Ok(neg);
    }
    let t = alpha_invariant(m)?;
    Ok(t.values.iter().position(|&v| v < 0).map(|x| Subset(x as u64)))
}

/// `M` is transversal iff its dual is a strict gammoid.
pub fn is_transversal(m: &Matroid) -> Result<bool, AlphaError> {
    is_strict_gammoid(&matroid_core::dual(m))
}

/// Inclusion-minimal sets with negative α.
pub fn alpha_violations(m: &Matroid) -> Result<Vec<Subset>, AlphaError> {
    let t = alpha_invariant(m)?;
    Ok(violations_of(&t))
}

pub fn violations_of(t: &AlphaTable) -> Vec<Subset> {
    let size = t.values.len();
    // neg_below[x]: some proper subset of x is negative
    let mut neg_below = vec![false; size];
    let mut out = Vec::new();
    for x in 0..size {
        let mut below = false;
        let mut rest = x;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let y = x ^ bit;
            if neg_below[y] || t.values[y] < 0 {
                below = true;
                break;
            }
        }
        neg_below[x] = below;
        if t.values[x] < 0 && !below {
            out.push(Subset(x as u64));
        }
    }
    out
}

/// α by Möbius inversion over the poset where `Y ⊑ X` iff `Y = X` or `Y` is
/// a flat properly contained in `X`.
pub fn alpha_via_moebius(m: &Matroid) -> Result<AlphaTable, AlphaError> {
    check_size(m)?;
    let n = m.n();
    let size = 1usize << n;
    let flats = m.flats();
    let mut flat_marks = vec![false; size];
    for f in flats {
        flat_marks[f.bits() as usize] = true;
    }
    let mut values: Vec<i64> = (0..size).map(|x| nullity(m, Subset(x as u64))).collect();
    for &y in flats {
        // mu(y, z) for flats z ⊇ y, in size order
        let mut above: Vec<Subset> = flats.iter().copied().filter(|z| y.is_subset(*z)).collect();
        above.sort_by_key(|z| (z.len(), *z));
        let mut mu: Vec<i64> = Vec::with_capacity(above.len());
        for (i, &z) in above.iter().enumerate() {
            let v = if i == 0 {
                1
            } else {
                -(0..i).filter(|&j| above[j].is_proper_subset(z)).map(|j| mu[j]).sum::<i64>()
            };
            mu.push(v);
        }
        let nu_y = nullity(m, y);
        if nu_y == 0 {
            continue;
        }
        for x in 0..size {
            let xs = Subset(x as u64);
            if !y.is_proper_subset(xs) {
                continue;
            }
            let mu_yx = if flat_marks[x] {
                mu[above.iter().position(|&z| z == xs).unwrap()]
            } else {
                -above.iter().zip(&mu).filter(|(z, _)| z.is_proper_subset(xs)).map(|(_, v)| v).sum::<i64>()
            };
            values[x] += nu_y * mu_yx;
        }
    }
    Ok(AlphaTable { n, values, flat_marks })
}
