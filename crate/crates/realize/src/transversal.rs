use matroid_core::Subset;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::ExactMatrix;

/// Rows `0..n`, one column per family member; the entry at `(e, i)` is
/// uniform in `1..=2^p · r · 2^n` when `e ∈ A_i` and zero otherwise, where
/// `r` is the number of columns. By the Schwartz-Zippel bound and a union
/// bound over all row sets, the row matroid differs from the transversal
/// matroid with probability at most `2^-p`.
pub fn randomized_transversal_matrix(n: usize, family: &[Subset], p: u32, seed: u64) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = family.len().max(1) as u64;
    let bound = (BigInt::from(1u8) << (p as usize + n)) * BigInt::from(r);
    let mut m = ExactMatrix::zeros((0..n).collect(), (0..family.len()).collect());
    for (j, a) in family.iter().enumerate() {
        for e in a.iter() {
            m.entries[e][j] = BigRational::from_integer(uniform_below(&mut rng, &bound) + 1u8);
        }
    }
    debug_assert!(family.iter().enumerate().all(|(j, a)| (0..n).all(|e| a.contains(e) || m.entries[e][j].is_zero())));
    m
}

fn uniform_below(rng: &mut impl Rng, bound: &BigInt) -> BigInt {
    let bits = bound.bits();
    loop {
        let bytes: Vec<u8> = (0..bits.div_ceil(8)).map(|_| rng.gen()).collect();
        let mut v = BigInt::from_bytes_le(num_bigint::Sign::Plus, &bytes);
        v >>= (bits.div_ceil(8) * 8 - bits) as usize;
        if &v < bound {
            return v;
        }
    }
}
