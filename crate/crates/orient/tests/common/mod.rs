#![allow(dead_code)]

use std::collections::BTreeSet;

use gammoid_digraph::{Digraph, Representation};
use gammoid_orient::SignedSubset;
use gammoid_realize::ExactMatrix;
use matroid_core::Subset;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn fixture(name: &str) -> String {
    let p = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(p).expect("fixture")
}

pub fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

pub fn set(s: &str) -> Subset {
    s.bytes().map(|b| (b - b'a') as usize).collect()
}

/// Parse `+a -b ...` over letters.
pub fn signed(s: &str) -> SignedSubset {
    let mut x = SignedSubset::default();
    for t in s.split_whitespace() {
        let (v, name) = if let Some(r) = t.strip_prefix('-') { (-1, r) } else { (1, t.trim_start_matches('+')) };
        x.set((name.as_bytes()[0] - b'a') as usize, v);
    }
    x
}

/// A nonzero vector spanning the kernel of `rows` (as linear forms), or
/// `None` if the kernel is not one-dimensional.
pub fn kernel_vector(rows: &[Vec<BigRational>], dim: usize) -> Option<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = BigRational::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..dim {
                    let v = &f * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let mut v = vec![BigRational::zero(); dim];
    v[free[0]] = BigRational::one();
    for (i, &c) in pivots.iter().enumerate() {
        v[c] = -a[i][free[0]].clone();
    }
    Some(v)
}

fn sign_of(v: &BigRational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Signed circuits of the row vectors: kernels of the transposed circuit
/// submatrix.
pub fn oracle_circuits(m: &ExactMatrix) -> BTreeSet<SignedSubset> {
    let mat = m.matroid();
    let mut out = BTreeSet::new();
    for &c in mat.circuits() {
        let els: Vec<usize> = c.iter().collect();
        let rows: Vec<Vec<BigRational>> =
            (0..m.n_cols()).map(|j| els.iter().map(|&e| m.get(e, j).clone()).collect()).collect();
        let v = kernel_vector(&rows, els.len()).expect("circuit kernel is a line");
        let s = SignedSubset::from_signs(&els.iter().zip(&v).map(|(&e, x)| (e, sign_of(x))).collect::<Vec<_>>());
        out.insert(s);
        out.insert(s.negate());
    }
    out
}

/// Signed cocircuits of the row vectors: sign pattern of a linear form
/// vanishing on a hyperplane.
pub fn oracle_cocircuits(m: &ExactMatrix) -> BTreeSet<SignedSubset> {
    let mat = m.matroid();
    let r = mat.rank_total();
    let mut out = BTreeSet::new();
    for &h in mat.flats() {
        if mat.rank(h) + 1 != r {
            continue;
        }
        // restrict to the column space first: use a column basis
        let b = m.column_basis();
        let rows: Vec<Vec<BigRational>> = h.iter().map(|e| b.entries[e].clone()).collect();
        let y = kernel_vector(&rows, b.n_cols()).expect("hyperplane kernel is a line");
        let signs: Vec<(usize, i8)> = (0..m.n_rows())
            .map(|e| {
                let dot = b.entries[e].iter().zip(&y).fold(BigRational::zero(), |acc, (a, c)| acc + a * c);
                (e, sign_of(&dot))
            })
            .collect();
        let s = SignedSubset::from_signs(&signs);
        out.insert(s);
        out.insert(s.negate());
    }
    out
}

pub fn vandermonde(n: usize, r: usize) -> ExactMatrix {
    let rows: Vec<Vec<i64>> = (0..n).map(|e| (0..r).map(|k| (e as i64 + 1).pow(k as u32)).collect()).collect();
    ExactMatrix::from_integers(&rows)
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Acyclic digraph from a bit pattern over forward pairs `u < v`, last
/// `t` vertices are targets, ground chosen by `g`.
pub fn acyclic_rep(n: usize, bits: &[bool], t: usize, g: u64) -> Representation {
    let mut d = Digraph::new(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits.get(k).copied().unwrap_or(false) {
                d.add_arc(u, v);
            }
            k += 1;
        }
    }
    let targets: Subset = (n - t..n).collect();
    let ground: Subset = (0..n).filter(|&v| g >> v & 1 == 1 || v == 0).collect();
    Representation::new(d, targets, ground)
}

/// All N/E words between `p` and `q`, by brute force over `2^n` words.
pub fn paths_between(p: &[bool], q: &[bool]) -> Vec<Vec<bool>> {
    let n = p.len();
    let south = |a: &[bool], b: &[bool]| {
        let (mut ha, mut hb) = (0, 0);
        for i in 0..n {
            ha += a[i] as i32;
            hb += b[i] as i32;
            if ha > hb {
                return false;
            }
        }
        ha == hb
    };
    (0..1u32 << n)
        .map(|m| (0..n).map(|i| m >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|r| south(p, r) && south(r, q))
        .collect()
}
