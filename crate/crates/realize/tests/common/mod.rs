#![allow(dead_code)]

use gammoid_digraph::{Digraph, Representation};
use matroid_core::{Matroid, Subset};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn set(s: &str) -> Subset {
    s.bytes().map(|b| (b - b'a') as usize).collect()
}

pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut p2 = p.clone();
            p2.insert(i, n - 1);
            out.push(p2);
        }
    }
    out
}

pub fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sum over permutations.
pub fn leibniz(a: &[Vec<BigRational>]) -> BigRational {
    let n = a.len();
    let mut total = BigRational::zero();
    for p in permutations(n) {
        let mut term = q(perm_sign(&p));
        for (i, &j) in p.iter().enumerate() {
            term *= &a[i][j];
        }
        total += term;
    }
    total
}

/// Textbook elimination with rational division.
pub fn gauss_rank(a: &[Vec<BigRational>]) -> usize {
    let mut a = a.to_vec();
    let nr = a.len();
    let nc = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..nc {
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..nr {
            let f = &a[i][c] / &a[r][c];
            for j in c..nc {
                let v = &f * &a[r][j];
                a[i][j] -= v;
            }
        }
        r += 1;
    }
    r
}

pub fn gauss_matroid(a: &[Vec<BigRational>]) -> Matroid {
    let r = gauss_rank(a);
    Matroid::from_rank_fn(a.len(), r, |x| {
        let rows: Vec<Vec<BigRational>> = x.iter().map(|i| a[i].clone()).collect();
        gauss_rank(&rows)
    })
}

/// Acyclic digraph from a bit pattern over the forward pairs `u < v`,
/// with the last `t` vertices as targets.
pub fn acyclic_from_bits(n: usize, bits: &[bool], t: usize) -> Representation {
    let mut d = Digraph::new(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if k < bits.len() && bits[k] {
                d.add_arc(u, v);
            }
            k += 1;
        }
    }
    let targets: Subset = (n - t..n).collect();
    Representation::new(d, targets, Subset::full(n))
}

pub fn one() -> BigInt {
    BigInt::one()
}
