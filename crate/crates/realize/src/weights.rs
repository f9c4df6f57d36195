use std::collections::BTreeMap;

use gammoid_digraph::Digraph;
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Integer arc weights where every arc outweighs all products over sets of
/// arcs that come before it: `|w(a)| > Π_{b ≪ a} (1 + |w(b)|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeavyWeighting {
    /// Arcs from lightest to heaviest.
    pub order: Vec<(usize, usize)>,
    pub weights: BTreeMap<(usize, usize), BigInt>,
}

impl HeavyWeighting {
    pub fn weight(&self, u: usize, v: usize) -> &BigInt {
        &self.weights[&(u, v)]
    }

    pub fn sign(&self, u: usize, v: usize) -> i8 {
        if self.weights[&(u, v)].is_negative() {
            -1
        } else {
            1
        }
    }

    /// The dominance condition, checked from scratch.
    pub fn is_heavy(&self) -> bool {
        let mut prod = BigInt::one();
        for a in &self.order {
            let w = self.weights[a].abs();
            if w <= prod {
                return false;
            }
            prod *= BigInt::one() + w;
        }
        true
    }
}

/// `w(a_k) = σ(a_k) (1 + Π_{i<k} (1 + |w(a_i)|))` along `order`.
pub fn heavy_weighting(order: &[(usize, usize)], sign: impl Fn((usize, usize)) -> i8) -> HeavyWeighting {
    let mut weights = BTreeMap::new();
    let mut prod = BigInt::one();
    for &a in order {
        let w = BigInt::one() + &prod;
        prod *= BigInt::one() + &w;
        weights.insert(a, if sign(a) < 0 { -w } else { w });
    }
    let hw = HeavyWeighting { order: order.to_vec(), weights };
    debug_assert!(hw.is_heavy());
    hw
}

/// All signs positive, canonical arc order.
pub fn canonical_weighting(d: &Digraph) -> HeavyWeighting {
    heavy_weighting(&d.canonical_arcs(), |_| 1)
}
