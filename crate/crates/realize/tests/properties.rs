mod common;

use common::*;
use gammoid_digraph::{gammoid_matroid, is_linkable, Digraph, Representation};
use gammoid_realize::*;
use matroid_core::{contract_set, Subset};
use num_traits::Zero;
use proptest::prelude::*;

fn arb_matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(|rows| ExactMatrix::from_integers(&rows))
    })
}

/// Acyclic digraphs on up to 8 vertices with at most 14 arcs.
fn arb_acyclic(max_n: usize) -> impl Strategy<Value = Representation> {
    (4..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(prop::bool::weighted(0.35), pairs), 1..=3usize, any::<u64>())
    })
    .prop_map(|(n, mut bits, t, g)| {
        let mut seen = 0;
        for b in bits.iter_mut() {
            if *b {
                seen += 1;
                *b = seen <= 14;
            }
        }
        let mut rep = acyclic_from_bits(n, &bits, t);
        let ground: Subset = (0..n).filter(|&v| g >> v & 1 == 1 || v == 0).collect();
        rep.ground = ground;
        rep
    })
}

/// Digraphs with at least one cycle, at most 8 vertices and 10 arcs.
fn arb_cyclic() -> impl Strategy<Value = Representation> {
    (4..=7usize)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 3..=10), 1..=3usize, any::<u64>()))
        .prop_map(|(n, arcs, t, g)| {
            let mut d = Digraph::from_arcs(n, &arcs);
            if d.is_acyclic() {
                d.add_arc(1, 0);
                d.add_arc(0, 1);
            }
            let targets: Subset = (n - t..n).collect();
            let ground: Subset = (0..n).filter(|&v| g >> v & 1 == 1 || v == n - 1).collect();
            Representation::new(d, targets, ground)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn det_agrees_with_leibniz(n in 1usize..=5, vals in prop::collection::vec(-9i64..=9, 25)) {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| vals[i * n..i * n + n].to_vec()).collect();
        let m = ExactMatrix::from_integers(&rows);
        prop_assert_eq!(m.det().unwrap(), leibniz(&m.entries));
    }

    #[test]
    fn rank_agrees_with_gauss(m in arb_matrix(5)) {
        prop_assert_eq!(m.rank(), gauss_rank(&m.entries));
        prop_assert_eq!(m.idet() == 1, m.rank() == m.n_rows().min(m.n_cols()));
    }

    #[test]
    fn heavy_lindstrom_realizes_gammoid(rep in arb_acyclic(8)) {
        let w = canonical_weighting(&rep.digraph);
        prop_assert!(w.is_heavy());
        let m = lindstrom_heavy(&rep.digraph, rep.targets, rep.ground, &w).unwrap();
        prop_assert_eq!(m.matroid(), gammoid_matroid(&rep));
    }

    #[test]
    fn det_vanishes_iff_no_linking(rep in arb_acyclic(6), signs in any::<u64>()) {
        let arcs = rep.digraph.canonical_arcs();
        let w = heavy_weighting(&arcs, |a| {
            let k = arcs.iter().position(|&b| b == a).unwrap();
            if signs >> k & 1 == 1 { -1 } else { 1 }
        });
        let t = rep.targets.len();
        let all = Subset::full(rep.digraph.vertex_count());
        let m = lindstrom_heavy(&rep.digraph, rep.targets, all, &w).unwrap();
        let cols: Vec<usize> = (0..t).collect();
        for s in matroid_core::k_subsets(all, t) {
            let rows: Vec<usize> = s.iter().collect();
            let det = m.submatrix(&rows, &cols).det().unwrap();
            prop_assert_eq!(det.is_zero(), !is_linkable(&rep.digraph, s, rep.targets));
        }
    }

    #[test]
    fn pivot_is_contraction(m in arb_matrix(4), e in 0usize..4, c in 0usize..4) {
        let (e, c) = (e % m.n_rows(), c % m.n_cols());
        prop_assume!(!m.get(e, c).is_zero());
        let p = m.contract(e, c).unwrap();
        prop_assert_eq!(p.matroid(), contract_set(&m.matroid(), Subset::singleton(e)));
    }

    #[test]
    fn column_basis_keeps_matroid(m in arb_matrix(5)) {
        let b = m.column_basis();
        prop_assert_eq!(b.n_cols(), m.rank());
        prop_assert_eq!(b.matroid(), m.matroid());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn represent_round_trips_on_cyclic(rep in arb_cyclic()) {
        let m = represent_gammoid(&rep);
        let g = gammoid_matroid(&rep);
        prop_assert_eq!(m.n_cols(), g.rank_total());
        prop_assert_eq!(m.matroid(), g);
    }
}
