mod common;

use common::{alpha_oracle, extension_oracle};
use gammoid_alpha::*;
use gammoid_digraph::{Digraph, Representation};
use matroid_core::{dual, Matroid, Subset};
use proptest::prelude::*;

/// Random gammoids on `min(max_e, ..)` elements, and their duals. The
/// ground set is a prefix of the vertices, the rest are auxiliary.
fn arb_matroid(max_e: usize) -> impl Strategy<Value = Matroid> {
    (4usize..=max_e, 0usize..=3)
        .prop_flat_map(|(e, aux)| {
            let n = e + aux;
            (
                Just((n, e)),
                prop::collection::vec((0..n, 0..n), 0..=2 * n),
                prop::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=e.min(n)),
                any::<bool>(),
            )
        })
        .prop_map(|((n, e), arcs, targets, flip)| {
            let d = Digraph::from_arcs(n, &arcs);
            let t: Subset = targets.into_iter().collect();
            let m = Representation::new(d, t, Subset::full(e)).gammoid();
            if flip { dual(&m) } else { m }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alpha_matches_recurrence_and_moebius(m in arb_matroid(7)) {
        let a = alpha_invariant(&m).unwrap();
        prop_assert_eq!(&a.values, &alpha_oracle(&m));
        prop_assert_eq!(alpha_via_moebius(&m).unwrap(), a.clone());
        let total: i64 = m.flats().iter().map(|f| a.get(*f)).sum();
        prop_assert_eq!(total, (m.n() - m.rank_total()) as i64);
        prop_assert_eq!(is_strict_gammoid(&m).unwrap(), a.is_nonnegative());
        prop_assert_eq!(alpha_violations(&m).unwrap().is_empty(), a.is_nonnegative());
    }

    #[test]
    fn violations_are_minimal_negative_sets(m in arb_matroid(7)) {
        let a = alpha_invariant(&m).unwrap();
        let v = alpha_violations(&m).unwrap();
        for x in m.ground().subsets() {
            let minimal_negative = a.get(x) < 0 && x.subsets().all(|y| y == x || a.get(y) >= 0);
            prop_assert_eq!(v.contains(&x), minimal_negative);
        }
    }

    #[test]
    fn extension_alpha_matches_from_scratch(m in arb_matroid(6)) {
        let alpha = alpha_invariant(&m).unwrap();
        for cut in modular_cuts(&m) {
            let n = extend(&m, &cut).unwrap();
            prop_assert_eq!(&n, &extension_oracle(&m, &cut.flats));
            prop_assert_eq!(flats_of_extension(&m, &cut), n.flats().to_vec());
            let fast = alpha_of_extension(&m, &alpha, &cut).unwrap();
            prop_assert_eq!(&fast.values, &alpha_oracle(&n));
            prop_assert_eq!(cut_of_extension(&n, m.n()), cut);
        }
    }

    #[test]
    fn strict_representation_round_trips(m in arb_matroid(7)) {
        if is_strict_gammoid(&m).unwrap() {
            let rep = strict_representation(&m).unwrap();
            prop_assert_eq!(rep.digraph.vertex_count(), m.n());
            prop_assert_eq!(rep.gammoid(), m);
        } else {
            prop_assert!(strict_representation(&m).is_err());
        }
    }

    #[test]
    fn transversal_is_dual_strict(m in arb_matroid(7)) {
        prop_assert_eq!(is_transversal(&m).unwrap(), is_strict_gammoid(&dual(&m)).unwrap());
    }

    #[test]
    fn gammoids_are_strongly_base_orderable(m in arb_matroid(6)) {
        prop_assert!(strongly_base_orderable(&m));
        prop_assert!(ingleton_violation(&m, m.rank_total()).is_none());
    }
}
