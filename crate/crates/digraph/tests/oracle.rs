mod common;

use common::{brute_gammoid, brute_rank, set};
use gammoid_digraph::named::{g7, pivot10};
use gammoid_digraph::*;
use matroid_core::{contract, dual, is_isomorphic, k_subsets, Matroid, Subset};

#[test]
fn connector_trivial_and_bipartite() {
    let d = Digraph::new(1);
    let r = max_connector(&d, Subset::singleton(0), Subset::singleton(0));
    assert_eq!(r.paths, vec![vec![0]]);

    let d = Digraph::from_arcs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
    let r = max_connector(&d, set("ab"), set("cd"));
    assert_eq!(r.len(), 2);
    assert!(r.is_valid(&d, set("cd")));
}

#[test]
fn pivot10_unique_connector_goes_through_x() {
    let rep = pivot10();
    let r = max_connector(&rep.digraph, set("abch"), rep.targets);
    assert_eq!(r.len(), 4);
    let h_path: Vec<&str> = r.paths[3].iter().map(|&v| rep.names[v].as_str()).collect();
    assert_eq!(h_path, ["h", "x", "d"]);
    // unique up to swapping x and y
    let all = all_linkings(&rep.digraph, set("abch"), rep.targets);
    assert_eq!(all.len(), 2);
    assert!(all.iter().all(|l| l.ends() == rep.targets && l.paths.iter().any(|p| p.len() == 3)));
}

#[test]
fn pivot10_bases_match_description() {
    let m = pivot10().gammoid();
    let t = set("abcd");
    let outer = set("efgh");
    let expected: Vec<Subset> = k_subsets(Subset::full(8), 4)
        .into_iter()
        .filter(|b| {
            let (inside, outside) = ((*b & t).len(), (*b & outer).len());
            inside == 4 || (inside == 3 && outside == 1) || (inside == 2 && outside == 2)
        })
        .collect();
    assert_eq!(m.bases(), &expected[..]);
}

#[test]
fn g7_dependent_flats() {
    let m = g7().gammoid();
    assert_eq!(m.n(), 7);
    assert_eq!(m.rank_total(), 4);
    let dependent: Vec<Subset> = m.flats().iter().copied().filter(|&f| !m.is_independent(f)).collect();
    let mut expected = vec![set("abce"), set("abdf"), set("bcdg"), set("defg"), Subset::full(7)];
    expected.sort();
    assert_eq!(dependent, expected);
    assert_eq!(m, brute_gammoid(&g7().digraph, g7().targets, g7().ground));
}

#[test]
fn no_arcs_gives_free_matroid() {
    let rep = Representation::new(Digraph::new(4), Subset::full(4), Subset::full(4));
    assert_eq!(rep.gammoid(), Matroid::free(4));
}

#[test]
fn uniform_representation_is_uniform_and_standard() {
    for n in 0..7 {
        for r in 0..=n {
            let rep = uniform_representation(n, r).unwrap();
            assert_eq!(rep.digraph.arc_count(), r * (n - r));
            assert_eq!(rep.gammoid(), Matroid::uniform(n, r));
            assert!(is_duality_respecting(&rep));
        }
    }
    assert_eq!(uniform_representation(4, 2).unwrap().digraph.arc_count(), 4);
    assert!(uniform_representation(2, 3).is_err());
}

#[test]
fn uniform_representation_arcs_are_essential() {
    let rep = uniform_representation(5, 2).unwrap();
    for (u, v) in rep.digraph.arcs() {
        assert!(is_essential_arc(&rep, u, v).unwrap());
    }
}

#[test]
fn essential_arc_examples() {
    // a -> t is the only way into the only target
    let rep = Representation::new(Digraph::from_arcs(2, &[(0, 1)]), set("b"), set("ab"));
    assert!(is_essential_arc(&rep, 0, 1).unwrap());
    // two parallel routes a -> b -> t and a -> c -> t
    let rep = Representation::new(Digraph::from_arcs(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]), set("d"), set("a"));
    assert!(!is_essential_arc(&rep, 0, 1).unwrap());
    assert_eq!(is_essential_arc(&rep, 1, 0), Err(DigraphError::ArcMissing(1, 0)));
}

#[test]
fn pivot_example() {
    // p q r s t
    let d = Digraph::from_arcs(5, &[(0, 2), (1, 3), (2, 3), (2, 4)]);
    let p = d.pivot(2, 3).unwrap();
    assert_eq!(p.arcs(), vec![(0, 2), (1, 3), (3, 2), (3, 4)]);
    assert_eq!(d.pivot(0, 1), Err(DigraphError::ArcMissing(0, 1)));

    let single = Digraph::from_arcs(2, &[(0, 1)]);
    assert_eq!(single.pivot(0, 1).unwrap().arcs(), vec![(1, 0)]);
}

#[test]
fn pivot_preserves_gammoid_at_sink_target() {
    let rep = g7();
    // d is a sink target entered from f
    let (r, s) = (5, 3);
    let d2 = rep.digraph.pivot(r, s).unwrap();
    let rep2 = Representation { digraph: d2, targets: rep.targets.without(s).with(r), ..rep.clone() };
    assert_eq!(rep2.gammoid(), rep.gammoid());
    // involution
    assert_eq!(rep2.digraph.pivot(s, r).unwrap(), rep.digraph);
}

#[test]
fn base_target_pivot10() {
    let rep = pivot10();
    let base = rep.to_elements(set("abch"));
    let out = base_target_representation(&rep, base).unwrap();
    assert_eq!(out.targets, set("abch"));
    assert!(out.targets.iter().all(|t| out.digraph.is_sink(t)));
    assert_eq!(out.gammoid(), rep.gammoid());
    // h x d was pivoted: d now points to x and c... and x to h
    let name = |v: usize| out.names[v].clone();
    let arcs: Vec<String> = out.digraph.arcs().iter().map(|&(u, v)| format!("{}{}", name(u), name(v))).collect();
    assert!(arcs.contains(&"xh".to_string()));
    assert!(arcs.contains(&"dx".to_string()));
    assert!(!arcs.contains(&"hx".to_string()));
    // d is not a source any more, so the pivoted representation is not
    // duality respecting
    assert!(!out.digraph.is_source(set("d").min().unwrap()));
    assert!(!is_duality_respecting(&out));

    let identity = base_target_representation(&rep, rep.to_elements(set("abcd"))).unwrap();
    assert_eq!(identity.digraph, rep.digraph);
    assert!(matches!(
        base_target_representation(&rep, rep.to_elements(set("abef"))),
        Ok(_)
    ));
    assert!(matches!(
        base_target_representation(&rep, rep.to_elements(set("efgh"))),
        Err(DigraphError::NotABase(_))
    ));
}

#[test]
fn standard_representations_respect_duality() {
    for rep in [g7(), pivot10()] {
        let std = standard_representation(&rep);
        assert!(std.targets.is_subset(std.ground));
        assert!(std.targets.iter().all(|t| std.digraph.is_sink(t)));
        assert!((std.ground - std.targets).iter().all(|e| std.digraph.is_source(e)));
        assert_eq!(std.gammoid(), rep.gammoid());
        let opp = std.opposite();
        assert_eq!(brute_gammoid(&opp.digraph, opp.targets, opp.ground), dual(&rep.gammoid()));
    }
}

#[test]
fn opposite_is_involution() {
    let d = g7().digraph;
    assert_eq!(d.opposite().opposite(), d);
    for v in 0..d.vertex_count() {
        assert_eq!(d.is_sink(v), d.opposite().is_source(v));
    }
}

#[test]
fn lifting_four_cycle() {
    let d = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    let (l, x, t) = d.lift_cycle(&[0, 1, 2, 3]).unwrap();
    assert_eq!((x, t), (4, 5));
    assert_eq!(l.arcs(), vec![(0, 5), (1, 2), (2, 3), (3, 0), (4, 1), (4, 5)]);
    assert!(l.is_acyclic());
    assert_eq!(d.lift_cycle(&[0, 2]), Err(DigraphError::NotACycle));
}

/// Number of cycles (counted once per vertex set and arc set) by brute force.
fn count_cycles(d: &Digraph) -> usize {
    fn rec(d: &Digraph, start: usize, v: usize, used: Subset, count: &mut usize) {
        for w in d.out_neighbours(v).iter() {
            if w == start {
                *count += 1;
            } else if w > start && !used.contains(w) {
                rec(d, start, w, used.with(w), count);
            }
        }
    }
    let mut count = 0;
    for s in 0..d.vertex_count() {
        rec(d, s, s, Subset::singleton(s), &mut count);
    }
    count
}

#[test]
fn complete_lifting_recovers_gammoid() {
    // a 3-cycle a -> b -> c -> a with a tail into the target d
    let d = Digraph::from_arcs(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (4, 0)]);
    let rep = Representation::new(d, set("d"), set("abce"));
    assert_eq!(count_cycles(&rep.digraph), 1);
    let (lifted, lifts) = complete_lifting(&rep);
    assert_eq!(lifts.len(), 1);
    assert!(lifted.digraph.is_acyclic());
    let m = lifted.gammoid();
    assert_eq!(lifted.targets.len(), rep.gammoid().rank_total() + lifts.len());
    let keep = lifted.to_elements(rep.ground);
    assert_eq!(contract(&m, keep), rep.gammoid());

    let acyclic = pivot10();
    let (same, none) = complete_lifting(&acyclic);
    assert!(none.is_empty());
    assert_eq!(same, acyclic);
}

#[test]
fn transitive_triple_cascade() {
    let d = Digraph::from_arcs(3, &[(0, 1), (1, 2), (0, 2)]);
    let c = d.to_cascade().unwrap();
    assert_eq!(c.vertex_count(), 4);
    assert_eq!(c.arcs(), vec![(0, 1), (0, 3), (1, 2), (3, 2)]);
    let cyc = Digraph::from_arcs(2, &[(0, 1), (1, 0)]);
    assert_eq!(cyc.to_cascade(), Err(DigraphError::CyclicInput));
}

#[test]
fn linkage_system_examples() {
    let d = Digraph::new(3);
    let sys = linkage_system(&d, set("a"));
    assert_eq!(sys, vec![(1, set("b")), (2, set("c"))]);

    let rep = g7();
    let sys = linkage_system(&rep.digraph, rep.targets);
    let sizes: Vec<usize> = sys.iter().map(|(_, a)| a.len()).collect();
    // e f g x y: two out-arcs each
    assert_eq!(sizes, vec![3, 3, 3, 3, 3]);
}

#[test]
fn linkage_system_dual_is_strict_gammoid() {
    for rep in [g7(), pivot10()] {
        let n = rep.digraph.vertex_count();
        let family: Vec<Subset> = linkage_system(&rep.digraph, rep.targets).into_iter().map(|(_, a)| a).collect();
        let strict = rep.strict();
        assert_eq!(dual(&transversal_matroid(n, &family)), strict.gammoid());
    }
}

#[test]
fn lattice_path_presentation() {
    let family = [
        Subset::from_labels(&[1, 2, 3]),
        Subset::from_labels(&[2, 3, 4, 5]),
        Subset::from_labels(&[4, 5, 6]),
    ];
    let m = transversal_matroid(6, &family);
    // bases: N-step positions of every lattice path between
    // p = EENENN and q = NNENEE
    let p = [0, 0, 1, 0, 1, 1];
    let q = [1, 1, 0, 1, 0, 0];
    let between = |s: Subset| {
        let (mut cp, mut cq, mut cs) = (0, 0, 0);
        (0..6).all(|j| {
            cp += p[j];
            cq += q[j];
            cs += s.contains(j) as i32;
            cp <= cs && cs <= cq
        })
    };
    let expected: Vec<Subset> = k_subsets(Subset::full(6), 3).into_iter().filter(|&s| between(s)).collect();
    assert_eq!(m.bases(), &expected[..]);
    assert_eq!(transversal_matroid(1, &[Subset::singleton(0)]).rank_total(), 1);
}

#[test]
fn hall_condition() {
    let family = [set("ab"), set("ab"), set("abc"), set("d")];
    for j in Subset::full(4).subsets() {
        let chosen: Vec<Subset> = j.iter().map(|i| family[i]).collect();
        let full = transversal_rank(&chosen, Subset::full(4)) == j.len();
        let hall = j.subsets().all(|k| k.iter().fold(Subset::EMPTY, |u, i| u | family[i]).len() >= k.len());
        assert_eq!(full, hall, "{j}");
    }
}

#[test]
fn vertex_bounds() {
    assert_eq!(vertex_bound(&matroid_core::named::mk4()), 63);
    assert_eq!(vertex_bound(&Matroid::loops(5)), 5);
    assert_eq!(vertex_bound(&g7().gammoid()), 123);
}

#[test]
fn induced_from_free_targets_is_gammoid() {
    let rep = g7();
    let targets: Vec<usize> = rep.targets.iter().collect();
    let m = induced_matroid(&rep.digraph, &targets, &Matroid::free(4), rep.ground);
    assert_eq!(m, rep.gammoid());
    // inducing from U(1,4) caps the rank at one
    let m1 = induced_matroid(&rep.digraph, &targets, &Matroid::uniform(4, 1), rep.ground);
    assert_eq!(m1, Matroid::uniform(7, 1));
}

#[test]
fn dig_roundtrip() {
    let rep = g7();
    let text = print_digraph(&rep);
    let back = parse_digraph(&text).unwrap();
    assert_eq!(back, rep);
    assert!(is_isomorphic(&back.gammoid(), &rep.gammoid()));

    let plain = parse_digraph("V 3\nA 1 3\nA 2 3\nT 3\n").unwrap();
    assert_eq!(plain.gammoid(), Matroid::uniform(3, 1));
    assert!(parse_digraph("A 1 2\n").is_err());
    assert!(parse_digraph("V 2\nA 1 5\nT 1\n").is_err());
}

#[test]
fn brute_rank_agrees_on_examples() {
    let rep = g7();
    for x in rep.ground.subsets() {
        assert_eq!(brute_rank(&rep.digraph, x, rep.targets), connectivity(&rep.digraph, x, rep.targets));
    }
}

#[test]
fn canonical_arc_order() {
    let d = Digraph::from_arcs(3, &[(2, 0), (0, 1), (1, 2), (2, 1), (1, 0), (0, 2)]);
    assert_eq!(d.canonical_arcs(), vec![(0, 1), (1, 0), (0, 2), (1, 2), (2, 0), (2, 1)]);
}
