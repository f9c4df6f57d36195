mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use gammoid_digraph::gammoid_matroid;
use gammoid_recognition::*;
use matroid_core::{dual, Matroid, Subset};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matroid(seed: u64, max_n: usize) -> Matroid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 1 + (seed as usize % max_n);
    random_matroid(&mut rng, n)
}

fn soon(ms: u64) -> Option<Instant> {
    Some(Instant::now() + Duration::from_millis(ms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn search_state_matches_path_enumeration(seed in any::<u64>(), extra in 0usize..3) {
        let m = matroid(seed, 4);
        let count = (m.n() + extra).min(6);
        let opts = BacktrackOptions { max_vertices: count, deadline: soon(3000) };
        let mut seen = 0;
        let mut failures = Vec::new();
        backtrack(&m, &opts, &mut |s: &SearchState| {
            seen += 1;
            if seen > 150 {
                return;
            }
            let paths: BTreeSet<Vec<u8>> = s.paths.iter().map(|p| p.vertices.clone()).collect();
            if paths.len() != s.paths.len() || paths != all_paths(&s.digraph) {
                failures.push(format!("paths differ at {:?}", s.digraph.arcs()));
            }
            let linkings: BTreeSet<BTreeSet<Vec<u8>>> = s
                .linkings
                .iter()
                .map(|l| l.paths.iter().map(|&i| s.paths[i as usize].vertices.clone()).collect())
                .collect();
            if linkings.len() != s.linkings.len() || linkings != linkings_onto(&s.digraph, s.n, s.base) {
                failures.push(format!("linkings differ at {:?}", s.digraph.arcs()));
            }
            let starts: BTreeSet<Subset> = linkings
                .iter()
                .map(|l| l.iter().map(|p| p[0] as usize).collect())
                .collect();
            if starts != s.bases_found().into_iter().collect::<BTreeSet<_>>() {
                failures.push("bases found differ".into());
            }
            if !starts.iter().all(|&b| m.is_base(b)) {
                failures.push("a non-base was accepted".into());
            }
        })
        .unwrap();
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn gammoid_verdicts_round_trip(seed in any::<u64>()) {
        let m = matroid(seed, 5);
        let opts = BacktrackOptions { max_vertices: m.n() + 2, deadline: soon(2000) };
        let (v, _) = backtrack(&m, &opts, &mut |_| {}).unwrap();
        if let BacktrackVerdict::Gammoid(rep) = v {
            prop_assert_eq!(gammoid_matroid(&rep), m);
        }
    }

    #[test]
    fn derivations_preserve_validity(seeds in proptest::collection::vec(any::<u64>(), 1..5)) {
        let ms: Vec<Matroid> = seeds.iter().map(|&s| matroid(s, 6)).collect();
        let facts: Vec<Tableau> = ms
            .iter()
            .map(|m| {
                let md = dual(m);
                let strict = alpha_nonnegative(m);
                match gammoid_oracle(m).unwrap() {
                    true if strict => Tableau::from_parts(m, &[m.clone(), md], &[], &[]),
                    true => Tableau::from_parts(m, &[m.clone()], &[m.clone()], &[]),
                    false => Tableau::from_parts(m, &[], &[m.clone()], &[m.clone()]),
                }
            })
            .collect();
        let refs: Vec<&Tableau> = facts.iter().collect();
        let joined = Tableau::join(&refs);
        let mut chain = vec![joined.clone(), joined.expand(), joined.extend(), joined.normalize()];
        for t in chain.clone() {
            for m in &ms {
                let local = t.with_goal(m);
                match local.conclude() {
                    Ok(c) => {
                        prop_assert!(local.decisive().is_some());
                        chain.push(Tableau::join(&[&t, &c]).normalize());
                    }
                    Err(e) => {
                        prop_assert_eq!(e, RecognitionError::NotDecisive);
                        prop_assert!(local.decisive().is_none());
                    }
                }
            }
        }
        for t in &chain {
            let report = t.check_validity(&small_gammoid_oracle);
            prop_assert!(report.is_valid(), "{:?}", report.violations);
            let back = Tableau::from_json(&t.to_json()).unwrap();
            prop_assert!(back.same_as(t));
        }
    }

    #[test]
    fn pipeline_never_contradicts_backtracking(seed in any::<u64>()) {
        let m = matroid(seed, 7);
        let budget = Budget { deadline: soon(20_000), ..Budget::default() };
        let run = auto_pipeline(&m, &budget);
        let verdict = run.verdict.is_gammoid();
        if let Some(v) = verdict {
            prop_assert_eq!(Some(v), gammoid_oracle(&m));
        }
        for t in &run.history {
            let report = t.check_validity(&small_gammoid_oracle);
            prop_assert!(report.is_valid(), "{:?}", report.violations);
        }
        let opts = BacktrackOptions { max_vertices: m.n() + 2, deadline: soon(2000) };
        if let (BacktrackVerdict::Gammoid(_), _) = backtrack(&m, &opts, &mut |_| {}).unwrap() {
            prop_assert_ne!(verdict, Some(false));
        }
    }
}
