//! Small example inputs, generated from the named constructors where one
//! exists and embedded from `fixtures/` otherwise.

use gammoid_digraph::{named as dnamed, print_digraph, Representation};
use matroid_core::{named, print_matroid, Matroid, MatroidFile};

pub struct Fixture {
    pub name: &'static str,
    pub text: String,
}

fn mtr(comment: &str, m: Matroid, names: Option<&str>) -> String {
    let names = names.map(|s| s.split_whitespace().map(str::to_string).collect());
    format!("# {comment}\n{}", print_matroid(&MatroidFile { matroid: m, names }))
}

fn dig(comment: &str, rep: &Representation) -> String {
    format!("# {comment}\n{}", print_digraph(rep))
}

pub fn all() -> Vec<Fixture> {
    let g7 = dnamed::g7();
    let g7_all = Representation { ground: g7.digraph.vertices(), ..g7.clone() };
    let list: Vec<(&'static str, String)> = vec![
        ("mk4.mtr", mtr("cycle matroid of K4; three-point lines abd ace bcf def", named::mk4(), Some("a b c d e f"))),
        ("p7.mtr", mtr("rank 3 on seven points; lines 712 734 756 135 246", named::p7(), None)),
        ("u24.mtr", mtr("uniform matroid of rank 2 on four elements", named::u24(), None)),
        (
            "g841.mtr",
            mtr("sparse paving, circuit-hyperplanes 1378 1568 2368 4567 2478", named::g841(), None),
        ),
        ("vamos.mtr", mtr("Vamos matroid", named::vamos(), None)),
        ("g7.dig", dig("seven-element gammoid that is not strict, on nine vertices", &g7)),
        ("d9_strict.dig", dig("the same digraph with every vertex in the ground set", &g7_all)),
        ("ghig.dig", dig("digraph with the cycle g h i", &dnamed::ghig())),
        ("pivot10.dig", dig("ten vertices, two auxiliary", &dnamed::pivot10())),
        ("lpm_example.paths", "# bounding lattice paths: south path, north path\nEENENN\nNNENEE\n".to_string()),
        ("rs8.circuits", include_str!("../../../fixtures/rs8.circuits").to_string()),
        ("rs8.cocircuits", include_str!("../../../fixtures/rs8.cocircuits").to_string()),
        ("g7_o1.circuits", include_str!("../../../fixtures/g7_o1.circuits").to_string()),
        ("g7_o2.circuits", include_str!("../../../fixtures/g7_o2.circuits").to_string()),
    ];
    list.into_iter().map(|(name, text)| Fixture { name, text }).collect()
}

pub fn get(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name || f.name.split('.').next() == Some(name))
}
