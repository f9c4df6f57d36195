//! The `.dig` text format:
//!
//! ```text
//! V 4
//! names: a b c d          (optional; otherwise vertices are 1..n)
//! A c a
//! A d b
//! T a b
//! E a b c d
//! ```
//!
//! `E` defaults to every vertex. Blank lines and `#` comments are skipped.

use matroid_core::Subset;

use crate::error::DigraphError;
use crate::graph::Digraph;
use crate::repr::{default_name, Representation};

fn err(line: usize, msg: impl Into<String>) -> DigraphError {
    DigraphError::Parse { line, msg: msg.into() }
}

pub fn parse_digraph(text: &str) -> Result<Representation, DigraphError> {
    let mut n: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut arcs = Vec::new();
    let mut targets = None;
    let mut ground = None;

    let resolve = |names: &Option<Vec<String>>, n: usize, tok: &str, ln: usize| -> Result<usize, DigraphError> {
        if let Some(names) = names {
            if let Some(i) = names.iter().position(|x| x == tok) {
                return Ok(i);
            }
        }
        match tok.parse::<usize>() {
            Ok(i) if (1..=n).contains(&i) && names.is_none() => Ok(i - 1),
            _ => Err(err(ln, format!("unknown vertex {tok:?}"))),
        }
    };

    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let toks: Vec<&str> = rest.split_whitespace().collect();
        if head == "V" {
            let v: usize = rest.trim().parse().map_err(|_| err(ln, "bad vertex count"))?;
            if v > crate::graph::MAX_VERTICES {
                return Err(err(ln, "too many vertices"));
            }
            n = Some(v);
            continue;
        }
        let nv = n.ok_or_else(|| err(ln, "`V <n>` must come first"))?;
        match head {
            "names:" => {
                if toks.len() != nv {
                    return Err(err(ln, format!("expected {nv} names, got {}", toks.len())));
                }
                names = Some(toks.iter().map(|s| s.to_string()).collect());
            }
            "A" => {
                if toks.len() != 2 {
                    return Err(err(ln, "arc lines are `A u v`"));
                }
                let u = resolve(&names, nv, toks[0], ln)?;
                let v = resolve(&names, nv, toks[1], ln)?;
                arcs.push((u, v));
            }
            "T" | "E" => {
                let mut s = Subset::EMPTY;
                for t in &toks {
                    s.insert(resolve(&names, nv, t, ln)?);
                }
                if head == "T" {
                    targets = Some(s);
                } else {
                    ground = Some(s);
                }
            }
            _ => return Err(err(ln, format!("unexpected line {line:?}"))),
        }
    }
    let n = n.ok_or_else(|| err(1, "missing `V <n>`"))?;
    let d = Digraph::from_arcs(n, &arcs);
    let targets = targets.ok_or_else(|| err(1, "missing target line `T ...`"))?;
    let ground = ground.unwrap_or(Subset::full(n));
    let names = names.unwrap_or_else(|| (0..n).map(|v| (v + 1).to_string()).collect());
    Ok(Representation::new(d, targets, ground).with_names(names))
}

pub fn print_digraph(rep: &Representation) -> String {
    let names = &rep.names;
    let list = |s: Subset| s.iter().map(|v| names[v].as_str()).collect::<Vec<_>>().join(" ");
    let mut out = format!("V {}\nnames: {}\n", rep.digraph.vertex_count(), names.join(" "));
    for (u, v) in rep.digraph.arcs() {
        out.push_str(&format!("A {} {}\n", names[u], names[v]));
    }
    out.push_str(&format!("T {}\nE {}\n", list(rep.targets), list(rep.ground)));
    out
}

/// Letters `a, b, ...` for the first vertices.
pub fn letter_names(n: usize) -> Vec<String> {
    (0..n).map(default_name).collect()
}
