//! The `gammoid` command line tool. [`run`] parses arguments, dispatches
//! one verb and writes the result; the binary only forwards to it.

pub mod fixtures;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use gammoid_alpha::{alpha_invariant, alpha_violations, is_strict_gammoid, is_transversal};
use gammoid_digraph::{
    complete_lifting, gammoid_matroid, linkage_system, parse_digraph, print_digraph, standard_representation,
    vertex_bound, Representation, MAX_VERTICES,
};
use gammoid_orient::{
    chromatic_number, heavy_arc_orientation, lattice_path_matroid, parse_path, parse_signed_sets, presentation,
    print_signed_sets, quite_simple_coline, with_negations, check_axioms, matroid_with_circuits, circuit_signature, ArcSignature, Chromatic,
    OrientedMatroid, SignedSubset,
};
use gammoid_realize::{randomized_transversal_matrix, represent_gammoid};
use gammoid_recognition::{
    auto_pipeline, backtrack, BacktrackOptions, BacktrackVerdict, Budget, PipelineRun, PipelineVerdict,
};
use matroid_core::{parse_matroid, print_matroid, MatroidFile, Subset};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    #[error("{0}")]
    Input(String),
    /// The operation itself failed; exit code 1.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "gammoid", version, about = "Matroids, gammoids and their representations")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Emit digraphs in Graphviz DOT format.
    #[arg(long, global = true)]
    pub dot: bool,
    /// Seed for randomized operations.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a `.mtr` or `.dig` file and summarize it.
    Check { file: PathBuf },
    /// Rank of a set, e.g. `1,2,4` or `abd`.
    Rank { file: PathBuf, set: String },
    /// Closure of a set.
    Closure { file: PathBuf, set: String },
    /// α on the ground set and on every flat where it is nonzero.
    Alpha {
        file: PathBuf,
        /// Print α of this set only.
        #[arg(long)]
        set: Option<String>,
        /// Print the full table as CSV.
        #[arg(long)]
        table: bool,
    },
    /// Whether the matroid is a strict gammoid.
    #[command(name = "strict?", alias = "strict")]
    Strict { file: PathBuf },
    /// Whether the matroid is transversal.
    #[command(name = "transversal?", alias = "transversal")]
    Transversal { file: PathBuf },
    /// Minimal sets with negative α.
    Violations { file: PathBuf },
    /// The gammoid of a `.dig` representation, as `.mtr`.
    Gammoid { file: PathBuf },
    /// Pivot the arc `r -> s` where `s` is a target and `r` is not.
    Pivot { file: PathBuf, r: String, s: String },
    /// A representation whose targets are sinks in the ground set and
    /// whose other ground vertices are sources.
    Standardize { file: PathBuf },
    /// Lift cycles until the digraph is acyclic.
    Lift { file: PathBuf },
    /// An exact rational matrix for the gammoid, as CSV.
    Represent {
        file: PathBuf,
        /// Random matrix for the transversal matroid of the linkage system
        /// (uses `--seed`).
        #[arg(long)]
        transversal: bool,
        /// Failure probability exponent for `--transversal`.
        #[arg(long, default_value_t = 20)]
        precision: u32,
    },
    /// Decide whether a matroid is a gammoid.
    Recognize {
        file: PathBuf,
        /// Digraph backtracking on this many vertices only.
        #[arg(long)]
        max_vertices: Option<usize>,
        /// Tableau derivation only.
        #[arg(long)]
        pipeline: bool,
        /// Give up after this many seconds.
        #[arg(long)]
        timeout: Option<f64>,
    },
    /// The guided tableau derivation with its step log.
    Pipeline {
        file: PathBuf,
        #[arg(long)]
        timeout: Option<f64>,
        /// Largest flat rank for the Ingleton test; 0 skips it.
        #[arg(long, default_value_t = 4)]
        ingleton: usize,
        /// Extensions examined by the extension search.
        #[arg(long, default_value_t = 2000)]
        extensions: usize,
    },
    /// Orientation from heavy arcs of an acyclic `.dig`, or from a `.mtr`
    /// with signed circuits; prints circuits and checks the axioms.
    Orient {
        file: PathBuf,
        #[arg(long)]
        circuits: Option<PathBuf>,
    },
    /// Coflow chromatic number of an orientation (inputs as for `orient`).
    Chromatic {
        file: PathBuf,
        #[arg(long)]
        circuits: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Lattice path matroid between two paths of `N`/`E` steps.
    Lpm { p: String, q: String },
    /// A quite simple coline of a simple matroid.
    Coline { file: PathBuf },
    /// List, print or write the bundled example files.
    Fixtures {
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parse `args` (program name first), run the verb and return the exit
/// code. Results go to `out`, diagnostics to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn is_dig(path: &Path) -> bool {
    path.extension().is_some_and(|x| x == "dig")
}

pub fn load_digraph(path: &Path) -> Result<Representation, CliError> {
    parse_digraph(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// A `.mtr` file, or the gammoid of a `.dig` file with the ground vertex
/// names.
pub fn load_matroid(path: &Path) -> Result<MatroidFile, CliError> {
    if is_dig(path) {
        let rep = load_digraph(path)?;
        let names = rep.ground.iter().map(|v| rep.names[v].clone()).collect();
        return Ok(MatroidFile { matroid: gammoid_matroid(&rep), names: Some(names) });
    }
    parse_matroid(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn names_of(f: &MatroidFile) -> Vec<String> {
    (0..f.matroid.n()).map(|e| f.name_of(e)).collect()
}

/// `1,2,4`, `1 2 4`, `{1,2,4}`, or a run of one-letter names like `abd`.
pub fn parse_set(text: &str, names: &[String]) -> Result<Subset, CliError> {
    let body = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut tokens: Vec<String> = body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(str::to_string).collect();
    let single_letters = names.iter().all(|n| n.chars().count() == 1);
    if tokens.len() == 1 && single_letters && !names.iter().any(|n| *n == tokens[0]) {
        tokens = tokens[0].chars().map(|c| c.to_string()).collect();
    }
    let mut s = Subset::EMPTY;
    for t in tokens {
        let e = names
            .iter()
            .position(|n| *n == t)
            .ok_or_else(|| CliError::Input(format!("unknown element {t:?}")))?;
        s.insert(e);
    }
    Ok(s)
}

pub fn show_set(s: Subset, names: &[String]) -> String {
    let parts: Vec<&str> = s.iter().map(|e| names[e].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

fn set_json(s: Subset, names: &[String]) -> Value {
    json!(s.iter().map(|e| names[e].clone()).collect::<Vec<_>>())
}

fn deadline(timeout: Option<f64>) -> Option<Instant> {
    timeout.map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0)))
}

fn render_digraph(cli: &Cli, rep: &Representation) -> String {
    if cli.dot {
        rep.digraph.to_dot(&rep.names, rep.targets)
    } else {
        print_digraph(rep)
    }
}

fn digraph_json(rep: &Representation) -> Value {
    let list = |s: Subset| s.iter().map(|v| rep.names[v].clone()).collect::<Vec<_>>();
    json!({
        "vertices": rep.names,
        "arcs": rep.digraph.arcs().iter().map(|&(u, v)| [rep.names[u].clone(), rep.names[v].clone()]).collect::<Vec<_>>(),
        "targets": list(rep.targets),
        "ground": list(rep.ground),
    })
}

fn lines(v: Value, cli: &Cli, text: String) -> String {
    if cli.json {
        format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
    } else {
        text
    }
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Check { file } => {
            if is_dig(file) {
                let rep = load_digraph(file)?;
                let m = gammoid_matroid(&rep);
                let text = format!(
                    "digraph: {} vertices, {} arcs, {} targets, {} ground elements; gammoid of rank {}\n",
                    rep.digraph.vertex_count(),
                    rep.digraph.arc_count(),
                    rep.targets.len(),
                    rep.ground.len(),
                    m.rank_total()
                );
                let v = json!({"vertices": rep.digraph.vertex_count(), "arcs": rep.digraph.arc_count(), "rank": m.rank_total()});
                Ok(lines(v, cli, text))
            } else {
                let f = load_matroid(file)?;
                let m = &f.matroid;
                let text = format!("matroid: n = {}, rank = {}, {} bases\n", m.n(), m.rank_total(), m.bases().len());
                Ok(lines(json!({"n": m.n(), "rank": m.rank_total(), "bases": m.bases().len()}), cli, text))
            }
        }
        Command::Rank { file, set } => {
            let f = load_matroid(file)?;
            let names = names_of(&f);
            let x = parse_set(set, &names)?;
            let r = f.matroid.rank(x);
            Ok(lines(json!({"set": set_json(x, &names), "rank": r}), cli, format!("{r}\n")))
        }
        Command::Closure { file, set } => {
            let f = load_matroid(file)?;
            let names = names_of(&f);
            let x = parse_set(set, &names)?;
            let c = f.matroid.closure(x);
            Ok(lines(json!({"set": set_json(x, &names), "closure": set_json(c, &names)}), cli, format!("{}\n", show_set(c, &names))))
        }
        Command::Alpha { file, set, table } => {
            let f = load_matroid(file)?;
            let names = names_of(&f);
            let m = &f.matroid;
            let a = alpha_invariant(m).map_err(domain)?;
            if *table {
                return Ok(a.to_csv());
            }
            if let Some(s) = set {
                let x = parse_set(s, &names)?;
                let v = a.get(x);
                return Ok(lines(json!({"set": set_json(x, &names), "alpha": v}), cli, format!("α({}) = {v}\n", show_set(x, &names))));
            }
            let mut text = format!("α(E) = {}\n", a.get(m.ground()));
            let mut flats = Vec::new();
            for &fl in m.flats() {
                let v = a.get(fl);
                if v != 0 && fl != m.ground() {
                    text.push_str(&format!("α({}) = {v}\n", show_set(fl, &names)));
                    flats.push(json!({"set": set_json(fl, &names), "alpha": v}));
                }
            }
            Ok(lines(json!({"alpha_E": a.get(m.ground()), "nonzero_flats": flats}), cli, text))
        }
        Command::Strict { file } => {
            let f = load_matroid(file)?;
            let b = is_strict_gammoid(&f.matroid).map_err(domain)?;
            Ok(lines(json!({"strict_gammoid": b}), cli, format!("{}\n", if b { "yes" } else { "no" })))
        }
        Command::Transversal { file } => {
            let f = load_matroid(file)?;
            let b = is_transversal(&f.matroid).map_err(domain)?;
            Ok(lines(json!({"transversal": b}), cli, format!("{}\n", if b { "yes" } else { "no" })))
        }
        Command::Violations { file } => {
            let f = load_matroid(file)?;
            let names = names_of(&f);
            let v = alpha_violations(&f.matroid).map_err(domain)?;
            let text: String = v.iter().map(|&x| format!("{}\n", show_set(x, &names))).collect();
            Ok(lines(json!(v.iter().map(|&x| set_json(x, &names)).collect::<Vec<_>>()), cli, text))
        }
        Command::Gammoid { file } => {
            let f = load_matroid(file)?;
            Ok(lines(
                json!({"n": f.matroid.n(), "rank": f.matroid.rank_total(), "bases": f.matroid.bit_string(), "names": names_of(&f)}),
                cli,
                print_matroid(&f),
            ))
        }
        Command::Pivot { file, r, s } => {
            let rep = load_digraph(file)?;
            let find = |t: &str| {
                rep.names.iter().position(|n| n == t).ok_or_else(|| CliError::Input(format!("unknown vertex {t:?}")))
            };
            let (r, s) = (find(r)?, find(s)?);
            if !rep.targets.contains(s) || rep.targets.contains(r) {
                return Err(CliError::Domain("the pivot needs a target s and a non-target r".into()));
            }
            let d = rep.digraph.pivot(r, s).map_err(domain)?;
            let mut out = rep.clone();
            out.digraph = d;
            out.targets.remove(s);
            out.targets.insert(r);
            Ok(lines(digraph_json(&out), cli, render_digraph(cli, &out)))
        }
        Command::Standardize { file } => {
            let out = standard_representation(&load_digraph(file)?);
            Ok(lines(digraph_json(&out), cli, render_digraph(cli, &out)))
        }
        Command::Lift { file } => {
            let (out, lifts) = complete_lifting(&load_digraph(file)?);
            let mut text = render_digraph(cli, &out);
            if !cli.dot {
                for l in &lifts {
                    text.push_str(&format!("# lifted: {} -> {}\n", out.names[l.x], out.names[l.t]));
                }
            }
            let mut v = digraph_json(&out);
            v["lifts"] = json!(lifts.iter().map(|l| [out.names[l.x].clone(), out.names[l.t].clone()]).collect::<Vec<_>>());
            Ok(lines(v, cli, text))
        }
        Command::Represent { file, transversal, precision } => {
            let rep = load_digraph(file)?;
            let m = if *transversal {
                let family: Vec<Subset> = linkage_system(&rep.digraph, rep.targets).into_iter().map(|(_, a)| a).collect();
                randomized_transversal_matrix(rep.digraph.vertex_count(), &family, *precision, cli.seed)
            } else {
                represent_gammoid(&rep)
            };
            let csv = m.to_csv();
            Ok(lines(json!({"rows": m.n_rows(), "cols": m.n_cols(), "csv": csv}), cli, csv))
        }
        Command::Recognize { file, max_vertices, pipeline, timeout } => recognize(cli, file, *max_vertices, *pipeline, *timeout),
        Command::Pipeline { file, timeout, ingleton, extensions } => {
            let f = load_matroid(file)?;
            let budget = Budget { ingleton_max: *ingleton, extension_limit: *extensions, deadline: deadline(*timeout), ..Budget::default() };
            let run = auto_pipeline(&f.matroid, &budget);
            Ok(pipeline_output(cli, &run, true))
        }
        Command::Orient { file, circuits } => {
            if circuits.is_none() && is_dig(file) {
                let rep = load_digraph(file)?;
                if !rep.digraph.is_acyclic() {
                    return Ok(cyclic_signatures(cli, &rep));
                }
            }
            let (o, names) = orientation(file, circuits.as_deref())?;
            let report = o.check();
            let status = match report.failed() {
                None => "axioms: ok".to_string(),
                Some(a) => format!("axioms: violates {a}"),
            };
            let reps = o.circuit_representatives();
            let text = format!("{status}\n{}", print_signed_sets(&reps, &names));
            let v = json!({
                "axioms_ok": report.is_ok(),
                "violated": report.failed().map(|a| a.to_string()),
                "circuits": reps.iter().map(|c| c.display(&names).to_string()).collect::<Vec<_>>(),
            });
            Ok(lines(v, cli, text))
        }
        Command::Chromatic { file, circuits, max } => {
            let (o, _) = orientation(file, circuits.as_deref())?;
            let (text, v) = match chromatic_number(&o, *max) {
                Chromatic::Value(k) => (format!("{k}\n"), json!({"chromatic_number": k})),
                Chromatic::Unbounded => ("unbounded\n".to_string(), json!({"chromatic_number": null, "unbounded": true})),
                Chromatic::Exceeds(b) => (format!("more than {b}\n"), json!({"chromatic_number": null, "exceeds": b})),
            };
            Ok(lines(v, cli, text))
        }
        Command::Lpm { p, q } => {
            let pp = parse_path(p).map_err(|e| CliError::Input(e.to_string()))?;
            let qq = parse_path(q).map_err(|e| CliError::Input(e.to_string()))?;
            let a = presentation(&pp, &qq).map_err(domain)?;
            let m = lattice_path_matroid(&pp, &qq).map_err(domain)?;
            let shown: Vec<String> = a.iter().map(|s| s.to_string()).collect();
            let text = format!("{}\n{}", shown.join(", "), print_matroid(&MatroidFile { matroid: m.clone(), names: None }));
            Ok(lines(json!({"presentation": shown, "n": m.n(), "rank": m.rank_total(), "bases": m.bit_string()}), cli, text))
        }
        Command::Coline { file } => {
            let f = load_matroid(file)?;
            let names = names_of(&f);
            match quite_simple_coline(&f.matroid).map_err(domain)? {
                Some(c) => Ok(lines(
                    json!({"coline": set_json(c.coline, &names), "simple": c.simple, "multiple": c.multiple}),
                    cli,
                    format!("{} ({} simple, {} multiple copoints)\n", show_set(c.coline, &names), c.simple, c.multiple),
                )),
                None => Ok(lines(json!({"coline": null}), cli, "none\n".to_string())),
            }
        }
        Command::Fixtures { name, out } => {
            let list = match name {
                Some(n) => vec![fixtures::get(n).ok_or_else(|| CliError::Input(format!("no fixture named {n:?}")))?],
                None => fixtures::all(),
            };
            if let Some(dir) = out {
                std::fs::create_dir_all(dir).map_err(domain)?;
                for f in &list {
                    std::fs::write(dir.join(f.name), &f.text).map_err(domain)?;
                }
                return Ok(format!("wrote {} files to {}\n", list.len(), dir.display()));
            }
            if name.is_some() {
                return Ok(list[0].text.clone());
            }
            Ok(list.iter().map(|f| format!("{}\n", f.name)).collect())
        }
    }
}

fn orientation(file: &Path, circuits: Option<&Path>) -> Result<(OrientedMatroid, Vec<String>), CliError> {
    match circuits {
        Some(c) => {
            let f = load_matroid(file)?;
            let names = if f.names.is_some() { names_of(&f) } else { Vec::new() };
            let sets = parse_signed_sets(&read(c)?, &names).map_err(|e| CliError::Input(e.to_string()))?;
            let o = OrientedMatroid::from_circuits(&f.matroid, &sets).map_err(domain)?;
            Ok((o, names_of(&f)))
        }
        None if file.extension().is_some_and(|x| x == "circuits") => {
            let sets = parse_signed_sets(&read(file)?, &[]).map_err(|e| CliError::Input(e.to_string()))?;
            let n = sets.iter().filter_map(|c| c.support().iter().max()).max().map_or(0, |e| e + 1);
            let supports = sets.iter().map(|c| c.support()).collect();
            let m = matroid_with_circuits(n, &supports)
                .ok_or_else(|| CliError::Domain("the supports are not the circuits of a matroid".into()))?;
            let o = OrientedMatroid::from_circuits(&m, &with_negations(&sets)).map_err(domain)?;
            Ok((o, (1..=n).map(|i| i.to_string()).collect()))
        }
        None => {
            if !is_dig(file) {
                return Err(CliError::Domain("a .mtr input needs --circuits".into()));
            }
            let rep = load_digraph(file)?;
            let sig = ArcSignature::positive(&rep.digraph.canonical_arcs());
            let o = heavy_arc_orientation(&rep, &sig).map_err(domain)?;
            let names = rep.ground.iter().map(|v| rep.names[v].clone()).collect();
            Ok((o, names))
        }
    }
}

/// Heavy arc signatures of every circuit of a cyclic representation. They
/// need not form an orientation, so the axioms are checked on the family.
fn cyclic_signatures(cli: &Cli, rep: &Representation) -> String {
    let names: Vec<String> = rep.ground.iter().map(|v| rep.names[v].clone()).collect();
    let sig = ArcSignature::positive(&rep.digraph.arcs());
    let m = rep.gammoid();
    let fam: Vec<SignedSubset> = m.circuits().iter().map(|&c| circuit_signature(rep, c, &sig)).collect();
    let report = check_axioms(m.n(), &with_negations(&fam), &[]);
    let status = match report.failed() {
        None => "cyclic digraph; circuit signatures: ok".to_string(),
        Some(a) => format!("cyclic digraph; circuit signatures violate {a}"),
    };
    let v = json!({
        "axioms_ok": report.is_ok(),
        "violated": report.failed().map(|a| a.to_string()),
        "circuits": fam.iter().map(|c| c.display(&names).to_string()).collect::<Vec<_>>(),
    });
    lines(v, cli, format!("{status}\n{}", print_signed_sets(&fam, &names)))
}

fn verdict_word(v: &PipelineVerdict) -> &'static str {
    match v {
        PipelineVerdict::Gammoid(_) => "gammoid",
        PipelineVerdict::NotGammoid(_) => "not a gammoid",
        PipelineVerdict::Undecided(_) => "undecided",
    }
}

fn pipeline_output(cli: &Cli, run: &PipelineRun, with_log: bool) -> String {
    if cli.json {
        let tableau: Value = serde_json::from_str(&run.verdict.tableau().to_json()).expect("tableau JSON");
        let log: Vec<Value> = run.log.iter().map(|s| json!({"step": s.step, "subject": s.subject, "note": s.note})).collect();
        let v = json!({"verdict": verdict_word(&run.verdict), "log": log, "tableau": tableau});
        return format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"));
    }
    let mut text = String::new();
    if with_log {
        for s in &run.log {
            text.push_str(&format!("step {}: {}: {}\n", s.step, s.subject, s.note));
        }
    }
    text.push_str(verdict_word(&run.verdict));
    text.push('\n');
    text
}

fn recognize(cli: &Cli, file: &Path, max_vertices: Option<usize>, pipeline: bool, timeout: Option<f64>) -> Result<String, CliError> {
    let f = load_matroid(file)?;
    let m = &f.matroid;
    let stop = deadline(timeout);
    if pipeline || max_vertices.is_none() {
        let run = auto_pipeline(m, &Budget { deadline: stop, ..Budget::default() });
        if pipeline || run.verdict.is_gammoid().is_some() {
            return Ok(pipeline_output(cli, &run, false));
        }
    }
    let bound = vertex_bound(m);
    let k = max_vertices.unwrap_or(bound.min(MAX_VERTICES));
    let opts = BacktrackOptions { max_vertices: k, deadline: stop };
    let (verdict, stats) = backtrack(m, &opts, &mut |_| {}).map_err(domain)?;
    let (word, rep) = match &verdict {
        BacktrackVerdict::Gammoid(rep) => ("gammoid".to_string(), Some(rep)),
        BacktrackVerdict::NotGammoidWithin(k) if *k >= bound => ("not a gammoid".to_string(), None),
        BacktrackVerdict::NotGammoidWithin(k) => (format!("no representation on {k} vertices"), None),
        BacktrackVerdict::Interrupted => ("undecided".to_string(), None),
    };
    if cli.json {
        let v = json!({
            "verdict": word,
            "max_vertices": k,
            "vertex_bound": bound,
            "nodes": stats.nodes,
            "representation": rep.map(digraph_json),
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")));
    }
    let mut text = format!("{word}\n");
    if let Some(rep) = rep {
        text.push_str(&render_digraph(cli, rep));
    }
    Ok(text)
}
