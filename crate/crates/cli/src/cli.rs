//! Argument parsing and the six subcommands.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use berge_forge_core::bounds::{bound_table, CompositionPolicy, FormulaId, TableRow};
use berge_forge_core::constructions::{blowup_c5, double_one_side, triangle_hypergraph};
use berge_forge_core::decompose::{check_triangle_lemma, decompose, rainbow_tripartition, Decomposition};
use berge_forge_core::detect::{find, ForbiddenKind, ForbiddenSpec, Witness};
use berge_forge_core::search::{oracle_solve, solve_with, Budget, Extremal, Limits, Objective, SearchConfig, SearchProblem, Universe};
use berge_forge_core::{BipartiteGraph, Error as CoreError, Graph, TripleSystem};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{Catalog, CatalogEntry, ProblemKey, Recorded};
use crate::io::{extension, read_object, write_object, write_object_to};
use crate::verify::Verifier;
use crate::{CliError, Result};

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Usage = 1,
    Violation = 2,
    BudgetExhausted = 3,
}

#[derive(Parser)]
#[command(name = "berge-forge", version, about = "Exact small cases, bounds and checks for Berge-cycle Turán problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an extremal number by exhaustive search and record it in the catalog.
    Compute(ComputeArgs),
    /// Print a table of closed-form bounds (CSV, or JSON with --json).
    Bounds(BoundsArgs),
    /// Write a construction to a file (or stdout).
    Construct(ConstructArgs),
    /// Look for forbidden structures in a graph or triple system file.
    Detect(DetectArgs),
    /// Decompose a triple system, or tripartition a graph.
    Decompose(DecomposeArgs),
    /// Run the acceptance suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseKind {
    Graph,
    Bipartite,
    Triples,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveKind {
    Edges,
    Triangles,
}

#[derive(Args)]
struct EngineArgs {
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Depth at which the search tree is split into parallel tasks.
    #[arg(long, default_value_t = 8)]
    split_depth: usize,
    /// Leading decisions subject to symmetry pruning (default: 25 for graphs, 40 for triples).
    #[arg(long)]
    symmetry_depth: Option<usize>,
    /// Largest graph or bipartite universe accepted.
    #[arg(long, default_value_t = 10)]
    max_graph_vertices: usize,
    /// Largest triple universe accepted.
    #[arg(long, default_value_t = 8)]
    max_triple_vertices: usize,
}

impl EngineArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            limits: Limits { max_graph_vertices: self.max_graph_vertices, max_triple_vertices: self.max_triple_vertices },
            threads: self.threads,
            split_depth: self.split_depth,
            symmetry_depth: self.symmetry_depth,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    universe: UniverseKind,
    /// Vertex count (right part size for bipartite universes).
    #[arg(long)]
    n: usize,
    /// Left part size of a bipartite universe (default: n).
    #[arg(long)]
    m: Option<usize>,
    /// Forbidden structure, e.g. cycle=4, cycles-up-to=4, path=4, theta=4, berge=3, berge-up-to=5. Repeatable.
    #[arg(long = "forbid", required = true)]
    forbid: Vec<ForbiddenSpec>,
    #[arg(long, value_enum, default_value = "edges")]
    objective: ObjectiveKind,
    /// Only linear triple systems.
    #[arg(long)]
    linear: bool,
    /// Stop after this many search nodes.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Stop after this many seconds.
    #[arg(long)]
    max_time: Option<f64>,
    #[command(flatten)]
    engine: EngineArgs,
    /// Catalog file (default: $BERGE_FORGE_CATALOG, else ./berge-forge-catalog.jsonl).
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Witness file (default: beside the catalog, named by fingerprint).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Search again even if the catalog holds an optimal answer.
    #[arg(long)]
    force: bool,
    /// Use brute-force enumeration instead of branch and bound.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
}

/// Comma-separated numbers and inclusive ranges, e.g. `2,4-6`.
#[derive(Clone, Debug)]
struct NumberList(Vec<usize>);

fn number_list(s: &str) -> Result<NumberList, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a number: {t:?}"));
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(format!("empty range {part:?}"));
                }
                out.extend(a..=b);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(NumberList(out))
}

#[derive(Args)]
struct BoundsArgs {
    /// Formula id (repeatable; default: every formula).
    #[arg(long = "formula")]
    formulas: Vec<FormulaId>,
    /// Formula parameter (k, or the order for theta and path bounds), e.g. 2 or 2-4.
    #[arg(long = "k", visible_alias = "l", default_value = "2", value_parser = number_list)]
    params: NumberList,
    /// Host sizes, e.g. 16 or 10,20,30 or 5-9.
    #[arg(long, value_parser = number_list)]
    n: NumberList,
    /// Leave inner terms empty instead of bounding them by other formulas.
    #[arg(long)]
    no_compose: bool,
    /// Use optimal catalog values as exact inner terms.
    #[arg(long)]
    from_catalog: bool,
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    /// Balanced blow-up of C5 (--n, a multiple of 5).
    BlowupC5,
    /// The cycle C_n (--n).
    Cycle,
    /// The path on n vertices (--n).
    Path,
    /// The complete graph K_n (--n).
    Complete,
    /// Bipartite even cycle (--len).
    EvenCycle,
    /// All triples on n vertices (--n).
    CompleteTriples,
    /// Triangles of a graph (--in).
    TriangleHypergraph,
    /// Doubles the right part of a bipartite graph (--in, or --len for an even cycle).
    DoubleOneSide,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: ConstructKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    len: Option<usize>,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DetectArgs {
    /// Graph, bipartite or triple system file. Bipartite right vertices are reported shifted by m.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    cycle: Vec<usize>,
    #[arg(long)]
    cycles_up_to: Vec<usize>,
    #[arg(long)]
    path: Vec<usize>,
    /// Theta graph of order at least this.
    #[arg(long)]
    theta: Vec<usize>,
    #[arg(long)]
    berge: Vec<usize>,
    #[arg(long)]
    berge_up_to: Vec<usize>,
    /// Any structure in kind=parameter form.
    #[arg(long = "forbid")]
    forbid: Vec<ForbiddenSpec>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Triple system (decomposition) or graph (tripartition) file.
    #[arg(long = "in")]
    input: PathBuf,
    /// For graphs: also check the triangle-count lemma for C_len.
    #[arg(long)]
    len: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for every random generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run only these criteria (repeatable).
    #[arg(long = "criterion")]
    criteria: Vec<u8>,
    #[command(flatten)]
    engine: EngineArgs,
    #[arg(long)]
    json: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Usage } else { Exit::Ok };
        }
    };
    let outcome = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Bounds(a) => bounds(a),
        Command::Construct(a) => construct(a),
        Command::Detect(a) => detect(a),
        Command::Decompose(a) => decompose_cmd(a),
        Command::Verify(a) => verify(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Core(CoreError::GuaranteeViolated(_) | CoreError::Precondition { .. }) => Exit::Violation,
                _ => Exit::Usage,
            }
        }
    }
}

fn compute(a: ComputeArgs) -> Result<Exit> {
    let universe = match a.universe {
        UniverseKind::Graph => Universe::Graph { n: a.n },
        UniverseKind::Bipartite => Universe::Bipartite { m: a.m.unwrap_or(a.n), n: a.n },
        UniverseKind::Triples => Universe::Triples { n: a.n },
    };
    if a.m.is_some() && !matches!(a.universe, UniverseKind::Bipartite) {
        return Err(CliError::Usage("--m only applies to bipartite universes".into()));
    }
    let objective = match a.objective {
        ObjectiveKind::Edges => Objective::Edges,
        ObjectiveKind::Triangles => Objective::Triangles,
    };
    let max_time = match a.max_time {
        Some(s) if !(s.is_finite() && s > 0.0) => return Err(CliError::Usage("--max-time must be a positive number of seconds".into())),
        s => s.map(Duration::from_secs_f64),
    };
    let problem = SearchProblem::new(universe, a.forbid.clone(), objective)
        .linear(a.linear)
        .with_budget(Budget { max_nodes: a.max_nodes, max_time });
    problem.validate()?;

    let catalog = Catalog::locate(a.catalog.as_deref());
    let key = ProblemKey::of(&problem);
    let fingerprint = key.fingerprint();
    let previous = catalog.find(&fingerprint)?;
    let label = problem.quantity().map_or_else(|| describe(&key), |q| q.to_string());

    if let Some(entry) = previous.as_ref().filter(|e| e.optimal && !a.force) {
        if let Some(out) = &a.out {
            fs::copy(&entry.witness, out).map_err(|e| CliError::io(Path::new(&entry.witness), e))?;
        }
        report_compute(&a, &label, entry, true, None);
        return Ok(Exit::Ok);
    }

    let result = if a.oracle { oracle_solve(&problem)? } else { solve_with(&problem, &a.engine.config())? };
    result.verify(&problem)?;
    let witness = a
        .out
        .clone()
        .unwrap_or_else(|| catalog.witness_dir().join(format!("{}.{}", &fingerprint[..16], extension(&result.witness))));
    write_object_to(&witness, &result.witness)?;
    let entry = CatalogEntry::new(&problem, &result, &witness);
    // a budget-limited run never overwrites a better or optimal answer
    let keep_old = previous.as_ref().is_some_and(|p| !result.optimal && (p.optimal || p.value >= result.value));
    let recorded = if keep_old { Recorded::Unchanged } else { catalog.record(&entry)? };
    report_compute(&a, &label, &entry, false, Some((recorded, result.wall_time)));
    Ok(if result.optimal { Exit::Ok } else { Exit::BudgetExhausted })
}

fn describe(key: &ProblemKey) -> String {
    let size = key.m.map_or(format!("{}", key.n), |m| format!("{m}+{}", key.n));
    let linear = if key.linear { " linear" } else { "" };
    format!("max {} in{linear} {} {size} avoiding {}", key.objective, key.universe, key.forbidden.join(", "))
}

fn report_compute(a: &ComputeArgs, label: &str, e: &CatalogEntry, cached: bool, run: Option<(Recorded, Option<Duration>)>) {
    if a.json {
        let out = json!({
            "quantity": label,
            "value": e.value,
            "optimal": e.optimal,
            "nodes_explored": e.nodes_explored,
            "fingerprint": e.fingerprint,
            "witness": e.witness,
            "cached": cached,
            "seconds": run.and_then(|r| r.1).map(|d| d.as_secs_f64()),
        });
        println!("{out}");
        return;
    }
    println!("{}", e.value);
    let status = if e.optimal { "optimal" } else { "lower bound only: budget exhausted" };
    match run {
        None => eprintln!("{label} = {} ({status}); from catalog, witness {}", e.value, e.witness),
        Some((recorded, time)) => {
            let time = time.map_or(String::new(), |d| format!(", {:.3} s", d.as_secs_f64()));
            let note = match recorded {
                Recorded::Appended => "added to catalog",
                Recorded::Replaced => "catalog entry updated",
                Recorded::Unchanged => "catalog unchanged",
            };
            eprintln!("{label} = {} ({status}, {} nodes{time}); witness {}; {note}", e.value, e.nodes_explored, e.witness);
        }
    }
}

fn bounds(a: BoundsArgs) -> Result<Exit> {
    let formulas = if a.formulas.is_empty() { FormulaId::ALL.to_vec() } else { a.formulas.clone() };
    let mut policy = if a.no_compose { CompositionPolicy::default() } else { CompositionPolicy::formulas() };
    if a.from_catalog {
        for entry in Catalog::locate(a.catalog.as_deref()).load()? {
            if let (true, Some(q)) = (entry.optimal, entry.problem.to_problem()?.quantity()) {
                policy.exact.insert(q, entry.value);
            }
        }
    }
    let rows = bound_table(&formulas, &a.params.0, &a.n.0, &policy);
    if rows.is_empty() {
        return Err(CliError::Usage("no formula accepts the given parameters".into()));
    }
    if a.json {
        let out: Vec<_> = rows.iter().map(row_json).collect();
        println!("{}", serde_json::to_string_pretty(&out).expect("json values serialize"));
        return Ok(Exit::Ok);
    }
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    let csv_err = |e: csv::Error| CliError::io(Path::new("<stdout>"), e.into());
    w.write_record(["formula", "parameter", "n", "value", "floor", "exact", "asymptotic", "evaluated", "note"]).map_err(csv_err)?;
    for r in &rows {
        let param = r.formula.parameter.map_or(String::new(), |p| p.to_string());
        let floor = if r.evaluated { r.floor.to_string() } else { String::new() };
        w.write_record([
            r.formula.id.name(),
            &param,
            &r.n.to_string(),
            &r.display_value(),
            &floor,
            &r.exact.to_string(),
            &r.asymptotic.to_string(),
            &r.evaluated.to_string(),
            &r.note,
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(|e| CliError::io(Path::new("<stdout>"), e))?;
    Ok(Exit::Ok)
}

fn row_json(r: &TableRow) -> serde_json::Value {
    json!({
        "formula": r.formula.id.name(),
        "parameter": r.formula.parameter,
        "n": r.n,
        "value": if r.evaluated { Some(r.value) } else { None },
        "display": r.display_value(),
        "floor": if r.evaluated { Some(r.floor as i64) } else { None },
        "exact": r.exact,
        "asymptotic": r.asymptotic,
        "evaluated": r.evaluated,
        "note": r.note,
    })
}

fn construct(a: ConstructArgs) -> Result<Exit> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("this construction needs --{flag}")));
    let object = match a.kind {
        ConstructKind::BlowupC5 => Extremal::Graph(blowup_c5(need(a.n, "n")?)?),
        ConstructKind::Cycle => {
            let n = need(a.n, "n")?;
            if n < 3 {
                return Err(CliError::Usage("a cycle needs at least 3 vertices".into()));
            }
            Extremal::Graph(Graph::cycle(n))
        }
        ConstructKind::Path => Extremal::Graph(Graph::path(need(a.n, "n")?)),
        ConstructKind::Complete => Extremal::Graph(Graph::complete(need(a.n, "n")?)),
        ConstructKind::EvenCycle => Extremal::Bipartite(BipartiteGraph::even_cycle(need(a.len, "len")?)?),
        ConstructKind::CompleteTriples => Extremal::Triples(TripleSystem::complete(need(a.n, "n")?)),
        ConstructKind::TriangleHypergraph => {
            let input = a.input.as_deref().ok_or_else(|| CliError::Usage("triangle-hypergraph needs --in".into()))?;
            match read_object(input)?.as_graph() {
                Some(g) => Extremal::Triples(triangle_hypergraph(&g)),
                None => return Err(CliError::Usage("triangle-hypergraph needs a graph".into())),
            }
        }
        ConstructKind::DoubleOneSide => {
            let b = match (&a.input, a.len) {
                (Some(p), _) => match read_object(p)? {
                    Extremal::Bipartite(b) => b,
                    _ => return Err(CliError::Usage("double-one-side needs a bipartite graph".into())),
                },
                (None, Some(len)) => BipartiteGraph::even_cycle(len)?,
                (None, None) => return Err(CliError::Usage("double-one-side needs --in or --len".into())),
            };
            Extremal::Triples(double_one_side(&b))
        }
    };
    match &a.out {
        Some(path) => {
            write_object_to(path, &object)?;
            eprintln!("wrote {} ({} edges)", path.display(), object.edge_count());
        }
        None => print!("{}", write_object(&object)),
    }
    Ok(Exit::Ok)
}

fn detect(a: DetectArgs) -> Result<Exit> {
    let mut specs = Vec::new();
    let flags = [
        (ForbiddenKind::Cycle, &a.cycle),
        (ForbiddenKind::CyclesUpTo, &a.cycles_up_to),
        (ForbiddenKind::Path, &a.path),
        (ForbiddenKind::ThetaAtLeast, &a.theta),
        (ForbiddenKind::Berge, &a.berge),
        (ForbiddenKind::BergeUpTo, &a.berge_up_to),
    ];
    for (kind, values) in flags {
        for &v in values {
            specs.push(ForbiddenSpec::new(kind, v)?);
        }
    }
    specs.extend(a.forbid.iter().copied());
    if specs.is_empty() {
        return Err(CliError::Usage("name at least one structure, e.g. --cycle 4 or --berge 3".into()));
    }
    let object = read_object(&a.input)?;
    let mut results = Vec::new();
    for spec in &specs {
        results.push((spec, find(object.host(), spec)?));
    }
    if a.json {
        let out: Vec<_> = results
            .iter()
            .map(|(s, w)| json!({"structure": s.to_string(), "free": w.is_none(), "witness": w.as_ref().map(|w| witness_json(w, &object))}))
            .collect();
        println!("{}", serde_json::to_string_pretty(&out).expect("json values serialize"));
        return Ok(Exit::Ok);
    }
    for (spec, w) in &results {
        let line = w.as_ref().map_or_else(|| "FREE".to_string(), |w| format!("FOUND {}", witness_text(w, &object)));
        if results.len() == 1 {
            println!("{line}");
        } else {
            println!("{spec}: {line}");
        }
    }
    Ok(Exit::Ok)
}

fn joined(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn berge_edges(object: &Extremal, indices: &[usize]) -> Vec<[usize; 3]> {
    match object {
        Extremal::Triples(h) => indices.iter().map(|&i| h.edge(i)).collect(),
        _ => Vec::new(),
    }
}

fn witness_text(w: &Witness, object: &Extremal) -> String {
    match w {
        Witness::Cycle(c) => format!("cycle {}", joined(c)),
        Witness::Path(p) => format!("path {}", joined(p)),
        Witness::Theta(t) => format!("theta cycle {} chord {} {}", joined(&t.cycle), t.chord.0, t.chord.1),
        Witness::Berge(b) => {
            let edges: Vec<String> = berge_edges(object, &b.hyperedges).iter().map(|[x, y, z]| format!("{{{x} {y} {z}}}")).collect();
            format!("berge core {} edges {}", joined(&b.core), edges.join(" "))
        }
    }
}

fn witness_json(w: &Witness, object: &Extremal) -> serde_json::Value {
    match w {
        Witness::Cycle(c) => json!({"cycle": c}),
        Witness::Path(p) => json!({"path": p}),
        Witness::Theta(t) => json!({"cycle": t.cycle, "chord": [t.chord.0, t.chord.1]}),
        Witness::Berge(b) => json!({"core": b.core, "edges": berge_edges(object, &b.hyperedges)}),
    }
}

fn decompose_cmd(a: DecomposeArgs) -> Result<Exit> {
    match read_object(&a.input)? {
        Extremal::Triples(h) => {
            if a.len.is_some() {
                return Err(CliError::Usage("--len applies to graph inputs".into()));
            }
            let d = decompose(&h)?;
            if a.json {
                println!("{}", serde_json::to_string_pretty(&decomposition_json(&d)).expect("json values serialize"));
            } else {
                print!("{}", decomposition_text(&d));
            }
            Ok(Exit::Ok)
        }
        object => {
            let g = object.as_graph().expect("graph inputs");
            tripartition_report(&g, a.len, a.json)
        }
    }
}

fn decomposition_text(d: &Decomposition) -> String {
    let h = &d.source;
    let list = |v: &[usize]| v.iter().map(|&i| format!("{:?}", h.edge(i))).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    let mut line = |t: String| {
        s.push_str(&t);
        s.push('\n');
    };
    line(format!("H: {} triples on {} vertices", h.len(), h.n()));
    line(format!("G2 (pairs covered at least twice): {} edges", d.g2.edge_count()));
    line(format!("h1 (with a private pair): {}", d.h1.len()));
    line(format!("h2 (no private pair): {}", d.h2.len()));
    line(format!("coloring: {}", d.coloring.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")));
    line(format!("h3 (split by the coloring): {}", d.h3.len()));
    line(format!("h4: {}  {}", d.h4.len(), list(&d.h4)));
    line(format!("h5: {}  {}", d.h5.len(), list(&d.h5)));
    line(format!("h6 (linear): {}  {}", d.h6.len(), list(&d.h6)));
    let g4: Vec<String> = d.g4.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    line(format!("G4: {} edges  {}", d.g4.edge_count(), g4.join(" ")));
    let ok = |b: bool| if b { "ok" } else { "VIOLATED" };
    line(format!("|h1| <= 4|h3|: {} <= {} {}", d.h1.len(), 4 * d.h3.len(), ok(d.h1.len() <= 4 * d.h3.len())));
    line(format!("|h5| <= 3|h6|: {} <= {} {}", d.h5.len(), 3 * d.h6.len(), ok(d.h5.len() <= 3 * d.h6.len())));
    let total = d.h2.len() + 4 * d.h4.len() + 12 * d.h6.len();
    line(format!("|H| <= |h2| + 4|h4| + 12|h6|: {} <= {} {}", h.len(), total, ok(h.len() <= total)));
    s
}

fn decomposition_json(d: &Decomposition) -> serde_json::Value {
    let h = &d.source;
    let triples = |v: &[usize]| v.iter().map(|&i| h.edge(i)).collect::<Vec<_>>();
    let private: Vec<_> = d.private_pair.iter().map(|(&i, p)| json!({"edge": h.edge(i), "pair": [p.lo(), p.hi()]})).collect();
    json!({
        "n": h.n(),
        "edges": h.len(),
        "g2": d.g2.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        "h1": triples(&d.h1),
        "h2": triples(&d.h2),
        "private_pairs": private,
        "coloring": d.coloring,
        "h3": triples(&d.h3),
        "h4": triples(&d.h4),
        "h5": triples(&d.h5),
        "h6": triples(&d.h6),
        "g4": d.g4.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

fn tripartition_report(g: &Graph, len: Option<usize>, as_json: bool) -> Result<Exit> {
    let part = rainbow_tripartition(g)?;
    let t = g.triangle_count();
    let rainbow_ok = 9 * part.rainbow_count >= 2 * t;
    let lemma = match len {
        None => None,
        Some(l) => match check_triangle_lemma(g, l) {
            Ok(holds) => Some((l, Some(holds))),
            Err(CoreError::NotCycleFree(_)) => Some((l, None)),
            Err(e) => return Err(e.into()),
        },
    };
    if as_json {
        let out = json!({
            "classes": part.classes,
            "sizes": [part.class_size(1), part.class_size(2), part.class_size(3)],
            "triangles": t,
            "rainbow": part.rainbow_count,
            "rainbow_bound_holds": rainbow_ok,
            "edges": g.edge_count(),
            "lemma": lemma.map(|(l, h)| json!({"len": l, "cycle_free": h.is_some(), "holds": h})),
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("json values serialize"));
    } else {
        println!("classes: {}", part.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        println!("sizes: {} {} {}", part.class_size(1), part.class_size(2), part.class_size(3));
        let mark = if rainbow_ok { "ok" } else { "VIOLATED" };
        println!("triangles: {t}, rainbow: {}, 9 rainbow >= 2 t: {mark}", part.rainbow_count);
        match lemma {
            None => {}
            Some((l, None)) => println!("triangle lemma: graph contains C{l}, not applicable"),
            Some((l, Some(h))) => {
                let mark = if h { "ok" } else { "VIOLATED" };
                println!("triangle lemma for C{l}: 3 * {t} <= {} * {}: {mark}", l - 3, g.edge_count());
            }
        }
    }
    let lemma_ok = !matches!(lemma, Some((_, Some(false))));
    Ok(if rainbow_ok && lemma_ok { Exit::Ok } else { Exit::Violation })
}

fn verify(a: VerifyArgs) -> Result<Exit> {
    let mut v = Verifier::new(a.seed).with_config(a.engine.config());
    let ids: Vec<u8> = if a.criteria.is_empty() { crate::verify::CRITERIA.iter().map(|c| c.0).collect() } else { a.criteria.clone() };
    let mut failed = false;
    let mut reports = Vec::new();
    for id in ids {
        let r = v.run(id);
        failed |= !r.passed;
        if a.json {
            reports.push(r);
        } else {
            println!("{r}");
            let _ = std::io::stdout().flush();
        }
    }
    if a.json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    }
    Ok(if failed { Exit::Violation } else { Exit::Ok })
}
