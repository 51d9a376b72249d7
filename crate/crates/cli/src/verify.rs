//! The acceptance suite behind `berge-forge verify`.
//!
//! Ten criteria, each reported on one line. Random inputs come from
//! [`crate::fuzz`] streams derived from a single seed, so two runs with the
//! same seed check exactly the same cases.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use berge_forge_core::bounds::{evaluate, BaseEstimate, BoundFormula, Direction, FormulaId, Quantity};
use berge_forge_core::constructions::{blowup_c5, double_one_side, triangle_hypergraph};
use berge_forge_core::decompose::{build_g2, check_triangle_lemma, decompose, rainbow_tripartition, Decomposition};
use berge_forge_core::detect::{count_cycles, find_cycle, is_free, ForbiddenSpec, Host};
use berge_forge_core::search::{oracle_solve, solve_with, Objective, SearchConfig, SearchProblem, SearchResult, Universe};
use berge_forge_core::{BipartiteGraph, Graph, Result, TripleSystem};
use num_rational::Ratio;
use rand::Rng;
use serde::Serialize;

use crate::fuzz::{self, grow_graph, grow_triples, random_graph, random_triples};

/// Criterion numbers and short names.
pub const CRITERIA: [(u8, &str); 10] = [
    (1, "oracle equivalence"),
    (2, "exact small values"),
    (3, "pair-shadow graph of Berge-free systems"),
    (4, "decomposition guarantees"),
    (5, "triangle lemma on search witnesses"),
    (6, "rainbow tripartition"),
    (7, "construction freeness"),
    (8, "golden bound values"),
    (9, "bounds against exact values"),
    (10, "C5 blow-up counts"),
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seed: u64,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {}: {} (seed {}, {:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion,
            self.name,
            self.detail,
            self.seed,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Counts checks and keeps the first few violations.
#[derive(Default)]
struct Tally {
    checked: usize,
    violations: usize,
    first: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.violations += 1;
        if self.first.len() < 3 {
            self.first.push(what);
        }
    }

    fn ok(&self) -> bool {
        self.violations == 0
    }

    fn summary(&self, unit: &str) -> String {
        let mut s = format!("{} {unit} checked, {} violations", self.checked, self.violations);
        if !self.first.is_empty() {
            s.push_str(&format!("; first: {}", self.first.join(" | ")));
        }
        s
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

/// Runs criteria and remembers every search result for the criteria that
/// inspect earlier runs (5 and 9).
pub struct Verifier {
    seed: u64,
    config: SearchConfig,
    runs: Vec<(SearchProblem, SearchResult)>,
}

const ORACLE_LIMIT: Duration = Duration::from_secs(300);
const EXACT_LIMIT: Duration = Duration::from_secs(60);

impl Verifier {
    pub fn new(seed: u64) -> Self {
        Verifier { seed, config: SearchConfig::default(), runs: Vec::new() }
    }

    pub fn with_config(mut self, config: SearchConfig) -> Self {
        self.config = config;
        self
    }

    pub fn run_all(&mut self) -> Vec<Report> {
        CRITERIA.iter().map(|&(id, _)| self.run(id)).collect()
    }

    /// Runs one criterion. Unknown numbers are reported as failures.
    pub fn run(&mut self, id: u8) -> Report {
        let start = Instant::now();
        let name = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown criterion", |c| c.1);
        let outcome = match id {
            1 => self.oracle_grid(),
            2 => self.exact_values(),
            3 => self.shadow_fuzz(),
            4 => self.decomposition_fuzz(),
            5 => self.triangle_lemma(),
            6 => self.tripartitions(),
            7 => self.constructions(),
            8 => golden_bounds(),
            9 => self.bound_consistency(),
            10 => blowup_counts(),
            _ => Ok(Outcome { passed: false, detail: format!("no criterion {id}") }),
        };
        let outcome = outcome.unwrap_or_else(|e| Outcome { passed: false, detail: format!("error: {e}") });
        Report { criterion: id, name, passed: outcome.passed, detail: outcome.detail, seed: self.seed, elapsed: start.elapsed() }
    }

    fn solve(&mut self, p: SearchProblem) -> Result<SearchResult> {
        let r = solve_with(&p, &self.config)?;
        self.runs.push((p, r.clone()));
        Ok(r)
    }

    fn oracle_grid(&mut self) -> Result<Outcome> {
        let start = Instant::now();
        let specs = [
            ForbiddenSpec::cycle(3),
            ForbiddenSpec::cycle(4),
            ForbiddenSpec::cycle(5),
            ForbiddenSpec::cycles_up_to(4),
            ForbiddenSpec::path(4),
            ForbiddenSpec::theta_at_least(4),
        ];
        let mut grid = Vec::new();
        for n in 1..=6 {
            for s in specs {
                grid.push(SearchProblem::new(Universe::Graph { n }, vec![s], Objective::Edges));
            }
            for len in [4, 5] {
                grid.push(SearchProblem::new(Universe::Graph { n }, vec![ForbiddenSpec::cycle(len)], Objective::Triangles));
            }
        }
        for m in 1..=3 {
            for n in 1..=4 {
                for s in specs {
                    grid.push(SearchProblem::new(Universe::Bipartite { m, n }, vec![s], Objective::Edges));
                }
            }
        }
        for n in 3..=5 {
            let t = Universe::Triples { n };
            grid.push(SearchProblem::new(t, vec![ForbiddenSpec::berge(3)], Objective::Edges));
            grid.push(SearchProblem::new(t, vec![ForbiddenSpec::berge(4)], Objective::Edges));
            grid.push(SearchProblem::new(t, vec![ForbiddenSpec::berge(5)], Objective::Edges).linear(true));
        }
        let mut tally = Tally::default();
        for p in grid {
            let slow = oracle_solve(&p)?;
            let fast = self.solve(p.clone())?;
            let witness_ok = fast.verify(&p).is_ok();
            tally.check(fast.optimal && witness_ok && fast.value == slow.value, || {
                format!("{p:?}: search {} (optimal {}), oracle {}", fast.value, fast.optimal, slow.value)
            });
        }
        let elapsed = start.elapsed();
        Ok(Outcome {
            passed: tally.ok() && elapsed < ORACLE_LIMIT,
            detail: format!("{}, {:.1} s of {} s", tally.summary("problems"), elapsed.as_secs_f64(), ORACLE_LIMIT.as_secs()),
        })
    }

    fn exact_values(&mut self) -> Result<Outcome> {
        let start = Instant::now();
        let c4 = vec![ForbiddenSpec::cycle(4)];
        let ex5 = SearchProblem::new(Universe::Graph { n: 5 }, c4.clone(), Objective::Edges);
        let bip = SearchProblem::new(Universe::Bipartite { m: 3, n: 3 }, c4, Objective::Edges);
        let t5 = SearchProblem::new(Universe::Graph { n: 5 }, vec![ForbiddenSpec::cycle(5)], Objective::Triangles);
        let ex5_oracle = oracle_solve(&ex5)?.value;
        let t5_oracle = oracle_solve(&t5)?.value;
        let cases = [(ex5, ex5_oracle, "ex(5, C4)"), (bip, 6, "ex(3, 3, C4)"), (t5, 4, "t5(5)")];
        let mut tally = Tally::default();
        let mut found = Vec::new();
        for (p, want, name) in cases {
            let r = self.solve(p.clone())?;
            let ok = r.optimal && r.value == want && r.verify(&p).is_ok();
            tally.check(ok, || format!("{name} = {} (optimal {}), want {want}", r.value, r.optimal));
            found.push(format!("{name} = {}", r.value));
        }
        tally.check(t5_oracle == 4, || format!("oracle t5(5) = {t5_oracle}, want 4"));
        let elapsed = start.elapsed();
        Ok(Outcome {
            passed: tally.ok() && elapsed < EXACT_LIMIT,
            detail: format!("{}; {}; oracle ex(5, C4) = {ex5_oracle}", found.join(", "), tally.summary("values")),
        })
    }

    fn shadow_fuzz(&mut self) -> Result<Outcome> {
        const PER_CELL: usize = 1000;
        let mut tally = Tally::default();
        let mut attempts = 0usize;
        let mut nonempty = 0usize;
        for len in 3..=5 {
            for n in 6..=9 {
                let mut rng = fuzz::rng(self.seed, 3 << 32 | (len as u64) << 8 | n as u64);
                let spec = ForbiddenSpec::berge(len);
                let mut accepted = 0;
                while accepted < PER_CELL {
                    attempts += 1;
                    let m = rng.gen_range(1..=2 * n);
                    // alternate uniform systems with greedily grown free ones
                    let h = if attempts % 2 == 0 {
                        random_triples(&mut rng, n, m)
                    } else {
                        grow_triples(&mut rng, n, m, |h| is_free(Host::Triples(h), &spec))?
                    };
                    if !is_free(Host::Triples(&h), &spec)? {
                        continue;
                    }
                    accepted += 1;
                    let g2 = build_g2(&h);
                    nonempty += usize::from(g2.edge_count() > 0);
                    let cycle = find_cycle(&g2, len)?;
                    tally.check(cycle.is_none(), || format!("n={n}, len={len}: G2 of {h:?} has C{len} {cycle:?}"));
                }
            }
        }
        Ok(Outcome {
            passed: tally.ok(),
            detail: format!("{} ({attempts} generated, {nonempty} with nonempty G2)", tally.summary("Berge-free systems")),
        })
    }

    fn decomposition_fuzz(&mut self) -> Result<Outcome> {
        const SYSTEMS: usize = 1000;
        let mut chain = Tally::default();
        let mut rng = fuzz::rng(self.seed, 4 << 32);
        for _ in 0..SYSTEMS {
            let n = rng.gen_range(3..=9);
            let m = rng.gen_range(0..=(4 * n).min(n * (n - 1) * (n - 2) / 6));
            let h = random_triples(&mut rng, n, m);
            match decompose(&h) {
                Ok(d) => {
                    let problems = chain_problems(&d);
                    chain.check(problems.is_empty(), || format!("{h:?}: {}", problems.join(", ")));
                }
                Err(e) => chain.check(false, || format!("{h:?}: {e}")),
            }
        }

        let mut g4 = Tally::default();
        let mut rng = fuzz::rng(self.seed, 4 << 32 | 1);
        let mut attempts = 0usize;
        let mut with_g4 = 0usize;
        while g4.checked < SYSTEMS {
            attempts += 1;
            let n = rng.gen_range(5..=9);
            let m = rng.gen_range(1..=2 * n);
            let c5 = ForbiddenSpec::berge(5);
            let h = if attempts % 2 == 0 {
                random_triples(&mut rng, n, m)
            } else {
                grow_triples(&mut rng, n, m, |h| is_free(Host::Triples(h), &c5))?
            };
            if !is_free(Host::Triples(&h), &c5)? {
                continue;
            }
            match decompose(&h) {
                Ok(d) => {
                    with_g4 += usize::from(d.g4.edge_count() > 0);
                    let c = find_cycle(&d.g4, 4)?;
                    g4.check(c.is_none(), || format!("{h:?}: G4 has C4 {c:?}"));
                }
                Err(e) => g4.check(false, || format!("{h:?}: {e}")),
            }
        }
        Ok(Outcome {
            passed: chain.ok() && g4.ok(),
            detail: format!(
                "chain: {}; G4: {} ({attempts} generated, {with_g4} with nonempty G4)",
                chain.summary("systems"),
                g4.summary("Berge-C5-free systems")
            ),
        })
    }

    fn triangle_lemma(&mut self) -> Result<Outcome> {
        for len in 4..=6 {
            for n in 4..=8 {
                let spec = vec![ForbiddenSpec::cycle(len)];
                self.solve(SearchProblem::new(Universe::Graph { n }, spec.clone(), Objective::Edges))?;
                self.solve(SearchProblem::new(Universe::Graph { n }, spec, Objective::Triangles))?;
            }
        }
        let mut tally = Tally::default();
        for (_, r) in &self.runs {
            let Some(g) = r.witness.as_graph() else { continue };
            for len in 4..=6 {
                if !is_free(Host::Graph(&g), &ForbiddenSpec::cycle(len))? {
                    continue;
                }
                let (t, e) = (g.triangle_count() as i128, g.edge_count() as i128);
                let exact = Ratio::from_integer(t) <= Ratio::new((len as i128 - 3) * e, 3);
                let lib = check_triangle_lemma(&g, len)?;
                tally.check(exact && lib, || format!("C{len}-free witness with t = {t}, e = {e}"));
            }
        }
        Ok(Outcome {
            passed: tally.ok() && tally.checked > 0,
            detail: format!("{} from {} search runs", tally.summary("witness/length pairs"), self.runs.len()),
        })
    }

    fn tripartitions(&mut self) -> Result<Outcome> {
        let mut rng = fuzz::rng(self.seed, 6 << 32);
        let mut tally = Tally::default();
        let mut triangles = 0usize;
        for _ in 0..200 {
            let n = rng.gen_range(3..=30);
            let p = rng.gen_range(0.05..0.95);
            let g = random_graph(&mut rng, n, p);
            let t = g.triangle_count();
            triangles += t;
            match rainbow_tripartition(&g) {
                Ok(part) => {
                    let sizes_ok = (1..=3u8).all(|i| part.class_size(i) == (n + i as usize - 1) / 3);
                    let rainbow = g
                        .triangle_list()
                        .iter()
                        .filter(|[a, b, c]| {
                            let (x, y, z) = (part.classes[*a], part.classes[*b], part.classes[*c]);
                            x != y && y != z && x != z
                        })
                        .count();
                    let bound_ok = Ratio::from_integer(rainbow as i128) >= Ratio::new(2 * t as i128, 9);
                    tally.check(sizes_ok && bound_ok && rainbow == part.rainbow_count, || {
                        format!("n={n}: sizes ok {sizes_ok}, rainbow {rainbow} (reported {}), t = {t}", part.rainbow_count)
                    });
                }
                Err(e) => tally.check(false, || format!("n={n}: {e}")),
            }
        }
        Ok(Outcome { passed: tally.ok(), detail: format!("{} ({triangles} triangles in total)", tally.summary("graphs")) })
    }

    fn constructions(&mut self) -> Result<Outcome> {
        let mut tally = Tally::default();
        let c6 = double_one_side(&BipartiteGraph::even_cycle(6)?);
        tally.check(is_free(Host::Triples(&c6), &ForbiddenSpec::berge(4))?, || "doubled C6 has a Berge C4".into());
        let c10 = double_one_side(&BipartiteGraph::even_cycle(10)?);
        for len in [4, 6] {
            tally.check(is_free(Host::Triples(&c10), &ForbiddenSpec::berge(len))?, || format!("doubled C10 has a Berge C{len}"));
        }
        let mut rng = fuzz::rng(self.seed, 7 << 32);
        let (mut graphs, mut attempts, mut triples) = (0, 0usize, 0usize);
        while graphs < 100 {
            attempts += 1;
            let n = rng.gen_range(5..=9);
            let g = if attempts % 2 == 0 {
                let p = rng.gen_range(0.1..0.7);
                random_graph(&mut rng, n, p)
            } else {
                grow_graph(&mut rng, n, usize::MAX, |g| Ok::<_, berge_forge_core::Error>(find_cycle(g, 5)?.is_none()))?
            };
            if find_cycle(&g, 5)?.is_some() {
                continue;
            }
            graphs += 1;
            let h = triangle_hypergraph(&g);
            triples += h.len();
            tally.check(is_free(Host::Triples(&h), &ForbiddenSpec::berge(5))?, || format!("triangles of {g:?} have a Berge C5"));
        }
        Ok(Outcome {
            passed: tally.ok(),
            detail: format!("{} ({attempts} graphs generated for 100 C5-free, {triples} triangles)", tally.summary("systems")),
        })
    }

    fn bound_consistency(&mut self) -> Result<Outcome> {
        for n in 1..=7 {
            let g = Universe::Graph { n };
            let t = Universe::Triples { n };
            self.solve(SearchProblem::new(g, vec![ForbiddenSpec::cycle(4)], Objective::Edges))?;
            self.solve(SearchProblem::new(g, vec![ForbiddenSpec::cycle(4)], Objective::Triangles))?;
            self.solve(SearchProblem::new(g, vec![ForbiddenSpec::cycle(5)], Objective::Triangles))?;
            self.solve(SearchProblem::new(t, vec![ForbiddenSpec::berge(4)], Objective::Edges))?;
            self.solve(SearchProblem::new(t, vec![ForbiddenSpec::berge(5)], Objective::Edges))?;
            self.solve(SearchProblem::new(t, vec![ForbiddenSpec::berge(5)], Objective::Edges).linear(true))?;
        }
        for c in 1..=3 {
            let b = Universe::Bipartite { m: c, n: c };
            self.solve(SearchProblem::new(b, vec![ForbiddenSpec::cycle(4)], Objective::Edges))?;
            self.solve(SearchProblem::new(b, vec![ForbiddenSpec::cycles_up_to(4)], Objective::Edges))?;
        }
        let exact: BTreeMap<Quantity, u64> = self
            .runs
            .iter()
            .filter(|(_, r)| r.optimal)
            .filter_map(|(p, r)| Some((p.quantity()?, r.value)))
            .collect();

        let mut tally = Tally::default();
        let (mut upper, mut lower, mut skipped) = (0, 0, 0);
        for id in FormulaId::ALL {
            let params: Vec<Option<usize>> = match id.parameter() {
                None => vec![None],
                Some(_) => (2..=8).map(Some).collect(),
            };
            for p in params {
                let Ok(f) = BoundFormula::new(id, p) else { continue };
                for (&q, &v) in &exact {
                    let n = q.size();
                    if n == 0 {
                        continue;
                    }
                    let (target, direction) = f.target(n);
                    if target != q {
                        continue;
                    }
                    let bases: Option<Vec<BaseEstimate>> =
                        f.inner_terms(n).into_iter().map(|iq| exact.get(&iq).map(|&x| BaseEstimate::exact(iq, x))).collect();
                    let Some(bases) = bases else {
                        skipped += 1;
                        continue;
                    };
                    let e = evaluate(&f, n, &bases)?;
                    if e.asymptotic {
                        skipped += 1;
                        continue;
                    }
                    let ok = match (direction, e.exact) {
                        (Direction::Upper, Some(r)) => r >= Ratio::from_integer(v as i128),
                        (Direction::Upper, None) => e.value >= v as f64,
                        (Direction::Lower, Some(r)) => r <= Ratio::from_integer(v as i128),
                        (Direction::Lower, None) => e.value <= v as f64,
                    };
                    match direction {
                        Direction::Upper => upper += 1,
                        Direction::Lower => lower += 1,
                    }
                    tally.check(ok, || format!("{f} at n = {n}: {} vs {q} = {v}", e.value));
                }
            }
        }

        let mut chain = Vec::new();
        for n in 1..=7 {
            let t5 = exact.get(&Quantity::Triangles { n, len: 5 });
            let ex3 = exact.get(&Quantity::ExBerge { n, len: 5 });
            if let (Some(&a), Some(&b)) = (t5, ex3) {
                tally.check(a <= b, || format!("t5({n}) = {a} > ex3({n}, Berge C5) = {b}"));
                chain.push(format!("{a}≤{b}"));
            }
        }
        Ok(Outcome {
            passed: tally.ok() && upper > 0 && chain.len() == 7,
            detail: format!(
                "{} ({upper} upper, {lower} lower, {skipped} skipped, {} exact values); t5(n) ≤ ex3(n, Berge C5) for n = 1..7: {}",
                tally.summary("comparisons"),
                exact.len(),
                chain.join(" ")
            ),
        })
    }
}

/// Violated structural identities and counting guarantees, recomputed
/// independently of [`Decomposition::verify`].
fn chain_problems(d: &Decomposition) -> Vec<&'static str> {
    let h: &TripleSystem = &d.source;
    let sorted = |parts: &[&[usize]]| {
        let mut v: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
        v.sort_unstable();
        v
    };
    let mut out = Vec::new();
    if sorted(&[&d.h1, &d.h2]) != (0..h.len()).collect::<Vec<_>>() {
        out.push("h1, h2 do not partition H");
    }
    if sorted(&[&d.h4, &d.h5]) != sorted(&[&d.h3]) {
        out.push("h4, h5 do not partition h3");
    }
    if !d.h3.iter().all(|i| d.h1.contains(i)) {
        out.push("h3 not inside h1");
    }
    if !d.h6.iter().all(|i| d.h5.contains(i)) {
        out.push("h6 not inside h5");
    }
    if !h.subsystem(&d.h6).is_linear() {
        out.push("h6 not linear");
    }
    if d.h1.len() > 4 * d.h3.len() {
        out.push("|h1| > 4|h3|");
    }
    if d.h5.len() > 3 * d.h6.len() {
        out.push("|h5| > 3|h6|");
    }
    if h.len() > d.h2.len() + 4 * d.h4.len() + 12 * d.h6.len() {
        out.push("|H| > |h2| + 4|h4| + 12|h6|");
    }
    out
}

fn golden_bounds() -> Result<Outcome> {
    let cases = [
        (FormulaId::Pikhurko1, Some(2), 16, 320),
        (FormulaId::Kst3, None, 9, 45),
        (FormulaId::ErdosGallai12, Some(4), 10, 10),
        (FormulaId::Theta15, Some(6), 10, 40),
        (FormulaId::ErdosPentagon, None, 10, 32),
    ];
    let mut tally = Tally::default();
    let mut shown = Vec::new();
    for (id, p, n, want) in cases {
        let f = BoundFormula::new(id, p)?;
        let e = evaluate(&f, n, &[])?;
        let ok = e.exact == Some(Ratio::from_integer(want));
        tally.check(ok, || format!("{f} at n = {n}: {:?}, want exactly {want}", e.exact));
        shown.push(format!("{f}@{n}={}", e.value));
    }
    Ok(Outcome { passed: tally.ok(), detail: format!("{}; {}", shown.join(", "), tally.summary("values")) })
}

fn blowup_counts() -> Result<Outcome> {
    let g: Graph = blowup_c5(10)?;
    let c5 = count_cycles(&g, 5)?;
    let c3 = count_cycles(&g, 3)?;
    let triangle = find_cycle(&g, 3)?;
    Ok(Outcome {
        passed: c5 == 32 && c3 == 0 && triangle.is_none(),
        detail: format!("{c5} five-cycles (want 32), {c3} triangles (want 0)"),
    })
}
