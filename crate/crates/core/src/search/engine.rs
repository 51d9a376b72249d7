use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, AtomicI64, AtomicU64, Ordering};

use super::symmetry::PrefixGroups;
use super::{assemble, slots, Objective, SearchConfig, SearchProblem, SearchResult, Universe};
use crate::detect::{berge_in, distance_avoiding_edge, has_path_with_edges, path_in, theta_in, ForbiddenKind, ForbiddenSpec};
use crate::Result;

/// Immutable search data.
pub(super) struct Engine {
    universe: Universe,
    slots: Vec<[usize; 3]>,
    triple: bool,
    linear: bool,
    vertices: usize,
    specs: Vec<ForbiddenSpec>,
    objective: Objective,
    /// `suffix[i][v]`: neighbors of `v` over slots `i..`, for the triangle bound.
    suffix: Vec<Vec<u64>>,
    groups: PrefixGroups,
}

/// Mutable state along the current branch.
#[derive(Clone)]
pub(super) struct Node {
    /// Adjacency for graphs, covered pairs (shadow) for triples.
    rows: Vec<u64>,
    triples: Vec<[usize; 3]>,
    chosen: Vec<usize>,
    decisions: Vec<bool>,
    value: u64,
}

#[derive(Clone, Debug)]
pub(super) struct Best {
    value: i64,
    chosen: Vec<usize>,
}

impl Best {
    fn none() -> Self {
        Best { value: -1, chosen: Vec::new() }
    }
}

/// Shared counters, stop flag and incumbent.
pub(super) struct Control {
    nodes: AtomicU64,
    stopped: AtomicBool,
    global: AtomicI64,
    max_nodes: u64,
    #[cfg(feature = "std")]
    deadline: Option<std::time::Instant>,
}

impl Control {
    /// Counts a node; false once the budget is used up.
    fn tick(&self) -> bool {
        if self.stopped.load(Ordering::Relaxed) {
            return false;
        }
        let done = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        #[cfg(feature = "std")]
        let out = done <= self.max_nodes
            && (done % 1024 != 0 || self.deadline.is_none_or(|d| std::time::Instant::now() < d));
        #[cfg(not(feature = "std"))]
        let out = done <= self.max_nodes;
        if !out {
            self.stopped.store(true, Ordering::Relaxed);
        }
        out
    }

    fn stopped(&self) -> bool {
        self.stopped.load(Ordering::Relaxed)
    }

    /// A subtree whose bound cannot beat the local best, or is strictly
    /// below another task's best, is cut. The strict comparison keeps the
    /// first optimal object of every task reachable.
    fn cut(&self, bound: u64, local: i64) -> bool {
        let bound = bound as i64;
        bound <= local || bound < self.global.load(Ordering::Relaxed)
    }

    fn offer(&self, value: i64) {
        self.global.fetch_max(value, Ordering::Relaxed);
    }
}

pub(super) fn run(problem: &SearchProblem, config: &SearchConfig) -> Result<SearchResult> {
    #[cfg(feature = "std")]
    let start = std::time::Instant::now();
    let engine = Engine::new(problem, config);
    let control = Control {
        nodes: AtomicU64::new(0),
        stopped: AtomicBool::new(false),
        global: AtomicI64::new(-1),
        max_nodes: problem.budget.max_nodes.unwrap_or(u64::MAX),
        #[cfg(feature = "std")]
        deadline: problem.budget.max_time.map(|t| start + t),
    };

    #[cfg(feature = "std")]
    let best = if config.threads > 1 {
        engine.parallel(&control, config.threads, config.split_depth)
    } else {
        engine.sequential(&control)
    };
    #[cfg(not(feature = "std"))]
    let best = engine.sequential(&control);

    #[cfg(feature = "std")]
    let wall_time = Some(start.elapsed());
    #[cfg(not(feature = "std"))]
    let wall_time = None;

    Ok(SearchResult {
        value: best.value.max(0) as u64,
        witness: assemble(engine.universe, &engine.slots, &best.chosen),
        optimal: !control.stopped(),
        nodes_explored: control.nodes.load(Ordering::Relaxed).min(control.max_nodes),
        wall_time,
    })
}

impl Engine {
    fn new(problem: &SearchProblem, config: &SearchConfig) -> Self {
        let universe = problem.universe;
        let slots = slots(universe);
        let vertices = universe.vertices();
        let triple = matches!(universe, Universe::Triples { .. });
        let classes: Vec<u8> = match universe {
            Universe::Bipartite { m, .. } => (0..vertices).map(|v| (v >= m) as u8).collect(),
            _ => vec![0; vertices],
        };
        let depth = config.symmetry_depth.unwrap_or(if triple { 40 } else { 25 });
        let suffix = if problem.objective == Objective::Triangles {
            let mut suffix = vec![vec![0u64; vertices]; slots.len() + 1];
            for i in (0..slots.len()).rev() {
                suffix[i] = suffix[i + 1].clone();
                let [u, v, _] = slots[i];
                suffix[i][u] |= 1 << v;
                suffix[i][v] |= 1 << u;
            }
            suffix
        } else {
            Vec::new()
        };
        Engine {
            universe,
            groups: PrefixGroups::new(&slots, &classes, depth),
            slots,
            triple,
            linear: problem.linear,
            vertices,
            specs: problem.forbidden.clone(),
            objective: problem.objective,
            suffix,
        }
    }

    fn root(&self) -> Node {
        Node {
            rows: vec![0; self.vertices],
            triples: Vec::new(),
            chosen: Vec::new(),
            decisions: Vec::new(),
            value: 0,
        }
    }

    fn sequential(&self, control: &Control) -> Best {
        let mut best = Best::none();
        self.dfs(0, &mut self.root(), &mut best, control);
        best
    }

    fn dfs(&self, depth: usize, node: &mut Node, best: &mut Best, control: &Control) {
        if !control.tick() {
            return;
        }
        if node.value as i64 > best.value {
            best.value = node.value as i64;
            best.chosen.clone_from(&node.chosen);
            control.offer(best.value);
        }
        if depth == self.slots.len() || control.cut(self.bound(depth, node), best.value) {
            return;
        }
        if self.try_include(depth, node) {
            if !self.groups.dominated(&node.decisions) {
                self.dfs(depth + 1, node, best, control);
            }
            self.exclude_last(depth, node);
        }
        if control.stopped() {
            return;
        }
        node.decisions.push(false);
        if !self.groups.dominated(&node.decisions) {
            self.dfs(depth + 1, node, best, control);
        }
        node.decisions.pop();
    }

    /// Upper bound on the objective over the subtree.
    fn bound(&self, depth: usize, node: &Node) -> u64 {
        match self.objective {
            Objective::Triangles => {
                let rows: Vec<u64> = node.rows.iter().zip(&self.suffix[depth]).map(|(a, b)| a | b).collect();
                triangles(&rows)
            }
            Objective::Edges if self.linear => {
                let open = self.slots[depth..].iter().filter(|&&t| self.linear_ok(node, t)).count();
                node.value + open as u64
            }
            Objective::Edges => node.value + (self.slots.len() - depth) as u64,
        }
    }

    fn linear_ok(&self, node: &Node, [a, b, c]: [usize; 3]) -> bool {
        node.rows[a] & (1 << b | 1 << c) == 0 && node.rows[b] >> c & 1 == 0
    }

    /// Adds slot `depth` if the result stays admissible; on success the
    /// node holds the new item and its decision.
    fn try_include(&self, depth: usize, node: &mut Node) -> bool {
        let t = self.slots[depth];
        if self.triple {
            if self.linear && !self.linear_ok(node, t) {
                return false;
            }
            node.triples.push(t);
            let last = node.triples.len() - 1;
            let n = self.vertices;
            let ok = self.specs.iter().all(|s| {
                let lens = match s.kind {
                    ForbiddenKind::Berge => s.parameter..=s.parameter,
                    _ => 3..=s.parameter,
                };
                lens.into_iter().all(|len| berge_in(n, &node.triples, len, Some(last)).is_none())
            });
            if !ok {
                node.triples.pop();
                return false;
            }
            let [a, b, c] = t;
            node.rows[a] |= 1 << b | 1 << c;
            node.rows[b] |= 1 << a | 1 << c;
            node.rows[c] |= 1 << a | 1 << b;
            node.value += 1;
        } else {
            let [u, v, _] = t;
            let gained = (node.rows[u] & node.rows[v]).count_ones() as u64;
            node.rows[u] |= 1 << v;
            node.rows[v] |= 1 << u;
            if !self.specs.iter().all(|s| graph_ok(&node.rows, u, v, s)) {
                node.rows[u] &= !(1 << v);
                node.rows[v] &= !(1 << u);
                return false;
            }
            node.value += match self.objective {
                Objective::Edges => 1,
                Objective::Triangles => gained,
            };
        }
        node.chosen.push(depth);
        node.decisions.push(true);
        true
    }

    fn exclude_last(&self, depth: usize, node: &mut Node) {
        node.chosen.pop();
        node.decisions.pop();
        let t = self.slots[depth];
        if self.triple {
            node.triples.pop();
            // pairs of a triple are covered by no other triple only in the
            // linear case, so rebuild the shadow
            for r in node.rows.iter_mut() {
                *r = 0;
            }
            for &[a, b, c] in &node.triples {
                node.rows[a] |= 1 << b | 1 << c;
                node.rows[b] |= 1 << a | 1 << c;
                node.rows[c] |= 1 << a | 1 << b;
            }
            node.value -= 1;
        } else {
            let [u, v, _] = t;
            node.rows[u] &= !(1 << v);
            node.rows[v] &= !(1 << u);
            node.value -= match self.objective {
                Objective::Edges => 1,
                Objective::Triangles => (node.rows[u] & node.rows[v]).count_ones() as u64,
            };
        }
    }

    #[cfg(feature = "std")]
    fn parallel(&self, control: &Control, threads: usize, split: usize) -> Best {
        use std::sync::atomic::AtomicUsize;
        use std::sync::Mutex;

        enum Task {
            Record(Best),
            Subtree(usize, Node),
        }
        // Shallow levels in sequential order: every shallow node's own object
        // precedes the subtrees below it.
        fn shallow(e: &Engine, depth: usize, split: usize, node: &mut Node, tasks: &mut Vec<Task>, control: &Control) {
            if depth == split.min(e.slots.len()) {
                tasks.push(Task::Subtree(depth, node.clone()));
                return;
            }
            if !control.tick() {
                return;
            }
            tasks.push(Task::Record(Best { value: node.value as i64, chosen: node.chosen.clone() }));
            if e.try_include(depth, node) {
                if !e.groups.dominated(&node.decisions) {
                    shallow(e, depth + 1, split, node, tasks, control);
                }
                e.exclude_last(depth, node);
            }
            node.decisions.push(false);
            if !e.groups.dominated(&node.decisions) {
                shallow(e, depth + 1, split, node, tasks, control);
            }
            node.decisions.pop();
        }

        let mut tasks = Vec::new();
        shallow(self, 0, split, &mut self.root(), &mut tasks, control);
        for t in &tasks {
            if let Task::Record(b) = t {
                control.offer(b.value);
            }
        }
        let results: Mutex<Vec<Option<Best>>> = Mutex::new(vec![None; tasks.len()]);
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(task) = tasks.get(i) else { break };
                    let found = match task {
                        Task::Record(b) => b.clone(),
                        Task::Subtree(depth, node) => {
                            let mut best = Best::none();
                            self.dfs(*depth, &mut node.clone(), &mut best, control);
                            best
                        }
                    };
                    results.lock().unwrap()[i] = Some(found);
                });
            }
        });
        let results = results.into_inner().unwrap();
        let mut best = Best::none();
        for b in results.into_iter().flatten() {
            if b.value > best.value {
                best = b;
            }
        }
        best
    }
}

fn graph_ok(rows: &[u64], u: usize, v: usize, spec: &ForbiddenSpec) -> bool {
    let l = spec.parameter;
    match spec.kind {
        ForbiddenKind::Cycle => !has_path_with_edges(rows, u, v, l - 1),
        ForbiddenKind::CyclesUpTo => distance_avoiding_edge(rows, u, v).saturating_add(1) > l,
        ForbiddenKind::Path => path_in(rows, l).is_none(),
        ForbiddenKind::ThetaAtLeast => theta_in(rows, l).is_none(),
        ForbiddenKind::Berge | ForbiddenKind::BergeUpTo => unreachable!("validated against the universe"),
    }
}

fn triangles(rows: &[u64]) -> u64 {
    let mut t = 0;
    for (u, &r) in rows.iter().enumerate() {
        let mut higher = r & !(2u64 << u).wrapping_sub(1);
        while higher != 0 {
            let v = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            t += (r & rows[v] & !(2u64 << v).wrapping_sub(1)).count_ones() as u64;
        }
    }
    t
}
