//! Persistent catalog of search results.
//!
//! One JSON object per line. Each entry is keyed by the SHA-256 of the
//! canonical JSON form of its [`ProblemKey`]; budgets and engine settings
//! are not part of the key since they do not change an optimal answer.

use std::fs::{self, OpenOptions};
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use berge_forge_core::detect::ForbiddenSpec;
use berge_forge_core::search::{Objective, SearchProblem, SearchResult, Universe};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::{CliError, ParseError, Result, VERSION};

/// Environment variable overriding the catalog location.
pub const CATALOG_ENV: &str = "BERGE_FORGE_CATALOG";
pub const DEFAULT_CATALOG: &str = "berge-forge-catalog.jsonl";

/// The answer-determining part of a search problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemKey {
    pub universe: String,
    pub n: usize,
    /// Left part size of a bipartite universe.
    pub m: Option<usize>,
    /// Forbidden structures, sorted and deduplicated.
    pub forbidden: Vec<String>,
    pub objective: String,
    pub linear: bool,
}

impl ProblemKey {
    pub fn of(p: &SearchProblem) -> Self {
        let (universe, n, m) = match p.universe {
            Universe::Graph { n } => ("graph", n, None),
            Universe::Bipartite { m, n } => ("bipartite", n, Some(m)),
            Universe::Triples { n } => ("triples", n, None),
        };
        let mut specs = p.forbidden.clone();
        specs.sort_unstable();
        specs.dedup();
        ProblemKey {
            universe: universe.into(),
            n,
            m,
            forbidden: specs.iter().map(|s| s.to_string()).collect(),
            objective: match p.objective {
                Objective::Edges => "edges",
                Objective::Triangles => "triangles",
            }
            .into(),
            linear: p.linear,
        }
    }

    /// The search problem this key was made from (with no budget).
    pub fn to_problem(&self) -> Result<SearchProblem> {
        let bad = |what: &str| CliError::Usage(format!("catalog entry has {what}"));
        let universe = match (self.universe.as_str(), self.m) {
            ("graph", None) => Universe::Graph { n: self.n },
            ("bipartite", Some(m)) => Universe::Bipartite { m, n: self.n },
            ("triples", None) => Universe::Triples { n: self.n },
            _ => return Err(bad("an unknown universe")),
        };
        let objective = match self.objective.as_str() {
            "edges" => Objective::Edges,
            "triangles" => Objective::Triangles,
            _ => return Err(bad("an unknown objective")),
        };
        let forbidden = self.forbidden.iter().map(|s| s.parse::<ForbiddenSpec>()).collect::<Result<Vec<_>, _>>()?;
        Ok(SearchProblem::new(universe, forbidden, objective).linear(self.linear))
    }

    pub fn fingerprint(&self) -> String {
        let canonical = serde_json::to_string(self).expect("plain struct serializes");
        Sha256::digest(canonical.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub fingerprint: String,
    pub problem: ProblemKey,
    pub value: u64,
    pub optimal: bool,
    /// Path of the witness file.
    pub witness: String,
    pub nodes_explored: u64,
    pub tool_version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl CatalogEntry {
    pub fn new(problem: &SearchProblem, result: &SearchResult, witness: &Path) -> Self {
        let key = ProblemKey::of(problem);
        CatalogEntry {
            fingerprint: key.fingerprint(),
            problem: key,
            value: result.value,
            optimal: result.optimal,
            witness: witness.display().to_string(),
            nodes_explored: result.nodes_explored,
            tool_version: VERSION.into(),
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        }
    }
}

/// What [`Catalog::record`] did.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recorded {
    Appended,
    /// An entry with the same fingerprint was replaced.
    Replaced,
    /// The catalog already held the same answer.
    Unchanged,
}

pub struct Catalog {
    path: PathBuf,
}

impl Catalog {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Catalog { path: path.into() }
    }

    /// `explicit`, else `$BERGE_FORGE_CATALOG`, else the default file name.
    pub fn locate(explicit: Option<&Path>) -> Self {
        match explicit {
            Some(p) => Catalog::new(p),
            None => Catalog::new(std::env::var_os(CATALOG_ENV).map_or_else(|| PathBuf::from(DEFAULT_CATALOG), PathBuf::from)),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Directory for witness files: `<catalog stem>-witnesses` beside it.
    pub fn witness_dir(&self) -> PathBuf {
        let stem = self.path.file_stem().map_or("catalog".into(), |s| s.to_string_lossy().into_owned());
        self.path.with_file_name(format!("{stem}-witnesses"))
    }

    /// Every entry; a missing file is an empty catalog.
    pub fn load(&self) -> Result<Vec<CatalogEntry>> {
        let text = match fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(CliError::io(&self.path, e)),
        };
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let entry = serde_json::from_str(line).map_err(|e| CliError::Parse {
                path: self.path.display().to_string(),
                source: ParseError { line: i + 1, column: e.column(), message: e.to_string() },
            })?;
            out.push(entry);
        }
        Ok(out)
    }

    pub fn find(&self, fingerprint: &str) -> Result<Option<CatalogEntry>> {
        Ok(self.load()?.into_iter().find(|e| e.fingerprint == fingerprint))
    }

    /// Adds `entry`, keeping one entry per fingerprint. New fingerprints are
    /// appended; an entry whose answer changed is replaced in place.
    pub fn record(&self, entry: &CatalogEntry) -> Result<Recorded> {
        let mut entries = self.load()?;
        let line = serde_json::to_string(entry).expect("plain struct serializes");
        match entries.iter().position(|e| e.fingerprint == entry.fingerprint) {
            None => {
                if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
                    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
                }
                let mut f = OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(&self.path)
                    .map_err(|e| CliError::io(&self.path, e))?;
                writeln!(f, "{line}").map_err(|e| CliError::io(&self.path, e))?;
                Ok(Recorded::Appended)
            }
            Some(i) => {
                let old = &entries[i];
                if old.value == entry.value && old.optimal == entry.optimal && old.witness == entry.witness {
                    return Ok(Recorded::Unchanged);
                }
                entries[i] = entry.clone();
                let mut text = String::new();
                for e in &entries {
                    text.push_str(&serde_json::to_string(e).expect("plain struct serializes"));
                    text.push('\n');
                }
                let tmp = self.path.with_extension("jsonl.tmp");
                fs::write(&tmp, text).map_err(|e| CliError::io(&tmp, e))?;
                fs::rename(&tmp, &self.path).map_err(|e| CliError::io(&self.path, e))?;
                Ok(Recorded::Replaced)
            }
        }
    }
}
