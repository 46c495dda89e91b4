//! Conjecture scans over the internal enumeration or graph6 input.

use grabgame_core::classify::{enumerate_connected_graphs, in_h2};
use grabgame_core::{ClassificationRecord, Graph};
use rayon::prelude::*;

use crate::graph6::parse_graph6;

/// One scanned input. `line` is the 1-based input line for file input.
#[derive(Debug, Clone)]
pub struct ScanItem {
    pub line: Option<usize>,
    pub outcome: Result<ClassificationRecord, String>,
}

#[derive(Debug, Default)]
pub struct ScanOutcome {
    pub items: Vec<ScanItem>,
}

impl ScanOutcome {
    pub fn records(&self) -> impl Iterator<Item = &ClassificationRecord> {
        self.items.iter().filter_map(|i| i.outcome.as_ref().ok())
    }

    pub fn errors(&self) -> impl Iterator<Item = (Option<usize>, &str)> {
        self.items.iter().filter_map(|i| i.outcome.as_ref().err().map(|e| (i.line, e.as_str())))
    }

    pub fn inconsistent(&self) -> impl Iterator<Item = &ClassificationRecord> {
        self.records().filter(|r| !r.conjecture_consistent())
    }
}

/// An input line number (file input only) and the parsed graph or parse error.
pub type ScanInput = (Option<usize>, Result<Graph, String>);

/// Graphs on 1..=k vertices from the internal enumerator.
pub fn internal_inputs(k: usize) -> Result<Vec<ScanInput>, grabgame_core::Error> {
    let mut out = Vec::new();
    for n in 1..=k {
        out.extend(enumerate_connected_graphs(n)?.into_iter().map(|g| (None, Ok(g))));
    }
    Ok(out)
}

/// Parses graph6 lines; blank lines are skipped, bad lines kept as errors.
pub fn graph6_inputs(text: &str) -> Vec<ScanInput> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (Some(i + 1), parse_graph6(l).map_err(|e| e.to_string())))
        .collect()
}

/// Classifies every input on `jobs` worker threads (0 = rayon default).
/// Output order matches input order.
pub fn scan(inputs: Vec<ScanInput>, jobs: usize) -> ScanOutcome {
    let work = || {
        inputs
            .into_par_iter()
            .map(|(line, g)| ScanItem { line, outcome: g.and_then(|g| in_h2(&g).map_err(|e| e.to_string())) })
            .collect::<Vec<_>>()
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("worker pool");
    let items = pool.install(work);
    ScanOutcome { items }
}
