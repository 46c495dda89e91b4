//! Command-line graph arguments: a doc file, a graph6 file or a graph6 literal.

use std::path::Path;

use anyhow::{bail, Context, Result};

use crate::doc::{parse_weighted_doc, WeightedGraphDoc};
use crate::graph6::parse_graph6;
use grabgame_core::WeightFn;

/// Reads `arg` as a weighted doc or graph6. Graph6 input gets zero weights.
pub fn load_graph_arg(arg: &str) -> Result<WeightedGraphDoc> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        let is_doc = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .any(|l| l == "n" || l.starts_with("n ") || l.starts_with("w ") || l.starts_with("e "));
        if is_doc {
            return parse_weighted_doc(&text).with_context(|| format!("parsing {arg}"));
        }
        let line = text.lines().find(|l| !l.trim().is_empty()).context("empty input file")?;
        return from_graph6(line).with_context(|| format!("parsing {arg} as graph6"));
    }
    from_graph6(arg).with_context(|| format!("`{arg}` is neither a readable file nor a graph6 string"))
}

fn from_graph6(s: &str) -> Result<WeightedGraphDoc> {
    let g = parse_graph6(s)?;
    let w = WeightFn::zeros(g.n());
    Ok(WeightedGraphDoc::new(g, w)?)
}

/// Replaces the weights of `doc` with a bitstring such as `010`.
pub fn override_weights(doc: &mut WeightedGraphDoc, bits: &str) -> Result<()> {
    let w = WeightFn::from_bitstring(bits.trim())?;
    if w.len() != doc.graph.n() {
        bail!("--weights has {} bits, graph has {} vertices", w.len(), doc.graph.n());
    }
    doc.weights = w;
    doc.integer = false;
    Ok(())
}
