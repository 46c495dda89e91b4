use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use grabgame::doc::WeightedGraphDoc;
use grabgame::input::{load_graph_arg, override_weights};
use grabgame::report::{csv_line, write_csv};
use grabgame::scan::{graph6_inputs, internal_inputs, scan};
use grabgame::session::{parse_side, EnginePolicy};
use grabgame::verify::Suite;
use grabgame::{emit_graph6, emit_weighted_doc};
use grabgame_core::classify::{in_a2, in_h2, MAX_ENUMERATION_VERTICES};
use grabgame_core::engine::Solver;
use grabgame_core::families::{cycle, fully_spiked_cycle, path, prop8_weights};
use grabgame_core::{Side, WeightFn};

#[derive(Parser)]
#[command(name = "grabgame", version, about = "Graph grabbing game: solver, classifier, scans and play")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Game value, winner and an optimal line.
    Solve {
        /// Weighted doc file, graph6 file or graph6 string.
        input: String,
        /// Weight bitstring such as 010, replacing the input's weights.
        #[arg(long)]
        weights: Option<String>,
    },
    /// A2 / H2 classification of one graph.
    Classify {
        input: String,
        /// Only the whole-graph A2 test.
        #[arg(long, conflicts_with = "h2")]
        a2: bool,
        /// The full H2 record (default).
        #[arg(long)]
        h2: bool,
    },
    /// Conjecture scan to CSV. Exits with status 1 iff an inconsistent record is found.
    Scan {
        /// All connected graphs on 1..=k vertices (k <= 6).
        #[arg(long, value_name = "K", conflicts_with = "graph6_file", required_unless_present = "graph6_file")]
        internal_n: Option<usize>,
        /// One graph6 per line; `-` reads standard input.
        #[arg(long, value_name = "PATH")]
        graph6_file: Option<PathBuf>,
        /// CSV destination (default: standard output).
        #[arg(long, value_name = "CSV")]
        out: Option<PathBuf>,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Runs a property suite: omega-spike, cycle-noncut, cstar-free-h2, even-spiked, odd-spiked, remark-six, or all.
    Verify { suite: String },
    /// Prints a family member as a weighted doc or a graph6 line.
    Gen {
        family: Family,
        n: usize,
        /// Weight 1 on cycle vertices, 0 on leaves (spiked odd cycles only).
        #[arg(long)]
        prop8_weights: bool,
        #[arg(long)]
        graph6: bool,
    },
    /// Terminal game against the engine.
    ///
    /// The `paper` engine uses, in order: the pairing strategy for Bob on a
    /// canonically labeled odd spiked cycle with weight 1 on the cycle and 0 on
    /// the leaves; the spiked even cycle opening for Alice on a canonically
    /// labeled even spiked cycle; the C*-free rule for Alice on an even C*-free
    /// graph; optimal play otherwise, and whenever a strategy declines.
    Play {
        input: String,
        #[arg(long, value_parser = parse_side)]
        side: Side,
        #[arg(long, value_parser = |s: &str| s.parse::<EnginePolicy>(), default_value = "optimal")]
        engine: EnginePolicy,
        #[arg(long)]
        weights: Option<String>,
    },
    /// HTTP session API under /api (engine dispatch as for `play`).
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Idle sessions are dropped after this many minutes.
        #[arg(long, default_value_t = 30)]
        idle_minutes: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Spiked,
}

fn solve(input: &str, weights: Option<&str>) -> Result<()> {
    let mut doc = load_graph_arg(input)?;
    if let Some(bits) = weights {
        override_weights(&mut doc, bits)?;
    }
    let g = doc.graph.clone();
    let mut solver = Solver::new(g.clone(), doc.weights.clone())?;
    let d = solver.value(g.vertices())?.0;
    let line = solver.principal_line(g.vertices())?;
    let winner = if d >= 0 { Side::Alice } else { Side::Bob };
    println!("game value d = {d}");
    println!("winner: {winner}");
    let steps: Vec<String> = line
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{} {v}", if i % 2 == 0 { "Alice" } else { "Bob" }))
        .collect();
    println!("optimal line: {}", steps.join(", "));
    Ok(())
}

fn bits_or_dash(w: Option<String>) -> String {
    w.unwrap_or_else(|| "-".into())
}

fn classify(input: &str, a2_only: bool) -> Result<()> {
    let doc = load_graph_arg(input)?;
    let g = &doc.graph;
    println!("graph6: {}", emit_graph6(g));
    println!("n: {}", g.n());
    if a2_only {
        let v = in_a2(g)?;
        println!("in_a2: {}", v.holds);
        println!("a2_counterexample_weights: {}", bits_or_dash(v.counterexample.and_then(|w| w.to_bitstring())));
        return Ok(());
    }
    let rec = in_h2(g)?;
    println!("in_a2: {}", rec.in_a2);
    println!("in_h2: {}", rec.in_h2);
    println!("odd_cstar_free: {}", rec.odd_cstar_free);
    println!("conjecture_consistent: {}", rec.conjecture_consistent());
    match &rec.h2_counterexample {
        Some(cx) => {
            let subset: Vec<String> = cx.subset.iter().map(|v| v.to_string()).collect();
            println!("h2_counterexample_subset: {}", subset.join(" "));
            println!("h2_counterexample_weights: {}", bits_or_dash(cx.weights.to_bitstring()));
        }
        None => println!("h2_counterexample: -"),
    }
    match &rec.witness {
        Some(w) => println!("odd_spiked_cycle_witness: cycle {:?} pendants {:?}", w.cycle, w.pendants),
        None => println!("odd_spiked_cycle_witness: -"),
    }
    Ok(())
}

fn run_scan(internal_n: Option<usize>, file: Option<PathBuf>, out: Option<PathBuf>, jobs: usize) -> Result<bool> {
    let inputs = match (internal_n, file) {
        (Some(k), _) => {
            if k == 0 || k > MAX_ENUMERATION_VERTICES {
                bail!("--internal-n must be in 1..={MAX_ENUMERATION_VERTICES}; use --graph6-file for larger graphs");
            }
            internal_inputs(k)?
        }
        (None, Some(path)) => {
            let text = if path.as_os_str() == "-" {
                io::read_to_string(io::stdin())?
            } else {
                std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?
            };
            graph6_inputs(&text)
        }
        (None, None) => bail!("give --internal-n or --graph6-file"),
    };
    let started = Instant::now();
    let outcome = scan(inputs, jobs);
    match out {
        Some(path) => {
            let f = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            write_csv(BufWriter::new(f), outcome.records())?;
        }
        None => write_csv(io::stdout().lock(), outcome.records())?,
    }
    let mut stderr = io::stderr().lock();
    for (line, err) in outcome.errors() {
        match line {
            Some(l) => writeln!(stderr, "line {l}: {err}")?,
            None => writeln!(stderr, "{err}")?,
        }
    }
    let records = outcome.records().count();
    let outside = outcome.records().filter(|r| !r.in_h2).count();
    let inconsistent: Vec<_> = outcome.inconsistent().collect();
    for rec in &inconsistent {
        writeln!(stderr, "counterexample: {}", csv_line(rec))?;
    }
    writeln!(
        stderr,
        "scanned {records} graphs in {:.1?}: {outside} outside H2, {} inconsistent, {} input errors",
        started.elapsed(),
        inconsistent.len(),
        outcome.errors().count()
    )?;
    Ok(inconsistent.is_empty())
}

fn verify(id: &str) -> Result<bool> {
    let suites: Vec<Suite> = if id == "all" { Suite::ALL.to_vec() } else { vec![id.parse().map_err(anyhow::Error::msg)?] };
    let mut ok = true;
    for s in suites {
        let started = Instant::now();
        let rep = s.run();
        println!("{rep}");
        println!("  elapsed {:.1?}", started.elapsed());
        ok &= rep.passed();
    }
    Ok(ok)
}

fn gen(family: Family, n: usize, prop8: bool, graph6: bool) -> Result<()> {
    let (g, name) = match family {
        Family::Path => (path(n)?, format!("path on {n} vertices")),
        Family::Cycle => (cycle(n)?, format!("cycle on {n} vertices")),
        Family::Spiked => (fully_spiked_cycle(n)?, format!("fully spiked {n}-cycle")),
    };
    let weights = if prop8 {
        if !matches!(family, Family::Spiked) {
            bail!("--prop8-weights applies to spiked cycles only");
        }
        prop8_weights(&g)?
    } else {
        WeightFn::zeros(g.n())
    };
    if graph6 {
        println!("{}", emit_graph6(&g));
    } else {
        let mut doc = WeightedGraphDoc::new(g, weights)?;
        doc.name = Some(name);
        print!("{}", emit_weighted_doc(&doc));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve { input, weights } => solve(&input, weights.as_deref())?,
        Command::Classify { input, a2, h2: _ } => classify(&input, a2)?,
        Command::Scan { internal_n, graph6_file, out, jobs } => {
            if !run_scan(internal_n, graph6_file, out, jobs)? {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify { suite } => {
            if !verify(&suite)? {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gen { family, n, prop8_weights, graph6 } => gen(family, n, prop8_weights, graph6)?,
        Command::Play { input, side, engine, weights } => {
            let mut doc = load_graph_arg(&input)?;
            if let Some(bits) = weights {
                override_weights(&mut doc, &bits)?;
            }
            grabgame::play::run(doc, side, engine, io::stdin().lock(), io::stdout().lock())?;
        }
        Command::Serve { port, idle_minutes } => {
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(grabgame::server::serve(port, Duration::from_secs(idle_minutes * 60)))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
