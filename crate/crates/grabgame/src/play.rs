//! Terminal game loop.

use std::io::{BufRead, Write};

use grabgame_core::Side;

use crate::doc::WeightedGraphDoc;
use crate::session::{result_banner, EnginePolicy, Session, SessionError};

fn show(out: &mut impl Write, s: &Session) -> std::io::Result<()> {
    let st = s.state();
    let remaining: Vec<String> = st.remaining().iter().map(|v| format!("{v}(w={})", st.weights().get(v))).collect();
    writeln!(out, "remaining: {}", remaining.join(" "))?;
    writeln!(out, "score: Alice {} - Bob {}", st.score(Side::Alice), st.score(Side::Bob))?;
    Ok(())
}

/// Plays one game, reading the human's moves from `input`. Commands:
/// a vertex id, `hint` for per-move values, `quit`.
pub fn run(doc: WeightedGraphDoc, human: Side, policy: EnginePolicy, input: impl BufRead, mut out: impl Write) -> anyhow::Result<()> {
    let mut s = Session::new(doc.graph, doc.weights, human, policy)?;
    writeln!(out, "you are {human}; engine plays {} ({})", human.other(), s.engine_kind.as_str())?;
    let mut seen = 0;
    let mut lines = input.lines();
    loop {
        for m in &s.state().transcript()[seen..] {
            if m.side != human {
                writeln!(out, "{} takes {}", m.side, m.vertex)?;
            }
        }
        seen = s.state().transcript().len();
        show(&mut out, &s)?;
        if let Some(banner) = result_banner(s.state()) {
            writeln!(out, "{banner}")?;
            return Ok(());
        }
        let legal: Vec<String> = s.state().legal_moves()?.iter().map(|v| v.to_string()).collect();
        write!(out, "your move [{}]: ", legal.join(" "))?;
        out.flush()?;
        let Some(line) = lines.next() else {
            writeln!(out)?;
            writeln!(out, "input closed, game abandoned")?;
            return Ok(());
        };
        let cmd = line?;
        let cmd = cmd.trim();
        match cmd {
            "" => continue,
            "quit" | "q" => {
                writeln!(out, "game abandoned")?;
                return Ok(());
            }
            "hint" | "?" => {
                for a in s.analysis() {
                    writeln!(out, "  take {}: {:+}", a.vertex, a.value_after_move)?;
                }
                continue;
            }
            _ => {}
        }
        let Ok(v) = cmd.parse::<usize>() else {
            writeln!(out, "expected a vertex id, `hint` or `quit`")?;
            continue;
        };
        match s.human_move(v) {
            Ok(()) => {}
            Err(e @ (SessionError::Illegal(_) | SessionError::OutOfRange { .. })) => writeln!(out, "illegal: {e}")?,
            Err(e) => return Err(e.into()),
        }
    }
}
