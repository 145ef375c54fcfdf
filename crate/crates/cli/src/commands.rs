use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::ops::ControlFlow;
use std::path::Path;

use checkers_core::{counter, enumerator, oracle};
use checkers_core::{validate, BoardState, Direction, GameSpec, Method, Rules};

use crate::error::{tolerate_broken_pipe, CliError, CliResult};
use crate::positions;
use crate::{CountMethod, Format};

fn game(n: usize, m: usize) -> CliResult<GameSpec> {
    GameSpec::new(n, m).map_err(|e| CliError::Usage(e.to_string()))
}

fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

pub fn solve(n: usize, m: usize, dir: Direction, method: Method, format: Format) -> CliResult {
    let spec = game(n, m)?;
    let sol =
        checkers_core::solve(spec, dir, method).map_err(|e| CliError::Failed(e.to_string()))?;
    let mut out = stdout();
    let written = (|| -> io::Result<()> {
        match format {
            Format::Positions => {
                positions::write_header(&mut out, spec, dir)?;
                positions::write_steps(&mut out, sol.steps.iter().copied())?;
            }
            Format::Moves => {
                let mut board = BoardState::initial(spec);
                for &pos in &sol.steps {
                    let class = board.classify(pos).map_err(io::Error::other)?;
                    writeln!(out, "{}", class.label())?;
                    board.apply_in_place(pos).map_err(io::Error::other)?;
                }
            }
            Format::Trace => {
                let mut board = BoardState::initial(spec);
                writeln!(out, "{board}")?;
                for &pos in &sol.steps {
                    board.apply_in_place(pos).map_err(io::Error::other)?;
                    writeln!(out, "{board}")?;
                }
            }
        }
        out.flush()
    })();
    tolerate_broken_pipe(written)
}

pub fn enumerate(n: usize, m: usize, limit: Option<usize>) -> CliResult {
    let spec = game(n, m)?;
    let mut out = stdout();
    let mut emitted = 0usize;
    let mut truncated = false;
    let mut failure = None;
    enumerator::for_each_solution(spec, |steps| {
        if limit.is_some_and(|l| emitted >= l) {
            truncated = true;
            return ControlFlow::Break(());
        }
        if let Err(e) = positions::write_steps(&mut out, steps.iter().copied()) {
            failure = Some(e);
            return ControlFlow::Break(());
        }
        emitted += 1;
        ControlFlow::Continue(())
    })
    .map_err(|e| CliError::Failed(e.to_string()))?;
    if let Some(e) = failure {
        return tolerate_broken_pipe(Err(e));
    }
    tolerate_broken_pipe(out.flush())?;
    if truncated {
        eprintln!("checkers: output truncated after {emitted} solutions");
    }
    Ok(())
}

pub fn count(n: usize, m: usize, method: CountMethod) -> CliResult {
    let spec = game(n, m)?;
    let total = match method {
        CountMethod::Formula => counter::phi(spec),
        CountMethod::Enumerate => enumerator::count(spec)
            .map_err(|e| CliError::Failed(e.to_string()))?
            .into(),
        CountMethod::Bfs => {
            oracle::count_shortest_paths(spec).map_err(|e| CliError::Failed(e.to_string()))?
        }
    };
    println!("{total}");
    Ok(())
}

pub fn verify(n: Option<usize>, m: Option<usize>, file: Option<&Path>) -> CliResult {
    let text = match file {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)?,
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let sol =
        positions::parse(&text).map_err(|e| CliError::Failed(format!("malformed input: {e}")))?;
    let spec = game(n.unwrap_or(sol.spec.n()), m.unwrap_or(sol.spec.m()))?;
    let report = validate(spec, &sol, Rules::Full);
    if report.optimal {
        println!("{report}");
        Ok(())
    } else {
        Err(CliError::Failed(report.summary(spec)))
    }
}

pub fn graph(n: usize, m: usize, out: Option<&Path>, cap: usize) -> CliResult {
    let spec = game(n, m)?;
    let dot = oracle::build_graph(spec, cap)
        .and_then(|g| g.to_dot())
        .map_err(|e| CliError::Failed(e.to_string()))?;
    match out {
        Some(path) => fs::write(path, dot)?,
        None => {
            let mut w = stdout();
            tolerate_broken_pipe(w.write_all(dot.as_bytes()).and_then(|_| w.flush()))?;
        }
    }
    Ok(())
}
