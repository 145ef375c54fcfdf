mod bench;
mod commands;
mod error;
mod positions;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use checkers_core::{Direction, Method};

/// Shifting checkers: generate, verify, count and export optimal solutions.
#[derive(Debug, Parser)]
#[command(name = "checkers", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DirArg {
    #[value(alias = "left")]
    L,
    #[value(alias = "right")]
    R,
}

impl From<DirArg> for Direction {
    fn from(d: DirArg) -> Direction {
        match d {
            DirArg::L => Direction::Left,
            DirArg::R => Direction::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SolveMethod {
    Construct,
    ClosedForm,
}

impl From<SolveMethod> for Method {
    fn from(m: SolveMethod) -> Method {
        match m {
            SolveMethod::Construct => Method::Construct,
            SolveMethod::ClosedForm => Method::ClosedForm,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    /// Header `n m d`, then the moved positions.
    Positions,
    /// One move-class name per line.
    Moves,
    /// One board per line, initial and final included.
    Trace,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CountMethod {
    Formula,
    Enumerate,
    Bfs,
}

fn count_arg(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, clap::Args)]
struct Game {
    /// Black checkers.
    #[arg(long, value_parser = count_arg)]
    n: usize,
    /// White checkers.
    #[arg(long, value_parser = count_arg)]
    m: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print an optimal solution.
    Solve {
        #[command(flatten)]
        game: Game,
        /// Direction of the first move.
        #[arg(long, value_enum, default_value = "r")]
        dir: DirArg,
        #[arg(long, value_enum, default_value = "construct")]
        method: SolveMethod,
        #[arg(long, value_enum, default_value = "positions")]
        format: Format,
    },
    /// List every optimal solution, one per line.
    Enumerate {
        #[command(flatten)]
        game: Game,
        /// Stop after this many solutions.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Count optimal solutions.
    Count {
        #[command(flatten)]
        game: Game,
        #[arg(long, value_enum, default_value = "formula")]
        method: CountMethod,
    },
    /// Check a solution in positions format; exits 1 unless it is optimal.
    Verify {
        /// Expected black checkers (defaults to the file header).
        #[arg(long, value_parser = count_arg)]
        n: Option<usize>,
        /// Expected white checkers (defaults to the file header).
        #[arg(long, value_parser = count_arg)]
        m: Option<usize>,
        /// Solution file; `-` or absent reads standard input.
        file: Option<PathBuf>,
    },
    /// Export the reachable state graph as DOT.
    Graph {
        #[command(flatten)]
        game: Game,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Give up once this many states are discovered.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Time the engines over a grid of game sizes.
    Bench {
        #[arg(long, value_parser = count_arg, default_value = "1000")]
        max_n: usize,
        #[arg(long, value_parser = count_arg, default_value = "1000")]
        max_m: usize,
        /// Random-access lookups timed per game.
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve {
            game,
            dir,
            method,
            format,
        } => commands::solve(game.n, game.m, dir.into(), method.into(), format),
        Command::Enumerate { game, limit } => commands::enumerate(game.n, game.m, limit),
        Command::Count { game, method } => commands::count(game.n, game.m, method),
        Command::Verify { n, m, file } => commands::verify(n, m, file.as_deref()),
        Command::Graph { game, out, cap } => commands::graph(game.n, game.m, out.as_deref(), cap),
        Command::Bench {
            max_n,
            max_m,
            samples,
        } => bench::run(max_n, max_m, samples),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("checkers: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
