//! Shifting checkers: `n` black and `m` white checkers in a row with one gap
//! must trade sides using slides and jumps into the gap.
//!
//! * [`board`] and [`moves`]: board states, the twelve move classes and the
//!   inversion metrics that bound the solution length at `nm + n + m`.
//! * [`constructor`]: a linear-time construction of an optimal solution.
//! * [`closed_form`]: any single step of that solution in O(1).
//! * [`enumerator`]: every optimal solution of a small game by backtracking.
//! * [`counter`]: exact solution counts and the states every optimal play visits.
//! * [`oracle`]: exhaustive breadth-first search of the state graph, used as
//!   ground truth for everything else.

pub mod board;
pub mod closed_form;
pub mod constructor;
pub mod counter;
pub mod enumerator;
mod error;
pub mod moves;
pub mod oracle;
pub mod solution;

pub use board::{BoardState, Cell, GameSpec, Rules};
pub use closed_form::{ClosedForm, StepLocator};
pub use error::{Error, Result};
pub use moves::{Metrics, MoveClass};
pub use solution::{validate, Direction, Solution, ValidationReport, Violation};

/// Which engine produces a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Construct,
    ClosedForm,
}

/// An optimal solution for any valid game. Games with more white than black
/// checkers are solved in mirrored form and mapped back, so the returned
/// solution still starts in `dir`.
pub fn solve(spec: GameSpec, dir: Direction, method: Method) -> Result<Solution> {
    let run = |spec, dir| match method {
        Method::Construct => constructor::construct(spec, dir),
        Method::ClosedForm => closed_form::sequence(spec, dir),
    };
    if spec.is_canonical() {
        run(spec, dir)
    } else {
        Ok(run(spec.mirrored(), dir.flip())?.mirror())
    }
}
