//! Move sequences and their validation.

use std::fmt;
use std::str::FromStr;

use crate::board::{BoardState, GameSpec, Rules};
use crate::error::{Error, Result};
use crate::moves::MoveClass;

/// Direction of the first move. `Right` slides the black checker at `n` into
/// the vacancy (`d = +1`); `Left` slides the white checker at `n + 2` (`d = -1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn d(self) -> i64 {
        match self {
            Direction::Left => -1,
            Direction::Right => 1,
        }
    }

    pub fn from_d(d: i64) -> Option<Direction> {
        match d {
            -1 => Some(Direction::Left),
            1 => Some(Direction::Right),
            _ => None,
        }
    }

    pub fn flip(self) -> Direction {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l" | "left" | "-1" => Ok(Direction::Left),
            "r" | "right" | "1" | "+1" => Ok(Direction::Right),
            _ => Err(Error::ParseDirection(s.to_owned())),
        }
    }
}

/// A move sequence: `steps[i - 1]` is the position of the checker moved at step `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Solution {
    pub spec: GameSpec,
    pub direction: Direction,
    pub steps: Vec<usize>,
}

impl Solution {
    pub fn new(spec: GameSpec, direction: Direction, steps: Vec<usize>) -> Solution {
        Solution {
            spec,
            direction,
            steps,
        }
    }

    /// Infers the direction from the first step. Empty or non-unit first
    /// moves default to `Right`.
    pub fn from_steps(spec: GameSpec, steps: Vec<usize>) -> Solution {
        let d = (spec.n() + 1) as i64 - steps.first().map_or(spec.n() as i64, |&x| x as i64);
        let direction = Direction::from_d(d).unwrap_or(Direction::Right);
        Solution {
            spec,
            direction,
            steps,
        }
    }

    pub fn d(&self) -> i64 {
        self.direction.d()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The same play on the colour-swapped, reversed board of game `(m, n)`.
    /// Positions off the board are kept as they are.
    pub fn mirror(&self) -> Solution {
        let len = self.spec.board_len();
        let flip = |x: usize| {
            if (1..=len).contains(&x) {
                len + 1 - x
            } else {
                x
            }
        };
        Solution {
            spec: self.spec.mirrored(),
            direction: self.direction.flip(),
            steps: self.steps.iter().map(|&x| flip(x)).collect(),
        }
    }

    /// Every board from the initial state to the last one reached.
    pub fn trace(&self) -> Result<Vec<BoardState>> {
        let mut board = BoardState::initial(self.spec);
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(board.clone());
        for &pos in &self.steps {
            board.apply_in_place(pos)?;
            out.push(board.clone());
        }
        Ok(out)
    }

    /// Move class of each step.
    pub fn classes(&self) -> Result<Vec<MoveClass>> {
        let mut board = BoardState::initial(self.spec);
        self.steps
            .iter()
            .map(|&pos| {
                let class = board.classify(pos)?;
                board.apply_in_place(pos)?;
                Ok(class)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The solution was built for a different game.
    SpecMismatch { expected: GameSpec, found: GameSpec },
    /// The recorded direction disagrees with the first step.
    DirectionMismatch { d: i64, first: usize },
    /// Not a slide or jump into the vacant cell.
    IllegalMove { step: usize, pos: usize },
    /// Physically legal, but outside the optimal move classes.
    ForbiddenClass {
        step: usize,
        pos: usize,
        class: MoveClass,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SpecMismatch { expected, found } => {
                write!(f, "solution is for game {found}, expected {expected}")
            }
            Violation::DirectionMismatch { d, first } => {
                write!(
                    f,
                    "step 1: direction {d} does not match first move from {first}"
                )
            }
            Violation::IllegalMove { step, pos } => {
                write!(f, "step {step}: illegal move from {pos}")
            }
            Violation::ForbiddenClass { step, pos, class } => write!(
                f,
                "step {step}: move from {pos} is class {} {class}, not allowed under optimal rules",
                class.number()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub legal: bool,
    pub reached_goal: bool,
    pub step_count: usize,
    pub optimal: bool,
    pub first_violation: Option<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = &self.first_violation {
            return write!(f, "illegal: {v}");
        }
        if self.optimal {
            write!(f, "ok: optimal solution in {} steps", self.step_count)
        } else if !self.reached_goal {
            write!(
                f,
                "not optimal: goal not reached after {} steps",
                self.step_count
            )
        } else {
            write!(f, "not optimal: reached goal in {} steps", self.step_count)
        }
    }
}

impl ValidationReport {
    /// Detail line for a non-optimal but legal run, e.g. `not optimal: 2 ≠ 3`.
    pub fn summary(&self, spec: GameSpec) -> String {
        if self.first_violation.is_none()
            && !self.optimal
            && self.step_count != spec.optimal_length()
        {
            format!(
                "not optimal: {} ≠ {}",
                self.step_count,
                spec.optimal_length()
            )
        } else {
            self.to_string()
        }
    }
}

/// Replays `sol` from the initial board of `spec`, stopping at the first violation.
pub fn validate(spec: GameSpec, sol: &Solution, rules: Rules) -> ValidationReport {
    let fail = |step_count, v| ValidationReport {
        legal: false,
        reached_goal: false,
        step_count,
        optimal: false,
        first_violation: Some(v),
    };
    if sol.spec != spec {
        return fail(
            sol.steps.len(),
            Violation::SpecMismatch {
                expected: spec,
                found: sol.spec,
            },
        );
    }
    if let Some(&first) = sol.steps.first() {
        if (spec.n() + 1) as i64 - first as i64 != sol.d() {
            return fail(
                sol.steps.len(),
                Violation::DirectionMismatch { d: sol.d(), first },
            );
        }
    }
    let mut board = BoardState::initial(spec);
    for (idx, &pos) in sol.steps.iter().enumerate() {
        let step = idx + 1;
        let class = match board.classify(pos) {
            Ok(c) => c,
            Err(_) => return fail(sol.steps.len(), Violation::IllegalMove { step, pos }),
        };
        if rules == Rules::Optimal && !class.is_optimal() {
            return fail(
                sol.steps.len(),
                Violation::ForbiddenClass { step, pos, class },
            );
        }
        board
            .apply_in_place(pos)
            .expect("classify accepted the move");
    }
    let reached_goal = board == BoardState::goal(spec);
    ValidationReport {
        legal: true,
        reached_goal,
        step_count: sol.steps.len(),
        optimal: reached_goal && sol.steps.len() == spec.optimal_length(),
        first_violation: None,
    }
}
