//! Exact counts of optimal solutions and the states every optimal play visits.
//!
//! With `n >= m > 1` there are exactly two optimal solutions, one per first
//! move. With `m = 1` the middle of the play branches: from the state
//! `b..b O w b b..b` (checker pair `wb` with the vacancy on its left) two
//! continuations exist, from `b..b w b O b..b` only one. Counting the paths
//! from each such state gives the recurrence
//!
//! ```text
//! rho(i, 1) = rho(i+1, 2)
//! rho(i, 2) = rho(i+1, 1) + rho(i+1, 2)
//! rho(n-2, 1) = 1, rho(n-2, 2) = 2
//! ```
//!
//! solved by `rho(i, 1) = F(n-i)`, `rho(i, 2) = F(n-i+1)`, so the game has
//! `F(n) + F(n+1) = F(n+2)` optimal solutions.

use num_bigint::BigUint;

use crate::board::{BoardState, Cell, GameSpec};
use crate::error::{Error, Result};
use crate::solution::Direction;

/// Fibonacci number with `F(1) = F(2) = 1`.
pub fn fib(k: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "fibonacci index",
            value: k,
        });
    }
    let (mut a, mut b) = (BigUint::from(0u32), BigUint::from(1u32));
    for _ in 1..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(b)
}

/// Path count `rho(i, j)` for the `m = 1` game with `n` black checkers,
/// evaluated by unrolling the recurrence from `i = n - 2`.
pub fn rho(i: u64, j: u8, n: u64) -> Result<BigUint> {
    if n < 2 || i > n - 2 {
        return Err(Error::OutOfRange {
            what: "rho index",
            value: i,
        });
    }
    if j != 1 && j != 2 {
        return Err(Error::OutOfRange {
            what: "rho branch",
            value: u64::from(j),
        });
    }
    let mut one = BigUint::from(1u32);
    let mut two = BigUint::from(2u32);
    for _ in i..n - 2 {
        let next_two = &one + &two;
        one = std::mem::replace(&mut two, next_two);
    }
    Ok(if j == 1 { one } else { two })
}

/// Number of optimal solutions of `spec`.
pub fn phi(spec: GameSpec) -> BigUint {
    let (big, small) = if spec.is_canonical() {
        (spec.n(), spec.m())
    } else {
        (spec.m(), spec.n())
    };
    if small == 1 {
        fib(big as u64 + 2).expect("index is at least 3")
    } else {
        BigUint::from(2u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MilestoneKind {
    /// After each section of the first part.
    Lambda,
    /// After each round that moves a surplus black checker to the right end.
    Mu,
    /// After each section of the last part; the final one is the goal.
    Nu,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Milestone {
    pub kind: MilestoneKind,
    pub index: usize,
    pub state: BoardState,
}

/// `blacks_left` blacks, `pairs` copies of `wb` with the vacancy before or
/// after them, then `blacks_right` blacks; `whites_left`/`whites_right`
/// whites pad the ends.
fn pattern(
    whites_left: usize,
    blacks_left: usize,
    pairs: usize,
    vacant_after: bool,
    whites_right: usize,
    blacks_right: usize,
) -> BoardState {
    let mut cells = Vec::new();
    cells.extend(std::iter::repeat_n(Cell::White, whites_left));
    cells.extend(std::iter::repeat_n(Cell::Black, blacks_left));
    if !vacant_after {
        cells.push(Cell::Vacant);
    }
    for _ in 0..pairs {
        cells.extend([Cell::White, Cell::Black]);
    }
    if vacant_after {
        cells.push(Cell::Vacant);
    }
    cells.extend(std::iter::repeat_n(Cell::White, whites_right));
    cells.extend(std::iter::repeat_n(Cell::Black, blacks_right));
    BoardState::from_cells(cells).expect("pattern has one vacancy")
}

/// The forced intermediate states of the optimal play that starts in
/// `first_move`, in the order the play reaches them. Requires `n >= m > 1`.
///
/// For a leftward first move:
///
/// ```text
/// lambda_t = b^(n-t) (wb)^t O w^(m-t)   t even,  b^(n-t) O (wb)^t w^(m-t)   t odd
/// mu_t     = b^(n-m-t) (wb)^m O b^t     m+t even, b^(n-m-t) O (wb)^m b^t    m+t odd
/// nu_t     = w^t (wb)^(m-t) O b^(n-m+t) n+t even, w^t O (wb)^(m-t) b^(n-m+t) n+t odd
/// ```
///
/// A rightward first move visits the same patterns with the vacancy on the
/// other side of the `wb` block.
pub fn milestones(spec: GameSpec, first_move: Direction) -> Result<Vec<Milestone>> {
    if !spec.is_canonical() {
        return Err(Error::NotCanonical {
            n: spec.n(),
            m: spec.m(),
        });
    }
    let (n, m) = (spec.n(), spec.m());
    if m < 2 {
        return Err(Error::OutOfRange {
            what: "white checkers for milestones",
            value: m as u64,
        });
    }
    let flip = first_move == Direction::Right;
    let even = |k: usize| k.is_multiple_of(2) != flip;
    let mut out = Vec::with_capacity(n + m);
    for t in 1..=m {
        out.push(Milestone {
            kind: MilestoneKind::Lambda,
            index: t,
            state: pattern(0, n - t, t, even(t), m - t, 0),
        });
    }
    for t in 1..=n - m {
        out.push(Milestone {
            kind: MilestoneKind::Mu,
            index: t,
            state: pattern(0, n - m - t, m, even(m + t), 0, t),
        });
    }
    for t in 1..=m {
        out.push(Milestone {
            kind: MilestoneKind::Nu,
            index: t,
            state: pattern(t, 0, m - t, even(n + t), 0, n - m + t),
        });
    }
    Ok(out)
}
