//! Backtracking enumeration of every optimal solution of a small game.
//!
//! The search only tries the four optimal move classes, in a fixed order:
//! black jumps right from `e - 2`, white jumps left from `e + 2`, black slides
//! right from `e - 1`, white slides left from `e + 1` (`e` is the vacant
//! position). Depth is capped at `nm + n + m`.

use std::ops::ControlFlow;

use crate::board::{BoardState, Cell, GameSpec};
use crate::error::Result;
use crate::solution::Solution;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub solutions: Vec<Solution>,
    /// Set when the limit stopped the search before it was exhausted.
    pub truncated: bool,
}

struct Search<'a, F> {
    cells: Vec<Cell>,
    goal: Vec<Cell>,
    path: Vec<usize>,
    depth: usize,
    goal_vacant: usize,
    visit: &'a mut F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn at(&self, pos: usize) -> Cell {
        self.cells[pos - 1]
    }

    fn descend(&mut self, e: usize, from: usize) -> ControlFlow<()> {
        self.cells.swap(e - 1, from - 1);
        self.path.push(from);
        let flow = self.run(from);
        self.path.pop();
        self.cells.swap(e - 1, from - 1);
        flow
    }

    fn run(&mut self, e: usize) -> ControlFlow<()> {
        if self.path.len() == self.depth {
            if e == self.goal_vacant && self.cells == self.goal {
                return (self.visit)(&self.path);
            }
            return ControlFlow::Continue(());
        }
        let len = self.cells.len();
        if e > 2 && self.at(e - 2) == Cell::Black && self.at(e - 1) == Cell::White {
            self.descend(e, e - 2)?;
        }
        if e + 2 <= len && self.at(e + 2) == Cell::White && self.at(e + 1) == Cell::Black {
            self.descend(e, e + 2)?;
        }
        if e > 1 && self.at(e - 1) == Cell::Black {
            self.descend(e, e - 1)?;
        }
        if e < len && self.at(e + 1) == Cell::White {
            self.descend(e, e + 1)?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit` with each optimal solution in search order. Returns
/// `Ok(false)` if `visit` broke out early.
pub fn for_each_solution<F>(spec: GameSpec, mut visit: F) -> Result<bool>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let initial = BoardState::initial(spec);
    let goal = BoardState::goal(spec);
    let mut search = Search {
        cells: initial.cells().to_vec(),
        goal: goal.cells().to_vec(),
        path: Vec::with_capacity(spec.optimal_length()),
        depth: spec.optimal_length(),
        goal_vacant: spec.m() + 1,
        visit: &mut visit,
    };
    Ok(search.run(initial.vacant_pos()).is_continue())
}

/// All optimal solutions, or the first `limit` of them.
pub fn enumerate(spec: GameSpec, limit: Option<usize>) -> Result<Enumeration> {
    let mut solutions = Vec::new();
    let mut truncated = false;
    for_each_solution(spec, |steps| {
        if limit.is_some_and(|l| solutions.len() >= l) {
            truncated = true;
            return ControlFlow::Break(());
        }
        solutions.push(Solution::from_steps(spec, steps.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(Enumeration {
        solutions,
        truncated,
    })
}

/// Number of optimal solutions found by exhaustive search.
pub fn count(spec: GameSpec) -> Result<u64> {
    let mut total = 0u64;
    for_each_solution(spec, |_| {
        total += 1;
        ControlFlow::Continue(())
    })?;
    Ok(total)
}
