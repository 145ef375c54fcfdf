//! Board representation for the shifting-checkers puzzle.
//!
//! A game with `n` black and `m` white checkers is played on a row of
//! `n + m + 1` cells numbered from 1. Initially the blacks fill `1..=n`, the
//! cell `n + 1` is vacant and the whites fill the rest; the goal mirrors that
//! layout. A move takes the checker at some position and slides it into the
//! vacant neighbour or jumps it over one checker into the vacant cell.
//!
//! Boards print as strings over `b`, `w` and `.`, e.g. `bb.ww`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::moves::{Metrics, MoveClass};

/// The checker counts that define one game instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameSpec {
    n: usize,
    m: usize,
}

impl GameSpec {
    /// `n` black checkers, `m` white checkers. Both must be positive.
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidSpec { n, m });
        }
        // nm + n + m must stay representable.
        n.checked_mul(m)
            .and_then(|nm| nm.checked_add(n))
            .and_then(|v| v.checked_add(m))
            .and_then(|v| v.checked_add(2))
            .ok_or(Error::InvalidSpec { n, m })?;
        Ok(GameSpec { n, m })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn board_len(self) -> usize {
        self.n + self.m + 1
    }

    /// Minimum number of moves to solve the game: `nm + n + m`.
    pub fn optimal_length(self) -> usize {
        self.n * self.m + self.n + self.m
    }

    /// The game with colours exchanged, `(m, n)`.
    pub fn mirrored(self) -> GameSpec {
        GameSpec {
            n: self.m,
            m: self.n,
        }
    }

    /// True when `n >= m`, the orientation the constructive algorithms work in.
    pub fn is_canonical(self) -> bool {
        self.n >= self.m
    }
}

impl fmt::Display for GameSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Black,
    White,
    Vacant,
}

impl Cell {
    pub fn to_char(self) -> char {
        match self {
            Cell::Black => 'b',
            Cell::White => 'w',
            Cell::Vacant => '.',
        }
    }

    pub fn from_char(c: char) -> Option<Cell> {
        match c {
            'b' => Some(Cell::Black),
            'w' => Some(Cell::White),
            '.' => Some(Cell::Vacant),
            _ => None,
        }
    }

    /// Black and white exchanged; vacant stays vacant.
    pub fn swapped(self) -> Cell {
        match self {
            Cell::Black => Cell::White,
            Cell::White => Cell::Black,
            Cell::Vacant => Cell::Vacant,
        }
    }
}

/// Which moves count as legal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rules {
    /// Any slide or jump into the vacant cell.
    Full,
    /// Only the four move classes that can appear in an optimal solution.
    Optimal,
}

/// A row of cells with exactly one vacancy.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoardState {
    cells: Vec<Cell>,
    vacant: usize,
}

impl BoardState {
    pub fn initial(spec: GameSpec) -> BoardState {
        let mut cells = Vec::with_capacity(spec.board_len());
        cells.extend(std::iter::repeat_n(Cell::Black, spec.n));
        cells.push(Cell::Vacant);
        cells.extend(std::iter::repeat_n(Cell::White, spec.m));
        BoardState {
            cells,
            vacant: spec.n + 1,
        }
    }

    pub fn goal(spec: GameSpec) -> BoardState {
        let mut cells = Vec::with_capacity(spec.board_len());
        cells.extend(std::iter::repeat_n(Cell::White, spec.m));
        cells.push(Cell::Vacant);
        cells.extend(std::iter::repeat_n(Cell::Black, spec.n));
        BoardState {
            cells,
            vacant: spec.m + 1,
        }
    }

    /// Builds a board from cells; exactly one must be vacant.
    pub fn from_cells(cells: Vec<Cell>) -> Result<BoardState> {
        let mut vacant = None;
        for (idx, &c) in cells.iter().enumerate() {
            if c == Cell::Vacant {
                if vacant.is_some() {
                    return Err(Error::ParseBoard("more than one vacant cell".into()));
                }
                vacant = Some(idx + 1);
            }
        }
        let vacant = vacant.ok_or_else(|| Error::ParseBoard("no vacant cell".into()))?;
        Ok(BoardState { cells, vacant })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// 1-based position of the vacant cell.
    pub fn vacant_pos(&self) -> usize {
        self.vacant
    }

    /// Cell at 1-based `pos`, or `None` outside the board.
    pub fn cell(&self, pos: usize) -> Option<Cell> {
        pos.checked_sub(1).and_then(|i| self.cells.get(i).copied())
    }

    /// Number of (black, white) checkers.
    pub fn counts(&self) -> (usize, usize) {
        let blacks = self.cells.iter().filter(|&&c| c == Cell::Black).count();
        (blacks, self.cells.len() - 1 - blacks)
    }

    /// The game this board belongs to.
    pub fn spec(&self) -> Result<GameSpec> {
        let (n, m) = self.counts();
        GameSpec::new(n, m)
    }

    /// Source positions of every move legal under `rules`, ascending.
    pub fn legal_moves(&self, rules: Rules) -> Vec<usize> {
        let v = self.vacant;
        [v.wrapping_sub(2), v.wrapping_sub(1), v + 1, v + 2]
            .into_iter()
            .filter(|&p| p >= 1 && p <= self.cells.len())
            .filter(|&p| match rules {
                Rules::Full => true,
                Rules::Optimal => self.classify(p).is_ok_and(MoveClass::is_optimal),
            })
            .collect()
    }

    fn check_move(&self, pos: usize) -> Result<()> {
        let v = self.vacant;
        let dist = pos.abs_diff(v);
        if pos == 0 || pos > self.cells.len() || !(1..=2).contains(&dist) {
            return Err(Error::IllegalMove { pos, vacant: v });
        }
        Ok(())
    }

    /// Moves the checker at `pos` into the vacant cell.
    pub fn apply(&self, pos: usize) -> Result<BoardState> {
        let mut next = self.clone();
        next.apply_in_place(pos)?;
        Ok(next)
    }

    pub fn apply_in_place(&mut self, pos: usize) -> Result<()> {
        self.check_move(pos)?;
        self.cells.swap(pos - 1, self.vacant - 1);
        self.vacant = pos;
        Ok(())
    }

    /// The move class of moving the checker at `pos`.
    pub fn classify(&self, pos: usize) -> Result<MoveClass> {
        self.check_move(pos)?;
        let mover = self.cells[pos - 1];
        let jumped = if pos.abs_diff(self.vacant) == 2 {
            Some(self.cells[(pos + self.vacant) / 2 - 1])
        } else {
            None
        };
        let rightward = pos < self.vacant;
        Ok(MoveClass::from_parts(mover, jumped, rightward))
    }

    pub fn metrics(&self) -> Metrics {
        let mut blacks_seen = 0u64;
        let mut inversions = 0u64;
        let mut vacant_inversions = 0u64;
        let mut left_of_vacant = true;
        for &c in &self.cells {
            match c {
                Cell::Black => {
                    blacks_seen += 1;
                    if left_of_vacant {
                        vacant_inversions += 1;
                    }
                }
                Cell::White => {
                    inversions += blacks_seen;
                    if !left_of_vacant {
                        vacant_inversions += 1;
                    }
                }
                Cell::Vacant => left_of_vacant = false,
            }
        }
        Metrics {
            inversions,
            vacant_inversions,
        }
    }

    /// Reverses the row and exchanges colours. Maps game `(n, m)` onto `(m, n)`.
    pub fn mirror(&self) -> BoardState {
        let cells: Vec<Cell> = self.cells.iter().rev().map(|c| c.swapped()).collect();
        BoardState {
            vacant: self.cells.len() + 1 - self.vacant,
            cells,
        }
    }
}

impl fmt::Display for BoardState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.cells.iter().map(|c| c.to_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for BoardState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cells = s
            .chars()
            .map(|c| {
                Cell::from_char(c).ok_or_else(|| Error::ParseBoard(format!("unexpected {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BoardState::from_cells(cells)
    }
}
