//! The twelve move classes and the inversion metrics they change.
//!
//! An inversion is a black checker somewhere left of a white one. A vacant
//! inversion is a black checker left of the vacancy or a white checker right of
//! it. Each move class shifts the two counts by a fixed amount, and only
//! classes 1 to 4 decrease their sum, so the sum bounds the number of moves
//! still needed.

use std::fmt;

use crate::board::Cell;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// One row of the move table. Variant names describe the checker that moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveClass {
    BlackSlidesRight = 1,
    WhiteSlidesLeft = 2,
    BlackJumpsWhiteRight = 3,
    WhiteJumpsBlackLeft = 4,
    WhiteJumpsBlackRight = 5,
    BlackJumpsWhiteLeft = 6,
    BlackSlidesLeft = 7,
    WhiteSlidesRight = 8,
    WhiteJumpsWhiteRight = 9,
    BlackJumpsBlackLeft = 10,
    WhiteJumpsWhiteLeft = 11,
    BlackJumpsBlackRight = 12,
}

impl MoveClass {
    pub const ALL: [MoveClass; 12] = [
        MoveClass::BlackSlidesRight,
        MoveClass::WhiteSlidesLeft,
        MoveClass::BlackJumpsWhiteRight,
        MoveClass::WhiteJumpsBlackLeft,
        MoveClass::WhiteJumpsBlackRight,
        MoveClass::BlackJumpsWhiteLeft,
        MoveClass::BlackSlidesLeft,
        MoveClass::WhiteSlidesRight,
        MoveClass::WhiteJumpsWhiteRight,
        MoveClass::BlackJumpsBlackLeft,
        MoveClass::WhiteJumpsWhiteLeft,
        MoveClass::BlackJumpsBlackRight,
    ];

    pub(crate) fn from_parts(mover: Cell, jumped: Option<Cell>, rightward: bool) -> MoveClass {
        use Cell::{Black, White};
        use MoveClass::*;
        match (mover, jumped, rightward) {
            (Black, None, true) => BlackSlidesRight,
            (White, None, false) => WhiteSlidesLeft,
            (Black, Some(White), true) => BlackJumpsWhiteRight,
            (White, Some(Black), false) => WhiteJumpsBlackLeft,
            (White, Some(Black), true) => WhiteJumpsBlackRight,
            (Black, Some(White), false) => BlackJumpsWhiteLeft,
            (Black, None, false) => BlackSlidesLeft,
            (White, None, true) => WhiteSlidesRight,
            (White, Some(White), true) => WhiteJumpsWhiteRight,
            (Black, Some(Black), false) => BlackJumpsBlackLeft,
            (White, Some(White), false) => WhiteJumpsWhiteLeft,
            (Black, Some(Black), true) => BlackJumpsBlackRight,
            (Cell::Vacant, _, _) | (_, Some(Cell::Vacant), _) => {
                unreachable!("a board has exactly one vacant cell")
            }
        }
    }

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(no: u8) -> Option<MoveClass> {
        Self::ALL.get(usize::from(no).checked_sub(1)?).copied()
    }

    /// The row label as printed in the move table. Rows 4 and 6 carry labels
    /// naming the jumped-over colour first; the variant name is authoritative.
    pub fn label(self) -> &'static str {
        use MoveClass::*;
        match self {
            BlackSlidesRight => "slide(b,r)",
            WhiteSlidesLeft => "slide(w,l)",
            BlackJumpsWhiteRight => "jump(b,w,r)",
            WhiteJumpsBlackLeft => "jump(b,w,l)",
            WhiteJumpsBlackRight => "jump(w,b,r)",
            BlackJumpsWhiteLeft => "jump(w,b,l)",
            BlackSlidesLeft => "slide(b,l)",
            WhiteSlidesRight => "slide(w,r)",
            WhiteJumpsWhiteRight => "jump(w,w,r)",
            BlackJumpsBlackLeft => "jump(b,b,l)",
            WhiteJumpsWhiteLeft => "jump(w,w,l)",
            BlackJumpsBlackRight => "jump(b,b,r)",
        }
    }

    pub fn mover(self) -> Cell {
        use MoveClass::*;
        match self {
            BlackSlidesRight | BlackJumpsWhiteRight | BlackJumpsWhiteLeft | BlackSlidesLeft
            | BlackJumpsBlackLeft | BlackJumpsBlackRight => Cell::Black,
            _ => Cell::White,
        }
    }

    pub fn jumped(self) -> Option<Cell> {
        use MoveClass::*;
        match self {
            BlackSlidesRight | WhiteSlidesLeft | BlackSlidesLeft | WhiteSlidesRight => None,
            BlackJumpsWhiteRight | BlackJumpsWhiteLeft | WhiteJumpsWhiteRight
            | WhiteJumpsWhiteLeft => Some(Cell::White),
            _ => Some(Cell::Black),
        }
    }

    /// 1 for a slide, 2 for a jump.
    pub fn distance(self) -> usize {
        if self.jumped().is_some() {
            2
        } else {
            1
        }
    }

    pub fn direction(self) -> Side {
        use MoveClass::*;
        match self {
            BlackSlidesRight | BlackJumpsWhiteRight | WhiteJumpsBlackRight | WhiteSlidesRight
            | WhiteJumpsWhiteRight | BlackJumpsBlackRight => Side::Right,
            _ => Side::Left,
        }
    }

    /// Change in (inversions, vacant inversions).
    pub fn delta(self) -> (i64, i64) {
        match self.number() {
            1 | 2 => (0, -1),
            3 | 4 => (-1, 0),
            5 | 6 => (1, 0),
            7 | 8 => (0, 1),
            9 | 10 => (0, 2),
            _ => (0, -2),
        }
    }

    /// Classes 1 to 4, the only ones an optimal solution uses.
    pub fn is_optimal(self) -> bool {
        self.number() <= 4
    }
}

impl fmt::Display for MoveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Metrics {
    pub inversions: u64,
    pub vacant_inversions: u64,
}

impl Metrics {
    /// Lower bound on the moves still needed to reach the goal.
    pub fn potential(self) -> u64 {
        self.inversions + self.vacant_inversions
    }

    /// `after - self` as a signed pair.
    pub fn delta_to(self, after: Metrics) -> (i64, i64) {
        (
            after.inversions as i64 - self.inversions as i64,
            after.vacant_inversions as i64 - self.vacant_inversions as i64,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbering_round_trips() {
        for (idx, class) in MoveClass::ALL.iter().enumerate() {
            assert_eq!(usize::from(class.number()), idx + 1);
            assert_eq!(MoveClass::from_number(class.number()), Some(*class));
        }
        assert_eq!(MoveClass::from_number(0), None);
        assert_eq!(MoveClass::from_number(13), None);
    }

    #[test]
    fn attributes_are_consistent_with_from_parts() {
        for class in MoveClass::ALL {
            let rebuilt = MoveClass::from_parts(
                class.mover(),
                class.jumped(),
                class.direction() == Side::Right,
            );
            assert_eq!(rebuilt, class);
        }
    }

    #[test]
    fn row_four_moves_white() {
        // □●○ → ○●□
        let c = MoveClass::WhiteJumpsBlackLeft;
        assert_eq!(c.label(), "jump(b,w,l)");
        assert_eq!(
            (c.mover(), c.jumped(), c.direction()),
            (Cell::White, Some(Cell::Black), Side::Left)
        );
    }

    #[test]
    fn only_first_four_reduce_potential() {
        for class in MoveClass::ALL {
            let (a, b) = class.delta();
            assert_eq!(
                class.is_optimal(),
                a + b == -1 && a <= 0 && b <= 0,
                "{class}"
            );
        }
    }
}
