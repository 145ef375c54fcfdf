//! Linear-time construction of an optimal solution.
//!
//! Works on games with `n >= m` in four stages:
//!
//! 1. `m` rounds; round `i` makes `i - 1` jumps and one slide in the current
//!    direction, then flips the direction. The board ends as
//!    `b^(n-m) O (bw)^m` or `b^(n-m) (bw)^m O`.
//! 2. `m` jumps turn the `bw` pairs into `wb` pairs.
//! 3. `n - m` rounds of one rightward slide, a flip, and `m` jumps carry the
//!    surplus black checkers to the right end.
//! 4. For `i = m` down to 1: flip, slide, `i - 1` jumps. This is stage 1 run
//!    backwards and ends at the goal.
//!
//! Stage lengths are `m(m+1)/2`, `m`, `(n-m)(m+1)` and `m(m+1)/2`, which add up
//! to `nm + n + m`. The board is simulated alongside so every emitted position
//! refers to a real checker.

pub use crate::solution::Direction;

use crate::board::{BoardState, GameSpec};
use crate::error::{Error, Result};
use crate::solution::Solution;

/// Number of positions emitted by each of the four stages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StageLengths(pub [usize; 4]);

impl StageLengths {
    /// The budgets each stage must meet for game `spec`.
    pub fn expected(spec: GameSpec) -> StageLengths {
        let (n, m) = (spec.n(), spec.m());
        let tri = m * (m + 1) / 2;
        StageLengths([tri, m, (n - m) * (m + 1), tri])
    }

    pub fn total(self) -> usize {
        self.0.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub solution: Solution,
    pub stages: StageLengths,
}

/// Board plus the current move direction, recording every move made.
#[derive(Clone, Debug)]
pub struct Cursor {
    spec: GameSpec,
    board: BoardState,
    dir: Direction,
    steps: Vec<usize>,
}

impl Cursor {
    pub fn new(spec: GameSpec, dir: Direction) -> Result<Cursor> {
        if !spec.is_canonical() {
            return Err(Error::NotCanonical {
                n: spec.n(),
                m: spec.m(),
            });
        }
        Ok(Cursor {
            spec,
            board: BoardState::initial(spec),
            dir,
            steps: Vec::with_capacity(spec.optimal_length()),
        })
    }

    pub fn board(&self) -> &BoardState {
        &self.board
    }

    pub fn direction(&self) -> Direction {
        self.dir
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    fn step(&mut self, dir: Direction, distance: usize) {
        let v = self.board.vacant_pos();
        let pos = match dir {
            Direction::Right => v - distance,
            Direction::Left => v + distance,
        };
        debug_assert!(
            self.board.classify(pos).is_ok_and(|c| c.is_optimal()),
            "non-optimal move from {pos} on {}",
            self.board
        );
        self.board
            .apply_in_place(pos)
            .expect("construction only makes in-bounds moves");
        self.steps.push(pos);
    }

    pub fn slide(&mut self, dir: Direction) {
        self.step(dir, 1);
    }

    pub fn jump(&mut self, dir: Direction) {
        self.step(dir, 2);
    }

    pub fn change(&mut self) {
        self.dir = self.dir.flip();
    }

    fn emitted_since(&self, start: usize) -> &[usize] {
        &self.steps[start..]
    }

    pub fn stage1(&mut self) -> &[usize] {
        let start = self.steps.len();
        for i in 1..=self.spec.m() {
            for _ in 1..i {
                self.jump(self.dir);
            }
            self.slide(self.dir);
            self.change();
        }
        self.emitted_since(start)
    }

    pub fn stage2(&mut self) -> &[usize] {
        let start = self.steps.len();
        for _ in 0..self.spec.m() {
            self.jump(self.dir);
        }
        self.emitted_since(start)
    }

    pub fn stage3(&mut self) -> &[usize] {
        let start = self.steps.len();
        for _ in 0..self.spec.n() - self.spec.m() {
            // always rightward, whatever the current direction
            self.slide(Direction::Right);
            self.change();
            for _ in 0..self.spec.m() {
                self.jump(self.dir);
            }
        }
        self.emitted_since(start)
    }

    pub fn stage4(&mut self) -> &[usize] {
        let start = self.steps.len();
        for i in (1..=self.spec.m()).rev() {
            self.change();
            self.slide(self.dir);
            for _ in 1..i {
                self.jump(self.dir);
            }
        }
        self.emitted_since(start)
    }

    pub fn into_steps(self) -> Vec<usize> {
        self.steps
    }
}

/// Runs all four stages, reporting how many moves each produced.
pub fn construct_staged(spec: GameSpec, dir: Direction) -> Result<Construction> {
    let mut cursor = Cursor::new(spec, dir)?;
    let lengths = [
        cursor.stage1().len(),
        cursor.stage2().len(),
        cursor.stage3().len(),
        cursor.stage4().len(),
    ];
    debug_assert_eq!(*cursor.board(), BoardState::goal(spec));
    Ok(Construction {
        solution: Solution::new(spec, dir, cursor.into_steps()),
        stages: StageLengths(lengths),
    })
}

/// An optimal solution of `spec` (which must have `n >= m`) starting in `dir`.
pub fn construct(spec: GameSpec, dir: Direction) -> Result<Solution> {
    construct_staged(spec, dir).map(|c| c.solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Rules;
    use crate::solution::validate;

    fn spec(n: usize, m: usize) -> GameSpec {
        GameSpec::new(n, m).unwrap()
    }

    /// Recursive formulation of the same algorithm, kept as a reference.
    struct Recursive {
        cursor: Cursor,
        m: usize,
    }

    impl Recursive {
        fn move1(&mut self, t: usize) {
            if t > 1 {
                self.move1(t - 1);
            }
            for _ in 1..t {
                let d = self.cursor.dir;
                self.cursor.jump(d);
            }
            let d = self.cursor.dir;
            self.cursor.slide(d);
            self.cursor.change();
        }

        fn move3(&mut self, t: usize) {
            self.cursor.slide(Direction::Right);
            self.cursor.change();
            for _ in 0..self.m {
                let d = self.cursor.dir;
                self.cursor.jump(d);
            }
            if t > 1 {
                self.move3(t - 1);
            }
        }

        fn move4(&mut self, t: usize) {
            self.cursor.change();
            let d = self.cursor.dir;
            self.cursor.slide(d);
            for _ in 1..t {
                let d = self.cursor.dir;
                self.cursor.jump(d);
            }
            if t > 1 {
                self.move4(t - 1);
            }
        }

        fn run(spec: GameSpec, dir: Direction) -> Vec<usize> {
            let mut r = Recursive {
                cursor: Cursor::new(spec, dir).unwrap(),
                m: spec.m(),
            };
            r.move1(spec.m());
            for _ in 0..spec.m() {
                let d = r.cursor.dir;
                r.cursor.jump(d);
            }
            if spec.n() > spec.m() {
                r.move3(spec.n() - spec.m());
            }
            r.move4(spec.m());
            r.cursor.into_steps()
        }
    }

    #[test]
    fn iterative_matches_recursive() {
        for n in 1..=12 {
            for m in 1..=n {
                for dir in [Direction::Left, Direction::Right] {
                    let s = spec(n, m);
                    assert_eq!(
                        construct(s, dir).unwrap().steps,
                        Recursive::run(s, dir),
                        "{s} {dir:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_constructions() {
        assert_eq!(
            construct(spec(1, 1), Direction::Right).unwrap().steps,
            [1, 3, 2]
        );
        assert_eq!(
            construct(spec(1, 1), Direction::Left).unwrap().steps,
            [3, 1, 2]
        );
        assert_eq!(
            construct(spec(2, 2), Direction::Right).unwrap().steps,
            [2, 4, 5, 3, 1, 2, 4, 3]
        );
        assert_eq!(
            construct(spec(2, 1), Direction::Right).unwrap().steps,
            [2, 4, 3, 1, 2]
        );
        for dir in [Direction::Left, Direction::Right] {
            let sol = construct(spec(3, 2), dir).unwrap();
            assert_eq!(sol.len(), 11);
            assert!(validate(spec(3, 2), &sol, Rules::Optimal).optimal);
        }
    }

    #[test]
    fn direction_fixes_first_step() {
        for (n, m) in [(1, 1), (3, 2), (7, 3)] {
            let s = spec(n, m);
            assert_eq!(construct(s, Direction::Right).unwrap().steps[0], n);
            assert_eq!(construct(s, Direction::Left).unwrap().steps[0], n + 2);
        }
    }

    #[test]
    fn rejects_more_whites_than_blacks() {
        assert_eq!(
            construct(spec(1, 2), Direction::Right),
            Err(Error::NotCanonical { n: 1, m: 2 })
        );
    }

    #[test]
    fn stage_one_examples() {
        let mut c = Cursor::new(spec(1, 1), Direction::Left).unwrap();
        assert_eq!(c.stage1(), [3]);
        assert_eq!(c.board().to_string(), "bw.");

        let mut c = Cursor::new(spec(1, 1), Direction::Right).unwrap();
        assert_eq!(c.stage1(), [1]);
        assert_eq!(c.board().to_string(), ".bw");

        let mut c = Cursor::new(spec(2, 2), Direction::Right).unwrap();
        assert_eq!(c.stage1(), [2, 4, 5]);
        assert_eq!(c.board().to_string(), "bwbw.");
    }

    #[test]
    fn stage_two_examples() {
        let mut c = Cursor::new(spec(1, 1), Direction::Right).unwrap();
        c.stage1();
        assert_eq!(c.stage2(), [3]);
        assert_eq!(c.board().to_string(), "wb.");

        let mut c = Cursor::new(spec(2, 2), Direction::Right).unwrap();
        c.stage1();
        assert_eq!(c.stage2(), [3, 1]);
        assert_eq!(c.board().to_string(), ".wbwb");

        let mut c = Cursor::new(spec(2, 2), Direction::Left).unwrap();
        c.stage1();
        assert_eq!(c.board().to_string(), ".bwbw");
        assert_eq!(c.stage2(), [3, 5]);
        assert_eq!(c.board().to_string(), "wbwb.");
    }

    #[test]
    fn stage_three_examples() {
        let mut c = Cursor::new(spec(2, 2), Direction::Right).unwrap();
        c.stage1();
        c.stage2();
        assert!(c.stage3().is_empty());

        let mut c = Cursor::new(spec(2, 1), Direction::Right).unwrap();
        c.stage1();
        c.stage2();
        assert_eq!(c.board().to_string(), "bwb.");
        assert_eq!(c.stage3(), [3, 1]);
        assert_eq!(c.board().to_string(), ".wbb");

        let built = construct_staged(spec(3, 2), Direction::Left).unwrap();
        assert_eq!(built.stages, StageLengths([3, 2, 3, 3]));
    }

    #[test]
    fn stage_four_examples() {
        let mut c = Cursor::new(spec(1, 1), Direction::Right).unwrap();
        c.stage1();
        c.stage2();
        c.stage3();
        assert_eq!(c.stage4(), [2]);
        assert_eq!(c.board().to_string(), "w.b");

        let mut c = Cursor::new(spec(2, 2), Direction::Right).unwrap();
        c.stage1();
        c.stage2();
        assert_eq!(c.stage4(), [2, 4, 3]);
        assert_eq!(c.board().to_string(), "ww.bb");

        // the other direction emits the mirrored positions
        let mut c = Cursor::new(spec(2, 2), Direction::Left).unwrap();
        c.stage1();
        c.stage2();
        assert_eq!(c.stage4(), [4, 2, 3]);
    }

    #[test]
    fn square_games_are_mirror_symmetric() {
        for m in 1..=10 {
            let s = spec(m, m);
            assert_eq!(
                construct(s, Direction::Left).unwrap(),
                construct(s, Direction::Right).unwrap().mirror()
            );
        }
    }
}
