//! Constant-time evaluation of any single step of the constructed solution.
//!
//! Writing `d_i = x_{i-1} - x_i` with `x_0 = n + 1`, the prefix sums
//! `t_i = d_1 + ... + d_i` give `x_i = n + 1 - t_i`. The step range splits
//! into three parts (stages 1+2, stage 3, stage 4) of lengths
//!
//! ```text
//! s1 = m(m+3)/2    s2 = (n-m)(m+1)    s3 = m(m+1)/2
//! ```
//!
//! and each part into sections whose direction sums telescope, so `t_i`
//! only needs the section index and the offset inside it:
//!
//! ```text
//! part 1: alpha = floor((sqrt(8i+1) - 1) / 2)
//!         t = d (-1)^alpha (2i - alpha(alpha+2))
//! part 2: r = i - s1, beta = floor((r+m)/(m+1)), p = r - (beta-1)(m+1)
//!         t = t(s1) + beta + d (-1)^(m+beta) (2p - 2 - m(1 + (-1)^beta))
//! part 3: r = i - s1 - s2, gamma = floor(m + 3/2 - sqrt(m(m+1) - 2r + 9/4))
//!         q = r - (gamma-1)(m+1) + gamma(gamma-1)/2
//!         t = t(s1+s2) + d ((-1)^(n+gamma) (gamma + 2q - m - 2) - m (-1)^n)
//! ```
//!
//! Section boundaries fall exactly on perfect squares, so the square-root
//! floors are computed with integer square roots only.

use crate::board::GameSpec;
use crate::error::{Error, Result};
use crate::solution::{Direction, Solution};

/// `(-1)^k`.
#[inline]
fn sign(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Lengths of the three parts of the step range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Boundaries {
    pub s1: u64,
    pub s2: u64,
    pub s3: u64,
}

impl Boundaries {
    pub fn total(self) -> u64 {
        self.s1 + self.s2 + self.s3
    }
}

pub fn boundaries(spec: GameSpec) -> Result<Boundaries> {
    if !spec.is_canonical() {
        return Err(Error::NotCanonical {
            n: spec.n(),
            m: spec.m(),
        });
    }
    let (n, m) = (spec.n() as u64, spec.m() as u64);
    Ok(Boundaries {
        s1: m * (m + 3) / 2,
        s2: (n - m) * (m + 1),
        s3: m * (m + 1) / 2,
    })
}

/// Section of step `i` within part 1. Independent of the game size.
pub fn part1_section(i: u64) -> Result<u64> {
    if i == 0 {
        return Err(Error::OutOfRange {
            what: "step",
            value: 0,
        });
    }
    Ok(((8 * i + 1).isqrt() - 1) / 2)
}

/// Section and offset `(beta, p)` of the `r`-th step of part 2.
pub fn part2_section(m: u64, r: u64) -> Result<(u64, u64)> {
    if r == 0 || m == 0 {
        return Err(Error::OutOfRange {
            what: "part 2 offset",
            value: r,
        });
    }
    let beta = (r + m) / (m + 1);
    Ok((beta, r - (beta - 1) * (m + 1)))
}

/// Section and offset `(gamma, q)` of the `r`-th step of part 3,
/// `1 <= r <= m(m+1)/2`.
pub fn part3_section(m: u64, r: u64) -> Result<(u64, u64)> {
    if r == 0 || m == 0 || r > m * (m + 1) / 2 {
        return Err(Error::OutOfRange {
            what: "part 3 offset",
            value: r,
        });
    }
    // gamma = floor((2m + 3 - sqrt(disc)) / 2) with disc = 4m(m+1) - 8r + 9;
    // floor(a - y) = a - ceil(y) for integer a.
    let disc = 4 * m * (m + 1) + 9 - 8 * r;
    let root = disc.isqrt();
    let ceil_root = if root * root == disc { root } else { root + 1 };
    let gamma = (2 * m + 3 - ceil_root) / 2;
    let q = r + gamma * (gamma - 1) / 2 - (gamma - 1) * (m + 1);
    Ok((gamma, q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    One,
    Two,
    Three,
}

/// Where a step falls: its part, the section within the part and the
/// 1-based offset inside that section, plus the prefix direction sum `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepLocator {
    pub i: u64,
    pub part: Part,
    pub section: u64,
    pub offset: u64,
    pub t: i64,
}

/// Precomputed constants for one `(spec, direction)`; evaluates any step in O(1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    spec: GameSpec,
    d: i64,
    bounds: Boundaries,
    t_end1: i64,
    t_end2: i64,
}

impl ClosedForm {
    pub fn new(spec: GameSpec, dir: Direction) -> Result<ClosedForm> {
        let bounds = boundaries(spec)?;
        let mut cf = ClosedForm {
            spec,
            d: dir.d(),
            bounds,
            t_end1: 0,
            t_end2: 0,
        };
        cf.t_end1 = cf.part1_t(bounds.s1);
        cf.t_end2 = if bounds.s2 > 0 {
            cf.part2_t(bounds.s1 + bounds.s2)
        } else {
            cf.t_end1
        };
        Ok(cf)
    }

    pub fn spec(&self) -> GameSpec {
        self.spec
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn boundaries(&self) -> Boundaries {
        self.bounds
    }

    pub fn len(&self) -> u64 {
        self.bounds.total()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn part(&self, i: u64) -> Result<Part> {
        let Boundaries { s1, s2, .. } = self.bounds;
        match i {
            0 => Err(Error::OutOfRange {
                what: "step",
                value: i,
            }),
            i if i <= s1 => Ok(Part::One),
            i if i <= s1 + s2 => Ok(Part::Two),
            i if i <= self.len() => Ok(Part::Three),
            _ => Err(Error::OutOfRange {
                what: "step",
                value: i,
            }),
        }
    }

    fn expect_part(&self, i: u64, want: Part, what: &'static str) -> Result<()> {
        match self.part(i)? {
            p if p == want => Ok(()),
            _ => Err(Error::OutOfRange { what, value: i }),
        }
    }

    pub fn alpha(&self, i: u64) -> Result<u64> {
        self.expect_part(i, Part::One, "part 1 step")?;
        part1_section(i)
    }

    pub fn beta(&self, i: u64) -> Result<u64> {
        self.expect_part(i, Part::Two, "part 2 step")?;
        Ok(part2_section(self.spec.m() as u64, i - self.bounds.s1)?.0)
    }

    pub fn p_offset(&self, i: u64) -> Result<u64> {
        self.expect_part(i, Part::Two, "part 2 step")?;
        Ok(part2_section(self.spec.m() as u64, i - self.bounds.s1)?.1)
    }

    pub fn gamma(&self, i: u64) -> Result<u64> {
        self.expect_part(i, Part::Three, "part 3 step")?;
        Ok(part3_section(self.spec.m() as u64, i - self.bounds.s1 - self.bounds.s2)?.0)
    }

    pub fn q_offset(&self, i: u64) -> Result<u64> {
        self.expect_part(i, Part::Three, "part 3 step")?;
        Ok(part3_section(self.spec.m() as u64, i - self.bounds.s1 - self.bounds.s2)?.1)
    }

    #[inline]
    fn part1_t(&self, i: u64) -> i64 {
        let alpha = ((8 * i + 1).isqrt() - 1) / 2;
        self.d * sign(alpha) * (2 * i as i64 - (alpha * (alpha + 2)) as i64)
    }

    #[inline]
    fn part2_t(&self, i: u64) -> i64 {
        let m = self.spec.m() as u64;
        let r = i - self.bounds.s1;
        let beta = (r + m) / (m + 1);
        let p = r - (beta - 1) * (m + 1);
        let m_i = m as i64;
        self.t_end1
            + beta as i64
            + self.d * sign(m + beta) * (2 * p as i64 - 2 - m_i * (1 + sign(beta)))
    }

    #[inline]
    fn part3_t(&self, i: u64) -> i64 {
        let (n, m) = (self.spec.n() as u64, self.spec.m() as u64);
        let r = i - self.bounds.s1 - self.bounds.s2;
        let (gamma, q) = part3_section(m, r).expect("offset within part 3");
        let m_i = m as i64;
        self.t_end2
            + self.d * (sign(n + gamma) * (gamma as i64 + 2 * q as i64 - m_i - 2) - m_i * sign(n))
    }

    /// Prefix sum of move directions up to step `i`.
    pub fn t_of(&self, i: u64) -> Result<i64> {
        Ok(match self.part(i)? {
            Part::One => self.part1_t(i),
            Part::Two => self.part2_t(i),
            Part::Three => self.part3_t(i),
        })
    }

    /// Position of the checker moved at step `i`.
    pub fn x_of(&self, i: u64) -> Result<usize> {
        let t = self.t_of(i)?;
        Ok((self.spec.n() as i64 + 1 - t) as usize)
    }

    pub fn locate(&self, i: u64) -> Result<StepLocator> {
        let part = self.part(i)?;
        let m = self.spec.m() as u64;
        let (section, offset) = match part {
            Part::One => {
                let alpha = part1_section(i)?;
                // section alpha starts after b(alpha-1) = (alpha-1)(alpha+2)/2 steps
                (alpha, i - (alpha - 1) * (alpha + 2) / 2)
            }
            Part::Two => part2_section(m, i - self.bounds.s1)?,
            Part::Three => part3_section(m, i - self.bounds.s1 - self.bounds.s2)?,
        };
        Ok(StepLocator {
            i,
            part,
            section,
            offset,
            t: self.t_of(i)?,
        })
    }

    /// All steps in order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).map(move |i| self.x_of(i).expect("index in range"))
    }
}

/// The whole solution, one formula evaluation per step.
pub fn sequence(spec: GameSpec, dir: Direction) -> Result<Solution> {
    let cf = ClosedForm::new(spec, dir)?;
    Ok(Solution::new(spec, dir, cf.iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, m: usize) -> GameSpec {
        GameSpec::new(n, m).unwrap()
    }

    fn cf(n: usize, m: usize, dir: Direction) -> ClosedForm {
        ClosedForm::new(spec(n, m), dir).unwrap()
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(
            boundaries(spec(2, 2)).unwrap(),
            Boundaries {
                s1: 5,
                s2: 0,
                s3: 3
            }
        );
        assert_eq!(
            boundaries(spec(3, 2)).unwrap(),
            Boundaries {
                s1: 5,
                s2: 3,
                s3: 3
            }
        );
        assert_eq!(
            boundaries(spec(1, 1)).unwrap(),
            Boundaries {
                s1: 2,
                s2: 0,
                s3: 1
            }
        );
        assert!(boundaries(spec(1, 2)).is_err());
    }

    #[test]
    fn alpha_examples() {
        for (i, a) in [(1, 1), (2, 1), (3, 2), (5, 2), (6, 3), (9, 3), (10, 4)] {
            assert_eq!(part1_section(i).unwrap(), a, "i={i}");
        }
        assert!(part1_section(0).is_err());
        let c = cf(3, 3, Direction::Right);
        assert_eq!(c.alpha(9).unwrap(), 3);
        assert!(c.alpha(10).is_err());
    }

    #[test]
    fn beta_examples() {
        let c = cf(3, 2, Direction::Right);
        assert_eq!((c.beta(6).unwrap(), c.p_offset(6).unwrap()), (1, 1));
        assert_eq!((c.beta(8).unwrap(), c.p_offset(8).unwrap()), (1, 3));
        assert!(c.beta(5).is_err());
        assert!(c.beta(9).is_err());
        let c = cf(4, 2, Direction::Right);
        assert_eq!((c.beta(11).unwrap(), c.p_offset(11).unwrap()), (2, 3));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(part3_section(2, 1).unwrap(), (1, 1));
        assert_eq!(part3_section(2, 2).unwrap(), (1, 2));
        assert_eq!(part3_section(2, 3).unwrap(), (2, 1));
        assert!(part3_section(2, 4).is_err());
        let c = cf(2, 2, Direction::Left);
        assert_eq!((c.gamma(8).unwrap(), c.q_offset(8).unwrap()), (2, 1));
        assert!(c.gamma(5).is_err());
    }

    #[test]
    fn t_examples() {
        assert_eq!(cf(1, 1, Direction::Right).t_of(1).unwrap(), 1);
        let c = cf(2, 2, Direction::Right);
        assert_eq!(c.t_of(5).unwrap(), 2);
        assert_eq!(c.x_of(5).unwrap(), 1);
        assert_eq!(c.t_of(8).unwrap(), 0);
        assert_eq!(c.x_of(8).unwrap(), 3);
        assert!(c.t_of(0).is_err());
        assert!(c.t_of(9).is_err());
    }

    #[test]
    fn x_examples() {
        let c = cf(1, 1, Direction::Right);
        assert_eq!(c.iter().collect::<Vec<_>>(), [1, 3, 2]);
        assert_eq!(cf(1, 1, Direction::Left).x_of(1).unwrap(), 3);
        assert_eq!(
            sequence(spec(2, 2), Direction::Right).unwrap().steps,
            [2, 4, 5, 3, 1, 2, 4, 3]
        );
        assert_eq!(
            sequence(spec(2, 1), Direction::Left).unwrap().steps,
            [4, 2, 1, 3, 2]
        );
        assert_eq!(sequence(spec(5, 3), Direction::Left).unwrap().len(), 23);
    }

    #[test]
    fn locator_offsets_stay_inside_sections() {
        let c = cf(6, 3, Direction::Right);
        let m = 3;
        for i in 1..=c.len() {
            let loc = c.locate(i).unwrap();
            let width = match loc.part {
                Part::One => loc.section + 1,
                Part::Two => m + 1,
                Part::Three => m - loc.section + 1,
            };
            assert!((1..=width).contains(&loc.offset), "{loc:?}");
            assert_eq!(loc.t, 7 - c.x_of(i).unwrap() as i64);
        }
    }

    #[test]
    fn part_constants_continue_across_boundaries() {
        for (n, m) in [(1, 1), (3, 1), (5, 3), (9, 4)] {
            for dir in [Direction::Left, Direction::Right] {
                let c = cf(n, m, dir);
                let b = c.boundaries();
                assert_eq!(c.t_of(b.s1).unwrap(), c.t_end1);
                assert_eq!(c.t_of(b.s1 + b.s2).unwrap(), c.t_end2);
            }
        }
    }
}
