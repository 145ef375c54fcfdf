//! Wall-clock comparison of the two solution engines over a grid of sizes.

use std::hint::black_box;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use checkers_core::{solve, ClosedForm, Direction, GameSpec, Method};

use crate::error::{tolerate_broken_pipe, CliError, CliResult};

/// 1, 2, 5, 10, 20, 50, ... up to `max`, always ending with `max`.
pub fn axis(max: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut decade = 1usize;
    'outer: loop {
        for k in [1, 2, 5] {
            let Some(v) = decade.checked_mul(k) else {
                break 'outer;
            };
            if v >= max {
                break 'outer;
            }
            out.push(v);
        }
        match decade.checked_mul(10) {
            Some(d) => decade = d,
            None => break,
        }
    }
    out.push(max);
    out
}

/// Grid cells ordered by solution length, ties broken by `(n, m)`.
pub fn grid(max_n: usize, max_m: usize) -> Vec<GameSpec> {
    let mut cells: Vec<GameSpec> = axis(max_n)
        .into_iter()
        .flat_map(|n| {
            axis(max_m)
                .into_iter()
                .filter_map(move |m| GameSpec::new(n, m).ok())
        })
        .collect();
    cells.sort_by_key(|s| (s.optimal_length(), s.n(), s.m()));
    cells
}

struct Row {
    spec: GameSpec,
    construct: Duration,
    closed_form: Duration,
    random_ns: f64,
}

fn measure(spec: GameSpec, samples: usize, rng: &mut StdRng) -> CliResult<Row> {
    let failed = |e: checkers_core::Error| CliError::Failed(e.to_string());
    let t = Instant::now();
    black_box(solve(spec, Direction::Left, Method::Construct).map_err(failed)?);
    let construct = t.elapsed();

    let t = Instant::now();
    black_box(solve(spec, Direction::Left, Method::ClosedForm).map_err(failed)?);
    let closed_form = t.elapsed();

    // Tall games are answered through their mirror image, so time that one.
    let canonical = if spec.is_canonical() {
        spec
    } else {
        spec.mirrored()
    };
    let cf = ClosedForm::new(canonical, Direction::Left).map_err(failed)?;
    let picks: Vec<u64> = (0..samples).map(|_| rng.gen_range(1..=cf.len())).collect();
    let t = Instant::now();
    let mut acc = 0usize;
    for &i in &picks {
        acc = acc.wrapping_add(cf.x_of(i).map_err(failed)?);
    }
    black_box(acc);
    let random_ns = t.elapsed().as_nanos() as f64 / samples.max(1) as f64;
    Ok(Row {
        spec,
        construct,
        closed_form,
        random_ns,
    })
}

pub fn run(max_n: usize, max_m: usize, samples: usize) -> CliResult {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut out = io::stdout().lock();
    let header = format!(
        "{:>7} {:>7} {:>14} {:>14} {:>16} {:>11}",
        "n", "m", "steps", "construct_ms", "closed_form_ms", "random_ns"
    );
    tolerate_broken_pipe(writeln!(out, "{header}"))?;
    for spec in grid(max_n, max_m) {
        let row = measure(spec, samples, &mut rng)?;
        let line = format!(
            "{:>7} {:>7} {:>14} {:>14.3} {:>16.3} {:>11.1}",
            row.spec.n(),
            row.spec.m(),
            row.spec.optimal_length(),
            row.construct.as_secs_f64() * 1e3,
            row.closed_form.as_secs_f64() * 1e3,
            row.random_ns
        );
        tolerate_broken_pipe(writeln!(out, "{line}").and_then(|_| out.flush()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_values() {
        assert_eq!(axis(1), [1]);
        assert_eq!(axis(7), [1, 2, 5, 7]);
        assert_eq!(axis(1000), [1, 2, 5, 10, 20, 50, 100, 200, 500, 1000]);
    }

    #[test]
    fn grid_is_sorted_by_length() {
        let g = grid(100, 20);
        assert_eq!(g.len(), 7 * 5);
        assert!(g
            .windows(2)
            .all(|w| w[0].optimal_length() <= w[1].optimal_length()));
    }
}
