//! Reference computations shared by the integration tests. None of these go
//! through the code paths they are used to check.

#![allow(dead_code)]

use checkers_core::GameSpec;
use num_bigint::{BigInt, BigUint};

pub fn spec(n: usize, m: usize) -> GameSpec {
    GameSpec::new(n, m).unwrap()
}

/// All `(n, m)` with `n, m >= 1` and `n + m <= max_sum`.
pub fn specs_up_to_sum(max_sum: usize) -> Vec<GameSpec> {
    let mut out = Vec::new();
    for n in 1..max_sum {
        for m in 1..=max_sum - n {
            out.push(spec(n, m));
        }
    }
    out
}

/// All `(n, m)` with `1 <= m <= n <= max_n`.
pub fn canonical_specs(max_n: usize) -> Vec<GameSpec> {
    (1..=max_n)
        .flat_map(|n| (1..=n).map(move |m| spec(n, m)))
        .collect()
}

/// Fixed-point scale, 40 decimal digits.
fn scale() -> BigUint {
    BigUint::from(10u32).pow(40)
}

/// `floor((sqrt(8i+1) - 1) / 2)` evaluated to 40 decimal digits.
///
/// With `s = floor(sqrt(8i+1) * S)` the scaled value `2S f(i)` lies in the
/// half-open interval `[s - S, s - S + 1)`, which contains no multiple of
/// `2S` in its interior, so the floor is exact.
pub fn f1_floor_hp(i: u64) -> u64 {
    let s_ = scale();
    let root = (BigUint::from(8 * i + 1) * &s_ * &s_).sqrt();
    let num = root - &s_;
    let q: BigUint = num / (&s_ * 2u32);
    q.try_into().unwrap()
}

/// `floor((r + m) / (m + 1))` in 40-digit fixed point.
pub fn f2_floor_hp(m: u64, r: u64) -> u64 {
    let s_ = scale();
    let scaled: BigUint = BigUint::from(r + m) * &s_ / BigUint::from(m + 1);
    let q: BigUint = scaled / &s_;
    q.try_into().unwrap()
}

/// `floor(m + 3/2 - sqrt(m(m+1) - 2r + 9/4))` in 40-digit fixed point.
///
/// Scaled by `2S` this is `(2m+3)S - S sqrt(D)` with `D = 4m(m+1) - 8r + 9`.
/// The root is exact when `D` is a perfect square; otherwise it lies strictly
/// between `s` and `s + 1`.
pub fn f3_floor_hp(m: u64, r: u64) -> u64 {
    let s_ = scale();
    let disc = BigUint::from(4 * m * (m + 1) + 9 - 8 * r);
    let radicand = disc * &s_ * &s_;
    let root = radicand.sqrt();
    let exact = &root * &root == radicand;
    let top = BigUint::from(2 * m + 3) * &s_ - &root;
    let num = if exact { top } else { top - 1u32 };
    let q: BigUint = num / (&s_ * 2u32);
    q.try_into().unwrap()
}

/// Section index of every step of part 1 up to `len`, by walking sections of
/// sizes 2, 3, 4, ...
pub fn part1_sections_walk(len: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(len as usize);
    let mut section = 1;
    while (out.len() as u64) < len {
        for _ in 0..=section {
            out.push(section);
        }
        section += 1;
    }
    out.truncate(len as usize);
    out
}

/// `(section, offset)` of each step of a part-2 block of `rounds` sections of size `m + 1`.
pub fn part2_sections_walk(m: u64, rounds: u64) -> Vec<(u64, u64)> {
    (1..=rounds)
        .flat_map(|b| (1..=m + 1).map(move |p| (b, p)))
        .collect()
}

/// `(section, offset)` of each step of part 3: sections of size m, m-1, ..., 1.
pub fn part3_sections_walk(m: u64) -> Vec<(u64, u64)> {
    (1..=m)
        .flat_map(|g| (1..=m - g + 1).map(move |q| (g, q)))
        .collect()
}

/// `F(k)` from Binet's formula evaluated exactly in `Z[sqrt 5]`.
///
/// `(1 + sqrt 5)^k - (1 - sqrt 5)^k = 2 b sqrt 5` where `b` is the `sqrt 5`
/// coefficient of `(1 + sqrt 5)^k`, so `F(k) = 2b / 2^k`.
pub fn binet_exact(k: u32) -> BigUint {
    let (mut a, mut b) = (BigInt::from(1), BigInt::from(0));
    for _ in 0..k {
        // (a + b sqrt5)(1 + sqrt5) = (a + 5b) + (a + b) sqrt5
        let next_a = &a + &b * 5;
        let next_b = &a + &b;
        a = next_a;
        b = next_b;
    }
    let twice_b = b * 2;
    let denom = BigInt::from(1) << k;
    assert_eq!(
        &twice_b % &denom,
        BigInt::from(0),
        "Binet value must be an integer"
    );
    let value: BigInt = twice_b / denom;
    value
        .to_biguint()
        .expect("Fibonacci numbers are non-negative")
}

/// `F(k)` from Binet's formula in floating point.
pub fn binet_float(k: i32) -> f64 {
    let sqrt5 = 5f64.sqrt();
    (((1.0 + sqrt5) / 2.0).powi(k) - ((1.0 - sqrt5) / 2.0).powi(k)) / sqrt5
}
