//! Exact scalar types and canonical formatting.
//!
//! All arithmetic in this crate goes through [`Int`] and [`Rat`]; no floating
//! point is used anywhere. Rationals always carry a positive denominator and
//! are kept in lowest terms by `num-rational`, so [`format_rat`] is a
//! canonical encoding.

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

pub fn rat_frac(numer: i64, denom: i64) -> Rat {
    Rat::new(int(numer), int(denom))
}

/// Canonical string form: `p` for integers, otherwise `p/q` with `q > 0`
/// and `gcd(p, q) = 1`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses `p` or `p/q`. Rejects zero denominators.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((num, den)) => {
            let n = num.trim().parse::<BigInt>().ok()?;
            let d = den.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
    }
}

pub fn int_vec(values: &[i64]) -> Vec<Int> {
    values.iter().map(|&v| int(v)).collect()
}

pub fn rat_vec(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| rat(v)).collect()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn dot_rat_int(x: &[Rat], f: &[Int]) -> Rat {
    debug_assert_eq!(x.len(), f.len());
    let mut acc = Rat::zero();
    for (a, b) in x.iter().zip(f) {
        if !b.is_zero() {
            acc += a * Rat::from_integer(b.clone());
        }
    }
    acc
}

/// Deterministic generator for reproducible pseudo-random test data
/// (splitmix64). Not cryptographic; used only to sample rational matrices
/// for identity checks.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (`bound > 0`).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Rational with numerator in `-99..=99` and denominator in `1..=20`.
    pub fn next_rat(&mut self) -> Rat {
        let numer = self.next_below(199) as i64 - 99;
        let denom = self.next_below(20) as i64 + 1;
        rat_frac(numer, denom)
    }
}
