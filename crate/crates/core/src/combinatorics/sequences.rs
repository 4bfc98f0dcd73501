//! Closed forms and recursions for the integer sequences that optimal and
//! feasible solution counts are compared against.

use serde::Serialize;

use crate::closed_forms::gamma_value;
use crate::error::{input, Result};
use crate::grid::GridDims;
use crate::search::combin::binomial;

/// Optimal solutions of a `1 x m` path: 1 for odd `m`, `m/2` for even `m`.
pub fn alpha_path_formula(m: usize) -> Result<u128> {
    if m == 0 {
        return input("path length must be positive");
    }
    Ok(if m % 2 == 1 { 1 } else { (m / 2) as u128 })
}

/// `k * 2^k`, the optimal-solution count of `2 x 2k`.
pub fn alpha_2row_even(k: u32) -> u128 {
    k as u128 * (1u128 << k)
}

/// The same count from `a(0) = 0, a(1) = 2, a(k) = 2 a(k-1) + 2^k`.
pub fn alpha_2row_even_recurrence(k: u32) -> u128 {
    match k {
        0 => 0,
        1 => 2,
        _ => 2 * alpha_2row_even_recurrence(k - 1) + (1u128 << k),
    }
}

/// Conjectured optimal-solution count of `2 x (2k+1)`: `(k+1)(3k+2) 2^(k-1)`.
pub fn alpha_2row_odd_conjecture(k: u32) -> u128 {
    let base = (k as u128 + 1) * (3 * k as u128 + 2);
    if k == 0 {
        base / 2
    } else {
        base << (k - 1)
    }
}

/// Optimal solutions of `2 x (2k+1)` with exactly `k` clean columns: `(k+1) 2^k`.
pub fn clean_column_bucket_formula(k: u32) -> u128 {
    (k as u128 + 1) << k
}

/// Words over `{1,2,3}` of length `len` with no factor `13` or `31`.
///
/// Transfer recursion on the last letter: after 1 the next letter is 1 or 2,
/// after 2 anything, after 3 either 2 or 3.
pub fn ternary_avoiding(len: u32) -> u128 {
    if len == 0 {
        return 1;
    }
    let (mut e1, mut e2, mut e3): (u128, u128, u128) = (1, 1, 1);
    for _ in 1..len {
        (e1, e2, e3) = (e1 + e2, e1 + e2 + e3, e2 + e3);
    }
    e1 + e2 + e3
}

/// Words over `{1,2,3}` of length `len` containing `13` or `31` as a factor.
pub fn ternary_containing(len: u32) -> Result<u128> {
    if len == 0 {
        return input("word length must be positive");
    }
    Ok(3u128.pow(len) - ternary_avoiding(len))
}

/// Large Schröder numbers 1, 2, 6, 22, 90, 394, ...
pub fn schroder(k: usize) -> u128 {
    let mut s: Vec<u128> = vec![1, 2];
    for n in 2..=k {
        let conv: u128 = (1..n - 1).map(|j| s[j] * s[n - 1 - j]).sum();
        s.push(3 * s[n - 1] + conv);
    }
    s[k]
}

/// Fibonacci numbers with `F(0) = 0`, `F(1) = 1`.
pub fn fibonacci(r: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..r {
        (a, b) = (b, a + b);
    }
    a
}

/// The two published expressions for feasible seed sets on a `1 x m` path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BetaPathFormulas {
    /// `2^((m-1)/2)` for odd `m`, `sum_{k < m/2} C(m-k-1, k)` for even `m`.
    pub formula: u128,
    /// `F(m/2)` for even `m`; `None` for odd `m`.
    pub fibonacci_claim: Option<u128>,
}

pub fn beta_path_formulas(m: usize) -> Result<BetaPathFormulas> {
    if m == 0 {
        return input("path length must be positive");
    }
    if m % 2 == 1 {
        return Ok(BetaPathFormulas {
            formula: 1u128 << ((m - 1) / 2),
            fibonacci_claim: None,
        });
    }
    let sum = (0..m / 2).map(|k| binomial(m - k - 1, k)).sum();
    Ok(BetaPathFormulas {
        formula: sum,
        fibonacci_claim: Some(fibonacci(m / 2)),
    })
}

/// `2^(nm - gamma) * alpha`, or `None` if it does not fit in 128 bits.
pub fn beta_general_formula(dims: GridDims, alpha: u128) -> Option<u128> {
    let free = dims.cell_count() - gamma_value(dims);
    if free >= 128 {
        return if alpha == 0 { Some(0) } else { None };
    }
    alpha.checked_mul(1u128 << free)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Match,
    Mismatch,
    NotComputed,
}

/// A formula value set against an enumerated value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceCheck {
    pub name: String,
    pub index: u64,
    #[serde(rename = "formula")]
    pub formula_value: u128,
    #[serde(rename = "enumerated")]
    pub enumerated_value: Option<u128>,
    pub status: CheckStatus,
}

impl SequenceCheck {
    pub fn new(
        name: impl Into<String>,
        index: u64,
        formula_value: u128,
        enumerated_value: Option<u128>,
    ) -> Self {
        let status = match enumerated_value {
            None => CheckStatus::NotComputed,
            Some(v) if v == formula_value => CheckStatus::Match,
            Some(_) => CheckStatus::Mismatch,
        };
        SequenceCheck {
            name: name.into(),
            index,
            formula_value,
            enumerated_value,
            status,
        }
    }
}
