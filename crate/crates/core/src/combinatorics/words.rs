//! Column words for narrow grids, clean-column statistics and upper bounds.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::sequences::clean_column_bucket_formula;
use crate::closed_forms::gamma_value;
use crate::error::{input, Error, Result};
use crate::grid::{CellSet, GridDims};

/// One letter per column: 0 for a clean column, otherwise the row of its only seed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColWord(Vec<u8>);

impl ColWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|&&l| l > 3) {
            return input(format!("letter {l} is outside 0..=3"));
        }
        Ok(ColWord(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn has_factor(&self, factor: &[u8]) -> bool {
        self.0.windows(factor.len()).any(|w| w == factor)
    }

    pub fn has_letter(&self, l: u8) -> bool {
        self.0.contains(&l)
    }
}

impl fmt::Display for ColWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

impl std::str::FromStr for ColWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Input(format!("bad letter {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ColWord::new(letters)
    }
}

impl Serialize for ColWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Column word of a solution on a three-row grid.
pub fn word_encode_3rows(solution: &CellSet) -> Result<ColWord> {
    let dims = solution.dims();
    if dims.rows() != 3 {
        return input(format!("three-row encoding needs 3 rows, got {dims}"));
    }
    let mut letters = vec![0u8; dims.cols()];
    for c in solution.iter() {
        let slot = &mut letters[c.col - 1];
        if *slot != 0 {
            return Err(Error::Structure(format!(
                "column {} holds more than one seed",
                c.col
            )));
        }
        *slot = c.row as u8;
    }
    Ok(ColWord(letters))
}

/// Necessary conditions on the word of an optimal solution of `3 x 2k`.
pub fn check_3row_even_constraints(word: &ColWord) -> bool {
    if word.has_factor(&[0, 0]) {
        return false;
    }
    let a = (word.has_factor(&[1, 2]) || word.has_factor(&[2, 1])) && word.has_letter(3);
    let b = (word.has_factor(&[2, 3]) || word.has_factor(&[3, 2])) && word.has_letter(1);
    let c = word.has_factor(&[1, 0, 3]) || word.has_factor(&[3, 0, 1]);
    a || b || c
}

/// Histogram of optimal solutions of `2 x (2k+1)` by number of clean columns.
#[derive(Clone, Debug, Serialize)]
pub struct CleanColumnReport {
    pub k: usize,
    pub buckets: BTreeMap<usize, u128>,
    pub total: u128,
    /// `(k+1) 2^k`.
    pub expected_top_bucket: u128,
    /// Every key is `k - 1` or `k`.
    pub keys_in_range: bool,
    pub top_bucket_matches: bool,
}

pub fn classify_clean_columns(dims: GridDims, solutions: &[CellSet]) -> Result<CleanColumnReport> {
    let m = dims.cols();
    if dims.rows() != 2 || m.is_multiple_of(2) {
        return input(format!(
            "clean-column classification needs 2 x (2k+1), got {dims}"
        ));
    }
    let k = m / 2;
    let mut buckets = BTreeMap::new();
    for s in solutions {
        if s.dims() != dims {
            return input(format!("solution on {} does not match {dims}", s.dims()));
        }
        let mut used = vec![false; m];
        for c in s.iter() {
            used[c.col - 1] = true;
        }
        *buckets
            .entry(used.iter().filter(|&&u| !u).count())
            .or_insert(0u128) += 1;
    }
    let expected = clean_column_bucket_formula(k as u32);
    let keys_in_range = buckets.keys().all(|&c| c == k || c + 1 == k);
    let top = buckets.get(&k).copied().unwrap_or(0);
    Ok(CleanColumnReport {
        k,
        total: buckets.values().sum(),
        buckets,
        expected_top_bucket: expected,
        keys_in_range,
        top_bucket_matches: top == expected,
    })
}

/// The word conditions measured against the optimal solutions of `3 x 2k`.
#[derive(Clone, Debug, Serialize)]
pub struct ThreeRowWordReport {
    pub k: usize,
    pub alpha: u128,
    /// Optimal solutions whose word satisfies the conditions.
    pub passing: u128,
    /// Words of optimal solutions that violate the conditions, sorted.
    pub violations: Vec<String>,
    /// Optimal solutions with two seeds in some column.
    pub unencodable: Vec<String>,
    /// Words with `gamma` seeds that satisfy the conditions.
    pub accepted_words: u128,
    /// Accepted words whose seed set is optimal.
    pub accepted_optimal: u128,
}

/// Necessity is measured on the enumerated optimal solutions; sufficiency on
/// every word of length `2k` with `gamma` seeded columns.
pub fn three_row_word_report(k: usize, solutions: &[CellSet]) -> Result<ThreeRowWordReport> {
    if k == 0 {
        return input("k must be positive");
    }
    let dims = GridDims::new(3, 2 * k)?;
    let mut passing = 0;
    let mut violations = Vec::new();
    let mut unencodable = Vec::new();
    let mut optimal_words = std::collections::BTreeSet::new();
    for s in solutions {
        if s.dims() != dims {
            return input(format!("solution on {} does not match {dims}", s.dims()));
        }
        let w = match word_encode_3rows(s) {
            Ok(w) => w,
            Err(Error::Structure(_)) => {
                unencodable.push(s.to_canonical());
                continue;
            }
            Err(e) => return Err(e),
        };
        if check_3row_even_constraints(&w) {
            passing += 1;
        } else {
            violations.push(w.to_string());
        }
        optimal_words.insert(w);
    }
    violations.sort();

    let g = gamma_value(dims);
    let len = 2 * k;
    let (mut accepted, mut accepted_optimal) = (0u128, 0u128);
    let mut letters = vec![0u8; len];
    loop {
        if letters.iter().filter(|&&l| l != 0).count() == g {
            let w = ColWord(letters.clone());
            if check_3row_even_constraints(&w) {
                accepted += 1;
                accepted_optimal += u128::from(optimal_words.contains(&w));
            }
        }
        // Odometer over {0,1,2,3}^len.
        let Some(i) = letters.iter().position(|&l| l < 3) else {
            break;
        };
        letters[i] += 1;
        letters[..i].fill(0);
    }

    Ok(ThreeRowWordReport {
        k,
        alpha: solutions.len() as u128,
        passing,
        violations,
        unencodable,
        accepted_words: accepted,
        accepted_optimal,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct UpperBoundReport {
    pub dims: GridDims,
    pub alpha: u128,
    /// `n^gamma`, when the first bound applies.
    pub power_bound: Option<u128>,
    /// `gamma!`, for odd squares.
    pub factorial_bound: Option<u128>,
    pub holds: bool,
}

/// Checks `alpha` against the bounds that apply to `dims` (taken as `n <= m`).
pub fn alpha_upper_bounds(dims: GridDims, alpha: u128) -> Result<UpperBoundReport> {
    let dims = dims.canonical();
    let (n, m) = (dims.rows(), dims.cols());
    if n < 3 || m % 2 == 0 {
        return input(format!(
            "upper bounds need m >= n >= 3 with m odd, got {dims}"
        ));
    }
    let g = gamma_value(dims);
    let power_bound = (n as u128).checked_pow(g as u32);
    let factorial_bound = if n == m {
        (1..=g as u128).try_fold(1u128, |acc, x| acc.checked_mul(x))
    } else {
        None
    };
    let holds =
        power_bound.is_none_or(|b| alpha <= b) && factorial_bound.is_none_or(|b| alpha <= b);
    Ok(UpperBoundReport {
        dims,
        alpha,
        power_bound,
        factorial_bound,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::fills;
    use crate::search::{enumerate_optimal, Parallelism, PruneConfig, SearchBudget};

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    fn optimal(n: usize, m: usize) -> Vec<CellSet> {
        enumerate_optimal(
            d(n, m),
            SearchBudget::default(),
            PruneConfig::safe(),
            true,
            Parallelism::default(),
        )
        .unwrap()
        .witnesses
        .unwrap()
    }

    #[test]
    fn word_checker_examples() {
        let w: ColWord = "1003".parse().unwrap();
        assert!(!check_3row_even_constraints(&w));
        for tail in ["", "2", "13", "0"] {
            let w: ColWord = format!("103{tail}").parse().unwrap();
            assert!(check_3row_even_constraints(&w), "{w}");
        }
        assert!(check_3row_even_constraints(&"1213".parse().unwrap()));
        assert!(!check_3row_even_constraints(&"1212".parse().unwrap()));
        assert!("14".parse::<ColWord>().is_err());
    }

    #[test]
    fn three_row_words() {
        let sols = optimal(3, 4);
        assert_eq!(sols.len(), 20);
        for s in &sols {
            assert_eq!(word_encode_3rows(s).unwrap().letters().len(), 4);
        }
        // 1013 is optimal ({1,1},{1,3},{3,4} fills 3x4) yet meets none of the
        // three alternatives, so the conditions are not necessary.
        let r = three_row_word_report(2, &sols).unwrap();
        assert_eq!((r.alpha, r.passing), (20, 16));
        assert_eq!(r.violations, ["1013", "1303", "3031", "3101"]);
        assert_eq!((r.accepted_words, r.accepted_optimal), (28, 16));
        assert!(fills(&CellSet::parse(d(3, 4), "1,1;1,3;3,4").unwrap()));

        let r = three_row_word_report(3, &optimal(3, 6)).unwrap();
        assert_eq!((r.alpha, r.passing, r.violations.len()), (130, 116, 14));
        assert_eq!((r.accepted_words, r.accepted_optimal), (384, 116));
        let r = three_row_word_report(4, &optimal(3, 8)).unwrap();
        assert_eq!((r.alpha, r.passing, r.violations.len()), (640, 592, 48));
        assert_eq!((r.accepted_words, r.accepted_optimal), (3040, 592));
        assert!(r.unencodable.is_empty());
    }

    #[test]
    fn encode_rejects_two_seeds_in_a_column() {
        let s = CellSet::parse(d(3, 4), "1,1;3,1;2,4").unwrap();
        assert!(matches!(word_encode_3rows(&s), Err(Error::Structure(_))));
        let s = CellSet::parse(d(3, 4), "1,1;2,3").unwrap();
        assert_eq!(word_encode_3rows(&s).unwrap().to_string(), "1020");
    }

    #[test]
    fn clean_columns() {
        for (k, top, total) in [(1, 4, 10), (2, 12, 48), (3, 32, 176)] {
            let dims = d(2, 2 * k + 1);
            let r = classify_clean_columns(dims, &optimal(2, 2 * k + 1)).unwrap();
            assert_eq!(r.total, total);
            assert!(r.keys_in_range, "{:?}", r.buckets);
            assert_eq!(r.buckets[&k], top);
            assert!(r.top_bucket_matches);
        }
        assert!(classify_clean_columns(d(2, 4), &[]).is_err());
    }

    #[test]
    fn upper_bounds() {
        let r = alpha_upper_bounds(d(3, 5), 10).unwrap();
        assert_eq!(
            (r.power_bound, r.factorial_bound, r.holds),
            (Some(27), None, true)
        );
        let r = alpha_upper_bounds(d(7, 7), 22).unwrap();
        assert_eq!(r.factorial_bound, Some(24));
        assert!(r.holds);
        let r = alpha_upper_bounds(d(5, 5), 6).unwrap();
        assert_eq!(r.factorial_bound, Some(6));
        assert!(r.holds);
        assert!(!alpha_upper_bounds(d(5, 5), 7).unwrap().holds);
        assert!(alpha_upper_bounds(d(2, 5), 1).is_err());
        assert!(alpha_upper_bounds(d(3, 4), 1).is_err());
    }
}
