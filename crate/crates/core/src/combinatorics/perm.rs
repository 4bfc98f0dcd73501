//! Permutation encoding of optimal solutions on odd square grids, and
//! classical pattern containment.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::sequences::schroder;
use crate::error::{input, Error, Result};
use crate::grid::{Cell, CellSet, GridDims};
use crate::search::combin;
use crate::search::{enumerate_optimal, Parallelism, PruneConfig, SearchBudget};

/// A permutation of `1..=k` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; values.len() + 1];
        for &v in &values {
            if v == 0 || v > values.len() || std::mem::replace(&mut seen[v], true) {
                return input(format!(
                    "{values:?} is not a permutation of 1..={}",
                    values.len()
                ));
            }
        }
        Ok(Perm(values))
    }

    /// Order-isomorphic permutation of distinct values (rank-normalization).
    pub fn standardize(values: &[usize]) -> Result<Self> {
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return input(format!("{values:?} has repeated values"));
        }
        let ranks = values
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() + 1)
            .collect();
        Ok(Perm(ranks))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse(&self) -> Perm {
        Perm(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Perm {
        let k = self.0.len() + 1;
        Perm(self.0.iter().map(|v| k - v).collect())
    }

    /// All permutations of `1..=k` in lexicographic order.
    pub fn all(k: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (1..=k).collect();
        let mut out = vec![Perm(cur.clone())];
        loop {
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Perm(cur.clone()));
        }
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    let sep = if values.iter().all(|&v| v < 10) {
        ""
    } else {
        ","
    };
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Digits run together when every value is a single digit, comma-separated otherwise.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Perm::new(parse_word(s)?)
    }
}

/// Parses `1573` (single digits) or `1,5,7,3`.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let bad = || Error::Input(format!("cannot parse word {s:?}"));
    if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Whether some subsequence of `sigma` is order-isomorphic to `pi`.
pub fn contains_pattern(sigma: &Perm, pi: &Perm) -> bool {
    contains_pattern_in(sigma.values(), pi)
}

/// Pattern containment for any word of distinct values.
pub fn contains_pattern_in(word: &[usize], pi: &Perm) -> bool {
    let k = pi.len();
    if k > word.len() {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        // Order-isomorphic iff every pair compares the same way.
        let iso = (0..k)
            .all(|a| (a + 1..k).all(|b| (word[idx[a]] < word[idx[b]]) == (pi.0[a] < pi.0[b])));
        if iso {
            return true;
        }
        if !combin::next(&mut idx, word.len()) {
            return false;
        }
    }
}

/// Seed rows of an odd-square solution, read by increasing odd column,
/// and their rank-normalized image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareEncoding {
    pub rows: Vec<usize>,
    pub image: Perm,
}

impl SquareEncoding {
    pub fn word(&self) -> String {
        format_word(&self.rows)
    }
}

pub fn format_word(values: &[usize]) -> String {
    struct W<'a>(&'a [usize]);
    impl fmt::Display for W<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_word(f, self.0)
        }
    }
    W(values).to_string()
}

/// Encodes a solution on `(2k+1) x (2k+1)` that has exactly one seed in each
/// odd column, all in odd rows, and none in even columns.
pub fn perm_encode(solution: &CellSet) -> Result<SquareEncoding> {
    let dims = solution.dims();
    let side = dims.rows();
    if side != dims.cols() || side.is_multiple_of(2) {
        return input(format!(
            "permutation encoding needs an odd square grid, got {dims}"
        ));
    }
    let mut rows = vec![0usize; side.div_ceil(2)];
    for c in solution.iter() {
        if c.col % 2 == 0 || c.row % 2 == 0 {
            return Err(Error::Structure(format!(
                "seed {c} is not in an odd row and odd column"
            )));
        }
        let slot = &mut rows[c.col / 2];
        if *slot != 0 {
            return Err(Error::Structure(format!(
                "column {} holds more than one seed",
                c.col
            )));
        }
        *slot = c.row;
    }
    if let Some(j) = rows.iter().position(|&r| r == 0) {
        return Err(Error::Structure(format!(
            "odd column {} has no seed",
            2 * j + 1
        )));
    }
    let image =
        Perm::standardize(&rows).map_err(|_| Error::Structure("two seeds share a row".into()))?;
    Ok(SquareEncoding { rows, image })
}

/// Inverse of [`perm_encode`]: `rows[j]` is the seed row in column `2j+1`.
pub fn perm_decode(k: usize, rows: &[usize]) -> Result<CellSet> {
    let side = 2 * k + 1;
    if rows.len() != k + 1 {
        return input(format!("expected {} odd rows, got {}", k + 1, rows.len()));
    }
    let mut sorted = rows.to_vec();
    sorted.sort_unstable();
    let odd: Vec<usize> = (1..=side).step_by(2).collect();
    if sorted != odd {
        return input(format!(
            "{rows:?} is not a permutation of the odd rows 1..={side}"
        ));
    }
    let dims = GridDims::new(side, side)?;
    CellSet::from_cells(
        dims,
        rows.iter()
            .enumerate()
            .map(|(j, &r)| Cell::new(r, 2 * j + 1)),
    )
}

/// Optimal solutions of an odd square grid set against permutations that
/// avoid both 2413 and 3142.
#[derive(Clone, Debug, Serialize)]
pub struct SquarePatternReport {
    pub k: usize,
    pub alpha: u128,
    pub schroder: u128,
    /// Words (over odd rows) of the optimal solutions, sorted.
    pub optimal_words: Vec<String>,
    /// Odd-row permutations that are not optimal solutions.
    pub non_optimal_words: Vec<String>,
    pub avoiders: usize,
    /// The optimal set equals the set of pattern avoiders exactly.
    pub optimal_equals_avoiders: bool,
    /// Optimal solutions whose image contains 2413 or 3142.
    pub optimal_but_containing: Vec<String>,
    /// Avoiding permutations that are not optimal.
    pub avoiding_but_not_optimal: Vec<String>,
    /// Optimal solutions that are not odd-row/odd-column shaped.
    pub unencodable: Vec<String>,
}

pub fn avoids_schroder_patterns(p: &Perm) -> bool {
    let p2413 = Perm(vec![2, 4, 1, 3]);
    let p3142 = Perm(vec![3, 1, 4, 2]);
    !contains_pattern(p, &p2413) && !contains_pattern(p, &p3142)
}

pub fn square_pattern_report(
    k: usize,
    budget: SearchBudget,
    prune: PruneConfig,
    par: Parallelism,
) -> Result<SquarePatternReport> {
    let side = 2 * k + 1;
    let dims = GridDims::new(side, side)?;
    let r = enumerate_optimal(dims, budget, prune, true, par)?;

    let mut optimal = BTreeSet::new();
    let mut unencodable = Vec::new();
    for s in r.witnesses.iter().flatten() {
        match perm_encode(s) {
            Ok(e) => {
                optimal.insert(e.rows);
            }
            Err(Error::Structure(_)) => unencodable.push(s.to_canonical()),
            Err(e) => return Err(e),
        }
    }

    let mut non_optimal = Vec::new();
    let mut avoiders = 0;
    let mut optimal_but_containing = Vec::new();
    let mut avoiding_but_not_optimal = Vec::new();
    for p in Perm::all(k + 1) {
        let rows: Vec<usize> = p.values().iter().map(|v| 2 * v - 1).collect();
        let avoids = avoids_schroder_patterns(&p);
        let is_opt = optimal.contains(&rows);
        avoiders += usize::from(avoids);
        if !is_opt {
            non_optimal.push(format_word(&rows));
        }
        match (is_opt, avoids) {
            (true, false) => optimal_but_containing.push(format_word(&rows)),
            (false, true) => avoiding_but_not_optimal.push(format_word(&rows)),
            _ => {}
        }
    }

    Ok(SquarePatternReport {
        k,
        alpha: r.count,
        schroder: schroder(k),
        optimal_words: optimal.iter().map(|w| format_word(w)).collect(),
        non_optimal_words: non_optimal,
        avoiders,
        optimal_equals_avoiders: optimal_but_containing.is_empty()
            && avoiding_but_not_optimal.is_empty()
            && unencodable.is_empty(),
        optimal_but_containing,
        avoiding_but_not_optimal,
        unencodable,
    })
}
