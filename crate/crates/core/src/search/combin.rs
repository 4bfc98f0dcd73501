//! Colexicographic ranking of k-subsets of `0..n`.
//!
//! In colex order a combination `c_0 < c_1 < ... < c_{k-1}` has rank
//! `sum C(c_i, i + 1)`. Fixed ranks give fixed chunk boundaries, so the
//! parallel enumeration splits the same way for every worker count.

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc = C(n, i), and C(n, i) * (n - i) is divisible by i + 1.
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

pub fn rank(combo: &[usize]) -> u128 {
    combo
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i + 1))
        .sum()
}

/// The combination of size `k` with colex rank `r`.
pub fn unrank(mut r: u128, k: usize) -> Vec<usize> {
    let mut combo = vec![0; k];
    for i in (0..k).rev() {
        // Largest c with C(c, i+1) <= r.
        let mut c = i;
        while binomial(c + 1, i + 1) <= r {
            c += 1;
        }
        r -= binomial(c, i + 1);
        combo[i] = c;
    }
    combo
}

/// Advances to the colex successor within `0..n`; returns false after the last one.
pub fn next(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in 0..k {
        let limit = if i + 1 < k { combo[i + 1] } else { n };
        if combo[i] + 1 < limit {
            combo[i] += 1;
            for (j, slot) in combo.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(81, 5), 25_621_596);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(1024, 512), u128::MAX);
    }

    #[test]
    fn successor_walk_matches_unrank() {
        for (n, k) in [(6, 3), (7, 1), (5, 5), (9, 4), (4, 0)] {
            let total = binomial(n, k);
            let mut c = unrank(0, k);
            assert_eq!(c, (0..k).collect::<Vec<_>>());
            for r in 0..total {
                assert_eq!(unrank(r, k), c, "n={n} k={k} r={r}");
                assert_eq!(rank(&c), r);
                assert!(c.windows(2).all(|w| w[0] < w[1]));
                assert!(c.iter().all(|&x| x < n));
                let more = next(&mut c, n);
                assert_eq!(more, r + 1 < total);
            }
        }
    }
}
