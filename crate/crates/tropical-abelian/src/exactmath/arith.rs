use crate::{Error, Result};

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Sum of the positive divisors of `n`.
pub fn sigma1(n: i64) -> Result<u64> {
    if n <= 0 {
        return Err(Error::Domain(format!("sigma1 needs n >= 1, got {n}")));
    }
    Ok(divisors(n as u64).into_iter().sum())
}

/// All ordered `parts`-tuples of positive integers summing to `n`,
/// in lexicographic order. Empty when `n < parts`.
pub fn compositions(n: u64, parts: usize) -> Vec<Vec<u64>> {
    fn go(rest: u64, slots: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        // leave at least one for each remaining slot
        for a in 1..=rest.saturating_sub(slots as u64 - 1) {
            prefix.push(a);
            go(rest - a, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 || n < parts as u64 {
        return out;
    }
    go(n, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma_naive(n: u64) -> u64 {
        (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
    }

    #[test]
    fn sigma1_values() {
        assert_eq!(sigma1(1).unwrap(), 1);
        assert_eq!(sigma1(6).unwrap(), 12);
        assert_eq!(sigma1(4).unwrap(), 7);
        for n in 1..200 {
            assert_eq!(sigma1(n as i64).unwrap(), sigma_naive(n));
        }
        assert!(sigma1(0).is_err());
        assert!(sigma1(-3).is_err());
    }

    #[test]
    fn compositions_small() {
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(5, 1), vec![vec![5]]);
        assert!(compositions(2, 3).is_empty());
        assert_eq!(compositions(10, 4).len(), 84);
    }

    #[test]
    fn composition_count_is_binomial() {
        for n in 1..12u64 {
            for p in 1..=n as usize {
                let all = compositions(n, p);
                assert_eq!(all.len() as u64, binomial(n - 1, p as u64 - 1));
                assert!(all.iter().all(|c| c.len() == p && c.iter().sum::<u64>() == n));
                let mut dedup = all.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
            }
        }
    }
}
