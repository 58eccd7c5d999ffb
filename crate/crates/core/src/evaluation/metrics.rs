//! Binary-relevance ranking metrics.

use std::collections::BTreeSet;

/// `|relevant ∩ top-k| / k`. The denominator is `k` even when the ranking
/// is shorter. Returns 0 for `k = 0`.
pub fn precision_at_k<T: Ord>(ranking: &[T], relevant: &BTreeSet<T>, k: usize) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let hits = ranking.iter().take(k).filter(|d| relevant.contains(d)).count();
    hits as f64 / k as f64
}

/// Precision at rank `R = |relevant|`; `None` when nothing is relevant.
pub fn r_precision<T: Ord>(ranking: &[T], relevant: &BTreeSet<T>) -> Option<f64> {
    if relevant.is_empty() {
        return None;
    }
    Some(precision_at_k(ranking, relevant, relevant.len()))
}

/// Mean over relevant items of the precision at each relevant item's rank;
/// relevant items never retrieved contribute 0. `None` when nothing is
/// relevant.
pub fn average_precision<T: Ord>(ranking: &[T], relevant: &BTreeSet<T>) -> Option<f64> {
    if relevant.is_empty() {
        return None;
    }
    let mut found = 0usize;
    let mut sum = 0.0;
    let mut seen = BTreeSet::new();
    for (i, d) in ranking.iter().enumerate() {
        // a page listed twice only counts at its first rank
        if relevant.contains(d) && seen.insert(d) {
            found += 1;
            sum += found as f64 / (i + 1) as f64;
        }
    }
    Some(sum / relevant.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(ids: &[u32]) -> BTreeSet<u32> {
        ids.iter().copied().collect()
    }

    #[test]
    fn precision_examples() {
        let ranking = [1, 9, 2, 8, 7];
        assert!((precision_at_k(&ranking, &rel(&[1, 2]), 5) - 0.4).abs() < 1e-12);
        assert_eq!(precision_at_k(&ranking, &rel(&[42]), 5), 0.0);
        assert_eq!(precision_at_k(&ranking, &rel(&[1, 9, 2]), 3), 1.0);
        // short ranking still divides by k
        assert_eq!(precision_at_k(&[1], &rel(&[1]), 10), 0.1);
    }

    #[test]
    fn r_precision_examples() {
        assert_eq!(r_precision(&[1, 2, 3], &rel(&[1, 2])), Some(1.0));
        assert_eq!(r_precision(&[1, 7, 8, 9, 2], &rel(&[1, 2])), Some(0.5));
        assert_eq!(r_precision(&[1, 2], &rel(&[])), None);
    }

    #[test]
    fn average_precision_examples() {
        let ap = average_precision(&[1, 9, 2], &rel(&[1, 2])).unwrap();
        assert!((ap - (1.0 + 2.0 / 3.0) / 2.0).abs() < 1e-12);
        assert_eq!(average_precision(&[3, 1, 2], &rel(&[1, 2, 3])), Some(1.0));
        assert_eq!(average_precision(&[1], &rel(&[1, 2])), Some(0.5));
        assert_eq!(average_precision::<u32>(&[], &rel(&[])), None);
    }
}
