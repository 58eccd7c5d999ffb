use std::collections::BTreeMap;

use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};

const ZERO_SD: f64 = 1e-12;

/// Two-sided paired t-test over per-topic scores of two runs.
///
/// Both maps must cover the same topics (at least two). When the
/// differences have zero variance the result is 1.0 for identical runs and
/// 0.0 for a constant non-zero shift.
pub fn paired_significance(a: &BTreeMap<String, f64>, b: &BTreeMap<String, f64>) -> Result<f64> {
    if a.len() != b.len() || a.keys().zip(b.keys()).any(|(x, y)| x != y) {
        return Err(Error::Evaluation("paired test needs the same topic set".into()));
    }
    let n = a.len();
    if n < 2 {
        return Err(Error::Evaluation("paired test needs at least two topics".into()));
    }
    let diffs: Vec<f64> = a.values().zip(b.values()).map(|(x, y)| x - y).collect();
    let nf = n as f64;
    let mean = diffs.iter().sum::<f64>() / nf;
    let var = diffs.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / (nf - 1.0);
    let sd = var.sqrt();
    if sd < ZERO_SD {
        return Ok(if mean.abs() < ZERO_SD { 1.0 } else { 0.0 });
    }
    let t = mean / (sd / nf.sqrt());
    let dist = StudentsT::new(0.0, 1.0, nf - 1.0)
        .map_err(|e| Error::Evaluation(e.to_string()))?;
    Ok((2.0 * (1.0 - dist.cdf(t.abs()))).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scores(v: &[f64]) -> BTreeMap<String, f64> {
        v.iter().enumerate().map(|(i, &x)| (format!("t{i:02}"), x)).collect()
    }

    #[test]
    fn identical_runs() {
        let a = scores(&[0.1, 0.5, 0.3]);
        assert_eq!(paired_significance(&a, &a).unwrap(), 1.0);
    }

    #[test]
    fn constant_shift() {
        let base: Vec<f64> = (0..10).map(|i| 0.05 * i as f64).collect();
        let shifted: Vec<f64> = base.iter().map(|x| x + 0.1).collect();
        let p = paired_significance(&scores(&shifted), &scores(&base)).unwrap();
        assert!(p < 1e-6, "{p}");
    }

    #[test]
    fn mismatched_topics() {
        let a = scores(&[0.1, 0.2]);
        let mut b = a.clone();
        b.insert("other".into(), 0.3);
        assert!(paired_significance(&a, &b).is_err());
        assert!(paired_significance(&scores(&[0.1]), &scores(&[0.2])).is_err());
    }
}
