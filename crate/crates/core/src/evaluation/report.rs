use std::collections::BTreeMap;
use std::fmt::Write as _;

use log::warn;

use super::metrics::{average_precision, precision_at_k, r_precision};
use crate::error::{Error, Result};
use crate::run::Run;
use crate::topics::Qrels;

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Metrics {
    pub p5: f64,
    pub p10: f64,
    pub rprec: f64,
    pub ap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopicMetrics {
    pub topic: String,
    pub metrics: Metrics,
    /// The run had no ranking for this topic; all metrics are 0.
    pub missing: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    pub tag: String,
    pub settings: Vec<(String, String)>,
    pub topics: Vec<TopicMetrics>,
    /// Means over evaluated topics; `ap` holds MAP.
    pub mean: Metrics,
    /// Topics with no relevant entity, left out of every mean.
    pub skipped: Vec<String>,
}

impl MetricReport {
    pub fn map(&self) -> f64 {
        self.mean.ap
    }

    pub fn per_topic_ap(&self) -> BTreeMap<String, f64> {
        self.topics
            .iter()
            .map(|t| (t.topic.clone(), t.metrics.ap))
            .collect()
    }

    pub fn with_settings(mut self, settings: Vec<(String, String)>) -> MetricReport {
        self.settings = settings;
        self
    }

    /// Per-topic rows followed by an `all` row, tab separated.
    pub fn to_tsv(&self) -> String {
        self.delimited('\t')
    }

    pub fn to_csv(&self) -> String {
        self.delimited(',')
    }

    fn delimited(&self, sep: char) -> String {
        let mut out = String::new();
        for (k, v) in &self.settings {
            let _ = writeln!(out, "# {k}={v}");
        }
        let _ = writeln!(out, "topic{sep}p5{sep}p10{sep}rprec{sep}ap{sep}missing");
        for t in &self.topics {
            let m = t.metrics;
            let _ = writeln!(
                out,
                "{}{sep}{:.4}{sep}{:.4}{sep}{:.4}{sep}{:.4}{sep}{}",
                t.topic, m.p5, m.p10, m.rprec, m.ap, t.missing
            );
        }
        let m = self.mean;
        let _ = writeln!(
            out,
            "all{sep}{:.4}{sep}{:.4}{sep}{:.4}{sep}{:.4}{sep}",
            m.p5, m.p10, m.rprec, m.ap
        );
        out
    }

    /// Aligned text table with one summary row for this run.
    pub fn to_table(&self) -> String {
        let mut out = summary_table(&[(self.tag.as_str(), self.mean)]);
        for t in self.topics.iter().filter(|t| t.missing) {
            let _ = writeln!(out, "note: topic {} missing from run, scored 0", t.topic);
        }
        for t in &self.skipped {
            let _ = writeln!(out, "note: topic {t} has no relevant entities, skipped");
        }
        out
    }
}

/// Aligned `Run | P[5] | P[10] | R-prec | MAP` table.
pub fn summary_table(rows: &[(&str, Metrics)]) -> String {
    let width = rows
        .iter()
        .map(|(l, _)| l.chars().count())
        .chain(std::iter::once(3))
        .max()
        .unwrap_or(3);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<width$}  {:>6}  {:>6}  {:>6}  {:>6}",
        "Run", "P[5]", "P[10]", "R-prec", "MAP"
    );
    let _ = writeln!(out, "{}", "-".repeat(width + 32));
    for (label, m) in rows {
        let _ = writeln!(
            out,
            "{:<width$}  {:>6.3}  {:>6.3}  {:>6.3}  {:>6.3}",
            label, m.p5, m.p10, m.rprec, m.ap
        );
    }
    out
}

/// Scores a run against qrels.
///
/// Every qrels topic with at least one relevant entity is evaluated; topics
/// the run lacks score 0 and are flagged `missing`. Fails when the run and
/// the qrels share no topic.
pub fn evaluate(run: &Run, qrels: &Qrels) -> Result<MetricReport> {
    if !qrels.topics().any(|t| run.topics.contains_key(t)) {
        return Err(Error::Evaluation(
            "run and qrels have no topic in common".into(),
        ));
    }
    let mut topics = Vec::new();
    let mut skipped = Vec::new();
    for (topic, relevant) in qrels.iter() {
        if relevant.is_empty() {
            warn!("topic {topic}: no relevant entities, skipped");
            skipped.push(topic.to_string());
            continue;
        }
        let (metrics, missing) = match run.ranking(topic) {
            Some(ranking) => (
                Metrics {
                    p5: precision_at_k(&ranking, relevant, 5),
                    p10: precision_at_k(&ranking, relevant, 10),
                    rprec: r_precision(&ranking, relevant).unwrap_or(0.0),
                    ap: average_precision(&ranking, relevant).unwrap_or(0.0),
                },
                false,
            ),
            None => {
                warn!("topic {topic}: missing from run {}, scored 0", run.tag);
                (Metrics::default(), true)
            }
        };
        topics.push(TopicMetrics {
            topic: topic.to_string(),
            metrics,
            missing,
        });
    }
    let mean = mean_metrics(topics.iter().map(|t| t.metrics));
    Ok(MetricReport {
        tag: run.tag.clone(),
        settings: Vec::new(),
        topics,
        mean,
        skipped,
    })
}

fn mean_metrics(items: impl Iterator<Item = Metrics>) -> Metrics {
    let mut sum = Metrics::default();
    let mut n = 0usize;
    for m in items {
        sum.p5 += m.p5;
        sum.p10 += m.p10;
        sum.rprec += m.rprec;
        sum.ap += m.ap;
        n += 1;
    }
    if n == 0 {
        return sum;
    }
    let n = n as f64;
    Metrics {
        p5: sum.p5 / n,
        p10: sum.p10 / n,
        rprec: sum.rprec / n,
        ap: sum.ap / n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::PageId;

    fn run(entries: &[(&str, &[u32])]) -> Run {
        let mut r = Run::new("t");
        for (topic, ids) in entries {
            r.topics.insert(
                topic.to_string(),
                ids.iter().map(|&i| (PageId(i), 1.0)).collect(),
            );
        }
        r
    }

    #[test]
    fn missing_topic_scores_zero() {
        let qrels = Qrels::parse("a 0 1 1\nb 0 2 1\n", "q").unwrap();
        let report = evaluate(&run(&[("a", &[1])]), &qrels).unwrap();
        assert_eq!(report.topics.len(), 2);
        assert!(report.topics[1].missing);
        assert_eq!(report.map(), 0.5);
        assert!(report.to_table().contains("topic b missing"));
    }

    #[test]
    fn skipped_topics_leave_the_mean() {
        let qrels = Qrels::parse("a 0 1 1\nb 0 2 0\n", "q").unwrap();
        let report = evaluate(&run(&[("a", &[1]), ("b", &[2])]), &qrels).unwrap();
        assert_eq!(report.skipped, ["b"]);
        assert_eq!(report.map(), 1.0);
    }

    #[test]
    fn disjoint_topics_error() {
        let qrels = Qrels::parse("a 0 1 1\n", "q").unwrap();
        assert!(evaluate(&run(&[("z", &[1])]), &qrels).is_err());
    }

    #[test]
    fn tsv_layout() {
        let qrels = Qrels::parse("a 0 1 1\n", "q").unwrap();
        let tsv = evaluate(&run(&[("a", &[1])]), &qrels).unwrap().to_tsv();
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines[0], "topic\tp5\tp10\trprec\tap\tmissing");
        assert_eq!(lines[1], "a\t0.2000\t0.1000\t1.0000\t1.0000\tfalse");
        assert!(lines[2].starts_with("all\t"));
    }
}
