//! Experiment runs over a topic set, and the M and (α, β) parameter sweeps.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use log::warn;
use rayon::prelude::*;

use super::report::{evaluate, MetricReport, Metrics};
use crate::error::{Error, Result};
use crate::fusion::{self, FusionParams};
use crate::pipeline::{Engine, RankSettings, TopicScores};
use crate::run::Run;
use crate::topics::{Qrels, Task, Topic};

/// Step count of the (α, β) grid: both move in tenths with α + β ≤ 1.
const GRID_STEPS: u32 = 10;

/// The 66 (α, β) cells, α-major.
pub fn alpha_beta_grid() -> Vec<FusionParams> {
    let mut grid = Vec::new();
    for i in 0..=GRID_STEPS {
        for j in 0..=(GRID_STEPS - i) {
            let alpha = f64::from(i) / f64::from(GRID_STEPS);
            let beta = f64::from(j) / f64::from(GRID_STEPS);
            grid.push(FusionParams::new(alpha, beta).expect("grid cells sum to at most 1"));
        }
    }
    grid
}

/// A run over every topic, with the topics that failed and why.
#[derive(Debug)]
pub struct RunOutcome {
    pub run: Run,
    pub failures: Vec<(String, String)>,
}

/// Ranking runs of one configuration over a topic set, evaluated against
/// qrels. For list completion the example entities are removed from the
/// relevant sets.
pub struct Experiment<'a> {
    engine: &'a Engine,
    topics: &'a [Topic],
    qrels: Qrels,
    pub settings: RankSettings,
    pub max_results: usize,
    pub tag: String,
}

impl<'a> Experiment<'a> {
    pub fn new(
        engine: &'a Engine,
        topics: &'a [Topic],
        qrels: &Qrels,
        settings: RankSettings,
    ) -> Result<Experiment<'a>> {
        settings.validate()?;
        let qrels = match settings.task {
            Task::ListCompletion => qrels.without_examples(topics),
            Task::EntityRanking => qrels.clone(),
        };
        Ok(Experiment {
            engine,
            topics,
            qrels,
            settings,
            max_results: crate::pipeline::DEFAULT_TOP_K,
            tag: "run".to_string(),
        })
    }

    pub fn with_max_results(mut self, max_results: usize) -> Self {
        self.max_results = max_results;
        self
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    /// Qrels used for evaluation.
    pub fn qrels(&self) -> &Qrels {
        &self.qrels
    }

    pub fn run(&self) -> RunOutcome {
        self.run_with(&self.settings)
    }

    pub fn run_with(&self, settings: &RankSettings) -> RunOutcome {
        let scored = self.score_topics(settings);
        self.fuse_run(&scored, settings.fusion)
    }

    pub fn evaluate(&self) -> Result<MetricReport> {
        self.evaluate_with(&self.settings)
    }

    pub fn evaluate_with(&self, settings: &RankSettings) -> Result<MetricReport> {
        evaluate(&self.run_with(settings).run, &self.qrels)
    }

    fn score_topics(&self, settings: &RankSettings) -> Vec<(&'a Topic, Result<TopicScores>)> {
        self.topics
            .par_iter()
            .map(|t| (t, self.engine.score_topic(t, settings)))
            .collect()
    }

    fn fuse_run(
        &self,
        scored: &[(&Topic, Result<TopicScores>)],
        params: FusionParams,
    ) -> RunOutcome {
        let mut run = Run::new(self.tag.clone());
        let mut failures = Vec::new();
        for (topic, scores) in scored {
            match scores {
                Ok(s) => run.insert(&topic.id, &fusion::fuse(&s.normalized, params), self.max_results),
                Err(e) => failures.push((topic.id.clone(), e.to_string())),
            }
        }
        RunOutcome { run, failures }
    }

    /// MAP for every M in `ms`. Needs a lexical task-1 strategy.
    pub fn sweep_m(&self, ms: RangeInclusive<usize>) -> Result<MSweep> {
        if self.settings.strategy.lexical().is_none() {
            return Err(Error::InvalidArgument(format!(
                "M sweep needs a lexical strategy, got {}",
                self.settings.strategy.name()
            )));
        }
        let rows = ms
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|m| {
                let settings = RankSettings {
                    strategy: self.settings.strategy.with_m(m),
                    ..self.settings
                };
                let report = self.evaluate_with(&settings)?;
                Ok(MRow { m, mean: report.mean })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MSweep { rows })
    }

    /// All 66 (α, β) cells. Component scores are computed once per topic
    /// and fused per cell.
    pub fn sweep_alpha_beta(&self) -> Result<AlphaBetaSweep> {
        let scored = self.score_topics(&self.settings);
        for (topic, s) in &scored {
            if let Err(e) = s {
                warn!("topic {}: {e}", topic.id);
            }
        }
        let rows = alpha_beta_grid()
            .into_par_iter()
            .map(|params| {
                let outcome = self.fuse_run(&scored, params);
                let report = evaluate(&outcome.run, &self.qrels)?;
                Ok(AlphaBetaRow {
                    alpha: params.alpha(),
                    beta: params.beta(),
                    mean: report.mean,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlphaBetaSweep { rows })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MRow {
    pub m: usize,
    pub mean: Metrics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MSweep {
    pub rows: Vec<MRow>,
}

impl MSweep {
    /// Row with the highest MAP; the smallest M wins ties.
    pub fn best(&self) -> Option<&MRow> {
        self.rows
            .iter()
            .fold(None, |best: Option<&MRow>, r| match best {
                Some(b) if b.mean.ap >= r.mean.ap => Some(b),
                _ => Some(r),
            })
    }

    pub fn to_delimited(&self, sep: char) -> String {
        let mut out = format!("m{sep}map\n");
        for r in &self.rows {
            let _ = writeln!(out, "{}{sep}{:.6}", r.m, r.mean.ap);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaBetaRow {
    pub alpha: f64,
    pub beta: f64,
    pub mean: Metrics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaBetaSweep {
    pub rows: Vec<AlphaBetaRow>,
}

impl AlphaBetaSweep {
    /// Cell with the highest MAP; the first cell in grid order wins ties.
    pub fn best(&self) -> Option<&AlphaBetaRow> {
        self.rows
            .iter()
            .fold(None, |best: Option<&AlphaBetaRow>, r| match best {
                Some(b) if b.mean.ap >= r.mean.ap => Some(b),
                _ => Some(r),
            })
    }

    pub fn cell(&self, alpha: f64, beta: f64) -> Option<&AlphaBetaRow> {
        self.rows
            .iter()
            .find(|r| (r.alpha - alpha).abs() < 1e-9 && (r.beta - beta).abs() < 1e-9)
    }

    pub fn to_delimited(&self, sep: char) -> String {
        let mut out = format!("alpha{sep}beta{sep}p5{sep}p10{sep}rprec{sep}map\n");
        for r in &self.rows {
            let m = r.mean;
            let _ = writeln!(
                out,
                "{:.1}{sep}{:.1}{sep}{:.6}{sep}{:.6}{sep}{:.6}{sep}{:.6}",
                r.alpha, r.beta, m.p5, m.p10, m.rprec, m.ap
            );
        }
        out
    }
}
