//! The operations behind the `entrank` binary. Each takes a [`RunConfig`]
//! and returns its result; files named by `out` are written here.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use log::{info, warn};

use crate::config::RunConfig;
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::evaluation::{evaluate, Experiment, MetricReport};
use crate::pipeline::Engine;
use crate::run::Run;
use crate::textindex::{Index, IndexFlavor};
use crate::topics::{load_topic, load_topics_dir, Qrels, Task, Topic};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    M,
    AlphaBeta,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexSummary {
    pub pages: usize,
    pub categories: usize,
    pub links: usize,
    pub dropped_links: usize,
    pub mean_categories_per_page: f64,
    pub page_docs: usize,
    pub page_avg_len: f64,
    pub category_flavor: IndexFlavor,
    pub category_docs: usize,
    pub category_avg_len: f64,
}

impl IndexSummary {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "pages\t{}", self.pages);
        let _ = writeln!(out, "categories\t{}", self.categories);
        let _ = writeln!(out, "links\t{}", self.links);
        let _ = writeln!(out, "dropped_links\t{}", self.dropped_links);
        let _ = writeln!(out, "mean_categories_per_page\t{:.4}", self.mean_categories_per_page);
        let _ = writeln!(out, "page_index_docs\t{}", self.page_docs);
        let _ = writeln!(out, "page_index_avg_len\t{:.4}", self.page_avg_len);
        let _ = writeln!(out, "category_index\t{:?}", self.category_flavor);
        let _ = writeln!(out, "category_index_docs\t{}", self.category_docs);
        let _ = writeln!(out, "category_index_avg_len\t{:.4}", self.category_avg_len);
        out
    }
}

#[derive(Debug)]
pub struct RankOutput {
    pub run: Run,
    pub failures: Vec<(String, String)>,
}

pub fn load_corpus(cfg: &RunConfig) -> Result<Corpus> {
    let pages = cfg.require(&cfg.corpus, "corpus")?;
    let cats = cfg.require(&cfg.categories, "categories")?;
    Corpus::load(pages, cats)
}

/// Topics from a directory of XML files or a single file.
pub fn load_topics(path: &Path) -> Result<Vec<Topic>> {
    if path.is_dir() {
        load_topics_dir(path)
    } else {
        Ok(vec![load_topic(path)?])
    }
}

fn engine(cfg: &RunConfig) -> Result<Engine> {
    Ok(Engine::new(load_corpus(cfg)?, &[cfg.cat_index]).with_filter(cfg.filter()))
}

fn write_out(cfg: &RunConfig, contents: &str) -> Result<()> {
    if let Some(path) = &cfg.out {
        fs::write(path, contents).map_err(|e| Error::io(path, e))?;
        info!("wrote {}", path.display());
    }
    Ok(())
}

/// Loads the corpus and builds the page index plus the configured
/// category index.
pub fn cmd_index(cfg: &RunConfig) -> Result<IndexSummary> {
    let corpus = load_corpus(cfg)?;
    let flavor = cfg.cat_index.index_flavor();
    let (pages, cats) = rayon::join(
        || Index::build(&corpus, IndexFlavor::Pages),
        || Index::build(&corpus, flavor),
    );
    let stats = corpus.stats();
    Ok(IndexSummary {
        pages: stats.pages,
        categories: stats.categories,
        links: stats.links,
        dropped_links: stats.dropped_links,
        mean_categories_per_page: stats.mean_categories_per_page,
        page_docs: pages.len(),
        page_avg_len: pages.avg_doc_len(),
        category_flavor: flavor,
        category_docs: cats.len(),
        category_avg_len: cats.avg_doc_len(),
    })
}

/// Ranks every topic and writes the TREC run to `out` when set. Topics
/// that fail are logged and left out of the run.
pub fn cmd_rank(cfg: &RunConfig) -> Result<RankOutput> {
    let settings = cfg.settings()?;
    let topics = load_topics(cfg.require(&cfg.topics, "topics")?)?;
    let engine = engine(cfg)?;
    let mut run = Run::new(cfg.tag.clone());
    let mut failures = Vec::new();
    for topic in &topics {
        match engine.rank(topic, &settings) {
            Ok(ranking) => run.insert(&topic.id, &ranking, cfg.max_results),
            Err(e) => {
                warn!("topic {}: {e}", topic.id);
                failures.push((topic.id.clone(), e.to_string()));
            }
        }
    }
    write_out(cfg, &run.to_trec())?;
    Ok(RankOutput { run, failures })
}

/// Evaluates a run file against the configured qrels. For task 2 with a
/// topics path configured, example entities are removed from the relevant
/// sets first.
pub fn cmd_eval(cfg: &RunConfig, run_path: &Path) -> Result<MetricReport> {
    let run = Run::load(run_path)?;
    let mut qrels = Qrels::load(cfg.require(&cfg.qrels, "qrels")?)?;
    if let (Task::ListCompletion, Some(dir)) = (cfg.task, &cfg.topics) {
        qrels = qrels.without_examples(&load_topics(dir)?);
    }
    let report = evaluate(&run, &qrels)?.with_settings(vec![
        ("run".into(), run_path.display().to_string()),
        ("task".into(), cfg.task.to_string()),
    ]);
    let body = if cfg.csv { report.to_csv() } else { report.to_tsv() };
    write_out(cfg, &body)?;
    Ok(report)
}

/// Runs a parameter sweep; returns the table (TSV, or CSV with `csv`) and
/// writes it to `out` when set.
pub fn cmd_sweep(cfg: &RunConfig, which: SweepKind) -> Result<String> {
    let settings = cfg.settings()?;
    let topics = load_topics(cfg.require(&cfg.topics, "topics")?)?;
    let qrels = Qrels::load(cfg.require(&cfg.qrels, "qrels")?)?;
    let engine = engine(cfg)?;
    let exp = Experiment::new(&engine, &topics, &qrels, settings)?
        .with_max_results(cfg.max_results)
        .with_tag(cfg.tag.clone());
    let sep = if cfg.csv { ',' } else { '\t' };
    let table = match which {
        SweepKind::M => exp.sweep_m(1..=20)?.to_delimited(sep),
        SweepKind::AlphaBeta => exp.sweep_alpha_beta()?.to_delimited(sep),
    };
    write_out(cfg, &table)?;
    Ok(table)
}
