//! Run configuration as flat `key = value` text.
//!
//! ```text
//! # mini-wiki, list completion
//! corpus = data/mini-wiki/pages.tsv
//! categories = data/mini-wiki/categories.tsv
//! task = 2
//! strategy = base
//! ```
//!
//! Blank lines and `#` comments are ignored. Unknown keys are errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::catsim::{CatStrategy, CategoryFilter, CategoryFlavor};
use crate::error::{Error, Result};
use crate::fusion::FusionParams;
use crate::linkrank::DEFAULT_TOP_N;
use crate::pipeline::{RankSettings, DEFAULT_M, DEFAULT_TOP_K};
use crate::topics::Task;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub corpus: Option<PathBuf>,
    pub categories: Option<PathBuf>,
    pub topics: Option<PathBuf>,
    pub qrels: Option<PathBuf>,
    pub task: Task,
    pub strategy: String,
    pub cat_index: CategoryFlavor,
    pub m: usize,
    pub top_n: usize,
    pub top_k: usize,
    pub alpha: f64,
    pub beta: f64,
    pub max_results: usize,
    pub out: Option<PathBuf>,
    pub tag: String,
    pub csv: bool,
    pub category_blocklist: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            corpus: None,
            categories: None,
            topics: None,
            qrels: None,
            task: Task::EntityRanking,
            strategy: "base".to_string(),
            cat_index: CategoryFlavor::Names,
            m: DEFAULT_M,
            top_n: DEFAULT_TOP_N,
            top_k: DEFAULT_TOP_K,
            alpha: FusionParams::DEFAULT.alpha(),
            beta: FusionParams::DEFAULT.beta(),
            max_results: 100,
            out: None,
            tag: "entrank".to_string(),
            csv: false,
            category_blocklist: Vec::new(),
        }
    }
}

fn cfg_err(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| cfg_err(format!("{key}: cannot parse {value:?}")))
}

impl RunConfig {
    pub fn load(path: impl AsRef<Path>) -> Result<RunConfig> {
        let path = path.as_ref();
        let src = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = RunConfig::default();
        cfg.apply_kv(&src)?;
        Ok(cfg)
    }

    pub fn from_kv(src: &str) -> Result<RunConfig> {
        let mut cfg = RunConfig::default();
        cfg.apply_kv(src)?;
        Ok(cfg)
    }

    /// Applies every `key = value` line of `src` on top of `self`.
    pub fn apply_kv(&mut self, src: &str) -> Result<()> {
        for (i, line) in src.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| cfg_err(format!("line {}: expected key = value", i + 1)))?;
            self.set(key.trim(), value.trim())
                .map_err(|e| cfg_err(format!("line {}: {e}", i + 1)))?;
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let path = || Some(PathBuf::from(value));
        match key {
            "corpus" => self.corpus = path(),
            "categories" => self.categories = path(),
            "topics" => self.topics = path(),
            "qrels" => self.qrels = path(),
            "out" => self.out = path(),
            "task" => self.task = Task::from_number(num(key, value)?)?,
            "strategy" => self.strategy = value.to_string(),
            "cat_index" => self.cat_index = value.parse()?,
            "m" => self.m = num(key, value)?,
            "top_n" => self.top_n = num(key, value)?,
            "top_k" => self.top_k = num(key, value)?,
            "alpha" => self.alpha = num(key, value)?,
            "beta" => self.beta = num(key, value)?,
            "max_results" => self.max_results = num(key, value)?,
            "tag" => self.tag = value.to_string(),
            "csv" => self.csv = num(key, value)?,
            "category_blocklist" => {
                self.category_blocklist = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect()
            }
            other => return Err(cfg_err(format!("unknown key {other:?}"))),
        }
        Ok(())
    }

    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        let mut put = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        let paths = [
            ("corpus", &self.corpus),
            ("categories", &self.categories),
            ("topics", &self.topics),
            ("qrels", &self.qrels),
            ("out", &self.out),
        ];
        for (k, p) in paths {
            if let Some(p) = p {
                put(k, p.display().to_string());
            }
        }
        put("task", self.task.to_string());
        put("strategy", self.strategy.clone());
        put("cat_index", self.cat_index.to_string());
        put("m", self.m.to_string());
        put("top_n", self.top_n.to_string());
        put("top_k", self.top_k.to_string());
        put("alpha", self.alpha.to_string());
        put("beta", self.beta.to_string());
        put("max_results", self.max_results.to_string());
        put("tag", self.tag.clone());
        put("csv", self.csv.to_string());
        put("category_blocklist", self.category_blocklist.join(","));
        out
    }

    pub fn strategy(&self) -> Result<CatStrategy> {
        CatStrategy::parse(&self.strategy, self.task, self.cat_index, self.m)
    }

    pub fn settings(&self) -> Result<RankSettings> {
        let settings = RankSettings {
            task: self.task,
            strategy: self.strategy()?,
            fusion: FusionParams::new(self.alpha, self.beta)?,
            top_n: self.top_n,
            top_k: self.top_k,
        };
        settings.validate()?;
        if self.max_results == 0 {
            return Err(cfg_err("max_results must be at least 1"));
        }
        Ok(settings)
    }

    pub fn filter(&self) -> CategoryFilter {
        CategoryFilter {
            blocked_prefixes: self.category_blocklist.clone(),
        }
    }

    /// Settings echoed into reports.
    pub fn describe(&self) -> Vec<(String, String)> {
        self.to_kv()
            .lines()
            .filter_map(|l| l.split_once(" = "))
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }

    pub fn require<'a>(&self, path: &'a Option<PathBuf>, what: &str) -> Result<&'a Path> {
        path.as_deref()
            .ok_or_else(|| cfg_err(format!("missing --{what}")))
    }
}
