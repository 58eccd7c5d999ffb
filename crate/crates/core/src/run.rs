//! TREC run files: `topic_id Q0 page_id rank score run_tag`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::corpus::PageId;
use crate::error::{Error, Result};
use crate::fusion::ScoredEntity;

/// Ranked page lists per topic.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Run {
    pub tag: String,
    pub topics: BTreeMap<String, Vec<(PageId, f64)>>,
}

impl Run {
    pub fn new(tag: impl Into<String>) -> Run {
        Run {
            tag: tag.into(),
            topics: BTreeMap::new(),
        }
    }

    /// Adds a topic's ranking, keeping at most `max_results` entries.
    pub fn insert(&mut self, topic: &str, ranking: &[ScoredEntity], max_results: usize) {
        self.topics.insert(
            topic.to_string(),
            ranking.iter().take(max_results).map(|e| (e.id, e.s)).collect(),
        );
    }

    pub fn ranking(&self, topic: &str) -> Option<Vec<PageId>> {
        self.topics
            .get(topic)
            .map(|r| r.iter().map(|(p, _)| *p).collect())
    }

    pub fn to_trec(&self) -> String {
        let mut out = String::new();
        for (topic, ranking) in &self.topics {
            for (i, (page, score)) in ranking.iter().enumerate() {
                let _ = writeln!(out, "{topic} Q0 {page} {} {score:.6} {}", i + 1, self.tag);
            }
        }
        out
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_trec()).map_err(|e| Error::io(path, e))
    }

    /// Parses a run; entries are ordered by their rank column.
    pub fn parse(src: &str, file: &str) -> Result<Run> {
        let mut rows: BTreeMap<String, Vec<(usize, PageId, f64)>> = BTreeMap::new();
        let mut tag = String::new();
        for (i, line) in src.lines().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                file: file.to_string(),
                line: i + 1,
                message,
            };
            let [topic, _q0, page, rank, score, run_tag] = fields.as_slice() else {
                return Err(err(format!(
                    "expected `topic Q0 page rank score tag`, found {} fields",
                    fields.len()
                )));
            };
            let page = page
                .parse::<u32>()
                .map_err(|_| err(format!("invalid page id {page:?}")))?;
            let rank = rank
                .parse::<usize>()
                .map_err(|_| err(format!("invalid rank {rank:?}")))?;
            let score = score
                .parse::<f64>()
                .map_err(|_| err(format!("invalid score {score:?}")))?;
            tag = run_tag.to_string();
            rows.entry(topic.to_string())
                .or_default()
                .push((rank, PageId(page), score));
        }
        let topics = rows
            .into_iter()
            .map(|(t, mut r)| {
                r.sort_by_key(|&(rank, page, _)| (rank, page));
                (t, r.into_iter().map(|(_, p, s)| (p, s)).collect())
            })
            .collect();
        Ok(Run { tag, topics })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Run> {
        let path = path.as_ref();
        let src = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Run::parse(&src, &path.display().to_string())
    }
}
