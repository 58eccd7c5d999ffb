//! Link extraction from the top retrieved pages and the linkrank score
//!
//! ```text
//! S_L(t) = Σ_{r=1..N} z(p_r) · #links(p_r, t)
//! ```
//!
//! `z(p)` is the raw retrieval score of referring page `p`.

use std::collections::BTreeMap;

use crate::corpus::{Corpus, PageId};
use crate::error::{Error, Result};
use crate::textindex::SearchHit;

pub const DEFAULT_TOP_N: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct Referrer {
    pub page: PageId,
    pub z: f64,
    /// Link count per target; every stored count is at least 1.
    pub counts: BTreeMap<PageId, u32>,
}

/// Outgoing link counts of the top-N retrieved pages.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LinkTable {
    pub referrers: Vec<Referrer>,
}

impl LinkTable {
    /// Every page linked from at least one referrer, ascending.
    pub fn targets(&self) -> impl Iterator<Item = PageId> + '_ {
        let mut all: Vec<PageId> = self
            .referrers
            .iter()
            .flat_map(|r| r.counts.keys().copied())
            .collect();
        all.sort();
        all.dedup();
        all.into_iter()
    }

    pub fn is_empty(&self) -> bool {
        self.referrers.iter().all(|r| r.counts.is_empty())
    }
}

/// Counts the links of the first `min(n, hits.len())` pages of `hits`.
pub fn extract_links(corpus: &Corpus, hits: &[SearchHit], n: usize) -> Result<LinkTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("link extraction depth N must be at least 1".into()));
    }
    let referrers = hits
        .iter()
        .take(n)
        .map(|hit| {
            let page = corpus.page(hit.page()).ok_or(Error::UnknownPage(hit.page()))?;
            let mut counts: BTreeMap<PageId, u32> = BTreeMap::new();
            for link in &page.outlinks {
                *counts.entry(link.target).or_default() += 1;
            }
            Ok(Referrer {
                page: page.id,
                z: hit.score,
                counts,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinkTable { referrers })
}

/// `S_L(t)`; zero when no referrer links to `t`.
pub fn linkrank_score(table: &LinkTable, t: PageId) -> f64 {
    table
        .referrers
        .iter()
        .filter_map(|r| r.counts.get(&t).map(|&c| r.z * f64::from(c)))
        .sum()
}
