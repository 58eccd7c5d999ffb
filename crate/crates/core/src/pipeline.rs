//! Per-topic ranking: search, link extraction, the three component scores
//! and fusion.

use std::collections::BTreeMap;

use crate::catsim::{self, CatStrategy, CategoryFilter, CategoryFlavor};
use crate::corpus::{Corpus, PageId};
use crate::error::{Error, Result};
use crate::fusion::{self, Components, FusionParams, ScoredEntity};
use crate::linkrank::{self, LinkTable, DEFAULT_TOP_N};
use crate::textindex::{Index, IndexFlavor, SearchHit};
use crate::topics::{Task, Topic};

pub const DEFAULT_TOP_K: usize = 100;
pub const DEFAULT_M: usize = 10;

/// Everything that parameterizes one ranking run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankSettings {
    pub task: Task,
    pub strategy: CatStrategy,
    pub fusion: FusionParams,
    /// Pages whose links are extracted (N).
    pub top_n: usize,
    /// Pages retrieved by the full-text search (k).
    pub top_k: usize,
}

impl RankSettings {
    pub fn new(strategy: CatStrategy) -> RankSettings {
        RankSettings {
            task: strategy.task(),
            strategy,
            fusion: FusionParams::DEFAULT,
            top_n: DEFAULT_TOP_N,
            top_k: DEFAULT_TOP_K,
        }
    }

    pub fn with_fusion(self, fusion: FusionParams) -> RankSettings {
        RankSettings { fusion, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.strategy.task() != self.task {
            return Err(Error::InvalidArgument(format!(
                "strategy {} is not a task {} strategy",
                self.strategy.name(),
                self.task
            )));
        }
        self.strategy.validate()?;
        if self.top_n == 0 || self.top_k == 0 {
            return Err(Error::InvalidArgument("top-n and top-k must be at least 1".into()));
        }
        Ok(())
    }
}

/// Intermediate results of a topic, before fusion.
#[derive(Debug, Clone)]
pub struct TopicScores {
    pub hits: Vec<SearchHit>,
    pub links: LinkTable,
    pub target: catsim::TargetCatSet,
    /// Unnormalized `S_L`, `S_C`, `S_Z` per candidate.
    pub raw: Vec<Components>,
    /// Max-normalized components, same order as `raw`.
    pub normalized: Vec<Components>,
}

/// Corpus plus its page index and category indexes.
#[derive(Debug)]
pub struct Engine {
    corpus: Corpus,
    pages: Index,
    category_indexes: Vec<Index>,
    filter: CategoryFilter,
}

impl Engine {
    /// Builds the page index and one category index per requested flavor.
    pub fn new(corpus: Corpus, flavors: &[CategoryFlavor]) -> Engine {
        let mut unique: Vec<CategoryFlavor> = Vec::new();
        for &f in flavors {
            if !unique.contains(&f) {
                unique.push(f);
            }
        }
        let (pages, category_indexes) = rayon::join(
            || Index::build(&corpus, IndexFlavor::Pages),
            || {
                unique
                    .iter()
                    .map(|f| Index::build(&corpus, f.index_flavor()))
                    .collect()
            },
        );
        Engine {
            corpus,
            pages,
            category_indexes,
            filter: CategoryFilter::default(),
        }
    }

    /// Engine with both category indexes.
    pub fn with_all_indexes(corpus: Corpus) -> Engine {
        Engine::new(
            corpus,
            &[CategoryFlavor::Names, CategoryFlavor::NamesPlusEntities],
        )
    }

    pub fn with_filter(mut self, filter: CategoryFilter) -> Engine {
        self.filter = filter;
        self
    }

    pub fn corpus(&self) -> &Corpus {
        &self.corpus
    }

    pub fn page_index(&self) -> &Index {
        &self.pages
    }

    pub fn category_index(&self, flavor: CategoryFlavor) -> Option<&Index> {
        self.category_indexes
            .iter()
            .find(|i| i.flavor() == flavor.index_flavor())
    }

    /// Runs retrieval, link extraction and category scoring for a topic.
    pub fn score_topic(&self, topic: &Topic, settings: &RankSettings) -> Result<TopicScores> {
        settings.validate()?;
        topic.validate(settings.task)?;

        let cat_index = match settings.strategy.lexical() {
            Some(lex) => Some(self.category_index(lex.flavor).ok_or_else(|| {
                Error::InvalidArgument(format!("category index {} was not built", lex.flavor))
            })?),
            None => None,
        };
        let target = catsim::build_target_set(
            &self.corpus,
            cat_index,
            topic,
            settings.strategy,
            &self.filter,
        )?;
        if target.cats.is_empty() {
            return Err(Error::EmptyTargetSet);
        }

        let hits = self.pages.search(&topic.title, settings.top_k)?;
        let links = linkrank::extract_links(&self.corpus, &hits, settings.top_n)?;
        let exclude = match settings.task {
            Task::ListCompletion => topic.example_ids(),
            Task::EntityRanking => Default::default(),
        };
        let candidates = fusion::candidate_set(&hits, &links, &exclude);

        let z: BTreeMap<PageId, f64> = hits.iter().map(|h| (h.page(), h.score)).collect();
        let mut s_l = BTreeMap::new();
        let mut s_c = BTreeMap::new();
        let mut s_z = BTreeMap::new();
        for &t in &candidates {
            s_l.insert(t, linkrank::linkrank_score(&links, t));
            s_c.insert(t, catsim::category_score(&self.corpus, &target, settings.strategy, t)?);
            s_z.insert(t, z.get(&t).copied().unwrap_or(0.0));
        }
        let raw = assemble(&s_l, &s_c, &s_z);
        let normalized = assemble(
            &fusion::normalize(&s_l)?,
            &fusion::normalize(&s_c)?,
            &fusion::normalize(&s_z)?,
        );

        Ok(TopicScores {
            hits,
            links,
            target,
            raw,
            normalized,
        })
    }

    /// Full ranking of a topic's candidates.
    pub fn rank(&self, topic: &Topic, settings: &RankSettings) -> Result<Vec<ScoredEntity>> {
        let scores = self.score_topic(topic, settings)?;
        Ok(fusion::fuse(&scores.normalized, settings.fusion))
    }
}

fn assemble(
    s_l: &BTreeMap<PageId, f64>,
    s_c: &BTreeMap<PageId, f64>,
    s_z: &BTreeMap<PageId, f64>,
) -> Vec<Components> {
    s_l.iter()
        .map(|(&id, &l)| Components {
            id,
            s_l: l,
            s_c: s_c[&id],
            s_z: s_z[&id],
        })
        .collect()
}
