//! Category similarity score `S_C(t)`.
//!
//! The score is the fraction of a target category set that an answer
//! entity's categories cover:
//!
//! ```text
//! S_C(t) = |A(t) ∩ T| / |T|
//! ```
//!
//! where `A(t)` is `cat(t)` or its one-level-up extension, and `T` is built
//! from the topic: target categories (task 1, optionally extended one level
//! down or augmented with lexically retrieved categories) or the union of
//! the example entities' categories (task 2, optionally extended one level
//! up).

use std::fmt;
use std::str::FromStr;

use crate::corpus::{CategorySet, Corpus, PageId};
use crate::error::{Error, Result};
use crate::textindex::{Index, IndexFlavor};
use crate::topics::{Task, Topic};

/// Which text is sent to the category index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LexicalQuery {
    /// Target category names (`Ccat`).
    Categories,
    /// Topic title (`Tcat`).
    Title,
    /// Title followed by the category names (`TCcat`).
    TitleAndCategories,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CategoryFlavor {
    /// Category names only ("C").
    Names,
    /// Category names plus attached page titles ("CE").
    NamesPlusEntities,
}

impl CategoryFlavor {
    pub fn index_flavor(self) -> IndexFlavor {
        match self {
            CategoryFlavor::Names => IndexFlavor::CatNames,
            CategoryFlavor::NamesPlusEntities => IndexFlavor::CatNamesPlusEntities,
        }
    }
}

impl FromStr for CategoryFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c" => Ok(CategoryFlavor::Names),
            "ce" => Ok(CategoryFlavor::NamesPlusEntities),
            _ => Err(Error::InvalidArgument(format!("category index must be c or ce, got {s:?}"))),
        }
    }
}

impl fmt::Display for CategoryFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CategoryFlavor::Names => "c",
            CategoryFlavor::NamesPlusEntities => "ce",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lexical {
    pub query: LexicalQuery,
    pub flavor: CategoryFlavor,
    /// Number of retrieved categories kept.
    pub m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Task1Strategy {
    /// `cat(C)` vs `cat(t)`.
    Base,
    /// `cat_d(C)` vs `cat_u(t)`.
    Extended,
    /// `cat(C)` plus the top-M lexical hits, vs `cat(t)`.
    Lexical(Lexical),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Task2Strategy {
    /// `cat(E)` vs `cat(t)`.
    Base,
    /// `cat(E)` vs `cat_u(t)`.
    UpAnswer,
    /// `cat_u(E)` vs `cat(t)`.
    UpExamples,
    /// `cat_u(E)` vs `cat_u(t)`.
    UpBoth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatStrategy {
    Task1(Task1Strategy),
    Task2(Task2Strategy),
}

impl CatStrategy {
    pub fn task(&self) -> Task {
        match self {
            CatStrategy::Task1(_) => Task::EntityRanking,
            CatStrategy::Task2(_) => Task::ListCompletion,
        }
    }

    pub fn lexical(&self) -> Option<Lexical> {
        match self {
            CatStrategy::Task1(Task1Strategy::Lexical(l)) => Some(*l),
            _ => None,
        }
    }

    /// Same strategy with a different M. No-op for non-lexical strategies.
    pub fn with_m(self, m: usize) -> CatStrategy {
        match self {
            CatStrategy::Task1(Task1Strategy::Lexical(l)) => {
                CatStrategy::Task1(Task1Strategy::Lexical(Lexical { m, ..l }))
            }
            other => other,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.lexical() {
            Some(l) if l.m == 0 => Err(Error::InvalidArgument(
                "lexical strategies need M >= 1".into(),
            )),
            _ => Ok(()),
        }
    }

    /// Whether the answer side uses `cat_u(t)` instead of `cat(t)`.
    pub fn extends_answer(&self) -> bool {
        matches!(
            self,
            CatStrategy::Task1(Task1Strategy::Extended)
                | CatStrategy::Task2(Task2Strategy::UpAnswer | Task2Strategy::UpBoth)
        )
    }

    /// Parses a strategy name for the given task. Lexical strategies take
    /// their index flavor and M from the arguments.
    pub fn parse(name: &str, task: Task, flavor: CategoryFlavor, m: usize) -> Result<CatStrategy> {
        let lex = |query| {
            CatStrategy::Task1(Task1Strategy::Lexical(Lexical { query, flavor, m }))
        };
        let s = match (task, name.to_ascii_lowercase().as_str()) {
            (Task::EntityRanking, "base") => CatStrategy::Task1(Task1Strategy::Base),
            (Task::EntityRanking, "extended") => CatStrategy::Task1(Task1Strategy::Extended),
            (Task::EntityRanking, "lex-c") => lex(LexicalQuery::Categories),
            (Task::EntityRanking, "lex-t") => lex(LexicalQuery::Title),
            (Task::EntityRanking, "lex-tc") => lex(LexicalQuery::TitleAndCategories),
            (Task::ListCompletion, "base") => CatStrategy::Task2(Task2Strategy::Base),
            (Task::ListCompletion, "u-t") => CatStrategy::Task2(Task2Strategy::UpAnswer),
            (Task::ListCompletion, "u-e") => CatStrategy::Task2(Task2Strategy::UpExamples),
            (Task::ListCompletion, "u-both") => CatStrategy::Task2(Task2Strategy::UpBoth),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown strategy {name:?} for task {task}"
                )))
            }
        };
        s.validate()?;
        Ok(s)
    }

    pub fn name(&self) -> &'static str {
        match self {
            CatStrategy::Task1(Task1Strategy::Base) | CatStrategy::Task2(Task2Strategy::Base) => {
                "base"
            }
            CatStrategy::Task1(Task1Strategy::Extended) => "extended",
            CatStrategy::Task1(Task1Strategy::Lexical(l)) => match l.query {
                LexicalQuery::Categories => "lex-c",
                LexicalQuery::Title => "lex-t",
                LexicalQuery::TitleAndCategories => "lex-tc",
            },
            CatStrategy::Task2(Task2Strategy::UpAnswer) => "u-t",
            CatStrategy::Task2(Task2Strategy::UpExamples) => "u-e",
            CatStrategy::Task2(Task2Strategy::UpBoth) => "u-both",
        }
    }

    /// Run label in the `target-answer` notation, e.g. `TCcat(C)-cat(t)`.
    pub fn label(&self) -> &'static str {
        match self {
            CatStrategy::Task1(Task1Strategy::Base) => "cat(C)-cat(t)",
            CatStrategy::Task1(Task1Strategy::Extended) => "cat_d(C)-cat_u(t)",
            CatStrategy::Task1(Task1Strategy::Lexical(l)) => match l.query {
                LexicalQuery::Categories => "Ccat(C)-cat(t)",
                LexicalQuery::Title => "Tcat(C)-cat(t)",
                LexicalQuery::TitleAndCategories => "TCcat(C)-cat(t)",
            },
            CatStrategy::Task2(Task2Strategy::Base) => "cat(E)-cat(t)",
            CatStrategy::Task2(Task2Strategy::UpAnswer) => "cat(E)-cat_u(t)",
            CatStrategy::Task2(Task2Strategy::UpExamples) => "cat_u(E)-cat(t)",
            CatStrategy::Task2(Task2Strategy::UpBoth) => "cat_u(E)-cat_u(t)",
        }
    }
}

/// Target category set together with the strategy that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetCatSet {
    pub cats: CategorySet,
    pub provenance: CatStrategy,
}

/// Category-name prefixes excluded from lexical retrieval. Empty by default.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CategoryFilter {
    pub blocked_prefixes: Vec<String>,
}

impl CategoryFilter {
    pub fn allows(&self, name: &str) -> bool {
        !self
            .blocked_prefixes
            .iter()
            .any(|p| name.starts_with(p.to_lowercase().as_str()))
    }
}

/// `|answer ∩ target| / |target|`.
pub fn overlap_ratio(answer_cats: &CategorySet, target_cats: &CategorySet) -> Result<f64> {
    if target_cats.is_empty() {
        return Err(Error::EmptyTargetSet);
    }
    let common = answer_cats.intersection(target_cats).count();
    Ok(common as f64 / target_cats.len() as f64)
}

/// Lexical query text for a topic.
pub fn lexical_query_text(topic: &Topic, query: LexicalQuery) -> String {
    match query {
        LexicalQuery::Categories => topic.target_category_names(),
        LexicalQuery::Title => topic.title.clone(),
        LexicalQuery::TitleAndCategories => {
            format!("{} {}", topic.title, topic.target_category_names())
        }
    }
}

/// Builds the task-1 target set. `category_index` is required for lexical
/// strategies and must have the strategy's flavor.
pub fn build_target_set_task1(
    corpus: &Corpus,
    category_index: Option<&Index>,
    topic: &Topic,
    strategy: Task1Strategy,
    filter: &CategoryFilter,
) -> Result<TargetCatSet> {
    let graph = corpus.graph();
    let base = topic.target_category_ids();
    for &c in &base {
        if !graph.contains(c) {
            return Err(Error::UnknownCategory(c));
        }
    }
    let cats = match strategy {
        Task1Strategy::Base => base,
        Task1Strategy::Extended => graph.children_one_down(&base)?,
        Task1Strategy::Lexical(lex) => {
            if lex.m == 0 {
                return Err(Error::InvalidArgument("lexical strategies need M >= 1".into()));
            }
            let index = category_index.ok_or_else(|| {
                Error::InvalidArgument("lexical strategy needs a category index".into())
            })?;
            if index.flavor() != lex.flavor.index_flavor() {
                return Err(Error::InvalidArgument(format!(
                    "category index flavor {:?} does not match strategy flavor {}",
                    index.flavor(),
                    lex.flavor
                )));
            }
            let query = lexical_query_text(topic, lex.query);
            let mut cats = base;
            let retrieved = index
                .search(&query, index.len().max(1))?
                .into_iter()
                .map(|h| h.category())
                .filter(|&c| graph.name(c).is_some_and(|n| filter.allows(n)))
                .take(lex.m);
            cats.extend(retrieved);
            cats
        }
    };
    Ok(TargetCatSet {
        cats,
        provenance: CatStrategy::Task1(strategy),
    })
}

/// Builds the task-2 target set from the example entities' categories.
pub fn build_target_set_task2(
    corpus: &Corpus,
    topic: &Topic,
    strategy: Task2Strategy,
) -> Result<TargetCatSet> {
    let mut union = CategorySet::new();
    for (e, _) in &topic.examples {
        union.extend(corpus.categories_of(*e)?.iter().copied());
    }
    let cats = match strategy {
        Task2Strategy::Base | Task2Strategy::UpAnswer => union,
        Task2Strategy::UpExamples | Task2Strategy::UpBoth => {
            corpus.graph().parents_one_up(&union)?
        }
    };
    Ok(TargetCatSet {
        cats,
        provenance: CatStrategy::Task2(strategy),
    })
}

/// Builds the target set for any strategy.
pub fn build_target_set(
    corpus: &Corpus,
    category_index: Option<&Index>,
    topic: &Topic,
    strategy: CatStrategy,
    filter: &CategoryFilter,
) -> Result<TargetCatSet> {
    topic.validate(strategy.task())?;
    match strategy {
        CatStrategy::Task1(s) => build_target_set_task1(corpus, category_index, topic, s, filter),
        CatStrategy::Task2(s) => build_target_set_task2(corpus, topic, s),
    }
}

/// The answer-side category set of `t` under a strategy.
pub fn answer_categories(corpus: &Corpus, strategy: CatStrategy, t: PageId) -> Result<CategorySet> {
    let cats = corpus.categories_of(t)?;
    if strategy.extends_answer() {
        corpus.graph().parents_one_up(cats)
    } else {
        Ok(cats.clone())
    }
}

/// `S_C(t)` for one candidate.
pub fn category_score(
    corpus: &Corpus,
    target: &TargetCatSet,
    strategy: CatStrategy,
    t: PageId,
) -> Result<f64> {
    overlap_ratio(&answer_categories(corpus, strategy, t)?, &target.cats)
}
