//! # entrank
//!
//! Entity ranking over a Wikipedia-style collection. A topic is answered by
//! combining three per-page scores:
//!
//! - the page's own BM25 score for the topic title ([`textindex`]),
//! - a linkrank score from the links of the top retrieved pages
//!   ([`linkrank`]),
//! - the overlap between the page's categories and the topic's target
//!   categories or its example entities' categories ([`catsim`]).
//!
//! [`fusion`] normalizes and combines them, [`pipeline::Engine`] runs the
//! whole chain for a topic, and [`evaluation`] scores runs and sweeps the
//! tuning parameters.
//!
//! ```no_run
//! use entrank::{CatStrategy, Corpus, Engine, RankSettings, Task2Strategy};
//!
//! let corpus = Corpus::load("pages.tsv", "categories.tsv")?;
//! let engine = Engine::with_all_indexes(corpus);
//! let topic = entrank::topics::load_topic("topics/euro.xml")?;
//! let settings = RankSettings::new(CatStrategy::Task2(Task2Strategy::Base));
//! for entity in engine.rank(&topic, &settings)?.iter().take(10) {
//!     println!("{} {:.3}", entity.id, entity.s);
//! }
//! # Ok::<(), entrank::Error>(())
//! ```

pub mod catsim;
pub mod commands;
pub mod config;
pub mod corpus;
pub mod error;
pub mod evaluation;
pub mod fusion;
pub mod linkrank;
pub mod pipeline;
pub mod run;
pub mod textindex;
pub mod topics;

pub use catsim::{CatStrategy, CategoryFlavor, Lexical, LexicalQuery, Task1Strategy, Task2Strategy};
pub use config::RunConfig;
pub use corpus::{CategoryGraph, CategoryId, Corpus, PageId};
pub use error::{Error, Result};
pub use fusion::{FusionParams, ScoredEntity};
pub use pipeline::{Engine, RankSettings};
pub use run::Run;
pub use textindex::{Index, IndexFlavor, SearchHit};
pub use topics::{Qrels, Task, Topic};
