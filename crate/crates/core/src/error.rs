use std::path::PathBuf;

use crate::corpus::{CategoryId, PageId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{file}:{line}: {message}")]
    Load {
        file: String,
        line: usize,
        message: String,
    },

    #[error("{file}:{line}: duplicate {kind} id {id}")]
    DuplicateId {
        file: String,
        line: usize,
        kind: &'static str,
        id: u32,
    },

    #[error("unknown page {0}")]
    UnknownPage(PageId),

    #[error("unknown category {0}")]
    UnknownCategory(CategoryId),

    #[error("category overlap undefined: target category set is empty")]
    EmptyTargetSet,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("topic parse error: {0}")]
    TopicParse(String),

    #[error("topic {topic} is not valid for task {task}: {reason}")]
    TopicInvalid {
        topic: String,
        task: u8,
        reason: String,
    },

    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },

    #[error("negative raw score {value} for page {page}")]
    NegativeScore { page: PageId, value: f64 },

    #[error("evaluation: {0}")]
    Evaluation(String),

    #[error("config: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
