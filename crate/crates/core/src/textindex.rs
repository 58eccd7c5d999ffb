//! Inverted index with Okapi BM25 scoring.
//!
//! One index type serves the page collection and both category indexes.
//! Tokenization lowercases and splits on anything that is not alphanumeric;
//! there is no stemming and no stopword list.
//!
//! Scoring, summed over the distinct query terms present in a document:
//!
//! ```text
//! idf(t)   = ln(1 + (N - df + 0.5) / (df + 0.5))
//! w(t, d)  = idf(t) * tf * (k1 + 1) / (tf + k1 * (1 - b + b * |d| / avgdl))
//! ```

use std::collections::{BTreeMap, HashMap};

use crate::corpus::{CategoryId, Corpus, PageId};
use crate::error::{Error, Result};

pub const K1: f64 = 1.2;
pub const B: f64 = 0.75;

/// What the documents of an index are.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexFlavor {
    /// One document per page: title followed by body.
    Pages,
    /// One document per category: its name only (the "C" index).
    CatNames,
    /// Category name plus the titles of all attached pages (the "CE" index).
    CatNamesPlusEntities,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchHit {
    /// A `PageId` or `CategoryId` value depending on the index flavor.
    pub doc: u32,
    pub score: f64,
}

impl SearchHit {
    pub fn page(&self) -> PageId {
        PageId(self.doc)
    }

    pub fn category(&self) -> CategoryId {
        CategoryId(self.doc)
    }
}

pub fn tokenize(text: &str) -> impl Iterator<Item = String> + '_ {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
}

#[derive(Debug, Clone, Copy)]
struct Posting {
    doc: usize,
    tf: u32,
}

#[derive(Debug, Clone)]
pub struct Index {
    flavor: IndexFlavor,
    doc_ids: Vec<u32>,
    doc_lens: Vec<u32>,
    avg_len: f64,
    postings: HashMap<String, Vec<Posting>>,
}

impl Index {
    pub fn build(corpus: &Corpus, flavor: IndexFlavor) -> Index {
        match flavor {
            IndexFlavor::Pages => Index::from_documents(
                flavor,
                corpus
                    .pages()
                    .map(|p| (p.id.0, format!("{} {}", p.title, p.body))),
            ),
            IndexFlavor::CatNames => {
                let g = corpus.graph();
                Index::from_documents(
                    flavor,
                    g.ids().map(|c| (c.0, g.name(c).unwrap_or_default().to_string())),
                )
            }
            IndexFlavor::CatNamesPlusEntities => {
                let g = corpus.graph();
                Index::from_documents(
                    flavor,
                    g.ids().map(|c| {
                        let mut doc = g.name(c).unwrap_or_default().to_string();
                        for page in g.pages_of(c).iter().filter_map(|&p| corpus.page(p)) {
                            doc.push(' ');
                            doc.push_str(&page.title);
                        }
                        (c.0, doc)
                    }),
                )
            }
        }
    }

    /// Builds an index over arbitrary `(id, text)` documents.
    pub fn from_documents<I, S>(flavor: IndexFlavor, docs: I) -> Index
    where
        I: IntoIterator<Item = (u32, S)>,
        S: AsRef<str>,
    {
        let mut doc_ids = Vec::new();
        let mut doc_lens = Vec::new();
        let mut postings: HashMap<String, Vec<Posting>> = HashMap::new();
        for (slot, (id, text)) in docs.into_iter().enumerate() {
            let mut counts: BTreeMap<String, u32> = BTreeMap::new();
            let mut len = 0u32;
            for tok in tokenize(text.as_ref()) {
                *counts.entry(tok).or_default() += 1;
                len += 1;
            }
            for (term, tf) in counts {
                postings.entry(term).or_default().push(Posting { doc: slot, tf });
            }
            doc_ids.push(id);
            doc_lens.push(len);
        }
        let total: u64 = doc_lens.iter().map(|&l| u64::from(l)).sum();
        let avg_len = if doc_ids.is_empty() {
            0.0
        } else {
            total as f64 / doc_ids.len() as f64
        };
        Index {
            flavor,
            doc_ids,
            doc_lens,
            avg_len,
            postings,
        }
    }

    pub fn flavor(&self) -> IndexFlavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.doc_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doc_ids.is_empty()
    }

    pub fn avg_doc_len(&self) -> f64 {
        self.avg_len
    }

    /// Token count of the document with the given id.
    pub fn doc_len(&self, doc: u32) -> Option<u32> {
        self.doc_ids
            .iter()
            .position(|&d| d == doc)
            .map(|slot| self.doc_lens[slot])
    }

    pub fn idf(&self, df: usize) -> f64 {
        let n = self.doc_ids.len() as f64;
        let df = df as f64;
        (1.0 + (n - df + 0.5) / (df + 0.5)).ln()
    }

    /// Top `k` documents by BM25. Documents sharing no term with the query
    /// are never returned; ties go to the smaller document id.
    pub fn search(&self, query: &str, k: usize) -> Result<Vec<SearchHit>> {
        if k == 0 {
            return Err(Error::InvalidArgument("search depth k must be at least 1".into()));
        }
        let mut terms: Vec<String> = tokenize(query).collect();
        terms.sort();
        terms.dedup();

        let mut acc: HashMap<usize, f64> = HashMap::new();
        for term in &terms {
            let Some(list) = self.postings.get(term) else {
                continue;
            };
            let idf = self.idf(list.len());
            for p in list {
                let tf = f64::from(p.tf);
                let norm = K1 * (1.0 - B + B * f64::from(self.doc_lens[p.doc]) / self.avg_len);
                *acc.entry(p.doc).or_default() += idf * tf * (K1 + 1.0) / (tf + norm);
            }
        }

        let mut hits: Vec<SearchHit> = acc
            .into_iter()
            .filter(|&(_, s)| s > 0.0)
            .map(|(slot, score)| SearchHit {
                doc: self.doc_ids[slot],
                score,
            })
            .collect();
        hits.sort_by(|a, b| b.score.total_cmp(&a.score).then(a.doc.cmp(&b.doc)));
        hits.truncate(k);
        Ok(hits)
    }
}
