//! Fixture loading and naive reference implementations used as test oracles.
//!
//! Nothing here calls the index, linkrank, catsim, fusion or metric code of
//! the crate. The corpus loader is used for ingestion only.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use entrank::topics::load_topics_dir;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use entrank::{CatStrategy, CategoryId, Corpus, PageId, Qrels, Task1Strategy, Task2Strategy, Topic};

pub const K1: f64 = 1.2;
pub const B: f64 = 0.75;

pub fn mini_wiki_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki")
}

pub fn mini_wiki() -> Corpus {
    let d = mini_wiki_dir();
    Corpus::load(d.join("pages.tsv"), d.join("categories.tsv")).unwrap()
}

pub fn mini_topics() -> Vec<Topic> {
    load_topics_dir(mini_wiki_dir().join("topics")).unwrap()
}

pub fn euro_topic() -> Topic {
    mini_topics().into_iter().find(|t| t.id == "euro").unwrap()
}

pub fn mini_qrels() -> Qrels {
    Qrels::load(mini_wiki_dir().join("qrels.txt")).unwrap()
}

/// Parent -> child edges read straight from the categories file.
pub fn raw_edges() -> Vec<(u32, u32)> {
    let src = std::fs::read_to_string(mini_wiki_dir().join("categories.tsv")).unwrap();
    src.lines()
        .filter(|l| l.starts_with("E\t"))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            (f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect()
}

pub fn naive_tokens(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        if ch.is_alphanumeric() {
            cur.extend(ch.to_lowercase());
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Direct BM25 evaluation over raw term counts, sorted by descending score
/// then ascending id; zero scores dropped.
pub fn brute_bm25(docs: &[(u32, String)], query: &str) -> Vec<(u32, f64)> {
    let toks: Vec<(u32, Vec<String>)> =
        docs.iter().map(|(id, t)| (*id, naive_tokens(t))).collect();
    let n = toks.len() as f64;
    let avg = toks.iter().map(|(_, t)| t.len()).sum::<usize>() as f64 / n;
    let mut q: Vec<String> = naive_tokens(query);
    q.sort();
    q.dedup();
    let mut out = Vec::new();
    for (id, dt) in &toks {
        let mut score = 0.0;
        for term in &q {
            let tf = dt.iter().filter(|t| *t == term).count() as f64;
            if tf == 0.0 {
                continue;
            }
            let df = toks.iter().filter(|(_, t)| t.contains(term)).count() as f64;
            let idf = (1.0 + (n - df + 0.5) / (df + 0.5)).ln();
            let len = dt.len() as f64;
            score += idf * tf * (K1 + 1.0) / (tf + K1 * (1.0 - B + B * len / avg));
        }
        if score > 0.0 {
            out.push((*id, score));
        }
    }
    out.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
    out
}

pub fn page_docs(corpus: &Corpus) -> Vec<(u32, String)> {
    corpus
        .pages()
        .map(|p| (p.id.0, format!("{} {}", p.title, p.body)))
        .collect()
}

pub fn category_name_docs(corpus: &Corpus) -> Vec<(u32, String)> {
    let g = corpus.graph();
    g.ids().map(|c| (c.0, g.name(c).unwrap().to_string())).collect()
}

fn one_up(cats: &BTreeSet<u32>, edges: &[(u32, u32)]) -> BTreeSet<u32> {
    let mut out = cats.clone();
    for &(p, c) in edges {
        if cats.contains(&c) {
            out.insert(p);
        }
    }
    out
}

fn one_down(cats: &BTreeSet<u32>, edges: &[(u32, u32)]) -> BTreeSet<u32> {
    let mut out = cats.clone();
    for &(p, c) in edges {
        if cats.contains(&p) {
            out.insert(c);
        }
    }
    out
}

fn page_cats(corpus: &Corpus, id: u32) -> BTreeSet<u32> {
    corpus
        .page(PageId(id))
        .unwrap()
        .categories
        .iter()
        .map(|c| c.0)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleEntity {
    pub id: u32,
    pub s_l: f64,
    pub s_c: f64,
    pub s_z: f64,
    pub s: f64,
}

/// End-to-end recomputation of a topic ranking from raw fixture data.
pub fn oracle_rank(
    corpus: &Corpus,
    topic: &Topic,
    strategy: CatStrategy,
    alpha: f64,
    beta: f64,
    n: usize,
    k: usize,
) -> Vec<OracleEntity> {
    let edges = raw_edges();
    let mut hits = brute_bm25(&page_docs(corpus), &topic.title);
    hits.truncate(k);

    // Linkrank by summing over every (referrer, link) pair of the top-N pages.
    let top_n: Vec<(u32, f64)> = hits.iter().take(n).copied().collect();
    let mut candidates: BTreeSet<u32> = hits.iter().map(|h| h.0).collect();
    for (p, _) in &top_n {
        for l in &corpus.page(PageId(*p)).unwrap().outlinks {
            candidates.insert(l.target.0);
        }
    }
    let examples: BTreeSet<u32> = topic.examples.iter().map(|(p, _)| p.0).collect();
    if matches!(strategy, CatStrategy::Task2(_)) {
        candidates.retain(|c| !examples.contains(c));
    }

    let target: BTreeSet<u32> = match strategy {
        CatStrategy::Task1(s) => {
            let c: BTreeSet<u32> = topic.target_categories.iter().map(|(c, _)| c.0).collect();
            match s {
                Task1Strategy::Base => c,
                Task1Strategy::Extended => one_down(&c, &edges),
                Task1Strategy::Lexical(lex) => {
                    let query = match lex.query {
                        entrank::LexicalQuery::Categories => topic.target_category_names(),
                        entrank::LexicalQuery::Title => topic.title.clone(),
                        entrank::LexicalQuery::TitleAndCategories => {
                            format!("{} {}", topic.title, topic.target_category_names())
                        }
                    };
                    let docs = match lex.flavor {
                        entrank::CategoryFlavor::Names => category_name_docs(corpus),
                        entrank::CategoryFlavor::NamesPlusEntities => {
                            let g = corpus.graph();
                            g.ids()
                                .map(|cid| {
                                    let mut d = g.name(cid).unwrap().to_string();
                                    for p in corpus.pages() {
                                        if p.categories.contains(&cid) {
                                            d.push(' ');
                                            d.push_str(&p.title);
                                        }
                                    }
                                    (cid.0, d)
                                })
                                .collect()
                        }
                    };
                    let mut out = c;
                    out.extend(brute_bm25(&docs, &query).into_iter().take(lex.m).map(|h| h.0));
                    out
                }
            }
        }
        CatStrategy::Task2(s) => {
            let mut e = BTreeSet::new();
            for x in &examples {
                e.extend(page_cats(corpus, *x));
            }
            match s {
                Task2Strategy::Base | Task2Strategy::UpAnswer => e,
                Task2Strategy::UpExamples | Task2Strategy::UpBoth => one_up(&e, &edges),
            }
        }
    };
    let answer_up = matches!(
        strategy,
        CatStrategy::Task1(Task1Strategy::Extended)
            | CatStrategy::Task2(Task2Strategy::UpAnswer | Task2Strategy::UpBoth)
    );

    let mut raw = Vec::new();
    for &t in &candidates {
        let mut s_l = 0.0;
        for (p, z) in &top_n {
            let count = corpus
                .page(PageId(*p))
                .unwrap()
                .outlinks
                .iter()
                .filter(|l| l.target.0 == t)
                .count();
            s_l += z * count as f64;
        }
        let mut cats = page_cats(corpus, t);
        if answer_up {
            cats = one_up(&cats, &edges);
        }
        let s_c = cats.intersection(&target).count() as f64 / target.len() as f64;
        let s_z = hits.iter().find(|h| h.0 == t).map_or(0.0, |h| h.1);
        raw.push((t, s_l, s_c, s_z));
    }

    let max = |f: fn(&(u32, f64, f64, f64)) -> f64| raw.iter().map(f).fold(0.0, f64::max);
    let (ml, mc, mz) = (max(|r| r.1), max(|r| r.2), max(|r| r.3));
    let norm = |v: f64, m: f64| if m > 0.0 { v / m } else { 0.0 };
    let mut out: Vec<OracleEntity> = raw
        .iter()
        .map(|&(id, l, c, z)| {
            let (s_l, s_c, s_z) = (norm(l, ml), norm(c, mc), norm(z, mz));
            OracleEntity {
                id,
                s_l,
                s_c,
                s_z,
                s: alpha * s_l + beta * s_c + (1.0 - alpha - beta) * s_z,
            }
        })
        .collect();
    out.sort_by(|a, b| b.s.partial_cmp(&a.s).unwrap().then(a.id.cmp(&b.id)));
    out
}

/// Quadratic-time P@k: checks membership of each top-k item by scanning.
pub fn naive_precision(ranking: &[u32], relevant: &[u32], k: usize) -> f64 {
    let mut hits = 0;
    for item in ranking.iter().take(k) {
        if relevant.iter().any(|r| r == item) {
            hits += 1;
        }
    }
    hits as f64 / k as f64
}

/// Quadratic-time AP: precision recomputed from scratch at every relevant
/// rank.
pub fn naive_ap(ranking: &[u32], relevant: &[u32]) -> f64 {
    let mut sum = 0.0;
    for r in relevant {
        if let Some(pos) = ranking.iter().position(|x| x == r) {
            sum += naive_precision(ranking, relevant, pos + 1);
        }
    }
    sum / relevant.len() as f64
}

pub fn ids(v: &[u32]) -> BTreeSet<u32> {
    v.iter().copied().collect()
}

pub fn cat_set(v: &[u32]) -> BTreeSet<CategoryId> {
    v.iter().map(|&c| CategoryId(c)).collect()
}

pub fn page_set(v: &[u32]) -> BTreeSet<PageId> {
    v.iter().map(|&c| PageId(c)).collect()
}

pub fn as_map(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// (ranking, relevant) pairs; relevant items may be absent from the ranking.
pub fn random_cases(n: usize, seed: u64) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let pool: u32 = rng.gen_range(1..60);
            let mut items: Vec<u32> = (0..pool).collect();
            items.shuffle(&mut rng);
            let len = rng.gen_range(0..=items.len());
            let ranking = items[..len].to_vec();
            let n_rel = rng.gen_range(1..=pool as usize);
            let mut all: Vec<u32> = (0..pool).collect();
            all.shuffle(&mut rng);
            (ranking, all[..n_rel].to_vec())
        })
        .collect()
}

/// A random corpus over a small category graph. Edges may form cycles and
/// self-loops. Returns the corpus and its parent -> child edges.
pub fn random_graph_corpus(rng: &mut ChaCha8Rng) -> (Corpus, Vec<(u32, u32)>) {
    let n_cats: u32 = rng.gen_range(1..=10);
    let mut cats = String::new();
    for c in 0..n_cats {
        cats.push_str(&format!("C\t{c}\tcategory {c}\n"));
    }
    let mut edges = BTreeSet::new();
    for _ in 0..rng.gen_range(0..=2 * n_cats) {
        edges.insert((rng.gen_range(0..n_cats), rng.gen_range(0..n_cats)));
    }
    for (p, c) in &edges {
        cats.push_str(&format!("E\t{p}\t{c}\n"));
    }
    let mut pages = String::new();
    for id in 0..rng.gen_range(1..=8u32) {
        let pc: Vec<u32> = (0..n_cats).filter(|_| rng.gen_bool(0.3)).collect();
        let list = pc.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        pages.push_str(&format!("{id}\tpage {id}\t{list}\tbody of page {id}\n"));
    }
    let corpus = Corpus::from_tsv(&pages, "pages", &cats, "cats").unwrap();
    (corpus, edges.into_iter().collect())
}

/// Checks the one-level expansion laws on one random corpus against the
/// raw edge list. Returns a description of the first violation.
pub fn check_extension_laws(corpus: &Corpus, edges: &[(u32, u32)], rng: &mut ChaCha8Rng) -> Result<(), String> {
    use entrank::catsim::overlap_ratio;
    let g = corpus.graph();
    let to_ids = |s: &BTreeSet<CategoryId>| s.iter().map(|c| c.0).collect::<BTreeSet<u32>>();
    let all: Vec<u32> = g.ids().map(|c| c.0).collect();
    for p in corpus.pages() {
        let cat: BTreeSet<CategoryId> = p.categories.clone();
        let up = g.parents_one_up(&cat).map_err(|e| e.to_string())?;
        if !cat.is_subset(&up) {
            return Err(format!("cat(t) not within cat_u(t) for page {}", p.id));
        }
        if to_ids(&up) != one_up(&to_ids(&cat), edges) {
            return Err(format!("cat_u(t) differs from edge oracle for page {}", p.id));
        }
        let rev = g.reversed().children_one_down(&cat).map_err(|e| e.to_string())?;
        if rev != up {
            return Err(format!("reversed graph disagrees for page {}", p.id));
        }
        // a few random target sets per page
        for _ in 0..3 {
            let target: BTreeSet<CategoryId> =
                all.iter().filter(|_| rng.gen_bool(0.4)).map(|&c| CategoryId(c)).collect();
            if target.is_empty() {
                continue;
            }
            let base = overlap_ratio(&cat, &target).map_err(|e| e.to_string())?;
            let ext = overlap_ratio(&up, &target).map_err(|e| e.to_string())?;
            if ext < base {
                return Err(format!("answer-side extension lowered the score of page {}", p.id));
            }
        }
    }
    for _ in 0..4 {
        let c: BTreeSet<CategoryId> =
            all.iter().filter(|_| rng.gen_bool(0.3)).map(|&c| CategoryId(c)).collect();
        let down = g.children_one_down(&c).map_err(|e| e.to_string())?;
        if !c.is_subset(&down) {
            return Err("cat(C) not within cat_d(C)".into());
        }
        if to_ids(&down) != one_down(&to_ids(&c), edges) {
            return Err("cat_d(C) differs from edge oracle".into());
        }
    }
    Ok(())
}
