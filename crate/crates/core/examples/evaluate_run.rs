//! Writes a run for every topic, reads it back and evaluates it.
//!
//!     cargo run --example evaluate_run

use std::path::PathBuf;

use entrank::evaluation::{evaluate, summary_table};
use entrank::topics::load_topics_dir;
use entrank::{CatStrategy, Corpus, Engine, Qrels, RankSettings, Run, Task1Strategy, Task2Strategy};

fn main() -> entrank::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki");
    let engine = Engine::with_all_indexes(Corpus::load(dir.join("pages.tsv"), dir.join("categories.tsv"))?);
    let topics = load_topics_dir(dir.join("topics"))?;
    let qrels = Qrels::load(dir.join("qrels.txt"))?;
    let out = std::env::temp_dir().join("entrank-example.run");

    let mut rows = Vec::new();
    for (tag, s) in [
        ("task1-base", CatStrategy::Task1(Task1Strategy::Base)),
        ("task2-base", CatStrategy::Task2(Task2Strategy::Base)),
    ] {
        let mut run = Run::new(tag);
        for topic in topics.iter().filter(|t| t.supports(s.task())) {
            run.insert(&topic.id, &engine.rank(topic, &RankSettings::new(s))?, 100);
        }
        run.write(&out)?;
        let reread = Run::load(&out)?;
        let q = match s {
            CatStrategy::Task2(_) => qrels.without_examples(&topics),
            CatStrategy::Task1(_) => qrels.clone(),
        };
        let report = evaluate(&reread, &q)?;
        print!("{}", report.to_tsv());
        rows.push((tag, report.mean));
    }
    let tags: Vec<(&str, _)> = rows.iter().map(|(t, m)| (*t, *m)).collect();
    print!("\n{}", summary_table(&tags));
    Ok(())
}
