//! Paired t-test between two runs' per-topic average precision.
//!
//!     cargo run --example significance

use std::path::PathBuf;

use entrank::evaluation::{paired_significance, Experiment};
use entrank::fusion::FusionParams;
use entrank::topics::load_topics_dir;
use entrank::{CatStrategy, Corpus, Engine, Qrels, RankSettings, Task2Strategy};

fn main() -> entrank::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki");
    let engine = Engine::with_all_indexes(Corpus::load(dir.join("pages.tsv"), dir.join("categories.tsv"))?);
    let topics = load_topics_dir(dir.join("topics"))?;
    let qrels = Qrels::load(dir.join("qrels.txt"))?;
    let settings = RankSettings::new(CatStrategy::Task2(Task2Strategy::Base));
    let exp = Experiment::new(&engine, &topics, &qrels, settings)?;

    let combined = exp.evaluate()?;
    let text_only = exp.evaluate_with(&settings.with_fusion(FusionParams::TEXT_ONLY))?;
    for (name, r) in [("combined", &combined), ("text only", &text_only)] {
        println!("{name:<10} MAP {:.4}  {:?}", r.map(), r.per_topic_ap());
    }
    let p = paired_significance(&combined.per_topic_ap(), &text_only.per_topic_ap())?;
    println!("two-sided paired t-test p = {p:.4}");
    Ok(())
}
