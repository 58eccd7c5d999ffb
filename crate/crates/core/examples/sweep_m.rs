//! MAP of lexical target-category expansion as M goes from 1 to 20.
//!
//!     cargo run --example sweep_m

use std::path::PathBuf;

use entrank::evaluation::Experiment;
use entrank::topics::load_topics_dir;
use entrank::{
    CatStrategy, CategoryFlavor, Corpus, Engine, Lexical, LexicalQuery, Qrels, RankSettings, Task1Strategy,
};

fn main() -> entrank::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki");
    let engine = Engine::with_all_indexes(Corpus::load(dir.join("pages.tsv"), dir.join("categories.tsv"))?);
    let topics = load_topics_dir(dir.join("topics"))?;
    let qrels = Qrels::load(dir.join("qrels.txt"))?;

    for flavor in [CategoryFlavor::Names, CategoryFlavor::NamesPlusEntities] {
        let s = CatStrategy::Task1(Task1Strategy::Lexical(Lexical {
            query: LexicalQuery::TitleAndCategories,
            flavor,
            m: 10,
        }));
        let sweep = Experiment::new(&engine, &topics, &qrels, RankSettings::new(s))?.sweep_m(1..=20)?;
        println!("{} with {flavor} index", s.label());
        print!("{}", sweep.to_delimited('\t'));
        if let Some(best) = sweep.best() {
            println!("best M = {} (MAP {:.4})\n", best.m, best.mean.ap);
        }
    }
    Ok(())
}
