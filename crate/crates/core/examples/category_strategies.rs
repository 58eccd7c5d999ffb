//! Target category sets and category scores for every strategy on the Euro
//! topic.
//!
//!     cargo run --example category_strategies

use std::path::PathBuf;

use entrank::catsim::{build_target_set, category_score};
use entrank::topics::load_topic;
use entrank::{CatStrategy, CategoryFlavor, Corpus, Engine, Lexical, LexicalQuery, Task1Strategy, Task2Strategy};

fn main() -> entrank::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki");
    let corpus = Corpus::load(dir.join("pages.tsv"), dir.join("categories.tsv"))?;
    let topic = load_topic(dir.join("topics/euro.xml"))?;
    let engine = Engine::with_all_indexes(corpus);
    let corpus = engine.corpus();

    let lex = |query, m| {
        CatStrategy::Task1(Task1Strategy::Lexical(Lexical { query, flavor: CategoryFlavor::Names, m }))
    };
    let strategies = [
        CatStrategy::Task1(Task1Strategy::Base),
        CatStrategy::Task1(Task1Strategy::Extended),
        lex(LexicalQuery::Categories, 1),
        lex(LexicalQuery::TitleAndCategories, 2),
        CatStrategy::Task2(Task2Strategy::Base),
        CatStrategy::Task2(Task2Strategy::UpAnswer),
        CatStrategy::Task2(Task2Strategy::UpExamples),
        CatStrategy::Task2(Task2Strategy::UpBoth),
    ];
    for s in strategies {
        let index = s.lexical().and_then(|l| engine.category_index(l.flavor));
        let target = build_target_set(corpus, index, &topic, s, &Default::default())?;
        let cats: Vec<String> = target.cats.iter().map(ToString::to_string).collect();
        print!("{:<22} T = {{{}}}", s.label(), cats.join(","));
        for page in corpus.pages().take(6) {
            print!("  {}={:.2}", page.title, category_score(corpus, &target, s, page.id)?);
        }
        println!();
    }
    Ok(())
}
