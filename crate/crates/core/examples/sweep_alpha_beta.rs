//! The 66-cell (alpha, beta) grid for list completion, printed as a MAP
//! matrix with alpha down and beta across.
//!
//!     cargo run --example sweep_alpha_beta

use std::path::PathBuf;

use entrank::evaluation::Experiment;
use entrank::topics::load_topics_dir;
use entrank::{CatStrategy, Corpus, Engine, Qrels, RankSettings, Task2Strategy};

fn main() -> entrank::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki");
    let engine = Engine::with_all_indexes(Corpus::load(dir.join("pages.tsv"), dir.join("categories.tsv"))?);
    let topics = load_topics_dir(dir.join("topics"))?;
    let qrels = Qrels::load(dir.join("qrels.txt"))?;
    let settings = RankSettings::new(CatStrategy::Task2(Task2Strategy::Base));
    let sweep = Experiment::new(&engine, &topics, &qrels, settings)?.sweep_alpha_beta()?;

    print!("a\\b ");
    for j in 0..=10 {
        print!("{:>6.1}", f64::from(j) / 10.0);
    }
    println!();
    for i in 0..=10 {
        let a = f64::from(i) / 10.0;
        print!("{a:>4.1}");
        for j in 0..=(10 - i) {
            let cell = sweep.cell(a, f64::from(j) / 10.0).expect("grid cell");
            print!("{:>6.3}", cell.mean.ap);
        }
        println!();
    }
    if let Some(best) = sweep.best() {
        println!("best: alpha {:.1} beta {:.1} MAP {:.4}", best.alpha, best.beta, best.mean.ap);
    }
    Ok(())
}
