//! Ranks the Euro topic as entity ranking and as list completion and shows
//! the component scores behind each answer.
//!
//!     cargo run --example euro_topic -- 0.1 0.8

use std::path::PathBuf;

use entrank::fusion::FusionParams;
use entrank::topics::load_topic;
use entrank::{CatStrategy, Corpus, Engine, RankSettings, Task1Strategy, Task2Strategy};

fn main() -> entrank::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<f64>());
    let alpha = args.next().transpose().ok().flatten().unwrap_or(0.1);
    let beta = args.next().transpose().ok().flatten().unwrap_or(0.8);
    let fusion = FusionParams::new(alpha, beta)?;

    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki");
    let engine = Engine::with_all_indexes(Corpus::load(dir.join("pages.tsv"), dir.join("categories.tsv"))?);
    let topic = load_topic(dir.join("topics/euro.xml"))?;
    println!("{}", topic.title);

    for s in [CatStrategy::Task1(Task1Strategy::Base), CatStrategy::Task2(Task2Strategy::Base)] {
        println!("\ntask {} {} (alpha {alpha}, beta {beta})", s.task(), s.label());
        println!("{:>4} {:>6} {:<16} {:>6} {:>6} {:>6} {:>6}", "rank", "id", "title", "S_L", "S_C", "S_Z", "S");
        for (i, e) in engine.rank(&topic, &RankSettings::new(s).with_fusion(fusion))?.iter().enumerate() {
            let title = engine.corpus().page(e.id).map_or("?", |p| p.title.as_str());
            println!(
                "{:>4} {:>6} {:<16} {:>6.3} {:>6.3} {:>6.3} {:>6.3}",
                i + 1, e.id, title, e.s_l, e.s_c, e.s_z, e.s
            );
        }
    }
    Ok(())
}
