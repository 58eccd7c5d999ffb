//! Links extracted from the top retrieved pages and the resulting linkrank
//! scores.
//!
//!     cargo run --example linkrank -- 3

use std::path::PathBuf;

use entrank::linkrank::{extract_links, linkrank_score};
use entrank::topics::load_topic;
use entrank::{Corpus, Index, IndexFlavor};

fn main() -> entrank::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(20);
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki");
    let corpus = Corpus::load(dir.join("pages.tsv"), dir.join("categories.tsv"))?;
    let topic = load_topic(dir.join("topics/euro.xml"))?;

    let hits = Index::build(&corpus, IndexFlavor::Pages).search(&topic.title, 100)?;
    let table = extract_links(&corpus, &hits, n)?;
    for r in &table.referrers {
        let targets: Vec<String> = r.counts.iter().map(|(t, c)| format!("{t}x{c}")).collect();
        println!("referrer {:>6} z={:.4} -> {}", r.page, r.z, targets.join(" "));
    }
    let mut scored: Vec<_> = table.targets().map(|t| (t, linkrank_score(&table, t))).collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    for (t, s) in scored {
        let title = corpus.page(t).map_or("?", |p| p.title.as_str());
        println!("{t:>6} {title:<16} {s:.4}");
    }
    Ok(())
}
