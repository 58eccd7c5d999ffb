//! Loads the bundled mini-wiki and prints its pages, categories and links.
//!
//!     cargo run --example corpus_stats

use std::path::PathBuf;

use entrank::{CategoryId, Corpus};

fn main() -> entrank::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki");
    let corpus = Corpus::load(dir.join("pages.tsv"), dir.join("categories.tsv"))?;
    let stats = corpus.stats();
    println!(
        "{} pages, {} categories, {} links ({} dangling dropped), {:.2} categories per page",
        stats.pages, stats.categories, stats.links, stats.dropped_links, stats.mean_categories_per_page
    );
    for page in corpus.pages() {
        let cats: Vec<String> = page.categories.iter().map(ToString::to_string).collect();
        println!("{:>6} {:<16} cats [{}] {} links", page.id, page.title, cats.join(","), page.outlinks.len());
    }
    let g = corpus.graph();
    let target = [CategoryId(185)].into_iter().collect();
    println!("children of 185, one level: {:?}", g.children_one_down(&target)?);
    Ok(())
}
