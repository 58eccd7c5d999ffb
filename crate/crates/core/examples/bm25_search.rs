//! BM25 search over pages and over category names.
//!
//!     cargo run --example bm25_search -- "european countries euro"

use std::path::PathBuf;

use entrank::{Corpus, Index, IndexFlavor};

fn main() -> entrank::Result<()> {
    let query = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "European countries where I can pay with Euros".to_string());
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini-wiki");
    let corpus = Corpus::load(dir.join("pages.tsv"), dir.join("categories.tsv"))?;

    let pages = Index::build(&corpus, IndexFlavor::Pages);
    println!("pages matching {query:?}:");
    for hit in pages.search(&query, 10)? {
        let title = &corpus.page(hit.page()).expect("indexed page").title;
        println!("  {:>6} {:<16} {:.4}", hit.doc, title, hit.score);
    }

    for flavor in [IndexFlavor::CatNames, IndexFlavor::CatNamesPlusEntities] {
        let idx = Index::build(&corpus, flavor);
        println!("categories ({flavor:?}):");
        for hit in idx.search(&query, 5)? {
            let name = corpus.graph().name(hit.category()).unwrap_or("?");
            println!("  {:>4} {:<28} {:.4}", hit.doc, name, hit.score);
        }
    }
    Ok(())
}
