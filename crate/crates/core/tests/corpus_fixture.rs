mod common;

use std::collections::BTreeSet;

use common::*;
use entrank::linkrank::extract_links;
use entrank::{CategoryId, Corpus, Error, PageId, SearchHit};

#[test]
fn mini_wiki_counts() {
    let c = mini_wiki();
    let stats = c.stats();
    assert_eq!(stats.pages, 12);
    assert_eq!(stats.categories, 6);
    // hand count of the cat_id column: 1+1+4+1+2+2+1+2+1+1+1+0
    assert!((stats.mean_categories_per_page - 17.0 / 12.0).abs() < 1e-12);
    // links to 9001, 9002 (Euro) and 9003 (Pound sterling) point outside the collection
    assert_eq!(stats.dropped_links, 3);
    assert_eq!(stats.links, 35);
}

#[test]
fn spain_categories() {
    let c = mini_wiki();
    let names: BTreeSet<&str> = c
        .categories_of(PageId(26667))
        .unwrap()
        .iter()
        .map(|&id| c.graph().name(id).unwrap())
        .collect();
    let expected: BTreeSet<&str> = [
        "spain",
        "european union member states",
        "spanish-speaking countries",
        "constitutional monarchies",
    ]
    .into_iter()
    .collect();
    assert_eq!(names, expected);
}

#[test]
fn categories_of_excludes_ancestors() {
    let c = mini_wiki();
    // Germany sits in "european union member states", whose parent is 185
    assert_eq!(c.categories_of(PageId(11867)).unwrap(), &cat_set(&[1]));
}

#[test]
fn page_without_categories_and_unknown_page() {
    let c = mini_wiki();
    assert!(c.categories_of(PageId(108)).unwrap().is_empty());
    assert!(matches!(c.categories_of(PageId(4242)), Err(Error::UnknownPage(_))));
}

#[test]
fn attachment_views_are_inverse() {
    let c = mini_wiki();
    let g = c.graph();
    for page in c.pages() {
        for cat in g.ids() {
            assert_eq!(
                g.cats_of(page.id).contains(&cat),
                g.pages_of(cat).contains(&page.id),
                "page {} category {}",
                page.id,
                cat
            );
        }
        assert_eq!(g.cats_of(page.id), &page.categories);
    }
}

#[test]
fn fixture_graph_has_a_cycle_and_self_edge() {
    let g = mini_wiki().graph().clone();
    assert!(g.children(CategoryId(2)).contains(&CategoryId(4)));
    assert!(g.children(CategoryId(4)).contains(&CategoryId(2)));
    assert_eq!(
        g.parents_one_up(&cat_set(&[4])).unwrap(),
        cat_set(&[1, 2, 4])
    );
    assert_eq!(g.parents_one_up(&cat_set(&[5])).unwrap(), cat_set(&[5]));
}

#[test]
fn links_keep_paths() {
    let c = mini_wiki();
    let euro = c.page(PageId(106)).unwrap();
    assert_eq!(euro.outlinks.len(), 7);
    assert!(euro.outlinks.iter().all(|l| l.xml_path.starts_with("/article/body/")));
    assert_eq!(euro.outlinks[0].anchor, "France");
    assert!(euro.body.contains("include France, Germany"));
}

const EURO_COUNTRIES: [&str; 15] = [
    "Austria", "Belgium", "Finland", "France", "Germany", "Greece", "Ireland", "Italy",
    "Luxembourg", "the Netherlands", "Portugal", "Slovenia", "Spain", "Cyprus", "Malta",
];

/// The euro article extract: 18 links, 15 of them to countries.
fn euro_extract() -> Corpus {
    let mut pages = String::new();
    let mut body = String::from(
        "The euro is the official [[2|currency|/article/body/p[1]/collectionlink[1]]] of the \
         [[3|Eurozone|/article/body/p[1]/collectionlink[2]]], which consists of the \
         [[4|European|/article/body/p[1]/collectionlink[3]]] states of",
    );
    for (i, name) in EURO_COUNTRIES.iter().enumerate() {
        let id = 10 + i;
        body.push_str(&format!(
            " [[{id}|{name}|/article/body/p[1]/collectionlink[{}]]]",
            i + 4
        ));
        pages.push_str(&format!("{id}\t{name}\t1\t{name} is a country.\n"));
    }
    pages.push_str(&format!("1\tEuro\t2\t{body}\n"));
    pages.push_str("2\tCurrency\t\tmoney\n3\tEurozone\t\tzone\n4\tEurope\t\tcontinent\n");
    let cats = "C\t1\tCountries\nC\t2\tCurrencies\n";
    Corpus::from_tsv(&pages, "pages.tsv", cats, "categories.tsv").unwrap()
}

#[test]
fn euro_extract_has_15_country_links() {
    let c = euro_extract();
    let hits = [SearchHit { doc: 1, score: 4.0 }];
    let table = extract_links(&c, &hits, 20).unwrap();
    let counts = &table.referrers[0].counts;
    assert_eq!(counts.values().sum::<u32>(), 18);
    let countries = c.graph().pages_of(CategoryId(1));
    let to_countries: u32 = counts
        .iter()
        .filter(|(t, _)| countries.contains(t))
        .map(|(_, n)| n)
        .sum();
    assert_eq!(to_countries, 15);
}
