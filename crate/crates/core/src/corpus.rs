//! In-memory model of a Wikipedia-style collection: pages, resolved
//! intra-collection links, and the category graph.
//!
//! Two UTF-8 TSV files describe a collection.
//!
//! `pages.tsv`, one page per line:
//!
//! ```text
//! id \t title \t cat_id,cat_id,... \t body text with [[target_id|anchor|xml_path]] links
//! ```
//!
//! `categories.tsv`, category lines followed by edge lines:
//!
//! ```text
//! C \t id \t name
//! E \t parent_id \t child_id
//! ```
//!
//! Links whose target is not a page of the collection are dropped at load
//! time. Category names are lowercased.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PageId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CategoryId(pub u32);

impl fmt::Display for PageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for CategoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub type CategorySet = BTreeSet<CategoryId>;

/// A link occurrence inside a page body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Link {
    pub target: PageId,
    pub anchor: String,
    /// Element path of the occurrence, e.g. `/article/body/p[1]/collectionlink[2]`.
    pub xml_path: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Page {
    pub id: PageId,
    pub title: String,
    /// Body text with link markup replaced by the anchor text.
    pub body: String,
    pub outlinks: Vec<Link>,
    pub categories: CategorySet,
}

/// Category nodes with parent/child edges and page attachments.
///
/// Cycles, self-edges and multiple parents are all allowed.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CategoryGraph {
    names: BTreeMap<CategoryId, String>,
    children: BTreeMap<CategoryId, CategorySet>,
    parents: BTreeMap<CategoryId, CategorySet>,
    pages_of: BTreeMap<CategoryId, BTreeSet<PageId>>,
    cats_of: BTreeMap<PageId, CategorySet>,
}

static EMPTY_CATS: CategorySet = BTreeSet::new();
static EMPTY_PAGES: BTreeSet<PageId> = BTreeSet::new();

impl CategoryGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a category; the name is stored lowercased.
    pub fn add_category(&mut self, id: CategoryId, name: &str) -> Result<()> {
        if self.names.contains_key(&id) {
            return Err(Error::InvalidArgument(format!("duplicate category id {id}")));
        }
        self.names.insert(id, name.to_lowercase());
        Ok(())
    }

    pub fn add_edge(&mut self, parent: CategoryId, child: CategoryId) -> Result<()> {
        self.require(parent)?;
        self.require(child)?;
        self.children.entry(parent).or_default().insert(child);
        self.parents.entry(child).or_default().insert(parent);
        Ok(())
    }

    pub fn attach(&mut self, page: PageId, cat: CategoryId) -> Result<()> {
        self.require(cat)?;
        self.pages_of.entry(cat).or_default().insert(page);
        self.cats_of.entry(page).or_default().insert(cat);
        Ok(())
    }

    fn require(&self, id: CategoryId) -> Result<()> {
        if self.names.contains_key(&id) {
            Ok(())
        } else {
            Err(Error::UnknownCategory(id))
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn contains(&self, id: CategoryId) -> bool {
        self.names.contains_key(&id)
    }

    pub fn name(&self, id: CategoryId) -> Option<&str> {
        self.names.get(&id).map(String::as_str)
    }

    /// Category ids in ascending order.
    pub fn ids(&self) -> impl Iterator<Item = CategoryId> + '_ {
        self.names.keys().copied()
    }

    pub fn children(&self, id: CategoryId) -> &CategorySet {
        self.children.get(&id).unwrap_or(&EMPTY_CATS)
    }

    pub fn parents(&self, id: CategoryId) -> &CategorySet {
        self.parents.get(&id).unwrap_or(&EMPTY_CATS)
    }

    pub fn pages_of(&self, id: CategoryId) -> &BTreeSet<PageId> {
        self.pages_of.get(&id).unwrap_or(&EMPTY_PAGES)
    }

    pub fn cats_of(&self, page: PageId) -> &CategorySet {
        self.cats_of.get(&page).unwrap_or(&EMPTY_CATS)
    }

    /// `cats` plus the direct parents of each member (`cat_u`). One level only.
    pub fn parents_one_up(&self, cats: &CategorySet) -> Result<CategorySet> {
        self.expand_one_level(cats, &self.parents)
    }

    /// `cats` plus the direct children of each member (`cat_d`). One level only.
    pub fn children_one_down(&self, cats: &CategorySet) -> Result<CategorySet> {
        self.expand_one_level(cats, &self.children)
    }

    fn expand_one_level(
        &self,
        cats: &CategorySet,
        edges: &BTreeMap<CategoryId, CategorySet>,
    ) -> Result<CategorySet> {
        let mut out = cats.clone();
        for &c in cats {
            self.require(c)?;
            if let Some(next) = edges.get(&c) {
                out.extend(next.iter().copied());
            }
        }
        Ok(out)
    }

    /// The same graph with every parent/child edge flipped.
    pub fn reversed(&self) -> CategoryGraph {
        CategoryGraph {
            names: self.names.clone(),
            children: self.parents.clone(),
            parents: self.children.clone(),
            pages_of: self.pages_of.clone(),
            cats_of: self.cats_of.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorpusStats {
    pub pages: usize,
    pub categories: usize,
    pub links: usize,
    pub dropped_links: usize,
    pub mean_categories_per_page: f64,
}

/// Immutable collection: pages keyed by id plus the category graph.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pages: BTreeMap<PageId, Page>,
    graph: CategoryGraph,
    dropped_links: usize,
}

impl Corpus {
    pub fn load(pages_path: impl AsRef<Path>, categories_path: impl AsRef<Path>) -> Result<Corpus> {
        let pages_path = pages_path.as_ref();
        let categories_path = categories_path.as_ref();
        let pages_src =
            fs::read_to_string(pages_path).map_err(|e| Error::io(pages_path, e))?;
        let cats_src =
            fs::read_to_string(categories_path).map_err(|e| Error::io(categories_path, e))?;
        Corpus::from_tsv(
            &pages_src,
            &pages_path.display().to_string(),
            &cats_src,
            &categories_path.display().to_string(),
        )
    }

    /// Parses both files from memory. The names are used in error messages.
    pub fn from_tsv(
        pages_src: &str,
        pages_name: &str,
        categories_src: &str,
        categories_name: &str,
    ) -> Result<Corpus> {
        let mut graph = parse_categories(categories_src, categories_name)?;
        let raw = parse_pages(pages_src, pages_name, &graph)?;

        let mut pages = BTreeMap::new();
        let mut dropped_links = 0;
        let ids: BTreeSet<PageId> = raw.iter().map(|p| p.id).collect();
        for mut page in raw {
            let before = page.outlinks.len();
            page.outlinks.retain(|l| ids.contains(&l.target));
            dropped_links += before - page.outlinks.len();
            for &c in &page.categories {
                graph.attach(page.id, c)?;
            }
            pages.insert(page.id, page);
        }

        Ok(Corpus {
            pages,
            graph,
            dropped_links,
        })
    }

    pub fn len(&self) -> usize {
        self.pages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pages.is_empty()
    }

    pub fn page(&self, id: PageId) -> Option<&Page> {
        self.pages.get(&id)
    }

    pub fn contains(&self, id: PageId) -> bool {
        self.pages.contains_key(&id)
    }

    /// Pages in ascending id order.
    pub fn pages(&self) -> impl Iterator<Item = &Page> + '_ {
        self.pages.values()
    }

    pub fn graph(&self) -> &CategoryGraph {
        &self.graph
    }

    /// `cat(t)`: the categories attached to a page, without ancestors.
    pub fn categories_of(&self, t: PageId) -> Result<&CategorySet> {
        self.pages
            .get(&t)
            .map(|p| &p.categories)
            .ok_or(Error::UnknownPage(t))
    }

    pub fn stats(&self) -> CorpusStats {
        let links = self.pages.values().map(|p| p.outlinks.len()).sum();
        let attachments: usize = self.pages.values().map(|p| p.categories.len()).sum();
        let mean = if self.pages.is_empty() {
            0.0
        } else {
            attachments as f64 / self.pages.len() as f64
        };
        CorpusStats {
            pages: self.pages.len(),
            categories: self.graph.len(),
            links,
            dropped_links: self.dropped_links,
            mean_categories_per_page: mean,
        }
    }
}

fn lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty())
}

fn load_err(file: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Load {
        file: file.to_string(),
        line,
        message: message.into(),
    }
}

fn parse_id(field: &str, what: &str, file: &str, line: usize) -> Result<u32> {
    field
        .trim()
        .parse::<u32>()
        .map_err(|_| load_err(file, line, format!("invalid {what} id {field:?}")))
}

fn parse_categories(src: &str, file: &str) -> Result<CategoryGraph> {
    let mut graph = CategoryGraph::new();
    let mut edges = Vec::new();
    for (lineno, line) in lines(src) {
        let fields: Vec<&str> = line.split('\t').collect();
        match fields.as_slice() {
            ["C", id, name] => {
                let id = CategoryId(parse_id(id, "category", file, lineno)?);
                let name = name.trim();
                if name.is_empty() {
                    return Err(load_err(file, lineno, "empty category name"));
                }
                if graph.contains(id) {
                    return Err(Error::DuplicateId {
                        file: file.to_string(),
                        line: lineno,
                        kind: "category",
                        id: id.0,
                    });
                }
                graph.add_category(id, name)?;
            }
            ["E", parent, child] => {
                let parent = CategoryId(parse_id(parent, "category", file, lineno)?);
                let child = CategoryId(parse_id(child, "category", file, lineno)?);
                edges.push((lineno, parent, child));
            }
            _ => {
                return Err(load_err(
                    file,
                    lineno,
                    "expected `C<TAB>id<TAB>name` or `E<TAB>parent<TAB>child`",
                ))
            }
        }
    }
    for (lineno, parent, child) in edges {
        graph
            .add_edge(parent, child)
            .map_err(|e| load_err(file, lineno, e.to_string()))?;
    }
    Ok(graph)
}

fn parse_pages(src: &str, file: &str, graph: &CategoryGraph) -> Result<Vec<Page>> {
    let mut seen = BTreeSet::new();
    let mut pages = Vec::new();
    for (lineno, line) in lines(src) {
        let fields: Vec<&str> = line.splitn(4, '\t').collect();
        let [id, title, cats, body] = fields.as_slice() else {
            return Err(load_err(
                file,
                lineno,
                format!("expected 4 tab-separated fields, found {}", fields.len()),
            ));
        };
        let id = PageId(parse_id(id, "page", file, lineno)?);
        if !seen.insert(id) {
            return Err(Error::DuplicateId {
                file: file.to_string(),
                line: lineno,
                kind: "page",
                id: id.0,
            });
        }

        let mut categories = CategorySet::new();
        for c in cats.split(',').map(str::trim).filter(|c| !c.is_empty()) {
            let c = CategoryId(parse_id(c, "category", file, lineno)?);
            if !graph.contains(c) {
                return Err(load_err(file, lineno, format!("unknown category {c}")));
            }
            categories.insert(c);
        }

        let (body, outlinks) =
            parse_body(body).map_err(|msg| load_err(file, lineno, msg))?;
        pages.push(Page {
            id,
            title: title.trim().to_string(),
            body,
            outlinks,
            categories,
        });
    }
    Ok(pages)
}

/// Splits a body into plain text and its `[[target|anchor|xml_path]]` links.
///
/// The xml path may itself contain balanced brackets (`p[1]`).
fn parse_body(src: &str) -> std::result::Result<(String, Vec<Link>), String> {
    let mut text = String::with_capacity(src.len());
    let mut links = Vec::new();
    let mut rest = src;
    while let Some(start) = rest.find("[[") {
        text.push_str(&rest[..start]);
        let inner_start = start + 2;
        let end = find_link_end(&rest[inner_start..])
            .ok_or_else(|| format!("unterminated link starting at {:?}", &rest[start..]))?;
        let inner = &rest[inner_start..inner_start + end];
        let parts: Vec<&str> = inner.splitn(3, '|').collect();
        let [target, anchor, path] = parts.as_slice() else {
            return Err(format!("link {inner:?} must be target|anchor|xml_path"));
        };
        let target = target
            .trim()
            .parse::<u32>()
            .map_err(|_| format!("invalid link target {target:?}"))?;
        if path.trim().is_empty() {
            return Err(format!("link {inner:?} has an empty xml path"));
        }
        text.push_str(anchor);
        links.push(Link {
            target: PageId(target),
            anchor: anchor.to_string(),
            xml_path: path.trim().to_string(),
        });
        rest = &rest[inner_start + end + 2..];
    }
    text.push_str(rest);
    Ok((text, links))
}

fn find_link_end(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    let mut depth = 0usize;
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'[' => depth += 1,
            b']' if depth > 0 => depth -= 1,
            b']' => return (bytes.get(i + 1) == Some(&b']')).then_some(i),
            _ => {}
        }
        i += 1;
    }
    None
}
