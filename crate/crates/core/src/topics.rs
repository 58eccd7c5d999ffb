//! INEX-style XML entity-ranking topics and TREC qrels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::Path;

use crate::corpus::{CategoryId, PageId};
use crate::error::{Error, Result};

pub const TOPIC_ROOT: &str = "inex_topic";

/// The two entity-ranking tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Task {
    /// Task 1: entities of a given target category.
    EntityRanking,
    /// Task 2: complete a list from a few example entities.
    ListCompletion,
}

impl Task {
    pub fn number(self) -> u8 {
        match self {
            Task::EntityRanking => 1,
            Task::ListCompletion => 2,
        }
    }

    pub fn from_number(n: u8) -> Result<Task> {
        match n {
            1 => Ok(Task::EntityRanking),
            2 => Ok(Task::ListCompletion),
            _ => Err(Error::InvalidArgument(format!("task must be 1 or 2, got {n}"))),
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.number().fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topic {
    pub id: String,
    pub title: String,
    pub description: String,
    pub narrative: String,
    pub examples: Vec<(PageId, String)>,
    pub target_categories: Vec<(CategoryId, String)>,
}

impl Topic {
    pub fn supports(&self, task: Task) -> bool {
        self.validate(task).is_ok()
    }

    pub fn validate(&self, task: Task) -> Result<()> {
        let reason = match task {
            Task::EntityRanking if self.target_categories.is_empty() => "no target categories",
            Task::ListCompletion if self.examples.is_empty() => "no example entities",
            _ if self.title.trim().is_empty() => "empty title",
            _ => return Ok(()),
        };
        Err(Error::TopicInvalid {
            topic: self.id.clone(),
            task: task.number(),
            reason: reason.to_string(),
        })
    }

    pub fn example_ids(&self) -> BTreeSet<PageId> {
        self.examples.iter().map(|(id, _)| *id).collect()
    }

    pub fn target_category_ids(&self) -> BTreeSet<CategoryId> {
        self.target_categories.iter().map(|(id, _)| *id).collect()
    }

    pub fn target_category_names(&self) -> String {
        self.target_categories
            .iter()
            .map(|(_, n)| n.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Serializes back to the XML topic layout.
    pub fn to_xml(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("<{TOPIC_ROOT} id=\"{}\">\n", escape(&self.id)));
        out.push_str(&format!("<title>{}</title>\n", escape(&self.title)));
        out.push_str(&format!("<description>{}</description>\n", escape(&self.description)));
        out.push_str(&format!("<narrative>{}</narrative>\n", escape(&self.narrative)));
        if !self.examples.is_empty() {
            out.push_str("<entities>\n");
            for (id, name) in &self.examples {
                out.push_str(&format!("   <entity ID=\"{id}\">{}</entity>\n", escape(name)));
            }
            out.push_str("</entities>\n");
        }
        if !self.target_categories.is_empty() {
            out.push_str("<categories>\n");
            for (id, name) in &self.target_categories {
                out.push_str(&format!("   <category ID=\"{id}\">{}</category>\n", escape(name)));
            }
            out.push_str("</categories>\n");
        }
        out.push_str(&format!("</{TOPIC_ROOT}>\n"));
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn normalize_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn perr(msg: impl Into<String>) -> Error {
    Error::TopicParse(msg.into())
}

/// Parses one topic. The id comes from the root `id` attribute, falling back
/// to `fallback_id` (usually the file stem).
pub fn parse_topic(xml: &str, fallback_id: Option<&str>) -> Result<Topic> {
    let doc = roxmltree::Document::parse(xml).map_err(|e| perr(e.to_string()))?;
    let root = doc.root_element();
    if root.tag_name().name() != TOPIC_ROOT {
        return Err(perr(format!(
            "root element is <{}>, expected <{TOPIC_ROOT}>",
            root.tag_name().name()
        )));
    }

    let id = root
        .attribute("id")
        .map(str::to_string)
        .or_else(|| fallback_id.map(str::to_string))
        .ok_or_else(|| perr("topic has no id attribute and no fallback id"))?;

    let child_text = |name: &str| -> Option<String> {
        root.children()
            .find(|n| n.has_tag_name(name))
            .map(|n| normalize_ws(n.text().unwrap_or_default()))
    };

    let title = child_text("title").ok_or_else(|| perr(format!("topic {id}: missing <title>")))?;
    if title.is_empty() {
        return Err(perr(format!("topic {id}: empty <title>")));
    }
    let description = child_text("description").unwrap_or_default();
    let narrative = child_text("narrative").unwrap_or_default();

    let entries = |group: &str, item: &str| -> Result<Vec<(u32, String)>> {
        let Some(node) = root.children().find(|n| n.has_tag_name(group)) else {
            return Ok(Vec::new());
        };
        node.children()
            .filter(|n| n.has_tag_name(item))
            .map(|n| {
                let raw = n
                    .attribute("ID")
                    .ok_or_else(|| perr(format!("topic {id}: <{item}> without ID")))?;
                let num = raw
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| perr(format!("topic {id}: malformed ID {raw:?} on <{item}>")))?;
                Ok((num, normalize_ws(n.text().unwrap_or_default())))
            })
            .collect()
    };

    let examples = entries("entities", "entity")?
        .into_iter()
        .map(|(i, n)| (PageId(i), n))
        .collect();
    let target_categories = entries("categories", "category")?
        .into_iter()
        .map(|(i, n)| (CategoryId(i), n))
        .collect();

    Ok(Topic {
        id,
        title,
        description,
        narrative,
        examples,
        target_categories,
    })
}

/// Reads one topic file; the file stem is the fallback id.
pub fn load_topic(path: impl AsRef<Path>) -> Result<Topic> {
    let path = path.as_ref();
    let xml = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let stem = path.file_stem().and_then(|s| s.to_str());
    parse_topic(&xml, stem)
        .map_err(|e| perr(format!("{}: {e}", path.display())))
}

/// Loads every `*.xml` file of a directory, sorted by topic id.
pub fn load_topics_dir(dir: impl AsRef<Path>) -> Result<Vec<Topic>> {
    let dir = dir.as_ref();
    let mut topics = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        if path.extension().is_some_and(|e| e == "xml") {
            topics.push(load_topic(&path)?);
        }
    }
    topics.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(w) = topics.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(perr(format!("duplicate topic id {}", w[0].id)));
    }
    Ok(topics)
}

/// Relevant pages per topic. Topics seen only with `rel = 0` map to an
/// empty set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Qrels {
    map: BTreeMap<String, BTreeSet<PageId>>,
}

impl Qrels {
    pub fn parse(src: &str, file: &str) -> Result<Qrels> {
        let mut map: BTreeMap<String, BTreeSet<PageId>> = BTreeMap::new();
        for (i, line) in src.lines().enumerate() {
            let lineno = i + 1;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                file: file.to_string(),
                line: lineno,
                message,
            };
            let [topic, _iter, page, rel] = fields.as_slice() else {
                return Err(err(format!(
                    "expected `topic 0 page_id rel`, found {} fields",
                    fields.len()
                )));
            };
            let page = page
                .parse::<u32>()
                .map_err(|_| err(format!("invalid page id {page:?}")))?;
            let entry = map.entry(topic.to_string()).or_default();
            match *rel {
                "1" => {
                    entry.insert(PageId(page));
                }
                "0" => {}
                other => return Err(err(format!("relevance must be 0 or 1, found {other:?}"))),
            }
        }
        Ok(Qrels { map })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Qrels> {
        let path = path.as_ref();
        let src = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Qrels::parse(&src, &path.display().to_string())
    }

    pub fn relevant(&self, topic: &str) -> Option<&BTreeSet<PageId>> {
        self.map.get(topic)
    }

    pub fn topics(&self) -> impl Iterator<Item = &str> + '_ {
        self.map.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BTreeSet<PageId>)> + '_ {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn insert(&mut self, topic: impl Into<String>, relevant: BTreeSet<PageId>) {
        self.map.insert(topic.into(), relevant);
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Copy with each topic's example entities removed from its relevant
    /// set, for list-completion evaluation.
    pub fn without_examples(&self, topics: &[Topic]) -> Qrels {
        let mut out = self.clone();
        for t in topics {
            if let Some(rel) = out.map.get_mut(&t.id) {
                for (e, _) in &t.examples {
                    rel.remove(e);
                }
            }
        }
        out
    }
}
