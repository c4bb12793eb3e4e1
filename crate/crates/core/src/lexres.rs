//! Paraphrase and synonym resources.
//!
//! Both resources load into a [`ParaphraseStore`], a symmetric index from a
//! lowercased phrase to its paraphrases. Paraphrases that are themselves
//! connectives are filtered out at expansion time: swapping one connective
//! for another is not an alternative lexicalization.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::discourse::{ConnectiveEntry, ConnectiveInventory};
use crate::error::{Error, Result};
use crate::text::phrase_tokens;

pub const DEFAULT_SCORE_KEY: &str = "PPDB2.0Score";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Resource {
    #[serde(rename = "PPDB")]
    Ppdb,
    SynonymLexicon,
}

impl fmt::Display for Resource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Resource::Ppdb => "PPDB",
            Resource::SynonymLexicon => "SynonymLexicon",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParaphraseEntry {
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub score: f64,
    pub resource: Resource,
}

impl ParaphraseEntry {
    pub fn target_text(&self) -> String {
        self.target.join(" ")
    }
}

/// Immutable-after-load paraphrase index. Every pair is stored in both
/// directions; duplicate pairs keep their best score.
#[derive(Debug, Clone)]
pub struct ParaphraseStore {
    resource: Resource,
    index: HashMap<Vec<String>, BTreeMap<Vec<String>, f64>>,
    skipped: usize,
}

impl ParaphraseStore {
    pub fn new(resource: Resource) -> Self {
        ParaphraseStore {
            resource,
            index: HashMap::new(),
            skipped: 0,
        }
    }

    pub fn resource(&self) -> Resource {
        self.resource
    }

    /// Number of malformed input lines skipped while loading.
    pub fn skipped_lines(&self) -> usize {
        self.skipped
    }

    /// Number of distinct unordered pairs.
    pub fn pair_count(&self) -> usize {
        let directed: usize = self.index.values().map(BTreeMap::len).sum();
        directed / 2
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// Adds `source <-> target`. Identical or empty phrases are ignored.
    pub fn insert(&mut self, source: &str, target: &str, score: f64) {
        let (s, t) = (phrase_tokens(source), phrase_tokens(target));
        if s.is_empty() || t.is_empty() || s == t {
            return;
        }
        for (from, to) in [(s.clone(), t.clone()), (t, s)] {
            let best = self
                .index
                .entry(from)
                .or_default()
                .entry(to)
                .or_insert(score);
            *best = best.max(score);
        }
    }

    /// All paraphrases of `phrase`, best score first, ties by target text.
    pub fn lookup(&self, phrase: &[String]) -> Vec<ParaphraseEntry> {
        let mut out: Vec<ParaphraseEntry> = self
            .index
            .get(phrase)
            .into_iter()
            .flatten()
            .map(|(target, &score)| ParaphraseEntry {
                source: phrase.to_vec(),
                target: target.clone(),
                score,
                resource: self.resource,
            })
            .collect();
        out.sort_by(|a, b| {
            b.score
                .total_cmp(&a.score)
                .then_with(|| a.target_text().cmp(&b.target_text()))
        });
        out
    }
}

#[derive(Debug, Clone)]
pub struct PpdbOptions {
    pub min_score: f64,
    pub score_key: String,
}

impl Default for PpdbOptions {
    fn default() -> Self {
        PpdbOptions {
            min_score: 0.0,
            score_key: DEFAULT_SCORE_KEY.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn load_ppdb(path: impl AsRef<Path>, min_score: f64) -> Result<ParaphraseStore> {
    let options = PpdbOptions {
        min_score,
        ..PpdbOptions::default()
    };
    load_ppdb_with(path, &options)
}

pub fn load_ppdb_with(path: impl AsRef<Path>, options: &PpdbOptions) -> Result<ParaphraseStore> {
    let store = parse_ppdb(&read(path.as_ref())?, options);
    if store.skipped > 0 {
        log::warn!(
            "{}: skipped {} malformed PPDB lines",
            path.as_ref().display(),
            store.skipped
        );
    }
    Ok(store)
}

/// The score of a PPDB feature column: the value of `key=...` if present,
/// else the first bare number.
fn feature_score(features: &str, key: &str) -> Option<f64> {
    let keyed = features.split_whitespace().find_map(|item| {
        let (k, v) = item.split_once('=')?;
        (k == key).then(|| v.parse::<f64>().ok()).flatten()
    });
    keyed.or_else(|| {
        features
            .split_whitespace()
            .filter(|item| !item.contains('='))
            .find_map(|item| item.parse::<f64>().ok())
    })
}

/// Parses PPDB flat-file lines
/// (`LHS ||| phrase ||| paraphrase ||| features ||| ...`).
pub fn parse_ppdb(content: &str, options: &PpdbOptions) -> ParaphraseStore {
    let mut store = ParaphraseStore::new(Resource::Ppdb);
    for line in content.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split("|||").map(str::trim).collect();
        let parsed = match fields.as_slice() {
            [_, source, target, features, ..] if !source.is_empty() && !target.is_empty() => {
                feature_score(features, &options.score_key).map(|s| (*source, *target, s))
            }
            _ => None,
        };
        match parsed {
            Some((source, target, score)) if score >= options.min_score => {
                store.insert(source, target, score)
            }
            Some(_) => {}
            None => store.skipped += 1,
        }
    }
    store
}

pub fn load_synonyms(path: impl AsRef<Path>) -> Result<ParaphraseStore> {
    let store = parse_synonyms(&read(path.as_ref())?);
    if store.skipped > 0 {
        log::warn!(
            "{}: skipped {} malformed synonym lines",
            path.as_ref().display(),
            store.skipped
        );
    }
    Ok(store)
}

/// Parses `word<TAB>synonym` lines; every pair scores 1.0.
pub fn parse_synonyms(content: &str) -> ParaphraseStore {
    let mut store = ParaphraseStore::new(Resource::SynonymLexicon);
    for line in content.lines() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        match line
            .split('\t')
            .map(str::trim)
            .collect::<Vec<_>>()
            .as_slice()
        {
            [word, synonym] if !word.is_empty() && !synonym.is_empty() => {
                store.insert(word, synonym, 1.0)
            }
            _ => store.skipped += 1,
        }
    }
    store
}

/// Candidate alternative lexicalizations of a connective: paraphrases of its
/// first part that are not themselves connectives.
pub fn expand(
    connective: &ConnectiveEntry,
    store: &ParaphraseStore,
    inventory: &ConnectiveInventory,
) -> Vec<ParaphraseEntry> {
    store
        .lookup(connective.first_part())
        .into_iter()
        .filter(|p| !inventory.is_connective_form(&p.target))
        .collect()
}

/// Mean number of expansions per inventory connective.
pub fn mean_expansions(store: &ParaphraseStore, inventory: &ConnectiveInventory) -> f64 {
    if inventory.is_empty() {
        return 0.0;
    }
    let total: usize = inventory
        .entries()
        .iter()
        .map(|c| expand(c, store, inventory).len())
        .sum();
    total as f64 / inventory.len() as f64
}
