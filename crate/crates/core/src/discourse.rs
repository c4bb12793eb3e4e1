//! Rule-based explicit discourse connective detection.
//!
//! Connectives are matched longest-first and case-insensitively against an
//! inventory. A lexical match only counts as a discourse usage when its
//! arguments look like clauses: the right argument must contain a finite
//! verb, and, unless the connective opens its sentence, so must the text
//! before it. Verbs are recognised from a closed list of auxiliaries and
//! frequent verbs, or by an `-ed`/`-s`/`-ing` suffix on a token that does not
//! start its argument and does not follow a determiner or preposition.
//! Coordinating conjunctions directly followed by a verb (verb-phrase
//! coordination, "produced and published") are rejected as well.
//!
//! Each accepted occurrence is labelled with the connective's most probable
//! sense; no contextual disambiguation is attempted.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{phrase_tokens, Sentence, Token, TokenSpan};

/// Shipped connective inventory.
pub const DEFAULT_INVENTORY: &str = include_str!("../data/pdtb_connectives.tsv");

/// Top level of the sense hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SenseClass {
    Temporal,
    Contingency,
    Comparison,
    Expansion,
}

/// Second-level relation sense. Variant order is the reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sense {
    Asynchronous,
    Synchrony,
    Cause,
    Condition,
    Contrast,
    Concession,
    Conjunction,
    Instantiation,
    Restatement,
    Alternative,
    Exception,
    List,
}

impl Sense {
    pub const ALL: [Sense; 12] = [
        Sense::Asynchronous,
        Sense::Synchrony,
        Sense::Cause,
        Sense::Condition,
        Sense::Contrast,
        Sense::Concession,
        Sense::Conjunction,
        Sense::Instantiation,
        Sense::Restatement,
        Sense::Alternative,
        Sense::Exception,
        Sense::List,
    ];

    pub fn class(self) -> SenseClass {
        use Sense::*;
        match self {
            Asynchronous | Synchrony => SenseClass::Temporal,
            Cause | Condition => SenseClass::Contingency,
            Contrast | Concession => SenseClass::Comparison,
            Conjunction | Instantiation | Restatement | Alternative | Exception | List => {
                SenseClass::Expansion
            }
        }
    }

    pub fn name(self) -> &'static str {
        use Sense::*;
        match self {
            Asynchronous => "Asynchronous",
            Synchrony => "Synchrony",
            Cause => "Cause",
            Condition => "Condition",
            Contrast => "Contrast",
            Concession => "Concession",
            Conjunction => "Conjunction",
            Instantiation => "Instantiation",
            Restatement => "Restatement",
            Alternative => "Alternative",
            Exception => "Exception",
            List => "List",
        }
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sense {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        Sense::ALL
            .into_iter()
            .find(|sense| sense.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown sense label {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectiveEntry {
    pub id: String,
    /// One part, or two for discontinuous connectives ("either" .. "or").
    pub parts: Vec<Vec<String>>,
    /// Sense priors, highest weight first.
    pub senses: Vec<(Sense, f64)>,
}

impl ConnectiveEntry {
    pub fn new(first: &str, second: Option<&str>, senses: &[(Sense, f64)]) -> Self {
        let mut parts = vec![phrase_tokens(first)];
        parts.extend(second.map(phrase_tokens));
        let id = parts
            .iter()
            .map(|p| p.join(" "))
            .collect::<Vec<_>>()
            .join("..");
        let mut senses = senses.to_vec();
        senses.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        ConnectiveEntry { id, parts, senses }
    }

    pub fn first_part(&self) -> &[String] {
        &self.parts[0]
    }

    pub fn top_sense(&self) -> Sense {
        self.senses[0].0
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if self.parts.is_empty() || self.parts.len() > 2 || self.parts.iter().any(Vec::is_empty) {
            return Err(format!(
                "connective {:?} has empty or too many parts",
                self.id
            ));
        }
        if self.senses.is_empty() {
            return Err(format!("connective {:?} has no senses", self.id));
        }
        if self.senses.iter().any(|(_, w)| w.is_nan() || *w <= 0.0) {
            return Err(format!(
                "connective {:?} has a non-positive weight",
                self.id
            ));
        }
        let sum: f64 = self.senses.iter().map(|(_, w)| w).sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(format!("weights of {:?} sum to {sum}, not 1", self.id));
        }
        Ok(())
    }
}

/// A validated, indexed set of connectives. Read-only after construction.
#[derive(Debug, Clone)]
pub struct ConnectiveInventory {
    entries: Vec<ConnectiveEntry>,
    /// Entry indices per first token, longest first part first.
    by_first_token: HashMap<String, Vec<usize>>,
    by_id: HashMap<String, usize>,
    forms: HashSet<Vec<String>>,
}

impl ConnectiveInventory {
    pub fn new(entries: Vec<ConnectiveEntry>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &entries {
            e.validate().map_err(Error::Inventory)?;
            if !seen.insert(e.parts.clone()) {
                return Err(Error::Inventory(format!("duplicate connective {:?}", e.id)));
            }
        }
        let mut by_first_token: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            by_first_token
                .entry(e.parts[0][0].clone())
                .or_default()
                .push(i);
        }
        for indices in by_first_token.values_mut() {
            indices.sort_by_key(|&i| {
                let e = &entries[i];
                (
                    std::cmp::Reverse(e.parts[0].len()),
                    std::cmp::Reverse(e.parts.len()),
                )
            });
        }
        let by_id = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), i))
            .collect();
        let forms = entries
            .iter()
            .flat_map(|e| e.parts.iter().cloned())
            .collect();
        Ok(ConnectiveInventory {
            entries,
            by_first_token,
            by_id,
            forms,
        })
    }

    /// The shipped 100-connective inventory.
    pub fn default_pdtb() -> Self {
        parse_inventory(DEFAULT_INVENTORY, Path::new("<default inventory>"))
            .expect("shipped inventory is valid")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let content = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        parse_inventory(&content, path)
    }

    pub fn entries(&self) -> &[ConnectiveEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&ConnectiveEntry> {
        self.by_id.get(id).map(|&i| &self.entries[i])
    }

    /// True if `tokens` equals any part of any connective.
    pub fn is_connective_form(&self, tokens: &[String]) -> bool {
        self.forms.contains(tokens)
    }
}

/// Parses the inventory TSV:
/// `connective<TAB>second_part_or_empty<TAB>sense:weight[,sense:weight...]`.
pub fn parse_inventory(content: &str, path: &Path) -> Result<ConnectiveInventory> {
    let mut entries = Vec::new();
    for (i, line) in content.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [first, second, senses] = fields.as_slice() else {
            return Err(Error::parse(
                path,
                line_no,
                "expected 3 tab-separated fields",
            ));
        };
        if first.trim().is_empty() {
            return Err(Error::parse(path, line_no, "empty connective form"));
        }
        let senses = senses
            .split(',')
            .map(|item| {
                let (label, weight) = item
                    .split_once(':')
                    .ok_or_else(|| format!("expected sense:weight, found {item:?}"))?;
                let weight = weight
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| format!("bad weight {weight:?}"))?;
                Ok((label.parse::<Sense>()?, weight))
            })
            .collect::<std::result::Result<Vec<_>, String>>()
            .map_err(|m| Error::parse(path, line_no, m))?;
        let second = Some(second.trim()).filter(|s| !s.is_empty());
        let entry = ConnectiveEntry::new(first.trim(), second, &senses);
        entry
            .validate()
            .map_err(|m| Error::parse(path, line_no, m))?;
        entries.push(entry);
    }
    ConnectiveInventory::new(entries)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExplicitAnnotation {
    pub connective_id: String,
    pub span: TokenSpan,
    /// Second part of a discontinuous connective.
    pub second_span: Option<TokenSpan>,
    pub sense: Sense,
    pub arg_before: Option<TokenSpan>,
    pub arg_after: TokenSpan,
}

const CLAUSE_VERBS: &[&str] = &[
    "am",
    "is",
    "are",
    "was",
    "were",
    "has",
    "have",
    "had",
    "do",
    "does",
    "did",
    "will",
    "would",
    "can",
    "could",
    "shall",
    "should",
    "may",
    "might",
    "must",
    "it's",
    "he's",
    "she's",
    "that's",
    "there's",
    "what's",
    "who's",
    "here's",
    "let's",
    "i'm",
    "you're",
    "we're",
    "they're",
    "i've",
    "you've",
    "we've",
    "they've",
    "i'll",
    "you'll",
    "he'll",
    "she'll",
    "it'll",
    "we'll",
    "they'll",
    "i'd",
    "you'd",
    "he'd",
    "she'd",
    "we'd",
    "they'd",
    "isn't",
    "aren't",
    "wasn't",
    "weren't",
    "don't",
    "doesn't",
    "didn't",
    "won't",
    "wouldn't",
    "can't",
    "couldn't",
    "shouldn't",
    "hasn't",
    "haven't",
    "hadn't",
    "said",
    "says",
    "say",
    "go",
    "goes",
    "went",
    "get",
    "gets",
    "got",
    "make",
    "makes",
    "made",
    "take",
    "takes",
    "took",
    "come",
    "came",
    "see",
    "saw",
    "know",
    "knew",
    "think",
    "thought",
    "give",
    "gave",
    "find",
    "found",
    "become",
    "became",
    "seem",
    "seems",
    "began",
    "won",
    "ran",
    "sat",
    "told",
    "felt",
    "kept",
    "left",
    "held",
    "brought",
    "built",
    "wrote",
    "grew",
    "paid",
    "sold",
    "led",
    "met",
    "sent",
    "spent",
    "stood",
    "lost",
    "rose",
    "fell",
    "drove",
    "ate",
    "drew",
    "flew",
    "broke",
    "chose",
    "spoke",
];

/// Words after which a suffixed token is read as a noun or gerund.
const NOMINAL_CONTEXT: &[&str] = &[
    "the", "a", "an", "his", "her", "its", "their", "our", "my", "your", "this", "these", "those",
    "some", "any", "many", "several", "each", "every", "no", "of", "in", "on", "at", "by", "with",
    "from", "to", "for", "into", "onto", "about", "over", "under", "between", "through", "during",
    "without", "within", "against", "among", "per", "than", "like", "near",
];

const NOT_VERBS: &[&str] = &[
    "this",
    "thus",
    "his",
    "hers",
    "its",
    "ours",
    "yours",
    "theirs",
    "always",
    "perhaps",
    "towards",
    "besides",
    "across",
    "whereas",
    "sometimes",
    "news",
    "series",
    "species",
    "various",
    "afterwards",
    "upwards",
    "downwards",
    "backwards",
    "unless",
    "nevertheless",
    "regardless",
    "indeed",
    "hundred",
    "naked",
    "sacred",
    "wicked",
    "thing",
    "things",
    "something",
    "nothing",
    "anything",
    "everything",
    "during",
    "morning",
    "evening",
    "king",
    "ring",
    "string",
];

const COORDINATORS: &[&str] = &["and", "or", "but", "nor", "yet", "so", "plus"];

fn is_boundary(token: &Token) -> bool {
    matches!(token.surface.as_str(), "." | "!" | "?" | ";")
}

fn has_verb_suffix(word: &str) -> bool {
    if word.chars().count() < 4
        || !word.chars().any(char::is_alphabetic)
        || !word
            .chars()
            .all(|c| c.is_alphabetic() || c == '-' || c == '\'')
        || NOT_VERBS.contains(&word)
    {
        return false;
    }
    word.ends_with("ed")
        || word.ends_with("ing")
        || (word.ends_with('s')
            && !word.ends_with("ss")
            && !word.ends_with("us")
            && !word.ends_with("is")
            && !word.ends_with("'s"))
}

/// Whether the token at `i` looks like a finite verb within an argument
/// starting at `scope_start`.
fn is_verb_like(tokens: &[Token], i: usize, scope_start: usize) -> bool {
    let word = tokens[i].lowercased.as_str();
    if CLAUSE_VERBS.contains(&word) {
        return true;
    }
    if i <= scope_start {
        return false;
    }
    let prev = &tokens[i - 1];
    has_verb_suffix(word)
        && !prev.is_punct()
        && !NOMINAL_CONTEXT.contains(&prev.lowercased.as_str())
}

fn has_clause(tokens: &[Token], span: TokenSpan) -> bool {
    (span.start..span.end).any(|i| is_verb_like(tokens, i, span.start))
}

/// Shrinks `[start, end)` past leading and trailing punctuation.
fn trim_punct(tokens: &[Token], mut start: usize, mut end: usize) -> Option<TokenSpan> {
    while start < end && tokens[start].is_punct() {
        start += 1;
    }
    while end > start && tokens[end - 1].is_punct() {
        end -= 1;
    }
    (start < end).then(|| TokenSpan::new(start, end))
}

/// Arguments of a connective at `span` if the occurrence reads as discourse
/// usage, `None` otherwise.
fn discourse_arguments(
    tokens: &[Token],
    span: TokenSpan,
    first_word: &str,
) -> Option<(Option<TokenSpan>, TokenSpan)> {
    let sentence_start = tokens[..span.start]
        .iter()
        .rposition(is_boundary)
        .map_or(0, |b| b + 1);
    let initial = tokens[sentence_start..span.start]
        .iter()
        .all(Token::is_punct);
    let sentence_end = tokens[span.end..]
        .iter()
        .position(is_boundary)
        .map_or(tokens.len(), |p| span.end + p);

    let arg_after = if initial {
        // The subordinate clause runs to the first comma, when one follows
        // some content.
        let mut start = span.end;
        while start < sentence_end && tokens[start].is_punct() {
            start += 1;
        }
        let comma = tokens[start..sentence_end]
            .iter()
            .position(|t| t.surface == ",")
            .map_or(sentence_end, |p| start + p);
        trim_punct(tokens, start, comma)?
    } else {
        trim_punct(tokens, span.end, sentence_end)?
    };
    if !has_clause(tokens, arg_after) {
        return None;
    }
    if COORDINATORS.contains(&first_word) {
        let next = span.end;
        if next < tokens.len()
            && (CLAUSE_VERBS.contains(&tokens[next].lowercased.as_str())
                || has_verb_suffix(&tokens[next].lowercased))
        {
            return None;
        }
    }
    if initial {
        return Some((None, arg_after));
    }
    // The first argument may lie in an earlier sentence of the same input.
    if !has_clause(
        tokens,
        TokenSpan {
            start: 0,
            end: span.start,
        },
    ) {
        return None;
    }
    Some((trim_punct(tokens, sentence_start, span.start), arg_after))
}

fn matches_at(tokens: &[Token], consumed: &[bool], at: usize, part: &[String]) -> bool {
    at + part.len() <= tokens.len()
        && (at..at + part.len()).all(|i| !consumed[i])
        && tokens[at..at + part.len()]
            .iter()
            .zip(part)
            .all(|(t, p)| t.lowercased == *p)
}

/// Explicit discourse connectives in `sentence`, left to right.
pub fn detect_explicit(
    sentence: &Sentence,
    inventory: &ConnectiveInventory,
) -> Vec<ExplicitAnnotation> {
    let tokens = &sentence.tokens;
    let mut consumed = vec![false; tokens.len()];
    let mut annotations = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let Some(candidates) = inventory.by_first_token.get(&tokens[i].lowercased) else {
            i += 1;
            continue;
        };
        let found = candidates.iter().find_map(|&idx| {
            let entry = &inventory.entries[idx];
            let first = &entry.parts[0];
            if !matches_at(tokens, &consumed, i, first) {
                return None;
            }
            let span = TokenSpan::new(i, i + first.len());
            let second_span = match entry.parts.get(1) {
                None => None,
                Some(second) => {
                    let end = tokens[span.end..]
                        .iter()
                        .position(is_boundary)
                        .map_or(tokens.len(), |p| span.end + p);
                    let at = (span.end..end).find(|&j| matches_at(tokens, &consumed, j, second))?;
                    Some(TokenSpan::new(at, at + second.len()))
                }
            };
            Some((entry, span, second_span))
        });
        let Some((entry, span, second_span)) = found else {
            i += 1;
            continue;
        };
        for s in std::iter::once(span).chain(second_span) {
            consumed[s.start..s.end].iter_mut().for_each(|c| *c = true);
        }
        if let Some((arg_before, arg_after)) = discourse_arguments(tokens, span, &entry.parts[0][0])
        {
            annotations.push(ExplicitAnnotation {
                connective_id: entry.id.clone(),
                span,
                second_span,
                sense: entry.top_sense(),
                arg_before,
                arg_after,
            });
        }
        i = span.end;
    }
    annotations
}

/// True when no explicit connective is detected.
pub fn is_nonexplicit(sentence: &Sentence, inventory: &ConnectiveInventory) -> bool {
    detect_explicit(sentence, inventory).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::tokenize;
    use proptest::prelude::*;

    fn detect(raw: &str) -> Vec<ExplicitAnnotation> {
        detect_explicit(&tokenize(raw), &ConnectiveInventory::default_pdtb())
    }

    fn ids(raw: &str) -> Vec<(String, Sense)> {
        detect(raw)
            .into_iter()
            .map(|a| (a.connective_id, a.sense))
            .collect()
    }

    #[test]
    fn default_inventory_has_100_entries() {
        let inv = ConnectiveInventory::default_pdtb();
        assert_eq!(inv.len(), 100);
        assert_eq!(inv.get("but").unwrap().top_sense(), Sense::Contrast);
        assert_eq!(inv.get("because").unwrap().top_sense(), Sense::Cause);
        assert_eq!(inv.get("though").unwrap().top_sense(), Sense::Contrast);
        assert_eq!(inv.get("when").unwrap().top_sense(), Sense::Synchrony);
        assert_eq!(inv.get("before").unwrap().top_sense(), Sense::Asynchronous);
        assert!(inv.get("either..or").is_some());
        assert!(inv.is_connective_form(&["since".to_string()]));
        for e in inv.entries() {
            assert!(e.senses.windows(2).all(|w| w[0].1 >= w[1].1), "{}", e.id);
        }
    }

    #[test]
    fn every_sense_sits_under_its_class() {
        assert_eq!(Sense::Cause.class(), SenseClass::Contingency);
        assert_eq!(Sense::Synchrony.class(), SenseClass::Temporal);
        assert_eq!(Sense::Concession.class(), SenseClass::Comparison);
        assert_eq!(Sense::List.class(), SenseClass::Expansion);
        for s in Sense::ALL {
            assert_eq!(s.name().parse::<Sense>().unwrap(), s);
        }
    }

    #[test]
    fn rejects_bad_weights() {
        let err =
            parse_inventory("but\t\tContrast:0.5,Concession:0.4\n", Path::new("inv")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn rejects_unknown_sense_and_duplicates() {
        assert!(parse_inventory("but\t\tSarcasm:1.0\n", Path::new("inv")).is_err());
        let dup = "but\t\tContrast:1.0\n# comment\nBut\t\tContrast:1.0\n";
        assert!(matches!(
            parse_inventory(dup, Path::new("inv")),
            Err(Error::Inventory(_))
        ));
        assert!(parse_inventory("but\tContrast:1.0\n", Path::new("inv")).is_err());
    }

    #[test]
    fn contrastive_but() {
        let s = "He created and published his works himself, but his larger works were mostly commissioned work to be sold.";
        let anns = detect(s);
        assert_eq!(anns.len(), 1);
        assert_eq!(anns[0].connective_id, "but");
        assert_eq!(anns[0].sense, Sense::Contrast);
        assert!(anns[0].arg_before.is_some());
        assert!(!anns[0].arg_after.overlaps(&anns[0].span));
    }

    #[test]
    fn prepositional_since_is_not_discourse_usage() {
        let s = "It has been tied to the history and life of African-Americans since about the early 1800s.";
        assert!(detect(s).is_empty());
    }

    #[test]
    fn verb_phrase_coordination_is_rejected() {
        let s = "These works he produced and published himself, whilst his much larger woodcuts were mostly commissioned work.";
        assert!(is_nonexplicit(
            &tokenize(s),
            &ConnectiveInventory::default_pdtb()
        ));
    }

    #[test]
    fn sentence_initial_when() {
        let anns = detect("When the show was broadcast, Rupert Boneham won the million dollars.");
        assert_eq!(anns.len(), 1);
        assert_eq!(anns[0].connective_id, "when");
        assert_eq!(anns[0].sense, Sense::Synchrony);
        assert_eq!(anns[0].span, TokenSpan::new(0, 1));
        assert_eq!(anns[0].arg_before, None);
        assert_eq!(anns[0].arg_after, TokenSpan::new(1, 5));
    }

    #[test]
    fn initial_connective_after_previous_sentence() {
        let got = ids("Now they have drones in 15 states, including California and Texas. Before they started the business, the two covered fields on foot or in vehicles.");
        assert_eq!(got, [("before".to_string(), Sense::Asynchronous)]);
    }

    #[test]
    fn empty_and_punctuation_only() {
        assert!(detect("").is_empty());
        assert!(is_nonexplicit(
            &tokenize(", . ; !"),
            &ConnectiveInventory::default_pdtb()
        ));
    }

    #[test]
    fn longest_match_wins() {
        let inv = ConnectiveInventory::new(vec![
            ConnectiveEntry::new("though", None, &[(Sense::Contrast, 1.0)]),
            ConnectiveEntry::new("even though", None, &[(Sense::Concession, 1.0)]),
        ])
        .unwrap();
        let s = tokenize("The company does well even though they do not have a universe.");
        let anns = detect_explicit(&s, &inv);
        assert_eq!(anns.len(), 1);
        assert_eq!(anns[0].connective_id, "even though");
        assert_eq!(anns[0].span, TokenSpan::new(4, 6));
    }

    #[test]
    fn discontinuous_connective() {
        let got = ids("Either the company reported losses or the workers were paid.");
        assert_eq!(got, [("either..or".to_string(), Sense::Alternative)]);
        let anns = detect("If the company reported losses then the workers were paid.");
        assert_eq!(anns.len(), 1);
        assert_eq!(anns[0].connective_id, "if..then");
        assert_eq!(anns[0].second_span, Some(TokenSpan::new(5, 6)));
    }

    #[test]
    fn several_connectives_in_one_sentence() {
        let got =
            ids("The workers were paid because the firm made money, but the owners were unhappy.");
        let conns: Vec<_> = got.iter().map(|(c, _)| c.as_str()).collect();
        assert_eq!(conns, ["because", "but"]);
    }

    proptest! {
        #[test]
        fn annotations_are_disjoint_and_deterministic(words in prop::collection::vec(
            prop::sample::select(vec![
                "the", "workers", "were", "paid", "and", "but", "since", "because", "even",
                "though", "as", "long", "if", "then", "either", "or", ",", ".", "reported",
                "losses", "company", "when", "it", "rained",
            ]),
            0..25,
        )) {
            let raw = words.join(" ");
            let inv = ConnectiveInventory::default_pdtb();
            let s = tokenize(&raw);
            let anns = detect_explicit(&s, &inv);
            prop_assert_eq!(&anns, &detect_explicit(&s, &inv));
            for (i, a) in anns.iter().enumerate() {
                prop_assert!(s.is_valid_span(a.span));
                prop_assert!(s.is_valid_span(a.arg_after));
                prop_assert!(!a.arg_after.overlaps(&a.span));
                if let Some(before) = a.arg_before {
                    prop_assert!(!before.overlaps(&a.span));
                }
                for b in &anns[i + 1..] {
                    prop_assert!(!a.span.overlaps(&b.span));
                }
            }
            prop_assert_eq!(is_nonexplicit(&s, &inv), anns.is_empty());
        }
    }
}
