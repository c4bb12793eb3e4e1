//! AltLex discovery over aligned sentence pairs.
//!
//! Each pair is categorized by how its explicit relations change between the
//! complex and the simple side. Pairs where exactly one side carries a single
//! explicit connective are mined: paraphrases of that connective found on the
//! other side are replaced by the connective, and a paraphrase is kept when
//! the detector then finds the same connective with the same sense.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::corpus::SentencePair;
use crate::discourse::{
    detect_explicit, ConnectiveEntry, ConnectiveInventory, ExplicitAnnotation, Sense,
};
use crate::error::{Error, Result};
use crate::lexres::{expand, ParaphraseEntry, ParaphraseStore, Resource};
use crate::text::{match_phrase, tokenize, Sentence, TokenSpan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseKind {
    NonExpNonExp,
    ExpExp,
    NonExpExp,
    ExpNonExp,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OtherKind {
    SameRelDiffConn,
    DiffRelDiffConn,
    /// Several relations on one side, or anything else that fits no other
    /// case.
    Multiple,
}

/// How the explicit relations of an aligned pair change with simplification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChangeCase {
    pub kind: CaseKind,
    pub other_kind: Option<OtherKind>,
}

impl ChangeCase {
    pub const NON_EXP_NON_EXP: ChangeCase = ChangeCase::plain(CaseKind::NonExpNonExp);
    pub const EXP_EXP: ChangeCase = ChangeCase::plain(CaseKind::ExpExp);
    pub const NON_EXP_EXP: ChangeCase = ChangeCase::plain(CaseKind::NonExpExp);
    pub const EXP_NON_EXP: ChangeCase = ChangeCase::plain(CaseKind::ExpNonExp);

    /// Every case in reporting order.
    pub const ALL: [ChangeCase; 7] = [
        ChangeCase::NON_EXP_NON_EXP,
        ChangeCase::EXP_EXP,
        ChangeCase::NON_EXP_EXP,
        ChangeCase::EXP_NON_EXP,
        ChangeCase::other(OtherKind::SameRelDiffConn),
        ChangeCase::other(OtherKind::DiffRelDiffConn),
        ChangeCase::other(OtherKind::Multiple),
    ];

    const fn plain(kind: CaseKind) -> Self {
        ChangeCase {
            kind,
            other_kind: None,
        }
    }

    pub const fn other(kind: OtherKind) -> Self {
        ChangeCase {
            kind: CaseKind::Other,
            other_kind: Some(kind),
        }
    }

    pub fn label(&self) -> &'static str {
        match (self.kind, self.other_kind) {
            (CaseKind::NonExpNonExp, _) => "NonExp-NonExp",
            (CaseKind::ExpExp, _) => "Exp-Exp",
            (CaseKind::NonExpExp, _) => "NonExp-Exp",
            (CaseKind::ExpNonExp, _) => "Exp-NonExp",
            (CaseKind::Other, Some(OtherKind::SameRelDiffConn)) => "Other:SameRel-DiffConn",
            (CaseKind::Other, Some(OtherKind::DiffRelDiffConn)) => "Other:DiffRel-DiffConn",
            (CaseKind::Other, _) => "Other:Multiple",
        }
    }

    pub fn is_mined(&self) -> bool {
        matches!(self.kind, CaseKind::NonExpExp | CaseKind::ExpNonExp)
    }
}

impl fmt::Display for ChangeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Classifies a pair from the annotations found on each side.
pub fn classify(complex: &[ExplicitAnnotation], simple: &[ExplicitAnnotation]) -> ChangeCase {
    match (complex, simple) {
        ([], []) => ChangeCase::NON_EXP_NON_EXP,
        ([], [_]) => ChangeCase::NON_EXP_EXP,
        ([_], []) => ChangeCase::EXP_NON_EXP,
        ([c], [s]) => match (c.connective_id == s.connective_id, c.sense == s.sense) {
            (true, true) => ChangeCase::EXP_EXP,
            (false, true) => ChangeCase::other(OtherKind::SameRelDiffConn),
            (false, false) => ChangeCase::other(OtherKind::DiffRelDiffConn),
            (true, false) => ChangeCase::other(OtherKind::Multiple),
        },
        _ => ChangeCase::other(OtherKind::Multiple),
    }
}

pub fn categorize(pair: &SentencePair, inventory: &ConnectiveInventory) -> ChangeCase {
    classify(
        &detect_explicit(&pair.complex, inventory),
        &detect_explicit(&pair.simple, inventory),
    )
}

/// Which side carries the connective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// Connective in the complex sentence, candidate in the simple one.
    ExpNonExp,
    /// Connective in the simple sentence, candidate in the complex one.
    NonExpExp,
}

/// Required agreement between the original and the re-detected sense.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum SenseMatch {
    /// Same top-level class only.
    Level1,
    #[default]
    Level2,
}

impl SenseMatch {
    pub fn accepts(self, expected: Sense, found: Sense) -> bool {
        match self {
            SenseMatch::Level1 => expected.class() == found.class(),
            SenseMatch::Level2 => expected == found,
        }
    }
}

/// A paraphrase occurrence in the non-explicit sentence of a pair.
#[derive(Debug, Clone)]
pub struct AltLexCandidate<'a> {
    pub pair: &'a SentencePair,
    pub direction: Direction,
    pub connective: &'a ConnectiveEntry,
    pub sense: Sense,
    pub paraphrase: ParaphraseEntry,
    pub span: TokenSpan,
}

impl AltLexCandidate<'_> {
    pub fn nonexplicit(&self) -> &Sentence {
        match self.direction {
            Direction::ExpNonExp => &self.pair.simple,
            Direction::NonExpExp => &self.pair.complex,
        }
    }

    pub fn text(&self) -> String {
        self.paraphrase.target_text()
    }
}

fn capitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Replaces the tokens of `span` with `replacement` and re-tokenizes.
/// A capitalized sentence-initial span passes its capital on.
pub fn substitute(
    sentence: &Sentence,
    span: TokenSpan,
    replacement: &[String],
) -> Result<Sentence> {
    if !sentence.is_valid_span(span) {
        return Err(Error::InvalidSpan {
            start: span.start,
            end: span.end,
            len: sentence.len(),
        });
    }
    let mut words = replacement.to_vec();
    if span.start == 0 && sentence.tokens[0].is_capitalized() {
        if let Some(first) = words.first_mut() {
            *first = capitalize(first);
        }
    }
    let start = sentence.tokens[span.start].char_start;
    let end = sentence.tokens[span.end - 1].char_end;
    let raw = format!(
        "{}{}{}",
        &sentence.raw[..start],
        words.join(" "),
        &sentence.raw[end..]
    );
    Ok(tokenize(&raw))
}

/// Substitutes the connective into the candidate's span and checks that the
/// detector recovers the connective with a matching sense.
pub fn verify_candidate(
    candidate: &AltLexCandidate<'_>,
    inventory: &ConnectiveInventory,
    sense_match: SenseMatch,
) -> bool {
    let Ok(replaced) = substitute(
        candidate.nonexplicit(),
        candidate.span,
        candidate.connective.first_part(),
    ) else {
        return false;
    };
    detect_explicit(&replaced, inventory).iter().any(|a| {
        a.connective_id == candidate.connective.id && sense_match.accepts(candidate.sense, a.sense)
    })
}

/// One verified AltLex type with its occurrence statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AltLexRecord {
    pub text: String,
    pub sense: Sense,
    pub resources: BTreeSet<Resource>,
    pub token_count: u64,
    pub example_pair_ids: Vec<String>,
}

/// Aggregated mining result. `merge` is associative, and commutative up to
/// the order of example pair ids.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AltLexInventory {
    pub records: BTreeMap<(String, Sense), AltLexRecord>,
    pub per_case_counts: BTreeMap<ChangeCase, u64>,
    pub per_sense_alignment_counts: BTreeMap<Sense, u64>,
}

impl AltLexInventory {
    pub fn total_pairs(&self) -> u64 {
        self.per_case_counts.values().sum()
    }

    pub fn case_count(&self, case: ChangeCase) -> u64 {
        self.per_case_counts.get(&case).copied().unwrap_or(0)
    }

    pub fn alignment_count(&self, sense: Sense) -> u64 {
        self.per_sense_alignment_counts
            .get(&sense)
            .copied()
            .unwrap_or(0)
    }

    pub fn add_record(&mut self, record: AltLexRecord) {
        let key = (record.text.clone(), record.sense);
        match self.records.get_mut(&key) {
            Some(existing) => {
                existing.token_count += record.token_count;
                existing.resources.extend(record.resources);
                existing.example_pair_ids.extend(record.example_pair_ids);
            }
            None => {
                self.records.insert(key, record);
            }
        }
    }

    fn add_candidate(&mut self, candidate: &AltLexCandidate<'_>) {
        self.add_record(AltLexRecord {
            text: candidate.text(),
            sense: candidate.sense,
            resources: BTreeSet::from([candidate.paraphrase.resource]),
            token_count: 1,
            example_pair_ids: vec![candidate.pair.source_id.clone()],
        });
    }

    pub fn merge(mut self, other: AltLexInventory) -> AltLexInventory {
        for (case, n) in other.per_case_counts {
            *self.per_case_counts.entry(case).or_default() += n;
        }
        for (sense, n) in other.per_sense_alignment_counts {
            *self.per_sense_alignment_counts.entry(sense).or_default() += n;
        }
        for record in other.records.into_values() {
            self.add_record(record);
        }
        self
    }

    /// Records in report order: by sense, then descending count, then text.
    pub fn sorted_records(&self) -> Vec<&AltLexRecord> {
        let mut records: Vec<_> = self.records.values().collect();
        records.sort_by(|a, b| {
            a.sense
                .cmp(&b.sense)
                .then(b.token_count.cmp(&a.token_count))
                .then_with(|| a.text.cmp(&b.text))
        });
        records
    }
}

/// Outcome of mining one pair.
#[derive(Debug, Clone)]
pub struct PairOutcome<'a> {
    pub case: ChangeCase,
    /// Sense of the explicit side, for mined cases.
    pub sense: Option<Sense>,
    pub accepted: Vec<AltLexCandidate<'a>>,
}

/// Mining configuration over shared read-only resources.
#[derive(Debug, Clone, Copy)]
pub struct Miner<'r> {
    pub inventory: &'r ConnectiveInventory,
    pub stores: &'r [ParaphraseStore],
    pub sense_match: SenseMatch,
}

const SHARD_SIZE: usize = 256;

impl<'r> Miner<'r> {
    pub fn new(inventory: &'r ConnectiveInventory, stores: &'r [ParaphraseStore]) -> Self {
        Miner {
            inventory,
            stores,
            sense_match: SenseMatch::default(),
        }
    }

    pub fn with_sense_match(mut self, sense_match: SenseMatch) -> Self {
        self.sense_match = sense_match;
        self
    }

    /// Categorizes `pair` and, for the two mined cases, returns the verified
    /// candidates in span order.
    pub fn analyze<'a>(&self, pair: &'a SentencePair) -> PairOutcome<'a>
    where
        'r: 'a,
    {
        let complex = detect_explicit(&pair.complex, self.inventory);
        let simple = detect_explicit(&pair.simple, self.inventory);
        let case = classify(&complex, &simple);
        let (direction, annotation) = match case.kind {
            CaseKind::NonExpExp => (Direction::NonExpExp, &simple[0]),
            CaseKind::ExpNonExp => (Direction::ExpNonExp, &complex[0]),
            _ => {
                return PairOutcome {
                    case,
                    sense: None,
                    accepted: Vec::new(),
                }
            }
        };
        let connective = self
            .inventory
            .get(&annotation.connective_id)
            .expect("detected connectives come from the inventory");
        let target = match direction {
            Direction::ExpNonExp => &pair.simple,
            Direction::NonExpExp => &pair.complex,
        };

        let mut verified = Vec::new();
        for store in self.stores {
            for paraphrase in expand(connective, store, self.inventory) {
                for span in match_phrase(target, &paraphrase.target) {
                    let candidate = AltLexCandidate {
                        pair,
                        direction,
                        connective,
                        sense: annotation.sense,
                        paraphrase: paraphrase.clone(),
                        span,
                    };
                    if verify_candidate(&candidate, self.inventory, self.sense_match) {
                        verified.push(candidate);
                    }
                }
            }
        }

        // Overlaps keep the higher-scored paraphrase, then the leftmost span.
        verified.sort_by(|a, b| {
            b.paraphrase
                .score
                .total_cmp(&a.paraphrase.score)
                .then(a.span.start.cmp(&b.span.start))
                .then(a.paraphrase.resource.cmp(&b.paraphrase.resource))
                .then(a.span.end.cmp(&b.span.end))
        });
        let mut accepted: Vec<AltLexCandidate<'a>> = Vec::new();
        for c in verified {
            if accepted.iter().all(|a| !a.span.overlaps(&c.span)) {
                accepted.push(c);
            }
        }
        accepted.sort_by_key(|c| (c.span.start, c.span.end));
        PairOutcome {
            case,
            sense: Some(annotation.sense),
            accepted,
        }
    }

    pub fn mine_pair<'a>(&self, pair: &'a SentencePair) -> Vec<AltLexCandidate<'a>>
    where
        'r: 'a,
    {
        self.analyze(pair).accepted
    }

    fn mine_shard(&self, pairs: &[SentencePair]) -> AltLexInventory {
        let mut inv = AltLexInventory::default();
        for pair in pairs {
            let outcome = self.analyze(pair);
            *inv.per_case_counts.entry(outcome.case).or_default() += 1;
            if let Some(sense) = outcome.sense {
                *inv.per_sense_alignment_counts.entry(sense).or_default() += 1;
            }
            for c in &outcome.accepted {
                inv.add_candidate(c);
            }
        }
        inv
    }

    pub fn mine_corpus_sequential(&self, pairs: &[SentencePair]) -> AltLexInventory {
        pairs
            .chunks(SHARD_SIZE)
            .map(|shard| self.mine_shard(shard))
            .fold(AltLexInventory::default(), AltLexInventory::merge)
    }

    /// Mines shards on the current rayon pool and merges them in pair order.
    #[cfg(feature = "parallel")]
    pub fn mine_corpus_parallel(&self, pairs: &[SentencePair]) -> AltLexInventory {
        use rayon::prelude::*;
        pairs
            .par_chunks(SHARD_SIZE)
            .map(|shard| self.mine_shard(shard))
            .reduce(AltLexInventory::default, AltLexInventory::merge)
    }

    pub fn mine_corpus(&self, pairs: &[SentencePair]) -> AltLexInventory {
        #[cfg(feature = "parallel")]
        {
            self.mine_corpus_parallel(pairs)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.mine_corpus_sequential(pairs)
        }
    }
}
