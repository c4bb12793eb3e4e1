//! Tokenization and token-span bookkeeping.
//!
//! The tokenizer is rule based: whitespace separates chunks, and the
//! punctuation marks `, . ; : ! ? " ' ( )` (plus their typographic quote
//! variants) are peeled off the edges of each chunk as single-character
//! tokens. Anything left in the middle of a chunk stays attached, so
//! hyphenated words and clitics ("it's", "don't") are single tokens.
//!
//! Offsets are byte offsets into the raw string, so `&raw[start..end]`
//! always reproduces a token's surface.

use serde::{Deserialize, Serialize};

const SPLIT_PUNCT: &[char] = &[
    ',', '.', ';', ':', '!', '?', '"', '\'', '(', ')', '\u{2018}', '\u{2019}', '\u{201C}',
    '\u{201D}',
];

/// Returns true for the edge punctuation marks the tokenizer splits off.
pub fn is_split_punct(c: char) -> bool {
    SPLIT_PUNCT.contains(&c)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub lowercased: String,
    pub char_start: usize,
    pub char_end: usize,
}

impl Token {
    fn new(raw: &str, start: usize, end: usize) -> Self {
        let surface = raw[start..end].to_string();
        Token {
            lowercased: surface.to_lowercase(),
            surface,
            char_start: start,
            char_end: end,
        }
    }

    /// True if the token is a single punctuation mark.
    pub fn is_punct(&self) -> bool {
        let mut chars = self.surface.chars();
        matches!((chars.next(), chars.next()), (Some(c), None) if c.is_ascii_punctuation() || is_split_punct(c))
    }

    /// True if the first character is uppercase.
    pub fn is_capitalized(&self) -> bool {
        self.surface.chars().next().is_some_and(char::is_uppercase)
    }
}

/// A half-open range of token indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TokenSpan {
    pub start: usize,
    pub end: usize,
}

impl TokenSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start < end, "empty token span {start}..{end}");
        TokenSpan { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    pub fn overlaps(&self, other: &TokenSpan) -> bool {
        self.start < other.end && other.start < self.end
    }

    pub fn contains(&self, index: usize) -> bool {
        self.start <= index && index < self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sentence {
    pub raw: String,
    pub tokens: Vec<Token>,
}

impl Sentence {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Whether `span` addresses tokens inside this sentence.
    pub fn is_valid_span(&self, span: TokenSpan) -> bool {
        span.start < span.end && span.end <= self.tokens.len()
    }

    /// The raw substring covered by a token span.
    pub fn span_text(&self, span: TokenSpan) -> &str {
        let start = self.tokens[span.start].char_start;
        let end = self.tokens[span.end - 1].char_end;
        &self.raw[start..end]
    }

    /// Lowercased token strings of a span.
    pub fn lowercased(&self, span: TokenSpan) -> Vec<String> {
        self.tokens[span.start..span.end]
            .iter()
            .map(|t| t.lowercased.clone())
            .collect()
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(|t| t.surface.as_str())
    }
}

impl From<&str> for Sentence {
    fn from(raw: &str) -> Self {
        tokenize(raw)
    }
}

pub fn tokenize(raw: &str) -> Sentence {
    let mut tokens = Vec::new();
    let mut chunk_start = None;
    for (i, c) in raw.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = chunk_start.take() {
                split_chunk(raw, s, i, &mut tokens);
            }
        } else if chunk_start.is_none() {
            chunk_start = Some(i);
        }
    }
    if let Some(s) = chunk_start {
        split_chunk(raw, s, raw.len(), &mut tokens);
    }
    Sentence {
        raw: raw.to_string(),
        tokens,
    }
}

fn split_chunk(raw: &str, start: usize, end: usize, out: &mut Vec<Token>) {
    let chunk = &raw[start..end];
    let mut lead = Vec::new();
    let mut body_start = start;
    for (i, c) in chunk.char_indices() {
        if !is_split_punct(c) {
            break;
        }
        let at = start + i;
        lead.push((at, at + c.len_utf8()));
        body_start = at + c.len_utf8();
    }
    let mut trail = Vec::new();
    let mut body_end = end;
    for (i, c) in raw[body_start..end].char_indices().rev() {
        if !is_split_punct(c) {
            break;
        }
        let at = body_start + i;
        trail.push((at, at + c.len_utf8()));
        body_end = at;
    }
    out.extend(lead.into_iter().map(|(s, e)| Token::new(raw, s, e)));
    if body_start < body_end {
        out.push(Token::new(raw, body_start, body_end));
    }
    out.extend(trail.into_iter().rev().map(|(s, e)| Token::new(raw, s, e)));
}

/// Tokenizes a phrase and returns its lowercased token strings.
pub fn phrase_tokens(phrase: &str) -> Vec<String> {
    tokenize(phrase)
        .tokens
        .into_iter()
        .map(|t| t.lowercased)
        .collect()
}

/// All spans whose lowercased tokens equal `phrase`, left to right.
/// Overlapping occurrences are all reported.
pub fn match_phrase(sentence: &Sentence, phrase: &[String]) -> Vec<TokenSpan> {
    let n = phrase.len();
    if n == 0 || n > sentence.tokens.len() {
        return Vec::new();
    }
    sentence
        .tokens
        .windows(n)
        .enumerate()
        .filter(|(_, window)| window.iter().zip(phrase).all(|(t, p)| t.lowercased == *p))
        .map(|(i, _)| TokenSpan::new(i, i + n))
        .collect()
}
