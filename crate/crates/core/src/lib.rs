//! Mining alternative lexicalizations (AltLexes) of discourse relations from
//! complex/simple parallel sentence pairs.
//!
//! The pipeline detects explicit connectives on both sides of each aligned
//! pair, looks for paraphrases of the connective on the side without one,
//! substitutes the connective back in, and keeps paraphrases for which the
//! same relation is detected again.
//!
//! With the default `parallel` feature, corpus alignment and mining fan out
//! over a rayon thread pool; without it everything runs sequentially with
//! identical results.

pub mod corpus;
pub mod discourse;
pub mod error;
pub mod lexres;
pub mod mining;
pub mod text;

pub use corpus::{AgreementTable, Article, SentencePair};
pub use discourse::{ConnectiveEntry, ConnectiveInventory, ExplicitAnnotation, Sense, SenseClass};
pub use error::{Error, Result};
pub use lexres::{ParaphraseEntry, ParaphraseStore, Resource};
pub use mining::{
    AltLexCandidate, AltLexInventory, AltLexRecord, CaseKind, ChangeCase, Direction, Miner,
    OtherKind, SenseMatch,
};
pub use text::{tokenize, Sentence, Token, TokenSpan};
