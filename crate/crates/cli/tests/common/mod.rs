#![allow(dead_code)]

use std::path::PathBuf;

use altlex_core::SentencePair;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

const SUBJECTS: &[&str] = &[
    "company", "farmer", "council", "team", "family", "museum", "school", "city",
];
const VERBS: &[&str] = &[
    "sold", "built", "paid", "kept", "held", "made", "found", "left",
];
const OBJECTS: &[&str] = &[
    "house", "farm", "bridge", "road", "boat", "tower", "wall", "barn",
];

/// Deterministic synthetic corpus cycling through every change case.
pub fn synthetic_pairs(n: usize) -> Vec<SentencePair> {
    (0..n)
        .map(|i| {
            let subj = SUBJECTS[i % SUBJECTS.len()];
            let verb = VERBS[(i / 8) % VERBS.len()];
            let obj = OBJECTS[(i / 64) % OBJECTS.len()];
            let (complex, simple) = match i % 6 {
                0 => (
                    format!("The {subj} {verb} the {obj} despite no longer having its own money."),
                    format!("The {subj} {verb} the {obj} even though they do not have their own money."),
                ),
                1 => (
                    format!("Before they started the {obj} business, the {subj} covered fields on foot."),
                    format!("They said the {subj} used to check the {obj} fields on foot."),
                ),
                2 => (
                    format!("The {subj} {verb} the {obj} in {}.", 1900 + i % 100),
                    format!("The {subj} {verb} the {obj}."),
                ),
                3 => (
                    format!("The {subj} {verb} the {obj} because the old one was broken."),
                    format!("The {subj} {verb} the {obj} because the old one was broken."),
                ),
                4 => (
                    format!("The {subj} {verb} the {obj} because the roof was leaking."),
                    format!("The roof was leaking, so the {subj} {verb} the {obj}."),
                ),
                _ => (
                    format!("The {subj} {verb} the {obj} because it rained, but the owners were unhappy."),
                    format!("The {subj} {verb} the {obj} since about 1900."),
                ),
            };
            SentencePair::new(&complex, &simple, (i + 1).to_string())
        })
        .collect()
}

pub fn synthetic_tsv(n: usize) -> String {
    synthetic_pairs(n)
        .iter()
        .map(|p| format!("{}\t{}\n", p.complex.raw, p.simple.raw))
        .collect()
}
