//! Parallel corpora: loading sentence-aligned pairs, aligning article-aligned
//! corpora at sentence level with TF-IDF cosine similarity, and Cohen's kappa
//! for judging alignment quality.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{tokenize, Sentence};

/// Default similarity threshold for sentence alignment.
pub const DEFAULT_THRESHOLD: f64 = 0.5;

/// Articles are rewritten at most this many times.
pub const MAX_LEVEL: u8 = 5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentencePair {
    pub complex: Sentence,
    pub simple: Sentence,
    pub source_id: String,
    pub similarity: f64,
}

impl SentencePair {
    /// A pre-aligned pair (similarity 1.0).
    pub fn new(complex: &str, simple: &str, source_id: impl Into<String>) -> Self {
        SentencePair {
            complex: tokenize(complex),
            simple: tokenize(simple),
            source_id: source_id.into(),
            similarity: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Article {
    pub id: String,
    /// 0 is the original, most complex version.
    pub level: u8,
    pub sentences: Vec<Sentence>,
}

impl Article {
    pub fn new<S: AsRef<str>>(id: impl Into<String>, level: u8, sentences: &[S]) -> Self {
        Article {
            id: id.into(),
            level,
            sentences: sentences.iter().map(|s| tokenize(s.as_ref())).collect(),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

/// Loads a `complex<TAB>simple` file. A third column, when present, is read
/// as the pair's similarity (this is what `align` writes).
pub fn load_aligned_tsv(path: impl AsRef<Path>) -> Result<Vec<SentencePair>> {
    let path = path.as_ref();
    parse_aligned_tsv(&read(path)?, path)
}

pub fn parse_aligned_tsv(content: &str, path: &Path) -> Result<Vec<SentencePair>> {
    let mut pairs = Vec::new();
    for (i, line) in content.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let similarity = match fields.len() {
            2 => 1.0,
            3 => fields[2]
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|s| (0.0..=1.0).contains(s))
                .ok_or_else(|| {
                    Error::parse(path, line_no, format!("bad similarity {:?}", fields[2]))
                })?,
            n => {
                return Err(Error::parse(
                    path,
                    line_no,
                    format!("expected 2 tab-separated fields, found {n}"),
                ))
            }
        };
        pairs.push(SentencePair {
            complex: tokenize(fields[0]),
            simple: tokenize(fields[1]),
            source_id: line_no.to_string(),
            similarity,
        });
    }
    Ok(pairs)
}

/// Reads a directory of `<articleid>.<level>.txt` files, one sentence per
/// line. Other files are ignored. Articles come back sorted by (id, level).
pub fn load_article_dir(dir: impl AsRef<Path>) -> Result<Vec<Article>> {
    let dir = dir.as_ref();
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut articles = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        let Some(name) = path.file_name().and_then(|n| n.to_str()) else {
            continue;
        };
        let Some(stem) = name.strip_suffix(".txt") else {
            continue;
        };
        let (id, level) = stem
            .rsplit_once('.')
            .and_then(|(id, level)| Some((id, level.parse::<u8>().ok()?)))
            .filter(|(id, level)| !id.is_empty() && *level <= MAX_LEVEL)
            .ok_or_else(|| Error::ArticleName(path.clone()))?;
        let sentences = read(&path)?
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(tokenize)
            .collect();
        articles.push(Article {
            id: id.to_string(),
            level,
            sentences,
        });
    }
    articles.sort_by(|a, b| (&a.id, a.level).cmp(&(&b.id, b.level)));
    Ok(articles)
}

fn terms(sentence: &Sentence) -> impl Iterator<Item = &str> {
    sentence
        .tokens
        .iter()
        .filter(|t| !t.is_punct())
        .map(|t| t.lowercased.as_str())
}

/// Smoothed inverse document frequency, one document per sentence:
/// `ln((N + 1) / (df + 1)) + 1`.
pub fn idf_table<'a>(documents: impl IntoIterator<Item = &'a Sentence>) -> HashMap<String, f64> {
    let mut df: HashMap<String, usize> = HashMap::new();
    let mut n = 0usize;
    for doc in documents {
        n += 1;
        let types: HashSet<&str> = terms(doc).collect();
        for t in types {
            *df.entry(t.to_string()).or_default() += 1;
        }
    }
    df.into_iter()
        .map(|(t, d)| {
            let idf = ((n as f64 + 1.0) / (d as f64 + 1.0)).ln() + 1.0;
            (t, idf)
        })
        .collect()
}

fn tfidf_vector<'a>(s: &'a Sentence, idf: &HashMap<String, f64>) -> BTreeMap<&'a str, f64> {
    let mut tf: BTreeMap<&str, f64> = BTreeMap::new();
    for t in terms(s) {
        *tf.entry(t).or_default() += 1.0;
    }
    for (term, weight) in tf.iter_mut() {
        *weight *= idf.get(*term).copied().unwrap_or(0.0);
    }
    tf
}

/// Cosine similarity of the TF-IDF vectors of two sentences over their
/// lowercased non-punctuation token types. Terms missing from `idf` weigh 0.
pub fn tfidf_cosine(a: &Sentence, b: &Sentence, idf: &HashMap<String, f64>) -> f64 {
    let va = tfidf_vector(a, idf);
    let vb = tfidf_vector(b, idf);
    let norm = |v: &BTreeMap<&str, f64>| v.values().map(|w| w * w).sum::<f64>().sqrt();
    let (na, nb) = (norm(&va), norm(&vb));
    if na == 0.0 || nb == 0.0 {
        return 0.0;
    }
    // Summed in term order so that f(a, b) == f(b, a) exactly.
    let dot: f64 = va
        .iter()
        .filter_map(|(t, w)| vb.get(t).map(|x| w * x))
        .sum();
    (dot / (na * nb)).clamp(0.0, 1.0)
}

/// Pairs every simple sentence with its most similar complex sentence
/// (ties go to the earliest complex sentence) and drops pairs whose
/// similarity falls below `threshold`.
pub fn align_articles(complex: &Article, simple: &Article, threshold: f64) -> Vec<SentencePair> {
    if complex.id != simple.id {
        log::warn!(
            "aligning articles with different ids: {} vs {}",
            complex.id,
            simple.id
        );
    }
    if complex.sentences.is_empty() {
        return Vec::new();
    }
    let idf = idf_table(complex.sentences.iter().chain(&simple.sentences));
    let mut pairs = Vec::new();
    for (si, s) in simple.sentences.iter().enumerate() {
        let mut best = (0, f64::NEG_INFINITY);
        for (ci, c) in complex.sentences.iter().enumerate() {
            let sim = tfidf_cosine(c, s, &idf);
            if sim > best.1 {
                best = (ci, sim);
            }
        }
        let (ci, sim) = best;
        if sim >= threshold {
            pairs.push(SentencePair {
                complex: complex.sentences[ci].clone(),
                simple: s.clone(),
                source_id: format!("{}:{}:{}:{}", complex.id, simple.level, si + 1, ci + 1),
                similarity: sim,
            });
        }
    }
    pairs
}

/// Aligns every simplified level of each article against its level-0
/// version. Articles without a level 0 are skipped.
pub fn align_corpus(articles: &[Article], threshold: f64) -> Vec<SentencePair> {
    let mut by_id: BTreeMap<&str, Vec<&Article>> = BTreeMap::new();
    for a in articles {
        by_id.entry(a.id.as_str()).or_default().push(a);
    }
    let jobs: Vec<(&Article, &Article)> = by_id
        .into_values()
        .flat_map(|mut group| {
            group.sort_by_key(|a| a.level);
            let base = group.iter().copied().find(|a| a.level == 0);
            if base.is_none() {
                log::warn!("article {} has no level-0 version; skipped", group[0].id);
            }
            group
                .into_iter()
                .filter(|a| a.level > 0)
                .filter_map(move |a| base.map(|b| (b, a)))
                .collect::<Vec<_>>()
        })
        .collect();

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        jobs.par_iter()
            .flat_map_iter(|(c, s)| align_articles(c, s, threshold))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.iter()
            .flat_map(|(c, s)| align_articles(c, s, threshold))
            .collect()
    }
}

/// 2x2 contingency table of two annotators' yes/no judgements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementTable {
    pub both_yes: u64,
    pub both_no: u64,
    pub a_yes_b_no: u64,
    pub a_no_b_yes: u64,
}

impl AgreementTable {
    pub fn total(&self) -> u64 {
        self.both_yes + self.both_no + self.a_yes_b_no + self.a_no_b_yes
    }

    pub fn record(&mut self, a: bool, b: bool) {
        match (a, b) {
            (true, true) => self.both_yes += 1,
            (false, false) => self.both_no += 1,
            (true, false) => self.a_yes_b_no += 1,
            (false, true) => self.a_no_b_yes += 1,
        }
    }
}

/// Cohen's kappa, `(p_o - p_e) / (1 - p_e)`.
pub fn cohen_kappa(table: &AgreementTable) -> Result<f64> {
    let n = table.total();
    if n == 0 {
        return Err(Error::Kappa("empty agreement table"));
    }
    let n = n as f64;
    let p_o = (table.both_yes + table.both_no) as f64 / n;
    let a_yes = (table.both_yes + table.a_yes_b_no) as f64 / n;
    let b_yes = (table.both_yes + table.a_no_b_yes) as f64 / n;
    let p_e = a_yes * b_yes + (1.0 - a_yes) * (1.0 - b_yes);
    if (1.0 - p_e).abs() < f64::EPSILON {
        return if table.a_yes_b_no + table.a_no_b_yes == 0 {
            Ok(1.0)
        } else {
            Err(Error::Kappa(
                "chance agreement is 1 but observed agreement is not",
            ))
        };
    }
    Ok((p_o - p_e) / (1.0 - p_e))
}

/// Reads `pair_id<TAB>a<TAB>b` rows with 0/1 judgements.
pub fn load_agreement_tsv(path: impl AsRef<Path>) -> Result<AgreementTable> {
    let path = path.as_ref();
    parse_agreement_tsv(&read(path)?, path)
}

pub fn parse_agreement_tsv(content: &str, path: &Path) -> Result<AgreementTable> {
    let judgement = |s: &str| match s.trim() {
        "0" => Some(false),
        "1" => Some(true),
        _ => None,
    };
    let mut table = AgreementTable::default();
    for (i, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let parsed = match fields.as_slice() {
            [_, a, b] => judgement(a).zip(judgement(b)),
            _ => None,
        };
        let (a, b) =
            parsed.ok_or_else(|| Error::parse(path, i + 1, "expected pair_id<TAB>0|1<TAB>0|1"))?;
        table.record(a, b);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn idf(entries: &[(&str, f64)]) -> HashMap<String, f64> {
        entries.iter().map(|(t, w)| (t.to_string(), *w)).collect()
    }

    #[test]
    fn loads_pairs_with_line_ids() {
        let content = "Complex one.\tSimple one.\n\nComplex two.\tSimple two.\t0.75\n";
        let pairs = parse_aligned_tsv(content, Path::new("x.tsv")).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].source_id, "1");
        assert_eq!(pairs[0].similarity, 1.0);
        assert_eq!(pairs[1].source_id, "3");
        assert_eq!(pairs[1].similarity, 0.75);
    }

    #[test]
    fn malformed_line_names_line_number() {
        let content = "a\tb\na\tb\tc\td\n";
        let err = parse_aligned_tsv(content, Path::new("x.tsv")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_aligned_tsv("only one field\n", Path::new("x.tsv")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_aligned_tsv("a\tb\t1.5\n", Path::new("x.tsv")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = load_aligned_tsv("/nonexistent/pairs.tsv").unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }

    #[test]
    fn cosine_identical_and_disjoint() {
        let a = tokenize("the cat sat");
        let ones = idf(&[
            ("the", 1.0),
            ("cat", 1.0),
            ("sat", 1.0),
            ("dog", 1.0),
            ("ran", 1.0),
        ]);
        assert!((tfidf_cosine(&a, &a, &ones) - 1.0).abs() < 1e-12);
        let b = tokenize("dog ran");
        assert_eq!(tfidf_cosine(&a, &b, &ones), 0.0);
        assert_eq!(tfidf_cosine(&a, &tokenize(""), &ones), 0.0);
    }

    #[test]
    fn cosine_weighted_matches_hand_computation() {
        // dot = 0.1*0.1 + 1*1 = 1.01; |a| = |b| = sqrt(0.01 + 1 + 4) = sqrt(5.01)
        let expected = 1.01 / 5.01;
        let weights = idf(&[("the", 0.1), ("cat", 1.0), ("sat", 2.0), ("ran", 2.0)]);
        let got = tfidf_cosine(&tokenize("the cat sat"), &tokenize("the cat ran"), &weights);
        assert!((got - expected).abs() < 1e-12, "{got} vs {expected}");
    }

    #[test]
    fn idf_uses_smoothed_formula() {
        let docs = [tokenize("a b"), tokenize("a c")];
        let table = idf_table(&docs);
        assert!((table["a"] - ((3.0f64 / 3.0).ln() + 1.0)).abs() < 1e-12);
        assert!((table["b"] - ((3.0f64 / 2.0).ln() + 1.0)).abs() < 1e-12);
    }

    #[test]
    fn identical_articles_align_to_identity() {
        let sents = [
            "The cat sat on the mat.",
            "Dogs bark loudly at night.",
            "Rain fell all day.",
        ];
        let c = Article::new("a1", 0, &sents);
        let s = Article::new("a1", 1, &sents);
        let pairs = align_articles(&c, &s, 0.5);
        assert_eq!(pairs.len(), 3);
        for (i, p) in pairs.iter().enumerate() {
            assert_eq!(p.complex, c.sentences[i]);
            assert!((p.similarity - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn unrelated_simple_sentence_is_dropped() {
        let c = Article::new("a1", 0, &["The committee approved the budget."]);
        let s = Article::new("a1", 1, &["Volcanoes erupt lava."]);
        assert!(align_articles(&c, &s, 0.5).is_empty());
        assert!(align_articles(&Article::new("a1", 0, &[] as &[&str]), &s, 0.0).is_empty());
    }

    #[test]
    fn align_corpus_pairs_levels_against_base() {
        let sents = ["The cat sat on the mat.", "Dogs bark loudly at night."];
        let articles = vec![
            Article::new("x", 0, &sents),
            Article::new("x", 1, &sents),
            Article::new("x", 2, &sents[..1]),
            Article::new("orphan", 1, &sents),
        ];
        let pairs = align_corpus(&articles, 0.5);
        let ids: Vec<_> = pairs.iter().map(|p| p.source_id.as_str()).collect();
        assert_eq!(ids, ["x:1:1:1", "x:1:2:2", "x:2:1:1"]);
    }

    #[test]
    fn loads_article_dir() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(
            dir.path().join("art.1.0.txt"),
            "First line.\n\nSecond line.\n",
        )
        .unwrap();
        fs::write(dir.path().join("art.1.1.txt"), "First.\n").unwrap();
        fs::write(dir.path().join("README"), "ignored").unwrap();
        let articles = load_article_dir(dir.path()).unwrap();
        assert_eq!(articles.len(), 2);
        assert_eq!((articles[0].id.as_str(), articles[0].level), ("art.1", 0));
        assert_eq!(articles[0].sentences.len(), 2);

        fs::write(dir.path().join("art.9.txt"), "x\n").unwrap();
        assert!(matches!(
            load_article_dir(dir.path()),
            Err(Error::ArticleName(_))
        ));
    }

    #[test]
    fn kappa_examples() {
        let perfect = AgreementTable {
            both_yes: 50,
            both_no: 50,
            ..Default::default()
        };
        assert_eq!(cohen_kappa(&perfect).unwrap(), 1.0);
        let chance = AgreementTable {
            both_yes: 25,
            both_no: 25,
            a_yes_b_no: 25,
            a_no_b_yes: 25,
        };
        assert_eq!(cohen_kappa(&chance).unwrap(), 0.0);
        // p_o = 0.85; p_e = 0.48*0.47 + 0.52*0.53 = 0.5012
        let table = AgreementTable {
            both_yes: 40,
            both_no: 45,
            a_yes_b_no: 8,
            a_no_b_yes: 7,
        };
        let expected = (0.85 - 0.5012) / (1.0 - 0.5012);
        assert!((cohen_kappa(&table).unwrap() - expected).abs() < 1e-9);
    }

    #[test]
    fn kappa_errors_and_degenerate_cases() {
        assert!(cohen_kappa(&AgreementTable::default()).is_err());
        let all_yes = AgreementTable {
            both_yes: 10,
            ..Default::default()
        };
        assert_eq!(cohen_kappa(&all_yes).unwrap(), 1.0);
    }

    #[test]
    fn parses_agreement_rows() {
        let t = parse_agreement_tsv("p1\t1\t1\np2\t0\t1\n\np3\t0\t0\n", Path::new("a")).unwrap();
        assert_eq!(
            t,
            AgreementTable {
                both_yes: 1,
                both_no: 1,
                a_yes_b_no: 0,
                a_no_b_yes: 1
            }
        );
        let err = parse_agreement_tsv("p1\t1\t1\np2\tyes\t1\n", Path::new("a")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    proptest! {
        #[test]
        fn cosine_is_symmetric(a in "[abcde ]{0,20}", b in "[abcde ]{0,20}") {
            let (a, b) = (tokenize(&a), tokenize(&b));
            let table = idf_table([&a, &b]);
            prop_assert_eq!(tfidf_cosine(&a, &b, &table), tfidf_cosine(&b, &a, &table));
        }

        #[test]
        fn kappa_is_bounded(yy in 0u64..50, nn in 0u64..50, yn in 0u64..50, ny in 0u64..50) {
            let t = AgreementTable { both_yes: yy, both_no: nn, a_yes_b_no: yn, a_no_b_yes: ny };
            if let Ok(k) = cohen_kappa(&t) {
                prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&k));
                prop_assert_eq!((k - 1.0).abs() < 1e-12, yn + ny == 0);
            }
        }

        #[test]
        fn raising_threshold_never_adds_pairs(
            cs in prop::collection::vec("[abcdef ]{1,15}", 1..5),
            ss in prop::collection::vec("[abcdef ]{1,15}", 1..5),
            lo in 0.0f64..1.0,
            hi in 0.0f64..1.0,
        ) {
            let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
            let c = Article::new("t", 0, &cs);
            let s = Article::new("t", 1, &ss);
            let low = align_articles(&c, &s, lo);
            let high = align_articles(&c, &s, hi);
            prop_assert!(high.len() <= low.len());
            prop_assert!(high.iter().all(|p| p.similarity >= hi));
        }
    }
}
