use std::fs;
use std::path::{Path, PathBuf};

use altlex_core::corpus::{self, SentencePair};
use altlex_core::lexres::{self, ParaphraseStore, PpdbOptions};
use altlex_core::{AltLexInventory, ConnectiveInventory, Miner};
use anyhow::Context;

use crate::config::{InputKind, RunConfig};
use crate::report;

pub const ALIGNED_FILE: &str = "aligned.tsv";
pub const CASES_FILE: &str = "cases.tsv";
pub const ALTLEX_FILE: &str = "altlexes.tsv";
pub const SENSES_FILE: &str = "senses.tsv";
pub const JSON_FILE: &str = "altlexes.json";

/// Runs `f` on a pool of `workers` threads (or inline without rayon).
fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .context("cannot start worker pool")?;
        Ok(pool.install(f))
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        Ok(f())
    }
}

fn write_file(dir: &Path, name: &str, content: &str) -> anyhow::Result<PathBuf> {
    let path = dir.join(name);
    fs::write(&path, content).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(path)
}

fn aligned_pairs(config: &RunConfig) -> anyhow::Result<Vec<SentencePair>> {
    let articles = corpus::load_article_dir(&config.input)?;
    with_workers(config.workers, || {
        corpus::align_corpus(&articles, config.threshold)
    })
}

fn load_pairs(config: &RunConfig) -> anyhow::Result<Vec<SentencePair>> {
    match config.input_kind {
        InputKind::AlignedTsv => Ok(corpus::load_aligned_tsv(&config.input)?),
        InputKind::ArticleDir => aligned_pairs(config),
    }
}

/// `complex<TAB>simple<TAB>similarity` lines, similarity to 6 decimals.
pub fn aligned_tsv(pairs: &[SentencePair]) -> String {
    let mut out = String::new();
    for p in pairs {
        out.push_str(&format!(
            "{}\t{}\t{:.6}\n",
            p.complex.raw, p.simple.raw, p.similarity
        ));
    }
    out
}

/// Aligns an article directory and writes `aligned.tsv`. Returns the number
/// of pairs.
pub fn cmd_align(config: &RunConfig) -> anyhow::Result<usize> {
    let pairs = aligned_pairs(config)?;
    fs::create_dir_all(&config.out)
        .with_context(|| format!("cannot create {}", config.out.display()))?;
    write_file(&config.out, ALIGNED_FILE, &aligned_tsv(&pairs))?;
    Ok(pairs.len())
}

/// Connective inventory and paraphrase stores named by a config.
pub struct Resources {
    pub inventory: ConnectiveInventory,
    pub stores: Vec<ParaphraseStore>,
}

impl Resources {
    pub fn load(config: &RunConfig) -> anyhow::Result<Self> {
        let inventory = match &config.connectives {
            Some(path) => ConnectiveInventory::load(path)?,
            None => ConnectiveInventory::default_pdtb(),
        };
        let mut stores = Vec::new();
        if let Some(path) = &config.ppdb {
            let options = PpdbOptions {
                min_score: config.min_score,
                score_key: config.score_key.clone(),
            };
            let store = lexres::load_ppdb_with(path, &options)?;
            log::info!(
                "{}: {} paraphrase pairs, {} lines skipped",
                path.display(),
                store.pair_count(),
                store.skipped_lines()
            );
            stores.push(store);
        }
        if let Some(path) = &config.synonyms {
            stores.push(lexres::load_synonyms(path)?);
        }
        if stores.is_empty() {
            log::warn!("no paraphrase resources given; nothing can be mined");
        }
        Ok(Resources { inventory, stores })
    }

    pub fn miner(&self, config: &RunConfig) -> Miner<'_> {
        Miner::new(&self.inventory, &self.stores).with_sense_match(config.sense_match)
    }
}

pub struct MineSummary {
    pub inventory: AltLexInventory,
    pub written: Vec<PathBuf>,
    /// (resource name, mean expansions per connective)
    pub expansions: Vec<(String, f64)>,
}

/// Mines `pairs` on `workers` threads.
pub fn mine_pairs(
    pairs: &[SentencePair],
    resources: &Resources,
    config: &RunConfig,
) -> anyhow::Result<AltLexInventory> {
    let miner = resources.miner(config);
    with_workers(config.workers, || miner.mine_corpus(pairs))
}

/// Loads the corpus and resources, mines, and writes all reports.
pub fn cmd_mine(config: &RunConfig) -> anyhow::Result<MineSummary> {
    let resources = Resources::load(config)?;
    let pairs = load_pairs(config)?;
    log::info!("mining {} pairs on {} workers", pairs.len(), config.workers);
    let inventory = mine_pairs(&pairs, &resources, config)?;

    fs::create_dir_all(&config.out)
        .with_context(|| format!("cannot create {}", config.out.display()))?;
    let written = vec![
        write_file(&config.out, CASES_FILE, &report::cases_tsv(&inventory))?,
        write_file(&config.out, ALTLEX_FILE, &report::altlexes_tsv(&inventory))?,
        write_file(&config.out, SENSES_FILE, &report::senses_tsv(&inventory))?,
        write_file(&config.out, JSON_FILE, &report::inventory_json(&inventory))?,
    ];
    let expansions = resources
        .stores
        .iter()
        .map(|s| {
            (
                s.resource().to_string(),
                lexres::mean_expansions(s, &resources.inventory),
            )
        })
        .collect();
    Ok(MineSummary {
        inventory,
        written,
        expansions,
    })
}

/// Cohen's kappa of an agreement TSV.
pub fn cmd_kappa(path: &Path) -> anyhow::Result<f64> {
    let table = corpus::load_agreement_tsv(path)?;
    Ok(corpus::cohen_kappa(&table)?)
}
