//! Run configuration: command-line flags layered over an optional
//! `key=value` config file.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use altlex_core::corpus::DEFAULT_THRESHOLD;
use altlex_core::lexres::DEFAULT_SCORE_KEY;
use altlex_core::SenseMatch;
use clap::{Args, ValueEnum};

/// Bad flags, bad config values, or missing required settings.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    UsageError(message.into()).into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    /// `complex<TAB>simple[<TAB>similarity]` lines.
    AlignedTsv,
    /// Directory of `<articleid>.<level>.txt` files.
    ArticleDir,
}

impl FromStr for InputKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <InputKind as ValueEnum>::from_str(s, true)
    }
}

/// Flags shared by `align` and `mine`. Every flag may also be given in the
/// config file under the same name without the leading dashes.
#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// Config file of `key=value` lines; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub input_kind: Option<InputKind>,
    /// Aligned-pair TSV or article directory.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// PPDB flat file.
    #[arg(long)]
    pub ppdb: Option<PathBuf>,
    /// Synonym lexicon TSV (`word<TAB>synonym`).
    #[arg(long)]
    pub synonyms: Option<PathBuf>,
    /// Connective inventory TSV; defaults to the shipped inventory.
    #[arg(long)]
    pub connectives: Option<PathBuf>,
    /// Minimum TF-IDF cosine for sentence alignment [default: 0.5].
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Minimum PPDB score [default: 0].
    #[arg(long)]
    pub min_score: Option<f64>,
    /// PPDB feature holding the paraphrase score [default: PPDB2.0Score].
    #[arg(long)]
    pub score_key: Option<String>,
    /// Sense level that must be re-detected: 1 or 2 [default: 2].
    #[arg(long)]
    pub sense_level: Option<u8>,
    /// Worker threads [default: available parallelism].
    #[arg(long)]
    pub workers: Option<usize>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input_kind: InputKind,
    pub input: PathBuf,
    pub ppdb: Option<PathBuf>,
    pub synonyms: Option<PathBuf>,
    pub connectives: Option<PathBuf>,
    pub threshold: f64,
    pub min_score: f64,
    pub score_key: String,
    pub sense_match: SenseMatch,
    pub workers: usize,
    pub out: PathBuf,
}

impl RunConfig {
    /// A config with defaults for everything but the input and output.
    pub fn new(input_kind: InputKind, input: impl Into<PathBuf>, out: impl Into<PathBuf>) -> Self {
        RunConfig {
            input_kind,
            input: input.into(),
            ppdb: None,
            synonyms: None,
            connectives: None,
            threshold: DEFAULT_THRESHOLD,
            min_score: 0.0,
            score_key: DEFAULT_SCORE_KEY.to_string(),
            sense_match: SenseMatch::Level2,
            workers: default_workers(),
            out: out.into(),
        }
    }

    pub fn from_args(args: &RunArgs) -> anyhow::Result<Self> {
        let file = match &args.config {
            Some(path) => parse_config_file(path)?,
            None => HashMap::new(),
        };
        let get = |key: &str| file.get(key).map(String::as_str);

        fn pick<T: FromStr>(
            flag: Option<T>,
            file: Option<&str>,
            key: &str,
        ) -> anyhow::Result<Option<T>> {
            match (flag, file) {
                (Some(v), _) => Ok(Some(v)),
                (None, Some(raw)) => raw
                    .parse::<T>()
                    .map(Some)
                    .map_err(|_| usage(format!("invalid value {raw:?} for {key}"))),
                (None, None) => Ok(None),
            }
        }

        let input_kind = pick(args.input_kind, get("input-kind"), "input-kind")?
            .unwrap_or(InputKind::AlignedTsv);
        let input = pick(args.input.clone(), get("input"), "input")?
            .ok_or_else(|| usage("missing --input"))?;
        let out = pick(args.out.clone(), get("out"), "out")?.unwrap_or_else(|| PathBuf::from("."));
        let mut config = RunConfig::new(input_kind, input, out);
        config.ppdb = pick(args.ppdb.clone(), get("ppdb"), "ppdb")?;
        config.synonyms = pick(args.synonyms.clone(), get("synonyms"), "synonyms")?;
        config.connectives = pick(args.connectives.clone(), get("connectives"), "connectives")?;
        if let Some(t) = pick(args.threshold, get("threshold"), "threshold")? {
            config.threshold = t;
        }
        if let Some(m) = pick(args.min_score, get("min-score"), "min-score")? {
            config.min_score = m;
        }
        if let Some(k) = pick(args.score_key.clone(), get("score-key"), "score-key")? {
            config.score_key = k;
        }
        config.sense_match = match pick(args.sense_level, get("sense-level"), "sense-level")? {
            None | Some(2) => SenseMatch::Level2,
            Some(1) => SenseMatch::Level1,
            Some(other) => return Err(usage(format!("sense-level must be 1 or 2, not {other}"))),
        };
        if let Some(w) = pick(args.workers, get("workers"), "workers")? {
            config.workers = w;
        }
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if !(0.0..=1.0).contains(&self.threshold) {
            return Err(usage(format!(
                "threshold must be in [0, 1], not {}",
                self.threshold
            )));
        }
        if self.workers == 0 {
            return Err(usage("workers must be at least 1"));
        }
        Ok(())
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Reads flat `key=value` lines; `#` starts a comment line.
pub fn parse_config_file(path: &Path) -> anyhow::Result<HashMap<String, String>> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    parse_config(&content)
}

pub fn parse_config(content: &str) -> anyhow::Result<HashMap<String, String>> {
    const KEYS: &[&str] = &[
        "input-kind",
        "input",
        "ppdb",
        "synonyms",
        "connectives",
        "threshold",
        "min-score",
        "score-key",
        "sense-level",
        "workers",
        "out",
    ];
    let mut map = HashMap::new();
    for (i, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| usage(format!("config line {}: expected key=value", i + 1)))?;
        let key = key.trim().replace('_', "-");
        if !KEYS.contains(&key.as_str()) {
            return Err(usage(format!("config line {}: unknown key {key:?}", i + 1)));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}
