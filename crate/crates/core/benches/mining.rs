use std::hint::black_box;

use altlex_core::lexres::{parse_ppdb, PpdbOptions};
use altlex_core::{ConnectiveInventory, Miner, SentencePair};
use criterion::{criterion_group, criterion_main, Criterion};

const PAIRS: &[(&str, &str)] = &[
    (
        "Today, the comic arm of the company flourishes despite no longer having its own universe of super powered characters.",
        "Today, the company does very well even though they do not have their own universe of super powered characters.",
    ),
    (
        "When the show was broadcast, Rupert Boneham won the million dollars.",
        "Rupert Boneham won the million dollars.",
    ),
    (
        "The river flooded the valley because the dam failed.",
        "The river flooded the valley.",
    ),
    ("The sky was clear over the city.", "The sky was clear."),
];

fn corpus(n: usize) -> Vec<SentencePair> {
    (0..n)
        .map(|i| {
            let (c, s) = PAIRS[i % PAIRS.len()];
            SentencePair::new(c, s, i.to_string())
        })
        .collect()
}

fn criterion_benchmark(c: &mut Criterion) {
    let inventory = ConnectiveInventory::default_pdtb();
    let stores = vec![parse_ppdb(
        "[X] ||| despite ||| though ||| PPDB2.0Score=3.5\n[X] ||| because ||| due to ||| PPDB2.0Score=2.1\n",
        &PpdbOptions::default(),
    )];
    let miner = Miner::new(&inventory, &stores);
    let pairs = corpus(4_000);

    let mut group = c.benchmark_group("mine_corpus");
    group.sample_size(20);
    group.bench_function("sequential", |b| {
        b.iter(|| miner.mine_corpus_sequential(black_box(&pairs)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| miner.mine_corpus_parallel(black_box(&pairs)))
    });
    group.finish();
}

criterion_group!(benches, criterion_benchmark);
criterion_main!(benches);
