//! Report emitters for a mined inventory: the change-case frequency table,
//! the per-sense alignment table, the AltLex list, and a JSON dump.

use std::fmt::Write as _;

use altlex_core::{AltLexInventory, AltLexRecord, ChangeCase, Resource, Sense};
use serde::Serialize;

/// Example pair ids printed per AltLex row in TSV output.
pub const TSV_EXAMPLES: usize = 10;

/// Percentages in hundredths of a percent that sum to exactly 10000 when
/// `total > 0` (largest-remainder rounding).
pub fn percentages(counts: &[u64]) -> Vec<u64> {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return vec![0; counts.len()];
    }
    let exact: Vec<u128> = counts.iter().map(|&c| c as u128 * 10_000).collect();
    let mut shares: Vec<u64> = exact.iter().map(|e| (e / total as u128) as u64).collect();
    let mut left = 10_000 - shares.iter().sum::<u64>();
    let mut order: Vec<usize> = (0..counts.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(exact[i] % total as u128), i));
    for i in order {
        if left == 0 {
            break;
        }
        shares[i] += 1;
        left -= 1;
    }
    shares
}

fn hundredths(v: u64) -> String {
    format!("{}.{:02}", v / 100, v % 100)
}

#[derive(Debug, Serialize)]
struct CaseRow {
    case: &'static str,
    count: u64,
    percent: String,
}

fn case_rows(inv: &AltLexInventory) -> Vec<CaseRow> {
    let counts: Vec<u64> = ChangeCase::ALL.iter().map(|c| inv.case_count(*c)).collect();
    ChangeCase::ALL
        .iter()
        .zip(counts.iter().zip(percentages(&counts)))
        .map(|(case, (&count, pct))| CaseRow {
            case: case.label(),
            count,
            percent: hundredths(pct),
        })
        .collect()
}

/// `cases.tsv`: one row per change case in fixed order, then a total row.
pub fn cases_tsv(inv: &AltLexInventory) -> String {
    let mut out = String::from("case\tcount\tpercent\n");
    for row in case_rows(inv) {
        writeln!(out, "{}\t{}\t{}", row.case, row.count, row.percent).unwrap();
    }
    let total = inv.total_pairs();
    let pct = if total > 0 { "100.00" } else { "0.00" };
    writeln!(out, "Total\t{total}\t{pct}").unwrap();
    out
}

fn resources_label(record: &AltLexRecord) -> String {
    record
        .resources
        .iter()
        .map(Resource::to_string)
        .collect::<Vec<_>>()
        .join("+")
}

/// `altlexes.tsv`: one row per (text, sense), ordered by sense, descending
/// count, then text.
pub fn altlexes_tsv(inv: &AltLexInventory) -> String {
    let mut out = String::from("text\tsense\tresource\ttoken_count\texample_pair_ids\n");
    for r in inv.sorted_records() {
        let examples: Vec<&str> = r
            .example_pair_ids
            .iter()
            .take(TSV_EXAMPLES)
            .map(String::as_str)
            .collect();
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.text,
            r.sense,
            resources_label(r),
            r.token_count,
            examples.join(",")
        )
        .unwrap();
    }
    out
}

#[derive(Debug, Serialize)]
struct SenseRow {
    sense: Sense,
    alignments: u64,
    ppdb_types: usize,
    synonym_types: usize,
    types: usize,
}

fn sense_rows(inv: &AltLexInventory) -> Vec<SenseRow> {
    Sense::ALL
        .iter()
        .map(|&sense| {
            let records: Vec<_> = inv.records.values().filter(|r| r.sense == sense).collect();
            let from = |res| {
                records
                    .iter()
                    .filter(|r| r.resources.contains(&res))
                    .count()
            };
            SenseRow {
                sense,
                alignments: inv.alignment_count(sense),
                ppdb_types: from(Resource::Ppdb),
                synonym_types: from(Resource::SynonymLexicon),
                types: records.len(),
            }
        })
        .collect()
}

/// `senses.tsv`: mined alignments and new AltLex types per relation sense.
pub fn senses_tsv(inv: &AltLexInventory) -> String {
    let mut out = String::from("sense\tclass\talignments\tppdb_types\tsynonym_types\ttypes\n");
    let rows = sense_rows(inv);
    for row in &rows {
        writeln!(
            out,
            "{}\t{:?}\t{}\t{}\t{}\t{}",
            row.sense,
            row.sense.class(),
            row.alignments,
            row.ppdb_types,
            row.synonym_types,
            row.types
        )
        .unwrap();
    }
    writeln!(
        out,
        "Total\t\t{}\t{}\t{}\t{}",
        rows.iter().map(|r| r.alignments).sum::<u64>(),
        rows.iter().map(|r| r.ppdb_types).sum::<usize>(),
        rows.iter().map(|r| r.synonym_types).sum::<usize>(),
        rows.iter().map(|r| r.types).sum::<usize>(),
    )
    .unwrap();
    out
}

#[derive(Serialize)]
struct JsonReport<'a> {
    total_pairs: u64,
    cases: Vec<CaseRow>,
    senses: Vec<SenseRow>,
    altlexes: Vec<&'a AltLexRecord>,
}

/// `altlexes.json`: the full inventory, with every example pair id.
pub fn inventory_json(inv: &AltLexInventory) -> String {
    let report = JsonReport {
        total_pairs: inv.total_pairs(),
        cases: case_rows(inv),
        senses: sense_rows(inv),
        altlexes: inv.sorted_records(),
    };
    let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
    json.push('\n');
    json
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn percentages_of_empty_are_zero() {
        assert_eq!(percentages(&[0, 0, 0]), [0, 0, 0]);
    }

    #[test]
    fn thirds_round_to_exact_hundred() {
        assert_eq!(percentages(&[1, 1, 1]), [3334, 3333, 3333]);
    }

    #[test]
    fn empty_inventory_report() {
        let inv = AltLexInventory::default();
        let cases = cases_tsv(&inv);
        assert_eq!(cases.lines().count(), 1 + ChangeCase::ALL.len() + 1);
        assert!(cases.lines().skip(1).all(|l| l.ends_with("\t0\t0.00")));
        assert_eq!(altlexes_tsv(&inv).lines().count(), 1);
        assert!(senses_tsv(&inv)
            .lines()
            .last()
            .unwrap()
            .starts_with("Total\t\t0"));
        let json: serde_json::Value = serde_json::from_str(&inventory_json(&inv)).unwrap();
        assert_eq!(json["total_pairs"], 0);
    }

    proptest! {
        #[test]
        fn percentages_sum_to_hundred(counts in prop::collection::vec(0u64..100_000, 1..8)) {
            let p = percentages(&counts);
            let total: u64 = counts.iter().sum();
            if total > 0 {
                prop_assert_eq!(p.iter().sum::<u64>(), 10_000);
                for (c, v) in counts.iter().zip(&p) {
                    let exact = *c as f64 * 10_000.0 / total as f64;
                    prop_assert!((exact - *v as f64).abs() < 1.0);
                }
            }
        }
    }
}
