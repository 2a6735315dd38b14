//! The results catalog: the 28 printed table rows with their family
//! provenance, verification policies, and CSV/JSON/markdown emitters.
//!
//! Each row maps to a family instance (the table itself omits provenance; the
//! mapping is reconstructed from the per-family example lists). One row prints
//! d = 7 in the table while its family states d = 6 at the same (q, N, K);
//! the record stores the family's claim and flags the discrepancy in `notes`,
//! letting the computed distance arbitrate.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::bounds::classify;
use crate::dist::{min_weight_upto, Budget, DistanceResult};
use crate::error::{Error, Result};
use crate::families::{build_family, FamilyId, FamilyResult};
use crate::vanlint::predicted_distance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OptimalityLabel {
    Optimal,
    BestKnown,
    Unlabeled,
}

impl OptimalityLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            OptimalityLabel::Optimal => "optimal",
            OptimalityLabel::BestKnown => "best_known",
            OptimalityLabel::Unlabeled => "unlabeled",
        }
    }
}

/// One catalog row as emitted to CSV/JSON/markdown.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeRecord {
    pub q: u64,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub d_claimed: String,
    pub d_status: String,
    pub d_value: String,
    pub optimality_label: OptimalityLabel,
    pub verdict: String,
    pub family: String,
    pub generator: String,
    pub notes: String,
}

/// How a row's distance gets verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum DistancePolicy {
    /// Direct column search on the combined code (N <= 126, small d).
    SearchExact,
    /// Exact value through d = min{2 d(C1), d(C2)} with exactly-verified
    /// components (no open-ended search at the combined length).
    Identity,
}

struct TableRow {
    q: u64,
    n: usize,
    k: usize,
    /// d printed in the table.
    table_d: u32,
    /// d claimed by the source family (differs from `table_d` on one row).
    claimed_d: u32,
    label: OptimalityLabel,
    family: FamilyId,
    m: u32,
    policy: DistancePolicy,
    note: &'static str,
}

const EXTERNAL_TABLES_NOTE: &str = "paper cites external tables";

/// The printed table: 28 rows. (The prose summary says 27; the physical table
/// contains 28 entries and is reproduced as printed.)
fn table_rows() -> Vec<TableRow> {
    use DistancePolicy::*;
    use FamilyId::*;
    use OptimalityLabel::*;
    let r = |q, n, k, table_d, claimed_d, label, family, m, policy, note| TableRow {
        q,
        n,
        k,
        table_d,
        claimed_d,
        label,
        family,
        m,
        policy,
        note,
    };
    vec![
        r(2, 14, 7, 4, 4, Optimal, T71, 3, SearchExact, EXTERNAL_TABLES_NOTE),
        r(2, 14, 11, 2, 2, Optimal, T72, 3, SearchExact, EXTERNAL_TABLES_NOTE),
        r(2, 30, 14, 8, 8, Optimal, T42, 4, SearchExact,
          "outside the family hypotheses (m = 4); paper cites external tables"),
        r(2, 30, 17, 6, 6, BestKnown, T41, 4, SearchExact, ""),
        r(2, 30, 24, 4, 4, Optimal, T31, 4, SearchExact, ""),
        r(2, 62, 40, 8, 8, Optimal, T42, 5, SearchExact, EXTERNAL_TABLES_NOTE),
        r(2, 62, 46, 6, 6, BestKnown, T41, 5, SearchExact, ""),
        r(2, 62, 55, 4, 4, Optimal, T31, 5, SearchExact, ""),
        r(2, 126, 100, 8, 8, BestKnown, T42, 6, Identity, ""),
        r(2, 126, 107, 7, 6, BestKnown, T41, 6, SearchExact,
          "table prints d = 7, family states d = 6; computed value decides"),
        r(2, 126, 118, 4, 4, Optimal, T31, 6, SearchExact, ""),
        r(2, 254, 224, 8, 8, BestKnown, T42, 7, Identity, ""),
        r(2, 254, 232, 6, 6, BestKnown, T41, 7, Identity, ""),
        r(2, 254, 245, 4, 4, Optimal, T31, 7, Identity, ""),
        r(4, 10, 6, 4, 4, Optimal, T34, 2, SearchExact, ""),
        r(4, 14, 9, 4, 4, Optimal, T37, 2, SearchExact, EXTERNAL_TABLES_NOTE),
        r(4, 30, 20, 6, 6, BestKnown, T61, 2, SearchExact, ""),
        r(4, 30, 24, 4, 4, Optimal, T33, 2, SearchExact, EXTERNAL_TABLES_NOTE),
        r(4, 42, 37, 3, 3, Optimal, T34, 3, SearchExact, EXTERNAL_TABLES_NOTE),
        r(4, 62, 55, 4, 4, Optimal, T37, 3, SearchExact, ""),
        r(4, 126, 112, 6, 6, BestKnown, T61, 3, SearchExact, ""),
        r(4, 126, 118, 4, 4, Optimal, T33, 3, SearchExact, ""),
        r(4, 126, 121, 3, 3, Optimal, T32, 3, SearchExact, ""),
        r(4, 170, 164, 3, 3, Optimal, T34, 4, Identity, EXTERNAL_TABLES_NOTE),
        r(4, 254, 245, 4, 4, Optimal, T37, 4, Identity, ""),
        r(8, 18, 14, 4, 4, Optimal, T34, 2, SearchExact, EXTERNAL_TABLES_NOTE),
        r(8, 126, 120, 4, 4, Optimal, T33, 2, SearchExact, ""),
        r(8, 126, 122, 3, 3, Optimal, T32, 2, SearchExact, ""),
    ]
}

/// Exact distance of a length-n component by direct search; errors when the
/// search cannot be completed (never happens for the component sizes used by
/// the identity rows).
fn component_exact(c: &crate::code::CyclicCode, budget: &Budget) -> Result<DistanceResult> {
    if c.dimension() == 0 {
        return Ok(DistanceResult::NoNonzeroWords);
    }
    let bound = crate::dist::bch_lower_bound(c).unwrap_or(1);
    min_weight_upto(c, bound, budget)
}

/// Verify one row's distance claim per its policy.
fn computed_distance(
    row: &TableRow,
    fam: &FamilyResult,
    budget: &Budget,
) -> Result<DistanceResult> {
    match row.policy {
        DistancePolicy::SearchExact => min_weight_upto(fam.code(), row.claimed_d, budget),
        DistancePolicy::Identity => {
            let d1 = component_exact(fam.combined.c1(), budget)?;
            let d2 = match crate::dist::bch_lower_bound(fam.combined.c2()) {
                Ok(b) => DistanceResult::LowerBound { low: b },
                Err(_) => DistanceResult::LowerBound { low: 1 },
            };
            // 2 d(C1) must already decide the minimum; otherwise verify C2
            // exactly as well (affordable: components have length <= 127)
            let first = predicted_distance(&d1, &d2);
            if first.exact_value().is_some() {
                return Ok(first);
            }
            let d2 = component_exact(fam.combined.c2(), budget)?;
            Ok(predicted_distance(&d1, &d2))
        }
    }
}

/// Build the full catalog. With `verify` set, every row's distance is
/// computed per its policy and the bound classifier runs on the result.
pub fn table1(verify: bool, budget: &Budget) -> Result<Vec<CodeRecord>> {
    let mut out = Vec::new();
    for row in table_rows() {
        let fam = build_family(row.family, row.q, row.m)?;
        if (fam.length(), fam.dimension()) != (row.n, row.k) {
            return Err(Error::Internal(format!(
                "row [{},{},{}]_{}: family {} at m = {} constructs [{},{}]",
                row.n,
                row.k,
                row.table_d,
                row.q,
                row.family,
                row.m,
                fam.length(),
                fam.dimension()
            )));
        }
        let mut notes: Vec<String> = Vec::new();
        if !row.note.is_empty() {
            notes.push(row.note.into());
        }
        let (d_status, d_value, verdict) = if verify {
            let computed = computed_distance(&row, &fam, budget)?;
            if let Some(d) = computed.exact_value() {
                if d != row.claimed_d {
                    notes.push(format!("computed d = {d} contradicts claimed {}", row.claimed_d));
                }
                if row.table_d != row.claimed_d {
                    notes.push(format!(
                        "computed d = {d}; table printed {}, family claims {}",
                        row.table_d, row.claimed_d
                    ));
                }
                let v = classify(row.n as u32, row.k as u32, d, row.q);
                (computed.status_str().to_string(), computed.value_str(), v.verdict_str())
            } else {
                notes.push("distance not resolved exactly".into());
                (computed.status_str().to_string(), computed.value_str(), "unverified".into())
            }
        } else {
            ("not_computed".into(), String::new(), "not_computed".into())
        };
        out.push(CodeRecord {
            q: row.q,
            n: row.n,
            k: row.k,
            d_claimed: row.claimed_d.to_string(),
            d_status,
            d_value,
            optimality_label: row.label,
            verdict,
            family: format!("{}(q={},m={})", row.family, row.q, row.m),
            generator: fam.code().generator().to_index_list(),
            notes: notes.join("; "),
        });
    }
    Ok(out)
}

/// True when every verified row's computed distance matches its claim and no
/// row labeled `Optimal` that our bounds can check came back contradicted.
pub fn all_rows_verified(records: &[CodeRecord]) -> bool {
    records.iter().all(|r| {
        r.d_status == "exact"
            && r.d_value == r.d_claimed
            && !r.notes.contains("contradicts")
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Csv,
    Json,
    Markdown,
}

impl std::str::FromStr for EmitFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(EmitFormat::Csv),
            "json" => Ok(EmitFormat::Json),
            "markdown" | "md" => Ok(EmitFormat::Markdown),
            other => Err(Error::InvalidParameters(format!("unknown format {other:?}"))),
        }
    }
}

const CSV_HEADER: &str = "q,N,K,d_claimed,d_status,d_value,optimality_label,verdict,family,generator,notes";

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Serialize records; output is byte-stable across runs for identical inputs.
pub fn emit(records: &[CodeRecord], format: EmitFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        EmitFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    r.q,
                    r.n,
                    r.k,
                    csv_escape(&r.d_claimed),
                    r.d_status,
                    csv_escape(&r.d_value),
                    r.optimality_label.as_str(),
                    csv_escape(&r.verdict),
                    r.family,
                    csv_escape(&r.generator),
                    csv_escape(&r.notes)
                )?;
            }
        }
        EmitFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, records)
                .map_err(|e| Error::Internal(format!("json serialization: {e}")))?;
            writeln!(out)?;
        }
        EmitFormat::Markdown => {
            writeln!(out, "| q | Cyclic code | Optimality | computed d | verdict | family | notes |")?;
            writeln!(out, "|---|-------------|------------|------------|---------|--------|-------|")?;
            for r in records {
                writeln!(
                    out,
                    "| {} | [{},{},{}]_{} | {} | {} | {} | {} | {} |",
                    r.q,
                    r.n,
                    r.k,
                    r.d_claimed,
                    r.q,
                    r.optimality_label.as_str(),
                    if r.d_value.is_empty() { "-" } else { &r.d_value },
                    r.verdict,
                    r.family,
                    if r.notes.is_empty() { "-" } else { &r.notes }
                )?;
            }
        }
    }
    Ok(())
}

pub fn emit_to_string(records: &[CodeRecord], format: EmitFormat) -> Result<String> {
    let mut buf = Vec::new();
    emit(records, format, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Internal(format!("non-utf8 emit: {e}")))
}
