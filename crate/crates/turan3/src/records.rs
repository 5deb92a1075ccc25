//! A small results database: one extremal record per line as JSON, keyed by
//! (n, forbidden list, method). Exact records are immutable facts, so a
//! rerun must reproduce them exactly and a disagreement is an error, never
//! an overwrite. Local search records are lower bounds, so a better value
//! replaces a worse one and a worse value is ignored.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::search::ExtremalRecord;

pub const METHOD_EXHAUSTIVE: &str = "exhaustive";
pub const METHOD_LOCAL_SEARCH: &str = "local-search";

/// What storing a record did to the database.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StoreOutcome {
    /// No record had this key; the new one was appended.
    Added,
    /// An exact record with this key already existed and agrees.
    Verified,
    /// A local search record existed and the new value is larger.
    Improved,
    /// A local search record existed and is at least as good.
    Kept,
}

impl StoreOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            StoreOutcome::Added => "added",
            StoreOutcome::Verified => "verified",
            StoreOutcome::Improved => "improved",
            StoreOutcome::Kept => "kept",
        }
    }
}

/// Parsed database plus the number of lines that failed to parse.
#[derive(Clone, Debug, Default)]
pub struct LoadedDb {
    pub records: Vec<ExtremalRecord>,
    pub skipped: usize,
}

/// Read every parseable record from `path`. A missing file is an empty
/// database; blank lines are ignored; anything else unparseable counts
/// toward `skipped`.
pub fn load_records(path: &Path) -> Result<LoadedDb> {
    if !path.exists() {
        return Ok(LoadedDb::default());
    }
    let text = fs::read_to_string(path)?;
    let mut db = LoadedDb::default();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match serde_json::from_str::<ExtremalRecord>(line) {
            Ok(rec) => db.records.push(rec),
            Err(_) => db.skipped += 1,
        }
    }
    Ok(db)
}

fn same_key(a: &ExtremalRecord, b: &ExtremalRecord) -> bool {
    a.n == b.n && a.forbidden == b.forbidden && a.method == b.method
}

fn append_record(path: &Path, rec: &ExtremalRecord) -> Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut line = serde_json::to_string(rec)?;
    line.push('\n');
    file.write_all(line.as_bytes())?;
    Ok(())
}

fn rewrite_records(path: &Path, records: &[ExtremalRecord]) -> Result<()> {
    let mut out = String::new();
    for rec in records {
        out.push_str(&serde_json::to_string(rec)?);
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

/// Store one record under the key (n, forbidden, method). New keys append.
/// For an existing exact key the stored value and witness must match, or
/// the call fails; nothing is ever overwritten. For an existing local
/// search key a strictly better value replaces the row (this rewrite drops
/// unparseable lines).
pub fn store_record(path: &Path, rec: &ExtremalRecord) -> Result<StoreOutcome> {
    let mut db = load_records(path)?;
    let Some(i) = db.records.iter().position(|r| same_key(r, rec)) else {
        append_record(path, rec)?;
        return Ok(StoreOutcome::Added);
    };
    if rec.method == METHOD_EXHAUSTIVE {
        let old = &db.records[i];
        if old.max_triangles == rec.max_triangles && old.witness == rec.witness {
            Ok(StoreOutcome::Verified)
        } else {
            Err(Error::PropertyFalsified(format!(
                "stored exact record for n = {} avoiding {{{}}} says {} triangles \
                 with witness {}, this run found {} with witness {}",
                rec.n,
                rec.forbidden.join(", "),
                old.max_triangles,
                old.witness,
                rec.max_triangles,
                rec.witness,
            )))
        }
    } else if rec.max_triangles > db.records[i].max_triangles {
        db.records[i] = rec.clone();
        rewrite_records(path, &db.records)?;
        Ok(StoreOutcome::Improved)
    } else {
        Ok(StoreOutcome::Kept)
    }
}

fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

/// Render records as CSV, sorted by (forbidden, method, n). The forbidden
/// field is always quoted because pattern names can contain commas. An
/// empty database gives just the header.
pub fn report_csv(records: &[ExtremalRecord]) -> String {
    let mut rows: Vec<&ExtremalRecord> = records.iter().collect();
    rows.sort_by(|a, b| {
        (&a.forbidden, &a.method, a.n).cmp(&(&b.forbidden, &b.method, b.n))
    });
    let mut out = String::from("n,forbidden,max_triangles,witness,graphs_scanned,method\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            csv_quote(&r.forbidden.join(",")),
            r.max_triangles,
            r.witness,
            r.graphs_scanned,
            r.method,
        ));
    }
    out
}

/// Render records as a JSON array, same order as [`report_csv`].
pub fn report_json(records: &[ExtremalRecord]) -> Result<String> {
    let mut rows: Vec<&ExtremalRecord> = records.iter().collect();
    rows.sort_by(|a, b| {
        (&a.forbidden, &a.method, a.n).cmp(&(&b.forbidden, &b.method, b.n))
    });
    Ok(serde_json::to_string_pretty(&rows)?)
}

/// Adding a vertex never loses triangles, so exact values must be
/// nondecreasing in n for a fixed forbidden list. Returns one message per
/// violating adjacent pair; local search rows are not judged.
pub fn monotonicity_warnings(records: &[ExtremalRecord]) -> Vec<String> {
    let mut groups: BTreeMap<&[String], Vec<(usize, usize)>> = BTreeMap::new();
    for r in records {
        if r.method == METHOD_EXHAUSTIVE {
            groups.entry(&r.forbidden).or_default().push((r.n, r.max_triangles));
        }
    }
    let mut warnings = Vec::new();
    for (forbidden, mut points) in groups {
        points.sort_unstable();
        for pair in points.windows(2) {
            if pair[1].1 < pair[0].1 {
                warnings.push(format!(
                    "exact values for {{{}}} drop from {} at n = {} to {} at n = {}",
                    forbidden.join(", "),
                    pair[0].1,
                    pair[0].0,
                    pair[1].1,
                    pair[1].0,
                ));
            }
        }
    }
    warnings
}
