//! Parallel census driver with a resumable journal.
//!
//! Work is split into units (one Q2 and a contiguous slice of B); workers
//! pull units from a shared counter and a writer thread appends each
//! finished unit to the journal as a `B key / R record… / E key` block.
//! Interrupting mid-run loses at most the unfinished blocks: on resume,
//! complete blocks are loaded and their units skipped. The final record file
//! is rebuilt from scratch at the end of every successful run — sorted by
//! form ids, so worker count and scheduling never change a byte of it.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use gonality_core::census::{
    derive_theorems, make_units, prepare_case, scan_unit, sort_records, summarize_case,
    CaseData, CensusCase, CensusSummary, ScanUnit, TheoremReport,
};
use gonality_core::curvekit::CurveRecord;
use gonality_core::quadform::{build_type_table, TypeTable};

use crate::formats;

/// Which base forms to scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Q1Choice {
    TypeIII,
    TypeIV,
    Both,
}

impl Q1Choice {
    pub fn cases(&self) -> Vec<CensusCase> {
        match self {
            Q1Choice::TypeIII => vec![CensusCase::TypeIII],
            Q1Choice::TypeIV => vec![CensusCase::TypeIV],
            Q1Choice::Both => vec![CensusCase::TypeIII, CensusCase::TypeIV],
        }
    }
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub q1_choice: Q1Choice,
    pub workers: usize,
    pub output_path: PathBuf,
    pub resume: bool,
    /// B-forms per work unit; also the flush granularity of the journal.
    pub chunk_size: usize,
}

impl CensusConfig {
    pub fn new(output_path: PathBuf) -> CensusConfig {
        CensusConfig {
            q1_choice: Q1Choice::Both,
            workers: default_workers(),
            output_path,
            resume: false,
            chunk_size: 2048,
        }
    }
}

/// Worker count: the GONALITY_JOBS environment variable, else the available
/// parallelism capped at 8.
pub fn default_workers() -> usize {
    if let Ok(v) = std::env::var("GONALITY_JOBS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8)
}

/// Everything a finished census run produces.
pub struct CensusOutcome {
    pub summary: CensusSummary,
    pub records: Vec<CurveRecord>,
    pub report: TheoremReport,
}

fn unit_key(unit: &ScanUnit) -> String {
    format!("{}:{}:{}:{}", unit.case.label(), unit.q2_index, unit.b_start, unit.b_end)
}

pub fn journal_path(output: &Path) -> PathBuf {
    let mut os = output.as_os_str().to_owned();
    os.push(".journal");
    PathBuf::from(os)
}

pub fn summary_path(output: &Path) -> PathBuf {
    let mut os = output.as_os_str().to_owned();
    os.push(".summary");
    PathBuf::from(os)
}

struct JournalBlock {
    records: Vec<CurveRecord>,
    flagged: u64,
}

/// Parse complete `B … E` blocks from an existing journal; incomplete
/// trailing blocks are dropped and their units recomputed.
fn load_journal(path: &Path) -> Result<BTreeMap<String, JournalBlock>> {
    let mut done = BTreeMap::new();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(e).with_context(|| format!("reading journal {}", path.display())),
    };
    let mut current: Option<(String, JournalBlock)> = None;
    for line in text.lines() {
        let mut parts = line.splitn(2, ' ');
        let tag = parts.next().unwrap_or("");
        let rest = parts.next().unwrap_or("");
        match tag {
            "B" => current = Some((rest.to_string(), JournalBlock { records: Vec::new(), flagged: 0 })),
            "R" => {
                if let Some((_, block)) = current.as_mut() {
                    let tsv = rest.replace(' ', "\t");
                    block.records.push(formats::parse_record_line(&tsv)?);
                }
            }
            "F" => {
                if let Some((_, block)) = current.as_mut() {
                    block.flagged += 1;
                }
            }
            "E" => {
                if let Some((key, block)) = current.take() {
                    if key == rest {
                        done.insert(key, block);
                    }
                }
            }
            _ => {}
        }
    }
    Ok(done)
}

fn append_block(journal: &mut std::fs::File, key: &str, out: &ScanOutputLike) -> Result<()> {
    let mut text = String::new();
    text.push_str(&format!("B {}\n", key));
    for r in &out.records {
        text.push_str(&format!("R {}\n", formats::record_line(r).replace('\t', " ")));
    }
    for (a, b, c) in &out.flagged {
        text.push_str(&format!("F {:04x} {:04x} {:04x}\n", a, b, c));
    }
    text.push_str(&format!("E {}\n", key));
    journal.write_all(text.as_bytes())?;
    journal.flush()?;
    Ok(())
}

struct ScanOutputLike {
    records: Vec<CurveRecord>,
    flagged: Vec<(u16, u16, u16)>,
}

/// Run the census: precompute the groups and A/B sets, scan all pending
/// units across the workers, journal every finished unit, then write the
/// sorted record file, the summary sidecar, and derive the point-count
/// consequences.
pub fn run_census(config: &CensusConfig) -> Result<CensusOutcome> {
    if config.workers == 0 {
        bail!("worker count must be at least 1");
    }
    let table = build_type_table();
    let cases: Vec<CaseData> = config
        .q1_choice
        .cases()
        .into_iter()
        .map(|c| prepare_case(&table, c).map_err(|e| anyhow::anyhow!("{}", e)))
        .collect::<Result<_>>()?;

    let jpath = journal_path(&config.output_path);
    let done = if config.resume {
        load_journal(&jpath)?
    } else {
        BTreeMap::new()
    };
    let mut journal = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .truncate(false)
        .open(&jpath)
        .with_context(|| format!("opening journal {}", jpath.display()))?;
    if !config.resume {
        journal.set_len(0)?;
    }

    // Deterministic unit list; completed units are filtered out up front.
    let mut all_units: Vec<(usize, ScanUnit)> = Vec::new();
    for (ci, data) in cases.iter().enumerate() {
        for u in make_units(data, config.chunk_size) {
            all_units.push((ci, u));
        }
    }
    let pending: Vec<(usize, ScanUnit)> = all_units
        .iter()
        .filter(|(_, u)| !done.contains_key(&unit_key(u)))
        .cloned()
        .collect();

    // Per-case aggregation: resumed blocks first.
    let ncases = cases.len();
    let mut case_records: Vec<Vec<CurveRecord>> = vec![Vec::new(); ncases];
    let mut case_wall_ms: Vec<u64> = vec![0; ncases];
    let mut flagged_total = 0u64;
    for (ci, data) in cases.iter().enumerate() {
        for u in make_units(data, config.chunk_size) {
            if let Some(block) = done.get(&unit_key(&u)) {
                case_records[ci].extend(block.records.iter().cloned());
                flagged_total += block.flagged;
            }
        }
    }

    type UnitResult = (usize, ScanUnit, Result<ScanOutputLike, String>, u64);
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<UnitResult>();
    let table_ref = &table;
    let cases_ref = &cases;
    let pending_ref = &pending;
    let next_ref = &next;
    std::thread::scope(|scope| -> Result<()> {
        for _ in 0..config.workers {
            let tx = tx.clone();
            scope.spawn(move || loop {
                let idx = next_ref.fetch_add(1, Ordering::Relaxed);
                if idx >= pending_ref.len() {
                    return;
                }
                let (ci, unit) = pending_ref[idx];
                let t0 = Instant::now();
                let out = scan_unit(table_ref, &cases_ref[ci], &unit)
                    .map(|o| ScanOutputLike { records: o.records, flagged: o.flagged })
                    .map_err(|e| e.to_string());
                let wall = t0.elapsed().as_millis() as u64;
                if tx.send((ci, unit, out, wall)).is_err() {
                    return;
                }
            });
        }
        drop(tx);
        for (ci, unit, out, wall) in rx {
            let out = out.map_err(|e| anyhow::anyhow!("unit {}: {}", unit_key(&unit), e))?;
            append_block(&mut journal, &unit_key(&unit), &out)?;
            flagged_total += out.flagged.len() as u64;
            case_wall_ms[ci] += wall;
            case_records[ci].extend(out.records);
        }
        Ok(())
    })?;

    let mut summaries = Vec::with_capacity(ncases);
    let mut all_records: Vec<CurveRecord> = Vec::new();
    for (ci, data) in cases.iter().enumerate() {
        sort_records(&mut case_records[ci]);
        summaries.push(summarize_case(data, &case_records[ci], case_wall_ms[ci]));
        all_records.extend(case_records[ci].iter().cloned());
    }
    sort_records(&mut all_records);
    let summary = CensusSummary { cases: summaries, flagged: flagged_total };

    formats::write_records(&config.output_path, &all_records)?;
    std::fs::write(summary_path(&config.output_path), formats::render_summary(&summary))?;

    let report = derive_theorems(&all_records).map_err(|e| anyhow::anyhow!("{}", e))?;
    Ok(CensusOutcome { summary, records: all_records, report })
}

/// Re-derive the verdict-bearing records from a census file: every stored
/// line was accepted by the smooth-curve check.
pub fn records_from_file(path: &Path) -> Result<Vec<CurveRecord>> {
    formats::read_records(path)
}

/// The shared read-only type table, built once per process.
pub fn shared_table() -> &'static TypeTable {
    use std::sync::OnceLock;
    static TABLE: OnceLock<TypeTable> = OnceLock::new();
    TABLE.get_or_init(build_type_table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_keys_are_stable() {
        let u = ScanUnit { case: CensusCase::TypeIV, q2_index: 3, b_start: 0, b_end: 2048 };
        assert_eq!(unit_key(&u), "iv:3:0:2048");
    }

    #[test]
    fn journal_round_trip_drops_incomplete_blocks() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("census.tsv.journal");
        std::fs::write(
            &path,
            "B iv:0:0:10\nR 4402 0292 0e90 3 5 9 25\nE iv:0:0:10\nB iv:0:10:20\nR 4402 0292 0e91 3 5 9 25\n",
        )
        .unwrap();
        let done = load_journal(&path).unwrap();
        assert_eq!(done.len(), 1);
        let block = done.get("iv:0:0:10").unwrap();
        assert_eq!(block.records.len(), 1);
        assert_eq!(block.records[0].counts, [3, 5, 9, 25]);
    }
}
