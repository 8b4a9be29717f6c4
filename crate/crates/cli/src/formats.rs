//! Census file formats.
//!
//! The record file is one tab-separated line per accepted curve,
//! `q1_hex q2_hex q3_hex N1 N2 N3 N4`, with 4-hex-digit form ids in the
//! frozen bit packing. The sidecar summary is a line-oriented key-value
//! format; timing lines live below an `# informational` marker so the body
//! above it is byte-identical across runs.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use gonality_core::census::{CaseSummary, CensusCase, CensusSummary};
use gonality_core::curvekit::CurveRecord;
use gonality_core::groebner::SmoothCurveVerdict;
use gonality_core::quadform::QuadraticForm;

/// Verdict implied by census acceptance: a smooth degree-8 genus-5 curve.
pub fn accepted_verdict() -> SmoothCurveVerdict {
    SmoothCurveVerdict { proj_dim: 1, smooth: true, degree: Some(8), arithmetic_genus: Some(5) }
}

pub fn record_line(r: &CurveRecord) -> String {
    format!(
        "{:04x}\t{:04x}\t{:04x}\t{}\t{}\t{}\t{}",
        r.q1.coeffs(),
        r.q2.coeffs(),
        r.q3.coeffs(),
        r.n(1),
        r.n(2),
        r.n(3),
        r.n(4)
    )
}

pub fn parse_record_line(line: &str) -> Result<CurveRecord> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 7 {
        bail!("record line has {} fields, expected 7", fields.len());
    }
    let id = |s: &str| -> Result<QuadraticForm> {
        let c = u16::from_str_radix(s, 16).context("bad form id")?;
        QuadraticForm::new(5, c).map_err(|e| anyhow::anyhow!("{}", e))
    };
    let mut counts = [0u64; 4];
    for (slot, s) in counts.iter_mut().zip(&fields[3..]) {
        *slot = s.parse().context("bad point count")?;
    }
    Ok(CurveRecord {
        q1: id(fields[0])?,
        q2: id(fields[1])?,
        q3: id(fields[2])?,
        counts,
        smooth_verdict: accepted_verdict(),
    })
}

pub fn write_records(path: &std::path::Path, records: &[CurveRecord]) -> Result<()> {
    let mut body = String::with_capacity(records.len() * 32);
    for r in records {
        body.push_str(&record_line(r));
        body.push('\n');
    }
    std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))
}

pub fn read_records(path: &std::path::Path) -> Result<Vec<CurveRecord>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading census file {}", path.display()))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_record_line)
        .collect()
}

fn case_key(case: CensusCase) -> &'static str {
    match case {
        CensusCase::TypeIII => "iii",
        CensusCase::TypeIV => "iv",
    }
}

/// The comparable body of the summary, then the informational tail.
pub fn render_summary(summary: &CensusSummary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "schema\tgonality-census-summary-v1");
    for c in &summary.cases {
        let key = case_key(c.case);
        let _ = writeln!(s, "case\t{}", key);
        let _ = writeln!(s, "{}.q1\t{}", key, c.q1_rendered);
        let _ = writeln!(s, "{}.order\t{}", key, c.group_order);
        let _ = writeln!(s, "{}.a_count\t{}", key, c.a_count);
        let _ = writeln!(s, "{}.b_count\t{}", key, c.b_count);
        let _ = writeln!(s, "{}.curves\t{}", key, c.curves);
        for (i, h) in c.histogram.iter().enumerate() {
            let label = if i == 4 { "4plus".to_string() } else { i.to_string() };
            let _ = writeln!(s, "{}.points{}\t{}", key, label, h);
        }
    }
    let _ = writeln!(s, "flagged\t{}", summary.flagged);
    let _ = writeln!(s, "# informational");
    for c in &summary.cases {
        let _ = writeln!(s, "{}.wall_ms\t{}", case_key(c.case), c.wall_ms);
    }
    s
}

/// Human-readable tables of the summary (search counts and the point-count
/// histogram).
pub fn render_summary_human(summary: &CensusSummary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<24} {:>8} {:>6} {:>8} {:>8} {:>10}", "Q1", "#O(Q1)", "#A", "#B", "curves", "wall");
    for c in &summary.cases {
        let _ = writeln!(
            s,
            "{:<24} {:>8} {:>6} {:>8} {:>8} {:>9}s",
            c.q1_rendered,
            c.group_order,
            c.a_count,
            c.b_count,
            c.curves,
            c.wall_ms / 1000
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(
        s,
        "{:<24} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "curves by #C(F_2)", "0", "1", "2", "3", ">=4"
    );
    for c in &summary.cases {
        let _ = writeln!(
            s,
            "{:<24} {:>8} {:>8} {:>8} {:>8} {:>8}",
            c.q1_rendered,
            c.histogram[0],
            c.histogram[1],
            c.histogram[2],
            c.histogram[3],
            c.histogram[4]
        );
    }
    if summary.flagged > 0 {
        let _ = writeln!(s, "flagged triples needing review: {}", summary.flagged);
    }
    s
}

/// Rebuild a summary (sans timing) from a parsed summary file; used to show
/// tables for an existing census without rescanning.
pub fn parse_summary(text: &str) -> Result<CensusSummary> {
    let mut cases: Vec<CaseSummary> = Vec::new();
    let mut flagged = 0u64;
    for line in text.lines() {
        if line.starts_with('#') {
            break;
        }
        let Some((key, value)) = line.split_once('\t') else { continue };
        if key == "case" {
            let case = match value {
                "iii" => CensusCase::TypeIII,
                "iv" => CensusCase::TypeIV,
                other => bail!("unknown case {}", other),
            };
            cases.push(CaseSummary {
                case,
                q1_rendered: String::new(),
                group_order: 0,
                a_count: 0,
                b_count: 0,
                curves: 0,
                histogram: [0; 5],
                wall_ms: 0,
            });
            continue;
        }
        if key == "flagged" {
            flagged = value.parse().context("bad flagged count")?;
            continue;
        }
        let Some((prefix, field)) = key.split_once('.') else { continue };
        let Some(c) = cases.iter_mut().rev().find(|c| case_key(c.case) == prefix) else {
            continue;
        };
        match field {
            "q1" => c.q1_rendered = value.to_string(),
            "order" => c.group_order = value.parse()?,
            "a_count" => c.a_count = value.parse()?,
            "b_count" => c.b_count = value.parse()?,
            "curves" => c.curves = value.parse()?,
            "points0" => c.histogram[0] = value.parse()?,
            "points1" => c.histogram[1] = value.parse()?,
            "points2" => c.histogram[2] = value.parse()?,
            "points3" => c.histogram[3] = value.parse()?,
            "points4plus" => c.histogram[4] = value.parse()?,
            _ => {}
        }
    }
    Ok(CensusSummary { cases, flagged })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_line_round_trip() {
        let r = CurveRecord {
            q1: QuadraticForm::new(5, 0x4402).unwrap(),
            q2: QuadraticForm::new(5, 0x0292).unwrap(),
            q3: QuadraticForm::new(5, 0x0e90).unwrap(),
            counts: [3, 5, 9, 25],
            smooth_verdict: accepted_verdict(),
        };
        let line = record_line(&r);
        assert_eq!(line, "4402\t0292\t0e90\t3\t5\t9\t25");
        let back = parse_record_line(&line).unwrap();
        assert_eq!(back.q1, r.q1);
        assert_eq!(back.counts, r.counts);
        assert!(parse_record_line("zz").is_err());
    }

    #[test]
    fn summary_round_trip_and_informational_split() {
        let summary = CensusSummary {
            cases: vec![CaseSummary {
                case: CensusCase::TypeIV,
                q1_rendered: "vw + xy + z^2".to_string(),
                group_order: 720,
                a_count: 10,
                b_count: 13888,
                curves: 8296,
                histogram: [0, 0, 0, 8296, 0],
                wall_ms: 1234,
            }],
            flagged: 0,
        };
        let text = render_summary(&summary);
        // Timing sits after the marker; the body before it is stable.
        let body = text.split("# informational").next().unwrap();
        assert!(body.contains("iv.curves\t8296"));
        assert!(!body.contains("wall_ms"));
        let parsed = parse_summary(&text).unwrap();
        assert_eq!(parsed.cases[0].curves, 8296);
        assert_eq!(parsed.cases[0].histogram, [0, 0, 0, 8296, 0]);
        assert_eq!(parsed.cases[0].wall_ms, 0);
    }
}
