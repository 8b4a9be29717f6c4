//! The exhaustive scan over nets of quadrics that lists every genus-5 curve
//! over F_2 of gonality at least 5.
//!
//! For each of the two base forms Q1 (the 5-variable norm-tail form of type
//! III and the smooth form of type IV), the scan walks pairs (Q2, Q3) with
//! Q2 from the orbit representatives A(Q1) and Q3 from the full type-filtered
//! set B(Q1), keeps the triples whose whole net stays within the allowed
//! types, and certifies the survivors as smooth dimension-1 intersections.
//! Point counts over F_2 … F_16 are stored with every accepted record.
//!
//! This module is the pure engine: parallel orchestration, resume journals,
//! and the file formats live in the CLI crate.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::curvekit::{count_quadric_triple, CurveError, CurveRecord};
use crate::groebner::{smooth_curve_check, GroebnerError};
use crate::orthgroup::{orbit_representatives, orth_fast, span_discard, OrthError, OrthGroup};
use crate::quadform::{FormType, QuadraticForm, TypeTable};

/// The three-point witness triple in coefficient ids:
/// vw+xy+z², vx+y²+vz+wz, x²+wy+xy+vz+xz.
pub const MAX_POINT_WITNESS: (u16, u16, u16) = (0x4402, 0x1114, 0x0e90);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CensusError {
    /// A derived assertion failed; carries the offending record.
    TheoremViolated(String),
    Curve(CurveError),
    Orth(OrthError),
}

impl From<CurveError> for CensusError {
    fn from(e: CurveError) -> CensusError {
        CensusError::Curve(e)
    }
}

impl From<OrthError> for CensusError {
    fn from(e: OrthError) -> CensusError {
        CensusError::Orth(e)
    }
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::TheoremViolated(m) => write!(f, "derived assertion failed: {}", m),
            CensusError::Curve(e) => write!(f, "{}", e),
            CensusError::Orth(e) => write!(f, "{}", e),
        }
    }
}

/// Which base form a scan pass uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusCase {
    /// Q1 = vw + x² + xy + y²; the net may mix types III and IV.
    TypeIII,
    /// Q1 = vw + xy + z²; the net must be all type IV.
    TypeIV,
}

impl CensusCase {
    pub fn q1(&self) -> QuadraticForm {
        match self {
            CensusCase::TypeIII => {
                QuadraticForm::from_terms(5, &[(0, 1), (2, 2), (2, 3), (3, 3)])
            }
            CensusCase::TypeIV => QuadraticForm::from_terms(5, &[(0, 1), (2, 3), (4, 4)]),
        }
    }

    /// Least allowed type in the net.
    pub fn min_type(&self) -> FormType {
        match self {
            CensusCase::TypeIII => FormType::III,
            CensusCase::TypeIV => FormType::IV,
        }
    }

    pub fn allowed_types(&self) -> &'static [FormType] {
        match self {
            CensusCase::TypeIII => &[FormType::III, FormType::IV],
            CensusCase::TypeIV => &[FormType::IV],
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CensusCase::TypeIII => "iii",
            CensusCase::TypeIV => "iv",
        }
    }
}

/// Orbit representatives A(Q1): the orthogonal group's orbit minima on the
/// allowed-type forms, after discarding Q1 and the spans that leave the
/// allowed set.
pub fn build_a(table: &TypeTable, case: CensusCase) -> Result<Vec<QuadraticForm>, CensusError> {
    let group = orth_fast(&case.q1())?;
    build_a_with_group(table, case, &group)
}

fn build_a_with_group(
    table: &TypeTable,
    case: CensusCase,
    group: &OrthGroup,
) -> Result<Vec<QuadraticForm>, CensusError> {
    let q1 = case.q1();
    let forms: Vec<QuadraticForm> = build_b(table, case)
        .into_iter()
        .map(|c| QuadraticForm::new(5, c).expect("table id"))
        .collect();
    let partition = orbit_representatives(group, &forms)?;
    Ok(span_discard(&q1, partition.representatives(), case.allowed_types()))
}

/// The full allowed-type form list B(Q1), ascending ids.
pub fn build_b(table: &TypeTable, case: CensusCase) -> Vec<u16> {
    let min = case.min_type();
    table.forms_where(|t| t >= min)
}

/// True when Q1, Q2, Q3 are linearly independent and every nonzero member of
/// their span has type at least that of Q1.
pub fn pencil_filter(table: &TypeTable, q1: u16, q2: u16, q3: u16) -> bool {
    let min = table.type_of(q1);
    if min < FormType::I {
        return false;
    }
    // Independence over F_2: all seven combinations nonzero.
    if q2 == 0 || q3 == 0 || q1 == q2 || q3 == q1 || q3 == q2 || q3 == (q1 ^ q2) {
        return false;
    }
    table.type_of(q2) >= min
        && table.type_of(q3) >= min
        && table.type_of(q1 ^ q2) >= min
        && table.type_of(q1 ^ q3) >= min
        && table.type_of(q2 ^ q3) >= min
        && table.type_of(q1 ^ q2 ^ q3) >= min
}

/// Precomputed inputs for one scan pass.
pub struct CaseData {
    pub case: CensusCase,
    pub q1: QuadraticForm,
    pub group_order: u64,
    pub a_set: Vec<QuadraticForm>,
    pub b_set: Vec<u16>,
}

/// Build the groups and A/B sets for a case.
pub fn prepare_case(table: &TypeTable, case: CensusCase) -> Result<CaseData, CensusError> {
    let q1 = case.q1();
    let group = orth_fast(&q1)?;
    let a_set = build_a_with_group(table, case, &group)?;
    let b_set = build_b(table, case);
    Ok(CaseData { case, q1, group_order: group.order() as u64, a_set, b_set })
}

/// One unit of scan work: a Q2 choice and a contiguous B range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanUnit {
    pub case: CensusCase,
    pub q2_index: usize,
    pub b_start: usize,
    pub b_end: usize,
}

/// Partition a case into units of at most `chunk` B-forms each.
pub fn make_units(data: &CaseData, chunk: usize) -> Vec<ScanUnit> {
    let mut units = Vec::new();
    for q2_index in 0..data.a_set.len() {
        let mut start = 0;
        while start < data.b_set.len() {
            let end = (start + chunk).min(data.b_set.len());
            units.push(ScanUnit { case: data.case, q2_index, b_start: start, b_end: end });
            start = end;
        }
    }
    units
}

/// Accepted records and budget-flagged triples from one unit.
#[derive(Debug, Clone, Default)]
pub struct ScanOutput {
    pub records: Vec<CurveRecord>,
    pub flagged: Vec<(u16, u16, u16)>,
}

/// Scan one unit: pencil filter first (pure table lookups), then the
/// Gröbner smoothness verdict, then point counts for accepted triples.
pub fn scan_unit(
    table: &TypeTable,
    data: &CaseData,
    unit: &ScanUnit,
) -> Result<ScanOutput, CensusError> {
    let q1 = data.q1.coeffs();
    let q2 = data.a_set[unit.q2_index].coeffs();
    let mut out = ScanOutput::default();
    for &q3 in &data.b_set[unit.b_start..unit.b_end] {
        if !pencil_filter(table, q1, q2, q3) {
            continue;
        }
        let (f1, f2, f3) = (
            QuadraticForm::new(5, q1).expect("id"),
            QuadraticForm::new(5, q2).expect("id"),
            QuadraticForm::new(5, q3).expect("id"),
        );
        let verdict = match smooth_curve_check(&f1, &f2, &f3) {
            Ok(v) => v,
            Err(GroebnerError::BudgetExceeded) => {
                out.flagged.push((q1, q2, q3));
                continue;
            }
            Err(e) => return Err(CensusError::Curve(CurveError::Groebner(e))),
        };
        if !verdict.is_genus5_curve() {
            continue;
        }
        let mut counts = [0u64; 4];
        for k in 1..=4u8 {
            counts[k as usize - 1] = count_quadric_triple(&f1, &f2, &f3, k)?;
        }
        out.records.push(CurveRecord { q1: f1, q2: f2, q3: f3, counts, smooth_verdict: verdict });
    }
    Ok(out)
}

/// Table rows of the census summary for one base form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseSummary {
    pub case: CensusCase,
    pub q1_rendered: String,
    pub group_order: u64,
    pub a_count: u64,
    pub b_count: u64,
    pub curves: u64,
    /// Curves by rational point count: 0, 1, 2, 3, ≥ 4.
    pub histogram: [u64; 5],
    /// Informational only; never part of comparable output.
    pub wall_ms: u64,
}

/// Summary over both cases plus the flagged-triple count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusSummary {
    pub cases: Vec<CaseSummary>,
    pub flagged: u64,
}

/// Histogram of rational point counts over records: 0, 1, 2, 3, ≥ 4.
pub fn point_histogram(records: &[CurveRecord]) -> [u64; 5] {
    let mut hist = [0u64; 5];
    for r in records {
        let bucket = (r.n(1) as usize).min(4);
        hist[bucket] += 1;
    }
    hist
}

/// Assemble a case summary from its scan results.
pub fn summarize_case(data: &CaseData, records: &[CurveRecord], wall_ms: u64) -> CaseSummary {
    let histogram = point_histogram(records);
    debug_assert_eq!(histogram.iter().sum::<u64>(), records.len() as u64);
    CaseSummary {
        case: data.case,
        q1_rendered: data.q1.render(),
        group_order: data.group_order,
        a_count: data.a_set.len() as u64,
        b_count: data.b_set.len() as u64,
        curves: records.len() as u64,
        histogram,
        wall_ms,
    }
}

/// Sort records by coefficient ids for stable output files.
pub fn sort_records(records: &mut [CurveRecord]) {
    records.sort_unstable_by_key(|r| (r.q1.coeffs(), r.q2.coeffs(), r.q3.coeffs()));
}

/// The consequences the census is required to certify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    /// Maximum rational point count over all records (must be 3).
    pub max_rational_points: u64,
    /// Number of records with no rational point.
    pub pointless_curves: u64,
    /// Every pointless record has a cubic point, so gonality is exactly 5.
    pub pointless_all_have_cubic_points: bool,
    /// The three-point witness triple appears verbatim among the records.
    pub witness_triple_present: bool,
    /// Some record cuts out an isometric image of the witness curve: its net
    /// is an O(Q1)-translate of the witness net. Representative choices move
    /// the basis, so this is the choice-free form of witness membership.
    pub witness_curve_present: bool,
}

/// Sorted ids of the seven nonzero members of span{a, b, c}.
fn span_ids(a: u16, b: u16, c: u16) -> [u16; 7] {
    let mut ids = [a, b, c, a ^ b, a ^ c, b ^ c, a ^ b ^ c];
    ids.sort_unstable();
    ids
}

/// Derive the point-count maximum and the cubic-point property from a full
/// census, aborting with the offending record on any violation.
pub fn derive_theorems(records: &[CurveRecord]) -> Result<TheoremReport, CensusError> {
    // All O(Q1)-translates of the witness net, for the choice-free check.
    let q1 = QuadraticForm::new(5, MAX_POINT_WITNESS.0).expect("id");
    let group = orth_fast(&q1)?;
    let (w1, w2, w3) = MAX_POINT_WITNESS;
    let mut witness_nets: Vec<[u16; 7]> = group
        .elements()
        .iter()
        .map(|g| {
            let f2 = QuadraticForm::new(5, w2).expect("id").substitute(g);
            let f3 = QuadraticForm::new(5, w3).expect("id").substitute(g);
            span_ids(w1, f2.coeffs(), f3.coeffs())
        })
        .collect();
    witness_nets.sort_unstable();
    witness_nets.dedup();

    let mut max_rational_points = 0u64;
    let mut pointless_curves = 0u64;
    let mut witness_triple_present = false;
    let mut witness_curve_present = false;
    for r in records {
        let ids = (r.q1.coeffs(), r.q2.coeffs(), r.q3.coeffs());
        if r.n(1) > 3 {
            return Err(CensusError::TheoremViolated(format!(
                "record {:04x} {:04x} {:04x} has {} rational points",
                ids.0,
                ids.1,
                ids.2,
                r.n(1)
            )));
        }
        max_rational_points = max_rational_points.max(r.n(1));
        if r.n(1) == 0 {
            pointless_curves += 1;
            if r.n(3) == 0 {
                return Err(CensusError::TheoremViolated(format!(
                    "pointless record {:04x} {:04x} {:04x} has no cubic point",
                    ids.0, ids.1, ids.2
                )));
            }
        }
        if ids == MAX_POINT_WITNESS {
            witness_triple_present = true;
        }
        if !witness_curve_present
            && ids.0 == w1
            && witness_nets.binary_search(&span_ids(ids.0, ids.1, ids.2)).is_ok()
        {
            witness_curve_present = true;
        }
    }
    Ok(TheoremReport {
        max_rational_points,
        pointless_curves,
        pointless_all_have_cubic_points: true,
        witness_triple_present,
        witness_curve_present,
    })
}
