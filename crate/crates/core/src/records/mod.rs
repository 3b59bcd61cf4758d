//! The table of published record Cayley graphs and a harness that
//! recomputes every claim made about them.
//!
//! Each entry states a group, the generators as printed (one per inverse
//! pair, involutions included once), the printed inverses (blank for
//! involutions, stored as `null`), the printed generator orders, and the
//! claimed degree, diameter and order. [`verify_record`] checks all of it.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cayley::{bfs_stats, close_under_inverses, CayleyStats};
use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec, RawGroupSpec};
use crate::search::moore_bound;

/// The embedded dataset, verbatim.
pub const EMBEDDED_RECORDS: &str = include_str!("../../data/records.json");

/// Orders above this run one at a time in [`verify_all`].
pub const LARGE_ORDER: u64 = 1_000_000;

/// Rows whose published values are known not to match recomputation.
/// Each entry is `((delta, diameter), note)`.
pub const ERRATA: &[((u64, u32), &str)] = &[];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RecordId {
    pub delta: u64,
    pub diameter: u32,
}

impl fmt::Display for RecordId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.delta, self.diameter)
    }
}

impl std::str::FromStr for RecordId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameter(format!("expected DELTA,DIAMETER, got {s:?}"));
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t.split_once(',').ok_or_else(bad)?;
        Ok(RecordId {
            delta: a.trim().parse().map_err(|_| bad())?,
            diameter: b.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordEntry {
    pub delta: u64,
    pub diameter: u32,
    pub order: u64,
    pub spec: GroupSpec,
    pub generators: Vec<Element>,
    pub inverses: Vec<Option<Element>>,
    pub orders: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    delta: u64,
    diameter: u32,
    order: u64,
    spec: RawGroupSpec,
    generators: Vec<Element>,
    inverses: Vec<Option<Element>>,
    orders: Vec<u64>,
}

impl RecordEntry {
    pub fn id(&self) -> RecordId {
        RecordId { delta: self.delta, diameter: self.diameter }
    }

    fn from_raw(raw: RawRecord) -> Result<Self> {
        let id = RecordId { delta: raw.delta, diameter: raw.diameter };
        let invalid = |source: Error| Error::SpecInvalid { record: id.to_string(), source: Box::new(source) };
        let spec = raw.spec.validate().map_err(invalid)?;
        for g in raw.generators.iter().chain(raw.inverses.iter().flatten()) {
            spec.check(g).map_err(invalid)?;
        }
        let structural = |reason: String| Error::InvalidRecord { record: id.to_string(), reason };
        let k = raw.generators.len();
        if raw.inverses.len() != k || raw.orders.len() != k {
            return Err(structural(format!(
                "{k} generators but {} inverses and {} orders",
                raw.inverses.len(),
                raw.orders.len()
            )));
        }
        if let Some(i) = (0..k).find(|&i| raw.inverses[i].is_none() && raw.orders[i] != 2) {
            return Err(structural(format!(
                "generator {} has no listed inverse but order {} rather than 2",
                raw.generators[i], raw.orders[i]
            )));
        }
        Ok(RecordEntry {
            delta: raw.delta,
            diameter: raw.diameter,
            order: raw.order,
            spec,
            generators: raw.generators,
            inverses: raw.inverses,
            orders: raw.orders,
        })
    }
}

pub enum RecordSource<'a> {
    Embedded,
    Json(&'a str),
}

/// Parses and validates a record document (a JSON array of records).
pub fn load_records(source: RecordSource<'_>) -> Result<Vec<RecordEntry>> {
    let text = match source {
        RecordSource::Embedded => EMBEDDED_RECORDS,
        RecordSource::Json(text) => text,
    };
    let raw: Vec<RawRecord> = serde_json::from_str(text)?;
    raw.into_iter().map(RecordEntry::from_raw).collect()
}

/// Outcome of a single claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub claimed: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Mismatch { details: Vec<String> },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub record: RecordId,
    pub group: String,
    pub claimed_order: u64,
    pub checks: Vec<Check>,
    pub stats: Option<CayleyStats>,
    /// Suspicious but non-failing observations.
    pub warnings: Vec<String>,
    pub status: Status,
    /// Wall-clock time; left out of JSON so output stays reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_mismatch(&self) -> bool {
        matches!(self.status, Status::Mismatch { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, Status::Skipped { .. })
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, claimed: impl fmt::Display, computed: impl fmt::Display) {
        let (claimed, computed) = (claimed.to_string(), computed.to_string());
        self.0.push(Check { name: name.into(), passed: claimed == computed, claimed, computed });
    }

    fn fail(&mut self, name: impl Into<String>, claimed: impl fmt::Display, error: impl fmt::Display) {
        self.0.push(Check {
            name: name.into(),
            passed: false,
            claimed: claimed.to_string(),
            computed: format!("error: {error}"),
        });
    }
}

/// Recomputes every claim of one record: group order, degree of the
/// inverse closure, each listed inverse, each listed generator order,
/// connectivity, diameter, and the Moore bound. Groups larger than
/// `max_vertices` are skipped, never passed.
pub fn verify_record(entry: &RecordEntry, max_vertices: u64) -> VerificationReport {
    let start = Instant::now();
    let spec = &entry.spec;
    let mut report = VerificationReport {
        record: entry.id(),
        group: spec.to_string(),
        claimed_order: entry.order,
        checks: Vec::new(),
        stats: None,
        warnings: Vec::new(),
        status: Status::Pass,
        elapsed: Duration::ZERO,
    };
    if spec.order() > max_vertices {
        report.status = Status::Skipped {
            reason: format!("group order {} exceeds the budget of {max_vertices}", spec.order()),
        };
        return report;
    }

    let mut checks = Checks(Vec::new());
    checks.push("order", entry.order, spec.order());

    let set = match close_under_inverses(spec, &entry.generators) {
        Ok(set) => {
            checks.push("degree", entry.delta, set.degree());
            Some(set)
        }
        Err(e) => {
            checks.fail("degree", entry.delta, e);
            None
        }
    };

    for (g, inv) in entry.generators.iter().zip(&entry.inverses) {
        let computed = spec.inv_unchecked(g);
        match inv {
            Some(claimed) => checks.push(format!("inverse of {g}"), claimed, computed),
            None => checks.push(format!("{g} is an involution"), g, computed),
        }
    }
    for (g, &claimed) in entry.generators.iter().zip(&entry.orders) {
        let computed = spec.element_order(g).expect("generators are range-checked at load");
        checks.push(format!("order of {g}"), claimed, computed);
        if spec.order() % claimed != 0 {
            report
                .warnings
                .push(format!("listed order {claimed} of {g} does not divide |G| = {}", spec.order()));
        }
    }

    if let Some(set) = set {
        match bfs_stats(spec, &set, max_vertices) {
            Ok(stats) => {
                checks.push("connected", true, stats.connected);
                let diameter = stats.diameter.map_or("unreachable".to_string(), |d| d.to_string());
                checks.push("diameter", entry.diameter, diameter);
                report.stats = Some(stats);
            }
            Err(e) => checks.fail("diameter", entry.diameter, e),
        }
    }

    match moore_bound(entry.delta, entry.diameter) {
        Ok(bound) => checks.0.push(Check {
            name: "moore bound".into(),
            passed: entry.order <= bound,
            claimed: format!("<= {bound}"),
            computed: entry.order.to_string(),
        }),
        Err(e) => checks.fail("moore bound", "finite", e),
    }

    let details: Vec<String> = checks
        .0
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: claimed {}, computed {}", c.name, c.claimed, c.computed))
        .collect();
    if !details.is_empty() {
        report.status = Status::Mismatch { details };
    }
    report.checks = checks.0;
    report.elapsed = start.elapsed();
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub mismatched: usize,
    pub skipped: usize,
}

impl VerifySummary {
    pub fn has_mismatch(&self) -> bool {
        self.mismatched > 0
    }
}

/// Verifies every record within the budget on up to `threads` workers.
///
/// Groups above [`LARGE_ORDER`] are verified one at a time after the rest
/// so that at most one large distance array is alive. Reports come back
/// sorted by `(delta, diameter)`.
pub fn verify_all(records: &[RecordEntry], max_vertices: u64, threads: usize) -> VerifySummary {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("failed to start verification workers");
    let (large, small): (Vec<&RecordEntry>, Vec<&RecordEntry>) =
        records.iter().partition(|r| r.spec.order() > LARGE_ORDER && r.spec.order() <= max_vertices);

    let mut reports: Vec<VerificationReport> =
        pool.install(|| small.par_iter().map(|r| verify_record(r, max_vertices)).collect());
    reports.extend(large.iter().map(|r| verify_record(r, max_vertices)));
    reports.sort_by_key(|r| r.record);

    let count = |f: fn(&VerificationReport) -> bool| reports.iter().filter(|r| f(r)).count();
    VerifySummary {
        passed: count(VerificationReport::passed),
        mismatched: count(VerificationReport::is_mismatch),
        skipped: count(VerificationReport::is_skipped),
        reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn embedded() -> Vec<RecordEntry> {
        load_records(RecordSource::Embedded).unwrap()
    }

    fn find(records: &[RecordEntry], delta: u64, diameter: u32) -> RecordEntry {
        records.iter().find(|r| r.delta == delta && r.diameter == diameter).cloned().unwrap()
    }

    #[test]
    fn embedded_dataset_shape() {
        let records = embedded();
        assert_eq!(records.len(), 51);
        let r = find(&records, 4, 7);
        assert_eq!(r.spec, GroupSpec::cyclic(15, 77, 4).unwrap());
        assert_eq!(r.generators, vec![Element::from([6, 2]), Element::from([10, 9])]);
        let r = find(&records, 10, 5);
        assert_eq!(r.spec, GroupSpec::square(48, 16, [[1, 15], [7, 8]]).unwrap());

        let mut ids: Vec<RecordId> = records.iter().map(RecordEntry::id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), records.len());
        for r in &records {
            assert_eq!(r.spec.order(), r.order, "{}", r.id());
        }
    }

    #[test]
    fn empty_and_malformed_documents() {
        assert!(load_records(RecordSource::Json("[]")).unwrap().is_empty());
        let err = load_records(RecordSource::Json("[\n  {\"delta\": 4,\n")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");

        let bad_spec = r#"[{"delta":4,"diameter":7,"order":1155,
            "spec":{"family":"cyclic","m":3,"n":6,"a":2},
            "generators":[[1,1]],"inverses":[[2,2]],"orders":[3]}]"#;
        match load_records(RecordSource::Json(bad_spec)).unwrap_err() {
            Error::SpecInvalid { record, .. } => assert_eq!(record, "(4,7)"),
            e => panic!("unexpected {e}"),
        }

        let misaligned = r#"[{"delta":4,"diameter":7,"order":1155,
            "spec":{"family":"cyclic","m":15,"n":77,"a":4},
            "generators":[[6,2]],"inverses":[],"orders":[35]}]"#;
        assert!(matches!(load_records(RecordSource::Json(misaligned)), Err(Error::InvalidRecord { .. })));
    }

    #[test]
    fn dataset_round_trip() {
        let records = embedded();
        let text = serde_json::to_string(&records).unwrap();
        assert_eq!(load_records(RecordSource::Json(&text)).unwrap(), records);
    }

    #[test]
    fn verify_four_seven() {
        let report = verify_record(&find(&embedded(), 4, 7), u64::MAX);
        assert_eq!(report.status, Status::Pass, "{:#?}", report.checks);
        let stats = report.stats.unwrap();
        assert_eq!((stats.order, stats.degree, stats.diameter), (1155, 4, Some(7)));
    }

    #[test]
    fn verify_seven_five() {
        let report = verify_record(&find(&embedded(), 7, 5), u64::MAX);
        assert!(report.passed(), "{:#?}", report.status);
        assert_eq!(report.stats.unwrap().degree, 7);
    }

    #[test]
    fn perturbed_diameter_is_a_mismatch() {
        let mut entry = find(&embedded(), 4, 7);
        entry.diameter -= 1;
        let report = verify_record(&entry, u64::MAX);
        match &report.status {
            Status::Mismatch { details } => {
                assert!(details.iter().any(|d| d.starts_with("diameter")), "{details:?}");
            }
            s => panic!("expected mismatch, got {s:?}"),
        }
    }

    #[test]
    fn perturbed_inverse_is_a_mismatch() {
        let mut entry = find(&embedded(), 8, 3);
        entry.inverses[0] = Some(Element::from([11, 8]));
        assert!(verify_record(&entry, u64::MAX).is_mismatch());
    }

    #[test]
    fn over_budget_is_skipped() {
        let report = verify_record(&find(&embedded(), 4, 7), 1000);
        assert!(report.is_skipped());
        assert!(report.checks.is_empty());
    }

    #[test]
    fn zero_budget_skips_everything() {
        let records = embedded();
        let summary = verify_all(&records, 0, 2);
        assert_eq!(summary.skipped, records.len());
        assert_eq!(summary.mismatched, 0);
    }

    #[test]
    fn record_id_parsing() {
        let id: RecordId = "7,5".parse().unwrap();
        assert_eq!(id, RecordId { delta: 7, diameter: 5 });
        assert_eq!("(4, 7)".parse::<RecordId>().unwrap().to_string(), "(4,7)");
        assert!("7".parse::<RecordId>().is_err());
    }
}
