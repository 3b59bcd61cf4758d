//! Fixtures shared by the benchmarks.

use ddgraph::records::{load_records, RecordId, RecordSource};
use ddgraph::{close_under_inverses, GeneratorSet, GroupSpec};

/// Group and closed generator set of an embedded record.
pub fn record(delta: u64, diameter: u32) -> (GroupSpec, GeneratorSet) {
    let id = RecordId { delta, diameter };
    let entry = load_records(RecordSource::Embedded)
        .expect("embedded records parse")
        .into_iter()
        .find(|r| r.id() == id)
        .unwrap_or_else(|| panic!("no record {id}"));
    let set = close_under_inverses(&entry.spec, &entry.generators).expect("record generators are valid");
    (entry.spec, set)
}
