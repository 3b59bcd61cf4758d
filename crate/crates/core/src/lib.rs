//! Cayley graphs of semidirect products of cyclic groups, built implicitly
//! and measured by breadth-first search, for the degree/diameter problem.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: arithmetic in `m x_a n`, `m x_s n^2` and `[m x_a n]^2`.
//! * [`cayley`]: inverse-closed generator sets, BFS from the identity, and
//!   edge-list / DIMACS export.
//! * [`search`]: the Moore bound, candidate group enumeration and seeded
//!   random generator-set search.
//! * [`records`]: the embedded table of published record graphs and the
//!   harness that recomputes every claim in it.

pub mod cayley;
mod error;
pub mod group;
mod numtheory;
pub mod records;
pub mod search;

pub use cayley::{
    all_pairs_diameter_oracle, bfs_stats, close_under_inverses, export_graph, neighbors, CayleyStats,
    ExportFormat, GeneratorSet,
};
pub use error::{Error, Result};
pub use group::{Element, Family, GroupSpec, RawGroupSpec};
pub use records::{load_records, verify_all, verify_record, RecordEntry, RecordSource, VerificationReport};
pub use search::{moore_bound, random_search, sample_generator_set, SearchConfig, SearchHit};
