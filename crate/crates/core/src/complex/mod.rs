//! Filtrations, graded persistence complexes, Rips ingestion and per-step
//! snapshots.

mod filtration;
mod persistence;
mod rips;
mod snapshot;

pub use filtration::{Filtration, FiltrationBuilder, Simplex};
pub use persistence::{
    build_persistence_complex, load_filtered_complex, parse_filtered_complex, PersistenceComplex,
};
pub use rips::{parse_points, rips_filtration};
pub use snapshot::{snapshot_complex, SnapshotComplex};
