//! Persistent (co)homology of filtered complexes as graded modules over
//! `K[t]`, and closed-form tensor, symmetric, exterior and group powers of
//! the resulting persistence modules.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`], [`poly`], [`matrix`]: exact arithmetic in `K[t]`.
//! * [`complex`]: filtrations, the graded persistence complex, Rips
//!   ingestion and per-step snapshots.
//! * [`homology`]: Smith normal form, graded column reduction and the
//!   resulting decompositions.
//! * [`power`]: module descriptors and the power formulas.
//! * [`oracle`]: brute-force verifiers used by tests and `verify`.
//! * [`verify`]: randomized sweeps comparing the formulas with the oracle.
//! * [`cli`]: the `perspow` command line.

pub mod cli;
pub mod complex;
pub mod error;
pub mod exec;
pub mod field;
pub mod homology;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod power;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use poly::{Monomial, Polynomial};
