//! Persistent homology and cohomology of a [`PersistenceComplex`].
//!
//! Two independent routes are provided. The Smith normal form route reads
//! isomorphism types off the invariant factors of the boundary matrices
//! over `K[t]`; the graded route runs column reduction over `K` and also
//! yields birth degrees. [`persistent_homology`] and
//! [`persistent_cohomology`] run both and fail on disagreement.

mod module;
mod reduce;
mod snf;

pub use module::{Bar, IsoType, ModuleJson, PersistenceModule};
pub use reduce::{graded_reduce, Pairing, PersistencePair};
pub use snf::{smith_normal_form, SnfResult};

use crate::complex::PersistenceComplex;
use crate::error::{Error, Result};
use crate::exec::Strategy;

/// Which route(s) to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Graded reduction cross-checked against the Smith normal form.
    #[default]
    Both,
    /// Graded reduction only.
    Graded,
}

fn lifetimes(snf: &SnfResult) -> Result<Vec<usize>> {
    snf.non_units()
        .map(|d| match d.as_monomial() {
            Some(m) => Ok(m.exponent as usize),
            None => Err(Error::InvalidComplex(format!(
                "invariant factor {d} is not a power of t"
            ))),
        })
        .collect()
}

/// Isomorphism type of `H_n` from the invariant factors of `∂_n`, `∂_{n+1}`.
pub fn homology_iso_type_snf(c: &PersistenceComplex, n: usize) -> Result<IsoType> {
    let d_n = smith_normal_form(&c.boundary(n));
    let d_up = smith_normal_form(&c.boundary(n + 1));
    let free = c.rank(n) - d_n.rank - d_up.rank;
    Ok(IsoType::new(free, lifetimes(&d_up)?))
}

/// Isomorphism type of `H^n` from the transposed boundaries: the cochain
/// complex is `δ^{n-1} = ∂_n^T`, `δ^n = ∂_{n+1}^T`.
pub fn cohomology_iso_type_snf(c: &PersistenceComplex, n: usize) -> Result<IsoType> {
    let delta_prev = smith_normal_form(&c.boundary(n).transpose());
    let delta = smith_normal_form(&c.boundary(n + 1).transpose());
    let free = c.rank(n) - delta.rank - delta_prev.rank;
    Ok(IsoType::new(free, lifetimes(&delta_prev)?))
}

/// `H_n` from the graded route alone.
pub fn persistent_homology_graded(c: &PersistenceComplex, n: usize) -> Result<PersistenceModule> {
    let pairing = graded_reduce(c, n)?;
    let mut free = Vec::new();
    let mut torsion = Vec::new();
    for p in pairing.pairs {
        match p.lifetime() {
            None => free.push(p.birth),
            Some(0) => {}
            Some(l) => torsion.push(Bar {
                birth: p.birth,
                lifetime: l,
            }),
        }
    }
    Ok(PersistenceModule::new(free, torsion))
}

/// `H^n` from the graded route alone.
///
/// Free summands are the essential classes of `H_n` at their births; each
/// torsion summand comes from a finite bar of `H_{n-1}` and keeps its birth
/// and lifetime.
pub fn persistent_cohomology_graded(c: &PersistenceComplex, n: usize) -> Result<PersistenceModule> {
    let free = persistent_homology_graded(c, n)?.free().to_vec();
    let torsion = match n.checked_sub(1) {
        Some(m) => persistent_homology_graded(c, m)?.torsion().to_vec(),
        None => Vec::new(),
    };
    Ok(PersistenceModule::new(free, torsion))
}

/// Persistent homology `H_n`, with births from the graded route and the
/// isomorphism type confirmed by the Smith normal form.
pub fn persistent_homology(c: &PersistenceComplex, n: usize) -> Result<PersistenceModule> {
    let m = persistent_homology_graded(c, n)?;
    if m.iso_type() != homology_iso_type_snf(c, n)? {
        return Err(Error::PathMismatch(n));
    }
    Ok(m)
}

/// Persistent cohomology `H^n`, cross-checked like [`persistent_homology`].
pub fn persistent_cohomology(c: &PersistenceComplex, n: usize) -> Result<PersistenceModule> {
    let m = persistent_cohomology_graded(c, n)?;
    if m.iso_type() != cohomology_iso_type_snf(c, n)? {
        return Err(Error::PathMismatch(n));
    }
    Ok(m)
}

/// Number of summands of `m` alive at step `k`.
pub fn betti_at(m: &PersistenceModule, k: usize) -> usize {
    m.betti_at(k)
}

/// (Co)homology in every degree `0..=top`, degrees computed concurrently
/// under [`Strategy::Parallel`].
pub fn all_degrees(
    c: &PersistenceComplex,
    cohomology: bool,
    method: Method,
    strategy: Strategy,
) -> Result<Vec<PersistenceModule>> {
    let degrees: Vec<usize> = (0..=c.top_degree().unwrap_or(0)).collect();
    strategy
        .map(&degrees, |&n| match (cohomology, method) {
            (false, Method::Both) => persistent_homology(c, n),
            (false, Method::Graded) => persistent_homology_graded(c, n),
            (true, Method::Both) => persistent_cohomology(c, n),
            (true, Method::Graded) => persistent_cohomology_graded(c, n),
        })
        .into_iter()
        .collect()
}
