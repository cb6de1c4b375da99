//! Graded fast path: standard persistence column reduction over `K`.
//!
//! Homogeneous boundary entries are monomials whose exponent is fixed by the
//! generator degrees, so the matrix over `K` (`t := 1`) together with the
//! degrees carries all the information. Generators are processed in
//! `(degree, input position)` order.

use std::collections::{BTreeMap, HashMap};

use crate::complex::PersistenceComplex;
use crate::error::Result;
use crate::field::Scalar;

/// One homology class of `H_n`: a cycle generator of `C_n` and, when it is
/// killed, the generator of `C_{n+1}` whose boundary kills it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistencePair {
    pub birth_index: usize,
    pub birth: usize,
    pub death_index: Option<usize>,
    pub death: Option<usize>,
}

impl PersistencePair {
    pub fn lifetime(&self) -> Option<usize> {
        self.death.map(|d| d - self.birth)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub degree: usize,
    pub pairs: Vec<PersistencePair>,
}

/// Result of reducing one boundary matrix: `low[j]` is the pivot row of
/// reduced column `j` (both as generator indices), `None` for zero columns.
struct Reduced {
    low: Vec<Option<usize>>,
}

fn filtration_order(degrees: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..degrees.len()).collect();
    order.sort_by_key(|&i| (degrees[i], i));
    order
}

fn reduce_boundary(c: &PersistenceComplex, n: usize) -> Reduced {
    let ncols = c.rank(n);
    if n == 0 {
        return Reduced { low: vec![None; ncols] };
    }
    let row_order = filtration_order(c.degrees(n - 1));
    let mut row_rank = vec![0; row_order.len()];
    for (pos, &r) in row_order.iter().enumerate() {
        row_rank[r] = pos;
    }
    let plain = c.boundary(n);
    let mut columns: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); ncols];
    for (r, col, v) in plain.iter() {
        columns[col].insert(row_rank[r], v.eval_at_one());
    }

    let mut low = vec![None; ncols];
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for &j in &filtration_order(c.degrees(n)) {
        let mut col = std::mem::take(&mut columns[j]);
        while let Some((&pivot, coeff)) = col.iter().next_back() {
            let Some(&k) = owner.get(&pivot) else {
                break;
            };
            let other = &columns[k];
            let factor = coeff.div(&other[&pivot]);
            for (&r, v) in other {
                let updated = col
                    .get(&r)
                    .cloned()
                    .unwrap_or_else(|| c.field().zero())
                    .sub(&factor.mul(v));
                if updated.is_zero() {
                    col.remove(&r);
                } else {
                    col.insert(r, updated);
                }
            }
        }
        if let Some((&pivot, _)) = col.iter().next_back() {
            owner.insert(pivot, j);
            low[j] = Some(row_order[pivot]);
        }
        columns[j] = col;
    }
    Reduced { low }
}

/// Pairs the cycles of `C_n` with the generators of `C_{n+1}` that kill them.
///
/// Returns one entry per cycle generator in filtration order, including
/// zero-length pairs.
pub fn graded_reduce(c: &PersistenceComplex, n: usize) -> Result<Pairing> {
    c.check_homogeneity(n)?;
    c.check_homogeneity(n + 1)?;
    let cycles = reduce_boundary(c, n);
    let boundaries = reduce_boundary(c, n + 1);
    let mut killer: HashMap<usize, usize> = HashMap::new();
    for (j, low) in boundaries.low.iter().enumerate() {
        if let Some(r) = low {
            killer.insert(*r, j);
        }
    }
    let degs = c.degrees(n);
    let up = c.degrees(n + 1);
    let pairs = filtration_order(degs)
        .into_iter()
        .filter(|&i| cycles.low[i].is_none())
        .map(|i| {
            let death_index = killer.get(&i).copied();
            PersistencePair {
                birth_index: i,
                birth: degs[i],
                death_index,
                death: death_index.map(|j| up[j]),
            }
        })
        .collect();
    Ok(Pairing { degree: n, pairs })
}
