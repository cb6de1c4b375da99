use crate::complex::filtration::Filtration;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::ScalarMatrix;

/// The ordinary chain complex of `Δ_k` over `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnapshotComplex {
    /// Per dimension, positions (within the filtration's simplex list) of
    /// the simplices present at step `k`.
    pub bases: Vec<Vec<usize>>,
    /// `boundaries[n - 1]` is `∂_n`.
    pub boundaries: Vec<ScalarMatrix>,
}

impl SnapshotComplex {
    pub fn rank(&self, n: usize) -> usize {
        self.bases.get(n).map_or(0, Vec::len)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.bases
            .iter()
            .enumerate()
            .map(|(n, b)| if n % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }
}

/// Restricts the filtration to simplices born at or before step `k`, with
/// the same sign convention as the persistence complex.
pub fn snapshot_complex(f: &Filtration, k: usize, field: Field) -> Result<SnapshotComplex> {
    if k > f.last_step() {
        return Err(Error::StepOutOfRange {
            step: k,
            last: f.last_step(),
        });
    }
    let ndim = f.dim().map_or(0, |d| d + 1);
    let mut bases: Vec<Vec<usize>> = (0..ndim)
        .map(|n| {
            f.simplices(n)
                .iter()
                .enumerate()
                .filter(|(_, s)| s.birth <= k)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    while bases.last().is_some_and(Vec::is_empty) {
        bases.pop();
    }
    let mut boundaries = Vec::new();
    for n in 1..bases.len() {
        let row_of = |pos: usize| bases[n - 1].iter().position(|&p| p == pos);
        let mut m = ScalarMatrix::zeros(field, bases[n - 1].len(), bases[n].len());
        for (j, &pos) in bases[n].iter().enumerate() {
            let s = &f.simplices(n)[pos];
            for (i, face) in s.facets() {
                let (_, fpos) = f.position(&face).expect("closed");
                let r = row_of(fpos).expect("faces are born no later");
                m.set(r, j, field.from_i64(if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        boundaries.push(m);
    }
    Ok(SnapshotComplex { bases, boundaries })
}
