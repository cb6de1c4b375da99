//! Sparse matrices over `K[t]` and plain matrices over `K`.

use std::collections::BTreeMap;

use crate::field::{Field, Scalar};
use crate::poly::Polynomial;

/// Sparse `rows x cols` matrix with polynomial entries; zeros are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Polynomial>,
}

impl SparsePolyMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> SparsePolyMatrix {
        SparsePolyMatrix {
            field,
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    /// Builds from `(row, col, entry)` triples; later triples overwrite.
    pub fn from_triples(
        field: Field,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, Polynomial)>,
    ) -> SparsePolyMatrix {
        let mut m = SparsePolyMatrix::zeros(field, rows, cols);
        for (r, c, v) in triples {
            m.set(r, c, v);
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn set(&mut self, row: usize, col: usize, value: Polynomial) {
        assert!(row < self.rows && col < self.cols, "index ({row}, {col}) out of bounds");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Polynomial> {
        self.entries.get(&(row, col))
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> SparsePolyMatrix {
        SparsePolyMatrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparsePolyMatrix) -> SparsePolyMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &Polynomial)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    let prod = a.mul(b);
                    let slot = acc
                        .entry((i, j))
                        .or_insert_with(|| Polynomial::zero(self.field));
                    *slot = slot.add(&prod);
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        SparsePolyMatrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            entries: acc,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Substitutes `t := 1` entrywise.
    pub fn eval_at_one(&self) -> ScalarMatrix {
        let mut m = ScalarMatrix::zeros(self.field, self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            m.set(r, c, v.eval_at_one());
        }
        m
    }

    /// Reorders rows and columns: entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> SparsePolyMatrix {
        SparsePolyMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((row_perm[r], col_perm[c]), v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Polynomial>> {
        let mut d = vec![vec![Polynomial::zero(self.field); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            d[r][c] = v.clone();
        }
        d
    }
}

/// Dense matrix over a field `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> ScalarMatrix {
        ScalarMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = ScalarMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Rank by Gaussian elimination to row echelon form.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(pivot) = (rank..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            if pivot != rank {
                for c in 0..a.cols {
                    a.data.swap(pivot * a.cols + c, rank * a.cols + c);
                }
            }
            let inv = a.get(rank, col).inv();
            for r in rank + 1..a.rows {
                let f = a.get(r, col).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for c in col..a.cols {
                    let v = a.get(r, c).sub(&f.mul(a.get(rank, c)));
                    a.set(r, c, v);
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        rank
    }
}
