//! Smith normal form over `K[t]` by sparse elimination.
//!
//! Each step picks the nonzero entry of smallest degree (first in row-major
//! order on ties), clears its row and column with Euclidean divisions, and
//! repeats on a remainder whenever a division is inexact. The resulting
//! diagonal is turned into a divisibility chain with `(gcd, lcm)` swaps.

use std::collections::{BTreeMap, BTreeSet};

use crate::field::Field;
use crate::matrix::SparsePolyMatrix;
use crate::poly::Polynomial;

/// Invariant factors `d_1 | d_2 | …`, all monic, and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub divisors: Vec<Polynomial>,
    pub rank: usize,
}

impl SnfResult {
    /// Divisors that are not units.
    pub fn non_units(&self) -> impl Iterator<Item = &Polynomial> {
        self.divisors.iter().filter(|d| !d.is_unit())
    }
}

struct Work {
    field: Field,
    cols: Vec<BTreeMap<usize, Polynomial>>,
    rows: Vec<BTreeSet<usize>>,
}

impl Work {
    fn new(m: &SparsePolyMatrix) -> Work {
        let mut w = Work {
            field: m.field(),
            cols: vec![BTreeMap::new(); m.cols()],
            rows: vec![BTreeSet::new(); m.rows()],
        };
        for (r, c, v) in m.iter() {
            w.cols[c].insert(r, v.clone());
            w.rows[r].insert(c);
        }
        w
    }

    fn get(&self, r: usize, c: usize) -> Option<&Polynomial> {
        self.cols[c].get(&r)
    }

    fn set(&mut self, r: usize, c: usize, v: Polynomial) {
        if v.is_zero() {
            self.cols[c].remove(&r);
            self.rows[r].remove(&c);
        } else {
            self.cols[c].insert(r, v);
            self.rows[r].insert(c);
        }
    }

    /// Smallest-degree entry, row-major on ties.
    fn global_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(u32, usize, usize)> = None;
        for (r, cols) in self.rows.iter().enumerate() {
            for &c in cols {
                let d = self.cols[c][&r].degree().unwrap();
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, r, c));
                    if d == 0 {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    /// Smallest-degree entry within row `pr` and column `pc`.
    fn local_pivot(&self, pr: usize, pc: usize) -> (usize, usize) {
        let mut cands: Vec<(u32, usize, usize)> = Vec::new();
        for &c in &self.rows[pr] {
            cands.push((self.cols[c][&pr].degree().unwrap(), pr, c));
        }
        for (&r, v) in &self.cols[pc] {
            cands.push((v.degree().unwrap(), r, pc));
        }
        let (_, r, c) = cands.into_iter().min().expect("pivot row/column nonempty");
        (r, c)
    }

    /// Row `target` -= q * row `source`.
    fn row_axpy(&mut self, target: usize, source: usize, q: &Polynomial) {
        let src_cols: Vec<usize> = self.rows[source].iter().copied().collect();
        for c in src_cols {
            let delta = self.cols[c][&source].mul(q);
            let cur = self
                .get(target, c)
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(self.field));
            self.set(target, c, cur.sub(&delta));
        }
    }

    /// Column `target` -= q * column `source`.
    fn col_axpy(&mut self, target: usize, source: usize, q: &Polynomial) {
        let src: Vec<(usize, Polynomial)> = self.cols[source]
            .iter()
            .map(|(&r, v)| (r, v.mul(q)))
            .collect();
        for (r, delta) in src {
            let cur = self
                .get(r, target)
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(self.field));
            self.set(r, target, cur.sub(&delta));
        }
    }

    /// Clears the pivot's row and column, moving the pivot to a remainder
    /// whenever a division is inexact. Returns the final pivot position and
    /// value.
    fn eliminate(&mut self, mut pr: usize, mut pc: usize) -> (usize, usize, Polynomial) {
        loop {
            let p = self.get(pr, pc).cloned().expect("pivot is nonzero");
            let mut clean = true;

            let others: Vec<usize> = self.cols[pc].keys().copied().filter(|&r| r != pr).collect();
            for r in others {
                let (q, rem) = self.cols[pc][&r].div_rem(&p).expect("pivot nonzero");
                if !q.is_zero() {
                    self.row_axpy(r, pr, &q);
                }
                clean &= rem.is_zero();
            }
            let others: Vec<usize> = self.rows[pr].iter().copied().filter(|&c| c != pc).collect();
            for c in others {
                let (q, rem) = self.cols[c][&pr].div_rem(&p).expect("pivot nonzero");
                if !q.is_zero() {
                    self.col_axpy(c, pc, &q);
                }
                clean &= rem.is_zero();
            }

            if clean && self.rows[pr].len() == 1 && self.cols[pc].len() == 1 {
                return (pr, pc, p);
            }
            (pr, pc) = self.local_pivot(pr, pc);
        }
    }

    fn remove(&mut self, r: usize, c: usize) {
        self.cols[c].remove(&r);
        self.rows[r].remove(&c);
    }
}

/// Invariant factors of a matrix over `K[t]`.
pub fn smith_normal_form(m: &SparsePolyMatrix) -> SnfResult {
    let mut w = Work::new(m);
    let mut diagonal = Vec::new();
    while let Some((r, c)) = w.global_pivot() {
        let (r, c, p) = w.eliminate(r, c);
        w.remove(r, c);
        diagonal.push(p.monic());
    }
    let rank = diagonal.len();
    // (a, b) -> (gcd, lcm) turns any diagonal into a divisibility chain
    for i in 0..rank {
        if diagonal[i].is_one() {
            continue;
        }
        for j in i + 1..rank {
            if diagonal[i].divides(&diagonal[j]) {
                continue;
            }
            let g = diagonal[i].gcd(&diagonal[j]);
            let l = diagonal[i].lcm(&diagonal[j]);
            diagonal[i] = g;
            diagonal[j] = l;
        }
    }
    diagonal.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    SnfResult {
        divisors: diagonal,
        rank,
    }
}
