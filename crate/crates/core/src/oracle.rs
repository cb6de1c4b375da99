//! Brute-force verifiers, independent of the closed-form code paths.
//!
//! Module powers are computed from explicit presentation matrices: the
//! relation matrix of `M^{⊗n}` is assembled by iterated tensor products,
//! symmetrising or antisymmetrising relations are appended, and the result
//! is read off with the Smith normal form. Orbits are enumerated through the
//! full group closure rather than generator search, and snapshot homology
//! uses ordinary linear algebra over the field.

use num_bigint::BigUint;

use crate::complex::{snapshot_complex, Filtration};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::smith_normal_form;
use crate::matrix::SparsePolyMatrix;
use crate::poly::Polynomial;
use crate::power::{ModuleDescriptor, PermGroup};

/// The cokernel of `rels : R^c -> R^gens`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    pub gens: usize,
    pub rels: SparsePolyMatrix,
}

impl PresentationMatrix {
    /// Free rank `gens - rank`, torsion the non-unit invariant factors.
    pub fn descriptor(&self) -> ModuleDescriptor {
        let snf = smith_normal_form(&self.rels);
        let field = self.rels.field();
        ModuleDescriptor::from_summands(
            field,
            BigUint::from(self.gens - snf.rank),
            snf.divisors.into_iter().map(|d| (d, BigUint::from(1u32))),
        )
    }
}

/// Generators `e_1..e_{r+s}`; relation `a_i e_{r+i}` per torsion summand.
pub fn present(m: &ModuleDescriptor) -> Result<PresentationMatrix> {
    let r = m.free_rank_u64()? as usize;
    let torsion = m.torsion_list()?;
    let gens = r + torsion.len();
    let rels = SparsePolyMatrix::from_triples(
        m.field(),
        gens,
        torsion.len(),
        torsion.into_iter().enumerate().map(|(i, a)| (r + i, i, a)),
    );
    Ok(PresentationMatrix { gens, rels })
}

/// Presentation of `coker A ⊗ coker B`: generator `(i, j)` sits at
/// `i * p_b + j`, relations are `[A ⊗ I | I ⊗ B]`.
pub fn oracle_tensor(a: &PresentationMatrix, b: &PresentationMatrix) -> PresentationMatrix {
    let (pa, pb) = (a.gens, b.gens);
    let field = a.rels.field();
    let mut triples = Vec::new();
    let mut col = 0;
    for c in 0..a.rels.cols() {
        let entries: Vec<(usize, &Polynomial)> =
            a.rels.iter().filter(|&(_, cc, _)| cc == c).map(|(r, _, v)| (r, v)).collect();
        for j in 0..pb {
            triples.extend(entries.iter().map(|&(i, v)| (i * pb + j, col, v.clone())));
            col += 1;
        }
    }
    for d in 0..b.rels.cols() {
        let entries: Vec<(usize, &Polynomial)> =
            b.rels.iter().filter(|&(_, cc, _)| cc == d).map(|(r, _, v)| (r, v)).collect();
        for i in 0..pa {
            triples.extend(entries.iter().map(|&(j, v)| (i * pb + j, col, v.clone())));
            col += 1;
        }
    }
    PresentationMatrix {
        gens: pa * pb,
        rels: SparsePolyMatrix::from_triples(field, pa * pb, col, triples),
    }
}

/// Which quotient of `M^{⊗n}` to compute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Tensor,
    /// Coinvariants under a permutation group acting on tensor positions.
    Group(PermGroup),
    Exterior,
}

/// Basis tensors `e_{f(0)} ⊗ … ⊗ e_{f(n-1)}`, indexed with position 0 as
/// the most significant base-`p` digit.
struct Tuples {
    p: usize,
    n: usize,
}

impl Tuples {
    fn decode(&self, mut code: usize) -> Vec<usize> {
        let mut f = vec![0; self.n];
        for d in f.iter_mut().rev() {
            *d = code % self.p;
            code /= self.p;
        }
        f
    }

    fn encode(&self, f: &[usize]) -> usize {
        f.iter().fold(0, |acc, &d| acc * self.p + d)
    }
}

/// `T^n M`, `T^n_G M` or `Λ^n M` from an explicit presentation. Fails when
/// the number of basis tensors `p^n` exceeds `cap`.
pub fn oracle_power(m: &ModuleDescriptor, n: usize, mode: &OracleMode, cap: u64) -> Result<ModuleDescriptor> {
    if let OracleMode::Group(g) = mode {
        if g.n() != n {
            return Err(Error::ArityMismatch {
                group: g.n(),
                power: n,
            });
        }
    }
    let base = present(m)?;
    let p = base.gens;
    let total = BigUint::from(p).pow(n as u32);
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            needed: total.to_string(),
            cap,
        });
    }
    let field = m.field();
    let mut pres = PresentationMatrix {
        gens: 1,
        rels: SparsePolyMatrix::zeros(field, 1, 0),
    };
    for _ in 0..n {
        pres = oracle_tensor(&pres, &base);
    }
    let tuples = Tuples { p, n };
    let one = Polynomial::one(field);
    let mut extra: Vec<Vec<(usize, Polynomial)>> = Vec::new();
    match mode {
        OracleMode::Tensor => {}
        OracleMode::Group(g) => {
            for code in 0..pres.gens {
                let f = tuples.decode(code);
                for pi in g.generators() {
                    let moved: Vec<usize> = pi.iter().map(|&j| f[j]).collect();
                    let target = tuples.encode(&moved);
                    if target != code {
                        extra.push(vec![(target, one.clone()), (code, one.neg())]);
                    }
                }
            }
        }
        OracleMode::Exterior => {
            for code in 0..pres.gens {
                let f = tuples.decode(code);
                let mut sorted = f.clone();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    extra.push(vec![(code, one.clone())]);
                    continue;
                }
                for i in 0..n {
                    for j in i + 1..n {
                        let mut swapped = f.clone();
                        swapped.swap(i, j);
                        let other = tuples.encode(&swapped);
                        if code < other {
                            extra.push(vec![(code, one.clone()), (other, one.clone())]);
                        }
                    }
                }
            }
        }
    }
    if !extra.is_empty() {
        let c0 = pres.rels.cols();
        let mut triples: Vec<(usize, usize, Polynomial)> =
            pres.rels.iter().map(|(r, c, v)| (r, c, v.clone())).collect();
        for (k, col) in extra.into_iter().enumerate() {
            triples.extend(col.into_iter().map(|(r, v)| (r, c0 + k, v)));
        }
        let cols = triples.iter().map(|t| t.1 + 1).max().unwrap_or(0).max(c0);
        pres.rels = SparsePolyMatrix::from_triples(field, pres.gens, cols, triples);
    }
    Ok(pres.descriptor())
}

/// Orbits of `G` on `[s]^[n]`, each a sorted list of functions, found by
/// applying every element of the materialised group. Orbits are listed by
/// their lexicographically smallest function.
pub fn enumerate_orbits(g: &PermGroup, s: usize, cap: u64) -> Result<Vec<Vec<Vec<usize>>>> {
    let n = g.n();
    let total = BigUint::from(s).pow(n as u32);
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            needed: total.to_string(),
            cap,
        });
    }
    let total = usize::try_from(total).expect("bounded by cap");
    let elements = g.elements(cap)?;
    let tuples = Tuples { p: s.max(1), n };
    let mut assigned = vec![false; total];
    let mut orbits = Vec::new();
    for code in 0..total {
        if assigned[code] {
            continue;
        }
        let f = tuples.decode(code);
        let mut orbit: Vec<Vec<usize>> = elements
            .iter()
            .map(|pi| pi.iter().map(|&j| f[j]).collect())
            .collect();
        orbit.sort();
        orbit.dedup();
        for h in &orbit {
            assigned[tuples.encode(h)] = true;
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// `dim_K H_n(Δ_k; K)` by Gaussian elimination on the snapshot at step `k`.
pub fn snapshot_homology(f: &Filtration, n: usize, k: usize, field: Field) -> Result<usize> {
    let snap = snapshot_complex(f, k, field)?;
    let rank_of = |d: usize| {
        d.checked_sub(1)
            .and_then(|i| snap.boundaries.get(i))
            .map_or(0, |m| m.rank())
    };
    Ok(snap.rank(n) - rank_of(n) - rank_of(n + 1))
}
