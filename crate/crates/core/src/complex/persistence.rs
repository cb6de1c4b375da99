use std::borrow::Cow;
use std::collections::BTreeMap;

use crate::complex::filtration::Filtration;
use crate::error::{Error, ParseErrorKind, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{ScalarMatrix, SparsePolyMatrix};
use crate::poly::Polynomial;

/// Chain complex of free graded `K[t]`-modules.
///
/// Chain group `n` has one generator per entry of `degrees(n)`; the boundary
/// `∂_n` is a `|C_{n-1}| x |C_n|` matrix whose nonzero entries are monomials
/// `c t^(deg col - deg row)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistenceComplex {
    field: Field,
    degrees: Vec<Vec<usize>>,
    boundaries: Vec<SparsePolyMatrix>,
    labels: Option<Vec<Vec<String>>>,
}

impl PersistenceComplex {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Highest chain degree with generators, `None` for the empty complex.
    pub fn top_degree(&self) -> Option<usize> {
        self.degrees.len().checked_sub(1)
    }

    pub fn rank(&self, n: usize) -> usize {
        self.degrees(n).len()
    }

    /// Generator degrees of `C_n`.
    pub fn degrees(&self, n: usize) -> &[usize] {
        self.degrees.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn labels(&self, n: usize) -> Option<&[String]> {
        self.labels
            .as_ref()
            .and_then(|l| l.get(n))
            .map(Vec::as_slice)
    }

    /// `∂_n : C_n -> C_{n-1}`; zero matrices outside the stored range.
    pub fn boundary(&self, n: usize) -> Cow<'_, SparsePolyMatrix> {
        match n.checked_sub(1).and_then(|i| self.boundaries.get(i)) {
            Some(m) => Cow::Borrowed(m),
            None => Cow::Owned(SparsePolyMatrix::zeros(
                self.field,
                n.checked_sub(1).map_or(0, |m| self.rank(m)),
                self.rank(n),
            )),
        }
    }

    /// Largest generator degree, i.e. the last filtration step in use.
    pub fn max_degree(&self) -> usize {
        self.degrees.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Checks that every entry of `∂_n` is a monomial of the graded exponent.
    pub fn check_homogeneity(&self, n: usize) -> Result<()> {
        let b = self.boundary(n);
        let rows = n.checked_sub(1).map(|m| self.degrees(m)).unwrap_or(&[]);
        let cols = self.degrees(n);
        for (r, c, v) in b.iter() {
            let ok = match v.as_monomial() {
                Some(m) => cols[c] >= rows[r] && m.exponent as usize == cols[c] - rows[r],
                None => false,
            };
            if !ok {
                return Err(Error::Homogeneity {
                    degree: n,
                    row: r,
                    col: c,
                });
            }
        }
        Ok(())
    }

    /// `∂_n` with `t := 1`.
    pub fn plain_boundary(&self, n: usize) -> ScalarMatrix {
        self.boundary(n).eval_at_one()
    }
}

/// Builds the persistence complex of a filtration: simplex `σ` has degree
/// `birth(σ)` and `∂σ = Σ (-1)^i t^(birth σ - birth τ) τ` where `τ` drops
/// the `i`-th vertex of `σ` (0-based, in vertex order).
pub fn build_persistence_complex(f: &Filtration, field: Field) -> PersistenceComplex {
    let top = f.dim();
    let ndeg = top.map_or(0, |d| d + 1);
    let mut degrees = Vec::with_capacity(ndeg);
    let mut labels = Vec::with_capacity(ndeg);
    for n in 0..ndeg {
        degrees.push(f.simplices(n).iter().map(|s| s.birth).collect());
        labels.push(f.simplices(n).iter().map(|s| f.simplex_label(s)).collect());
    }
    let mut boundaries = Vec::new();
    for n in 1..ndeg {
        let rows = f.simplices(n - 1).len();
        let cols = f.simplices(n);
        let mut m = SparsePolyMatrix::zeros(field, rows, cols.len());
        for (j, s) in cols.iter().enumerate() {
            for (i, face) in s.facets() {
                let (_, row) = f.position(&face).expect("validated filtration is closed");
                let tau_birth = f.simplices(n - 1)[row].birth;
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let e = (s.birth - tau_birth) as u32;
                m.set(row, j, Polynomial::monomial(field.from_i64(sign), e));
            }
        }
        boundaries.push(m);
    }
    PersistenceComplex {
        field,
        degrees,
        boundaries,
        labels: Some(labels),
    }
}

/// Lifts a filtered chain complex over `K` to `K[t]`: each nonzero
/// coefficient `[b', b]` becomes `[b', b] t^(deg b' - deg b)`.
///
/// `plain_boundaries[n - 1]` is `∂_n` with shape `|B_{n-1}| x |B_n|`.
pub fn load_filtered_complex(
    field: Field,
    degrees: Vec<Vec<usize>>,
    plain_boundaries: Vec<ScalarMatrix>,
) -> Result<PersistenceComplex> {
    if plain_boundaries.len() + 1 > degrees.len().max(1) {
        return Err(Error::InvalidComplex(format!(
            "{} boundary matrices for {} chain groups",
            plain_boundaries.len(),
            degrees.len()
        )));
    }
    let rank = |n: usize| degrees.get(n).map_or(0, Vec::len);
    let mut boundaries = Vec::with_capacity(degrees.len().saturating_sub(1));
    for n in 1..degrees.len() {
        let plain = match plain_boundaries.get(n - 1) {
            Some(m) => m.clone(),
            None => ScalarMatrix::zeros(field, rank(n - 1), rank(n)),
        };
        if plain.field() != field {
            return Err(Error::InvalidComplex(format!("boundary {n} is over the wrong field")));
        }
        if plain.rows() != rank(n - 1) || plain.cols() != rank(n) {
            return Err(Error::InvalidComplex(format!(
                "boundary {n} has shape {}x{}, expected {}x{}",
                plain.rows(),
                plain.cols(),
                rank(n - 1),
                rank(n)
            )));
        }
        let mut m = SparsePolyMatrix::zeros(field, plain.rows(), plain.cols());
        for r in 0..plain.rows() {
            for c in 0..plain.cols() {
                let v = plain.get(r, c);
                if v.is_zero() {
                    continue;
                }
                let (hi, lo) = (degrees[n][c], degrees[n - 1][r]);
                if hi < lo {
                    return Err(Error::InvalidComplex(format!(
                        "negative exponent in boundary {n} at ({r}, {c}): degree {hi} maps to degree {lo}"
                    )));
                }
                m.set(r, c, Polynomial::monomial(v.clone(), (hi - lo) as u32));
            }
        }
        boundaries.push(m);
    }
    for n in 1..boundaries.len() {
        if !boundaries[n - 1].mul(&boundaries[n]).is_zero() {
            return Err(Error::InvalidComplex(format!(
                "boundary {} composed with boundary {} is nonzero",
                n,
                n + 1
            )));
        }
    }
    Ok(PersistenceComplex {
        field,
        degrees,
        boundaries,
        labels: None,
    })
}

/// Parses the generic filtered complex format:
///
/// ```text
/// gens 0: 0 0 1
/// gens 1: 1 2
/// boundary 1:
/// 0 0 -1
/// 1 0 1
/// ```
pub fn parse_filtered_complex(text: &str, field: Field) -> Result<PersistenceComplex> {
    // header line and (source line, row, col, coefficient) entries per degree
    type Block = (usize, Vec<(usize, usize, usize, Scalar)>);
    let mut gens: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut blocks: BTreeMap<usize, Block> = BTreeMap::new();
    let mut current: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |msg: String| Error::Parse {
            line: line_no,
            kind: ParseErrorKind::Syntax(msg),
        };
        if let Some(rest) = line.strip_prefix("gens") {
            let (n, list) = rest
                .split_once(':')
                .ok_or_else(|| syntax("expected `gens n: d0 d1 ...`".into()))?;
            let n: usize = n.trim().parse().map_err(|_| syntax(format!("bad degree `{}`", n.trim())))?;
            let degs = list
                .split_whitespace()
                .map(|d| d.parse::<usize>().map_err(|_| syntax(format!("bad generator degree `{d}`"))))
                .collect::<Result<Vec<_>>>()?;
            if gens.insert(n, degs).is_some() {
                return Err(syntax(format!("generators of degree {n} given twice")));
            }
            current = None;
        } else if let Some(rest) = line.strip_prefix("boundary") {
            let n = rest
                .trim()
                .strip_suffix(':')
                .ok_or_else(|| syntax("expected `boundary n:`".into()))?;
            let n: usize = n.trim().parse().map_err(|_| syntax(format!("bad degree `{}`", n.trim())))?;
            if n == 0 {
                return Err(syntax("boundary degrees start at 1".into()));
            }
            if blocks.insert(n, (line_no, Vec::new())).is_some() {
                return Err(syntax(format!("boundary {n} given twice")));
            }
            current = Some(n);
        } else {
            let n = current.ok_or_else(|| syntax("entry outside a boundary block".into()))?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(syntax("expected `row col value`".into()));
            }
            let r: usize = toks[0].parse().map_err(|_| syntax(format!("bad row `{}`", toks[0])))?;
            let c: usize = toks[1].parse().map_err(|_| syntax(format!("bad column `{}`", toks[1])))?;
            let v = field
                .parse_scalar(toks[2])
                .map_err(|_| syntax(format!("bad value `{}`", toks[2])))?;
            blocks.get_mut(&n).unwrap().1.push((line_no, r, c, v));
        }
    }
    let top = gens.keys().next_back().copied();
    let ndeg = top.map_or(0, |t| t + 1);
    let mut degrees = Vec::with_capacity(ndeg);
    for n in 0..ndeg {
        degrees.push(gens.remove(&n).unwrap_or_default());
    }
    let rank = |n: usize| degrees.get(n).map_or(0, Vec::len);
    let mut plain = Vec::new();
    for n in 1..ndeg {
        plain.push(ScalarMatrix::zeros(field, rank(n - 1), rank(n)));
    }
    for (n, (header_line, entries)) in blocks {
        if n >= ndeg {
            if entries.is_empty() {
                continue;
            }
            return Err(Error::Parse {
                line: header_line,
                kind: ParseErrorKind::Syntax(format!("boundary {n} has no generators in degree {n}")),
            });
        }
        let m = &mut plain[n - 1];
        for (line, r, c, v) in entries {
            if r >= m.rows() || c >= m.cols() {
                return Err(Error::Parse {
                    line,
                    kind: ParseErrorKind::Syntax(format!(
                        "entry ({r}, {c}) outside {}x{}",
                        m.rows(),
                        m.cols()
                    )),
                });
            }
            m.set(r, c, v);
        }
    }
    load_filtered_complex(field, degrees, plain)
}
