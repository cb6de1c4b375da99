use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::PersistenceModule;
use crate::poly::Polynomial;

/// A finitely generated module `R^r ⊕ ⊕ (R/a_i)^{m_i}` over `R = K[t]`.
///
/// Torsion is stored as invariant factors `d_1 | d_2 | …` (monic, degree at
/// least one) with multiplicities, so structural equality is module
/// isomorphism. Monomial torsion is already in this form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleDescriptor {
    field: Field,
    free_rank: BigUint,
    torsion: Vec<(Polynomial, BigUint)>,
}

impl ModuleDescriptor {
    /// `R^free_rank ⊕ R/a_1 ⊕ … ⊕ R/a_s`. Each `a_i` must be a nonzero
    /// non-unit; it is made monic.
    pub fn new(field: Field, free_rank: u64, torsion: Vec<Polynomial>) -> Result<ModuleDescriptor> {
        for a in &torsion {
            if a.field() != field {
                return Err(Error::InvalidModule(format!("{a} is over the wrong field")));
            }
            if a.is_zero() || a.is_unit() {
                return Err(Error::InvalidModule(format!(
                    "torsion generator {a} must be a nonzero non-unit"
                )));
            }
        }
        Ok(ModuleDescriptor::from_summands(
            field,
            BigUint::from(free_rank),
            torsion.into_iter().map(|a| (a, BigUint::from(1u32))),
        ))
    }

    /// Monomial torsion `t^l` for each listed exponent.
    pub fn monomial(field: Field, free_rank: u64, exponents: &[u32]) -> ModuleDescriptor {
        ModuleDescriptor::new(
            field,
            free_rank,
            exponents.iter().map(|&e| Polynomial::t_pow(field, e)).collect(),
        )
        .expect("exponents are positive")
    }

    pub fn zero(field: Field) -> ModuleDescriptor {
        ModuleDescriptor::free(field, 0)
    }

    pub fn free(field: Field, r: u64) -> ModuleDescriptor {
        ModuleDescriptor {
            field,
            free_rank: BigUint::from(r),
            torsion: Vec::new(),
        }
    }

    /// Sums cyclic summands `R/(a)` with multiplicities, normalising: `a = 0`
    /// counts as free, units vanish, everything else is made monic.
    pub fn from_summands(
        field: Field,
        free_rank: BigUint,
        summands: impl IntoIterator<Item = (Polynomial, BigUint)>,
    ) -> ModuleDescriptor {
        let mut acc = Summands::new(field);
        acc.free += free_rank;
        for (a, k) in summands {
            acc.add(&a, k);
        }
        acc.finish()
    }

    /// Drops births: each free summand becomes `R`, each bar of lifetime
    /// `l` becomes `R/t^l`.
    pub fn from_persistence_module(m: &PersistenceModule, field: Field) -> ModuleDescriptor {
        let mut acc = Summands::new(field);
        acc.free += BigUint::from(m.free().len());
        for b in m.torsion() {
            acc.add(&Polynomial::t_pow(field, b.lifetime as u32), BigUint::from(1u32));
        }
        acc.finish()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn free_rank(&self) -> &BigUint {
        &self.free_rank
    }

    /// Distinct torsion generators with multiplicities, in canonical order.
    pub fn torsion(&self) -> &[(Polynomial, BigUint)] {
        &self.torsion
    }

    /// Number of torsion summands `s`.
    pub fn torsion_count(&self) -> BigUint {
        self.torsion.iter().map(|(_, k)| k).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank.is_zero() && self.torsion.is_empty()
    }

    /// Free rank as a machine integer, for enumeration.
    pub fn free_rank_u64(&self) -> Result<u64> {
        self.free_rank.to_u64().ok_or_else(|| Error::CapExceeded {
            needed: self.free_rank.to_string(),
            cap: u64::MAX,
        })
    }

    /// `a_1, …, a_s` with repeats, for enumeration.
    pub fn torsion_list(&self) -> Result<Vec<Polynomial>> {
        let s = self.torsion_count();
        let s = s.to_usize().ok_or_else(|| Error::CapExceeded {
            needed: s.to_string(),
            cap: usize::MAX as u64,
        })?;
        let mut out = Vec::with_capacity(s);
        for (a, k) in &self.torsion {
            let k = k.to_usize().expect("bounded by the total");
            out.extend(std::iter::repeat_n(a, k).cloned());
        }
        Ok(out)
    }

    /// Parses `r=2; t^2, t^3`. Either part may be omitted.
    pub fn parse(field: Field, text: &str) -> Result<ModuleDescriptor> {
        let mut free = 0u64;
        let mut torsion = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if let Some(r) = part.strip_prefix("r=").or_else(|| part.strip_prefix("r =")) {
                free = r
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidModule(format!("bad free rank `{}`", r.trim())))?;
                continue;
            }
            for g in part.split(',') {
                let g = g.trim();
                if g.is_empty() {
                    return Err(Error::InvalidModule(format!("empty generator in `{part}`")));
                }
                torsion.push(Polynomial::parse(field, g)?);
            }
        }
        ModuleDescriptor::new(field, free, torsion)
    }

    pub fn json_view(&self) -> DescriptorJson {
        DescriptorJson {
            free: self.free_rank.to_string(),
            torsion: self
                .torsion
                .iter()
                .map(|(a, k)| TorsionJson {
                    gen: a.to_string(),
                    mult: k.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescriptorJson {
    pub free: String,
    pub torsion: Vec<TorsionJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionJson {
    pub gen: String,
    pub mult: String,
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = BigUint::from(1u32);
        let mut parts = Vec::new();
        if !self.free_rank.is_zero() {
            parts.push(if self.free_rank == one {
                "R".to_string()
            } else {
                format!("R^{}", self.free_rank)
            });
        }
        for (a, k) in self.torsion.iter().rev() {
            let base = if a.is_monomial() {
                format!("R/{a}")
            } else {
                format!("R/({a})")
            };
            parts.push(if *k == one { base } else { format!("({base})^{k}") });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Accumulates cyclic summands into a canonical descriptor.
#[derive(Clone, Debug)]
pub(crate) struct Summands {
    field: Field,
    pub(crate) free: BigUint,
    torsion: BTreeMap<Polynomial, BigUint>,
}

impl Summands {
    pub(crate) fn new(field: Field) -> Summands {
        Summands {
            field,
            free: BigUint::zero(),
            torsion: BTreeMap::new(),
        }
    }

    /// Adds `(R/(a))^k`.
    pub(crate) fn add(&mut self, a: &Polynomial, k: BigUint) {
        if k.is_zero() || a.is_unit() {
            return;
        }
        if a.is_zero() {
            self.free += k;
            return;
        }
        *self.torsion.entry(a.monic()).or_default() += k;
    }

    pub(crate) fn finish(self) -> ModuleDescriptor {
        let torsion = if self.torsion.keys().all(Polynomial::is_monomial) {
            self.torsion.into_iter().collect()
        } else {
            invariant_factors(self.field, &self.torsion)
        };
        ModuleDescriptor {
            field: self.field,
            free_rank: self.free,
            torsion,
        }
    }
}

/// Pairwise coprime monic polynomials whose products of powers give every
/// input, by repeatedly splitting `x, y` into `g, x/g, y/g` with
/// `g = gcd(x, y)`.
fn coprime_basis<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = polys.into_iter().cloned().collect();
    'outer: loop {
        basis.retain(|p| !p.is_unit());
        basis.sort();
        basis.dedup();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let g = basis[i].gcd(&basis[j]);
                if g.is_unit() {
                    continue;
                }
                let x = basis[i].div_rem(&g).expect("g is nonzero").0;
                let y = basis[j].div_rem(&g).expect("g is nonzero").0;
                basis.swap_remove(j);
                basis.swap_remove(i);
                basis.extend([g, x.monic(), y.monic()]);
                continue 'outer;
            }
        }
        return basis;
    }
}

/// Rewrites `⊕ (R/a)^m` as invariant factors `d_1 | d_2 | …` with
/// multiplicities. The top factors take the highest power of every
/// coprime basis element, the next ones the second highest, and so on.
fn invariant_factors(field: Field, torsion: &BTreeMap<Polynomial, BigUint>) -> Vec<(Polynomial, BigUint)> {
    let basis = coprime_basis(torsion.keys());
    // per basis element: (exponent, multiplicity), highest exponent first
    let mut columns: Vec<Vec<(u32, BigUint)>> = basis
        .iter()
        .map(|q| {
            let mut col: BTreeMap<u32, BigUint> = BTreeMap::new();
            for (a, m) in torsion {
                let mut rest = a.clone();
                let mut e = 0;
                loop {
                    let (quot, rem) = rest.div_rem(q).expect("basis is nonzero");
                    if !rem.is_zero() {
                        break;
                    }
                    rest = quot;
                    e += 1;
                }
                if e > 0 {
                    *col.entry(e).or_default() += m;
                }
            }
            col.into_iter().rev().collect()
        })
        .collect();
    let mut cursor = vec![0usize; basis.len()];
    let mut out = Vec::new();
    loop {
        let active: Vec<usize> = (0..basis.len()).filter(|&j| cursor[j] < columns[j].len()).collect();
        let Some(run) = active.iter().map(|&j| columns[j][cursor[j]].1.clone()).min() else {
            break;
        };
        let mut d = Polynomial::one(field);
        for &j in &active {
            let (e, m) = &mut columns[j][cursor[j]];
            d = d.mul(&basis[j].pow(*e));
            *m -= &run;
            if m.is_zero() {
                cursor[j] += 1;
            }
        }
        out.push((d, run));
    }
    out.sort();
    out
}
