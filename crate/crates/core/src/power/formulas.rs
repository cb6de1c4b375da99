//! Closed-form isomorphism types of tensor, symmetric, exterior and group
//! powers of `M = R^r ⊕ R/a_1 ⊕ … ⊕ R/a_s`.
//!
//! Expanding `M^{⊗n}` by choosing a summand per tensor factor, a choice
//! that uses the torsion generators `a_{i_1}, …, a_{i_k}` contributes
//! `R/gcd(a_{i_1}, …, a_{i_k})`, and `R` when `k = 0`. Every formula below
//! counts these choices modulo the relevant symmetry.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::{Limits, Strategy};
use crate::poly::Polynomial;
use crate::power::descriptor::{ModuleDescriptor, Summands};
use crate::power::group::PermGroup;
use crate::power::orbits::{bracelet_count, enumerate_orbits, necklace_count};

/// `C(n, k)` for a big `n`.
pub fn binomial(n: &BigUint, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        let i = BigUint::from(i);
        if &i >= n {
            return BigUint::zero();
        }
        acc = acc * (n - &i) / (i + 1u32);
    }
    acc
}

/// `((n, k)) = C(n + k - 1, k)`, multisets of size `k` from `n` kinds.
pub fn multichoose(n: &BigUint, k: usize) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if n.is_zero() {
        return BigUint::zero();
    }
    binomial(&(n + k - 1u32), k)
}

fn add_gcd(
    map: &mut BTreeMap<Polynomial, BigUint>,
    current: Option<&Polynomial>,
    a: &Polynomial,
    weight: BigUint,
) {
    let g = match current {
        Some(c) => c.gcd(a),
        None => a.clone(),
    };
    *map.entry(g).or_default() += weight;
}

/// `M^{⊗n}`: `R^{r^n}` plus, for each `k ≥ 1`, `C(n, k) r^{n-k}` copies of
/// the gcd distribution of ordered `k`-tuples of torsion generators.
pub fn tensor_power(m: &ModuleDescriptor, n: usize) -> ModuleDescriptor {
    let r = m.free_rank();
    let n_big = BigUint::from(n);
    let mut out = Summands::new(m.field());
    out.free = r.pow(n as u32);
    // tuples[g] = number of ordered k-tuples with gcd g
    let mut tuples: BTreeMap<Polynomial, BigUint> = BTreeMap::new();
    for k in 1..=n {
        let mut next = BTreeMap::new();
        if k == 1 {
            for (a, mult) in m.torsion() {
                add_gcd(&mut next, None, a, mult.clone());
            }
        } else {
            for (g, count) in &tuples {
                for (a, mult) in m.torsion() {
                    add_gcd(&mut next, Some(g), a, count * mult);
                }
            }
        }
        tuples = next;
        let weight = binomial(&n_big, k) * r.pow((n - k) as u32);
        if weight.is_zero() {
            continue;
        }
        for (g, count) in &tuples {
            out.add(g, count * &weight);
        }
    }
    out.finish()
}

/// Multisets (or sets) of torsion generators of each size, grouped by gcd.
/// `choose(m, c)` counts ways to take `c` copies from a block of `m` equal
/// generators.
fn grouped_selections(
    m: &ModuleDescriptor,
    n: usize,
    choose: impl Fn(&BigUint, usize) -> BigUint,
) -> Vec<BTreeMap<Option<Polynomial>, BigUint>> {
    let mut by_size: Vec<BTreeMap<Option<Polynomial>, BigUint>> = vec![BTreeMap::new(); n + 1];
    by_size[0].insert(None, BigUint::one());
    for (a, mult) in m.torsion() {
        let mut next = vec![BTreeMap::new(); n + 1];
        for (size, states) in by_size.iter().enumerate() {
            for (g, count) in states {
                for c in 0..=n - size {
                    let ways = choose(mult, c);
                    if ways.is_zero() {
                        break;
                    }
                    let g2 = if c == 0 {
                        g.clone()
                    } else {
                        Some(g.as_ref().map_or_else(|| a.clone(), |g| g.gcd(a)))
                    };
                    *next[size + c].entry(g2).or_default() += count * ways;
                }
            }
        }
        by_size = next;
    }
    by_size
}

/// `S^n M`: multisets of `n` summands. A multiset using `k` torsion
/// summands appears `((r, n-k))` times.
pub fn symmetric_power(m: &ModuleDescriptor, n: usize) -> ModuleDescriptor {
    let r = m.free_rank();
    let mut out = Summands::new(m.field());
    for (k, states) in grouped_selections(m, n, multichoose).iter().enumerate() {
        let weight = multichoose(r, n - k);
        for (g, count) in states {
            match g {
                None => out.free += count * &weight,
                Some(g) => out.add(g, count * &weight),
            }
        }
    }
    out.finish()
}

/// `Λ^n M`: sets of `n` distinct summands. A set using `k` torsion summands
/// appears `C(r, n-k)` times.
pub fn exterior_power(m: &ModuleDescriptor, n: usize) -> ModuleDescriptor {
    let r = m.free_rank();
    let mut out = Summands::new(m.field());
    for (k, states) in grouped_selections(m, n, binomial).iter().enumerate() {
        let weight = binomial(r, n - k);
        for (g, count) in states {
            match g {
                None => out.free += count * &weight,
                Some(g) => out.add(g, count * &weight),
            }
        }
    }
    out.finish()
}

/// `T^n_G M = (M^{⊗n})_G` for a permutation group `G ≤ S_n`.
///
/// With generators `a_1, …, a_s` followed by `r` zeros, the orbits of `G`
/// on `[s + r]^[n]` index the summands; an orbit with image `I` contributes
/// `R/gcd(a_i : i ∈ I)`, which is `R` when `I` only meets zeros. Fails when
/// `(s + r)^n` exceeds the enumeration cap.
pub fn group_power(
    m: &ModuleDescriptor,
    n: usize,
    g: &PermGroup,
    limits: &Limits,
    strategy: Strategy,
) -> Result<ModuleDescriptor> {
    if g.n() != n {
        return Err(Error::ArityMismatch {
            group: g.n(),
            power: n,
        });
    }
    let gens = m.torsion_list()?;
    let base = gens.len() as u64 + m.free_rank_u64()?;
    let orbits = enumerate_orbits(g, base, limits, strategy)?;
    let mut by_image: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for o in orbits {
        *by_image.entry(o.image).or_default() += 1;
    }
    let zero = Polynomial::zero(m.field());
    let mut out = Summands::new(m.field());
    for (image, count) in by_image {
        let a = image
            .iter()
            .filter_map(|&i| gens.get(i as usize))
            .fold(zero.clone(), |acc, a| acc.gcd(a));
        out.add(&a, BigUint::from(count));
    }
    Ok(out.finish())
}

/// `T^n_{C_n} M`, with the free rank checked against the necklace count.
pub fn cyclic_power(
    m: &ModuleDescriptor,
    n: usize,
    limits: &Limits,
    strategy: Strategy,
) -> Result<ModuleDescriptor> {
    require_positive(n, "cyclic")?;
    let out = group_power(m, n, &PermGroup::cyclic(n), limits, strategy)?;
    let expected = necklace_count(m.free_rank_u64()?, n as u32);
    check_free(&out, &expected, "necklace")?;
    Ok(out)
}

/// `T^n_{D_n} M`, with the free rank checked against the bracelet count.
pub fn dihedral_power(
    m: &ModuleDescriptor,
    n: usize,
    limits: &Limits,
    strategy: Strategy,
) -> Result<ModuleDescriptor> {
    require_positive(n, "dihedral")?;
    let out = group_power(m, n, &PermGroup::dihedral(n), limits, strategy)?;
    let expected = bracelet_count(m.free_rank_u64()?, n as u32);
    check_free(&out, &expected, "bracelet")?;
    Ok(out)
}

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidPermutation(format!("the {what} group needs n >= 1")));
    }
    Ok(())
}

fn check_free(out: &ModuleDescriptor, expected: &BigUint, what: &str) -> Result<()> {
    if out.free_rank() != expected {
        return Err(Error::ClosedFormMismatch(format!(
            "free rank {} but the {what} count is {expected}",
            out.free_rank()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    const Q: Field = Field::Rational;

    fn md(r: u64, exps: &[u32]) -> ModuleDescriptor {
        ModuleDescriptor::monomial(Q, r, exps)
    }

    fn seq() -> (Limits, Strategy) {
        (Limits::default(), Strategy::Sequential)
    }

    #[test]
    fn binomials() {
        let b = |n: u32, k| binomial(&BigUint::from(n), k);
        assert_eq!(b(5, 2), BigUint::from(10u32));
        assert_eq!(b(2, 3), BigUint::zero());
        assert_eq!(b(0, 0), BigUint::one());
        assert_eq!(multichoose(&BigUint::from(3u32), 2), BigUint::from(6u32));
        assert_eq!(multichoose(&BigUint::zero(), 2), BigUint::zero());
        assert_eq!(multichoose(&BigUint::zero(), 0), BigUint::one());
    }

    #[test]
    fn tensor_square_of_free_plus_torsion() {
        // (R ⊕ R/t^2)^{⊗2} = R ⊕ (R/t^2)^3
        assert_eq!(tensor_power(&md(1, &[2]), 2), md(1, &[2, 2, 2]));
    }

    #[test]
    fn tensor_takes_gcds() {
        // (R/t ⊕ R/t^2)^{⊗2}: gcds t, t, t, t^2
        assert_eq!(tensor_power(&md(0, &[1, 2]), 2), md(0, &[1, 1, 1, 2]));
        assert_eq!(tensor_power(&md(2, &[3]), 0), md(1, &[]));
        assert_eq!(tensor_power(&md(3, &[]), 4), md(81, &[]));
    }

    #[test]
    fn tensor_of_coprime_torsion_vanishes() {
        let a = Polynomial::from_coeffs(Q, &[0, 1]);
        let b = Polynomial::from_coeffs(Q, &[1, 1]);
        let m = ModuleDescriptor::new(Q, 0, vec![a.clone(), b.clone()]).unwrap();
        let expected = ModuleDescriptor::new(Q, 0, vec![a, b]).unwrap();
        // ab and ba die, aa and bb survive
        assert_eq!(tensor_power(&m, 2), expected);
    }

    #[test]
    fn symmetric_and_exterior_squares() {
        let m = md(0, &[1, 2]);
        assert_eq!(symmetric_power(&m, 2), md(0, &[1, 1, 2]));
        assert_eq!(exterior_power(&m, 2), md(0, &[1]));
        assert_eq!(exterior_power(&m, 3), ModuleDescriptor::zero(Q));
        assert_eq!(symmetric_power(&md(2, &[]), 3), md(4, &[]));
        assert_eq!(exterior_power(&md(4, &[]), 2), md(6, &[]));
        assert_eq!(exterior_power(&md(4, &[]), 0), md(1, &[]));
    }

    #[test]
    fn cyclic_cube() {
        let (l, s) = seq();
        assert_eq!(cyclic_power(&md(0, &[2, 3]), 3, &l, s).unwrap(), md(0, &[2, 2, 2, 3]));
        assert_eq!(cyclic_power(&md(2, &[]), 3, &l, s).unwrap(), md(4, &[]));
        assert_eq!(dihedral_power(&md(2, &[]), 4, &l, s).unwrap(), md(6, &[]));
    }

    #[test]
    fn group_power_extremes() {
        let (l, s) = seq();
        let m = md(1, &[1, 2]);
        for n in 0..=3 {
            assert_eq!(group_power(&m, n, &PermGroup::trivial(n), &l, s).unwrap(), tensor_power(&m, n));
            assert_eq!(
                group_power(&m, n, &PermGroup::symmetric(n), &l, s).unwrap(),
                symmetric_power(&m, n)
            );
        }
        assert!(matches!(
            group_power(&m, 3, &PermGroup::cyclic(2), &l, s),
            Err(Error::ArityMismatch { group: 2, power: 3 })
        ));
    }

    #[test]
    fn group_power_strategies_agree() {
        let m = md(1, &[1, 2, 2]);
        let g = PermGroup::parse(4, "(1 2)(3 4);(1 3)").unwrap();
        let l = Limits::default();
        assert_eq!(
            group_power(&m, 4, &g, &l, Strategy::Sequential).unwrap(),
            group_power(&m, 4, &g, &l, Strategy::default()).unwrap()
        );
    }

    #[test]
    fn zero_module() {
        let (l, s) = seq();
        let z = ModuleDescriptor::zero(Q);
        assert_eq!(tensor_power(&z, 2), z);
        assert_eq!(symmetric_power(&z, 0), md(1, &[]));
        assert_eq!(cyclic_power(&z, 3, &l, s).unwrap(), z);
        assert!(cyclic_power(&z, 0, &l, s).is_err());
    }
}
