use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::{Limits, Strategy};
use crate::power::group::{cycle_count, PermGroup};

/// One orbit of `G` on functions `[n] -> [base]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Smallest code in the orbit.
    pub representative: u64,
    pub size: u64,
    /// Sorted distinct values of any function in the orbit.
    pub image: Vec<u32>,
}

/// `base^n`, or `CapExceeded` when it is larger than `cap`.
pub fn function_count(base: u64, n: usize, cap: u64) -> Result<u64> {
    let total = BigUint::from(base).pow(n as u32);
    match total.to_u64() {
        Some(t) if t <= cap => Ok(t),
        _ => Err(Error::CapExceeded {
            needed: total.to_string(),
            cap,
        }),
    }
}

/// Functions `f : [n] -> [base]` coded as `Σ f(i) base^i`.
struct Codec {
    base: u64,
    n: usize,
}

impl Codec {
    fn decode(&self, mut code: u64, out: &mut [u32]) {
        for d in out.iter_mut().take(self.n) {
            *d = (code % self.base) as u32;
            code /= self.base;
        }
    }

    fn encode(&self, digits: impl DoubleEndedIterator<Item = u32>) -> u64 {
        digits.rev().fold(0, |acc, d| acc * self.base + d as u64)
    }

    /// Code of `π.f`, where `(π.f)(i) = f(π(i))`.
    fn act(&self, pi: &[usize], f: &[u32]) -> u64 {
        self.encode(pi.iter().map(|&j| f[j]))
    }

    fn image(&self, f: &[u32]) -> Vec<u32> {
        let mut img = f.to_vec();
        img.sort_unstable();
        img.dedup();
        img
    }
}

/// Orbits of `G` on `[base]^[n]` by breadth-first search under the
/// generators, sorted by representative.
///
/// The sequential strategy sweeps codes in order with a visited bitmap; the
/// parallel one expands every code independently and keeps it only when it
/// is the orbit minimum. Both return the same list.
pub fn enumerate_orbits(
    g: &PermGroup,
    base: u64,
    limits: &Limits,
    strategy: Strategy,
) -> Result<Vec<Orbit>> {
    let n = g.n();
    let total = function_count(base, n, limits.enumeration_cap)?;
    if total == 0 {
        return Ok(Vec::new());
    }
    let codec = Codec { base, n };
    let gens = g.generators();
    match strategy {
        Strategy::Sequential => {
            let mut visited = vec![0u64; (total as usize).div_ceil(64)];
            let mut orbits = Vec::new();
            let mut f = vec![0u32; n];
            let mut queue = VecDeque::new();
            for x in 0..total {
                if visited[(x / 64) as usize] >> (x % 64) & 1 == 1 {
                    continue;
                }
                visited[(x / 64) as usize] |= 1 << (x % 64);
                codec.decode(x, &mut f);
                let image = codec.image(&f);
                let mut size = 0;
                queue.push_back(x);
                while let Some(y) = queue.pop_front() {
                    size += 1;
                    codec.decode(y, &mut f);
                    for pi in gens {
                        let z = codec.act(pi, &f);
                        let (w, b) = ((z / 64) as usize, z % 64);
                        if visited[w] >> b & 1 == 0 {
                            visited[w] |= 1 << b;
                            queue.push_back(z);
                        }
                    }
                }
                orbits.push(Orbit {
                    representative: x,
                    size,
                    image,
                });
            }
            Ok(orbits)
        }
        #[cfg(feature = "parallel")]
        Strategy::Parallel => Ok(strategy.filter_map_range(total, |x| {
            let mut f = vec![0u32; n];
            let mut seen = std::collections::HashSet::from([x]);
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                codec.decode(y, &mut f);
                for pi in gens {
                    let z = codec.act(pi, &f);
                    if z < x {
                        return None;
                    }
                    if seen.insert(z) {
                        queue.push_back(z);
                    }
                }
            }
            codec.decode(x, &mut f);
            Some(Orbit {
                representative: x,
                size: seen.len() as u64,
                image: codec.image(&f),
            })
        })),
    }
}

/// Number of orbits of `G` on `[r]^[n]` by Burnside's lemma,
/// `|G|^{-1} Σ_g r^{cycles(g)}`, over the materialised group.
pub fn burnside_count(g: &PermGroup, r: u64, limits: &Limits, strategy: Strategy) -> Result<BigUint> {
    let elements = g.elements(limits.enumeration_cap)?;
    let terms = strategy.map(&elements, |p| BigUint::from(r).pow(cycle_count(p) as u32));
    let sum: BigUint = terms.into_iter().sum();
    let order = BigUint::from(elements.len());
    debug_assert!((&sum % &order).is_zero());
    Ok(sum / order)
}

/// Euler's totient.
fn phi(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Necklaces `c_{r,n} = n^{-1} Σ_{d | n} φ(d) r^{n/d}`: orbits of `C_n` on
/// `[r]^[n]`. `n = 0` gives the single empty necklace.
pub fn necklace_count(r: u64, n: u32) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let sum: BigUint = (1..=n as u64)
        .filter(|d| (n as u64).is_multiple_of(*d))
        .map(|d| BigUint::from(phi(d)) * BigUint::from(r).pow(n / d as u32))
        .sum();
    sum / BigUint::from(n)
}

/// Bracelets: orbits of `D_n` on `[r]^[n]`, from
/// `2 d = c + r^{(n+1)/2}` for odd `n` and `4 d = 2 c + (r + 1) r^{n/2}`
/// for even `n`.
pub fn bracelet_count(r: u64, n: u32) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let c = necklace_count(r, n);
    let r_big = BigUint::from(r);
    if n % 2 == 1 {
        (c + r_big.pow(n.div_ceil(2))) / 2u32
    } else {
        (c * 2u32 + (&r_big + 1u32) * r_big.pow(n / 2)) / 4u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn necklaces_and_bracelets() {
        let c: Vec<u64> = (1..=8).map(|n| necklace_count(2, n).to_u64().unwrap()).collect();
        assert_eq!(c, vec![2, 3, 4, 6, 8, 14, 20, 36]);
        let d: Vec<u64> = (1..=8).map(|n| bracelet_count(2, n).to_u64().unwrap()).collect();
        assert_eq!(d, vec![2, 3, 4, 6, 8, 13, 18, 30]);
        assert_eq!(necklace_count(3, 4), BigUint::from(24u32));
        assert_eq!(bracelet_count(3, 4), BigUint::from(21u32));
    }

    #[test]
    fn burnside_examples() {
        let l = limits();
        let s = Strategy::Sequential;
        assert_eq!(burnside_count(&PermGroup::cyclic(3), 2, &l, s).unwrap(), BigUint::from(4u32));
        assert_eq!(burnside_count(&PermGroup::symmetric(3), 2, &l, s).unwrap(), BigUint::from(4u32));
        assert_eq!(burnside_count(&PermGroup::trivial(3), 2, &l, s).unwrap(), BigUint::from(8u32));
        assert_eq!(burnside_count(&PermGroup::dihedral(4), 2, &l, s).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn orbit_sizes_sum_to_total() {
        for g in [PermGroup::cyclic(4), PermGroup::dihedral(4), PermGroup::symmetric(4)] {
            let orbits = enumerate_orbits(&g, 3, &limits(), Strategy::Sequential).unwrap();
            assert_eq!(orbits.iter().map(|o| o.size).sum::<u64>(), 81);
            let b = burnside_count(&g, 3, &limits(), Strategy::Sequential).unwrap();
            assert_eq!(BigUint::from(orbits.len()), b);
        }
    }

    #[test]
    fn strategies_agree() {
        let g = PermGroup::parse(5, "(1 2 3);(4 5)").unwrap();
        let seq = enumerate_orbits(&g, 3, &limits(), Strategy::Sequential).unwrap();
        assert_eq!(enumerate_orbits(&g, 3, &limits(), Strategy::default()).unwrap(), seq);
    }

    #[test]
    fn degenerate_sizes() {
        let l = limits();
        assert!(enumerate_orbits(&PermGroup::trivial(2), 0, &l, Strategy::Sequential)
            .unwrap()
            .is_empty());
        let empty = enumerate_orbits(&PermGroup::trivial(0), 0, &l, Strategy::Sequential).unwrap();
        assert_eq!(empty, vec![Orbit { representative: 0, size: 1, image: vec![] }]);
        let tight = Limits { enumeration_cap: 8, oracle_cap: 8 };
        assert!(enumerate_orbits(&PermGroup::trivial(4), 2, &tight, Strategy::Sequential).is_err());
    }
}
