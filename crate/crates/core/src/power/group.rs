use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A subgroup of `S_n` given by generating permutations of `{0, …, n-1}`.
///
/// A permutation `π` acts on functions `f : [n] -> [s]` by
/// `(π.f)(i) = f(π(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Vec<usize>>,
}

impl PermGroup {
    pub fn new(n: usize, generators: Vec<Vec<usize>>) -> Result<PermGroup> {
        for g in &generators {
            if g.len() != n {
                return Err(Error::InvalidPermutation(format!(
                    "{g:?} does not act on {n} points"
                )));
            }
            let mut seen = vec![false; n];
            for &x in g {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidPermutation(format!("{g:?} is not a bijection")));
                }
            }
        }
        Ok(PermGroup { n, generators })
    }

    pub fn trivial(n: usize) -> PermGroup {
        PermGroup {
            n,
            generators: Vec::new(),
        }
    }

    /// `C_n` generated by the rotation `i -> i + 1 mod n`.
    pub fn cyclic(n: usize) -> PermGroup {
        if n < 2 {
            return PermGroup::trivial(n);
        }
        PermGroup {
            n,
            generators: vec![(0..n).map(|i| (i + 1) % n).collect()],
        }
    }

    /// `D_n` generated by the rotation and the reversal `i -> n - 1 - i`.
    pub fn dihedral(n: usize) -> PermGroup {
        let mut g = PermGroup::cyclic(n);
        if n >= 2 {
            g.generators.push((0..n).rev().collect());
        }
        g
    }

    /// `S_n` generated by adjacent transpositions.
    pub fn symmetric(n: usize) -> PermGroup {
        let generators = (0..n.saturating_sub(1))
            .map(|i| {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(i, i + 1);
                p
            })
            .collect();
        PermGroup { n, generators }
    }

    /// Subgroup generated by `k` uniformly random permutations.
    pub fn random<R: Rng>(n: usize, k: usize, rng: &mut R) -> PermGroup {
        let generators = (0..k)
            .map(|_| {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(rng);
                p
            })
            .collect();
        PermGroup { n, generators }
    }

    /// Parses `;`-separated permutations in 1-based cycle notation, e.g.
    /// `(1 2 3);(1 2)(3 4)`. `()` is the identity.
    pub fn parse(n: usize, text: &str) -> Result<PermGroup> {
        let mut generators = Vec::new();
        for perm in text.split(';') {
            let perm = perm.trim();
            if perm.is_empty() {
                continue;
            }
            generators.push(parse_cycles(n, perm)?);
        }
        PermGroup::new(n, generators)
    }

    /// Arity: the group acts on `n` points.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// All group elements, identity first, by breadth-first closure under
    /// right multiplication with generators. Fails once more than `cap`
    /// elements have been found.
    pub fn elements(&self, cap: u64) -> Result<Vec<Vec<usize>>> {
        let id: Vec<usize> = (0..self.n).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q: Vec<usize> = g.iter().map(|&i| p[i]).collect();
                if seen.insert(q.clone()) {
                    if out.len() as u64 >= cap {
                        return Err(Error::CapExceeded {
                            needed: format!("more than {cap} group elements"),
                            cap,
                        });
                    }
                    out.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        Ok(out)
    }

    pub fn order(&self, cap: u64) -> Result<usize> {
        self.elements(cap).map(|e| e.len())
    }
}

/// Number of cycles of a permutation, fixed points included.
pub fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
        }
    }
    cycles
}

fn parse_cycles(n: usize, text: &str) -> Result<Vec<usize>> {
    let bad = |why: &str| Error::InvalidPermutation(format!("`{text}`: {why}"));
    let mut perm: Vec<usize> = (0..n).collect();
    let mut moved = vec![false; n];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
        let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let cycle = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .ok()
                    .filter(|&v| (1..=n).contains(&v))
                    .map(|v| v - 1)
                    .ok_or_else(|| bad("points must be integers in 1..=n"))
            })
            .collect::<Result<Vec<_>>>()?;
        for &x in &cycle {
            if std::mem::replace(&mut moved[x], true) {
                return Err(bad("cycles must be disjoint"));
            }
        }
        for (k, &x) in cycle.iter().enumerate() {
            perm[x] = cycle[(k + 1) % cycle.len()];
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(perm)
}

impl fmt::Display for PermGroup {
    /// Generators in 1-based cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.generators {
            if !first {
                write!(f, ";")?;
            }
            first = false;
            let mut seen = vec![false; g.len()];
            let mut wrote = false;
            for s in 0..g.len() {
                if seen[s] || g[s] == s {
                    continue;
                }
                let mut cyc = Vec::new();
                let mut i = s;
                while !seen[i] {
                    seen[i] = true;
                    cyc.push((i + 1).to_string());
                    i = g[i];
                }
                write!(f, "({})", cyc.join(" "))?;
                wrote = true;
            }
            if !wrote {
                write!(f, "()")?;
            }
        }
        Ok(())
    }
}
