//! Formula-versus-oracle sweeps over small module descriptors.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exec::{Limits, Strategy};
use crate::field::Field;
use crate::oracle::{self, OracleMode};
use crate::power::{
    binomial, bracelet_count, burnside_count, cyclic_power, dihedral_power, enumerate_orbits,
    exterior_power, group_power, multichoose, necklace_count, symmetric_power, tensor_power,
    ModuleDescriptor, PermGroup,
};

/// Bounds of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub field: Field,
    pub max_r: u64,
    pub max_s: usize,
    pub max_exp: u32,
    pub max_n: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            field: Field::Rational,
            max_r: 2,
            max_s: 3,
            max_exp: 4,
            max_n: 4,
            seed: 0,
        }
    }
}

/// Outcome of one family of checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub label: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every `R^r ⊕ ⊕ R/t^{l_i}` with `r ≤ max_r`, `s ≤ max_s` and exponents in
/// `1..=max_exp`, each torsion multiset listed once.
pub fn descriptors(field: Field, max_r: u64, max_s: usize, max_exp: u32) -> Vec<ModuleDescriptor> {
    fn multisets(s: usize, lo: u32, hi: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == s {
            out.push(prefix.clone());
            return;
        }
        for e in lo..=hi {
            prefix.push(e);
            multisets(s, e, hi, prefix, out);
            prefix.pop();
        }
    }
    let mut exps = Vec::new();
    for s in 0..=max_s {
        multisets(s, 1, max_exp, &mut Vec::new(), &mut exps);
    }
    let mut out = Vec::new();
    for r in 0..=max_r {
        for e in &exps {
            out.push(ModuleDescriptor::monomial(field, r, e));
        }
    }
    out
}

/// The random 2-generator subgroup of `S_n` used for arity `n`.
pub fn random_group(n: usize, seed: u64) -> PermGroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    PermGroup::random(n, 2, &mut rng)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Tensor,
    Symmetric,
    Exterior,
    Trivial,
    Cyclic,
    Dihedral,
    FullSymmetric,
    Random,
}

impl Op {
    const ALL: [Op; 8] = [
        Op::Tensor,
        Op::Symmetric,
        Op::Exterior,
        Op::Trivial,
        Op::Cyclic,
        Op::Dihedral,
        Op::FullSymmetric,
        Op::Random,
    ];

    fn label(self) -> &'static str {
        match self {
            Op::Tensor => "tensor power",
            Op::Symmetric => "symmetric power",
            Op::Exterior => "exterior power",
            Op::Trivial => "G-power, trivial G",
            Op::Cyclic => "G-power, cyclic",
            Op::Dihedral => "G-power, dihedral",
            Op::FullSymmetric => "G-power, full symmetric",
            Op::Random => "G-power, random subgroup",
        }
    }

    fn group(self, n: usize, seed: u64) -> Option<PermGroup> {
        match self {
            Op::Tensor | Op::Exterior => None,
            Op::Trivial => Some(PermGroup::trivial(n)),
            Op::Cyclic => Some(PermGroup::cyclic(n)),
            Op::Dihedral => Some(PermGroup::dihedral(n)),
            Op::Symmetric | Op::FullSymmetric => Some(PermGroup::symmetric(n)),
            Op::Random => Some(random_group(n, seed)),
        }
    }

    fn formula(self, m: &ModuleDescriptor, n: usize, g: Option<&PermGroup>, limits: &Limits) -> Result<ModuleDescriptor> {
        // the enumeration inside one case stays sequential; cases run in parallel
        let seq = Strategy::Sequential;
        match self {
            Op::Tensor => Ok(tensor_power(m, n)),
            Op::Symmetric => Ok(symmetric_power(m, n)),
            Op::Exterior => Ok(exterior_power(m, n)),
            Op::Cyclic if n >= 1 => cyclic_power(m, n, limits, seq),
            Op::Dihedral if n >= 1 => dihedral_power(m, n, limits, seq),
            _ => group_power(m, n, g.expect("group op"), limits, seq),
        }
    }

    fn oracle_mode(self, g: Option<PermGroup>) -> OracleMode {
        match self {
            Op::Tensor => OracleMode::Tensor,
            Op::Exterior => OracleMode::Exterior,
            _ => OracleMode::Group(g.expect("group op")),
        }
    }
}

/// Compares every power formula with the presentation-matrix oracle over
/// [`descriptors`] and `n ≤ max_n`. Arities whose `p^n` exceeds the oracle
/// cap are skipped for that descriptor.
pub fn power_sweep(cfg: &SweepConfig, limits: &Limits, strategy: Strategy) -> Vec<CheckResult> {
    let mods = descriptors(cfg.field, cfg.max_r, cfg.max_s, cfg.max_exp);
    let mut cases = Vec::new();
    for m in &mods {
        let p = m.free_rank_u64().expect("small") + m.torsion_list().expect("small").len() as u64;
        for n in 0..=cfg.max_n {
            if BigUint::from(p).pow(n as u32) > BigUint::from(limits.oracle_cap) {
                continue;
            }
            for op in Op::ALL {
                cases.push((op, m.clone(), n));
            }
        }
    }
    let outcomes = strategy.map(&cases, |(op, m, n)| {
        let g = op.group(*n, cfg.seed);
        let got = op.formula(m, *n, g.as_ref(), limits);
        let want = oracle::oracle_power(m, *n, &op.oracle_mode(g), limits.oracle_cap);
        match (got, want) {
            (Ok(a), Ok(b)) if a == b => None,
            (a, b) => Some(format!(
                "M = {m}, n = {n}: formula {}, oracle {}",
                show(&a),
                show(&b)
            )),
        }
    });
    Op::ALL
        .iter()
        .map(|&op| {
            let mut res = CheckResult {
                label: op.label().to_string(),
                cases: 0,
                failures: Vec::new(),
            };
            for ((o, _, _), out) in cases.iter().zip(&outcomes) {
                if *o == op {
                    res.cases += 1;
                    res.failures.extend(out.clone());
                }
            }
            res
        })
        .collect()
}

fn show(r: &Result<ModuleDescriptor>) -> String {
    match r {
        Ok(m) => m.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Necklace, bracelet and Burnside counts against orbit enumeration for
/// `1 ≤ r ≤ max_r`, `1 ≤ n ≤ max_n`, plus free-rank identities of the power
/// formulas.
pub fn counting_sweep(max_r: u64, max_n: usize, seed: u64, limits: &Limits, strategy: Strategy) -> Vec<CheckResult> {
    let mut cases = Vec::new();
    for r in 1..=max_r {
        for n in 1..=max_n {
            cases.push((r, n));
        }
    }
    type Check = (&'static str, Option<String>);
    let outcomes: Vec<Vec<Check>> = strategy.map(&cases, |&(r, n)| {
        let mut out: Vec<Check> = Vec::new();
        let count = |g: &PermGroup| -> Result<usize> {
            Ok(oracle::enumerate_orbits(g, r as usize, limits.enumeration_cap)?.len())
        };
        let mut check = |label: &'static str, want: Result<BigUint>, got: Result<BigUint>| {
            let failure = match (&want, &got) {
                (Ok(a), Ok(b)) if a == b => None,
                _ => Some(format!("r = {r}, n = {n}: expected {want:?}, got {got:?}")),
            };
            out.push((label, failure));
        };
        let c = PermGroup::cyclic(n);
        let d = PermGroup::dihedral(n);
        let rg = random_group(n, seed);
        check("necklace numbers", count(&c).map(BigUint::from), Ok(necklace_count(r, n as u32)));
        check("bracelet numbers", count(&d).map(BigUint::from), Ok(bracelet_count(r, n as u32)));
        for g in [&PermGroup::trivial(n), &c, &d, &PermGroup::symmetric(n), &rg] {
            check(
                "Burnside vs enumeration",
                count(g).map(BigUint::from),
                burnside_count(g, r, limits, Strategy::Sequential),
            );
            let orbits = enumerate_orbits(g, r, limits, Strategy::Sequential).map(|o| BigUint::from(o.len()));
            check("Burnside vs enumeration", count(g).map(BigUint::from), orbits);
        }
        let m = ModuleDescriptor::free(Field::Rational, r);
        let rb = BigUint::from(r);
        check("free ranks of powers", Ok(rb.pow(n as u32)), Ok(tensor_power(&m, n).free_rank().clone()));
        check("free ranks of powers", Ok(multichoose(&rb, n)), Ok(symmetric_power(&m, n).free_rank().clone()));
        check("free ranks of powers", Ok(binomial(&rb, n)), Ok(exterior_power(&m, n).free_rank().clone()));
        check(
            "free ranks of powers",
            burnside_count(&rg, r, limits, Strategy::Sequential),
            group_power(&m, n, &rg, limits, Strategy::Sequential).map(|x| x.free_rank().clone()),
        );
        out
    });
    let mut results: Vec<CheckResult> = Vec::new();
    for (label, failure) in outcomes.into_iter().flatten() {
        let pos = match results.iter().position(|c| c.label == label) {
            Some(p) => p,
            None => {
                results.push(CheckResult {
                    label: label.to_string(),
                    cases: 0,
                    failures: Vec::new(),
                });
                results.len() - 1
            }
        };
        results[pos].cases += 1;
        results[pos].failures.extend(failure);
    }
    results
}

/// `T^0 = S^0 = Λ^0 = R`, `T^1 = S^1 = Λ^1 = M`, `Λ^n M = 0` for
/// `n > r + s`, and `T^n(R/I) = R/I`, over [`descriptors`].
pub fn degenerate_battery(cfg: &SweepConfig) -> CheckResult {
    let mods = descriptors(cfg.field, cfg.max_r, cfg.max_s, cfg.max_exp);
    let unit = ModuleDescriptor::free(cfg.field, 1);
    let zero = ModuleDescriptor::zero(cfg.field);
    let mut res = CheckResult {
        label: "degenerate cases".to_string(),
        cases: 0,
        failures: Vec::new(),
    };
    let mut expect = |what: &str, got: ModuleDescriptor, want: &ModuleDescriptor| {
        res.cases += 1;
        if &got != want {
            res.failures.push(format!("{what}: got {got}, expected {want}"));
        }
    };
    for m in &mods {
        expect(&format!("T^0 {m}"), tensor_power(m, 0), &unit);
        expect(&format!("S^0 {m}"), symmetric_power(m, 0), &unit);
        expect(&format!("Λ^0 {m}"), exterior_power(m, 0), &unit);
        expect(&format!("T^1 {m}"), tensor_power(m, 1), m);
        expect(&format!("S^1 {m}"), symmetric_power(m, 1), m);
        expect(&format!("Λ^1 {m}"), exterior_power(m, 1), m);
        let rs = m.free_rank_u64().expect("small") as usize + m.torsion_list().expect("small").len();
        for n in rs + 1..=rs + 2 {
            expect(&format!("Λ^{n} {m}"), exterior_power(m, n), &zero);
        }
    }
    for e in 1..=cfg.max_exp {
        let cyclic = ModuleDescriptor::monomial(cfg.field, 0, &[e]);
        for n in 1..=cfg.max_n.max(1) + 2 {
            expect(&format!("T^{n} {cyclic}"), tensor_power(&cyclic, n), &cyclic);
        }
    }
    res
}

/// Fixed-width pass/fail table.
pub fn render_table(results: &[CheckResult]) -> String {
    let width = results.iter().map(|r| r.label.chars().count()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    let _ = writeln!(out, "{:<width$}  {:>7}  {:>8}  result", "check", "cases", "failures");
    for r in results {
        let pad = width - r.label.chars().count();
        let _ = writeln!(
            out,
            "{}{}  {:>7}  {:>8}  {}",
            r.label,
            " ".repeat(pad),
            r.cases,
            r.failures.len(),
            if r.passed() { "PASS" } else { "FAIL" }
        );
    }
    for r in results {
        for f in r.failures.iter().take(5) {
            let _ = writeln!(out, "  {}: {f}", r.label);
        }
    }
    out
}
