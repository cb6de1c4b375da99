//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Built without the libtest harness so the table is always printed; the
//! process exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{random_filtration, worked_complex, FIELDS};
use perspow::complex::{build_persistence_complex, Filtration};
use perspow::exec::{Limits, Strategy};
use perspow::homology::{
    cohomology_iso_type_snf, homology_iso_type_snf, persistent_cohomology_graded,
    persistent_homology_graded, smith_normal_form, IsoType,
};
use perspow::oracle::snapshot_homology;
use perspow::power::ModuleDescriptor;
use perspow::verify::{counting_sweep, degenerate_battery, power_sweep, SweepConfig};
use perspow::Field;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN_SNF_BUDGET: Duration = Duration::from_secs(1);
const SNAPSHOT_BUDGET: Duration = Duration::from_secs(60);
const POWER_SWEEP_BUDGET: Duration = Duration::from_secs(300);

const RANDOM_FILTRATIONS: usize = 200;
const MAX_SIMPLICES: usize = 25;
const MAX_DIM: usize = 3;
const MAX_STEP: usize = 5;
const SEED: u64 = 0x5eed;

const COUNT_MAX_R: u64 = 4;
const COUNT_MAX_N: usize = 6;

struct Outcome {
    name: &'static str,
    ok: bool,
    detail: String,
}

fn golden_snf() -> Outcome {
    let start = Instant::now();
    let c = worked_complex(Field::Rational);
    let show = |n| -> Vec<String> {
        smith_normal_form(&c.boundary(n)).divisors.iter().map(|d| d.to_string()).collect()
    };
    let d1 = show(1);
    let d2 = show(2);
    let elapsed = start.elapsed();
    let exact = d1 == ["1", "1", "1", "1", "t", "t", "t^3"] && d2 == ["t", "t^2", "t^3"];
    Outcome {
        name: "golden elementary divisors",
        ok: exact && elapsed < GOLDEN_SNF_BUDGET,
        detail: format!("d1 = {d1:?}, d2 = {d2:?}, {elapsed:.2?} (budget {GOLDEN_SNF_BUDGET:?})"),
    }
}

fn golden_decompositions() -> Outcome {
    let q = Field::Rational;
    let c = worked_complex(q);
    let expected_h = ["R ⊕ R/t^3 ⊕ (R/t)^2", "R ⊕ R/t^3 ⊕ R/t^2 ⊕ R/t", "R"];
    let expected_co = ["R", "R ⊕ R/t^3 ⊕ (R/t)^2", "R ⊕ R/t^3 ⊕ R/t^2 ⊕ R/t"];
    let mut bad = Vec::new();
    for n in 0..=2 {
        let h = persistent_homology_graded(&c, n).map(|m| ModuleDescriptor::from_persistence_module(&m, q));
        let co = persistent_cohomology_graded(&c, n).map(|m| ModuleDescriptor::from_persistence_module(&m, q));
        match h {
            Ok(m) if m.to_string() == expected_h[n] => {}
            other => bad.push(format!("H_{n}: {other:?}")),
        }
        match co {
            Ok(m) if m.to_string() == expected_co[n] => {}
            other => bad.push(format!("H^{n}: {other:?}")),
        }
    }
    Outcome {
        name: "golden decompositions",
        ok: bad.is_empty(),
        detail: if bad.is_empty() { "H_0..H_2 and H^0..H^2 exact".into() } else { bad.join("; ") },
    }
}

fn filtrations() -> Vec<Filtration> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..RANDOM_FILTRATIONS)
        .map(|_| random_filtration(&mut rng, MAX_SIMPLICES, MAX_DIM, MAX_STEP))
        .collect()
}

fn snapshot_consistency(fs: &[Filtration]) -> Outcome {
    let start = Instant::now();
    let mut checks = 0usize;
    let mut bad = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        for field in FIELDS {
            let c = build_persistence_complex(f, field);
            for n in 0..=f.dim().unwrap_or(0) + 1 {
                let h = match persistent_homology_graded(&c, n) {
                    Ok(h) => h,
                    Err(e) => {
                        bad.push(format!("#{i} {field} H_{n}: {e}"));
                        continue;
                    }
                };
                for k in 0..=f.last_step() {
                    checks += 1;
                    let want = snapshot_homology(f, n, k, field);
                    if want.as_ref().ok() != Some(&h.betti_at(k)) {
                        bad.push(format!("#{i} {field} n={n} k={k}: {} vs {want:?}", h.betti_at(k)));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        name: "snapshot consistency",
        ok: bad.is_empty() && elapsed < SNAPSHOT_BUDGET,
        detail: format!(
            "{} filtrations x {} fields, {checks} (n, k) checks, {} mismatches, {elapsed:.2?} (budget {SNAPSHOT_BUDGET:?}){}",
            fs.len(),
            FIELDS.len(),
            bad.len(),
            first(&bad)
        ),
    }
}

fn path_equivalence(fs: &[Filtration]) -> Outcome {
    let mut checks = 0usize;
    let mut bad = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        for field in FIELDS {
            let c = build_persistence_complex(f, field);
            for n in 0..=f.dim().unwrap_or(0) + 1 {
                checks += 1;
                let graded_h = persistent_homology_graded(&c, n).map(|m| m.iso_type());
                let graded_co = persistent_cohomology_graded(&c, n).map(|m| m.iso_type());
                let snf_h = homology_iso_type_snf(&c, n);
                let snf_co = cohomology_iso_type_snf(&c, n);
                let below = n.checked_sub(1).map(|m| homology_iso_type_snf(&c, m));
                match (graded_h, graded_co, snf_h, snf_co) {
                    (Ok(gh), Ok(gc), Ok(sh), Ok(sc)) => {
                        if gh != sh {
                            bad.push(format!("#{i} {field} H_{n}: graded {gh} vs snf {sh}"));
                        }
                        if gc != sc {
                            bad.push(format!("#{i} {field} H^{n}: graded {gc} vs snf {sc}"));
                        }
                        let tors = match below {
                            Some(Ok(t)) => t.lifetimes,
                            Some(Err(e)) => {
                                bad.push(format!("#{i} {field} H_{}: {e}", n - 1));
                                continue;
                            }
                            None => Vec::new(),
                        };
                        if sc != IsoType::new(sh.free, tors) {
                            bad.push(format!("#{i} {field} UCT fails in degree {n}: H^{n} = {sc}"));
                        }
                    }
                    other => bad.push(format!("#{i} {field} n={n}: {other:?}")),
                }
            }
        }
    }
    Outcome {
        name: "path equivalence and UCT",
        ok: bad.is_empty(),
        detail: format!("{checks} degree checks, {} mismatches{}", bad.len(), first(&bad)),
    }
}

fn power_formulas() -> Outcome {
    let start = Instant::now();
    let results = power_sweep(&SweepConfig::default(), &Limits::default(), Strategy::default());
    let elapsed = start.elapsed();
    let cases: usize = results.iter().map(|r| r.cases).sum();
    let failed: Vec<String> = results.iter().flat_map(|r| r.failures.iter().cloned()).collect();
    let ops = results.iter().filter(|r| r.cases > 0).count();
    Outcome {
        name: "power formulas vs oracle",
        ok: failed.is_empty() && ops == 8 && elapsed < POWER_SWEEP_BUDGET,
        detail: format!(
            "{ops} operations, {cases} cases, {} failures, {elapsed:.2?} (budget {POWER_SWEEP_BUDGET:?}){}",
            failed.len(),
            first(&failed)
        ),
    }
}

fn counting_identities() -> Outcome {
    let results = counting_sweep(COUNT_MAX_R, COUNT_MAX_N, SEED, &Limits::default(), Strategy::default());
    let cases: usize = results.iter().map(|r| r.cases).sum();
    let failed: Vec<String> = results.iter().flat_map(|r| r.failures.iter().cloned()).collect();
    Outcome {
        name: "counting identities",
        ok: failed.is_empty() && results.len() == 4,
        detail: format!(
            "r <= {COUNT_MAX_R}, n <= {COUNT_MAX_N}: {cases} checks in {} families, {} failures{}",
            results.len(),
            failed.len(),
            first(&failed)
        ),
    }
}

fn degenerate_cases() -> Outcome {
    let r = degenerate_battery(&SweepConfig::default());
    Outcome {
        name: "degenerate cases",
        ok: r.passed() && r.cases > 0,
        detail: format!("{} checks, {} failures{}", r.cases, r.failures.len(), first(&r.failures)),
    }
}

fn first(failures: &[String]) -> String {
    failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
}

fn main() -> ExitCode {
    let fs = filtrations();
    let outcomes = [
        golden_snf(),
        golden_decompositions(),
        snapshot_consistency(&fs),
        path_equivalence(&fs),
        power_formulas(),
        counting_identities(),
        degenerate_cases(),
    ];
    for (i, o) in outcomes.iter().enumerate() {
        println!("{} [{}] {}: {}", if o.ok { "PASS" } else { "FAIL" }, i + 1, o.name, o.detail);
    }
    if outcomes.iter().all(|o| o.ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
