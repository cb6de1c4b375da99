#![allow(dead_code)]

use perspow::complex::{build_persistence_complex, Filtration, PersistenceComplex};
use perspow::Field;
use rand::seq::SliceRandom;
use rand::Rng;

pub const WORKED_EXAMPLE: &str = include_str!("../../data/worked_example.flt");

pub fn worked_example() -> Filtration {
    Filtration::parse(WORKED_EXAMPLE).expect("shipped example parses")
}

pub fn worked_complex(field: Field) -> PersistenceComplex {
    build_persistence_complex(&worked_example(), field)
}

/// Random filtration with at most `max_simplices` simplices of dimension at
/// most `max_dim` over `0..=max_step` steps. Each new simplex is drawn from
/// those whose facets are already present, and is born no earlier than any
/// of its facets.
pub fn random_filtration<R: Rng>(rng: &mut R, max_simplices: usize, max_dim: usize, max_step: usize) -> Filtration {
    let last = rng.gen_range(0..=max_step);
    // mostly 4-7 vertices, with occasional tiny complexes
    let n_vertices = if rng.gen_bool(0.15) { rng.gen_range(1..=3) } else { rng.gen_range(4..=7) }.min(max_simplices);
    let mut simplices: Vec<(Vec<usize>, usize)> =
        (0..n_vertices).map(|v| (vec![v], rng.gen_range(0..=last))).collect();
    let target = rng.gen_range(n_vertices..=max_simplices);
    let birth_of = |simplices: &[(Vec<usize>, usize)], s: &[usize]| {
        simplices.iter().find(|(t, _)| t == s).map(|(_, b)| *b)
    };
    while simplices.len() < target {
        let mut addable: Vec<(Vec<usize>, usize)> = Vec::new();
        for mask in 1u32..(1 << n_vertices) {
            let cand: Vec<usize> = (0..n_vertices).filter(|v| mask >> v & 1 == 1).collect();
            if cand.len() < 2 || cand.len() > max_dim + 1 || birth_of(&simplices, &cand).is_some() {
                continue;
            }
            let faces: Option<Vec<usize>> = (0..cand.len())
                .map(|skip| {
                    let face: Vec<usize> =
                        cand.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    birth_of(&simplices, &face)
                })
                .collect();
            if let Some(births) = faces {
                addable.push((cand, births.into_iter().max().unwrap_or(0)));
            }
        }
        let Some((cand, face_birth)) = addable.choose(rng).cloned() else {
            break;
        };
        let birth = rng.gen_range(face_birth..=last);
        simplices.push((cand, birth));
    }
    let mut text = format!("steps {last}\n");
    for (s, b) in &simplices {
        let labels: Vec<String> = s.iter().map(|v| format!("v{v}")).collect();
        text.push_str(&format!("{} {b}\n", labels.join(" ")));
    }
    Filtration::parse(&text).expect("generated filtrations are valid")
}

/// The same filtration with simplices of each dimension declared in a
/// shuffled order; vertex declaration order is kept.
pub fn shuffled<R: Rng>(f: &Filtration, rng: &mut R) -> Filtration {
    let mut text = format!("steps {}\n", f.last_step());
    for n in 0..=f.dim().unwrap_or(0) {
        let mut layer: Vec<_> = f.simplices(n).to_vec();
        if n > 0 {
            layer.shuffle(rng);
        }
        for s in layer {
            text.push_str(&format!("{} {}\n", f.simplex_label(&s), s.birth));
        }
    }
    Filtration::parse(&text).expect("shuffling keeps face closure")
}

pub const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(5)];
