mod common;

use common::{worked_complex, worked_example};
use perspow::complex::snapshot_complex;
use perspow::homology::{
    persistent_cohomology, persistent_homology, smith_normal_form, Bar, IsoType,
};
use perspow::matrix::SparsePolyMatrix;
use perspow::oracle::snapshot_homology;
use perspow::{Field, Polynomial};

const Q: Field = Field::Rational;

fn mono(c: i64, e: u32) -> Polynomial {
    Polynomial::monomial(Q.from_i64(c), e)
}

/// Reference boundary matrices in a CAS ordering: vertices
/// `a b c e f g d h`, edges `ab ac eg bd cd ef fg eh fh gh de`, triangles
/// `fgh efg efh egh`.
fn reference() -> (SparsePolyMatrix, SparsePolyMatrix) {
    let d1 = [
        (0, 0, -1, 0), (1, 0, 1, 0), (0, 1, -1, 0), (2, 1, 1, 0), (3, 2, -1, 0), (5, 2, 1, 0),
        (1, 3, -1, 1), (6, 3, 1, 0), (2, 4, -1, 1), (6, 4, 1, 0), (3, 5, -1, 1), (4, 5, 1, 1),
        (4, 6, -1, 1), (5, 6, 1, 1), (3, 7, -1, 2), (7, 7, 1, 1), (4, 8, -1, 2), (7, 8, 1, 1),
        (5, 9, -1, 2), (7, 9, 1, 1), (6, 10, -1, 2), (3, 10, 1, 3),
    ];
    let d2 = [
        (9, 0, 1, 1), (8, 0, -1, 1), (6, 0, 1, 2), (6, 1, 1, 3), (2, 1, -1, 4), (5, 1, 1, 3),
        (8, 2, 1, 2), (7, 2, -1, 2), (5, 2, 1, 3), (9, 3, 1, 2), (7, 3, -1, 2), (2, 3, 1, 4),
    ];
    let build = |rows, cols, t: &[(usize, usize, i64, u32)]| {
        SparsePolyMatrix::from_triples(Q, rows, cols, t.iter().map(|&(r, c, k, e)| (r, c, mono(k, e))))
    };
    (build(8, 11, &d1), build(11, 4, &d2))
}

fn positions(labels: &[String], order: &[&str]) -> Vec<usize> {
    labels
        .iter()
        .map(|l| order.iter().position(|o| o.replace(' ', "") == l.replace(' ', "")).unwrap())
        .collect()
}

#[test]
fn boundaries_match_reference_up_to_ordering() {
    let c = worked_complex(Q);
    let (r1, r2) = reference();
    let verts = ["a", "b", "c", "e", "f", "g", "d", "h"];
    let edges = ["ab", "ac", "eg", "bd", "cd", "ef", "fg", "eh", "fh", "gh", "de"];
    let tris = ["fgh", "efg", "efh", "egh"];
    let pv = positions(c.labels(0).unwrap(), &verts);
    let pe = positions(c.labels(1).unwrap(), &edges);
    let pt = positions(c.labels(2).unwrap(), &tris);
    assert_eq!(c.boundary(1).permute(&pv, &pe), r1);
    assert_eq!(c.boundary(2).permute(&pe, &pt), r2);
}

#[test]
fn elementary_divisors() {
    let c = worked_complex(Q);
    let d1: Vec<String> = smith_normal_form(&c.boundary(1)).divisors.iter().map(|d| d.to_string()).collect();
    assert_eq!(d1, ["1", "1", "1", "1", "t", "t", "t^3"]);
    let d2: Vec<String> = smith_normal_form(&c.boundary(2)).divisors.iter().map(|d| d.to_string()).collect();
    assert_eq!(d2, ["t", "t^2", "t^3"]);
    let (r1, r2) = reference();
    assert_eq!(smith_normal_form(&r1), smith_normal_form(&c.boundary(1)));
    assert_eq!(smith_normal_form(&r2), smith_normal_form(&c.boundary(2)));
}

#[test]
fn decompositions() {
    let c = worked_complex(Q);
    let h: Vec<IsoType> = (0..=2).map(|n| persistent_homology(&c, n).unwrap().iso_type()).collect();
    assert_eq!(h[0], IsoType::new(1, vec![3, 1, 1]));
    assert_eq!(h[1], IsoType::new(1, vec![3, 2, 1]));
    assert_eq!(h[2], IsoType::new(1, vec![]));
    let co: Vec<IsoType> = (0..=2).map(|n| persistent_cohomology(&c, n).unwrap().iso_type()).collect();
    assert_eq!(co[0], IsoType::new(1, vec![]));
    assert_eq!(co[1], IsoType::new(1, vec![3, 1, 1]));
    assert_eq!(co[2], IsoType::new(1, vec![3, 2, 1]));
    assert_eq!(h[1].to_string(), "R ⊕ R/t^3 ⊕ R/t^2 ⊕ R/t");
}

#[test]
fn births_follow_the_generators() {
    // H_0 is generated by a, e, f, h; the component of h merges one step later
    let c = worked_complex(Q);
    let h0 = persistent_homology(&c, 0).unwrap();
    assert_eq!(h0.free(), &[0]);
    assert_eq!(
        h0.torsion(),
        &[
            Bar { birth: 0, lifetime: 1 },
            Bar { birth: 0, lifetime: 3 },
            Bar { birth: 1, lifetime: 1 }
        ]
    );
    let h2 = persistent_homology(&c, 2).unwrap();
    assert_eq!(h2.free(), &[4]);
}

#[test]
fn last_snapshot_is_the_free_part() {
    let f = worked_example();
    let last = f.last_step();
    assert_eq!(snapshot_homology(&f, 2, last, Q).unwrap(), 1);
    assert_eq!(snapshot_homology(&f, 5, last, Q).unwrap(), 0);
    let c = worked_complex(Q);
    for n in 0..=2 {
        let free = persistent_homology(&c, n).unwrap().free().len();
        assert_eq!(snapshot_homology(&f, n, last, Q).unwrap(), free);
    }
    assert_eq!(snapshot_complex(&f, last, Q).unwrap().euler_characteristic(), 1);
}

#[test]
fn prime_fields_agree_on_the_example() {
    for p in [2, 3, 5] {
        let c = worked_complex(Field::Prime(p));
        let h1 = persistent_homology(&c, 1).unwrap();
        assert_eq!(h1.iso_type(), IsoType::new(1, vec![3, 2, 1]));
    }
}
