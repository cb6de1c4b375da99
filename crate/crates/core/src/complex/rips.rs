use num_rational::BigRational;
use num_traits::Zero;

use crate::complex::filtration::Filtration;
use crate::error::{Error, Result};

/// Vietoris-Rips filtration of a point cloud.
///
/// Step `i` contains every simplex whose pairwise distances are all at most
/// `2 * radii[i]`. Distances are compared as exact squared rationals.
/// Vertices are labelled `p0, p1, ...` and born at step 0; simplices that
/// never enter within the last radius are omitted.
pub fn rips_filtration(
    points: &[Vec<BigRational>],
    radii: &[BigRational],
    max_dim: usize,
) -> Result<Filtration> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if radii.is_empty() || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::RadiiNotIncreasing);
    }
    let dim = points[0].len();
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::InvalidComplex("points have differing dimensions".into()));
    }
    let thresholds: Vec<BigRational> = radii
        .iter()
        .map(|r| {
            let d = r + r;
            &d * &d
        })
        .collect();

    let n = points.len();
    let mut edge_birth = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d2 = squared_distance(&points[i], &points[j]);
            let birth = thresholds.iter().position(|t| &d2 <= t);
            edge_birth[i][j] = birth;
            edge_birth[j][i] = birth;
        }
    }

    // cliques grouped by dimension, each extended only by larger vertices
    let mut by_dim: Vec<Vec<(Vec<usize>, usize)>> = vec![(0..n).map(|v| (vec![v], 0)).collect()];
    for d in 1..=max_dim {
        let mut next = Vec::new();
        for (simplex, birth) in &by_dim[d - 1] {
            let last = *simplex.last().unwrap();
            #[allow(clippy::needless_range_loop)]
            for v in last + 1..n {
                let joins: Option<Vec<usize>> = simplex.iter().map(|&u| edge_birth[u][v]).collect();
                if let Some(joins) = joins {
                    let b = joins.into_iter().fold(*birth, usize::max);
                    let mut s = simplex.clone();
                    s.push(v);
                    next.push((s, b));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        by_dim.push(next);
    }

    let mut builder = Filtration::builder(radii.len() - 1);
    for v in 0..n {
        builder
            .add_vertex(&format!("p{v}"), 0)
            .expect("fresh labels");
    }
    for level in by_dim.iter().skip(1) {
        for (s, b) in level {
            builder
                .add_simplex(s, *b)
                .expect("clique births are monotone and faces precede cofaces");
        }
    }
    Ok(builder.build())
}

fn squared_distance(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| {
        let d = x - y;
        acc + &d * &d
    })
}

/// Reads points: one per line, whitespace-separated exact coordinates.
pub fn parse_points(text: &str) -> Result<Vec<Vec<BigRational>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let coords = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(crate::field::parse_rational)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse {
                line: i + 1,
                kind: crate::error::ParseErrorKind::Syntax(e.to_string()),
            })?;
        out.push(coords);
    }
    Ok(out)
}
