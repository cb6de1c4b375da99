use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, ParseErrorKind, Result};

/// A simplex with vertex ids sorted by the vertex order and its birth step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex {
    pub vertices: Vec<usize>,
    pub birth: usize,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Codimension-one faces paired with the position of the removed vertex.
    pub fn facets(&self) -> impl Iterator<Item = (usize, Vec<usize>)> + '_ {
        let n = if self.vertices.len() > 1 {
            self.vertices.len()
        } else {
            0
        };
        (0..n).map(move |i| {
            let mut face = self.vertices.clone();
            face.remove(i);
            (i, face)
        })
    }
}

/// A validated filtration `Δ_0 ⊆ … ⊆ Δ_N` of a finite simplicial complex.
///
/// Vertex ids are assigned in declaration order, which is also the vertex
/// order used for boundary signs. Within each dimension simplices keep
/// their declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    labels: Vec<String>,
    last_step: usize,
    simplices: Vec<Vec<Simplex>>,
    index: HashMap<Vec<usize>, (usize, usize)>,
}

impl Filtration {
    pub fn builder(last_step: usize) -> FiltrationBuilder {
        FiltrationBuilder {
            inner: Filtration {
                labels: Vec::new(),
                last_step,
                simplices: Vec::new(),
                index: HashMap::new(),
            },
            label_ids: HashMap::new(),
        }
    }

    /// The index `N` of the final complex.
    pub fn last_step(&self) -> usize {
        self.last_step
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.labels
    }

    /// Top dimension, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    /// Simplices of dimension `n` in declaration order.
    pub fn simplices(&self, n: usize) -> &[Simplex] {
        self.simplices.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(dimension, position)` of a simplex given by sorted vertex ids.
    pub fn position(&self, vertices: &[usize]) -> Option<(usize, usize)> {
        self.index.get(vertices).copied()
    }

    pub fn simplex_label(&self, s: &Simplex) -> String {
        s.vertices
            .iter()
            .map(|&v| self.labels[v].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the line-oriented filtration format.
    ///
    /// ```text
    /// steps 1
    /// a 0
    /// b 0
    /// a b 1
    /// ```
    pub fn parse(text: &str) -> Result<Filtration> {
        let mut builder: Option<FiltrationBuilder> = None;
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
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let Some(b) = builder.as_mut() else {
                if tokens.len() != 2 || tokens[0] != "steps" {
                    return Err(syntax("expected header `steps N`".into()));
                }
                let n = tokens[1]
                    .parse::<usize>()
                    .map_err(|_| syntax(format!("bad step count `{}`", tokens[1])))?;
                builder = Some(Filtration::builder(n));
                continue;
            };
            if tokens.len() < 2 {
                return Err(syntax("expected vertex labels followed by a birth".into()));
            }
            let (labels, birth) = tokens.split_at(tokens.len() - 1);
            let birth = birth[0]
                .parse::<usize>()
                .map_err(|_| syntax(format!("bad birth `{}`", birth[0])))?;
            b.push_labels(labels, birth).map_err(|kind| Error::Parse {
                line: line_no,
                kind,
            })?;
        }
        builder.map(FiltrationBuilder::build).ok_or(Error::Parse {
            line: 1,
            kind: ParseErrorKind::Syntax("missing header `steps N`".into()),
        })
    }

    /// Writes the same format [`Filtration::parse`] reads.
    pub fn to_text(&self) -> String {
        let mut out = format!("steps {}\n", self.last_step);
        for dim in &self.simplices {
            for s in dim {
                let _ = writeln!(out, "{} {}", self.simplex_label(s), s.birth);
            }
        }
        out
    }
}

/// Incremental, validating construction of a [`Filtration`].
#[derive(Clone, Debug)]
pub struct FiltrationBuilder {
    inner: Filtration,
    label_ids: HashMap<String, usize>,
}

impl FiltrationBuilder {
    pub fn add_vertex(&mut self, label: &str, birth: usize) -> Result<usize, ParseErrorKind> {
        if self.label_ids.contains_key(label) {
            return Err(ParseErrorKind::Duplicate(label.to_string()));
        }
        self.check_birth(birth)?;
        let id = self.inner.labels.len();
        self.inner.labels.push(label.to_string());
        self.label_ids.insert(label.to_string(), id);
        self.insert(Simplex {
            vertices: vec![id],
            birth,
        });
        Ok(id)
    }

    /// Adds a simplex of dimension ≥ 1 on already declared vertices. All of
    /// its facets must already be present with births no later than `birth`.
    pub fn add_simplex(&mut self, vertices: &[usize], birth: usize) -> Result<(), ParseErrorKind> {
        if vertices.is_empty() {
            return Err(ParseErrorKind::Syntax("empty simplex".into()));
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(ParseErrorKind::Syntax("repeated vertex in simplex".into()));
        }
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.inner.labels.len()) {
            return Err(ParseErrorKind::FaceClosure {
                simplex: self.label_ids_to_string(&sorted),
                face: format!("#{v}"),
            });
        }
        if sorted.len() == 1 {
            return Err(ParseErrorKind::Duplicate(self.label_ids_to_string(&sorted)));
        }
        if self.inner.index.contains_key(&sorted) {
            return Err(ParseErrorKind::Duplicate(self.label_ids_to_string(&sorted)));
        }
        self.check_birth(birth)?;
        let simplex = Simplex {
            vertices: sorted,
            birth,
        };
        for (_, face) in simplex.facets() {
            let Some(&(d, p)) = self.inner.index.get(&face) else {
                return Err(ParseErrorKind::FaceClosure {
                    simplex: self.label_ids_to_string(&simplex.vertices),
                    face: self.label_ids_to_string(&face),
                });
            };
            let face_birth = self.inner.simplices[d][p].birth;
            if face_birth > birth {
                return Err(ParseErrorKind::BirthMonotonicity {
                    simplex: self.label_ids_to_string(&simplex.vertices),
                    face: self.label_ids_to_string(&face),
                    birth,
                    face_birth,
                });
            }
        }
        self.insert(simplex);
        Ok(())
    }

    /// A single label declares a vertex; several labels name a simplex on
    /// declared vertices.
    pub fn push_labels(&mut self, labels: &[&str], birth: usize) -> Result<(), ParseErrorKind> {
        if let [label] = labels {
            return self.add_vertex(label, birth).map(|_| ());
        }
        let mut ids = Vec::with_capacity(labels.len());
        for l in labels {
            match self.label_ids.get(*l) {
                Some(&id) => ids.push(id),
                None => {
                    return Err(ParseErrorKind::FaceClosure {
                        simplex: labels.join(" "),
                        face: l.to_string(),
                    })
                }
            }
        }
        self.add_simplex(&ids, birth)
    }

    pub fn build(self) -> Filtration {
        self.inner
    }

    fn check_birth(&self, birth: usize) -> Result<(), ParseErrorKind> {
        if birth > self.inner.last_step {
            return Err(ParseErrorKind::BirthOutOfRange {
                birth,
                last: self.inner.last_step,
            });
        }
        Ok(())
    }

    fn insert(&mut self, s: Simplex) {
        let d = s.dim();
        if self.inner.simplices.len() <= d {
            self.inner.simplices.resize_with(d + 1, Vec::new);
        }
        let pos = self.inner.simplices[d].len();
        self.inner.index.insert(s.vertices.clone(), (d, pos));
        self.inner.simplices[d].push(s);
    }

    fn label_ids_to_string(&self, ids: &[usize]) -> String {
        ids.iter()
            .map(|&v| {
                self.inner
                    .labels
                    .get(v)
                    .cloned()
                    .unwrap_or_else(|| format!("#{v}"))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}
