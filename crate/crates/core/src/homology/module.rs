use serde::Serialize;

use crate::field::Field;

/// A torsion summand `R/t^lifetime` generated in degree `birth`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bar {
    pub birth: usize,
    pub lifetime: usize,
}

impl Bar {
    pub fn death(&self) -> usize {
        self.birth + self.lifetime
    }
}

/// Decomposition of a persistence module: free summands (by birth) and
/// torsion summands.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PersistenceModule {
    free: Vec<usize>,
    torsion: Vec<Bar>,
}

/// Isomorphism type: free rank and sorted torsion lifetimes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoType {
    pub free: usize,
    pub lifetimes: Vec<usize>,
}

impl IsoType {
    pub fn new(free: usize, mut lifetimes: Vec<usize>) -> IsoType {
        lifetimes.sort_unstable();
        IsoType { free, lifetimes }
    }
}

impl std::fmt::Display for IsoType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free {
            0 => {}
            1 => parts.push("R".to_string()),
            r => parts.push(format!("R^{r}")),
        }
        let mut i = self.lifetimes.len();
        while i > 0 {
            let l = self.lifetimes[i - 1];
            let mut j = i - 1;
            while j > 0 && self.lifetimes[j - 1] == l {
                j -= 1;
            }
            let base = if l == 1 { "R/t".to_string() } else { format!("R/t^{l}") };
            match i - j {
                1 => parts.push(base),
                k => parts.push(format!("({base})^{k}")),
            }
            i = j;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

impl PersistenceModule {
    /// Canonicalises: torsion sorted by `(birth, lifetime)`, free births sorted.
    pub fn new(mut free: Vec<usize>, mut torsion: Vec<Bar>) -> PersistenceModule {
        assert!(torsion.iter().all(|b| b.lifetime >= 1), "lifetimes are at least 1");
        free.sort_unstable();
        torsion.sort_unstable();
        PersistenceModule { free, torsion }
    }

    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn torsion(&self) -> &[Bar] {
        &self.torsion
    }

    pub fn iso_type(&self) -> IsoType {
        IsoType::new(
            self.free.len(),
            self.torsion.iter().map(|b| b.lifetime).collect(),
        )
    }

    /// Number of summands alive at step `k`.
    pub fn betti_at(&self, k: usize) -> usize {
        self.free.iter().filter(|&&b| b <= k).count()
            + self
                .torsion
                .iter()
                .filter(|b| b.birth <= k && k < b.death())
                .count()
    }

    /// Intervals `[birth, death)`, torsion first then free (`None` = ∞).
    pub fn barcode(&self) -> Vec<(usize, Option<usize>)> {
        self.torsion
            .iter()
            .map(|b| (b.birth, Some(b.death())))
            .chain(self.free.iter().map(|&b| (b, None)))
            .collect()
    }

    /// Serialisable view `{"n", "field", "free", "torsion"}`.
    pub fn json_view(&self, n: usize, field: Field) -> ModuleJson<'_> {
        ModuleJson {
            n,
            field: field.to_string(),
            free: &self.free,
            torsion: &self.torsion,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ModuleJson<'a> {
    pub n: usize,
    pub field: String,
    pub free: &'a [usize],
    pub torsion: &'a [Bar],
}
