use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::power::descriptor::ModuleDescriptor;

/// Which algebra `M` generates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Tensor algebra `T(M)`, a quotient of a noncommutative polynomial ring.
    Free,
    /// Symmetric algebra `S(M)`.
    Commutative,
    /// Exterior algebra `Λ(M)`.
    Exterior,
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Flavor> {
        match s {
            "free" | "tensor" => Ok(Flavor::Free),
            "sym" | "symmetric" | "commutative" => Ok(Flavor::Commutative),
            "ext" | "exterior" => Ok(Flavor::Exterior),
            _ => Err(Error::InvalidModule(format!("unknown algebra flavor `{s}`"))),
        }
    }
}

/// Generators `x_1..x_r, y_1..y_s` and relations `a_i y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub flavor: Flavor,
    pub free_gens: Vec<String>,
    pub torsion_gens: Vec<String>,
    pub relations: Vec<(Polynomial, String)>,
}

pub fn algebra_presentation(m: &ModuleDescriptor, flavor: Flavor) -> Result<AlgebraPresentation> {
    let r = m.free_rank_u64()?;
    let torsion = m.torsion_list()?;
    let free_gens = (1..=r).map(|i| format!("x_{i}")).collect();
    let torsion_gens: Vec<String> = (1..=torsion.len()).map(|i| format!("y_{i}")).collect();
    let relations = torsion.into_iter().zip(torsion_gens.iter().cloned()).collect();
    Ok(AlgebraPresentation {
        flavor,
        free_gens,
        torsion_gens,
        relations,
    })
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self.flavor {
            Flavor::Free => ("R⟨", "⟩"),
            Flavor::Commutative => ("R[", "]"),
            Flavor::Exterior => ("Λ[", "]"),
        };
        let gens: Vec<&str> = self
            .free_gens
            .iter()
            .chain(&self.torsion_gens)
            .map(String::as_str)
            .collect();
        write!(f, "{open}{}", gens.join(", "))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|(a, y)| {
                    if a.num_terms() == 1 {
                        format!("{a} {y}")
                    } else {
                        format!("({a}) {y}")
                    }
                })
                .collect();
            write!(f, " | {}", rels.join(", "))?;
        }
        write!(f, "{close}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    const Q: Field = Field::Rational;

    fn show(m: &str, flavor: Flavor) -> String {
        let m = ModuleDescriptor::parse(Q, m).unwrap();
        algebra_presentation(&m, flavor).unwrap().to_string()
    }

    #[test]
    fn shapes() {
        assert_eq!(show("r=1; t^2", Flavor::Free), "R⟨x_1, y_1 | t^2 y_1⟩");
        assert_eq!(show("r=3", Flavor::Commutative), "R[x_1, x_2, x_3]");
        assert_eq!(show("t", Flavor::Exterior), "Λ[y_1 | t y_1]");
        assert_eq!(show("t^2 + 1", Flavor::Exterior), "Λ[y_1 | (t^2 + 1) y_1]");
        assert_eq!(show("", Flavor::Free), "R⟨⟩");
    }

    #[test]
    fn relations_match_torsion() {
        let m = ModuleDescriptor::monomial(Q, 2, &[1, 3, 3]);
        let p = algebra_presentation(&m, Flavor::Commutative).unwrap();
        assert_eq!(p.relations.len(), 3);
        let rel: Vec<_> = p.relations.iter().map(|(a, _)| a.clone()).collect();
        assert_eq!(rel, m.torsion_list().unwrap());
    }

    #[test]
    fn flavor_names() {
        assert_eq!("sym".parse::<Flavor>().unwrap(), Flavor::Commutative);
        assert!("lie".parse::<Flavor>().is_err());
    }
}
