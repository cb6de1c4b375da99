//! Powers of finitely generated `K[t]`-modules given by their isomorphism
//! type.

mod descriptor;
mod formulas;
mod group;
mod orbits;
mod presentation;

pub use descriptor::{DescriptorJson, ModuleDescriptor, TorsionJson};
pub use formulas::{
    binomial, cyclic_power, dihedral_power, exterior_power, group_power, multichoose,
    symmetric_power, tensor_power,
};
pub use group::{cycle_count, PermGroup};
pub use orbits::{bracelet_count, burnside_count, enumerate_orbits, function_count, necklace_count, Orbit};
pub use presentation::{algebra_presentation, AlgebraPresentation, Flavor};
