//! Exact arithmetic of finitely generated abelian groups.

mod group;
mod hom;
mod lattice;
mod limit;
mod matrix;
mod smith;
mod subquotient;
mod uct;

pub use group::{iso_check, CoefficientGroup, FgAbGroup};
pub use hom::{composite_is_zero, exact_at, reduce_coordinates, GroupHom};
pub use lattice::{kernel_basis, solve_integer, Lattice};
pub use limit::{finite_chain_limit, Direction, LimitReport};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithForm};
pub use subquotient::{
    cohomology_from_coboundaries, homology_from_boundaries, induced_on_cohomology, induced_on_homology, ChainComplex,
    Subquotient, Variance,
};
pub use uct::{cohomology_with_coefficients, ext, hom, homology_with_coefficients, tensor, tor};
