//! Exact Čech-type functional homology and cohomology of spaces presented by
//! finite cover systems.
//!
//! The crate is layered bottom-up:
//!
//! * [`abelian`]: Smith normal form, canonical abelian groups, homomorphisms,
//!   (co)homology of composable integer maps and finite-chain limits.
//! * [`simplicial`]: complexes, pairs, oriented chains, simplicial maps,
//!   contiguity and connecting homomorphisms.
//! * [`cover`]: intersection oracles, nerves, refinements, trace and pullback covers.
//! * [`backends`]: exact rational boxes, circle arcs and finite spaces.
//! * [`cech`]: cover systems, limit groups, induced maps, sequence checkers
//!   and the coefficient of cyclicity.
//! * [`fixtures`]: the bundled catalog of spaces with their expected groups.

pub mod abelian;
pub mod backends;
pub mod cech;
pub mod cover;
mod error;
pub mod fixtures;
pub mod simplicial;

pub use error::{Error, Result};
