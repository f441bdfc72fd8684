//! Exact realizations of cover oracles: rational boxes, circle arcs and
//! finite spaces, plus the standard refinement chains.

mod geometry;
mod maps;
mod region;
mod space;
mod standard;

pub use geometry::{frac, full_turn, q, wrap, Interval, Point, RatBox, Q};
pub use maps::{MapHandle, MapKind};
pub use region::Region;
pub use space::{circle_region, Space, SpaceKind};
pub use standard::{circle_arc_chain, complex_chain, open_interval_chain, square_chain, standard_chain, StandardSpace};
