//! Combinatorial geometry of finite CAT(0) cube complexes, modeled by their
//! 1-skeleta (median graphs).
//!
//! The complex is stored as a graph; cubes are implicit, since a valid median
//! graph determines the cube complex and every operation here factors through
//! the 1-skeleton metric.  On top of the primitive layer (medians, intervals,
//! hyperplanes, gates, hulls) the crate builds contact and crossing graphs,
//! factor systems with their factored contact graphs, point and set
//! projections, hierarchy paths, the distance formula, consistency and
//! realization of projection tuples, and an axiom-by-axiom audit of the
//! hierarchically-hyperbolic structure carried by a complex with a factor
//! system.
//!
//! Everything is deterministic: collections are ordered, BFS visits neighbors
//! in ascending id order, and canonical representatives are chosen by
//! lexicographically least vertex set.  The crate is `no_std` (alloc only);
//! IO, file formats and the CLI live in the companion `cubical` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod audit;
pub mod bgi;
pub mod bits;
pub mod bottleneck;
pub mod collapse;
pub mod coloring;
pub mod complex;
pub mod consistency;
pub mod contact;
pub mod distance;
pub mod error;
pub mod factor;
pub mod factored;
pub mod fixtures;
pub mod geodesics;
pub mod hierarchy;
pub mod parallel;
pub mod product;
pub mod raag;
pub mod regions;
pub mod rng;
pub mod subcomplex;

pub use complex::{CubeComplex, RawComplex, ValidationCaps, ValidationReport, Vertex};
pub use error::Error;
pub use subcomplex::{Convexity, Subcomplex};
