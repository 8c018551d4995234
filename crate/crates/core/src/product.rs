//! Cartesian products of complexes.

use alloc::format;
use alloc::vec::Vec;

use crate::complex::{CubeComplex, RawComplex};
use crate::error::Error;

/// Vertex `(v1, v2)` of the product gets id `v1 * n2 + v2`.
pub fn product(c1: &CubeComplex, c2: &CubeComplex) -> Result<CubeComplex, Error> {
    let n1 = c1.num_vertices();
    let n2 = c2.num_vertices();
    let mut edges = Vec::new();
    for &(a, b) in c1.edges() {
        for v in 0..n2 {
            edges.push((a * n2 + v, b * n2 + v));
        }
    }
    for v in 0..n1 {
        for &(a, b) in c2.edges() {
            edges.push((v * n2 + a, v * n2 + b));
        }
    }
    let raw = RawComplex::new(
        &format!("{} x {}", c1.name(), c2.name()),
        n1 * n2,
        edges,
    );
    CubeComplex::from_raw_default(&raw)
}
