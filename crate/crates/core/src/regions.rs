//! Standard product regions of factor-system classes.
//!
//! The region of a class is the convex hull of all its parallel copies; it
//! factors as the representative times a transversal, and gating onto it
//! preserves every projection to classes nested in or orthogonal to the
//! given one.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::complex::CubeComplex;
use crate::error::Error;
use crate::factor::{class_decomposition, FactorSystem};
use crate::subcomplex::{gate, Subcomplex};

#[derive(Clone, Debug)]
pub struct ProductRegion {
    pub class: usize,
    /// The representative subcomplex (the base factor).
    pub base: Subcomplex,
    /// The transversal factor.
    pub transversal: Subcomplex,
    pub region: Subcomplex,
    /// (base vertex, transversal vertex) -> region vertex.
    pub table: BTreeMap<(u32, u32), u32>,
    /// Gate of every complex vertex onto the region.
    pub gates: Vec<u32>,
}

pub fn product_region(
    complex: &CubeComplex,
    fs: &FactorSystem,
    class: usize,
) -> Result<ProductRegion, Error> {
    let dec = class_decomposition(complex, fs, class)?;
    let base = fs.canonical(class).sub.clone();
    let gates: Vec<u32> = (0..complex.num_vertices())
        .map(|x| gate(complex, &dec.region, x))
        .collect::<Result<_, _>>()?;
    Ok(ProductRegion {
        class,
        base,
        transversal: dec.transversal,
        region: dec.region,
        table: dec.table,
        gates,
    })
}
