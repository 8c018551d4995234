//! Parallelism of convex subcomplexes and the product structure of a
//! parallelism class.
//!
//! Two convex subcomplexes are parallel when they are crossed by the same
//! hyperplanes.  Grouping vertices by their halfspace signature outside a
//! crossing set slices the complex; the slices whose crossing set equals the
//! given one are exactly the parallel copies, and the convex hull of their
//! union is a product of the subcomplex with a transversal.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::bits::{self, Sig};
use crate::complex::CubeComplex;
use crate::error::Error;
use crate::subcomplex::{self, Subcomplex};

pub fn are_parallel(
    complex: &CubeComplex,
    f: &Subcomplex,
    f_prime: &Subcomplex,
) -> Result<bool, Error> {
    if !f.is_verified_convex() || !f_prime.is_verified_convex() {
        return Err(Error::NotConvex);
    }
    Ok(subcomplex::crossing_set(complex, f) == subcomplex::crossing_set(complex, f_prime))
}

/// All convex subcomplexes of the complex crossed by exactly the given
/// hyperplane set, as sorted vertex sets in ascending order.
pub fn parallel_copies(complex: &CubeComplex, crossing: &[u32]) -> Vec<Vec<u32>> {
    let words = complex.sig_words();
    let cs_mask = bits::mask_of(crossing, words);
    let other_mask: Sig = cs_mask.iter().map(|w| !w).collect();
    let mut groups: BTreeMap<Sig, Vec<u32>> = BTreeMap::new();
    for v in 0..complex.num_vertices() {
        groups
            .entry(bits::masked(complex.sig(v), &other_mask))
            .or_default()
            .push(v);
    }
    let mut copies: Vec<Vec<u32>> = Vec::new();
    for (_, verts) in groups {
        // The slice is convex; it is a copy exactly when it is crossed by the
        // whole set, i.e. both sides of every crossing hyperplane appear.
        let full = crossing.iter().all(|&h| {
            let mut saw = (false, false);
            for &v in &verts {
                if complex.side(h, v) {
                    saw.1 = true;
                } else {
                    saw.0 = true;
                }
                if saw.0 && saw.1 {
                    break;
                }
            }
            saw.0 && saw.1
        });
        if full {
            copies.push(verts);
        }
    }
    copies.sort();
    copies
}

#[derive(Clone, Debug)]
pub struct ParallelDecomposition {
    pub copies: Vec<Subcomplex>,
    /// Transversal through the least vertex of the base copy; crossed exactly
    /// by the hyperplanes separating copies from each other.
    pub transversal: Subcomplex,
    /// Convex hull of the union of copies; isomorphic to base x transversal.
    pub region: Subcomplex,
    /// (vertex of base, vertex of transversal) -> vertex of the region.
    pub table: BTreeMap<(u32, u32), u32>,
    /// Hyperplanes crossing the region but not the base.
    pub separators: Vec<u32>,
}

pub fn parallel_decomposition(
    complex: &CubeComplex,
    f: &Subcomplex,
) -> Result<ParallelDecomposition, Error> {
    if !f.is_verified_convex() {
        return Err(Error::NotConvex);
    }
    let crossing = subcomplex::crossing_set(complex, f);
    let copies_raw = parallel_copies(complex, &crossing);
    debug_assert!(copies_raw.iter().any(|c| c == f.vertices()));

    let mut union: Vec<u32> = copies_raw.iter().flatten().copied().collect();
    union.sort_unstable();
    union.dedup();
    let region_verts = subcomplex::hull_by_halfspaces(complex, &union);
    let region = Subcomplex::verified(complex, region_verts);

    let separators: Vec<u32> = subcomplex::crossing_set(complex, &region)
        .into_iter()
        .filter(|h| crossing.binary_search(h).is_err())
        .collect();

    let words = complex.sig_words();
    let cs_mask = bits::mask_of(&crossing, words);
    let sep_mask = bits::mask_of(&separators, words);
    let base = f.vertices();
    let f0 = base[0];
    // The transversal: the slice of f0 inside the region along the crossing
    // directions.
    let f0_cs = bits::masked(complex.sig(f0), &cs_mask);
    let transversal_verts: Vec<u32> = region
        .vertices()
        .iter()
        .copied()
        .filter(|&v| bits::masked(complex.sig(v), &cs_mask) == f0_cs)
        .collect();
    let transversal = Subcomplex::verified(complex, transversal_verts);

    let mut f_of: BTreeMap<Sig, u32> = BTreeMap::new();
    for &v in base {
        f_of.insert(bits::masked(complex.sig(v), &cs_mask), v);
    }
    let mut e_of: BTreeMap<Sig, u32> = BTreeMap::new();
    for &v in transversal.vertices() {
        e_of.insert(bits::masked(complex.sig(v), &sep_mask), v);
    }
    let mut table = BTreeMap::new();
    for &v in region.vertices() {
        let fk = bits::masked(complex.sig(v), &cs_mask);
        let ek = bits::masked(complex.sig(v), &sep_mask);
        let (fv, ev) = match (f_of.get(&fk), e_of.get(&ek)) {
            (Some(&a), Some(&b)) => (a, b),
            _ => {
                return Err(Error::MalformedInput(
                    "parallel class region is not a product".to_string(),
                ))
            }
        };
        table.insert((fv, ev), v);
    }
    if table.len() != base.len() * transversal.len() {
        return Err(Error::MalformedInput(
            "parallel class region is not a product".to_string(),
        ));
    }

    let copies = copies_raw
        .into_iter()
        .map(|verts| Subcomplex::verified(complex, verts))
        .collect();
    Ok(ParallelDecomposition { copies, transversal, region, table, separators })
}
