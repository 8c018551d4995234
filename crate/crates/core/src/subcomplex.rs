//! Vertex-set subcomplexes with convexity certificates, hulls and gates.
//!
//! A subcomplex is its sorted vertex set; the induced edges are implied.
//! Equality and ordering are by vertex set, so the lexicographically least
//! set in a family is its canonical representative.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bits::{self, Sig};
use crate::complex::CubeComplex;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convexity {
    VerifiedConvex,
    VerifiedNonconvex,
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subcomplex {
    vertices: Vec<u32>,
    #[doc(hidden)]
    convex: ConvexTag,
    parent: String,
}

// Ordering of subcomplexes must ignore the certificate, so the tag sits in a
// wrapper that compares equal always.
#[derive(Clone, Copy, Debug)]
pub struct ConvexTag(pub Convexity);

impl PartialEq for ConvexTag {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}
impl Eq for ConvexTag {}
impl PartialOrd for ConvexTag {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for ConvexTag {
    fn cmp(&self, _: &Self) -> core::cmp::Ordering {
        core::cmp::Ordering::Equal
    }
}

impl Subcomplex {
    pub fn new(complex: &CubeComplex, mut vertices: Vec<u32>) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::EmptyInput);
        }
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= complex.num_vertices()) {
            return Err(Error::InvalidId(v));
        }
        Ok(Subcomplex {
            vertices,
            convex: ConvexTag(Convexity::Unchecked),
            parent: complex.name().to_string(),
        })
    }

    pub(crate) fn verified(complex: &CubeComplex, vertices: Vec<u32>) -> Self {
        Subcomplex {
            vertices,
            convex: ConvexTag(Convexity::VerifiedConvex),
            parent: complex.name().to_string(),
        }
    }

    pub fn single(complex: &CubeComplex, v: u32) -> Self {
        Subcomplex {
            vertices: alloc::vec![v],
            convex: ConvexTag(Convexity::VerifiedConvex),
            parent: complex.name().to_string(),
        }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn parent(&self) -> &str {
        &self.parent
    }

    pub fn contains(&self, v: u32) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn convexity(&self) -> Convexity {
        self.convex.0
    }

    pub fn is_verified_convex(&self) -> bool {
        matches!(self.convex.0, Convexity::VerifiedConvex)
    }

    /// Run the convexity check and record the result on the certificate.
    pub fn verify(&mut self, complex: &CubeComplex) -> bool {
        let ok = is_convex(complex, &self.vertices);
        self.convex = ConvexTag(if ok {
            Convexity::VerifiedConvex
        } else {
            Convexity::VerifiedNonconvex
        });
        ok
    }

    /// Vertex set as a bitset over the parent complex.
    pub fn bitset(&self, complex: &CubeComplex) -> Sig {
        bits::mask_of(&self.vertices, bits::words_for(complex.num_vertices() as usize))
    }

    /// Number of separating hyperplanes between the two farthest vertices.
    pub fn diameter(&self, complex: &CubeComplex) -> u32 {
        let mut best = 0;
        for (i, &x) in self.vertices.iter().enumerate() {
            for &y in &self.vertices[i + 1..] {
                best = best.max(complex.dist(x, y));
            }
        }
        best
    }

    /// Does the subcomplex span at least one edge?
    pub fn nontrivial(&self, complex: &CubeComplex) -> bool {
        self.vertices.iter().any(|&v| {
            complex.neighbors(v).iter().any(|w| self.contains(*w))
        })
    }
}

/// Interval-closure convexity test: the union of pairwise intervals must add
/// nothing.  (Connectivity of interval-closed sets is automatic.)
pub fn is_convex(complex: &CubeComplex, vertices: &[u32]) -> bool {
    let set: BTreeSet<u32> = vertices.iter().copied().collect();
    for (i, &x) in vertices.iter().enumerate() {
        for &y in &vertices[i..] {
            for v in complex.interval(x, y) {
                if !set.contains(&v) {
                    return false;
                }
            }
        }
    }
    true
}

/// Convex hull by iterating `S <- union of pairwise intervals` to a fixpoint.
/// Returns a verified-convex subcomplex, the least convex superset.
pub fn convex_hull(complex: &CubeComplex, seed: &[u32]) -> Result<Subcomplex, Error> {
    if seed.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut current: BTreeSet<u32> = seed.iter().copied().collect();
    let mut fresh: Vec<u32> = current.iter().copied().collect();
    while !fresh.is_empty() {
        let all: Vec<u32> = current.iter().copied().collect();
        let mut added = Vec::new();
        for &x in &fresh {
            for &y in &all {
                for v in complex.interval(x, y) {
                    if current.insert(v) {
                        added.push(v);
                    }
                }
            }
        }
        fresh = added;
    }
    Ok(Subcomplex::verified(complex, current.into_iter().collect()))
}

/// Independent hull route: intersect all halfspaces containing the seed.
/// Used as an oracle against `convex_hull`.
pub fn hull_by_halfspaces(complex: &CubeComplex, seed: &[u32]) -> Vec<u32> {
    let n = complex.num_vertices();
    let h = complex.hyperplane_count();
    let mut forced: Vec<Option<bool>> = Vec::with_capacity(h as usize);
    for hyp in 0..h {
        let mut seen_plus = false;
        let mut seen_minus = false;
        for &v in seed {
            if complex.side(hyp, v) {
                seen_plus = true;
            } else {
                seen_minus = true;
            }
        }
        forced.push(match (seen_minus, seen_plus) {
            (true, false) => Some(false),
            (false, true) => Some(true),
            _ => None,
        });
    }
    (0..n)
        .filter(|&v| {
            (0..h).all(|hyp| match forced[hyp as usize] {
                Some(side) => complex.side(hyp, v) == side,
                None => true,
            })
        })
        .collect()
}

/// The gate of `x` in a verified-convex `K`: the unique distance minimizer.
pub fn gate(complex: &CubeComplex, k: &Subcomplex, x: u32) -> Result<u32, Error> {
    if !k.is_verified_convex() {
        return Err(Error::NotConvex);
    }
    if x >= complex.num_vertices() {
        return Err(Error::InvalidId(x));
    }
    let mut best = k.vertices()[0];
    let mut best_d = complex.dist(x, best);
    for &v in &k.vertices()[1..] {
        let d = complex.dist(x, v);
        if d < best_d {
            best = v;
            best_d = d;
        }
    }
    Ok(best)
}

/// The gate image of `K'` in `K`, as a verified-convex subcomplex.  If the
/// two intersect this is exactly their intersection.
pub fn gate_image(
    complex: &CubeComplex,
    k: &Subcomplex,
    k_prime: &Subcomplex,
) -> Result<Subcomplex, Error> {
    if !k.is_verified_convex() || !k_prime.is_verified_convex() {
        return Err(Error::NotConvex);
    }
    let mut image: Vec<u32> = k_prime
        .vertices()
        .iter()
        .map(|&x| gate(complex, k, x))
        .collect::<Result<_, _>>()?;
    image.sort_unstable();
    image.dedup();
    Ok(Subcomplex::verified(complex, image))
}

/// Hyperplanes with a dual edge inside the subcomplex.
pub fn crossing_set(complex: &CubeComplex, k: &Subcomplex) -> Vec<u32> {
    let mut out = BTreeSet::new();
    for &v in k.vertices() {
        for &w in complex.neighbors(v) {
            if w > v && k.contains(w) {
                let e = complex.edge_index(v, w).unwrap();
                out.insert(complex.theta_of_edge(e));
            }
        }
    }
    out.into_iter().collect()
}

/// Gate lookup table for repeated projections onto a fixed convex set: the
/// gate of `x` is the unique vertex of `K` agreeing with `x` on every
/// hyperplane crossing `K`.
pub struct GateTable {
    mask: Sig,
    table: alloc::collections::BTreeMap<Sig, u32>,
}

impl GateTable {
    pub fn build(complex: &CubeComplex, k: &Subcomplex, crossing: &[u32]) -> GateTable {
        let mask = bits::mask_of(crossing, complex.sig_words());
        let mut table = alloc::collections::BTreeMap::new();
        for &v in k.vertices() {
            table.insert(bits::masked(complex.sig(v), &mask), v);
        }
        GateTable { mask, table }
    }

    pub fn gate(&self, complex: &CubeComplex, x: u32) -> u32 {
        self.table[&bits::masked(complex.sig(x), &self.mask)]
    }
}
