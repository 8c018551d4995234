//! Contractibility certificates by leaf-hyperplane collapse.
//!
//! A leaf hyperplane is one whose halfspace on one side coincides with that
//! side of its carrier.  Collapsing removes the carrier and keeps the convex
//! hull of the other halfspace, which drops exactly one hyperplane; iterating
//! down to a single edge certifies contractibility of the contact complex of
//! a compact CAT(0) cube complex.

use alloc::format;
use alloc::vec::Vec;

use crate::complex::CubeComplex;
use crate::error::Error;
use crate::subcomplex::{self, Subcomplex};

#[derive(Clone, Debug)]
pub struct CollapseStep {
    /// Dual edges of the leaf hyperplane, in original vertex ids.
    pub leaf_dual_edges: Vec<(u32, u32)>,
    /// Vertices of the complex left after the collapse, original ids.
    pub remaining: Vec<u32>,
    /// Convexity of `remaining` in its predecessor, checked explicitly.
    pub convex_in_predecessor: bool,
}

#[derive(Clone, Debug)]
pub struct CollapseCertificate {
    pub steps: Vec<CollapseStep>,
    /// Vertex pair of the final 1-cube, original ids.
    pub final_edge: (u32, u32),
}

pub fn collapse_contractibility(complex: &CubeComplex) -> Result<CollapseCertificate, Error> {
    if complex.edges().is_empty() {
        return Err(Error::MalformedInput(
            "collapse needs at least one 1-cube".into(),
        ));
    }
    let mut steps = Vec::new();
    // `orig[i]` maps a vertex of the current complex back to the input.
    let mut orig: Vec<u32> = (0..complex.num_vertices()).collect();
    let mut current = complex.clone();

    while current.hyperplane_count() > 1 {
        let leaf = find_leaf(&current).ok_or(Error::NoLeafHyperplane)?;
        let (h, keep_side) = leaf;
        let hyp = &current.hyperplanes()[h as usize];
        let leaf_dual_edges: Vec<(u32, u32)> = hyp
            .edges
            .iter()
            .map(|&ei| {
                let (a, b) = current.edges()[ei as usize];
                (orig[a as usize], orig[b as usize])
            })
            .collect();
        let remaining_local = current.halfspace(h, keep_side);
        let mut rem = Subcomplex::new(&current, remaining_local.clone())?;
        let convex_in_predecessor = rem.verify(&current);
        let remaining: Vec<u32> = remaining_local.iter().map(|&v| orig[v as usize]).collect();
        steps.push(CollapseStep { leaf_dual_edges, remaining: remaining.clone(), convex_in_predecessor });

        let before = current.hyperplane_count();
        let next = CubeComplex::induced(
            &current,
            &remaining_local,
            &format!("{}/collapse{}", complex.name(), steps.len()),
        )?;
        if next.hyperplane_count() + 1 != before {
            return Err(Error::SelfCrossing {
                class: h,
                detail: "collapse removed more than one hyperplane".into(),
            });
        }
        orig = remaining;
        current = next;
    }

    if current.num_vertices() != 2 {
        return Err(Error::NoLeafHyperplane);
    }
    Ok(CollapseCertificate {
        steps,
        final_edge: (orig[0], orig[1]),
    })
}

/// A hyperplane is a leaf when one closed halfspace equals the carrier side
/// on that half.  Returns the class and the side to keep.
fn find_leaf(complex: &CubeComplex) -> Option<(u32, bool)> {
    for h in 0..complex.hyperplane_count() {
        let hyp = &complex.hyperplanes()[h as usize];
        if complex.halfspace(h, true) == hyp.side_plus {
            return Some((h, false));
        }
        if complex.halfspace(h, false) == hyp.side_minus {
            return Some((h, true));
        }
    }
    None
}

/// The collapse soundness re-check used by tests: every recorded remaining
/// set is convex in its predecessor.
pub fn verify_certificate(complex: &CubeComplex, cert: &CollapseCertificate) -> bool {
    let mut current = complex.clone();
    let mut orig: Vec<u32> = (0..complex.num_vertices()).collect();
    for step in &cert.steps {
        if !step.convex_in_predecessor {
            return false;
        }
        let local: Vec<u32> = step
            .remaining
            .iter()
            .map(|v| orig.iter().position(|o| o == v).unwrap() as u32)
            .collect();
        if !subcomplex::is_convex(&current, &local) {
            return false;
        }
        current = match CubeComplex::induced(&current, &local, "check") {
            Ok(c) => c,
            Err(_) => return false,
        };
        orig = step.remaining.clone();
    }
    current.num_vertices() == 2 && current.hyperplane_count() == 1
}
