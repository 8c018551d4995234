//! Projection tuples, consistency inequalities, and brute-force realization.
//!
//! A tuple holds one clique per parallelism class.  Realized tuples satisfy
//! the transverse and nested consistency inequalities with kappa = xi + 2;
//! conversely, consistent tuples are realized up to a bounded error, which
//! the exhaustive argmin searches for directly.

use alloc::format;
use alloc::vec::Vec;

use crate::complex::CubeComplex;
use crate::error::Error;
use crate::factor::{FactorSystem, Relation};
use crate::factored::{rho_downward, rho_set, Projections};

/// One coordinate per class: a clique of the base contact graph of that
/// class's factored contact graph, as sorted local base-vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionTuple {
    pub coords: Vec<Vec<u32>>,
    pub kappa: u32,
}

/// The default consistency constant kappa0 = xi + 2.
pub fn kappa0(xi: u32) -> u32 {
    xi + 2
}

/// Project a vertex to every class.
pub fn tuple_of(
    _complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    x: u32,
) -> ProjectionTuple {
    let coords = (0..fs.num_classes())
        .map(|c| proj.cliques[c][x as usize].clone())
        .collect();
    ProjectionTuple { coords, kappa: kappa0(fs.xi) }
}

#[derive(Clone, Debug)]
pub struct ConsistencyOutcome {
    pub pass: bool,
    /// First violating class pair, with the measured quantity.
    pub violation: Option<(usize, usize, u32)>,
}

/// Check the two consistency inequalities over every class pair:
/// transverse pairs compare coordinates against the mutual class
/// projections, nested pairs against the embedded copy and the downward
/// image of the host coordinate.
pub fn consistency_check(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    tuple: &ProjectionTuple,
    kappa: u32,
) -> Result<ConsistencyOutcome, Error> {
    if tuple.coords.len() != fs.num_classes() {
        return Err(Error::BadIndex(tuple.coords.len()));
    }
    for (c, coord) in tuple.coords.iter().enumerate() {
        let base = proj.fcg[c].num_base() as u32;
        if coord.iter().any(|&i| i >= base) {
            return Err(Error::BadIndex(c));
        }
    }
    let k = fs.num_classes();
    for a in 0..k {
        for b in a + 1..k {
            if proj.fcg[a].num_base() == 0 || proj.fcg[b].num_base() == 0 {
                continue;
            }
            match fs.relations[a][b] {
                Relation::Transverse => {
                    let rho_ba = rho_set(fs, proj, b, a)?;
                    let rho_ab = rho_set(fs, proj, a, b)?;
                    let da = proj.fcg[a].set_distance(&tuple.coords[a], &rho_ba);
                    let db = proj.fcg[b].set_distance(&tuple.coords[b], &rho_ab);
                    if da.min(db) > kappa {
                        return Ok(ConsistencyOutcome {
                            pass: false,
                            violation: Some((a, b, da.min(db))),
                        });
                    }
                }
                Relation::NestedIn | Relation::Contains => {
                    // Orient as nested v inside host u.
                    let (v, u) = if fs.relations[a][b] == Relation::NestedIn {
                        (a, b)
                    } else {
                        (b, a)
                    };
                    let rho_vu = rho_set(fs, proj, v, u)?;
                    let d_host = proj.fcg[u].set_distance(&tuple.coords[u], &rho_vu);
                    let down = rho_downward(complex, fs, proj, u, v, &tuple.coords[u])?;
                    let mut union = tuple.coords[v].clone();
                    union.extend(down);
                    union.sort_unstable();
                    union.dedup();
                    let diam = proj.fcg[v].set_diameter(&union);
                    if d_host.min(diam) > kappa {
                        return Ok(ConsistencyOutcome {
                            pass: false,
                            violation: Some((a, b, d_host.min(diam))),
                        });
                    }
                }
                Relation::Orthogonal | Relation::Same => {}
            }
        }
    }
    Ok(ConsistencyOutcome { pass: true, violation: None })
}

/// Brute-force realization: the vertex minimizing the worst coordinate
/// distance, ties to the smallest id.  Precondition: the tuple passes the
/// consistency check at `kappa`.
pub fn realize(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    tuple: &ProjectionTuple,
    kappa: u32,
) -> Result<(u32, u32), Error> {
    let outcome = consistency_check(complex, fs, proj, tuple, kappa)?;
    if !outcome.pass {
        let (a, b, d) = outcome.violation.unwrap();
        return Err(Error::Inconsistent(format!(
            "classes {a},{b} violate consistency at {d} > kappa {kappa}"
        )));
    }
    let mut best = (0u32, u32::MAX);
    for y in 0..complex.num_vertices() {
        let worst = realize_theta_at(fs, proj, tuple, y);
        if worst < best.1 {
            best = (y, worst);
        }
    }
    Ok(best)
}

/// Worst coordinate mismatch of a vertex against a tuple: the maximum over
/// classes of the Hausdorff distance between the cliques, so zero means the
/// vertex realizes every coordinate exactly.
pub fn realize_theta_at(
    fs: &FactorSystem,
    proj: &Projections,
    tuple: &ProjectionTuple,
    y: u32,
) -> u32 {
    let mut worst = 0u32;
    for c in 0..fs.num_classes() {
        if proj.fcg[c].num_base() == 0 || tuple.coords[c].is_empty() {
            continue;
        }
        let mine = &proj.cliques[c][y as usize];
        if mine.is_empty() {
            continue;
        }
        worst = worst.max(proj.fcg[c].hausdorff(&tuple.coords[c], mine));
    }
    worst
}
