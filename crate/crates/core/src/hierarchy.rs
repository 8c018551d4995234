//! Hierarchy paths: geodesics of the complex carried by geodesics of the
//! factored contact graph.
//!
//! A carried path decomposes as syllables, each a geodesic inside the
//! subcomplex associated to a carrying vertex (a combinatorial hyperplane for
//! a base vertex, a parallel copy of the class for a cone vertex), joined by
//! connectors of length at most one, trivial next to cone vertices.  The
//! search enumerates carrying geodesics between cliques containing the
//! endpoints and, per geodesic, gate-chains candidate representatives until a
//! chain of total length equal to the graph distance appears; existence is
//! guaranteed, so exhaustion without success only happens via the cap.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits;
use crate::complex::CubeComplex;
use crate::error::Error;
use crate::factor::FactorSystem;
use crate::factored::Projections;
use crate::geodesics;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CarrierVertex {
    /// Base vertex: an ambient hyperplane id.
    Hyperplane(u32),
    /// Cone vertex: a parallelism class index.
    Cone(usize),
}

#[derive(Clone, Debug)]
pub struct Syllable {
    pub carrier: CarrierVertex,
    /// Vertex set of the chosen representative subcomplex.
    pub subcomplex: Vec<u32>,
    /// Geodesic inside the representative (possibly a single vertex).
    pub path: Vec<u32>,
    /// Connector edge to the next syllable, when of length one.
    pub connector: Option<(u32, u32)>,
}

#[derive(Clone, Debug)]
pub struct HierarchyPath {
    /// The full vertex path; a geodesic of the complex.
    pub path: Vec<u32>,
    pub syllables: Vec<Syllable>,
    /// The carrying geodesic, as local vertex ids of the factored contact
    /// graph of the ambient class.
    pub carrying: Vec<u32>,
}

/// Candidate representatives of a carrying vertex.
fn candidates(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    local: u32,
) -> (CarrierVertex, Vec<Vec<u32>>) {
    let graph = &proj.fcg[fs.whole];
    if (local as usize) < graph.num_base() {
        let h = graph.hyp_labels[local as usize];
        let hyp = &complex.hyperplanes()[h as usize];
        (
            CarrierVertex::Hyperplane(h),
            vec![hyp.side_minus.clone(), hyp.side_plus.clone()],
        )
    } else {
        let class = graph.cone_classes[local as usize - graph.num_base()];
        (CarrierVertex::Cone(class), fs.classes[class].copies.clone())
    }
}

fn is_cone(proj: &Projections, fs: &FactorSystem, local: u32) -> bool {
    (local as usize) >= proj.fcg[fs.whole].num_base()
}

/// Carrying vertices whose associated subcomplexes can contain `x`.
fn cliques_containing(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    x: u32,
) -> Vec<u32> {
    let graph = &proj.fcg[fs.whole];
    let mut out = Vec::new();
    for (i, &h) in graph.hyp_labels.iter().enumerate() {
        let hyp = &complex.hyperplanes()[h as usize];
        if hyp.carrier.binary_search(&x).is_ok() {
            out.push(i as u32);
        }
    }
    for (j, &c) in graph.cone_classes.iter().enumerate() {
        if fs.classes[c].copies.iter().any(|copy| copy.binary_search(&x).is_ok()) {
            out.push((graph.num_base() + j) as u32);
        }
    }
    out
}

struct Chain {
    path: Vec<u32>,
    syllables: Vec<Syllable>,
}

/// Gate of `x` into a vertex set (closest vertex, first on ties; unique for
/// convex sets).
fn gate_into(complex: &CubeComplex, set: &[u32], x: u32) -> u32 {
    let mut best = set[0];
    let mut best_d = complex.dist(x, best);
    for &v in &set[1..] {
        let d = complex.dist(x, v);
        if d < best_d {
            best = v;
            best_d = d;
        }
    }
    best
}

/// Assemble the gate-chained path along chosen representatives; `None` when a
/// connector violates its length bound or the total misses the distance.
fn assemble(
    complex: &CubeComplex,
    carrying: &[(CarrierVertex, Vec<u32>, bool)],
    x: u32,
    y: u32,
) -> Option<Chain> {
    let target = complex.dist(x, y);
    let words = bits::words_for(complex.num_vertices() as usize);
    let r = carrying.len();
    let mut entries = Vec::with_capacity(r);
    entries.push(x);
    for i in 1..r {
        let prev = entries[i - 1];
        entries.push(gate_into(complex, &carrying[i].1, prev));
    }

    let mut path: Vec<u32> = vec![x];
    let mut syllables = Vec::with_capacity(r);
    let mut total = 0u32;
    for i in 0..r {
        let exit = if i + 1 < r {
            gate_into(complex, &carrying[i].1, entries[i + 1])
        } else {
            y
        };
        let allowed = bits::mask_of(&carrying[i].1, words);
        let syll = complex.geodesic_in(entries[i], exit, &allowed);
        total += complex.dist(entries[i], exit);
        let connector = if i + 1 < r {
            let d = complex.dist(exit, entries[i + 1]);
            let cone_adjacent = carrying[i].2 || carrying[i + 1].2;
            if d > 1 || (cone_adjacent && d != 0) {
                return None;
            }
            total += d;
            if d == 1 {
                Some((exit, entries[i + 1]))
            } else {
                None
            }
        } else {
            None
        };
        if total > target {
            return None;
        }
        for &v in &syll[1..] {
            path.push(v);
        }
        if let Some((_, b)) = connector {
            path.push(b);
        }
        syllables.push(Syllable {
            carrier: carrying[i].0.clone(),
            subcomplex: carrying[i].1.clone(),
            path: syll,
            connector,
        });
    }
    if total != target {
        return None;
    }
    Some(Chain { path, syllables })
}

/// Depth-first search over representative choices for one carrying geodesic,
/// candidates ordered by distance to the running entry point.
fn search_representatives(
    complex: &CubeComplex,
    options: &[(CarrierVertex, Vec<Vec<u32>>, bool)],
    x: u32,
    y: u32,
    budget: &mut u32,
) -> Option<Chain> {
    // `entry` is the gate-chained entry point of the most recent choice.
    fn rec(
        complex: &CubeComplex,
        options: &[(CarrierVertex, Vec<Vec<u32>>, bool)],
        chosen: &mut Vec<(CarrierVertex, Vec<u32>, bool)>,
        entry: u32,
        x: u32,
        y: u32,
        budget: &mut u32,
    ) -> Option<Chain> {
        if *budget == 0 {
            return None;
        }
        let i = chosen.len();
        if i == options.len() {
            *budget -= 1;
            return assemble(complex, chosen, x, y);
        }
        let mut cands: Vec<&Vec<u32>> = options[i].1.iter().collect();
        if i == 0 {
            cands.retain(|c| c.binary_search(&x).is_ok());
        }
        if i + 1 == options.len() {
            cands.retain(|c| c.binary_search(&y).is_ok());
        }
        // Greedy: closest representative to the running entry point first.
        cands.sort_by_key(|c| {
            let d = c.iter().map(|&v| complex.dist(entry, v)).min().unwrap_or(u32::MAX);
            (d, c.first().copied().unwrap_or(0))
        });
        for c in cands {
            let next_entry = if i == 0 { x } else { gate_into(complex, c, entry) };
            chosen.push((options[i].0.clone(), c.clone(), options[i].2));
            if let Some(found) = rec(complex, options, chosen, next_entry, x, y, budget) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    let mut chosen = Vec::new();
    rec(complex, options, &mut chosen, x, x, y, budget)
}

/// A hierarchy path between two vertices.  `cap` bounds the number of
/// carrying geodesics examined across all endpoint-clique pairs.
pub fn hierarchy_path(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    x: u32,
    y: u32,
    cap: usize,
) -> Result<HierarchyPath, Error> {
    if x >= complex.num_vertices() || y >= complex.num_vertices() {
        return Err(Error::InvalidId(x.max(y)));
    }
    let graph = &proj.fcg[fs.whole];
    if x == y {
        let sources = cliques_containing(complex, fs, proj, x);
        let &v0 = sources.first().ok_or(Error::EmptyFactor)?;
        let (carrier, cands) = candidates(complex, fs, proj, v0);
        let sub = cands
            .iter()
            .find(|c| c.binary_search(&x).is_ok())
            .cloned()
            .unwrap_or_else(|| cands[0].clone());
        return Ok(HierarchyPath {
            path: vec![x],
            syllables: vec![Syllable {
                carrier,
                subcomplex: sub,
                path: vec![x],
                connector: None,
            }],
            carrying: vec![v0],
        });
    }

    let sources = cliques_containing(complex, fs, proj, x);
    let targets = cliques_containing(complex, fs, proj, y);
    let mut examined = 0usize;
    for &s in &sources {
        for &t in &targets {
            let remaining = cap.saturating_sub(examined);
            if remaining == 0 {
                return Err(Error::CapExceeded { count: examined as u128 });
            }
            let geods = geodesics::enumerate_geodesics(&graph.adj, s, t, remaining)?;
            examined += geods.paths.len();
            for carrying in &geods.paths {
                let options: Vec<(CarrierVertex, Vec<Vec<u32>>, bool)> = carrying
                    .iter()
                    .map(|&v| {
                        let (cv, cands) = candidates(complex, fs, proj, v);
                        let cone = is_cone(proj, fs, v);
                        (cv, cands, cone)
                    })
                    .collect();
                let mut budget = 4096u32;
                if let Some(chain) =
                    search_representatives(complex, &options, x, y, &mut budget)
                {
                    return Ok(HierarchyPath {
                        path: chain.path,
                        syllables: chain.syllables,
                        carrying: carrying.clone(),
                    });
                }
            }
        }
    }
    Err(Error::CapExceeded { count: examined as u128 })
}

/// Check every structural invariant of a returned hierarchy path: the vertex
/// path is a geodesic, syllables are geodesics inside their subcomplexes,
/// connectors have length at most one and are trivial next to cone vertices,
/// and the carrying sequence is a geodesic of the ambient factored contact
/// graph.
pub fn verify_hierarchy_path(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    hp: &HierarchyPath,
) -> bool {
    let x = *hp.path.first().unwrap();
    let y = *hp.path.last().unwrap();
    if hp.path.len() as u32 != complex.dist(x, y) + 1 {
        return false;
    }
    for w in hp.path.windows(2) {
        if complex.edge_index(w[0], w[1]).is_none() {
            return false;
        }
    }
    let graph = &proj.fcg[fs.whole];
    if hp.carrying.len() >= 2 {
        let d = graph.dist[hp.carrying[0] as usize][*hp.carrying.last().unwrap() as usize];
        if d + 1 != hp.carrying.len() as u32 {
            return false;
        }
        for w in hp.carrying.windows(2) {
            if !graph.adj[w[0] as usize].contains(&w[1]) {
                return false;
            }
        }
    }
    for (i, syll) in hp.syllables.iter().enumerate() {
        for &v in &syll.path {
            if syll.subcomplex.binary_search(&v).is_err() {
                return false;
            }
        }
        let a = *syll.path.first().unwrap();
        let b = *syll.path.last().unwrap();
        if syll.path.len() as u32 != complex.dist(a, b) + 1 {
            return false;
        }
        if let Some((u, v)) = syll.connector {
            if complex.dist(u, v) != 1 {
                return false;
            }
            let cone_adjacent = matches!(syll.carrier, CarrierVertex::Cone(_))
                || matches!(
                    hp.syllables.get(i + 1).map(|s| &s.carrier),
                    Some(CarrierVertex::Cone(_))
                );
            if cone_adjacent {
                return false;
            }
        }
    }
    true
}
