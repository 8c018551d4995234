//! Factored contact graphs and projections onto them.
//!
//! The factored contact graph of a member F is its intrinsic contact graph
//! with one cone vertex per parallelism class of proper members inside F that
//! is hyperplane-parallel or has diameter at least xi; the cone vertex is
//! joined to the contact subgraph of that class.  A point of the complex
//! projects to the clique of hyperplanes of F whose carriers contain its
//! gate.

use alloc::vec;
use alloc::vec::Vec;

use crate::complex::CubeComplex;
use crate::contact::{self, set_diameter, set_distance};
use crate::error::Error;
use crate::factor::{FactorSystem, Relation};
use crate::subcomplex::GateTable;

#[derive(Clone, Debug)]
pub struct FactoredContactGraph {
    pub class: usize,
    /// Ambient hyperplane ids of the base vertices, ascending; base vertex
    /// `i` is hyperplane `hyp_labels[i]`.
    pub hyp_labels: Vec<u32>,
    /// Classes coned off; cone `j` is vertex `hyp_labels.len() + j`.
    pub cone_classes: Vec<usize>,
    pub adj: Vec<Vec<u32>>,
    pub dist: Vec<Vec<u32>>,
}

impl FactoredContactGraph {
    pub fn num_vertices(&self) -> usize {
        self.hyp_labels.len() + self.cone_classes.len()
    }

    pub fn num_base(&self) -> usize {
        self.hyp_labels.len()
    }

    pub fn hyp_index(&self, hyperplane: u32) -> Option<u32> {
        self.hyp_labels.binary_search(&hyperplane).ok().map(|i| i as u32)
    }

    pub fn cone_index(&self, class: usize) -> Option<u32> {
        self.cone_classes
            .iter()
            .position(|&c| c == class)
            .map(|i| (self.hyp_labels.len() + i) as u32)
    }

    /// Minimum distance between vertex sets (proximity semantics).
    pub fn set_distance(&self, a: &[u32], b: &[u32]) -> u32 {
        set_distance(&self.dist, a, b)
    }

    /// Hausdorff distance between vertex sets (coarse-point semantics; zero
    /// exactly on equal sets).
    pub fn hausdorff(&self, a: &[u32], b: &[u32]) -> u32 {
        contact::set_hausdorff(&self.dist, a, b)
    }

    pub fn set_diameter(&self, a: &[u32]) -> u32 {
        set_diameter(&self.dist, a)
    }
}

/// Projection data: one factored contact graph per class and the clique of
/// every complex vertex in each of them.
#[derive(Clone, Debug)]
pub struct Projections {
    pub fcg: Vec<FactoredContactGraph>,
    /// `cliques[class][vertex]`: local base-vertex indices, sorted.
    pub cliques: Vec<Vec<Vec<u32>>>,
}

/// Eligibility of a class for coning: hyperplane-parallel or diameter at
/// least xi.
pub fn cone_eligible(fs: &FactorSystem, class: usize) -> bool {
    fs.classes[class].hyperplane_parallel || fs.classes[class].diameter >= fs.xi
}

/// Build the factored contact graph of one class (of its canonical member).
pub fn factored_contact_graph(
    complex: &CubeComplex,
    fs: &FactorSystem,
    class: usize,
) -> FactoredContactGraph {
    let member = fs.canonical(class);
    let base = contact::contact_graph_of(complex, &member.sub, &member.crossing);
    let hyp_labels = base.labels.clone();
    let nb = hyp_labels.len();

    // One cone per parallelism class of proper members inside the canonical
    // representative, when eligible.
    let inside = fs.members_inside(fs.classes[class].canonical);
    let mut cone_classes: Vec<usize> = inside
        .iter()
        .map(|&i| fs.members[i].class)
        .filter(|&c| c != class && cone_eligible(fs, c))
        .collect();
    cone_classes.sort_unstable();
    cone_classes.dedup();

    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); nb + cone_classes.len()];
    for (i, nbrs) in base.adj.iter().enumerate() {
        adj[i] = nbrs.clone();
    }
    for (j, &c) in cone_classes.iter().enumerate() {
        let cone = (nb + j) as u32;
        for h in &fs.classes[c].crossing {
            if let Ok(i) = hyp_labels.binary_search(h) {
                adj[i].push(cone);
                adj[cone as usize].push(i as u32);
            }
        }
    }
    for nbrs in &mut adj {
        nbrs.sort_unstable();
        nbrs.dedup();
    }
    let dist = contact::apsp(&adj);
    FactoredContactGraph { class, hyp_labels, cone_classes, adj, dist }
}

pub fn build_projections(complex: &CubeComplex, fs: &FactorSystem) -> Projections {
    let fcg: Vec<FactoredContactGraph> = (0..fs.num_classes())
        .map(|c| factored_contact_graph(complex, fs, c))
        .collect();
    let mut cliques = Vec::with_capacity(fs.num_classes());
    for (c, graph) in fcg.iter().enumerate() {
        let member = fs.canonical(c);
        let table = GateTable::build(complex, &member.sub, &member.crossing);
        // Clique of each vertex of the member: hyperplanes of the member
        // whose carrier inside the member contains it.
        let mut clique_of_gate: alloc::collections::BTreeMap<u32, Vec<u32>> =
            alloc::collections::BTreeMap::new();
        for &g in member.sub.vertices() {
            let mut clique = Vec::new();
            for &w in complex.neighbors(g) {
                if member.sub.contains(w) {
                    let h = complex.theta_of_edge(complex.edge_index(g, w).unwrap());
                    if let Some(i) = graph.hyp_index(h) {
                        clique.push(i);
                    }
                }
            }
            clique.sort_unstable();
            clique.dedup();
            clique_of_gate.insert(g, clique);
        }
        let per_vertex: Vec<Vec<u32>> = (0..complex.num_vertices())
            .map(|x| {
                if member.sub.len() == 1 {
                    Vec::new()
                } else {
                    clique_of_gate[&table.gate(complex, x)].clone()
                }
            })
            .collect();
        cliques.push(per_vertex);
    }
    Projections { fcg, cliques }
}

/// The clique of hyperplanes of the class's representative whose carriers
/// contain the gate of `x`, as ambient hyperplane ids.  `EmptyFactor` flags a
/// single-vertex representative.
pub fn project_point(
    proj: &Projections,
    class: usize,
    x: u32,
) -> Result<Vec<u32>, Error> {
    if proj.fcg[class].num_base() == 0 {
        return Err(Error::EmptyFactor);
    }
    Ok(proj.cliques[class][x as usize]
        .iter()
        .map(|&i| proj.fcg[class].hyp_labels[i as usize])
        .collect())
}

/// Projection of a vertex set: the union of the vertex cliques (local
/// indices).
pub fn project_set(proj: &Projections, class: usize, verts: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = verts
        .iter()
        .flat_map(|&v| proj.cliques[class][v as usize].iter().copied())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Projection of one class into another's factored contact graph.
///
/// * `from` properly nested in `to`: the embedded copy of the contact graph,
///   i.e. the crossing set of `from` as base vertices of `to`.
/// * otherwise: the union over all geometric parallel copies of `from` of
///   their projections (bounded for transverse pairs, covering for
///   orthogonal ones).
///
/// Local vertex indices of `fcg[to]`.
pub fn rho_set(
    fs: &FactorSystem,
    proj: &Projections,
    from: usize,
    to: usize,
) -> Result<Vec<u32>, Error> {
    if from == to {
        return Err(Error::SameClass);
    }
    if fs.relations[from][to] == Relation::NestedIn {
        let graph = &proj.fcg[to];
        return Ok(fs.classes[from]
            .crossing
            .iter()
            .filter_map(|&h| graph.hyp_index(h))
            .collect());
    }
    let mut verts: Vec<u32> = fs.classes[from].copies.iter().flatten().copied().collect();
    verts.sort_unstable();
    verts.dedup();
    Ok(project_set(proj, to, &verts))
}

/// Downward projection map on cliques: for `to` properly nested in `from`,
/// send a clique of `fcg[from]` (given as local indices) to the union of the
/// projections of one combinatorial hyperplane per clique member.  Parallel
/// copies project identically, so one side suffices.
pub fn rho_downward(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    from: usize,
    to: usize,
    clique: &[u32],
) -> Result<Vec<u32>, Error> {
    if fs.relations[to][from] != Relation::NestedIn {
        return Err(Error::SameClass);
    }
    let graph = &proj.fcg[from];
    let mut out = Vec::new();
    for &i in clique {
        if (i as usize) >= graph.num_base() {
            continue;
        }
        let h = graph.hyp_labels[i as usize];
        let side = &complex.hyperplanes()[h as usize].side_minus;
        out.extend(project_set(proj, to, side));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Distance between the projections of two complex vertices in a class's
/// factored contact graph (Hausdorff: zero exactly when the cliques agree);
/// zero when the graph is empty.
pub fn proj_distance(proj: &Projections, class: usize, x: u32, y: u32) -> u32 {
    let a = &proj.cliques[class][x as usize];
    let b = &proj.cliques[class][y as usize];
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    proj.fcg[class].hausdorff(a, b)
}
