//! Contact and crossing graphs of complexes and of convex subcomplexes.

use alloc::vec;
use alloc::vec::Vec;

use crate::complex::CubeComplex;
use crate::subcomplex::Subcomplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Contact,
    Crossing,
}

/// Graph on hyperplanes.  Vertex `i` stands for hyperplane `labels[i]` of the
/// ambient complex; for whole-complex graphs `labels` is the identity.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    pub kind: GraphKind,
    pub labels: Vec<u32>,
    pub adj: Vec<Vec<u32>>,
}

impl IntersectionGraph {
    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let d = apsp_row(&self.adj, 0);
        d.iter().all(|&x| x != u32::MAX)
    }
}

/// Hyperplanes are adjacent when their carriers share a vertex.
pub fn contact_graph(complex: &CubeComplex) -> IntersectionGraph {
    let h = complex.hyperplane_count() as usize;
    let mut adj = vec![Vec::new(); h];
    for v in 0..complex.num_vertices() {
        let carriers = complex.vertex_carriers(v);
        for (i, &a) in carriers.iter().enumerate() {
            for &b in &carriers[i + 1..] {
                push_edge(&mut adj, a, b);
            }
        }
    }
    finish(&mut adj);
    IntersectionGraph { kind: GraphKind::Contact, labels: (0..h as u32).collect(), adj }
}

/// The spanning subgraph keeping only crossing pairs (shared squares).
pub fn crossing_graph(complex: &CubeComplex) -> IntersectionGraph {
    let h = complex.hyperplane_count() as usize;
    let mut adj = vec![Vec::new(); h];
    for &(a, b) in complex.crossing_pairs() {
        push_edge(&mut adj, a, b);
    }
    finish(&mut adj);
    IntersectionGraph { kind: GraphKind::Crossing, labels: (0..h as u32).collect(), adj }
}

/// Intrinsic contact graph of a convex subcomplex: hyperplane traces are
/// adjacent when their carriers within the subcomplex share a vertex.
/// Labels are ambient hyperplane ids.
pub fn contact_graph_of(complex: &CubeComplex, k: &Subcomplex, crossing: &[u32]) -> IntersectionGraph {
    let labels: Vec<u32> = crossing.to_vec();
    let mut adj = vec![Vec::new(); labels.len()];
    for &v in k.vertices() {
        let mut local = Vec::new();
        for &w in complex.neighbors(v) {
            if k.contains(w) {
                let cls = complex.theta_of_edge(complex.edge_index(v, w).unwrap());
                if let Ok(i) = labels.binary_search(&cls) {
                    local.push(i as u32);
                }
            }
        }
        local.sort_unstable();
        local.dedup();
        for (i, &a) in local.iter().enumerate() {
            for &b in &local[i + 1..] {
                push_edge(&mut adj, a, b);
            }
        }
    }
    finish(&mut adj);
    IntersectionGraph { kind: GraphKind::Contact, labels, adj }
}

fn push_edge(adj: &mut [Vec<u32>], a: u32, b: u32) {
    adj[a as usize].push(b);
    adj[b as usize].push(a);
}

fn finish(adj: &mut [Vec<u32>]) {
    for nbrs in adj.iter_mut() {
        nbrs.sort_unstable();
        nbrs.dedup();
    }
}

/// Single-source shortest paths on an adjacency list; `u32::MAX` marks
/// unreachable vertices.
pub fn apsp_row(adj: &[Vec<u32>], start: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    let mut queue = alloc::collections::VecDeque::new();
    dist[start] = 0;
    queue.push_back(start as u32);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        for &v in &adj[u as usize] {
            if dist[v as usize] == u32::MAX {
                dist[v as usize] = du + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn apsp(adj: &[Vec<u32>]) -> Vec<Vec<u32>> {
    (0..adj.len()).map(|v| apsp_row(adj, v)).collect()
}

/// Minimum distance between two vertex sets under a distance table.
pub fn set_distance(table: &[Vec<u32>], a: &[u32], b: &[u32]) -> u32 {
    let mut best = u32::MAX;
    for &x in a {
        for &y in b {
            best = best.min(table[x as usize][y as usize]);
        }
    }
    best
}

/// Hausdorff distance between two vertex sets: zero exactly when the sets
/// are equal, which is what coordinate comparisons of projection cliques
/// need.
pub fn set_hausdorff(table: &[Vec<u32>], a: &[u32], b: &[u32]) -> u32 {
    if a.is_empty() && b.is_empty() {
        return 0;
    }
    if a.is_empty() || b.is_empty() {
        return u32::MAX;
    }
    let one_way = |from: &[u32], to: &[u32]| {
        from.iter()
            .map(|&x| to.iter().map(|&y| table[x as usize][y as usize]).min().unwrap())
            .max()
            .unwrap()
    };
    one_way(a, b).max(one_way(b, a))
}

/// Diameter of a vertex set under a distance table.
pub fn set_diameter(table: &[Vec<u32>], a: &[u32]) -> u32 {
    let mut best = 0;
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i..] {
            best = best.max(table[x as usize][y as usize]);
        }
    }
    best
}
