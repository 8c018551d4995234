//! Bottleneck check: quasi-tree certificates for connected graphs.
//!
//! For every vertex pair some near-midpoint ball of radius delta must meet
//! every path between the pair; the least such delta certifies that the graph
//! is (26*delta, 16*delta)-quasi-isometric to a tree.

use alloc::collections::VecDeque;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::contact::apsp;
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottleneckReport {
    pub delta: u32,
    /// Derived tree quasi-isometry constants (26*delta, 16*delta).
    pub tree_qi: (u32, u32),
    /// Pair realizing delta, if any pair needed a positive radius.
    pub witness: Option<(u32, u32)>,
}

/// Least delta over all pairs; on a connected finite graph this always
/// exists, so the only error is a disconnected input.
pub fn bottleneck_delta(adj: &[Vec<u32>]) -> Result<BottleneckReport, Error> {
    let n = adj.len();
    if n == 0 {
        return Ok(BottleneckReport { delta: 0, tree_qi: (0, 0), witness: None });
    }
    let dist = apsp(adj);
    if dist[0].iter().any(|&d| d == u32::MAX) {
        return Err(Error::MalformedInput(
            "bottleneck check requires a connected graph".to_string(),
        ));
    }
    let mut delta = 0u32;
    let mut witness = None;
    for x in 0..n as u32 {
        for y in x + 1..n as u32 {
            let d = dist[x as usize][y as usize];
            // Vertices on some geodesic, within 1/2 of the metric midpoint.
            let lo = d / 2;
            let hi = d.div_ceil(2);
            let mut best = u32::MAX;
            for m in 0..n as u32 {
                let dxm = dist[x as usize][m as usize];
                if dxm + dist[m as usize][y as usize] != d || dxm < lo || dxm > hi {
                    continue;
                }
                let r = min_separating_radius(adj, &dist, x, y, m);
                best = best.min(r);
                if best == 0 {
                    break;
                }
            }
            if best > delta {
                delta = best;
                witness = Some((x, y));
            }
        }
    }
    Ok(BottleneckReport { delta, tree_qi: (26 * delta, 16 * delta), witness })
}

/// Smallest radius r such that every x-y path meets the closed ball B(m,r).
/// When x or y lies in the ball this holds vacuously, so the search
/// terminates by r = min(d(m,x), d(m,y)).
fn min_separating_radius(adj: &[Vec<u32>], dist: &[Vec<u32>], x: u32, y: u32, m: u32) -> u32 {
    let cap = dist[m as usize][x as usize].min(dist[m as usize][y as usize]);
    for r in 0..=cap {
        if dist[m as usize][x as usize] <= r || dist[m as usize][y as usize] <= r {
            return r;
        }
        if !connects_avoiding(adj, dist, x, y, m, r) {
            return r;
        }
    }
    cap
}

fn connects_avoiding(adj: &[Vec<u32>], dist: &[Vec<u32>], x: u32, y: u32, m: u32, r: u32) -> bool {
    let blocked = |v: u32| dist[m as usize][v as usize] <= r;
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::new();
    seen[x as usize] = true;
    queue.push_back(x);
    while let Some(u) = queue.pop_front() {
        if u == y {
            return true;
        }
        for &v in &adj[u as usize] {
            if !seen[v as usize] && !blocked(v) {
                seen[v as usize] = true;
                queue.push_back(v);
            }
        }
    }
    false
}
