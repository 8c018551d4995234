//! Deterministic enumeration of all geodesics between two graph vertices.

use alloc::vec;
use alloc::vec::Vec;

use crate::contact::apsp_row;
use crate::error::Error;

#[derive(Clone, Debug)]
pub struct Geodesics {
    /// Paths from `u` to `v` in lexicographic visit order, truncated at the
    /// cap.
    pub paths: Vec<Vec<u32>>,
    /// Exact total count, independent of the cap.
    pub total: u128,
    pub truncated: bool,
}

/// All geodesics from `u` to `v`, visiting neighbors in ascending order so
/// the enumeration is reproducible.  The count is exact even when the listed
/// paths are truncated at `cap`.
pub fn enumerate_geodesics(adj: &[Vec<u32>], u: u32, v: u32, cap: usize) -> Result<Geodesics, Error> {
    if u as usize >= adj.len() || v as usize >= adj.len() {
        return Err(Error::InvalidId(u.max(v)));
    }
    let dist = apsp_row(adj, v as usize);
    if dist[u as usize] == u32::MAX {
        return Err(Error::DisconnectedPair(u, v));
    }

    // Exact counts by dynamic programming over decreasing distance.
    let mut count = vec![0u128; adj.len()];
    count[v as usize] = 1;
    let mut order: Vec<u32> = (0..adj.len() as u32)
        .filter(|&x| dist[x as usize] != u32::MAX)
        .collect();
    order.sort_unstable_by_key(|&x| dist[x as usize]);
    for &x in &order {
        if x == v {
            continue;
        }
        let dx = dist[x as usize];
        let mut c: u128 = 0;
        for &w in &adj[x as usize] {
            if dist[w as usize] + 1 == dx {
                c = c.saturating_add(count[w as usize]);
            }
        }
        count[x as usize] = c;
    }
    let total = count[u as usize];

    // Depth-first listing, ascending neighbor order.
    let mut paths = Vec::new();
    let mut stack = vec![u];
    collect(adj, &dist, v, &mut stack, &mut paths, cap);
    let truncated = (paths.len() as u128) < total;
    Ok(Geodesics { paths, total, truncated })
}

fn collect(
    adj: &[Vec<u32>],
    dist: &[u32],
    target: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    let cur = *stack.last().unwrap();
    if cur == target {
        out.push(stack.clone());
        return;
    }
    let d = dist[cur as usize];
    for &w in &adj[cur as usize] {
        if dist[w as usize] + 1 == d {
            stack.push(w);
            collect(adj, dist, target, stack, out, cap);
            stack.pop();
            if out.len() >= cap {
                return;
            }
        }
    }
}

/// Strict variant: error when the cap truncates the listing; the error
/// carries the exact count.
pub fn geodesics_strict(adj: &[Vec<u32>], u: u32, v: u32, cap: usize) -> Result<Geodesics, Error> {
    let g = enumerate_geodesics(adj, u, v, cap)?;
    if g.truncated {
        return Err(Error::CapExceeded { count: g.total });
    }
    Ok(g)
}
