//! Relation-respecting coloring of parallelism classes.
//!
//! Nested or orthogonal class pairs must receive different colors; each color
//! class is then pairwise transverse.  Parallel members share a color
//! automatically since the coloring lives on classes.  Greedy on descending
//! conflict degree; the count is finite, not optimal.

use alloc::vec;
use alloc::vec::Vec;

use crate::factor::{FactorSystem, Relation};

#[derive(Clone, Debug)]
pub struct Coloring {
    /// Color of each class, 1-based.
    pub color: Vec<u32>,
    pub num_colors: u32,
}

pub fn color_factors(fs: &FactorSystem) -> Coloring {
    let k = fs.num_classes();
    let conflict = |a: usize, b: usize| {
        matches!(
            fs.relations[a][b],
            Relation::NestedIn | Relation::Contains | Relation::Orthogonal
        )
    };
    let mut order: Vec<usize> = (0..k).collect();
    let degree: Vec<usize> = (0..k)
        .map(|a| (0..k).filter(|&b| b != a && conflict(a, b)).count())
        .collect();
    order.sort_by_key(|&a| (usize::MAX - degree[a], a));

    let mut color = vec![0u32; k];
    for &a in &order {
        let mut used: Vec<u32> = (0..k)
            .filter(|&b| b != a && conflict(a, b) && color[b] != 0)
            .map(|b| color[b])
            .collect();
        used.sort_unstable();
        used.dedup();
        let mut c = 1u32;
        for u in used {
            if u == c {
                c += 1;
            } else if u > c {
                break;
            }
        }
        color[a] = c;
    }
    let num_colors = color.iter().copied().max().unwrap_or(0);
    Coloring { color, num_colors }
}

/// Every color class must be pairwise transverse; returns the first
/// violating pair otherwise.
pub fn verify_coloring(fs: &FactorSystem, coloring: &Coloring) -> Result<(), (usize, usize)> {
    let k = fs.num_classes();
    for a in 0..k {
        for b in a + 1..k {
            if coloring.color[a] == coloring.color[b]
                && fs.relations[a][b] != Relation::Transverse
            {
                return Err((a, b));
            }
        }
    }
    Ok(())
}
