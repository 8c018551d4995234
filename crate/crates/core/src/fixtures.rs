//! Named test complexes.
//!
//! Vertex coordinates are documented per fixture so tests can address
//! specific vertices:
//!
//! * `C_edge` — 0,1.
//! * `C_square` — (x,y) with id `y*2+x`, x,y in 0..=1.
//! * `C_path3` — path 0-1-2-3.
//! * `C_tripod` — center 0, leaves 1,2,3.
//! * `C_cube3` — id = bits zyx of the corner.
//! * `C_grid(m,n)` — m*n squares; vertex (x,y) has id `y*(m+1)+x`,
//!   x in 0..=m, y in 0..=n.
//! * `C_dumbbell` — left square 0..=3 (as `C_square`), bridge 3-4, right
//!   square 4..=7 with 4 its lower-left corner.
//! * `C_tree(k,d)` — complete k-ary tree of depth d, ids in BFS order.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{CubeComplex, RawComplex};
use crate::error::Error;

pub fn grid_raw(m: u32, n: u32) -> RawComplex {
    let width = m + 1;
    let mut edges = Vec::new();
    for y in 0..=n {
        for x in 0..=m {
            let v = y * width + x;
            if x < m {
                edges.push((v, v + 1));
            }
            if y < n {
                edges.push((v, v + width));
            }
        }
    }
    RawComplex::new(&format!("C_grid({m},{n})"), width * (n + 1), edges)
}

fn tree_raw(k: u32, d: u32) -> RawComplex {
    let mut edges = Vec::new();
    let mut frontier = vec![0u32];
    let mut next_id = 1u32;
    for _ in 0..d {
        let mut next = Vec::new();
        for &v in &frontier {
            for _ in 0..k {
                edges.push((v, next_id));
                next.push(next_id);
                next_id += 1;
            }
        }
        frontier = next;
    }
    RawComplex::new(&format!("C_tree({k},{d})"), next_id, edges)
}

fn raw_fixture(name: &str) -> Result<RawComplex, Error> {
    match name {
        "C_edge" => Ok(RawComplex::new("C_edge", 2, vec![(0, 1)])),
        "C_square" => Ok(RawComplex::new(
            "C_square",
            4,
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        )),
        "C_path3" => Ok(RawComplex::new("C_path3", 4, vec![(0, 1), (1, 2), (2, 3)])),
        "C_tripod" => Ok(RawComplex::new("C_tripod", 4, vec![(0, 1), (0, 2), (0, 3)])),
        "C_cube3" => {
            let mut edges = Vec::new();
            for v in 0..8u32 {
                for bit in 0..3 {
                    let w = v ^ (1 << bit);
                    if v < w {
                        edges.push((v, w));
                    }
                }
            }
            Ok(RawComplex::new("C_cube3", 8, edges))
        }
        "C_dumbbell" => Ok(RawComplex::new(
            "C_dumbbell",
            8,
            vec![
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (4, 5),
                (4, 6),
                (5, 7),
                (6, 7),
            ],
        )),
        // Two 5x1 grids joined by a length-8 path: wide coordinate graphs
        // with transverse classes, used by the audit's negative controls.
        "C_barbell" => {
            let mut edges = Vec::new();
            let grid = grid_raw(5, 1);
            edges.extend(grid.edges.iter().copied());
            // Bridge from the left corner (5,1)=11 through 12..=18 to the
            // right block rooted at 19.
            for v in 11..19 {
                edges.push((v, v + 1));
            }
            for &(a, b) in &grid.edges {
                edges.push((a + 19, b + 19));
            }
            Ok(RawComplex::new("C_barbell", 31, edges))
        }
        _ => {
            if let Some(args) = parse_call(name, "C_grid") {
                let (m, n) = two_args(&args, name)?;
                if m == 0 || n == 0 {
                    return Err(Error::UnknownFixture(name.into()));
                }
                return Ok(grid_raw(m, n));
            }
            if let Some(args) = parse_call(name, "C_tree") {
                let (k, d) = two_args(&args, name)?;
                if k == 0 {
                    return Err(Error::UnknownFixture(name.into()));
                }
                return Ok(tree_raw(k, d));
            }
            Err(Error::UnknownFixture(name.into()))
        }
    }
}

fn parse_call(name: &str, head: &str) -> Option<String> {
    let rest = name.strip_prefix(head)?;
    let rest = rest.strip_prefix('(')?;
    let rest = rest.strip_suffix(')')?;
    Some(rest.into())
}

fn two_args(args: &str, name: &str) -> Result<(u32, u32), Error> {
    let mut parts = args.split(',');
    let a = parts.next().and_then(|s| s.trim().parse().ok());
    let b = parts.next().and_then(|s| s.trim().parse().ok());
    match (a, b, parts.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(Error::UnknownFixture(name.into())),
    }
}

/// Build the named fixture; every fixture validates.
pub fn fixture(name: &str) -> Result<CubeComplex, Error> {
    let raw = raw_fixture(name)?;
    CubeComplex::from_raw_default(&raw)
}

/// Fixture names used by the acceptance battery (generated ones excluded).
pub const BASIC_FIXTURES: &[&str] = &[
    "C_edge",
    "C_square",
    "C_path3",
    "C_tripod",
    "C_cube3",
    "C_grid(2,2)",
    "C_grid(3,3)",
    "C_dumbbell",
];
