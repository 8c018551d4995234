//! The distance formula: thresholded sums of projection distances over
//! parallelism classes, and two-sided constant fitting.

use alloc::vec::Vec;

use crate::complex::CubeComplex;
use crate::factor::FactorSystem;
use crate::factored::{proj_distance, Projections};

/// Threshold s0 below which the distance formula is not asserted.
pub fn s0(xi: u32) -> u32 {
    4 * xi + 10
}

#[derive(Clone, Debug)]
pub struct RhsTable {
    pub s: u32,
    pub total: u64,
    /// Per-class raw projection distance, every class (zeros included).
    pub raw: Vec<u32>,
    /// Classes whose term survives the threshold, with the term value.
    pub terms: Vec<(usize, u32)>,
}

/// Right-hand side of the distance formula at threshold `s`: the sum of
/// projection distances that reach `s`, one term per parallelism class.
pub fn distance_formula_rhs(
    _complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    x: u32,
    y: u32,
    s: u32,
) -> RhsTable {
    let s = s.max(1);
    let mut raw = Vec::with_capacity(fs.num_classes());
    let mut terms = Vec::new();
    let mut total = 0u64;
    for c in 0..fs.num_classes() {
        let d = proj_distance(proj, c, x, y);
        raw.push(d);
        if d >= s {
            total += d as u64;
            terms.push((c, d));
        }
    }
    RhsTable { s, total, raw, terms }
}

#[derive(Clone, Debug)]
pub struct FitReport {
    pub s: u32,
    /// Multiplicative constant in eighths (k_eighths/8 = K >= 1).
    pub k_eighths: u32,
    pub c: u32,
    /// Pair maximizing d - K*rhs.
    pub upper_witness: (u32, u32),
    /// Pair maximizing rhs/K - d.
    pub lower_witness: (u32, u32),
    /// All pairs with distance and rhs, row-major over x < y.
    pub pairs: Vec<(u32, u32, u32, u64)>,
}

impl FitReport {
    pub fn k(&self) -> f64 {
        self.k_eighths as f64 / 8.0
    }
}

/// Fit the least constants (C minimized first, then K on a grid of eighths)
/// such that rhs/K - C <= d <= K*rhs + C over all vertex pairs.
pub fn fit_distance_constants(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    s: u32,
) -> FitReport {
    let n = complex.num_vertices();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let rhs = distance_formula_rhs(complex, fs, proj, x, y, s).total;
            pairs.push((x, y, complex.dist(x, y), rhs));
        }
    }

    let needed_c = |k8: u32| -> u32 {
        let mut c = 0i128;
        for &(_, _, d, rhs) in &pairs {
            let d = d as i128;
            let rhs = rhs as i128;
            let k8 = k8 as i128;
            // d <= (k8/8)*rhs + C  =>  C >= (8d - k8*rhs)/8
            let upper = div_ceil_i128(8 * d - k8 * rhs, 8);
            // rhs/(k8/8) - C <= d  =>  C >= (8*rhs - k8*d)/k8
            let lower = div_ceil_i128(8 * rhs - k8 * d, k8);
            c = c.max(upper).max(lower);
        }
        c.max(0) as u32
    };

    let mut best = (8u32, needed_c(8));
    for k8 in 9..=128u32 {
        let c = needed_c(k8);
        if c < best.1 {
            best = (k8, c);
        }
    }
    let (k8, c) = best;

    let mut upper_witness = (0u32, 0u32);
    let mut lower_witness = (0u32, 0u32);
    let mut upper_slack = i128::MIN;
    let mut lower_slack = i128::MIN;
    for &(x, y, d, rhs) in &pairs {
        let u = 8 * d as i128 - k8 as i128 * rhs as i128;
        if u > upper_slack {
            upper_slack = u;
            upper_witness = (x, y);
        }
        let l = 8 * rhs as i128 - k8 as i128 * d as i128;
        if l > lower_slack {
            lower_slack = l;
            lower_witness = (x, y);
        }
    }

    FitReport { s, k_eighths: k8, c, upper_witness, lower_witness, pairs }
}

fn div_ceil_i128(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    if a <= 0 {
        0
    } else {
        (a + b - 1) / b
    }
}

/// Verify the fitted constants two-sidedly over every pair.
pub fn check_fit(report: &FitReport) -> bool {
    let k8 = report.k_eighths as i128;
    let c = report.c as i128;
    report.pairs.iter().all(|&(_, _, d, rhs)| {
        let d = d as i128;
        let rhs = rhs as i128;
        8 * d <= k8 * rhs + 8 * c && 8 * rhs <= k8 * (d + c)
    })
}
