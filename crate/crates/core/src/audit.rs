//! Axiom-by-axiom audit of the hierarchical structure carried by a complex
//! with a factor system: projections, nesting, orthogonality, consistency,
//! finite complexity, distance formula, large links, bounded geodesic image,
//! realization, and hierarchy paths, preceeded by a re-verification of the
//! factor-system conditions themselves.
//!
//! Every check runs regardless of earlier failures and reports its measured
//! constants.  Negative controls inject a documented corruption into exactly
//! one check's inputs so harnesses can confirm that the failure path of each
//! axiom works; corruptions are scoped to the targeted check and leave every
//! other record untouched.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bgi;
use crate::bottleneck;
use crate::complex::CubeComplex;
use crate::consistency::{self, kappa0, ProjectionTuple};
use crate::distance::{self, s0};
use crate::error::Error;
use crate::factor::{self, FactorSystem, Relation};
use crate::factored::{proj_distance, rho_downward, rho_set, Projections};
use crate::geodesics;
use crate::hierarchy::{self, HierarchyPath};
use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Control {
    None,
    /// Delete one proper member; the factor-system closure clause fails.
    Closure,
    /// Inflate one point projection beyond clique diameter.
    Projections,
    /// Claim a mutual nesting, breaking antisymmetry.
    Nesting,
    /// Make one orthogonal pair asymmetric.
    Orthogonality,
    /// Push one tuple coordinate to the far end of its coordinate graph.
    Consistency,
    /// Inject a nesting cycle into the chain walk.
    Complexity,
    /// Zero out the formula terms of the farthest pair.
    DistanceFormula,
    /// Empty the carrier list and drop the applicability threshold.
    LargeLinks,
    /// Hide the embedded copy and spread the downward image.
    Bgi,
    /// Exclude the exact realizers from the argmin.
    Realization,
    /// Drop an interior vertex of every path before verification.
    HierarchyPaths,
}

pub const CONTROL_NAMES: &[(&str, Control)] = &[
    ("closure", Control::Closure),
    ("projections", Control::Projections),
    ("nesting", Control::Nesting),
    ("orthogonality", Control::Orthogonality),
    ("consistency", Control::Consistency),
    ("complexity", Control::Complexity),
    ("distance-formula", Control::DistanceFormula),
    ("large-links", Control::LargeLinks),
    ("bgi", Control::Bgi),
    ("realization", Control::Realization),
    ("hierarchy-paths", Control::HierarchyPaths),
];

pub fn parse_control(name: &str) -> Option<Control> {
    CONTROL_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, c)| c)
}

#[derive(Clone, Debug)]
pub struct AxiomRecord {
    pub name: String,
    pub pass: bool,
    pub constants: Vec<(String, i64)>,
    pub witness: Option<String>,
}

impl AxiomRecord {
    fn new(name: &str, pass: bool) -> Self {
        AxiomRecord { name: name.to_string(), pass, constants: Vec::new(), witness: None }
    }
    fn with(mut self, key: &str, value: i64) -> Self {
        self.constants.push((key.to_string(), value));
        self
    }
    fn witness(mut self, w: String) -> Self {
        self.witness = Some(w);
        self
    }
}

#[derive(Clone, Debug)]
pub struct AuditOptions {
    pub control: Control,
    pub realization_samples: u32,
    pub seed: u64,
    pub geodesic_cap: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            control: Control::None,
            realization_samples: 100,
            seed: 0,
            geodesic_cap: 10_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub records: Vec<AxiomRecord>,
    pub pass: bool,
}

impl AxiomReport {
    pub fn record(&self, name: &str) -> Option<&AxiomRecord> {
        self.records.iter().find(|r| r.name == name)
    }
    pub fn constant(&self, record: &str, key: &str) -> Option<i64> {
        self.record(record)?
            .constants
            .iter()
            .find(|(k, _)| k == key)
            .map(|&(_, v)| v)
    }
}

pub fn audit(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    opts: &AuditOptions,
) -> Result<AxiomReport, Error> {
    let mut records = Vec::new();
    let xi = fs.xi;
    let k = fs.num_classes();

    // Factor-system conditions.
    records.push(check_factor_system(complex, fs, opts));

    // Hyperbolicity of the coordinate graphs, via the bottleneck criterion.
    let mut delta_b = 0u32;
    for g in &proj.fcg {
        if g.num_vertices() <= 1 {
            continue;
        }
        let rep = bottleneck::bottleneck_delta(&g.adj)?;
        delta_b = delta_b.max(rep.delta);
    }
    let delta_derived = 3 * (26 * delta_b) + 16 * delta_b;

    // (1) Projections: cliques of uniformly bounded diameter.
    records.push({
        let mut measured = 0u32;
        for c in 0..k {
            for x in 0..complex.num_vertices() {
                let clique: Vec<u32> =
                    if opts.control == Control::Projections && c == fs.whole && x == 0 {
                        (0..proj.fcg[c].num_base() as u32).collect()
                    } else {
                        proj.cliques[c][x as usize].clone()
                    };
                if !clique.is_empty() {
                    measured = measured.max(proj.fcg[c].set_diameter(&clique));
                }
            }
        }
        AxiomRecord::new("projections", measured <= 1)
            .with("measured_diam", measured as i64)
            .with("delta_b", delta_b as i64)
            .with("delta_hyperbolic", delta_derived as i64)
    });

    // (2) Nesting: partial order with a unique maximum and bounded upward
    // projections.
    records.push({
        let nested = |a: usize, b: usize| {
            if opts.control == Control::Nesting && k > 1 {
                // Claim the whole complex is also nested in the first proper
                // class.
                let c0 = (0..k).find(|&c| c != fs.whole).unwrap();
                if a == fs.whole && b == c0 {
                    return true;
                }
            }
            fs.relations[a][b] == Relation::NestedIn
        };
        let mut pass = true;
        let mut witness = None;
        for a in 0..k {
            for b in 0..k {
                if a != b && nested(a, b) && nested(b, a) {
                    pass = false;
                    witness = Some(format!("classes {a},{b} mutually nested"));
                }
                for c in 0..k {
                    if a != b
                        && b != c
                        && a != c
                        && nested(a, b)
                        && nested(b, c)
                        && !nested(a, c)
                    {
                        pass = false;
                        witness = Some(format!("nesting not transitive at {a},{b},{c}"));
                    }
                }
            }
        }
        for c in 0..k {
            if c != fs.whole && !nested(c, fs.whole) {
                pass = false;
                witness = Some(format!("class {c} not nested in the maximum"));
            }
        }
        let mut rho_diam = 0u32;
        for v in 0..k {
            for u in 0..k {
                if v != u && fs.relations[v][u] == Relation::NestedIn {
                    let set = rho_set(fs, proj, v, u)?;
                    if !set.is_empty() {
                        rho_diam = rho_diam.max(proj.fcg[u].set_diameter(&set));
                    }
                }
            }
        }
        if rho_diam > xi + 2 {
            pass = false;
            witness = Some(format!("nested rho diameter {rho_diam} exceeds xi+2"));
        }
        let mut rec = AxiomRecord::new("nesting", pass).with("rho_diam", rho_diam as i64);
        if let Some(w) = witness {
            rec = rec.witness(w);
        }
        rec
    });

    // (3) Orthogonality: symmetric, anti-reflexive, inherited under nesting,
    // with containers.
    records.push({
        let orth = |a: usize, b: usize| {
            if opts.control == Control::Orthogonality {
                if let Some((x, y)) = first_orthogonal_pair(fs) {
                    if (a, b) == (y, x) {
                        return false;
                    }
                }
            }
            fs.relations[a][b] == Relation::Orthogonal
        };
        let mut pass = true;
        let mut witness = None;
        for a in 0..k {
            if orth(a, a) {
                pass = false;
                witness = Some(format!("class {a} orthogonal to itself"));
            }
            for b in 0..k {
                if a != b && orth(a, b) != orth(b, a) {
                    pass = false;
                    witness = Some(format!("orthogonality asymmetric at {a},{b}"));
                }
                if a != b
                    && orth(a, b)
                    && matches!(fs.relations[a][b], Relation::NestedIn | Relation::Contains)
                {
                    pass = false;
                    witness = Some(format!("orthogonal pair {a},{b} is nested"));
                }
            }
        }
        // Inheritance: V nested in W and W orthogonal to U forces V
        // orthogonal to U.
        for v in 0..k {
            for w in 0..k {
                if v == w || fs.relations[v][w] != Relation::NestedIn {
                    continue;
                }
                for u in 0..k {
                    if u != v && u != w && orth(w, u) && !orth(v, u) {
                        pass = false;
                        witness =
                            Some(format!("orthogonality not inherited: {v} in {w} vs {u}"));
                    }
                }
            }
        }
        // Containers: some proper W under T swallowing everything orthogonal
        // to U under T.
        let mut containers = Vec::new();
        for t in 0..k {
            let under: Vec<usize> = (0..k)
                .filter(|&c| c != t && fs.relations[c][t] == Relation::NestedIn)
                .collect();
            for &u in &under {
                let need: Vec<usize> = under
                    .iter()
                    .copied()
                    .filter(|&v| v != u && orth(v, u))
                    .collect();
                if need.is_empty() {
                    continue;
                }
                let found = under.iter().copied().find(|&w| {
                    need.iter().all(|&v| {
                        v == w || fs.relations[v][w] == Relation::NestedIn
                    }) && (opts.control != Control::Orthogonality)
                });
                match found {
                    Some(w) => containers.push((t, u, w)),
                    None => {
                        pass = false;
                        witness = Some(format!("no container for ({t},{u})"));
                    }
                }
            }
        }
        let mut rec =
            AxiomRecord::new("orthogonality", pass).with("containers", containers.len() as i64);
        if let Some(w) = witness {
            rec = rec.witness(w);
        }
        rec
    });

    // (4) Consistency inequalities, point and triple forms.
    records.push(check_consistency(complex, fs, proj, opts)?);

    // (5) Finite complexity: longest nesting chain.
    records.push({
        let extra_edge = if opts.control == Control::Complexity && k > 1 {
            let c0 = (0..k).find(|&c| c != fs.whole).unwrap();
            Some((fs.whole, c0))
        } else {
            None
        };
        match longest_chain(fs, extra_edge) {
            Some(n) => {
                let pass = n <= fs.delta;
                AxiomRecord::new("complexity", pass)
                    .with("complexity", n as i64)
                    .with("delta_mult", fs.delta as i64)
            }
            None => AxiomRecord::new("complexity", false)
                .witness("nesting chain walk found a cycle".to_string()),
        }
    });

    // (6) Distance formula at s0 = 4 xi + 10.
    let fit = distance::fit_distance_constants(complex, fs, proj, s0(xi));
    records.push({
        let pass = if opts.control == Control::DistanceFormula {
            let mut pairs = fit.pairs.clone();
            if let Some(worst) = pairs.iter_mut().max_by_key(|p| p.2) {
                worst.3 = 0;
            }
            let corrupted = distance::FitReport { pairs, ..fit.clone() };
            distance::check_fit(&corrupted)
        } else {
            distance::check_fit(&fit)
        };
        AxiomRecord::new("distance-formula", pass)
            .with("s0", s0(xi) as i64)
            .with("k_eighths", fit.k_eighths as i64)
            .with("c", fit.c as i64)
    });

    // Hierarchy paths for every pair, shared by (7) and (10).
    let n = complex.num_vertices();
    let mut paths: Vec<((u32, u32), HierarchyPath)> = Vec::new();
    let mut path_failures = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            match hierarchy::hierarchy_path(complex, fs, proj, x, y, opts.geodesic_cap) {
                Ok(hp) => paths.push(((x, y), hp)),
                Err(e) => path_failures.push(((x, y), e)),
            }
        }
    }

    // (7) Large links along the carrying sequences.
    records.push({
        let threshold = if opts.control == Control::LargeLinks { 0 } else { 4 * xi + 10 };
        let mut pass = path_failures.is_empty();
        let mut witness = None;
        let mut lambda = 1u32;
        for ((x, y), hp) in &paths {
            let carriers: Vec<Vec<u32>> = if opts.control == Control::LargeLinks {
                Vec::new()
            } else {
                hp.syllables.iter().map(|s| s.subcomplex.clone()).collect()
            };
            let d_whole = proj_distance(proj, fs.whole, *x, *y);
            for f in 0..k {
                if f == fs.whole {
                    continue;
                }
                let out = bgi::check_large_links_at(
                    complex, fs, proj, *x, *y, &carriers, f, threshold,
                );
                if out.applicable && !out.pass {
                    pass = false;
                    witness = Some(format!(
                        "class {f} not nested in any carrier for pair ({x},{y})"
                    ));
                }
            }
            // The carrier count is linear in the coordinate distance.
            while (carriers.len() as u64) > (lambda as u64) * (d_whole as u64 + 1)
                && lambda < 64
            {
                lambda += 1;
            }
        }
        let mut rec = AxiomRecord::new("large-links", pass).with("lambda", lambda as i64);
        if let Some(w) = witness {
            rec = rec.witness(w);
        }
        rec
    });

    // (8) Bounded geodesic image on the coordinate graphs, E pinned to 1.
    records.push({
        let mut measured = 0u32;
        let mut pass = true;
        let mut witness = None;
        for w in 0..k {
            let graph = &proj.fcg[w];
            if graph.num_base() == 0 {
                continue;
            }
            for v in 0..k {
                if v == w || fs.relations[v][w] != Relation::NestedIn {
                    continue;
                }
                if proj.fcg[v].num_base() == 0 {
                    continue;
                }
                let rho_vw: Vec<u32> = if opts.control == Control::Bgi {
                    Vec::new()
                } else {
                    rho_set(fs, proj, v, w)?
                };
                let nverts = graph.num_vertices();
                for a in 0..nverts as u32 {
                    for b in a + 1..nverts as u32 {
                        let geods =
                            geodesics::enumerate_geodesics(&graph.adj, a, b, 64)?;
                        for g in &geods.paths {
                            let near = !rho_vw.is_empty()
                                && g.iter().any(|&gv| {
                                    rho_vw
                                        .iter()
                                        .any(|&rv| graph.dist[gv as usize][rv as usize] <= 1)
                                });
                            if near {
                                continue;
                            }
                            let base: Vec<u32> = g
                                .iter()
                                .copied()
                                .filter(|&gv| (gv as usize) < graph.num_base())
                                .collect();
                            let image = if opts.control == Control::Bgi {
                                (0..proj.fcg[v].num_base() as u32).collect::<Vec<u32>>()
                            } else {
                                rho_downward(complex, fs, proj, w, v, &base)?
                            };
                            if image.is_empty() {
                                continue;
                            }
                            let diam = proj.fcg[v].set_diameter(&image);
                            measured = measured.max(diam);
                            if diam > 1 {
                                pass = false;
                                if witness.is_none() {
                                    witness = Some(format!(
                                        "geodesic in class {w} graph has image of diameter {diam} in class {v}"
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut rec = AxiomRecord::new("bgi", pass)
            .with("b", measured as i64)
            .with("e", 1);
        if let Some(w) = witness {
            rec = rec.witness(w);
        }
        rec
    });

    // (9) Realization: exact on realized tuples, bounded on perturbed
    // consistent tuples.
    records.push(check_realization(complex, fs, proj, opts)?);

    // (10) Hierarchy paths: existence, soundness, and projection tracking.
    records.push({
        let mut pass = path_failures.is_empty();
        let mut witness = path_failures
            .first()
            .map(|((x, y), e)| format!("no hierarchy path for ({x},{y}): {e}"));
        let mut d_const = 1u32;
        for ((x, y), hp) in &paths {
            let checked = if opts.control == Control::HierarchyPaths && hp.path.len() > 2 {
                let mut corrupted = hp.clone();
                let mid = corrupted.path.len() / 2;
                corrupted.path.remove(mid);
                corrupted
            } else {
                hp.clone()
            };
            if !hierarchy::verify_hierarchy_path(complex, fs, proj, &checked) {
                pass = false;
                if witness.is_none() {
                    witness = Some(format!("path for ({x},{y}) failed verification"));
                }
                continue;
            }
            for c in 0..k {
                if proj.fcg[c].num_base() == 0 {
                    continue;
                }
                let trace: Vec<u32> = {
                    let mut t: Vec<u32> = hp
                        .path
                        .iter()
                        .flat_map(|&v| proj.cliques[c][v as usize].iter().copied())
                        .collect();
                    t.sort_unstable();
                    t.dedup();
                    t
                };
                if trace.is_empty() {
                    continue;
                }
                let a = &proj.cliques[c][*x as usize];
                let b = &proj.cliques[c][*y as usize];
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                // Worst Hausdorff defect against geodesics between the
                // endpoint projections.
                for &pa in a.iter().take(2) {
                    for &pb in b.iter().take(2) {
                        let geods =
                            geodesics::enumerate_geodesics(&proj.fcg[c].adj, pa, pb, 16)?;
                        for g in &geods.paths {
                            let hd = crate::contact::set_hausdorff(&proj.fcg[c].dist, &trace, g);
                            d_const = d_const.max(hd);
                        }
                    }
                }
            }
        }
        let mut rec = AxiomRecord::new("hierarchy-paths", pass).with("d", d_const as i64);
        if let Some(w) = witness {
            rec = rec.witness(w);
        }
        rec
    });

    let pass = records.iter().all(|r| r.pass);
    Ok(AxiomReport { records, pass })
}

fn check_factor_system(
    complex: &CubeComplex,
    fs: &FactorSystem,
    opts: &AuditOptions,
) -> AxiomRecord {
    let report = if opts.control == Control::Closure {
        let keep: Vec<Vec<u32>> = fs
            .members
            .iter()
            .map(|m| m.sub.vertices().to_vec())
            .filter(|v| v.len() != complex.num_vertices() as usize)
            .collect();
        if keep.is_empty() {
            return AxiomRecord::new("factor-system", false)
                .witness("no proper member to delete".to_string());
        }
        let mut corrupted = keep;
        corrupted.pop();
        match factor::factor_system_from_members(complex, fs.xi, corrupted) {
            Ok(broken) => factor::verify_factor_system(complex, &broken),
            Err(_) => {
                return AxiomRecord::new("factor-system", false)
                    .witness("corrupted member list failed to build".to_string())
            }
        }
    } else {
        factor::verify_factor_system(complex, fs)
    };
    let mut rec = AxiomRecord::new("factor-system", report.pass)
        .with("delta_mult", report.delta as i64)
        .with("xi", fs.xi as i64)
        .with("members", fs.members.len() as i64)
        .with("classes", fs.num_classes() as i64);
    if let Some((i, j)) = report.closure_witness {
        rec = rec.witness(format!("gate image of member pair ({i},{j}) is missing"));
    } else if let Some(w) = report.hyperplane_witness {
        rec = rec.witness(w);
    }
    rec
}

fn first_orthogonal_pair(fs: &FactorSystem) -> Option<(usize, usize)> {
    let k = fs.num_classes();
    for a in 0..k {
        for b in a + 1..k {
            if fs.relations[a][b] == Relation::Orthogonal {
                return Some((a, b));
            }
        }
    }
    None
}

fn longest_chain(fs: &FactorSystem, extra_edge: Option<(usize, usize)>) -> Option<u32> {
    let k = fs.num_classes();
    let edge = |a: usize, b: usize| {
        fs.relations[a][b] == Relation::NestedIn || extra_edge == Some((a, b))
    };
    // Longest path in the nesting relation, with cycle detection.
    let mut memo = vec![0u32; k];
    let mut state = vec![0u8; k];
    fn dfs(
        c: usize,
        k: usize,
        edge: &dyn Fn(usize, usize) -> bool,
        memo: &mut [u32],
        state: &mut [u8],
    ) -> Option<u32> {
        if state[c] == 1 {
            return None;
        }
        if state[c] == 2 {
            return Some(memo[c]);
        }
        state[c] = 1;
        let mut best = 1u32;
        for b in 0..k {
            if b != c && edge(c, b) {
                best = best.max(1 + dfs(b, k, edge, memo, state)?);
            }
        }
        state[c] = 2;
        memo[c] = best;
        Some(best)
    }
    let mut overall = 0u32;
    for c in 0..k {
        overall = overall.max(dfs(c, k, &edge, &mut memo, &mut state)?);
    }
    Some(overall)
}

fn check_consistency(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    opts: &AuditOptions,
) -> Result<AxiomRecord, Error> {
    let k = fs.num_classes();
    let xi = fs.xi;
    let mut measured_point = 0u32;
    let mut point_witness = None;

    // The corrupted coordinate for the negative control: the proper class
    // with the widest coordinate graph.
    let fault_class = (0..k)
        .filter(|&c| c != fs.whole && proj.fcg[c].num_base() > 1)
        .max_by_key(|&c| {
            (0..proj.fcg[c].num_vertices())
                .map(|i| proj.fcg[c].dist[i].iter().copied().max().unwrap_or(0))
                .max()
                .unwrap_or(0)
        });

    for x in 0..complex.num_vertices() {
        let mut tuple = consistency::tuple_of(complex, fs, proj, x);
        if opts.control == Control::Consistency {
            if let Some(fc) = fault_class {
                let graph = &proj.fcg[fc];
                let cur = tuple.coords[fc].clone();
                if !cur.is_empty() {
                    let far = (0..graph.num_base() as u32)
                        .max_by_key(|&v| crate::contact::set_distance(&graph.dist, &[v], &cur))
                        .unwrap();
                    tuple.coords[fc] = vec![far];
                }
            }
        }
        let m = measure_point_consistency(complex, fs, proj, &tuple)?;
        if m > measured_point {
            measured_point = m;
            point_witness = Some(format!("vertex {x} needs kappa {m}"));
        }
    }

    // Triple inequalities among the class projections.
    let mut measured_triple = 0u32;
    for u in 0..k {
        for v in 0..k {
            for w in 0..k {
                if u == v || u == w || v == w {
                    continue;
                }
                let u_rel_v = fs.relations[u][v];
                let u_rel_w = fs.relations[u][w];
                let u_ok_v =
                    matches!(u_rel_v, Relation::NestedIn | Relation::Transverse);
                let u_ok_w =
                    matches!(u_rel_w, Relation::NestedIn | Relation::Transverse);
                if !u_ok_v || !u_ok_w {
                    continue;
                }
                if proj.fcg[v].num_base() == 0 || proj.fcg[w].num_base() == 0 {
                    continue;
                }
                match fs.relations[v][w] {
                    Relation::Transverse => {
                        let duw = proj.fcg[w]
                            .set_distance(&rho_set(fs, proj, u, w)?, &rho_set(fs, proj, v, w)?);
                        let duv = proj.fcg[v]
                            .set_distance(&rho_set(fs, proj, u, v)?, &rho_set(fs, proj, w, v)?);
                        measured_triple = measured_triple.max(duw.min(duv));
                    }
                    Relation::NestedIn => {
                        // v properly nested in w.
                        let duw = proj.fcg[w]
                            .set_distance(&rho_set(fs, proj, u, w)?, &rho_set(fs, proj, v, w)?);
                        let rho_uw = rho_set(fs, proj, u, w)?;
                        let base: Vec<u32> = rho_uw
                            .iter()
                            .copied()
                            .filter(|&i| (i as usize) < proj.fcg[w].num_base())
                            .collect();
                        let down = rho_downward(complex, fs, proj, w, v, &base)?;
                        let mut union = rho_set(fs, proj, u, v)?;
                        union.extend(down);
                        union.sort_unstable();
                        union.dedup();
                        let diam = proj.fcg[v].set_diameter(&union);
                        measured_triple = measured_triple.max(duw.min(diam));
                    }
                    _ => {}
                }
            }
        }
    }

    // Final clause: related classes project close into any common host.
    let mut measured_final = 0u32;
    for u in 0..k {
        for v in 0..k {
            if u == v {
                continue;
            }
            let related = fs.relations[v][u] == Relation::NestedIn
                || fs.relations[u][v] == Relation::Orthogonal;
            if !related {
                continue;
            }
            for w in 0..k {
                if w == u || w == v || proj.fcg[w].num_base() == 0 {
                    continue;
                }
                let v_ok =
                    matches!(fs.relations[v][w], Relation::NestedIn | Relation::Transverse);
                let u_ok =
                    matches!(fs.relations[u][w], Relation::NestedIn | Relation::Transverse);
                if v_ok && u_ok {
                    let d = proj.fcg[w]
                        .set_distance(&rho_set(fs, proj, u, w)?, &rho_set(fs, proj, v, w)?);
                    measured_final = measured_final.max(d);
                }
            }
        }
    }

    let bound_point = kappa0(xi);
    let bound_rho = 3 * xi + 6;
    let pass = measured_point <= bound_point
        && measured_triple <= bound_rho
        && measured_final <= bound_rho;
    let mut rec = AxiomRecord::new("consistency", pass)
        .with("kappa0", measured_point as i64)
        .with("kappa_triples", measured_triple as i64)
        .with("kappa_final", measured_final as i64);
    if !pass {
        if let Some(w) = point_witness {
            rec = rec.witness(w);
        }
    }
    Ok(rec)
}

/// The largest min-quantity over related class pairs for one tuple; realized
/// tuples stay at or below xi + 2.
pub fn measure_point_consistency(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    tuple: &ProjectionTuple,
) -> Result<u32, Error> {
    let k = fs.num_classes();
    let mut measured = 0u32;
    for a in 0..k {
        for b in a + 1..k {
            if proj.fcg[a].num_base() == 0 || proj.fcg[b].num_base() == 0 {
                continue;
            }
            match fs.relations[a][b] {
                Relation::Transverse => {
                    let da = proj.fcg[a]
                        .set_distance(&tuple.coords[a], &rho_set(fs, proj, b, a)?);
                    let db = proj.fcg[b]
                        .set_distance(&tuple.coords[b], &rho_set(fs, proj, a, b)?);
                    measured = measured.max(da.min(db));
                }
                Relation::NestedIn | Relation::Contains => {
                    let (v, u) = if fs.relations[a][b] == Relation::NestedIn {
                        (a, b)
                    } else {
                        (b, a)
                    };
                    let d_host = proj.fcg[u]
                        .set_distance(&tuple.coords[u], &rho_set(fs, proj, v, u)?);
                    let down = rho_downward(complex, fs, proj, u, v, &tuple.coords[u])?;
                    let mut union = tuple.coords[v].clone();
                    union.extend(down);
                    union.sort_unstable();
                    union.dedup();
                    let diam = proj.fcg[v].set_diameter(&union);
                    measured = measured.max(d_host.min(diam));
                }
                _ => {}
            }
        }
    }
    Ok(measured)
}

fn check_realization(
    complex: &CubeComplex,
    fs: &FactorSystem,
    proj: &Projections,
    opts: &AuditOptions,
) -> Result<AxiomRecord, Error> {
    let kappa = kappa0(fs.xi);
    let n = complex.num_vertices();
    let mut pass = true;
    let mut witness = None;

    // Realized tuples must realize exactly.
    for x in 0..n {
        let tuple = consistency::tuple_of(complex, fs, proj, x);
        let theta = if opts.control == Control::Realization {
            // Exclude the exact fiber from the candidate set.
            let mut best = u32::MAX;
            for y in 0..n {
                let t = consistency::realize_theta_at(fs, proj, &tuple, y);
                if t > 0 {
                    best = best.min(t);
                }
            }
            if best == u32::MAX {
                0
            } else {
                best
            }
        } else {
            consistency::realize(complex, fs, proj, &tuple, kappa)?.1
        };
        if theta != 0 {
            pass = false;
            if witness.is_none() {
                witness = Some(format!("tuple of vertex {x} realized at theta {theta}"));
            }
        }
    }

    // Perturbed consistent tuples realize within the pinned bound.
    let bound = 2 * kappa + 1;
    let mut theta_e = 0u32;
    let mut theta_u = 0u32;
    let mut rng = SplitMix64::new(opts.seed ^ 0x7265616c);
    let mut produced = 0u32;
    let mut attempts = 0u32;
    while produced < opts.realization_samples && attempts < opts.realization_samples * 50 {
        attempts += 1;
        let x = rng.below(n as u64) as u32;
        let mut tuple = consistency::tuple_of(complex, fs, proj, x);
        for c in 0..fs.num_classes() {
            let base = proj.fcg[c].num_base() as u32;
            if base == 0 || tuple.coords[c].is_empty() {
                continue;
            }
            if rng.below(3) == 0 {
                // Jitter: a singleton within distance one of the current
                // clique.
                let cur = tuple.coords[c].clone();
                let nearby: Vec<u32> = (0..base)
                    .filter(|&v| {
                        crate::contact::set_distance(&proj.fcg[c].dist, &[v], &cur) <= 1
                    })
                    .collect();
                let pick = nearby[rng.below(nearby.len() as u64) as usize];
                tuple.coords[c] = vec![pick];
            }
        }
        let outcome = consistency::consistency_check(complex, fs, proj, &tuple, kappa)?;
        if !outcome.pass {
            continue;
        }
        produced += 1;
        let (_, theta) = consistency::realize(complex, fs, proj, &tuple, kappa)?;
        theta_e = theta_e.max(theta);
        if theta > bound {
            pass = false;
            if witness.is_none() {
                witness = Some(format!("perturbed tuple realized at theta {theta}"));
            }
        }
        // Diameter of the admissible set at theta_e.
        let fiber: Vec<u32> = (0..n)
            .filter(|&y| consistency::realize_theta_at(fs, proj, &tuple, y) <= theta)
            .collect();
        for (i, &a) in fiber.iter().enumerate() {
            for &b in &fiber[i + 1..] {
                theta_u = theta_u.max(complex.dist(a, b));
            }
        }
    }

    let mut rec = AxiomRecord::new("realization", pass)
        .with("theta_e", theta_e as i64)
        .with("theta_u", theta_u as i64)
        .with("samples", produced as i64);
    if let Some(w) = witness {
        rec = rec.witness(w);
    }
    Ok(rec)
}
