//! Factor systems: closed families of convex subcomplexes with parallelism
//! classes and the nested / orthogonal / transverse trichotomy.
//!
//! The minimal system starts from the whole complex together with every
//! nontrivial subcomplex parallel to a combinatorial hyperplane and closes
//! under gate images of diameter at least xi.  "Nontrivial" means spanning at
//! least one 1-cube, so trees get the factor system consisting of the complex
//! alone.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::CubeComplex;
use crate::error::Error;
use crate::parallel::{self, ParallelDecomposition};
use crate::raag::{self, DefiningGraph, SalvettiBall, Subgraph};
use crate::subcomplex::{self, GateTable, Subcomplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Same,
    /// Row class is parallel to a subcomplex of the column class.
    NestedIn,
    /// Column class is parallel to a subcomplex of the row class.
    Contains,
    Orthogonal,
    Transverse,
}

#[derive(Clone, Debug)]
pub struct Member {
    pub sub: Subcomplex,
    pub crossing: Vec<u32>,
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct ParallelClass {
    pub crossing: Vec<u32>,
    /// Member indices, ascending by vertex set.
    pub members: Vec<usize>,
    /// Member index of the lexicographically least vertex set.
    pub canonical: usize,
    pub diameter: u32,
    /// Same crossing set as a combinatorial hyperplane.
    pub hyperplane_parallel: bool,
    /// All geometric parallel copies (member or not), ascending vertex sets.
    pub copies: Vec<Vec<u32>>,
    /// Convex hull of the union of the copies.
    pub region: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct FactorSystem {
    pub xi: u32,
    pub members: Vec<Member>,
    pub classes: Vec<ParallelClass>,
    /// Index of the class of the whole complex.
    pub whole: usize,
    /// Largest number of members through a single vertex.
    pub delta: u32,
    /// Pairwise class relations; `relations[a][b]` reads "a <rel> b".
    pub relations: Vec<Vec<Relation>>,
}

impl FactorSystem {
    pub fn member(&self, i: usize) -> &Member {
        &self.members[i]
    }

    pub fn canonical(&self, class: usize) -> &Member {
        &self.members[self.classes[class].canonical]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn relation(&self, a: usize, b: usize) -> Relation {
        self.relations[a][b]
    }

    /// Classes properly nested in `class` (their members have parallel copies
    /// inside it).
    pub fn nested_in(&self, class: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| self.relations[c][class] == Relation::NestedIn)
            .collect()
    }

    /// Member indices whose subcomplex lies inside the given member.
    pub fn members_inside(&self, member: usize) -> Vec<usize> {
        let host = &self.members[member].sub;
        (0..self.members.len())
            .filter(|&i| {
                i != member && self.members[i].sub.vertices().iter().all(|&v| host.contains(v))
            })
            .collect()
    }

    /// Gate table for a member, rebuilt on demand.
    pub fn gate_table(&self, complex: &CubeComplex, member: usize) -> GateTable {
        GateTable::build(complex, &self.members[member].sub, &self.members[member].crossing)
    }
}

/// Build a factor system from an explicit member list (vertex sets).  The
/// whole complex is added if missing; members are verified convex.
pub fn factor_system_from_members(
    complex: &CubeComplex,
    xi: u32,
    member_sets: Vec<Vec<u32>>,
) -> Result<FactorSystem, Error> {
    let mut sets: BTreeSet<Vec<u32>> = member_sets.into_iter().collect();
    sets.insert((0..complex.num_vertices()).collect());
    let mut members = Vec::new();
    for verts in sets {
        let mut sub = Subcomplex::new(complex, verts)?;
        if !sub.verify(complex) {
            return Err(Error::NotConvex);
        }
        let crossing = subcomplex::crossing_set(complex, &sub);
        members.push(Member { sub, crossing, class: usize::MAX });
    }
    finish_system(complex, xi, members)
}

/// The minimal factor system: hyperplane-parallel subcomplexes closed under
/// large gate images.
pub fn minimal_factor_system(complex: &CubeComplex, xi: u32) -> Result<FactorSystem, Error> {
    let xi = xi.max(1);
    let mut sets: BTreeSet<Vec<u32>> = BTreeSet::new();
    sets.insert((0..complex.num_vertices()).collect());
    let mut class_done: BTreeSet<Vec<u32>> = BTreeSet::new();
    for h in 0..complex.hyperplane_count() {
        let crossers = complex.crossers(h);
        if crossers.is_empty() {
            // Sides are single vertices: trivial, excluded.
            continue;
        }
        if class_done.insert(crossers.clone()) {
            for copy in parallel::parallel_copies(complex, &crossers) {
                sets.insert(copy);
            }
        }
    }

    // Closure under gate images of diameter >= xi.
    loop {
        let list: Vec<Vec<u32>> = sets.iter().cloned().collect();
        let tables: Vec<(Subcomplex, GateTable)> = list
            .iter()
            .map(|verts| {
                let sub = Subcomplex::verified(complex, verts.clone());
                let crossing = subcomplex::crossing_set(complex, &sub);
                let table = GateTable::build(complex, &sub, &crossing);
                (sub, table)
            })
            .collect();
        let mut added = false;
        for (i, (_, table)) in tables.iter().enumerate() {
            for (j, (src, _)) in tables.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut image: Vec<u32> =
                    src.vertices().iter().map(|&x| table.gate(complex, x)).collect();
                image.sort_unstable();
                image.dedup();
                let img = Subcomplex::verified(complex, image);
                if img.diameter(complex) >= xi && !sets.contains(img.vertices()) {
                    sets.insert(img.vertices().to_vec());
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }

    let members = sets
        .into_iter()
        .map(|verts| {
            let sub = Subcomplex::verified(complex, verts);
            let crossing = subcomplex::crossing_set(complex, &sub);
            Member { sub, crossing, class: usize::MAX }
        })
        .collect();
    finish_system(complex, xi, members)
}

/// Induced factor system on a convex subcomplex: nonempty traces of members,
/// as a system over the induced complex.  Returns the induced complex and the
/// system; `Y`'s vertex `i` of the result is `y_vertices[i]` of the parent.
pub fn induced_factor_system(
    complex: &CubeComplex,
    fs: &FactorSystem,
    y: &Subcomplex,
) -> Result<(CubeComplex, FactorSystem), Error> {
    if !y.is_verified_convex() {
        return Err(Error::NotConvex);
    }
    let name = format!("{}|induced", complex.name());
    let induced = CubeComplex::induced(complex, y.vertices(), &name)?;
    let index: BTreeMap<u32, u32> = y
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32))
        .collect();
    let mut sets: BTreeSet<Vec<u32>> = BTreeSet::new();
    for m in &fs.members {
        let trace: Vec<u32> = m
            .sub
            .vertices()
            .iter()
            .filter_map(|v| index.get(v).copied())
            .collect();
        if !trace.is_empty() {
            sets.insert(trace);
        }
    }
    let system = factor_system_from_members(&induced, fs.xi, sets.into_iter().collect())?;
    Ok((induced, system))
}

/// Factor system on a Salvetti ball from a rich family of subgraphs: hulls of
/// coset traces, one per (subgraph, basepoint), nontrivial ones only.
pub fn raag_factor_system(
    ball: &SalvettiBall,
    graph: &DefiningGraph,
    rich: &[Subgraph],
    xi: u32,
) -> Result<FactorSystem, Error> {
    raag::check_rich(graph, rich)?;
    let complex = &ball.complex;
    let n = complex.num_vertices();
    let mut sets: BTreeSet<Vec<u32>> = BTreeSet::new();
    sets.insert((0..n).collect());
    for lambda in rich {
        if lambda.is_empty() {
            continue;
        }
        for g in 0..n {
            let g_inv = raag::invert(&ball.elements[g as usize]);
            let trace: Vec<u32> = (0..n)
                .filter(|&h| {
                    raag::mul(graph, &g_inv, &ball.elements[h as usize])
                        .iter()
                        .all(|&(gen, _)| lambda.contains(&gen))
                })
                .collect();
            if trace.is_empty() {
                continue;
            }
            let hull = subcomplex::convex_hull(complex, &trace)?;
            if hull.nontrivial(complex) || hull.len() == n as usize {
                sets.insert(hull.vertices().to_vec());
            }
        }
    }
    factor_system_from_members(complex, xi, sets.into_iter().collect())
}

fn finish_system(
    complex: &CubeComplex,
    xi: u32,
    mut members: Vec<Member>,
) -> Result<FactorSystem, Error> {
    members.sort_by(|a, b| a.sub.vertices().cmp(b.sub.vertices()));

    // Classes group members by crossing set; order classes by canonical
    // (least) vertex set.
    let mut by_crossing: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (i, m) in members.iter().enumerate() {
        by_crossing.entry(m.crossing.clone()).or_default().push(i);
    }
    let mut class_list: Vec<(Vec<u32>, Vec<usize>)> = by_crossing.into_iter().collect();
    class_list.sort_by(|a, b| {
        members[a.1[0]]
            .sub
            .vertices()
            .cmp(members[b.1[0]].sub.vertices())
    });

    let mut classes = Vec::with_capacity(class_list.len());
    let mut whole = usize::MAX;
    let hyperplane_sets: BTreeSet<Vec<u32>> = (0..complex.hyperplane_count())
        .map(|h| complex.crossers(h))
        .collect();
    for (ci, (crossing, idxs)) in class_list.into_iter().enumerate() {
        for &i in &idxs {
            members[i].class = ci;
        }
        let canonical = idxs[0];
        if members[canonical].sub.len() == complex.num_vertices() as usize {
            whole = ci;
        }
        let diameter = members[canonical].sub.diameter(complex);
        let hyperplane_parallel = hyperplane_sets.contains(&crossing);
        let copies = parallel::parallel_copies(complex, &crossing);
        let mut union: Vec<u32> = copies.iter().flatten().copied().collect();
        union.sort_unstable();
        union.dedup();
        let region = subcomplex::hull_by_halfspaces(complex, &union);
        classes.push(ParallelClass {
            crossing,
            members: idxs,
            canonical,
            diameter,
            hyperplane_parallel,
            copies,
            region,
        });
    }
    if whole == usize::MAX {
        return Err(Error::MalformedInput(
            "factor system must contain the whole complex".into(),
        ));
    }

    let mut counts = vec![0u32; complex.num_vertices() as usize];
    for m in &members {
        for &v in m.sub.vertices() {
            counts[v as usize] += 1;
        }
    }
    let delta = counts.into_iter().max().unwrap_or(0);

    let relations = compute_relations(&classes);
    Ok(FactorSystem { xi, members, classes, whole, delta, relations })
}

fn compute_relations(classes: &[ParallelClass]) -> Vec<Vec<Relation>> {
    let k = classes.len();
    let mut rel = vec![vec![Relation::Same; k]; k];
    for a in 0..k {
        for b in 0..k {
            if a == b {
                continue;
            }
            rel[a][b] = classify(classes, a, b);
        }
    }
    rel
}

fn subset(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn classify(classes: &[ParallelClass], a: usize, b: usize) -> Relation {
    let ca = &classes[a].crossing;
    let cb = &classes[b].crossing;
    if subset(ca, cb) {
        return Relation::NestedIn;
    }
    if subset(cb, ca) {
        return Relation::Contains;
    }
    let disjoint = ca.iter().all(|x| cb.binary_search(x).is_err());
    if disjoint && orthogonal_witness(classes, a, b) {
        return Relation::Orthogonal;
    }
    Relation::Transverse
}

/// Orthogonality: some parallel copy of `b` lies inside the product region
/// swept by the copies of `a`; the region factors as a x transversal, so the
/// copy sits in a transversal slice and witnesses the product embedding.
fn orthogonal_witness(classes: &[ParallelClass], a: usize, b: usize) -> bool {
    let region = &classes[a].region;
    classes[b]
        .copies
        .iter()
        .any(|copy| copy.iter().all(|v| region.binary_search(v).is_ok()))
}

/// Public relation query on distinct classes.
pub fn classify_relation(fs: &FactorSystem, a: usize, b: usize) -> Result<Relation, Error> {
    if a == b {
        return Err(Error::SameClass);
    }
    Ok(fs.relations[a][b])
}

/// Decomposition of a class's canonical representative.
pub fn class_decomposition(
    complex: &CubeComplex,
    fs: &FactorSystem,
    class: usize,
) -> Result<ParallelDecomposition, Error> {
    parallel::parallel_decomposition(complex, &fs.canonical(class).sub)
}

/// Per-clause verification of the factor-system conditions.
#[derive(Clone, Debug)]
pub struct FsReport {
    pub contains_whole: bool,
    pub members_convex: bool,
    pub delta: u32,
    pub hyperplane_copies_present: bool,
    pub hyperplane_witness: Option<String>,
    pub closure_ok: bool,
    pub closure_witness: Option<(usize, usize)>,
    pub pass: bool,
}

pub fn verify_factor_system(complex: &CubeComplex, fs: &FactorSystem) -> FsReport {
    let contains_whole = fs
        .members
        .iter()
        .any(|m| m.sub.len() == complex.num_vertices() as usize);

    let members_convex = fs
        .members
        .iter()
        .all(|m| !m.sub.is_empty() && subcomplex::is_convex(complex, m.sub.vertices()));

    let member_sets: BTreeSet<&[u32]> =
        fs.members.iter().map(|m| m.sub.vertices()).collect();

    let mut hyperplane_copies_present = true;
    let mut hyperplane_witness = None;
    'outer: for h in 0..complex.hyperplane_count() {
        let crossers = complex.crossers(h);
        if crossers.is_empty() {
            continue;
        }
        for copy in parallel::parallel_copies(complex, &crossers) {
            if !member_sets.contains(copy.as_slice()) {
                hyperplane_copies_present = false;
                hyperplane_witness = Some(format!(
                    "copy {:?} parallel to a side of hyperplane {h} is missing",
                    copy
                ));
                break 'outer;
            }
        }
    }

    let mut closure_ok = true;
    let mut closure_witness = None;
    let tables: Vec<GateTable> = (0..fs.members.len())
        .map(|i| fs.gate_table(complex, i))
        .collect();
    'closure: for (i, table) in tables.iter().enumerate() {
        for (j, m) in fs.members.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut image: Vec<u32> = m
                .sub
                .vertices()
                .iter()
                .map(|&x| table.gate(complex, x))
                .collect();
            image.sort_unstable();
            image.dedup();
            let img = Subcomplex::verified(complex, image);
            if img.diameter(complex) >= fs.xi && !member_sets.contains(img.vertices()) {
                closure_ok = false;
                closure_witness = Some((i, j));
                break 'closure;
            }
        }
    }

    let pass = contains_whole && members_convex && hyperplane_copies_present && closure_ok;
    FsReport {
        contains_whole,
        members_convex,
        delta: fs.delta,
        hyperplane_copies_present,
        hyperplane_witness,
        closure_ok,
        closure_witness,
        pass,
    }
}
