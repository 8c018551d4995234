//! Cube complexes stored as validated median graphs.
//!
//! Validation certifies the median-graph axioms and computes, once, the data
//! every other module leans on: Theta-classes of edges (transitive closure of
//! the opposite-sides-of-a-square relation), one hyperplane record per class,
//! and a halfspace signature per vertex.  Bit `h` of a signature says on which
//! side of hyperplane `h` the vertex lies, relative to vertex 0.  On a valid
//! complex graph distance equals Hamming distance between signatures and the
//! median of three vertices is their bitwise majority; validation checks both
//! facts rather than assuming them.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, Sig};
use crate::error::Error;
use crate::rng::SplitMix64;

pub type Vertex = u32;

/// Unvalidated interchange form: a named graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawComplex {
    pub name: String,
    pub vertices: u32,
    pub edges: Vec<(u32, u32)>,
}

impl RawComplex {
    pub fn new(name: &str, vertices: u32, edges: Vec<(u32, u32)>) -> Self {
        RawComplex { name: name.to_string(), vertices, edges }
    }
}

/// Validation cost control.  Median uniqueness is checked exhaustively while
/// the vertex count stays at or below `median_vertex_cap`; above it a fixed
/// number of seeded triples is sampled and the report says so.
#[derive(Clone, Debug)]
pub struct ValidationCaps {
    pub median_vertex_cap: u32,
    pub sampled_triples: u64,
    pub seed: u64,
}

impl Default for ValidationCaps {
    fn default() -> Self {
        ValidationCaps { median_vertex_cap: 2_000, sampled_triples: 100_000, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MedianCheckMode {
    Exhaustive,
    Sampled { triples: u64, seed: u64 },
    /// Structural failure made the median check moot, or construction was
    /// from a certified-convex piece of an already validated complex.
    Skipped,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub name: String,
    pub vertices: u32,
    pub edge_count: u32,
    pub simple: bool,
    pub connected: bool,
    pub bipartite: bool,
    pub odd_cycle_witness: Option<Vec<u32>>,
    pub theta_classes: Option<u32>,
    pub theta_ok: bool,
    pub theta_witness: Option<String>,
    pub median_mode: MedianCheckMode,
    pub median_ok: bool,
    /// Failing triple plus the number of medians it has.
    pub median_witness: Option<(u32, u32, u32, u32)>,
    pub valid: bool,
}

/// A Theta-class of edges together with its carrier and the two combinatorial
/// hyperplanes bounding the carrier.  `side_minus` is the side containing the
/// signature-zero halfspace endpoints (the basepoint side when vertex 0 is an
/// endpoint).
#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub id: u32,
    /// Dual edges, as indices into the complex edge table, ascending.
    pub edges: Vec<u32>,
    pub side_minus: Vec<Vertex>,
    pub side_plus: Vec<Vertex>,
    pub carrier: Vec<Vertex>,
}

#[derive(Clone, Debug)]
pub struct CubeComplex {
    name: String,
    n: u32,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    edge_theta: Vec<u32>,
    hyperplanes: Vec<Hyperplane>,
    sig: Vec<Sig>,
    sig_words: usize,
    sig_index: BTreeMap<Sig, u32>,
    crossing_pairs: BTreeSet<(u32, u32)>,
}

/// Normalize and sanity-check the edge list: in-range ids, no loops, no
/// duplicates.  Returns edges as (min,max) pairs sorted lexicographically.
fn normalize_edges(raw: &RawComplex) -> Result<Vec<(u32, u32)>, Error> {
    let n = raw.vertices;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for &(a, b) in &raw.edges {
        if a >= n || b >= n {
            return Err(Error::MalformedInput(format!(
                "edge ({a},{b}) references a vertex out of range (n={n})"
            )));
        }
        if a == b {
            return Err(Error::MalformedInput(format!("loop at vertex {a}")));
        }
        edges.push((a.min(b), a.max(b)));
    }
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::MalformedInput("duplicate edge".to_string()));
    }
    Ok(edges)
}

fn adjacency(n: u32, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); n as usize];
    for &(a, b) in edges {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    for nbrs in &mut adj {
        nbrs.sort_unstable();
    }
    adj
}

fn bfs_dist(adj: &[Vec<u32>], start: u32) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    let mut queue = VecDeque::new();
    dist[start as usize] = 0;
    queue.push_back(start);
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

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller root wins, for determinism.
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi as usize] = lo;
        }
    }
}

struct BuildState {
    report: ValidationReport,
    complex: Option<CubeComplex>,
}

fn build(raw: &RawComplex, caps: &ValidationCaps, check_median: bool) -> Result<BuildState, Error> {
    let n = raw.vertices;
    if n == 0 {
        return Err(Error::MalformedInput("complex has no vertices".to_string()));
    }
    let edges = normalize_edges(raw)?;
    let adj = adjacency(n, &edges);

    let mut report = ValidationReport {
        name: raw.name.clone(),
        vertices: n,
        edge_count: edges.len() as u32,
        simple: true,
        connected: true,
        bipartite: true,
        odd_cycle_witness: None,
        theta_classes: None,
        theta_ok: false,
        theta_witness: None,
        median_mode: MedianCheckMode::Skipped,
        median_ok: false,
        median_witness: None,
        valid: false,
    };

    // Connectivity.
    let dist0 = bfs_dist(&adj, 0);
    if dist0.iter().any(|&d| d == u32::MAX) {
        report.connected = false;
        return Ok(BuildState { report, complex: None });
    }

    // Bipartiteness, with an odd-cycle witness via BFS parents.
    let mut parent = vec![u32::MAX; n as usize];
    for v in 0..n {
        for &w in &adj[v as usize] {
            if dist0[w as usize] == dist0[v as usize] + 1 && parent[w as usize] == u32::MAX {
                parent[w as usize] = v;
            }
        }
    }
    parent[0] = 0;
    'outer: for &(a, b) in &edges {
        if dist0[a as usize] % 2 == dist0[b as usize] % 2 {
            report.bipartite = false;
            let path_to_root = |mut v: u32| {
                let mut p = vec![v];
                while v != 0 {
                    v = parent[v as usize];
                    p.push(v);
                }
                p
            };
            let mut pa = path_to_root(a);
            let mut pb = path_to_root(b);
            while pa.len() > 1 && pb.len() > 1 && pa[pa.len() - 2] == pb[pb.len() - 2] {
                pa.pop();
                pb.pop();
            }
            pb.pop();
            pb.reverse();
            pa.extend(pb);
            report.odd_cycle_witness = Some(pa);
            break 'outer;
        }
    }

    if !report.bipartite {
        // Still hunt for a median witness so the report carries one; the
        // structural failure already decides validity.
        if check_median {
            let (ok, witness, mode) = median_check_by_distance(&adj, caps);
            report.median_mode = mode;
            report.median_ok = ok;
            report.median_witness = witness;
        }
        return Ok(BuildState { report, complex: None });
    }

    // Theta classes: transitive closure of opposite-sides-of-a-square.
    let edge_index: BTreeMap<(u32, u32), u32> =
        edges.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();
    let mut uf = UnionFind::new(edges.len());
    for (ei, &(a, b)) in edges.iter().enumerate() {
        for &c in &adj[a as usize] {
            if c == b {
                continue;
            }
            for &d in &adj[b as usize] {
                if d == a || d == c {
                    continue;
                }
                if let Some(&opp) = edge_index.get(&(c.min(d), c.max(d))) {
                    uf.union(ei as u32, opp);
                }
            }
        }
    }
    // Dense class ids in order of least edge index.
    let mut class_of_root = BTreeMap::new();
    let mut edge_theta = vec![0u32; edges.len()];
    for ei in 0..edges.len() as u32 {
        let root = uf.find(ei);
        let next = class_of_root.len() as u32;
        let class = *class_of_root.entry(root).or_insert(next);
        edge_theta[ei as usize] = class;
    }
    let h = class_of_root.len();
    report.theta_classes = Some(h as u32);

    // Matching: within a class no vertex supports two dual edges.
    let mut class_edges: Vec<Vec<u32>> = vec![Vec::new(); h];
    for (ei, &cls) in edge_theta.iter().enumerate() {
        class_edges[cls as usize].push(ei as u32);
    }
    for (cls, ce) in class_edges.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &ei in ce {
            let (a, b) = edges[ei as usize];
            if !seen.insert(a) || !seen.insert(b) {
                report.theta_witness = Some(format!(
                    "class {cls} has two dual edges on a common vertex (self-osculation)"
                ));
                return Ok(BuildState { report, complex: None });
            }
        }
    }

    // Halfspace signatures along a BFS tree, then consistency on all edges.
    let sig_words = bits::words_for(h);
    let mut sig: Vec<Sig> = vec![bits::zeros(sig_words); n as usize];
    let mut order: Vec<u32> = (0..n).collect();
    order.sort_unstable_by_key(|&v| (dist0[v as usize], v));
    for &v in order.iter().skip(1) {
        let p = parent[v as usize];
        let ei = edge_index[&(p.min(v), p.max(v))];
        let mut s = sig[p as usize].clone();
        bits::flip(&mut s, edge_theta[ei as usize]);
        sig[v as usize] = s;
    }
    for (ei, &(a, b)) in edges.iter().enumerate() {
        let mut expect = sig[a as usize].clone();
        bits::flip(&mut expect, edge_theta[ei]);
        if expect != sig[b as usize] {
            report.theta_witness = Some(format!(
                "edge ({a},{b}) is inconsistent with the halfspace structure of class {}",
                edge_theta[ei]
            ));
            return Ok(BuildState { report, complex: None });
        }
    }

    // Each halfspace must be connected, so removing a class leaves exactly
    // two components.
    for cls in 0..h as u32 {
        for want in [false, true] {
            let start = (0..n).find(|&v| bits::get(&sig[v as usize], cls) == want);
            let start = match start {
                Some(s) => s,
                None => {
                    report.theta_witness =
                        Some(format!("class {cls} has an empty halfspace"));
                    return Ok(BuildState { report, complex: None });
                }
            };
            let mut seen = vec![false; n as usize];
            let mut queue = VecDeque::new();
            seen[start as usize] = true;
            queue.push_back(start);
            let mut count = 1u32;
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u as usize] {
                    if bits::get(&sig[v as usize], cls) == want && !seen[v as usize] {
                        seen[v as usize] = true;
                        count += 1;
                        queue.push_back(v);
                    }
                }
            }
            let total = (0..n)
                .filter(|&v| bits::get(&sig[v as usize], cls) == want)
                .count() as u32;
            if count != total {
                report.theta_witness = Some(format!(
                    "a halfspace of class {cls} is disconnected; removing the class does not split the complex into two pieces"
                ));
                return Ok(BuildState { report, complex: None });
            }
        }
    }
    report.theta_ok = true;

    // Signature injectivity and the metric identity d = Hamming.
    let mut sig_index: BTreeMap<Sig, u32> = BTreeMap::new();
    for v in 0..n {
        if let Some(&w) = sig_index.get(&sig[v as usize]) {
            report.theta_witness =
                Some(format!("vertices {w} and {v} have identical halfspace signatures"));
            return Ok(BuildState { report, complex: None });
        }
        sig_index.insert(sig[v as usize].clone(), v);
    }

    if check_median {
        let exhaustive = n <= caps.median_vertex_cap;
        // d(x,y) == hamming(sig x, sig y) for all pairs from sampled (or all)
        // basepoints; this is what makes the majority-signature median test
        // complete.
        let bases: Vec<u32> = if exhaustive {
            (0..n).collect()
        } else {
            let mut rng = SplitMix64::new(caps.seed);
            let mut set = BTreeSet::new();
            set.insert(0u32);
            while (set.len() as u32) < caps.median_vertex_cap.min(n) {
                set.insert(rng.below(n as u64) as u32);
            }
            set.into_iter().collect()
        };
        for &x in &bases {
            let dx = bfs_dist(&adj, x);
            for y in 0..n {
                if dx[y as usize] != bits::hamming(&sig[x as usize], &sig[y as usize]) {
                    report.median_mode = if exhaustive {
                        MedianCheckMode::Exhaustive
                    } else {
                        MedianCheckMode::Sampled { triples: caps.sampled_triples, seed: caps.seed }
                    };
                    report.median_witness = median_witness_near(&adj, x, y);
                    return Ok(BuildState { report, complex: None });
                }
            }
        }

        // Median existence and uniqueness per triple via bitwise majority.
        let mut fail: Option<(u32, u32, u32, u32)> = None;
        if exhaustive {
            report.median_mode = MedianCheckMode::Exhaustive;
            'search: for x in 0..n {
                for y in x..n {
                    for z in y..n {
                        let m = bits::majority(
                            &sig[x as usize],
                            &sig[y as usize],
                            &sig[z as usize],
                        );
                        if !sig_index.contains_key(&m) {
                            fail = Some((x, y, z, 0));
                            break 'search;
                        }
                    }
                }
            }
        } else {
            report.median_mode =
                MedianCheckMode::Sampled { triples: caps.sampled_triples, seed: caps.seed };
            let mut rng = SplitMix64::new(caps.seed ^ 0x6d65646961);
            for _ in 0..caps.sampled_triples {
                let x = rng.below(n as u64) as u32;
                let y = rng.below(n as u64) as u32;
                let z = rng.below(n as u64) as u32;
                let m =
                    bits::majority(&sig[x as usize], &sig[y as usize], &sig[z as usize]);
                if !sig_index.contains_key(&m) {
                    fail = Some((x, y, z, 0));
                    break;
                }
            }
        }
        if let Some((x, y, z, _)) = fail {
            // Recount honestly for the witness.
            let count = count_medians(&adj, x, y, z);
            report.median_witness = Some((x, y, z, count));
            return Ok(BuildState { report, complex: None });
        }
        report.median_ok = true;
    } else {
        report.median_mode = MedianCheckMode::Skipped;
        report.median_ok = true;
    }

    // Hyperplane records.
    let mut hyperplanes = Vec::with_capacity(h);
    for (cls, ce) in class_edges.iter().enumerate() {
        let mut minus = Vec::new();
        let mut plus = Vec::new();
        for &ei in ce {
            let (a, b) = edges[ei as usize];
            let (m, p) = if bits::get(&sig[a as usize], cls as u32) { (b, a) } else { (a, b) };
            minus.push(m);
            plus.push(p);
        }
        minus.sort_unstable();
        plus.sort_unstable();
        let mut carrier: Vec<u32> = minus.iter().chain(plus.iter()).copied().collect();
        carrier.sort_unstable();
        hyperplanes.push(Hyperplane {
            id: cls as u32,
            edges: ce.clone(),
            side_minus: minus,
            side_plus: plus,
            carrier,
        });
    }

    // Crossing pairs: opposite classes meeting in a square.
    let mut crossing_pairs = BTreeSet::new();
    for a in 0..n {
        let nbrs = &adj[a as usize];
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                let (b, c) = (nbrs[i], nbrs[j]);
                // A square a-b-d-c needs a common neighbor d of b and c.
                for &d in &adj[b as usize] {
                    if d != a && adj[c as usize].binary_search(&d).is_ok() {
                        let h1 = edge_theta[edge_index[&(a.min(b), a.max(b))] as usize];
                        let h2 = edge_theta[edge_index[&(a.min(c), a.max(c))] as usize];
                        if h1 != h2 {
                            crossing_pairs.insert((h1.min(h2), h1.max(h2)));
                        }
                    }
                }
            }
        }
    }

    report.valid = true;
    let complex = CubeComplex {
        name: raw.name.clone(),
        n,
        edges,
        adj,
        edge_theta,
        hyperplanes,
        sig,
        sig_words,
        sig_index,
        crossing_pairs,
    };
    Ok(BuildState { report, complex: Some(complex) })
}

/// Count medians of a triple using breadth-first distances only; the
/// independent route, used for witnesses and cross-checks.
pub fn count_medians(adj: &[Vec<u32>], x: u32, y: u32, z: u32) -> u32 {
    let dx = bfs_dist(adj, x);
    let dy = bfs_dist(adj, y);
    let dz = bfs_dist(adj, z);
    let (dxy, dyz, dxz) = (dx[y as usize], dy[z as usize], dx[z as usize]);
    (0..adj.len() as u32)
        .filter(|&m| {
            dx[m as usize] + dy[m as usize] == dxy
                && dy[m as usize] + dz[m as usize] == dyz
                && dx[m as usize] + dz[m as usize] == dxz
        })
        .count() as u32
}

fn median_witness_near(adj: &[Vec<u32>], x: u32, y: u32) -> Option<(u32, u32, u32, u32)> {
    for z in 0..adj.len() as u32 {
        let c = count_medians(adj, x, y, z);
        if c != 1 {
            return Some((x, y, z, c));
        }
    }
    None
}

fn median_check_by_distance(
    adj: &[Vec<u32>],
    caps: &ValidationCaps,
) -> (bool, Option<(u32, u32, u32, u32)>, MedianCheckMode) {
    let n = adj.len() as u32;
    if n <= caps.median_vertex_cap {
        let dists: Vec<Vec<u32>> = (0..n).map(|v| bfs_dist(adj, v)).collect();
        for x in 0..n {
            for y in x..n {
                for z in y..n {
                    let mut count = 0u32;
                    let (dxy, dyz, dxz) =
                        (dists[x as usize][y as usize], dists[y as usize][z as usize], dists[x as usize][z as usize]);
                    for m in 0..n {
                        if dists[x as usize][m as usize] + dists[y as usize][m as usize] == dxy
                            && dists[y as usize][m as usize] + dists[z as usize][m as usize] == dyz
                            && dists[x as usize][m as usize] + dists[z as usize][m as usize] == dxz
                        {
                            count += 1;
                        }
                    }
                    if count != 1 {
                        return (false, Some((x, y, z, count)), MedianCheckMode::Exhaustive);
                    }
                }
            }
        }
        (true, None, MedianCheckMode::Exhaustive)
    } else {
        let mut rng = SplitMix64::new(caps.seed ^ 0x6d65646961);
        for _ in 0..caps.sampled_triples {
            let x = rng.below(n as u64) as u32;
            let y = rng.below(n as u64) as u32;
            let z = rng.below(n as u64) as u32;
            let c = count_medians(adj, x, y, z);
            if c != 1 {
                return (
                    false,
                    Some((x, y, z, c)),
                    MedianCheckMode::Sampled { triples: caps.sampled_triples, seed: caps.seed },
                );
            }
        }
        (true, None, MedianCheckMode::Sampled { triples: caps.sampled_triples, seed: caps.seed })
    }
}

/// Validate a raw complex and report every check; `Err` only for input that
/// cannot be interpreted as a graph at all.
pub fn validate_cube_complex(
    raw: &RawComplex,
    caps: &ValidationCaps,
) -> Result<ValidationReport, Error> {
    build(raw, caps, true).map(|st| st.report)
}

impl CubeComplex {
    /// Validate and construct.  The error carries the first failure.
    pub fn from_raw(raw: &RawComplex, caps: &ValidationCaps) -> Result<CubeComplex, Error> {
        let st = build(raw, caps, true)?;
        match st.complex {
            Some(c) => Ok(c),
            None => Err(report_to_error(&st.report)),
        }
    }

    pub fn from_raw_default(raw: &RawComplex) -> Result<CubeComplex, Error> {
        CubeComplex::from_raw(raw, &ValidationCaps::default())
    }

    /// Construct the induced complex on a vertex subset certified convex in
    /// an already-validated parent; the median check is skipped because
    /// convex subcomplexes of median graphs are median.  Vertex `vertices[i]`
    /// of the parent becomes vertex `i`.
    pub fn induced(parent: &CubeComplex, vertices: &[u32], name: &str) -> Result<CubeComplex, Error> {
        let mut index = BTreeMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            index.insert(v, i as u32);
        }
        let mut edges = Vec::new();
        for &(a, b) in &parent.edges {
            if let (Some(&ia), Some(&ib)) = (index.get(&a), index.get(&b)) {
                edges.push((ia.min(ib), ia.max(ib)));
            }
        }
        let raw = RawComplex::new(name, vertices.len() as u32, edges);
        let st = build(&raw, &ValidationCaps::default(), false)?;
        st.complex.ok_or_else(|| report_to_error(&st.report))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_vertices(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn edge_index(&self, a: u32, b: u32) -> Option<u32> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok().map(|i| i as u32)
    }

    pub fn theta_of_edge(&self, edge: u32) -> u32 {
        self.edge_theta[edge as usize]
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane_count(&self) -> u32 {
        self.hyperplanes.len() as u32
    }

    pub fn sig(&self, v: u32) -> &Sig {
        &self.sig[v as usize]
    }

    pub fn sig_words(&self) -> usize {
        self.sig_words
    }

    pub fn vertex_of_sig(&self, sig: &Sig) -> Option<u32> {
        self.sig_index.get(sig).copied()
    }

    /// Which side of hyperplane `h` vertex `v` lies on.
    pub fn side(&self, h: u32, v: u32) -> bool {
        bits::get(&self.sig[v as usize], h)
    }

    pub fn separates(&self, h: u32, x: u32, y: u32) -> bool {
        self.side(h, x) != self.side(h, y)
    }

    pub fn halfspace(&self, h: u32, plus: bool) -> Vec<u32> {
        (0..self.n).filter(|&v| self.side(h, v) == plus).collect()
    }

    /// Hyperplanes crossing `h` (sharing a square with it).
    pub fn crossers(&self, h: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, b) in &self.crossing_pairs {
            if a == h {
                out.push(b);
            } else if b == h {
                out.push(a);
            }
        }
        out
    }

    pub fn crossing_pairs(&self) -> &BTreeSet<(u32, u32)> {
        &self.crossing_pairs
    }

    pub fn cross(&self, h1: u32, h2: u32) -> bool {
        self.crossing_pairs.contains(&(h1.min(h2), h1.max(h2)))
    }

    /// Hyperplanes whose carrier contains `v`: the classes of its incident
    /// edges.
    pub fn vertex_carriers(&self, v: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self.adj[v as usize]
            .iter()
            .map(|&w| self.edge_theta[self.edge_index(v, w).unwrap() as usize])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Graph distance by breadth-first search.
    pub fn distance(&self, x: u32, y: u32) -> Result<u32, Error> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        let d = bfs_dist(&self.adj, x)[y as usize];
        if d == u32::MAX {
            return Err(Error::DisconnectedPair(x, y));
        }
        Ok(d)
    }

    /// Graph distance as the number of separating hyperplanes; equal to
    /// `distance` on a validated complex, and much cheaper.
    #[inline]
    pub fn dist(&self, x: u32, y: u32) -> u32 {
        bits::hamming(&self.sig[x as usize], &self.sig[y as usize])
    }

    pub fn bfs_from(&self, x: u32) -> Vec<u32> {
        bfs_dist(&self.adj, x)
    }

    /// The unique median of a triple: bitwise majority of signatures.
    pub fn median(&self, x: u32, y: u32, z: u32) -> Result<u32, Error> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        self.check_vertex(z)?;
        let m = bits::majority(&self.sig[x as usize], &self.sig[y as usize], &self.sig[z as usize]);
        self.sig_index
            .get(&m)
            .copied()
            .ok_or(Error::NotMedian { triple: (x, y, z), medians: 0 })
    }

    /// All vertices on geodesics between `x` and `y`, ascending.
    pub fn interval(&self, x: u32, y: u32) -> Vec<u32> {
        let sx = &self.sig[x as usize];
        let sy = &self.sig[y as usize];
        (0..self.n)
            .filter(|&v| bits::between(&self.sig[v as usize], sx, sy))
            .collect()
    }

    /// One geodesic from `x` to `y`, deterministic: at each step move to the
    /// smallest neighbor strictly closer to `y`.
    pub fn geodesic(&self, x: u32, y: u32) -> Vec<u32> {
        let mut path = vec![x];
        let mut cur = x;
        while cur != y {
            let d = self.dist(cur, y);
            let next = self.adj[cur as usize]
                .iter()
                .copied()
                .find(|&w| self.dist(w, y) + 1 == d)
                .expect("validated complex is geodesic");
            path.push(next);
            cur = next;
        }
        path
    }

    /// Deterministic geodesic staying inside `allowed` (sound when the set is
    /// convex, since then some geodesic lies inside at every step).
    pub fn geodesic_in(&self, x: u32, y: u32, allowed: &[u64]) -> Vec<u32> {
        let mut path = vec![x];
        let mut cur = x;
        while cur != y {
            let d = self.dist(cur, y);
            let next = self.adj[cur as usize]
                .iter()
                .copied()
                .find(|&w| bits::get(allowed, w) && self.dist(w, y) + 1 == d)
                .expect("convex set contains a geodesic");
            path.push(next);
            cur = next;
        }
        path
    }

    fn check_vertex(&self, v: u32) -> Result<(), Error> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidId(v))
        }
    }

    pub fn to_raw(&self) -> RawComplex {
        RawComplex { name: self.name.clone(), vertices: self.n, edges: self.edges.clone() }
    }
}

fn report_to_error(report: &ValidationReport) -> Error {
    if !report.connected {
        return Error::MalformedInput("graph is disconnected".to_string());
    }
    if let Some((x, y, z, c)) = report.median_witness {
        return Error::NotMedian { triple: (x, y, z), medians: c };
    }
    if !report.bipartite {
        return Error::NotMedian { triple: (0, 0, 0), medians: 0 };
    }
    if let Some(w) = &report.theta_witness {
        return Error::SelfCrossing { class: 0, detail: w.clone() };
    }
    Error::MalformedInput("validation failed".to_string())
}
