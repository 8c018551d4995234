//! Right-angled Artin groups: defining graphs, word normal forms, and balls
//! in universal covers of Salvetti complexes.
//!
//! Words are reduced by cancelling inverse pairs separated only by letters
//! commuting with them, then linearized to the lexicographically least
//! shuffle (least available letter first).  Two words represent the same
//! element exactly when their normal forms coincide; reduced words are
//! geodesic, so word length is the 1-skeleton metric of the universal cover.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{CubeComplex, RawComplex};
use crate::error::Error;
use crate::subcomplex;

#[derive(Clone, Debug)]
pub struct DefiningGraph {
    name: String,
    labels: Vec<String>,
    adj: Vec<BTreeSet<u8>>,
}

/// One letter: generator index and inversion flag.
pub type Letter = (u8, bool);
pub type GroupWord = Vec<Letter>;

/// Induced subgraph, as a vertex set.
pub type Subgraph = BTreeSet<u8>;

impl DefiningGraph {
    pub fn new(name: &str, labels: Vec<String>, edges: &[(u8, u8)]) -> Result<Self, Error> {
        let n = labels.len();
        if n == 0 || n > 64 {
            return Err(Error::MalformedInput("need 1..=64 generators".to_string()));
        }
        let mut uniq = BTreeSet::new();
        for l in &labels {
            if !uniq.insert(l.clone()) {
                return Err(Error::MalformedInput(format!("duplicate generator label {l}")));
            }
        }
        let mut adj = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            if a as usize >= n || b as usize >= n {
                return Err(Error::MalformedInput(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::MalformedInput(format!("loop at generator {a}")));
            }
            adj[a as usize].insert(b);
            adj[b as usize].insert(a);
        }
        Ok(DefiningGraph { name: name.to_string(), labels, adj })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_generators(&self) -> u8 {
        self.labels.len() as u8
    }

    pub fn commutes(&self, a: u8, b: u8) -> bool {
        a != b && self.adj[a as usize].contains(&b)
    }

    pub fn link(&self, v: u8) -> Subgraph {
        self.adj[v as usize].clone()
    }

    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for (a, nbrs) in self.adj.iter().enumerate() {
            for &b in nbrs {
                if (a as u8) < b {
                    out.push((a as u8, b));
                }
            }
        }
        out
    }

    /// Size of the largest clique; the dimension of the Salvetti complex.
    pub fn dimension(&self) -> u32 {
        let n = self.num_generators() as u32;
        let mut best = 1;
        for mask in 1u64..(1u64 << n) {
            let verts: Vec<u8> =
                (0..n as u8).filter(|&v| mask >> v & 1 == 1).collect();
            let clique = verts
                .iter()
                .enumerate()
                .all(|(i, &a)| verts[i + 1..].iter().all(|&b| self.commutes(a, b)));
            if clique {
                best = best.max(verts.len() as u32);
            }
        }
        best
    }
}

/// Some small graphs used throughout the test battery.
pub fn named_graph(name: &str) -> Result<DefiningGraph, Error> {
    let lbl = |s: &[&str]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    match name {
        // Two commuting generators: the universal cover is the grid.
        "edge" => DefiningGraph::new("edge", lbl(&["a", "b"]), &[(0, 1)]),
        // Free group of rank two: the cover is the 4-valent tree.
        "free-ab" => DefiningGraph::new("free-ab", lbl(&["a", "b"]), &[]),
        "path-abc" => DefiningGraph::new("path-abc", lbl(&["a", "b", "c"]), &[(0, 1), (1, 2)]),
        "triangle" => {
            DefiningGraph::new("triangle", lbl(&["a", "b", "c"]), &[(0, 1), (0, 2), (1, 2)])
        }
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

/// Cancel inverse pairs separated only by letters commuting with them, until
/// none remain; the result is geodesic.
fn reduce(graph: &DefiningGraph, word: &[Letter]) -> GroupWord {
    let mut w = word.to_vec();
    'outer: loop {
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[j].0 == w[i].0 {
                    if w[j].1 != w[i].1 {
                        w.remove(j);
                        w.remove(i);
                        continue 'outer;
                    }
                    break;
                }
                if !graph.commutes(w[j].0, w[i].0) {
                    break;
                }
            }
        }
        return w;
    }
}

/// ShortLex normal form: reduce, then repeatedly emit the least letter that
/// commutes past everything before it.
pub fn normal_form(graph: &DefiningGraph, word: &[Letter]) -> GroupWord {
    let mut rest = reduce(graph, word);
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best = 0usize;
        for i in 1..rest.len() {
            if (0..i).all(|k| graph.commutes(rest[k].0, rest[i].0))
                && letter_key(rest[i]) < letter_key(rest[best])
            {
                best = i;
            }
        }
        out.push(rest.remove(best));
    }
    out
}

#[inline]
fn letter_key(l: Letter) -> (u8, bool) {
    l
}

pub fn invert(word: &[Letter]) -> GroupWord {
    word.iter().rev().map(|&(g, s)| (g, !s)).collect()
}

pub fn concat(a: &[Letter], b: &[Letter]) -> GroupWord {
    a.iter().chain(b.iter()).copied().collect()
}

/// Normal form of `a * b`.
pub fn mul(graph: &DefiningGraph, a: &[Letter], b: &[Letter]) -> GroupWord {
    normal_form(graph, &concat(a, b))
}

/// Parse a whitespace-separated word like `"a b a^-1"` over the graph's
/// labels.
pub fn parse_word(graph: &DefiningGraph, text: &str) -> Result<GroupWord, Error> {
    let mut out = Vec::new();
    for token in text.split_whitespace() {
        let (label, inv) = match token.strip_suffix("^-1") {
            Some(head) => (head, true),
            None => (token, false),
        };
        let gen = graph
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::MalformedInput(format!("unknown generator {label}")))?;
        out.push((gen as u8, inv));
    }
    Ok(out)
}

pub fn format_word(graph: &DefiningGraph, word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for &(g, inv) in word {
        let l = &graph.labels[g as usize];
        parts.push(if inv { format!("{l}^-1") } else { l.clone() });
    }
    parts.join(" ")
}

/// A finite convex piece of the universal cover of the Salvetti complex:
/// the convex hull of the radius-`r` ball around the identity.
#[derive(Clone, Debug)]
pub struct SalvettiBall {
    pub complex: CubeComplex,
    pub basepoint: u32,
    /// Normal form of the group element at each vertex.
    pub elements: Vec<GroupWord>,
    pub radius: u32,
}

/// Enumerate elements of length at most `r + dim` via normal forms, join
/// elements differing by one generator, and return the convex hull of the
/// radius-`r` ball.  The hull must stabilize strictly inside the enumerated
/// region; balls beyond `budget` vertices abort.
pub fn salvetti_ball(graph: &DefiningGraph, r: u32, budget: u64) -> Result<SalvettiBall, Error> {
    let reach = r + graph.dimension();
    // Level-by-level enumeration; ids sorted by (word length, lex order).
    let mut ids: BTreeMap<GroupWord, u32> = BTreeMap::new();
    let mut by_level: Vec<Vec<GroupWord>> = vec![vec![Vec::new()]];
    ids.insert(Vec::new(), 0);
    let mut total: u64 = 1;
    for level in 0..reach {
        let mut next: BTreeSet<GroupWord> = BTreeSet::new();
        for w in &by_level[level as usize] {
            for g in 0..graph.num_generators() {
                for inv in [false, true] {
                    let v = mul(graph, w, &[(g, inv)]);
                    if v.len() as u32 == level + 1 && !ids.contains_key(&v) {
                        next.insert(v);
                    }
                }
            }
        }
        total += next.len() as u64;
        if total > budget {
            return Err(Error::BudgetExceeded { vertices: total, budget });
        }
        let level_words: Vec<GroupWord> = next.into_iter().collect();
        for w in &level_words {
            let id = ids.len() as u32;
            ids.insert(w.clone(), id);
        }
        by_level.push(level_words);
    }

    let words: Vec<GroupWord> = {
        let mut v: Vec<(u32, GroupWord)> = ids.iter().map(|(w, &i)| (i, w.clone())).collect();
        v.sort_unstable_by_key(|(i, _)| *i);
        v.into_iter().map(|(_, w)| w).collect()
    };
    let mut edges = Vec::new();
    for (i, w) in words.iter().enumerate() {
        for g in 0..graph.num_generators() {
            for inv in [false, true] {
                let v = mul(graph, w, &[(g, inv)]);
                if let Some(&j) = ids.get(&v) {
                    if (i as u32) < j {
                        edges.push((i as u32, j));
                    }
                }
            }
        }
    }
    let region = CubeComplex::from_raw_default(&RawComplex::new(
        &format!("salvetti_region({},{reach})", graph.name),
        words.len() as u32,
        edges,
    ))?;

    let ball_r: Vec<u32> = (0..words.len() as u32)
        .filter(|&v| words[v as usize].len() as u32 <= r)
        .collect();
    let hull = subcomplex::convex_hull(&region, &ball_r)?;
    let max_len = hull
        .vertices()
        .iter()
        .map(|&v| words[v as usize].len() as u32)
        .max()
        .unwrap_or(0);
    if max_len >= reach && r > 0 {
        // The hull escaped the enumerated region, so convexity in the full
        // universal cover is not certified.
        return Err(Error::BudgetExceeded { vertices: total, budget });
    }

    let complex = CubeComplex::induced(
        &region,
        hull.vertices(),
        &format!("salvetti_ball({},{r})", graph.name),
    )?;
    let elements: Vec<GroupWord> =
        hull.vertices().iter().map(|&v| words[v as usize].clone()).collect();
    Ok(SalvettiBall { complex, basepoint: 0, elements, radius: r })
}

/// Rich family checks: the whole graph, every vertex link, and closure under
/// pairwise intersection (empty intersections may be dropped).
pub fn check_rich(graph: &DefiningGraph, family: &[Subgraph]) -> Result<(), Error> {
    let full: Subgraph = (0..graph.num_generators()).collect();
    if !family.contains(&full) {
        return Err(Error::NotRich("missing the whole graph".to_string()));
    }
    for v in 0..graph.num_generators() {
        let link = graph.link(v);
        if !link.is_empty() && !family.contains(&link) {
            return Err(Error::NotRich(format!(
                "missing link of generator {}",
                graph.labels[v as usize]
            )));
        }
    }
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            let inter: Subgraph = a.intersection(b).copied().collect();
            if !inter.is_empty() && !family.contains(&inter) {
                return Err(Error::NotRich(format!(
                    "missing intersection {:?}",
                    inter.iter().collect::<Vec<_>>()
                )));
            }
        }
    }
    Ok(())
}

/// The minimal rich family: the graph plus all nonempty intersections of
/// vertex links.
pub fn minimal_rich(graph: &DefiningGraph) -> Vec<Subgraph> {
    let mut family: BTreeSet<Subgraph> = BTreeSet::new();
    family.insert((0..graph.num_generators()).collect());
    for v in 0..graph.num_generators() {
        let link = graph.link(v);
        if !link.is_empty() {
            family.insert(link);
        }
    }
    loop {
        let list: Vec<Subgraph> = family.iter().cloned().collect();
        let before = family.len();
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                let inter: Subgraph = a.intersection(b).copied().collect();
                if !inter.is_empty() {
                    family.insert(inter);
                }
            }
        }
        if family.len() == before {
            break;
        }
    }
    family.into_iter().collect()
}

/// Every nonempty induced subgraph; rich, and exponentially large.
pub fn all_subgraphs(graph: &DefiningGraph) -> Vec<Subgraph> {
    let n = graph.num_generators();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
    }
    out
}
