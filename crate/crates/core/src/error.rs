//! Error type shared by the whole crate.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Dangling edge ids, loops, or duplicate edges in raw input.
    MalformedInput(String),
    /// A vertex triple with zero or at least two medians; carries the witness
    /// triple and the number of medians found.
    NotMedian { triple: (u32, u32, u32), medians: u32 },
    /// A Theta-class violating the hyperplane invariants (the input graph is
    /// not the 1-skeleton of a CAT(0) cube complex).
    SelfCrossing { class: u32, detail: String },
    /// A pair of vertices with no connecting path; signals corruption since
    /// validated complexes are connected.
    DisconnectedPair(u32, u32),
    /// Operation requires a nonempty input set.
    EmptyInput,
    /// Operation requires a verified-convex subcomplex.
    NotConvex,
    /// Vertex or edge id out of range.
    InvalidId(u32),
    /// Enumeration budget exhausted; carries the count seen so far.
    CapExceeded { count: u128 },
    /// Generated complex exceeds the configured vertex budget.
    BudgetExceeded { vertices: u64, budget: u64 },
    /// Unknown fixture name.
    UnknownFixture(String),
    /// A family of subgraphs failing the rich-family conditions.
    NotRich(String),
    /// Member classes coincide where distinct classes are required.
    SameClass,
    /// Projection onto a single-vertex factor (the empty clique).
    EmptyFactor,
    /// Tuple is missing a coordinate for some parallelism class.
    BadIndex(usize),
    /// Realization called on a tuple that fails the consistency check.
    Inconsistent(String),
    /// No leaf hyperplane found; the input was not a compact CAT(0) complex.
    NoLeafHyperplane,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedInput(s) => write!(f, "malformed input: {s}"),
            Error::NotMedian { triple, medians } => write!(
                f,
                "triple ({},{},{}) has {} medians",
                triple.0, triple.1, triple.2, medians
            ),
            Error::SelfCrossing { class, detail } => {
                write!(f, "theta class {class} is not a hyperplane: {detail}")
            }
            Error::DisconnectedPair(x, y) => write!(f, "no path between {x} and {y}"),
            Error::EmptyInput => write!(f, "empty input set"),
            Error::NotConvex => write!(f, "subcomplex lacks a convexity certificate"),
            Error::InvalidId(v) => write!(f, "id {v} out of range"),
            Error::CapExceeded { count } => write!(f, "enumeration cap exceeded (count {count})"),
            Error::BudgetExceeded { vertices, budget } => {
                write!(f, "vertex budget exceeded: {vertices} > {budget}")
            }
            Error::UnknownFixture(s) => write!(f, "unknown fixture: {s}"),
            Error::NotRich(s) => write!(f, "family is not rich: {s}"),
            Error::SameClass => write!(f, "classes coincide"),
            Error::EmptyFactor => write!(f, "projection to a single-vertex factor"),
            Error::BadIndex(i) => write!(f, "tuple is missing coordinate for class {i}"),
            Error::Inconsistent(s) => write!(f, "tuple is not consistent: {s}"),
            Error::NoLeafHyperplane => write!(f, "no leaf hyperplane"),
        }
    }
}
