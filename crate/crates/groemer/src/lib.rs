//! Extremal Groemer packings of unit discs.
//!
//! A *Groemer packing* places `n` unit discs so that their centers form a
//! (possibly degenerate) hexagon in the triangular lattice. Among these, a
//! packing is *extremal* (a *Wegner packing*) when its number of boundary
//! discs attains the minimum `p0(n) = ceil(sqrt(12n - 3)) - 3`. Not every
//! `n` admits an extremal packing; those that do not are the *exceptional
//! numbers*.
//!
//! This crate decides exceptionality three independent ways and lets them be
//! played against each other:
//!
//! * [`search::find_extremal`] — the ground truth: an exhaustive search for
//!   boundary sequences `(p1, ..., p6)` solving the point-count and perimeter
//!   identities.
//! * [`criteria::check_boeroeczky_ruzsa`] — the proven characterization of
//!   Böröczky and Ruzsa: `n` is exceptional iff
//!   `ceil(sqrt(12n - 3))^2 + 3 - 12n = (3k - 1) * 9^l` for some `k, l >= 1`.
//! * [`criteria::check_wegner_conjecture`] — Wegner's conjectured congruence
//!   characterization in the hexagonal parameters `(a, b, c)`. The conjecture
//!   is *false*: [`search::cross_validate`] locates `n = 1541551`, which the
//!   conjecture calls exceptional while an extremal packing exists. The
//!   repaired congruence form is [`criteria::check_corrected`].
//!
//! [`geometry::realize`] turns any boundary sequence into the explicit set of
//! lattice centers, verifies the counting identities geometrically, and
//! exports CSV/SVG. All decision arithmetic is exact integer arithmetic;
//! floating point appears only in SVG coordinate output.

pub mod arith;
pub mod criteria;
pub mod geometry;
pub mod params;
pub mod report;
pub mod search;

pub use criteria::{
    check_boeroeczky_ruzsa, check_corrected, check_wegner_conjecture, BrWitness, Verdict,
    WegnerBranch, WegnerWitness,
};
pub use geometry::{realize, HexRealization, LatticePoint, RenderOptions};
pub use params::{decompose, min_boundary_count, recompose, HexParams};
pub use report::VerdictReport;
pub use search::{
    cross_validate, enumerate_exceptional, find_extremal, BoundarySeq, Criterion, SearchReport,
};

/// Errors for every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Disc counts start at 1.
    #[error("n must be a positive integer")]
    ZeroN,
    /// A hexagonal parameter triple outside `1 <= a`, `0 <= b <= 5`, `0 <= c < a`,
    /// or one whose disc count does not fit in 64 bits.
    #[error("invalid hexagonal parameters a={a} b={b} c={c}")]
    InvalidParams { a: u64, b: u64, c: u64 },
    /// Side counts that are not all positive or do not balance cyclically
    /// (`p_i + p_{i+1} == p_{i+3} + p_{i+4}`).
    #[error("invalid boundary sequence {0:?}")]
    InvalidSequence([u64; 6]),
    /// A side-count quadruple whose hexagon closure would be empty or negative.
    #[error("side counts {0:?} do not describe a hexagon")]
    InvalidQuad([u64; 4]),
    /// The side-bound window is only defined when `b` and `c` are not both zero.
    #[error("side bounds are undefined for regular hexagon parameters (b = c = 0)")]
    BoundsOutOfScope,
    /// Pairwise distances need at least two points.
    #[error("operation requires at least two points")]
    TooFewPoints,
    /// An intermediate value left the exactly-representable range.
    #[error("arithmetic overflow in exact computation")]
    Overflow,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
