//! Combinatorial machinery for one-sided bimodule problems: bigraphs with
//! solid and dotted arrows, walks and cycles, 2-dimensional cell complexes,
//! coverings and deck transformations, integral unit quadratic forms with
//! root calculus, and the schurity diagnostic pipeline built on top.
//!
//! Composition of walks is right to left throughout: `compose(w1, w2)`
//! traverses `w2` first and requires `s(w1) = e(w2)`. This convention is
//! fixed here once; every module follows it.

pub mod analysis;
pub mod bigraph;
pub mod bimodule;
pub mod complex;
pub mod covering;
pub mod homotopy;
pub mod titsform;
pub mod walk;

pub use bigraph::{ArrowId, Bigraph, BigraphMorphism, Degree, VertexId};
pub use walk::{Cycle, Step, Walk};
