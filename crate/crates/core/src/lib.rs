//! Exact decision procedures for integral representation of elements by
//! positive definite quadratic forms over rings of integers of totally real
//! number fields.
//!
//! All arithmetic is exact: big integers, big rationals, and rational
//! interval refinement backed by Sturm sequences. Empty search results are
//! proofs, not heuristics.
//!
//! Module map:
//! - [`numfield`]: totally real fields, orders, elements, embeddings, houses.
//! - [`qform`]: quadratic forms over orders, definiteness, scalar extension.
//! - [`localq`]: Legendre/Hilbert symbols, local and rational representation,
//!   congruence search, dyadic square testing in a 2-inert cubic order.
//! - [`enumtr`]: exhaustive enumeration of totally real algebraic integers of
//!   bounded degree and house; the small-house cosine family.
//! - [`repsearch`]: certificate-grade representation search via trace-form
//!   lattice enumeration.
//! - [`istr`]: verdicts on integral Springer-type representation failures,
//!   field scans, obstruction proofs, file formats and the built-in corpus.

pub mod enumtr;
pub mod interval;
pub mod istr;
pub mod localq;
pub mod numfield;
pub mod poly;
pub mod qform;
pub mod rational;
pub mod repsearch;

pub use rational::Rational;
