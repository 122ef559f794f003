//! Exact-arithmetic toolkit for compatible matchings of noncrossing
//! geometric graphs.
//!
//! The crate decides and optimizes compatible matchings by exact search,
//! evaluates the counting inequality behind the lower bounds for maximal
//! matchings, builds the convex subdivision that certifies it, and generates
//! the extremal instance families with machine-checked certificates.

pub mod analysis;
pub mod constructions;
pub mod document;
pub mod experiment;
pub mod geometry;
pub mod graph;
pub mod render;
pub mod solver;

pub use geometry::{Orientation, Point, Rational, SegmentRelation};
pub use graph::{Edge, Face, GeometricGraph, Matching};
