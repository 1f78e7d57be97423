//! Exact-arithmetic toolkit for compact Lie groups: static type data,
//! representation theory, Dynkin indices, rational homotopy ranks, the
//! exponent-matching classification of homogeneous spaces with the
//! cohomology of a product of two spheres, and quadrangle multiplicity
//! constraints.

pub mod classifier;
pub mod dynkin_index;
pub mod error;
pub mod geometry;
pub mod lie_data;
pub mod rational_topology;
pub mod rep_theory;
pub mod roots;

pub use error::{LieError, Result};
