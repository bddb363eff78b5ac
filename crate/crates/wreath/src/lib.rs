//! Graph products and generalized wreath products.
//!
//! This crate builds the Cartesian, lexicographic and wreath products of
//! finite graphs, the poset-indexed generalized wreath product of graphs
//! (with a lazy neighbor oracle for products too large to materialize), and
//! the generalized wreath product of finite permutation groups. It also
//! ships a verification harness checking, instance by instance, that the
//! generalized wreath product of Cayley graphs is the Cayley graph of the
//! generalized wreath product of the underlying groups.
//!
//! ```
//! use wreath::graph::Graph;
//! use wreath::poset::Poset;
//! use wreath::products::GwpSpec;
//!
//! // two incomparable indices carrying an edge and a triangle
//! let poset = Poset::from_covers(&["1", "2"], &[])?;
//! let edge = Graph::new(vec!["a".into(), "b".into()], &[("a", "b")])?;
//! let triangle = Graph::complete(&["x", "y", "z"]);
//! let spec = GwpSpec::new(poset, vec![edge, triangle])?;
//!
//! assert_eq!(spec.vertex_count().to_string(), "6");
//! let v = spec.vertex(&[vec!["a"], vec!["x"]])?;
//! assert_eq!(spec.neighbors(&v).len(), 3); // 1 + 2, the factor degrees
//! # Ok::<(), wreath::Error>(())
//! ```

#![forbid(unsafe_code)]

mod enumerate;
mod error;

pub mod graph;
pub mod group;
pub mod gwp;
pub mod iso;
pub mod poset;
pub mod products;

pub use error::{Error, Result};
