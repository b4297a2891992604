//! Alon–Tarsi orientations of labeled graphs: exact deciders, the structural
//! classification of pairs `(G, h_x)` that are not AT, constructive
//! orientation builders, and brute-force list-colouring and paintability
//! oracles for cross-validation on small graphs.

pub mod blocks;
pub mod builders;
pub mod canon;
pub mod cert;
pub mod classify;
pub mod coeff;
pub mod color;
pub mod compose;
pub mod config;
pub mod enumerate;
pub mod error;
pub mod euler;
pub mod exec;
pub mod graph;
pub mod graph6;
pub mod orientation;
pub mod patterns;
pub mod search;
pub mod stretch;
pub mod sweep;
pub mod transfer;

pub use error::{Error, Result};
pub use graph::{DegreeBound, Graph, LabeledPair};
pub use orientation::{EulerCounts, Orientation};
