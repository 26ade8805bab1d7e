//! Negation sets of signed graphs.
//!
//! A negation set is a set of edges whose negation leaves the graph balanced;
//! equivalently, the negative edge set of some switching. This crate provides
//! the signed graph model ([`graph`]), balance and switching tests
//! ([`balance`]), minimality and minimum certificates ([`minimality`]),
//! bipartite and acyclic negation sets ([`negation`]), the exact
//! packing number of a negation set ([`packing`]) and a brute-force oracle that
//! cross-checks all of them on small graphs ([`oracle`]).

pub mod balance;
pub mod corpus;
pub mod error;
pub mod format;
pub mod graph;
pub mod minimality;
pub mod negation;
pub mod oracle;
pub mod packing;
pub mod structure;

pub use negation::acyclic;

pub use balance::{check_balance, is_antibalanced, is_negation_set, negation_set_from_switching, switching_equivalent, BalanceWitness, HararyBipartition};
pub use error::{Error, Result};
pub use graph::{Degrees, Edge, EdgeSet, Sign, SignedGraph, Subgraph, VertexSet};
pub use structure::KCore;
