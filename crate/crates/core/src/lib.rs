//! Broadcast rates of networks with side information.
//!
//! A broadcast network ([`BroadcastHypergraph`]) has `n` data blocks and a
//! set of receivers, each wanting one block and knowing some others. The
//! number of bits a sender must broadcast is governed by the chromatic
//! number of the network's confusion graph, a Cayley graph over `Z_2^{n t}`
//! built in [`confusion`]. This crate builds those graphs, searches and
//! certifies their independence and chromatic numbers ([`graphcore`]),
//! provides the known explicit colorings and independent sets ([`codes`]),
//! and assembles rate reports ([`rates`]), min-rank bounds ([`minrank`])
//! and the network-coding reduction ([`netexport`]).

pub mod codes;
pub mod confusion;
pub mod graph;
pub mod graphcore;
pub mod instances;
pub mod minrank;
pub mod model;
pub mod netexport;
pub mod rates;

pub use confusion::{confusion_generators, or_product, CayleyGraph, ProductCayley};
pub use graph::{BitGraph, BitSet, Graph};
pub use graphcore::{ColoringCert, IndependentSetCert, Optimality, RationalValue};
pub use model::{BroadcastHypergraph, Receiver, SideInfoGraph, Word};
