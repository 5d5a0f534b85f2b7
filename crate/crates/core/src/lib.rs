//! Exact algebra for principal minors of small matrices.

pub mod exactpoly;
pub mod subset;

pub use subset::SubsetIndex;
pub mod cycle_decomp;
pub mod minor_maps;
pub mod nanson;
pub mod lie_action;
pub mod relation_miner;
pub mod hyperdet;
pub mod cli;
