//! Graph-derived simplicial complexes and their exact invariants.
//!
//! Everything here is finite and exact: graphs and digraphs over dense
//! integer vertex ids, simplicial complexes as facet antichains, reduced
//! integer homology through Smith normal form, edge-path group
//! presentations, and the bounded closed-k-homotopy calculus on graph
//! paths. All values are immutable after construction and all operations
//! are pure, so everything is safe to share across threads.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod complex;
pub mod corpus;
pub mod digraph_ext;
pub mod graph;
pub mod grouppres;
pub mod homology;
pub mod hypergraph;
pub mod kpath;
pub mod metric;
