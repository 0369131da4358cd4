//! Pointed quandle invariants of linkoid diagrams.
//!
//! Finite quandles are operation tables; a linkoid diagram is a set of arcs
//! with signed crossings and ordered open components. From these the crate
//! computes coloring sets, counting invariants and matrices, coloring
//! quivers, and in-degree quiver polynomials. The [`torus`] module holds
//! closed forms for the T̃(p,2) family with dihedral quandles.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod coloring;
pub mod error;
pub mod graph;
pub mod linkoid;
pub mod polynomial;
pub mod quandle;
pub mod quiver;
pub mod torus;

pub use coloring::{
    counting_invariant, counting_matrix, enumerate_colorings, enumerate_colorings_with, Coloring,
    CountingMatrix, SearchLimits,
};
pub use error::{Error, Result};
pub use graph::{are_isomorphic, complete_regular, directed_join, DirectedMultigraph};
pub use linkoid::{
    add_r1_kink, crossing_relations, torus_linkoid, Arc, Chirality, Crossing, LinkoidDiagram,
    OpenComponent, Relation, Sign,
};
pub use polynomial::{Polynomial, PolynomialMatrix};
pub use quandle::{
    dihedral, enumerate_pointed_homs, enumerate_quandle_homs, trivial_quandle, validate_quandle,
    Axiom, PointedQuandle, Quandle, QuandleMap, ValidationReport, Violation,
};
pub use quiver::{build_quiver, in_degree_polynomial, in_degree_polynomial_matrix, EndoFamily, Quiver};
