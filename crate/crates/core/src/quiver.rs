//! Pointed quandle coloring quivers and their in-degree polynomials.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{enumerate_colorings, require_one_open_component, Coloring};
use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;
use crate::linkoid::LinkoidDiagram;
use crate::polynomial::{Polynomial, PolynomialMatrix};
use crate::quandle::{enumerate_pointed_homs_capped, PointedQuandle, Quandle, QuandleMap};

/// Source-order cap for the full endomorphism set computed by
/// [`build_quiver`].
pub const QUIVER_ENDO_ORDER_CAP: usize = 16;

/// A coloring quiver: vertex `i` is `colorings[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub colorings: Vec<Coloring>,
    pub graph: DirectedMultigraph,
    /// Size of the endomorphism set the arcs were drawn from.
    pub endo_count: usize,
}

/// Per-basepoint-pair endomorphism subsets; pairs not present use the
/// full endomorphism set.
pub type EndoFamily = BTreeMap<(usize, usize), Vec<QuandleMap>>;

/// Checks that every map in `endos` is a distinct pointed endomorphism of
/// `pq`.
pub fn validate_endo_subset(pq: &PointedQuandle, endos: &[QuandleMap]) -> Result<()> {
    let q = pq.base();
    let mut seen = BTreeSet::new();
    for (index, m) in endos.iter().enumerate() {
        let fail = |reason: &str| Error::NotAnEndomorphism { index, reason: reason.into() };
        if m.images.len() != q.order() || m.target_order != q.order() {
            return Err(fail("wrong size"));
        }
        if !q.is_hom_into(q, &m.images) {
            return Err(fail("violates the homomorphism law"));
        }
        if let Some(b) = pq.basepoints().iter().find(|&&b| m.apply(b) != b) {
            return Err(fail(&format!("does not fix basepoint {b}")));
        }
        if !seen.insert(&m.images) {
            return Err(fail("duplicate map"));
        }
    }
    Ok(())
}

/// Builds the coloring quiver of `d` by `pq`. `endos = None` uses the full
/// pointed endomorphism set.
///
/// `weights[α][β] = |{φ ∈ S : φ ∘ α = β}|`.
pub fn build_quiver(
    d: &LinkoidDiagram,
    pq: &PointedQuandle,
    endos: Option<&[QuandleMap]>,
) -> Result<Quiver> {
    let full;
    let endos = match endos {
        Some(s) => {
            validate_endo_subset(pq, s)?;
            s
        }
        None => {
            full = enumerate_pointed_homs_capped(pq, pq, QUIVER_ENDO_ORDER_CAP)?;
            &full[..]
        }
    };
    let colorings = enumerate_colorings(d, pq)?;
    let index: BTreeMap<&[usize], usize> =
        colorings.iter().enumerate().map(|(i, c)| (&c.images[..], i)).collect();

    let mut graph = DirectedMultigraph::empty(colorings.len());
    let mut image = vec![0; d.arc_count()];
    for (src, alpha) in colorings.iter().enumerate() {
        for phi in endos {
            for (slot, &x) in image.iter_mut().zip(&alpha.images) {
                *slot = phi.apply(x);
            }
            let dst = *index.get(&image[..]).ok_or(Error::NotClosed)?;
            graph.add_arcs(src, dst, 1);
        }
    }
    Ok(Quiver { colorings, graph, endo_count: endos.len() })
}

/// `Σ_v u^{deg⁺(v)}`.
pub fn in_degree_polynomial(g: &DirectedMultigraph) -> Polynomial {
    let mut p = Polynomial::zero();
    for v in 0..g.vertex_count() {
        p.add_term(1, g.in_degree(v));
    }
    p
}

/// In-degree polynomial matrix of a 1-linkoid over all basepoint pairs of
/// `q`.
pub fn in_degree_polynomial_matrix(
    d: &LinkoidDiagram,
    q: &Quandle,
    family: Option<&EndoFamily>,
) -> Result<PolynomialMatrix> {
    require_one_open_component(d)?;
    let k = q.order();
    let mut entries = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let pq = PointedQuandle::new(q.clone(), vec![i, j])?;
            let subset = family.and_then(|f| f.get(&(i, j))).map(Vec::as_slice);
            let quiver = build_quiver(d, &pq, subset)?;
            entries.push(in_degree_polynomial(&quiver.graph));
        }
    }
    Ok(PolynomialMatrix::from_entries(k, entries))
}
