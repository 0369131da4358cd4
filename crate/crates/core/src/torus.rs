//! Closed-form predictions for the T̃(p,2) linkoids colored by dihedral
//! quandles, and a comparison against the search engine.
//!
//! With `c = gcd(p, n)` and `d = n / c`, the colorings by `(ℤ_n, y, y)` are
//! `α_k(x_i) = y + L(i−1)·k·d mod n` for `k = 0..c`, where `L` reduces
//! modulo `p`. The pointed endomorphisms are `φ_k(y+i) = i·k − (i−1)·y`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::coloring::{counting_matrix, enumerate_colorings, CountingMatrix};
use crate::error::Result;
use crate::graph::{are_isomorphic, complete_regular, directed_join, DirectedMultigraph};
use crate::linkoid::torus_linkoid;
use crate::polynomial::Polynomial;
use crate::quandle::{dihedral, enumerate_pointed_homs_capped, PointedQuandle};
use crate::quiver::{build_quiver, in_degree_polynomial};

/// Parameters of one T̃(p,2) / `(ℤ_n, y, y)` instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusPrediction {
    pub p: usize,
    pub n: usize,
    pub y: usize,
    pub c: usize,
    pub d: usize,
}

impl TorusPrediction {
    pub fn new(p: usize, n: usize, y: usize) -> Self {
        assert!(p >= 1 && n >= 1, "p and n must be positive");
        let c = p.gcd(&n);
        TorusPrediction { p, n, y: y % n, c, d: n / c }
    }

    /// Least nonnegative residue modulo `p`.
    pub fn least_residue(&self, x: usize) -> usize {
        x % self.p
    }

    pub fn colorings(&self) -> Vec<Vec<usize>> {
        (0..self.c)
            .map(|k| {
                (0..=self.p).map(|i| (self.y + self.least_residue(i) * k * self.d) % self.n).collect()
            })
            .collect()
    }
}

/// `gcd(p, n)` when `y1 ≡ y2 mod n`, otherwise 0.
pub fn predicted_count(p: usize, n: usize, y1: usize, y2: usize) -> usize {
    if y1 % n == y2 % n {
        p.gcd(&n)
    } else {
        0
    }
}

/// `α_0, …, α_{c−1}` as arc-color arrays of length `p + 1`.
pub fn predicted_colorings(p: usize, n: usize, y: usize) -> Vec<Vec<usize>> {
    TorusPrediction::new(p, n, y).colorings()
}

/// `φ_0, …, φ_{n−1}` as image arrays indexed by element.
pub fn predicted_endos(n: usize, y: usize) -> Vec<Vec<usize>> {
    let (ni, yi) = (n as i64, (y % n) as i64);
    (0..ni)
        .map(|k| {
            let mut images = vec![0; n];
            for i in 0..ni {
                images[((yi + i) % ni) as usize] = (i * k - (i - 1) * yi).rem_euclid(ni) as usize;
            }
            images
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuiverShape {
    /// `K_{1,n}`: one vertex with `n` loops.
    K1n { n: usize },
    /// `K_{c−1,d} ▽_d K_{1,n}` for prime `c`.
    JoinPrimeC { c: usize, d: usize, n: usize },
    /// Composite gcd; no closed form.
    Unspecified,
}

impl QuiverShape {
    pub fn realize(&self) -> Option<DirectedMultigraph> {
        match *self {
            QuiverShape::K1n { n } => Some(complete_regular(1, n as u64)),
            QuiverShape::JoinPrimeC { c, d, n } => Some(directed_join(
                &complete_regular(c - 1, d as u64),
                &complete_regular(1, n as u64),
                d as u64,
            )),
            QuiverShape::Unspecified => None,
        }
    }
}

pub fn is_prime(m: usize) -> bool {
    m >= 2 && (2..).take_while(|f| f * f <= m).all(|f| !m.is_multiple_of(f))
}

pub fn predicted_quiver_shape(p: usize, n: usize) -> QuiverShape {
    let t = TorusPrediction::new(p, n, 0);
    if t.c == 1 {
        QuiverShape::K1n { n }
    } else if is_prime(t.c) {
        QuiverShape::JoinPrimeC { c: t.c, d: t.d, n }
    } else {
        QuiverShape::Unspecified
    }
}

/// `u^{n+(c−1)d} + (c−1)·u^{(c−1)d}` for prime `c`, `u^n` for `c = 1`,
/// `None` for composite `c`.
pub fn predicted_indegree_polynomial(p: usize, n: usize) -> Option<Polynomial> {
    let t = TorusPrediction::new(p, n, 0);
    let (n64, c, d) = (n as u64, t.c as u64, t.d as u64);
    if t.c == 1 {
        Some(Polynomial::monomial(1, n64))
    } else if is_prime(t.c) {
        let mut poly = Polynomial::monomial(1, n64 + (c - 1) * d);
        poly.add_term(c - 1, (c - 1) * d);
        Some(poly)
    } else {
        None
    }
}

/// Result of comparing one prediction against the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison<T> {
    pub predicted: Option<T>,
    pub engine: T,
}

impl<T: PartialEq> Comparison<T> {
    /// Agreement; unspecified predictions never disagree.
    pub fn agrees(&self) -> bool {
        self.predicted.as_ref().is_none_or(|p| *p == self.engine)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub prediction: TorusPrediction,
    pub count: Comparison<usize>,
    /// Off-basepoint count at `(y, y+1)`; only present for `n ≥ 2`.
    pub mismatched_count: Option<Comparison<usize>>,
    pub colorings: Comparison<Vec<Vec<usize>>>,
    pub endos: Comparison<Vec<Vec<usize>>>,
    pub shape: QuiverShape,
    /// `None` when the shape is unspecified or the quiver is above the
    /// isomorphism cap.
    pub shape_isomorphic: Option<bool>,
    pub polynomial: Comparison<Polynomial>,
    pub counting_matrix: Comparison<CountingMatrix>,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.count.agrees()
            && self.mismatched_count.as_ref().is_none_or(Comparison::agrees)
            && self.colorings.agrees()
            && self.endos.agrees()
            && self.shape_isomorphic != Some(false)
            && self.polynomial.agrees()
            && self.counting_matrix.agrees()
    }
}

/// Runs the engine on T̃(p,2) with `ℤ_n` and compares every invariant with
/// its closed form. Coloring and endomorphism lists are compared as sets.
pub fn compare_with_engine(p: usize, n: usize, y: usize) -> Result<OracleReport> {
    let t = TorusPrediction::new(p, n, y);
    let d = torus_linkoid(p)?;
    let q = dihedral(n)?;
    let pq = PointedQuandle::new(q.clone(), vec![t.y, t.y])?;

    let engine_colorings: Vec<Vec<usize>> =
        enumerate_colorings(&d, &pq)?.into_iter().map(|c| c.images).collect();
    let count = Comparison { predicted: Some(predicted_count(p, n, t.y, t.y)), engine: engine_colorings.len() };

    let mismatched_count = if n >= 2 {
        let other = (t.y + 1) % n;
        let off = PointedQuandle::new(q.clone(), vec![t.y, other])?;
        Some(Comparison {
            predicted: Some(predicted_count(p, n, t.y, other)),
            engine: enumerate_colorings(&d, &off)?.len(),
        })
    } else {
        None
    };

    let colorings = Comparison { predicted: Some(sorted(t.colorings())), engine: engine_colorings };

    let engine_endos: Vec<Vec<usize>> = enumerate_pointed_homs_capped(&pq, &pq, n.max(1))?
        .into_iter()
        .map(|m| m.images)
        .collect();
    let endos = Comparison { predicted: Some(sorted(predicted_endos(n, t.y))), engine: engine_endos };

    let quiver = build_quiver(&d, &pq, None)?;
    let shape = predicted_quiver_shape(p, n);
    let shape_isomorphic = match shape.realize() {
        Some(expected) => are_isomorphic(&quiver.graph, &expected).ok(),
        None => None,
    };
    let polynomial = Comparison {
        predicted: predicted_indegree_polynomial(p, n),
        engine: in_degree_polynomial(&quiver.graph),
    };
    let counting_matrix = Comparison {
        predicted: Some(CountingMatrix::scalar(n, t.c as u64)),
        engine: counting_matrix(&d, &q)?,
    };

    Ok(OracleReport {
        prediction: t,
        count,
        mismatched_count,
        colorings,
        endos,
        shape,
        shape_isomorphic,
        polynomial,
        counting_matrix,
    })
}

fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Distinct colorings; convenience for set comparisons.
pub fn as_set(v: &[Vec<usize>]) -> BTreeSet<&[usize]> {
    v.iter().map(Vec::as_slice).collect()
}
