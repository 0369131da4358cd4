//! Pointed quandle colorings of linkoid diagrams.
//!
//! The search seeds the leg and head arcs from the basepoints, then
//! alternates constraint propagation with branching on the lowest-index
//! unassigned arc. A relation `a ▷ b = c` propagates when `a` and `b` are
//! known (forward) or when `b` and `c` are known (left division). Knowing
//! only `a` and `c` does not determine `b`, so that case waits for a branch.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linkoid::{crossing_relations, LinkoidDiagram, Relation};
use crate::quandle::{PointedQuandle, Quandle};

/// Default bound on the number of branch nodes visited by one search.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// An arc-coloring: `images[arc]` is the quandle element on that arc.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub images: Vec<usize>,
}

impl Coloring {
    pub fn new(images: Vec<usize>) -> Self {
        Coloring { images }
    }

    /// True if the assignment satisfies every crossing relation and the
    /// basepoint constraints of `pq`.
    pub fn is_valid_for(&self, d: &LinkoidDiagram, pq: &PointedQuandle) -> bool {
        let q = pq.base();
        self.images.len() == d.arc_count()
            && self.images.iter().all(|&v| v < q.order())
            && crossing_relations(d)
                .iter()
                .all(|r| q.op(self.images[r.a], self.images[r.b]) == self.images[r.c])
            && d.basepoint_arcs().zip(pq.basepoints()).all(|(arc, &b)| self.images[arc] == b)
    }
}

/// Entry `(i, j)` counts the colorings with basepoints `(x_i, x_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountingMatrix {
    order: usize,
    entries: Vec<u64>,
}

impl CountingMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.order.max(1)).map(<[u64]>::to_vec).collect()
    }

    /// `c · I_k`.
    pub fn scalar(order: usize, c: u64) -> Self {
        let mut entries = vec![0; order * order];
        for i in 0..order {
            entries[i * order + i] = c;
        }
        CountingMatrix { order, entries }
    }
}

/// Search tuning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { node_budget: DEFAULT_NODE_BUDGET }
    }
}

fn check_arity(d: &LinkoidDiagram, pq: &PointedQuandle) -> Result<()> {
    if pq.basepoints().len() != d.basepoint_arity() {
        return Err(Error::ArityMismatch {
            expected: d.basepoint_arity(),
            found: pq.basepoints().len(),
        });
    }
    Ok(())
}

/// All colorings of `d` by `pq`, sorted lexicographically.
pub fn enumerate_colorings(d: &LinkoidDiagram, pq: &PointedQuandle) -> Result<Vec<Coloring>> {
    enumerate_colorings_with(d, pq, SearchLimits::default())
}

pub fn enumerate_colorings_with(
    d: &LinkoidDiagram,
    pq: &PointedQuandle,
    limits: SearchLimits,
) -> Result<Vec<Coloring>> {
    check_arity(d, pq)?;
    let mut search = Search::new(d, pq.base(), limits);
    let mut state = vec![None; d.arc_count()];
    let mut seeded = Vec::new();
    for (arc, &b) in d.basepoint_arcs().zip(pq.basepoints()) {
        match state[arc] {
            Some(prev) if prev != b => return Ok(Vec::new()),
            Some(_) => {}
            None => {
                state[arc] = Some(b);
                seeded.push(arc);
            }
        }
    }
    let mut out = Vec::new();
    if search.propagate(&mut state, seeded) {
        search.branch(state, &mut out)?;
    }
    out.sort_unstable();
    Ok(out)
}

/// `|hom(P(L), 𝒳)|`.
pub fn counting_invariant(d: &LinkoidDiagram, pq: &PointedQuandle) -> Result<u64> {
    Ok(enumerate_colorings(d, pq)?.len() as u64)
}

/// Counting matrix of a 1-linkoid over every basepoint pair of `q`.
pub fn counting_matrix(d: &LinkoidDiagram, q: &Quandle) -> Result<CountingMatrix> {
    require_one_open_component(d)?;
    let k = q.order();
    let mut entries = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let pq = PointedQuandle::new(q.clone(), vec![i, j])?;
            entries.push(counting_invariant(d, &pq)?);
        }
    }
    Ok(CountingMatrix { order: k, entries })
}

pub(crate) fn require_one_open_component(d: &LinkoidDiagram) -> Result<()> {
    match d.open_components().len() {
        1 => Ok(()),
        n => Err(Error::InvalidArgument(alloc::format!(
            "matrix invariants need exactly one open component, diagram has {n}"
        ))),
    }
}

struct Search<'a> {
    quandle: &'a Quandle,
    relations: Vec<Relation>,
    incident: Vec<Vec<usize>>,
    budget: u64,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(d: &LinkoidDiagram, quandle: &'a Quandle, limits: SearchLimits) -> Self {
        let relations = crossing_relations(d);
        let mut incident = vec![Vec::new(); d.arc_count()];
        for (idx, r) in relations.iter().enumerate() {
            for arc in [r.a, r.b, r.c] {
                if incident[arc].last() != Some(&idx) {
                    incident[arc].push(idx);
                }
            }
        }
        Search { quandle, relations, incident, budget: limits.node_budget, nodes: 0 }
    }

    /// Runs propagation to a fixpoint starting from the relations touching
    /// `changed`. Returns false on contradiction.
    /// Every relation is re-examined when any of its arcs is assigned, so
    /// it is fully checked once its last arc receives a value.
    fn propagate(&self, state: &mut [Option<usize>], changed: Vec<usize>) -> bool {
        let mut queue: Vec<usize> =
            changed.iter().flat_map(|&arc| self.incident[arc].iter().copied()).collect();
        while let Some(idx) = queue.pop() {
            let r = self.relations[idx];
            let (a, b, c) = (state[r.a], state[r.b], state[r.c]);
            let assigned = match (a, b, c) {
                (Some(a), Some(b), Some(c)) => {
                    if self.quandle.op(a, b) != c {
                        return false;
                    }
                    continue;
                }
                (Some(a), Some(b), None) => (r.c, self.quandle.op(a, b)),
                (None, Some(b), Some(c)) => (r.a, self.quandle.left_divide(c, b)),
                _ => continue,
            };
            let (arc, value) = assigned;
            state[arc] = Some(value);
            queue.extend(self.incident[arc].iter().copied());
        }
        true
    }

    fn branch(&mut self, state: Vec<Option<usize>>, out: &mut Vec<Coloring>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Capacity { what: "coloring search nodes", limit: self.budget as usize });
        }
        let Some(arc) = state.iter().position(Option::is_none) else {
            out.push(Coloring::new(state.into_iter().map(|v| v.unwrap_or_default()).collect()));
            return Ok(());
        };
        for value in 0..self.quandle.order() {
            let mut next = state.clone();
            next[arc] = Some(value);
            if self.propagate(&mut next, vec![arc]) {
                self.branch(next, out)?;
            }
        }
        Ok(())
    }
}
