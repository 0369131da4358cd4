//! Directed multigraphs with integer arc multiplicities.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default vertex cap for [`are_isomorphic`].
pub const DEFAULT_ISO_VERTEX_CAP: usize = 12;

/// `weights[u][v]` arcs from `u` to `v`, loops included.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DirectedMultigraph {
    vertex_count: usize,
    weights: Vec<u64>,
}

impl DirectedMultigraph {
    pub fn empty(vertex_count: usize) -> Self {
        DirectedMultigraph { vertex_count, weights: vec![0; vertex_count * vertex_count] }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidArgument(alloc::format!(
                "weight row {bad} has {} entries, expected {n}",
                rows[bad].len()
            )));
        }
        Ok(DirectedMultigraph { vertex_count: n, weights: rows.into_iter().flatten().collect() })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn weight(&self, u: usize, v: usize) -> u64 {
        self.weights[u * self.vertex_count + v]
    }

    pub fn set_weight(&mut self, u: usize, v: usize, w: u64) {
        self.weights[u * self.vertex_count + v] = w;
    }

    pub fn add_arcs(&mut self, u: usize, v: usize, w: u64) {
        self.weights[u * self.vertex_count + v] += w;
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.weights.chunks(self.vertex_count.max(1)).map(<[u64]>::to_vec).take(self.vertex_count).collect()
    }

    /// Number of arcs into `v`.
    pub fn in_degree(&self, v: usize) -> u64 {
        (0..self.vertex_count).map(|u| self.weight(u, v)).sum()
    }

    pub fn out_degree(&self, u: usize) -> u64 {
        (0..self.vertex_count).map(|v| self.weight(u, v)).sum()
    }

    pub fn arc_count(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut g = Self::empty(self.vertex_count);
        for u in 0..self.vertex_count {
            for v in 0..self.vertex_count {
                g.set_weight(perm[u], perm[v], self.weight(u, v));
            }
        }
        g
    }
}

/// `K_{n,k}`: `k` arcs between every ordered pair of `n` vertices, loops
/// included.
pub fn complete_regular(n: usize, k: u64) -> DirectedMultigraph {
    DirectedMultigraph { vertex_count: n, weights: vec![k; n * n] }
}

/// The `n`-directed join of `g` to `h`: vertices of `g` first, then `h`,
/// with `n` arcs from every `g` vertex to every `h` vertex and none back.
pub fn directed_join(g: &DirectedMultigraph, h: &DirectedMultigraph, n: u64) -> DirectedMultigraph {
    let (a, b) = (g.vertex_count, h.vertex_count);
    let mut out = DirectedMultigraph::empty(a + b);
    for u in 0..a {
        for v in 0..a {
            out.set_weight(u, v, g.weight(u, v));
        }
        for v in 0..b {
            out.set_weight(u, a + v, n);
        }
    }
    for u in 0..b {
        for v in 0..b {
            out.set_weight(a + u, a + v, h.weight(u, v));
        }
    }
    out
}

/// Exact isomorphism test for small multigraphs.
pub fn are_isomorphic(g: &DirectedMultigraph, h: &DirectedMultigraph) -> Result<bool> {
    are_isomorphic_capped(g, h, DEFAULT_ISO_VERTEX_CAP)
}

pub fn are_isomorphic_capped(
    g: &DirectedMultigraph,
    h: &DirectedMultigraph,
    vertex_cap: usize,
) -> Result<bool> {
    if g.vertex_count.max(h.vertex_count) > vertex_cap {
        return Err(Error::Capacity { what: "isomorphism vertex count", limit: vertex_cap });
    }
    if g.vertex_count != h.vertex_count || g.arc_count() != h.arc_count() {
        return Ok(false);
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    let mut sorted_g = sig_g.clone();
    let mut sorted_h = sig_h.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return Ok(false);
    }
    let mut mapping = vec![usize::MAX; g.vertex_count];
    let mut used = vec![false; h.vertex_count];
    Ok(extend_mapping(g, h, &sig_g, &sig_h, 0, &mut mapping, &mut used))
}

// (in-degree, out-degree, loops)
fn signatures(g: &DirectedMultigraph) -> Vec<(u64, u64, u64)> {
    (0..g.vertex_count).map(|v| (g.in_degree(v), g.out_degree(v), g.weight(v, v))).collect()
}

fn extend_mapping(
    g: &DirectedMultigraph,
    h: &DirectedMultigraph,
    sig_g: &[(u64, u64, u64)],
    sig_h: &[(u64, u64, u64)],
    next: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if next == g.vertex_count {
        return true;
    }
    for target in 0..h.vertex_count {
        if used[target] || sig_g[next] != sig_h[target] {
            continue;
        }
        let consistent = (0..next).all(|u| {
            g.weight(u, next) == h.weight(mapping[u], target)
                && g.weight(next, u) == h.weight(target, mapping[u])
        });
        if !consistent {
            continue;
        }
        mapping[next] = target;
        used[target] = true;
        if extend_mapping(g, h, sig_g, sig_h, next + 1, mapping, used) {
            return true;
        }
        used[target] = false;
    }
    false
}
