//! Brute-force reference implementations used by the integration tests.
//! Nothing here calls into the backtracking search.

#![allow(dead_code)]

use linkoid_quiver::{
    Crossing, DirectedMultigraph, LinkoidDiagram, OpenComponent, PointedQuandle, Quandle,
};
use rand::Rng;

/// Every assignment in `0..k` of length `len`, in lexicographic order.
pub fn all_assignments(k: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.checked_pow(len as u32).expect("assignment space too large");
    (0..total).map(move |mut code| {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = code % k;
            code /= k;
        }
        v
    })
}

/// Relation set read straight off the crossings, independent of the
/// library's relation extraction.
fn relation_triples(d: &LinkoidDiagram) -> Vec<(usize, usize, usize)> {
    d.crossings()
        .iter()
        .map(|c| match c.sign {
            linkoid_quiver::Sign::Positive => (c.under_in, c.over, c.under_out),
            linkoid_quiver::Sign::Negative => (c.under_out, c.over, c.under_in),
        })
        .collect()
}

/// Filter of all `k^m` arc assignments.
pub fn brute_force_colorings(d: &LinkoidDiagram, pq: &PointedQuandle) -> Vec<Vec<usize>> {
    let q = pq.base();
    let rels = relation_triples(d);
    let base_arcs: Vec<usize> = d.open_components().iter().flat_map(|o| [o.leg, o.head]).collect();
    all_assignments(q.order(), d.arc_count())
        .filter(|a| rels.iter().all(|&(x, y, z)| q.op(a[x], a[y]) == a[z]))
        .filter(|a| base_arcs.iter().zip(pq.basepoints()).all(|(&arc, &b)| a[arc] == b))
        .collect()
}

/// Filter of all `|Y|^|X|` set maps by the homomorphism law.
pub fn brute_force_homs(x: &Quandle, y: &Quandle) -> Vec<Vec<usize>> {
    let k = x.order();
    all_assignments(y.order(), k)
        .filter(|f| (0..k).all(|a| (0..k).all(|b| f[x.op(a, b)] == y.op(f[a], f[b]))))
        .collect()
}

/// Isomorphism by trying every permutation.
pub fn brute_force_isomorphic(g: &DirectedMultigraph, h: &DirectedMultigraph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|u| (0..n).all(|v| g.weight(u, v) == h.weight(perm[u], perm[v]))) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A random relation system on at most `max_arcs` arcs with up to two open
/// components. Planarity is not required.
pub fn random_diagram<R: Rng>(rng: &mut R, max_arcs: usize) -> LinkoidDiagram {
    let m = rng.gen_range(1..=max_arcs);
    let crossings = (0..rng.gen_range(0..=m + 1))
        .map(|_| {
            let (a, b, c) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..m));
            if rng.gen_bool(0.5) {
                Crossing::positive(a, b, c)
            } else {
                Crossing::negative(a, b, c)
            }
        })
        .collect();
    let opens = (0..rng.gen_range(0..=2))
        .map(|_| OpenComponent { leg: rng.gen_range(0..m), head: rng.gen_range(0..m) })
        .collect();
    LinkoidDiagram::new(m, crossings, opens).unwrap()
}

/// The order-4 quandle whose rows are `[0,2,0,2] [3,1,3,1] [2,0,2,0] [1,3,1,3]`.
pub fn four_element_quandle() -> Quandle {
    Quandle::from_table(vec![
        vec![0, 2, 0, 2],
        vec![3, 1, 3, 1],
        vec![2, 0, 2, 0],
        vec![1, 3, 1, 3],
    ])
    .unwrap()
}

/// Small quandles of order ≤ 4 for exhaustive checks.
pub fn small_quandles() -> Vec<Quandle> {
    let mut qs = Vec::new();
    for n in 1..=4 {
        qs.push(linkoid_quiver::dihedral(n).unwrap());
        qs.push(linkoid_quiver::trivial_quandle(n).unwrap());
    }
    qs.push(four_element_quandle());
    qs
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
