//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p linkoid-quiver --test acceptance -- --nocapture` to see
//! them.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use linkoid_quiver::quandle::enumerate_pointed_homs_capped;
use linkoid_quiver::torus::{
    is_prime, predicted_endos, predicted_indegree_polynomial, predicted_quiver_shape, QuiverShape,
    TorusPrediction,
};
use linkoid_quiver::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Collects failed checks for one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    checks: usize,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, id: u32, title: &str) {
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {id}: {verdict} ({} checks) {title}", self.checks);
        for f in self.failures.iter().take(10) {
            println!("    {f}");
        }
        assert!(self.failures.is_empty(), "criterion {id} failed: {:?}", &self.failures[..self.failures.len().min(10)]);
    }
}

fn z(n: usize, y1: usize, y2: usize) -> PointedQuandle {
    PointedQuandle::new(dihedral(n).unwrap(), vec![y1, y2]).unwrap()
}

fn u9_4u4() -> Polynomial {
    let mut p = Polynomial::monomial(1, 9);
    p.add_term(4, 4);
    p
}

#[test]
fn criterion_1_torus_ten_dihedral_five() {
    let mut c = Check::default();
    let start = Instant::now();
    let d = torus_linkoid(10).unwrap();
    let q = dihedral(5).unwrap();
    let pq = z(5, 0, 0);

    let m = counting_matrix(&d, &q).unwrap();
    c.expect(m == CountingMatrix::scalar(5, 5), || format!("counting matrix {:?}", m.rows()));
    let count = counting_invariant(&d, &pq).unwrap();
    c.expect(count == 5, || format!("count {count}"));

    let table: Vec<Vec<usize>> = vec![
        vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        vec![0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 0],
        vec![0, 2, 4, 1, 3, 0, 2, 4, 1, 3, 0],
        vec![0, 3, 1, 4, 2, 0, 3, 1, 4, 2, 0],
        vec![0, 4, 3, 2, 1, 0, 4, 3, 2, 1, 0],
    ];
    let colorings: Vec<_> = enumerate_colorings(&d, &pq).unwrap().into_iter().map(|c| c.images).collect();
    c.expect(colorings == table, || format!("colorings {colorings:?}"));

    let endo_table: Vec<Vec<usize>> = vec![
        vec![0, 0, 0, 0, 0],
        vec![0, 1, 2, 3, 4],
        vec![0, 2, 4, 1, 3],
        vec![0, 3, 1, 4, 2],
        vec![0, 4, 3, 2, 1],
    ];
    let endos: Vec<_> = enumerate_pointed_homs(&pq, &pq).unwrap().into_iter().map(|m| m.images).collect();
    c.expect(endos == endo_table, || format!("endomorphisms {endos:?}"));

    let quiver = build_quiver(&d, &pq, None).unwrap();
    let poly = in_degree_polynomial(&quiver.graph);
    c.expect(poly == u9_4u4(), || format!("polynomial {poly}"));
    c.expect(poly.to_string() == "u^9 + 4u^4", || format!("polynomial text {poly}"));

    let pm = in_degree_polynomial_matrix(&d, &q, None).unwrap();
    c.expect(pm == PolynomialMatrix::scalar(5, &u9_4u4()), || "polynomial matrix".into());

    let join = directed_join(&complete_regular(4, 1), &complete_regular(1, 5), 1);
    c.expect(are_isomorphic(&quiver.graph, &join).unwrap(), || "quiver not ≅ K_{4,1} ▽_1 K_{1,5}".into());

    let elapsed = start.elapsed();
    c.expect(elapsed < Duration::from_secs(1), || format!("runtime {elapsed:?}"));
    c.finish(1, "T(10,2) with Z_5 reproduces counts, tables, polynomial and quiver");
}

#[test]
fn criterion_2_counting_law_sweep() {
    let mut c = Check::default();
    for p in 1..=12 {
        let d = torus_linkoid(p).unwrap();
        for n in 1..=12 {
            let g = gcd(p, n) as u64;
            for y1 in 0..n {
                for y2 in 0..n {
                    let got = counting_invariant(&d, &z(n, y1, y2)).unwrap();
                    let want = if y1 == y2 { g } else { 0 };
                    c.expect(got == want, || format!("p={p} n={n} ({y1},{y2}): {got} != {want}"));
                }
            }
            let m = counting_matrix(&d, &dihedral(n).unwrap()).unwrap();
            c.expect(m == CountingMatrix::scalar(n, g), || format!("p={p} n={n} matrix"));
        }
    }
    c.finish(2, "count = gcd(p,n) on equal basepoints, 0 otherwise, matrix = gcd·I");
}

#[test]
fn criterion_3_endomorphism_cardinalities() {
    let mut c = Check::default();
    for n in 1..=8 {
        let q = dihedral(n).unwrap();
        let all = enumerate_quandle_homs(&q, &q).unwrap();
        c.expect(all.len() == n * n, || format!("|End(Z_{n})| = {}", all.len()));
        for y in 0..n {
            let pq = z(n, y, y);
            let pointed = enumerate_pointed_homs(&pq, &pq).unwrap();
            c.expect(pointed.len() == n, || format!("|End(Z_{n},{y},{y})| = {}", pointed.len()));
            // φ_k is the endomorphism with φ(y+1) = k; check φ_k(y+i) = ik − (i−1)y
            for phi in &pointed {
                let k = phi.apply((y + 1) % n) as i64;
                for i in 0..n as i64 {
                    let want = (i * k - (i - 1) * y as i64).rem_euclid(n as i64) as usize;
                    let got = phi.apply((y + i as usize) % n);
                    c.expect(got == want, || format!("n={n} y={y} k={k} i={i}: {got} != {want}"));
                }
            }
            let engine: BTreeSet<_> = pointed.into_iter().map(|m| m.images).collect();
            let closed: BTreeSet<_> = predicted_endos(n, y).into_iter().collect();
            c.expect(engine == closed, || format!("n={n} y={y} closed form set differs"));
        }
    }
    c.finish(3, "|End(Z_n)| = n², |End(Z_n,y,y)| = n, φ_k(y+i) = ik − (i−1)y");
}

#[test]
fn criterion_4_quiver_structure() {
    let mut c = Check::default();
    let mut divergences = Vec::new();
    for p in 1..=12 {
        let d = torus_linkoid(p).unwrap();
        for n in 1..=12 {
            let t = TorusPrediction::new(p, n, 0);
            if t.c != 1 && !is_prime(t.c) {
                continue;
            }
            for y in 0..n {
                let quiver = build_quiver(&d, &z(n, y, y), None).unwrap();
                let expected = if t.c == 1 {
                    complete_regular(1, n as u64)
                } else {
                    directed_join(&complete_regular(t.c - 1, t.d as u64), &complete_regular(1, n as u64), t.d as u64)
                };
                c.expect(are_isomorphic(&quiver.graph, &expected).unwrap(), || {
                    format!("p={p} n={n} y={y}: quiver shape")
                });
                c.expect(
                    predicted_quiver_shape(p, n).realize().as_ref() == Some(&expected),
                    || format!("p={p} n={n}: shape descriptor"),
                );
                let poly = in_degree_polynomial(&quiver.graph);
                let want = if t.c == 1 {
                    Polynomial::monomial(1, n as u64)
                } else {
                    let mut w = Polynomial::monomial(1, (n + (t.c - 1) * t.d) as u64);
                    w.add_term((t.c - 1) as u64, ((t.c - 1) * t.d) as u64);
                    w
                };
                c.expect(poly == want, || format!("p={p} n={n} y={y}: {poly} != {want}"));
                c.expect(predicted_indegree_polynomial(p, n).as_ref() == Some(&want), || {
                    format!("p={p} n={n}: oracle polynomial")
                });
                if t.c == 1 && n != 1 && y == 0 {
                    // a reading of the c = 1 diagonal as u^c would give u^1 here
                    divergences.push(format!("p={p} n={n}: engine {poly}, printed form u^1"));
                }
            }
        }
    }
    c.expect(predicted_quiver_shape(8, 4) == QuiverShape::Unspecified, || "composite gcd".into());
    println!("    c = 1 polynomial is u^n, not u^c ({} instances logged)", divergences.len());
    for line in divergences.iter().take(3) {
        println!("    {line}");
    }
    c.finish(4, "quiver ≅ K_{1,n} (c = 1) or K_{c−1,d} ▽_d K_{1,n} (c prime), in-degree polynomials");
}

#[test]
fn criterion_5_structural_properties() {
    let mut c = Check::default();
    for n in 1..=20 {
        c.expect(validate_quandle(&dihedral(n).unwrap().rows()).unwrap().is_valid(), || format!("dihedral({n})"));
    }
    c.expect(validate_quandle(&four_element_quandle().rows()).unwrap().is_valid(), || "4-element table".into());

    let base = dihedral(5).unwrap().rows();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut rejected = 0;
    for _ in 0..100 {
        let mut t = base.clone();
        let (x, y) = (rng.gen_range(0..5), rng.gen_range(0..5));
        let v = (t[x][y] + rng.gen_range(1..5)) % 5;
        t[x][y] = v;
        let report = validate_quandle(&t).unwrap();
        if report.is_valid() {
            c.expect(Quandle::from_table(t.clone()).is_ok(), || format!("accepted mutant {t:?}"));
        } else {
            rejected += 1;
        }
    }
    c.expect(rejected >= 95, || format!("only {rejected}/100 mutants rejected"));

    for p in 1..=12 {
        let d = torus_linkoid(p).unwrap();
        for n in 1..=12 {
            for y in 0..n {
                let pq = z(n, y, y);
                let quiver = build_quiver(&d, &pq, None).unwrap();
                let g = &quiver.graph;
                let s = quiver.endo_count as u64;
                let v = g.vertex_count() as u64;
                c.expect((0..g.vertex_count()).all(|a| g.out_degree(a) == s), || format!("p={p} n={n} y={y}: out-degree"));
                let indeg: u64 = (0..g.vertex_count()).map(|b| g.in_degree(b)).sum();
                c.expect(indeg == s * v, || format!("p={p} n={n} y={y}: handshake"));
                let verts: BTreeSet<_> = quiver.colorings.iter().map(|a| a.images.clone()).collect();
                let endos = enumerate_pointed_homs_capped(&pq, &pq, 16).unwrap();
                let closed = endos.iter().all(|phi| {
                    quiver.colorings.iter().all(|a| verts.contains(&a.images.iter().map(|&x| phi.apply(x)).collect::<Vec<_>>()))
                });
                c.expect(closed, || format!("p={p} n={n} y={y}: closure"));
            }
        }
    }
    c.finish(5, "axiom validation, mutation rejection, degree laws and closure on every quiver");
}

#[test]
fn criterion_6_backtracking_equals_brute_force() {
    let mut c = Check::default();
    let qs = small_quandles();
    let mut diagrams: Vec<LinkoidDiagram> = (1..=5).map(|p| torus_linkoid(p).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    diagrams.extend((0..20).map(|_| random_diagram(&mut rng, 6)));
    for (idx, d) in diagrams.iter().enumerate() {
        for q in &qs {
            for base in all_assignments(q.order(), d.basepoint_arity()) {
                let pq = PointedQuandle::new(q.clone(), base.clone()).unwrap();
                let fast: Vec<_> = enumerate_colorings(d, &pq).unwrap().into_iter().map(|c| c.images).collect();
                let slow = brute_force_colorings(d, &pq);
                c.expect(fast == slow, || format!("diagram {idx}, order {}, base {base:?}", q.order()));
            }
        }
    }
    c.finish(6, "backtracking = filter of all k^m assignments (≤ 6 arcs, order ≤ 4)");
}

#[test]
fn criterion_7_r1_invariance() {
    let mut c = Check::default();
    for p in 1..=6 {
        let d = torus_linkoid(p).unwrap();
        for n in 1..=6 {
            let q = dihedral(n).unwrap();
            let matrix = counting_matrix(&d, &q).unwrap();
            let pmatrix = in_degree_polynomial_matrix(&d, &q, None).unwrap();
            let quivers: Vec<_> = (0..n).map(|y| build_quiver(&d, &z(n, y, y), None).unwrap()).collect();
            for arc in 0..d.arc_count() {
                for ch in [Chirality::OverFirst, Chirality::UnderFirst] {
                    let k = add_r1_kink(&d, arc, ch).unwrap();
                    let tag = || format!("p={p} n={n} arc={arc} {ch:?}");
                    c.expect(counting_matrix(&k, &q).unwrap() == matrix, || format!("{} matrix", tag()));
                    c.expect(in_degree_polynomial_matrix(&k, &q, None).unwrap() == pmatrix, || format!("{} poly matrix", tag()));
                    for (y, before) in quivers.iter().enumerate() {
                        let pq = z(n, y, y);
                        let after = build_quiver(&k, &pq, None).unwrap();
                        c.expect(counting_invariant(&k, &pq).unwrap() == before.colorings.len() as u64, || format!("{} count y={y}", tag()));
                        c.expect(
                            in_degree_polynomial(&after.graph) == in_degree_polynomial(&before.graph),
                            || format!("{} polynomial y={y}", tag()),
                        );
                        c.expect(are_isomorphic(&after.graph, &before.graph).unwrap(), || format!("{} quiver y={y}", tag()));
                    }
                }
            }
        }
    }
    c.finish(7, "counts, matrices, polynomials and quivers unchanged by R1 kinks");
}
