//! DOT, JSON and plain-text renderings.

use std::fmt::Write as _;

use linkoid_quiver::{Coloring, CountingMatrix, DirectedMultigraph, PolynomialMatrix};
use serde::Serialize;

/// DOT digraph with vertices `v0..v{n-1}` and one edge statement per arc.
pub fn to_dot(g: &DirectedMultigraph, labels: Option<&[String]>) -> String {
    let mut out = String::from("digraph quiver {\n");
    if let Some(labels) = labels {
        for (v, label) in labels.iter().enumerate().take(g.vertex_count()) {
            let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  v{v} [label=\"{escaped}\"];");
        }
    }
    for u in 0..g.vertex_count() {
        for v in 0..g.vertex_count() {
            for _ in 0..g.weight(u, v) {
                let _ = writeln!(out, "  v{u} -> v{v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct GraphDump {
    pub vertex_count: usize,
    pub weights: Vec<Vec<u64>>,
    pub labels: Vec<Vec<usize>>,
}

pub fn graph_json(g: &DirectedMultigraph, colorings: &[Coloring]) -> String {
    let dump = GraphDump {
        vertex_count: g.vertex_count(),
        weights: g.rows(),
        labels: colorings.iter().map(|c| c.images.clone()).collect(),
    };
    serde_json::to_string(&dump).expect("graph dump serializes")
}

pub fn colorings_json(colorings: &[Coloring]) -> String {
    let rows: Vec<&[usize]> = colorings.iter().map(|c| c.images.as_slice()).collect();
    serde_json::to_string(&rows).expect("coloring list serializes")
}

pub fn matrix_json(m: &CountingMatrix) -> String {
    serde_json::to_string(&m.rows()).expect("matrix serializes")
}

pub fn polynomial_matrix_json(m: &PolynomialMatrix) -> String {
    let rows: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    serde_json::to_string(&rows).expect("matrix serializes")
}

/// Right-aligned columns separated by two spaces.
pub fn grid(cells: &[Vec<String>]) -> String {
    let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

pub fn matrix_grid(m: &CountingMatrix) -> String {
    let cells: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    grid(&cells)
}

pub fn polynomial_matrix_grid(m: &PolynomialMatrix) -> String {
    let cells: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    grid(&cells)
}
