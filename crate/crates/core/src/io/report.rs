use std::fmt::Write;

use serde::Serialize;

use crate::mutation::MutationGraph;

/// Pretty JSON with fields in declaration order.
pub fn emit_report<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn g_label(g: &[Vec<i64>]) -> String {
    g.iter()
        .map(|v| format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join("\\n")
}

/// Nodes are labelled by their g-vectors; tilting nodes are drawn as filled double circles.
pub fn emit_dot(graph: &MutationGraph) -> String {
    let mut out = String::from("digraph mutation {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, n) in graph.nodes.iter().enumerate() {
        let style = match n.tilting {
            Some(true) => ", shape=doublecircle, style=filled, fillcolor=\"#c6e5b3\"",
            Some(false) => ", style=dashed",
            None => "",
        };
        writeln!(out, "  n{i} [label=\"{}\"{style}];", g_label(&n.g_vectors)).unwrap();
    }
    for e in &graph.edges {
        let at: Vec<String> = e.at.iter().map(|k| (k + 1).to_string()).collect();
        writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, at.join(",")).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{path_algebra, Quiver};
    use crate::complex::ProjComplex;
    use crate::linalg::PrimeField;
    use crate::mutation::interval_enumerate;

    #[test]
    fn field_interval_dot() {
        let q = Quiver::new(1, Vec::new()).unwrap();
        let k = Arc::new(path_algebra(PrimeField::new(101).unwrap(), &q, &[], 1).unwrap());
        let g = interval_enumerate(&ProjComplex::regular(k), 100, 10).unwrap();
        let dot = emit_dot(&g);
        assert_eq!(dot.matches("label=\"(").count(), 2);
        assert!(dot.contains("n0 -> n1"));
        assert_eq!(emit_dot(&g), dot);
    }
}
