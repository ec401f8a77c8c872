use std::fmt::Write as _;

use crate::evolve::StatesGraph;
use crate::symbol::Alphabet;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders a states graph as a DOT digraph, nodes and edges in id order.
pub fn export_dot(graph: &StatesGraph, alphabet: &Alphabet) -> String {
    let mut out = String::from("digraph states {\n");
    for (id, s) in graph.states() {
        let _ = writeln!(
            out,
            "  n{} [label=\"{}\", layer={}];",
            id.0,
            escape(&alphabet.render(s)),
            graph.layer_of(id)
        );
    }
    for e in graph.edges() {
        let _ = writeln!(out, "  n{} -> n{};", e.from.0, e.to.0);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{evolve, EvolveOptions, MultiwaySystem};

    #[test]
    fn single_node() {
        let m = MultiwaySystem::from_strs("A", &[]);
        let dot = export_dot(&evolve(&m, EvolveOptions::new(1)), &m.alphabet);
        assert_eq!(dot, "digraph states {\n  n0 [label=\"A\", layer=0];\n}\n");
    }

    #[test]
    fn linear_two_layers() {
        let m = MultiwaySystem::from_strs("AA", &[("A", "AB")]);
        let dot = export_dot(&evolve(&m, EvolveOptions::new(2)), &m.alphabet);
        assert_eq!(dot.matches("label=").count(), 3);
        assert_eq!(dot.matches("->").count(), 2);
    }

    #[test]
    fn quotes_escaped() {
        assert_eq!(escape("a\"b\\"), "a\\\"b\\\\");
    }
}
