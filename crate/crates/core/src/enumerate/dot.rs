use std::fmt::Write;

use super::SemigroupDag;

impl SemigroupDag {
    /// Graphviz rendering. Node ids are canonical keys, labels read
    /// `<g1,…,gr>_p, F=f` with the node's p-system. Output is sorted and
    /// byte-stable.
    pub fn to_dot(&self) -> String {
        if self.is_empty() {
            return "digraph S {}".to_string();
        }
        let mut out = String::from("digraph S {\n");
        for node in self.nodes() {
            let gens: Vec<String> = node.psystem.iter().map(u32::to_string).collect();
            writeln!(
                out,
                "  \"{}\" [label=\"<{}>_p, F={}\"];",
                node.semigroup.canonical_key(),
                gens.join(","),
                node.frobenius
            )
            .unwrap();
        }
        for edge in self.edges() {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                edge.from.canonical_key(),
                edge.to.canonical_key(),
                edge.removed
            )
            .unwrap();
        }
        out.push('}');
        out
    }
}
