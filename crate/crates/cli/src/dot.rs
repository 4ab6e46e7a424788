use std::collections::BTreeMap;
use std::fmt::Write as _;

use whitney::Poset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram, edges from lower to upper cover, one `rank=same` group per
/// height so lower elements sit at the bottom.
pub fn hasse_diagram(poset: &Poset, name: &str) -> String {
    let mut out = format!(
        "digraph {} {{\n  rankdir=BT;\n  node [shape=circle];\n",
        quote(name)
    );
    let mut by_height: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, h) in poset.heights().into_iter().enumerate() {
        by_height.entry(h).or_default().push(i);
    }
    for members in by_height.values() {
        let nodes: Vec<String> = members.iter().map(|&i| quote(poset.name(i))).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", nodes.join("; "));
    }
    for (lower, upper) in poset.cover_names() {
        let _ = writeln!(out, "  {} -> {};", quote(lower), quote(upper));
    }
    out.push_str("}\n");
    out
}
