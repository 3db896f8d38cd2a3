use std::fmt::Write as _;

use super::Configuration;

/// Edges point along proximity (`q -> p` for `q` proximate to `p`). Solid
/// edges follow the parent relation, dashed edges mark the second
/// proximity of a satellite, and points of equal level share a rank.
pub(super) fn render(config: &Configuration) -> String {
    let mut out = String::from("digraph proximity {\n  rankdir=BT;\n  node [shape=circle];\n");
    for p in config.points() {
        let _ = writeln!(out, "  p{} [label=\"p{}\"];", p.id(), p.id());
    }
    let max_level = config.points().iter().map(|p| p.level()).max().unwrap_or(0);
    for level in 0..=max_level {
        let ids: Vec<String> = config
            .points()
            .iter()
            .filter(|p| p.level() == level)
            .map(|p| format!("p{}", p.id()))
            .collect();
        let _ = writeln!(out, "  {{ rank=same; {} }}", ids.join("; "));
    }
    for p in config.points() {
        if let Some(parent) = p.parent() {
            let _ = writeln!(out, "  p{} -> p{} [style=solid];", p.id(), parent);
        }
        if let Some(target) = p.satellite_target() {
            let _ = writeln!(out, "  p{} -> p{} [style=dashed];", p.id(), target);
        }
    }
    out.push_str("}\n");
    out
}
