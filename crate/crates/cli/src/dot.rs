use wfu_core::{Color, RowWord, TriGraph};

/// Edge attributes per color: azure solid, black dotted, crimson dashed.
pub fn edge_style(color: Color) -> &'static str {
    match color {
        Color::A => "color=\"#1E90FF\", style=solid",
        Color::B => "color=\"#000000\", style=dotted",
        Color::C => "color=\"#DC143C\", style=dashed",
    }
}

pub fn render_dot<W: RowWord>(g: &TriGraph<W>, name: &str) -> String {
    let mut out = format!("digraph \"{}\" {{\n", name.replace('"', "\\\""));
    out.push_str("  node [shape=circle];\n");
    for x in 0..g.n() {
        out.push_str(&format!("  {x};\n"));
    }
    for (color, u, v) in g.edges() {
        out.push_str(&format!(
            "  {u} -> {v} [label=\"{color}\", {}];\n",
            edge_style(color)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use wfu_core::fixtures;

    #[test]
    fn double_loop_dot() {
        let dot = render_dot(&fixtures::double_loop::<u8>(), "G2");
        assert!(dot.starts_with("digraph \"G2\" {\n"));
        assert!(dot.contains("  1 -> 2 [label=\"A\", color=\"#1E90FF\", style=solid];\n"));
        assert!(dot.contains("  2 -> 0 [label=\"B\", color=\"#000000\", style=dotted];\n"));
        assert!(dot.contains("  0 -> 2 [label=\"C\", color=\"#DC143C\", style=dashed];\n"));
        assert_eq!(dot.matches("->").count(), 4);
    }
}
