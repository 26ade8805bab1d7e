//! Graphviz export: positive edges solid, negative edges dashed red.

use std::fmt::Write as _;

use negset::{EdgeSet, SignedGraph};

/// What to draw on top of the signs.
#[derive(Clone, Debug, Default)]
pub enum Annotations {
    #[default]
    None,
    /// One edge set, drawn thick and blue.
    Set(EdgeSet),
    /// Disjoint edge sets, one color each.
    Family(Vec<EdgeSet>),
}

/// Hue spread evenly over `k` members, staying clear of pure red.
fn member_color(i: usize, k: usize) -> String {
    let hue = 0.08 + 0.84 * i as f64 / k.max(1) as f64;
    format!("{hue:.3} 0.850 0.800")
}

pub fn export_dot(g: &SignedGraph, annotations: &Annotations) -> String {
    let mut s = String::from("graph signed {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(s, "  {v};");
    }
    for (e, sign) in g.edges() {
        let mut attrs = vec![if sign.is_negative() { "style=dashed" } else { "style=solid" }.to_string()];
        let highlight = match annotations {
            Annotations::None => None,
            Annotations::Set(set) => set.contains(e).then(|| "blue".to_string()),
            Annotations::Family(family) => family.iter().position(|m| m.contains(e)).map(|i| member_color(i, family.len())),
        };
        match highlight {
            Some(color) => {
                attrs.push(format!("color=\"{color}\""));
                attrs.push("penwidth=3".into());
            }
            None if sign.is_negative() => attrs.push("color=red".into()),
            None => {}
        }
        let _ = writeln!(s, "  {} -- {} [{}];", e.u(), e.v(), attrs.join(", "));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use negset::Sign;

    #[test]
    fn empty_graph_is_valid_dot() {
        let g = SignedGraph::new(0, std::iter::empty::<(usize, usize, Sign)>()).unwrap();
        assert_eq!(export_dot(&g, &Annotations::None), "graph signed {\n  node [shape=circle];\n}\n");
    }

    #[test]
    fn one_dashed_edge() {
        let g = SignedGraph::new(3, [(0, 1, Sign::Negative), (0, 2, Sign::Positive), (1, 2, Sign::Positive)]).unwrap();
        let dot = export_dot(&g, &Annotations::None);
        assert_eq!(dot.matches("dashed").count(), 1);
        assert!(dot.contains("0 -- 1 [style=dashed, color=red];"));
        let set = EdgeSet::new(&g, [(1, 2)]).unwrap();
        assert!(export_dot(&g, &Annotations::Set(set)).contains("1 -- 2 [style=solid, color=\"blue\", penwidth=3];"));
    }
}
