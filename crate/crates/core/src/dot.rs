//! Graphviz export. Vertices are named by their canonical addresses and
//! listed in address order, edges in edge-id order, so the text depends only
//! on the instance and the labeling.

use crate::labeling::EdgeLabeling;
use crate::spider::SpiderLayout;

pub fn to_dot(layout: &SpiderLayout, labeling: Option<&EdgeLabeling>) -> String {
    let mut out = format!("graph \"{}\" {{\n", layout.spider());
    for addr in layout.vertex_addresses() {
        out.push_str(&format!("  \"{addr}\";\n"));
    }
    for (id, &(u, v)) in layout.tree().edges().iter().enumerate() {
        let (a, b) = (layout.vertex_address(u), layout.vertex_address(v));
        match labeling {
            Some(l) => out.push_str(&format!("  \"{a}\" -- \"{b}\" [label={}];\n", l.label(id))),
            None => out.push_str(&format!("  \"{a}\" -- \"{b}\";\n")),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::figure2_labeling;

    #[test]
    fn exceptional_instance_graph() {
        let (layout, rule) = figure2_labeling();
        let dot = to_dot(&layout, Some(&rule.labeling));
        assert_eq!(dot.lines().filter(|l| l.ends_with("\";")).count(), 9);
        assert_eq!(dot.matches("[label=").count(), 8);
        assert!(dot.contains("\"v_l\" -- \"core/2\" [label=3];"));
        assert_eq!(dot, to_dot(&layout, Some(&rule.labeling)));
    }

    #[test]
    fn unlabeled_graph() {
        let (layout, _) = figure2_labeling();
        let dot = to_dot(&layout, None);
        assert!(!dot.contains("label="));
        assert_eq!(dot.matches(" -- ").count(), 8);
    }
}
