//! Graphviz output for trees.

use std::fmt::Write;

use super::tree::{InfNearNode, InfNearTree, JointNode, JointTree};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn single(n: &InfNearNode, out: &mut String) {
    let label = format!("d={} r={}\\nshift {}\\n{}", n.depth, n.r, n.shift, escape(&n.local_eq.to_string()));
    writeln!(out, "  n{} [label=\"{}\"];", n.id, label).unwrap();
    for c in &n.children {
        writeln!(out, "  n{} -> n{};", n.id, c.id).unwrap();
        single(c, out);
    }
}

fn joint(n: &JointNode, out: &mut String) {
    let rs: Vec<String> = n.rs().iter().map(u32::to_string).collect();
    let label = format!("d={} r=({})\\nshift {}", n.depth, rs.join(","), n.shift);
    writeln!(out, "  n{} [label=\"{}\"];", n.id, label).unwrap();
    for c in &n.children {
        writeln!(out, "  n{} -> n{};", n.id, c.id).unwrap();
        joint(c, out);
    }
}

pub fn tree_to_dot(tree: &InfNearTree) -> String {
    let mut out = String::from("digraph resolution {\n  node [shape=box];\n");
    single(&tree.root, &mut out);
    out.push_str("}\n");
    out
}

pub fn joint_to_dot(tree: &JointTree) -> String {
    let mut out = String::from("digraph joint {\n  node [shape=box];\n");
    joint(&tree.root, &mut out);
    out.push_str("}\n");
    out
}
