//! Blow up a tacnode until every branch is smooth and print the tree.

use plane_curves::blowup::{resolve_tree, tree_to_dot, InfNearNode};
use plane_curves::exactfield::Field;
use plane_curves::polyring::parse_poly;
use plane_curves::Limits;

fn show(n: &InfNearNode) {
    let pad = "  ".repeat(n.depth);
    println!("{pad}r = {} over shift {}: {}", n.r, n.shift, n.local_eq);
    n.children.iter().for_each(show);
}

fn main() -> plane_curves::Result<()> {
    let f = parse_poly("y^2 - x^4", &Field::rationals())?;
    let tree = resolve_tree(&f, &Limits::default())?;
    show(&tree.root);
    println!("\n{}", tree_to_dot(&tree));
    Ok(())
}
