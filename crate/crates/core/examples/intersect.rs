//! Local intersection numbers from the joint tree, next to the resultant.

use plane_curves::exactfield::Field;
use plane_curves::invariants::intersection_multiplicity;
use plane_curves::polyring::parse_poly;
use plane_curves::Limits;

fn main() -> plane_curves::Result<()> {
    let q = Field::rationals();
    let pairs = [("y^2 - x^3", "y"), ("y^2 - x^3", "y^2 + x^3"), ("y - x^2", "y + x^2"), ("x*y + x^3", "y - x^5")];
    for (f, g) in pairs {
        let report = intersection_multiplicity(&parse_poly(f, &q)?, &parse_poly(g, &q)?, &Limits::default())?;
        println!("I({f}, {g}) = {} (resultant {})", report.noether_sum, report.oracle_value);
        for (depth, rf, rg) in &report.contributions {
            println!("    depth {depth}: {rf} * {rg}");
        }
    }
    Ok(())
}
