//! Which curves satisfy the adjoint condition along a cusp and a tacnode.

use plane_curves::exactfield::Field;
use plane_curves::invariants::adjoint_check;
use plane_curves::polyring::parse_poly;
use plane_curves::Limits;

fn main() -> plane_curves::Result<()> {
    let q = Field::rationals();
    for (c, g) in [("y^2 - x^3", "x"), ("y^2 - x^3", "x - 1"), ("y^2 - x^4", "y"), ("y^2 - x^4", "x")] {
        let report = adjoint_check(&parse_poly(c, &q)?, &parse_poly(g, &q)?, &Limits::default())?;
        println!("{g:6} along {c:10}: {}", if report.adjoint { "adjoint" } else { "not adjoint" });
    }
    Ok(())
}
