//! Intersection numbers of projective curves add up to the product of degrees.

use plane_curves::exactfield::Field;
use plane_curves::noether::bezout_check;
use plane_curves::polyring::parse_poly;
use plane_curves::Limits;

fn main() -> plane_curves::Result<()> {
    let cases = [
        (Field::rationals(), "Y^2*Z - X^3", "Y^2*Z + X^3"),
        (Field::rationals(), "Y^2*Z - X^2*(X + Z)", "Y^2*Z - X^3"),
        (Field::prime(7)?, "X^5 + Y^5 + Z^5", "X*Y*Z"),
    ];
    for (k, f, g) in cases {
        let report = bezout_check(&parse_poly(f, &k)?, &parse_poly(g, &k)?, &Limits::default())?;
        println!("{f} and {g} over {k}: {} = {}", report.total, report.expected);
        for p in &report.points {
            println!("    {} ({:?} chart): {}", p.point, p.chart, p.report.noether_sum);
        }
    }
    Ok(())
}
