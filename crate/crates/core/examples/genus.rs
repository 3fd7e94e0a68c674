//! Genus of plane cubics and a quartic, over Q and over F_7.

use plane_curves::exactfield::Field;
use plane_curves::invariants::GenusOptions;
use plane_curves::noether::curve_genus;
use plane_curves::polyring::parse_poly;

fn main() -> plane_curves::Result<()> {
    let curves = [
        "Y^2*Z - X^3 - X*Z^2",
        "Y^2*Z - X^2*(X + Z)",
        "Y^2*Z - X^3",
        "Y^2*Z^2 - X^4 - X*Z^3",
    ];
    for field in [Field::rationals(), Field::prime(7)?] {
        println!("over {field}");
        for text in curves {
            match curve_genus(&parse_poly(text, &field)?, &GenusOptions::default()) {
                Ok(r) => println!("  {text:24} degree {} genus {} (delta {})", r.degree, r.genus, r.total_delta),
                Err(e) => println!("  {text:24} {e}"),
            }
        }
    }
    Ok(())
}
