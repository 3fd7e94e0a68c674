//! Check the multiplicity condition, then solve H = A*F + B*G.

use plane_curves::exactfield::Field;
use plane_curves::noether::{certify, verify_certificate, CertStatus};
use plane_curves::polyring::parse_poly;
use plane_curves::Limits;

fn main() -> plane_curves::Result<()> {
    let q = Field::rationals();
    let triples = [
        ("Y*Z - X^2", "Y*Z + X^2", "Y*Z"),
        ("Y^2*Z - X^3", "Y", "Y^2*Z + X^2*Y"),
        ("X", "Y", "Z"),
        ("Y*Z - X^2", "Y", "X^2 + Y^2"),
    ];
    for (f, g, h) in triples {
        let (f, g, h) = (parse_poly(f, &q)?, parse_poly(g, &q)?, parse_poly(h, &q)?);
        let cert = certify(&f, &g, &h, &Limits::default())?;
        let held = cert.condition.as_ref().is_some_and(|c| c.passed);
        match &cert.status {
            CertStatus::Solved => {
                let a = cert.a.clone().map_or("0".into(), |a| a.to_string());
                let b = cert.b.clone().map_or("0".into(), |b| b.to_string());
                println!("{h} = ({a})*({f}) + ({b})*({g})  condition held: {held}, verified: {}", verify_certificate(&f, &g, &h, &cert));
            }
            other => println!("{h} against {f}, {g}: {other:?}"),
        }
    }
    Ok(())
}
