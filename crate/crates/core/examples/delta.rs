//! Multiplicity sequences and delta invariants of a few singularities.

use plane_curves::blowup::resolve_tree;
use plane_curves::exactfield::Field;
use plane_curves::invariants::delta_invariant;
use plane_curves::polyring::parse_poly;
use plane_curves::Limits;

fn main() -> plane_curves::Result<()> {
    let q = Field::rationals();
    for text in ["y^2 - x^3", "y^2 - x^4", "y^3 - x^5", "y^4 - x^6", "y^2 + 2x^2*y + x^4 + x^7"] {
        let report = delta_invariant(&resolve_tree(&parse_poly(text, &q)?, &Limits::default())?)?;
        let seq: Vec<u32> = report.multiplicity_sequence.iter().map(|&(_, r)| r).collect();
        println!("{text:28} sequence {seq:?}, delta {}, conductor degree {}", report.delta, report.conductor_degree);
    }
    Ok(())
}
