//! Factor over prime fields, and extend one until tangents split.

use plane_curves::blowup::{blow_up_chart, exceptional_points};
use plane_curves::exactfield::{splitting_field, uni_factor, Field, UniPoly};
use plane_curves::polyring::parse_poly;
use plane_curves::Limits;

fn main() -> plane_curves::Result<()> {
    let f5 = Field::prime(5)?;
    let p = UniPoly::from_ints(&f5, &[1, 0, 0, 0, 1]);
    let fac = uni_factor(&p)?;
    println!("t^4 + 1 over {f5}: {} factors", fac.factors.len());

    let f3 = Field::prime(3)?;
    let k = splitting_field(&f3, &[UniPoly::from_ints(&f3, &[1, 0, 1])], 8, 1)?;
    println!("t^2 + 1 splits over {k}");

    let node = parse_poly("y^2 + x^2 + x^3", &f3)?;
    for (a, m) in exceptional_points(&blow_up_chart(&node)?, &Limits::default())? {
        println!("tangent slope {a} (multiplicity {m}) in {}", a.field());
    }
    Ok(())
}
