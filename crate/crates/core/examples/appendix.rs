//! Straighten the tangent of y^2 + 2x^2y + x^4 + x^7 one blow-up at a time.

use plane_curves::blowup::appendix_sequence;
use plane_curves::exactfield::Field;
use plane_curves::polyring::parse_poly;

fn main() -> plane_curves::Result<()> {
    let f = parse_poly("y^2 + 2x^2*y + x^4 + x^7", &Field::rationals())?;
    let seq = appendix_sequence(&f, 4)?;
    for stage in &seq.stages {
        let a = stage.a.as_ref().map_or("-".to_string(), |a| a.to_string());
        println!("{}  {a:>3}  {}", stage.index, stage.poly);
    }
    println!("phi = {}", seq.phi().display_in("x"));
    println!("{:?}", seq.outcome);
    Ok(())
}
