//! Blow-ups of a Hirzebruch surface and the resulting intersection numbers.
//!
//! Usage: `cargo run --example lattice`

use delpezzo::lattice::{BlowUpPoint, CurveId, SurfaceModel};

fn main() -> delpezzo::Result<()> {
    let sigma = CurveId(0);
    let mut m = SurfaceModel::hirzebruch(3);
    let l = m.add_fiber("l")?;
    let e1 = m.blow_up_in_place(BlowUpPoint::NodeOf(sigma, l), None)?;
    let e2 = m.blow_up_in_place(BlowUpPoint::OnCurve(e1), None)?;
    println!("K^2 = {}", m.k_squared());
    for c in [sigma, l, e1, e2] {
        println!("{:>6}: self-intersection {}", m.name(c), m.self_intersection(c)?);
    }
    println!("sigma . e1 = {}", m.curve_intersection(sigma, e1)?);
    println!("e1 . e2 = {}", m.curve_intersection(e1, e2)?);
    Ok(())
}
