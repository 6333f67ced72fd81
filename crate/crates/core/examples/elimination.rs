//! Eliminates a point of contact order 2 and multiplicity 3 on a section and
//! prints the transformed divisor `E^{Δ,s}`.
//!
//! Usage: `cargo run --example elimination`

use delpezzo::elimination::{eliminate, transform, LocalDatum, Subscheme};
use delpezzo::lattice::{CurveId, Divisor, SurfaceModel};

fn main() -> delpezzo::Result<()> {
    let sigma = CurveId(0);
    let model = SurfaceModel::hirzebruch(4);
    let delta = Subscheme::new(vec![LocalDatum::on_curve(sigma, 2, 3)]);
    let res = eliminate(&model, &delta)?;
    let e = transform(&Divisor::from_terms([(sigma, 3)]), &res, 2);
    for (c, k) in e.terms() {
        println!("{:>10}: coefficient {k}, self-intersection {}", res.model.name(c), res.model.self_intersection(c)?);
    }
    for &g in &res.chains[0] {
        if e.coeff(g) == 0 {
            println!("{:>10}: coefficient 0, self-intersection {}", res.model.name(g), res.model.self_intersection(g)?);
        }
    }
    Ok(())
}
