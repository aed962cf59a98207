//! Polarization checks, sign perturbations and the weight-1 metric.

use hodge_cousin::exactfield::rat;
use hodge_cousin::fixtures::{fix_e, fix_h4, fix_hc, q4, q_e};
use hodge_cousin::polarization::{hermitian_from_polarization_wt1, hermitian_gram, validate_polarization};

fn main() {
    for (name, h, q) in [("FIX-E", fix_e(), q_e()), ("FIX-H4", fix_h4(), q4()), ("FIX-HC", fix_hc(), q4())] {
        println!("{name}: {:?}", validate_polarization(&h, &q).map(|()| "polarized"));
    }
    let g = hermitian_gram(&fix_e(), &q_e(), 1, 0);
    println!("i·Q(u, ū) on V^(1,0) of FIX-E: {}", g.get(0, 0));

    for k in 0..4 {
        let mut q = q4();
        let flipped = -q.get(k, k).clone();
        q.set(k, k, flipped);
        match validate_polarization(&fix_h4(), &q) {
            Ok(()) => println!("flip {k}: still polarized"),
            Err(e) => println!("flip {k}: condition {} fails: {e}", e.condition()),
        }
    }

    let herm = hermitian_from_polarization_wt1(&fix_e(), &q_e()).expect("polarized weight 1");
    println!("g = Q(I·, ·) on FIX-E: {:?}", herm.g);
    let x = [rat(2), rat(-5)];
    println!("g(x, x) for x = (2, -5): {}", herm.g.to_rational().unwrap().bilinear(&x, &x));
}
