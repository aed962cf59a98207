//! Jacobi groups, the weight-1 torus and the Abel torus of a weight-2
//! structure.

use hodge_cousin::crgeom::hodge_from_bicr;
use hodge_cousin::fixtures::{fix_e, fix_hc};
use hodge_cousin::tori::{abel_torus, jacobi_group, maximal_compact, torus_to_hodge, weight1_torus};

fn main() {
    let e = fix_e();
    let jac = jacobi_group(&e).unwrap();
    println!("FIX-E Jacobi group: C^{} / rank {} lattice, compact = {}", jac.ambient_dim(), jac.rank(), jac.is_compact());
    let torus = weight1_torus(&e).unwrap();
    for g in torus.generators() {
        println!("  generator {:?}", g.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    let back = torus_to_hodge(&torus).unwrap();
    println!("  torus -> Hodge recovers FIX-E: {}", back.same_splitting(&e));

    let hc = fix_hc();
    let jac = jacobi_group(&hc).unwrap();
    let compact = maximal_compact(&jac).unwrap();
    println!(
        "FIX-HC Jacobi group: C^{} / rank {}, maximal compact of real dimension {} with CR part {}",
        jac.ambient_dim(),
        jac.rank(),
        compact.real_dim(),
        compact.cr.distinguished().dim()
    );
    let abel = abel_torus(&hc).unwrap();
    println!(
        "Abel torus: H has real dimension {}, F has real dimension {}",
        abel.h_part().dim(),
        abel.f_part().dim()
    );
    println!("bi-CR -> Hodge recovers FIX-HC: {}", hodge_from_bicr(abel.bicr()).unwrap().same_splitting(&hc));
}
