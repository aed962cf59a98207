//! Orthogonal splitting of polarized structures by their endomorphisms.

use hodge_cousin::fixtures::{fix_e, fix_h4, fix_h8, q4, q8, q_e};
use hodge_cousin::hodge::direct_sum;
use hodge_cousin::polarization::{decompose, endomorphism_algebra};

fn main() {
    let pair = direct_sum(&fix_h4(), &fix_h4()).unwrap();
    let cases = [("FIX-E", fix_e(), q_e()), ("FIX-H4", fix_h4(), q4()), ("FIX-H8", fix_h8(), q8()), ("FIX-H4 ⊕ FIX-H4", pair, q8())];
    for (name, h, q) in cases {
        let end = endomorphism_algebra(&h).unwrap();
        let d = decompose(&h, &q, 0).unwrap();
        println!("{name}: End has dimension {}, {} summands", end.dim(), d.summands.len());
        for s in &d.summands {
            let numbers: Vec<String> =
                s.structure.hodge_numbers().iter().map(|((p, q), n)| format!("h^({p},{q})={n}")).collect();
            println!(
                "  rank {} [{}] End dim {} simple: {} lattice {:?}",
                s.structure.rank(),
                numbers.join(" "),
                s.end_dim,
                s.certified_simple,
                s.lattice
            );
        }
    }
}
