//! Induced CR and co-CR structures on real subspaces of C^2.

use hodge_cousin::crgeom::{induced_cocr, induced_cr};
use hodge_cousin::exactfield::FieldElem;
use hodge_cousin::linalg::Subspace;

fn real(v: [i64; 4]) -> Vec<FieldElem> {
    v.iter().map(|&x| FieldElem::from_int(1, x)).collect()
}

fn main() {
    // Coordinates (Re z1, Re z2, Im z1, Im z2).
    let cases = [
        ("C x R", vec![real([1, 0, 0, 0]), real([0, 0, 1, 0]), real([0, 1, 0, 0])]),
        ("R^2", vec![real([1, 0, 0, 0]), real([0, 1, 0, 0])]),
        ("C", vec![real([1, 1, 0, 0]), real([0, 0, 1, 1])]),
    ];
    for (name, gens) in cases {
        let v = Subspace::span_vectors(&gens, 4, 1);
        let cr = induced_cr(&v).unwrap();
        let cocr = induced_cocr(&v).unwrap();
        println!(
            "{name}: dim V = {}, CR part H = V ∩ iV of dim {}, co-CR part of dim {} in C^2 / V",
            v.dim(),
            cr.distinguished().dim(),
            cocr.distinguished().dim()
        );
    }
}
