//! Building structures by hand and reading the validator's diagnostics.

use hodge_cousin::exactfield::FieldElem;
use hodge_cousin::fixtures::{fix_e, fix_h4};
use hodge_cousin::hodge::{HodgeStructure, Piece};
use hodge_cousin::linalg::Matrix;

fn main() {
    for (name, h) in [("FIX-E", fix_e()), ("FIX-H4", fix_h4())] {
        println!("{name}: weight {}, rank {}, m = {}", h.weight(), h.rank(), h.m());
        for ((p, q), d) in h.hodge_numbers() {
            println!("  h^({p},{q}) = {d}");
        }
    }

    // V^{1,0} and V^{0,1} spanned by the same vector: conjugation fails.
    let v = Matrix::from_columns(&[vec![FieldElem::one(1), FieldElem::i(1)]], 2, 1);
    let bad = HodgeStructure::from_parts(
        1,
        2,
        1,
        vec![Piece { p: 1, q: 0, basis: v.clone() }, Piece { p: 0, q: 1, basis: v }],
    )
    .expect("shapes are fine");
    match bad.validate() {
        Ok(()) => println!("unexpectedly valid"),
        Err(e) => println!("rejected ({} axiom): {e}", e.axiom()),
    }

    // Conjugate pieces, but the splitting misses a dimension.
    let w = Matrix::from_columns(&[vec![FieldElem::one(1), FieldElem::zero(1), FieldElem::i(1)]], 3, 1);
    let short = HodgeStructure::from_parts(
        1,
        3,
        1,
        vec![Piece { p: 1, q: 0, basis: w.clone() }, Piece { p: 0, q: 1, basis: w.conj() }],
    )
    .expect("shapes are fine");
    if let Err(e) = short.validate() {
        println!("rejected ({} axiom): {e}", e.axiom());
    }
}
