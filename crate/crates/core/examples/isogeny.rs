//! Isogeny search, kernel orders and Smith normal forms.

use hodge_cousin::fixtures::{fix_e, fix_e_sub3, fix_h4, fix_hc};
use hodge_cousin::linalg::{smith_normal_form, IntMatrix, Matrix};
use num_bigint::BigInt;

fn main() {
    let rep = hodge_cousin::tori::isogeny_check(&fix_e_sub3(), &fix_e(), 0).unwrap();
    println!(
        "index-3 sublattice -> FIX-E: {:?}, kernel order {:?}, Smith divisors {:?}",
        rep.verdict,
        rep.kernel_order.map(|k| k.to_string()),
        rep.smith_divisors.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    let rep = hodge_cousin::tori::isogeny_check(&fix_h4(), &fix_hc(), 0).unwrap();
    println!("FIX-H4 vs FIX-HC: {:?} (Hom has dimension {})", rep.verdict, rep.hom_dim);

    let a: IntMatrix = Matrix::from_rows(
        vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(4)],
            vec![BigInt::from(-6), BigInt::from(6), BigInt::from(12)],
            vec![BigInt::from(10), BigInt::from(-4), BigInt::from(-16)],
        ],
        3,
        (),
    )
    .unwrap();
    let (d, _, _) = smith_normal_form(&a);
    println!("Smith form of a 3x3 integer matrix: {d:?}");
}
