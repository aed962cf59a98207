//! From a polarized Cousin structure to an abelian Cousin group and back.

use hodge_cousin::fixtures::{fix_h4, fix_hc, q4};
use hodge_cousin::metric::{hermitian_extension, reconstruct, AbelianCousinData};
use hodge_cousin::tori::isogeny_check;

fn main() {
    let ext = hermitian_extension(&fix_hc(), &q4()).unwrap();
    println!("FIX-HC: Hermitian form positive definite: {}", ext.h.is_positive_definite());
    println!("induced metric on the lattice: {:?}", ext.induced().unwrap().g());
    let data = AbelianCousinData::try_from(ext).unwrap();
    let (h, q) = reconstruct(&data).unwrap();
    println!("recovered polarization: {q:?}");
    let rep = isogeny_check(&h, &fix_hc(), 0).unwrap();
    println!("recovered vs FIX-HC: {:?}, kernel order {:?}", rep.verdict, rep.kernel_order.map(|k| k.to_string()));

    let ext = hermitian_extension(&fix_h4(), &q4()).unwrap();
    match AbelianCousinData::try_from(ext) {
        Ok(_) => println!("FIX-H4 unexpectedly accepted"),
        Err(e) => println!("FIX-H4 rejected: {e}"),
    }
}
