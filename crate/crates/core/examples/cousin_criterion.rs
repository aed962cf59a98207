//! The two Cousin tests side by side: rational functionals killing the
//! non-middle pieces, and characters of the Jacobi group.

use hodge_cousin::fixtures::{fix_e, fix_h4, fix_h8, fix_hc, fix_p3, fix_w2};
use hodge_cousin::hodge::{is_cousin, weight0_quotient_space};
use hodge_cousin::random::random_structure;
use hodge_cousin::tori::{character_space, jacobi_group};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let named = [
        ("FIX-E", fix_e()),
        ("FIX-H4", fix_h4()),
        ("FIX-HC", fix_hc()),
        ("FIX-W2", fix_w2()),
        ("FIX-H8", fix_h8()),
    ];
    for (name, h) in named {
        let w0 = weight0_quotient_space(&h).dim();
        let chars = character_space(&jacobi_group(&h).unwrap()).dim();
        println!("{name:7} cousin = {:5}  weight-0 quotient = {w0}  characters = {chars}", is_cousin(&h));
    }
    println!("FIX-P3 characters = {}", character_space(&fix_p3()).dim());

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut agree = 0;
    for k in 0..30 {
        let weight = k % 4;
        let rank = if weight % 2 == 1 { 4 } else { 3 + k as usize % 3 };
        let m = [1, 2, 3][k as usize % 3];
        let h = random_structure(&mut rng, weight, rank, m).unwrap();
        let w0 = weight0_quotient_space(&h).dim();
        let chars = character_space(&jacobi_group(&h).unwrap()).dim();
        agree += usize::from(w0 == chars);
    }
    println!("random structures with matching counts: {agree}/30");
}
