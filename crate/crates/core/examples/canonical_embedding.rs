//! The canonical embedding of the Abel torus and its compatibility checks.

use hodge_cousin::crgeom::induced_cr_image_check;
use hodge_cousin::fixtures::{fix_h4, fix_hc};
use hodge_cousin::random::random_polarized_weight2;
use hodge_cousin::tori::{canonical_embedding, embedding_cr_linearity};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut cases = vec![("FIX-H4".to_string(), fix_h4()), ("FIX-HC".to_string(), fix_hc())];
    for k in 0..4 {
        cases.push((format!("random #{k}"), random_polarized_weight2(&mut rng, 1, 2, 2).0));
    }
    for (name, h) in cases {
        let emb = canonical_embedding(&h).unwrap();
        println!(
            "{name:10} gamma = projection: {}  CR-linear: {}  image CR structure: {}",
            emb.matches_projection(),
            embedding_cr_linearity(&h).unwrap().linear,
            induced_cr_image_check(&h).unwrap()
        );
    }
    println!("gamma on FIX-HC: {:?}", canonical_embedding(&fix_hc()).unwrap().gamma);
}
