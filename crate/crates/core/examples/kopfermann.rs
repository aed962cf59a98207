//! Characters and the Kopfermann splitting of period data.

use hodge_cousin::exactfield::FieldElem;
use hodge_cousin::fixtures::{fix_h4, fix_p3};
use hodge_cousin::tori::{character_space, jacobi_group, kopfermann, PeriodData};

fn report(name: &str, p: &PeriodData) {
    let k = kopfermann(p).unwrap();
    println!(
        "{name}: characters {}, linear part C^{}, torus rank {}, Cousin part C^{} / rank {}",
        character_space(p).dim(),
        k.linear_dim,
        k.torus_rank,
        k.cousin_part.ambient_dim(),
        k.cousin_part.rank()
    );
}

fn main() {
    report("FIX-P3", &fix_p3());
    report("Jacobi(FIX-H4)", &jacobi_group(&fix_h4()).unwrap());
    // C* = C / Z
    let cstar = PeriodData::new(1, 1, vec![vec![FieldElem::one(1)]]).unwrap();
    report("C / Z", &cstar);
    // C^2 / <(1,0), (i,0), (0,1)>: an elliptic curve times C*.
    let e = |a: [i64; 4], b: [i64; 4]| vec![FieldElem::from_ints(1, a), FieldElem::from_ints(1, b)];
    let mixed = PeriodData::new(
        2,
        1,
        vec![e([1, 0, 0, 0], [0; 4]), e([0, 0, 1, 0], [0; 4]), e([0; 4], [1, 0, 0, 0])],
    )
    .unwrap();
    report("C^2 / <(1,0), (i,0), (0,1)>", &mixed);
    // C^2 / <(1,0)>: one linear direction.
    let line = PeriodData::new(2, 1, vec![e([1, 0, 0, 0], [0; 4])]).unwrap();
    report("C^2 / <(1,0)>", &line);
}
