//! The canonical example structures.

use crate::exactfield::{rat, FieldElem};
use crate::hodge::{direct_sum, HodgeStructure, Piece};
use crate::linalg::{KMatrix, Matrix, QMatrix};
use crate::tori::PeriodData;

fn k(m: u64, a: [i64; 4]) -> FieldElem {
    FieldElem::from_ints(m, a)
}

fn columns(m: u64, rank: usize, cols: &[Vec<[i64; 4]>]) -> KMatrix {
    let cols: Vec<Vec<FieldElem>> = cols
        .iter()
        .map(|c| c.iter().map(|&a| k(m, a)).collect())
        .collect();
    Matrix::from_columns(&cols, rank, m)
}

fn diag(entries: &[i64]) -> QMatrix {
    let n = entries.len();
    Matrix::from_fn(n, n, (), |i, j| if i == j { rat(entries[i]) } else { rat(0) })
}

const ZERO: [i64; 4] = [0, 0, 0, 0];
const ONE: [i64; 4] = [1, 0, 0, 0];
const I: [i64; 4] = [0, 0, 1, 0];
const MINUS_I: [i64; 4] = [0, 0, -1, 0];
const S: [i64; 4] = [0, 1, 0, 0];
const IS: [i64; 4] = [0, 0, 0, 1];
const MINUS_IS: [i64; 4] = [0, 0, 0, -1];

/// Weight 1, rank 2: `V^{1,0} = span(e1 + i·e2)`.
pub fn fix_e() -> HodgeStructure {
    HodgeStructure::new(
        1,
        2,
        1,
        vec![
            Piece { p: 1, q: 0, basis: columns(1, 2, &[vec![ONE, I]]) },
            Piece { p: 0, q: 1, basis: columns(1, 2, &[vec![ONE, MINUS_I]]) },
        ],
    )
    .expect("valid fixture")
}

pub fn q_e() -> QMatrix {
    QMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]], 2, ()).expect("2x2")
}

/// Weight 2, rank 4, `m = 1`; polarized by [`q4`] and not Cousin.
pub fn fix_h4() -> HodgeStructure {
    HodgeStructure::new(
        2,
        4,
        1,
        vec![
            Piece { p: 2, q: 0, basis: columns(1, 4, &[vec![ONE, I, ZERO, ZERO]]) },
            Piece {
                p: 1,
                q: 1,
                basis: columns(1, 4, &[vec![ZERO, ZERO, ONE, ZERO], vec![ZERO, ZERO, ZERO, ONE]]),
            },
            Piece { p: 0, q: 2, basis: columns(1, 4, &[vec![ONE, MINUS_I, ZERO, ZERO]]) },
        ],
    )
    .expect("valid fixture")
}

pub fn q4() -> QMatrix {
    diag(&[-1, -1, 1, 1])
}

/// Weight 2, rank 4, `m = 2`; polarized by [`q4`] and Cousin.
pub fn fix_hc() -> HodgeStructure {
    HodgeStructure::new(
        2,
        4,
        2,
        vec![
            Piece { p: 2, q: 0, basis: columns(2, 4, &[vec![S, IS, ONE, I]]) },
            Piece {
                p: 1,
                q: 1,
                basis: columns(2, 4, &[vec![ONE, ZERO, S, ZERO], vec![ZERO, ONE, ZERO, S]]),
            },
            Piece { p: 0, q: 2, basis: columns(2, 4, &[vec![S, MINUS_IS, ONE, MINUS_I]]) },
        ],
    )
    .expect("valid fixture")
}

/// Weight 0, rank 2.
pub fn fix_w2() -> HodgeStructure {
    HodgeStructure::new(
        0,
        2,
        1,
        vec![Piece { p: 0, q: 0, basis: columns(1, 2, &[vec![ONE, ZERO], vec![ZERO, ONE]]) }],
    )
    .expect("valid fixture")
}

/// `ℂ² / ⟨(1,1), (i,1), (0,√2)⟩`.
pub fn fix_p3() -> PeriodData {
    let g = |a: [[i64; 4]; 2]| vec![k(2, a[0]), k(2, a[1])];
    PeriodData::new(2, 2, vec![g([ONE, ONE]), g([I, ONE]), g([ZERO, S])]).expect("valid fixture")
}

/// `fix_h4() ⊕ fix_hc()` over `m = 2`.
pub fn fix_h8() -> HodgeStructure {
    direct_sum(&fix_h4(), &fix_hc()).expect("same weight")
}

pub fn q8() -> QMatrix {
    q4().block_diagonal(&q4())
}

/// FIX-E on the index-3 sublattice spanned by `3·e1` and `e2`.
pub fn fix_e_sub3() -> HodgeStructure {
    let basis = Matrix::from_fn(2, 2, (), |i, j| match (i, j) {
        (0, 0) => rat(3),
        (1, 1) => rat(1),
        _ => rat(0),
    });
    crate::hodge::choose_lattice(&crate::hodge::extend_scalars(&fix_e()), &basis).expect("invertible basis")
}
