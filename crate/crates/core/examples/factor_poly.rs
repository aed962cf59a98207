//! Factoring rational polynomials, e.g. minimal polynomials of
//! endomorphisms.

use hodge_cousin::exactfield::{format_rational, rat, Rational};
use hodge_cousin::polarization::factor_poly;

fn show(coeffs: &[Rational]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| **c != rat(0))
        .map(|(k, c)| match k {
            0 => format_rational(c),
            1 => format!("{}·x", format_rational(c)),
            _ => format!("{}·x^{k}", format_rational(c)),
        })
        .collect();
    terms.join(" + ")
}

fn main() {
    let inputs: Vec<Vec<i64>> = vec![
        vec![1, 0, 1],
        vec![0, -1, 1],
        vec![-4, 0, 0, 0, 1],
        vec![1, 0, -10, 0, 1],
        vec![-1, 0, 0, 0, 0, 0, 0, 0, 1],
    ];
    let product = [vec![-2, 0, 1], vec![1, 1, 0, 1], vec![1, 0, -10, 0, 1], vec![3, 2]]
        .iter()
        .fold(vec![1i64], |acc, f| {
            let mut out = vec![0; acc.len() + f.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        });
    let inputs: Vec<Vec<i64>> = inputs.into_iter().chain([product]).collect();
    for f in inputs {
        let f: Vec<Rational> = f.into_iter().map(rat).collect();
        let fac = factor_poly(&f).unwrap();
        println!("{}", show(&f));
        println!("  unit {}", format_rational(&fac.unit));
        for g in &fac.factors {
            let q: Vec<Rational> = g.poly.iter().map(|c| Rational::from_integer(c.clone())).collect();
            println!("  ({})^{}", show(&q), g.multiplicity);
        }
    }
}
