use std::collections::HashSet;

use qserre::hilbert::{
    enumerate_irreducible, epsilon, jacobi_check, jacobi_product, jacobi_theta, product_series, y_set, Enumeration,
};
use qserre::words::Word;

/// `Π (1-v^(2m))^(-1) (1-v^(2m-1))^(-2)` by direct convolution, independent
/// of the power-series type.
fn product_coefficients(max: usize) -> Vec<i64> {
    let mut c = vec![0i64; max + 1];
    c[0] = 1;
    for k in 1..=max {
        let times = if k % 2 == 0 { 1 } else { 2 };
        for _ in 0..times {
            // multiply by 1/(1 - v^k)
            for n in k..=max {
                c[n] += c[n - k];
            }
        }
    }
    c
}

#[test]
fn counts_match_generating_function() {
    let oracle = product_coefficients(12);
    let series = product_series(12);
    for n in 0..=12 {
        let count = enumerate_irreducible(n, Enumeration::Filter).len();
        assert_eq!(count as i64, oracle[n], "n = {n}");
        assert_eq!(series.coeff(n), &qserre::qarith::rational::int(oracle[n]));
    }
    assert_eq!(&oracle[..5], &[1, 2, 4, 8, 14]);
    let reducible: Vec<String> = Word::all_of_length(4)
        .filter(|w| !w.is_irreducible())
        .map(|w| w.compact())
        .collect();
    assert_eq!(reducible.len(), 2);
    assert_eq!(16 - reducible.len(), 14);
}

#[test]
fn bijection_onto_irreducible_words() {
    for n in 0..=10 {
        let pairs = y_set(n);
        let images: Vec<Word> = pairs.iter().map(|(l, m)| epsilon(l, m).unwrap()).collect();
        let distinct: HashSet<&Word> = images.iter().collect();
        assert_eq!(distinct.len(), pairs.len(), "injective at n = {n}");
        assert!(images.iter().all(|w| w.len() == n && w.is_irreducible()));
        let filtered = enumerate_irreducible(n, Enumeration::Filter);
        assert_eq!(filtered.len(), pairs.len(), "surjective at n = {n}");
        assert_eq!(enumerate_irreducible(n, Enumeration::Bijection), filtered);
    }
    assert_eq!(y_set(4).len(), 14);
}

#[test]
fn triple_product() {
    assert!(jacobi_check(25));
    assert_eq!(jacobi_theta(25), jacobi_product(25));
    let head: Vec<i64> = jacobi_product(9).to_integers().unwrap().into_iter().collect();
    assert_eq!(head, vec![1, -2, 0, 0, 2, 0, 0, 0, 0, -2]);
}
