//! Counting irreducible words: partitions, generating functions, the
//! bijection onto pairs of partitions, and the specialized Jacobi triple
//! product.

mod partition;
mod series;

pub use partition::{distinct_partitions, odd_partitions, partitions, Partition};
pub use series::PowerSeries;

use thiserror::Error;

use crate::qarith::Rational;
use crate::words::{Letter, Word};

/// Default truncation order for series checks.
pub const DEFAULT_ORDER: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("domain error: {0}")]
    Domain(String),
}

/// `Π_{m in ks} (1 - v^m)^(-e)`.
fn inverse_product(order: usize, ks: impl Iterator<Item = usize>, e: u32) -> PowerSeries {
    let mut s = PowerSeries::one(order);
    for k in ks.take_while(|&k| k <= order) {
        let inv = PowerSeries::one_minus_power(order, k).inverse().expect("unit constant term");
        for _ in 0..e {
            s = &s * &inv;
        }
    }
    s
}

/// `Σ p_n v^n = Π (1 - v^m)^(-1)`.
pub fn partition_series(order: usize) -> PowerSeries {
    inverse_product(order, 1.., 1)
}

/// `Σ p'_n v^n = Π (1 - v^(2m-1))^(-1)`.
pub fn distinct_partition_series(order: usize) -> PowerSeries {
    inverse_product(order, (1..).step_by(2), 1)
}

/// `Π (1 - v^(2m))^(-1) (1 - v^(2m-1))^(-2)`.
pub fn product_series(order: usize) -> PowerSeries {
    let even = inverse_product(order, (2..).step_by(2), 1);
    let odd = inverse_product(order, (1..).step_by(2), 2);
    &even * &odd
}

/// `Σ_{n in Z} (-v)^(n^2)` through degree `order`.
pub fn jacobi_theta(order: usize) -> PowerSeries {
    let mut s = PowerSeries::one(order);
    for n in 1.. {
        let k = n * n;
        if k > order {
            break;
        }
        let sign = if n % 2 == 0 { 2 } else { -2 };
        s = &s + &PowerSeries::monomial(order, k, Rational::from_integer(sign.into()));
    }
    s
}

/// `Π (1 - v^(2m)) (1 - v^(2m-1))^2` through degree `order`.
pub fn jacobi_product(order: usize) -> PowerSeries {
    let mut s = PowerSeries::one(order);
    for m in 1..=order {
        let f = PowerSeries::one_minus_power(order, m);
        s = &s * &f;
        if m % 2 == 1 {
            s = &s * &f;
        }
    }
    s
}

/// Both sides of the specialized triple product agree through `order`, and
/// the product is the inverse of [`product_series`].
pub fn jacobi_check(order: usize) -> bool {
    let prod = jacobi_product(order);
    jacobi_theta(order) == prod && &prod * &product_series(order) == PowerSeries::one(order)
}

/// Interleaves `λ` and `μ` as
/// `... x^λ4 y^λ3 x^λ2 y^λ1 x^μ1 y^μ2 x^μ3 y^μ4 ...`.
pub fn epsilon(lambda: &Partition, mu: &Partition) -> Result<Word, HilbertError> {
    if !lambda.has_distinct_parts() {
        return Err(HilbertError::Domain(format!(
            "the left partition {lambda} must have distinct parts"
        )));
    }
    let mut runs: Vec<usize> = lambda.parts().iter().rev().copied().collect();
    runs.extend_from_slice(mu.parts());
    let leading = match lambda.len() {
        0 => Letter::X,
        r if r % 2 == 1 => Letter::Y,
        _ => Letter::X,
    };
    Ok(Word::from_runs(leading, &runs))
}

/// Pairs `(λ, μ)` with `λ` distinct-part and `|λ| + |μ| = n`.
pub fn y_set(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in 0..=n {
        for l in distinct_partitions(k) {
            for m in partitions(n - k) {
                out.push((l.clone(), m));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Enumeration {
    /// Test every word of length `n`.
    Filter,
    /// Image of [`y_set`] under [`epsilon`].
    Bijection,
}

/// Irreducible words of length `n`, in canonical word order.
pub fn enumerate_irreducible(n: usize, via: Enumeration) -> Vec<Word> {
    let mut v: Vec<Word> = match via {
        Enumeration::Filter => Word::all_of_length(n).filter(Word::is_irreducible).collect(),
        Enumeration::Bijection => y_set(n)
            .iter()
            .map(|(l, m)| epsilon(l, m).expect("distinct parts"))
            .collect(),
    };
    v.sort();
    v
}

/// `|X_n|` against the product-series coefficient for `n <= max_degree`.
pub fn hilbert_table(max_degree: usize) -> Vec<(usize, usize, Rational)> {
    let s = product_series(max_degree);
    (0..=max_degree)
        .map(|n| {
            let count = enumerate_irreducible(n, Enumeration::Filter).len();
            (n, count, s.coeff(n).clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn product_series_head() {
        let s = product_series(DEFAULT_ORDER);
        assert_eq!(s.to_integers().unwrap()[..5], [1, 2, 4, 8, 14]);
    }

    #[test]
    fn product_is_convolution_of_partition_series() {
        let n = DEFAULT_ORDER;
        assert_eq!(product_series(n), &distinct_partition_series(n) * &partition_series(n));
    }

    #[test]
    fn series_match_enumeration() {
        let ps = partition_series(20).to_integers().unwrap();
        let ds = distinct_partition_series(20).to_integers().unwrap();
        for n in 0..=20 {
            assert_eq!(partitions(n).len() as i64, ps[n]);
            assert_eq!(distinct_partitions(n).len() as i64, ds[n]);
            assert_eq!(distinct_partitions(n).len(), odd_partitions(n).len());
        }
    }

    #[test]
    fn theta_head() {
        let t = jacobi_theta(9);
        assert_eq!(t.to_integers().unwrap(), vec![1, -2, 0, 0, 2, 0, 0, 0, 0, -2]);
        assert!(jacobi_check(0));
        assert!(jacobi_check(DEFAULT_ORDER));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(&p(&[]), &p(&[])).unwrap(), Word::empty());
        assert_eq!(epsilon(&p(&[1]), &p(&[])).unwrap(), Word::y());
        assert_eq!(epsilon(&p(&[]), &p(&[2, 1])).unwrap(), "x^2y".parse().unwrap());
        assert_eq!(epsilon(&p(&[3, 1]), &p(&[2])).unwrap(), "xy^3x^2".parse().unwrap());
        assert_eq!(epsilon(&p(&[3, 2, 1]), &p(&[1, 1])).unwrap(), "yx^2y^3xy".parse().unwrap());
        assert!(epsilon(&p(&[2, 2]), &p(&[])).is_err());
    }

    #[test]
    fn small_sets() {
        assert_eq!(enumerate_irreducible(0, Enumeration::Filter), vec![Word::empty()]);
        assert_eq!(enumerate_irreducible(1, Enumeration::Filter).len(), 2);
        assert_eq!(enumerate_irreducible(3, Enumeration::Filter).len(), 8);
        assert_eq!(enumerate_irreducible(4, Enumeration::Filter).len(), 14);
        assert_eq!(y_set(4).len(), 14);
    }

    #[test]
    fn bijection_small() {
        for n in 0..=8 {
            let ys = y_set(n);
            let image: HashSet<Word> = ys.iter().map(|(l, m)| epsilon(l, m).unwrap()).collect();
            assert_eq!(image.len(), ys.len());
            assert!(image.iter().all(|w| w.len() == n && w.is_irreducible()));
            assert_eq!(
                enumerate_irreducible(n, Enumeration::Bijection),
                enumerate_irreducible(n, Enumeration::Filter)
            );
        }
    }
}
