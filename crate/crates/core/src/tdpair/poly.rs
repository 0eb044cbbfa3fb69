//! Dense univariate polynomials over the rationals, lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::qarith::Rational;

use super::matrix::{ExactMatrix, Subspace};

pub type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[Rational]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect(),
    )
}

pub fn rem(p: &[Rational], m: &[Rational]) -> Poly {
    let dm = degree(m).expect("division by the zero polynomial");
    let mut r = trim(p.to_vec());
    let lead = m[dm].recip();
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = &r[dr] * &lead;
        for k in 0..=dm {
            let x = &r[dr - dm + k] - &c * &m[k];
            r[dr - dm + k] = x;
        }
        r = trim(r);
    }
    r
}

pub fn monic(p: &[Rational]) -> Poly {
    let p = trim(p.to_vec());
    match p.last() {
        Some(l) => {
            let inv = l.recip();
            p.iter().map(|c| c * &inv).collect()
        }
        None => p,
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &[Rational], b: &[Rational]) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

pub fn is_squarefree(p: &[Rational]) -> bool {
    degree(&gcd(p, &derivative(p))) == Some(0)
}

/// Monic minimal polynomial of a square matrix: the first linear dependency
/// among `I, M, M^2, ...`.
pub fn minimal_polynomial(m: &ExactMatrix) -> Poly {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.nrows();
    let mut seen = Subspace::zero(n * n);
    let mut powers = vec![ExactMatrix::identity(n)];
    loop {
        let last = powers.last().expect("nonempty");
        if !seen.insert(last.entries()) {
            break;
        }
        let next = &powers[powers.len() - 1] * m;
        powers.push(next);
    }
    let cols: Vec<Vec<Rational>> = powers.iter().map(|p| p.entries().to_vec()).collect();
    let system = ExactMatrix::from_columns(n * n, &cols);
    let kernel = system.kernel();
    // the only dependency involves the top power
    monic(&kernel[0])
}

/// Divisors of `n > 0`, by trial division; `None` when `n` exceeds `limit`.
fn divisors(n: &BigInt, limit: u64) -> Option<Vec<u64>> {
    let n = n.abs().to_u64().filter(|&v| v <= limit)?;
    let mut out = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            if k * k != n {
                out.push(n / k);
            }
        }
        k += 1;
    }
    Some(out)
}

/// Largest numerator or denominator accepted by [`rational_roots`].
pub const ROOT_SEARCH_LIMIT: u64 = 1 << 40;

/// Distinct rational roots, via the rational root theorem. `None` when the
/// cleared coefficients are too large to factor by trial division.
pub fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return None;
    }
    let mut roots = Vec::new();
    let shift = p.iter().position(|c| !c.is_zero()).expect("nonzero");
    if shift > 0 {
        roots.push(Rational::zero());
    }
    let p = &p[shift..];
    if p.len() == 1 {
        return Some(roots);
    }
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let nums = divisors(&ints[0], ROOT_SEARCH_LIMIT)?;
    let dens = divisors(ints.last().expect("nonempty"), ROOT_SEARCH_LIMIT)?;
    for &a in &nums {
        for &b in &dens {
            if a.gcd(&b) != 1 {
                continue;
            }
            for s in [1i64, -1] {
                let x = Rational::new(BigInt::from(a) * s, BigInt::from(b));
                if eval(p, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rational::{int, rat};

    fn p(c: &[i64]) -> Poly {
        c.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let f = p(&[2, -3, 0, 1]);
        assert!(!is_squarefree(&f));
        assert_eq!(gcd(&f, &derivative(&f)), p(&[-1, 1]));
        assert!(is_squarefree(&p(&[-2, 0, 1])));
        assert_eq!(rem(&f, &p(&[-1, 1])), Poly::new());
    }

    #[test]
    fn minimal_polynomials() {
        let m = ExactMatrix::diagonal(&[int(2), int(2), int(3)]);
        assert_eq!(minimal_polynomial(&m), p(&[6, -5, 1]));
        let j = ExactMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(0), int(1)]]).unwrap();
        assert_eq!(minimal_polynomial(&j), p(&[1, -2, 1]));
        assert_eq!(minimal_polynomial(&ExactMatrix::zeros(3, 3)), p(&[0, 1]));
    }

    #[test]
    fn roots() {
        // 6x^3 - 5x^2 - 2x + 1 = (x - 1)(2x + 1)(3x - 1)
        let f = p(&[1, -2, -5, 6]);
        assert_eq!(rational_roots(&f).unwrap(), vec![rat(-1, 2), rat(1, 3), int(1)]);
        assert_eq!(rational_roots(&p(&[-2, 0, 1])).unwrap(), vec![]);
        assert_eq!(rational_roots(&p(&[0, 0, 1])).unwrap(), vec![int(0)]);
    }
}
