//! q-integers and their products as Laurent polynomials in `q`.

use num_traits::One;

use super::laurent::LaurentPoly;
use super::rational::Rational;
use super::QError;

/// `[n] = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)`,
/// extended to negative `n` by the same formula, so `[-n] = -[n]`.
pub fn q_int(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let m = n.abs();
    let sign = if n < 0 { -Rational::one() } else { Rational::one() };
    LaurentPoly::from_terms((0..m).map(|k| (m - 1 - 2 * k, sign.clone())))
}

/// `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn q_factorial(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| &acc * &q_int(k))
}

/// `[n]_k = [n][n-1]...[n-k+1]`, with `[n]_0 = 1`.
pub fn q_falling(n: i64, k: u32) -> LaurentPoly {
    (0..k as i64).fold(LaurentPoly::one(), |acc, j| &acc * &q_int(n - j))
}

/// Gaussian binomial `[n]!/([i]! [n-i]!)`; always a Laurent polynomial.
pub fn q_binomial(n: u32, i: i64) -> Result<LaurentPoly, QError> {
    if i < 0 || i > n as i64 {
        return Err(QError::Domain(format!(
            "q-binomial [{n} choose {i}] needs 0 <= i <= n"
        )));
    }
    let den = &q_factorial(i as u32) * &q_factorial(n - i as u32);
    Ok(q_factorial(n)
        .div_exact(&den)
        .expect("q-binomial coefficients are Laurent polynomials"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rational::int;

    #[test]
    fn q_int_closed_form() {
        // (q^n - q^-n) / (q - q^-1) by exact division
        let den = LaurentPoly::from_terms([(1, int(1)), (-1, int(-1))]);
        for n in -20..=20i64 {
            let num = LaurentPoly::from_terms([(n, int(1)), (-n, int(-1))]);
            assert_eq!(num.div_exact(&den).unwrap(), q_int(n), "n = {n}");
        }
    }

    #[test]
    fn small_values() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(3), LaurentPoly::from_terms([(2, int(1)), (0, int(1)), (-2, int(1))]));
        assert!(q_factorial(0).is_one());
        assert!(q_factorial(1).is_one());
        assert_eq!(q_factorial(3), &q_int(3) * &q_int(2));
        assert!(q_falling(5, 0).is_one());
        assert_eq!(q_falling(-1, 1), LaurentPoly::constant(int(-1)));
        assert_eq!(q_falling(3, 2), &q_int(3) * &q_int(2));
    }

    #[test]
    fn binomials() {
        assert!(q_binomial(3, 0).unwrap().is_one());
        assert_eq!(q_binomial(3, 1).unwrap(), q_int(3));
        let b42 = q_binomial(4, 2).unwrap();
        assert_eq!(b42, (&q_int(4) * &q_int(3)).div_exact(&q_int(2)).unwrap());
        assert!(q_binomial(3, 4).is_err());
        assert!(q_binomial(3, -1).is_err());
    }
}
