//! Closed-form expansions of `x^i y^r x^(n-i)` and their images under the
//! involutions, plus the higher order q-Serre relations.

use crate::qarith::{Field, Scalar};
use crate::words::{Letter, NCPolynomial, Word};

use super::RewriteError;

fn xyx(a: usize, b: usize, c: usize) -> Word {
    Word::from_runs(Letter::X, &[a, b, c])
}

fn check_range(i: usize, r: usize, n: usize) -> Result<(), RewriteError> {
    if r == 0 || n < 2 * r + 1 || i > n {
        return Err(RewriteError::Domain(format!(
            "expansion needs r >= 1, n >= 2r+1, 0 <= i <= n; got (i, r, n) = ({i}, {r}, {n})"
        )));
    }
    Ok(())
}

fn ratio(field: &Field, num: [(i64, u32); 3], den: [(i64, u32); 3]) -> Scalar {
    let f = |parts: [(i64, u32); 3]| {
        parts
            .iter()
            .fold(field.one(), |acc, &(m, k)| &acc * &field.q_falling(m, k))
    };
    f(num)
        .checked_div(&f(den))
        .expect("expansion denominators are products of nonzero q-integers")
}

/// `x^i y^r x^(n-i)` written over `{x^ξ y^r x^(n-ξ) : ξ <= r}` and
/// `{x^(n-ζ) y^r x^ζ : ζ < r}`.
pub fn expand_xyx(field: &Field, i: usize, r: usize, n: usize) -> Result<NCPolynomial, RewriteError> {
    check_range(i, r, n)?;
    let (i, r, n) = (i as i64, r as i64, n as i64);
    let u = |v: i64| v as u32;
    let mut p = NCPolynomial::zero(field);
    for xi in 0..=r {
        let c = ratio(
            field,
            [(i, u(xi)), (r - i, u(r - xi)), (n - i, u(r))],
            [(xi, u(xi)), (r - xi, u(r - xi)), (n - xi, u(r))],
        );
        p.add_term(xyx(xi as usize, r as usize, (n - xi) as usize), c);
    }
    for zeta in 0..r {
        let c = ratio(
            field,
            [(i, u(r + 1)), (i - n + r - 1, u(r - zeta - 1)), (n - i, u(zeta))],
            [(n - zeta, u(r + 1)), (r - zeta - 1, u(r - zeta - 1)), (zeta, u(zeta))],
        );
        p.add_term(xyx((n - zeta) as usize, r as usize, zeta as usize), c);
    }
    Ok(p)
}

/// `x^i y^r x^(n-i)` written over `{x^(n-ξ) y^r x^ξ : ξ <= r}` and
/// `{x^ζ y^r x^(n-ζ) : ζ < r}`: the reversal of `expand_xyx(n-i, r, n)`.
pub fn expand_mirror(field: &Field, i: usize, r: usize, n: usize) -> Result<NCPolynomial, RewriteError> {
    check_range(i, r, n)?;
    Ok(expand_xyx(field, n - i, r, n)?.sigma1())
}

/// Letter-swapped [`expand_xyx`]: `y^i x^r y^(n-i)`.
pub fn expand_yxy(field: &Field, i: usize, r: usize, n: usize) -> Result<NCPolynomial, RewriteError> {
    Ok(expand_xyx(field, i, r, n)?.sigma0())
}

/// Letter-swapped [`expand_mirror`]: `y^i x^r y^(n-i)`.
pub fn expand_yxy_mirror(field: &Field, i: usize, r: usize, n: usize) -> Result<NCPolynomial, RewriteError> {
    Ok(expand_mirror(field, i, r, n)?.sigma0())
}

/// `Σ_{i=0}^{2r+1} (-1)^i [2r+1 choose i] x^i y^r x^(2r+1-i)`; for `r = 1`
/// this is minus the first q-Serre relation. The dual relation is its
/// [`NCPolynomial::sigma0`].
pub fn higher_serre(field: &Field, r: usize) -> NCPolynomial {
    let n = 2 * r + 1;
    let mut p = NCPolynomial::zero(field);
    for i in 0..=n {
        let b = field.q_binomial(n as u32, i as i64).expect("0 <= i <= n");
        let c = if i % 2 == 0 { b } else { -b };
        p.add_term(xyx(i, r, n - i), c);
    }
    p
}

/// The two defining relations `x^3y - [3]x^2yx + [3]xyx^2 - yx^3` and
/// `y^3x - [3]y^2xy + [3]yxy^2 - xy^3`.
pub fn serre_relations(field: &Field) -> [NCPolynomial; 2] {
    let p = -higher_serre(field, 1);
    let d = p.sigma0();
    [p, d]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn identity_cases() {
        let f = Field::symbolic();
        for (i, r, n) in [(0, 1, 3), (1, 1, 3), (0, 2, 5), (2, 2, 7), (1, 3, 9)] {
            let p = expand_xyx(&f, i, r, n).unwrap();
            assert_eq!(p, NCPolynomial::from_word(&f, xyx(i, r, n - i)), "{i} {r} {n}");
        }
    }

    #[test]
    fn expansion_of_x2yx() {
        let f = Field::symbolic();
        let third = f.q_int(3).inv().unwrap();
        let p = expand_xyx(&f, 2, 1, 3).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&w("xxxy")), third);
        assert_eq!(p.coeff(&w("xyxx")), f.one());
        assert_eq!(p.coeff(&w("yxxx")), -&third);
    }

    #[test]
    fn expansion_of_x2yx_agrees_with_serre_relation() {
        // [3] x^2yx = x^3y + [3] xyx^2 - yx^3
        let f = Field::symbolic();
        let [s, _] = serre_relations(&f);
        let lhs = expand_xyx(&f, 2, 1, 3).unwrap().scale(&f.q_int(3));
        let rhs = &NCPolynomial::from_word(&f, w("xxyx")).scale(&f.q_int(3)) + &s;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mirrors() {
        let f = Field::symbolic();
        let third = f.q_int(3).inv().unwrap();
        let m = expand_mirror(&f, 1, 1, 3).unwrap();
        assert_eq!(m.coeff(&w("yxxx")), third);
        assert_eq!(m.coeff(&w("xxyx")), f.one());
        assert_eq!(m.coeff(&w("xxxy")), -&third);
        let s0 = expand_yxy(&f, 2, 1, 3).unwrap();
        assert_eq!(s0.coeff(&w("yyyx")), third);
        assert_eq!(s0.coeff(&w("yxyy")), f.one());
        assert_eq!(s0.coeff(&w("xyyy")), -&third);
        let sm = expand_yxy_mirror(&f, 1, 1, 3).unwrap();
        assert_eq!(sm, m.sigma0());
    }

    #[test]
    fn numeric_expansion_specializes_symbolic() {
        let sym = Field::symbolic();
        let num = Field::numeric(crate::qarith::rational::int(2)).unwrap();
        let q0 = num.q0().unwrap().clone();
        for (i, r, n) in [(2, 1, 3), (5, 2, 7), (4, 3, 9)] {
            let s = expand_xyx(&sym, i, r, n).unwrap();
            let z = expand_xyx(&num, i, r, n).unwrap();
            let spec = s.map_coeffs(&num, |c| crate::qarith::specialize(c, &q0).unwrap());
            assert_eq!(spec, z);
        }
    }

    #[test]
    fn range_errors() {
        let f = Field::symbolic();
        assert!(expand_xyx(&f, 0, 0, 3).is_err());
        assert!(expand_xyx(&f, 0, 1, 2).is_err());
        assert!(expand_xyx(&f, 4, 1, 3).is_err());
    }

    #[test]
    fn serre_relation_shape() {
        let f = Field::symbolic();
        let [s, t] = serre_relations(&f);
        assert_eq!(s.coeff(&w("xxxy")), f.one());
        assert_eq!(s.coeff(&w("xxyx")), -f.q_int(3));
        assert_eq!(s.coeff(&w("xyxx")), f.q_int(3));
        assert_eq!(s.coeff(&w("yxxx")), -f.one());
        assert_eq!(t.coeff(&w("yyyx")), f.one());
        assert_eq!(t.len(), 4);
    }
}
