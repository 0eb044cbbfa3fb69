use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, pow, Rational};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely from the lowest to the highest nonzero exponent; both end
/// coefficients are nonzero and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::from_dense(exp, vec![c])
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds `sum_k coeffs[k] q^(low + k)`, trimming zero ends.
    pub fn from_dense(mut low: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i64;
        }
        if coeffs.is_empty() {
            low = 0;
        }
        LaurentPoly { low, coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let terms: Vec<(i64, Rational)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient (`None` for zero).
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with nonzero coefficient (`None` for zero).
    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            return Rational::zero();
        }
        self.coeffs[k as usize].clone()
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub(crate) fn dense(&self) -> (i64, &[Rational]) {
        (self.low, &self.coeffs)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// The substitution `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        let Some(hi) = self.high_exp() else {
            return Self::zero();
        };
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { low: -hi, coeffs }
    }

    /// Evaluates at `q = q0`. Panics when `q0 = 0` and a negative power of
    /// `q` is present.
    pub fn eval(&self, q0: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        // Horner on the dense part, then the q^low factor.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        if self.low == 0 {
            acc
        } else {
            acc * pow(q0, self.low)
        }
    }

    /// Quotient and remainder by a nonzero divisor, treating both sides as
    /// ordinary polynomials after aligning the lowest exponents. The
    /// remainder is zero iff the divisor divides `self` in `Q[q, q^-1]`.
    pub fn div_rem(&self, divisor: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!divisor.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let lc = divisor.coeffs.last().unwrap();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        (
            Self::from_dense(self.low - divisor.low, quot),
            Self::from_dense(self.low, rem),
        )
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.high_exp().unwrap().max(rhs.high_exp().unwrap());
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for p in [self, rhs] {
            for (k, c) in p.coeffs.iter().enumerate() {
                coeffs[(p.low - lo) as usize + k] += c;
            }
        }
        LaurentPoly::from_dense(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Terms in descending exponent order, e.g. `q^2 + 1 + q^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            match (a.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{}", format_rational(&a))?,
                (false, false) => write!(f, "{}*{mono}", format_rational(&a))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
