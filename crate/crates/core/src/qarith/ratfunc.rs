use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::rational::{pow, Rational};
use super::zpoly::ZPoly;
use super::QError;

/// Element of the field `Q(q)` in canonical form.
///
/// The value is `scale * q^shift * num(q) / den(q)` where `num` and `den`
/// are coprime primitive integer polynomials with positive leading
/// coefficients and nonzero constant terms. This form is unique, so derived
/// equality is equality in `Q(q)`. Zero has `scale = 0`, `num = den = 1`.
///
/// Seen as a quotient of Laurent polynomials, [`numerator`](Self::numerator)
/// is `scale * q^shift * num` and [`denominator`](Self::denominator) is
/// `den`, which has lowest exponent 0 and positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    scale: Rational,
    shift: i64,
    num: ZPoly,
    den: ZPoly,
}

/// `p = q^shift * unit * pp` with `pp` primitive, positive leading
/// coefficient, nonzero constant term.
fn split_laurent(p: &LaurentPoly) -> (Rational, i64, ZPoly) {
    let (low, coeffs) = p.dense();
    let l = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let (c, pp) = ZPoly::new(ints).primitive_split();
    (Rational::new(c, l), low, pp)
}

/// Removes the power of `q` dividing `p` (returned as the valuation).
fn strip_q(mut p: Vec<BigInt>) -> (i64, Vec<BigInt>) {
    let v = p.iter().take_while(|c| c.is_zero()).count();
    p.drain(..v);
    (v as i64, p)
}

fn shifted(p: &ZPoly, k: usize) -> ZPoly {
    if k == 0 {
        return p.clone();
    }
    let mut v = vec![BigInt::zero(); k];
    v.extend(p.0.iter().cloned());
    ZPoly(v)
}

fn zpoly_eval(p: &ZPoly, q0: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.0.iter().rev() {
        acc = acc * q0 + Rational::from_integer(c.clone());
    }
    acc
}

fn zpoly_scaled(p: &ZPoly, c: &BigInt) -> Vec<BigInt> {
    p.0.iter().map(|x| x * c).collect()
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            scale: Rational::zero(),
            shift: 0,
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i64) -> Self {
        RationalFunction {
            scale: Rational::one(),
            shift: k,
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            scale: c,
            shift: 0,
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let (scale, shift, num) = split_laurent(p);
        RationalFunction {
            scale,
            shift,
            num,
            den: ZPoly::one(),
        }
    }

    /// Canonical form of `num / den`.
    pub fn new(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(&Self::from_laurent(num) / &Self::from_laurent(den))
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scale.is_one() && self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent().then(|| self.numerator())
    }

    /// The value as a rational constant, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        (self.shift == 0 && self.num.is_one() && self.den.is_one()).then(|| self.scale.clone())
    }

    pub fn numerator(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let coeffs = self
            .num
            .0
            .iter()
            .map(|c| &self.scale * Rational::from_integer(c.clone()))
            .collect();
        LaurentPoly::from_dense(self.shift, coeffs)
    }

    pub fn denominator(&self) -> LaurentPoly {
        let coeffs = self.den.0.iter().map(|c| Rational::from_integer(c.clone())).collect();
        LaurentPoly::from_dense(0, coeffs)
    }

    /// Sign of the leading (highest-degree) numerator coefficient.
    pub fn is_negative(&self) -> bool {
        self.scale.is_negative()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RationalFunction {
            scale: self.scale.recip(),
            shift: -self.shift,
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Evaluates at `q = q0`.
    pub fn eval(&self, q0: &Rational) -> Result<Rational, QError> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let d = zpoly_eval(&self.den, q0);
        if d.is_zero() || (q0.is_zero() && self.shift < 0) {
            return Err(QError::VanishingDenominator(q0.clone()));
        }
        let n = zpoly_eval(&self.num, q0);
        let qs = if q0.is_zero() {
            if self.shift == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        } else {
            pow(q0, self.shift)
        };
        Ok(&self.scale * qs * n / d)
    }

    /// The substitution `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        let n = self.numerator().invert_q();
        let d = self.denominator().invert_q();
        Self::new(&n, &d).expect("nonzero denominator")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let scale = &self.scale * &rhs.scale;
        let shift = self.shift + rhs.shift;
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction {
                scale,
                shift,
                num: self.num.mul(&rhs.num),
                den: ZPoly::one(),
            };
        }
        let g1 = ZPoly::gcd(&self.num, &rhs.den);
        let g2 = ZPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = rhs.den.div_exact(&g1);
        let n2 = rhs.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        RationalFunction {
            scale,
            shift,
            num: n1.mul(&n2),
            den: d1.mul(&d2),
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Henrici: with g = gcd(d1, d2) only g can share factors with the
        // cross-multiplied numerator.
        let g = ZPoly::gcd(&self.den, &rhs.den);
        let d1 = self.den.div_exact(&g);
        let d2 = rhs.den.div_exact(&g);
        let l = self.scale.denom().lcm(rhs.scale.denom());
        let a1 = self.scale.numer() * (&l / self.scale.denom());
        let a2 = rhs.scale.numer() * (&l / rhs.scale.denom());
        let e = self.shift.min(rhs.shift);
        let t1 = shifted(&self.num.mul(&d2), (self.shift - e) as usize);
        let t2 = shifted(&rhs.num.mul(&d1), (rhs.shift - e) as usize);
        let len = t1.0.len().max(t2.0.len());
        let mut t = zpoly_scaled(&t1, &a1);
        t.resize(len, BigInt::zero());
        for (k, c) in t2.0.iter().enumerate() {
            t[k] += c * &a2;
        }
        let t = ZPoly::new(t);
        if t.is_zero() {
            return RationalFunction::zero();
        }
        let (v, t) = strip_q(t.0);
        let (c, t) = ZPoly(t).primitive_split();
        let h = ZPoly::gcd(&t, &g);
        RationalFunction {
            scale: Rational::new(c, l),
            shift: e + v,
            num: t.div_exact(&h),
            den: d1.mul(&d2).mul(&g.div_exact(&h)),
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            scale: -&self.scale,
            ..self.clone()
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

/// Panics on division by zero; use [`RationalFunction::inv`] to check.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({})/({})", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
