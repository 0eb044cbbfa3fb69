use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::qnum;
use super::ratfunc::RationalFunction;
use super::rational::{format_rational, is_admissible_q, pow, Rational};
use super::QError;

/// Coefficient field of a computation: `Q(q)` with `q` formal, or `Q` with
/// `q` specialized to a fixed admissible rational `q0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Symbolic,
    Numeric(Arc<Rational>),
}

/// Element of a [`Field`].
///
/// Arithmetic between scalars of different fields is a contract violation
/// and panics; [`Scalar::compatible`] tests for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Symbolic(RationalFunction),
    Numeric { value: Rational, q0: Arc<Rational> },
}

impl Field {
    pub fn symbolic() -> Self {
        Field::Symbolic
    }

    /// `q` specialized to `q0`; rejects `0` and `±1`.
    pub fn numeric(q0: Rational) -> Result<Self, QError> {
        if !is_admissible_q(&q0) {
            return Err(QError::InvalidSpecialization(q0));
        }
        Ok(Field::Numeric(Arc::new(q0)))
    }

    pub fn q0(&self) -> Option<&Rational> {
        match self {
            Field::Symbolic => None,
            Field::Numeric(q0) => Some(q0),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Field::Symbolic)
    }

    pub fn rational(&self, c: Rational) -> Scalar {
        match self {
            Field::Symbolic => Scalar::Symbolic(RationalFunction::from_rational(c)),
            Field::Numeric(q0) => Scalar::Numeric {
                value: c,
                q0: q0.clone(),
            },
        }
    }

    pub fn integer(&self, n: i64) -> Scalar {
        self.rational(Rational::from_integer(n.into()))
    }

    pub fn zero(&self) -> Scalar {
        self.rational(Rational::zero())
    }

    pub fn one(&self) -> Scalar {
        self.rational(Rational::one())
    }

    pub fn q_pow(&self, k: i64) -> Scalar {
        match self {
            Field::Symbolic => Scalar::Symbolic(RationalFunction::q_pow(k)),
            Field::Numeric(q0) => self.rational(pow(q0, k)),
        }
    }

    pub fn q(&self) -> Scalar {
        self.q_pow(1)
    }

    /// Image of a Laurent polynomial in this field.
    pub fn laurent(&self, p: &LaurentPoly) -> Scalar {
        match self {
            Field::Symbolic => Scalar::Symbolic(RationalFunction::from_laurent(p)),
            Field::Numeric(q0) => self.rational(p.eval(q0)),
        }
    }

    /// Image of a rational function; fails if its denominator vanishes at `q0`.
    pub fn rational_function(&self, r: &RationalFunction) -> Result<Scalar, QError> {
        match self {
            Field::Symbolic => Ok(Scalar::Symbolic(r.clone())),
            Field::Numeric(q0) => Ok(self.rational(r.eval(q0)?)),
        }
    }

    pub fn q_int(&self, n: i64) -> Scalar {
        self.laurent(&qnum::q_int(n))
    }

    pub fn q_factorial(&self, n: u32) -> Scalar {
        self.laurent(&qnum::q_factorial(n))
    }

    pub fn q_falling(&self, n: i64, k: u32) -> Scalar {
        self.laurent(&qnum::q_falling(n, k))
    }

    pub fn q_binomial(&self, n: u32, i: i64) -> Result<Scalar, QError> {
        Ok(self.laurent(&qnum::q_binomial(n, i)?))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Symbolic => write!(f, "Q(q)"),
            Field::Numeric(q0) => write!(f, "Q at q = {}", format_rational(q0)),
        }
    }
}

/// Substitutes `q := q0` in a symbolic scalar.
pub fn specialize(s: &Scalar, q0: &Rational) -> Result<Scalar, QError> {
    let Scalar::Symbolic(r) = s else {
        return Err(QError::Domain("specialize expects a symbolic scalar".into()));
    };
    let value = r.eval(q0)?;
    let field = Field::numeric(q0.clone())?;
    Ok(field.rational(value))
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Symbolic(_) => Field::Symbolic,
            Scalar::Numeric { q0, .. } => Field::Numeric(q0.clone()),
        }
    }

    pub fn compatible(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Symbolic(_), Scalar::Symbolic(_)) => true,
            (Scalar::Numeric { q0: a, .. }, Scalar::Numeric { q0: b, .. }) => {
                Arc::ptr_eq(a, b) || a == b
            }
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Symbolic(r) => r.is_zero(),
            Scalar::Numeric { value, .. } => value.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Symbolic(r) => r.is_one(),
            Scalar::Numeric { value, .. } => value.is_one(),
        }
    }

    /// True when the scalar prints with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Symbolic(r) => r.is_negative(),
            Scalar::Numeric { value, .. } => value.is_negative(),
        }
    }

    pub fn as_symbolic(&self) -> Option<&RationalFunction> {
        match self {
            Scalar::Symbolic(r) => Some(r),
            Scalar::Numeric { .. } => None,
        }
    }

    pub fn as_numeric(&self) -> Option<&Rational> {
        match self {
            Scalar::Numeric { value, .. } => Some(value),
            Scalar::Symbolic(_) => None,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Symbolic(r) => r.inv().map(Scalar::Symbolic),
            Scalar::Numeric { value, q0 } => (!value.is_zero()).then(|| Scalar::Numeric {
                value: value.recip(),
                q0: q0.clone(),
            }),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, QError> {
        if !self.compatible(rhs) {
            return Err(QError::MixedFields);
        }
        Ok(self * &rhs.inv().ok_or(QError::DivisionByZero)?)
    }

    pub fn pow(&self, k: i64) -> Option<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field().one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Fully expanded text: a Laurent polynomial or a quotient of two.
    pub fn expanded(&self) -> String {
        match self {
            Scalar::Symbolic(r) => r.to_string(),
            Scalar::Numeric { value, .. } => format_rational(value),
        }
    }
}

fn binop(
    a: &Scalar,
    b: &Scalar,
    sym: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction,
    num: impl Fn(&Rational, &Rational) -> Rational,
) -> Scalar {
    match (a, b) {
        (Scalar::Symbolic(x), Scalar::Symbolic(y)) => Scalar::Symbolic(sym(x, y)),
        (Scalar::Numeric { value: x, q0 }, Scalar::Numeric { value: y, q0: q1 })
            if Arc::ptr_eq(q0, q1) || q0 == q1 =>
        {
            Scalar::Numeric {
                value: num(x, y),
                q0: q0.clone(),
            }
        }
        _ => panic!("arithmetic between scalars of different fields"),
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x + y, |x, y| x + y)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x - y, |x, y| x - y)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x * y, |x, y| x * y)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Symbolic(r) => Scalar::Symbolic(-r),
            Scalar::Numeric { value, q0 } => Scalar::Numeric {
                value: -value,
                q0: q0.clone(),
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// `p = c * q^e * prod [k]^m_k`, when such a factorization exists.
struct QIntFactors {
    unit: Rational,
    q_exp: i64,
    ints: Vec<(i64, u32)>,
}

fn factor_q_ints(p: &LaurentPoly) -> Option<QIntFactors> {
    let mut rest = p.clone();
    let mut ints = Vec::new();
    let span = rest.high_exp()? - rest.low_exp()?;
    let mut k = span / 2 + 1;
    while k >= 2 {
        let qk = qnum::q_int(k);
        let mut m = 0;
        while rest.high_exp()? - rest.low_exp()? >= 2 * (k - 1) {
            match rest.div_exact(&qk) {
                Some(r) => {
                    rest = r;
                    m += 1;
                }
                None => break,
            }
        }
        if m > 0 {
            ints.push((k, m));
        }
        k -= 1;
    }
    let e = rest.low_exp()?;
    (rest.high_exp()? == e).then(|| QIntFactors {
        unit: rest.coeff(e),
        q_exp: e,
        ints,
    })
}

fn q_int_product(ints: &[(i64, u32)]) -> Vec<String> {
    ints.iter()
        .rev()
        .map(|&(k, m)| if m == 1 { format!("[{k}]") } else { format!("[{k}]^{m}") })
        .collect()
}

/// Writes a symbolic scalar as `±c·q^e·[k]...` over a similar product when
/// numerator and denominator both factor into q-integers; `None` otherwise.
fn q_int_form(r: &RationalFunction) -> Option<String> {
    let n = factor_q_ints(&r.numerator())?;
    let d = factor_q_ints(&r.denominator())?;
    let unit = &n.unit / &d.unit;
    let e = n.q_exp - d.q_exp;
    let mut num_parts = Vec::new();
    let c = unit.abs();
    let num_ints = q_int_product(&n.ints);
    if !c.numer().is_one() || (num_ints.is_empty() && e == 0) {
        num_parts.push(c.numer().to_string());
    }
    if e != 0 {
        num_parts.push(if e == 1 { "q".to_string() } else { format!("q^{e}") });
    }
    num_parts.extend(num_ints);
    let mut den_parts = Vec::new();
    if !c.denom().is_one() {
        den_parts.push(c.denom().to_string());
    }
    den_parts.extend(q_int_product(&d.ints));
    let sign = if unit.is_negative() { "-" } else { "" };
    let num = num_parts.join("·");
    Some(match den_parts.len() {
        0 => format!("{sign}{num}"),
        1 => format!("{sign}{num}/{}", den_parts[0]),
        _ => format!("{sign}{num}/({})", den_parts.join("·")),
    })
}

/// Symbolic scalars print as products of q-integers when possible (e.g.
/// `1/[3]`, `[2]^2`) and fully expanded otherwise; numeric scalars print as
/// rationals.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Symbolic(r) => match q_int_form(r) {
                Some(s) => write!(f, "{s}"),
                None => write!(f, "{r}"),
            },
            Scalar::Numeric { value, .. } => write!(f, "{}", format_rational(value)),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Symbolic(r) => write!(f, "Symbolic({r})"),
            Scalar::Numeric { value, q0 } => {
                write!(f, "Numeric({} at q={})", format_rational(value), format_rational(q0))
            }
        }
    }
}
