use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::qarith::{format_rational, Rational};

/// Power series in `v` truncated after degree `order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, Rational::one())
    }

    /// `c v^k`, dropped if `k` exceeds the order.
    pub fn monomial(order: usize, k: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(order: usize, coeffs: &[Rational]) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    pub fn from_integers(order: usize, coeffs: &[i64]) -> Self {
        let c: Vec<Rational> = coeffs.iter().map(|&n| Rational::from_integer(n.into())).collect();
        Self::from_coeffs(order, &c)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Multiplicative inverse; `None` unless the constant term is nonzero.
    pub fn inverse(&self) -> Option<PowerSeries> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = c0.recip();
        for k in 1..=n {
            let mut s = Rational::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &out.coeffs[k - j];
            }
            out.coeffs[k] = -s / &c0;
        }
        Some(out)
    }

    /// `1 - v^k`.
    pub fn one_minus_power(order: usize, k: usize) -> Self {
        &Self::one(order) - &Self::monomial(order, k, Rational::one())
    }

    /// Integer coefficients, when all are integers.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }
}

fn binop(a: &PowerSeries, b: &PowerSeries) -> usize {
    a.order().min(b.order())
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = binop(self, rhs);
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = binop(self, rhs);
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = binop(self, rhs);
        let mut out = PowerSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

/// Nonzero terms in ascending degree, e.g. `1 - 2*v + 2*v^4`.
impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let body = match k {
                0 => format_rational(&a),
                _ if a.is_one() => String::new(),
                _ => format!("{}*", format_rational(&a)),
            };
            match k {
                0 => write!(f, "{body}")?,
                1 => write!(f, "{body}v")?,
                _ => write!(f, "{body}v^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(v^{})", self.order() + 1)
    }
}
