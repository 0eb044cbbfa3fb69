//! Dense univariate polynomials over the integers; the gcd engine behind
//! rational-function canonicalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree order; no trailing zeros; zero is `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct ZPoly(pub(crate) Vec<BigInt>);

impl ZPoly {
    pub(crate) fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    pub(crate) fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly(coeffs)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn lc(&self) -> &BigInt {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits off content and sign so that the primitive part has a positive
    /// leading coefficient: `self = unit * pp`.
    pub(crate) fn primitive_split(&self) -> (BigInt, ZPoly) {
        if self.is_zero() {
            return (BigInt::zero(), ZPoly(vec![]));
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        if c.is_one() {
            return (c, self.clone());
        }
        (c.clone(), ZPoly(self.0.iter().map(|x| x / &c).collect()))
    }

    pub(crate) fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly(vec![]);
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        ZPoly::new(out)
    }

    /// Exact quotient `self / divisor`; panics if the division is not exact.
    pub(crate) fn div_exact(&self, divisor: &ZPoly) -> ZPoly {
        if divisor.is_one() {
            return self.clone();
        }
        let dd = divisor.degree().expect("division by zero polynomial");
        let Some(nd) = self.degree() else {
            return ZPoly(vec![]);
        };
        assert!(nd >= dd, "inexact polynomial division");
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        let lc = divisor.lc();
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lc);
            assert!(r.is_zero(), "inexact polynomial division");
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        ZPoly::new(quot)
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &ZPoly) -> ZPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        let lc = divisor.lc();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dd;
            for c in rem.iter_mut() {
                *c *= lc;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[shift + j] -= &top * d;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        ZPoly(rem)
    }

    /// Primitive gcd with positive leading coefficient.
    pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        if a.is_zero() {
            return b.primitive_split().1;
        }
        if b.is_zero() {
            return a.primitive_split().1;
        }
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return ZPoly::one();
        }
        let (_, mut p) = a.primitive_split();
        let (_, mut r) = b.primitive_split();
        if p == r {
            return p;
        }
        if p.degree() < r.degree() {
            std::mem::swap(&mut p, &mut r);
        }
        while !r.is_zero() {
            if r.degree() == Some(0) {
                return ZPoly::one();
            }
            let rem = p.pseudo_rem(&r);
            p = r;
            r = rem.primitive_split().1;
        }
        p
    }
}
