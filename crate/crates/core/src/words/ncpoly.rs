use std::collections::btree_map::{BTreeMap, Entry};
use std::fmt;
use std::ops::Bound;
use std::ops::{Add, Mul, Neg, Sub};

use crate::qarith::{Field, Scalar};

use super::word::Word;

/// Finite linear combination of words with nonzero [`Scalar`] coefficients,
/// i.e. an element of the free algebra on `x, y`.
///
/// Terms are kept in the canonical word order. All coefficients belong to
/// one [`Field`], carried by the polynomial so that constants and the zero
/// polynomial know where they live.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPolynomial {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPolynomial {
    pub fn zero(field: &Field) -> Self {
        NCPolynomial {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_word(field, Word::empty())
    }

    pub fn from_word(field: &Field, w: Word) -> Self {
        Self::monomial(w, field.one())
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = Self::zero(&c.field());
        p.add_term(w, c);
        p
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(field: &Field, terms: I) -> Self {
        let mut p = Self::zero(field);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·w`, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        assert!(
            c.field() == self.field,
            "coefficient field does not match polynomial field"
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &NCPolynomial, c: &Scalar) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), c * d);
        }
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// First term whose word is strictly greater than `after`, or the first
    /// term overall when `after` is `None`.
    pub fn next_term(&self, after: Option<&Word>) -> Option<(&Word, &Scalar)> {
        match after {
            None => self.terms.iter().next(),
            Some(w) => self.terms.range((Bound::Excluded(w), Bound::Unbounded)).next(),
        }
    }

    /// Smallest word in the support.
    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn scale(&self, c: &Scalar) -> NCPolynomial {
        let mut p = Self::zero(&self.field);
        if c.is_zero() {
            return p;
        }
        for (w, d) in &self.terms {
            p.terms.insert(w.clone(), c * d);
        }
        p
    }

    /// `u·self·v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> NCPolynomial {
        let mut p = Self::zero(&self.field);
        for (w, c) in &self.terms {
            p.add_term(u.concat(w).concat(v), c.clone());
        }
        p
    }

    pub fn pow(&self, k: u32) -> NCPolynomial {
        (0..k).fold(Self::one(&self.field), |acc, _| &acc * self)
    }

    /// Maximum word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Component of total degree `n`.
    pub fn homogeneous_part(&self, n: usize) -> NCPolynomial {
        self.filter(|w| w.len() == n)
    }

    /// Component of bidegree `(x count, y count)`.
    pub fn bidegree_part(&self, nx: usize, ny: usize) -> NCPolynomial {
        self.filter(|w| w.bidegree() == (nx, ny))
    }

    /// Bidegrees occurring in the support.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.terms.keys().map(Word::bidegree).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn filter<F: Fn(&Word) -> bool>(&self, keep: F) -> NCPolynomial {
        NCPolynomial {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a length-preserving word map to every term.
    pub fn map_words<F: Fn(&Word) -> Word>(&self, f: F) -> NCPolynomial {
        Self::from_terms(&self.field, self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// Letter swap `x <-> y`, an algebra automorphism.
    pub fn sigma0(&self) -> NCPolynomial {
        self.map_words(Word::swap_letters)
    }

    /// Word reversal, an antiautomorphism fixing `x` and `y`.
    pub fn sigma1(&self) -> NCPolynomial {
        self.map_words(Word::reversed)
    }

    /// `σ0 σ1`.
    pub fn sigma(&self) -> NCPolynomial {
        self.map_words(|w| w.reversed().swap_letters())
    }

    /// Maps every coefficient into another field.
    pub fn map_coeffs<F>(&self, field: &Field, f: F) -> NCPolynomial
    where
        F: Fn(&Scalar) -> Scalar,
    {
        Self::from_terms(field, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Like [`fmt::Display`], but symbolic coefficients are fully expanded
    /// instead of printed as q-integer products.
    pub fn to_expanded_string(&self) -> String {
        self.render(|c| c.expanded())
    }

    fn render<F: Fn(&Scalar) -> String>(&self, coeff: F) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let body = coeff(&abs);
            let atomic = !body.contains(['+', ' ', '/', '·']) && !body.chars().skip(1).any(|ch| ch == '-');
            let body = if atomic { body } else { format!("({body})") };
            if w.is_empty() {
                out.push_str(&body);
            } else if abs.is_one() {
                out.push_str(&w.to_string());
            } else {
                out.push_str(&body);
                out.push('·');
                out.push_str(&w.to_string());
            }
        }
        out
    }
}

/// Canonical text: terms in word order, coefficients in q-integer form
/// where possible, e.g. `-(1/[3])·x^3·y + x^2·y·x + (1/[3])·y·x^3`.
impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(|c| c.to_string()))
    }
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPolynomial[{}]({})", self.field, self)
    }
}

impl Add for &NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut p = self.clone();
        for (w, c) in &rhs.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }
}

impl Sub for &NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut p = self.clone();
        for (w, c) in &rhs.terms {
            p.add_term(w.clone(), -c);
        }
        p
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        NCPolynomial {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Concatenation product extended bilinearly.
impl Mul for &NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        assert!(self.field == rhs.field, "polynomials over different fields");
        let mut p = NCPolynomial::zero(&self.field);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                p.add_term(u.concat(v), a * b);
            }
        }
        p
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for NCPolynomial {
            type Output = NCPolynomial;
            fn $m(self, rhs: NCPolynomial) -> NCPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        -&self
    }
}
