use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::qarith::Field;
use crate::words::{Letter, NCPolynomial, Word};

use super::reducer::Reducer;
use super::RewriteError;

/// Echelon basis of a subspace of the free algebra, built incrementally.
///
/// Each row is scaled to coefficient 1 at its pivot, the smallest word of
/// its support, and pivots are distinct. Rows are not inter-reduced.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    field: Field,
    rows: BTreeMap<Word, NCPolynomial>,
}

impl SpanBasis {
    pub fn new(field: &Field) -> Self {
        SpanBasis {
            field: field.clone(),
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every stored pivot.
    pub fn reduce(&self, v: &NCPolynomial) -> NCPolynomial {
        let mut v = v.clone();
        let mut cursor: Option<Word> = None;
        loop {
            let Some((w, c)) = v.next_term(cursor.as_ref()) else {
                return v;
            };
            let (w, c) = (w.clone(), c.clone());
            match self.rows.get(&w) {
                Some(row) => v.add_scaled(row, &-c),
                None => cursor = Some(w),
            }
        }
    }

    /// Adds `v`; returns whether it was independent of the current rows.
    pub fn insert(&mut self, v: &NCPolynomial) -> bool {
        let r = self.reduce(v);
        let Some(pivot) = r.leading_word().cloned() else {
            return false;
        };
        let inv = r.coeff(&pivot).inv().expect("nonzero pivot");
        self.rows.insert(pivot, r.scale(&inv));
        true
    }

    pub fn contains(&self, v: &NCPolynomial) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
}

/// Whether the normal form of `p` lies in the span of the normal forms of
/// `generators`.
pub fn in_span(reducer: &Reducer, p: &NCPolynomial, generators: &[NCPolynomial]) -> Result<bool, RewriteError> {
    let target = reducer.normal_form(p)?;
    if target.is_zero() {
        return Ok(true);
    }
    let mut basis = SpanBasis::new(reducer.field());
    for g in generators {
        basis.insert(&reducer.normal_form(g)?);
    }
    Ok(basis.contains(&target))
}

/// Compositions of `k` into positive parts; `[[]]` for `k = 0`.
fn compositions(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (1..=k)
        .flat_map(|first| {
            compositions(k - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn y_x(runs: &[usize]) -> Word {
    Word::from_runs(Letter::Y, runs)
}

/// Normalized spans of nil balanced words and of height-symmetric plus nil
/// balanced words, computed lazily per degree `(k, k)` and cached.
pub struct BalancedSpans {
    reducer: Arc<Reducer>,
    nil: Mutex<HashMap<usize, Arc<SpanBasis>>>,
    sym_nil: Mutex<HashMap<usize, Arc<SpanBasis>>>,
}

impl BalancedSpans {
    pub fn new(reducer: Arc<Reducer>) -> Self {
        BalancedSpans {
            reducer,
            nil: Mutex::new(HashMap::new()),
            sym_nil: Mutex::new(HashMap::new()),
        }
    }

    pub fn reducer(&self) -> &Reducer {
        &self.reducer
    }

    pub fn field(&self) -> &Field {
        self.reducer.field()
    }

    fn build(&self, words: impl Iterator<Item = Word>, start: SpanBasis) -> Result<SpanBasis, RewriteError> {
        let mut gens = Vec::new();
        for w in words {
            gens.push(self.reducer.normal_form_word(&w)?);
        }
        // irreducible generators are unit vectors; inserting sparse rows
        // first keeps later eliminations short
        gens.sort_by_key(|g| g.len());
        let mut basis = start;
        for g in gens {
            basis.insert(&g);
        }
        Ok(basis)
    }

    /// Span of the normal forms of nil words of bidegree `(k, k)`.
    pub fn nil_basis(&self, k: usize) -> Result<Arc<SpanBasis>, RewriteError> {
        if let Some(b) = self.nil.lock().unwrap().get(&k) {
            return Ok(b.clone());
        }
        let words = Word::all_of_bidegree(k, k).into_iter().filter(Word::is_nil);
        let b = Arc::new(self.build(words, SpanBasis::new(self.field()))?);
        self.nil.lock().unwrap().insert(k, b.clone());
        Ok(b)
    }

    /// Span of the normal forms of nil or height-symmetric words of
    /// bidegree `(k, k)`.
    pub fn sym_nil_basis(&self, k: usize) -> Result<Arc<SpanBasis>, RewriteError> {
        if let Some(b) = self.sym_nil.lock().unwrap().get(&k) {
            return Ok(b.clone());
        }
        let nil = (*self.nil_basis(k)?).clone();
        let words = Word::all_of_bidegree(k, k)
            .into_iter()
            .filter(Word::is_height_symmetric);
        let b = Arc::new(self.build(words, nil)?);
        self.sym_nil.lock().unwrap().insert(k, b.clone());
        Ok(b)
    }

    fn member(&self, p: &NCPolynomial, sym: bool) -> Result<bool, RewriteError> {
        let nf = self.reducer.normal_form(p)?;
        for (nx, ny) in nf.bidegrees() {
            if nx != ny {
                return Ok(false);
            }
            let part = nf.bidegree_part(nx, ny);
            let basis = if sym {
                self.sym_nil_basis(nx)?
            } else {
                self.nil_basis(nx)?
            };
            if !basis.contains(&part) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in the span of nil balanced words.
    pub fn in_nil_span(&self, p: &NCPolynomial) -> Result<bool, RewriteError> {
        self.member(p, false)
    }

    /// Membership in the span of height-symmetric words plus nil balanced
    /// words.
    pub fn in_sym_nil_span(&self, p: &NCPolynomial) -> Result<bool, RewriteError> {
        self.member(p, true)
    }

    fn check_balanced(i: usize, j: usize, m: usize, n: usize) -> Result<Word, RewriteError> {
        if i + n != j + m {
            return Err(RewriteError::Domain(format!(
                "y^{i} x^{m} y^{n} x^{j} is balanced only when i + n = j + m"
            )));
        }
        Ok(y_x(&[i, m, n, j]))
    }

    /// `y^i x^m y^n x^j` lies in the sym plus nil span.
    pub fn verify_sym_nil_membership(&self, i: usize, j: usize, m: usize, n: usize) -> Result<bool, RewriteError> {
        let b = Self::check_balanced(i, j, m, n)?;
        self.in_sym_nil_span(&NCPolynomial::from_word(self.field(), b))
    }

    /// `b - σ(b)` lies in the nil span for `b = y^i x^m y^n x^j`.
    pub fn verify_sigma_difference(&self, i: usize, j: usize, m: usize, n: usize) -> Result<bool, RewriteError> {
        let b = NCPolynomial::from_word(self.field(), Self::check_balanced(i, j, m, n)?);
        self.in_nil_span(&(&b - &b.sigma()))
    }

    /// `[y^i x^i, y^j x^j]` lies in the nil span.
    pub fn verify_commutator(&self, i: usize, j: usize) -> Result<bool, RewriteError> {
        if i == j {
            return Ok(true);
        }
        let f = self.field();
        let a = NCPolynomial::from_word(f, y_x(&[i, i]));
        let b = NCPolynomial::from_word(f, y_x(&[j, j]));
        self.in_nil_span(&(&(&a * &b) - &(&b * &a)))
    }

    /// Every commutator `[y^i x^i, y^j x^j]` with `i, j <= max_i`.
    pub fn verify_quotient_commutative(&self, max_i: usize) -> Result<bool, RewriteError> {
        for i in 0..=max_i {
            for j in i + 1..=max_i {
                if !self.verify_commutator(i, j)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every balanced word of bidegree `(k, k)` lies in the nil span plus
    /// the span of products `y^(i_1) x^(i_1) ... y^(i_s) x^(i_s)`.
    pub fn verify_quotient_generated(&self, k: usize) -> Result<bool, RewriteError> {
        let mut basis = (*self.nil_basis(k)?).clone();
        for parts in compositions(k) {
            let runs: Vec<usize> = parts.iter().flat_map(|&i| [i, i]).collect();
            basis.insert(&*self.reducer.normal_form_word(&y_x(&runs))?);
        }
        for w in Word::all_of_bidegree(k, k) {
            if !basis.contains(&*self.reducer.normal_form_word(&w)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `[b, b']` lies in the nil span for all balanced words `b, b'` of
    /// length at most `max_len`.
    pub fn verify_balanced_commutators(&self, max_len: usize) -> Result<bool, RewriteError> {
        let f = self.field();
        let balanced: Vec<NCPolynomial> = (0..=max_len / 2)
            .flat_map(|k| Word::all_of_bidegree(k, k))
            .map(|w| NCPolynomial::from_word(f, w))
            .collect();
        for (s, a) in balanced.iter().enumerate() {
            for b in &balanced[s + 1..] {
                if !self.in_nil_span(&(&(a * b) - &(b * a)))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
