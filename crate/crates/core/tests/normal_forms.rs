use std::sync::Arc;

use proptest::prelude::*;
use qserre::qarith::{Field, Scalar};
use qserre::rewrite::{expand_xyx, Reducer, SpanBasis};
use qserre::words::{Letter, NCPolynomial, Word};

fn sym() -> Field {
    Field::symbolic()
}

fn reducer() -> Arc<Reducer> {
    Reducer::shared(&sym())
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 0..=max)
        .prop_map(|v| Word::from_letters(v.into_iter().map(|b| if b { Letter::Y } else { Letter::X })))
}

fn coeff() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 0i64..=3, -2i64..=2).prop_map(|(c, k, e)| {
        let f = sym();
        &(&f.integer(c) * &f.q_int(k)) + &f.q_pow(e)
    })
}

fn poly(max_len: usize) -> impl Strategy<Value = NCPolynomial> {
    prop::collection::vec((word(max_len), coeff()), 0..4).prop_map(|terms| {
        let f = sym();
        let mut p = NCPolynomial::zero(&f);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    })
}

#[test]
fn expansion_identity_sweep() {
    let f = sym();
    let r = reducer();
    for k in 1..=2 {
        for n in 2 * k + 1..=7 {
            for i in 0..=n {
                let lhs = NCPolynomial::from_word(&f, Word::from_runs(Letter::X, &[i, k, n - i]));
                let diff = &lhs - &expand_xyx(&f, i, k, n).unwrap();
                assert!(r.normal_form(&diff).unwrap().is_zero(), "(i, r, n) = ({i}, {k}, {n})");
            }
        }
    }
}

#[test]
fn normal_forms_span_exactly_the_irreducible_words() {
    // the words of length n span the degree-n part, and the irreducible
    // words are a basis of it, so their counts must agree
    let f = sym();
    let r = reducer();
    for n in 0..=8 {
        let mut basis = SpanBasis::new(&f);
        let mut support = std::collections::BTreeSet::new();
        for w in Word::all_of_length(n) {
            let nf = r.normal_form_word(&w).unwrap();
            support.extend(nf.support().cloned());
            basis.insert(&nf);
        }
        assert!(support.iter().all(Word::is_irreducible));
        let irreducible = Word::all_of_length(n).filter(Word::is_irreducible).count();
        assert_eq!(support.len(), irreducible, "n = {n}");
        assert_eq!(basis.rank(), irreducible, "n = {n}");
    }
}

#[test]
fn reversal_does_not_commute_with_reduction() {
    let r = reducer();
    let w: Word = "x^2yx".parse().unwrap();
    let nf = r.normal_form_word(&w).unwrap();
    assert_eq!(nf.to_string(), "x^2·y·x");
    let mirrored = r.normal_form(&nf.sigma1()).unwrap();
    assert_ne!(mirrored, nf.sigma1());
    // but the ideal is stable, so both sides agree after reducing again
    assert_eq!(r.normal_form(&nf.sigma1()).unwrap(), r.normal_form(&mirrored).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn idempotent(p in poly(9)) {
        let r = reducer();
        let nf = r.normal_form(&p).unwrap();
        prop_assert_eq!(r.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(nf.support().all(Word::is_irreducible));
    }

    #[test]
    fn letter_swap_equivariant(p in poly(9)) {
        let r = reducer();
        prop_assert_eq!(r.normal_form(&p.sigma0()).unwrap(), r.normal_form(&p).unwrap().sigma0());
    }

    #[test]
    fn linear(p in poly(8), q in poly(8), a in coeff(), b in coeff()) {
        let r = reducer();
        let lhs = r.normal_form(&(&p.scale(&a) + &q.scale(&b))).unwrap();
        let rhs = &r.normal_form(&p).unwrap().scale(&a) + &r.normal_form(&q).unwrap().scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn congruence(u in word(3), w in word(6), v in word(3)) {
        let r = reducer();
        let whole = r.normal_form_word(&u.concat(&w).concat(&v)).unwrap();
        let inner = r.normal_form_word(&w).unwrap().sandwich(&u, &v);
        prop_assert_eq!((*whole).clone(), r.normal_form(&inner).unwrap());
    }

    #[test]
    fn numeric_mode_specializes(w in word(9)) {
        let q0 = qserre::qarith::rational::int(2);
        let num = Field::numeric(q0.clone()).unwrap();
        let s = reducer().normal_form_word(&w).unwrap();
        let z = Reducer::shared(&num).normal_form_word(&w).unwrap();
        let spec = s.map_coeffs(&num, |c| qserre::qarith::specialize(c, &q0).unwrap());
        prop_assert_eq!(spec, (*z).clone());
    }
}
