use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::qarith::Field;
use crate::words::{NCPolynomial, Word};

use super::expand::{expand_mirror, expand_yxy_mirror};
use super::site::{all_sites, find_site, RewriteSite, TerminationKey, ValleyCase};
use super::RewriteError;

/// Upper bound on rewriting steps per [`Reducer::normal_form`] call.
pub const STEP_CAP: usize = 1_000_000;

/// How a reducer picks among the valleys of a reducible word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SiteStrategy {
    Leftmost,
    /// A pseudorandom site determined by `(seed, index, word)`; one seed
    /// gives a family of distinct strategies indexed by `index`.
    Seeded { seed: u64, index: u64 },
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SiteStrategy {
    pub fn choose(&self, w: &Word) -> Option<RewriteSite> {
        match *self {
            SiteStrategy::Leftmost => find_site(w),
            SiteStrategy::Seeded { seed, index } => {
                let sites = all_sites(w);
                if sites.is_empty() {
                    return None;
                }
                let mut h = splitmix(seed ^ splitmix(index));
                h = splitmix(h ^ w.len() as u64);
                for l in w.letters() {
                    h = splitmix(h.rotate_left(1) ^ l as u64);
                }
                Some(sites[(h % sites.len() as u64) as usize])
            }
        }
    }
}

type ExpansionKey = (ValleyCase, usize, usize, usize);

/// Normal-form engine for one coefficient field.
///
/// Word normal forms are memoized per reducer; the cache is shared behind a
/// mutex which is never held across a recursive step, so a reducer can be
/// used from several threads at once.
pub struct Reducer {
    field: Field,
    strategy: SiteStrategy,
    memo: Mutex<HashMap<Word, Arc<NCPolynomial>>>,
    expansions: Arc<Mutex<HashMap<ExpansionKey, Arc<NCPolynomial>>>>,
}

impl Reducer {
    pub fn new(field: &Field) -> Self {
        Self::with_strategy(field, SiteStrategy::Leftmost)
    }

    pub fn with_strategy(field: &Field, strategy: SiteStrategy) -> Self {
        Reducer {
            field: field.clone(),
            strategy,
            memo: Mutex::new(HashMap::new()),
            expansions: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    /// Another reducer over the same field with a different strategy, sharing
    /// the expansion cache but not the normal-form memo.
    pub fn sibling(&self, strategy: SiteStrategy) -> Self {
        Reducer {
            field: self.field.clone(),
            strategy,
            memo: Mutex::new(HashMap::new()),
            expansions: self.expansions.clone(),
        }
    }

    /// Process-wide leftmost reducer for `field`.
    pub fn shared(field: &Field) -> Arc<Reducer> {
        static POOL: OnceLock<Mutex<HashMap<Field, Arc<Reducer>>>> = OnceLock::new();
        let pool = POOL.get_or_init(Default::default);
        pool.lock()
            .unwrap()
            .entry(field.clone())
            .or_insert_with(|| Arc::new(Reducer::new(field)))
            .clone()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn strategy(&self) -> SiteStrategy {
        self.strategy
    }

    /// Number of memoized word normal forms.
    pub fn cached_words(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    fn expansion(&self, case: ValleyCase, a: usize, b: usize, c: usize) -> Result<Arc<NCPolynomial>, RewriteError> {
        let key = (case, a, b, c);
        if let Some(p) = self.expansions.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let p = Arc::new(match case {
            ValleyCase::XValley => expand_mirror(&self.field, a, b, a + c)?,
            ValleyCase::YValley => expand_yxy_mirror(&self.field, a, b, a + c)?,
        });
        self.expansions.lock().unwrap().insert(key, p.clone());
        Ok(p)
    }

    /// Rewrites the valley block at `site` by the mirrored expansion,
    /// keeping the prefix and suffix. Every output word has a strictly
    /// smaller [`TerminationKey`] than `w`; this is asserted.
    pub fn reduce_step(&self, w: &Word, site: RewriteSite) -> Result<NCPolynomial, RewriteError> {
        if !site.is_valid_for(w) {
            return Err(RewriteError::InvalidSite {
                word: w.compact(),
                position: site.position,
            });
        }
        let (a, b, c, start) = site.block(&w.signature());
        let block = self.expansion(site.case, a, b, c)?;
        let prefix = w.slice(0, start);
        let suffix = w.slice(start + a + b + c, w.len());
        let out = block.sandwich(&prefix, &suffix);
        let key = TerminationKey::of(w);
        for u in out.support() {
            assert!(
                TerminationKey::of(u) < key,
                "rewriting of {} produced {} without decreasing the termination key",
                w.compact(),
                u.compact()
            );
        }
        Ok(out)
    }

    fn lookup(&self, w: &Word) -> Option<Arc<NCPolynomial>> {
        self.memo.lock().unwrap().get(w).cloned()
    }

    fn store(&self, w: Word, p: NCPolynomial) {
        self.memo.lock().unwrap().insert(w, Arc::new(p));
    }

    /// Normal form of a single word.
    pub fn normal_form_word(&self, w: &Word) -> Result<Arc<NCPolynomial>, RewriteError> {
        let mut steps = 0;
        self.word_nf(w, &mut steps)
    }

    fn word_nf(&self, w: &Word, steps: &mut usize) -> Result<Arc<NCPolynomial>, RewriteError> {
        if let Some(p) = self.lookup(w) {
            return Ok(p);
        }
        let mut stack = vec![w.clone()];
        let mut pending: HashMap<Word, NCPolynomial> = HashMap::new();
        while let Some(top) = stack.last().cloned() {
            if self.lookup(&top).is_some() {
                stack.pop();
                continue;
            }
            if !pending.contains_key(&top) {
                let Some(site) = self.strategy.choose(&top) else {
                    self.store(top.clone(), NCPolynomial::from_word(&self.field, top));
                    stack.pop();
                    continue;
                };
                *steps += 1;
                if *steps > STEP_CAP {
                    return Err(RewriteError::StepCapExceeded(STEP_CAP));
                }
                let out = self.reduce_step(&top, site)?;
                pending.insert(top.clone(), out);
            }
            let out = &pending[&top];
            let missing: Vec<Word> = out
                .support()
                .filter(|u| self.lookup(u).is_none())
                .cloned()
                .collect();
            if missing.is_empty() {
                let out = pending.remove(&top).expect("pending entry");
                let mut acc = NCPolynomial::zero(&self.field);
                for (u, c) in out.terms() {
                    acc.add_scaled(&self.lookup(u).expect("memoized"), c);
                }
                self.store(top, acc);
                stack.pop();
            } else {
                stack.extend(missing);
            }
        }
        Ok(self.lookup(w).expect("memoized"))
    }

    /// Reduces `p` to a combination of irreducible words equal to it in the
    /// quotient algebra.
    pub fn normal_form(&self, p: &NCPolynomial) -> Result<NCPolynomial, RewriteError> {
        if p.field() != &self.field {
            return Err(RewriteError::MixedFields);
        }
        let mut steps = 0;
        let mut acc = NCPolynomial::zero(&self.field);
        for (w, c) in p.terms() {
            let nf = self.word_nf(w, &mut steps)?;
            acc.add_scaled(&nf, c);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::expand::{expand_xyx, higher_serre, serre_relations};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn serre_relations_vanish() {
        let f = Field::symbolic();
        let r = Reducer::new(&f);
        for p in serre_relations(&f) {
            assert!(r.normal_form(&p).unwrap().is_zero());
        }
    }

    #[test]
    fn reduce_xyx2() {
        let f = Field::symbolic();
        let r = Reducer::new(&f);
        let u = w("xyx^2");
        let site = find_site(&u).unwrap();
        let out = r.reduce_step(&u, site).unwrap();
        let third = f.q_int(3).inv().unwrap();
        assert_eq!(out.coeff(&w("xxxy")), -&third);
        assert_eq!(out.coeff(&w("xxyx")), f.one());
        assert_eq!(out.coeff(&w("yxxx")), third);
        assert_eq!(out.to_string(), "-(1/[3])·x^3·y + x^2·y·x + (1/[3])·y·x^3");
    }

    #[test]
    fn reduce_step_keeps_prefix_and_suffix() {
        let f = Field::symbolic();
        let r = Reducer::new(&f);
        let core = w("xyx^2");
        let bare = r.reduce_step(&core, find_site(&core).unwrap()).unwrap();
        // a suffix starting with x would merge into the right-hand run
        let u = w("y").concat(&core).concat(&w("y"));
        let site = find_site(&u).unwrap();
        assert_eq!(site.position, 2);
        assert_eq!(site.case, ValleyCase::XValley);
        assert_eq!(r.reduce_step(&u, site).unwrap(), bare.sandwich(&w("y"), &w("y")));
    }

    #[test]
    fn invalid_site_is_rejected() {
        let f = Field::symbolic();
        let r = Reducer::new(&f);
        let site = RewriteSite {
            position: 1,
            case: ValleyCase::XValley,
        };
        assert!(matches!(
            r.reduce_step(&w("x^2yx"), site),
            Err(RewriteError::InvalidSite { .. })
        ));
    }

    #[test]
    fn higher_order_relations_vanish() {
        let f = Field::symbolic();
        let r = Reducer::new(&f);
        for k in 1..=3 {
            let p = higher_serre(&f, k);
            assert!(r.normal_form(&p).unwrap().is_zero(), "r = {k}");
            assert!(r.normal_form(&p.sigma0()).unwrap().is_zero(), "dual r = {k}");
        }
    }

    #[test]
    fn expansion_identity_small() {
        let f = Field::symbolic();
        let r = Reducer::new(&f);
        for (i, k, n) in [(2, 1, 3), (3, 1, 5), (4, 2, 6), (1, 2, 5)] {
            let lhs = NCPolynomial::from_word(&f, Word::from_runs(crate::words::Letter::X, &[i, k, n - i]));
            let d = &lhs - &expand_xyx(&f, i, k, n).unwrap();
            assert!(r.normal_form(&d).unwrap().is_zero());
        }
    }

    #[test]
    fn irreducible_words_are_fixed() {
        let f = Field::symbolic();
        let r = Reducer::new(&f);
        for u in Word::all_of_length(6).filter(Word::is_irreducible) {
            let p = NCPolynomial::from_word(&f, u);
            assert_eq!(r.normal_form(&p).unwrap(), p);
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let r = Reducer::new(&Field::symbolic());
        let num = Field::numeric(crate::qarith::rational::int(2)).unwrap();
        let p = NCPolynomial::from_word(&num, w("xyxx"));
        assert_eq!(r.normal_form(&p), Err(RewriteError::MixedFields));
    }
}
