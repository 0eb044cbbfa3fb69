use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::qarith::Field;
use crate::words::{random_word, NCPolynomial, Word};

use super::reducer::{Reducer, SiteStrategy};
use super::RewriteError;

/// Compares leftmost normal forms with those produced by seeded
/// site-selection strategies. Reducers are kept per strategy so repeated
/// probes reuse their memo tables.
pub struct ConfluenceProbe {
    leftmost: Arc<Reducer>,
    seeded: Mutex<HashMap<(u64, u64), Arc<Reducer>>>,
}

/// First disagreement found by a probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub word: Word,
    pub strategy: SiteStrategy,
    pub leftmost: NCPolynomial,
    pub other: NCPolynomial,
}

impl ConfluenceProbe {
    pub fn new(field: &Field) -> Self {
        Self::from_reducer(Arc::new(Reducer::new(field)))
    }

    pub fn from_reducer(leftmost: Arc<Reducer>) -> Self {
        ConfluenceProbe {
            leftmost,
            seeded: Mutex::new(HashMap::new()),
        }
    }

    fn strategy(&self, seed: u64, index: u64) -> Arc<Reducer> {
        self.seeded
            .lock()
            .unwrap()
            .entry((seed, index))
            .or_insert_with(|| Arc::new(self.leftmost.sibling(SiteStrategy::Seeded { seed, index })))
            .clone()
    }

    /// Reduces `w` with `trials` seeded strategies; `None` when all agree
    /// with the leftmost strategy.
    pub fn find_divergence(&self, w: &Word, trials: usize, seed: u64) -> Result<Option<Divergence>, RewriteError> {
        if trials < 2 {
            return Err(RewriteError::Domain("confluence probe needs at least 2 trials".into()));
        }
        let base = self.leftmost.normal_form_word(w)?;
        for k in 0..trials as u64 {
            let r = self.strategy(seed, k);
            let other = r.normal_form_word(w)?;
            if other != base {
                return Ok(Some(Divergence {
                    word: w.clone(),
                    strategy: r.strategy(),
                    leftmost: (*base).clone(),
                    other: (*other).clone(),
                }));
            }
        }
        Ok(None)
    }

    pub fn probe(&self, w: &Word, trials: usize, seed: u64) -> Result<bool, RewriteError> {
        Ok(self.find_divergence(w, trials, seed)?.is_none())
    }

    /// Probes `count` seeded random words with lengths in `1..=max_len`,
    /// stopping at the first divergence. Returns the number of words checked.
    pub fn random_sweep(
        &self,
        count: usize,
        max_len: usize,
        strategies: usize,
        seed: u64,
    ) -> Result<(usize, Option<Divergence>), RewriteError> {
        if max_len == 0 {
            return Err(RewriteError::Domain("maximum length must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..count {
            let len = rng.gen_range(1..=max_len);
            let w = random_word(&mut rng, len);
            if let Some(d) = self.find_divergence(&w, strategies, seed)? {
                return Ok((k + 1, Some(d)));
            }
        }
        Ok((count, None))
    }
}
