use std::cmp::Ordering;

use crate::words::{Letter, Signature, Word};

/// Which letter forms the valley run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValleyCase {
    /// A `y`-run flanked by `x`-runs: `x^a y^b x^c`.
    XValley,
    /// An `x`-run flanked by `y`-runs: `y^a x^b y^c`.
    YValley,
}

/// A valley `λ_{s-1} >= λ_s < λ_{s+1}` in the signature of a word.
/// `position` is the 0-based index of the valley run, so
/// `1 <= position <= runs - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RewriteSite {
    pub position: usize,
    pub case: ValleyCase,
}

impl RewriteSite {
    /// The `(a, b, c)` run lengths around the site and the letter offset
    /// where `a` starts.
    pub fn block(&self, sig: &Signature) -> (usize, usize, usize, usize) {
        let s = self.position;
        let start = sig.runs[..s - 1].iter().sum();
        (sig.runs[s - 1], sig.runs[s], sig.runs[s + 1], start)
    }

    pub fn is_valid_for(&self, w: &Word) -> bool {
        let sig = w.signature();
        let s = self.position;
        s >= 1
            && s + 1 < sig.runs.len()
            && sig.runs[s - 1] >= sig.runs[s]
            && sig.runs[s] < sig.runs[s + 1]
            && case_at(&sig, s) == self.case
    }
}

fn case_at(sig: &Signature, s: usize) -> ValleyCase {
    let lead = sig.leading.expect("nontrivial word");
    let valley_letter = if s % 2 == 0 { lead } else { lead.swap() };
    match valley_letter {
        Letter::Y => ValleyCase::XValley,
        Letter::X => ValleyCase::YValley,
    }
}

/// Every valley of `w`, left to right.
pub fn all_sites(w: &Word) -> Vec<RewriteSite> {
    let sig = w.signature();
    sig.valleys()
        .map(|s| RewriteSite {
            position: s,
            case: case_at(&sig, s),
        })
        .collect()
}

/// Leftmost valley; `None` exactly when `w` is irreducible.
pub fn find_site(w: &Word) -> Option<RewriteSite> {
    let sig = w.signature();
    let s = sig.valleys().next()?;
    Some(RewriteSite {
        position: s,
        case: case_at(&sig, s),
    })
}

/// Well-founded measure for the rewriting: the rearranged signature in
/// reverse lexicographic order, then the number of inversions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminationKey {
    pub rearranged_signature: Vec<usize>,
    pub inversion_count: usize,
}

impl TerminationKey {
    pub fn of(w: &Word) -> Self {
        let runs = w.signature().runs;
        let mut sorted = runs.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let inversions = (0..runs.len())
            .map(|i| runs[i + 1..].iter().filter(|&&r| runs[i] < r).count())
            .sum();
        TerminationKey {
            rearranged_signature: sorted,
            inversion_count: inversions,
        }
    }
}

/// Reverse lexicographic order on nonincreasing sequences: shorter is
/// smaller; equal lengths compare from the last entry backwards.
pub fn reverse_lex(a: &[usize], b: &[usize]) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

impl Ord for TerminationKey {
    fn cmp(&self, other: &Self) -> Ordering {
        reverse_lex(&self.rearranged_signature, &other.rearranged_signature)
            .then_with(|| self.inversion_count.cmp(&other.inversion_count))
    }
}

impl PartialOrd for TerminationKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn sites_on_examples() {
        assert_eq!(
            find_site(&w("xyx^2")),
            Some(RewriteSite { position: 1, case: ValleyCase::XValley })
        );
        assert_eq!(
            find_site(&w("yxy^2")),
            Some(RewriteSite { position: 1, case: ValleyCase::YValley })
        );
        assert_eq!(find_site(&w("x^2yx")), None);
        assert_eq!(find_site(&Word::empty()), None);
    }

    #[test]
    fn site_exists_iff_reducible() {
        for n in 0..=10 {
            for u in Word::all_of_length(n) {
                assert_eq!(find_site(&u).is_none(), u.is_irreducible());
                for s in all_sites(&u) {
                    assert!(s.is_valid_for(&u));
                }
            }
        }
    }

    #[test]
    fn block_offsets() {
        let u = w("y^3xy^2x^2yx^2");
        let sites = all_sites(&u);
        assert_eq!(sites.len(), 2);
        assert_eq!(sites[0].block(&u.signature()), (3, 1, 2, 0));
        assert_eq!(sites[0].case, ValleyCase::YValley);
        assert_eq!(sites[1].block(&u.signature()), (2, 1, 2, 6));
        assert_eq!(sites[1].case, ValleyCase::XValley);
    }

    #[test]
    fn key_order() {
        assert!(reverse_lex(&[3], &[1, 1]).is_lt());
        assert!(reverse_lex(&[3, 1], &[2, 2]).is_lt());
        assert!(reverse_lex(&[2, 2, 1], &[4, 1, 1]).is_gt());
        let k = TerminationKey::of(&w("xyx^2"));
        assert_eq!(k.rearranged_signature, vec![2, 1, 1]);
        assert_eq!(k.inversion_count, 2);
        assert!(TerminationKey::of(&w("x^2yx")) < k);
    }
}
