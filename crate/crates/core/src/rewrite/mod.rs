//! The quotient algebra: expansion formulas, rewriting to the
//! irreducible-word normal form, span membership in the balanced
//! subalgebra, and a confluence probe.

mod confluence;
mod expand;
mod reducer;
mod site;
mod span;

pub use confluence::ConfluenceProbe;
pub use expand::{expand_mirror, expand_xyx, expand_yxy, expand_yxy_mirror, higher_serre, serre_relations};
pub use reducer::{Reducer, SiteStrategy, STEP_CAP};
pub use site::{all_sites, find_site, reverse_lex, RewriteSite, TerminationKey, ValleyCase};
pub use span::{in_span, BalancedSpans, SpanBasis};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no valley at run {position} of {word}")]
    InvalidSite { word: String, position: usize },
    #[error("rewriting exceeded {0} steps")]
    StepCapExceeded(usize),
    #[error("polynomials over different coefficient fields")]
    MixedFields,
}
