//! Words over `{x, y}`, their gradings and classification, and
//! noncommutative polynomials.

mod ncpoly;
mod word;

pub use ncpoly::NCPolynomial;
pub use word::{Letter, Signature, Word};

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("parse error: {0}")]
    Parse(String),
}

/// Uniform random word of length `len`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| if rng.gen::<bool>() { Letter::Y } else { Letter::X }))
}
