//! Exact computer algebra for the positive part of `U_q(sl2-hat)`: the free
//! algebra on `x, y` modulo the q-Serre relations, its irreducible-word
//! basis, and the tridiagonal pairs whose raising and lowering maps realize
//! it.

pub mod qarith;
pub mod words;
pub mod rewrite;
pub mod hilbert;
pub mod tdpair;
