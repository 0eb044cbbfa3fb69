//! Tridiagonal pairs of q-Serre type over the rationals: axiom checks,
//! standard orderings, split decompositions and the spanning families
//! built from the raising and lowering maps.

mod analysis;
mod instance;
pub mod matrix;
pub mod poly;
mod spanning;

pub use analysis::{
    analyze, detect_spectrum, eigenvalue_recurrence_holds, generated_algebra_dim, qserre_holds,
    split_decomposition, standard_orderings, tridiagonal_relation_holds, verify_axioms, verify_qserre,
    verify_tridiagonal_relations, AxiomReport, Check, ShapeReport, Spectrum, SplitDecomposition,
    StandardOrderings, TDPairAnalysis,
};
pub use instance::{generate_leonard_type, generator_coefficients, theta_sequence, theta_star_sequence, TDPairInstance};
pub use matrix::{ExactMatrix, Subspace, Vector};
pub use spanning::{
    arbitrary_vector, balanced_power, balanced_powers_commute_on_u0, check_balanced_words, check_nil_words,
    common_eigenvector, format_vector, index_sequences, label, level_index, levels, span_report,
    spanning_vectors, word_operator, SpanReport, SpanningVector,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TdError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error("not an instance of the q-Serre type: {0}")]
    NotTridiagonalPair(String),
    #[error("split decomposition invariant failed: {0}")]
    Invariant(String),
}
