use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::qarith::{format_rational, Rational};
use crate::words::{random_word, Letter, Word};

use super::analysis::SplitDecomposition;
use super::matrix::{rank_of, ExactMatrix, Vector};
use super::poly::{minimal_polynomial, rational_roots};
use super::TdError;

/// `L^(i_1) R^(i_2) ... R^(i_n) v` for `0 <= i_1 < ... < i_n <= d`, `n` even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningVector {
    pub exponents: Vec<usize>,
    pub label: String,
    /// `Σ_h i_h (-1)^h`
    pub index: i64,
    pub vector: Vector,
}

fn power_label(letter: char, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => letter.to_string(),
        _ => format!("{letter}^{k}"),
    }
}

pub fn label(exponents: &[usize]) -> String {
    let mut s: String = exponents
        .iter()
        .enumerate()
        .map(|(h, &k)| power_label(if h % 2 == 0 { 'L' } else { 'R' }, k))
        .collect();
    s.push('v');
    s
}

pub fn level_index(exponents: &[usize]) -> i64 {
    exponents
        .iter()
        .enumerate()
        .map(|(h, &k)| if h % 2 == 0 { -(k as i64) } else { k as i64 })
        .sum()
}

/// Even-size increasing sequences in `0..=d`, by size and then
/// lexicographically.
pub fn index_sequences(d: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u64..1 << (d + 1))
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|m| (0..=d).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn check_seed(sd: &SplitDecomposition, v: &[Rational]) -> Result<(), TdError> {
    if v.len() != sd.dim() {
        return Err(TdError::Domain(format!("vector has length {} not {}", v.len(), sd.dim())));
    }
    if v.iter().all(Zero::is_zero) {
        return Err(TdError::Domain("v must be nonzero".into()));
    }
    if !sd.u[0].contains(v) {
        return Err(TdError::Domain("v must lie in U_0".into()));
    }
    Ok(())
}

pub fn spanning_vectors(sd: &SplitDecomposition, v: &[Rational]) -> Result<Vec<SpanningVector>, TdError> {
    check_seed(sd, v)?;
    Ok(index_sequences(sd.d)
        .into_iter()
        .map(|exps| {
            let mut w = v.to_vec();
            for (h, &k) in exps.iter().enumerate().rev() {
                let m = if h % 2 == 0 { &sd.l } else { &sd.r };
                for _ in 0..k {
                    w = m.apply(&w);
                }
            }
            SpanningVector {
                label: label(&exps),
                index: level_index(&exps),
                exponents: exps,
                vector: w,
            }
        })
        .collect())
}

/// Rank certificates for a spanning family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    pub dim: usize,
    pub count: usize,
    pub rank: usize,
    pub labels: Vec<(String, i64)>,
    /// rank of the index-`i` subfamily, for `0 <= i <= d`
    pub level_ranks: Vec<usize>,
    pub level_dims: Vec<usize>,
    /// every index lies in `0..=d` and each vector lies in its `U_i`
    pub membership_ok: bool,
}

impl SpanReport {
    pub fn spans_v(&self) -> bool {
        self.rank == self.dim
    }

    pub fn levels_span(&self) -> bool {
        self.level_ranks == self.level_dims
    }

    pub fn all(&self) -> bool {
        self.spans_v() && self.levels_span() && self.membership_ok
    }

    pub fn to_json(&self) -> Value {
        json!({
            "count": self.count,
            "rank": self.rank,
            "dim": self.dim,
            "vectors": self.labels.iter().map(|(l, i)| json!({"label": l, "level": i})).collect::<Vec<_>>(),
            "level_ranks": self.level_ranks,
            "level_dims": self.level_dims,
            "membership": self.membership_ok,
            "spans": self.spans_v(),
            "levels_span": self.levels_span(),
        })
    }
}

pub fn span_report(sd: &SplitDecomposition, v: &[Rational]) -> Result<SpanReport, TdError> {
    let family = spanning_vectors(sd, v)?;
    let d = sd.d as i64;
    let membership_ok = family
        .iter()
        .all(|s| (0..=d).contains(&s.index) && sd.u[s.index as usize].contains(&s.vector));
    let vectors: Vec<Vector> = family.iter().map(|s| s.vector.clone()).collect();
    let level_ranks = (0..=d)
        .map(|i| {
            let sub: Vec<Vector> = family.iter().filter(|s| s.index == i).map(|s| s.vector.clone()).collect();
            rank_of(&sub)
        })
        .collect();
    Ok(SpanReport {
        dim: sd.dim(),
        count: family.len(),
        rank: rank_of(&vectors),
        labels: family.iter().map(|s| (s.label.clone(), s.index)).collect(),
        level_ranks,
        level_dims: sd.shape(),
        membership_ok,
    })
}

/// `L^i R^i`.
pub fn balanced_power(sd: &SplitDecomposition, i: usize) -> ExactMatrix {
    &sd.l.pow(i as u32) * &sd.r.pow(i as u32)
}

/// Coordinates of `M b_j` in the basis `b` of an `M`-invariant subspace.
fn restrict(m: &ExactMatrix, basis: &[Vector]) -> Result<ExactMatrix, TdError> {
    let n = m.nrows();
    let b = ExactMatrix::from_columns(n, basis);
    let k = basis.len();
    let mut cols = Vec::with_capacity(k);
    for v in basis {
        // solve b·c = m·v through the kernel of [b | -m v]
        let w = m.apply(v);
        let mut aug = b.columns();
        aug.push(w.iter().map(|x| -x.clone()).collect());
        let ker = ExactMatrix::from_columns(n, &aug).kernel();
        let Some(sol) = ker.iter().find(|s| !s[k].is_zero()) else {
            return Err(TdError::Invariant("U_0 is not invariant under L^i R^i".into()));
        };
        let inv = sol[k].recip();
        cols.push(sol[..k].iter().map(|x| x * &inv).collect());
    }
    Ok(ExactMatrix::from_columns(k, &cols))
}

/// A nonzero `v ∈ U_0` that is an eigenvector of every `L^i R^i`,
/// `0 <= i <= d`, found by refining common eigenspaces over Q.
pub fn common_eigenvector(sd: &SplitDecomposition) -> Result<Vector, TdError> {
    let u0 = &sd.u[0];
    if u0.dim() == 1 {
        return Ok(u0.basis()[0].clone());
    }
    let mut basis: Vec<Vector> = u0.basis().to_vec();
    for i in 1..=sd.d {
        let m = restrict(&balanced_power(sd, i), &basis)?;
        let Some(roots) = rational_roots(&minimal_polynomial(&m)) else {
            return Err(TdError::Unsupported("eigenvalue search exceeded its bound".into()));
        };
        let Some(lambda) = roots.first() else {
            return Err(TdError::Unsupported(format!(
                "L^{i} R^{i} has no rational eigenvalue on the current subspace of U_0"
            )));
        };
        let shifted = &m - &ExactMatrix::identity(m.nrows()).scale(lambda);
        let b = ExactMatrix::from_columns(sd.dim(), &basis);
        basis = shifted.kernel().iter().map(|c| b.apply(c)).collect();
    }
    Ok(basis.swap_remove(0))
}

/// A pseudorandom nonzero vector of `U_0`: a small-integer combination of
/// its basis.
pub fn arbitrary_vector(sd: &SplitDecomposition, seed: u64) -> Vector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = sd.u[0].basis();
    loop {
        let mut v = vec![Rational::zero(); sd.dim()];
        for b in basis {
            let c = Rational::from_integer(rng.gen_range(-5i64..=5).into());
            for (x, y) in v.iter_mut().zip(b) {
                *x += &c * y;
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Matrix of a word with `x -> R`, `y -> L`; the rightmost letter acts
/// first.
pub fn word_operator(sd: &SplitDecomposition, w: &Word) -> ExactMatrix {
    w.letters().fold(ExactMatrix::identity(sd.dim()), |acc, l| match l {
        Letter::X => &acc * &sd.r,
        Letter::Y => &acc * &sd.l,
    })
}

fn sample_words(seed: u64, count: usize, max_len: usize, keep: impl Fn(&Word) -> bool) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let len = rng.gen_range(1..=max_len);
        let w = random_word(&mut rng, len);
        if keep(&w) {
            out.push(w);
        }
    }
    out
}

/// Seeded nil words; each must annihilate `U_0`. Returns the first
/// offender.
pub fn check_nil_words(sd: &SplitDecomposition, count: usize, seed: u64) -> Option<Word> {
    let words = sample_words(seed, count, 2 * sd.d + 4, Word::is_nil);
    words.into_iter().find(|w| {
        let m = word_operator(sd, w);
        sd.u[0].basis().iter().any(|b| m.apply(b).iter().any(|x| !x.is_zero()))
    })
}

/// Seeded balanced words; each must leave every `U_i` invariant.
pub fn check_balanced_words(sd: &SplitDecomposition, count: usize, seed: u64) -> Option<Word> {
    let words = sample_words(seed, count, 2 * sd.d + 4, |w| w.len() % 2 == 0 && w.is_balanced());
    words.into_iter().find(|w| {
        let m = word_operator(sd, w);
        sd.u.iter().any(|u| !u.contains_space(&u.image(&m)))
    })
}

/// `[L^i R^i, L^j R^j]` vanishes on `U_0` for `i, j <= d`.
pub fn balanced_powers_commute_on_u0(sd: &SplitDecomposition) -> bool {
    let ops: Vec<ExactMatrix> = (0..=sd.d).map(|i| balanced_power(sd, i)).collect();
    ops.iter().enumerate().all(|(i, a)| {
        ops[i + 1..].iter().all(|b| {
            let c = a.commutator(b);
            sd.u[0].basis().iter().all(|v| c.apply(v).iter().all(Zero::is_zero))
        })
    })
}

/// Sub-family of labels at each level, for display.
pub fn levels(report: &SpanReport, d: usize) -> Vec<Vec<String>> {
    (0..=d as i64)
        .map(|i| report.labels.iter().filter(|(_, k)| *k == i).map(|(l, _)| l.clone()).collect())
        .collect()
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rational::int;
    use crate::tdpair::{generate_leonard_type, split_decomposition, TDPairInstance};

    fn sd(d: usize) -> SplitDecomposition {
        split_decomposition(&generate_leonard_type(d, &int(2), &int(1), &int(1)).unwrap()).unwrap()
    }

    #[test]
    fn d3_family() {
        let s = sd(3);
        let v = common_eigenvector(&s).unwrap();
        let fam = spanning_vectors(&s, &v).unwrap();
        let labels: Vec<&str> = fam.iter().map(|f| f.label.as_str()).collect();
        assert_eq!(labels, ["v", "Rv", "R^2v", "R^3v", "LR^2v", "LR^3v", "L^2R^3v", "RL^2R^3v"]);
        let idx: Vec<i64> = fam.iter().map(|f| f.index).collect();
        assert_eq!(idx, [0, 1, 2, 3, 1, 2, 1, 2]);
        let rep = span_report(&s, &v).unwrap();
        assert_eq!((rep.count, rep.rank), (8, 4));
        assert_eq!(rep.level_ranks, vec![1, 1, 1, 1]);
        assert!(rep.all());
        assert_eq!(
            levels(&rep, 3),
            vec![
                vec!["v".to_string()],
                vec!["Rv".into(), "LR^2v".into(), "L^2R^3v".into()],
                vec!["R^2v".into(), "LR^3v".into(), "RL^2R^3v".into()],
                vec!["R^3v".into()],
            ]
        );
    }

    #[test]
    fn d5_rank() {
        let s = sd(5);
        let rep = span_report(&s, &common_eigenvector(&s).unwrap()).unwrap();
        assert_eq!((rep.count, rep.rank), (32, 6));
    }

    #[test]
    fn seed_vector_is_validated() {
        let s = sd(2);
        assert!(spanning_vectors(&s, &[int(0), int(0), int(0)]).is_err());
        assert!(spanning_vectors(&s, &[int(0), int(1), int(0)]).is_err());
        assert!(spanning_vectors(&s, &[int(1), int(0)]).is_err());
        let fam = spanning_vectors(&s, &[int(3), int(0), int(0)]).unwrap();
        assert_eq!((fam[0].label.as_str(), fam[0].index), ("v", 0));
    }

    #[test]
    fn index_sequences_count() {
        for d in 0..=8 {
            assert_eq!(index_sequences(d).len(), 1 << d);
        }
        assert_eq!(level_index(&[0, 2, 3, 5]), 4);
        assert_eq!(label(&[0, 1, 2, 3]), "RL^2R^3v");
    }

    #[test]
    fn word_checks_on_generators() {
        for d in 1..=4 {
            let s = sd(d);
            assert_eq!(check_nil_words(&s, 50, d as u64), None);
            assert_eq!(check_balanced_words(&s, 50, d as u64), None);
            assert!(balanced_powers_commute_on_u0(&s));
        }
    }

    #[test]
    fn arbitrary_vector_is_seeded_and_nonzero() {
        let s = sd(3);
        let v = arbitrary_vector(&s, 9);
        assert_eq!(v, arbitrary_vector(&s, 9));
        assert!(span_report(&s, &v).unwrap().all());
    }

    #[test]
    fn refinement_with_two_dimensional_u0() {
        // direct sum of two generators: reducible, but the decomposition
        // still exists and U_0 is a plane
        let g = generate_leonard_type(1, &int(2), &int(1), &int(1)).unwrap();
        let mut a = ExactMatrix::zeros(4, 4);
        let mut b = ExactMatrix::zeros(4, 4);
        for blk in [0, 2] {
            for i in 0..2 {
                for j in 0..2 {
                    a.set(blk + i, blk + j, g.a.get(i, j).clone());
                    b.set(blk + i, blk + j, g.astar.get(i, j).clone());
                }
            }
        }
        let inst = TDPairInstance::new(int(2), 1, a, b).unwrap();
        let s = split_decomposition(&inst).unwrap();
        assert_eq!(s.shape(), vec![2, 2]);
        let v = common_eigenvector(&s).unwrap();
        assert!(s.u[0].contains(&v));
        for i in 0..=1 {
            let w = balanced_power(&s, i).apply(&v);
            assert_eq!(rank_of(&[v.clone(), w]), 1);
        }
        let rep = span_report(&s, &v).unwrap();
        assert!(!rep.spans_v());
    }
}
