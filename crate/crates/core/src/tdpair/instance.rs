use serde::{Deserialize, Serialize};

use crate::qarith::rational::{is_admissible_q, pow};
use crate::qarith::{format_rational, parse_rational, q_int, Rational};

use super::matrix::ExactMatrix;
use super::TdError;

/// A pair of square matrices with the parameter `q0` and the diameter `d`
/// they are claimed to realize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TDPairInstance {
    pub q0: Rational,
    pub d: usize,
    pub a: ExactMatrix,
    pub astar: ExactMatrix,
}

#[derive(Serialize, Deserialize)]
struct InstanceFile {
    q: String,
    d: usize,
    #[serde(rename = "A")]
    a: Vec<Vec<String>>,
    #[serde(rename = "Astar")]
    astar: Vec<Vec<String>>,
}

fn to_strings(m: &ExactMatrix) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

fn from_strings(name: &str, rows: &[Vec<String>]) -> Result<ExactMatrix, TdError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| TdError::Parse(format!("{name}: {e}")))?;
    ExactMatrix::from_rows(parsed).ok_or_else(|| TdError::Parse(format!("{name}: ragged rows")))
}

impl TDPairInstance {
    pub fn new(q0: Rational, d: usize, a: ExactMatrix, astar: ExactMatrix) -> Result<Self, TdError> {
        if !is_admissible_q(&q0) {
            return Err(TdError::Domain(format!(
                "q = {} must be nonzero and not +-1",
                format_rational(&q0)
            )));
        }
        if !a.is_square() || !astar.is_square() || a.nrows() != astar.nrows() {
            return Err(TdError::Domain("A and Astar must be square of equal size".into()));
        }
        if a.nrows() < d + 1 {
            return Err(TdError::Domain(format!(
                "dimension {} is smaller than d + 1 = {}",
                a.nrows(),
                d + 1
            )));
        }
        Ok(TDPairInstance { q0, d, a, astar })
    }

    pub fn dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn to_json(&self) -> String {
        let f = InstanceFile {
            q: format_rational(&self.q0),
            d: self.d,
            a: to_strings(&self.a),
            astar: to_strings(&self.astar),
        };
        serde_json::to_string_pretty(&f).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, TdError> {
        let f: InstanceFile = serde_json::from_str(text).map_err(|e| TdError::Parse(e.to_string()))?;
        let q0 = parse_rational(&f.q).map_err(|e| TdError::Parse(format!("q: {e}")))?;
        Self::new(q0, f.d, from_strings("A", &f.a)?, from_strings("Astar", &f.astar)?)
    }
}

/// `c_i = [i][d+1-i]` at `q0` for `0 <= i <= d+1`; `c_0 = c_{d+1} = 0`.
pub fn generator_coefficients(d: usize, q0: &Rational) -> Vec<Rational> {
    (0..=d as i64 + 1)
        .map(|i| &q_int(i).eval(q0) * &q_int(d as i64 + 1 - i).eval(q0))
        .collect()
}

/// `a q0^(2i-d)` for `0 <= i <= d`.
pub fn theta_sequence(d: usize, q0: &Rational, a: &Rational) -> Vec<Rational> {
    (0..=d as i64).map(|i| a * &pow(q0, 2 * i - d as i64)).collect()
}

/// `a* q0^(d-2i)` for `0 <= i <= d`.
pub fn theta_star_sequence(d: usize, q0: &Rational, a_star: &Rational) -> Vec<Rational> {
    (0..=d as i64).map(|i| a_star * &pow(q0, d as i64 - 2 * i)).collect()
}

/// The pair on `Q^(d+1)` with `R e_i = e_(i+1)`, `L e_i = c_i e_(i-1)`,
/// `A = R + diag(θ)` and `A* = L + diag(θ*)`.
pub fn generate_leonard_type(d: usize, q0: &Rational, a: &Rational, a_star: &Rational) -> Result<TDPairInstance, TdError> {
    if d == 0 {
        return Err(TdError::Domain("generator needs d >= 1".into()));
    }
    if num_traits::Zero::is_zero(a) || num_traits::Zero::is_zero(a_star) {
        return Err(TdError::Domain("a and a* must be nonzero".into()));
    }
    if !is_admissible_q(q0) {
        return Err(TdError::Domain(format!(
            "q = {} must be nonzero and not +-1",
            format_rational(q0)
        )));
    }
    let n = d + 1;
    let c = generator_coefficients(d, q0);
    let mut am = ExactMatrix::diagonal(&theta_sequence(d, q0, a));
    let mut asm = ExactMatrix::diagonal(&theta_star_sequence(d, q0, a_star));
    for i in 0..d {
        am.set(i + 1, i, Rational::from_integer(1.into()));
        asm.set(i, i + 1, c[i + 1].clone());
    }
    let _ = n;
    TDPairInstance::new(q0.clone(), d, am, asm)
}
