use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::qarith::rational::{exact_root, pow};
use crate::qarith::{format_rational, q_int, Rational};

use super::instance::{theta_sequence, theta_star_sequence, TDPairInstance};
use super::matrix::{ExactMatrix, Subspace};
use super::poly::{eval, is_squarefree, minimal_polynomial};
use super::spanning::SpanReport;
use super::TdError;

/// Eigenvalues of one matrix in standard order, with their eigenspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub theta: Vec<Rational>,
    pub scale: Rational,
    pub eigenspaces: Vec<Subspace>,
}

/// Orders the eigenvalues of `m` as `scale * q0^(2i-d)` (`ascending`) or
/// `scale * q0^(d-2i)`. `Ok(None)` when `m` is not diagonalizable.
pub fn detect_spectrum(m: &ExactMatrix, q0: &Rational, ascending: bool) -> Result<Option<Spectrum>, TdError> {
    let mp = minimal_polynomial(m);
    if !is_squarefree(&mp) {
        return Ok(None);
    }
    let k = (mp.len() - 1) as u32;
    let d = k as usize - 1;
    // the constant term is (-1)^k times the product of the roots, which is scale^k
    let product = if k % 2 == 0 { mp[0].clone() } else { -mp[0].clone() };
    let Some(root) = exact_root(&product, k) else {
        return Err(TdError::Unsupported(format!(
            "the eigenvalue product {} has no rational {k}-th root",
            format_rational(&product)
        )));
    };
    for scale in [root.clone(), -root] {
        let theta = if ascending {
            theta_sequence(d, q0, &scale)
        } else {
            theta_star_sequence(d, q0, &scale)
        };
        if theta.iter().all(|t| eval(&mp, t).is_zero()) {
            let n = m.nrows();
            let eigenspaces: Vec<Subspace> = theta
                .iter()
                .map(|t| Subspace::kernel_of(&(m - &ExactMatrix::identity(n).scale(t))))
                .collect();
            if eigenspaces.iter().map(Subspace::dim).sum::<usize>() != n {
                return Ok(None);
            }
            return Ok(Some(Spectrum {
                theta,
                scale,
                eigenspaces,
            }));
        }
    }
    Err(TdError::NotTridiagonalPair(format!(
        "eigenvalues are not a geometric progression with ratio q0^{} over Q",
        if ascending { "2" } else { "-2" }
    )))
}

/// Standard orderings: `θ_i = a q0^(2i-d)` and `θ*_i = a* q0^(d-2i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardOrderings {
    pub theta: Vec<Rational>,
    pub theta_star: Vec<Rational>,
    pub a: Rational,
    pub a_star: Rational,
    pub eigenspaces: Vec<Subspace>,
    pub dual_eigenspaces: Vec<Subspace>,
}

fn beta(q0: &Rational) -> Rational {
    pow(q0, 2) + pow(q0, -2)
}

/// `θ_(i-1)^2 - β θ_(i-1) θ_i + θ_i^2 = 0` for every consecutive pair.
pub fn eigenvalue_recurrence_holds(theta: &[Rational], q0: &Rational) -> bool {
    let b = beta(q0);
    theta
        .windows(2)
        .all(|w| (&w[0] * &w[0] - &b * &w[0] * &w[1] + &w[1] * &w[1]).is_zero())
}

fn ordering_pair(inst: &TDPairInstance) -> Result<Option<(Spectrum, Spectrum)>, TdError> {
    let (Some(s), Some(t)) = (
        detect_spectrum(&inst.a, &inst.q0, true)?,
        detect_spectrum(&inst.astar, &inst.q0, false)?,
    ) else {
        return Ok(None);
    };
    for (name, sp) in [("A", &s), ("Astar", &t)] {
        if sp.theta.len() != inst.d + 1 {
            return Err(TdError::NotTridiagonalPair(format!(
                "{name} has {} eigenvalues but d = {}",
                sp.theta.len(),
                inst.d
            )));
        }
    }
    Ok(Some((s, t)))
}

pub fn standard_orderings(inst: &TDPairInstance) -> Result<StandardOrderings, TdError> {
    let Some((s, t)) = ordering_pair(inst)? else {
        return Err(TdError::NotTridiagonalPair("A or Astar is not diagonalizable over Q".into()));
    };
    if !eigenvalue_recurrence_holds(&s.theta, &inst.q0) || !eigenvalue_recurrence_holds(&t.theta, &inst.q0) {
        return Err(TdError::Invariant("theta_recurrence".into()));
    }
    Ok(StandardOrderings {
        theta: s.theta,
        theta_star: t.theta,
        a: s.scale,
        a_star: t.scale,
        eigenspaces: s.eigenspaces,
        dual_eigenspaces: t.eigenspaces,
    })
}

/// Outcome of the four defining conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    /// (i) both matrices diagonalizable over Q
    pub diagonalizable: bool,
    /// (ii) `A V*_i ⊆ V*_(i-1) + V*_i + V*_(i+1)`
    pub a_tridiagonal: bool,
    /// (iii) `A* V_i ⊆ V_(i-1) + V_i + V_(i+1)`
    pub astar_tridiagonal: bool,
    /// (iv) certified when the generated algebra is all of `End(V)`
    pub irreducible: bool,
    pub algebra_dim: usize,
    pub dim: usize,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.diagonalizable && self.a_tridiagonal && self.astar_tridiagonal && self.irreducible
    }

    pub fn as_array(&self) -> [bool; 4] {
        [self.diagonalizable, self.a_tridiagonal, self.astar_tridiagonal, self.irreducible]
    }

    /// Message for axiom (iv) when it is not certified.
    pub fn irreducibility_note(&self) -> Option<String> {
        (!self.irreducible).then(|| {
            format!(
                "reducible or undecided: generated algebra has dimension {} < {}",
                self.algebra_dim,
                self.dim * self.dim
            )
        })
    }
}

fn tridiagonal_on(m: &ExactMatrix, spaces: &[Subspace]) -> bool {
    let n = m.nrows();
    (0..spaces.len()).all(|i| {
        let lo = i.saturating_sub(1);
        let hi = (i + 1).min(spaces.len() - 1);
        let target = spaces[lo..=hi].iter().fold(Subspace::zero(n), |acc, s| acc.sum(s));
        target.contains_space(&spaces[i].image(m))
    })
}

/// Dimension of the unital algebra generated by `a` and `b`.
pub fn generated_algebra_dim(a: &ExactMatrix, b: &ExactMatrix) -> usize {
    let n = a.nrows();
    let mut span = Subspace::zero(n * n);
    let mut frontier = vec![ExactMatrix::identity(n)];
    span.insert(frontier[0].entries());
    while let Some(m) = frontier.pop() {
        for g in [a, b] {
            let p = g * &m;
            if span.insert(p.entries()) {
                frontier.push(p);
            }
        }
    }
    span.dim()
}

pub fn verify_axioms(inst: &TDPairInstance) -> Result<AxiomReport, TdError> {
    let n = inst.dim();
    let algebra_dim = generated_algebra_dim(&inst.a, &inst.astar);
    let mut report = AxiomReport {
        diagonalizable: false,
        a_tridiagonal: false,
        astar_tridiagonal: false,
        irreducible: algebra_dim == n * n,
        algebra_dim,
        dim: n,
    };
    if let Some((s, t)) = ordering_pair(inst)? {
        report.diagonalizable = true;
        report.a_tridiagonal = tridiagonal_on(&inst.a, &t.eigenspaces);
        report.astar_tridiagonal = tridiagonal_on(&inst.astar, &s.eigenspaces);
    }
    Ok(report)
}

/// Named boolean check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub ok: bool,
}

/// The decomposition `V = U_0 ⊕ ... ⊕ U_d` with its projections and the
/// raising and lowering maps.
#[derive(Clone, Debug)]
pub struct SplitDecomposition {
    pub q0: Rational,
    pub d: usize,
    pub u: Vec<Subspace>,
    pub f: Vec<ExactMatrix>,
    pub r: ExactMatrix,
    pub l: ExactMatrix,
    pub theta: Vec<Rational>,
    pub theta_star: Vec<Rational>,
    pub a: Rational,
    pub a_star: Rational,
    pub orderings: StandardOrderings,
    pub checks: Vec<Check>,
}

fn sum_of(spaces: &[Subspace], n: usize) -> Subspace {
    spaces.iter().fold(Subspace::zero(n), |acc, s| acc.sum(s))
}

fn shifted(m: &ExactMatrix, t: &Rational) -> ExactMatrix {
    m - &ExactMatrix::identity(m.nrows()).scale(t)
}

/// `U_i = (V*_0 + ... + V*_i) ∩ (V_i + ... + V_d)`; every listed invariant is
/// verified and the first failure is returned as an error.
pub fn split_decomposition(inst: &TDPairInstance) -> Result<SplitDecomposition, TdError> {
    let ord = standard_orderings(inst)?;
    let n = inst.dim();
    let d = inst.d;
    let u: Vec<Subspace> = (0..=d)
        .map(|i| sum_of(&ord.dual_eigenspaces[..=i], n).intersect(&sum_of(&ord.eigenspaces[i..], n)))
        .collect();
    let cols: Vec<Vec<Rational>> = u.iter().flat_map(|s| s.basis().iter().cloned()).collect();
    if cols.len() != n {
        return Err(TdError::Invariant(format!("vdec: dimensions of U_i sum to {} not {n}", cols.len())));
    }
    let p = ExactMatrix::from_columns(n, &cols);
    let Some(pinv) = p.inverse() else {
        return Err(TdError::Invariant("vdec: U_0 + ... + U_d is not direct".into()));
    };
    let mut f = Vec::with_capacity(d + 1);
    let mut offset = 0;
    for s in &u {
        let mut block = vec![Rational::zero(); n];
        for x in &mut block[offset..offset + s.dim()] {
            *x = Rational::one();
        }
        offset += s.dim();
        f.push(&(&p * &ExactMatrix::diagonal(&block)) * &pinv);
    }
    let diag = |th: &[Rational]| {
        th.iter()
            .zip(&f)
            .fold(ExactMatrix::zeros(n, n), |acc, (t, fi)| &acc + &fi.scale(t))
    };
    let r = &inst.a - &diag(&ord.theta);
    let l = &inst.astar - &diag(&ord.theta_star);
    let mut sd = SplitDecomposition {
        q0: inst.q0.clone(),
        d,
        u,
        f,
        r,
        l,
        theta: ord.theta.clone(),
        theta_star: ord.theta_star.clone(),
        a: ord.a.clone(),
        a_star: ord.a_star.clone(),
        orderings: ord,
        checks: Vec::new(),
    };
    sd.checks = sd.invariant_checks(inst);
    if let Some(c) = sd.checks.iter().find(|c| !c.ok) {
        return Err(TdError::Invariant(c.name.to_string()));
    }
    Ok(sd)
}

impl SplitDecomposition {
    pub fn dim(&self) -> usize {
        self.r.nrows()
    }

    /// `U_i`, or the zero space when `i` is out of range.
    fn level(&self, i: i64) -> Subspace {
        if i < 0 || i as usize > self.d {
            Subspace::zero(self.dim())
        } else {
            self.u[i as usize].clone()
        }
    }

    fn maps_levels(&self, m: &ExactMatrix, step: i64) -> bool {
        (0..=self.d as i64).all(|i| self.level(i + step).contains_space(&self.level(i).image(m)))
    }

    /// Every structural identity of the decomposition, by name.
    pub fn invariant_checks(&self, inst: &TDPairInstance) -> Vec<Check> {
        let n = self.dim();
        let d = self.d;
        let id = ExactMatrix::identity(n);
        let direct = self.u.iter().map(Subspace::dim).sum::<usize>() == n
            && sum_of(&self.u, n).dim() == n;
        let aonui = (0..=d).all(|i| {
            let img = self.u[i].image(&shifted(&inst.a, &self.theta[i]));
            self.level(i as i64 + 1).contains_space(&img)
        });
        let asonui = (0..=d).all(|i| {
            let img = self.u[i].image(&shifted(&inst.astar, &self.theta_star[i]));
            self.level(i as i64 - 1).contains_space(&img)
        });
        let orthogonal = (0..=d).all(|i| {
            (0..=d).all(|j| {
                let prod = &self.f[i] * &self.f[j];
                if i == j {
                    prod == self.f[i]
                } else {
                    prod.is_zero()
                }
            })
        });
        let total = self.f.iter().fold(ExactMatrix::zeros(n, n), |acc, x| &acc + x) == id;
        let images = (0..=d).all(|i| Subspace::column_space(&self.f[i]) == self.u[i]);
        let q0 = &self.q0;
        vec![
            Check { name: "direct_sum", ok: direct },
            Check { name: "a_raises_levels", ok: aonui },
            Check { name: "astar_lowers_levels", ok: asonui },
            Check { name: "projections_orthogonal", ok: orthogonal },
            Check { name: "projections_sum", ok: total },
            Check { name: "projection_images", ok: images },
            Check { name: "raising_map", ok: self.maps_levels(&self.r, 1) },
            Check { name: "lowering_map", ok: self.maps_levels(&self.l, -1) },
            Check { name: "nilpotent", ok: self.r.pow(d as u32 + 1).is_zero() && self.l.pow(d as u32 + 1).is_zero() },
            Check { name: "theta_progression", ok: self.theta == theta_sequence(d, q0, &self.a) },
            Check { name: "theta_star_progression", ok: self.theta_star == theta_star_sequence(d, q0, &self.a_star) },
            Check { name: "theta_recurrence", ok: eigenvalue_recurrence_holds(&self.theta, q0) },
            Check { name: "theta_star_recurrence", ok: eigenvalue_recurrence_holds(&self.theta_star, q0) },
        ]
    }

    /// The q-Serre relations for `(R, L)` and `(L, R)`.
    pub fn verify_qserre_rl(&self) -> (bool, bool) {
        (
            qserre_holds(&self.r, &self.l, &self.q0),
            qserre_holds(&self.l, &self.r, &self.q0),
        )
    }

    pub fn shape(&self) -> Vec<usize> {
        self.u.iter().map(Subspace::dim).collect()
    }

    pub fn shape_report(&self) -> ShapeReport {
        let rho = self.shape();
        let eig_dims = self.orderings.eigenspaces.iter().map(Subspace::dim).collect::<Vec<_>>();
        let dual_dims = self.orderings.dual_eigenspaces.iter().map(Subspace::dim).collect::<Vec<_>>();
        ShapeReport::new(rho.clone(), rho == eig_dims && rho == dual_dims)
    }
}

/// Shape vector with its symmetry, unimodality and binomial bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub rho: Vec<usize>,
    pub symmetric: bool,
    pub unimodal: bool,
    pub bound_ok: bool,
    /// `ρ_0 = C(d,0)` and `ρ_d = C(d,d)`
    pub bound_tight_at_ends: bool,
    /// `ρ_i = dim V_i = dim V*_i`
    pub eigenspace_dims_agree: bool,
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn is_unimodal(v: &[usize]) -> bool {
    let peak = v.windows(2).position(|w| w[1] < w[0]).unwrap_or(v.len().saturating_sub(1));
    v[..=peak].windows(2).all(|w| w[0] <= w[1]) && v[peak..].windows(2).all(|w| w[0] >= w[1])
}

impl ShapeReport {
    pub fn new(rho: Vec<usize>, eigenspace_dims_agree: bool) -> Self {
        let d = rho.len().saturating_sub(1);
        let symmetric = (0..rho.len()).all(|i| rho[i] == rho[d - i]);
        let bound_ok = rho.iter().enumerate().all(|(i, &r)| r as u128 <= binomial(d, i));
        let tight = rho.first() == Some(&1) && rho.last() == Some(&1);
        ShapeReport {
            unimodal: rho.is_empty() || is_unimodal(&rho),
            rho,
            symmetric,
            bound_ok,
            bound_tight_at_ends: tight,
            eigenspace_dims_agree,
        }
    }

    pub fn all(&self) -> bool {
        self.symmetric && self.unimodal && self.bound_ok && self.eigenspace_dims_agree
    }
}

/// `a^3 b - [3] a^2 b a + [3] a b a^2 - b a^3 = 0`.
pub fn qserre_holds(a: &ExactMatrix, b: &ExactMatrix, q0: &Rational) -> bool {
    let three = q_int(3).eval(q0);
    let a2 = a * a;
    let a3 = &a2 * a;
    let lhs = &(&(&a3 * b) - &(&(&a2 * b) * a).scale(&three)) + &(&(&(a * b) * &a2).scale(&three) - &(b * &a3));
    lhs.is_zero()
}

/// `[a, a^2 b - β a b a + b a^2] = 0` with `β = q0^2 + q0^-2`.
pub fn tridiagonal_relation_holds(a: &ExactMatrix, b: &ExactMatrix, q0: &Rational) -> bool {
    let inner = &(&(&(a * a) * b) - &(&(a * b) * a).scale(&beta(q0))) + &(&(b * a) * a);
    a.commutator(&inner).is_zero()
}

/// The q-Serre relations for `(A, A*)` and `(A*, A)`.
pub fn verify_qserre(inst: &TDPairInstance) -> (bool, bool) {
    (
        qserre_holds(&inst.a, &inst.astar, &inst.q0),
        qserre_holds(&inst.astar, &inst.a, &inst.q0),
    )
}

/// The tridiagonal relations for `(A, A*)` and `(A*, A)` with `β = q0^2 + q0^-2` and the other parameters zero.
pub fn verify_tridiagonal_relations(inst: &TDPairInstance) -> (bool, bool) {
    (
        tridiagonal_relation_holds(&inst.a, &inst.astar, &inst.q0),
        tridiagonal_relation_holds(&inst.astar, &inst.a, &inst.q0),
    )
}

/// Everything known about one instance.
#[derive(Clone, Debug)]
pub struct TDPairAnalysis {
    pub instance: TDPairInstance,
    pub axioms: AxiomReport,
    pub split: Option<SplitDecomposition>,
    pub shape: Option<ShapeReport>,
    pub qserre: (bool, bool),
    pub qserre_rl: Option<(bool, bool)>,
    pub tridiagonal: (bool, bool),
    pub spanning: Option<SpanReport>,
    /// Why the split decomposition was not computed.
    pub note: Option<String>,
}

pub fn analyze(inst: &TDPairInstance) -> Result<TDPairAnalysis, TdError> {
    let axioms = verify_axioms(inst)?;
    let qserre = verify_qserre(inst);
    let tridiagonal = verify_tridiagonal_relations(inst);
    let mut out = TDPairAnalysis {
        instance: inst.clone(),
        axioms,
        split: None,
        shape: None,
        qserre,
        qserre_rl: None,
        tridiagonal,
        spanning: None,
        note: None,
    };
    if !out.axioms.all() {
        out.note = Some(out.axioms.irreducibility_note().unwrap_or_else(|| "axioms (i)-(iii) fail".into()));
        return Ok(out);
    }
    let sd = split_decomposition(inst)?;
    out.shape = Some(sd.shape_report());
    out.qserre_rl = Some(sd.verify_qserre_rl());
    let v = super::spanning::common_eigenvector(&sd)?;
    out.spanning = Some(super::spanning::span_report(&sd, &v)?);
    out.split = Some(sd);
    Ok(out)
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

impl TDPairAnalysis {
    pub fn all_passed(&self) -> bool {
        let pair = |p: (bool, bool)| p.0 && p.1;
        self.axioms.all()
            && pair(self.qserre)
            && pair(self.tridiagonal)
            && self.qserre_rl.is_some_and(pair)
            && self.shape.as_ref().is_some_and(ShapeReport::all)
            && self.spanning.as_ref().is_some_and(SpanReport::all)
            && self.split.as_ref().is_some_and(|s| s.checks.iter().all(|c| c.ok))
    }

    pub fn to_json(&self) -> Value {
        let ax = &self.axioms;
        let mut v = json!({
            "q": format_rational(&self.instance.q0),
            "d": self.instance.d,
            "dim": self.instance.dim(),
            "axioms": {
                "diagonalizable": ax.diagonalizable,
                "a_tridiagonal": ax.a_tridiagonal,
                "astar_tridiagonal": ax.astar_tridiagonal,
                "irreducible": ax.irreducible,
                "algebra_dim": ax.algebra_dim,
            },
            "qserre": [self.qserre.0, self.qserre.1],
            "tridiagonal_relations": [self.tridiagonal.0, self.tridiagonal.1],
            "passed": self.all_passed(),
        });
        if let Some(note) = &self.note {
            v["note"] = json!(note);
        }
        if let Some(sd) = &self.split {
            v["theta"] = json!(strings(&sd.theta));
            v["theta_star"] = json!(strings(&sd.theta_star));
            v["a"] = json!(format_rational(&sd.a));
            v["a_star"] = json!(format_rational(&sd.a_star));
            v["invariants"] = sd.checks.iter().map(|c| (c.name.to_string(), json!(c.ok))).collect();
        }
        if let Some((rl, lr)) = self.qserre_rl {
            v["qserre_raising_lowering"] = json!([rl, lr]);
        }
        if let Some(s) = &self.shape {
            v["shape"] = json!({
                "rho": s.rho,
                "symmetric": s.symmetric,
                "unimodal": s.unimodal,
                "bound": s.bound_ok,
                "bound_tight_at_ends": s.bound_tight_at_ends,
                "eigenspace_dims_agree": s.eigenspace_dims_agree,
            });
        }
        if let Some(s) = &self.spanning {
            v["spanning"] = s.to_json();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rational::{int, rat};
    use crate::tdpair::generate_leonard_type;

    fn gen(d: usize) -> TDPairInstance {
        generate_leonard_type(d, &int(2), &int(1), &int(1)).unwrap()
    }

    fn m(rows: &[&[Rational]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn d1_generator_passes() {
        let inst = gen(1);
        let ax = verify_axioms(&inst).unwrap();
        assert_eq!(ax.as_array(), [true; 4]);
        let ord = standard_orderings(&inst).unwrap();
        assert_eq!(ord.theta, vec![rat(1, 2), int(2)]);
        assert_eq!(ord.theta_star, vec![int(2), rat(1, 2)]);
        assert_eq!((ord.a, ord.a_star), (int(1), int(1)));
        let sd = split_decomposition(&inst).unwrap();
        assert_eq!(sd.u[0], Subspace::span(2, &[vec![int(1), int(0)]]));
        assert_eq!(sd.u[1], Subspace::span(2, &[vec![int(0), int(1)]]));
        assert_eq!(sd.r, m(&[&[int(0), int(0)], &[int(1), int(0)]]));
        assert_eq!(sd.l, m(&[&[int(0), int(1)], &[int(0), int(0)]]));
        assert_eq!(sd.verify_qserre_rl(), (true, true));
    }

    #[test]
    fn d3_progression() {
        let ord = standard_orderings(&gen(3)).unwrap();
        assert_eq!(ord.theta, vec![rat(1, 8), rat(1, 2), int(2), int(8)]);
        assert_eq!(ord.theta_star, vec![int(8), int(2), rat(1, 2), rat(1, 8)]);
    }

    #[test]
    fn reversed_basis_is_flipped_back() {
        // conjugating by the reversal permutation lists the eigenvalues the
        // other way round; the detector must still return ratio q0^2
        let inst = generate_leonard_type(3, &rat(3, 2), &int(-2), &rat(1, 3)).unwrap();
        let n = inst.dim();
        let mut p = ExactMatrix::zeros(n, n);
        for i in 0..n {
            p.set(i, n - 1 - i, int(1));
        }
        let conj = |x: &ExactMatrix| &(&p * x) * &p;
        let flipped = TDPairInstance::new(inst.q0.clone(), 3, conj(&inst.a), conj(&inst.astar)).unwrap();
        let a = standard_orderings(&inst).unwrap();
        let b = standard_orderings(&flipped).unwrap();
        assert_eq!(a.theta, b.theta);
        assert_eq!(b.a, int(-2));
        assert_eq!(b.a_star, rat(1, 3));
        assert!(analyze(&flipped).unwrap().all_passed());
    }

    #[test]
    fn identity_pair_is_not_irreducible() {
        let id = ExactMatrix::identity(2);
        let inst = TDPairInstance::new(int(2), 0, id.clone(), id).unwrap();
        let ax = verify_axioms(&inst).unwrap();
        assert!(ax.diagonalizable && ax.a_tridiagonal && ax.astar_tridiagonal);
        assert!(!ax.irreducible);
        assert_eq!(ax.algebra_dim, 1);
        assert!(ax.irreducibility_note().unwrap().contains("undecided"));
        assert!(!analyze(&inst).unwrap().all_passed());
    }

    #[test]
    fn equal_diagonal_pair_fails() {
        let a = ExactMatrix::diagonal(&[rat(1, 2), int(2)]);
        let inst = TDPairInstance::new(int(2), 1, a.clone(), a).unwrap();
        let ax = verify_axioms(&inst).unwrap();
        assert!(!ax.all());
        assert!(!ax.irreducible);
        assert!(split_decomposition(&inst).is_err());
    }

    #[test]
    fn not_diagonalizable() {
        let j = m(&[&[int(2), int(1)], &[int(0), int(2)]]);
        let inst = TDPairInstance::new(int(2), 1, j.clone(), j).unwrap();
        assert!(!verify_axioms(&inst).unwrap().diagonalizable);
        assert!(standard_orderings(&inst).is_err());
    }

    #[test]
    fn irrational_spectrum_is_unsupported() {
        let a = m(&[&[int(0), int(2)], &[int(1), int(0)]]);
        let inst = TDPairInstance::new(int(2), 1, a.clone(), a).unwrap();
        assert!(matches!(verify_axioms(&inst), Err(TdError::Unsupported(_))));
    }

    #[test]
    fn wrong_progression_is_rejected() {
        // product 9 has a rational square root, but 3 (1/2, 2) is not the spectrum
        let a = ExactMatrix::diagonal(&[int(1), int(9)]);
        let inst = TDPairInstance::new(int(2), 1, a.clone(), a).unwrap();
        assert!(matches!(verify_axioms(&inst), Err(TdError::NotTridiagonalPair(_))));
        let b = ExactMatrix::diagonal(&[int(1), int(3)]);
        let inst = TDPairInstance::new(int(2), 1, b.clone(), b).unwrap();
        assert!(matches!(verify_axioms(&inst), Err(TdError::Unsupported(_))));
    }

    #[test]
    fn claimed_diameter_must_match() {
        let g = gen(2);
        let inst = TDPairInstance::new(int(2), 1, g.a, g.astar).unwrap();
        assert!(matches!(verify_axioms(&inst), Err(TdError::NotTridiagonalPair(_))));
    }

    #[test]
    fn shift_pair_recurrence_oracle() {
        // independent of the generator: R the shift, L e_i = c_i e_(i-1);
        // the q-Serre relation for (R, L) holds iff c_i - [3]c_(i+1) + [3]c_(i+2) - c_(i+3) = 0
        let q0 = int(2);
        let three = q_int(3).eval(&q0);
        for d in 1..=6usize {
            let n = d + 1;
            let build = |c: &[Rational]| {
                let mut r = ExactMatrix::zeros(n, n);
                let mut l = ExactMatrix::zeros(n, n);
                for i in 0..d {
                    r.set(i + 1, i, int(1));
                    l.set(i, i + 1, c[i + 1].clone());
                }
                (r, l)
            };
            let recurrence = |c: &[Rational]| {
                let mut c = c.to_vec();
                c.extend([int(0), int(0), int(0)]);
                (0..d.saturating_sub(1)).all(|i| (&c[i] - &three * &c[i + 1] + &three * &c[i + 2] - &c[i + 3]).is_zero())
            };
            // [i][d+1-i] computed directly from (q^n - q^-n)/(q - q^-1)
            let qi = |k: i64| (pow(&q0, k) - pow(&q0, -k)) / (&q0 - pow(&q0, -1));
            let good: Vec<Rational> = (0..=d as i64 + 1).map(|i| qi(i) * qi(d as i64 + 1 - i)).collect();
            let (r, l) = build(&good);
            assert!(recurrence(&good));
            assert!(qserre_holds(&r, &l, &q0) && qserre_holds(&l, &r, &q0), "d={d}");
            if d >= 2 {
                let mut bad = good.clone();
                bad[2] += int(1);
                let (r, l) = build(&bad);
                assert!(!recurrence(&bad));
                assert!(!qserre_holds(&r, &l, &q0), "d={d}");
            }
        }
    }

    #[test]
    fn perturbed_lowering_map_fails() {
        let mut sd = split_decomposition(&gen(3)).unwrap();
        assert_eq!(sd.verify_qserre_rl(), (true, true));
        let c2 = sd.l.get(1, 2).clone();
        sd.l.set(1, 2, c2 + int(1));
        assert!(!sd.verify_qserre_rl().0);
    }

    #[test]
    fn forms_agree_on_fuzzed_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let q0 = int(2);
        for _ in 0..40 {
            let n = rng.gen_range(1..=3);
            let mut mk = || {
                let mut x = ExactMatrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        x.set(i, j, int(rng.gen_range(-2..=2)));
                    }
                }
                x
            };
            let (a, b) = (mk(), mk());
            assert_eq!(qserre_holds(&a, &b, &q0), tridiagonal_relation_holds(&a, &b, &q0));
        }
        let z = ExactMatrix::zeros(3, 3);
        let a = ExactMatrix::diagonal(&[int(1), int(2), int(5)]);
        assert!(tridiagonal_relation_holds(&a, &z, &q0) && tridiagonal_relation_holds(&z, &a, &q0));
        let b = m(&[&[int(1), int(1)], &[int(0), int(1)]]);
        let c = m(&[&[int(1), int(0)], &[int(1), int(1)]]);
        assert!(!tridiagonal_relation_holds(&b, &c, &q0));
    }

    #[test]
    fn shape_report_rules() {
        let s = ShapeReport::new(vec![1, 1, 1, 1], true);
        assert!(s.all() && s.bound_tight_at_ends);
        assert!(!ShapeReport::new(vec![1, 2, 1, 2, 1], true).unimodal);
        assert!(ShapeReport::new(vec![1, 2, 1], true).bound_ok);
        assert!(!ShapeReport::new(vec![1, 3, 1], true).bound_ok);
        assert!(!ShapeReport::new(vec![1, 2], true).symmetric);
    }
}
