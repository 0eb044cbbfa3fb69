//! Subcommand bodies. Each returns a [`Report`] whose `ok` flag decides the
//! exit status.

use std::sync::Arc;

use qserre::hilbert::{
    enumerate_irreducible, hilbert_table, jacobi_product, jacobi_theta, product_series, Enumeration, PowerSeries,
};
use qserre::qarith::{format_rational, parse_rational, Field, Rational};
use qserre::rewrite::{
    expand_xyx, higher_serre, BalancedSpans, ConfluenceProbe, Reducer, RewriteError,
};
use qserre::tdpair::{
    analyze, arbitrary_vector, common_eigenvector, format_vector, generate_leonard_type, levels, span_report,
    spanning_vectors, split_decomposition, TDPairInstance, TdError,
};
use qserre::words::{Letter, NCPolynomial, Word};
use serde_json::{json, Value};
use thiserror::Error;

use crate::expr::{parse_expression, EvalError, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Rewrite(#[from] RewriteError),
    #[error("{0}")]
    TdPair(#[from] TdError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// Output of one subcommand.
#[derive(Clone, Debug)]
pub struct Report {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn parse_q(text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::Usage(format!("bad rational {text:?}: {e}")))
}

/// Symbolic without `q`, numeric at `q` otherwise.
pub fn field_for(q: Option<&str>) -> Result<Field, CliError> {
    match q {
        None => Ok(Field::symbolic()),
        Some(t) => Field::numeric(parse_q(t)?).map_err(|e| CliError::Usage(e.to_string())),
    }
}

pub fn normalize(expr: &str, q: Option<&str>, expanded: bool) -> Result<Report, CliError> {
    let field = field_for(q)?;
    let ast = parse_expression(expr)?;
    let p = ast.eval(&field)?;
    let nf = Reducer::shared(&field).normal_form(&p)?;
    let shown = if expanded { nf.to_expanded_string() } else { nf.to_string() };
    Ok(Report {
        ok: true,
        json: json!({ "input": expr, "field": field.to_string(), "normal_form": shown }),
        text: shown,
    })
}

pub fn verify_relations(max_r: usize, max_n: usize, q: Option<&str>) -> Result<Report, CliError> {
    let field = field_for(q)?;
    let r = Reducer::shared(&field);
    let mut lines = Vec::new();
    let mut first_failure = None;
    let mut higher = Vec::new();
    for k in 1..=max_r {
        let p = higher_serre(&field, k);
        let ok = r.normal_form(&p)?.is_zero() && r.normal_form(&p.sigma0())?.is_zero();
        lines.push(format!("higher-order relations r = {k}: {}", verdict(ok)));
        if !ok && first_failure.is_none() {
            first_failure = Some(format!("higher-order relation r = {k}"));
        }
        higher.push(json!({ "r": k, "ok": ok }));
    }
    let (mut checked, mut passed) = (0, 0);
    for k in 1..=max_r {
        for n in 2 * k + 1..=max_n {
            for i in 0..=n {
                let lhs = NCPolynomial::from_word(&field, Word::from_runs(Letter::X, &[i, k, n - i]));
                let ok = r.normal_form(&(&lhs - &expand_xyx(&field, i, k, n)?))?.is_zero();
                checked += 1;
                if ok {
                    passed += 1;
                } else if first_failure.is_none() {
                    first_failure = Some(format!("expansion of x^{i} y^{k} x^{}", n - i));
                }
            }
        }
    }
    lines.push(format!("expansion identities (r <= {max_r}, n <= {max_n}): {passed}/{checked}"));
    let ok = first_failure.is_none();
    if let Some(f) = &first_failure {
        lines.push(format!("first failure: {f}"));
    }
    Ok(Report {
        ok,
        text: lines.join("\n"),
        json: json!({
            "field": field.to_string(),
            "higher_order": higher,
            "expansions": { "checked": checked, "passed": passed },
            "first_failure": first_failure,
            "passed": ok,
        }),
    })
}

pub fn verify_nil(max: usize, max_commutator: usize, max_balanced: usize, q: Option<&str>) -> Result<Report, CliError> {
    let field = field_for(q)?;
    let spans = BalancedSpans::new(Reducer::shared(&field));
    let mut lines = Vec::new();
    let mut first_failure: Option<String> = None;
    let mut results = Vec::new();
    let mut record = |name: String, ok: bool, lines: &mut Vec<String>| {
        if !ok && first_failure.is_none() {
            first_failure = Some(name.clone());
        }
        results.push(json!({ "check": name, "ok": ok }));
        lines.push(format!("{name}: {}", verdict(ok)));
    };
    let quads: Vec<(usize, usize, usize, usize)> = (0..=max)
        .flat_map(|i| (0..=max).flat_map(move |j| (0..=max).flat_map(move |m| (0..=max).map(move |n| (i, j, m, n)))))
        .filter(|&(i, j, m, n)| i + n == j + m)
        .collect();
    let mut sym = true;
    let mut diff = true;
    for &(i, j, m, n) in &quads {
        if !spans.verify_sym_nil_membership(i, j, m, n)? {
            sym = false;
        }
        if !spans.verify_sigma_difference(i, j, m, n)? {
            diff = false;
        }
    }
    record(format!("y^i x^m y^n x^j in sym + nil span ({} words, max {max})", quads.len()), sym, &mut lines);
    record(format!("b - sigma(b) in nil span ({} words, max {max})", quads.len()), diff, &mut lines);
    record(
        format!("[y^i x^i, y^j x^j] in nil span (i, j <= {max_commutator})"),
        spans.verify_quotient_commutative(max_commutator)?,
        &mut lines,
    );
    record(
        format!("balanced commutators in nil span (length <= {max_balanced})"),
        spans.verify_balanced_commutators(max_balanced)?,
        &mut lines,
    );
    let generated = (0..=max_commutator).try_fold(true, |acc, k| spans.verify_quotient_generated(k).map(|g| acc && g))?;
    record(
        format!("balanced words generated by y^i x^i modulo nil (degree <= {max_commutator})"),
        generated,
        &mut lines,
    );
    let ok = results.iter().all(|r| r["ok"] == json!(true));
    Ok(Report {
        ok,
        text: lines.join("\n"),
        json: json!({ "field": field.to_string(), "checks": results, "passed": ok }),
    })
}

pub fn hilbert(max_degree: usize) -> Result<Report, CliError> {
    let rows = hilbert_table(max_degree);
    let mut lines = vec![format!("{:>3}  {:>8}  {:>8}", "n", "|X_n|", "series")];
    let mut ok = true;
    let mut js = Vec::new();
    for (n, count, c) in &rows {
        let agree = Rational::from_integer((*count).into()) == *c;
        ok &= agree;
        lines.push(format!(
            "{n:>3}  {count:>8}  {:>8}{}",
            format_rational(c),
            if agree { "" } else { "  MISMATCH" }
        ));
        js.push(json!({ "n": n, "count": count, "coefficient": format_rational(c), "agree": agree }));
    }
    Ok(Report {
        ok,
        text: lines.join("\n"),
        json: json!({ "rows": js, "passed": ok }),
    })
}

pub fn enumerate(length: usize, via: Enumeration) -> Result<Report, CliError> {
    let filter = enumerate_irreducible(length, Enumeration::Filter);
    let bijection = enumerate_irreducible(length, Enumeration::Bijection);
    let ok = filter == bijection;
    let shown = if via == Enumeration::Filter { &filter } else { &bijection };
    let mut lines: Vec<String> = shown.iter().map(|w| w.to_string()).collect();
    lines.push(format!("{} irreducible words of length {length}", shown.len()));
    if !ok {
        lines.push(format!(
            "filter and bijection disagree ({} vs {} words)",
            filter.len(),
            bijection.len()
        ));
    }
    Ok(Report {
        ok,
        text: lines.join("\n"),
        json: json!({
            "length": length,
            "words": shown.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "count": shown.len(),
            "methods_agree": ok,
        }),
    })
}

pub fn jacobi(max_degree: usize) -> Result<Report, CliError> {
    let order = max_degree;
    let theta = jacobi_theta(order);
    let prod = jacobi_product(order);
    let inverse_ok = &prod * &product_series(order) == PowerSeries::one(order);
    let ok = theta == prod && inverse_ok;
    let text = format!(
        "sum (-v)^(n^2)           = {theta}\nproduct                  = {prod}\nagree through v^{max_degree}: {}\ninverse of the counting series: {}",
        verdict(theta == prod),
        verdict(inverse_ok)
    );
    Ok(Report {
        ok,
        text,
        json: json!({
            "max_degree": max_degree,
            "series": theta.to_string(),
            "product": prod.to_string(),
            "agree": theta == prod,
            "inverse": inverse_ok,
            "passed": ok,
        }),
    })
}

pub fn confluence(words: usize, strategies: usize, max_length: usize, seed: u64, q: Option<&str>) -> Result<Report, CliError> {
    let field = field_for(q)?;
    let probe = ConfluenceProbe::from_reducer(Arc::new(Reducer::new(&field)));
    let (checked, divergence) = probe.random_sweep(words, max_length, strategies, seed)?;
    let ok = divergence.is_none();
    let mut text = format!(
        "{checked} words of length <= {max_length}, {strategies} strategies each (seed {seed}): {}",
        verdict(ok)
    );
    let mut js = json!({
        "words": checked,
        "strategies": strategies,
        "max_length": max_length,
        "seed": seed,
        "passed": ok,
    });
    if let Some(d) = divergence {
        text.push_str(&format!(
            "\n{} under {:?}:\n  leftmost: {}\n  other:    {}",
            d.word, d.strategy, d.leftmost, d.other
        ));
        js["divergence"] = json!({ "word": d.word.to_string(), "leftmost": d.leftmost.to_string(), "other": d.other.to_string() });
    }
    Ok(Report { ok, text, json: js })
}

pub fn tdpair_generate(d: usize, q: &str, a: &str, a_star: &str) -> Result<TDPairInstance, CliError> {
    Ok(generate_leonard_type(d, &parse_q(q)?, &parse_q(a)?, &parse_q(a_star)?)?)
}

fn instance_json(inst: &TDPairInstance) -> Value {
    serde_json::from_str(&inst.to_json()).expect("instance JSON")
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn strings(v: &[Rational]) -> String {
    format_vector(v)
}

pub fn tdpair_analyze(inst: &TDPairInstance) -> Result<Report, CliError> {
    let an = match analyze(inst) {
        Ok(an) => an,
        Err(e) => {
            return Ok(Report {
                ok: false,
                text: format!("analysis failed: {e}"),
                json: merge(instance_json(inst), json!({ "error": e.to_string(), "passed": false })),
            })
        }
    };
    let ax = &an.axioms;
    let mut lines = vec![format!("d = {}, q = {}, dim V = {}", inst.d, format_rational(&inst.q0), inst.dim())];
    lines.push(format!("diagonalizable: {}", verdict(ax.diagonalizable)));
    lines.push(format!("A tridiagonal on eigenspaces of A*: {}", verdict(ax.a_tridiagonal)));
    lines.push(format!("A* tridiagonal on eigenspaces of A: {}", verdict(ax.astar_tridiagonal)));
    lines.push(match ax.irreducibility_note() {
        None => format!("irreducible: pass (generated algebra has dimension {})", ax.algebra_dim),
        Some(n) => format!("irreducible: {n}"),
    });
    if let Some(sd) = &an.split {
        lines.push(format!("theta  = {}, a = {}", strings(&sd.theta), format_rational(&sd.a)));
        lines.push(format!("theta* = {}, a* = {}", strings(&sd.theta_star), format_rational(&sd.a_star)));
        let inv: Vec<String> = sd.checks.iter().map(|c| format!("{} {}", c.name, verdict(c.ok))).collect();
        lines.push(format!("split decomposition: {}", inv.join(", ")));
    }
    if let Some(s) = &an.shape {
        let rho: Vec<String> = s.rho.iter().map(|r| r.to_string()).collect();
        lines.push(format!(
            "shape ({}): symmetric {}, unimodal {}, binomial bound {}, eigenspace dimensions {}",
            rho.join(","),
            verdict(s.symmetric),
            verdict(s.unimodal),
            verdict(s.bound_ok),
            verdict(s.eigenspace_dims_agree)
        ));
    }
    lines.push(format!("q-Serre relations for A, A*: {} {}", verdict(an.qserre.0), verdict(an.qserre.1)));
    if let Some((m1, m2)) = an.qserre_rl {
        lines.push(format!("q-Serre relations for R, L: {} {}", verdict(m1), verdict(m2)));
    }
    lines.push(format!("tridiagonal relations: {} {}", verdict(an.tridiagonal.0), verdict(an.tridiagonal.1)));
    if let Some(s) = &an.spanning {
        let ranks: Vec<String> = s.level_ranks.iter().map(|r| r.to_string()).collect();
        lines.push(format!(
            "spanning family: {} vectors, rank {} of {}, level ranks ({})",
            s.count,
            s.rank,
            s.dim,
            ranks.join(",")
        ));
    }
    if let Some(n) = &an.note {
        lines.push(format!("note: {n}"));
    }
    let ok = an.all_passed();
    lines.push(format!("result: {}", verdict(ok)));
    Ok(Report {
        ok,
        text: lines.join("\n"),
        json: merge(instance_json(inst), json!({ "analysis": an.to_json() })),
    })
}

pub fn tdpair_spanning(inst: &TDPairInstance, arbitrary_v: bool, seed: u64) -> Result<Report, CliError> {
    let sd = split_decomposition(inst)?;
    let v = if arbitrary_v {
        arbitrary_vector(&sd, seed)
    } else {
        common_eigenvector(&sd)?
    };
    let family = spanning_vectors(&sd, &v)?;
    let rep = span_report(&sd, &v)?;
    let mut lines = vec![format!(
        "v = {} ({})",
        format_vector(&v),
        if arbitrary_v { "pseudorandom vector of U_0" } else { "common eigenvector" }
    )];
    for s in &family {
        lines.push(format!("{:<14} level {}  {}", s.label, s.index, format_vector(&s.vector)));
    }
    for (i, group) in levels(&rep, sd.d).iter().enumerate() {
        lines.push(format!("U_{i}: {{{}}} rank {} of {}", group.join(", "), rep.level_ranks[i], rep.level_dims[i]));
    }
    lines.push(format!("rank {} of {} from {} vectors", rep.rank, rep.dim, rep.count));
    lines.push(format!("membership: {}", verdict(rep.membership_ok)));
    let ok = rep.all();
    lines.push(format!("result: {}", verdict(ok)));
    let mut js = merge(instance_json(inst), json!({ "spanning": rep.to_json() }));
    js["v"] = json!(v.iter().map(format_rational).collect::<Vec<_>>());
    js["arbitrary_v"] = json!(arbitrary_v);
    Ok(Report {
        ok,
        text: lines.join("\n"),
        json: js,
    })
}
