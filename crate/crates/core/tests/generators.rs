use qserre::qarith::rational::{int, rat};
use qserre::qarith::Rational;
use qserre::tdpair::{
    analyze, arbitrary_vector, balanced_powers_commute_on_u0, check_balanced_words, check_nil_words,
    common_eigenvector, generate_leonard_type, span_report, split_decomposition, TDPairInstance,
};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_instance(d: usize, q0: &Rational, a: &Rational, a_star: &Rational) {
    let inst = generate_leonard_type(d, q0, a, a_star).unwrap();
    let an = analyze(&inst).unwrap();
    assert_eq!(an.axioms.as_array(), [true; 4], "d = {d}");
    assert_eq!(an.qserre, (true, true));
    assert_eq!(an.tridiagonal, (true, true));
    assert_eq!(an.qserre_rl, Some((true, true)));
    let shape = an.shape.as_ref().unwrap();
    assert_eq!(shape.rho, vec![1; d + 1]);
    for (i, &r) in shape.rho.iter().enumerate() {
        let b = binomial(d, i);
        assert!(r <= b);
        assert_eq!(r == b, i == 0 || i == d || d == 1, "d = {d}, i = {i}");
    }
    let sd = an.split.as_ref().unwrap();
    assert!(sd.checks.iter().all(|c| c.ok));
    assert_eq!(sd.a, *a);
    assert_eq!(sd.a_star, *a_star);
    let rep = an.spanning.as_ref().unwrap();
    assert_eq!((rep.count, rep.rank), (1 << d, d + 1));
    assert!(rep.all());
    assert_eq!(check_nil_words(sd, 50, 7), None);
    assert_eq!(check_balanced_words(sd, 50, 7), None);
    assert!(balanced_powers_commute_on_u0(sd));
    assert!(an.all_passed());
    assert_eq!(TDPairInstance::from_json(&inst.to_json()).unwrap(), inst);
}

#[test]
fn generator_instances_at_two() {
    for d in 1..=8 {
        check_instance(d, &int(2), &int(1), &int(1));
    }
}

#[test]
fn generator_instances_other_parameters() {
    for d in 1..=4 {
        check_instance(d, &rat(3, 2), &int(-1), &rat(2, 7));
        check_instance(d, &int(-3), &rat(5, 4), &int(3));
    }
}

#[test]
fn arbitrary_seed_vectors_span() {
    for d in 1..=6 {
        let sd = split_decomposition(&generate_leonard_type(d, &int(2), &int(1), &int(1)).unwrap()).unwrap();
        let fixed = span_report(&sd, &common_eigenvector(&sd).unwrap()).unwrap();
        for seed in 0..3 {
            let rep = span_report(&sd, &arbitrary_vector(&sd, seed)).unwrap();
            assert!(rep.all(), "d = {d}, seed = {seed}");
            assert_eq!(rep.level_ranks, fixed.level_ranks);
        }
    }
}
