mod common;

use common::{run, scratch};
use qserre::tdpair::TDPairInstance;

#[test]
fn normalize_and_parse_errors() {
    let ok = run(&["normalize", "x*y*x^2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "-(1/[3])·x^3·y + x^2·y·x + (1/[3])·y·x^3");
    let bad = run(&["normalize", "x**y"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("1:3"));
}

#[test]
fn passing_and_failing_instances() {
    let good = scratch("good.json");
    let gen = run(&["tdpair", "generate", "--d", "3", "--q", "2", "--a", "1", "--astar", "1", "-o", good.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0));
    assert_eq!(run(&["tdpair", "analyze", good.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["tdpair", "spanning", good.to_str().unwrap()]).status.code(), Some(0));

    let mut inst = TDPairInstance::from_json(&std::fs::read_to_string(&good).unwrap()).unwrap();
    let c = inst.astar.get(1, 2).clone();
    inst.astar.set(1, 2, c + qserre::qarith::rational::int(1));
    let bad = scratch("bad.json");
    std::fs::write(&bad, inst.to_json()).unwrap();
    let out = run(&["tdpair", "analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn json_report_carries_the_instance() {
    let path = scratch("json.json");
    run(&["tdpair", "generate", "--d", "2", "-o", path.to_str().unwrap()]);
    let out = run(&["--json", "tdpair", "analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let back = TDPairInstance::from_json(&text).unwrap();
    assert_eq!(back, TDPairInstance::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["analysis"]["passed"], serde_json::json!(true));
}

#[test]
fn counting_commands() {
    let h = run(&["hilbert", "--max-degree", "4"]);
    assert_eq!(h.status.code(), Some(0));
    let text = String::from_utf8_lossy(&h.stdout);
    let rows: Vec<(u32, u32)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<u32> = l.split_whitespace().map(|x| x.parse().unwrap()).collect();
            (f[1], f[2])
        })
        .collect();
    assert_eq!(rows, vec![(1, 1), (2, 2), (4, 4), (8, 8), (14, 14)]);
    assert_eq!(run(&["enumerate", "--length", "6", "--via", "filter"]).status.code(), Some(0));
    assert_eq!(run(&["jacobi", "--max-degree", "25"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "relations", "--max-r", "2", "--max-n", "6"]).status.code(), Some(0));
    assert_eq!(run(&["confluence", "--trials", "50", "--max-length", "8", "--seed", "3"]).status.code(), Some(0));
    assert_eq!(run(&["tdpair", "generate", "--d", "2", "--q", "1"]).status.code(), Some(2));
}
