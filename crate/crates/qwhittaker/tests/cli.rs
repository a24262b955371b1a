use qwhittaker::cli::main_with_args;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qwh").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn expand_w_in_schur_basis() {
    let (code, out, _) = run(&["expand", "W", "--mu", "3,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "W31 = s31 + q*s22 + (q^2 + q)*s211 + q^3*s1111");
}

#[test]
fn compact_partition_syntax() {
    let (code, out, _) = run(&["expand", "W", "--mu", "111"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "W111 = s111");
}

#[test]
fn specialized_qmn_in_w_basis() {
    let (code, out, _) = run(&["expand", "Qmn", "--m", "3", "--n", "2", "--specialized", "--basis", "W"]);
    assert_eq!(code, 0);
    assert!(out.trim().ends_with("= q*W2 + W11"), "{out}");
}

#[test]
fn json_output_is_structured() {
    let (code, out, _) = run(&["--json", "expand", "W", "--mu", "2,1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["basis"], "s");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn passing_suite_exits_zero() {
    let (code, out, _) = run(&["verify", "cauchy", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("2 passed, 0 failed"), "{out}");
}

#[test]
fn gh_suite_small() {
    let (code, _, _) = run(&["verify", "gh-nfact", "--n", "3"]);
    assert_eq!(code, 0);
}

#[test]
fn reproduced_table_exits_zero() {
    let (code, out, _) = run(&["table", "kostka-4"]);
    assert_eq!(code, 0);
    assert!(out.contains("0 | 0 | 0 | 0 | 1"), "{out}");
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let (code, _, err) = run(&["verify", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown suite"));
}

#[test]
fn bad_partition_is_a_usage_error() {
    let (code, _, _) = run(&["expand", "W", "--mu", "1,3"]);
    assert_eq!(code, 2);
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    assert_eq!(run(&[]).0, 2);
}

#[test]
fn list_names_everything() {
    let (code, out, _) = run(&["list"]);
    assert_eq!(code, 0);
    assert!(out.contains("science-fiction") && out.contains("gamma-6"));
}

#[test]
fn gh_frobenius_of_21() {
    let (code, out, _) = run(&["gh", "--diagram", "[[0,0],[1,0],[0,1]]", "--report", "frobenius"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "Frobenius = s3 + (q + t)*s21 + q*t*s111");
}

#[test]
fn dual_pieri_output() {
    let (code, out, _) = run(&["pieri", "--mu", "21", "--k", "1", "--dual"]);
    assert_eq!(code, 0);
    assert!(out.contains("W22 + W211"), "{out}");
}
