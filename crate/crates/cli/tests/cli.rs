#[path = "../../core/tests/common/random.rs"]
mod random;

use std::path::PathBuf;

use polysmith::VarSet;
use polysmith_cli::report::{EquivalenceDoc, FormDoc, Report, VerificationDoc};
use polysmith_cli::{parse_matrix, render_matrix, run, ReportDocument};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn polysmith(args: &[&str]) -> polysmith_cli::CommandOutput {
    run(std::iter::once("polysmith").chain(args.iter().copied()))
}

#[test]
fn exit_codes_follow_the_verdict() {
    assert_eq!(polysmith(&["check", &fixture("chain_3x3.mat")]).code, 0);
    assert_eq!(polysmith(&["check", &fixture("diag_xy.mat")]).code, 1);
    assert_eq!(polysmith(&["check", &fixture("unsupported.mat")]).code, 2);
    assert_eq!(polysmith(&["check", "/nonexistent.mat"]).code, 3);
    assert_eq!(polysmith(&["frobnicate"]).code, 3);
    assert_eq!(polysmith(&["--help"]).code, 0);
}

#[test]
fn lex_order_gives_the_same_verdict() {
    for f in ["diag_xy.mat", "unsupported.mat"] {
        let a = polysmith(&["check", &fixture(f), "--json"]);
        let b = polysmith(&["check", &fixture(f), "--json", "--order", "lex"]);
        assert_eq!(a, b);
    }
}

#[test]
fn hints_select_the_linear_shape() {
    let out = polysmith(&["check", &fixture("linear_3x3.mat"), "--g", "x - y", "--g", "x + y", "--json"]);
    assert_eq!(out.code, 0);
    let doc = ReportDocument::from_json(&out.text).unwrap();
    let Report::Equivalence(d) = doc.report else { panic!("wrong report kind") };
    assert_eq!(d.shape, "linear");
    assert_eq!(d.theorem, "square-linear");
    assert_eq!(d.dk, ["1", "z + 1", "x^2*z^2 + 2*x^2*z + x^2 - y^2*z^2 - 2*y^2*z - y^2"]);
}

#[test]
fn nonlinear_hint_is_a_usage_error() {
    let out = polysmith(&["check", &fixture("linear_3x3.mat"), "--g", "x^2"]);
    assert_eq!(out.code, 3);
    assert!(out.is_error);
}

#[test]
fn parse_errors_carry_their_location() {
    let dir = std::env::temp_dir().join(format!("polysmith-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.mat");
    std::fs::write(&path, "vars: x\nrows: 1\ncols: 1\n[1,1] = x^-1\n").unwrap();
    let out = polysmith(&["form", path.to_str().unwrap()]);
    assert_eq!(out.code, 3);
    assert!(out.text.contains("line 4"), "{}", out.text);
}

#[test]
fn reduce_then_verify() {
    let dir = std::env::temp_dir().join(format!("polysmith-witness-{}", std::process::id()));
    let out = polysmith(&[
        "reduce",
        &fixture("chain_3x3.mat"),
        "--write-witnesses",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.text);
    let file = |n: &str| dir.join(n).to_string_lossy().into_owned();
    let ok = polysmith(&["verify", &fixture("chain_3x3.mat"), "--u", &file("u.mat"), "--v", &file("v.mat"), "--s", &file("s.mat")]);
    assert_eq!(ok.code, 0, "{}", ok.text);
    let swapped = polysmith(&["verify", &fixture("chain_3x3.mat"), "--u", &file("v.mat"), "--v", &file("u.mat"), "--s", &file("s.mat")]);
    assert_eq!(swapped.code, 1);
    let factored = polysmith(&["verify", &fixture("chain_3x3.mat"), "--u", &file("u.mat"), "--v", &file("v.mat"), "--s", &file("s.mat"), "--factored"]);
    assert_eq!(factored.code, 1);
}

#[test]
fn reduce_exit_codes() {
    assert_eq!(polysmith(&["reduce", &fixture("diag_xy.mat")]).code, 1);
    assert_eq!(polysmith(&["reduce", &fixture("unsupported.mat")]).code, 2);
    let lin = polysmith(&["reduce", &fixture("linear_3x3.mat"), "--g", "x - y", "--g", "x + y"]);
    assert_eq!(lin.code, 0, "{}", lin.text);
}

#[test]
fn every_command_output_parses_back_in_both_renderings() {
    let runs: Vec<Vec<String>> = vec![
        vec!["check".into(), fixture("chain_3x3.mat")],
        vec!["check".into(), fixture("unsupported.mat")],
        vec!["form".into(), fixture("chain_3x3.mat")],
        vec!["reduce".into(), fixture("chain_3x3.mat")],
        vec!["reduce".into(), fixture("diag_xy.mat")],
        vec!["reduce".into(), fixture("unsupported.mat")],
    ];
    for args in runs {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let human = polysmith(&argv);
        let mut with_json = argv.clone();
        with_json.push("--json");
        let json = polysmith(&with_json);
        assert_eq!(human.code, json.code);
        let a = ReportDocument::from_human(&human.text).unwrap();
        let b = ReportDocument::from_json(&json.text).unwrap();
        assert_eq!(a, b, "{argv:?}");
        assert_eq!(ReportDocument::from_human(&a.to_human()).unwrap(), a);
    }
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 100,
        rng_seed: RngSeed::Fixed(0x5eed_c11),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn poly_text() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("0".to_string()),
        Just("x^2*y - 1/3".to_string()),
        Just("-z + 7".to_string()),
        "[a-z_]{0,6}[\\\\ :;]{0,2}[a-z]{0,3}",
    ]
}

fn matrix_doc() -> impl Strategy<Value = Vec<Vec<String>>> {
    (0usize..3, 0usize..3).prop_flat_map(|(r, c)| {
        proptest::collection::vec(
            proptest::collection::vec("[a-z0-9*^+ /-]{1,8}".prop_map(|s| s.trim().replace(',', "").to_string()).prop_filter("nonempty", |s| !s.is_empty()), c),
            r,
        )
    })
}

fn document() -> impl Strategy<Value = ReportDocument> {
    let vars = proptest::collection::vec("[a-z]{1,3}", 1..4);
    prop_oneof![
        (vars.clone(), 1usize..4, proptest::collection::vec((poly_text(), any::<bool>()), 0..4), poly_text(), proptest::option::of(matrix_doc()))
            .prop_map(|(vars, n, per_k, detail, w)| ReportDocument::new(Report::Equivalence(EquivalenceDoc {
                vars,
                rows: n,
                cols: n,
                rank: per_k.len(),
                shape: "chain".into(),
                shape_detail: detail.clone(),
                classified: detail,
                dk: per_k.iter().map(|p| p.0.clone()).collect(),
                jk: per_k.iter().map(|p| p.1).collect(),
                theorem: "square-chain".into(),
                verdict: "equivalent".into(),
                witness_u: w.clone(),
                witness_v: w,
            }))),
        (vars.clone(), proptest::collection::vec(poly_text(), 0..4), matrix_doc()).prop_map(|(vars, f, s)| {
            ReportDocument::new(Report::Form(FormDoc {
                vars,
                rows: s.len(),
                cols: s.first().map_or(0, Vec::len),
                rank: f.len(),
                invariant_factors: f,
                smith: s,
            }))
        }),
        (vars, any::<bool>()).prop_map(|(vars, holds)| ReportDocument::new(Report::Verification(VerificationDoc {
            vars,
            orientation: "reduced".into(),
            holds,
        }))),
    ]
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn matrix_files_round_trip(seed in any::<u64>()) {
        let vs = VarSet::new(["x", "y", "z"]).unwrap();
        let m = random::matrix(&mut random::rng(seed), &vs, 3, 3, 2);
        prop_assert_eq!(parse_matrix(&render_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn documents_round_trip_in_both_renderings(doc in document()) {
        prop_assert_eq!(ReportDocument::from_human(&doc.to_human()).unwrap(), doc.clone());
        prop_assert_eq!(ReportDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
}
