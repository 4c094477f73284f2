mod common;

use common::{class1_example, code, hclif, hclif_env, stdout_json, write_json};
use hclif::besselexp::{exp_solution, ExpParams, ScaledSeries};
use hclif::ck::{ck_class1, CkTable};
use hclif::clifford::AlgebraDim;
use hclif::hermite::{hermite_rodrigues, HermitePoly};
use hclif::polyfun::{vector_var, PolyFunction, VectorKind};
use hclif::rational::{frac, int};
use hclif::vekua::{generalized_powers, AxialSolution, BetaPoly, NuSeries};
use serde_json::{json, Value};

fn poly(v: &Value) -> PolyFunction {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn parse_examples() {
    let out = hclif(&["hermite", "--type", "1", "--p", "2", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!((v["type"].as_u64(), v["p"].as_u64(), v["n"].as_u64()), (Some(1), Some(2), Some(2)));

    let out = hclif(&["bessel", "--alpha", "0", "--kind", "J", "--t", "1.0"]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out)["values"][0]["value"].as_f64().unwrap();
    assert!((value - 0.765_197_686_557_966_6).abs() < 1e-15);

    let out = hclif(&["hermite", "--type", "9"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--type"));
}

#[test]
fn hermite_example_is_minus_half_z() {
    let v = stdout_json(&hclif(&["hermite", "--type", "1", "--p", "0", "--n", "1"]));
    let expected = vector_var(VectorKind::Z, 1, false).unwrap().scale_rational(&frac(-1, 2));
    assert_eq!(poly(&v["rodrigues"]), expected);
    assert_eq!(poly(&v["closed_form"]), expected);
    assert_eq!(v["verdict"], "equal");
}

#[test]
fn hermite_round_trip() {
    let v = stdout_json(&hclif(&["hermite", "--type", "3", "--p", "2", "--n", "2"]));
    let direct: HermitePoly = hermite_rodrigues(3, 2, 2).unwrap();
    assert_eq!(poly(&v["rodrigues"]), direct.value);
    assert_eq!(serde_json::to_value(poly(&v["rodrigues"])).unwrap(), v["rodrigues"]);
}

#[test]
fn verify_constant_is_clean() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "one.json", &PolyFunction::one(AlgebraDim::extended(2)));
    let out = hclif(&["verify", "--input", &path]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    for family in ["submonogenic", "components", "hmonogenic", "hms_split"] {
        assert_eq!(v[family]["zero"], true, "{family}");
    }
    assert!(poly(&v["inhomogeneous_data"]["g"]).is_zero());
}

#[test]
fn verify_class1_example() {
    let dir = tempfile::tempdir().unwrap();
    let f = class1_example();
    let table = ck_class1(
        &f.restrict_z0().into_plain().unwrap(),
        &PolyFunction::zero(AlgebraDim::plain(1)),
        2,
    )
    .unwrap();
    assert_eq!(table.assemble(), f);
    let path = write_json(dir.path(), "f.json", &f);
    let v = stdout_json(&hclif(&["verify", "--input", &path]));
    assert_eq!(v["submonogenic"]["zero"], true);
    assert_eq!(v["components"]["zero"], true);
    assert_eq!(v["hmonogenic"]["zero"], false);
}

#[test]
fn powers_example_table() {
    let v = stdout_json(&hclif(&["powers", "--s", "1", "--alpha2", "1", "--delta2", "1"]));
    let n = 1;
    let alpha: BetaPoly = BetaPoly::from_wire(n, &serde_json::from_value::<Vec<String>>(v["coefficients"][0]["alpha"].clone()).unwrap()).unwrap();
    let delta = BetaPoly::from_wire(n, &serde_json::from_value::<Vec<String>>(v["coefficients"][0]["delta"].clone()).unwrap()).unwrap();
    assert_eq!(alpha, BetaPoly::beta(n).scale(&int(2)));
    assert_eq!(delta, BetaPoly::linear(n, int(-2), int(1)));
    let sol: AxialSolution = serde_json::from_value(v["solution"].clone()).unwrap();
    let direct = generalized_powers(&int(1), n, (&int(0), &int(1)), (&int(0), &int(1)), 4).unwrap();
    assert_eq!(sol, direct);
    assert_eq!(v["residuals"]["vanish"], true);
}

#[test]
fn powers_expand_is_homogeneous() {
    let v = stdout_json(&hclif(&["powers", "--s", "2", "--n", "2", "--alpha1", "1", "--delta2", "-1/2", "--expand"]));
    let f = poly(&v["expanded"]);
    assert!(f.is_homogeneous(4));
    let out = hclif(&["powers", "--s", "1/2", "--alpha1", "1", "--expand"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn ck_gaussian_and_input() {
    let v = stdout_json(&hclif(&["ck", "--n", "1", "--K", "2"]));
    let t: CkTable = serde_json::from_value(v["table"].clone()).unwrap();
    let g = PolyFunction::gaussian(AlgebraDim::plain(1));
    assert_eq!(t, ck_class1(&g, &PolyFunction::zero(AlgebraDim::plain(1)), 2).unwrap());
    assert_eq!(v["residuals"]["exact"], false);

    let dir = tempfile::tempdir().unwrap();
    let zb1 = class1_example().restrict_z0().into_plain().unwrap();
    let zero = PolyFunction::zero(AlgebraDim::plain(1));
    let path = write_json(dir.path(), "data.json", &json!({"A0": zb1, "D0": zero}));
    let v = stdout_json(&hclif(&["ck", "--input", &path, "--K", "3"]));
    assert_eq!(v["residuals"]["exact"], true);
    assert_eq!(v["table"]["terminated"], true);

    let path = write_json(dir.path(), "bad.json", &json!({"A0": zb1}));
    assert_eq!(code(&hclif(&["ck", "--input", &path])), 2);
    assert_eq!(code(&hclif(&["ck", "--class", "II", "--n", "1"])), 1);
    assert_eq!(code(&hclif(&["ck", "--class", "II", "--s", "0", "--n", "1"])), 2);
    assert_eq!(code(&hclif(&["ck", "--class", "IV", "--n", "1"])), 1);
    assert_eq!(code(&hclif(&["ck", "--class", "double", "--n", "1"])), 1);
}

#[test]
fn vekua_plain_and_shifted() {
    let dir = tempfile::tempdir().unwrap();
    let nu = NuSeries::scalar_power(1, int(1), int(1));
    let path = write_json(dir.path(), "plain.json", &json!({"kind": "plain", "n": 1, "a1": nu.to_wire()}));
    let v = stdout_json(&hclif(&["vekua", "--input", &path, "--expand"]));
    assert_eq!(v["residuals"]["vanish"], true);
    assert!(!poly(&v["expanded"]).is_zero());

    let path = write_json(dir.path(), "z0.json", &json!({"kind": "z0_power", "n": 1, "d1": nu.to_wire()}));
    assert_eq!(code(&hclif(&["vekua", "--input", &path])), 1);
    let v = stdout_json(&hclif(&["vekua", "--input", &path, "--s", "1"]));
    assert_eq!(v["residuals"]["vanish"], true);
    assert_eq!(code(&hclif(&["vekua", "--input", &path, "--s", "0"])), 2);

    let path = write_json(dir.path(), "mixed.json", &json!({"kind": "z0bar_power", "n": 1, "c": nu.to_wire()}));
    assert_eq!(code(&hclif(&["vekua", "--input", &path, "--s", "1"])), 2);
}

#[test]
fn bessel_series_round_trip() {
    let out = hclif(&["bessel", "--lambda", "2", "--mu", "-3/2", "--n", "2", "--alpha2", "1", "--M", "6"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["residuals_vanish"], true);
    assert_eq!(v["closed_forms_match"], true);
    assert_eq!(v["solution"]["branch"], "I");
    let p = ExpParams { lambda: int(2), mu: frac(-3, 2), n: 2, alpha1: int(1), alpha2: int(1) };
    let direct = exp_solution(&p, 6).unwrap();
    let c: ScaledSeries = serde_json::from_value(v["solution"]["c"].clone()).unwrap();
    assert_eq!(c, direct.c);
}

#[test]
fn bessel_modes_and_csv() {
    let out = hclif(&["bessel", "--alpha", "1", "--kind", "I", "--t", "0,1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("t,I_1(t)\n0,0e0\n"));
    assert_eq!(code(&hclif(&["bessel", "--alpha", "1"])), 1);
    assert_eq!(code(&hclif(&["bessel", "--alpha", "1", "--kind", "J", "--t", "1", "--lambda", "1"])), 1);
    assert_eq!(code(&hclif(&["bessel", "--lambda", "1", "--mu", "1", "--n", "1", "--format", "csv"])), 1);
    assert_eq!(code(&hclif(&["bessel", "--lambda", "0", "--mu", "1", "--n", "1"])), 2);
    assert_eq!(code(&hclif(&["bessel", "--alpha", "1", "--kind", "K", "--t", "1"])), 1);
}

#[test]
fn truncation_cap() {
    let out = hclif_env(&["powers", "--s", "1", "--K", "5"], &[("HCLIF_MAX_K", "4")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("HCLIF_MAX_K"));
    let out = hclif_env(&["bessel", "--lambda", "1", "--mu", "1", "--n", "1", "--M", "9"], &[("HCLIF_MAX_K", "8")]);
    assert_eq!(code(&out), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["ck", "--class", "III", "--s", "2", "--n", "2", "--K", "2"];
    assert_eq!(hclif(&args).stdout, hclif(&args).stdout);
}

#[test]
fn help_and_unknown() {
    assert_eq!(code(&hclif(&["--help"])), 0);
    assert_eq!(code(&hclif(&["frobnicate"])), 1);
    assert_eq!(code(&hclif(&["hermite", "--type", "1", "--p", "1", "--n", "1", "--bogus", "2"])), 1);
}
