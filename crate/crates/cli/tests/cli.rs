//! End-to-end tests of the `groth` binary: the documented invocations, the
//! exit-code contract, and byte-for-byte determinism.

use std::process::Command;

fn groth(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_groth"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn compute_type_d_eyd_example() {
    let (out, _, code) = groth(&[
        "compute", "--type", "D", "--rank", "2", "--word", "1,1h", "--method", "eyd",
        "--set", "a=0", "--set", "b=0",
    ]);
    assert_eq!(code, 0);
    // (x1 ⊕ x2)² expanded
    assert_eq!(
        out.trim(),
        "x1^2 + 2*x1*x2 + x2^2 + 2*β*x1^2*x2 + 2*β*x1*x2^2 + β^2*x1^2*x2^2"
    );
}

#[test]
fn compute_type_a_window_example() {
    let (out, _, code) = groth(&[
        "compute", "--type", "A", "--rank", "4", "--window", "1,4,3,2",
        "--set", "a=1", "--set", "b=0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "5 + 5*β + β^2");
}

#[test]
fn compute_cross_check_exits_zero() {
    let (_, _, code) = groth(&[
        "compute", "--type", "C", "--rank", "2", "--word", "0",
        "--family", "stanley", "--method", "compat", "--verify",
    ]);
    assert_eq!(code, 0);
    let (_, _, code) = groth(&[
        "compute", "--type", "C", "--rank", "2", "--word", "0", "--method", "eyd", "--verify",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn invalid_input_exits_two() {
    let (_, err, code) = groth(&["compute", "--type", "Q", "--rank", "2", "--word", "0"]);
    assert_eq!(code, 2, "stderr: {err}");
    let (_, _, code) = groth(&["compute", "--type", "C", "--rank", "2", "--window", "1,1"]);
    assert_eq!(code, 2);
    // both --word and --window
    let (_, _, code) = groth(&[
        "compute", "--type", "C", "--rank", "2", "--word", "0", "--window", "1,-2",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn guard_exceeded_exits_three() {
    let (_, err, code) = Command::new(env!("CARGO_BIN_EXE_groth"))
        .args(["compute", "--type", "C", "--rank", "6", "--word", "0"])
        .env("GROTH_GUARD", "4")
        .output()
        .map(|o| {
            (
                String::from_utf8(o.stdout).unwrap(),
                String::from_utf8(o.stderr).unwrap(),
                o.status.code().unwrap_or(-1),
            )
        })
        .unwrap();
    assert_eq!(code, 3, "stderr: {err}");
}

#[test]
fn lr_emits_example_5_table() {
    let (out, _, code) = groth(&[
        "lr", "--type", "C", "--rank", "2", "--u", "0", "--v", "0",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn words_and_eyd_subcommands() {
    let (out, _, code) = groth(&["words", "--type", "D", "--rank", "2", "--word", "1,1h", "--cap", "2"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2); // (1,1h) and (1h,1)

    let (out, _, code) = groth(&["eyd", "--type", "A", "--rank", "4", "--window", "1,4,3,2"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 5); // the five patterns of Example 7
}

#[test]
fn localize_with_verify() {
    let (out, _, code) = groth(&[
        "localize", "--type", "C", "--rank", "2", "--word", "0", "--verify",
    ]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 8);
}

#[test]
fn verify_suite_runs() {
    let (out, _, code) = groth(&["verify", "yang-baxter"]);
    assert_eq!(code, 0, "output: {out}");
    assert!(out.lines().all(|l| l.contains("pass")));
    let (_, _, code) = groth(&["verify", "no-such-suite"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "compute", "--type", "C", "--rank", "2", "--word", "0,1,0", "--format", "json",
    ];
    let (a, _, _) = groth(&args);
    let (b, _, _) = groth(&args);
    assert_eq!(a, b);
    assert!(!a.trim().is_empty());
}

#[test]
fn adjoint_subcommand() {
    // H^C_{2,e} = (1+βa1)(1+βb1)(1+βx1)^4(1+βx2)^4
    let (out, _, code) = groth(&["adjoint", "--type", "C", "--rank", "2", "--word", "e"]);
    assert_eq!(code, 0);
    let got: groth::poly::Poly = out.trim().parse().unwrap();
    assert_eq!(got, groth::adjoint::adjoint_e_closed_form(groth::weyl::WeylType::c(2)));
}
