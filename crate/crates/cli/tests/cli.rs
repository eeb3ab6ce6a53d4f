use circuit_ir::parse_json;
use mcsynth::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mcsynth").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn synth_mcx_reports_cnot() {
    let (code, out, err) = call(&["synth", "mcx", "--controls", "8", "--ancilla", "clean", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(err.contains("cnot=42"), "{err}");
    let c = parse_json(&out).unwrap();
    assert_eq!(c.lower().cx_count(), 42);
}

#[test]
fn verify_dirty_mcx() {
    let (code, out, _) = call(&["verify", "mcx", "--controls", "4", "--ancilla", "dirty"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("pass"));
}

#[test]
fn approx_needs_enough_controls() {
    let (code, _, err) = call(&["synth", "approx-u", "--controls", "3", "--gate", "x", "--epsilon", "0.1"]);
    assert_eq!(code, 2);
    assert!(err.contains("n >= n_b + 5 = 10"), "{err}");
}

#[test]
fn approx_synth_and_verify() {
    let (code, _, err) = call(&["synth", "approx-u", "--controls", "10", "--gate", "x", "--epsilon", "0.1"]);
    assert_eq!(code, 0);
    assert!(err.contains("cnot=212") && err.contains("n_b=5 n_e=5"), "{err}");
    let (code, out, _) = call(&["verify", "approx-u", "--controls", "10", "--gate", "x", "--epsilon", "0.1"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn failed_verification_exits_one() {
    // e^{0.4i} Rz(0.1): both eigenphases positive, so the truncation error exceeds epsilon
    let m = format!("[[{},{}],[0,0],[0,0],[{},{}]]", 0.35f64.cos(), 0.35f64.sin(), 0.45f64.cos(), 0.45f64.sin());
    let (code, _, err) = call(&["verify", "approx-u", "--controls", "9", "--gate", &m, "--epsilon", "0.01"]);
    assert_eq!(code, 1, "{err}");
    assert!(err.starts_with("fail"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["synth"]).0, 2);
    assert_eq!(call(&["synth", "mcx"]).0, 2);
    assert_eq!(call(&["synth", "mcmt-su2", "--controls", "3", "--targets", "1", "--gate", "cx"]).0, 2);
    assert_eq!(call(&["bench", "--family", "nope", "--n-min", "3", "--n-max", "5"]).0, 2);
    assert_eq!(call(&["bench", "--family", "mcx_clean", "--n-min", "5", "--n-max", "3"]).0, 2);
    assert_eq!(call(&["verify", "mcx", "--controls", "30"]).0, 2);
    assert_eq!(call(&["synth", "mcx", "--controls", "0"]).0, 2);
}

#[test]
fn emitted_json_reimports_equal() {
    let cases: [&[&str]; 4] = [
        &["synth", "mcx", "--controls", "7", "--ancilla", "dirty"],
        &["synth", "mcmt-x", "--controls", "4", "--targets", "3"],
        &["synth", "mcmt-su2", "--controls", "5", "--targets", "2", "--gate", "ry(0.7)"],
        &["synth", "approx-u", "--controls", "11", "--gate", "h", "--epsilon", "0.2"],
    ];
    for args in cases {
        let (code, out, _) = call(args);
        assert_eq!(code, 0, "{args:?}");
        let c = parse_json(&out).unwrap();
        let again = circuit_ir::export(&c, circuit_ir::Format::Json).unwrap();
        assert_eq!(again.trim_end(), out.trim_end(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["synth", "mcmt-su2", "--controls", "6", "--targets", "3", "--gate", "h", "--format", "qasm2"][..],
        &["bench", "--family", "mcmt_su2", "--n-min", "3", "--n-max", "40", "--step", "3", "--targets", "2"][..],
    ] {
        assert_eq!(call(args).1, call(args).1);
    }
}

#[test]
fn qasm_formats_are_lowered() {
    let (code, out, _) = call(&["synth", "mcx", "--controls", "5", "--format", "qasm2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("OPENQASM 2.0;"));
    assert!(!out.contains("rccx") && !out.contains("ccx"));
    assert_eq!(out.lines().filter(|l| l.starts_with("cx ")).count(), 24);
}

#[test]
fn bench_writes_csv_file() {
    let path = std::env::temp_dir().join(format!("mcsynth-bench-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&[
        "bench",
        "--family",
        "mcx_clean",
        "--n-min",
        "8",
        "--n-max",
        "32",
        "--step",
        "8",
        "--verify",
        "--out",
        p,
    ]);
    assert_eq!(code, 2, "n=32 exceeds the simulation cap");
    assert!(out.is_empty());
    let (code, _, _) =
        call(&["bench", "--family", "mcx_clean", "--n-min", "8", "--n-max", "32", "--step", "8", "--out", p]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let cnots: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(3).unwrap()).collect();
    assert_eq!(cnots, ["42", "90", "138", "186"]);
}

#[test]
fn export_command_converts_json() {
    let (_, json, _) = call(&["synth", "mcmt-x", "--controls", "3", "--targets", "2"]);
    let path = std::env::temp_dir().join(format!("mcsynth-export-{}.json", std::process::id()));
    std::fs::write(&path, &json).unwrap();
    let (code, out, _) = call(&["export", "--input", path.to_str().unwrap(), "--format", "qasm3"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert!(out.starts_with("OPENQASM 3.0;"));
    assert_eq!(call(&["export", "--input", "/nonexistent/x.json"]).0, 2);
}
