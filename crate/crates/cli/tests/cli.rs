use quivhom_cli::run_with;

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Runs the command line, returning exit code, stdout and stderr.
fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["quivhom".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn has_line(out: &str, line: &str) -> bool {
    out.lines().any(|l| l == line)
}

#[test]
fn gldim_of_a2() {
    let (code, out, err) = run(&["gldim", "--algebra", &data("kA2.txt")]);
    assert_eq!(code, 0, "{err}");
    assert!(has_line(&out, "gldim=1"), "{out}");
    assert!(has_line(&out, "schema=1"));
    assert!(!err.is_empty());
    assert!(!out.contains("gl.dim of"), "prose belongs on stderr");
}

#[test]
fn gldim_of_dual_numbers_hits_the_cap() {
    let (code, out, _) = run(&["gldim", "--algebra", &data("dual_numbers.txt"), "--cap", "5"]);
    assert_eq!(code, 2);
    assert!(has_line(&out, "gldim=>=5"), "{out}");
}

#[test]
fn lemma37_on_d4_is_all_zero() {
    let (code, out, _) = run(&["check", "lemma37", "--quiver", &data("d4.txt")]);
    assert_eq!(code, 0);
    let pairs: Vec<&str> = out.lines().filter(|l| l.starts_with("pair=")).collect();
    assert_eq!(pairs.len(), 3);
    assert!(pairs.iter().all(|l| l.ends_with(" dim=0 PASS")), "{out}");
}

#[test]
fn lemma37_on_a2_is_out_of_hypothesis() {
    let (code, out, _) = run(&["check", "lemma37", "--quiver", &data("a2.txt")]);
    assert_eq!(code, 2);
    assert!(has_line(&out, "pair=(2,1) dim=1 INCONCLUSIVE"), "{out}");
}

#[test]
fn derived_witness_on_kronecker_verifies_and_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.json");
    let f = file.to_str().unwrap();
    let (code, out, err) = run(&[
        "derived-witness",
        "--quiver",
        &data("kronecker.txt"),
        "--complex",
        &data("c.txt"),
        "--depth",
        "2",
        "--out",
        f,
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(has_line(&out, "verified=true"), "{out}");
    let witness = out.lines().find_map(|l| l.strip_prefix("witness=")).unwrap();
    let v: serde_json::Value = serde_json::from_str(witness).unwrap();
    assert!(v["depth"].as_u64().unwrap() <= 2);

    let (code, out, _) = run(&["verify-witness", "--witness", f]);
    assert_eq!(code, 0);
    assert!(has_line(&out, "verified=true"));

    // a depth-one claim for the same witness fails
    let (code, out, _) = run(&["verify-witness", "--witness", f, "--depth", "1"]);
    assert_eq!(code, 1);
    assert!(has_line(&out, "verified=false"), "{out}");
}

#[test]
fn tampered_witness_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.json");
    let f = file.to_str().unwrap();
    let (code, _, _) =
        run(&["derived-witness", "--quiver", &data("kronecker.txt"), "--complex", &data("c.txt"), "--out", f]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&file).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // point the witness at a different complex in the same input
    let input = v["input"].as_str().unwrap().replace("diff -1 = [[]] | [[0], [1]]", "diff -1 = [[]] | [[1], [0]]");
    v["input"] = serde_json::Value::String(input);
    std::fs::write(&file, v.to_string()).unwrap();
    let (code, out, _) = run(&["verify-witness", "--witness", f]);
    assert_eq!(code, 1, "{out}");
    assert!(has_line(&out, "target=matches the input complex FAIL"), "{out}");
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["check", "lemma36", "--quiver", &data("d4.txt"), "--report", "json"];
    let (c1, o1, _) = run(&args);
    let (c2, o2, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
    let v: serde_json::Value = serde_json::from_str(&o1).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["dim_end"], 7);
    assert_eq!(v["checks"].as_array().unwrap().len(), 16);
}

#[test]
fn exit_code_follows_the_report() {
    for args in [
        vec!["trimat-gldim", "--trimat", &data("t2.txt")],
        vec!["check", "lemma35", "--trimat", &data("t2.txt")],
        vec!["check", "projmods", "--trimat", &data("t2.txt")],
        vec!["check", "cor32", "--quiver", &data("d4.txt")],
        vec!["check", "lemma31", "--quiver", &data("kronecker.txt")],
    ] {
        let mut json_args = args.clone();
        json_args.extend(["--report", "json"]);
        let (code, out, _) = run(&json_args);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let expected = match v["verdict"].as_str().unwrap() {
            "PASS" => 0,
            "FAIL" => 1,
            _ => 2,
        };
        assert_eq!(code, expected, "{args:?}");
        assert_eq!(code, 0, "{args:?}: {out}");
    }
}

#[test]
fn prime_fields_are_refused_where_radicals_are_needed() {
    let (code, _, err) = run(&["repdim-bound", "--quiver", &data("kronecker.txt"), "--field", "fp:5"]);
    assert_eq!(code, 3);
    assert!(err.contains("characteristic zero"));
    let (code, out, _) = run(&["check", "projmods", "--trimat", &data("t2.txt"), "--field", "fp:5"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn usage_and_parse_errors_exit_3() {
    assert_eq!(run(&["frobnicate"]).0, 3);
    assert_eq!(run(&["gldim"]).0, 3);
    assert_eq!(run(&["gldim", "--algebra", "/nonexistent/file.txt"]).0, 3);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "[quiver]\nvertices = 1\narrow a : 1 -> 9\n").unwrap();
    let (code, _, err) = run(&["gldim", "--quiver", bad.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(err.contains("unresolved reference"), "{err}");
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn pathalg_gldim_over_a_hereditary_base() {
    let (code, out, _) = run(&["pathalg-gldim", "--quiver", &data("a2.txt"), "--algebra", &data("kA2.txt")]);
    assert_eq!(code, 0);
    assert!(has_line(&out, "base_gldim=1"));
    let g: usize = out.lines().find_map(|l| l.strip_prefix("gldim=")).unwrap().parse().unwrap();
    assert!((1..=2).contains(&g));
}

#[test]
fn repdim_bound_with_an_explicit_generator_cogenerator() {
    let dir = tempfile::tempdir().unwrap();
    let mods = dir.path().join("mods.txt");
    std::fs::write(
        &mods,
        "[module S]\nalgebra = dual\ndim 1 = 1\n\n[module L]\nalgebra = dual\ndim 1 = 2\nmap x = [[0, 0], [1, 0]]\n",
    )
    .unwrap();
    let base = [
        "repdim-bound",
        "--quiver",
        &data("kronecker.txt"),
        "--algebra",
        &data("dual_numbers.txt"),
        "--input",
        mods.to_str().unwrap(),
    ];
    let mut args = base.to_vec();
    args.extend(["--gencogen", "S,L", "--report", "json"]);
    let (code, out, err) = run(&args);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summands"].as_array().unwrap().len(), 8);
    assert_eq!(v["n"], "2");

    // the simple alone misses the projective
    let mut args = base.to_vec();
    args.extend(["--gencogen", "S"]);
    let (code, _, err) = run(&args);
    assert_eq!(code, 2);
    assert!(err.contains("not a generator-cogenerator"), "{err}");
}
