use delpezzo::cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION};

fn json(out: &str) -> serde_json::Value {
    serde_json::from_str(out).expect("valid json")
}

#[test]
fn verify_a5_at_five() {
    let out = run(["delpezzo", "verify-type", "--type", "A5", "--a", "5"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("volume 54/5"));
    assert!(out.stdout.contains("index 5"));
    assert!(!out.stdout.contains("FAIL"));
}

#[test]
fn verify_a5_json() {
    let out = run(["delpezzo", "verify-type", "--type", "a5", "--a", "5", "--json"]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out.stdout);
    assert_eq!(v[0]["multiplet"]["volume"], "54/5");
    assert_eq!(v[0]["multiplet"]["index"], 5);
    assert_eq!(v[0]["pass"], true);
}

#[test]
fn a5_only_exists_at_five() {
    let out = run(["delpezzo", "verify-type", "--type", "A5", "--a", "6"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("does not exist"));
    let out = run(["delpezzo", "verify-type", "--type", "A5", "--a", "6", "--json"]);
    assert_eq!(out.code, EXIT_USAGE);
    let v = json(&out.stderr);
    assert_eq!(v["error"], "usage");
    assert_eq!(v["exit_code"], 2);
}

#[test]
fn flag_errors_exit_two() {
    for argv in [
        vec!["delpezzo"],
        vec!["delpezzo", "classify"],
        vec!["delpezzo", "classify", "--a", "x"],
        vec!["delpezzo", "classify", "--a", "1"],
        vec!["delpezzo", "verify-type", "--type", "V", "--a", "4"],
        vec!["delpezzo", "toric", "--family", "III", "--a", "4"],
        vec!["delpezzo", "audit", "--a", "3", "--nmax", "2"],
        vec!["delpezzo", "dualgraph", "--type", "II", "--a", "4", "--config", "II[3]"],
        vec!["delpezzo", "dualgraph", "--type", "O", "--a", "4", "--format", "svg"],
    ] {
        let out = run(argv.clone());
        assert_eq!(out.code, EXIT_USAGE, "{argv:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let out = run(["delpezzo", "classify", "--a", "x", "--json"]);
    assert_eq!(json(&out.stderr)["exit_code"], 2);
}

#[test]
fn help_exits_zero() {
    let out = run(["delpezzo", "--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("classify"));
}

#[test]
fn classify_four_matches_catalog() {
    let out = run(["delpezzo", "classify", "--a", "4"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("catalog match: yes"));
    for v in ["25/2", "23/2", "21/2", "19/2", "17/2"] {
        assert!(out.stdout.contains(v), "{v}");
    }
}

#[test]
fn node_limit_turns_into_verification_failure() {
    let out = run(["delpezzo", "classify", "--a", "4", "--max-nodes", "1"]);
    assert_eq!(out.code, EXIT_VERIFICATION);
    assert!(out.stdout.contains("incomplete"));
}

#[test]
fn classify_below_four_is_unclassified() {
    let out = run(["delpezzo", "classify", "--a", "3", "--json"]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out.stdout);
    assert_eq!(v["within_hypotheses"], false);
    assert!(v["catalog_match"].is_null());
    assert!(v["survivors"].as_array().unwrap().iter().all(|s| s["type"] == "unclassified"));
}

#[test]
fn output_is_independent_of_thread_count() {
    let one = run(["delpezzo", "classify", "--a", "5", "--json", "--threads", "1"]);
    let many = run(["delpezzo", "classify", "--a", "5", "--json", "--threads", "4"]);
    assert_eq!(one, many);
    let one = run(["delpezzo", "audit", "--a", "4", "--nmax", "6", "--threads", "1"]);
    let many = run(["delpezzo", "audit", "--a", "4", "--nmax", "6", "--threads", "3"]);
    assert_eq!(one, many);
}

#[test]
fn toric_family_i_at_four() {
    let out = run(["delpezzo", "toric", "--family", "I", "--a", "4"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("inserted (0,-1)"));
    assert!(out.stdout.contains("coefficient 3"));
    assert!(out.stdout.contains("volume 23/2"));
    let v = json(&run(["delpezzo", "toric", "--family", "I", "--a", "4", "--json"]).stdout);
    assert_eq!(v["volume"], "23/2");
    assert_eq!(v["inserted"], serde_json::json!([[0, -1]]));
}

#[test]
fn dualgraph_files() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("c4.dot");
    let out = run([
        "delpezzo",
        "dualgraph",
        "--type",
        "C4",
        "--a",
        "4",
        "--out",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_OK);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph \"C4[1,3]_a4\" {"));
    assert!(text.contains("label=\"sigma\\n(s=-6, c=3)\""));

    let js = dir.path().join("ii.json");
    let out = run([
        "delpezzo",
        "dualgraph",
        "--type",
        "II",
        "--a",
        "5",
        "--config",
        "II[1,1]",
        "--format",
        "json",
        "--out",
        js.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&std::fs::read_to_string(&js).unwrap());
    assert!(!v["vertices"].as_array().unwrap().is_empty());

    let out = run(["delpezzo", "dualgraph", "--type", "O", "--a", "4", "--out", "/nonexistent/dir/x.dot"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn classify_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = run(["delpezzo", "classify", "--a", "4", "--json", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("catalog match: yes"));
    let v = json(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(v["a"], 4);
    assert_eq!(v["survivors"].as_array().unwrap().len(), 14);
    assert!(v["cells_visited"].as_u64().unwrap() > 0);
    assert!(v["audit"]["excluded_by"].is_object());
}

#[test]
fn audit_exit_codes() {
    let out = run(["delpezzo", "audit", "--a", "5", "--nmax", "12", "--h0", "5"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("audit: pass"));
}
