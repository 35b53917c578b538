use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

/// Runs the binary; `@name` arguments are replaced by fixture paths.
fn prunix(args: &[&str]) -> Output {
    let args: Vec<String> = args
        .iter()
        .map(|a| a.strip_prefix('@').map_or_else(|| a.to_string(), fixture))
        .collect();
    Command::new(env!("CARGO_BIN_EXE_prunix"))
        .args(&args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 stderr")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn documented_examples() {
    let o = prunix(&["check", "--family", "@sat_example.json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "convex geometry: yes\n");

    let o = prunix(&["identity", "--family", "@sat_example.json", "--p", "1=0.3,2=0.5,3=0.7,4=0.2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1.000000000000\n");

    let o = prunix(&["sat", "core", "--cnf", "@f.cnf", "--assign", "1111", "--seed", "7"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "****\n");
}

#[test]
fn false_verdicts_exit_one_with_witness() {
    let o = prunix(&["check", "--family", "@not_geometry.json"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "convex geometry: no\n");
    assert!(stderr(&o).contains("violated"), "{}", stderr(&o));

    let o = prunix(&["identity", "--family", "@not_geometry.json", "--p", "0.5"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "1.250000000000\n");

    let o = prunix(&["sat", "validity", "--cnf", "@f.cnf", "--assign", "1,1,0,*"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("clause 1"), "{}", stderr(&o));

    let o = prunix(&["check", "--feasible", "@sat_example.json"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["check"],
        &["check", "--family", "@missing.json"],
        &["check", "--family", "@f.cnf"],
        &["sat", "validity", "--cnf", "@f.cnf", "--assign", "11x1"],
        &["sat", "validity", "--cnf", "@f.cnf", "--assign", "111"],
        &["sat", "validity", "--cnf", "@sat_example.json", "--assign", "1111"],
        &["prune", "--rule", "kcore:x", "--graph", "@leaf_graph.txt", "check"],
        &["closure", "--family", "@sat_example.json", "--set", "9"],
        &["identity", "--family", "@sat_example.json", "--p", "1=2.0"],
    ] {
        let o = prunix(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stderr(&o));
        assert!(stdout(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn leaf_pruning_graph_through_the_cli() {
    let g = ["prune", "--rule", "leaf", "--graph", "@leaf_graph.txt"];
    let run = |extra: &[&str]| stdout(&prunix(&[&g[..], extra].concat()));
    assert_eq!(run(&["precedences", "--element", "c"]), "{a,b}\n{a,e}\n{b,e}\n");
    assert!(run(&["words", "--max-len", "4"]).lines().any(|l| l == "d a b c"));
    assert_eq!(run(&["tau", "--set", "a,f,g"]), "tau: {a,c,e,f,g}\n");
    assert_eq!(run(&["run"]), "removed: d a b c\nremaining: {e,f,g}\n");
}

#[test]
fn sat_poset_matches_fixture_family() {
    let o = prunix(&["sat", "geometry", "--cnf", "@f.cnf", "--assign", "1111", "--json"]);
    let got: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let want: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("sat_example.json")).unwrap()).unwrap();
    assert_eq!(got, want);
    let poset = stdout(&prunix(&["sat", "poset", "--cnf", "@f.cnf", "--assign", "1111"]));
    assert_eq!(poset.lines().take_while(|l| *l != "covers:").count(), 11);
}

#[test]
fn output_is_deterministic_across_runs_and_thread_counts() {
    let cases: &[&[&str]] = &[
        &["sample", "pi1", "--family", "@sat_example.json", "--samples", "50", "--seed", "9"],
        &["sample", "pi2", "--family", "@sat_example.json", "--samples", "5000", "--seed", "9"],
        &["generate", "random", "--n", "6", "--seed", "4"],
        &["identity", "--family", "@sat_example.json", "--seed", "5", "--terms"],
        &["check", "--family", "@sat_example.json", "--mode", "classify", "--seed", "3"],
        &["sat", "core", "--cnf", "@f.cnf", "--assign", "1111", "--seed", "11"],
        &["lattice", "dot", "--family", "@sat_example.json", "--labels"],
    ];
    for args in cases {
        let first = prunix(args);
        assert_eq!(code(&first), 0, "{args:?}: {}", stderr(&first));
        for threads in ["1", "3"] {
            let again = prunix(&[&args[..], &["--threads", threads]].concat());
            assert_eq!(first.stdout, again.stdout, "{args:?} with {threads} threads");
        }
    }
}

#[test]
fn json_and_out_flags() {
    let o = prunix(&["lattice", "props", "--family", "@sat_example.json", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["elements"], 11);
    assert_eq!(v["meet_distributive"], true);
    assert_eq!(v["distributive"], false);

    let dir = std::env::temp_dir().join(format!("prunix-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lattice.dot");
    let o = prunix(&["lattice", "dot", "--family", "@sat_example.json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph lattice {"));
    assert_eq!(dot.matches(" -> ").count(), 16);
    std::fs::remove_dir_all(dir).unwrap();
}

/// Every library operation, paired with a command line that reaches it.
const COVERAGE: &[(&str, &[&str])] = &[
    ("parse_family", &["check", "--family", "@sat_example.json"]),
    ("serialize_family", &["generate", "dual", "--family", "@sat_example.json"]),
    ("boolean_lattice", &["generate", "boolean", "--ground", "a,b,c"]),
    ("check_convex_geometry", &["check", "--family", "@sat_example.json", "--mode", "axioms"]),
    ("check_antimatroid_words", &["check", "--words", "@words.json"]),
    ("dual", &["check", "--feasible", "@feasible.json"]),
    ("closure", &["closure", "--family", "@sat_example.json", "--set", "1,4"]),
    ("excludable", &["closure", "--family", "@sat_example.json", "--set", "2,3,4"]),
    ("generate_from_circuits", &["generate", "circuits", "--rooted", "@circuits.json"]),
    ("full_sets", &["generate", "full", "--rooted", "@circuits.json"]),
    ("generate_from_paths", &["generate", "paths", "--rooted", "@paths.json"]),
    ("rooted_circuits", &["generate", "rooted-circuits", "--family", "@sat_example.json"]),
    ("is_pruning_process", &["prune", "--rule", "leaf", "--graph", "@leaf_graph.txt", "check"]),
    ("reachable_sets", &["prune", "--rule", "kcore:2", "--graph", "@leaf_graph.txt", "geometry"]),
    ("removal_words", &["prune", "--rooted", "@circuits.json", "words"]),
    ("tau_min_reachable", &["prune", "--rooted", "@paths.json", "tau", "--set", "c"]),
    ("leaf_rule", &["prune", "--rule", "leaf", "--graph", "@leaf_graph.txt", "run"]),
    ("kcore_rule", &["prune", "--rule", "kcore:3", "--graph", "@leaf_graph.txt", "run"]),
    ("identifiable_rule", &["prune", "--rule", "identifiable", "--hypergraph", "@hypergraph.txt", "encode"]),
    ("precedences", &["prune", "--rule", "leaf", "--graph", "@leaf_graph.txt", "precedences", "--element", "c"]),
    ("phi", &["closure", "--family", "@sat_example.json", "--set", "1", "--interval"]),
    ("verify_interval_partition", &["check", "--family", "@sat_example.json", "--mode", "partition"]),
    ("identity_sum", &["identity", "--family", "@sat_example.json", "--weights", "@weights.json"]),
    ("classify", &["check", "--family", "@sat_example.json", "--mode", "classify"]),
    ("sample_pi1", &["sample", "pi1", "--family", "@sat_example.json", "--samples", "4"]),
    ("pi2_exact", &["sample", "pi2", "--family", "@sat_example.json", "--p", "0.4"]),
    ("expectation_check", &["sample", "pi2", "--family", "@sat_example.json", "--expect", "top"]),
    ("build_lattice", &["lattice", "props", "--family", "@sat_example.json", "--k", "1"]),
    ("is_meet_distributive", &["lattice", "props", "--family", "@sat_example.json"]),
    ("is_distributive", &["lattice", "props", "--family", "@sat_example.json"]),
    ("is_k_distributive", &["lattice", "props", "--family", "@sat_example.json", "--k", "3"]),
    ("export_dot", &["lattice", "dot", "--family", "@sat_example.json"]),
    ("parse_dimacs", &["sat", "dimacs", "--cnf", "@f.cnf"]),
    ("is_valid", &["sat", "validity", "--cnf", "@f.cnf", "--assign", "*1**"]),
    ("classify_vars", &["sat", "classify", "--cnf", "@f.cnf", "--assign", "1111"]),
    ("poset_below", &["sat", "poset", "--cnf", "@f.cnf", "--assign", "1111"]),
    ("geometry_from_assignment", &["sat", "geometry", "--cnf", "@f.cnf", "--assign", "1111"]),
    ("weight", &["sat", "weight", "--cnf", "@f.cnf", "--assign", "1**1", "--p", "0.5"]),
    ("verify_sat_identity", &["sat", "identity", "--cnf", "@f.cnf", "--assign", "1111"]),
    ("core", &["sat", "core", "--cnf", "@f.cnf", "--assign", "1111"]),
    ("geometry_intersection_witness", &["sat", "intersect", "--cnf", "@f.cnf", "--assign", "1111", "--with", "1111"]),
];

#[test]
fn every_operation_is_reachable() {
    for (op, args) in COVERAGE {
        let o = prunix(args);
        assert_eq!(code(&o), 0, "{op}: {args:?}\n{}", stderr(&o));
        assert!(!o.stdout.is_empty(), "{op}: no output");
        let json = prunix(&[&args[..], &["--json"]].concat());
        assert!(serde_json::from_slice::<serde_json::Value>(&json.stdout).is_ok(), "{op}: --json");
    }
    let mut names: Vec<&str> = COVERAGE.iter().map(|(op, _)| *op).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), COVERAGE.len());
}
