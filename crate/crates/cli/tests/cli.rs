use std::process::{Command, Output};

fn qtcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtcat"))
        .args(args)
        .env_remove("QTCAT_MAX_SEMILENGTH")
        .env_remove("QTCAT_MAX_GRAPH_VERTICES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stats_of_the_running_example() {
    let o = qtcat(&["stats", "NNNEENENNEEENNENEE"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "depth=9"), "{text}");
    assert!(text.lines().any(|l| l == "ddinv=15"), "{text}");
    assert!(text.lines().any(|l| l == "depth_sequence=(0,1,1,2,0,1,2,2,0)"), "{text}");
}

#[test]
fn poly_f_2() {
    let o = qtcat(&["poly", "F", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "q + t\n");
    assert_eq!(stdout(&qtcat(&["poly", "F", "6", "--recursive"])), stdout(&qtcat(&["poly", "F", "6"])));
}

#[test]
fn map_omega() {
    let o = qtcat(&["map", "omega", "NNNEENENNEEENNENEE"]);
    assert_eq!(stdout(&o), "NNENNEEENNNENEEENE\n");
    let o = qtcat(&["map", "sigma-inv", "(((())()(()))(()()))"]);
    assert_eq!(stdout(&o), "NNNEENENNEEENNENEE\n");
}

#[test]
fn verify_all_passes() {
    let o = qtcat(&["verify", "all", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.contains(" PASS")));
}

#[test]
fn verify_list_names_every_identity() {
    let text = stdout(&qtcat(&["verify", "--list"]));
    for name in ["kreweras", "gessel_wang", "speyer_commutation", "m_values", "GS_equals_GE"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(qtcat(&["stats", "NEEN"]).status.code(), Some(2));
    assert_eq!(qtcat(&["poly", "nope", "3"]).status.code(), Some(2));
    assert_eq!(qtcat(&["verify", "no_such_identity"]).status.code(), Some(2));
    assert_eq!(qtcat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qtcat(&["poly", "F", "99"]).status.code(), Some(3));
    assert_eq!(qtcat(&["enumerate", "graphs", "9"]).status.code(), Some(3));
    let capped = Command::new(env!("CARGO_BIN_EXE_qtcat"))
        .args(["poly", "C", "5"])
        .env("QTCAT_MAX_SEMILENGTH", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn enumerate_counts() {
    let count = |kind: &str, n: &str| stdout(&qtcat(&["enumerate", kind, n, "--count"])).trim().to_string();
    assert_eq!(count("paths", "7"), "429");
    assert_eq!(count("trees", "7"), "429");
    assert_eq!(count("parking", "4"), "125");
    assert_eq!(count("labelled-trees", "5"), "125");
    assert_eq!(count("graphs", "5"), "728");
    assert_eq!(stdout(&qtcat(&["enumerate", "paths", "2"])), "NNEE\nNENE\n");
}

#[test]
fn json_records() {
    let text = stdout(&qtcat(&["--format", "json", "verify", "kreweras", "--max-n", "3"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2], r#"{"counterexample":null,"n":3,"name":"kreweras","verdict":"pass"}"#);
    let stats = stdout(&qtcat(&["--format", "json", "stats", "NNEE"]));
    assert!(stats.starts_with('{') && stats.contains(r#""area":1"#), "{stats}");
}

#[test]
fn output_is_independent_of_jobs() {
    for args in [
        &["verify", "all", "--max-n", "6"][..],
        &["poly", "G", "9"],
        &["enumerate", "graphs", "5"],
        &["--format", "json", "poly", "tutte", "8"],
    ] {
        let base = qtcat(args);
        for jobs in ["1", "2", "4"] {
            let mut with_jobs = vec!["--jobs", jobs];
            with_jobs.extend_from_slice(args);
            assert_eq!(qtcat(&with_jobs).stdout, base.stdout, "{args:?} with --jobs {jobs}");
        }
        assert_eq!(qtcat(args).stdout, base.stdout, "{args:?} rerun");
    }
}
