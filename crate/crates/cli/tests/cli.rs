use std::path::PathBuf;
use std::process::{Command, Output};

use davis_cli::config::{Command as Cmd, Format, RunConfig, SystemSource};
use davis_cli::report::{RunReport, Status};
use davis_core::Bounds;

fn systems_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../systems")
}

fn davis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_davis")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (RunReport, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = davis(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let report: RunReport = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    (report, out.status.code().unwrap())
}

fn example1() -> String {
    systems_dir().join("example1.cox").display().to_string()
}

fn table<'a>(r: &'a RunReport, title: &str) -> &'a Vec<Vec<String>> {
    &r.tables.iter().find(|t| t.title.starts_with(title)).unwrap().rows
}

fn check_status(r: &RunReport, name: &str) -> Status {
    r.checks.iter().find(|c| c.name.starts_with(name)).unwrap_or_else(|| panic!("no check {name}")).status
}

#[test]
fn check_example_one_even() {
    let (r, code) = json(&["check", "--system", &example1()]);
    assert_eq!(code, 0);
    assert_eq!(r.schema, 1);
    assert!(r.get("nondiscrete").unwrap().starts_with("yes"));
    assert_eq!(r.get("witnesses"), Some("6"));
    let first = &table(&r, "witnesses")[0];
    assert_eq!(&first[1..5], ["s1", "s2", "(s1 s3)", "(s2 s3)"]);
    // every (T, s) with T spherical: five vertices and two directions on each of six edges
    assert_eq!(table(&r, "halvability").len(), 5 + 12);
}

#[test]
fn check_example_one_odd_fails_at_halvability() {
    let (r, code) = json(&["check", "--system", systems_dir().join("example1_odd.cox").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(r.get("witnesses"), Some("0"));
    assert!(r.get("no witness because").unwrap().contains("Condition (3)"));
    let rows = table(&r, "halvability");
    assert!(rows.iter().filter(|row| row[0].contains(',')).all(|row| row[4] == "no"));
}

#[test]
fn check_petersen_has_witnesses() {
    let (r, code) = json(&["check", "--catalog", "petersen(4)"]);
    assert_eq!(code, 0);
    assert!(r.get("witnesses").unwrap().parse::<usize>().unwrap() > 0);
}

#[test]
fn build_counts() {
    let (r, code) = json(&["build", "--catalog", "example1(4,4)", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r.get("chambers"), Some("15"));
    assert_eq!(table(&r, "dual graph").len(), 14);
    assert!(r.artifacts[0].content.starts_with("graph dual {"));
    let (r, _) = json(&["build", "--catalog", "example1(4,4)", "--n", "1"]);
    assert_eq!(r.get("chambers"), Some("1"));
    let (r, _) = json(&["build", "--catalog", "example1(4,4)", "--n", "3"]);
    assert_eq!(r.get("chambers per level 1..n"), Some("(4,2,1)"));
}

#[test]
fn verify_passes_for_n_three() {
    let (r, code) = json(&["verify", "--system", &example1(), "--n", "3"]);
    assert_eq!(code, 0, "{}", r.to_text());
    assert_eq!(r.checks.len(), 9);
    assert!(r.checks.iter().all(|c| c.status == Status::Pass));
}

#[test]
fn mutated_twist_fails_the_induced_complex() {
    let (r, code) = json(&["verify", "--system", &example1(), "--n", "3", "--mutate", "twist"]);
    assert_eq!(code, 1);
    assert_eq!(check_status(&r, "H(Z_n) complex of groups"), Status::Fail);
    assert_eq!(check_status(&r, "covering Φ_n"), Status::Pass);
}

#[test]
fn mutated_covering_fails() {
    let (r, code) = json(&["verify", "--system", &example1(), "--n", "2", "--mutate", "covering"]);
    assert_eq!(code, 1);
    assert_eq!(check_status(&r, "covering Φ_n"), Status::Fail);
    assert_eq!(check_status(&r, "H(Z_n) complex of groups"), Status::Pass);
}

#[test]
fn verify_n_five_separates_resource_stops() {
    let (r, code) = json(&["verify", "--system", &example1(), "--n", "5"]);
    assert_eq!(code, 3);
    assert_eq!(r.status, Status::Resource);
    assert_eq!(check_status(&r, "disjointness"), Status::Pass);
    assert_eq!(check_status(&r, "covering Φ_n"), Status::Pass);
    assert_eq!(check_status(&r, "H(Z_n)"), Status::Resource);
    let note = r.checks.iter().find(|c| c.name.starts_with("disjointness")).unwrap().note.clone().unwrap();
    let longest: usize = note.rsplit(' ').next().unwrap().parse().unwrap();
    assert!(longest <= 9);
}

#[test]
fn covolume_tables() {
    let (r, code) = json(&["covolume", "--system", &example1(), "--n-max", "2"]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> =
        table(&r, "covolumes").iter().map(|row| vec![row[0].as_str(), &row[2], &row[3], &row[4]]).collect();
    assert_eq!(rows, vec![vec!["1", "1", "1", "yes"], vec!["2", "3/2", "3/2", "yes"]]);
    let (r, _) = json(&["covolume", "--system", &example1(), "--n-max", "1"]);
    assert_eq!(table(&r, "covolumes").len(), 1);
    let (r, code) = json(&["covolume", "--system", &example1(), "--n-max", "4"]);
    assert_eq!(code, 0);
    let series: Vec<&str> = table(&r, "covolumes").iter().map(|row| row[3].as_str()).collect();
    assert_eq!(series, ["1", "3/2", "13/8", "209/128"]);
    assert_eq!(r.get("agree at n"), Some("1, 2"));
}

#[test]
fn catalog_list_needs_no_system() {
    let out = davis(&["catalog-list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["example1", "petersen", "gl32_building", "complete_bipartite", "join_of_points"] {
        assert!(text.contains(name));
    }
}

#[test]
fn output_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = davis(&["check", "--catalog", "example1(4,4)", "--format", "json", "--out", path.to_str().unwrap(), "--jobs", "2"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let report: RunReport = serde_json::from_str(&text).unwrap();
    let again: RunReport = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(report, again);
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(raw["schema"], 1);
    assert_eq!(raw["command"], "check");
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(davis(&["check"]).status.code(), Some(2));
    assert_eq!(davis(&["check", "--system", "/nonexistent.cox"]).status.code(), Some(2));
    assert_eq!(davis(&["check", "--catalog", "nosuch(1)"]).status.code(), Some(2));
    assert_eq!(davis(&["build", "--catalog", "example1(4,4)", "--n", "0"]).status.code(), Some(2));
    assert_eq!(davis(&["verify", "--catalog", "example1(4,4)", "--word-len", "0"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cox");
    std::fs::write(&bad, "generators: a b\nm a b = 1\n").unwrap();
    let out = davis(&["check", "--system", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));
}

#[test]
fn tight_word_bound_is_a_resource_stop() {
    let (r, code) = json(&["verify", "--system", &example1(), "--n", "4", "--word-len", "3"]);
    assert_eq!(code, 3);
    assert_eq!(check_status(&r, "disjointness"), Status::Resource);
}

fn config(command: Cmd, n: usize) -> RunConfig {
    RunConfig {
        command,
        source: Some(SystemSource::Catalog("example1(4,4)".into())),
        n,
        n_max: n,
        witness: 0,
        bounds: Bounds::default(),
        format: Format::Text,
        out: None,
        mutate: None,
        invocation: vec![],
    }
}

#[test]
fn text_and_json_carry_the_same_facts() {
    for command in [Cmd::Check, Cmd::Build, Cmd::Verify, Cmd::Covolume, Cmd::CatalogList] {
        let r = davis_cli::run(&config(command, 2)).unwrap();
        let text = r.to_text();
        let back: RunReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        for f in &r.facts {
            assert!(text.contains(&f.key) && text.contains(&f.value), "{command:?}: {}", f.key);
        }
        for t in &r.tables {
            assert!(text.contains(&t.title));
            for cell in t.rows.iter().flatten() {
                assert!(text.contains(cell.as_str()), "{command:?}: cell {cell}");
            }
        }
        for c in &r.checks {
            assert!(text.contains(&c.name) && text.contains(c.status.label()));
        }
        // overall status is the conjunction of the checks
        let all_pass = r.checks.iter().all(|c| c.status == Status::Pass);
        assert_eq!(r.status == Status::Pass, all_pass);
    }
}

#[test]
fn witness_index_selects_another_witness() {
    let (r, code) = json(&["build", "--catalog", "example1(4,4)", "--n", "2", "--witness", "3"]);
    assert_eq!(code, 0);
    assert!(r.get("witness").unwrap().starts_with("#3 of 6: s1=s2 s2=s3"));
    let (r, code) = json(&["build", "--catalog", "example1(4,4)", "--witness", "6"]);
    assert_eq!(code, 1);
    assert_eq!(check_status(&r, "witness available"), Status::Fail);
}
