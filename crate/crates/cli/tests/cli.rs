use std::io::Write;
use std::process::{Command, Stdio};

use apt_cli::{module_list, run, Kind, MODULES};

const NET: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures/net.apt");
const LTS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures/lts.apt");

fn apt(args: &[&str]) -> (i32, String, String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&args, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = apt(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn help_layout() {
    assert_eq!(
        ok(&["help", "bounded"]),
        "Usage: apt bounded <pn> [<k>]\n  pn         The Petri net that should be examined\n  k          If given, k-boundedness is checked\nCheck if a Petri net is bounded or k-bounded.\n"
    );
}

#[test]
fn every_module_has_help() {
    for m in MODULES {
        let out = ok(&["help", m.name]);
        assert!(out.starts_with(&format!("Usage: apt {}", m.name)), "{}", m.name);
        for p in m.params {
            assert!(out.contains(&format!("  {:<10} {}", p.name, p.description)), "{}.{}", m.name, p.name);
        }
        assert!(out.trim_end().ends_with(m.description), "{}", m.name);
    }
}

#[test]
fn module_names_are_unique_and_listed() {
    let list = module_list();
    for (i, m) in MODULES.iter().enumerate() {
        assert!(MODULES[i + 1..].iter().all(|o| o.name != m.name), "{}", m.name);
        assert!(list.contains(m.name));
        let optional_tail = m.params.iter().skip_while(|p| !p.optional).all(|p| p.optional);
        assert!(optional_tail, "{}: required parameter after optional one", m.name);
    }
    assert_eq!(ok(&[]), list);
}

#[test]
fn wrong_arity_is_a_usage_error() {
    for m in MODULES.iter().filter(|m| m.params.iter().any(|p| !p.optional)) {
        let (code, _, err) = apt(&[m.name]);
        assert_eq!(code, 1, "{}", m.name);
        assert!(err.contains(&format!("apt {}", m.name)), "{}: {err}", m.name);
    }
    let (code, _, _) = apt(&["bounded", NET, "1", "2", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn boundedness_witness() {
    assert_eq!(ok(&["bounded", NET]), "bounded: Yes\n");
    assert_eq!(
        ok(&["bounded", NET, "1"]),
        "bounded: No\nwitness_place: p4\nwitness_firing_sequence: [a]\n"
    );
}

#[test]
fn safe_synthesis_report() {
    let out = ok(&["synthesize", "safe,verbose", LTS]);
    assert!(out.starts_with("success: No\nsolvedEventStateSeparationProblems:\n"));
    assert!(out.contains("\tseparates event c at states [s4, s5, s6]\n"));
    assert!(out.ends_with("failedStateSeparationProblems: []\nfailedEventStateSeparationProblems: {b=[s4]}\n"));
}

#[test]
fn word_synthesis_report() {
    assert_eq!(
        ok(&["word_synthesize", "none", "a,b,b,a,a,c"]),
        "success: No\nseparationFailurePoints: a, b, [a] b, a, a, c\n"
    );
    let out = ok(&["word_synthesize", "none", "a,b"]);
    assert!(out.starts_with("success: Yes\n"));
    assert!(out.contains(".type LPN"));
}

#[test]
fn synthesized_net_round_trips_through_isomorphism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.apt");
    let path = path.to_str().unwrap();
    let out = ok(&["synthesize", "plain,pure", LTS, path]);
    assert_eq!(out, "success: Yes\n");
    assert_eq!(ok(&["isomorphism", path, LTS]), "isomorphic: Yes\n");
    assert_eq!(ok(&["pure", path]), "pure: Yes\n");
    assert_eq!(ok(&["plain", path]), "plain: Yes\n");
}

#[test]
fn generators_write_parsable_nets() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["bitnet_generator", "3"][..], &["bistate_philnet_generator", "3"], &["cycle_generator", "4", "1"]] {
        let path = dir.path().join(format!("{}.apt", args[0]));
        let path = path.to_str().unwrap();
        ok(&[args, &[path]].concat());
        assert_eq!(ok(&["bounded", path]), "bounded: Yes\n");
    }
    let (code, _, _) = apt(&["cycle_generator", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn lts_analyses() {
    assert_eq!(ok(&["persistent", LTS]), "persistent: Yes\n");
    assert_eq!(ok(&["reversible", LTS]), "reversible: Yes\n");
    assert_eq!(ok(&["deterministic", LTS]), "deterministic: Yes\n");
    assert_eq!(ok(&["totally_reachable", LTS]), "totally_reachable: Yes\n");
    assert_eq!(ok(&["compute_pvs", LTS]), "parikh_vectors: [(a:1,b:1,c:1,d:1)]\n");
    assert_eq!(ok(&["cycles_same_pv", NET]), "cycles_same_pv: Yes\n");
    assert_eq!(ok(&["isomorphism", NET, LTS]), "isomorphic: Yes\n");
    assert_eq!(ok(&["bisimulation", NET, LTS]), "bisimilar: Yes\n");
    assert_eq!(ok(&["language_equivalence", NET, LTS]), "language_equivalent: Yes\n");
}

#[test]
fn structural_analyses() {
    assert_eq!(
        ok(&["s_invariants", NET]),
        "places: [p0, p1, p2, p3, p4]\ns_invariants: [(0, 1, 0, 1, 0), (1, 0, 1, 1, 1)]\n"
    );
    assert_eq!(ok(&["siphons", NET]), "minimal_siphons: [{p0, p2, p4}, {p1, p3}]\n");
}

#[test]
fn prefixes_and_suggestions() {
    assert_eq!(ok(&["pl", NET]), "plain: Yes\n");
    let (code, _, err) = apt(&["boundd"]);
    assert_eq!(code, 1);
    assert!(err.contains("did you mean: bounded?"), "{err}");
    let (code, _, err) = apt(&["b", NET]);
    assert_eq!(code, 1);
    assert!(err.contains("ambiguous"), "{err}");
}

#[test]
fn wrong_document_kind_is_an_input_error() {
    let (code, _, err) = apt(&["deterministic", NET]);
    assert_eq!(code, 1);
    assert!(err.contains("expected an LTS"), "{err}");
    let (code, _, _) = apt(&["bounded", "/nonexistent/file.apt"]);
    assert_eq!(code, 1);
}

#[test]
fn failed_precondition_exits_with_two() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, ".type LPN .places p .transitions t .flows t: {{}} -> {{p}}").unwrap();
    let path = file.path().to_str().unwrap();
    assert_eq!(ok(&["bounded", path]).lines().next(), Some("bounded: No"));
    let (code, _, _) = apt(&["persistent", path]);
    assert_eq!(code, 2);
}

#[test]
fn every_parameter_kind_is_used() {
    for kind in [Kind::Net, Kind::Lts, Kind::NetOrLts, Kind::Int, Kind::Text, Kind::Output] {
        assert!(MODULES.iter().any(|m| m.params.iter().any(|p| p.kind == kind)), "{kind:?}");
    }
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_apt"))
        .args(["bounded", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(std::fs::read(NET).unwrap().as_slice()).unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    assert_eq!(String::from_utf8(output.stdout).unwrap(), "bounded: Yes\n");
}

#[test]
fn binary_exit_codes() {
    let status = Command::new(env!("CARGO_BIN_EXE_apt")).arg("nonsense").output().unwrap().status;
    assert_eq!(status.code(), Some(1));
}
