use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_perspow");
const EXAMPLE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/worked_example.flt");
const SINGLE_BAR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/single_bar.gen");

fn perspow(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("PERSIST_CAP").output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_json(o: &Output) -> serde_json::Value {
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty(), "no partial output on failure");
    serde_json::from_slice(&o.stderr).unwrap()
}

#[test]
fn homology_of_the_worked_example() {
    let o = perspow(&["homology", EXAMPLE, "--dim", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["free"].as_array().unwrap().len(), 1);
    let mut lifetimes: Vec<u64> = v["torsion"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["lifetime"].as_u64().unwrap())
        .collect();
    lifetimes.sort_unstable();
    assert_eq!(lifetimes, [1, 2, 3]);

    let text = stdout(&perspow(&["cohomology", EXAMPLE, "--format", "text"]));
    assert!(text.contains("H^0: R\n"));
    assert!(text.contains("H^2: R ⊕ R/t^3 ⊕ R/t^2 ⊕ R/t\n"));
}

#[test]
fn generic_complex_input() {
    let o = perspow(&["homology", SINGLE_BAR, "--dim", "0", "--field", "p:3"]);
    assert_eq!(
        stdout(&o),
        "{\"n\":0,\"field\":\"p:3\",\"free\":[],\"torsion\":[{\"birth\":0,\"lifetime\":2}]}\n"
    );
    let o = perspow(&["homology", SINGLE_BAR, "--format", "text"]);
    assert_eq!(stdout(&o), "H_0: R/t^2\n  [0, 2)\nH_1: 0\n");
}

#[test]
fn barcode_export() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bars.csv");
    let o = perspow(&["homology", EXAMPLE, "--barcode", csv.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("dim,birth,death"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4 + 4 + 1);
    assert!(rows.contains(&"2,4,inf"));
    assert!(rows.iter().all(|r| r.split(',').count() == 3));
}

#[test]
fn output_is_deterministic_across_strategies() {
    for args in [
        vec!["homology", EXAMPLE],
        vec!["cohomology", EXAMPLE, "--format", "text"],
        vec!["power", "dihedral", "-n", "4", "--module", "r=2; t, t^3"],
        vec!["power", "group", "-n", "4", "--group", "(1 2)(3 4);(1 3)", "--module", "r=1; t^2, t"],
    ] {
        let a = perspow(&args);
        let b = perspow(&args);
        let mut seq = args.clone();
        seq.push("--sequential");
        let c = perspow(&seq);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stdout, c.stdout);
    }
}

#[test]
fn power_outputs() {
    let o = perspow(&["power", "sym", "-n", "0", "--module", "r=5", "--format", "text"]);
    assert_eq!(stdout(&o), "R\n");
    let o = perspow(&["power", "cyclic", "-n", "3", "--module", "t^2, t^3"]);
    assert_eq!(
        stdout(&o),
        "{\"free\":\"0\",\"torsion\":[{\"gen\":\"t^2\",\"mult\":\"3\"},{\"gen\":\"t^3\",\"mult\":\"1\"}]}\n"
    );
    let o = perspow(&["power", "tensor", "-n", "40", "--module", "r=3", "--format", "text"]);
    assert_eq!(stdout(&o), "R^12157665459056928801\n");
    let o = perspow(&["present", "free", "--module", "r=1; t^2"]);
    assert_eq!(stdout(&o), "R⟨x_1, y_1 | t^2 y_1⟩\n");
}

#[test]
fn structured_errors() {
    let v = error_json(&with_stdin(&["homology", "-"], "steps 2\na 0\nb 0\na b c 1\n"));
    assert_eq!(v["error"]["code"], "face_closure");
    assert_eq!(v["error"]["location"]["line"], 4);

    let v = error_json(&with_stdin(&["homology", "-"], "steps 2\na 1\nb 0\na b 0\n"));
    assert_eq!(v["error"]["code"], "birth_monotonicity");

    let v = error_json(&with_stdin(&["homology", "-"], "steps 1\na 3\n"));
    assert_eq!(v["error"]["code"], "birth_out_of_range");

    let v = error_json(&perspow(&["homology", "/nonexistent/file.flt"]));
    assert_eq!(v["error"]["code"], "io");

    let v = error_json(&perspow(&["power", "group", "-n", "3", "--group", "(1 4)", "--module", "r=1"]));
    assert_eq!(v["error"]["code"], "invalid_permutation");
    let v = error_json(&perspow(&["power", "group", "-n", "2", "--group", "(1 2", "--module", "r=1"]));
    assert_eq!(v["error"]["code"], "invalid_permutation");
    let v = error_json(&perspow(&["power", "tensor", "-n", "2", "--module", "r=1; 1"]));
    assert_eq!(v["error"]["code"], "invalid_module");
    let v = error_json(&perspow(&["homology", EXAMPLE, "--field", "p:6"]));
    assert_eq!(v["error"]["code"], "invalid_field");
    let v = error_json(&perspow(&["frobnicate"]));
    assert_eq!(v["error"]["code"], "usage");
    let v = error_json(&with_stdin(&["rips", "-", "--radii", "1,1"], "0 0\n"));
    assert_eq!(v["error"]["code"], "radii_not_increasing");
}

#[test]
fn cap_comes_from_the_environment() {
    let args = ["power", "cyclic", "-n", "6", "--module", "r=3"];
    let ok = perspow(&args);
    assert!(ok.status.success());
    let capped = Command::new(BIN).args(args).env("PERSIST_CAP", "100").output().unwrap();
    let v = error_json(&capped);
    assert_eq!(v["error"]["code"], "cap_exceeded");
}

#[test]
fn rips_feeds_homology() {
    // four corners of the unit square: a loop at radius 1/2 that fills at 3/4
    let points = "0 0\n1 0\n1 1\n0 1\n";
    let o = with_stdin(&["rips", "-", "--radii", "0.5,0.75", "--max-dim", "2"], points);
    assert!(o.status.success());
    let filtration = stdout(&o);
    let h = with_stdin(&["homology", "-", "--dim", "1", "--format", "text"], &filtration);
    assert_eq!(stdout(&h), "H_1: R/t\n  [0, 1)\n");
}

#[test]
fn verify_prints_a_pass_table() {
    let o = perspow(&["verify", "--max-n", "3", "--max-s", "2", "--count-r", "3", "--count-n", "4"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let table = stdout(&o);
    assert!(table.starts_with("check"));
    assert!(table.contains("G-power, dihedral"));
    assert!(!table.contains("FAIL"));
}
