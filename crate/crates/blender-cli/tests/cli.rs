//! End-to-end tests of the command-line surface: exit codes, JSON output,
//! file formats and determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_blender-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn membership_exit_codes_follow_the_verdict() {
    // Interior → 0, boundary → 1, outside → 2.
    let out = run(&["membership", "--cone", "K", "--family", "trinomial", "r=1", "a=3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("\"verdict\": \"Interior\""));

    let out = run(&["membership", "--cone", "Btau", "--tau", "-1/4", "--family", "flam", "lambda=-1/4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("\"verdict\": \"Boundary\""));
    assert!(stdout(&out).contains("lhs_cleared"));

    let out = run(&["membership", "--cone", "Wtilde", "--eso", "1", "0", "-14/9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("\"parabola_slack\": \"0\""));

    let out = run(&["membership", "--cone", "Q", "--family", "flam", "lambda=2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["membership", "--cone", "P", "--family", "qlam", "lambda=1/4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_and_incompatible_inputs_use_reserved_codes() {
    // Unknown cones and wrong shapes exit 65.
    let out = run(&["membership", "--cone", "X", "--eso", "1", "0", "0"]);
    assert_eq!(out.status.code(), Some(65));
    let out = run(&["membership", "--cone", "Btau", "--tau", "1/2", "--family", "flam", "lambda=0"]);
    assert_eq!(out.status.code(), Some(65));
    let out = run(&["membership", "--cone", "Wtilde", "--family", "flam", "lambda=0"]);
    assert_eq!(out.status.code(), Some(65));
    // Malformed input exits 64.
    let out = run(&["membership", "--cone", "P", "--family", "flam", "lambda=0.5"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["membership", "--cone", "P", "--family", "nosuch", "a=1"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["membership", "--cone", "P"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn forms_round_trip_through_stdin_and_files() {
    let json = r#"{"nvars":2,"degree":4,"terms":[{"exp":[4,0],"coeff":"1"},{"exp":[2,2],"coeff":"-2"},{"exp":[0,4],"coeff":"1"}]}"#;
    let mut child = bin()
        .args(["membership", "--cone", "P", "--form", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.as_mut().unwrap().write_all(json.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    // (x²−y²)² is psd with zeros: boundary.
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("psd-with-zeros"));

    // eval and inner agree with hand computation.
    let dir = std::env::temp_dir().join("blender-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.json");
    std::fs::write(&path, json).unwrap();
    let out = run(&["eval", "--form", path.to_str().unwrap(), "--point", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"value\": \"9\""));
    let out = run(&[
        "inner",
        "--lhs",
        path.to_str().unwrap(),
        "--rhs",
        path.to_str().unwrap(),
    ]);
    assert!(stdout(&out).contains("\"value\": \"8/3\""));

    // compose by the involution doubles into the rotated family member.
    let out = run(&["compose", "--form", path.to_str().unwrap(), "--matrix", "1,1;1,-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"coeff\":\"16\""));
}

#[test]
fn decompose_writes_verified_certificates() {
    let dir = std::env::temp_dir().join("blender-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cert_path = dir.join("cert.json");
    let out = run(&[
        "decompose",
        "--kind",
        "two-squares",
        "--eso",
        "1",
        "0",
        "3",
        "--out",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let cert = std::fs::read_to_string(&cert_path).unwrap();
    assert!(cert.contains("\"root\": \"2\""), "{}", cert);
    // Non-members exit 2 and name the violated inequality.
    let out = run(&["decompose", "--kind", "two-squares", "--eso", "1", "0", "-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("36AC"));
    // The quartic pair at λ = 1/4 is (x² + (3/4)y², (√7/4)y²).
    let out = run(&["decompose", "--kind", "quartic-4th-powers", "--family", "flam", "lambda=1/4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(3/4)·y^2"), "{}", text);
    assert!(text.contains("√7"), "{}", text);
    let out = run(&["decompose", "--kind", "quartic-4th-powers", "--family", "flam", "lambda=2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_paper_passes_and_reports_each_fixture() {
    let out = run(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.ends_with("PASS")).count() >= 12);
    assert!(!text.contains("FAIL"));
}

#[test]
fn region_emits_deterministic_csv_and_svg() {
    let dir = std::env::temp_dir().join("blender-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let csv1 = dir.join("r1.csv");
    let csv2 = dir.join("r2.csv");
    let svg = dir.join("r.svg");
    let args = |csv: &str, svg: Option<&str>| {
        let mut v = vec![
            "region".to_string(),
            "--a-min".into(),
            "-1/10".into(),
            "--a-max".into(),
            "11/10".into(),
            "--b-min".into(),
            "-1/10".into(),
            "--b-max".into(),
            "11/10".into(),
            "--step".into(),
            "1/10".into(),
            "--csv".into(),
            csv.to_string(),
        ];
        if let Some(s) = svg {
            v.push("--svg".into());
            v.push(s.to_string());
        }
        v
    };
    let out = bin().args(args(csv1.to_str().unwrap(), Some(svg.to_str().unwrap()))).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = bin().args(args(csv2.to_str().unwrap(), None)).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let a = std::fs::read_to_string(&csv1).unwrap();
    let b = std::fs::read_to_string(&csv2).unwrap();
    assert_eq!(a, b, "region output is byte-identical across runs");
    assert!(a.starts_with("A,B,in_P,in_Q,in_K\n"));
    // The (1,1) grid point is a boundary point for both Q and K.
    assert!(a.lines().any(|l| l == "1,1,I,B,B"), "{}", a);
    // Inclusion chain holds on every row.
    for line in a.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let member = |c: &str| c == "I" || c == "B";
        assert!(!member(cells[3]) || member(cells[4]), "{}", line);
        assert!(!member(cells[4]) || member(cells[2]), "{}", line);
    }
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.starts_with("<svg"));
    assert!(svg_text.contains("<path"));
    // Empty grids are a usage error.
    let out = run(&[
        "region", "--a-min", "1", "--a-max", "0", "--b-min", "0", "--b-max", "1", "--step",
        "1/10", "--csv", "/tmp/never.csv",
    ]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn canonical_lambda_and_theta_and_certificates() {
    let out = run(&["canonical-lambda", "--family", "flam", "lambda=3/5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"lambda\": \"1/7\""));
    // Not positive definite: incompatible.
    let out = run(&["canonical-lambda", "--family", "flam", "lambda=-1/3"]);
    assert_eq!(out.status.code(), Some(65));

    let dir = std::env::temp_dir().join("blender-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q.json");
    std::fs::write(
        &path,
        r#"{"nvars":2,"degree":4,"terms":[{"exp":[4,0],"coeff":"1"},{"exp":[2,2],"coeff":"12"},{"exp":[0,4],"coeff":"1"}]}"#,
    )
    .unwrap();
    let out = run(&["theta", "--form", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    // Θ(x⁴+12x²y²+y⁴) = 2x⁴ − 11x²y² + 2y⁴ (indefinite).
    assert!(stdout(&out).contains("\"coeff\":\"-11\""), "{}", stdout(&out));

    let certs = dir.join("certs.json");
    let out = run(&["certificates", "--out", certs.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("certificates verified"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&certs).unwrap()).unwrap();
    assert!(json.as_array().unwrap().len() >= 12);
}

#[test]
fn identical_inputs_give_byte_identical_reports() {
    let args = ["membership", "--cone", "K", "--family", "qlam", "lambda=1/2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(a.status.code(), Some(1));
}
