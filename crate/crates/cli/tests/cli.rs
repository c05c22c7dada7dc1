use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

const AXES: &str = "ring GF(32003)[x,y];\nmodule M = quot (x);\nmodule N = quot (y);\n";

fn ascent(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ascent"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/report.schema.json")).unwrap();
    jsonschema::JSONSchema::compile(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(reports: &[Value]) {
    let schema = schema();
    for r in reports {
        if let Err(errors) = schema.validate(r) {
            let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
            panic!("{r}\n{msgs:#?}");
        }
    }
}

#[test]
fn axes_ascent_json() {
    let out = ascent(&["--format", "json"], &format!("{AXES}ascent completion M N;"));
    assert!(out.status.success());
    let reports = json_lines(&out);
    assert_eq!(reports.len(), 1);
    assert_eq!(
        reports[0]["result"],
        json!({ "conditions": { "i": true, "ii": true, "iii": true, "iv": true, "vii": true }, "agree": true })
    );
    assert_valid(&reports);
}

#[test]
fn every_command_path_validates() {
    let session = format!(
        "{AXES}module Z = quot (1);\nmodule B = coker [[x, y], [0, x]];\n\
         ext M N;\next M N 1;\ntor M N;\ntor M N 0;\ndepth N;\ndim B;\nresolve B;\nann B;\nminprimes M;\n\
         ascent completion M N;\nascent identity M M;\nascent henselization M N;\nascent primes{{(x);(x, y)}} M N;\n\
         fact completion N;\ndepth Z;\nverify lemma1 n=3 vars=2;\nverify lemma2 n=3;\nverify theorem n=3 vars=2;\n\
         verify oracles n=3 vars=2;\n"
    );
    let out = ascent(&["--format", "json"], &session);
    let reports = json_lines(&out);
    assert_eq!(reports.len(), 19);
    assert_valid(&reports);
    let statuses: Vec<&str> = reports.iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert_eq!(statuses.iter().filter(|&&s| s == "error").count(), 1);
    assert_eq!(reports[14]["error"]["class"], json!("domain"));
    assert_eq!(reports[4]["result"], json!(1));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_report_class_and_location() {
    let out = ascent(&["--format", "json"], "module M = coker [[x, y],[0, x]] ;");
    assert_eq!(out.status.code(), Some(2));
    let reports = json_lines(&out);
    assert_valid(&reports);
    assert_eq!(reports[0]["error"]["class"], json!("unbound-ring"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:1"));

    let out = ascent(&[], "ring Q[x,y];\nmodule M = quot (x + y^2);\ndepth M;");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("3:7"), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
}

#[test]
fn text_output_and_exit_zero() {
    let out = ascent(&[], "ring GF(32003)[x,y];\nmodule N = quot (x);\ndepth N;\n");
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("depth N: 1  ("), "{text}");
}

#[test]
fn seed_override_is_recorded() {
    let out = ascent(&["--format", "json", "--seed", "9"], "verify lemma2 seed=42 n=4;");
    assert!(out.status.success());
    let reports = json_lines(&out);
    assert!(reports[0]["evidence"]["config"].as_str().unwrap().contains("seed=9"));
    assert_eq!(reports[0]["inputs"]["args"]["seed"], json!("42"));
}

#[test]
fn verify_lemma2_seed_42() {
    let out = ascent(&[], "verify lemma2 seed=42 n=100;");
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("failed=0 passed=100"));
}

#[test]
fn reads_a_session_file() {
    let dir = std::env::temp_dir().join(format!("ascent-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("example.asc");
    std::fs::write(&path, format!("{AXES}tor M N 0;\n")).unwrap();
    let out = ascent(&["--format", "json", path.to_str().unwrap()], "");
    assert!(out.status.success());
    assert_eq!(json_lines(&out)[0]["result"]["length"], json!(1));
    std::fs::remove_dir_all(&dir).unwrap();

    let missing = ascent(&["/nonexistent/session.asc"], "");
    assert_eq!(missing.status.code(), Some(2));
}
