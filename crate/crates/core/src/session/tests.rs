use proptest::prelude::*;
use serde_json::json;

use super::*;
use crate::error::Error;

const AXES: &str = "ring GF(32003)[x,y];\nmodule M = quot (x);\nmodule N = quot (y);\n";

fn run(text: &str) -> Vec<Report> {
    execute(&parse_session(text).unwrap(), &ExecOptions::default())
}

#[test]
fn smoke_parse() {
    let s = parse_session("ring GF(32003)[x,y] ; module M = quot (x) ; module N = quot (y) ; ascent completion M N ;")
        .unwrap();
    assert_eq!(s.commands().count(), 1);
    assert_eq!(s.ring().unwrap().ring.nvars(), 2);
    assert!(!s.ring().unwrap().local);
}

#[test]
fn local_keyword_and_coker_rows() {
    let s = parse_session("ring Q[x,y] local; module M = coker [[x, y], [0, x]]; resolve M;").unwrap();
    assert!(s.ring().unwrap().local);
    match s.module("M").unwrap() {
        ModuleDef::Coker { rows, cols } => {
            assert_eq!(rows.len(), 2);
            assert_eq!(*cols, 2);
        }
        other => panic!("{other:?}"),
    }
    assert!(s.to_string().starts_with("ring Q[x,y] local;"));
}

#[test]
fn module_before_ring_is_unbound_ring() {
    let e = parse_session("module M = coker [[x, y],[0, x]] ;").unwrap_err();
    assert_eq!(e, Error::UnboundRing { line: 1, column: 1 });
    assert_eq!(e.class(), "unbound-ring");
}

#[test]
fn error_classes_carry_locations() {
    let dup = parse_session("ring Q[x];\nring Q[y];").unwrap_err();
    assert_eq!(dup, Error::DuplicateRing { line: 2, column: 1 });

    let unbound = parse_session("ring Q[x];\ndepth  P;").unwrap_err();
    assert!(matches!(unbound, Error::UnboundName { line: 2, column: 8, ref name } if name == "P"), "{unbound:?}");

    let inhom = parse_session("ring Q[x,y];\nmodule M = quot (x^2 + y);\ndim M;").unwrap_err();
    assert!(matches!(inhom, Error::Inhomogeneous { line: 3, column: 5, .. }), "{inhom:?}");
    assert_eq!(inhom.class(), "inhomogeneous");

    let syn = parse_session("ring Q[x];\nmodule M = quotient (x);").unwrap_err();
    assert!(matches!(syn, Error::Syntax { line: 2, column: 12, .. }), "{syn:?}");

    let classes: Vec<&str> = [dup, unbound, inhom, syn].iter().map(Error::class).collect();
    assert_eq!(classes, ["duplicate-ring", "unbound-name", "inhomogeneous", "syntax"]);
}

#[test]
fn inhomogeneous_allowed_where_not_required() {
    let reports = run("ring Q[x,y];\nmodule M = quot (x^2 + y);\nann M;\nresolve M;");
    assert!(reports.iter().all(|r| r.status == Status::Ok));
    assert_eq!(reports[0].result, json!({ "generators": ["x^2 + y"] }));
}

#[test]
fn bad_verify_key_is_a_syntax_error() {
    assert!(matches!(parse_session("verify lemma1 colour=red;"), Err(Error::Syntax { .. })));
    assert!(matches!(parse_session("verify lemma9;"), Err(Error::Syntax { .. })));
    assert!(parse_session("verify lemma2 seed=1 n=2 field=GF(101);").is_ok());
}

#[test]
fn ext_one_of_axes_is_the_residue_field() {
    let r = run(&format!("{AXES}ext M N 1;"));
    assert_eq!(r[0].status, Status::Ok);
    assert_eq!(r[0].result["length"], json!(1));
    assert_eq!(r[0].result["zero"], json!(false));
    assert_eq!(r[0].inputs["degree"], json!(1));
    assert_eq!(r[0].inputs["M"], json!({ "name": "M", "definition": "quot (x)" }));
}

#[test]
fn ascent_json_for_axes() {
    let r = run(&format!("{AXES}ascent completion M N;"));
    assert_eq!(
        r[0].result,
        json!({ "conditions": { "i": true, "ii": true, "iii": true, "iv": true, "vii": true }, "agree": true })
    );
    assert_eq!(r[0].status, Status::Ok);
    let line: serde_json::Value = serde_json::from_str(&r[0].render(Format::Json)).unwrap();
    for key in ["command", "inputs", "result", "evidence", "timing_ms", "status"] {
        assert!(line.get(key).is_some(), "{key}");
    }
    assert_eq!(line["command"], json!("ascent completion M N"));
}

#[test]
fn depth_of_quot_x() {
    let r = run("ring GF(32003)[x,y];\nmodule N = quot (x);\ndepth N;");
    assert_eq!(r[0].result, json!(1));
    assert!(r[0].render(Format::Text).starts_with("depth N: 1"));
}

#[test]
fn full_command_coverage() {
    let text = format!(
        "{AXES}tor M N;\next M N;\ntor M N 0;\ndim N;\nresolve M;\nann M;\nminprimes M;\nfact completion N;\n\
         ascent primes{{(x, y)}} M N;\nascent identity M M;\n"
    );
    let r = run(&text);
    assert_eq!(r.len(), 10);
    assert!(r.iter().all(|x| x.status == Status::Ok), "{:?}", r.iter().map(|x| &x.error).collect::<Vec<_>>());
    assert_eq!(r[0].result["entries"].as_array().unwrap().len(), 2);
    assert_eq!(r[3].result, json!(1));
    assert_eq!(r[4].result["ranks"], json!([1, 1]));
    assert_eq!(r[6].result, json!(["(x)"]));
    assert_eq!(r[7].result, json!({ "vii": false, "viii": false, "agree": true }));
}

#[test]
fn computation_errors_carry_origin() {
    let r = run("ring Q[x,y];\nmodule Z = quot (1);\nmodule N = quot (x);\ndepth Z;\nminprimes N;");
    assert_eq!(r[0].status, Status::Error);
    let e = r[0].error.as_ref().unwrap();
    assert_eq!((e.class.as_str(), e.origin.as_str()), ("domain", "invariants"));
    assert_eq!(r[1].status, Status::Ok);
}

#[test]
fn nonmonomial_minprimes_is_unsupported() {
    let r = run("ring Q[x,y];\nmodule M = quot (x^2 - y^2);\nminprimes M;");
    assert_eq!(r[0].error.as_ref().unwrap().class, "unsupported");
}

#[test]
fn verify_reports_summary_and_honours_seed_override() {
    let s = parse_session("verify lemma2 seed=42 n=6 vars=2 deg=2;").unwrap();
    let a = execute(&s, &ExecOptions::default());
    assert_eq!(a[0].status, Status::Ok);
    assert_eq!(a[0].result, json!({ "passed": 6, "failed": 0, "excluded": 0 }));
    let b = execute(&s, &ExecOptions { seed: Some(43) });
    assert!(b[0].evidence["config"].as_str().unwrap().contains("seed=43"));
}

#[test]
fn reproducer_replays() {
    let ring = Ring::new(&["x", "y"], CoefficientField::Prime(32003)).unwrap();
    let m = ModulePresentation::cyclic(&ring, vec![ring.parse_poly("x*y").unwrap()]).unwrap();
    let n = ModulePresentation::new(
        crate::matrix::Matrix::from_rows(&ring, 2, vec![
            vec![ring.parse_poly("x").unwrap(), ring.parse_poly("0").unwrap()],
            vec![ring.parse_poly("y").unwrap(), ring.parse_poly("x^2").unwrap()],
        ])
        .unwrap(),
    );
    let text = reproducer(&ring, &[("M", &m), ("N", &n)], &["ext M N".into(), "depth N".into()]);
    let s = parse_session(&text).unwrap();
    assert_eq!(s.module("N").unwrap().presentation(&ring), n);
    assert_eq!(execute(&s, &ExecOptions::default()).len(), 2);
}

/// A homogeneous polynomial written with explicit exponents.
fn poly_text() -> impl Strategy<Value = String> {
    (0u32..4).prop_flat_map(|d| {
        let term = (-5i64..6, 0..=d, 0..=d).prop_map(move |(c, a, b)| {
            let (a, b) = (a.min(d), b.min(d - a.min(d)));
            (c, format!("{}*x^{a}*y^{b}*z^{}", c.abs(), d - a - b))
        });
        prop::collection::vec(term, 1..4).prop_map(|ts| {
            let mut out = String::new();
            for (k, (c, t)) in ts.iter().enumerate() {
                let sign = if *c < 0 { "-" } else if k > 0 { "+" } else { "" };
                out.push_str(&format!("{}{sign} {t}", if k > 0 { " " } else { "" }));
            }
            out
        })
    })
}

fn command_text() -> impl Strategy<Value = String> {
    let names = prop::sample::select(vec!["A", "B"]);
    prop_oneof![
        (names.clone(), names.clone(), prop::option::of(0u32..4)).prop_map(|(m, n, i)| match i {
            Some(i) => format!("ext {m} {n} {i}"),
            None => format!("tor {m} {n}"),
        }),
        (prop::sample::select(vec!["resolve", "ann"]), names.clone()).prop_map(|(c, m)| format!("{c} {m}")),
        (prop::sample::select(vec!["identity", "completion", "henselization", "primes{(x, y, z);(x)}"]), names)
            .prop_map(|(o, _)| format!("fact {o} A")),
        (0u64..100, 1usize..5).prop_map(|(s, n)| format!("verify theorem seed={s} n={n} field=Q")),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_then_parse_round_trips(
        field in prop::sample::select(vec!["Q", "GF(7)", "GF(32003)"]),
        local in any::<bool>(),
        a in prop::collection::vec(poly_text(), 0..3),
        b in prop::collection::vec(prop::collection::vec(poly_text(), 2), 1..3),
        cmds in prop::collection::vec(command_text(), 0..5),
    ) {
        let mut text = format!("ring {field}[x,y,z]{};\n", if local { " local" } else { "" });
        text.push_str(&format!("module A = quot ({});\n", a.join(", ")));
        let rows: Vec<String> = b.iter().map(|r| format!("[{}]", r.join(", "))).collect();
        text.push_str(&format!("module B = coker [{}];\n", rows.join(", ")));
        for c in &cmds {
            text.push_str(c);
            text.push_str(";\n");
        }
        let s = parse_session(&text).unwrap();
        let printed = s.to_string();
        prop_assert_eq!(parse_session(&printed).unwrap(), s, "{}", printed);
    }
}
