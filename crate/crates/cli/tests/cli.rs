use std::process::{Command, Output};

use serde_json::Value;

fn folium(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_folium"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = folium(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn field(v: &Value, key: &str) -> String {
    v[key]
        .as_str()
        .unwrap_or_else(|| panic!("missing {key} in {v}"))
        .to_string()
}

#[test]
fn eval_examples() {
    assert_eq!(
        field(&json(&["eval", "--map", "pbar", "--t", "2"]), "point"),
        "(2/3 : 4/3 : 1)"
    );
    assert_eq!(
        field(&json(&["eval", "--map", "pbar", "--t", "-1"]), "point"),
        "(1 : -1 : 0)"
    );
    assert_eq!(
        field(&json(&["eval", "--map", "pbarbar", "--t", "2"]), "point"),
        "(4/3 : 2/3 : 1)"
    );
    assert_eq!(
        field(
            &json(&["--field", "fp:7", "eval", "--map", "pbar", "--t", "2"]),
            "point"
        ),
        "(3 : 6 : 1)"
    );
    let out = folium(&["eval", "--map", "paffine", "--t", "-1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn laws_and_inverses() {
    let v = "(3/2 : 3/2 : 1)";
    let p2 = "(2/3 : 4/3 : 1)";
    assert_eq!(
        field(&json(&["op", "--law", "projmul", p2, v]), "result"),
        p2
    );
    assert_eq!(
        field(
            &json(&["op", "--law", "star", p2, "(1 : -1 : 0)"]),
            "result"
        ),
        p2
    );
    assert_eq!(
        field(
            &json(&["op", "--law", "addsouth", p2, "(0 : 0 : 1)"]),
            "result"
        ),
        p2
    );
    assert_eq!(
        field(&json(&["inv", "--law", "projmul", p2]), "inverse"),
        "(4/3 : 2/3 : 1)"
    );
    assert_eq!(field(&json(&["perp", p2]), "perp"), "(-12/7 : 6/7 : 1)");
    assert_eq!(
        field(&json(&["op", "--law", "fieldmul", "(0:0:1)", p2]), "result"),
        "(0 : 0 : 1)"
    );

    assert_eq!(
        folium(&["op", "--law", "projmul", "(0:0:1)", p2])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        folium(&["inv", "--law", "fieldmul", "(0:0:1)"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        folium(&["--field", "fp:7", "op", "--law", "southmul", "(0:0:1)", "(0:0:1)"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn chord_rejects_off_curve_points() {
    let out = folium(&["chord", "(2/3, 4/3)", "(2/3 : 1 : 1)"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not on the curve"));
}

#[test]
fn chord_outputs() {
    // pbar(2), pbar(3) -> third pbar(-1/6), product pbar(6), star product pbar(-6)
    let p = "(2/3 : 4/3 : 1)";
    let q = "(9/28 : 27/28 : 1)";
    let c = json(&["chord", p, q]);
    let pbar = |t: &str| field(&json(&["eval", "--map", "pbar", "--t", t]), "point");
    assert_eq!(field(&c, "third"), pbar("-1/6"));
    assert_eq!(field(&c, "product"), pbar("6"));
    assert_eq!(field(&c, "star_product"), pbar("-6"));
    assert_eq!(field(&c, "kind"), "chord");

    let t = json(&["chord", "(3/2 : 3/2 : 1)", "(3/2 : 3/2 : 1)"]);
    assert_eq!(field(&t, "kind"), "tangent");
    assert_eq!(field(&t, "third"), "(1 : -1 : 0)");

    let third = field(&c, "third");
    let col = json(&["collinear", p, q, &third]);
    assert_eq!(col["collinear"], Value::Bool(true));
    assert_eq!(field(&col, "slope_product"), "-1");
    assert_eq!(field(&col, "determinant"), "0");
}

#[test]
fn off_curve_and_malformed_points() {
    assert_eq!(folium(&["perp", "(1, 1)"]).status.code(), Some(3));
    assert_eq!(folium(&["perp", "(1, 1, 1, 1)"]).status.code(), Some(2));
    assert_eq!(folium(&["perp", "(0 : 0 : 0)"]).status.code(), Some(2));
    assert_eq!(folium(&["--field", "fp:6", "count"]).status.code(), Some(2));
    assert_eq!(folium(&["--a", "0", "count"]).status.code(), Some(3));
    assert_eq!(
        folium(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(folium(&[]).status.code(), Some(2));
}

#[test]
fn branch_labels() {
    assert_eq!(field(&json(&["branch", "(0:0:1)"]), "branch"), "node");
    assert_eq!(field(&json(&["branch", "(3/2, 3/2)"]), "branch"), "vertex");
    assert_eq!(field(&json(&["branch", "(2/3, 4/3)"]), "branch"), "west");
    assert_eq!(field(&json(&["branch", "(4/3, 2/3)"]), "branch"), "south");
    assert_eq!(
        folium(&["--field", "fp:5", "branch", "(0:0:1)"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn count_examples() {
    for (p, a) in [("5", "1"), ("13", "3"), ("2", "1")] {
        let v = json(&["--field", &format!("fp:{p}"), "--a", a, "count"]);
        assert_eq!(v["enumerated"], v["predicted"]);
        assert_eq!(v["predicted"].as_u64().unwrap().to_string(), p);
    }
    assert_eq!(folium(&["count"]).status.code(), Some(3));
    assert_eq!(
        folium(&["--field", "fp:10007", "count"]).status.code(),
        Some(3)
    );
}

/// Every point a command prints is accepted back as input.
#[test]
fn printed_points_parse_back() {
    for fld in ["q", "fp:11"] {
        let frontier: Vec<String> = ["3", "2", "-5", "7"]
            .iter()
            .map(|t| {
                field(
                    &json(&["--field", fld, "eval", "--map", "pbar", "--t", t]),
                    "point",
                )
            })
            .collect();
        for p in &frontier {
            let outputs = [
                field(&json(&["--field", fld, "perp", p]), "perp"),
                field(
                    &json(&["--field", fld, "inv", "--law", "star", p]),
                    "inverse",
                ),
                field(
                    &json(&["--field", fld, "op", "--law", "addwest", p, &frontier[1]]),
                    "result",
                ),
                field(&json(&["--field", fld, "chord", p, &frontier[2]]), "third"),
            ];
            for out in outputs {
                let again = json(&["--field", fld, "op", "--law", "addsouth", &out, "(0:0:1)"]);
                assert_eq!(field(&again, "result"), out);
            }
        }
    }
}

#[test]
fn text_format() {
    let out = folium(&["perp", "(2/3, 4/3)"]);
    assert_eq!(stdout(&out), "perp: (-12/7 : 6/7 : 1)\n");
}

#[test]
fn verify_examples() {
    let v = json(&["--field", "fp:5", "--a", "1", "verify", "--suite", "all"]);
    assert_eq!(v["suite"], "all");
    let props = v["properties"].as_array().unwrap();
    assert!(props.iter().all(|p| p["passed"] == Value::Bool(true)));
    let count = props
        .iter()
        .find(|p| p["name"] == "count/point_count")
        .unwrap();
    assert_eq!(count["instances"], 1);

    let s = json(&[
        "--field", "fp:7", "--a", "1", "verify", "--suite", "southmul",
    ]);
    let reason = s["skipped"][0]["reason"].as_str().unwrap();
    assert!(reason.contains("cube root"), "{reason}");

    let args = [
        "--field",
        "q",
        "--a",
        "2",
        "--seed",
        "42",
        "verify",
        "--suite",
        "star",
        "--samples",
        "1000",
    ];
    let first = folium(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, folium(&args).stdout);
}

#[test]
fn plot_files() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("folium.svg");
    let csv = dir.path().join("folium.csv");
    let out = folium(&[
        "plot",
        "--chord",
        "2,3",
        "--tangent",
        "1",
        "--point",
        "1/2",
        "--bisector",
        "--asymptote",
        "--out",
        svg.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
    assert!(text.contains("t=-1/6"));
    let rows = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(rows.lines().next(), Some("t,x,y"));
    assert_eq!(rows.lines().count(), 401);

    let stdout_svg = folium(&["plot", "--samples", "50"]);
    assert!(stdout(&stdout_svg).starts_with("<svg"));
    assert_eq!(
        folium(&["plot", "--t-min", "2", "--t-max", "1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(folium(&["--field", "fp:5", "plot"]).status.code(), Some(3));
    let missing = dir.path().join("no/such/dir/x.svg");
    assert_eq!(
        folium(&["plot", "--out", missing.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
}
