use std::path::PathBuf;
use std::process::{Command, Output};

fn bourbaki(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bourbaki"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bourbaki(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bourbaki-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["eval-f", "1/2"]), "1/2 (0.500000000000)\n");
    assert_eq!(stdout(&["eval-F", "1"]), "1/2 (0.500000000000)\n");
    assert_eq!(stdout(&["eval-f", "1/7"]), "8/23 (0.347826086957)\n");
    assert_eq!(stdout(&["eval-F", "1/4"]), "1/14 (0.0714285714286)\n");
}

#[test]
fn approx_reports_an_enclosure() {
    let text = stdout(&["approx-f", "0.5", "--tol", "0.001"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("lower ") && lines[1].starts_with("upper "));
}

#[test]
fn iterate_writes_csv_and_svg() {
    let csv = scratch("f2.csv");
    stdout(&[
        "iterate",
        "--target",
        "f",
        "--level",
        "2",
        "--format",
        "csv",
        "--out",
        csv.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("x_num,x_den,y_num,y_den\n0,1,0,1\n1,9,4,9\n"));
    assert!(text.ends_with("1,1,1,1\n"));
    assert_eq!(text.lines().count(), 11);
    assert!(!text.contains('\r'));

    let svg = scratch("big_f3.svg");
    stdout(&[
        "iterate",
        "--target",
        "F",
        "--level",
        "3",
        "--format",
        "svg",
        "--out",
        svg.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<polyline").count(), 1);
    assert!(text.contains("2.000000,898.000000"));
    assert!(text.contains("898.000000,2.000000"));

    let member = scratch("fa.csv");
    stdout(&[
        "iterate",
        "--target",
        "f",
        "--level",
        "1",
        "--a",
        "1/4",
        "--format",
        "csv",
        "--out",
        member.to_str().unwrap(),
    ]);
    assert_eq!(
        std::fs::read_to_string(&member).unwrap(),
        "x_num,x_den,y_num,y_den\n0,1,0,1\n1,3,1,4\n2,3,3,4\n1,1,1,1\n"
    );
}

#[test]
fn reports() {
    let table = stdout(&["boxdim", "--max-level", "3"]);
    assert!(table.lines().nth(2).unwrap().contains("1.464973520718"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["boxdim", "--max-level", "2", "--format", "json"])).unwrap();
    assert_eq!(json[2]["count"], 25);
    assert_eq!(json[2]["delta"], "1/9");
    assert!(json[0]["estimate"].is_null());

    let lengths = stdout(&["arclength", "--max-level", "2"]);
    assert_eq!(lengths.lines().next().unwrap(), "L_0 = 1.118033988749895");
    assert!(lengths.lines().nth(2).unwrap().starts_with("L_2 = 1.1268"));

    assert_eq!(
        stdout(&["measure", "--digits", "1"]),
        "1/5 (0.200000000000)\n"
    );
}

#[test]
fn verify_json_shape() {
    let text = stdout(&[
        "verify", "--suite", "family", "--cases", "20", "--seed", "9",
    ]);
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["suite"], "family");
    assert_eq!(json["cases"], 20);
    assert_eq!(json["failures"].as_array().unwrap().len(), 0);
    assert!(json["elapsed_ms"].is_null());
    let keys: Vec<usize> = ["\"suite\"", "\"cases\"", "\"failures\"", "\"elapsed_ms\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));

    let timed = stdout(&[
        "verify", "--suite", "symmetry", "--cases", "5", "--seed", "1", "--timing",
    ]);
    let json: serde_json::Value = serde_json::from_str(&timed).unwrap();
    assert!(json["elapsed_ms"].is_u64());
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        vec!["eval-f", "2"],
        vec!["eval-f", "1/0"],
        vec!["eval-F", "x"],
        vec!["approx-f", "0.5", "--tol", "0"],
        vec!["closed-form", "--target", "f", "--case", "v", "--i", "2"],
        vec![
            "iterate",
            "--target",
            "f",
            "--level",
            "14",
            "--format",
            "csv",
            "--out",
            "/dev/null",
        ],
        vec!["boxdim", "--max-level", "11"],
        vec!["verify", "--seed", "-3"],
    ] {
        let out = bourbaki(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
