use std::io::Write;
use std::process::{Command, Output};

fn palword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_palword")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn word_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn pal_length_prints_value() {
    let out = palword(&["pal-length", "--word", "010011"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n");
    assert_eq!(stdout(&palword(&["priv-length", "--word", "00101100110100"])), "3\n");
}

#[test]
fn eight_runs_from_word_file() {
    let v = format!("1{}101{}11\n", "100".repeat(5), "001".repeat(7));
    let f = word_file(&v);
    let path = f.path().to_str().unwrap();
    let out = palword(&["runs", "--word-file", path, "--k", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "start,end,period,exponent_num,exponent_den,ltrunc,rtrunc\n");
    let out = palword(&["runs", "--word-file", path, "--k", "5"]);
    assert_eq!(
        stdout(&out),
        "start,end,period,exponent_num,exponent_den,ltrunc,rtrunc\n2,18,3,17,3,false,false\n18,40,3,23,3,false,false\n"
    );
}

#[test]
fn verify_sierpinski_m_range() {
    let out = palword(&["verify", "--lemma", "M_RANGE", "--source", "sierpinski", "--n", "2187", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("M_RANGE,2187,2187,0,0,no counterexample found at horizon"));
}

#[test]
fn verify_reports_violations_with_exit_one() {
    // Under strict-interior coverage, the run 00 in 0011 covers [1..1] while
    // r(1) = 0, so the covering bound fails.
    let args = ["verify", "--lemma", "COVERING_BOUND", "--word", "0011", "--k", "2", "--samples", "50"];
    let out = palword(&[&args[..], &["--semantics", "interior", "--format", "json"]].concat());
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["lemma_id"], "COVERING_BOUND");
    assert!(!v[0]["violations"].as_array().unwrap().is_empty());
    assert_eq!(palword(&args).status.code(), Some(0));
}

#[test]
fn validation_errors_exit_two() {
    assert_eq!(palword(&["runs", "--word", "0101"]).status.code(), Some(2));
    assert_eq!(palword(&["runs", "--word", "0101", "--k", "1"]).status.code(), Some(2));
    assert_eq!(palword(&["runs", "--word", "0101", "--k", "2", "--bogus"]).status.code(), Some(2));
    assert_eq!(palword(&["pal-length", "--word", "01", "--source", "thue-morse"]).status.code(), Some(2));
    assert_eq!(palword(&["verify", "--lemma", "NOPE", "--word", "01"]).status.code(), Some(2));
    assert_eq!(palword(&["generate", "--source", "morphic:0>10,1>0", "--n", "4"]).status.code(), Some(2));
    let f = word_file("01\n10\n");
    assert_eq!(palword(&["pal-length", "--word-file", f.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn generated_words_round_trip() {
    for src in ["thue-morse", "sierpinski", "fibonacci-sturmian", "sturmian:2,1,3", "periodic:0:110100", "morphic:0>010,1>111"] {
        let gen = palword(&["generate", "--source", src, "--n", "64"]);
        assert_eq!(gen.status.code(), Some(0), "{src}");
        let text = stdout(&gen);
        let f = word_file(&text);
        let path = f.path().to_str().unwrap();
        let again = palword(&["generate", "--word-file", path]);
        assert_eq!(stdout(&again), text);
        let from_file = palword(&["series", "--word-file", path]);
        let from_source = palword(&["series", "--source", src, "--n", "64"]);
        assert_eq!(stdout(&from_file), stdout(&from_source));
    }
}

#[test]
fn integer_alphabet_words() {
    let f = word_file("#alphabet=int\n70,1,70\n");
    let path = f.path().to_str().unwrap();
    assert_eq!(stdout(&palword(&["pal-length", "--word-file", path])), "1\n");
    assert_eq!(stdout(&palword(&["generate", "--word-file", path])), "#alphabet=int\n70,1,70\n");
}

#[test]
fn deterministic_sampled_output() {
    let args = ["verify", "--lemma", "ALL", "--source", "sierpinski", "--n", "729", "--k", "3", "--l", "1", "--m", "3", "--seed", "7", "--samples", "200"];
    let a = palword(&args);
    let b = palword(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn codes_and_profiles() {
    let out = palword(&["code", "--source", "sierpinski", "--n", "25", "--k", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["letters"], "111111");
    assert_eq!(v["anchors"], serde_json::json!([4, 6, 10, 18, 22, 24]));
    let out = palword(&["star-code", "--source", "sierpinski", "--n", "25", "--k", "3", "--boundaries", "0,3,5,22"]);
    assert_eq!(stdout(&out), "**1*1111*1\n");
    let out = palword(&["coverage", "--word", "00010010010100100101001001", "--k", "3"]);
    assert!(stdout(&out).lines().nth(3).unwrap() == "3,3");
    let out = palword(&["coverage", "--word", "00010010010100100101001001", "--k", "3", "--semantics", "interior"]);
    assert!(stdout(&out).lines().nth(3).unwrap() == "3,1");
    let out = palword(&["measure", "--word", "111000100010000", "--k", "3", "--i", "1", "--j", "15"]);
    assert_eq!(stdout(&out), "6\n");
    let out = palword(&["check-kl", "--word", "00010010010100100101001001", "--k", "3", "--l", "2"]);
    assert_eq!(stdout(&out), "holds,max_coverage,witness\nfalse,3,3\n");
}

#[test]
fn experiments() {
    let out = palword(&["ravsky-max", "--n", "4"]);
    assert_eq!(stdout(&out), "n,max_pal_length\n1,1\n2,2\n3,2\n4,2\n");
    let out = palword(&["periodic-tail", "--word", "0011"]);
    assert_eq!(stdout(&out), "split_found,rotation_index,p1,p2\ntrue,0,00,11\n");
    let out = palword(&["probe-unbounded", "--source", "thue-morse", "--horizon", "100", "--p-max", "1"]);
    assert_eq!(stdout(&out), "p,prefix_len,factor_start,factor_len\n1,2,,\n");
    let out = palword(&["coding-check", "--word", "012021"]);
    assert_eq!(out.status.code(), Some(0));
    let out = palword(&["bounds", "--k", "2", "--l", "1", "--m", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["d1"].as_u64(), v["d2"].as_str(), v["d3"].as_u64()), (Some(9), Some("10/9"), Some(40)));
    let out = palword(&["kpower-free", "--word", "0101", "--k", "2"]);
    assert_eq!(stdout(&out), "free,i,j,period\nfalse,1,4,2\n");
    let out = palword(&["lprime-probe", "--word", "0000000000", "--k", "3", "--l", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["candidate_lprime"], 1);
    assert_eq!(v["conclusive"], false);
}

#[test]
fn manifest_batches() {
    let manifest = serde_json::json!({
        "checks": [
            { "source": "sierpinski", "n": 729, "k": 3, "lemmas": ["M_RANGE", "MEASURE_ADD", "CODE_LENGTH"] },
            { "source": "thue-morse", "n": 2000, "k": 3, "lemmas": ["PAL_RATIO", "PAL_COUNT"] },
            { "word": "0101100", "exhaustive": 8, "lemmas": ["PRIV_PREFIX_SUFFIX"] }
        ]
    });
    let f = word_file(&manifest.to_string());
    let out = palword(&["verify", "--manifest", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).lines().count(), 1 + 6);
    let bad = word_file(r#"[{"source": "sierpinski", "n": 9, "lemmas": ["M_RANGE"], "typo": 1}]"#);
    assert_eq!(palword(&["verify", "--manifest", bad.path().to_str().unwrap()]).status.code(), Some(2));
}
