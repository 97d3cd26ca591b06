use std::process::{Command, Output};

fn fibdense(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibdense"))
        .args(args)
        .env_remove("FIBDENSE_MAX_LEN")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn word_output() {
    let out = fibdense(&["word", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "10110101\n");
    assert_eq!(stdout(&fibdense(&["word", "0"])), "0\n");
    let counts = stdout(&fibdense(&["word", "60", "--counts-only"]));
    assert_eq!(counts, "k,length,m,n\n60,2504730781961,956722026041,1548008755920\n");
}

#[test]
fn word_cap_maps_to_exit_2() {
    let out = fibdense(&["word", "30", "--max-len", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));
}

#[test]
fn env_cap_and_flag_precedence() {
    let bin = env!("CARGO_BIN_EXE_fibdense");
    let env_only = Command::new(bin).args(["word", "12"]).env("FIBDENSE_MAX_LEN", "100").output().unwrap();
    assert_eq!(env_only.status.code(), Some(2));
    let flag_wins = Command::new(bin)
        .args(["word", "12", "--max-len", "1000"])
        .env("FIBDENSE_MAX_LEN", "100")
        .output()
        .unwrap();
    assert!(flag_wins.status.success());
}

#[test]
fn density_table_rows() {
    let s = stdout(&fibdense(&["density-table", "19"]));
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "k,m,n,DF_m,DF_n");
    assert_eq!(lines.len(), 21);
    for row in ["0,1,0,1.00,0.00", "2,1,1,0.50,0.50", "5,3,5,0.38,0.63", "18,1597,2584,0.38,0.62"] {
        assert!(lines.contains(&row), "{row}");
    }
}

#[test]
fn ratio_rows() {
    let s = stdout(&fibdense(&["ratios", "16"]));
    assert!(s.lines().any(|l| l == "1,1,1,2,0,1,1,5"));
    assert!(s.lines().any(|l| l == "7,1.6,0.6,2.6,1,2,1,4.2"));
    let exact = stdout(&fibdense(&["ratios", "3", "--exact"]));
    assert!(exact.lines().any(|l| l == "3,3/2,2/3,5/2,5/6,11/6,1,13/3"));
}

#[test]
fn claims_exit_codes_and_rows() {
    let out = fibdense(&["claims", "--id", "lemma35", "--k", "2..60"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert_eq!(s.lines().count(), 60);
    assert!(s.lines().skip(1).all(|l| l.contains(",holds,")));

    let prop32 = stdout(&fibdense(&["claims", "--id", "prop32", "--k", "4..10"]));
    assert!(prop32.lines().skip(1).all(|l| l.contains(",reported-only,")));

    let rec = fibdense(&["claims", "--id", "product-rec", "--lambda", "0..8"]);
    assert!(rec.status.success());
    assert_eq!(stdout(&rec).lines().count(), 10);

    assert_eq!(fibdense(&["claims", "--id", "bogus"]).status.code(), Some(2));
}

#[test]
fn claim_failure_maps_to_exit_3() {
    assert_eq!(fibdense(&["claims", "--id", "lemma35", "--k", "1..3"]).status.code(), Some(2));
    // 16 bits of phi cannot resolve a gap of 1/F_40^2
    let out = fibdense(&["claims", "--id", "thm41", "--prec", "16"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains(",fails,"));
    assert!(fibdense(&["claims", "--id", "thm41"]).status.success());
}

#[test]
fn json_round_trip_is_idempotent() {
    let out = fibdense(&["density-table", "5", "--format", "json"]);
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["meta"]["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
    assert_eq!(v["rows"][5]["DF_n"], "0.63");
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again, text);
}

#[test]
fn deterministic_output() {
    for args in [&["claims"][..], &["figure-data", "20"], &["complexity", "--len", "1000", "--n-max", "20"]] {
        assert_eq!(fibdense(args).stdout, fibdense(args).stdout, "{args:?}");
    }
}

#[test]
fn tsv_format() {
    let s = stdout(&fibdense(&["gf", "kfib", "--k", "2", "--terms", "6", "--format", "tsv"]));
    assert_eq!(s, "index\tvalue\n0\t0\n1\t1\n2\t2\n3\t5\n4\t12\n5\t29\n");
}

#[test]
fn gf_families() {
    let s = stdout(&fibdense(&["gf", "product", "--lambda", "0", "--terms", "7"]));
    let vals: Vec<&str> = s.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(vals, ["0", "1", "1", "4", "9", "25", "64"]);
    let s = stdout(&fibdense(&["gf", "lemma22", "--t", "1", "--k", "1", "--terms", "3"]));
    assert_eq!(s, "index,value\n0,1\n1,1\n2,1\n");
}

#[test]
fn figure_data_rows() {
    let s = stdout(&fibdense(&["figure-data", "3"]));
    let lines: Vec<&str> = s.lines().collect();
    assert!(lines[1].starts_with("1,1,1,1,"));
    assert!(lines[3].starts_with("3,2,6,3/2,1.5"));
    assert_eq!(fibdense(&["figure-data", "3", "--prec", "16"]).status.code(), Some(2));
}

#[test]
fn complexity_and_palindromes() {
    let s = stdout(&fibdense(&["complexity", "--n-max", "10"]));
    assert!(s.lines().any(|l| l == "10,11,1,true"));
    assert!(s.lines().any(|l| l == "0,1,1,true"));
    let p = stdout(&fibdense(&["palindromes", "--len", "46368", "--k-max", "16"]));
    assert!(p.lines().any(|l| l == "4,1,6,24,true"));
    assert!(p.lines().any(|l| l == "16,1,21,21,true"));
    assert_eq!(fibdense(&["complexity", "--len", "10", "--n-max", "11"]).status.code(), Some(2));
}

#[test]
fn index_and_natural_density() {
    let s = stdout(&fibdense(&["index", "--cf", "0,2", "--depth", "0"]));
    assert_eq!(s.lines().nth(1).unwrap(), "0,2,1,2.000000000000,2.000000000000,4.000000000000");
    let s = stdout(&fibdense(&["index"]));
    assert_eq!(s.lines().count(), 32);
    let d = stdout(&fibdense(&["natural-density", "1000", "1000000"]));
    assert!(d.contains("1000,15,3/200,0.01500000"));
    assert!(d.contains("1000000,29,29/1000000,0.00002900"));
    assert_eq!(fibdense(&["index", "--cf", "0,1,0", "--depth", "0"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("fibdense-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let out = fibdense(&["density-table", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "k,m,n,DF_m,DF_n\n0,1,0,1.00,0.00\n1,0,1,0.00,1.00\n2,1,1,0.50,0.50\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bad_decimals_rejected() {
    assert_eq!(fibdense(&["density-table", "3", "--decimals", "31"]).status.code(), Some(2));
}
