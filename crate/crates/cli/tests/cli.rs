use std::process::{Command, Output};

fn kratzer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kratzer")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = kratzer(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["spectrum", "--bogus", "1"][..],
        &["spectrum", "--Dtheta", "-1"],
        &["spectrum", "--Dr", "1:0:1"],
        &["spectrum", "--Z", "0"],
        &["spectrum", "--coupling", "spin-limit"],
        &["figure", "10"],
        &["wavefunction", "--n", "1:2:1"],
        &["table1", "--branch", "cosine,sine"],
        &["spectrum", "--config", "/nonexistent/kratzer.conf"],
    ] {
        let out = kratzer(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn spectrum_rows_and_unbound_sentinel() {
    let csv = stdout(&["spectrum", "--n", "1", "--m", "0", "--Dr", "-0.3,0", "--Dtheta", "0"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,m,branch,D_r,D_theta,E,status");
    assert_eq!(lines[1], "1,0,cosine,-0.3,0,,unbound");
    assert_eq!(lines[2], "1,0,cosine,0,0,-0.888888888889,bound");
}

#[test]
fn json_and_csv_agree() {
    let args = ["spectrum", "--n", "1:2:1", "--m", "1", "--branch", "cosine,sine", "--Dr", "0.3", "--Dtheta", "0.5"];
    let csv = stdout(&args);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&json_args)).unwrap();
    let rows = json.as_array().unwrap();
    let lines: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), lines.len());
    for (row, line) in rows.iter().zip(lines) {
        let e: f64 = line.split(',').nth(5).unwrap().parse().unwrap();
        assert_eq!(row["E"].as_f64().unwrap(), e);
        assert_eq!(row["status"], "bound");
    }
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    let out = dir.path().join("out.json");
    std::fs::write(&conf, "# spectrum run\nn = 1\nm = 0\nDr = 0.3\nformat = json\n").unwrap();
    let o = kratzer(&["spectrum", "--config", conf.to_str().unwrap(), "--Dr", "0", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(json[0]["D_r"].as_f64(), Some(0.0));
    assert_eq!(json[0]["E"].as_f64(), Some(-0.888888888889));
}

#[test]
fn bad_config_line_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("bad.conf");
    std::fs::write(&conf, "n = 1\nwidth = 3\n").unwrap();
    let o = kratzer(&["spectrum", "--config", conf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn table1_layout() {
    let csv = stdout(&["table1"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "D_r,m0,m1,m2,m3");
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("-0.3,,1.925"));
    assert!(lines[2].starts_with("0,0,2.662"));
}

#[test]
fn critical_schrodinger_coupling_is_higher() {
    let limit = stdout(&["critical", "--m", "1", "--Dr", "0.3"]);
    let plain = stdout(&["critical", "--m", "1", "--Dr", "0.3", "--coupling", "schrodinger"]);
    let value = |s: &str| -> f64 { s.lines().nth(1).unwrap().split(',').nth(3).unwrap().parse().unwrap() };
    assert!(value(&plain) > value(&limit));
}

#[test]
fn wavefunction_grid() {
    let csv = stdout(&["wavefunction", "--r", "0:2:1", "--theta", "0,1"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "r,theta,psi,status");
    assert_eq!(lines.len(), 7);
    assert!(lines.iter().skip(1).all(|l| l.ends_with(",bound")));
    let unbound = stdout(&["wavefunction", "--n", "1", "--m", "0", "--Dr", "-0.3", "--Dtheta", "0", "--r", "1", "--theta", "0"]);
    assert_eq!(unbound.lines().nth(1), Some("1,0,,unbound"));
}

#[test]
fn relativistic_columns() {
    let csv = stdout(&["relativistic", "--n", "2", "--Dtheta", "0.5"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,m,branch,D_r,D_theta,E_root,E_expansion,residual,status");
    let f: Vec<&str> = lines[1].split(',').collect();
    let (root, exp): (f64, f64) = (f[5].parse().unwrap(), f[6].parse().unwrap());
    assert!((root - exp).abs() < 1e-4);
    assert_eq!(f[8], "bound");
}

#[test]
fn schrodinger_figures_have_headers() {
    for (fig, header) in [
        ("1", "n,m,branch,D_r,D_theta,E,status"),
        ("5", "m,branch,D_theta,D_r_crit"),
        ("6", "n,m,branch,D_r,D_theta,E,status"),
    ] {
        let csv = stdout(&["figure", fig]);
        assert_eq!(csv.lines().next(), Some(header), "figure {fig}");
        assert!(csv.lines().count() > 50, "figure {fig}");
    }
}
