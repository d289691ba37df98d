use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dyck-atlas"));
    cmd.env_remove("DYCK_ATLAS_MAX_N");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", stderr(&out));
    stdout(&out)
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        ok(&["enumerate", "--lambda", "UDUUDUDD", "--format", "count"]),
        "8\n"
    );
    assert_eq!(
        ok(&["enumerate", "--lambda", "UUDD", "--format", "count"]),
        "1\n"
    );
    assert_eq!(
        ok(&[
            "enumerate",
            "--lambda",
            "UDUD",
            "--mu",
            "UUDD",
            "--format",
            "count"
        ]),
        "1\n"
    );
    assert_eq!(
        ok(&["enumerate", "--lambda", "(())()", "--format", "count"]),
        "3\n"
    );
}

#[test]
fn enumerate_text_and_stats() {
    let text = ok(&["enumerate", "--lambda", "UDUD"]);
    assert_eq!(
        text,
        "lower UDUD\nupper UUDD\ntile 0,0\n\nlower UDUD\nupper UDUD\n"
    );
    let stats = ok(&["enumerate", "--lambda", "UDUUDUDD", "--format", "stats"]);
    let rows: Vec<&str> = stats.lines().collect();
    assert_eq!(rows[0], "upper area tiles art dis");
    assert_eq!(rows.len(), 9);
    assert!(rows.contains(&"UUUUDDDD 4 4 4 1"));
}

#[test]
fn enumerate_rejects_bad_shapes() {
    let out = run(&["enumerate", "--lambda", "UUDD", "--mu", "UDUD"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("dips below"));
    let out = run(&["enumerate", "--lambda", "DU"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn apply_writes_tiling_and_stats() {
    let file = scratch("dtr_21.tiling");
    let line = ok(&[
        "apply",
        "dtr",
        "--lambda",
        "UDUD",
        "--sigma",
        "2,1",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(line, "lower UDUD upper UUDD area 1 tiles 1 art 1 dis 1\n");
    assert_eq!(
        fs::read_to_string(&file).unwrap(),
        "lower UDUD\nupper UUDD\ntile 0,0\n"
    );

    let out = run(&["apply", "dts", "--p", "0,1,0,5"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("lower UDUUDUDD\n"));
    assert!(stderr(&out).contains(" art 2 "));
}

#[test]
fn apply_rejects_non_extensions() {
    let out = run(&["apply", "dts", "--lambda", "UUDD", "--sigma", "2,1"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = stderr(&out);
    assert!(msg.contains("not a linear extension"));
    assert!(msg.contains("(2,3)") && msg.contains("(1,4)"), "{msg}");
}

#[test]
fn apply_usage_errors() {
    for args in [
        &["apply", "dts", "--sigma", "1"][..],
        &["apply", "dts", "--lambda", "UD"],
        &["apply", "dts", "--p", "0,3"],
        &["apply", "dts", "--lambda", "UD", "--sigma", "1", "--p", "0"],
        &["apply", "dtx", "--p", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let out = run(&["apply", "dts", "--lambda", "UUDD", "--p", "0,2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invert_column_eight() {
    let out = ok(&[
        "invert",
        "dts",
        golden("column8_dts.tiling").to_str().unwrap(),
    ]);
    assert_eq!(
        out,
        "lambda UDUUDUDD\np 0,1,1,0\nsigma 2,4,3,1\nmin-word 2,4,3,1\n"
    );
}

#[test]
fn invert_empty_order_one() {
    let out = ok(&["invert", "dtr", golden("empty_ud.tiling").to_str().unwrap()]);
    assert_eq!(out, "lambda UD\np 0\nsigma 1\nmin-word 1\n");
}

#[test]
fn invert_rejects_bad_files() {
    let overlap = scratch("overlap.tiling");
    fs::write(&overlap, "lower UDUD\nupper UUDD\ntile 0,0\ntile 0,0\n").unwrap();
    let out = run(&["invert", "dts", overlap.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("covered twice"));

    let garbled = scratch("garbled.tiling");
    fs::write(&garbled, "lower UDUD\nupper UUDD\nbox 0,0\n").unwrap();
    assert_eq!(
        run(&["invert", "dts", garbled.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );

    let missing = scratch("does-not-exist.tiling");
    assert_eq!(
        run(&["invert", "dts", missing.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn apply_then_invert_round_trips() {
    let cases = [
        ("UDUUDUDD", "2,3,1,4"),
        ("UDUUDUDD", "2,4,3,1"),
        ("UUDUUDDDUDUUUDDUDUUDDDUD", "6,12,1,7,10,5,2,9,8,3,11,4"),
        ("UDUDUD", "3,1,2"),
    ];
    for (lambda, sigma) in cases {
        for map in ["dts", "dtr"] {
            let file = scratch(&format!("rt_{map}_{lambda}.tiling"));
            let f = file.to_str().unwrap();
            ok(&[
                "apply", map, "--lambda", lambda, "--sigma", sigma, "--out", f,
            ]);
            let out = ok(&["invert", map, f]);
            assert!(out.starts_with(&format!("lambda {lambda}\n")), "{out}");
            assert!(out.contains(&format!("\nsigma {sigma}\n")), "{out}");
        }
    }
}

#[test]
fn twelve_chord_statistics() {
    let lambda = "UUDUUDDDUDUUUDDUDUUDDDUD";
    let sigma = "6,12,1,7,10,5,2,9,8,3,11,4";
    let s = ok(&[
        "apply",
        "dts",
        "--lambda",
        lambda,
        "--sigma",
        sigma,
        "--out",
        scratch("s12").to_str().unwrap(),
    ]);
    assert!(s.contains(" art 34 "), "{s}");
    let r = ok(&[
        "apply",
        "dtr",
        "--lambda",
        lambda,
        "--sigma",
        sigma,
        "--out",
        scratch("r12").to_str().unwrap(),
    ]);
    assert!(r.trim_end().ends_with(" dis 6"), "{r}");
}

#[test]
fn genfun_variables() {
    let g = |v: &str, lambda: &str| ok(&["genfun", "--lambda", lambda, "--variable", v]);
    assert_eq!(g("q", "UDUUDUDD"), "1 + 2*q + 2*q^2 + 2*q^3 + q^4\n");
    assert_eq!(g("z", "UDUUDUDD"), "1 + 5*z + 2*z^2\n");
    assert_eq!(g("q", "UUDD"), "1\n");
    assert_eq!(g("t", "UDUUDUDD"), "1 + 2*t + 3*t^2 + t^3 + t^4\n");
    assert_eq!(g("x", "UDUUDUDD"), "7 + x\n");
    let fixed = ok(&[
        "genfun",
        "--lambda",
        "UDUD",
        "--mu",
        "UUDD",
        "--variable",
        "q",
    ]);
    assert_eq!(fixed, "q\n");
}

#[test]
fn verify_suites() {
    let out = ok(&["verify", "--max-n", "4", "--suite", "hook"]);
    assert_eq!(out, "PASS hook: 23 paths checked, n <= 4\n");
    assert!(ok(&["verify", "--max-n", "5", "--suite", "qart"]).starts_with("PASS qart"));
    assert!(ok(&["verify", "--max-n", "6", "--suite", "mad"]).starts_with("PASS mad: 874 "));
}

#[test]
fn verify_all_is_the_ci_gate() {
    let out = ok(&["verify", "--max-n", "5", "--suite", "all"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l.starts_with("PASS ")), "{out}");
}

#[test]
fn verify_limits() {
    let out = ok(&["verify", "--max-n", "6", "--suite", "genfun"]);
    assert!(out.contains("n <= 5 (capped from 6"), "{out}");
    let out = run(&["verify", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--unsafe-max-n"));
    let out = bin()
        .args(["verify", "--max-n", "3", "--suite", "hook"])
        .env("DYCK_ATLAS_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["verify", "--max-n", "3", "--suite", "tableaux"])
        .env("DYCK_ATLAS_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "PASS tableaux: 10 tableaux checked, n <= 3\n");
    assert_eq!(
        run(&["verify", "--max-n", "11", "--unsafe-max-n"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn conjecture_report() {
    let out = ok(&["conjecture", "--n", "4"]);
    assert!(out.starts_with("n = 4: 14 paths in 9 tree classes\n"));
    assert!(out.contains("tiles generating function agrees in 9 of 9 classes"));
    assert!(out.contains("area differ"));
    let one = ok(&["conjecture", "--n", "1"]);
    assert!(one.contains("agrees in 1 of 1 classes"));
    assert_eq!(run(&["conjecture", "--n", "7"]).status.code(), Some(2));
}

#[test]
fn render_goldens() {
    for name in ["empty_ud", "one_box", "column8_dts"] {
        let input = golden(&format!("{name}.tiling"));
        for (format, ext) in [("ascii", "txt"), ("svg", "svg")] {
            let out = ok(&["render", input.to_str().unwrap(), "--format", format]);
            let expected = fs::read_to_string(golden(&format!("{name}.{ext}"))).unwrap();
            assert_eq!(out, expected, "{name} as {format}");
        }
    }
}

#[test]
fn render_to_file_is_deterministic() {
    let input = golden("column8_dts.tiling");
    let a = scratch("a.svg");
    let b = scratch("b.svg");
    for f in [&a, &b] {
        ok(&[
            "render",
            input.to_str().unwrap(),
            "--format",
            "svg",
            "--out",
            f.to_str().unwrap(),
        ]);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn one_box_picture() {
    let art = fs::read_to_string(golden("one_box.txt")).unwrap();
    assert_eq!(art, "   / \\\n / \\A/ \\\n");
    assert_eq!(
        fs::read_to_string(golden("empty_ud.txt")).unwrap(),
        " / \\\n"
    );
}
