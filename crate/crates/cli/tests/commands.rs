use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bisyz::fixtures;
use bisyz::InputTriple;
use bisyz_cli::{format_instance, CSV_HEADER};
use tempfile::TempDir;

fn bisyz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bisyz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, p: &InputTriple) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, format_instance(p, None)).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Marker at `(m, n)` in the picture output.
fn marker(pic: &str, m: usize, n: i32) -> char {
    let line = pic
        .lines()
        .find(|l| l.split('|').next().map(str::trim) == Some(&n.to_string()))
        .unwrap();
    line.split('|').nth(1).unwrap().split_whitespace().nth(m).unwrap().chars().next().unwrap()
}

#[test]
fn classify_fixtures() {
    let dir = TempDir::new().unwrap();
    let o = bisyz(&["classify", arg(&write(&dir, "e.txt", &fixtures::standard_example()))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "class: NonGeneric\nresultant: 1\n");

    let o = bisyz(&["classify", arg(&write(&dir, "d.txt", &fixtures::planted_zero()))]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("Degenerate"));

    let o = bisyz(&["classify", arg(&write(&dir, "g.txt", &fixtures::generic()))]);
    assert_eq!(stdout(&o), "class: Generic\nresultant: -120\n");
}

#[test]
fn parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1 0 0 0 0 0\n2/4 0 0 0 0 1\n0 0 1 1 0 0\n").unwrap();
    assert_eq!(bisyz(&["classify", arg(&bad)]).status.code(), Some(2));
    assert_eq!(bisyz(&["classify", "/nonexistent/file"]).status.code(), Some(2));
    let good = write(&dir, "e.txt", &fixtures::standard_example());
    assert_eq!(bisyz(&["hilbert", "--box", "9by6", arg(&good)]).status.code(), Some(2));
}

#[test]
fn syzygies_of_fixtures() {
    let dir = TempDir::new().unwrap();
    let out = stdout(&bisyz(&["syzygies", arg(&write(&dir, "e.txt", &fixtures::standard_example()))]));
    assert!(out.contains("(2,3)  (w^2, z^2, -z*w)  ok"));
    assert!(out.contains("C1 = (-x*w^2, -x*z^2, x*z*w)"));
    assert!(out.contains("C2 = (-y*w^2, -y*z^2, y*z*w)"));

    let o = bisyz(&["--json", "syzygies", arg(&write(&dir, "g.txt", &fixtures::generic()))]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let mut degs: Vec<(i64, i64)> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| (g["degree"]["m"].as_i64().unwrap(), g["degree"]["n"].as_i64().unwrap()))
        .collect();
    degs.sort();
    assert_eq!(degs, vec![(3, 3), (3, 3), (4, 2), (4, 2), (4, 2), (6, 1)]);
    assert_eq!(v["verdict"], "pass");

    let o = bisyz(&["syzygies", arg(&write(&dir, "d.txt", &fixtures::planted_zero()))]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn hilbert_csv() {
    let dir = TempDir::new().unwrap();
    for p in [fixtures::standard_example(), fixtures::generic()] {
        let o = bisyz(&["hilbert", "--csv", arg(&write(&dir, "p.txt", &p))]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let rows: Vec<Vec<i64>> = lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
        assert_eq!(rows.len(), 70);
        for r in &rows {
            assert_eq!((r[2], r[4], r[6]), (r[3], r[5], r[7]), "row {r:?}");
        }
        let cell = rows.iter().find(|r| r[0] == 5 && r[1] == 2).unwrap();
        assert_eq!(cell[3], 6);
    }
}

#[test]
fn pictures() {
    let dir = TempDir::new().unwrap();
    let pic = stdout(&bisyz(&["picture", arg(&write(&dir, "g.txt", &fixtures::generic()))]));
    for (m, n) in [(6, 1), (3, 3), (4, 3)] {
        assert_eq!(marker(&pic, m, n), '#');
    }
    for n in 0..=6 {
        assert_eq!(marker(&pic, 2, n), '.');
    }
    let pic2 = stdout(&bisyz(&["picture", arg(&write(&dir, "e.txt", &fixtures::standard_example()))]));
    assert_eq!(marker(&pic2, 2, 3), '#');
    for pic in [&pic, &pic2] {
        for m in 5..=9 {
            for n in 2..=6 {
                assert_eq!(marker(pic, m, n), '*');
            }
        }
        assert!(pic.contains("legend"));
    }
}

#[test]
fn resolutions() {
    let dir = TempDir::new().unwrap();
    let o = bisyz(&["resolution", "--verify", arg(&write(&dir, "e.txt", &fixtures::standard_example()))]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("ranks: 1,3,5,4,1"));
    assert!(out.contains("M2: R(-2,-3) + R(-4,-2)^3 + R(-6,-1)"));
    assert!(out.contains("M3: R(-4,-3)^2 + R(-6,-2)^2"));
    assert!(out.contains("verdict: pass"));
    assert_eq!(out.matches("PASS").count(), 6);

    let out = stdout(&bisyz(&["resolution", arg(&write(&dir, "g.txt", &fixtures::generic()))]));
    assert!(out.contains("ranks: 1,3,6,5,1"));
    assert!(out.contains("M2: R(-3,-3)^2 + R(-4,-2)^3 + R(-6,-1)"));
    assert!(out.contains("M3: R(-4,-3)^3 + R(-6,-2)^2"));
    assert!(out.contains("M4: R(-6,-3)"));
}

#[test]
fn gen_is_deterministic_and_classified() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for (class, expect) in [("generic", "Generic"), ("nongeneric", "NonGeneric")] {
        assert_eq!(bisyz(&["gen", "--class", class, "--seed", "1", "-o", arg(&a)]).status.code(), Some(0));
        assert_eq!(bisyz(&["gen", "--class", class, "--seed", "1", "-o", arg(&b)]).status.code(), Some(0));
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        let out = stdout(&bisyz(&["classify", arg(&a)]));
        assert!(out.starts_with(&format!("class: {expect}\n")), "{out}");
    }
    let out = stdout(&bisyz(&["syzygies", arg(&a)]));
    assert!(out.contains("(2,3)  "));
    let o = bisyz(&["gen", "--class", "generic", "--bound", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bisyz(&["gen", "--class", "generic", "--seed", "5"]);
    assert_eq!(stdout(&o), stdout(&bisyz(&["gen", "--class", "generic", "--seed", "5"])));
}

#[test]
fn verify_fixtures() {
    let dir = TempDir::new().unwrap();
    for p in [fixtures::standard_example(), fixtures::generic()] {
        let o = bisyz(&["verify", arg(&write(&dir, "p.txt", &p))]);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{out}");
        assert!(out.ends_with("verdict: pass\n"));
        assert!(!out.contains("FAIL"));
    }
    let o = bisyz(&["--json", "verify", arg(&write(&dir, "d.txt", &fixtures::planted_zero()))]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["first_failure"]["check"], "classification");
}
