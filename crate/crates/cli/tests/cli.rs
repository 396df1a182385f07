use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ydhopf")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn example(dir: &TempDir, file: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(file);
    let mut all = vec!["example"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = run(&all);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn sweedler_checks_clean() {
    let dir = TempDir::new().unwrap();
    let sw = example(&dir, "sw.struct", &["sweedler", "--k", "1"]);
    let o = run(&["check", p(&sw), "--kind", "ydpost", "--field", "Q", "--report", "machine"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with('#') || l.split(' ').nth(1) == Some("pass")), "{out}");
    assert!(out.contains("P-CONV pass"));
}

#[test]
fn sweedler_file_holds_both_tables() {
    let dir = TempDir::new().unwrap();
    let text = fs::read_to_string(example(&dir, "sw.struct", &["sweedler", "--k", "1"])).unwrap();
    let section = |name: &str| -> Vec<String> {
        let start = text.find(&format!("[{name} 4 4]")).unwrap();
        text[start..].lines().skip(1).take_while(|l| !l.is_empty()).map(str::to_string).collect()
    };
    // x⇀x = k(1-g) for α versus k(g-1) for β.
    assert!(section("action").contains(&"2 2 0 1".to_string()));
    assert!(section("action").contains(&"2 2 1 -1".to_string()));
    assert!(section("beta").contains(&"2 2 0 -1".to_string()));
    assert!(section("beta").contains(&"2 2 1 1".to_string()));
}

#[test]
fn edited_coefficient_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let sw = example(&dir, "sw.struct", &["sweedler"]);
    let text = fs::read_to_string(&sw).unwrap().replace("\n2 2 1 -1\n", "\n2 2 1 1\n");
    let bad = dir.path().join("bad.struct");
    fs::write(&bad, text).unwrap();
    let o = run(&["check", p(&bad), "--report", "machine"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let fail = out.lines().find(|l| l.contains(" fail ")).expect("a failing axiom");
    assert!(fail.contains("witness=("), "{fail}");
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let empty = dir.path().join("empty.struct");
    fs::write(&empty, "").unwrap();
    let o = run(&["check", p(&empty)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));

    let sw = example(&dir, "sw.struct", &["sweedler"]);
    assert_eq!(code(&run(&["check", p(&sw), "--kind", "hopf"])), 2);
    assert_eq!(code(&run(&["check", p(&sw), "--field", "Fp:5"])), 2);
    assert_eq!(code(&run(&["check", p(&sw), "--axioms", "NOPE"])), 2);
    assert_eq!(code(&run(&["check", p(&dir.path().join("missing"))])), 2);

    let text = fs::read_to_string(&sw).unwrap().replace("mul 2 2 0 1", "mul 2 2 7 1");
    fs::write(&empty, text).unwrap();
    let o = run(&["check", p(&empty)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
}

#[test]
fn axiom_filter() {
    let dir = TempDir::new().unwrap();
    let sw = example(&dir, "sw.struct", &["sweedler"]);
    let o = run(&["check", p(&sw), "--axioms", "P-DOT,P-MP5", "--report", "machine"]);
    assert_eq!(code(&o), 0);
    let ids: Vec<String> = stdout(&o).lines().filter(|l| !l.starts_with('#')).map(|l| l.split(' ').next().unwrap().into()).collect();
    assert_eq!(ids, ["P-DOT", "P-MP5"]);
}

#[test]
fn subadjacent_is_h4() {
    let dir = TempDir::new().unwrap();
    let sw = example(&dir, "sw.struct", &["sweedler"]);
    let o = run(&["derive", p(&sw), "subadjacent"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("kind hopf\n"));
    // x•x = 0 leaves no `mul 2 2` line; g•g = 1; x•g = -g•x.
    assert!(!out.contains("\nmul 2 2 "));
    assert!(out.contains("\nmul 1 1 0 1\n"));
    assert!(out.contains("\nmul 1 2 3 -1\n") && out.contains("\nmul 2 1 3 1\n"));
}

#[test]
fn matched_pair_round_trip_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let sw = example(&dir, "sw.struct", &["sweedler"]);
    let mp = dir.path().join("mp.struct");
    assert_eq!(code(&run(&["derive", p(&sw), "matchedpair", "--out", p(&mp)])), 0);
    assert_eq!(code(&run(&["check", p(&mp), "--kind", "matchedpair"])), 0);
    let back = run(&["derive", p(&mp), "posthopf"]);
    assert_eq!(code(&back), 0);
    assert_eq!(stdout(&back), fs::read_to_string(&sw).unwrap());
}

#[test]
fn postlie_of_sweedler_is_empty() {
    let dir = TempDir::new().unwrap();
    let sw = example(&dir, "sw.struct", &["sweedler"]);
    let o = run(&["derive", p(&sw), "postlie"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("[bracket 0 0]"));
}

#[test]
fn rota_baxter_targets() {
    let dir = TempDir::new().unwrap();
    let sw = example(&dir, "sw.struct", &["sweedler"]);
    let rb = dir.path().join("rb.struct");
    assert_eq!(code(&run(&["derive", p(&sw), "rb_l", "--out", p(&rb)])), 0);
    let original = fs::read_to_string(&sw).unwrap();
    for t in ["post_m", "post_r"] {
        let o = run(&["derive", p(&rb), t]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o), original, "{t}");
    }
    let sk = run(&["derive", p(&rb), "sk"]);
    assert_eq!(code(&sk), 0);
    assert!(stdout(&sk).starts_with("kind hopf\n"));
    assert_eq!(code(&run(&["derive", p(&sw), "sk"])), 2);
}

#[test]
fn other_examples() {
    let dir = TempDir::new().unwrap();
    let en = example(&dir, "e2.struct", &["en", "--n", "2", "--A", "1,0;0,1"]);
    assert!(fs::read_to_string(&en).unwrap().contains("\ndim 8\n"));
    let s3 = example(&dir, "s3.struct", &["group", "--name", "S3"]);
    let adj = example(&dir, "adj.struct", &["adjoint", "--from", p(&s3)]);
    assert_eq!(code(&run(&["check", p(&adj)])), 0);
    let h4 = example(&dir, "h4.struct", &["h4"]);
    assert_eq!(code(&run(&["check", p(&h4), "--kind", "hopf"])), 0);
    // The adjoint action of a non-cocommutative algebra is not a coalgebra map.
    assert_eq!(code(&run(&["example", "adjoint", "--from", p(&h4)])), 2);
    let grb = example(&dir, "grb.struct", &["group-rb", "--name", "S3"]);
    let lin = dir.path().join("lin.struct");
    assert_eq!(code(&run(&["derive", p(&grb), "posthopf", "--out", p(&lin)])), 0);
    assert_eq!(
        fs::read_to_string(&lin).unwrap(),
        fs::read_to_string(example(&dir, "s3lin.struct", &["s3"])).unwrap()
    );
    example(&dir, "u.struct", &["restricted", "--p", "3"]);
    example(&dir, "f5.struct", &["sweedler", "--k", "2", "--field", "Fp:5"]);
    assert_eq!(code(&run(&["example", "sweedler", "--field", "Fp:2"])), 2);
}

#[test]
fn report_verb_and_determinism() {
    let dir = TempDir::new().unwrap();
    let sw = example(&dir, "sw.struct", &["sweedler"]);
    let o = run(&["report", p(&sw)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("braided-commutative true"));
    let a = stdout(&run(&["check", p(&sw), "--report", "machine"]));
    let b = stdout(&run(&["check", p(&sw), "--report", "machine"]));
    assert_eq!(a, b);
}
