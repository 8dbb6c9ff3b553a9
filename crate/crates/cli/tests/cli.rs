use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn nlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlie"))
        .args(args)
        .env_remove("NLIE_SEED")
        .output()
        .expect("spawn nlie")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf8")
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf8 path")
}

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let p = std::env::temp_dir().join(format!("nlie-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&p).expect("temp dir");
        TempDir(p)
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.0.join(name);
        std::fs::write(&p, contents).expect("write");
        p
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn check_accepts_simple_four_algebra() {
    let o = nlie(&["check", path(&data("simple4.nlie"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n-jacobi: pass\ninvariance: pass\n");
}

#[test]
fn check_reports_perturbed_structure_constant() {
    let t = TempDir::new("perturbed");
    let text = std::fs::read_to_string(data("simple3.nlie"))
        .unwrap()
        .replace("bracket 1 2 3 -> 4: -1", "bracket 1 2 3 -> 4: 2");
    let f = t.file("p.nlie", &text);
    let o = nlie(&["check", path(&f)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.contains("residual")), "{out}");
}

#[test]
fn check_rejects_malformed_file() {
    let t = TempDir::new("malformed");
    let f = t.file("bad.nlie", "nlie 1\nn 3\ndim four\n");
    let o = nlie(&["check", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":3:5:"), "{}", stderr(&o));
}

#[test]
fn non_increasing_tuple_is_a_canonicality_error() {
    let t = TempDir::new("tuple");
    let f = t.file(
        "t.nlie",
        "nlie 1\nn 3\ndim 4\nbasis e1 e2 e3 e4\nbracket 2 1 3 -> 4: 1\n",
    );
    let o = nlie(&["check", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":5:"), "{}", stderr(&o));
}

#[test]
fn missing_file_is_an_input_error() {
    let o = nlie(&["check", "/nonexistent/x.nlie"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_reports_three_factors() {
    let o = nlie(&["analyze", path(&data("ssz.nlie"))]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("factors: 4,4,1\n"), "{out}");
    assert!(out.contains("centre dim: 1\n"));
    assert!(out.contains("semisimple: no\n"));
}

#[test]
fn analyze_abelian_is_solvable_with_full_centre() {
    let o = nlie(&["analyze", path(&data("abelian3.nlie"))]);
    let out = stdout(&o);
    assert!(out.contains("solvable: yes\n"), "{out}");
    assert!(out.contains("centre dim: 3\n"), "{out}");
}

#[test]
fn analyze_lorentzian_is_a_one_dimensional_double_extension() {
    let o = nlie(&["analyze", path(&data("lorentzian5.nlie"))]);
    let out = stdout(&o);
    assert!(out.contains("indecomposable: double-extension, dim I = 1\n"), "{out}");
    assert!(out.contains("signature: 4,1,0\n"), "{out}");
}

#[test]
fn construct_simple_uses_the_sign_vector_as_metric() {
    let o = nlie(&["construct", "simple", "--n", "3", "--signs", "+++-"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("metric diag 1 1 1 -1\n"));
}

#[test]
fn construct_simple_euclidean_canonical_lines() {
    let o = nlie(&["construct", "simple", "--n", "3", "--signs", "++++"]);
    let out = stdout(&o);
    for line in [
        "n 3",
        "dim 4",
        "metric diag 1 1 1 1",
        "bracket 1 2 3 -> 4: 1",
        "bracket 2 3 4 -> 1: -1",
    ] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in {out}");
    }
}

#[test]
fn construct_dext1_from_cross_product_gives_lorentzian_file() {
    let o = nlie(&["construct", "dext1", "--data", path(&data("cross_product.dext"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(data("lorentzian5.nlie")).unwrap());
}

#[test]
fn construct_dsum_with_mismatched_arity_fails() {
    let o = nlie(&[
        "construct",
        "dsum",
        path(&data("simple3.nlie")),
        path(&data("simple4.nlie")),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("arity"));
}

#[test]
fn construct_output_always_checks() {
    let t = TempDir::new("construct");
    let out = t.0.join("c.nlie");
    let runs: Vec<Vec<String>> = vec![
        vec!["construct".into(), "simple".into(), "--n".into(), "5".into(), "--signs".into(), "-+-+-+".into()],
        vec!["construct".into(), "abelian".into(), "--n".into(), "3".into(), "--diag".into(), "2,-1".into(), "--hyperbolic".into(), "2".into()],
        vec!["construct".into(), "coadjoint".into(), path(&data("lorentzian5.nlie")).into()],
        vec!["construct".into(), "dextgen".into(), "--data".into(), path(&data("coadjoint3.dext")).into()],
        vec!["construct".into(), "dsum".into(), path(&data("simple3.nlie")).into(), path(&data("lorentzian5.nlie")).into()],
    ];
    for mut args in runs {
        args.push("-o".into());
        args.push(path(&out).into());
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = nlie(&refs);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let c = nlie(&["check", path(&out)]);
        assert_eq!(c.status.code(), Some(0), "{args:?}: {}", stdout(&c));
    }
}

#[test]
fn construct_rejects_bad_signs() {
    let o = nlie(&["construct", "simple", "--n", "3", "--signs", "++x+"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_dext1_rejects_data_failing_condition_one() {
    let t = TempDir::new("cond1");
    let text = std::fs::read_to_string(data("cross_product.dext"))
        .unwrap()
        .replace("lower w2 w3 -> w1: 1", "lower w2 w3 -> w1: 2");
    let f = t.file("bad.dext", &text);
    let o = nlie(&["construct", "dext1", "--data", path(&f)]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
}

#[test]
fn extract_lorentzian_recovers_cross_product_data() {
    let o = nlie(&["extract", path(&data("lorentzian5.nlie"))]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let input = std::fs::read_to_string(data("cross_product.dext")).unwrap();
    let body: String = input.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    assert!(out.starts_with(&body), "{out}");
    assert!(out.contains("adapted rows\nrow 1 0 0 0 0\n"));
}

#[test]
fn extract_then_construct_reproduces_lorentzian_file() {
    let t = TempDir::new("rt");
    let x = t.0.join("x.dext");
    let o = nlie(&["extract", path(&data("lorentzian5.nlie")), "-o", path(&x)]);
    assert_eq!(o.status.code(), Some(0));
    let o = nlie(&["construct", "dext1", "--data", path(&x)]);
    assert_eq!(stdout(&o), std::fs::read_to_string(data("lorentzian5.nlie")).unwrap());
}

#[test]
fn extract_coadjoint_gives_general_data() {
    let o = nlie(&["extract", path(&data("coadjoint3.nlie"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), std::fs::read_to_string(data("coadjoint3.dext")).unwrap());
}

#[test]
fn extract_refuses_simple_input() {
    let o = nlie(&["extract", path(&data("simple3.nlie"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("input is simple"));
}

#[test]
fn extract_refuses_decomposable_input() {
    let o = nlie(&["extract", path(&data("ssz.nlie"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("input decomposable"));
}

#[test]
fn decompose_lists_factor_bases() {
    let o = nlie(&["decompose", path(&data("ssz.nlie")), "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("factors: 4,4,1\n"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("  basis")).count(), 9);
}

#[test]
fn seed_environment_variable_matches_flag() {
    let f = data("coadjoint3.nlie");
    let by_flag = nlie(&["analyze", path(&f), "--seed", "11"]);
    let by_env = Command::new(env!("CARGO_BIN_EXE_nlie"))
        .args(["analyze", path(&f)])
        .env("NLIE_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(by_flag.stdout, by_env.stdout);
}

#[test]
fn arity_two_input_warns() {
    let t = TempDir::new("n2");
    let f = t.file(
        "so3.nlie",
        "nlie 1\nn 2\ndim 3\nbasis e1 e2 e3\nmetric diag 1 1 1\nbracket 1 2 -> 3: 1\nbracket 1 3 -> 2: -1\nbracket 2 3 -> 1: 1\n",
    );
    let o = nlie(&["check", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning: n = 2"));
}
