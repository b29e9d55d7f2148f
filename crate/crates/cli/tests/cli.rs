use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_grid-torus"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn identity_verdicts() {
    assert_eq!(stdout(&run(&["identity", "--n", "2"], None)), "a = 1\n");
    assert_eq!(stdout(&run(&["identity", "--n", "3"], None)), "a = 3\n");
    assert_eq!(
        stdout(&run(&["identity", "--n", "4"], None)),
        "no solution\n"
    );
    assert_eq!(
        stdout(&run(&["identity", "--n", "3", "--a", "2"], None)),
        "a = 2: fails\n"
    );
}

#[test]
fn build_round_trips_through_stdin() {
    let json = stdout(&run(
        &["build", "scroll", "--n", "5", "--split", "1,1,1,1,3"],
        None,
    ));
    let g = grid_torus::grid::GridData::from_json(&json).unwrap();
    assert_eq!(g.to_json(), json);
    let v = run(&["validate"], Some(&json));
    assert!(v.status.success(), "{}", stderr(&v));
    let c = run(&["classify", "--grid", "-"], Some(&json));
    assert!(stdout(&c).starts_with("case: Scroll"), "{}", stdout(&c));
}

#[test]
fn p1cubed_pipeline() {
    let json = stdout(&run(&["build", "p1cubed"], None));
    let out = stdout(&run(&["classify"], Some(&json)));
    assert!(out.contains("rho=3 product case"), "{out}");
    let chi = stdout(&run(&["chi", "--bundle", "L", "--m", "1"], Some(&json)));
    assert_eq!(chi, "chi = 1 + 3*t + 3*t^2 + t^3\nchi(1) = 8\n");
}

#[test]
fn chi_on_projective_space() {
    let json = stdout(&run(&["build", "projective", "--weights", "0,1,2,3"], None));
    let chi = stdout(&run(&["chi", "--m", "2"], Some(&json)));
    assert!(chi.ends_with("chi(1) = 10\n"), "{chi}");
}

#[test]
fn so_table_row() {
    let out = stdout(&run(&["table", "so-adjoint", "--m", "10"], None));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "n,G,rk G,X_adj,X_i,Y_*,Y_0",
            "6,SO_10,5,G(1,Q^8),P^1xQ^4,•⊔P^1xP^1,P^1⊔P^1"
        ]
    );
    let out = stdout(&run(&["table", "so-adjoint", "--m", "6..12"], None));
    assert_eq!(out.lines().count(), 8);
    let out = stdout(&run(&["table", "sp", "--n", "3..=4"], None));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn nef_and_bandwidth() {
    let json = stdout(&run(
        &["build", "scroll", "--n", "4", "--split", "1,1,1,3"],
        None,
    ));
    assert_eq!(stdout(&run(&["bandwidth"], Some(&json))), "3\n");
    assert_eq!(
        stdout(&run(&["nef-check", "--bundle", "K+tauL"], Some(&json))),
        "K+tauL: nef\n"
    );
    let o = run(
        &[
            "nef-check",
            "--bundle",
            "K+tauL",
            "--tau",
            "7/2",
            "--minimal",
        ],
        Some(&json),
    );
    assert_eq!(stdout(&o), "K+tauL: not nef\n");
    assert_eq!(
        stdout(&run(&["nef-check", "--bundle", "-K"], Some(&json))),
        "-K: nef\n"
    );
}

#[test]
fn dot_export() {
    let json = stdout(&run(&["build", "sp6"], None));
    let dot = stdout(&run(&["export-dot"], Some(&json)));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("rank=same").count(), 4);
}

#[test]
fn malformed_json_exits_2_with_path() {
    let bad = r#"{"schema":"grid-torus/1","rank":1,"n":2,"flags":{"equalized":true,"edges_complete":true,"contact":false},"components":[{"id":"a","label":"point","dim":"x"}],"edges":[]}"#;
    let o = run(&["validate"], Some(bad));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("components[0].dim"), "{}", stderr(&o));
    assert_eq!(run(&["classify"], Some("{")).status.code(), Some(2));
}

#[test]
fn violations_exit_3() {
    let json = stdout(&run(&["build", "p1cubed"], None));
    let mut g = grid_torus::grid::GridData::from_json(&json).unwrap();
    let first = g.components[0].clone();
    g.components.push(first);
    let o = run(&["validate"], Some(&g.to_json()));
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("DuplicateId"), "{}", stderr(&o));
}

#[test]
fn misuse_exits_64() {
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(64));
    assert_eq!(run(&["identity"], None).status.code(), Some(64));
    assert_eq!(
        run(&["build", "scroll", "--n", "5", "--split", "1,1,3"], None)
            .status
            .code(),
        Some(64)
    );
    assert_eq!(run(&["--help"], None).status.code(), Some(0));
}

#[test]
fn verify_passes() {
    let o = run(&["verify"], None);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains(" PASS ")).count(), 10);
}
