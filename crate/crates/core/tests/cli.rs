//! The `ramsey` binary driven through its subcommands.

use std::path::Path;
use std::process::{Command, Output};

use ramsey_goodness::graph::{read_colouring, read_graph, write_colouring, write_graph};
use ramsey_goodness::{Graph, TwoColouring};

fn ramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn sample_writes_a_reproducible_graph() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for f in [&a, &b] {
        let o = ramsey(&["sample", "-N", "30", "--p", "0.2", "--seed", "5:1", "--out", path(f)]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(read_graph(&a).unwrap().num_vertices(), 30);
}

#[test]
fn arrow_exact_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = dir.path().join("k5.txt");
    let k4 = dir.path().join("k4.txt");
    write_graph(&Graph::complete(5), &k5).unwrap();
    write_graph(&Graph::complete(4), &k4).unwrap();

    let o = ramsey(&["arrow-exact", "--graph", path(&k5), "--r", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "HOLDS");

    let out = dir.path().join("c.txt");
    let o = ramsey(&[
        "arrow-exact",
        "--graph",
        path(&k4),
        "--r",
        "2",
        "--n",
        "2",
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAILS"));
    let c = read_colouring(&out, &Graph::complete(4)).unwrap();
    assert_eq!(c.red().num_edges(), 2);

    let o = ramsey(&[
        "arrow-exact",
        "--graph",
        path(&k5),
        "--r",
        "2",
        "--n",
        "2",
        "--budget",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("UNKNOWN"));
}

#[test]
fn adversary_reports_each_check() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    write_graph(&Graph::cycle(7), &g).unwrap();
    let out = dir.path().join("c.txt");
    let o = ramsey(&[
        "adversary",
        "--graph",
        path(&g),
        "--strategy",
        "boundary",
        "--r",
        "2",
        "--n",
        "3",
        "--t",
        "1",
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["strategy"], "boundary");
    assert_eq!(lines[1]["name"], "no_red_path");
    assert!(lines.iter().all(|l| l["pass"] == true && l["certified"] == true));
    assert!(out.is_file());

    write_graph(&Graph::complete(5), &g).unwrap();
    let o = ramsey(&[
        "adversary",
        "--graph",
        path(&g),
        "--strategy",
        "hitting",
        "--r",
        "2",
        "--n",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn decompose_prints_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let c = dir.path().join("c.txt");
    write_graph(&Graph::complete(11), &g).unwrap();
    write_colouring(&TwoColouring::all_blue(&Graph::complete(11)), &c).unwrap();
    let o = ramsey(&[
        "decompose",
        "--graph",
        path(&g),
        "--colouring",
        path(&c),
        "--r",
        "2",
        "--n",
        "4",
        "--t",
        "1",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("SETS"));
}

#[test]
fn theory_prints_the_chvatal_value() {
    let o = ramsey(&["theory", "--r", "2", "--n", "64", "--p", "0.125"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text
        .lines()
        .any(|l| l.starts_with("R(K_{r+1}, P_n)") && l.trim_end().ends_with("129")));
}

#[test]
fn sweep_then_plot() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("s.cfg");
    std::fs::write(&cfg, "r = 2\nn = 4\np = 0.1,0.5,0.9\nt = 1\ntrials = 4\n").unwrap();
    let out = dir.path().join("out");
    let o = ramsey(&[
        "sweep",
        "--config",
        path(&cfg),
        "--out",
        path(&out),
        "--workers",
        "2",
        "--limit",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = ramsey(&["sweep", "--config", path(&cfg), "--out", path(&out), "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = dir.path().join("c.svg");
    let o = ramsey(&[
        "plot",
        "--in",
        path(&out.join("results.csv")),
        "--out",
        path(&svg),
        "--x",
        "p",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(svg.is_file());
}

#[test]
fn bad_input_exits_with_error_code() {
    let o = ramsey(&[
        "arrow-exact",
        "--graph",
        "/nonexistent/graph.txt",
        "--r",
        "2",
        "--n",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let o = ramsey(&["theory", "--r", "2", "--n", "4", "--p", "1.5"]);
    assert_eq!(o.status.code(), Some(4));
}
