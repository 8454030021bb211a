use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use sandwich::format::{parse_graph, parse_instance, parse_structure};
use sandwich::iso::is_isomorphic_small;
use sandwich::{ClassId, Graph};
use tempfile::NamedTempFile;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sandwich")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sandwich"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn solve_yes_prints_a_valid_completion() {
    let o = run_stdin(&["solve", "-", "--class", "split"], "p swi 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("YES"));
    let body: String = lines.map(|l| format!("{l}\n")).collect();
    let g = parse_graph(&format!("p gr 4\n{body}")).unwrap();
    assert!(ClassId::Split.contains(&g).unwrap());
    for (u, v) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
        assert!(g.has_edge(u, v));
    }
}

#[test]
fn solve_no_and_methods_agree() {
    let inst = temp("p swi 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\nf 1 3\nf 2 4\n");
    let path = inst.path().to_str().unwrap();
    for method in ["auto", "poly", "search", "oracle"] {
        let o = run(&["solve", path, "--class", "split", "--method", method]);
        assert!(o.status.success(), "{method}");
        assert_eq!(stdout(&o), "NO\n");
    }
}

#[test]
fn exit_codes() {
    let o = run_stdin(&["solve", "-", "--class", "split"], "p swi 2\ne 1 3\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = run_stdin(&["solve", "-", "--class", "split", "--method", "oracle"], "p swi 9\n");
    assert_eq!(o.status.code(), Some(3));

    let o = run_stdin(
        &["solve", "-", "--class", "permutation", "--method", "search", "--budget", "2"],
        "p swi 6\n",
    );
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(stdout(&o), "UNKNOWN(budget 2)\n");

    let o = run_stdin(&["solve", "-", "--class", "nope"], "p swi 2\n");
    assert_eq!(o.status.code(), Some(1));

    let o = run_stdin(&["solve", "-", "--class", "split"], "p swi 2\ne 1 2\nf 2 1\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("forced and forbidden"));
}

#[test]
fn ppower_matches_golden_k5() {
    let c5 = data("c5.fst");
    let o = run(&["ppower", "--builtin", "c5k5", "--structure", c5.to_str().unwrap()]);
    assert!(o.status.success());
    let got = parse_structure(&stdout(&o)).unwrap();
    let golden = parse_structure(&std::fs::read_to_string(data("k5.golden.fst")).unwrap()).unwrap();
    assert_eq!(got, golden);
    let g = got.binary_as_graph("E").unwrap();
    assert!(is_isomorphic_small(&g, &Graph::complete(5).unwrap()).unwrap());
}

#[test]
fn recognize_matches_line_bip_golden() {
    let golden = std::fs::read_to_string(data("line-bip.golden")).unwrap();
    for line in golden.lines() {
        let f: Vec<&str> = line.split_whitespace().collect();
        let g = data(&format!("{}.gr", f[1]));
        let o = run(&["recognize", g.to_str().unwrap(), "--class", f[0]]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), f[2], "{line}");
    }
}

#[test]
fn polymorphism_commands() {
    let o = run(&["polymorphism", "--siggers", "structA"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "NONE\n");

    let o = run(&["polymorphism", "--siggers", data("structA.fst").to_str().unwrap()]);
    assert_eq!(stdout(&o), "NONE\n");

    // on one element the only table is constant
    let o = run(&["polymorphism", "--siggers", data("one-element.fst").to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.starts_with("table 1 4\n"));
    assert_eq!(text.lines().skip(1).collect::<Vec<_>>(), ["0 0 0 0 -> 0"]);

    let o = run(&["polymorphism", "--naive", "4", "--identity", "structK"]);
    assert!(o.status.success());
    let count: u64 = stdout(&o).lines().next().unwrap().strip_prefix("COUNT ").unwrap().parse().unwrap();
    assert!(count > 0);
    let o = run(&["polymorphism", "--siggers", "structK"]);
    assert!(stdout(&o).starts_with("table 2 4\n"));
}

#[test]
fn gen_is_deterministic_and_output_flag_writes_file() {
    let args = ["gen", "--n", "7", "--p-forced", "0.3", "--p-forbidden", "0.3", "--seed", "42"];
    let a = stdout(&run(&args));
    assert_eq!(a, stdout(&run(&args)));
    let inst = parse_instance(&a).unwrap();
    assert_eq!(inst.vertex_count(), 7);
    assert_ne!(a, stdout(&run(&["gen", "--n", "7", "--p-forced", "0.3", "--p-forbidden", "0.3", "--seed", "43"])));

    let out = NamedTempFile::new().unwrap();
    let mut with_o = args.to_vec();
    with_o.extend(["-o", out.path().to_str().unwrap()]);
    let o = run(&with_o);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(out.path()).unwrap(), a);
}

#[test]
fn reductions_from_the_command_line() {
    let two = temp("p swi 2\n");
    let o = run(&["reduce", "pq-pad:1", two.path().to_str().unwrap()]);
    let inst = parse_instance(&stdout(&o)).unwrap();
    assert_eq!((inst.vertex_count(), inst.forced().len(), inst.forbidden().len()), (4, 4, 1));

    let o = run(&["reduce", "linebip-to-A", temp("p swi 3\ne 1 2\ne 2 3\n").path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "p sti 3\nc T 1 3 2\nc U_E 1\nc U_E 3\n");

    let o = run(&["reduce", "ham-to-kt:1,2", data("k3.gr").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let p3 = temp("p gr 3\ne 1 2\ne 2 3\n");
    let o = run(&["reduce", "ham-to-kt:1,3", p3.path().to_str().unwrap()]);
    assert_eq!(parse_graph(&stdout(&o)).unwrap().vertex_count(), 45);

    let o = run(&["reduce", "nope", p3.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gadget_command() {
    let clause = temp("p sti 3\nc R 1 2 3\n");
    let o = run(&["gadget", "--builtin", "split12-1in3", "--sandwich", clause.path().to_str().unwrap()]);
    assert!(o.status.success());
    let inst = parse_instance(&stdout(&o)).unwrap();
    assert_eq!(inst.forced().len(), 3);

    let betw = temp("p sti 2\nc Betw 1 1 2\n");
    let o = run(&["gadget", "--builtin", "betweenness-perm", "--sandwich", betw.path().to_str().unwrap()]);
    assert!(stdout(&o).starts_with("INFEASIBLE"));

    let g = temp("p sti 2\nc E 1 2\n");
    let o = run(&["gadget", "--builtin", "c5k5", g.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "p sti 4\nc E 1 3\nc E 3 4\nc E 4 2\n");
}

#[test]
fn crosscheck_reports_json() {
    let o = run(&["crosscheck", "--class", "threshold", "--exhaustive", "3", "--sizes", "5", "--count", "30"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exhaustive"], 27);
    assert_eq!(v["random"], 30);
    assert_eq!(v["discrepancies"], 0);
}
