use std::io::Write;
use std::process::{Command, Output};

fn motif(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motif")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn at(f: &tempfile::NamedTempFile) -> String {
    format!("@{}", f.path().display())
}

#[test]
fn counts_four_paths_in_five_cycle() {
    let o = motif(&["count", "--kind", "sub", "--pattern", "DDW", "--host", "Dhc"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn engines_agree() {
    for (pattern, host) in [("Bw", "Dhc"), ("DDW", "En@o"), ("Cr", "G@CB\\g"), ("D]o", "G@CB\\g")] {
        let outs: Vec<String> = ["auto", "dp", "mm", "brute"]
            .iter()
            .map(|e| stdout(&motif(&["count", "--kind", "hom", "--engine", e, "--pattern", pattern, "--host", host])))
            .collect();
        assert!(outs.iter().all(|o| o == &outs[0] && !o.is_empty()), "{pattern} {host}: {outs:?}");
    }
    for kind in ["sub", "indsub", "emb", "strembed"] {
        let a = stdout(&motif(&["count", "--kind", kind, "--pattern", "Cr", "--host", "G@CB\\g"]));
        let b = stdout(&motif(&["count", "--kind", kind, "--engine", "brute", "--pattern", "Cr", "--host", "G@CB\\g"]));
        assert_eq!(a, b, "{kind}");
    }
}

#[test]
fn spasm_lists_eight_graphs() {
    let o = motif(&["spasm", "DDW"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.contains(&"Bw 3/2".to_string()));
}

#[test]
fn evaluates_walk_parameter() {
    let p = file("basis emb\n1 DDW\n1 Cr\n1 CF\n2 CN\n2 CR\n3 Bw\n4 BW\n1 A_\n");
    let path = p.path().to_str().unwrap();
    assert_eq!(stdout(&motif(&["eval", "--param", path, "--host", "Bw"])), "48\n");
    let hom = motif(&["basis", "--from", "emb", "--to", "hom", "--input", path]);
    assert_eq!(stdout(&hom), "basis hom\n1 DBg\n");
    let back = file(&stdout(&hom));
    let emb = motif(&["basis", "--from", "hom", "--to", "emb", "--input", back.path().to_str().unwrap()]);
    let round = file(&stdout(&emb));
    assert_eq!(stdout(&motif(&["eval", "--param", round.path().to_str().unwrap(), "--host", "Cr"])), "64\n");
}

#[test]
fn reads_edge_list_and_graph6_files() {
    let c5 = file("# five-cycle\nn 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n");
    let p4 = file(">>graph6<<DDW\n");
    let o = motif(&["count", "--kind", "sub", "--pattern", &at(&p4), "--host", &at(&c5)]);
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn exit_codes() {
    let bad_kind = motif(&["count", "--kind", "walks", "--pattern", "A_", "--host", "A_"]);
    assert_eq!(bad_kind.status.code(), Some(2));
    let bad_graph = motif(&["count", "--kind", "hom", "--pattern", "A", "--host", "A_"]);
    assert_eq!(bad_graph.status.code(), Some(2));
    assert_eq!(String::from_utf8(bad_graph.stderr).unwrap().lines().count(), 1);
    let missing = motif(&["count", "--kind", "hom", "--pattern", "@/nonexistent/file", "--host", "A_"]);
    assert_eq!(missing.status.code(), Some(2));
    let over_budget = Command::new(env!("CARGO_BIN_EXE_motif"))
        .args(["count", "--kind", "hom", "--engine", "brute", "--pattern", "DDW", "--host", "Dhc"])
        .env("MOTIF_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(over_budget.status.code(), Some(1));
    let not_width2 = motif(&["count", "--kind", "hom", "--engine", "mm", "--pattern", "C~", "--host", "Dhc"]);
    assert_eq!(not_width2.status.code(), Some(1));
}

#[test]
fn decompositions() {
    let plain = stdout(&motif(&["decompose", "DDW"]));
    assert!(plain.starts_with("# width 1\n"));
    let nice = stdout(&motif(&["decompose", "--nice", "Bw"]));
    assert!(nice.lines().any(|l| l.ends_with("kind=leaf")));
    let w2 = stdout(&motif(&["decompose", "--width2", "Cr"]));
    assert!(w2.lines().filter(|l| !l.starts_with('#')).all(|l| l.contains("bag={") && (1..=2).contains(&l.matches(',').count())));
    let hm = file("n 6\ne 0 3\ne 1 4\ne 2 5\nc 0 0\nc 1 0\nc 2 0\nc 3 1\nc 4 2\nc 5 3\n");
    let guarded = stdout(&motif(&["decompose", "--guarded", &at(&hm)]));
    assert!(guarded.lines().skip(1).all(|l| l.contains("guard={")));
}

#[test]
fn colored_counts() {
    let host = file("n 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\nc 0 0\nc 1 1\nc 2 0\nc 3 2\n");
    let pattern = file("n 4\ne 0 2\ne 1 3\nc 0 0\nc 1 0\nc 2 1\nc 3 2\n");
    for kind in ["hom", "emb", "sub"] {
        let fast = motif(&["colored-count", "--kind", kind, "--pattern", &at(&pattern), "--host", &at(&host)]);
        let slow = motif(&["colored-count", "--kind", kind, "--brute", "--pattern", &at(&pattern), "--host", &at(&host)]);
        assert!(fast.status.success());
        assert_eq!(stdout(&fast), stdout(&slow), "{kind}");
    }
    let via_count = motif(&["count", "--colored", "--kind", "emb", "--pattern", &at(&pattern), "--host", &at(&host)]);
    assert_eq!(stdout(&via_count), "2\n");
    let triangles = file("n 6\ne 0 1\ne 1 2\ne 0 2\ne 3 4\ne 4 5\ne 3 5\nc 0 0\nc 1 1\nc 2 2\nc 3 0\nc 4 1\nc 5 2\n");
    let o = motif(&["colored-count", "--kind", "colorful", "--pattern", "Bw", "--host", &at(&triangles)]);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn selftest_passes() {
    let o = motif(&["--threads", "2", "selftest"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().count() >= 10);
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
}
