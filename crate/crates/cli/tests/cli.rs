use std::io::Write;
use std::process::{Command, Output, Stdio};

fn simonk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simonk")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_simonk"))
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

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn normalize_examples() {
    for (k, word, nf) in [
        ("3", "bacbaabada", "bacabbda"),
        ("0", "abc", ""),
        ("99", "abc", "abc"),
        ("1", "ba", "ab"),
    ] {
        let o = simonk(&["normalize", "--k", k, word]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o), format!("{nf}\n"));
    }
}

#[test]
fn normalize_is_a_fixed_point() {
    let nf = stdout(&simonk(&["normalize", "--k", "2", "cabbacbcaacb"]));
    assert_eq!(stdout(&simonk(&["normalize", "--k", "2", nf.trim_end()])), nf);
}

#[test]
fn normalize_with_attributes() {
    let o = simonk(&["normalize", "--k", "3", "--attrs", "bacbaabada"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "bacabbda");
    assert_eq!(lines[4], "4\ta\t2\t2");
    assert_eq!(lines[5], "5\tb\t2\t2");
    assert_eq!(lines.len(), 9);
}

#[test]
fn equivalence_and_exit_codes() {
    let o = simonk(&["equiv", "--k", "3", "bacbaabada", "bacabbda"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "EQUIV\n"));
    let o = simonk(&["equiv", "--k", "3", "bacbaabada", "bacbbada"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "DISTINCT\n"));
    let o = simonk(&["equiv", "--k", "3", "--witness", "bacbaabada", "bacbbada"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "DISTINCT\taab\n"));
    let o = simonk(&["equiv", "--k", "1", "ab", "ba"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "EQUIV\n"));
}

#[test]
fn attribute_tables() {
    let text = stdout(&simonk(&["attrs", "bacbaabada"]));
    assert_eq!(text.lines().nth(7), Some("8\ta\t4\t2"));
    let text = stdout(&simonk(&["attrs", "--marked", "--k", "3", "bacbaabada"]));
    let del: Vec<&str> = text.lines().filter(|l| l.ends_with("\tDEL")).collect();
    assert_eq!(del, ["6\ta\t3\tDEL", "8\ta\t4\tDEL"]);
    let o = simonk(&["attrs", ""]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, ""));
}

#[test]
fn ranker_listing() {
    let text = stdout(&simonk(&["rankers", "abcabcdaefccabc", "15"]));
    assert!(text.contains("canonical-x\tX:eac\n"));
    assert!(text.contains("predecessors\t13 14\n"));
    assert!(text.contains("rankers\t5\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("X:")).count(), 5);

    let text = stdout(&simonk(&["rankers", "a", "1"]));
    assert!(text.contains("canonical-x\tX:a\n"));

    let text = stdout(&simonk(&["rankers", "bacbaabada", "6"]));
    assert!(text.contains("canonical-x\tX:aaa\n"));

    let text = stdout(&simonk(&["rankers", "--cap", "2", "abcabcdaefccabc", "15"]));
    assert!(text.contains("rankers\t5\tpartial, first 2\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("X:")).count(), 2);
}

#[test]
fn automaton_export() {
    let text = stdout(&simonk(&["dfa", "--k", "1", "--dot", "ab"]));
    assert!(text.starts_with("digraph"));
    assert!(text.contains("[label=\"(1,2)\"]"));
    assert!(text.ends_with("}\n"));
    let text = stdout(&simonk(&["dfa", "--k", "3", "bacbaabada"]));
    assert!(text.contains("bound\t32\n"));
}

#[test]
fn oracle_subcommands() {
    let o = simonk(&["oracle", "subwords", "--k", "2", "ab"]);
    assert_eq!(stdout(&o), "\na\nb\nab\n");
    let o = simonk(&["oracle", "naive-nf", "--k", "2", "bab"]);
    assert_eq!(stdout(&o), stdout(&simonk(&["normalize", "--k", "2", "bab"])));
    let o = simonk(&["oracle", "naive-equiv", "--k", "3", "bacbabda", "abcbabda"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "DISTINCT\n"));
    let o = simonk(&["oracle", "naive-nf", "--k", "3", "bacbaabada"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "bacabbda\n"));
    let o = simonk(&["oracle", "naive-nf", "--k", "1", "abcabcabcab"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
    let o = simonk(&["oracle", "naive-nf", "--k", "1", "--force", "abcabcabcab"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "abc\n"));
}

#[test]
fn batch_mode_preserves_order() {
    let o = with_stdin(&["normalize", "--k", "3", "--stdin"], "bacbaabada\nba\n\nbacbabda\n");
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "bacabbda\nba\n\nbacabbda\n"));
    let o = with_stdin(
        &["equiv", "--k", "3", "--witness", "--stdin"],
        "bacbaabada bacabbda\nbacbaabada\tbacbbada\n",
    );
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "EQUIV\nDISTINCT\taab\n"));
    let o = with_stdin(&["equiv", "--k", "3", "--stdin"], "ab ab\n");
    assert_eq!(code(&o), 0);
}

#[test]
fn alphabet_order() {
    let o = simonk(&["--order", "ba", "normalize", "--k", "1", "ab"]);
    assert_eq!(stdout(&o), "ba\n");
    let o = simonk(&["normalize", "--order", "cba", "--k", "1", "abc"]);
    assert_eq!(stdout(&o), "cba\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["--order", "ab", "normalize", "--k", "1", "abc"][..],
        &["--order", "aa", "normalize", "--k", "1", "a"],
        &["normalize", "abc"],
        &["normalize", "--k", "-1", "abc"],
        &["rankers", "abc", "4"],
        &["rankers", "abc", "0"],
        &["attrs", "--marked", "abc"],
        &["equiv", "--k", "1", "ab"],
    ] {
        let o = simonk(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn bench_reports_each_size() {
    let o = simonk(&["bench", "--sizes", "0,1000", "--alphabet", "2,26", "--runs", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "sigma\tn\tk\tbest_ms\tns_per_letter");
    assert_eq!(rows.len(), 5);
    assert!(rows[1].starts_with("2\t0\t10\t"));
    assert!(rows[1].ends_with("\t0.00"));
}
