mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use common::*;

fn moricone(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_moricone"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: &str) -> String {
    let out = moricone(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn two_param_input() -> String {
    format!("4 8\n{TWO_PARAM_MATRIX}\n")
}

#[test]
fn flag_order_does_not_matter() {
    let input = two_param_input();
    assert_eq!(stdout(&["-fgD"], &input), stdout(&["-gfD"], &input));
    assert_eq!(stdout(&["-f", "-g", "-D"], &input), stdout(&["-Dgf"], &input));
    assert_eq!(stdout(&["-fDa"], &input), stdout(&["-aDf"], &input));
}

#[test]
fn repeated_runs_are_identical() {
    let input = two_param_input();
    let first = stdout(&["-fDaIK"], &input);
    for _ in 0..3 {
        assert_eq!(stdout(&["-fDaIK"], &input), first);
    }
}

#[test]
fn two_param_transcript() {
    let out = stdout(&["-fDgb"], &two_param_input());
    let expected = "\
9 Triangulation
101011 001111 110101 011101 111001 100111 011110 110110 111010
2 SR-ideal
101100 010011
Hodge numbers and Euler number of H:
h11: 2 , h21: 128  [ -252 ]
8 Triangulation
101011 001111 110101 011101 111001 100111 101110 111100
2 SR-ideal
010010 101101
Hodge numbers and Euler number of H:
h11: 2 , h21: 128  [ -252 ]
";
    let lines: Vec<&str> = out.lines().collect();
    let want: Vec<&str> = expected.lines().collect();
    assert_eq!(lines.len(), want.len());
    for (got, want) in lines.iter().zip(&want) {
        // facet order may differ, so triangulation rows compare as sets
        let mut a: Vec<&str> = got.split(' ').collect();
        let mut b: Vec<&str> = want.split(' ').collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{got}");
    }
}

#[test]
fn hypersurface_class_is_read_after_the_record() {
    let input = format!("{}1 0 0 0 0 1\n", two_param_input());
    let out = stdout(&["-fDHb"], &input);
    assert!(out.starts_with("Hypersurface degrees: ( 5  4 )\nHypersurface class: 1*d1 1*d6 \n"));
    assert!(out.contains("chi_0: 35/32 , chi_1: 143/32  [ -27/4 ]\n"));
    assert!(out.contains("chi_0: 29/27 , chi_1: 128/27  [ -22/3 ]\n"));
}

#[test]
fn filter_mode_reads_every_record() {
    let out = stdout(&["-fgm"], "3 1 1 1\n4 1 1 1 1\n");
    assert_eq!(out.matches("Triangulation").count(), 2);
    assert!(out.contains("1 Mori generators\n   1   1   1\n"));
    assert!(out.contains("1 Mori generators\n   1   1   1   1\n"));
}

#[test]
fn interactive_mode_prompts_and_stops_after_one_record() {
    let out = stdout(&["-g"], "3 1 1 1\n4 1 1 1 1\n");
    assert!(out.starts_with("Degrees and weights"));
    assert_eq!(out.matches("Triangulation").count(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(moricone(&["-q"], "").status.code(), Some(1));
    assert_eq!(moricone(&["-f"], "4 3 3 1 1 2 0 1 1 1 1 0 0\n").status.code(), Some(1));
    assert_eq!(moricone(&["-fD"], "2 3  2 0 -1  0 1 -1\n").status.code(), Some(2));
    let big = "4 5  4 -1 -1 -1 -1  -1 4 -1 -1 -1  -1 -1 4 -1 -1  -1 -1 -1 4 -1\n";
    let out = moricone(&["-fD"], big);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn hypersurface_sections_need_dimension_four() {
    let out = moricone(&["-fb"], "3 1 1 1\n");
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn help_lists_the_options() {
    let out = stdout(&["-h"], "");
    for flag in ["-f", "-g", "-m", "-P", "-b", "-i", "-c", "-t", "-d", "-a", "-D", "-H", "-I", "-K"] {
        assert!(out.contains(flag), "{flag}");
    }
}

#[test]
fn files_as_arguments() {
    let dir = std::env::temp_dir().join(format!("moricone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.txt");
    let output = dir.join("out.txt");
    std::fs::write(&input, "3 1 1 1\n").unwrap();
    let printed = stdout(&["-fg", input.to_str().unwrap(), output.to_str().unwrap()], "");
    assert!(printed.is_empty());
    assert_eq!(std::fs::read_to_string(&output).unwrap(), "3 Triangulation\n101 110 011\n1 SR-ideal\n111\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
