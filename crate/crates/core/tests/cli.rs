//! Command-line behavior: exit codes, determinism and file formats.

use std::fs;

use pminors::cli::format::parse_and_print;
use pminors::cli::run;

fn args(s: &str) -> Vec<String> {
    std::iter::once("pminors".to_string()).chain(s.split_whitespace().map(String::from)).collect()
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(args("")), 2);
    assert_eq!(run(args("frobnicate")), 2);
    assert_eq!(run(args("minors --n 4")), 2);
    assert_eq!(run(args("decompose (1234)")), 2);
    assert_eq!(run(args("census --max 9")), 2);
    assert_eq!(run(args("member4 /nonexistent")), 2);
}

#[test]
fn outputs_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let code = run(args(&format!("minors --n 4 --random --seed 7 --out {}", p.display())));
        assert_eq!(code, 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let manifest = fs::read_to_string(dir.path().join("a.txt.manifest.json")).unwrap();
    assert!(manifest.contains("\"seed\": 7"));
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text.lines().count(), 16);
    assert_eq!(parse_and_print(&text).unwrap(), text);
}

#[test]
fn successful_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let v = dir.path().join("v.txt");
    assert_eq!(run(args(&format!("minors --n 4 --random --seed 3 --out {}", v.display()))), 0);
    let c = dir.path().join("c.txt");
    assert_eq!(run(args(&format!("convert --to cycle-sums {} --out {}", v.display(), c.display()))), 0);
    let back = dir.path().join("back.txt");
    assert_eq!(run(args(&format!("convert --to minors {} --out {}", c.display(), back.display()))), 0);
    assert_eq!(fs::read(&v).unwrap(), fs::read(&back).unwrap());
    assert_eq!(run(args("decompose (1234) (1342) (1423)")), 0);
    assert_eq!(run(args("realize3 --random --seed 4")), 0);
    assert_eq!(run(args("node-check --samples 2 --seed 3")), 0);
}

#[test]
fn membership_uses_given_generators() {
    let dir = tempfile::tempdir().unwrap();
    let gens = dir.path().join("g.jsonl");
    let recs: String = pminors::nanson::nanson_minors().unwrap().iter().map(|r| r.to_json() + "\n").collect();
    fs::write(&gens, recs).unwrap();
    let v = dir.path().join("v.txt");
    fs::write(&v, pminors::cli::minors_text(&[vec![1, 2, 0, 3], vec![4, 1, 1, 0], vec![2, 2, 5, 1], vec![0, 7, 1, 1]])).unwrap();
    let out = dir.path().join("o.json");
    assert_eq!(run(args(&format!("member4 --generators {} {} --out {}", gens.display(), v.display(), out.display()))), 0);
    assert!(fs::read_to_string(&out).unwrap().contains("\"realizable\":true"));
    // perturb a 2x2 minor; the five Nanson minors do not detect a change of A_1234 alone
    let text = fs::read_to_string(&v).unwrap();
    let perturbed: String = text
        .lines()
        .map(|l| match l.split_once('\t') {
            Some(("12", x)) => format!("12\t{}\n", x.parse::<i64>().unwrap() + 1),
            _ => format!("{l}\n"),
        })
        .collect();
    fs::write(&v, perturbed).unwrap();
    assert_eq!(run(args(&format!("member4 --generators {} {} --out {}", gens.display(), v.display(), out.display()))), 0);
    assert!(fs::read_to_string(&out).unwrap().contains("\"realizable\":false"));
}

#[test]
fn malformed_files_report_position() {
    let e = parse_and_print("A_{1}*A_{2}\n2*A_{12} - \n").unwrap_err();
    assert_eq!(e.line, 2);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.txt");
    fs::write(&p, "A_{1} +\n").unwrap();
    assert_eq!(run(args(&format!("convert --canonical {}", p.display()))), 2);
}
