use std::path::PathBuf;

use gtspace::explorer::space_from_mask;
use gtspace::fixtures::e1;
use gtspace_cli::spacefile::witness_from_block;
use gtspace_cli::{parse_blocks, parse_space, render_space, run, EXIT_ERROR, EXIT_FAILED, EXIT_OK};
use proptest::prelude::*;

const E1: &str = "space E1\npoints a b c d\nopen\nopen a b\nopen b c\nopen a b c\n";

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gtspace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn gt(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("gtspace").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn classify_e1() {
    let f = write_temp("e1.space", E1);
    let (code, out, _) = gt(&["classify", f.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l == "axiom T1 true"));
    assert!(out.lines().any(|l| l == "axiom conditionA false"));
    let (_, machine, _) = gt(&["--machine", "classify", f.to_str().unwrap()]);
    assert!(machine.lines().all(|l| l.starts_with("axiom ")));
    assert_eq!(machine.lines().count(), 20);
}

#[test]
fn families_lambda_closed_e1() {
    let f = write_temp("e1-fam.space", E1);
    for kind in ["sλ-closed", "slambda-closed"] {
        let (code, out, _) = gt(&["--machine", "families", "--kind", kind, f.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        for p in ["{a}", "{b}", "{c}", "{d}"] {
            assert!(lines.contains(&p), "{p}");
        }
        assert!(!lines.contains(&"{a,c}"));
    }
    let (_, open, _) = gt(&["--machine", "families", "--kind", "sγ-open", f.to_str().unwrap()]);
    assert_eq!(open.lines().count(), 8);
    let (code, _, err) = gt(&["families", "--kind", "open-ish", f.to_str().unwrap()]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("unknown family"));
}

#[test]
fn mine_emits_replayable_witness() {
    let (code, out, _) = gt(&["--machine", "mine", "--property", "union-of-sλ-closed-not-closed", "--n", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("witness property union-of-sλ-closed-not-closed\n"));
    let blocks = parse_blocks(&out).unwrap();
    assert_eq!(blocks.len(), 1);
    assert!(witness_from_block(&blocks[0]).unwrap().replay());

    let (code, out, _) = gt(&["--machine", "mine", "--property", "sg-closed-not-closed", "--n", "4", "--limit", "3"]);
    assert_eq!(code, EXIT_OK);
    let blocks = parse_blocks(&out).unwrap();
    assert_eq!(blocks.len(), 3);
    assert!(blocks.iter().all(|b| witness_from_block(b).unwrap().replay()));

    assert_eq!(gt(&["mine", "--property", "nonsense", "--n", "3"]).0, EXIT_ERROR);
    assert_eq!(gt(&["mine", "--property", "sg-closed-not-closed", "--n", "5"]).0, EXIT_ERROR);
}

#[test]
fn enumerate_two_points() {
    let (code, out, _) = gt(&["--machine", "enumerate", "--n", "2"]);
    assert_eq!(code, EXIT_OK);
    let blocks = parse_blocks(&out).unwrap();
    assert_eq!(blocks.len(), 7);
    assert_eq!(out.lines().filter(|l| l.starts_with("space ")).count(), 7);
    let (_, dedup, _) = gt(&["--machine", "enumerate", "--n", "2", "--dedup"]);
    assert_eq!(parse_blocks(&dedup).unwrap().len(), 5);
    let (_, human, _) = gt(&["enumerate", "--n", "1"]);
    assert_eq!(parse_blocks(&human).unwrap().len(), 2);
}

#[test]
fn urysohn_on_discrete_pair() {
    let f = write_temp("two.space", "space D2\npoints x y\nopen x\nopen y\nopen x y\n");
    let (code, out, _) = gt(&["--machine", "urysohn", f.to_str().unwrap(), "--a", "x", "--b", "y", "--depth", "2"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().any(|l| l == "f x 0/2^0"));
    assert!(out.lines().any(|l| l == "f y 1/2^0"));
    assert!(out.lines().any(|l| l == "V 1/2^0 {x}"));
    assert_eq!(out.lines().filter(|l| l.starts_with("V ")).count(), 4);
    assert!(!out.contains('.'));

    let e = write_temp("e1-u.space", E1);
    let (code, _, err) = gt(&["urysohn", e.to_str().unwrap(), "--a", "a", "--b", "d"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("hypothesis"));
    let (code, _, err) = gt(&["urysohn", f.to_str().unwrap(), "--a", "z", "--b", "y"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("`z`"));
}

#[test]
fn verify_single_space() {
    let f = write_temp("e1-v.space", E1);
    let (code, out, _) = gt(&["--machine", "verify", f.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), gtspace::explorer::THEOREM_IDS.len());
    assert!(out.lines().all(|l| l.starts_with("theorem ") && !l.ends_with("FAILED")));

    // T5 here, but the subspace {b,c} is not T4.
    let w = write_temp("t5.space", "space W\npoints a b c\nopen a\nopen a b c\n");
    let (code, out, _) = gt(&["--machine", "verify", w.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("theorem t5-implies-hereditarily-t4 FAILED"));
    let blocks = parse_blocks(&out[out.find("witness").unwrap()..]).unwrap();
    assert!(witness_from_block(&blocks[0]).unwrap().replay());
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(gt(&[]).0, EXIT_ERROR);
    assert_eq!(gt(&["frobnicate"]).0, EXIT_ERROR);
    assert_eq!(gt(&["verify"]).0, EXIT_ERROR);
    assert_eq!(gt(&["enumerate", "--n", "6"]).0, EXIT_ERROR);
    assert_eq!(gt(&["--help"]).0, EXIT_OK);
    assert_eq!(gt(&["--version"]).0, EXIT_OK);

    let bad = write_temp("bad.space", "space Bad\npoints a b\nopen a\nopen b\n");
    let (code, _, err) = gt(&["classify", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("line 1") && err.contains("{a}") && err.contains("{b}"), "{err}");

    let typo = write_temp("typo.space", "space T\npoints a b\nopen a\nopne b\n");
    let (code, _, err) = gt(&["classify", typo.to_str().unwrap()]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("line 4"), "{err}");

    assert_eq!(gt(&["classify", "/nonexistent/x.space"]).0, EXIT_ERROR);
}

#[test]
fn e1_text_round_trips() {
    assert_eq!(render_space("E1", &parse_space(E1).unwrap()), E1);
    assert_eq!(parse_space(&render_space("E1", &e1())).unwrap(), e1());
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(n in 1usize..=4, pick in any::<u64>()) {
        let masks = gtspace::explorer::union_closed_masks(n).unwrap();
        let space = space_from_mask(n, masks[(pick % masks.len() as u64) as usize]);
        let text = render_space("S", &space);
        prop_assert_eq!(parse_space(&text).unwrap(), space);
    }

    #[test]
    fn comments_do_not_change_meaning(n in 1usize..=3, pick in any::<u64>(), note in "[ a-z]{0,12}") {
        let masks = gtspace::explorer::union_closed_masks(n).unwrap();
        let space = space_from_mask(n, masks[(pick % masks.len() as u64) as usize]);
        let text: String = render_space("S", &space)
            .lines()
            .map(|l| format!("{l} #{note}\n\n"))
            .collect();
        prop_assert_eq!(parse_space(&text).unwrap(), space);
    }
}
