use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;
use tangle_algebra::Scalar;
use tangle_invariant::bead_invariant;
use tangle_model::{random_braid, random_tangle, to_crossing_list, Gen, Slice, Tangle};
use tangle_xc::spec::XcSpec;
use tangle_xc::{check_xc_axioms, matrix2, sweedler};
use tangleuniv::*;

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("tangleuniv").chain(args.iter().copied()))
}

#[test]
fn parser_examples() {
    assert_eq!(parse_tangle("width=1 closed=0 :").unwrap(), Tangle::identity(1));
    assert_eq!(parse_tangle("b: s1 s1 s1 close 1").unwrap(), Tangle::braid(2, &[1, 1, 1], 1).unwrap());
    let t = parse_tangle("# comment\nwidth=3 closed=1 :\n  X(1) X-(2)\n  C(3) C-(1)").unwrap();
    let slices = vec![Slice::new(Gen::X, 1), Slice::new(Gen::Xneg, 2), Slice::new(Gen::C, 3), Slice::new(Gen::Cneg, 1)];
    assert_eq!(t, Tangle::new(3, slices, 1).unwrap());
    assert_eq!(parse_tangle("b: s2- s1 close 0").unwrap(), Tangle::braid(3, &[-2, 1], 0).unwrap());
    assert_eq!(parse_braid_word("s1 s2- s1").unwrap(), vec![1, -2, 1]);
}

#[test]
fn parser_errors_carry_positions() {
    let e = parse_tangle("width=2 closed=0 : X(2)").unwrap_err();
    assert_eq!((e.line, e.column), (1, 20));
    assert!(e.message.contains("out of range"), "{e}");
    let e = parse_tangle("width=2 closed=0 :\n  X(1) Y(1)").unwrap_err();
    assert_eq!((e.line, e.column), (2, 8));
    assert!(!e.expected.is_empty());
    let e = parse_tangle("width=2 closed=3 : X(1)").unwrap_err();
    assert_eq!(e.line, 1);
    let e = parse_tangle("b: s1 s0 close 0").unwrap_err();
    assert_eq!((e.line, e.column), (1, 7));
    let e = parse_tangle("b: s1 s1").unwrap_err();
    assert!(e.expected.contains("close"), "{e}");
    for bad in ["", "width=0 closed=0 :", "width=2 closed=0 X(1)", "width=2 closed=0 : X(1", "q"] {
        let e = parse_tangle(bad).unwrap_err();
        assert!(e.line >= 1 && e.column >= 1, "{bad:?}: {e}");
        assert!(e.to_string().contains("expected"), "{bad:?}: {e}");
    }
}

#[test]
fn empty_campaign() {
    let r = run_fuzz(&sweedler(None), "sweedler", 1, 0).unwrap();
    assert!(r.passed());
    assert_eq!((r.campaign_size, r.comparisons), (0, 0));
    assert!(r.per_move.is_empty());
}

#[test]
fn campaigns_are_deterministic() {
    let x = matrix2(Scalar::from_int(2)).unwrap();
    let a = run_fuzz(&x, "m", 9, 30).unwrap();
    let b = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| run_fuzz(&x, "m", 9, 30).unwrap());
    assert_eq!(a.body(), b.body());
    assert!(a.passed() && a.comparisons > 0);
    let c = run_fuzz(&x, "m", 10, 30).unwrap();
    assert_ne!(a.body(), c.body());
}

#[test]
fn corrupted_kappa_is_refused() {
    // κ := 1 on matrix2 breaks the kink relation first
    let m = matrix2(Scalar::one()).unwrap();
    let m_bad = m.with_kappa(m.algebra().unit()).unwrap();
    assert!(matches!(run_fuzz(&m_bad, "bad", 0, 5), Err(FuzzError::Axiom(name)) if name == "XC1f"));
    // on Sweedler μ(R) = μ^op(R) = s, so κ := 1 keeps XC1f and breaks XC2c
    let x = sweedler(None);
    let bad = x.with_kappa(x.algebra().unit()).unwrap();
    let report = check_xc_axioms(&bad);
    assert!(report.get("XC1f").unwrap().passed);
    assert!(!report.get("XC2c").unwrap().passed && !report.get("XC2d").unwrap().passed);
    assert!(matches!(run_fuzz(&bad, "bad", 0, 5), Err(FuzzError::Axiom(name)) if name == "XC2c"));
    let path = scratch("corrupted.json");
    std::fs::write(&path, XcSpec::from_xc(&bad).to_json()).unwrap();
    let p = path.to_str().unwrap();
    let out = cli(&["fuzz", "--algebra", p, "-n", "5"]);
    assert_eq!(out.code, EXIT_AXIOM);
    assert!(out.stderr.contains("XC2c"), "{}", out.stderr);
    assert_eq!(cli(&["check-axioms", p]).code, EXIT_AXIOM);
    let warned = cli(&["invariant", "--algebra", p, "--tangle", "width=1 closed=0 : C(1)"]);
    assert_eq!(warned.code, EXIT_PASS);
    assert!(warned.stderr.contains("warning"));
}

#[test]
fn convert_then_invariant() {
    let x = sweedler(Some(Scalar::from_int(2)));
    for seed in 0..12 {
        let t = random_braid(seed, 1 + seed as usize % 3, 5, seed as usize % 2);
        let path = scratch(&format!("diagram{seed}.json"));
        std::fs::write(&path, to_crossing_list(&t).unwrap().to_json()).unwrap();
        let out = cli(&["convert", path.to_str().unwrap()]);
        assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
        let back = parse_tangle(&out.stdout).unwrap();
        assert_eq!(bead_invariant(&back, &x).unwrap(), bead_invariant(&t, &x).unwrap());
        let z = cli(&["--json", "invariant", "--algebra", "sweedler:tr1=2", "--tangle", out.stdout.trim()]);
        let direct = cli(&["--json", "invariant", "--algebra", "sweedler:tr1=2", "--tangle", &t.to_string()]);
        assert_eq!(z.code, EXIT_PASS, "{}", z.stderr);
        assert_eq!(z.stdout, direct.stdout);
    }
    assert_eq!(cli(&["convert", "{\"format\": 2, \"edges\": [], \"crossings\": []}"]).code, EXIT_INPUT);
}

#[test]
fn commands_and_exit_codes() {
    let out = cli(&["invariant", "--algebra", "sweedler", "--knot", "s1 s1 s1"]);
    assert_eq!(out.code, EXIT_PASS);
    assert_eq!(out.stdout, "width=2 closed=1 : X(1) X(1) X(1)\n(1)·1/1 ; sigma=[1]\n");
    // inadmissible without a trace
    let out = cli(&["invariant", "--algebra", "sweedler", "--tangle", "width=2 closed=2 : X(1)"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert_eq!(cli(&["invariant", "--algebra", "sweedler:tr1=2", "--tangle", "width=2 closed=2 : X(1)"]).code, EXIT_PASS);
    assert_eq!(cli(&["invariant", "--algebra", "nonesuch", "--knot", "s1"]).code, EXIT_INPUT);
    assert_eq!(cli(&["invariant", "--algebra", "sweedler:bogus=1", "--knot", "s1"]).code, EXIT_INPUT);
    assert_eq!(cli(&["invariant", "--algebra", "sweedler"]).code, EXIT_INPUT);
    assert_eq!(cli(&["check-axioms", "double_sweedler"]).code, EXIT_PASS);
    assert_eq!(cli(&["check-axioms", "matrix2:lambda=1/3"]).code, EXIT_PASS);
    assert_eq!(cli(&["check-axioms", "matrix2:lambda=0"]).code, EXIT_INPUT);
    let rt = cli(&["rt-check", "--algebra", "matrix2:lambda=2", "--rep", "identity", "--tangle", "b: s1 s1 s1 close 1"]);
    assert_eq!(rt.code, EXIT_PASS, "{}", rt.stderr);
    assert!(rt.stdout.ends_with("1/1 passed\nPASS\n"));
    assert_eq!(cli(&["rt-check", "--algebra", "sweedler", "--rep", "identity", "--corpus", "2"]).code, EXIT_INPUT);
    let corpus = cli(&["rt-check", "--algebra", "sweedler", "--rep", "regular", "--corpus", "5", "--seed", "3"]);
    assert_eq!(corpus.code, EXIT_PASS, "{}", corpus.stderr);
    let fuzz = cli(&["invariant", "--algebra", "sweedler", "--fuzz", "4", "--seed", "2"]);
    assert_eq!(fuzz.code, EXIT_PASS);
    assert!(fuzz.stdout.contains("PASS"));
}

#[test]
fn json_documents_are_versioned() {
    let docs = [
        cli(&["--json", "check-axioms", "sweedler"]),
        cli(&["--json", "parse", "b: s1 s1 s1 close 1"]),
        cli(&["--json", "fuzz", "--algebra", "trivial", "-n", "3"]),
        cli(&["--json", "invariant", "--algebra", "sweedler", "--knot", "s1 s1 s1"]),
        cli(&["--json", "rt-check", "--algebra", "sweedler", "--rep", "regular", "--tangle", "width=1 closed=0 :"]),
    ];
    for d in docs {
        assert_eq!(d.code, EXIT_PASS, "{}", d.stderr);
        let v: serde_json::Value = serde_json::from_str(&d.stdout).unwrap();
        assert_eq!(v["format"], 1, "{}", d.stdout);
    }
}

#[test]
fn binary_honours_the_seed_variable() {
    let bin = env!("CARGO_BIN_EXE_tangleuniv");
    let go = |seed: Option<&str>, flag: &str| {
        let mut c = Command::new(bin);
        c.args(["fuzz", "--algebra", "trivial", "-n", "3", "--seed", flag]);
        match seed {
            Some(s) => c.env(SEED_ENV, s),
            None => c.env_remove(SEED_ENV),
        };
        let out = c.output().unwrap();
        (out.status.code(), String::from_utf8(out.stdout).unwrap())
    };
    let (code, text) = go(Some("77"), "5");
    assert_eq!(code, Some(0));
    assert!(text.contains("seed=77"), "{text}");
    assert!(go(None, "5").1.contains("seed=5"));
    assert_eq!(go(Some("x"), "5").0, Some(EXIT_INPUT));
    let out = Command::new(bin).args(["parse", "width=2 closed=0 : X(2)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 1, column 20"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printed_tangles_parse_back(seed in any::<u64>(), width in 1usize..5, count in 0usize..9, closed in 0usize..4) {
        let t = random_tangle(seed, width, count, closed.min(width - 1));
        prop_assert_eq!(parse_tangle(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn garbage_never_panics(text in "[ -~\n]{0,40}") {
        if let Err(e) = parse_tangle(&text) {
            prop_assert!(e.line >= 1 && e.column >= 1);
        }
    }
}
