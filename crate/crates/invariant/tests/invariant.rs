#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;
use tangle_algebra::{contract_pattern, Permutation, Scalar, TensorElement};
use tangle_elements::{braiding, twist, ElementMorphism};
use tangle_invariant::*;
use tangle_model::*;
use tangle_xc::{double_sweedler, matrix2, sweedler, XCStructure};

fn sw() -> &'static XCStructure {
    static X: OnceLock<XCStructure> = OnceLock::new();
    X.get_or_init(|| sweedler(Some(Scalar::from_int(2))))
}

fn structures() -> &'static [XCStructure] {
    static ALL: OnceLock<Vec<XCStructure>> = OnceLock::new();
    ALL.get_or_init(|| {
        vec![
            sweedler(None),
            matrix2(Scalar::one()).unwrap(),
            matrix2(Scalar::from_int(2)).unwrap(),
            matrix2(Scalar::i()).unwrap(),
            double_sweedler(),
        ]
    })
}

fn parse(width: usize, closed: usize, word: &str) -> Tangle {
    let slices = word
        .split_whitespace()
        .map(|tok| {
            let (g, rest) = tok.split_once('(').unwrap();
            let pos = rest.trim_end_matches(')').parse().unwrap();
            let gen = match g {
                "X" => Gen::X,
                "X-" => Gen::Xneg,
                "C" => Gen::C,
                _ => Gen::Cneg,
            };
            Slice::new(gen, pos)
        })
        .collect();
    Tangle::new(width, slices, closed).unwrap()
}

#[test]
fn generators() {
    let x = sw();
    let a = x.algebra();
    assert_eq!(bead_invariant(&Tangle::identity(1), x).unwrap(), ElementMorphism::identity(a, 1));
    let cross = bead_invariant(&parse(2, 0, "X(1)"), x).unwrap();
    assert_eq!(cross, ElementMorphism::new(x.r().clone(), Permutation::transposition(2, 0, 1)).unwrap());
    assert_eq!(cross, braiding(x, 1, 1));
    assert_eq!(bead_invariant(&parse(1, 0, "C-(1)"), x).unwrap(), ElementMorphism::element(x.kappa().clone()));
    assert_eq!(bead_invariant(&parse(1, 0, "C(1)"), x).unwrap(), ElementMorphism::element(x.kappa_inv().clone()));
    let neg = bead_invariant(&parse(2, 0, "X-(1)"), x).unwrap();
    assert_eq!(neg.u(), &x.r_inv().flip());
}

#[test]
fn kink_is_the_twist() {
    for x in structures() {
        assert_eq!(bead_invariant(&parse(2, 1, "X(1)"), x).unwrap(), twist(x, 1).unwrap());
    }
}

#[test]
fn inadmissible_without_trace() {
    let t = parse(2, 2, "X(1) X(1)");
    assert!(matches!(bead_invariant(&t, &sweedler(None)), Err(InvariantError::Tangle(TangleError::Inadmissible))));
    let z = bead_invariant(&t, sw()).unwrap();
    assert_eq!(z.arity(), 0);
}

/// The two-component diagram of the worked example as a crossing list read off
/// its bead labels: crossings `i, j` positive, `ℓ, s` negative.
fn worked_example() -> CrossingListDiagram {
    let c = |sign, over, under| CrossingRecord { sign, over, under };
    CrossingListDiagram {
        edges: vec![4, 6],
        crossings: vec![
            c(1, (2, 3), (1, 1)),  // i
            c(1, (1, 2), (2, 4)),  // j
            c(-1, (2, 1), (1, 3)), // ℓ
            c(-1, (2, 2), (2, 5)), // s
        ],
    }
}

/// `Σ β̄_ℓ α_j β_i ⊗ β̄_s β_j α_i κ⁻¹ ᾱ_s ᾱ_ℓ` by expansion over pure tensors.
fn worked_example_oracle(x: &XCStructure) -> ElementMorphism {
    let (r, rb, k) = (x.r(), x.r_inv(), x.kappa_inv());
    // factors: 0 = R_i, 1 = R_j, 2 = R̄_ℓ, 3 = R̄_s, 4 = κ⁻¹
    let slots = [vec![(2, 1), (1, 0), (0, 1)], vec![(3, 1), (1, 1), (0, 0), (4, 0), (3, 0), (2, 0)]];
    let u = contract_pattern(x.algebra(), &[r, r, rb, rb, k], &slots);
    ElementMorphism::new(u, Permutation::transposition(2, 0, 1)).unwrap()
}

#[test]
fn worked_example_matches_formula() {
    for x in structures().iter().take(4).chain([sw()]) {
        let t = to_rotational(&worked_example()).unwrap();
        assert_eq!(bead_invariant(&t, x).unwrap(), worked_example_oracle(x));
    }
}

// --- trefoil against an independent Sweedler model -----------------------

/// `s^a w^b` stored at index `a + 2b`; `w s = −s w`, `s² = 1`, `w² = 0`.
fn sw_mul(x: &[Scalar; 4], y: &[Scalar; 4]) -> [Scalar; 4] {
    let mut out: [Scalar; 4] = Default::default();
    for i in 0..4 {
        for j in 0..4 {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d == 2 || x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            let sign = if b * c == 1 { Scalar::from_int(-1) } else { Scalar::one() };
            let k = (a + c) % 2 + 2 * (b + d);
            out[k] = &out[k] + &(&(&x[i] * &y[j]) * &sign);
        }
    }
    out
}

fn el(c: [i64; 4], den: i64) -> [Scalar; 4] {
    c.map(|n| Scalar::ratio(n, den))
}

/// `R = 1⊗1 − 2p⊗p + w⊗w + 2wp⊗wp − 2w⊗wp`, `p = (1−s)/2`, as basis pure tensors.
fn sweedler_r_terms() -> Vec<(usize, usize, Scalar)> {
    let one = el([1, 0, 0, 0], 1);
    let p = el([1, -1, 0, 0], 2);
    let w = el([0, 0, 1, 0], 1);
    let wp = sw_mul(&w, &p);
    let pieces = [(1, &one, &one), (-2, &p, &p), (1, &w, &w), (2, &wp, &wp), (-2, &w, &wp)];
    let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
    for (c, l, r) in pieces {
        for i in 0..4 {
            for j in 0..4 {
                let v = &(&l[i] * &r[j]) * &Scalar::from_int(c);
                let e = acc.entry((i, j)).or_insert_with(Scalar::zero);
                *e = &*e + &v;
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect()
}

/// `Σ β₃ α₂ β₁ κ α₃ β₂ α₁` over all term choices, `κ = s`.
fn trefoil_oracle() -> [Scalar; 4] {
    let r = sweedler_r_terms();
    let basis = |k: usize| {
        let mut v: [Scalar; 4] = Default::default();
        v[k] = Scalar::one();
        v
    };
    let kappa = basis(1);
    let mut total: [Scalar; 4] = Default::default();
    for t1 in &r {
        for t2 in &r {
            for t3 in &r {
                let word = [basis(t3.1), basis(t2.0), basis(t1.1), kappa.clone(), basis(t3.0), basis(t2.1), basis(t1.0)];
                let prod = word.iter().skip(1).fold(word[0].clone(), |acc, y| sw_mul(&acc, y));
                let c = &(&t1.2 * &t2.2) * &t3.2;
                for k in 0..4 {
                    total[k] = &total[k] + &(&prod[k] * &c);
                }
            }
        }
    }
    total
}

#[test]
fn trefoil_matches_brute_force() {
    let r = sweedler_r_terms();
    assert_eq!(TensorElement::from_terms(4, 2, r.iter().map(|(i, j, c)| (vec![*i as u16, *j as u16], c.clone()))), sw().r().clone());
    let z = knot_invariant(&[1, 1, 1], sw()).unwrap();
    assert_eq!(z.coords(), trefoil_oracle().to_vec());
    assert_eq!(z.display_with(sw().algebra().labels()).to_string(), "(1)·1/1");
}

#[test]
fn knot_examples() {
    let x = sw();
    assert_eq!(knot_invariant(&[], x).unwrap(), x.algebra().unit());
    assert!(matches!(knot_invariant(&[1, 1], x), Err(InvariantError::NotAKnot(2))));
    let tref = knot_tangle(2, &[1, 1, 1]).unwrap();
    let z = bead_invariant(&tref, x).unwrap();
    for mv in [MoveSpec::Stabilize { positive: true }, MoveSpec::Stabilize { positive: false }] {
        assert_eq!(bead_invariant(&apply_move(&tref, &mv).unwrap(), x).unwrap(), z);
    }
}

#[test]
fn negative_kink_is_the_inverse_twist() {
    for x in structures() {
        let z = bead_invariant(&parse(2, 1, "X-(1)"), x).unwrap();
        let prod = z.compose(x.algebra(), &twist(x, 1).unwrap()).unwrap();
        assert_eq!(prod, ElementMorphism::identity(x.algebra(), 1));
    }
}

fn closure_for(seed: u64, width: usize) -> usize {
    (seed as usize / 7) % width
}

/// Every enumerated move leaves `Z` unchanged whenever both sides evaluate.
fn assert_move_invariant(t: &Tangle, x: &XCStructure) {
    let Ok(z) = bead_invariant(t, x) else { return };
    for mv in enumerate_moves(t) {
        let moved = apply_move(t, &mv).unwrap();
        if let Ok(w) = bead_invariant(&moved, x) {
            assert_eq!(w, z, "{mv} on {t}");
        }
    }
}

#[test]
fn double_sweedler_moves() {
    let x = &structures()[4];
    for seed in 0..12 {
        let width = 1 + seed as usize % 3;
        assert_move_invariant(&random_tangle(seed, width, 3, closure_for(seed, width)), x);
    }
}

#[test]
fn full_closures_are_conjugation_invariant() {
    let x = sw();
    for seed in 0..40 {
        let width = 2 + seed as usize % 2;
        let t = random_braid(seed, width, 5, 0).with_closed(width).unwrap();
        let z = bead_invariant(&t, x).unwrap();
        assert_eq!(z.arity(), 0);
        let mut word = t.slices().to_vec();
        for _ in 0..word.len() {
            word.rotate_left(1);
            assert_eq!(bead_invariant(&t.with_slices(word.clone()).unwrap(), x).unwrap(), z);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moves_preserve_the_invariant(seed in any::<u64>(), width in 1usize..4, count in 0usize..6, which in 0usize..4) {
        let t = random_tangle(seed, width, count, closure_for(seed, width));
        assert_move_invariant(&t, &structures()[which]);
        let b = random_braid(seed, width + 1, count, closure_for(seed, width + 1));
        assert_move_invariant(&b, sw());
    }

    #[test]
    fn bead_map_is_a_monoid_map(seed in any::<u64>(), width in 1usize..4, n1 in 0usize..6, n2 in 0usize..6, which in 0usize..4) {
        let x = &structures()[which];
        let t1 = random_tangle(seed, width, n1, closure_for(seed, width));
        let t2 = random_tangle(seed ^ 0x5555, width, n2, closure_for(seed >> 3, width));
        let report = functoriality_check(&t1, &t2, x).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn crossing_lists_round_trip(seed in any::<u64>(), width in 1usize..4, count in 0usize..6) {
        let t = random_braid(seed, width + 1, count, closure_for(seed, width + 1));
        prop_assume!(t.is_admissible());
        let back = to_rotational(&to_crossing_list(&t).unwrap()).unwrap();
        for x in [sw(), &structures()[2]] {
            prop_assert_eq!(bead_invariant(&back, x).unwrap(), bead_invariant(&t, x).unwrap());
        }
    }
}
