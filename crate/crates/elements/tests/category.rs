use std::sync::OnceLock;

use proptest::prelude::*;
use tangle_algebra::{Matrix, Permutation, Scalar, TensorElement};
use tangle_elements::*;
use tangle_xc::{classical_ribbon_inverse, double_sweedler, matrix2, sweedler, trivial, XCStructure};

fn algebras() -> &'static [XCStructure] {
    static ALL: OnceLock<Vec<XCStructure>> = OnceLock::new();
    ALL.get_or_init(|| {
        vec![
            trivial(),
            sweedler(Some(Scalar::from_int(2))),
            matrix2(Scalar::one()).unwrap(),
            matrix2(Scalar::from_int(2)).unwrap(),
            double_sweedler(),
        ]
    })
}

fn sw() -> XCStructure {
    sweedler(Some(Scalar::from_int(2)))
}

/// A morphism with a few integer-coefficient terms and an arbitrary permutation.
fn arbitrary(x: &XCStructure, n: usize, seed: u64) -> ElementMorphism {
    let d = x.dim();
    let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = |m: usize| {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((s >> 33) as usize) % m
    };
    let terms: Vec<(Vec<u16>, Scalar)> = (0..3)
        .map(|_| ((0..n).map(|_| next(d) as u16).collect(), Scalar::from_int(next(7) as i64 - 3)))
        .collect();
    let mut images: Vec<usize> = (0..n).collect();
    for k in (1..n).rev() {
        images.swap(k, next(k + 1));
    }
    ElementMorphism::new(TensorElement::from_terms(d, n, terms), Permutation::from_images(images).unwrap()).unwrap()
}

/// A product of crossings and twists, i.e. an element of the image of tangles.
fn braided(x: &XCStructure, n: usize, word: &[(usize, i8)]) -> ElementMorphism {
    let a = x.algebra();
    let id = |k| ElementMorphism::identity(a, k);
    let mut f = id(n);
    for &(p, g) in word {
        let g = match (n, g) {
            (1, _) | (_, 2) | (_, -2) => {
                let p = p % n;
                let t = if g < 0 { twist_inverse(x, 1).unwrap() } else { twist(x, 1).unwrap() };
                id(p).monoidal(&t).monoidal(&id(n - p - 1))
            }
            _ => {
                let p = p % (n - 1);
                let c = if g > 0 { crossing(x) } else { crossing_inverse(x) };
                id(p).monoidal(&c).monoidal(&id(n - p - 2))
            }
        };
        f = g.compose(a, &f).unwrap();
    }
    f
}

fn word() -> impl Strategy<Value = Vec<(usize, i8)>> {
    prop::collection::vec((0usize..4, prop::sample::select(vec![1i8, -1, 2, -2])), 0..4)
}

#[test]
fn unit_and_inverse_crossing() {
    for x in algebras() {
        let a = x.algebra();
        let f = arbitrary(x, 2, 5);
        let one = ElementMorphism::identity(a, 2);
        assert_eq!(f.compose(a, &one).unwrap(), f);
        assert_eq!(one.compose(a, &f).unwrap(), f);
        assert_eq!(crossing(x).compose(a, &crossing_inverse(x)).unwrap(), one);
        assert_eq!(crossing_inverse(x).compose(a, &crossing(x)).unwrap(), one);
        assert!(matches!(f.compose(a, &ElementMorphism::identity(a, 3)), Err(ElementsError::ArityMismatch(2, 3))));
    }
}

#[test]
fn monoidal_units() {
    let x = sw();
    let a = x.algebra();
    let f = arbitrary(&x, 2, 9);
    assert_eq!(f.monoidal(&ElementMorphism::scalar(a, Scalar::one())), f);
    assert_eq!(ElementMorphism::identity(a, 0).monoidal(&f), f);
    let (p, q) = (a.basis(1), a.basis(2));
    assert_eq!(
        ElementMorphism::element(p.clone()).monoidal(&ElementMorphism::element(q.clone())),
        ElementMorphism::element(p.tensor(&q))
    );
}

#[test]
fn braiding_base_cases() {
    for x in algebras() {
        let a = x.algebra();
        assert_eq!(braiding(x, 1, 0), ElementMorphism::identity(a, 1));
        assert_eq!(braiding(x, 0, 1), ElementMorphism::identity(a, 1));
        assert_eq!(twist(x, 0).unwrap(), ElementMorphism::identity(a, 0));
        assert_eq!(twist(x, 1).unwrap(), ElementMorphism::element(classical_ribbon_inverse(x).unwrap()));
    }
}

#[test]
fn braiding_projects_to_block_rotation() {
    let x = sw();
    let a = x.algebra();
    for n in 0..3 {
        for m in 0..3 {
            let t = braiding(&x, n, m);
            let rot: Vec<usize> = (0..n).map(|k| k + m).chain(0..m).collect();
            assert_eq!(t.sigma(), &Permutation::from_images(rot).unwrap());
            let ti = braiding_inverse(&x, n, m);
            assert_eq!(t.compose(a, &ti).unwrap(), ElementMorphism::identity(a, n + m));
            let th = twist(&x, n).unwrap().compose(a, &twist_inverse(&x, n).unwrap()).unwrap();
            assert_eq!(th, ElementMorphism::identity(a, n));
        }
    }
}

#[test]
fn closure_instances() {
    let x = sw();
    let a = x.algebra();
    // φ_{1,1}((p⊗q, (12))) = (q κ p, id)
    let (p, q) = (a.basis(1), a.basis(3));
    let f = ElementMorphism::new(p.tensor(&q), Permutation::transposition(2, 0, 1)).unwrap();
    let expect = q.mul(a, x.kappa()).unwrap().mul(a, &p).unwrap();
    assert_eq!(open_close(&x, &f, 1).unwrap(), ElementMorphism::element(expect));
    let g = arbitrary(&x, 3, 4);
    assert_eq!(open_close(&x, &g, 0).unwrap(), g);
    let id2 = ElementMorphism::identity(a, 2);
    assert!(matches!(open_close(&x, &id2, 1), Err(ElementsError::Inadmissible { step: 1 })));
    assert!(AdmissiblePair::new(id2, 1).is_err());
}

#[test]
fn closing_a_crossing_gives_the_twist() {
    for x in algebras() {
        let a = x.algebra();
        let theta = twist(x, 1).unwrap();
        assert_eq!(open_close(x, &crossing(x), 1).unwrap(), theta);
        let back = open_close(x, &crossing_inverse(x), 1).unwrap();
        assert_eq!(back.compose(a, &theta).unwrap(), ElementMorphism::identity(a, 1));
        assert_eq!(AdmissiblePair::new(crossing(x), 1).unwrap().close(x), theta);
    }
}

#[test]
fn traced_closures() {
    let x = sw();
    let a = x.algebra();
    for e in 0..a.dim() {
        let xe = a.basis(e);
        let got = traced_close(&x, &ElementMorphism::element(xe.clone()), 1).unwrap();
        let expect = x.apply_trace(&x.kappa().mul(a, &xe).unwrap()).unwrap();
        assert_eq!(got.as_scalar(), Some(expect));
    }
    let f = arbitrary(&x, 3, 11);
    let f = f.compose(a, &crossing(&x).monoidal(&ElementMorphism::identity(a, 1))).unwrap();
    if f.sigma().is_admissible(1) {
        assert_eq!(traced_close(&x, &f, 1).unwrap(), open_close(&x, &f, 1).unwrap());
    }
    assert!(matches!(traced_close(&sweedler(None), &f, 1), Err(ElementsError::NoTrace)));
}

/// Full closure of `(R, (12))` over `M_2` against `Tr(P·(K⊗K)·R)` on `C²⊗C²`.
#[test]
fn full_closure_matches_dense_oracle() {
    for lambda in [Scalar::one(), Scalar::from_int(2), Scalar::i()] {
        let x = matrix2(lambda).unwrap();
        let a = x.algebra();
        let unit = |k: usize| Matrix::from_fn(2, 2, |i, j| if (i, j) == (k / 2, k % 2) { Scalar::one() } else { Scalar::zero() });
        for i in 0..4 {
            for j in 0..4 {
                let prod = a.mul(&a.basis(i), &a.basis(j));
                let dense = prod.sparse().iter().fold(Matrix::zeros(2, 2), |m, (k, c)| m.add(&unit(*k).scale(c)).unwrap());
                assert_eq!(dense, &unit(i) * &unit(j), "basis {i} is a matrix unit");
            }
        }
        let dense = |t: &TensorElement| t.sparse().iter().fold(Matrix::zeros(2, 2), |m, (k, c)| m.add(&unit(*k).scale(c)).unwrap());
        let kk = dense(x.kappa());
        let mut r = Matrix::zeros(4, 4);
        for (idx, c) in x.r().terms() {
            r = r.add(&unit(idx[0] as usize).kron(&unit(idx[1] as usize)).scale(c)).unwrap();
        }
        let swap = Matrix::from_fn(4, 4, |i, j| {
            if j == (i % 2) * 2 + i / 2 { Scalar::one() } else { Scalar::zero() }
        });
        let oracle = (&(&swap * &kk.kron(&kk)) * &r).trace();
        let got = traced_close(&x, &crossing(&x), 2).unwrap();
        assert_eq!(got.as_scalar(), Some(oracle));
    }
}

#[test]
fn json_and_display() {
    let x = sw();
    let f = arbitrary(&x, 2, 3);
    let back = ElementMorphism::from_json(x.dim(), &f.to_json()).unwrap();
    assert_eq!(back, f);
    let g = ElementMorphism::new(
        TensorElement::from_terms(4, 2, [(vec![1, 2], Scalar::from_int(2)), (vec![0, 3], Scalar::ratio(-1, 2))]),
        Permutation::transposition(2, 0, 1),
    )
    .unwrap();
    let labels = x.algebra().labels().to_vec();
    assert_eq!(g.display_with(&labels).to_string(), "(1⊗sw)·-1/2 + (s⊗w)·2/1 ; sigma=[2,1]");
    assert!(ElementMorphism::from_json(4, r#"{"format":2,"arity":0,"sigma":[],"u":[]}"#).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn associativity(alg in 0usize..4, s in any::<[u64; 3]>(), n in 0usize..4) {
        let x = &algebras()[alg];
        let a = x.algebra();
        let (f, g, h) = (arbitrary(x, n, s[0]), arbitrary(x, n, s[1]), arbitrary(x, n, s[2]));
        let left = f.compose(a, &g).unwrap().compose(a, &h).unwrap();
        let right = f.compose(a, &g.compose(a, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn interchange_and_projection(alg in 0usize..4, s in any::<[u64; 4]>(), n in 0usize..3, m in 0usize..3) {
        let x = &algebras()[alg];
        let a = x.algebra();
        let (f1, f2) = (arbitrary(x, n, s[0]), arbitrary(x, n, s[1]));
        let (g1, g2) = (arbitrary(x, m, s[2]), arbitrary(x, m, s[3]));
        let left = f1.monoidal(&g1).compose(a, &f2.monoidal(&g2)).unwrap();
        let right = f1.compose(a, &f2).unwrap().monoidal(&g1.compose(a, &g2).unwrap());
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left.sigma(), &f1.sigma().compose(f2.sigma()).unwrap().block(&g1.sigma().compose(g2.sigma()).unwrap()));
    }

    #[test]
    fn braiding_and_twist_are_natural(alg in 0usize..5, n in 1usize..3, m in 1usize..3, wf in word(), wg in word()) {
        prop_assume!(alg < 4 || n + m <= 3);
        let x = &algebras()[alg];
        let a = x.algebra();
        let (f, g) = (braided(x, n, &wf), braided(x, m, &wg));
        let t = braiding(x, n, m);
        prop_assert_eq!(g.monoidal(&f).compose(a, &t).unwrap(), t.compose(a, &f.monoidal(&g)).unwrap());
        let th = twist(x, n).unwrap();
        prop_assert_eq!(th.compose(a, &f).unwrap(), f.compose(a, &th).unwrap());
    }

    #[test]
    fn closure_axioms(alg in 0usize..4, n in 0usize..2, wf in word(), s in any::<[u64; 2]>(), wu in word()) {
        let x = &algebras()[alg];
        let a = x.algebra();
        let id = |k| ElementMorphism::identity(a, k);
        // admissible samples: braid images on n+2 strands whose closure is admissible
        let f = braided(x, n + 2, &wf).compose(a, &id(n).monoidal(&crossing(x))).unwrap();
        prop_assume!(f.sigma().is_admissible(2));
        // OTC2
        let once = open_close(x, &f, 2).unwrap();
        let twice = open_close(x, &open_close(x, &f, 1).unwrap(), 1).unwrap();
        prop_assert_eq!(&once, &twice);
        // OTC3: sliding a braiding through the closed strands
        for c in [crossing(x), crossing_inverse(x)] {
            let ci = if c == crossing(x) { crossing_inverse(x) } else { crossing(x) };
            let conj = id(n).monoidal(&c).compose(a, &f).unwrap().compose(a, &id(n).monoidal(&ci)).unwrap();
            if conj.sigma().is_admissible(2) {
                prop_assert_eq!(open_close(x, &conj, 2).unwrap(), once.clone());
            }
        }
        // naturality in the open strands, for arbitrary elements
        let (u, v) = (arbitrary(x, n, s[0]), arbitrary(x, n, s[1]));
        let u = ElementMorphism::element(u.u().clone());
        let lhs = open_close(x, &v.monoidal(&id(2)).compose(a, &f).unwrap().compose(a, &u.monoidal(&id(2))).unwrap(), 2).unwrap();
        let rhs = v.compose(a, &once).unwrap().compose(a, &u).unwrap();
        prop_assert_eq!(lhs, rhs);
        // naturality in the closed strands, for braid images
        let w = braided(x, 2, &wu);
        let left = f.compose(a, &id(n).monoidal(&w)).unwrap();
        let right = id(n).monoidal(&w).compose(a, &f).unwrap();
        if left.sigma().is_admissible(2) && right.sigma().is_admissible(2) {
            prop_assert_eq!(open_close(x, &left, 2).unwrap(), open_close(x, &right, 2).unwrap());
        }
    }
}
