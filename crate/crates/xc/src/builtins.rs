//! The example structures: trivial, the 2×2 matrix family, Sweedler's
//! algebra and the enlarged double of Sweedler's algebra.

use std::sync::Arc;

use tangle_algebra::{Field, Scalar, StructureAlgebra, TensorElement};

use crate::presented::{Combination, Presentation, Word};
use crate::{HopfData, XCStructure, XcError};

/// Parameters accepted by [`builtin`].
#[derive(Clone, Debug, Default)]
pub struct BuiltinParams {
    /// λ for `matrix2` (defaults to 1).
    pub lambda: Option<Scalar>,
    /// `tr(1)` for `sweedler`; without it no trace is attached.
    pub trace_one: Option<Scalar>,
}

pub const BUILTIN_NAMES: [&str; 4] = ["trivial", "matrix2", "sweedler", "double_sweedler"];

pub fn builtin(name: &str, params: &BuiltinParams) -> Result<XCStructure, XcError> {
    match name {
        "trivial" => Ok(trivial()),
        "matrix2" => matrix2(params.lambda.clone().unwrap_or_else(Scalar::one)),
        "sweedler" => Ok(sweedler(params.trace_one.clone())),
        "double_sweedler" => Ok(double_sweedler()),
        other => Err(XcError::UnknownBuiltin(other.to_string())),
    }
}

/// The ground field as a one-dimensional algebra with `R = 1⊗1`, `κ = 1`.
pub fn trivial() -> XCStructure {
    let alg = StructureAlgebra::new("trivial", Field::Q, vec!["1".into()], [(0, 0, 0, Scalar::one())], &[Scalar::one()])
        .expect("ground field is an algebra");
    XCStructure::trivial_on(Arc::new(alg))
}

fn matrix_units() -> StructureAlgebra {
    let labels = ["E11", "E12", "E21", "E22"].map(String::from).to_vec();
    let unit = [1, 0, 0, 1].map(Scalar::from_int);
    StructureAlgebra::from_rule("matrix2", Field::QI, labels, &unit, |i, j| {
        let (a, b, c, d) = (i / 2, i % 2, j / 2, j % 2);
        if b == c {
            vec![(a * 2 + d, Scalar::one())]
        } else {
            vec![]
        }
    })
    .expect("matrix units form an algebra")
}

fn r_lambda(lambda: &Scalar, lambda_inv: &Scalar) -> TensorElement {
    let (e11, e12, e21, e22) = (0u16, 1u16, 2u16, 3u16);
    TensorElement::from_terms(
        4,
        2,
        [
            (vec![e11, e11], Scalar::one()),
            (vec![e11, e22], lambda.clone()),
            (vec![e22, e11], -lambda_inv),
            (vec![e22, e22], Scalar::one()),
            (vec![e12, e21], Scalar::from_int(2)),
        ],
    )
}

/// `M₂` with `R_λ` and `κ = i·diag(1, −1)`, traced by the matrix trace.
pub fn matrix2(lambda: Scalar) -> Result<XCStructure, XcError> {
    let lambda_inv = lambda.inv().ok_or(XcError::ZeroLambda)?;
    let alg = Arc::new(matrix_units());
    let r = r_lambda(&lambda, &lambda_inv);
    let r_inv = r_lambda(&lambda_inv, &lambda);
    let i = Scalar::i();
    let kappa = TensorElement::from_terms(4, 1, [(vec![0], i.clone()), (vec![3], -&i)]);
    let kappa_inv = kappa.neg();
    let trace = [1, 0, 0, 1].map(Scalar::from_int).to_vec();
    XCStructure::new(alg, r, r_inv, kappa, kappa_inv, Some(trace))
}

// Sweedler generators
const S: u8 = 0;
const W: u8 = 1;

fn sweedler_rule(x: u8, y: u8) -> Option<Combination> {
    match (x, y) {
        (S, S) => Some(vec![(vec![], Scalar::one())]),
        (W, W) => Some(vec![]),
        (W, S) => Some(vec![(vec![S, W], Scalar::from_int(-1))]),
        _ => None,
    }
}

fn word_element(p: &Presentation, basis: &[Word], word: &[u8]) -> TensorElement {
    let terms = p.normalize(word).into_iter().map(|(w, c)| {
        let k = basis.iter().position(|b| *b == w).expect("normal words are basis words");
        (vec![k as u16], c)
    });
    TensorElement::from_terms(basis.len(), 1, terms)
}

/// Per-generator Hopf data, extended multiplicatively (Δ, ε) and
/// anti-multiplicatively (S) to every basis word.
struct GeneratorHopf {
    delta: Vec<TensorElement>,
    eps: Vec<Scalar>,
    antipode: Vec<TensorElement>,
}

fn extend_hopf(alg: &Arc<StructureAlgebra>, basis: &[Word], g: &GeneratorHopf) -> Result<HopfData, XcError> {
    let a = &**alg;
    let mut comul = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    for w in basis {
        let mut d = TensorElement::one(a, 2);
        let mut e = Scalar::one();
        let mut s = a.unit();
        for &x in w {
            d = d.mul(a, &g.delta[x as usize])?;
            e = &e * &g.eps[x as usize];
            s = a.mul(&g.antipode[x as usize], &s);
        }
        comul.push(d);
        counit.push(e);
        antipode.push(s);
    }
    HopfData::new(alg.clone(), comul, counit, antipode)
}

fn sweedler_parts() -> (Arc<StructureAlgebra>, HopfData, TensorElement, TensorElement) {
    let names = ["s", "w"];
    let p = Presentation { names: &names, rule: &sweedler_rule };
    let basis: Vec<Word> = vec![vec![], vec![S], vec![W], vec![S, W]];
    let alg = Arc::new(p.algebra("sweedler", Field::Q, &basis).expect("Sweedler relations are consistent"));
    let a = &*alg;
    let el = |w: &[u8]| word_element(&p, &basis, w);
    let (one, s, w) = (a.unit(), el(&[S]), el(&[W]));
    let g = GeneratorHopf {
        delta: vec![s.tensor(&s), w.tensor(&one).add(&s.tensor(&w))],
        eps: vec![Scalar::one(), Scalar::zero()],
        antipode: vec![s.clone(), a.mul(&s, &w).neg()],
    };
    let hopf = extend_hopf(&alg, &basis, &g).expect("Sweedler Hopf structure");
    let half = Scalar::ratio(1, 2);
    let p_ = one.sub(&s).scale(&half);
    let wp = a.mul(&w, &p_);
    let two = Scalar::from_int(2);
    let r = one
        .tensor(&one)
        .sub(&p_.tensor(&p_).scale(&two))
        .add(&w.tensor(&w))
        .add(&wp.tensor(&wp).scale(&two))
        .sub(&w.tensor(&wp).scale(&two));
    (alg, hopf, r, s)
}

/// Sweedler's Hopf algebra, its Hopf data, `R` and `κ = s`.
pub fn sweedler_hopf() -> (HopfData, TensorElement, TensorElement) {
    let (_, h, r, k) = sweedler_parts();
    (h, r, k)
}

/// Sweedler's algebra with `κ = s`. With `trace_one` the trace
/// `tr(1) = trace_one, tr(s) = 1, tr(w) = tr(sw) = 0` is attached.
pub fn sweedler(trace_one: Option<Scalar>) -> XCStructure {
    let (alg, hopf, r, s) = sweedler_parts();
    let r_inv = hopf.s_at(&r, 0);
    let x = XCStructure::new(alg, r, r_inv, s.clone(), s, None).expect("Sweedler R and κ are invertible").with_hopf(hopf);
    match trace_one {
        Some(t) => x
            .with_trace(vec![t, Scalar::one(), Scalar::zero(), Scalar::zero()])
            .expect("Sweedler trace is cyclic"),
        None => x,
    }
}

// Double generators: s, σ, c, w, ω
const DS: u8 = 0;
const DSIG: u8 = 1;
const DC: u8 = 2;
const DW: u8 = 3;
const DOM: u8 = 4;

fn double_rule(x: u8, y: u8) -> Option<Combination> {
    let grouplike = |g: u8| g <= DC;
    let one = Scalar::one;
    let minus = || Scalar::from_int(-1);
    match (grouplike(x), grouplike(y)) {
        (true, true) if x == y => Some(match x {
            DC => vec![(vec![DS, DSIG], one())],
            _ => vec![(vec![], one())],
        }),
        (true, true) if x > y => Some(vec![(vec![y, x], one())]),
        (false, false) if x == y => Some(vec![]),
        // ωw = wω − s + σ
        (false, false) if x > y => Some(vec![(vec![DW, DOM], one()), (vec![DS], minus()), (vec![DSIG], one())]),
        (false, true) => Some(vec![(vec![y, x], minus())]),
        _ => None,
    }
}

fn double_basis() -> Vec<Word> {
    (0..32u8)
        .map(|bits| (0..5u8).filter(|g| bits >> g & 1 == 1).collect())
        .collect()
}

/// The rank-32 enlarged double of Sweedler's algebra: Hopf data, `R`, `κ = c`.
pub fn double_sweedler_hopf() -> (HopfData, TensorElement, TensorElement) {
    double_variant(false, true).expect("double Hopf structure")
}

/// Builds the double with one of the two coproduct shapes for each of `w`
/// and `ω` (`*_left`: `x⊗1 + g⊗x`, otherwise `x⊗g + 1⊗x`). Only
/// `Δ(w) = w⊗s + 1⊗w`, `Δ(ω) = ω⊗1 + σ⊗ω` makes the stated `R` quasitriangular.
fn double_variant(w_left: bool, om_left: bool) -> Result<(HopfData, TensorElement, TensorElement), XcError> {
    let names = ["s", "σ", "c", "w", "ω"];
    let p = Presentation { names: &names, rule: &double_rule };
    let basis = double_basis();
    let alg = Arc::new(p.algebra("double_sweedler", Field::Q, &basis).expect("double relations are consistent"));
    let a = &*alg;
    let el = |w: &[u8]| word_element(&p, &basis, w);
    let one = a.unit();
    let (s, sig, c, w, om) = (el(&[DS]), el(&[DSIG]), el(&[DC]), el(&[DW]), el(&[DOM]));
    let g = GeneratorHopf {
        delta: vec![
            s.tensor(&s),
            sig.tensor(&sig),
            c.tensor(&c),
            if w_left { w.tensor(&one).add(&s.tensor(&w)) } else { w.tensor(&s).add(&one.tensor(&w)) },
            if om_left { om.tensor(&one).add(&sig.tensor(&om)) } else { om.tensor(&sig).add(&one.tensor(&om)) },
        ],
        eps: vec![Scalar::one(), Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()],
        antipode: vec![
            s.clone(),
            sig.clone(),
            el(&[DC, DS, DSIG]),
            if w_left { a.mul(&s, &w).neg() } else { a.mul(&s, &w) },
            if om_left { a.mul(&sig, &om).neg() } else { a.mul(&sig, &om) },
        ],
    };
    let hopf = extend_hopf(&alg, &basis, &g)?;
    let sig_om = a.mul(&sig, &om);
    let sw = a.mul(&s, &w);
    let r = one
        .tensor(&one.add(&sig))
        .add(&s.tensor(&one.sub(&sig)))
        .add(&w.tensor(&om.add(&sig_om)))
        .add(&sw.tensor(&om.sub(&sig_om)))
        .scale(&Scalar::ratio(1, 2));
    Ok((hopf, r, c))
}

pub fn double_sweedler() -> XCStructure {
    let (hopf, r, c) = double_sweedler_hopf();
    let alg = Arc::new(hopf.algebra().clone());
    let r_inv = hopf.s_at(&r, 0);
    let c_inv = hopf.s(&c);
    XCStructure::new(alg, r, r_inv, c, c_inv, None)
        .expect("double R and κ are invertible")
        .with_hopf(hopf)
}
