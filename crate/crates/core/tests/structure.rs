mod common;

use common::{brb, e, q, tuples};
use nlie::algebra::{MetricNLieAlgebra, NLieAlgebra};
use nlie::constructions::{build_abelian, build_simple, direct_sum, random_isometry};
use nlie::exact::{Matrix, Rational, Signature, Subspace, SymmetricForm};
use nlie::rng::SeededRng;
use nlie::samples::{layered_data, lorentzian5, random_block_algebra};
use nlie::structure::{
    center, centralizer, classify_indecomposable, classify_minimal, decompose, derived_ideal,
    derived_series, ideal_closure, is_ideal, is_solvable, is_subalgebra, minimal_ideal_search,
    quotient_algebra, subquotient_metric, IdealHandle, IndecomposableKind, MinimalKind,
};
use proptest::prelude::*;

fn span(d: usize, idx: &[usize]) -> Subspace {
    Subspace::span(d, idx.iter().map(|&i| e(d, i)))
}

fn simple3() -> MetricNLieAlgebra {
    build_simple(3, &[1; 4]).unwrap()
}

fn line(sign: i64) -> MetricNLieAlgebra {
    build_abelian(3, SymmetricForm::diagonal(&[q(sign)])).unwrap()
}

/// `S ⊕ S ⊕ ℝc` with a definite metric; `c` is the last basis vector.
fn ssz() -> MetricNLieAlgebra {
    let s = simple3();
    direct_sum(&direct_sum(&s, &s).unwrap(), &line(1)).unwrap()
}

#[test]
fn closures() {
    let s = simple3();
    assert!(ideal_closure(s.algebra(), &span(4, &[0])).unwrap().is_full());
    let m = direct_sum(&s, &line(1)).unwrap();
    assert_eq!(ideal_closure(m.algebra(), &span(5, &[4])).unwrap(), span(5, &[4]));
    assert!(ideal_closure(m.algebra(), &Subspace::zero(5)).unwrap().is_zero());
}

#[test]
fn ideal_and_subalgebra_flags() {
    let m = direct_sum(&simple3(), &line(1)).unwrap();
    assert!(is_ideal(m.algebra(), &span(5, &[4])).unwrap());
    let s = simple3();
    let plane = span(4, &[0, 1]);
    assert!(is_subalgebra(s.algebra(), &plane).unwrap());
    assert!(!is_ideal(s.algebra(), &plane).unwrap());
    assert_eq!(brb(s.algebra(), &[0, 1, 2]), e(4, 3));
    let full = Subspace::full(4);
    assert!(is_ideal(s.algebra(), &full).unwrap() && is_subalgebra(s.algebra(), &full).unwrap());
}

#[test]
fn centres() {
    let a = NLieAlgebra::abelian(3, 4).unwrap();
    assert!(center(&a).is_full());
    assert!(center(simple3().algebra()).is_zero());
    let l = lorentzian5();
    assert!(center(l.algebra()).contains(&e(5, 4)));
}

#[test]
fn centralizers() {
    let s = simple3();
    assert!(centralizer(s.algebra(), &Subspace::full(4)).unwrap().is_zero());
    assert!(centralizer(s.algebra(), &Subspace::zero(4)).unwrap().is_full());
    let ss = direct_sum(&s, &s).unwrap();
    let c = centralizer(ss.algebra(), &span(8, &[0, 1, 2, 3])).unwrap();
    assert!(span(8, &[4, 5, 6, 7]).is_subspace_of(&c));
}

#[test]
fn derived_series_examples() {
    let a = NLieAlgebra::abelian(3, 3).unwrap();
    let s = derived_series(&a, &Subspace::full(3)).unwrap();
    assert_eq!(s.len(), 2);
    assert!(s[1].is_zero());
    let simple = simple3();
    assert_eq!(derived_series(simple.algebra(), &Subspace::full(4)).unwrap(), vec![Subspace::full(4)]);
    // u, w1, w2, w3, v: [W W W] = −det·v keeps v in the second term.
    let l = lorentzian5();
    let s = derived_series(l.algebra(), &Subspace::full(5)).unwrap();
    let dims: Vec<usize> = s.iter().map(Subspace::dim).collect();
    assert_eq!(dims, vec![5, 4, 1, 0]);
    assert_eq!(s[1], span(5, &[1, 2, 3, 4]));
    assert_eq!(s[2], span(5, &[4]));
}

#[test]
fn solvability() {
    let a = NLieAlgebra::abelian(3, 2).unwrap();
    assert!(is_solvable(&a, &Subspace::full(2)).unwrap());
    assert!(!is_solvable(simple3().algebra(), &Subspace::full(4)).unwrap());
    let m = direct_sum(&simple3(), &line(-1)).unwrap();
    assert!(!is_solvable(m.algebra(), &Subspace::full(5)).unwrap());
    assert!(is_solvable(m.algebra(), &span(5, &[4])).unwrap());
}

#[test]
fn derived_ideals() {
    assert!(derived_ideal(&NLieAlgebra::abelian(3, 3).unwrap()).is_zero());
    assert!(derived_ideal(simple3().algebra()).is_full());
    let l = lorentzian5();
    let d = derived_ideal(l.algebra());
    assert_eq!(d, span(5, &[1, 2, 3, 4]));
    assert_eq!(d, l.metric().perp(&center(l.algebra())).unwrap());
}

#[test]
fn minimal_ideal_examples() {
    assert!(minimal_ideal_search(&simple3(), 0).unwrap().is_none());
    let ss = direct_sum(&simple3(), &simple3()).unwrap();
    let found = minimal_ideal_search(&ss, 0).unwrap().unwrap().space;
    assert!(found == span(8, &[0, 1, 2, 3]) || found == span(8, &[4, 5, 6, 7]));
    let l = lorentzian5();
    assert_eq!(minimal_ideal_search(&l, 0).unwrap().unwrap().space, span(5, &[4]));
}

#[test]
fn minimal_kinds() {
    let ss = direct_sum(&simple3(), &simple3()).unwrap();
    let h = IdealHandle::ideal(&ss, span(8, &[0, 1, 2, 3])).unwrap();
    assert_eq!(classify_minimal(ss.metric(), &h).unwrap(), MinimalKind::Nondegenerate);
    let l = lorentzian5();
    let h = IdealHandle::ideal(&l, span(5, &[4])).unwrap();
    assert_eq!(classify_minimal(l.metric(), &h).unwrap(), MinimalKind::Isotropic);
    let plane = build_abelian(3, SymmetricForm::diagonal(&[q(1), q(-1)])).unwrap();
    let null = Subspace::span(2, [vec![q(1), q(1)]]);
    let h = IdealHandle::ideal(&plane, null).unwrap();
    assert_eq!(classify_minimal(plane.metric(), &h).unwrap(), MinimalKind::Isotropic);
}

fn factor_multiset(m: &MetricNLieAlgebra, seed: u64) -> Vec<(usize, Signature)> {
    let mut v: Vec<(usize, Signature)> = decompose(m, seed)
        .unwrap()
        .factors
        .iter()
        .map(|f| (f.dim(), f.signature()))
        .collect();
    v.sort();
    v
}

#[test]
fn decomposition_examples() {
    let m = ssz();
    assert_eq!(decompose(&m, 0).unwrap().dims(), vec![4, 4, 1]);
    let mut rng = SeededRng::new(9);
    let iso = random_isometry(m.metric(), 6, &mut rng);
    let c = m.conjugate(&iso).unwrap();
    assert_eq!(factor_multiset(&c, 1), factor_multiset(&m, 0));
    assert_eq!(decompose(&lorentzian5(), 0).unwrap().dims(), vec![5]);
}

#[test]
fn classification_examples() {
    let s = build_simple(4, &[1, 1, 1, 1, -1]).unwrap();
    assert!(matches!(classify_indecomposable(&s, 0).unwrap(), IndecomposableKind::Simple(_)));
    assert!(matches!(
        classify_indecomposable(&line(-1), 0).unwrap(),
        IndecomposableKind::OneDimensional
    ));
    match classify_indecomposable(&lorentzian5(), 0).unwrap() {
        IndecomposableKind::DoubleExtension(shape) => assert_eq!(shape.ideal.dim(), 1),
        other => panic!("expected a double extension, got {}", other.name()),
    }
}

#[test]
fn subquotients() {
    let l = lorentzian5();
    let full = subquotient_metric(&l, &Subspace::full(5)).unwrap();
    assert_eq!(full.algebra, l);
    let ip = l.metric().perp(&span(5, &[4])).unwrap();
    let mid = subquotient_metric(&l, &ip).unwrap();
    assert_eq!(mid.algebra.dim(), 3);
    assert!(mid.algebra.tensor().is_zero());
    assert_eq!(mid.algebra.metric(), &SymmetricForm::identity(3));
    let h = build_abelian(3, SymmetricForm::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap()).unwrap();
    let sh = direct_sum(&simple3(), &h).unwrap();
    let j = span(6, &[0, 1, 2, 3, 4]);
    let sq = subquotient_metric(&sh, &j).unwrap();
    assert_eq!(sq.algebra, simple3());
    assert_eq!(quotient_algebra(sh.algebra(), &span(6, &[4, 5])).unwrap(), simple3().algebra().clone());
}

/// `[P I V … V] = 0` on basis vectors of `V`.
fn perp_kills(a: &NLieAlgebra, p: &Subspace, i: &Subspace) -> bool {
    let d = a.dim();
    p.basis_vectors().iter().all(|x| {
        i.basis_vectors().iter().all(|y| {
            tuples(d, a.n() - 2).iter().all(|t| {
                let rest: Vec<Vec<Rational>> = t.iter().map(|&k| e(d, k)).collect();
                let mut refs: Vec<&[Rational]> = vec![x, y];
                refs.extend(rest.iter().map(Vec::as_slice));
                a.bracket(&refs).unwrap().iter().all(Rational::is_zero)
            })
        })
    })
}

fn conjugated_sample(seed: u64) -> MetricNLieAlgebra {
    let mut rng = SeededRng::new(seed);
    let m = if seed % 2 == 0 {
        random_block_algebra(3, &mut rng, false).unwrap()
    } else {
        let d = layered_data(3, &[1, -1, 1], 1, None, &[], q(1)).unwrap();
        nlie::constructions::double_extend_1d(&d).unwrap()
    };
    let iso = random_isometry(m.metric(), 4, &mut rng);
    m.conjugate(&iso).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn perp_of_ideal_is_ideal_and_kills_it(seed in any::<u64>(), v in proptest::collection::vec(-3i64..=3, 16)) {
        let m = conjugated_sample(seed);
        let d = m.dim();
        let x: Vec<Rational> = v.iter().take(d).map(|&c| q(c)).collect();
        let i = ideal_closure(m.algebra(), &Subspace::span(d, [x])).unwrap();
        let p = m.metric().perp(&i).unwrap();
        prop_assert!(is_ideal(m.algebra(), &p).unwrap());
        prop_assert!(perp_kills(m.algebra(), &p, &i));
    }

    #[test]
    fn derived_ideal_is_perp_of_centre(seed in any::<u64>()) {
        let m = conjugated_sample(seed);
        let z = center(m.algebra());
        prop_assert_eq!(derived_ideal(m.algebra()), m.metric().perp(&z).unwrap());
    }

    #[test]
    fn decomposition_is_orthogonal_and_exhaustive(seed in any::<u64>()) {
        let m = conjugated_sample(seed);
        let dec = decompose(&m, seed).unwrap();
        let total: usize = dec.dims().iter().sum();
        prop_assert_eq!(total, m.dim());
        let sig = dec.factors.iter().fold(Signature::default(), |s, f| s + f.signature());
        prop_assert_eq!(sig, m.signature());
        let subs: Vec<Subspace> = (0..dec.factors.len()).map(|i| dec.factor_subspace(i)).collect();
        for (i, s) in subs.iter().enumerate() {
            prop_assert!(is_ideal(m.algebra(), s).unwrap());
            prop_assert!(m.metric().is_nondegenerate_on(s));
            for t in &subs[i + 1..] {
                for x in s.basis_vectors() {
                    for y in t.basis_vectors() {
                        prop_assert!(m.metric().pair(&x, &y).is_zero());
                    }
                }
            }
        }
    }
}
