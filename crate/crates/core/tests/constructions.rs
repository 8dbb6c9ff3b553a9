mod common;

use std::collections::BTreeMap;

use common::{brb, e, invariance_holds, jacobi_holds, q};
use nlie::algebra::{MetricNLieAlgebra, NLieAlgebra, StructureTensor};
use nlie::constructions::{
    adjoint_representation, build_abelian, build_coadjoint, build_coadjoint_metric,
    build_representation_extension, build_simple, direct_sum, double_extend_1d,
    double_extend_general, extract_double_extension, extract_with_search, one_dim_as_general,
    random_isometry, ExtractedData, GeneralDoubleExtensionData, OneDimDoubleExtensionData,
    RepresentationData,
};
use nlie::exact::{Matrix, Rational, Signature, Subspace, SymmetricForm};
use nlie::rng::SeededRng;
use nlie::samples::{cross_product, cross_product_data, layered_data, lorentzian5};
use nlie::structure::{center, decompose, simplicity_fingerprint};
use nlie::Error;
use proptest::prelude::*;

fn simple3() -> MetricNLieAlgebra {
    build_simple(3, &[1; 4]).unwrap()
}

#[test]
fn simple_brackets_and_signatures() {
    let s = simple3();
    let a = s.algebra();
    assert_eq!(brb(a, &[1, 2, 3]), vec![q(-1), q(0), q(0), q(0)]);
    assert_eq!(brb(a, &[0, 2, 3]), e(4, 1));
    assert_eq!(brb(a, &[0, 1, 3]), vec![q(0), q(0), q(-1), q(0)]);
    assert_eq!(brb(a, &[0, 1, 2]), e(4, 3));
    assert_eq!(s.metric(), &SymmetricForm::identity(4));
    assert_eq!(s.signature(), Signature::new(4, 0, 0));
    assert_eq!(build_simple(3, &[1, 1, 1, -1]).unwrap().signature(), Signature::new(3, 1, 0));
    for n in 3..=6 {
        let m = build_simple(n, &(0..=n).map(|i| if i % 3 == 0 { -1 } else { 1 }).collect::<Vec<_>>()).unwrap();
        assert!(jacobi_holds(m.algebra()));
        assert!(invariance_holds(m.algebra(), m.metric()));
    }
}

#[test]
fn simple_rejects_bad_input() {
    assert!(matches!(build_simple(1, &[1, 1]), Err(Error::InvalidArity(1))));
    assert!(build_simple(3, &[1, 1, 1]).is_err());
    assert!(build_simple(3, &[1, 1, 2, 1]).is_err());
}

#[test]
fn abelian_examples() {
    let one = build_abelian(3, SymmetricForm::identity(1)).unwrap();
    assert_eq!(one.dim(), 1);
    assert!(one.tensor().is_zero());
    let plane = build_abelian(3, SymmetricForm::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap()).unwrap();
    assert_eq!(plane.signature(), Signature::new(1, 1, 0));
    assert!(center(plane.algebra()).is_full());
    assert!(matches!(
        build_abelian(3, SymmetricForm::new(Matrix::from_i64(&[&[1, 1], &[1, 1]])).unwrap()),
        Err(Error::DegenerateForm)
    ));
}

#[test]
fn direct_sum_examples() {
    let s = simple3();
    let ss = direct_sum(&s, &s).unwrap();
    assert_eq!(ss.dim(), 8);
    assert_eq!(ss.signature(), Signature::new(8, 0, 0));
    let with_line = direct_sum(&s, &build_abelian(3, SymmetricForm::identity(1)).unwrap()).unwrap();
    assert_eq!(center(with_line.algebra()).dim(), center(s.algebra()).dim() + 1);
    let mut dims = decompose(&with_line, 0).unwrap().dims();
    dims.sort();
    assert_eq!(dims, vec![1, 4]);
    let s4 = build_simple(4, &[1; 5]).unwrap();
    assert!(matches!(direct_sum(&s, &s4), Err(Error::ArityMismatch { .. })));
}

#[test]
fn representation_extensions() {
    let base = simple3().algebra().clone();
    let zero = RepresentationData {
        base: base.clone(),
        module_dim: 3,
        action: BTreeMap::new(),
    };
    assert!(jacobi_holds(&build_representation_extension(&zero).unwrap()));
    let adj = build_representation_extension(&adjoint_representation(&base)).unwrap();
    assert!(jacobi_holds(&adj));
    let mut doubled = adjoint_representation(&base);
    for m in doubled.action.values_mut() {
        *m = m.scale(&q(2));
    }
    assert!(matches!(build_representation_extension(&doubled), Err(Error::Validation(_))));
}

#[test]
fn coadjoint_examples() {
    let c = build_coadjoint(simple3().algebra()).unwrap();
    assert_eq!(c.dim(), 8);
    // [e1, e2, e4*] = −e3*
    let mut want = vec![q(0); 8];
    want[6] = q(-1);
    assert_eq!(brb(&c, &[0, 1, 7]), want);
    assert!(build_coadjoint(&NLieAlgebra::abelian(3, 3).unwrap()).unwrap().tensor().is_zero());
    for i in 0..8 {
        for j in 4..8 {
            for k in 4..8 {
                assert!(brb(&c, &[i, j, k]).iter().all(Rational::is_zero));
            }
        }
    }
    let m = build_coadjoint_metric(simple3().algebra()).unwrap();
    assert!(invariance_holds(m.algebra(), m.metric()));
}

#[test]
fn cross_product_extension() {
    let l = lorentzian5();
    assert_eq!(l.dim(), 5);
    assert_eq!(l.signature(), Signature::new(4, 1, 0));
    let mut rng = SeededRng::new(3);
    for _ in 0..5 {
        let x = rng.vector(3);
        let y = rng.vector(3);
        let z = rng.vector(3);
        let lift = |v: &[Rational]| {
            let mut out = vec![q(0)];
            out.extend_from_slice(v);
            out.push(q(0));
            out
        };
        let cross = vec![
            &x[1] * &y[2] - &x[2] * &y[1],
            &x[2] * &y[0] - &x[0] * &y[2],
            &x[0] * &y[1] - &x[1] * &y[0],
        ];
        let uxy = l.algebra().bracket(&[&e(5, 0), &lift(&x), &lift(&y)]).unwrap();
        assert_eq!(uxy, lift(&cross));
        let det = cross.iter().zip(&z).fold(q(0), |s, (a, b)| s + a * b);
        let xyz = l.algebra().bracket(&[&lift(&x), &lift(&y), &lift(&z)]).unwrap();
        let mut want = vec![q(0); 5];
        want[4] = -det;
        assert_eq!(xyz, want);
    }
    assert!(jacobi_holds(l.algebra()));
    assert!(invariance_holds(l.algebra(), l.metric()));
}

#[test]
fn abelian_extension_data_is_decomposable() {
    let d = OneDimDoubleExtensionData {
        w_metric: SymmetricForm::identity(2),
        n_bracket_w: StructureTensor::zero(3, 2),
        lower_bracket: StructureTensor::zero(2, 2),
        uu: q(0),
    };
    let m = double_extend_1d(&d).unwrap();
    assert!(decompose(&m, 0).unwrap().factors.len() > 1);
}

#[test]
fn non_invariant_lower_bracket_fails_condition_one() {
    let mut d = cross_product_data();
    d.lower_bracket.add_entry(&[1, 2], 0, &q(1)).unwrap();
    match double_extend_1d(&d) {
        Err(Error::ExtensionCondition { condition, report }) => {
            assert_eq!(condition, 1);
            assert!(!report.violations.is_empty());
        }
        other => panic!("expected condition (1) failure, got {other:?}"),
    }
}

#[test]
fn general_extension_matches_one_dimensional() {
    let d = cross_product_data();
    let g = one_dim_as_general(&d).unwrap();
    assert!(g.mixed.values().any(|v| v.iter().any(|c| !c.is_zero())));
    assert_eq!(double_extend_general(&g).unwrap(), double_extend_1d(&d).unwrap());
}

#[test]
fn general_extension_of_nothing_by_simple_is_coadjoint() {
    let u = simple3().algebra().clone();
    let data = GeneralDoubleExtensionData {
        w: MetricNLieAlgebra::new(NLieAlgebra::abelian(3, 0).unwrap(), SymmetricForm::identity(0)).unwrap(),
        u: u.clone(),
        action: BTreeMap::new(),
        phi: StructureTensor::zero_map(3, 0, 4),
        mixed: BTreeMap::new(),
        u_form: None,
    };
    let v = double_extend_general(&data).unwrap();
    assert_eq!(v.dim(), 8);
    assert_eq!(v, build_coadjoint_metric(&u).unwrap());
}

#[test]
fn inconsistent_general_data_is_rejected() {
    let mut d = cross_product_data();
    d.lower_bracket.add_entry(&[0, 1], 2, &q(1)).unwrap();
    let g = one_dim_as_general(&d).unwrap();
    let r = double_extend_general(&g);
    assert!(matches!(r, Err(Error::PairingInconsistent { level: 1 })), "{r:?}");
    let mut g = one_dim_as_general(&cross_product_data()).unwrap();
    g.phi.add_entry(&[0, 1, 2], 0, &q(1)).unwrap();
    assert!(matches!(double_extend_general(&g), Err(Error::PairingInconsistent { .. })));
}

#[test]
fn lorentzian_extraction_recovers_cross_product() {
    let l = lorentzian5();
    let x = extract_with_search(&l, 0).unwrap();
    match &x.data {
        ExtractedData::OneDim(d) => {
            assert_eq!(d.lower_bracket, cross_product());
            assert!(d.n_bracket_w.is_zero());
            assert!(d.uu.is_zero());
            assert_eq!(d, &cross_product_data());
        }
        _ => panic!("expected one-dimensional data"),
    }
    assert_eq!(x.basis, Matrix::identity(5));
}

#[test]
fn coadjoint_extraction_recovers_simple_u() {
    let m = build_coadjoint_metric(simple3().algebra()).unwrap();
    let x = extract_with_search(&m, 0).unwrap();
    match &x.data {
        ExtractedData::General(g) => {
            assert_eq!(g.w_dim(), 0);
            assert_eq!(g.r(), 4);
            assert!(simplicity_fingerprint(&g.u).unwrap().is_simple());
        }
        _ => panic!("expected general data"),
    }
    assert_eq!(x.rebuild().unwrap(), m.change_basis(&x.basis).unwrap());
}

#[test]
fn extraction_refuses_simple_and_decomposable() {
    assert!(matches!(extract_with_search(&simple3(), 0), Err(Error::Simple)));
    let ss = direct_sum(&simple3(), &simple3()).unwrap();
    assert!(matches!(extract_with_search(&ss, 0), Err(Error::Decomposable)));
    let line = build_abelian(3, SymmetricForm::identity(1)).unwrap();
    assert!(matches!(extract_with_search(&line, 0), Err(Error::OneDimensional)));
    let l = lorentzian5();
    assert!(matches!(
        extract_double_extension(&l, &Subspace::span(5, [e(5, 1)])),
        Err(Error::NotIdeal)
    ));
}

fn arb_data() -> impl Strategy<Value = OneDimDoubleExtensionData> {
    (
        3usize..=4,
        proptest::collection::vec(prop_oneof![Just(1), Just(-1)], 5),
        prop_oneof![Just(1i64), Just(-1), Just(2), Just(3)],
        proptest::option::of(proptest::collection::vec(prop_oneof![Just(1), Just(-1)], 5)),
        proptest::collection::vec(prop_oneof![Just(1i64), Just(-1), Just(2)], 0..3),
        -2i64..=2,
    )
        .prop_map(|(n, lower, scale, w_signs, abelian, uu)| {
            let w = w_signs.map(|s| s[..=n].to_vec());
            layered_data(n, &lower[..n], scale, w.as_deref(), &abelian, q(uu)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn one_dimensional_round_trip(d in arb_data()) {
        let m = double_extend_1d(&d).unwrap();
        prop_assert_eq!(m.signature(), d.w_metric.signature() + Signature::new(1, 1, 0));
        let x = extract_double_extension(&m, &Subspace::span(m.dim(), [e(m.dim(), m.dim() - 1)])).unwrap();
        prop_assert_eq!(x.basis, Matrix::identity(m.dim()));
        prop_assert_eq!(x.data, ExtractedData::OneDim(d.clone()));
        let g = one_dim_as_general(&d).unwrap();
        prop_assert_eq!(double_extend_general(&g).unwrap(), m);
    }

    #[test]
    fn extraction_after_isometry(seed in any::<u64>(), lower in proptest::collection::vec(prop_oneof![Just(1), Just(-1)], 3)) {
        let d = layered_data(3, &lower, 1, None, &[], q(0)).unwrap();
        let m = double_extend_1d(&d).unwrap();
        let mut rng = SeededRng::new(seed);
        let c = m.conjugate(&random_isometry(m.metric(), 3, &mut rng)).unwrap();
        let x = extract_with_search(&c, seed).unwrap();
        prop_assert_eq!(x.rebuild().unwrap(), c.change_basis(&x.basis).unwrap());
        match x.data {
            ExtractedData::OneDim(got) => {
                prop_assert_eq!(got.w_metric.signature(), d.w_metric.signature());
                prop_assert!(jacobi_holds(&NLieAlgebra::new(got.lower_bracket).unwrap()));
            }
            ExtractedData::General(_) => prop_assert!(false, "expected one-dimensional data"),
        }
    }
}
