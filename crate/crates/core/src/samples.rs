//! Named sample algebras and seeded corpora used by tests, benches and the CLI.

use crate::algebra::{MetricNLieAlgebra, StructureTensor};
use crate::constructions::{
    build_abelian, build_simple, direct_sum, double_extend_1d, random_isometry,
    OneDimDoubleExtensionData,
};
use crate::error::Result;
use crate::exact::{Rational, SymmetricForm};
use crate::rng::SeededRng;

/// The cross product on `Q³` as a Lie bracket.
pub fn cross_product() -> StructureTensor {
    let mut t = StructureTensor::zero(2, 3);
    let one = Rational::one();
    t.add_entry(&[0, 1], 2, &one).expect("in range");
    t.add_entry(&[1, 2], 0, &one).expect("in range");
    t.add_entry(&[2, 0], 1, &one).expect("in range");
    t
}

/// `W = Q³` euclidean with the cross product as lower bracket and zero
/// 3-bracket.
pub fn cross_product_data() -> OneDimDoubleExtensionData {
    OneDimDoubleExtensionData {
        w_metric: SymmetricForm::identity(3),
        n_bracket_w: StructureTensor::zero(3, 3),
        lower_bracket: cross_product(),
        uu: Rational::zero(),
    }
}

/// The five-dimensional lorentzian 3-algebra built from [`cross_product_data`].
pub fn lorentzian5() -> MetricNLieAlgebra {
    double_extend_1d(&cross_product_data()).expect("valid data")
}

/// One-dimensional double extension data with `W = A ⊕ S ⊕ E`: `E` carries
/// `scale` times the simple (n−1)-bracket with signs `lower_signs` as lower
/// bracket, `S` is the simple n-algebra with signs `w_signs` (when given)
/// and `A` is abelian with metric `diag(abelian)`.
pub fn layered_data(
    n: usize,
    lower_signs: &[i32],
    scale: i64,
    w_signs: Option<&[i32]>,
    abelian: &[i64],
    uu: Rational,
) -> Result<OneDimDoubleExtensionData> {
    let e = build_simple(n - 1, lower_signs)?;
    let mut pieces: Vec<MetricNLieAlgebra> = Vec::new();
    if !abelian.is_empty() {
        let diag: Vec<Rational> = abelian.iter().map(|&x| Rational::from(x)).collect();
        pieces.push(build_abelian(n, SymmetricForm::diagonal(&diag))?);
    }
    if let Some(s) = w_signs {
        pieces.push(build_simple(n, s)?);
    }
    let offset: usize = pieces.iter().map(|p| p.dim()).sum();
    let e_metric = e.metric().clone();
    pieces.push(build_abelian(n, e_metric)?);
    let mut w = pieces[0].clone();
    for p in &pieces[1..] {
        w = direct_sum(&w, p)?;
    }
    let k = w.dim();
    let c = Rational::from(scale);
    let mut lower = StructureTensor::zero(n - 1, k);
    for (t, v) in e.tensor().iter() {
        let idx: Vec<usize> = t.iter().map(|i| i + offset).collect();
        for (j, x) in v.iter().enumerate() {
            if !x.is_zero() {
                lower.add_entry(&idx, j + offset, &(x * &c))?;
            }
        }
    }
    let (alg, metric) = w.into_parts();
    Ok(OneDimDoubleExtensionData {
        w_metric: metric,
        n_bracket_w: alg.into_tensor(),
        lower_bracket: lower,
        uu,
    })
}

/// Round-trip instances: the cross-product example, the simple 3-bracket
/// on euclidean `Q⁴` for `n = 4`, and seeded variations of [`layered_data`].
pub fn one_dim_instances(count: usize, seed: u64) -> Result<Vec<OneDimDoubleExtensionData>> {
    let mut out = vec![
        cross_product_data(),
        layered_data(4, &[1, 1, 1, 1], 1, None, &[], Rational::zero())?,
    ];
    let mut rng = SeededRng::new(seed);
    while out.len() < count {
        let n = 3 + rng.below(2);
        let lower_signs = random_signs(&mut rng, n);
        let scale = [1, -1, 2, 3][rng.below(4)];
        let w_signs = (rng.below(3) == 0).then(|| random_signs(&mut rng, n + 1));
        let abelian: Vec<i64> = (0..rng.below(3)).map(|_| [1, -1, 2][rng.below(3)]).collect();
        let uu = Rational::from(rng.below(5) as i64 - 2);
        out.push(layered_data(
            n,
            &lower_signs,
            scale,
            w_signs.as_deref(),
            &abelian,
            uu,
        )?);
    }
    Ok(out)
}

/// Uniform random signs.
pub fn random_signs(rng: &mut SeededRng, len: usize) -> Vec<i32> {
    (0..len).map(|_| if rng.below(2) == 0 { 1 } else { -1 }).collect()
}

/// Validated metric algebras: direct sums of simples, abelian algebras of
/// signatures up to `(3, 3)` and one-dimensional double extensions for
/// `n = 3, 4`.
pub fn corpus(seed: u64) -> Result<Vec<MetricNLieAlgebra>> {
    let mut rng = SeededRng::new(seed);
    let mut out = Vec::new();
    for n in [3, 4] {
        for _ in 0..4 {
            out.push(build_simple(n, &random_signs(&mut rng, n + 1))?);
        }
        for _ in 0..4 {
            let a = build_simple(n, &random_signs(&mut rng, n + 1))?;
            let b = build_simple(n, &random_signs(&mut rng, n + 1))?;
            let mut s = direct_sum(&a, &b)?;
            if rng.below(2) == 0 {
                let z = build_abelian(n, SymmetricForm::diagonal(&[Rational::from(1 - 2 * rng.below(2) as i64)]))?;
                s = direct_sum(&s, &z)?;
            }
            out.push(s);
        }
    }
    for p in 0..=3i64 {
        for q in 0..=3i64 {
            if p + q == 0 {
                continue;
            }
            let mut diag = vec![Rational::one(); p as usize];
            diag.extend(vec![-Rational::one(); q as usize]);
            out.push(build_abelian(3, SymmetricForm::diagonal(&diag))?);
        }
    }
    out.push(lorentzian5());
    for d in one_dim_instances(18, seed ^ 0x5eed)? {
        out.push(double_extend_1d(&d)?);
    }
    Ok(out)
}

/// `A ⊕ B ⊕ C` built from simples and abelian lines, for arity `n`.
pub fn random_block_algebra(n: usize, rng: &mut SeededRng, euclidean: bool) -> Result<MetricNLieAlgebra> {
    let mut blocks = Vec::new();
    for _ in 0..3 {
        let signs = if euclidean {
            vec![1; n + 1]
        } else {
            random_signs(rng, n + 1)
        };
        let b = match rng.below(3) {
            0 => {
                let s = if euclidean { 1 } else { 1 - 2 * rng.below(2) as i64 };
                build_abelian(n, SymmetricForm::diagonal(&[Rational::from(s)]))?
            }
            _ => build_simple(n, &signs)?,
        };
        blocks.push(b);
    }
    let mut m = blocks[0].clone();
    for b in &blocks[1..] {
        m = direct_sum(&m, b)?;
    }
    Ok(m)
}

/// Conjugates by a seeded isometry of the metric.
pub fn conjugated(m: &MetricNLieAlgebra, planes: usize, rng: &mut SeededRng) -> Result<MetricNLieAlgebra> {
    let q = random_isometry(m.metric(), planes, rng);
    m.conjugate(&q)
}
