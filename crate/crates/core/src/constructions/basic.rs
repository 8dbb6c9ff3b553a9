//! Simple and abelian algebras, orthogonal direct sums and isometries.

use crate::algebra::{MetricNLieAlgebra, NLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, SymmetricForm};
use crate::rng::SeededRng;

/// The simple n-Lie algebra with `[e₁ … ê_i … e_{n+1}] = (−1)^i ε_i e_i`
/// (1-based `i`) and metric `diag(ε₁, …, ε_{n+1})`.
pub fn build_simple(n: usize, signs: &[i32]) -> Result<MetricNLieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidArity(n));
    }
    if signs.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: signs.len(),
        });
    }
    if signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(Error::MalformedData("signs must be +1 or -1".into()));
    }
    let d = n + 1;
    let mut t = StructureTensor::zero(n, d);
    for i in 0..d {
        let tuple: Vec<usize> = (0..d).filter(|&j| j != i).collect();
        // 1-based index i + 1, so (−1)^(i+1)
        let sign = if i % 2 == 0 { -1 } else { 1 };
        t.add_entry(&tuple, i, &Rational::from((sign * signs[i]) as i64))?;
    }
    let metric = SymmetricForm::diagonal(&signs.iter().map(|&s| Rational::from(s)).collect::<Vec<_>>());
    MetricNLieAlgebra::new(NLieAlgebra::new(t)?, metric)
}

/// Parses a sign string such as `"+++-"`.
pub fn parse_signs(s: &str) -> Result<Vec<i32>> {
    s.chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => Err(Error::MalformedData(format!("bad sign character {c:?}"))),
        })
        .collect()
}

/// Zero bracket with a nondegenerate metric.
pub fn build_abelian(n: usize, gram: SymmetricForm) -> Result<MetricNLieAlgebra> {
    if !gram.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    MetricNLieAlgebra::new(NLieAlgebra::abelian(n, gram.dim())?, gram)
}

/// Orthogonal direct sum with block tensor and block metric.
pub fn direct_sum(a: &MetricNLieAlgebra, b: &MetricNLieAlgebra) -> Result<MetricNLieAlgebra> {
    if a.n() != b.n() {
        return Err(Error::ArityMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let t = a.tensor().direct_sum(b.tensor());
    MetricNLieAlgebra::new(NLieAlgebra::new(t)?, a.metric().direct_sum(b.metric()))
}

/// Cayley transform `(I − A)⁻¹ (I + A)` of a `G`-skew-adjoint `A`, or `None`
/// when `I − A` is singular.
pub fn cayley(a: &Matrix) -> Option<Matrix> {
    let d = a.rows();
    let id = Matrix::identity(d);
    Some(id.sub(a).inverse()?.mul(&id.add(a)))
}

/// A product of `planes` elementary Cayley transforms. Each factor comes from
/// `A = c G⁻¹ (E_ij − E_ji)` for a random pair `i < j` and a small random
/// `c`, so it is an isometry of `metric`.
pub fn random_isometry(metric: &SymmetricForm, planes: usize, rng: &mut SeededRng) -> Matrix {
    let d = metric.dim();
    let g_inv = metric.gram().inverse().expect("nondegenerate metric");
    let mut q = Matrix::identity(d);
    if d < 2 {
        return q;
    }
    let scales = [
        Rational::new(1, 2),
        Rational::new(-1, 2),
        Rational::one(),
        Rational::from(-1),
        Rational::from(2),
        Rational::new(-1, 3),
    ];
    let mut made = 0;
    while made < planes {
        let i = rng.below(d);
        let j = rng.below(d);
        if i == j {
            continue;
        }
        let c = scales[rng.below(scales.len())].clone();
        let mut s = Matrix::zeros(d, d);
        s[(i, j)] = c.clone();
        s[(j, i)] = -c;
        if let Some(f) = cayley(&g_inv.mul(&s)) {
            q = q.mul(&f);
            made += 1;
        }
    }
    q
}
