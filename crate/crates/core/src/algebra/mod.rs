//! Lie n-algebras, metric Lie n-algebras and their validation.

pub mod derivation;
pub mod tensor;
pub mod validate;

use std::ops::Deref;

pub use derivation::{
    derivation_space, inner_derivation, inner_derivation_algebra, is_derivation, is_semisimple,
    killing_form, killing_nondegenerate, Endomorphism, InnerDerivationAlgebra,
    LieAlgebraPresentation,
};
pub use tensor::StructureTensor;
pub use validate::{check_invariance, check_n_jacobi, Identity, ValidationReport, Violation};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Signature, SymmetricForm};

/// A vector space with an alternating n-linear bracket, `n ≥ 2`.
///
/// The n-Jacobi identity is not enforced on construction; use
/// [`check_n_jacobi`] or wrap the algebra in a [`MetricNLieAlgebra`].
/// Dimension zero is admitted so that trivial summands can be represented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NLieAlgebra {
    tensor: StructureTensor,
}

impl NLieAlgebra {
    pub fn new(tensor: StructureTensor) -> Result<Self> {
        if tensor.arity() < 2 {
            return Err(Error::InvalidArity(tensor.arity()));
        }
        Ok(NLieAlgebra { tensor })
    }

    pub fn abelian(n: usize, dim: usize) -> Result<Self> {
        Self::new(StructureTensor::zero(n, dim))
    }

    pub fn n(&self) -> usize {
        self.tensor.arity()
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn into_tensor(self) -> StructureTensor {
        self.tensor
    }

    /// `[x₁ … x_n]`
    pub fn bracket(&self, xs: &[&[Rational]]) -> Result<Vec<Rational>> {
        self.tensor.eval(xs)
    }

    /// Matrix of `ad_{x₁ … x_{n−1}}`.
    pub fn ad(&self, xs: &[&[Rational]]) -> Result<Matrix> {
        self.tensor.left_mult(xs)
    }

    /// Matrix of `ad` on basis vectors.
    pub fn ad_basis(&self, indices: &[usize]) -> Matrix {
        self.tensor.left_mult_basis(indices)
    }

    pub fn check_n_jacobi(&self) -> ValidationReport {
        check_n_jacobi(&self.tensor)
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<NLieAlgebra> {
        let p_inv = p.inverse().ok_or(Error::Inconsistent("singular basis change".into()))?;
        Ok(NLieAlgebra {
            tensor: self.tensor.transform(p, &p_inv),
        })
    }
}

impl Deref for NLieAlgebra {
    type Target = StructureTensor;
    fn deref(&self) -> &StructureTensor {
        &self.tensor
    }
}

/// A Lie n-algebra with a nondegenerate invariant symmetric form.
///
/// Values of this type have passed both the n-Jacobi and the invariance
/// check; the fields are private so that this cannot be bypassed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetricNLieAlgebra {
    algebra: NLieAlgebra,
    metric: SymmetricForm,
}

impl MetricNLieAlgebra {
    /// Validates and wraps. Fails with the full report when either identity
    /// has a nonzero residual.
    pub fn new(algebra: NLieAlgebra, metric: SymmetricForm) -> Result<Self> {
        if metric.dim() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: metric.dim(),
            });
        }
        if !metric.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        let report = validate(&algebra, &metric);
        if !report.is_pass() {
            return Err(Error::Validation(report));
        }
        Ok(MetricNLieAlgebra { algebra, metric })
    }

    pub fn algebra(&self) -> &NLieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &SymmetricForm {
        &self.metric
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn signature(&self) -> Signature {
        self.metric.signature()
    }

    pub fn into_parts(self) -> (NLieAlgebra, SymmetricForm) {
        (self.algebra, self.metric)
    }

    /// The same metric algebra in the basis given by the columns of `p`.
    /// Validity is preserved by any invertible change of basis.
    pub fn change_basis(&self, p: &Matrix) -> Result<MetricNLieAlgebra> {
        Ok(MetricNLieAlgebra {
            algebra: self.algebra.change_basis(p)?,
            metric: self.metric.transform(p),
        })
    }

    /// Transports the algebra along an isometry `q` of its own metric, so the
    /// Gram matrix is unchanged and only the structure constants move.
    pub fn conjugate(&self, q: &Matrix) -> Result<MetricNLieAlgebra> {
        let g = self.metric.gram();
        if q.rows() != self.dim() || q.transpose().mul(g).mul(q) != *g {
            return Err(Error::NotIsometry);
        }
        self.change_basis(q)
    }
}

impl Deref for MetricNLieAlgebra {
    type Target = NLieAlgebra;
    fn deref(&self) -> &NLieAlgebra {
        &self.algebra
    }
}

/// Both identity checks, n-Jacobi violations first.
pub fn validate(algebra: &NLieAlgebra, metric: &SymmetricForm) -> ValidationReport {
    check_n_jacobi(algebra.tensor()).merge(check_invariance(algebra.tensor(), metric))
}
