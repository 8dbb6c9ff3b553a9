//! Semidirect extensions `V ⊕ W` by representations of `ad V`.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::algebra::{check_n_jacobi, MetricNLieAlgebra, NLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, SymmetricForm};

/// A candidate representation: for each increasing `(n−1)`-tuple `T` of base
/// indices, the matrix by which `e_T` acts on `W` (columns are images).
/// Missing tuples act by zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationData {
    pub base: NLieAlgebra,
    pub module_dim: usize,
    pub action: BTreeMap<Vec<usize>, Matrix>,
}

impl RepresentationData {
    /// Validates the shape of the data and assembles the bracket on `V ⊕ W`
    /// without checking the n-Jacobi identity.
    pub fn assemble(&self) -> Result<StructureTensor> {
        let n = self.base.n();
        let d = self.base.dim();
        let m = self.module_dim;
        let mut t = StructureTensor::zero(n, d + m);
        for (tuple, v) in self.base.tensor().iter() {
            let mut w = v.to_vec();
            w.resize(d + m, Rational::zero());
            t.set(&tuple, w)?;
        }
        for (tuple, a) in &self.action {
            if tuple.len() != n - 1 {
                return Err(Error::ArityMismatch {
                    left: n - 1,
                    right: tuple.len(),
                });
            }
            if !tuple.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::MalformedData(format!(
                    "action tuple {tuple:?} is not strictly increasing"
                )));
            }
            if let Some(&i) = tuple.iter().find(|&&i| i >= d) {
                return Err(Error::IndexOutOfRange { index: i, dim: d });
            }
            if a.rows() != m || a.cols() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: a.rows().max(a.cols()),
                });
            }
            for j in 0..m {
                let mut idx = tuple.clone();
                idx.push(d + j);
                for i in 0..m {
                    let c = &a[(i, j)];
                    if !c.is_zero() {
                        t.add_entry(&idx, d + i, c)?;
                    }
                }
            }
        }
        Ok(t)
    }
}

/// The Lie n-algebra on `V ⊕ W` with `[V…V W] ⊆ W` given by the action and
/// `[V…V W W] = 0`. Fails with the n-Jacobi report when the action is not a
/// representation.
pub fn build_representation_extension(r: &RepresentationData) -> Result<NLieAlgebra> {
    let t = r.assemble()?;
    let report = check_n_jacobi(&t);
    if !report.is_pass() {
        return Err(Error::Validation(report));
    }
    NLieAlgebra::new(t)
}

/// The adjoint representation: `W = V`, acting by inner derivations.
pub fn adjoint_representation(a: &NLieAlgebra) -> RepresentationData {
    representation_from(a, |m| m)
}

/// The coadjoint representation on `V*`, acting by `−ad_Tᵀ`.
pub fn coadjoint_representation(a: &NLieAlgebra) -> RepresentationData {
    representation_from(a, |m| m.transpose().neg())
}

fn representation_from(a: &NLieAlgebra, f: impl Fn(Matrix) -> Matrix) -> RepresentationData {
    let action = (0..a.dim())
        .combinations(a.n() - 1)
        .filter_map(|t| {
            let ad = a.ad_basis(&t);
            (!ad.is_zero()).then(|| (t, f(ad)))
        })
        .collect();
    RepresentationData {
        base: a.clone(),
        module_dim: a.dim(),
        action,
    }
}

/// `V ⋉ V*` with the coadjoint action.
pub fn build_coadjoint(a: &NLieAlgebra) -> Result<NLieAlgebra> {
    build_representation_extension(&coadjoint_representation(a))
}

/// The dual pairing `⟨e_i, e_j*⟩ = δ_ij` on `V ⊕ V*`.
pub fn pairing_metric(d: usize) -> SymmetricForm {
    let z = Matrix::zeros(d, d);
    let id = Matrix::identity(d);
    SymmetricForm::nondegenerate(z.hstack(&id).vstack(&id.hstack(&z)))
        .expect("hyperbolic form is nondegenerate")
}

/// `V ⋉ V*` with the dual pairing metric.
pub fn build_coadjoint_metric(a: &NLieAlgebra) -> Result<MetricNLieAlgebra> {
    MetricNLieAlgebra::new(build_coadjoint(a)?, pairing_metric(a.dim()))
}
