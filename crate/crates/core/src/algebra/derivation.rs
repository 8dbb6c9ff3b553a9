//! Derivations, inner derivations and the Lie algebra `ad V`.

use itertools::Itertools;
use rayon::prelude::*;

use super::validate::derivation_residual;
use super::{NLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::exact::matrix::is_zero_vec;
use crate::exact::{kernel, Matrix, Rational, RowReducer, Subspace};

/// A linear endomorphism acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    pub matrix: Matrix,
}

impl Endomorphism {
    pub fn new(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "endomorphisms are square");
        Endomorphism { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Row-major flattening, the coordinates used by [`derivation_space`].
    pub fn to_vec(&self) -> Vec<Rational> {
        self.matrix.entries().to_vec()
    }

    pub fn from_vec(d: usize, v: &[Rational]) -> Self {
        Endomorphism::new(Matrix::from_fn(d, d, |i, j| v[i * d + j].clone()))
    }

    pub fn commutator(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism::new(self.matrix.mul(&other.matrix).sub(&other.matrix.mul(&self.matrix)))
    }
}

/// A Lie algebra given by structure constants `c_{ij}^k` (arity 2).
pub type LieAlgebraPresentation = NLieAlgebra;

/// True iff `D[x₁ … x_n] = Σᵢ [x₁ … D xᵢ … x_n]` on all increasing basis tuples.
pub fn is_derivation(a: &NLieAlgebra, d: &Endomorphism) -> Result<bool> {
    if d.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: d.dim(),
        });
    }
    Ok((0..a.dim())
        .combinations(a.n())
        .all(|y| is_zero_vec(&derivation_residual(a.tensor(), &d.matrix, &y))))
}

/// `y ↦ [x₁ … x_{n−1} y]`.
pub fn inner_derivation(a: &NLieAlgebra, xs: &[&[Rational]]) -> Result<Endomorphism> {
    Ok(Endomorphism::new(a.ad(xs)?))
}

/// Span of all inner derivations with its Lie algebra structure.
#[derive(Clone, Debug)]
pub struct InnerDerivationAlgebra {
    /// Canonical (reduced row-echelon, flattened) basis of `span{ad}`.
    pub basis: Vec<Endomorphism>,
    /// Structure constants of the commutator in that basis.
    pub lie: LieAlgebraPresentation,
    pub span: Subspace,
}

impl InnerDerivationAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Flattened span of `ad_{e_T}` over increasing `(n−1)`-tuples `T`.
pub fn ad_span(t: &StructureTensor) -> Subspace {
    let d = t.dim();
    let tuples: Vec<Vec<usize>> = (0..d).combinations(t.arity() - 1).collect();
    let mats: Vec<Matrix> = tuples.par_iter().map(|x| t.left_mult_basis(x)).collect();
    let mut r = RowReducer::new(d * d);
    for m in mats {
        if !m.is_zero() && r.dim() < d * d {
            r.insert(m.entries());
        }
    }
    r.into_subspace()
}

/// Computes a basis of `ad V`, checks closure under commutators and returns
/// the induced Lie algebra. Fails when `ad V` is not closed, which can only
/// happen when the n-Jacobi identity fails.
pub fn inner_derivation_algebra(a: &NLieAlgebra) -> Result<InnerDerivationAlgebra> {
    let d = a.dim();
    let span = ad_span(a.tensor());
    let basis: Vec<Endomorphism> = span
        .basis_vectors()
        .iter()
        .map(|v| Endomorphism::from_vec(d, v))
        .collect();
    let k = basis.len();
    let reducer = RowReducer::from_subspace(&span);
    let pairs: Vec<(usize, usize)> = (0..k).tuple_combinations().collect();
    let brackets: Vec<Option<Vec<Rational>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let c = basis[i].commutator(&basis[j]).to_vec();
            reducer.contains(&c).then(|| span.coordinates(&c))
        })
        .collect();
    let mut lie = StructureTensor::zero(2, k);
    for (&(i, j), coords) in pairs.iter().zip(brackets) {
        let coords = coords.ok_or_else(|| {
            Error::Inconsistent("inner derivations are not closed under commutators".into())
        })?;
        lie.set(&[i, j], coords)?;
    }
    Ok(InnerDerivationAlgebra {
        basis,
        lie: NLieAlgebra::new(lie)?,
        span,
    })
}

/// Solution space of the derivation equations, as flattened `d × d` matrices.
pub fn derivation_space(a: &NLieAlgebra) -> Subspace {
    let d = a.dim();
    let t = a.tensor();
    let n = a.n();
    let mut constraints = RowReducer::new(d * d);
    for y in (0..d).combinations(n) {
        let phi = t.eval_basis(&y);
        // rows[c] holds the coefficient of each D[a][b] in output coordinate c
        let mut rows = vec![vec![Rational::zero(); d * d]; d];
        for (b, fb) in phi.iter().enumerate() {
            if fb.is_zero() {
                continue;
            }
            for (c, row) in rows.iter_mut().enumerate() {
                row[c * d + b] += fb;
            }
        }
        let mut idx = y.clone();
        for k in 0..n {
            for j in 0..d {
                idx[k] = j;
                let v = t.eval_basis(&idx);
                for (c, vc) in v.iter().enumerate() {
                    if !vc.is_zero() {
                        rows[c][j * d + y[k]] -= vc;
                    }
                }
            }
            idx[k] = y[k];
        }
        for row in rows {
            if !is_zero_vec(&row) {
                constraints.insert(&row);
            }
        }
    }
    let m = constraints.into_subspace();
    kernel(m.basis())
}

/// `K(x, y) = tr(ad_x ad_y)` in the given basis.
pub fn killing_form(g: &LieAlgebraPresentation) -> Matrix {
    assert_eq!(g.n(), 2, "killing form needs a Lie algebra");
    let k = g.dim();
    let ads: Vec<Matrix> = (0..k).map(|i| g.ad_basis(&[i])).collect();
    Matrix::from_fn(k, k, |i, j| {
        let (a, b) = (&ads[i], &ads[j]);
        let mut s = Rational::zero();
        for p in 0..k {
            for q in 0..k {
                if !a[(p, q)].is_zero() && !b[(q, p)].is_zero() {
                    s += &a[(p, q)] * &b[(q, p)];
                }
            }
        }
        s
    })
}

pub fn killing_nondegenerate(g: &LieAlgebraPresentation) -> bool {
    !killing_form(g).determinant().is_zero()
}

/// Zero centre and semisimple `ad V`.
pub fn is_semisimple(a: &NLieAlgebra) -> Result<bool> {
    if !crate::structure::center(a).is_zero() {
        return Ok(false);
    }
    Ok(killing_nondegenerate(&inner_derivation_algebra(a)?.lie))
}
