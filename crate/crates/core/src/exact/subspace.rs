//! Canonical subspaces of Qᵈ.

use super::matrix::{axpy, Matrix};
use super::Rational;
use crate::error::{Error, Result};

/// Incremental reduced row-echelon basis builder.
///
/// Rows are kept fully reduced (pivot 1, zeros in every other row's pivot
/// column) and ordered by pivot, so [`RowReducer::into_subspace`] is free.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ambient: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowReducer {
    pub fn new(ambient: usize) -> Self {
        RowReducer {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        RowReducer {
            ambient: s.ambient,
            rows: s
                .pivots
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, s.basis.row(i).to_vec()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Reduces `v` against the current rows in place.
    pub fn reduce(&self, v: &mut [Rational]) {
        debug_assert_eq!(v.len(), self.ambient);
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = -&v[*p];
                axpy(v, &c, row);
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Rational::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                axpy(row, &c, &w);
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, w));
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let basis = Matrix::from_rows(self.rows.into_iter().map(|(_, r)| r).collect(), self.ambient);
        Subspace {
            ambient: self.ambient,
            basis,
            pivots,
        }
    }
}

/// A subspace stored by its reduced row-echelon basis.
///
/// Two values are equal exactly when they describe the same subspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(ambient={}, basis={:?})", self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<V: AsRef<[Rational]>>(ambient: usize, vectors: impl IntoIterator<Item = V>) -> Self {
        let mut r = RowReducer::new(ambient);
        for v in vectors {
            assert_eq!(v.as_ref().len(), ambient, "vector length mismatch");
            r.insert(v.as_ref());
        }
        r.into_subspace()
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let r = m.rref();
        Subspace {
            ambient: m.cols(),
            basis: r.reduced,
            pivots: r.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis as matrix rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot columns, ascending. Unit vectors at these indices span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut it = self.pivots.iter().peekable();
        for j in 0..self.ambient {
            if it.peek() == Some(&&j) {
                it.next();
            } else {
                out.push(j);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        RowReducer::from_subspace(self).contains(v)
    }

    /// Coordinates of `v` in the canonical basis; `v` must lie in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        self.basis.vec_mul(coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && {
            let r = RowReducer::from_subspace(other);
            (0..self.dim()).all(|i| r.contains(self.basis.row(i)))
        }
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut r = RowReducer::from_subspace(self);
        for i in 0..other.dim() {
            r.insert(other.basis.row(i));
        }
        Ok(r.into_subspace())
    }

    /// Intersection via the kernel of the stacked annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let a = self.annihilator();
        let b = other.annihilator();
        Ok(kernel(&a.basis.vstack(&b.basis)))
    }

    /// `{ y : ⟨x, y⟩ = 0 for all x in self }` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    /// Image of the subspace under a linear map given by its matrix.
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::span(
            m.rows(),
            (0..self.dim()).map(|i| m.mul_vec(self.basis.row(i))),
        )
    }
}

/// Null space `{ x : m x = 0 }`.
pub fn kernel(m: &Matrix) -> Subspace {
    let n = m.cols();
    let r = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut gens = Vec::new();
    for f in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); n];
        v[f] = Rational::one();
        for (i, &p) in r.pivots.iter().enumerate() {
            v[p] = -&r.reduced[(i, f)];
        }
        gens.push(v);
    }
    Subspace::span(n, gens)
}
