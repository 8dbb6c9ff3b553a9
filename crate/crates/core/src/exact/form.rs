//! Symmetric bilinear forms.

use std::fmt;
use std::ops::Add;

use super::matrix::{dot, Matrix};
use super::subspace::{kernel, Subspace};
use super::Rational;
use crate::error::{Error, Result};

/// Sylvester inertia: counts of positive, negative and zero squares.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Signature {
            positive,
            negative,
            zero,
        }
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }
}

impl Add for Signature {
    type Output = Signature;
    fn add(self, o: Signature) -> Signature {
        Signature::new(
            self.positive + o.positive,
            self.negative + o.negative,
            self.zero + o.zero,
        )
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.positive, self.negative, self.zero)
    }
}

/// Inertia of a symmetric matrix by exact congruence diagonalization.
///
/// A zero pivot with a nonzero entry further along its row is repaired by
/// adding the lowest such row and column to the pivot row and column; if
/// that still leaves a zero pivot, the two indices are swapped instead.
pub fn signature(gram: &Matrix) -> Signature {
    assert!(gram.is_square());
    let d = gram.rows();
    let mut g = gram.clone();
    let mut sig = Signature::default();
    for k in 0..d {
        if g[(k, k)].is_zero() {
            match (k + 1..d).find(|&j| !g[(k, j)].is_zero()) {
                None => {
                    sig.zero += 1;
                    continue;
                }
                Some(j) => {
                    let combined = &(&g[(k, j)] + &g[(k, j)]) + &g[(j, j)];
                    if combined.is_zero() {
                        g.swap_rows(k, j);
                        swap_cols(&mut g, k, j);
                    } else {
                        add_row_col(&mut g, j, k);
                    }
                }
            }
        }
        let p = g[(k, k)].clone();
        if p.signum() > 0 {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        let inv = p.recip();
        for i in k + 1..d {
            let f = &g[(i, k)] * &inv;
            if f.is_zero() {
                continue;
            }
            for j in k + 1..d {
                let t = &f * &g[(k, j)];
                g[(i, j)] -= t;
            }
        }
        for i in k + 1..d {
            g[(k, i)] = Rational::zero();
            g[(i, k)] = Rational::zero();
        }
    }
    sig
}

fn swap_cols(m: &mut Matrix, a: usize, b: usize) {
    for i in 0..m.rows() {
        let t = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = t;
    }
}

/// Row `dst += row src` followed by column `dst += column src`.
fn add_row_col(m: &mut Matrix, src: usize, dst: usize) {
    for j in 0..m.cols() {
        let t = m[(src, j)].clone();
        m[(dst, j)] += t;
    }
    for i in 0..m.rows() {
        let t = m[(i, src)].clone();
        m[(i, dst)] += t;
    }
}

/// A symmetric bilinear form given by its Gram matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymmetricForm {
    gram: Matrix,
    signature: Signature,
}

impl fmt::Debug for SymmetricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetricForm({:?})", self.gram)
    }
}

impl SymmetricForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let signature = signature(&gram);
        Ok(SymmetricForm { gram, signature })
    }

    /// Like [`SymmetricForm::new`] but rejects degenerate forms.
    pub fn nondegenerate(gram: Matrix) -> Result<Self> {
        let f = Self::new(gram)?;
        if !f.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        Ok(f)
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        Self::new(Matrix::diagonal(entries)).expect("diagonal matrices are symmetric")
    }

    pub fn identity(d: usize) -> Self {
        Self::new(Matrix::identity(d)).expect("symmetric")
    }

    pub fn zero(d: usize) -> Self {
        Self::new(Matrix::zeros(d, d)).expect("symmetric")
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.signature.is_nondegenerate()
    }

    pub fn is_diagonal(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| i == j || self.gram[(i, j)].is_zero()))
    }

    pub fn pair(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(x, &self.gram.mul_vec(y))
    }

    /// `W⊥`; requires a nondegenerate form.
    pub fn perp(&self, w: &Subspace) -> Result<Subspace> {
        if !self.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        self.orthogonal(w)
    }

    /// `{ v : ⟨v, w⟩ = 0 for all w ∈ W }` for any form.
    pub fn orthogonal(&self, w: &Subspace) -> Result<Subspace> {
        if w.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: w.ambient(),
            });
        }
        Ok(kernel(&w.basis().mul(&self.gram)))
    }

    /// Gram matrix of the form on the rows of `basis`.
    pub fn restrict_rows(&self, basis: &Matrix) -> SymmetricForm {
        let g = basis.mul(&self.gram).mul(&basis.transpose());
        SymmetricForm::new(g).expect("restriction of a symmetric form is symmetric")
    }

    /// The form restricted to a subspace, in its canonical basis.
    pub fn restrict(&self, w: &Subspace) -> SymmetricForm {
        self.restrict_rows(w.basis())
    }

    /// `Pᵀ G P`: the form expressed in the basis given by the columns of `p`.
    pub fn transform(&self, p: &Matrix) -> SymmetricForm {
        let g = p.transpose().mul(&self.gram).mul(p);
        SymmetricForm::new(g).expect("congruence preserves symmetry")
    }

    pub fn direct_sum(&self, other: &SymmetricForm) -> SymmetricForm {
        SymmetricForm {
            gram: self.gram.block_diag(&other.gram),
            signature: self.signature + other.signature,
        }
    }

    pub fn is_isotropic(&self, w: &Subspace) -> bool {
        self.restrict(w).gram.is_zero()
    }

    pub fn is_nondegenerate_on(&self, w: &Subspace) -> bool {
        self.restrict(w).is_nondegenerate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::unit_vec;
    use proptest::prelude::*;

    #[test]
    fn signature_examples() {
        let g = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
        assert_eq!(signature(&g), Signature::new(3, 1, 0));
        assert_eq!(signature(&Matrix::from_i64(&[&[0, 1], &[1, 0]])), Signature::new(1, 1, 0));
        assert_eq!(signature(&Matrix::zeros(2, 2)), Signature::new(0, 0, 2));
        // zero pivot whose row/column combination also vanishes
        let g = Matrix::from_i64(&[&[0, 1], &[1, -2]]);
        assert_eq!(signature(&g), Signature::new(1, 1, 0));
    }

    #[test]
    fn perp_examples() {
        let f = SymmetricForm::identity(2);
        let e1 = Subspace::span(2, [unit_vec(2, 0)]);
        let e2 = Subspace::span(2, [unit_vec(2, 1)]);
        assert_eq!(f.perp(&e1).unwrap(), e2);
        let h = SymmetricForm::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(h.perp(&e1).unwrap(), e1);
        assert!(f.perp(&Subspace::full(2)).unwrap().is_zero());
        assert!(SymmetricForm::zero(2).perp(&e1).is_err());
    }

    fn sym_matrix(d: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, d * d).prop_map(move |v| {
            Matrix::from_fn(d, d, |i, j| {
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                Rational::from(v[a * d + b])
            })
        })
    }

    fn invertible(d: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-2i64..=2, d * d)
            .prop_map(move |v| Matrix::from_fn(d, d, |i, j| Rational::from(v[i * d + j])))
            .prop_filter("invertible", |m| !m.determinant().is_zero())
    }

    fn nondegenerate(d: usize) -> impl Strategy<Value = SymmetricForm> {
        sym_matrix(d)
            .prop_filter("nondegenerate", |g| !g.determinant().is_zero())
            .prop_map(|g| SymmetricForm::new(g).unwrap())
    }

    /// Independent inertia oracle: the sign pattern of leading principal
    /// minors after a generic congruence, cross-checked with rank.
    fn oracle_signature(g: &Matrix) -> (usize, usize) {
        let rank = g.rank();
        // Number of negative eigenvalues equals the number of sign changes in
        // the characteristic polynomial coefficients (Descartes is exact for
        // real-rooted polynomials).
        let cp = crate::exact::poly::charpoly(g);
        let coeffs: Vec<i32> = cp.coeffs().iter().map(|c| c.signum()).collect();
        let positive_roots = descartes(&coeffs);
        (positive_roots, rank - positive_roots)
    }

    fn descartes(signs: &[i32]) -> usize {
        let nz: Vec<i32> = signs.iter().copied().filter(|&s| s != 0).collect();
        nz.windows(2).filter(|w| w[0] != w[1]).count()
    }

    proptest! {
        #[test]
        fn signature_matches_descartes_oracle(g in sym_matrix(4)) {
            let s = signature(&g);
            let (p, q) = oracle_signature(&g);
            prop_assert_eq!((s.positive, s.negative, s.zero), (p, q, 4 - p - q));
        }

        #[test]
        fn signature_congruence_invariant(g in sym_matrix(4), p in invertible(4)) {
            let f = SymmetricForm::new(g).unwrap();
            prop_assert_eq!(f.transform(&p).signature(), f.signature());
        }

        #[test]
        fn double_perp(f in nondegenerate(4), v in proptest::collection::vec(-2i64..=2, 8)) {
            let w = Subspace::span(4, v.chunks(4).map(|c| c.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>()));
            let wp = f.perp(&w).unwrap();
            prop_assert_eq!(w.dim() + wp.dim(), 4);
            prop_assert_eq!(f.perp(&wp).unwrap(), w);
        }
    }
}
