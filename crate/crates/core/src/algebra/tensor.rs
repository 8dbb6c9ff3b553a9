//! Alternating multilinear maps `Λᵏ A → B` stored on increasing index tuples.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exact::matrix::{axpy, is_zero_vec, unit_vec, zero_vec};
use crate::exact::{Matrix, Rational};

/// Structure constants of an alternating `k`-linear map from a
/// `dim`-dimensional space to an `out_dim`-dimensional one (usually the
/// same space). Only strictly increasing tuples are stored, indexed by their
/// colexicographic rank; an empty entry means the zero vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    arity: usize,
    dim: usize,
    out_dim: usize,
    table: Vec<Vec<Rational>>,
    binom: Vec<Vec<usize>>,
}

impl std::fmt::Debug for StructureTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StructureTensor(arity={}, dim={}, out_dim={}", self.arity, self.dim, self.out_dim)?;
        for (t, v) in self.iter() {
            write!(f, ", {t:?}->{v:?}")?;
        }
        write!(f, ")")
    }
}

/// Sorts `idx` in place and returns the permutation sign, or `None` if an
/// index repeats.
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            return None;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

impl StructureTensor {
    pub fn zero(arity: usize, dim: usize) -> Self {
        Self::zero_map(arity, dim, dim)
    }

    /// Zero alternating map `Λᵏ Q^dim → Q^out_dim`.
    pub fn zero_map(arity: usize, dim: usize, out_dim: usize) -> Self {
        let mut binom = vec![vec![0usize; dim + 1]; arity + 1];
        for (k, row) in binom.iter_mut().enumerate() {
            for (n, b) in row.iter_mut().enumerate() {
                *b = binomial(n, k);
            }
        }
        let count = if arity <= dim { binom[arity][dim] } else { 0 };
        StructureTensor {
            arity,
            dim,
            out_dim,
            table: vec![Vec::new(); count],
            binom,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn num_tuples(&self) -> usize {
        self.table.len()
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Colex rank of a strictly increasing tuple.
    pub fn rank(&self, tuple: &[usize]) -> usize {
        debug_assert!(tuple.windows(2).all(|w| w[0] < w[1]));
        tuple
            .iter()
            .enumerate()
            .map(|(j, &i)| self.binom[j + 1][i])
            .sum()
    }

    /// Inverse of [`StructureTensor::rank`].
    pub fn unrank(&self, mut r: usize) -> Vec<usize> {
        let mut out = vec![0; self.arity];
        let mut hi = self.dim;
        for j in (1..=self.arity).rev() {
            let mut i = j - 1;
            while i + 1 < hi && self.binom[j][i + 1] <= r {
                i += 1;
            }
            out[j - 1] = i;
            r -= self.binom[j][i];
            hi = i;
        }
        out
    }

    /// Value on a strictly increasing tuple, `None` when zero.
    pub fn get(&self, tuple: &[usize]) -> Option<&[Rational]> {
        let v = &self.table[self.rank(tuple)];
        (!v.is_empty()).then_some(v.as_slice())
    }

    /// Sets the value on a tuple given in any order; the stored value is
    /// adjusted by the permutation sign.
    pub fn set(&mut self, indices: &[usize], value: Vec<Rational>) -> Result<()> {
        let mut idx = self.check_indices(indices)?;
        if value.len() != self.out_dim {
            return Err(Error::DimensionMismatch {
                expected: self.out_dim,
                found: value.len(),
            });
        }
        let sign = sort_with_sign(&mut idx).ok_or_else(|| {
            Error::MalformedData(format!("repeated index in tuple {indices:?}"))
        })?;
        let mut value = value;
        if sign < 0 {
            for x in value.iter_mut() {
                *x = -&*x;
            }
        }
        let r = self.rank(&idx);
        self.table[r] = if is_zero_vec(&value) { Vec::new() } else { value };
        Ok(())
    }

    /// Adds `coeff · e_target` to the value on `indices` (any order).
    pub fn add_entry(&mut self, indices: &[usize], target: usize, coeff: &Rational) -> Result<()> {
        let mut idx = self.check_indices(indices)?;
        if target >= self.out_dim {
            return Err(Error::IndexOutOfRange {
                index: target,
                dim: self.out_dim,
            });
        }
        let sign = sort_with_sign(&mut idx).ok_or_else(|| {
            Error::MalformedData(format!("repeated index in tuple {indices:?}"))
        })?;
        let r = self.rank(&idx);
        let slot = &mut self.table[r];
        if slot.is_empty() {
            *slot = zero_vec(self.out_dim);
        }
        if sign < 0 {
            slot[target] -= coeff;
        } else {
            slot[target] += coeff;
        }
        if is_zero_vec(slot) {
            slot.clear();
        }
        Ok(())
    }

    fn check_indices(&self, indices: &[usize]) -> Result<Vec<usize>> {
        if indices.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: indices.len(),
            });
        }
        if let Some(&i) = indices.iter().find(|&&i| i >= self.dim) {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim,
            });
        }
        Ok(indices.to_vec())
    }

    /// Value on basis vectors in any order: signed, zero on repeats.
    pub fn eval_basis(&self, indices: &[usize]) -> Vec<Rational> {
        let mut out = zero_vec(self.out_dim);
        self.add_eval_basis(&mut out, &Rational::one(), indices);
        out
    }

    /// `out += c · Φ(e_{i₁}, …, e_{i_k})`.
    pub fn add_eval_basis(&self, out: &mut [Rational], c: &Rational, indices: &[usize]) {
        let mut idx = indices.to_vec();
        let Some(sign) = sort_with_sign(&mut idx) else {
            return;
        };
        let v = &self.table[self.rank(&idx)];
        if v.is_empty() {
            return;
        }
        if sign < 0 {
            axpy(out, &-c, v);
        } else {
            axpy(out, c, v);
        }
    }

    /// Multilinear alternating evaluation on arbitrary vectors.
    pub fn eval(&self, xs: &[&[Rational]]) -> Result<Vec<Rational>> {
        if xs.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: xs.len(),
            });
        }
        if let Some(x) = xs.iter().find(|x| x.len() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(self.eval_unchecked(xs))
    }

    pub(crate) fn eval_unchecked(&self, xs: &[&[Rational]]) -> Vec<Rational> {
        let supports: Vec<Vec<usize>> = xs
            .iter()
            .map(|x| (0..self.dim).filter(|&i| !x[i].is_zero()).collect())
            .collect();
        let expansion: usize = supports.iter().map(Vec::len).product();
        let stored = self.table.iter().filter(|v| !v.is_empty()).count();
        if expansion <= stored.saturating_mul(self.arity * self.arity).max(1) {
            self.eval_expand(xs, &supports)
        } else {
            self.eval_det(xs)
        }
    }

    fn eval_expand(&self, xs: &[&[Rational]], supports: &[Vec<usize>]) -> Vec<Rational> {
        let mut out = zero_vec(self.out_dim);
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        for combo in supports.iter().map(|s| s.iter().copied()).multi_cartesian_product() {
            if !combo.iter().all_unique() {
                continue;
            }
            let mut c = Rational::one();
            for (x, &i) in xs.iter().zip(&combo) {
                c *= &x[i];
            }
            self.add_eval_basis(&mut out, &c, &combo);
        }
        out
    }

    /// `Σ_T det(X[T, :]) f_T` where the columns of `X` are the arguments.
    fn eval_det(&self, xs: &[&[Rational]]) -> Vec<Rational> {
        let mut out = zero_vec(self.out_dim);
        let k = self.arity;
        for (r, v) in self.table.iter().enumerate() {
            if v.is_empty() {
                continue;
            }
            let t = self.unrank(r);
            let m = Matrix::from_fn(k, k, |i, j| xs[j][t[i]].clone());
            let det = m.determinant();
            axpy(&mut out, &det, v);
        }
        out
    }

    /// Stored nonzero entries in lexicographic tuple order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &[Rational])> + '_ {
        (0..self.dim).combinations(self.arity).filter_map(move |t| {
            let v = &self.table[self.rank(&t)];
            (!v.is_empty()).then_some((t, v.as_slice()))
        })
    }

    /// Matrix of `y ↦ Φ(x₁, …, x_{k−1}, y)`.
    pub fn left_mult(&self, xs: &[&[Rational]]) -> Result<Matrix> {
        if xs.len() + 1 != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity - 1,
                right: xs.len(),
            });
        }
        let mut cols = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let e = unit_vec(self.dim, j);
            let mut args: Vec<&[Rational]> = xs.to_vec();
            args.push(&e);
            cols.push(self.eval(&args)?);
        }
        Ok(Matrix::from_columns(&cols, self.out_dim))
    }

    /// Matrix of `y ↦ Φ(e_{i₁}, …, e_{i_{k−1}}, y)`.
    pub fn left_mult_basis(&self, indices: &[usize]) -> Matrix {
        debug_assert_eq!(indices.len() + 1, self.arity);
        let mut m = Matrix::zeros(self.out_dim, self.dim);
        let mut idx = indices.to_vec();
        idx.push(0);
        for j in 0..self.dim {
            idx[self.arity - 1] = j;
            let v = self.eval_basis(&idx);
            for (i, x) in v.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// The same map in the basis given by the columns of `p` (`p_inv = p⁻¹`).
    pub fn transform(&self, p: &Matrix, p_inv: &Matrix) -> StructureTensor {
        assert_eq!(self.dim, self.out_dim, "transform needs an endomorphic tensor");
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| p.column(j)).collect();
        self.induced(&cols, |v| p_inv.mul_vec(v))
    }

    /// Tensor on `span(basis)` with values read back through `coords`.
    pub fn induced(
        &self,
        basis: &[Vec<Rational>],
        coords: impl Fn(&[Rational]) -> Vec<Rational>,
    ) -> StructureTensor {
        self.induced_map(basis, basis.len(), coords)
    }

    /// Map on `span(basis)` with values in `Q^out_dim` read through `coords`.
    pub fn induced_map(
        &self,
        basis: &[Vec<Rational>],
        out_dim: usize,
        coords: impl Fn(&[Rational]) -> Vec<Rational>,
    ) -> StructureTensor {
        let k = basis.len();
        let mut out = StructureTensor::zero_map(self.arity, k, out_dim);
        for r in 0..out.table.len() {
            let t = out.unrank(r);
            let args: Vec<&[Rational]> = t.iter().map(|&i| basis[i].as_slice()).collect();
            let v = self.eval_unchecked(&args);
            if is_zero_vec(&v) {
                continue;
            }
            let c = coords(&v);
            debug_assert_eq!(c.len(), out_dim);
            if !is_zero_vec(&c) {
                out.table[r] = c;
            }
        }
        out
    }

    /// Block sum: `self` on the first `dim` coordinates, `other` on the rest,
    /// all mixed values zero.
    pub fn direct_sum(&self, other: &StructureTensor) -> StructureTensor {
        assert_eq!(self.arity, other.arity);
        assert!(self.dim == self.out_dim && other.dim == other.out_dim);
        let d = self.dim + other.dim;
        let mut out = StructureTensor::zero(self.arity, d);
        for (t, v) in self.iter() {
            let mut w = v.to_vec();
            w.extend(zero_vec(other.dim));
            out.set(&t, w).expect("in range");
        }
        for (t, v) in other.iter() {
            let shifted: Vec<usize> = t.iter().map(|i| i + self.dim).collect();
            let mut w = zero_vec(self.dim);
            w.extend(v.iter().cloned());
            out.set(&shifted, w).expect("in range");
        }
        out
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_unrank_round_trip() {
        let t = StructureTensor::zero(3, 7);
        assert_eq!(t.num_tuples(), 35);
        for r in 0..35 {
            assert_eq!(t.rank(&t.unrank(r)), r);
        }
        let lex: Vec<Vec<usize>> = (0..7).combinations(3).collect();
        let mut ranks: Vec<usize> = lex.iter().map(|c| t.rank(c)).collect();
        ranks.sort();
        assert_eq!(ranks, (0..35).collect::<Vec<_>>());
    }

    #[test]
    fn sign_of_permutations() {
        assert_eq!(sort_with_sign(&mut [2, 1, 3]), Some(-1));
        assert_eq!(sort_with_sign(&mut [3, 1, 2]), Some(1));
        assert_eq!(sort_with_sign(&mut [1, 3, 1]), None);
    }

    fn random_tensor(arity: usize, dim: usize) -> impl Strategy<Value = StructureTensor> {
        let n = binomial(dim, arity) * dim;
        proptest::collection::vec(-2i64..=2, n).prop_map(move |v| {
            let mut t = StructureTensor::zero(arity, dim);
            for (r, chunk) in v.chunks(dim).enumerate() {
                let idx = t.unrank(r);
                t.set(&idx, chunk.iter().map(|&x| Rational::from(x)).collect()).unwrap();
            }
            t
        })
    }

    fn vecs(k: usize, d: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, d), k)
            .prop_map(|vs| vs.into_iter().map(|v| v.into_iter().map(Rational::from).collect()).collect())
    }

    /// Oracle: direct expansion over all index tuples, no sorting tricks.
    fn naive_eval(t: &StructureTensor, xs: &[Vec<Rational>]) -> Vec<Rational> {
        let d = t.dim();
        let mut out = zero_vec(d);
        for combo in (0..xs.len()).map(|_| 0..d).multi_cartesian_product() {
            let mut c = Rational::one();
            for (x, &i) in xs.iter().zip(&combo) {
                c *= &x[i];
            }
            if c.is_zero() {
                continue;
            }
            let mut sorted = combo.clone();
            if let Some(s) = sort_with_sign(&mut sorted) {
                if let Some(v) = t.get(&sorted) {
                    axpy(&mut out, &(c * Rational::from(s as i64)), v);
                }
            }
        }
        out
    }

    proptest! {
        #[test]
        fn eval_paths_agree(t in random_tensor(3, 5), xs in vecs(3, 5)) {
            let args: Vec<&[Rational]> = xs.iter().map(Vec::as_slice).collect();
            let supports: Vec<Vec<usize>> = xs.iter().map(|x| (0..5).filter(|&i| !x[i].is_zero()).collect()).collect();
            let expect = naive_eval(&t, &xs);
            prop_assert_eq!(t.eval_expand(&args, &supports), expect.clone());
            prop_assert_eq!(t.eval_det(&args), expect);
        }

        #[test]
        fn eval_is_alternating(t in random_tensor(3, 4), xs in vecs(3, 4)) {
            let a: Vec<&[Rational]> = xs.iter().map(Vec::as_slice).collect();
            let b = vec![a[1], a[0], a[2]];
            let lhs = t.eval(&a).unwrap();
            let rhs: Vec<Rational> = t.eval(&b).unwrap().into_iter().map(|x| -x).collect();
            prop_assert_eq!(lhs, rhs);
            let c = vec![a[0], a[0], a[2]];
            prop_assert!(is_zero_vec(&t.eval(&c).unwrap()));
        }

        #[test]
        fn transform_round_trip(t in random_tensor(2, 4)) {
            let p = Matrix::from_i64(&[&[1, 2, 0, 0], &[0, 1, 0, 3], &[1, 0, 1, 0], &[0, 0, 0, 1]]);
            let pi = p.inverse().unwrap();
            prop_assert_eq!(t.transform(&p, &pi).transform(&pi, &p), t);
        }
    }
}
