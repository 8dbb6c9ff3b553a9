//! Closures, centres, centralizers and derived series.

use itertools::Itertools;

use crate::algebra::derivation::ad_span;
use crate::algebra::{MetricNLieAlgebra, NLieAlgebra};
use crate::error::{Error, Result};
use crate::exact::matrix::is_zero_vec;
use crate::exact::{kernel, Matrix, Rational, RowReducer, Subspace};

/// A basis of `span{ad_{e_T}}`, the maps whose common invariant subspaces
/// are exactly the ideals.
#[derive(Clone, Debug)]
pub struct AdGenerators {
    dim: usize,
    mats: Vec<Matrix>,
}

impl AdGenerators {
    pub fn new(a: &NLieAlgebra) -> Self {
        let d = a.dim();
        let mats = ad_span(a.tensor())
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_fn(d, d, |i, j| v[i * d + j].clone()))
            .collect();
        AdGenerators { dim: d, mats }
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Smallest subspace containing `s` and stable under every generator.
    pub fn closure(&self, s: &Subspace) -> Subspace {
        let mut r = RowReducer::from_subspace(s);
        let mut queue = s.basis_vectors();
        while let Some(v) = queue.pop() {
            if r.dim() == self.dim {
                break;
            }
            for g in &self.mats {
                let w = g.mul_vec(&v);
                if !is_zero_vec(&w) && r.insert(&w) {
                    queue.push(w);
                }
            }
        }
        r.into_subspace()
    }

    pub fn closure_of_vector(&self, v: &[Rational]) -> Subspace {
        self.closure(&Subspace::span(self.dim, [v]))
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        let r = RowReducer::from_subspace(s);
        s.basis_vectors()
            .iter()
            .all(|b| self.mats.iter().all(|g| r.contains(&g.mul_vec(b))))
    }
}

fn check_ambient(a: &NLieAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: s.ambient(),
        });
    }
    Ok(())
}

/// Smallest ideal containing `s`.
pub fn ideal_closure(a: &NLieAlgebra, s: &Subspace) -> Result<Subspace> {
    check_ambient(a, s)?;
    Ok(AdGenerators::new(a).closure(s))
}

/// `[s V … V] ⊆ s`.
pub fn is_ideal(a: &NLieAlgebra, s: &Subspace) -> Result<bool> {
    check_ambient(a, s)?;
    Ok(AdGenerators::new(a).is_invariant(s))
}

/// `[s … s] ⊆ s`.
pub fn is_subalgebra(a: &NLieAlgebra, s: &Subspace) -> Result<bool> {
    check_ambient(a, s)?;
    Ok(brackets_of(a, s).is_subspace_of(s))
}

/// Span of all brackets of basis vectors of `s`.
pub fn brackets_of(a: &NLieAlgebra, s: &Subspace) -> Subspace {
    let basis = s.basis_vectors();
    let mut r = RowReducer::new(a.dim());
    for t in (0..basis.len()).combinations(a.n()) {
        let args: Vec<&[Rational]> = t.iter().map(|&i| basis[i].as_slice()).collect();
        let v = a.tensor().eval_unchecked(&args);
        if !is_zero_vec(&v) {
            r.insert(&v);
        }
    }
    r.into_subspace()
}

/// `Z(V) = { x : [x V … V] = 0 }`.
pub fn center(a: &NLieAlgebra) -> Subspace {
    let d = a.dim();
    let mut r = RowReducer::new(d);
    for t in (0..d).combinations(a.n() - 1) {
        let m = a.ad_basis(&t);
        for i in 0..d {
            if r.dim() == d {
                break;
            }
            let row = m.row(i);
            if !is_zero_vec(row) {
                r.insert(row);
            }
        }
    }
    kernel(r.into_subspace().basis())
}

/// `Z(I) = { x : [x I V … V] = 0 }` for an ideal `I`.
pub fn centralizer(a: &NLieAlgebra, i: &Subspace) -> Result<Subspace> {
    if !is_ideal(a, i)? {
        return Err(Error::NotIdeal);
    }
    let d = a.dim();
    let mut r = RowReducer::new(d);
    for w in i.basis_vectors() {
        for t in (0..d).combinations(a.n() - 2) {
            // column j holds [e_j, w, e_T]
            let mut m = Matrix::zeros(d, d);
            for j in 0..d {
                let mut v = vec![Rational::zero(); d];
                for (k, wk) in w.iter().enumerate() {
                    if wk.is_zero() {
                        continue;
                    }
                    let mut idx = vec![j, k];
                    idx.extend(&t);
                    a.tensor().add_eval_basis(&mut v, wk, &idx);
                }
                for (row, x) in v.into_iter().enumerate() {
                    m[(row, j)] = x;
                }
            }
            for row in m.row_vecs() {
                if !is_zero_vec(&row) {
                    r.insert(&row);
                }
            }
        }
    }
    Ok(kernel(r.into_subspace().basis()))
}

/// `[V … V]`.
pub fn derived_ideal(a: &NLieAlgebra) -> Subspace {
    Subspace::span(a.dim(), a.tensor().iter().map(|(_, v)| v.to_vec()))
}

/// `I⁽⁰⁾ = I, I⁽ᵏ⁺¹⁾ = [I⁽ᵏ⁾ … I⁽ᵏ⁾]` until it stabilizes; the stable term
/// appears once at the end.
pub fn derived_series(a: &NLieAlgebra, i: &Subspace) -> Result<Vec<Subspace>> {
    if !is_ideal(a, i)? {
        return Err(Error::NotIdeal);
    }
    let gens = AdGenerators::new(a);
    let mut series = vec![i.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = brackets_of(a, last);
        if !gens.is_invariant(&next) {
            return Err(Error::Inconsistent(
                "derived ideal of an ideal is not an ideal".into(),
            ));
        }
        if &next == last {
            return Ok(series);
        }
        series.push(next);
    }
}

/// Whether the derived series of `i` reaches zero.
pub fn is_solvable(a: &NLieAlgebra, i: &Subspace) -> Result<bool> {
    Ok(derived_series(a, i)?
        .last()
        .is_some_and(Subspace::is_zero))
}

/// Cached properties of an ideal relative to a metric algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealFlags {
    pub is_ideal: bool,
    pub is_subalgebra: bool,
    pub is_isotropic: bool,
    pub is_nondegenerate: bool,
    pub is_coisotropic: bool,
}

/// A subspace together with its ideal-theoretic flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealHandle {
    pub space: Subspace,
    pub flags: IdealFlags,
}

impl IdealHandle {
    pub fn new(m: &MetricNLieAlgebra, space: Subspace) -> Result<Self> {
        check_ambient(m.algebra(), &space)?;
        let perp = m.metric().perp(&space)?;
        let meet = space.intersect(&perp)?;
        let flags = IdealFlags {
            is_ideal: is_ideal(m.algebra(), &space)?,
            is_subalgebra: is_subalgebra(m.algebra(), &space)?,
            is_isotropic: space.is_subspace_of(&perp),
            is_nondegenerate: meet.is_zero(),
            is_coisotropic: perp.is_subspace_of(&space),
        };
        Ok(IdealHandle { space, flags })
    }

    /// Like [`IdealHandle::new`] but rejects non-ideals.
    pub fn ideal(m: &MetricNLieAlgebra, space: Subspace) -> Result<Self> {
        let h = Self::new(m, space)?;
        if !h.flags.is_ideal {
            return Err(Error::NotIdeal);
        }
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}
