//! One-dimensional and general double extensions.
//!
//! Bases are ordered `[u, W, v]` for the one-dimensional case and
//! `[U, W, U*]` in general, so that the general construction with
//! `dim U = 1` reproduces the one-dimensional one.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::algebra::tensor::sort_with_sign;
use crate::algebra::validate::{check_invariance_as, check_jacobi_as, derivation_violations};
use crate::algebra::{Identity, MetricNLieAlgebra, NLieAlgebra, StructureTensor, ValidationReport};
use crate::error::{Error, Result};
use crate::exact::matrix::{dot, zero_vec};
use crate::exact::{Matrix, Rational, SymmetricForm};

/// Ingredients of a double extension by a one-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimDoubleExtensionData {
    pub w_metric: SymmetricForm,
    /// `[x₁ … x_n]_W`, arity `n` on `W`.
    pub n_bracket_w: StructureTensor,
    /// `[x₁ … x_{n−1}]`, arity `n − 1` on `W`.
    pub lower_bracket: StructureTensor,
    /// `⟨u, u⟩`.
    pub uu: Rational,
}

impl OneDimDoubleExtensionData {
    pub fn n(&self) -> usize {
        self.n_bracket_w.arity()
    }

    pub fn w_dim(&self) -> usize {
        self.w_metric.dim()
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.n();
        if n < 2 {
            return Err(Error::InvalidArity(n));
        }
        if self.lower_bracket.arity() + 1 != n {
            return Err(Error::ArityMismatch {
                left: n - 1,
                right: self.lower_bracket.arity(),
            });
        }
        let w = self.w_dim();
        for t in [&self.n_bracket_w, &self.lower_bracket] {
            if t.dim() != w || t.out_dim() != w {
                return Err(Error::DimensionMismatch {
                    expected: w,
                    found: t.dim(),
                });
            }
        }
        if !self.w_metric.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        Ok(())
    }

    /// Condition (1): the lower bracket is a Lie (n−1)-algebra leaving the
    /// metric on `W` invariant.
    pub fn check_condition_1(&self) -> ValidationReport {
        check_jacobi_as(&self.lower_bracket, Identity::LowerJacobi).merge(check_invariance_as(
            &self.lower_bracket,
            &self.w_metric,
            Identity::LowerInvariance,
        ))
    }

    /// Condition (2): `[ ]_W` is a metric Lie n-algebra and every lower inner
    /// derivation is a derivation of it.
    pub fn check_condition_2(&self) -> ValidationReport {
        let t = &self.n_bracket_w;
        let mut report = check_jacobi_as(t, Identity::NJacobi)
            .merge(check_invariance_as(t, &self.w_metric, Identity::Invariance));
        let mut equiv = Vec::new();
        for x in (0..self.w_dim()).combinations(self.n() - 2) {
            let d = self.lower_bracket.left_mult_basis(&x);
            if !d.is_zero() {
                equiv.extend(derivation_violations(t, &d, &x, Identity::LowerEquivariance));
            }
        }
        report.violations.extend(equiv);
        report
    }

    /// The structure tensor and metric on `[u, W, v]`, unchecked.
    pub fn assemble(&self) -> Result<(StructureTensor, SymmetricForm)> {
        self.check_shape()?;
        let n = self.n();
        let w = self.w_dim();
        let d = w + 2;
        let g = self.w_metric.gram();
        let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
        let mut t = StructureTensor::zero(n, d);
        for (x, l) in self.lower_bracket.iter() {
            let mut idx = vec![0];
            idx.extend(x.iter().map(|i| i + 1));
            let mut val = zero_vec(d);
            val[1..=w].clone_from_slice(l);
            t.set(&idx, val)?;
        }
        for y in (0..w).combinations(n) {
            let mut val = zero_vec(d);
            if let Some(b) = self.n_bracket_w.get(&y) {
                val[1..=w].clone_from_slice(b);
            }
            let l = self.lower_bracket.eval_basis(&y[..n - 1]);
            let pairing = dot(&g.mul_vec(&l), &unit(w, y[n - 1]));
            val[w + 1] = &sign * &pairing;
            let idx: Vec<usize> = y.iter().map(|i| i + 1).collect();
            t.set(&idx, val)?;
        }
        let mut gram = Matrix::zeros(d, d);
        for i in 0..w {
            for j in 0..w {
                gram[(i + 1, j + 1)] = g[(i, j)].clone();
            }
        }
        gram[(0, 0)] = self.uu.clone();
        gram[(0, w + 1)] = Rational::one();
        gram[(w + 1, 0)] = Rational::one();
        Ok((t, SymmetricForm::nondegenerate(gram)?))
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    crate::exact::matrix::unit_vec(n, i)
}

/// The double extension of `(W, [ ]_W)` by a one-dimensional algebra, on the
/// basis `[u, W, v]` with `⟨u, v⟩ = 1`, `⟨v, v⟩ = 0`, `⟨u, u⟩ = uu`.
pub fn double_extend_1d(data: &OneDimDoubleExtensionData) -> Result<MetricNLieAlgebra> {
    data.check_shape()?;
    let c1 = data.check_condition_1();
    if !c1.is_pass() {
        return Err(Error::ExtensionCondition {
            condition: 1,
            report: c1,
        });
    }
    let c2 = data.check_condition_2();
    if !c2.is_pass() {
        return Err(Error::ExtensionCondition {
            condition: 2,
            report: c2,
        });
    }
    let (t, metric) = data.assemble()?;
    MetricNLieAlgebra::new(NLieAlgebra::new(t)?, metric)
}

/// Ingredients of a double extension of `W` by `U`.
///
/// With `r = dim U` and `w = dim W`, the level-`k` bracket
/// `[U^k W^(n−k)]` has a `W` component and a `U*` component. Level `0` is
/// `[ ]_W + φ`, level `n − 1` is the action, and levels `0 < k < n − 1`
/// are stored in `mixed` as vectors of length `w + r` (`W` part first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralDoubleExtensionData {
    pub w: MetricNLieAlgebra,
    pub u: NLieAlgebra,
    /// Increasing `(n−1)`-tuples over `U` to `w × w` matrices.
    pub action: BTreeMap<Vec<usize>, Matrix>,
    /// `φ: Λⁿ W → U*`, coordinates in the dual basis.
    pub phi: StructureTensor,
    /// `(U tuple, W tuple)`, both increasing, to the bracket value.
    pub mixed: BTreeMap<(Vec<usize>, Vec<usize>), Vec<Rational>>,
    /// Optional invariant form on `U`.
    pub u_form: Option<SymmetricForm>,
}

impl GeneralDoubleExtensionData {
    pub fn n(&self) -> usize {
        self.u.n()
    }

    pub fn r(&self) -> usize {
        self.u.dim()
    }

    pub fn w_dim(&self) -> usize {
        self.w.dim()
    }

    /// Total dimension `2r + w`.
    pub fn dim(&self) -> usize {
        2 * self.r() + self.w_dim()
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.n();
        let (r, w) = (self.r(), self.w_dim());
        if self.w.n() != n {
            return Err(Error::ArityMismatch {
                left: n,
                right: self.w.n(),
            });
        }
        if self.phi.arity() != n || self.phi.dim() != w || self.phi.out_dim() != r {
            return Err(Error::MalformedData(format!(
                "phi must be an alternating {n}-linear map from dimension {w} to dimension {r}"
            )));
        }
        for (t, a) in &self.action {
            check_tuple(t, n - 1, r, "action")?;
            if a.rows() != w || a.cols() != w {
                return Err(Error::DimensionMismatch {
                    expected: w,
                    found: a.rows().max(a.cols()),
                });
            }
        }
        for ((ut, wt), v) in &self.mixed {
            let k = ut.len();
            if k == 0 || k + 1 >= n {
                return Err(Error::MalformedData(format!(
                    "mixed bracket level {k} outside 0 < k < {}",
                    n - 1
                )));
            }
            check_tuple(ut, k, r, "mixed U")?;
            check_tuple(wt, n - k, w, "mixed W")?;
            if v.len() != w + r {
                return Err(Error::DimensionMismatch {
                    expected: w + r,
                    found: v.len(),
                });
            }
        }
        if let Some(f) = &self.u_form {
            if f.dim() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    found: f.dim(),
                });
            }
        }
        Ok(())
    }

    /// Value of the level-`k` bracket `[u_ut, w_wt]` as a `W ⊕ U*` vector,
    /// for tuples in any order.
    pub fn level_value(&self, ut: &[usize], wt: &[usize]) -> Vec<Rational> {
        let n = self.n();
        let (r, w) = (self.r(), self.w_dim());
        let k = ut.len();
        let mut us = ut.to_vec();
        let mut ws = wt.to_vec();
        let (Some(s1), Some(s2)) = (sort_with_sign(&mut us), sort_with_sign(&mut ws)) else {
            return zero_vec(w + r);
        };
        let mut out = if k == 0 {
            let mut v = self.w.tensor().get(&ws).map_or_else(|| zero_vec(w), <[_]>::to_vec);
            v.extend(self.phi.get(&ws).map_or_else(|| zero_vec(r), <[_]>::to_vec));
            v
        } else if k + 1 == n {
            let mut v = self
                .action
                .get(&us)
                .map_or_else(|| zero_vec(w), |a| a.column(ws[0]));
            v.extend(zero_vec(r));
            v
        } else {
            self.mixed
                .get(&(us, ws))
                .cloned()
                .unwrap_or_else(|| zero_vec(w + r))
        };
        if s1 * s2 < 0 {
            for x in out.iter_mut() {
                *x = -&*x;
            }
        }
        out
    }

    /// Checks `⟨[a, w₁…w_{n−k+1}], u_b⟩ = (−1)^(n−k+1) ⟨[a, u_b, w₁…w_{n−k}], w_{n−k+1}⟩`
    /// for every level `1 ≤ k ≤ n − 1`, which is what invariance forces on
    /// the `U*` component at level `k − 1` and the `W` component at level `k`.
    pub fn check_pairing(&self) -> Result<()> {
        self.check_shape()?;
        let n = self.n();
        let (r, w) = (self.r(), self.w_dim());
        let g = self.w.metric().gram();
        for k in 1..n {
            let sign = if (n - k + 1) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            for a in (0..r).combinations(k - 1) {
                for ws in (0..w).combinations(n - k) {
                    for j in (0..w).filter(|j| !ws.contains(j)) {
                        let mut wl = ws.clone();
                        wl.push(j);
                        let lower = self.level_value(&a, &wl);
                        for b in 0..r {
                            let mut ab = a.clone();
                            ab.push(b);
                            let upper = self.level_value(&ab, &ws);
                            let rhs = &sign * &dot(&g.row(j).to_vec(), &upper[..w]);
                            if lower[w + b] != rhs {
                                return Err(Error::PairingInconsistent { level: k });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The structure tensor and metric on `[U, W, U*]`, unchecked.
    pub fn assemble(&self) -> Result<(StructureTensor, SymmetricForm)> {
        self.check_shape()?;
        let n = self.n();
        let (r, w) = (self.r(), self.w_dim());
        let d = self.dim();
        let (ow, od) = (r, r + w);
        let mut t = StructureTensor::zero(n, d);
        for (tuple, v) in self.u.tensor().iter() {
            let mut val = v.to_vec();
            val.resize(d, Rational::zero());
            t.set(&tuple, val)?;
        }
        for tu in (0..r).combinations(n - 1) {
            let ad = self.u.ad_basis(&tu);
            for b in 0..r {
                let mut idx = tu.clone();
                idx.push(od + b);
                for a in 0..r {
                    let c = &ad[(b, a)];
                    if !c.is_zero() {
                        t.add_entry(&idx, od + a, &-c)?;
                    }
                }
            }
        }
        for k in 0..n {
            for ut in (0..r).combinations(k) {
                for wt in (0..w).combinations(n - k) {
                    let v = self.level_value(&ut, &wt);
                    if v.iter().all(Rational::is_zero) {
                        continue;
                    }
                    let mut idx = ut.clone();
                    idx.extend(wt.iter().map(|i| ow + i));
                    let mut val = zero_vec(d);
                    val[ow..od].clone_from_slice(&v[..w]);
                    val[od..].clone_from_slice(&v[w..]);
                    t.set(&idx, val)?;
                }
            }
        }
        let mut gram = Matrix::zeros(d, d);
        let gw = self.w.metric().gram();
        for i in 0..w {
            for j in 0..w {
                gram[(ow + i, ow + j)] = gw[(i, j)].clone();
            }
        }
        for i in 0..r {
            gram[(i, od + i)] = Rational::one();
            gram[(od + i, i)] = Rational::one();
            if let Some(f) = &self.u_form {
                for j in 0..r {
                    gram[(i, j)] = f.gram()[(i, j)].clone();
                }
            }
        }
        Ok((t, SymmetricForm::nondegenerate(gram)?))
    }
}

fn check_tuple(t: &[usize], len: usize, dim: usize, what: &str) -> Result<()> {
    if t.len() != len {
        return Err(Error::ArityMismatch {
            left: len,
            right: t.len(),
        });
    }
    if !t.windows(2).all(|p| p[0] < p[1]) {
        return Err(Error::MalformedData(format!(
            "{what} tuple {t:?} is not strictly increasing"
        )));
    }
    if let Some(&i) = t.iter().find(|&&i| i >= dim) {
        return Err(Error::IndexOutOfRange { index: i, dim });
    }
    Ok(())
}

/// The double extension of `W` by `U` on `[U, W, U*]`, accepted only if the
/// pairing constraints hold and the assembled algebra validates.
pub fn double_extend_general(data: &GeneralDoubleExtensionData) -> Result<MetricNLieAlgebra> {
    data.check_pairing()?;
    let (t, metric) = data.assemble()?;
    MetricNLieAlgebra::new(NLieAlgebra::new(t)?, metric)
}

/// The general data equivalent to one-dimensional data: `U = span{u}` with
/// the lower bracket as the level-1 map (the action when `n = 2`) and `φ`
/// its pairing partner.
pub fn one_dim_as_general(data: &OneDimDoubleExtensionData) -> Result<GeneralDoubleExtensionData> {
    data.check_shape()?;
    let n = data.n();
    let w = data.w_dim();
    let wm = MetricNLieAlgebra::new(NLieAlgebra::new(data.n_bracket_w.clone())?, data.w_metric.clone())?;
    let g = data.w_metric.gram();
    let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
    let mut phi = StructureTensor::zero_map(n, w, 1);
    for y in (0..w).combinations(n) {
        let l = data.lower_bracket.eval_basis(&y[..n - 1]);
        let p = &sign * &dot(&g.mul_vec(&l), &unit(w, y[n - 1]));
        phi.set(&y, vec![p])?;
    }
    let mut action = BTreeMap::new();
    let mut mixed = BTreeMap::new();
    if n == 2 {
        let a = data.lower_bracket.left_mult_basis(&[]);
        if !a.is_zero() {
            action.insert(vec![0], a);
        }
    } else {
        for (x, l) in data.lower_bracket.iter() {
            let mut v = l.to_vec();
            v.push(Rational::zero());
            mixed.insert((vec![0], x), v);
        }
    }
    let u_form = (!data.uu.is_zero()).then(|| SymmetricForm::diagonal(std::slice::from_ref(&data.uu)));
    Ok(GeneralDoubleExtensionData {
        w: wm,
        u: NLieAlgebra::abelian(n, 1)?,
        action,
        phi,
        mixed,
        u_form,
    })
}
