//! Exhaustive checks of the n-Jacobi identity and of metric invariance.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use super::StructureTensor;
use crate::exact::matrix::is_zero_vec;
use crate::exact::{Matrix, Rational, SymmetricForm};

/// Which defining identity a residual belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    NJacobi,
    Invariance,
    /// The lower bracket of a one-dimensional double extension.
    LowerJacobi,
    LowerInvariance,
    /// Invariance of the n-bracket on W under the lower inner derivations.
    LowerEquivariance,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::NJacobi => "n-jacobi",
            Identity::Invariance => "invariance",
            Identity::LowerJacobi => "lower-jacobi",
            Identity::LowerInvariance => "lower-invariance",
            Identity::LowerEquivariance => "lower-equivariance",
        })
    }
}

/// One nonzero residual on basis vectors (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: Identity,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub residual: Vec<Rational>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).join(" ");
        write!(
            f,
            "{}: x = ({}) y = ({}) residual = [{}]",
            self.identity,
            one(&self.x),
            one(&self.y),
            self.residual.iter().join(" ")
        )
    }
}

/// Every violation found, in enumeration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn pass() -> Self {
        Self::default()
    }

    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(mut self, other: ValidationReport) -> Self {
        self.violations.extend(other.violations);
        self
    }

    pub fn count(&self, identity: Identity) -> usize {
        self.violations.iter().filter(|v| v.identity == identity).count()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            write!(f, "pass")
        } else {
            write!(f, "{} violation(s)", self.violations.len())
        }
    }
}

/// Residual of the derivation identity for `d` on the basis tuple `y`:
/// `D Φ(y) − Σ_k Φ(y₁, …, D y_k, …, y_n)`.
pub(crate) fn derivation_residual(t: &StructureTensor, d: &Matrix, y: &[usize]) -> Vec<Rational> {
    let dim = t.dim();
    let phi = t.eval_basis(y);
    let mut res = if is_zero_vec(&phi) {
        vec![Rational::zero(); dim]
    } else {
        d.mul_vec(&phi)
    };
    let mut idx = y.to_vec();
    for k in 0..y.len() {
        for j in 0..dim {
            let c = &d[(j, y[k])];
            if c.is_zero() {
                continue;
            }
            idx[k] = j;
            t.add_eval_basis(&mut res, &-c, &idx);
        }
        idx[k] = y[k];
    }
    res
}

/// Residuals of `D` over every increasing basis tuple.
pub(crate) fn derivation_violations(
    t: &StructureTensor,
    d: &Matrix,
    x: &[usize],
    identity: Identity,
) -> Vec<Violation> {
    (0..t.dim())
        .combinations(t.arity())
        .filter_map(|y| {
            let r = derivation_residual(t, d, &y);
            (!is_zero_vec(&r)).then(|| Violation {
                identity,
                x: x.to_vec(),
                y,
                residual: r,
            })
        })
        .collect()
}

/// Checks that every `ad_{e_{x₁} … e_{x_{n−1}}}` is a derivation, over all
/// increasing basis tuples `x` and `y`.
pub fn check_n_jacobi(t: &StructureTensor) -> ValidationReport {
    check_jacobi_as(t, Identity::NJacobi)
}

pub(crate) fn check_jacobi_as(t: &StructureTensor, identity: Identity) -> ValidationReport {
    let xs: Vec<Vec<usize>> = (0..t.dim()).combinations(t.arity() - 1).collect();
    let violations: Vec<Vec<Violation>> = xs
        .par_iter()
        .map(|x| {
            let ad = t.left_mult_basis(x);
            if ad.is_zero() {
                return Vec::new();
            }
            derivation_violations(t, &ad, x, identity)
        })
        .collect();
    ValidationReport {
        violations: violations.into_iter().flatten().collect(),
    }
}

/// Checks `⟨[x y₁], y₂⟩ + ⟨[x y₂], y₁⟩ = 0` for all increasing `x` and `y₁ ≤ y₂`.
pub fn check_invariance(t: &StructureTensor, metric: &SymmetricForm) -> ValidationReport {
    check_invariance_as(t, metric, Identity::Invariance)
}

pub(crate) fn check_invariance_as(
    t: &StructureTensor,
    metric: &SymmetricForm,
    identity: Identity,
) -> ValidationReport {
    let g = metric.gram();
    let xs: Vec<Vec<usize>> = (0..t.dim()).combinations(t.arity() - 1).collect();
    let violations: Vec<Vec<Violation>> = xs
        .par_iter()
        .map(|x| {
            let a = t.left_mult_basis(x);
            let m = a.transpose().mul(g).add(&g.mul(&a));
            let mut out = Vec::new();
            for y1 in 0..t.dim() {
                for y2 in y1..t.dim() {
                    if !m[(y1, y2)].is_zero() {
                        out.push(Violation {
                            identity,
                            x: x.clone(),
                            y: vec![y1, y2],
                            residual: vec![m[(y1, y2)].clone()],
                        });
                    }
                }
            }
            out
        })
        .collect();
    ValidationReport {
        violations: violations.into_iter().flatten().collect(),
    }
}
