//! Invariant symmetric forms and the ideals they cut out.
//!
//! If `H` is an invariant symmetric form and `G` the metric, `X = G⁻¹H` is
//! self-adjoint and commutes with every inner derivation. Its generalized
//! eigenspaces are therefore mutually orthogonal nondegenerate ideals, and
//! kernels and images of polynomials in `X` are ideals.

use crate::error::Result;
use crate::exact::matrix::Matrix;
use crate::exact::{charpoly, kernel, Poly, Rational, Subspace, SymmetricForm};
use crate::rng::SeededRng;

use super::ideals::AdGenerators;

/// Basis of the space of symmetric forms `B` with `AᵀB + BA = 0` for every
/// generator `A`, imposing one generator at a time.
pub fn invariant_forms(gens: &AdGenerators) -> Vec<Matrix> {
    let d = gens.dim();
    let mut basis: Vec<Matrix> = Vec::with_capacity(d * (d + 1) / 2);
    for i in 0..d {
        for j in i..d {
            let mut m = Matrix::zeros(d, d);
            m[(i, j)] = Rational::one();
            m[(j, i)] = Rational::one();
            basis.push(m);
        }
    }
    let mats = gens.matrices();
    if mats.is_empty() {
        return basis;
    }
    for a in mats {
        if basis.is_empty() {
            break;
        }
        basis = impose(&basis, a);
    }
    basis
}

fn impose(basis: &[Matrix], a: &Matrix) -> Vec<Matrix> {
    let d = a.rows();
    let at = a.transpose();
    let defects: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| {
            let m = at.mul(b).add(&b.mul(a));
            let mut v = Vec::with_capacity(d * (d + 1) / 2);
            for i in 0..d {
                for j in i..d {
                    v.push(m[(i, j)].clone());
                }
            }
            v
        })
        .collect();
    if defects.iter().all(|v| v.iter().all(Rational::is_zero)) {
        return basis.to_vec();
    }
    let rows = d * (d + 1) / 2;
    let system = Matrix::from_columns(&defects, rows);
    kernel(&system)
        .basis_vectors()
        .iter()
        .map(|c| {
            let mut m = Matrix::zeros(d, d);
            for (ck, bk) in c.iter().zip(basis) {
                if !ck.is_zero() {
                    m = m.add(&bk.scale(ck));
                }
            }
            m
        })
        .collect()
}

/// A random self-adjoint element of the commutant, `G⁻¹ Σ cₖ Bₖ`.
pub fn random_commutant_element(
    forms: &[Matrix],
    metric: &SymmetricForm,
    rng: &mut SeededRng,
) -> Matrix {
    let d = metric.dim();
    let mut h = Matrix::zeros(d, d);
    for b in forms {
        h = h.add(&b.scale(&rng.rational()));
    }
    let g_inv = metric.gram().inverse().expect("metric is nondegenerate");
    g_inv.mul(&h)
}

/// Primary decomposition of `x` over its rational eigenvalues: one kernel
/// per eigenvalue plus one for the part of the characteristic polynomial
/// without rational roots.
pub fn primary_pieces(x: &Matrix) -> Vec<Subspace> {
    let chi = charpoly(x);
    let roots = chi.rational_roots();
    let mut rest = chi.clone();
    let mut pieces = Vec::new();
    for r in &roots {
        let m = chi.multiplicity(r);
        let mut f = Poly::new(vec![Rational::one()]);
        for _ in 0..m {
            f = f.mul(&Poly::linear(r));
            rest = rest.div_rem(&Poly::linear(r)).0;
        }
        pieces.push(kernel(&f.eval_matrix(x)));
    }
    if rest.degree().unwrap_or(0) > 0 {
        pieces.push(kernel(&rest.eval_matrix(x)));
    }
    pieces
}

/// Ideals `ker (X − λ)ʲ` and `im (X − λ)ʲ` for each rational eigenvalue `λ`.
pub fn nilpotent_ideals(x: &Matrix) -> Vec<Subspace> {
    let d = x.rows();
    let chi = charpoly(x);
    let mut out = Vec::new();
    for r in chi.rational_roots() {
        let m = chi.multiplicity(&r);
        let n = x.sub(&Matrix::identity(d).scale(&r));
        let mut p = n.clone();
        for _ in 0..m {
            out.push(kernel(&p));
            out.push(Subspace::span(d, (0..d).map(|j| p.column(j))));
            p = p.mul(&n);
        }
    }
    out
}

/// Tries a few random commutant elements; returns an orthogonal splitting
/// into at least two nondegenerate ideals when one has several primary
/// pieces.
pub fn eigen_split(
    gens: &AdGenerators,
    metric: &SymmetricForm,
    forms: &[Matrix],
    rng: &mut SeededRng,
    attempts: usize,
) -> Result<Option<Vec<Subspace>>> {
    if forms.len() < 2 {
        return Ok(None);
    }
    for _ in 0..attempts {
        let x = random_commutant_element(forms, metric, rng);
        let pieces = primary_pieces(&x);
        if pieces.len() < 2 {
            continue;
        }
        let ok = pieces
            .iter()
            .all(|p| gens.is_invariant(p) && metric.is_nondegenerate_on(p));
        if ok {
            return Ok(Some(pieces));
        }
    }
    Ok(None)
}
