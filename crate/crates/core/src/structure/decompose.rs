//! Orthogonal decomposition, quotients and the classification of
//! indecomposable metric Lie n-algebras.

use crate::algebra::derivation::ad_span;
use crate::algebra::{killing_nondegenerate, inner_derivation_algebra, MetricNLieAlgebra, NLieAlgebra};
use crate::error::{Error, Result};
use crate::exact::matrix::unit_vec;
use crate::exact::{Matrix, Rational, RowReducer, Subspace};

use super::forms::eigen_split;
use super::ideals::{center, derived_ideal, IdealHandle};
use super::search::{classify_minimal, search_in, MinimalKind, SearchContext, COMMUTANT_TRIES};

/// The metric algebra structure induced on a nondegenerate ideal, in the
/// canonical basis of the ideal. The result is re-validated.
pub fn restrict_to_ideal(m: &MetricNLieAlgebra, j: &Subspace) -> Result<MetricNLieAlgebra> {
    let basis = j.basis_vectors();
    let tensor = m.tensor().induced(&basis, |v| j.coordinates(v));
    MetricNLieAlgebra::new(NLieAlgebra::new(tensor)?, m.metric().restrict(j))
}

/// `V / J` with coset representatives the unit vectors at the non-pivot
/// columns of `J`.
pub fn quotient_algebra(a: &NLieAlgebra, j: &Subspace) -> Result<NLieAlgebra> {
    let reps_idx = j.complement_indices();
    let reps: Vec<Vec<Rational>> = reps_idx.iter().map(|&i| unit_vec(a.dim(), i)).collect();
    let reducer = RowReducer::from_subspace(j);
    let tensor = a.tensor().induced(&reps, |v| {
        let mut w = v.to_vec();
        reducer.reduce(&mut w);
        reps_idx.iter().map(|&i| w[i].clone()).collect()
    });
    NLieAlgebra::new(tensor)
}

/// Coset representatives of `J / J⊥` and the metric algebra they carry.
#[derive(Clone, Debug)]
pub struct Subquotient {
    /// Representatives in ambient coordinates, as rows.
    pub representatives: Matrix,
    pub algebra: MetricNLieAlgebra,
}

/// `J / J⊥` for a coisotropic ideal `J`.
pub fn subquotient_metric(m: &MetricNLieAlgebra, j: &Subspace) -> Result<Subquotient> {
    let h = IdealHandle::new(m, j.clone())?;
    if !h.flags.is_ideal {
        return Err(Error::NotIdeal);
    }
    if !h.flags.is_coisotropic {
        return Err(Error::NotCoisotropic);
    }
    let jp = m.metric().perp(j)?;
    let reducer = RowReducer::from_subspace(&jp);
    let reduced: Vec<Vec<Rational>> = j
        .basis_vectors()
        .into_iter()
        .map(|mut v| {
            reducer.reduce(&mut v);
            v
        })
        .collect();
    let reps = Subspace::span(m.dim(), reduced);
    let basis = reps.basis_vectors();
    let tensor = m.tensor().induced(&basis, |v| {
        let mut w = v.to_vec();
        reducer.reduce(&mut w);
        reps.coordinates(&w)
    });
    let metric = m.metric().restrict(&reps);
    Ok(Subquotient {
        representatives: reps.basis().clone(),
        algebra: MetricNLieAlgebra::new(NLieAlgebra::new(tensor)?, metric)?,
    })
}

/// Invariants that single out the simple n-Lie algebras among validated
/// algebras of dimension `n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplicityFingerprint {
    pub dim_is_n_plus_1: bool,
    pub perfect: bool,
    pub zero_centre: bool,
    pub ad_dim_is_binomial: bool,
    pub killing_nondegenerate: bool,
}

impl SimplicityFingerprint {
    pub fn is_simple(&self) -> bool {
        self.dim_is_n_plus_1
            && self.perfect
            && self.zero_centre
            && self.ad_dim_is_binomial
            && self.killing_nondegenerate
    }
}

pub fn simplicity_fingerprint(a: &NLieAlgebra) -> Result<SimplicityFingerprint> {
    let d = a.dim();
    let n = a.n();
    let expected_ad = (n + 1) * n / 2;
    let ad_dim = ad_span(a.tensor()).dim();
    Ok(SimplicityFingerprint {
        dim_is_n_plus_1: d == n + 1,
        perfect: derived_ideal(a).dim() == d,
        zero_centre: center(a).is_zero(),
        ad_dim_is_binomial: ad_dim == expected_ad,
        killing_nondegenerate: ad_dim > 0 && killing_nondegenerate(&inner_derivation_algebra(a)?.lie),
    })
}

/// Factors of an orthogonal decomposition and how they sit in `V`.
#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub factors: Vec<MetricNLieAlgebra>,
    /// `dim V × dim factor`; columns are the factor basis in `V` coordinates.
    pub embeddings: Vec<Matrix>,
    /// The nondegenerate proper ideal used at each split, in `V` coordinates.
    pub certificates: Vec<Subspace>,
}

impl DecompositionResult {
    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim()).collect()
    }

    /// Image of factor `i` in `V`.
    pub fn factor_subspace(&self, i: usize) -> Subspace {
        let e = &self.embeddings[i];
        Subspace::span(e.rows(), (0..e.cols()).map(|j| e.column(j)))
    }
}

/// Attempts to split `m` into at least two mutually orthogonal nondegenerate
/// ideals.
fn split(ctx: &mut SearchContext<'_>) -> Result<Option<Vec<Subspace>>> {
    let m = ctx.m;
    if m.dim() <= 1 {
        return Ok(None);
    }
    if let Some(line) = ctx.anisotropic_central_line() {
        let perp = m.metric().perp(&line)?;
        return Ok(Some(vec![line, perp]));
    }
    let metric = m.metric().clone();
    let forms = ctx.forms().to_vec();
    if forms.len() < 2 {
        // A single invariant form up to scale rules out any orthogonal splitting.
        return Ok(None);
    }
    if let Some(pieces) = eigen_split(&ctx.gens, &metric, &forms, &mut ctx.rng, COMMUTANT_TRIES)? {
        return Ok(Some(pieces));
    }
    for c in ctx.candidates()? {
        if metric.is_nondegenerate_on(&c) {
            let perp = metric.perp(&c)?;
            return Ok(Some(vec![c, perp]));
        }
    }
    Ok(None)
}

/// Recursively splits along nondegenerate proper ideals. Factors are sorted
/// by decreasing dimension (stable).
pub fn decompose(m: &MetricNLieAlgebra, seed: u64) -> Result<DecompositionResult> {
    let mut leaves: Vec<(MetricNLieAlgebra, Matrix)> = Vec::new();
    let mut certificates = Vec::new();
    let mut stack = vec![(m.clone(), Matrix::identity(m.dim()))];
    let mut depth_seed = seed;
    while let Some((alg, emb)) = stack.pop() {
        let mut ctx = SearchContext::new(&alg, depth_seed);
        depth_seed = depth_seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
        match split(&mut ctx)? {
            None => leaves.push((alg.clone(), emb)),
            Some(pieces) => {
                let mut next = Vec::new();
                for (k, p) in pieces.iter().enumerate() {
                    let factor = restrict_to_ideal(&alg, p)?;
                    let e = emb.mul(&p.basis().transpose());
                    if k + 1 < pieces.len() {
                        certificates.push(Subspace::span(
                            e.rows(),
                            (0..e.cols()).map(|j| e.column(j)),
                        ));
                    }
                    next.push((factor, e));
                }
                // Reverse so the first piece is processed first.
                stack.extend(next.into_iter().rev());
            }
        }
    }
    leaves.sort_by(|a, b| b.0.dim().cmp(&a.0.dim()));
    let (factors, embeddings) = leaves.into_iter().unzip();
    Ok(DecompositionResult {
        factors,
        embeddings,
        certificates,
    })
}

/// The three cases of the structure theorem.
#[derive(Clone, Debug)]
pub enum IndecomposableKind {
    OneDimensional,
    Simple(SimplicityFingerprint),
    DoubleExtension(DoubleExtensionShape),
}

/// An isotropic minimal ideal and the pieces of `V` it determines.
#[derive(Clone, Debug)]
pub struct DoubleExtensionShape {
    pub ideal: IdealHandle,
    pub ideal_perp: Subspace,
    /// `V / I⊥`, one-dimensional or simple.
    pub quotient: NLieAlgebra,
    /// `I⊥ / I` with its induced metric.
    pub middle: Subquotient,
}

impl IndecomposableKind {
    pub fn name(&self) -> &'static str {
        match self {
            IndecomposableKind::OneDimensional => "one-dimensional",
            IndecomposableKind::Simple(_) => "simple",
            IndecomposableKind::DoubleExtension(_) => "double-extension",
        }
    }
}

/// Classifies an indecomposable metric algebra.
pub fn classify_indecomposable(m: &MetricNLieAlgebra, seed: u64) -> Result<IndecomposableKind> {
    let n = m.n();
    if m.dim() == 1 {
        return Ok(IndecomposableKind::OneDimensional);
    }
    let mut ctx = SearchContext::new(m, seed);
    let Some(ideal) = search_in(&mut ctx)? else {
        let fp = simplicity_fingerprint(m.algebra())?;
        if m.dim() != n + 1 || !fp.is_simple() {
            return Err(Error::Inconsistent(format!(
                "no proper ideal found but dimension {} and fingerprint {:?} do not match a simple algebra",
                m.dim(),
                fp
            )));
        }
        return Ok(IndecomposableKind::Simple(fp));
    };
    match classify_minimal(m.metric(), &ideal)? {
        MinimalKind::Nondegenerate => Err(Error::Decomposable),
        MinimalKind::Isotropic => {
            let k = ideal.dim();
            if k != 1 && k != n + 1 {
                return Err(Error::Inconsistent(format!(
                    "isotropic minimal ideal of dimension {k}, expected 1 or {}",
                    n + 1
                )));
            }
            let ideal_perp = m.metric().perp(&ideal.space)?;
            let quotient = quotient_algebra(m.algebra(), &ideal_perp)?;
            let middle = subquotient_metric(m, &ideal_perp)?;
            Ok(IndecomposableKind::DoubleExtension(DoubleExtensionShape {
                ideal,
                ideal_perp,
                quotient,
                middle,
            }))
        }
    }
}
