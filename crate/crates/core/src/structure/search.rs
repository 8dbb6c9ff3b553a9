//! Heuristic search for minimal ideals.
//!
//! Candidates are gathered in a fixed order: closures of basis vectors; the
//! centre, derived ideal and their intersection; an anisotropic central
//! line; ideals cut out by invariant forms; closures of seeded random
//! vectors; perps; pairwise intersections. The smallest proper candidate is
//! then shrunk until no probe produces a smaller nonzero ideal inside it.

use crate::algebra::MetricNLieAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Subspace, SymmetricForm};
use crate::rng::SeededRng;

use super::forms::{invariant_forms, nilpotent_ideals, primary_pieces, random_commutant_element};
use super::ideals::{center, derived_ideal, AdGenerators, IdealHandle};

/// Random vector probes per level.
pub const RANDOM_PROBES: usize = 8;
/// Upper bound on probes spent shrinking one candidate.
pub const PROBE_CAP: usize = 64;
/// Random commutant elements tried per algebra.
pub const COMMUTANT_TRIES: usize = 4;

/// Shared state for the searches on one metric algebra.
pub struct SearchContext<'a> {
    pub m: &'a MetricNLieAlgebra,
    pub gens: AdGenerators,
    pub rng: SeededRng,
    pub center: Subspace,
    forms: Option<Vec<Matrix>>,
}

impl<'a> SearchContext<'a> {
    pub fn new(m: &'a MetricNLieAlgebra, seed: u64) -> Self {
        SearchContext {
            m,
            gens: AdGenerators::new(m.algebra()),
            rng: SeededRng::new(seed),
            center: center(m.algebra()),
            forms: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn forms(&mut self) -> &[Matrix] {
        if self.forms.is_none() {
            self.forms = Some(invariant_forms(&self.gens));
        }
        self.forms.as_deref().expect("computed")
    }

    fn is_proper(&self, s: &Subspace) -> bool {
        !s.is_zero() && s.dim() < self.dim()
    }

    /// A central vector `z` with `⟨z, z⟩ ≠ 0`, if the centre is not totally isotropic.
    pub fn anisotropic_central_line(&self) -> Option<Subspace> {
        let g = self.m.metric();
        let zb = self.center.basis_vectors();
        for z in &zb {
            if !g.pair(z, z).is_zero() {
                return Some(Subspace::span(self.dim(), [z]));
            }
        }
        for i in 0..zb.len() {
            for j in i + 1..zb.len() {
                if !g.pair(&zb[i], &zb[j]).is_zero() {
                    let s: Vec<_> = zb[i].iter().zip(&zb[j]).map(|(a, b)| a + b).collect();
                    return Some(Subspace::span(self.dim(), [s]));
                }
            }
        }
        None
    }

    /// Ideals from random self-adjoint commutant elements.
    fn form_ideals(&mut self) -> Vec<Subspace> {
        let metric = self.m.metric().clone();
        let forms = self.forms().to_vec();
        if forms.len() < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for _ in 0..COMMUTANT_TRIES {
            let x = random_commutant_element(&forms, &metric, &mut self.rng);
            out.extend(primary_pieces(&x));
            out.extend(nilpotent_ideals(&x));
        }
        out
    }

    /// All proper nonzero ideals produced by the probe set, deduplicated, in
    /// discovery order.
    pub fn candidates(&mut self) -> Result<Vec<Subspace>> {
        let d = self.dim();
        let mut found: Vec<Subspace> = Vec::new();
        let push = |s: Subspace, found: &mut Vec<Subspace>| {
            if !s.is_zero() && s.dim() < d && !found.contains(&s) {
                found.push(s);
            }
        };
        for i in 0..d {
            let e = crate::exact::matrix::unit_vec(d, i);
            push(self.gens.closure_of_vector(&e), &mut found);
        }
        let derived = derived_ideal(self.m.algebra());
        push(self.center.clone(), &mut found);
        push(derived.clone(), &mut found);
        push(self.center.intersect(&derived)?, &mut found);
        if let Some(line) = self.anisotropic_central_line() {
            push(line, &mut found);
        }
        for s in self.form_ideals() {
            if self.gens.is_invariant(&s) {
                push(s, &mut found);
            }
        }
        for _ in 0..RANDOM_PROBES {
            let v = self.rng.nonzero_vector(d);
            push(self.gens.closure_of_vector(&v), &mut found);
        }
        let metric = self.m.metric();
        let perps: Vec<Subspace> = found
            .iter()
            .map(|s| metric.perp(s))
            .collect::<Result<_>>()?;
        for p in perps {
            push(p, &mut found);
        }
        let k = found.len();
        for i in 0..k {
            for j in i + 1..k {
                let s = found[i].intersect(&found[j])?;
                push(s, &mut found);
            }
        }
        Ok(found)
    }

    /// Proper nonzero ideals strictly inside the ideal `j`.
    fn sub_ideals(&mut self, j: &Subspace) -> Result<Vec<Subspace>> {
        let d = self.dim();
        let mut out: Vec<Subspace> = Vec::new();
        let mut probes = 0;
        let push = |s: Subspace, out: &mut Vec<Subspace>| {
            if !s.is_zero() && s.dim() < j.dim() && !out.contains(&s) {
                out.push(s);
            }
        };
        let basis = j.basis_vectors();
        for b in &basis {
            if probes >= PROBE_CAP {
                break;
            }
            probes += 1;
            push(self.gens.closure_of_vector(b), &mut out);
        }
        for _ in 0..RANDOM_PROBES.min(PROBE_CAP.saturating_sub(probes)) {
            let c = self.rng.nonzero_vector(j.dim());
            push(self.gens.closure_of_vector(&j.combine(&c)), &mut out);
        }
        push(j.intersect(&self.center)?, &mut out);
        let perp = self.m.metric().perp(j)?;
        push(j.intersect(&perp)?, &mut out);
        if j.dim() >= 2 && self.m.metric().is_nondegenerate_on(j) {
            for s in self.factor_form_ideals(j) {
                if s.dim() < d && self.gens.is_invariant(&s) && s.is_subspace_of(j) {
                    push(s, &mut out);
                }
            }
        }
        Ok(out)
    }

    /// Ideals cut out by invariant forms of the factor algebra on a
    /// nondegenerate ideal `j`, in ambient coordinates.
    fn factor_form_ideals(&mut self, j: &Subspace) -> Vec<Subspace> {
        let basis = j.basis();
        let restricted: Vec<Matrix> = self
            .forms()
            .to_vec()
            .iter()
            .map(|b| basis.mul(b).mul(&basis.transpose()))
            .collect();
        let metric_j = self.m.metric().restrict(j);
        let mut independent = crate::exact::RowReducer::new(j.dim() * j.dim());
        let forms_j: Vec<Matrix> = restricted
            .into_iter()
            .filter(|f| independent.insert(f.entries()))
            .collect();
        if forms_j.len() < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for _ in 0..COMMUTANT_TRIES {
            let x = random_commutant_element(&forms_j, &metric_j, &mut self.rng);
            for s in primary_pieces(&x).into_iter().chain(nilpotent_ideals(&x)) {
                out.push(Subspace::span(
                    self.dim(),
                    s.basis_vectors().iter().map(|c| j.combine(c)),
                ));
            }
        }
        out
    }

    /// Shrinks an ideal until no probe yields a smaller nonzero ideal in it.
    pub fn shrink(&mut self, mut j: Subspace) -> Result<Subspace> {
        loop {
            let subs = self.sub_ideals(&j)?;
            match smallest(&subs) {
                Some(s) => j = s.clone(),
                None => return Ok(j),
            }
        }
    }
}

/// Smallest-dimensional entry, first one on ties.
fn smallest(s: &[Subspace]) -> Option<&Subspace> {
    s.iter().fold(None, |best: Option<&Subspace>, x| match best {
        Some(b) if b.dim() <= x.dim() => Some(b),
        _ => Some(x),
    })
}

/// A proper nonzero ideal that the probes could not shrink, or `None` when
/// no proper nonzero ideal was found.
pub fn minimal_ideal_search(m: &MetricNLieAlgebra, seed: u64) -> Result<Option<IdealHandle>> {
    let mut ctx = SearchContext::new(m, seed);
    search_in(&mut ctx)
}

pub(crate) fn search_in(ctx: &mut SearchContext<'_>) -> Result<Option<IdealHandle>> {
    let cands = ctx.candidates()?;
    let Some(start) = smallest(&cands).cloned() else {
        return Ok(None);
    };
    let j = ctx.shrink(start)?;
    debug_assert!(ctx.is_proper(&j));
    Ok(Some(IdealHandle::ideal(ctx.m, j)?))
}

/// The dichotomy for minimal ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalKind {
    Nondegenerate,
    Isotropic,
}

/// `I ∩ I⊥ = 0` or `I ⊆ I⊥`; anything else means `I` was not minimal.
pub fn classify_minimal(metric: &SymmetricForm, i: &IdealHandle) -> Result<MinimalKind> {
    let perp = metric.perp(&i.space)?;
    let meet = i.space.intersect(&perp)?;
    if meet.is_zero() {
        Ok(MinimalKind::Nondegenerate)
    } else if meet == i.space {
        Ok(MinimalKind::Isotropic)
    } else {
        Err(Error::Inconsistent(format!(
            "ideal of dimension {} meets its perp in dimension {}; it is not minimal",
            i.space.dim(),
            meet.dim()
        )))
    }
}
