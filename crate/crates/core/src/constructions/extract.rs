//! Reading double-extension data off an indecomposable metric algebra.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::algebra::{MetricNLieAlgebra, NLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::exact::matrix::{axpy, is_zero_vec, scale_vec, solve, unit_vec, zero_vec};
use crate::exact::{Matrix, Rational, Subspace, SymmetricForm};
use crate::structure::{is_ideal, quotient_algebra, simplicity_fingerprint};

use super::dext::{
    double_extend_1d, double_extend_general, GeneralDoubleExtensionData,
    OneDimDoubleExtensionData,
};

/// Newton steps allowed when solving for a subalgebra section.
pub const SECTION_ITERATIONS: usize = 16;

/// Data recovered by [`extract_double_extension`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtractedData {
    OneDim(OneDimDoubleExtensionData),
    General(GeneralDoubleExtensionData),
}

/// Extension data together with the adapted basis: the columns of `basis`
/// are the adapted basis vectors in the original coordinates, and rebuilding
/// the data gives exactly `m.change_basis(basis)`.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub data: ExtractedData,
    pub basis: Matrix,
}

impl Extraction {
    /// Rebuilds the metric algebra from the extracted data.
    pub fn rebuild(&self) -> Result<MetricNLieAlgebra> {
        match &self.data {
            ExtractedData::OneDim(d) => double_extend_1d(d),
            ExtractedData::General(d) => double_extend_general(d),
        }
    }
}

/// Splits `m` as a double extension along the isotropic minimal ideal `i`.
pub fn extract_double_extension(m: &MetricNLieAlgebra, i: &Subspace) -> Result<Extraction> {
    if i.ambient() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: i.ambient(),
        });
    }
    if i.is_zero() || !is_ideal(m.algebra(), i)? {
        return Err(Error::NotIdeal);
    }
    if !m.metric().is_isotropic(i) {
        return Err(Error::NotIsotropic);
    }
    let n = m.n();
    let extraction = if i.dim() == 1 {
        extract_one_dim(m, i)?
    } else if i.dim() == n + 1 {
        extract_simple(m, i)?
    } else {
        return Err(Error::Inconsistent(format!(
            "isotropic ideal of dimension {} is not minimal",
            i.dim()
        )));
    };
    let rebuilt = extraction.rebuild()?;
    let adapted = m.change_basis(&extraction.basis)?;
    if rebuilt != adapted {
        return Err(Error::Inconsistent(
            "rebuilt double extension differs from the input in the adapted basis".into(),
        ));
    }
    Ok(extraction)
}

/// Finds the isotropic minimal ideal itself and extracts along it.
pub fn extract_with_search(m: &MetricNLieAlgebra, seed: u64) -> Result<Extraction> {
    use crate::structure::{classify_indecomposable, decompose, IndecomposableKind};
    if m.dim() == 1 {
        return Err(Error::OneDimensional);
    }
    if decompose(m, seed)?.factors.len() > 1 {
        return Err(Error::Decomposable);
    }
    match classify_indecomposable(m, seed)? {
        IndecomposableKind::OneDimensional => Err(Error::OneDimensional),
        IndecomposableKind::Simple(_) => Err(Error::Simple),
        IndecomposableKind::DoubleExtension(shape) => extract_double_extension(m, &shape.ideal.space),
    }
}

fn extract_one_dim(m: &MetricNLieAlgebra, i: &Subspace) -> Result<Extraction> {
    let d = m.dim();
    let n = m.n();
    let g = m.metric();
    let v = i.basis_vectors().remove(0);
    let gv = g.gram().mul_vec(&v);
    let j = (0..d).find(|&j| !gv[j].is_zero()).ok_or(Error::DegenerateForm)?;
    let u = scale_vec(&gv[j].recip(), &unit_vec(d, j));
    let uu = g.pair(&u, &u);
    let plane = Subspace::span(d, [&u, &v]);
    let w = g.perp(&plane)?;
    let wb = w.basis_vectors();
    let k = wb.len();
    let mut cols = vec![u];
    cols.extend(wb);
    cols.push(v);
    let p = Matrix::from_columns(&cols, d);
    let a = m.change_basis(&p)?;
    let at = a.tensor();
    let mut n_bracket_w = StructureTensor::zero(n, k);
    for y in (0..k).combinations(n) {
        let idx: Vec<usize> = y.iter().map(|x| x + 1).collect();
        if let Some(val) = at.get(&idx) {
            n_bracket_w.set(&y, val[1..=k].to_vec())?;
        }
    }
    let mut lower_bracket = StructureTensor::zero(n - 1, k);
    for x in (0..k).combinations(n - 1) {
        let mut idx = vec![0];
        idx.extend(x.iter().map(|t| t + 1));
        if let Some(val) = at.get(&idx) {
            lower_bracket.set(&x, val[1..=k].to_vec())?;
        }
    }
    let w_metric = SymmetricForm::nondegenerate(a.metric().gram().select(
        &(1..=k).collect::<Vec<_>>(),
        &(1..=k).collect::<Vec<_>>(),
    ))?;
    Ok(Extraction {
        data: ExtractedData::OneDim(OneDimDoubleExtensionData {
            w_metric,
            n_bracket_w,
            lower_bracket,
            uu,
        }),
        basis: p,
    })
}

fn extract_simple(m: &MetricNLieAlgebra, i: &Subspace) -> Result<Extraction> {
    let d = m.dim();
    let n = m.n();
    let r = n + 1;
    let ip = m.metric().perp(i)?;
    let quotient = quotient_algebra(m.algebra(), &ip)?;
    if !simplicity_fingerprint(&quotient)?.is_simple() {
        return Err(Error::Inconsistent(
            "quotient by the perp of an isotropic ideal of dimension n + 1 is not simple".into(),
        ));
    }
    let section = find_section(m, &ip, &quotient)?;
    // Dual basis of I against the section.
    let ib = i.basis_vectors();
    let pairing = Matrix::from_fn(r, r, |a, b| m.metric().pair(&section[a], &ib[b]));
    let inv = pairing.inverse().ok_or(Error::DegenerateForm)?;
    let duals: Vec<Vec<Rational>> = (0..r)
        .map(|a| {
            let mut x = zero_vec(d);
            for (b, iv) in ib.iter().enumerate() {
                axpy(&mut x, &inv[(b, a)], iv);
            }
            x
        })
        .collect();
    let iu = Subspace::span(d, section.iter().chain(&duals));
    let w = m.metric().perp(&iu)?;
    let wb = w.basis_vectors();
    let k = wb.len();
    let mut cols = section.clone();
    cols.extend(wb);
    cols.extend(duals);
    let p = Matrix::from_columns(&cols, d);
    let a = m.change_basis(&p)?;
    let data = read_general(&a, r, k)?;
    Ok(Extraction {
        data: ExtractedData::General(data),
        basis: p,
    })
}

/// Reads general data off an algebra already in a `[U, W, U*]` basis.
fn read_general(a: &MetricNLieAlgebra, r: usize, k: usize) -> Result<GeneralDoubleExtensionData> {
    let n = a.n();
    let t = a.tensor();
    let (ow, od) = (r, r + k);
    let part = |v: &[Rational], lo: usize, hi: usize| v[lo..hi].to_vec();
    let mut ut = StructureTensor::zero(n, r);
    let mut wt = StructureTensor::zero(n, k);
    let mut phi = StructureTensor::zero_map(n, k, r);
    let mut action = BTreeMap::new();
    let mut mixed = BTreeMap::new();
    for x in (0..r).combinations(n) {
        if let Some(v) = t.get(&x) {
            ut.set(&x, part(v, 0, r))?;
        }
    }
    for lvl in 0..n {
        for us in (0..r).combinations(lvl) {
            for ws in (0..k).combinations(n - lvl) {
                let mut idx = us.clone();
                idx.extend(ws.iter().map(|x| ow + x));
                let Some(v) = t.get(&idx) else { continue };
                let wv = part(v, ow, od);
                let uv = part(v, od, od + r);
                if lvl == 0 {
                    wt.set(&ws, wv)?;
                    phi.set(&ws, uv)?;
                } else if lvl + 1 == n {
                    let m = action
                        .entry(us.clone())
                        .or_insert_with(|| Matrix::zeros(k, k));
                    for (row, x) in wv.into_iter().enumerate() {
                        m[(row, ws[0])] = x;
                    }
                } else {
                    let mut val = wv;
                    val.extend(uv);
                    mixed.insert((us.clone(), ws.clone()), val);
                }
            }
        }
    }
    let g = a.metric().gram();
    let wsel: Vec<usize> = (ow..od).collect();
    let usel: Vec<usize> = (0..r).collect();
    let w_metric = SymmetricForm::nondegenerate(g.select(&wsel, &wsel))?;
    let u_gram = g.select(&usel, &usel);
    let u_form = (!u_gram.is_zero()).then(|| SymmetricForm::new(u_gram)).transpose()?;
    Ok(GeneralDoubleExtensionData {
        w: MetricNLieAlgebra::new(NLieAlgebra::new(wt)?, w_metric)?,
        u: NLieAlgebra::new(ut)?,
        action,
        phi,
        mixed,
        u_form,
    })
}

/// A basis `u_a = c_a + σ(c_a)` of a subalgebra complementary to `I⊥`,
/// where `c_a` are the quotient representatives and `σ` maps into `I⊥`.
/// Starts at `σ = 0` and applies exact Newton steps to the quadratic
/// subalgebra constraints.
fn find_section(
    m: &MetricNLieAlgebra,
    ip: &Subspace,
    quotient: &NLieAlgebra,
) -> Result<Vec<Vec<Rational>>> {
    let d = m.dim();
    let n = m.n();
    let reps: Vec<Vec<Rational>> = ip
        .complement_indices()
        .iter()
        .map(|&j| unit_vec(d, j))
        .collect();
    let r = reps.len();
    let pb = ip.basis_vectors();
    let s = pb.len();
    let t = m.tensor();
    let tuples: Vec<Vec<usize>> = (0..r).combinations(n).collect();
    let mut sigma = vec![vec![Rational::zero(); s]; r];
    let section_of = |sigma: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        (0..r)
            .map(|a| {
                let mut x = reps[a].clone();
                for (c, p) in sigma[a].iter().zip(&pb) {
                    if !c.is_zero() {
                        axpy(&mut x, c, p);
                    }
                }
                x
            })
            .collect()
    };
    for _ in 0..=SECTION_ITERATIONS {
        let u = section_of(&sigma);
        let mut residual = Vec::with_capacity(tuples.len() * d);
        for tu in &tuples {
            let args: Vec<&[Rational]> = tu.iter().map(|&a| u[a].as_slice()).collect();
            let mut v = t.eval_unchecked(&args);
            let f = quotient.tensor().eval_basis(tu);
            for (c, ua) in f.iter().zip(&u) {
                if !c.is_zero() {
                    axpy(&mut v, &-c, ua);
                }
            }
            residual.extend(v);
        }
        if is_zero_vec(&residual) {
            return Ok(u);
        }
        // Jacobian columns, one per unknown σ_{a,k}.
        let mut jac_cols = Vec::with_capacity(r * s);
        for a in 0..r {
            for pk in &pb {
                let mut col = Vec::with_capacity(tuples.len() * d);
                for tu in &tuples {
                    let mut v = zero_vec(d);
                    if let Some(slot) = tu.iter().position(|&x| x == a) {
                        let mut args: Vec<&[Rational]> =
                            tu.iter().map(|&b| u[b].as_slice()).collect();
                        args[slot] = pk.as_slice();
                        v = t.eval_unchecked(&args);
                    }
                    let f = quotient.tensor().eval_basis(tu);
                    if !f[a].is_zero() {
                        axpy(&mut v, &-&f[a], pk);
                    }
                    col.extend(v);
                }
                jac_cols.push(col);
            }
        }
        let rows = tuples.len() * d;
        let jac = Matrix::from_columns(&jac_cols, rows);
        let rhs: Vec<Rational> = residual.iter().map(|x| -x).collect();
        let Some(delta) = solve(&jac, &rhs) else {
            return Err(Error::SectionNotFound);
        };
        for a in 0..r {
            for k in 0..s {
                let c = &delta[a * s + k];
                if !c.is_zero() {
                    sigma[a][k] = &sigma[a][k] + c;
                }
            }
        }
    }
    Err(Error::SectionNotFound)
}
