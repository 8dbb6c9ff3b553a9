//! The `.dext` double-extension documents.
//!
//! One-dimensional data (`dext1 1`) names the basis of `W` as `w1 … wk`:
//!
//! ```text
//! dext1 1
//! n 3
//! w_dim 3
//! uu 0
//! metric diag 1 1 1
//! lower w1 w2 -> w3: 1
//! lower w1 w3 -> w2: -1
//! lower w2 w3 -> w1: 1
//! ```
//!
//! General data (`dextgen 1`) names `U`, `W` and `U*` as `u1 … ur`,
//! `w1 … wk`, `d1 … dr` and lists every bracket whose slots lie in
//! `U ⊕ W`; brackets with a `U*` slot follow from the coadjoint action.
//! Both documents may end with an `adapted rows` block: the change of basis
//! whose columns are the adapted basis vectors in original coordinates.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::algebra::{MetricNLieAlgebra, NLieAlgebra, StructureTensor};
use crate::constructions::{GeneralDoubleExtensionData, OneDimDoubleExtensionData};
use crate::error::{Error, Result};
use crate::exact::matrix::is_zero_vec;
use crate::exact::{Matrix, Rational, SymmetricForm};

use super::lexer::{
    parse_count, parse_rational, read_bracket_line, read_form, read_rows, write_bracket_line,
    write_form, write_rows, Cursor, FormatErrorKind, Line, ParseResult, TupleOrder,
};

pub const DEXT1_HEADER: &str = "dext1 1";
pub const DEXTGEN_HEADER: &str = "dextgen 1";

/// One-dimensional extension data with an optional adapted basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dext1Document {
    pub data: OneDimDoubleExtensionData,
    pub adapted: Option<Matrix>,
}

/// General extension data with an optional adapted basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DextGenDocument {
    pub n: usize,
    pub u_dim: usize,
    pub w_dim: usize,
    pub w_metric: SymmetricForm,
    pub u_form: Option<SymmetricForm>,
    /// Brackets with all slots in `U ⊕ W`, valued in `U ⊕ W ⊕ U*`.
    pub brackets: StructureTensor,
    pub adapted: Option<Matrix>,
}

fn header(c: &mut Cursor<'_>, expected: &str) -> ParseResult<()> {
    let h = c.next_line(&format!("the header `{expected}`"))?;
    let words: Vec<&str> = h.tokens.iter().map(|t| t.text).collect();
    if words.join(" ") != expected {
        return Err(h.err(1, FormatErrorKind::Syntax, format!("expected header `{expected}`")));
    }
    Ok(())
}

fn arity(c: &mut Cursor<'_>) -> ParseResult<usize> {
    let l = c.expect("n")?;
    l.expect_len(2)?;
    let n = parse_count(&l, l.tokens[1])?;
    if n < 2 {
        return Err(l.err(l.tokens[1].col, FormatErrorKind::OutOfRange, "arity must be at least 2"));
    }
    Ok(n)
}

fn form_line(c: &mut Cursor<'_>, keyword: &str, dim: usize) -> ParseResult<SymmetricForm> {
    let l = c.expect(keyword)?;
    let g = read_form(c, &l, dim)?;
    SymmetricForm::new(g).map_err(|e| l.err(1, FormatErrorKind::Syntax, e.to_string()))
}

fn adapted_block(c: &mut Cursor<'_>, dim: usize) -> ParseResult<Option<Matrix>> {
    if c.peek_keyword() != Some("adapted") {
        return Ok(None);
    }
    let l = c.next_line("adapted")?;
    l.expect_len(2)?;
    if l.tokens[1].text != "rows" {
        return Err(l.err(l.tokens[1].col, FormatErrorKind::Syntax, "expected `adapted rows`"));
    }
    Ok(Some(read_rows(c, dim, dim)?))
}

fn write_adapted(out: &mut String, a: &Option<Matrix>) {
    if let Some(m) = a {
        out.push_str("adapted rows\n");
        write_rows(out, m);
    }
}

/// `prefix` followed by a 1-based index in `1..=count`, returned 0-based.
fn prefixed(s: &str, prefix: &str, count: usize) -> Option<usize> {
    super::nlie::one_based(s.strip_prefix(prefix)?, count)
}

fn add_values(l: &Line<'_>, t: &mut StructureTensor, args: &[usize], values: &[(usize, Rational)]) -> ParseResult<()> {
    for (j, x) in values {
        t.add_entry(args, *j, x)
            .map_err(|e| l.err(1, FormatErrorKind::OutOfRange, e.to_string()))?;
    }
    Ok(())
}

impl Dext1Document {
    pub fn serialize(&self) -> String {
        let d = &self.data;
        let mut out = String::new();
        out.push_str(DEXT1_HEADER);
        out.push('\n');
        out.push_str(&format!("n {}\nw_dim {}\nuu {}\n", d.n(), d.w_dim(), d.uu));
        write_form(&mut out, "metric", &d.w_metric);
        let name = |i: usize| format!("w{}", i + 1);
        for (t, v) in d.lower_bracket.iter() {
            let args: Vec<String> = t.iter().map(|&i| name(i)).collect();
            write_bracket_line(&mut out, "lower", &args, v, &name);
        }
        for (t, v) in d.n_bracket_w.iter() {
            let args: Vec<String> = t.iter().map(|&i| name(i)).collect();
            write_bracket_line(&mut out, "bracket", &args, v, &name);
        }
        write_adapted(&mut out, &self.adapted);
        out
    }

    pub fn parse(text: &str) -> ParseResult<Self> {
        let mut c = Cursor::new(text)?;
        header(&mut c, DEXT1_HEADER)?;
        let n = arity(&mut c)?;
        let k = c.expect_count("w_dim")?;
        let ul = c.expect("uu")?;
        ul.expect_len(2)?;
        let uu = parse_rational(&ul, ul.tokens[1])?;
        let w_metric = form_line(&mut c, "metric", k)?;
        let index = |s: &str| prefixed(s, "w", k);
        let mut lower = StructureTensor::zero(n - 1, k);
        let mut order = TupleOrder::default();
        while c.peek_keyword() == Some("lower") {
            let l = c.next_line("lower")?;
            let b = read_bracket_line(&l, n - 1, &index, &index)?;
            order.check(&l, &b.args)?;
            add_values(&l, &mut lower, &b.args, &b.values)?;
        }
        let mut bracket = StructureTensor::zero(n, k);
        let mut order = TupleOrder::default();
        while c.peek_keyword() == Some("bracket") {
            let l = c.next_line("bracket")?;
            let b = read_bracket_line(&l, n, &index, &index)?;
            order.check(&l, &b.args)?;
            add_values(&l, &mut bracket, &b.args, &b.values)?;
        }
        let adapted = adapted_block(&mut c, k + 2)?;
        c.finish()?;
        Ok(Dext1Document {
            data: OneDimDoubleExtensionData {
                w_metric,
                n_bracket_w: bracket,
                lower_bracket: lower,
                uu,
            },
            adapted,
        })
    }
}

impl DextGenDocument {
    /// Total dimension `2r + k`.
    pub fn dim(&self) -> usize {
        2 * self.u_dim + self.w_dim
    }

    fn name(&self, i: usize) -> String {
        let (r, k) = (self.u_dim, self.w_dim);
        if i < r {
            format!("u{}", i + 1)
        } else if i < r + k {
            format!("w{}", i - r + 1)
        } else {
            format!("d{}", i - r - k + 1)
        }
    }

    fn index(&self, s: &str) -> Option<usize> {
        let (r, k) = (self.u_dim, self.w_dim);
        prefixed(s, "u", r)
            .or_else(|| prefixed(s, "w", k).map(|i| i + r))
            .or_else(|| prefixed(s, "d", r).map(|i| i + r + k))
    }

    pub fn from_data(data: &GeneralDoubleExtensionData, adapted: Option<Matrix>) -> Result<Self> {
        let (full, _) = data.assemble()?;
        let (r, k) = (data.r(), data.w_dim());
        let n = data.n();
        let mut brackets = StructureTensor::zero_map(n, r + k, 2 * r + k);
        for (t, v) in full.iter() {
            if t.iter().all(|&i| i < r + k) {
                brackets.set(&t, v.to_vec())?;
            }
        }
        Ok(DextGenDocument {
            n,
            u_dim: r,
            w_dim: k,
            w_metric: data.w.metric().clone(),
            u_form: data.u_form.clone(),
            brackets,
            adapted,
        })
    }

    /// Splits the brackets by level. `W` and `U` must be validated
    /// separately, so this fails with a validation report when `W` is not a
    /// metric Lie n-algebra.
    pub fn to_data(&self) -> Result<GeneralDoubleExtensionData> {
        let (n, r, k) = (self.n, self.u_dim, self.w_dim);
        let mut u = StructureTensor::zero(n, r);
        let mut w = StructureTensor::zero(n, k);
        let mut phi = StructureTensor::zero_map(n, k, r);
        let mut action: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
        let mut mixed = BTreeMap::new();
        for (t, v) in self.brackets.iter() {
            let lvl = t.iter().filter(|&&i| i < r).count();
            let us: Vec<usize> = t[..lvl].to_vec();
            let ws: Vec<usize> = t[lvl..].iter().map(|i| i - r).collect();
            let (vu, vw, vd) = (&v[..r], &v[r..r + k], &v[r + k..]);
            let names = || t.iter().map(|&i| self.name(i)).join(" ");
            if lvl < n && !is_zero_vec(vu) {
                return Err(Error::MalformedData(format!(
                    "bracket [{}] has a U component; only brackets of U with itself may",
                    names()
                )));
            }
            if lvl == n {
                if !is_zero_vec(vw) || !is_zero_vec(vd) {
                    return Err(Error::MalformedData(format!(
                        "bracket [{}] of U with itself must lie in U",
                        names()
                    )));
                }
                u.set(&us, vu.to_vec())?;
            } else if lvl == 0 {
                w.set(&ws, vw.to_vec())?;
                phi.set(&ws, vd.to_vec())?;
            } else if lvl + 1 == n {
                if !is_zero_vec(vd) {
                    return Err(Error::MalformedData(format!(
                        "bracket [{}] of n - 1 elements of U with W must lie in W",
                        names()
                    )));
                }
                let m = action.entry(us).or_insert_with(|| Matrix::zeros(k, k));
                for (i, x) in vw.iter().enumerate() {
                    m[(i, ws[0])] = x.clone();
                }
            } else {
                let mut val = vw.to_vec();
                val.extend(vd.iter().cloned());
                mixed.insert((us, ws), val);
            }
        }
        let wm = MetricNLieAlgebra::new(NLieAlgebra::new(w)?, self.w_metric.clone())?;
        Ok(GeneralDoubleExtensionData {
            w: wm,
            u: NLieAlgebra::new(u)?,
            action,
            phi,
            mixed,
            u_form: self.u_form.clone(),
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(DEXTGEN_HEADER);
        out.push('\n');
        out.push_str(&format!("n {}\nu_dim {}\nw_dim {}\n", self.n, self.u_dim, self.w_dim));
        write_form(&mut out, "metric", &self.w_metric);
        if let Some(f) = &self.u_form {
            write_form(&mut out, "uform", f);
        }
        for (t, v) in self.brackets.iter() {
            let args: Vec<String> = t.iter().map(|&i| self.name(i)).collect();
            write_bracket_line(&mut out, "bracket", &args, v, &|j| self.name(j));
        }
        write_adapted(&mut out, &self.adapted);
        out
    }

    pub fn parse(text: &str) -> ParseResult<Self> {
        let mut c = Cursor::new(text)?;
        header(&mut c, DEXTGEN_HEADER)?;
        let n = arity(&mut c)?;
        let r = c.expect_count("u_dim")?;
        let k = c.expect_count("w_dim")?;
        let w_metric = form_line(&mut c, "metric", k)?;
        let u_form = if c.peek_keyword() == Some("uform") {
            Some(form_line(&mut c, "uform", r)?)
        } else {
            None
        };
        let mut doc = DextGenDocument {
            n,
            u_dim: r,
            w_dim: k,
            w_metric,
            u_form,
            brackets: StructureTensor::zero_map(n, r + k, 2 * r + k),
            adapted: None,
        };
        let arg = |s: &str| doc.index(s).filter(|&i| i < r + k);
        let target = |s: &str| doc.index(s);
        let mut brackets = StructureTensor::zero_map(n, r + k, 2 * r + k);
        let mut order = TupleOrder::default();
        while c.peek_keyword() == Some("bracket") {
            let l = c.next_line("bracket")?;
            let b = read_bracket_line(&l, n, &arg, &target)?;
            order.check(&l, &b.args)?;
            add_values(&l, &mut brackets, &b.args, &b.values)?;
        }
        doc.adapted = adapted_block(&mut c, 2 * r + k)?;
        c.finish()?;
        doc.brackets = brackets;
        Ok(doc)
    }
}

/// Names of the basis of a one-dimensional double extension: `u w1 … wk v`.
pub fn dext1_names(w_dim: usize) -> Vec<String> {
    let mut v = vec!["u".to_string()];
    v.extend((1..=w_dim).map(|i| format!("w{i}")));
    v.push("v".into());
    v
}

/// Names of the basis of a general double extension: `u1 … w1 … d1 …`.
pub fn dextgen_names(r: usize, w_dim: usize) -> Vec<String> {
    (1..=r)
        .map(|i| format!("u{i}"))
        .chain((1..=w_dim).map(|i| format!("w{i}")))
        .chain((1..=r).map(|i| format!("d{i}")))
        .collect()
}

/// Names for `V ⊕ V*`: `e1 … ed e1* … ed*`.
pub fn coadjoint_names(d: usize) -> Vec<String> {
    (1..=d)
        .map(|i| format!("e{i}"))
        .chain((1..=d).map(|i| format!("e{i}*")))
        .collect()
}
