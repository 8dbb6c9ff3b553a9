//! The `.nlie` algebra document.
//!
//! ```text
//! nlie 1
//! n 3
//! dim 4
//! basis e1 e2 e3 e4
//! metric diag 1 1 1 1
//! bracket 1 2 3 -> 4: 1
//! ```
//!
//! Indices are 1-based. The metric line is optional.

use std::collections::HashSet;

use crate::algebra::{MetricNLieAlgebra, NLieAlgebra, StructureTensor};
use crate::error::Result;
use crate::exact::SymmetricForm;

use super::lexer::{
    is_name, parse_count, read_bracket_line, read_form, write_bracket_line, write_form, Cursor,
    FormatErrorKind, ParseResult, TupleOrder,
};

pub const NLIE_HEADER: &str = "nlie 1";

/// A parsed or to-be-written algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub n: usize,
    pub dim: usize,
    pub basis: Vec<String>,
    pub metric: Option<SymmetricForm>,
    pub tensor: StructureTensor,
}

/// `e1 … ed`.
pub fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl AlgebraDocument {
    pub fn from_metric(m: &MetricNLieAlgebra, basis: Vec<String>) -> Self {
        AlgebraDocument {
            n: m.n(),
            dim: m.dim(),
            basis,
            metric: Some(m.metric().clone()),
            tensor: m.tensor().clone(),
        }
    }

    pub fn from_algebra(a: &NLieAlgebra, basis: Vec<String>) -> Self {
        AlgebraDocument {
            n: a.n(),
            dim: a.dim(),
            basis,
            metric: None,
            tensor: a.tensor().clone(),
        }
    }

    pub fn algebra(&self) -> Result<NLieAlgebra> {
        NLieAlgebra::new(self.tensor.clone())
    }

    /// Validates and returns the metric algebra; `None` when the document
    /// carries no metric.
    pub fn metric_algebra(&self) -> Option<Result<MetricNLieAlgebra>> {
        let m = self.metric.clone()?;
        Some(self.algebra().and_then(|a| MetricNLieAlgebra::new(a, m)))
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(NLIE_HEADER);
        out.push('\n');
        out.push_str(&format!("n {}\ndim {}\nbasis", self.n, self.dim));
        for b in &self.basis {
            out.push(' ');
            out.push_str(b);
        }
        out.push('\n');
        if let Some(m) = &self.metric {
            write_form(&mut out, "metric", m);
        }
        for (t, v) in self.tensor.iter() {
            let args: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
            write_bracket_line(&mut out, "bracket", &args, v, &|j| (j + 1).to_string());
        }
        out
    }

    pub fn parse(text: &str) -> ParseResult<Self> {
        let mut c = Cursor::new(text)?;
        let h = c.next_line("the header `nlie 1`")?;
        if h.tokens.iter().map(|t| t.text).collect::<Vec<_>>() != ["nlie", "1"] {
            return Err(h.err(1, FormatErrorKind::Syntax, "expected header `nlie 1`"));
        }
        let nl = c.expect("n")?;
        nl.expect_len(2)?;
        let n = parse_count(&nl, nl.tokens[1])?;
        if n < 2 {
            return Err(nl.err(nl.tokens[1].col, FormatErrorKind::OutOfRange, "arity must be at least 2"));
        }
        let dim = c.expect_count("dim")?;
        let basis = read_basis(&mut c, dim)?;
        let metric = if c.peek_keyword() == Some("metric") {
            let l = c.next_line("metric")?;
            let g = read_form(&mut c, &l, dim)?;
            Some(SymmetricForm::new(g).map_err(|e| l.err(1, FormatErrorKind::Syntax, e.to_string()))?)
        } else {
            None
        };
        let mut tensor = StructureTensor::zero(n, dim);
        let mut order = TupleOrder::default();
        let index = |s: &str| one_based(s, dim);
        while c.peek_keyword() == Some("bracket") {
            let l = c.next_line("bracket")?;
            let b = read_bracket_line(&l, n, &index, &index)?;
            order.check(&l, &b.args)?;
            for (t, x) in &b.values {
                tensor
                    .add_entry(&b.args, *t, x)
                    .map_err(|e| l.err(1, FormatErrorKind::OutOfRange, e.to_string()))?;
            }
        }
        c.finish()?;
        Ok(AlgebraDocument {
            n,
            dim,
            basis,
            metric,
            tensor,
        })
    }
}

/// A 1-based decimal index in `1..=dim`, returned 0-based.
pub(crate) fn one_based(s: &str, dim: usize) -> Option<usize> {
    if s.starts_with('0') || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let i: usize = s.parse().ok()?;
    (1..=dim).contains(&i).then(|| i - 1)
}

fn read_basis(c: &mut Cursor<'_>, dim: usize) -> ParseResult<Vec<String>> {
    let l = c.expect("basis")?;
    l.expect_len(dim + 1)?;
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(dim);
    for t in &l.tokens[1..] {
        if !is_name(t.text) {
            return Err(l.err(t.col, FormatErrorKind::Syntax, format!("invalid basis name {:?}", t.text)));
        }
        if !seen.insert(t.text) {
            return Err(l.err(t.col, FormatErrorKind::Duplicate, format!("basis name {:?} repeated", t.text)));
        }
        out.push(t.text.to_string());
    }
    Ok(out)
}
