//! Line and token scanning shared by the document grammars.

use std::fmt;

use crate::exact::{Matrix, Rational, SymmetricForm};

/// What kind of defect a parse error reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatErrorKind {
    Syntax,
    Canonical,
    Duplicate,
    OutOfRange,
}

impl fmt::Display for FormatErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormatErrorKind::Syntax => "syntax error",
            FormatErrorKind::Canonical => "canonicality error",
            FormatErrorKind::Duplicate => "duplicate entry",
            FormatErrorKind::OutOfRange => "index out of range",
        })
    }
}

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {kind}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub col: usize,
    pub kind: FormatErrorKind,
    pub message: String,
}

pub type ParseResult<T> = std::result::Result<T, FormatError>;

/// A whitespace-separated token with its 1-based column.
#[derive(Clone, Copy, Debug)]
pub struct Token<'a> {
    pub text: &'a str,
    pub col: usize,
}

/// One significant line.
#[derive(Clone, Debug)]
pub struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<Token<'a>>,
    end_col: usize,
}

impl<'a> Line<'a> {
    pub fn err(&self, col: usize, kind: FormatErrorKind, message: impl Into<String>) -> FormatError {
        FormatError {
            line: self.number,
            col,
            kind,
            message: message.into(),
        }
    }

    pub fn keyword(&self) -> &'a str {
        self.tokens[0].text
    }

    /// Token `i`, or a syntax error pointing past the end of the line.
    pub fn token(&self, i: usize, what: &str) -> ParseResult<Token<'a>> {
        self.tokens
            .get(i)
            .copied()
            .ok_or_else(|| self.err(self.end_col, FormatErrorKind::Syntax, format!("expected {what}")))
    }

    pub fn expect_len(&self, len: usize) -> ParseResult<()> {
        if self.tokens.len() > len {
            let t = self.tokens[len];
            return Err(self.err(t.col, FormatErrorKind::Syntax, format!("unexpected token {:?}", t.text)));
        }
        if self.tokens.len() < len {
            return Err(self.err(self.end_col, FormatErrorKind::Syntax, "line ends early"));
        }
        Ok(())
    }
}

/// Splits text into significant lines. Blank lines and lines starting with
/// `#` are skipped; significant lines must use single spaces between
/// tokens with no leading or trailing whitespace.
pub fn lines(text: &str) -> ParseResult<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let canon = |col: usize, msg: &str| FormatError {
            line: number,
            col,
            kind: FormatErrorKind::Canonical,
            message: msg.to_string(),
        };
        if let Some(pos) = raw.find(|c: char| c.is_whitespace() && c != ' ') {
            return Err(canon(raw[..pos].chars().count() + 1, "only single spaces may separate tokens"));
        }
        if raw.starts_with(' ') {
            return Err(canon(1, "leading whitespace"));
        }
        if raw.ends_with(' ') {
            return Err(canon(raw.chars().count(), "trailing whitespace"));
        }
        let mut tokens = Vec::new();
        let mut col = 1;
        for piece in raw.split(' ') {
            if piece.is_empty() {
                return Err(canon(col, "only single spaces may separate tokens"));
            }
            tokens.push(Token { text: piece, col });
            col += piece.chars().count() + 1;
        }
        out.push(Line {
            number,
            tokens,
            end_col: raw.chars().count() + 1,
        });
    }
    Ok(out)
}

/// Sequential access to significant lines.
pub struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> ParseResult<Self> {
        let last_line = text.lines().count().max(1);
        Ok(Cursor {
            lines: lines(text)?,
            pos: 0,
            last_line,
        })
    }

    pub fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    pub fn peek_keyword(&self) -> Option<&'a str> {
        self.peek().map(Line::keyword)
    }

    pub fn next_line(&mut self, what: &str) -> ParseResult<Line<'a>> {
        let l = self.lines.get(self.pos).cloned().ok_or_else(|| FormatError {
            line: self.last_line,
            col: 1,
            kind: FormatErrorKind::Syntax,
            message: format!("unexpected end of input, expected {what}"),
        })?;
        self.pos += 1;
        Ok(l)
    }

    /// The next line, which must start with `keyword`.
    pub fn expect(&mut self, keyword: &str) -> ParseResult<Line<'a>> {
        let l = self.next_line(&format!("`{keyword}`"))?;
        if l.keyword() != keyword {
            return Err(l.err(1, FormatErrorKind::Syntax, format!("expected `{keyword}`, found {:?}", l.keyword())));
        }
        Ok(l)
    }

    /// `keyword <count>`.
    pub fn expect_count(&mut self, keyword: &str) -> ParseResult<usize> {
        let l = self.expect(keyword)?;
        l.expect_len(2)?;
        parse_count(&l, l.tokens[1])
    }

    pub fn finish(&self) -> ParseResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(l) => Err(l.err(1, FormatErrorKind::Syntax, format!("unexpected line starting with {:?}", l.keyword()))),
        }
    }
}

/// A non-negative decimal integer without leading zeros.
pub fn parse_count(l: &Line<'_>, t: Token<'_>) -> ParseResult<usize> {
    let s = t.text;
    let ok = !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'));
    if !ok {
        return Err(l.err(t.col, FormatErrorKind::Syntax, format!("expected a count, found {s:?}")));
    }
    s.parse()
        .map_err(|_| l.err(t.col, FormatErrorKind::OutOfRange, format!("count {s} too large")))
}

pub fn parse_rational(l: &Line<'_>, t: Token<'_>) -> ParseResult<Rational> {
    t.text.parse::<Rational>().map_err(|e| {
        let kind = if Rational::parse_lenient(t.text).is_ok() {
            FormatErrorKind::Canonical
        } else {
            FormatErrorKind::Syntax
        };
        l.err(t.col, kind, e.to_string())
    })
}

/// Serializes a symmetric form under `keyword`: `diag` when diagonal,
/// otherwise `rows` followed by one `row` line per row.
pub fn write_form(out: &mut String, keyword: &str, f: &SymmetricForm) {
    let g = f.gram();
    if f.is_diagonal() {
        out.push_str(keyword);
        out.push_str(" diag");
        for i in 0..g.rows() {
            out.push(' ');
            out.push_str(&g[(i, i)].to_string());
        }
        out.push('\n');
    } else {
        out.push_str(keyword);
        out.push_str(" rows\n");
        write_rows(out, g);
    }
}

pub fn write_rows(out: &mut String, m: &Matrix) {
    for i in 0..m.rows() {
        out.push_str("row");
        for j in 0..m.cols() {
            out.push(' ');
            out.push_str(&m[(i, j)].to_string());
        }
        out.push('\n');
    }
}

/// Reads `row` lines into a `rows × cols` matrix.
pub fn read_rows(c: &mut Cursor<'_>, rows: usize, cols: usize) -> ParseResult<Matrix> {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        let l = c.expect("row")?;
        l.expect_len(cols + 1)?;
        for j in 0..cols {
            m[(i, j)] = parse_rational(&l, l.tokens[j + 1])?;
        }
    }
    Ok(m)
}

/// Parses the form introduced by the line `l` (`keyword diag …` or
/// `keyword rows` plus row lines). Returns the gram matrix and the line of
/// the header for later diagnostics.
pub fn read_form(c: &mut Cursor<'_>, l: &Line<'_>, dim: usize) -> ParseResult<Matrix> {
    let mode = l.token(1, "`diag` or `rows`")?;
    match mode.text {
        "diag" => {
            l.expect_len(dim + 2)?;
            let diag = (0..dim)
                .map(|i| parse_rational(l, l.tokens[i + 2]))
                .collect::<ParseResult<Vec<_>>>()?;
            Ok(Matrix::diagonal(&diag))
        }
        "rows" => {
            l.expect_len(2)?;
            let g = read_rows(c, dim, dim)?;
            if !g.is_symmetric() {
                return Err(l.err(1, FormatErrorKind::Syntax, "form is not symmetric"));
            }
            if (0..dim).all(|i| (0..dim).all(|j| i == j || g[(i, j)].is_zero())) {
                return Err(l.err(mode.col, FormatErrorKind::Canonical, "a diagonal form must be written with `diag`"));
            }
            Ok(g)
        }
        other => Err(l.err(mode.col, FormatErrorKind::Syntax, format!("expected `diag` or `rows`, found {other:?}"))),
    }
}

/// A parsed `bracket`-style line: argument indices and `(target, coeff)`
/// pairs, all as 0-based indices.
pub struct BracketLine {
    pub args: Vec<usize>,
    pub values: Vec<(usize, Rational)>,
}

/// Parses `kw a₁ … a_k -> t₁: c₁, t₂: c₂`, resolving indices through
/// `arg_index` and `target_index` and checking canonical ordering within
/// the line.
pub fn read_bracket_line(
    l: &Line<'_>,
    arity: usize,
    arg_index: &dyn Fn(&str) -> Option<usize>,
    target_index: &dyn Fn(&str) -> Option<usize>,
) -> ParseResult<BracketLine> {
    let mut args = Vec::with_capacity(arity);
    for i in 0..arity {
        let t = l.token(i + 1, "an index")?;
        if t.text == "->" {
            return Err(l.err(t.col, FormatErrorKind::Syntax, format!("expected {arity} indices")));
        }
        let idx = arg_index(t.text).ok_or_else(|| {
            l.err(t.col, FormatErrorKind::OutOfRange, format!("unknown index {:?}", t.text))
        })?;
        if let Some(&prev) = args.last() {
            if idx == prev {
                return Err(l.err(t.col, FormatErrorKind::Syntax, "repeated index"));
            }
            if idx < prev {
                return Err(l.err(t.col, FormatErrorKind::Canonical, "indices must be strictly increasing"));
            }
        }
        args.push(idx);
    }
    let arrow = l.token(arity + 1, "`->`")?;
    if arrow.text != "->" {
        return Err(l.err(arrow.col, FormatErrorKind::Syntax, format!("expected `->`, found {:?}", arrow.text)));
    }
    let mut values: Vec<(usize, Rational)> = Vec::new();
    let mut i = arity + 2;
    loop {
        let t = l.token(i, "a target")?;
        let Some(name) = t.text.strip_suffix(':') else {
            return Err(l.err(t.col, FormatErrorKind::Syntax, "expected `target:`"));
        };
        let target = target_index(name).ok_or_else(|| {
            l.err(t.col, FormatErrorKind::OutOfRange, format!("unknown target {name:?}"))
        })?;
        if let Some((prev, _)) = values.last() {
            if target == *prev {
                return Err(l.err(t.col, FormatErrorKind::Duplicate, "repeated target"));
            }
            if target < *prev {
                return Err(l.err(t.col, FormatErrorKind::Canonical, "targets must be increasing"));
            }
        }
        let c = l.token(i + 1, "a coefficient")?;
        let (text, more) = match c.text.strip_suffix(',') {
            Some(s) => (s, true),
            None => (c.text, false),
        };
        let coeff = parse_rational(l, Token { text, col: c.col })?;
        if coeff.is_zero() {
            return Err(l.err(c.col, FormatErrorKind::Canonical, "zero coefficients must be omitted"));
        }
        values.push((target, coeff));
        i += 2;
        if !more {
            break;
        }
    }
    l.expect_len(i)?;
    Ok(BracketLine { args, values })
}

/// Writes `kw a₁ … -> t: c, …` for a nonzero value vector.
pub fn write_bracket_line(
    out: &mut String,
    keyword: &str,
    args: &[String],
    value: &[Rational],
    target_name: &dyn Fn(usize) -> String,
) {
    out.push_str(keyword);
    for a in args {
        out.push(' ');
        out.push_str(a);
    }
    out.push_str(" ->");
    let mut first = true;
    for (j, c) in value.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            out.push(',');
        }
        first = false;
        out.push(' ');
        out.push_str(&target_name(j));
        out.push_str(": ");
        out.push_str(&c.to_string());
    }
    out.push('\n');
}

/// Tracks the previous tuple to enforce strictly increasing lexicographic order.
#[derive(Default)]
pub struct TupleOrder {
    prev: Option<Vec<usize>>,
}

impl TupleOrder {
    pub fn check(&mut self, l: &Line<'_>, tuple: &[usize]) -> ParseResult<()> {
        if let Some(p) = &self.prev {
            match p.as_slice().cmp(tuple) {
                std::cmp::Ordering::Equal => {
                    return Err(l.err(1, FormatErrorKind::Duplicate, "duplicate tuple"));
                }
                std::cmp::Ordering::Greater => {
                    return Err(l.err(1, FormatErrorKind::Canonical, "tuples must be sorted lexicographically"));
                }
                std::cmp::Ordering::Less => {}
            }
        }
        self.prev = Some(tuple.to_vec());
        Ok(())
    }
}

/// Whether `s` is a valid basis name: a letter followed by letters, digits,
/// `_` or `*`.
pub fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '*')
}
