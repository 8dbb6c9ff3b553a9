use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nlie::algebra::{check_invariance, check_n_jacobi, is_semisimple, Identity, MetricNLieAlgebra, NLieAlgebra};
use nlie::constructions::{
    build_abelian, build_coadjoint, build_simple, direct_sum, double_extend_1d,
    double_extend_general, extract_with_search, pairing_metric, parse_signs, ExtractedData,
};
use nlie::exact::{Matrix, Rational, SymmetricForm};
use nlie::format::{
    coadjoint_names, default_names, dext1_names, dextgen_names, AlgebraDocument, Dext1Document,
    DextGenDocument, Document, FormatError,
};
use nlie::structure::{
    center, classify_indecomposable, decompose, derived_ideal, derived_series, is_solvable,
    IndecomposableKind,
};
use nlie::exact::Subspace;

#[derive(Parser)]
#[command(name = "nlie", version, about = "Exact toolkit for metric Lie n-algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the n-Jacobi identity and metric invariance.
    Check { file: PathBuf },
    /// Report centre, derived series, signature and decomposition.
    Analyze {
        file: PathBuf,
        #[arg(long, env = "NLIE_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Build an algebra and write it as a canonical document.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Split into indecomposable orthogonal factors.
    Decompose {
        file: PathBuf,
        #[arg(long, env = "NLIE_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Write double-extension data for an indecomposable algebra.
    Extract {
        file: PathBuf,
        #[arg(long, env = "NLIE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// The simple algebra of arity N with the given signs, e.g. `+++-`.
    Simple {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// An abelian algebra with a diagonal metric plus hyperbolic planes.
    Abelian {
        #[arg(long)]
        n: usize,
        /// Comma-separated diagonal entries.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        diag: String,
        /// Number of hyperbolic planes appended after the diagonal part.
        #[arg(long, default_value_t = 0)]
        hyperbolic: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Orthogonal direct sum of two metric algebras.
    Dsum {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// `V ⋉ V*` with the coadjoint action and the dual pairing metric.
    Coadjoint {
        a: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// One-dimensional double extension from a `dext1` document.
    Dext1 {
        #[arg(long)]
        data: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// General double extension from a `dextgen` document.
    Dextgen {
        #[arg(long)]
        data: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// A failed command and its exit class.
enum Failure {
    /// Exit 1: validation, decomposability or search failure.
    Semantic(String),
    /// Exit 2: unreadable or malformed input.
    Parse(String),
    /// Exit 3: a contradiction with the theory.
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Semantic(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Semantic(m) | Failure::Parse(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<nlie::Error> for Failure {
    fn from(e: nlie::Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Semantic(e.to_string())
        }
    }
}

type CmdResult = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { file } => cmd_check(&file),
        Command::Analyze { file, seed } => cmd_analyze(&file, seed),
        Command::Construct { what } => cmd_construct(what),
        Command::Decompose { file, seed } => cmd_decompose(&file, seed),
        Command::Extract { file, seed, output } => {
            cmd_extract(&file, seed).and_then(|s| emit(output.as_deref(), s))
        }
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

/// Writes `text` to `path`, or returns it for stdout.
fn emit(path: Option<&Path>, text: String) -> CmdResult {
    match path {
        Some(p) => {
            std::fs::write(p, text)
                .map_err(|e| Failure::Semantic(format!("cannot write {}: {e}", p.display())))?;
            Ok((String::new(), 0))
        }
        None => Ok((text, 0)),
    }
}

fn read_document(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e: FormatError| Failure::Parse(format!("{}:{e}", path.display())))
}

fn read_algebra_document(path: &Path) -> Result<AlgebraDocument, Failure> {
    match read_document(path)? {
        Document::Algebra(d) => {
            if d.n == 2 {
                eprintln!("warning: n = 2 in {}; classical Lie algebra results apply", path.display());
            }
            Ok(d)
        }
        _ => Err(Failure::Parse(format!(
            "{}: expected an `nlie 1` algebra document",
            path.display()
        ))),
    }
}

fn read_metric_algebra(path: &Path) -> Result<MetricNLieAlgebra, Failure> {
    let doc = read_algebra_document(path)?;
    match doc.metric_algebra() {
        Some(m) => Ok(m?),
        None => Err(Failure::Semantic(format!("{}: document has no metric", path.display()))),
    }
}

fn cmd_check(path: &Path) -> CmdResult {
    let doc = read_algebra_document(path)?;
    let a = doc.algebra()?;
    let mut out = String::new();
    let jacobi = check_n_jacobi(a.tensor());
    let mut ok = jacobi.is_pass();
    let _ = writeln!(out, "n-jacobi: {jacobi}");
    for v in &jacobi.violations {
        let _ = writeln!(out, "{v}");
    }
    match &doc.metric {
        None => {
            let _ = writeln!(out, "invariance: skipped (no metric)");
        }
        Some(m) if !m.is_nondegenerate() => {
            ok = false;
            let _ = writeln!(out, "invariance: metric is degenerate (signature {})", m.signature());
        }
        Some(m) => {
            let inv = check_invariance(a.tensor(), m);
            ok &= inv.is_pass();
            let _ = writeln!(out, "invariance: {inv}");
            for v in &inv.violations {
                debug_assert_eq!(v.identity, Identity::Invariance);
                let _ = writeln!(out, "{v}");
            }
        }
    }
    Ok((out, if ok { 0 } else { 1 }))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dims(v: &[Subspace]) -> String {
    v.iter().map(|s| s.dim().to_string()).collect::<Vec<_>>().join(",")
}

fn kind_summary(k: &IndecomposableKind) -> String {
    match k {
        IndecomposableKind::DoubleExtension(s) => {
            format!("double-extension, dim I = {}", s.ideal.dim())
        }
        other => other.name().to_string(),
    }
}

fn cmd_analyze(path: &Path, seed: u64) -> CmdResult {
    let doc = read_algebra_document(path)?;
    let a: NLieAlgebra = doc.algebra()?;
    let jacobi = check_n_jacobi(a.tensor());
    if !jacobi.is_pass() {
        return Err(Failure::Semantic(format!("n-jacobi: {jacobi}")));
    }
    let mut out = String::new();
    let full = Subspace::full(a.dim());
    let series = derived_series(&a, &full)?;
    let _ = writeln!(out, "n: {}", a.n());
    let _ = writeln!(out, "dim: {}", a.dim());
    let _ = writeln!(out, "centre dim: {}", center(&a).dim());
    let _ = writeln!(out, "derived dim: {}", derived_ideal(&a).dim());
    let _ = writeln!(out, "derived series: {}", dims(&series));
    let _ = writeln!(out, "solvable: {}", yes_no(is_solvable(&a, &full)?));
    let _ = writeln!(out, "semisimple: {}", yes_no(is_semisimple(&a)?));
    if let Some(m) = doc.metric_algebra() {
        let m = m?;
        let _ = writeln!(out, "signature: {}", m.signature());
        decomposition_report(&m, seed, false, &mut out)?;
    }
    Ok((out, 0))
}

fn decomposition_report(m: &MetricNLieAlgebra, seed: u64, columns: bool, out: &mut String) -> Result<(), Failure> {
    let d = decompose(m, seed)?;
    let dims: Vec<String> = d.dims().iter().map(usize::to_string).collect();
    let _ = writeln!(out, "factors: {}", dims.join(","));
    let mut kinds = Vec::new();
    for (i, f) in d.factors.iter().enumerate() {
        let kind = classify_indecomposable(f, seed)?;
        let _ = writeln!(
            out,
            "factor {}: dim {}, signature {}, {}",
            i + 1,
            f.dim(),
            f.signature(),
            kind_summary(&kind)
        );
        if columns {
            let e = &d.embeddings[i];
            for j in 0..e.cols() {
                let col: Vec<String> = e.column(j).iter().map(Rational::to_string).collect();
                let _ = writeln!(out, "  basis {}: {}", j + 1, col.join(" "));
            }
        }
        kinds.push(kind);
    }
    if kinds.len() == 1 {
        let _ = writeln!(out, "indecomposable: {}", kind_summary(&kinds[0]));
    }
    Ok(())
}

fn cmd_decompose(path: &Path, seed: u64) -> CmdResult {
    let m = read_metric_algebra(path)?;
    let mut out = String::new();
    decomposition_report(&m, seed, true, &mut out)?;
    Ok((out, 0))
}

fn cmd_extract(path: &Path, seed: u64) -> Result<String, Failure> {
    let m = read_metric_algebra(path)?;
    let x = extract_with_search(&m, seed).map_err(|e| match e {
        nlie::Error::Simple => Failure::Semantic("input is simple".into()),
        nlie::Error::Decomposable => Failure::Semantic("input decomposable".into()),
        nlie::Error::OneDimensional => Failure::Semantic("input is one-dimensional".into()),
        other => other.into(),
    })?;
    Ok(match x.data {
        ExtractedData::OneDim(data) => Dext1Document {
            data,
            adapted: Some(x.basis),
        }
        .serialize(),
        ExtractedData::General(data) => DextGenDocument::from_data(&data, Some(x.basis))?.serialize(),
    })
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>, Failure> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.parse::<Rational>()
                .map_err(|e| Failure::Parse(format!("--diag: {e}")))
        })
        .collect()
}

fn cmd_construct(what: Construct) -> CmdResult {
    let (text, output) = match what {
        Construct::Simple { n, signs, output } => {
            let s = parse_signs(&signs).map_err(|e| Failure::Parse(format!("--signs: {e}")))?;
            let m = build_simple(n, &s)?;
            (AlgebraDocument::from_metric(&m, default_names(m.dim())).serialize(), output)
        }
        Construct::Abelian {
            n,
            diag,
            hyperbolic,
            output,
        } => {
            let d = parse_rational_list(&diag)?;
            let mut g = Matrix::diagonal(&d);
            for _ in 0..hyperbolic {
                g = g.block_diag(&pairing_metric(1).gram().clone());
            }
            let m = build_abelian(n, SymmetricForm::new(g)?)?;
            (AlgebraDocument::from_metric(&m, default_names(m.dim())).serialize(), output)
        }
        Construct::Dsum { a, b, output } => {
            let da = read_algebra_document(&a)?;
            let db = read_algebra_document(&b)?;
            let ma = metric_of(&da, &a)?;
            let mb = metric_of(&db, &b)?;
            let m = direct_sum(&ma, &mb)?;
            let mut names = da.basis.clone();
            names.extend(db.basis.iter().cloned());
            if names.iter().collect::<std::collections::HashSet<_>>().len() != names.len() {
                names = default_names(m.dim());
            }
            (AlgebraDocument::from_metric(&m, names).serialize(), output)
        }
        Construct::Coadjoint { a, output } => {
            let da = read_algebra_document(&a)?;
            let base = da.algebra()?;
            let ext = build_coadjoint(&base)?;
            let m = MetricNLieAlgebra::new(ext, pairing_metric(base.dim()))?;
            (AlgebraDocument::from_metric(&m, coadjoint_names(base.dim())).serialize(), output)
        }
        Construct::Dext1 { data, output } => {
            let doc = match read_document(&data)? {
                Document::Dext1(d) => d,
                _ => return Err(Failure::Parse(format!("{}: expected a `dext1 1` document", data.display()))),
            };
            let m = double_extend_1d(&doc.data)?;
            (AlgebraDocument::from_metric(&m, dext1_names(doc.data.w_dim())).serialize(), output)
        }
        Construct::Dextgen { data, output } => {
            let doc = match read_document(&data)? {
                Document::DextGen(d) => d,
                _ => return Err(Failure::Parse(format!("{}: expected a `dextgen 1` document", data.display()))),
            };
            let m = double_extend_general(&doc.to_data()?)?;
            (AlgebraDocument::from_metric(&m, dextgen_names(doc.u_dim, doc.w_dim)).serialize(), output)
        }
    };
    emit(output.as_deref(), text)
}

fn metric_of(doc: &AlgebraDocument, path: &Path) -> Result<MetricNLieAlgebra, Failure> {
    match doc.metric_algebra() {
        Some(m) => Ok(m?),
        None => Err(Failure::Semantic(format!("{}: document has no metric", path.display()))),
    }
}
