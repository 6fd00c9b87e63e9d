//! Command-line interface.
//!
//! Exit codes: `0` all checks passed, `1` violations found (witnesses
//! emitted in the report), `2` input, shape, or usage error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use yamaguti::ly::{check_ly_axioms, LyAlgebra};
use yamaguti::phase::{check_manin_triple, check_phase_space, roundtrip_correspondence};
use yamaguti::pre_ly::{check_pre_ly_axioms, check_pre_ly_lemma, PreLyAlgebra};
use yamaguti::quadratic::{check_adjoint_coadjoint_iso, check_quadratic, BilinearForm};
use yamaguti::rbo::{check_relative_rbo, induced_pre_ly};
use yamaguti::rep::{
    adjoint_rep, check_derived_identities, check_representation, dual_rep, Representation,
};
use yamaguti::report::CheckReport;
use yamaguti::symplectic::{check_symplectic, compatible_pre_ly_from_symplectic, SymplecticForm};
use yamaguti::Matrix;

use crate::doc::{self, DocError, Document};
use crate::expr::{self, Params};
use crate::render::{self, Format as RenderFormat};

#[derive(Debug, Parser)]
#[command(
    name = "yamaguti",
    version,
    about = "Exact checker for Lie-Yamaguti algebras, Rota-Baxter operators, and symplectic structures"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Rational values for named parameters in documents, e.g. `a=1,b=-2/3`.
    #[arg(long, global = true, value_name = "NAME=VALUE,...")]
    pub sample: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

impl From<Format> for RenderFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => RenderFormat::Json,
            Format::Text => RenderFormat::Text,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the axioms or defining equations of an artifact.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        /// Input documents; see each kind for the expected files.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Representation for operator checks: `adjoint`, `coadjoint`, or a
        /// representation document path.
        #[arg(long, default_value = "adjoint")]
        rep: String,
    },
    /// Derive a new artifact from existing ones.
    Derive {
        #[command(subcommand)]
        target: DeriveTarget,
    },
    /// Build a composite artifact.
    Build {
        #[command(subcommand)]
        target: BuildTarget,
    },
    /// Run the full phase-space / Manin-triple correspondence pipeline on a
    /// pre-Lie-Yamaguti document.
    Roundtrip { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    /// A Lie-Yamaguti algebra (also accepts lie-algebra and phase-space
    /// documents).
    Ly,
    /// A pre-Lie-Yamaguti algebra: axioms plus derived identities.
    PreLy,
    /// A representation: `<rep.json>` or `<algebra.json> <rep.json>`.
    Rep,
    /// An invariant bilinear form: `<algebra.json> <form.json>`.
    Quadratic,
    /// A (relative) Rota-Baxter operator: `<algebra.json> <map.json>`.
    Rbo,
    /// A symplectic structure: `<algebra.json> <form.json>`.
    Symplectic,
    /// A Manin triple: `<manin.json>`.
    Manin,
}

#[derive(Debug, Subcommand)]
pub enum DeriveTarget {
    /// Derive a pre-Lie-Yamaguti algebra from an operator or a symplectic
    /// structure.
    PreLy {
        /// From a Rota-Baxter operator: `<algebra.json> <map.json>`.
        #[arg(long, conflicts_with = "from_symplectic")]
        from_rbo: bool,
        /// From a symplectic structure: `<algebra.json> <form.json>`.
        #[arg(long)]
        from_symplectic: bool,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value = "adjoint")]
        rep: String,
        /// Write the derived document here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildTarget {
    /// Build the phase space of the subadjacent algebra of a
    /// pre-Lie-Yamaguti document.
    PhaseSpace {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// What a command run produced.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn pass_fail(report: &CheckReport, format: Format) -> Outcome {
        Outcome {
            code: if report.passed() { 0 } else { 1 },
            stdout: render::render_report(report, format.into()),
            stderr: String::new(),
        }
    }

    fn input_error(message: String) -> Outcome {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

enum CommandError {
    /// Bad input: exit 2.
    Input(String),
    /// A precondition check failed: report the witnesses, exit 1.
    Violation(CheckReport),
}

impl From<DocError> for CommandError {
    fn from(e: DocError) -> Self {
        CommandError::Input(e.to_string())
    }
}

impl From<yamaguti::Error> for CommandError {
    fn from(e: yamaguti::Error) -> Self {
        match e.report() {
            Some(report) => CommandError::Violation(report.clone()),
            None => CommandError::Input(e.to_string()),
        }
    }
}

impl From<expr::ExprError> for CommandError {
    fn from(e: expr::ExprError) -> Self {
        CommandError::Input(e.to_string())
    }
}

pub fn execute(cli: Cli) -> Outcome {
    let params = match cli.sample.as_deref().map(expr::parse_bindings).transpose() {
        Ok(params) => params.unwrap_or_default(),
        Err(e) => return Outcome::input_error(e.to_string()),
    };
    let format = cli.format;
    let result = match cli.command {
        Command::Check { kind, files, rep } => run_check(kind, &files, &rep, &params, format),
        Command::Derive { target } => run_derive(target, &params, format),
        Command::Build { target } => run_build(target, &params, format),
        Command::Roundtrip { file } => run_roundtrip(&file, &params, format),
    };
    match result {
        Ok(outcome) => outcome,
        Err(CommandError::Input(message)) => Outcome::input_error(message),
        Err(CommandError::Violation(report)) => Outcome::pass_fail(&report.finish(), format),
    }
}

fn want(files: &[PathBuf], counts: &[usize]) -> Result<(), CommandError> {
    if counts.contains(&files.len()) {
        return Ok(());
    }
    let expected: Vec<String> = counts.iter().map(usize::to_string).collect();
    Err(CommandError::Input(format!(
        "expected {} input file(s), found {}",
        expected.join(" or "),
        files.len()
    )))
}

fn load_ly(path: &Path, params: &Params) -> Result<LyAlgebra, CommandError> {
    match doc::load(path, params)? {
        Document::Ly(a) => Ok(a),
        Document::Lie(lie) => Ok(yamaguti::ly::ly_from_lie(&lie)?),
        // A phase space is its total algebra plus bookkeeping.
        Document::PhaseSpace(ps) => Ok(ps.total().clone()),
        other => Err(CommandError::Input(format!(
            "{}: expected an ly-algebra document, found {}",
            path.display(),
            other.kind()
        ))),
    }
}

fn load_pre_ly(path: &Path, params: &Params) -> Result<PreLyAlgebra, CommandError> {
    match doc::load(path, params)? {
        Document::PreLy(p) => Ok(p),
        other => Err(CommandError::Input(format!(
            "{}: expected a pre-ly-algebra document, found {}",
            path.display(),
            other.kind()
        ))),
    }
}

fn load_matrix(path: &Path, params: &Params) -> Result<Matrix, CommandError> {
    match doc::load(path, params)? {
        Document::LinearMap(m) => Ok(m),
        other => Err(CommandError::Input(format!(
            "{}: expected a linear-map document, found {}",
            path.display(),
            other.kind()
        ))),
    }
}

fn load_symplectic(path: &Path, params: &Params) -> Result<SymplecticForm, CommandError> {
    match doc::load(path, params)? {
        Document::SymplecticForm(w) => Ok(w),
        other => Err(CommandError::Input(format!(
            "{}: expected a symplectic-form document, found {}",
            path.display(),
            other.kind()
        ))),
    }
}

fn load_bilinear(path: &Path, params: &Params) -> Result<BilinearForm, CommandError> {
    match doc::load(path, params)? {
        Document::BilinearForm(b) => Ok(b),
        Document::SymplecticForm(w) => Ok(BilinearForm::new(w.omega().clone())?),
        other => Err(CommandError::Input(format!(
            "{}: expected a bilinear-form document, found {}",
            path.display(),
            other.kind()
        ))),
    }
}

/// Resolves the `--rep` flag against a base algebra.
fn resolve_rep(
    selector: &str,
    algebra: &LyAlgebra,
    params: &Params,
) -> Result<Representation, CommandError> {
    match selector {
        "adjoint" => Ok(adjoint_rep(algebra)),
        "coadjoint" => Ok(dual_rep(&adjoint_rep(algebra))),
        path => match doc::load(Path::new(path), params)? {
            Document::Representation(r) => {
                if r.base() != algebra {
                    return Err(CommandError::Input(format!(
                        "{path}: representation is defined over a different algebra"
                    )));
                }
                Ok(r)
            }
            other => Err(CommandError::Input(format!(
                "{path}: expected a representation document, found {}",
                other.kind()
            ))),
        },
    }
}

fn run_check(
    kind: CheckKind,
    files: &[PathBuf],
    rep: &str,
    params: &Params,
    format: Format,
) -> Result<Outcome, CommandError> {
    let report = match kind {
        CheckKind::Ly => {
            want(files, &[1])?;
            match doc::load(&files[0], params)? {
                Document::Ly(a) => check_ly_axioms(&a),
                Document::Lie(l) => l.check_jacobi(),
                Document::PhaseSpace(ps) => check_phase_space(&ps),
                other => {
                    return Err(CommandError::Input(format!(
                        "{}: expected an algebra document, found {}",
                        files[0].display(),
                        other.kind()
                    )))
                }
            }
        }
        CheckKind::PreLy => {
            want(files, &[1])?;
            let p = load_pre_ly(&files[0], params)?;
            let mut report = check_pre_ly_axioms(&p);
            if report.passed() {
                report.merge(check_pre_ly_lemma(&p));
            }
            report.finish()
        }
        CheckKind::Rep => {
            want(files, &[1, 2])?;
            let r = match doc::load(files.last().expect("nonempty"), params)? {
                Document::Representation(r) => r,
                other => {
                    return Err(CommandError::Input(format!(
                        "expected a representation document, found {}",
                        other.kind()
                    )))
                }
            };
            if files.len() == 2 {
                let a = load_ly(&files[0], params)?;
                if r.base() != &a {
                    return Err(CommandError::Input(
                        "representation is defined over a different algebra".to_owned(),
                    ));
                }
            }
            let mut report = check_representation(&r);
            if report.passed() {
                report.merge(check_derived_identities(&r));
            }
            report.finish()
        }
        CheckKind::Quadratic => {
            want(files, &[2])?;
            let a = load_ly(&files[0], params)?;
            let form = load_bilinear(&files[1], params)?;
            let mut report = check_quadratic(&a, &form)?;
            if report.passed() {
                let mut outer = CheckReport::new();
                outer.merge(report);
                outer.absorb("iso", check_adjoint_coadjoint_iso(&a, &form)?);
                report = outer;
            }
            report.finish()
        }
        CheckKind::Rbo => {
            want(files, &[2])?;
            let a = load_ly(&files[0], params)?;
            let t = load_matrix(&files[1], params)?;
            let r = resolve_rep(rep, &a, params)?;
            check_relative_rbo(&r, &t)?
        }
        CheckKind::Symplectic => {
            want(files, &[2])?;
            let a = load_ly(&files[0], params)?;
            let w = load_symplectic(&files[1], params)?;
            check_symplectic(&a, &w)?
        }
        CheckKind::Manin => {
            want(files, &[1])?;
            match doc::load(&files[0], params)? {
                Document::ManinInput(m) => check_manin_triple(&m)?,
                other => {
                    return Err(CommandError::Input(format!(
                        "{}: expected a manin-input document, found {}",
                        files[0].display(),
                        other.kind()
                    )))
                }
            }
        }
    };
    Ok(Outcome::pass_fail(&report, format))
}

fn emit_document(doc: &Document, output: Option<&Path>) -> Result<Outcome, CommandError> {
    let text = doc::serialize(doc);
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| {
                CommandError::Input(format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(Outcome {
                code: 0,
                stdout: String::new(),
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        }),
    }
}

fn run_derive(
    target: DeriveTarget,
    params: &Params,
    _format: Format,
) -> Result<Outcome, CommandError> {
    match target {
        DeriveTarget::PreLy {
            from_rbo,
            from_symplectic,
            files,
            rep,
            output,
        } => {
            if from_rbo == from_symplectic {
                return Err(CommandError::Input(
                    "pass exactly one of --from-rbo and --from-symplectic".to_owned(),
                ));
            }
            want(&files, &[2])?;
            let a = load_ly(&files[0], params)?;
            let derived = if from_rbo {
                let t = load_matrix(&files[1], params)?;
                let r = resolve_rep(&rep, &a, params)?;
                induced_pre_ly(&r, &t)?
            } else {
                let w = load_symplectic(&files[1], params)?;
                compatible_pre_ly_from_symplectic(&a, &w)?
            };
            emit_document(&Document::PreLy(derived), output.as_deref())
        }
    }
}

fn run_build(
    target: BuildTarget,
    params: &Params,
    _format: Format,
) -> Result<Outcome, CommandError> {
    match target {
        BuildTarget::PhaseSpace { file, output } => {
            let p = load_pre_ly(&file, params)?;
            let ps = yamaguti::phase::build_phase_space(&p)?;
            emit_document(&Document::PhaseSpace(ps), output.as_deref())
        }
    }
}

fn run_roundtrip(file: &Path, params: &Params, format: Format) -> Result<Outcome, CommandError> {
    let p = load_pre_ly(file, params)?;
    let staged = roundtrip_correspondence(&p)?;
    Ok(Outcome {
        code: if staged.passed() { 0 } else { 1 },
        stdout: render::render_staged(&staged, format.into()),
        stderr: String::new(),
    })
}
