use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use polysmith::criteria::{check_equivalence_with, verify_witness, EquivalenceReport, LinearForm, Orientation, Verdict};
use polysmith::polyring::parse_polynomial;
use polysmith::reduce::{reduce_to_smith, FailureKind, ReductionTrace, TraceOutcome, DEFAULT_DEGREE_BOUND};
use polysmith::{MonomialOrder, PolyMatrix};

use crate::matfile::{parse_matrix, render_matrix};
use crate::report::{
    EquivalenceDoc, FormDoc, MatrixDoc, NamedMatrix, Report, ReportDocument, ReductionDoc, StepDoc, VerificationDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "polysmith", version, about = "Smith form equivalence for polynomial matrices over Q")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Degrevlex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the matrix is equivalent to its Smith form.
    Check {
        file: PathBuf,
        /// Linear factor hint in the leading variables, repeatable.
        #[arg(long = "g", value_name = "LINEAR_FORM")]
        g: Vec<String>,
        /// Monomial order for the unit-ideal tests.
        #[arg(long, value_enum, default_value = "degrevlex")]
        order: OrderArg,
    },
    /// Print the Smith form determined by the minors.
    Form { file: PathBuf },
    /// Construct unimodular witnesses U, V with U F V = S.
    Reduce {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        #[arg(long = "g", value_name = "LINEAR_FORM")]
        g: Vec<String>,
        /// Write u.mat, v.mat and s.mat into this directory on success.
        #[arg(long, value_name = "DIR")]
        write_witnesses: Option<PathBuf>,
    },
    /// Check a witness triple against the matrix.
    Verify {
        file: PathBuf,
        #[arg(long)]
        u: PathBuf,
        #[arg(long)]
        v: PathBuf,
        #[arg(long)]
        s: PathBuf,
        /// Check F = U S V instead of U F V = S.
        #[arg(long)]
        factored: bool,
    },
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    /// The rendered report, or an error message when `code` is 3 or 4 and
    /// no report was produced.
    pub text: String,
    pub is_error: bool,
}

impl CommandOutput {
    fn report(code: i32, doc: &ReportDocument, json: bool) -> Self {
        CommandOutput {
            code,
            text: if json { doc.to_json() } else { doc.to_human() },
            is_error: false,
        }
    }

    fn error(code: i32, message: impl Into<String>) -> Self {
        CommandOutput {
            code,
            text: message.into(),
            is_error: true,
        }
    }
}

struct Failure(i32, String);

impl From<polysmith::Error> for Failure {
    fn from(e: polysmith::Error) -> Self {
        use polysmith::Error as E;
        let code = match e {
            E::Parse { .. } | E::Usage(_) | E::Independence(_) => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Failure(code, format!("error: {e}"))
    }
}

pub fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Equivalent => EXIT_OK,
        Verdict::NotEquivalent => EXIT_NOT_EQUIVALENT,
        Verdict::UndecidableShape => EXIT_UNSUPPORTED,
    }
}

/// Exit code for a reduction outcome: `success`, `not-equivalent` or a
/// failure kind.
pub fn outcome_code(outcome: &str) -> i32 {
    match outcome {
        "success" => EXIT_OK,
        "not-equivalent" => EXIT_NOT_EQUIVALENT,
        _ => match FailureKind::parse(outcome) {
            Some(FailureKind::UnsupportedShape) => EXIT_UNSUPPORTED,
            _ => EXIT_INTERNAL,
        },
    }
}

/// Run the command line `argv`, program name first.
pub fn run<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return CommandOutput {
                code,
                text: e.render().to_string(),
                is_error: e.use_stderr(),
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(Failure(code, msg)) => CommandOutput::error(code, msg),
    }
}

fn read_matrix(path: &Path) -> Result<PolyMatrix, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure(EXIT_USAGE, format!("error: cannot read {}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure(EXIT_USAGE, format!("error: {}: {e}", path.display())))
}

fn hints(f: &PolyMatrix, g: &[String]) -> Result<Option<Vec<LinearForm>>, Failure> {
    if g.is_empty() {
        return Ok(None);
    }
    g.iter()
        .map(|s| {
            let p = parse_polynomial(s, f.vars())
                .map_err(|e| Failure(EXIT_USAGE, format!("error: --g `{s}`: {e}")))?;
            LinearForm::from_polynomial(&p).map_err(|e| Failure(EXIT_USAGE, format!("error: --g `{s}`: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

pub fn matrix_doc(m: &PolyMatrix) -> MatrixDoc {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn names(f: &PolyMatrix) -> Vec<String> {
    f.vars().names().to_vec()
}

pub fn equivalence_doc(f: &PolyMatrix, r: &EquivalenceReport) -> EquivalenceDoc {
    EquivalenceDoc {
        vars: names(f),
        rows: f.rows(),
        cols: f.cols(),
        rank: r.rank,
        shape: r.shape.kind().to_string(),
        shape_detail: r.shape.to_string(),
        classified: r.classified.to_string(),
        dk: r.per_k.iter().map(|k| k.dk.to_string()).collect(),
        jk: r.per_k.iter().map(|k| k.jk_unit).collect(),
        theorem: r.theorem.as_str().to_string(),
        verdict: r.verdict.as_str().to_string(),
        witness_u: r.witnesses.as_ref().map(|(u, _)| matrix_doc(u)),
        witness_v: r.witnesses.as_ref().map(|(_, v)| matrix_doc(v)),
    }
}

pub fn reduction_doc(f: &PolyMatrix, r: &EquivalenceReport, bound: u32, trace: Option<&ReductionTrace>) -> ReductionDoc {
    let mut doc = ReductionDoc {
        vars: names(f),
        rows: f.rows(),
        cols: f.cols(),
        verdict: r.verdict.as_str().to_string(),
        shape: r.shape.to_string(),
        degree_bound: bound,
        input: matrix_doc(f),
        conjugation: None,
        steps: Vec::new(),
        outcome: "not-equivalent".into(),
        failure_detail: None,
        u: None,
        v: None,
        s: None,
    };
    let Some(t) = trace else {
        return doc;
    };
    doc.input = matrix_doc(&t.input);
    doc.conjugation = t
        .conjugation
        .as_ref()
        .map(|c| c.iter().map(ToString::to_string).collect());
    doc.steps = t
        .steps
        .iter()
        .map(|s| StepDoc {
            description: s.description.clone(),
            left: matrix_doc(&s.left),
            right: matrix_doc(&s.right),
            state: matrix_doc(&s.state),
            aux: s
                .aux
                .iter()
                .map(|(name, m)| NamedMatrix {
                    name: name.clone(),
                    matrix: matrix_doc(m),
                })
                .collect(),
        })
        .collect();
    match &t.outcome {
        TraceOutcome::Success { u, v, s } => {
            doc.outcome = "success".into();
            doc.u = Some(matrix_doc(u));
            doc.v = Some(matrix_doc(v));
            doc.s = Some(matrix_doc(s));
        }
        TraceOutcome::Failed(e) => {
            doc.outcome = e.kind.as_str().to_string();
            doc.failure_detail = Some(e.detail.clone());
        }
    }
    doc
}

fn dispatch(cli: &Cli) -> Result<CommandOutput, Failure> {
    match &cli.command {
        Command::Check { file, g, order } => {
            let f = read_matrix(file)?;
            let h = hints(&f, g)?;
            let n = f.vars().len();
            let order = match order {
                OrderArg::Lex => MonomialOrder::lex(n),
                OrderArg::Degrevlex => MonomialOrder::degrevlex(n),
            };
            let r = check_equivalence_with(&f, h.as_deref(), &order)?;
            let doc = ReportDocument::new(Report::Equivalence(equivalence_doc(&f, &r)));
            Ok(CommandOutput::report(verdict_code(r.verdict), &doc, cli.json))
        }
        Command::Form { file } => {
            let f = read_matrix(file)?;
            let phi = f.theoretical_smith()?;
            let doc = ReportDocument::new(Report::Form(FormDoc {
                vars: names(&f),
                rows: f.rows(),
                cols: f.cols(),
                rank: phi.rank,
                invariant_factors: phi.factors.iter().map(ToString::to_string).collect(),
                smith: matrix_doc(&phi.to_matrix(&f)),
            }));
            Ok(CommandOutput::report(EXIT_OK, &doc, cli.json))
        }
        Command::Reduce {
            file,
            degree_bound,
            g,
            write_witnesses,
        } => {
            let f = read_matrix(file)?;
            let h = hints(&f, g)?;
            let r = check_equivalence_with(&f, h.as_deref(), &MonomialOrder::degrevlex(f.vars().len()))?;
            let trace = if r.verdict == Verdict::NotEquivalent {
                None
            } else {
                Some(reduce_to_smith(&f, &r.shape, *degree_bound)?)
            };
            if let (Some(dir), Some((u, v, s))) = (write_witnesses, trace.as_ref().and_then(|t| t.witnesses())) {
                fs::create_dir_all(dir)
                    .map_err(|e| Failure(EXIT_USAGE, format!("error: cannot create {}: {e}", dir.display())))?;
                for (name, m) in [("u.mat", u), ("v.mat", v), ("s.mat", s)] {
                    let path = dir.join(name);
                    fs::write(&path, render_matrix(m))
                        .map_err(|e| Failure(EXIT_USAGE, format!("error: cannot write {}: {e}", path.display())))?;
                }
            }
            let doc = reduction_doc(&f, &r, *degree_bound, trace.as_ref());
            let code = outcome_code(&doc.outcome);
            Ok(CommandOutput::report(code, &ReportDocument::new(Report::Reduction(doc)), cli.json))
        }
        Command::Verify {
            file,
            u,
            v,
            s,
            factored,
        } => {
            let f = read_matrix(file)?;
            let rebase = |path: &Path| -> Result<PolyMatrix, Failure> {
                read_matrix(path)?.rebase(f.vars()).map_err(|e| {
                    Failure(EXIT_USAGE, format!("error: {}: {e}", path.display()))
                })
            };
            let (u, v, s) = (rebase(u)?, rebase(v)?, rebase(s)?);
            let orientation = if *factored {
                Orientation::Factored
            } else {
                Orientation::Reduced
            };
            let holds = verify_witness(&f, &u, &v, &s, orientation)?;
            let doc = ReportDocument::new(Report::Verification(VerificationDoc {
                vars: names(&f),
                orientation: if *factored { "factored" } else { "reduced" }.into(),
                holds,
            }));
            let code = if holds { EXIT_OK } else { EXIT_NOT_EQUIVALENT };
            Ok(CommandOutput::report(code, &doc, cli.json))
        }
    }
}
