//! Constructive reduction of a square matrix to its Smith form.
//!
//! The determinant is split into linear factors: rational roots of the
//! univariate tail first, then chain factors from the outermost variable
//! inwards. Each factor is pulled out of the running cofactor `G` by a
//! unimodular `U` built from a zero left prime annihilator of `G` at the
//! factor's zero, and the diagonal is folded back into Smith form. When no
//! determinant factor is left, `G` is unimodular and `V = G^-1`.
//!
//! Witnesses always satisfy `U * F * V = S`.

mod cofactor;
mod completion;
mod extract;
mod fold;
mod ops;

use std::fmt;

use crate::criteria::{
    build_automorphism, detect_chain_shape, verify_witness, ChainFactor, DetShape, Direction,
    Orientation,
};
use crate::error::{internal, Error, Result};
use crate::polymat::PolyMatrix;
use crate::polyring::{rational_roots, Polynomial};

pub use cofactor::size_reduce;
pub use completion::{unimodular_completion, zlp_annihilator};
pub use extract::{extract_factor, factor_substitution};
pub use fold::{fold_diagonal, Fold, FoldMove};
pub use ops::ElementaryOp;

/// Default total-degree bound of the completion search.
pub const DEFAULT_DEGREE_BOUND: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureKind {
    KernelNotZlp,
    CompletionNotFound,
    UnsupportedShape,
}

impl FailureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FailureKind::KernelNotZlp => "kernel-not-zlp",
            FailureKind::CompletionNotFound => "completion-not-found",
            FailureKind::UnsupportedShape => "unsupported-shape",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            FailureKind::KernelNotZlp,
            FailureKind::CompletionNotFound,
            FailureKind::UnsupportedShape,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
    }
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why a reduction stopped short of witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReduceError {
    #[error("{0}")]
    Failure(Failure),
    #[error(transparent)]
    Core(#[from] Error),
}

impl Failure {
    fn at(self, step: String) -> Failure {
        Failure {
            kind: self.kind,
            detail: format!("{step}: {}", self.detail),
        }
    }
}

pub(crate) fn fail(kind: FailureKind, detail: impl Into<String>) -> ReduceError {
    ReduceError::Failure(Failure {
        kind,
        detail: detail.into(),
    })
}

/// One recorded step: `state = left * previous_state * right`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub description: String,
    pub left: PolyMatrix,
    pub right: PolyMatrix,
    pub state: PolyMatrix,
    /// Intermediate matrices of the step, by name.
    pub aux: Vec<(String, PolyMatrix)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TraceOutcome {
    Success {
        u: PolyMatrix,
        v: PolyMatrix,
        s: PolyMatrix,
    },
    Failed(Failure),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionTrace {
    /// The matrix the steps act on: the input itself, or its image under
    /// the inverse automorphism when `conjugation` is set.
    pub input: PolyMatrix,
    /// Images `z_i -> g_i` of the automorphism used for a linear shape.
    pub conjugation: Option<Vec<Polynomial>>,
    pub steps: Vec<TraceStep>,
    /// Witnesses refer to the original matrix.
    pub outcome: TraceOutcome,
}

impl ReductionTrace {
    fn failed(input: &PolyMatrix, kind: FailureKind, detail: impl Into<String>) -> Self {
        ReductionTrace {
            input: input.clone(),
            conjugation: None,
            steps: Vec::new(),
            outcome: TraceOutcome::Failed(Failure {
                kind,
                detail: detail.into(),
            }),
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self.outcome, TraceOutcome::Success { .. })
    }

    /// `(U, V, S)` with `U * F * V = S`.
    pub fn witnesses(&self) -> Option<(&PolyMatrix, &PolyMatrix, &PolyMatrix)> {
        match &self.outcome {
            TraceOutcome::Success { u, v, s } => Some((u, v, s)),
            TraceOutcome::Failed(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&Failure> {
        match &self.outcome {
            TraceOutcome::Failed(f) => Some(f),
            TraceOutcome::Success { .. } => None,
        }
    }

    /// Accumulated left and right factors after each step.
    pub fn accumulated(&self) -> Vec<(PolyMatrix, PolyMatrix)> {
        let vars = self.input.vars();
        let mut left = PolyMatrix::identity(vars, self.input.rows());
        let mut right = PolyMatrix::identity(vars, self.input.cols());
        self.steps
            .iter()
            .map(|s| {
                left = &s.left * &left;
                right = &right * &s.right;
                (left.clone(), right.clone())
            })
            .collect()
    }

    /// Whether every recorded state equals the accumulated factors applied
    /// to the input.
    pub fn replays(&self) -> bool {
        self.steps
            .iter()
            .zip(self.accumulated())
            .all(|(s, (l, r))| &(&l * &self.input) * &r == s.state)
    }
}

fn is_smith_form(f: &PolyMatrix) -> bool {
    let d = f.diagonal();
    f.is_diagonal()
        && d.iter().all(|p| p.is_zero() || p.leading_coeff() == num_traits::One::one())
        && d.windows(2).all(|w| w[1].is_zero() || w[1].is_divisible_by(&w[0]))
}

/// Linear factors in extraction order, or why the shape gives none.
fn extraction_plan(
    factors: &[ChainFactor],
    tail: &Polynomial,
    tail_var: usize,
) -> std::result::Result<Vec<Polynomial>, Failure> {
    let vars = tail.vars();
    let split = rational_roots(tail).ok_or_else(|| Failure {
        kind: FailureKind::UnsupportedShape,
        detail: format!("tail `{tail}` is not univariate"),
    })?;
    if !split.splits() {
        return Err(Failure {
            kind: FailureKind::UnsupportedShape,
            detail: format!(
                "tail `{tail}` keeps the factor `{}` without rational roots",
                split.residual
            ),
        });
    }
    let v = split.var.unwrap_or(tail_var);
    let mut plan: Vec<Polynomial> = split
        .roots
        .iter()
        .map(|(c, _)| &Polynomial::var(vars, v) - &Polynomial::constant(vars, c.clone()))
        .collect();
    let mut chain: Vec<&ChainFactor> = factors.iter().collect();
    chain.sort_by(|a, b| b.var.cmp(&a.var));
    plan.extend(chain.into_iter().map(ChainFactor::polynomial));
    Ok(plan)
}

/// Reduce a square matrix of the given determinant shape to its Smith
/// form, recording every step.
///
/// Shape-level failures (no zero left prime kernel, no completion within
/// `degree_bound`, an unsupported shape) end the trace with a failure
/// marker. Errors are reserved for misuse and internal inconsistencies.
pub fn reduce_to_smith(f: &PolyMatrix, shape: &DetShape, degree_bound: u32) -> Result<ReductionTrace> {
    if !f.is_square() {
        return Ok(ReductionTrace::failed(
            f,
            FailureKind::UnsupportedShape,
            "witnesses are only constructed for square matrices",
        ));
    }
    if f.determinant()?.is_zero() {
        return Ok(ReductionTrace::failed(
            f,
            FailureKind::UnsupportedShape,
            "witnesses are only constructed for matrices of full rank",
        ));
    }
    if is_smith_form(f) {
        let id = PolyMatrix::identity(f.vars(), f.rows());
        return Ok(ReductionTrace {
            input: f.clone(),
            conjugation: None,
            steps: Vec::new(),
            outcome: TraceOutcome::Success {
                u: id.clone(),
                v: id,
                s: f.clone(),
            },
        });
    }
    match shape {
        DetShape::Unsupported { reason } => Ok(ReductionTrace::failed(
            f,
            FailureKind::UnsupportedShape,
            reason.clone(),
        )),
        DetShape::Chain {
            factors,
            tail,
            tail_var,
        } => match extraction_plan(factors, tail, *tail_var) {
            Ok(plan) => run_plan(f, &plan, degree_bound),
            Err(e) => Ok(ReductionTrace::failed(f, e.kind, e.detail)),
        },
        DetShape::UnivariateDr { var, poly } => match extraction_plan(&[], poly, *var) {
            Ok(plan) => run_plan(f, &plan, degree_bound),
            Err(e) => Ok(ReductionTrace::failed(f, e.kind, e.detail)),
        },
        DetShape::Linear { forms, .. } => reduce_linear(f, forms, degree_bound),
    }
}

fn reduce_linear(
    f: &PolyMatrix,
    forms: &[crate::criteria::LinearForm],
    degree_bound: u32,
) -> Result<ReductionTrace> {
    let phi = build_automorphism(forms, f.vars())?;
    let conj = phi.apply(f, Direction::Inverse)?;
    let det = conj.determinant()?;
    let mut trace = match detect_chain_shape(&det) {
        DetShape::Chain {
            factors,
            tail,
            tail_var,
        } => match extraction_plan(&factors, &tail, tail_var) {
            Ok(plan) => run_plan(&conj, &plan, degree_bound)?,
            Err(e) => ReductionTrace::failed(&conj, e.kind, e.detail),
        },
        other => ReductionTrace::failed(
            &conj,
            FailureKind::UnsupportedShape,
            format!("conjugated determinant is not a chain: {other}"),
        ),
    };
    trace.conjugation = Some(phi.images(Direction::Forward));
    if let TraceOutcome::Success { u, v, s } = &trace.outcome {
        let mut u = phi.apply(u, Direction::Forward)?;
        let v = phi.apply(v, Direction::Forward)?;
        let mut s = phi.apply(s, Direction::Forward)?;
        for (i, c) in fold::monic_rows(&s.diagonal()).iter().enumerate() {
            u.scale_row(i, c);
            s.scale_row(i, c);
        }
        if !verify_witness(f, &u, &v, &s, Orientation::Reduced)? {
            return Err(internal("witnesses mapped back through the automorphism do not verify"));
        }
        trace.outcome = TraceOutcome::Success { u, v, s };
    }
    Ok(trace)
}

/// Alternate row and column size reduction of the cofactor `G` of the
/// state `diag(d) * G`, recording each round as a trace step.
fn shrink(
    d: &[Polynomial],
    g: &mut PolyMatrix,
    state: &mut PolyMatrix,
    linv: &mut PolyMatrix,
    rv: &mut PolyMatrix,
    steps: &mut Vec<TraceStep>,
) -> Result<()> {
    const MAX_ROUNDS: usize = 8;
    let vars = g.vars().clone();
    let (l, m) = (g.rows(), g.cols());
    let ones = vec![Polynomial::one(&vars); m];
    for _ in 0..MAX_ROUNDS {
        let (n, rows_done) = size_reduce(d, g)?;
        let (nt, cols_done) = size_reduce(&ones, &rows_done.transpose())?;
        let r = nt.transpose();
        let id_l = PolyMatrix::identity(&vars, l);
        let id_m = PolyMatrix::identity(&vars, m);
        if n == id_l && r == id_m {
            break;
        }
        *g = cols_done.transpose();
        *state = &(&n * &*state) * &r;
        *linv = &n * &*linv;
        *rv = &*rv * &r;
        steps.push(TraceStep {
            description: "shrink the cofactor".into(),
            left: n,
            right: r,
            state: state.clone(),
            aux: Vec::new(),
        });
    }
    Ok(())
}

fn run_plan(f: &PolyMatrix, plan: &[Polynomial], degree_bound: u32) -> Result<ReductionTrace> {
    let vars = f.vars().clone();
    let l = f.rows();
    let id = PolyMatrix::identity(&vars, l);
    let mut steps = Vec::new();
    let mut linv = id.clone();
    let mut rv = id.clone();
    let mut d = vec![Polynomial::one(&vars); l];
    let mut g = f.clone();
    let mut det_g = f.determinant()?;
    let mut state = f.clone();
    let stop = |steps: Vec<TraceStep>, failure: Failure| ReductionTrace {
        input: f.clone(),
        conjugation: None,
        steps,
        outcome: TraceOutcome::Failed(failure),
    };
    shrink(&d, &mut g, &mut state, &mut linv, &mut rv, &mut steps)?;
    for p in plan {
        let (v, img) = factor_substitution(p)
            .ok_or_else(|| internal(format!("planned factor `{p}` is not linear")))?;
        while det_g.is_divisible_by(p) {
            let k = g.substitute_indexed(&[(v, img.clone())])?.rank()?;
            let (u, g2) = match extract_factor(&g, p, k, degree_bound) {
                Ok(x) => x,
                Err(ReduceError::Failure(e)) => return Ok(stop(steps, e.at(format!("extract `{p}` at order {k}")))),
                Err(ReduceError::Core(e)) => return Err(e),
            };
            let mut e_diag = vec![Polynomial::one(&vars); l];
            for x in e_diag.iter_mut().skip(k) {
                *x = p.clone();
            }
            let dm = PolyMatrix::diag(&vars, &d);
            let b = &(&dm * &u.inverse_unimodular()?) * &PolyMatrix::diag(&vars, &e_diag);
            let folded = if d.iter().all(|x| x == &d[0]) {
                Fold {
                    moves: vec![FoldMove::Left(u.clone())],
                    left: u.clone(),
                    right: id.clone(),
                    result: &dm * &PolyMatrix::diag(&vars, &e_diag),
                }
            } else {
                match fold_diagonal(&b, degree_bound) {
                    Ok(x) => x,
                    Err(ReduceError::Failure(e)) => return Ok(stop(steps, e.at(format!("fold after `{p}` at order {k}")))),
                    Err(ReduceError::Core(e)) => return Err(e),
                }
            };
            let du = u.determinant()?;
            let dq = folded.right.determinant()?;
            let ratio = du
                .constant_value()
                .zip(dq.constant_value())
                .map(|(a, b)| a / b)
                .ok_or_else(|| internal("extraction or fold factor is not unimodular"))?;
            det_g = det_g
                .exact_div(&p.pow((l - k) as u32))
                .map_err(|e| internal(format!("determinant bookkeeping: {e}")))?
                .scale(&ratio);
            g = &folded.right.inverse_unimodular()? * &g2;
            linv = &folded.left * &linv;
            d = folded.result.diagonal();
            state = &folded.left * &state;
            steps.push(TraceStep {
                description: format!("extract `{p}` at order {k} and fold the diagonal"),
                left: folded.left,
                right: id.clone(),
                state: state.clone(),
                aux: vec![
                    ("extraction".into(), u),
                    ("cofactor".into(), g2),
                    ("fold-input".into(), b),
                    ("fold-right".into(), folded.right),
                ],
            });
            shrink(&d, &mut g, &mut state, &mut linv, &mut rv, &mut steps)?;
        }
    }
    if !det_g.is_nonzero_constant() {
        return Ok(stop(
            steps,
            Failure {
                kind: FailureKind::UnsupportedShape,
                detail: format!("determinant factor `{det_g}` is left after all extractions"),
            },
        ));
    }
    let ginv = g.inverse_unimodular()?;
    let v = &rv * &ginv;
    let s = PolyMatrix::diag(&vars, &d);
    steps.push(TraceStep {
        description: "invert the unimodular cofactor".into(),
        left: id,
        right: ginv,
        state: s.clone(),
        aux: Vec::new(),
    });
    if !verify_witness(f, &linv, &v, &s, Orientation::Reduced)? {
        return Err(internal("reduction witnesses do not verify"));
    }
    Ok(ReductionTrace {
        input: f.clone(),
        conjugation: None,
        steps,
        outcome: TraceOutcome::Success { u: linv, v, s },
    })
}
