//! Determinant-shape classification and the equivalence decision.
//!
//! A square matrix of full rank is classified by its determinant, anything
//! else by `d_r` with `r` the rank. For a supported shape the matrix is
//! equivalent to its Smith form exactly when every `J_k`, `k = 1..r`, is
//! the unit ideal.

mod automorphism;
mod shape;

use std::fmt;

use rayon::prelude::*;

use crate::error::{usage, Result};
use crate::polymat::{MinorReport, PolyMatrix};
use crate::polyring::{MonomialOrder, Polynomial};

pub use automorphism::{build_automorphism, Automorphism, Direction};
pub use shape::{
    detect_chain_shape, detect_univariate, linear_shape_from_hints, verify_linear_shape,
    ChainFactor, DetShape, LinearForm,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
    UndecidableShape,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equivalent => "equivalent",
            Verdict::NotEquivalent => "not-equivalent",
            Verdict::UndecidableShape => "undecidable-shape",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Verdict::Equivalent, Verdict::NotEquivalent, Verdict::UndecidableShape]
            .into_iter()
            .find(|v| v.as_str() == s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which criterion decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Square, determinant `(z_1 - f) h`.
    SquareSingleChain,
    /// Square, determinant a chain of several factors times `h`.
    SquareChain,
    /// Square, determinant a product of independent linear forms times `h`.
    SquareLinear,
    /// Non-square or rank deficient, `d_r = (z_1 - f) h`.
    RectSingleChain,
    RectChain,
    RectLinear,
    /// The classified polynomial involves at most one variable.
    UnivariateMinor,
    None,
}

impl Theorem {
    const ALL: [Theorem; 8] = [
        Theorem::SquareSingleChain,
        Theorem::SquareChain,
        Theorem::SquareLinear,
        Theorem::RectSingleChain,
        Theorem::RectChain,
        Theorem::RectLinear,
        Theorem::UnivariateMinor,
        Theorem::None,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::SquareSingleChain => "square-single-chain",
            Theorem::SquareChain => "square-chain",
            Theorem::SquareLinear => "square-linear",
            Theorem::RectSingleChain => "rect-single-chain",
            Theorem::RectChain => "rect-chain",
            Theorem::RectLinear => "rect-linear",
            Theorem::UnivariateMinor => "univariate-minor",
            Theorem::None => "none",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `d_k` and the unit-ideal verdict for `J_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct KReport {
    pub k: usize,
    pub dk: Polynomial,
    pub jk_unit: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub shape: DetShape,
    /// The determinant (square, full rank) or `d_r` that was classified.
    pub classified: Polynomial,
    pub rank: usize,
    pub per_k: Vec<KReport>,
    pub verdict: Verdict,
    pub theorem: Theorem,
    pub witnesses: Option<(PolyMatrix, PolyMatrix)>,
}

/// Classify `p`: linear hints first, then chain, then univariate.
pub fn classify(p: &Polynomial, hints: Option<&[LinearForm]>) -> Result<DetShape> {
    if let Some(g) = hints {
        let s = linear_shape_from_hints(p, g)?;
        if s.is_supported() {
            return Ok(s);
        }
    }
    let chain = detect_chain_shape(p);
    if chain.is_supported() {
        return Ok(chain);
    }
    Ok(detect_univariate(p).unwrap_or(chain))
}

fn theorem_for(shape: &DetShape, square: bool) -> Theorem {
    match shape {
        DetShape::Chain { factors, .. } => match (factors.len(), square) {
            (0, _) => Theorem::UnivariateMinor,
            (1, true) => Theorem::SquareSingleChain,
            (_, true) => Theorem::SquareChain,
            (1, false) => Theorem::RectSingleChain,
            (_, false) => Theorem::RectChain,
        },
        DetShape::Linear { .. } if square => Theorem::SquareLinear,
        DetShape::Linear { .. } => Theorem::RectLinear,
        DetShape::UnivariateDr { .. } => Theorem::UnivariateMinor,
        DetShape::Unsupported { .. } => Theorem::None,
    }
}

/// Decide equivalence to the Smith form. Unit-ideal tests run under
/// degree reverse lex; the verdict does not depend on the order.
pub fn check_equivalence(f: &PolyMatrix, hints: Option<&[LinearForm]>) -> Result<EquivalenceReport> {
    check_equivalence_with(f, hints, &MonomialOrder::degrevlex(f.vars().len()))
}

pub fn check_equivalence_with(
    f: &PolyMatrix,
    hints: Option<&[LinearForm]>,
    order: &MonomialOrder,
) -> Result<EquivalenceReport> {
    if order.nvars() != f.vars().len() {
        return Err(usage("monomial order arity does not match the variable set"));
    }
    let rank = f.rank()?;
    let reports: Vec<MinorReport> = (1..=rank)
        .into_par_iter()
        .map(|k| f.minor_report(k))
        .collect::<Result<_>>()?;
    let square_full = f.is_square() && rank == f.rows();
    let classified = match reports.last() {
        Some(r) if square_full => r.minors[0].clone(),
        Some(r) => r.dk.clone(),
        None => Polynomial::zero(f.vars()),
    };
    let shape = if rank == 0 {
        DetShape::Unsupported {
            reason: "the zero matrix has no minors to classify".into(),
        }
    } else {
        classify(&classified, hints)?
    };
    let jks: Vec<bool> = reports
        .par_iter()
        .map(|r| crate::polymat::jk_from_report(r, order))
        .collect::<Result<_>>()?;
    let per_k: Vec<KReport> = reports
        .into_iter()
        .zip(jks)
        .map(|(r, jk_unit)| KReport {
            k: r.k,
            dk: r.dk,
            jk_unit,
        })
        .collect();
    let verdict = if !shape.is_supported() {
        Verdict::UndecidableShape
    } else if per_k.iter().all(|k| k.jk_unit) {
        Verdict::Equivalent
    } else {
        Verdict::NotEquivalent
    };
    Ok(EquivalenceReport {
        theorem: theorem_for(&shape, square_full),
        shape,
        classified,
        rank,
        per_k,
        verdict,
        witnesses: None,
    })
}

/// How a witness triple relates to the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `U * F * V = S`.
    Reduced,
    /// `F = U * S * V`.
    Factored,
}

/// True iff `U` and `V` are unimodular and the chosen identity holds.
pub fn verify_witness(
    f: &PolyMatrix,
    u: &PolyMatrix,
    v: &PolyMatrix,
    s: &PolyMatrix,
    orientation: Orientation,
) -> Result<bool> {
    let (l, m) = (f.rows(), f.cols());
    let shapes_ok = u.rows() == l
        && u.cols() == l
        && v.rows() == m
        && v.cols() == m
        && s.rows() == l
        && s.cols() == m;
    if !shapes_ok {
        return Err(usage(format!(
            "witness shapes U {}x{}, V {}x{}, S {}x{} do not fit a {l}x{m} matrix",
            u.rows(),
            u.cols(),
            v.rows(),
            v.cols(),
            s.rows(),
            s.cols()
        )));
    }
    if !u.is_unimodular()? || !v.is_unimodular()? {
        return Ok(false);
    }
    Ok(match orientation {
        Orientation::Reduced => &(u * f) * v == *s,
        Orientation::Factored => &(u * s) * v == *f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarSet;

    #[test]
    fn coordinate_diagonal_is_not_equivalent() {
        let xy = VarSet::new(["x", "y"]).unwrap();
        let f = PolyMatrix::from_strs(&xy, &[["x", "0"], ["0", "y"]]).unwrap();
        let r = check_equivalence(&f, None).unwrap();
        assert!(matches!(r.shape, DetShape::Chain { .. }));
        assert_eq!(r.theorem, Theorem::SquareSingleChain);
        assert!(!r.per_k[0].jk_unit);
        assert_eq!(r.verdict, Verdict::NotEquivalent);
    }

    #[test]
    fn unsupported_shape_is_undecidable() {
        let xyz = VarSet::new(["x", "y", "z"]).unwrap();
        let f = PolyMatrix::from_strs(&xyz, &[["x^2", "y"], ["0", "z^2 + 1"]]).unwrap();
        let r = check_equivalence(&f, None).unwrap();
        assert_eq!(r.verdict, Verdict::UndecidableShape);
        assert_eq!(r.theorem, Theorem::None);
        assert_eq!(r.per_k.len(), 2);
    }

    #[test]
    fn rectangular_uses_dr() {
        let xyz = VarSet::new(["x", "y", "z"]).unwrap();
        let f = PolyMatrix::from_strs(&xyz, &[["1", "0", "0"], ["0", "(x - y*z)*(z + 1)", "0"]]).unwrap();
        let r = check_equivalence(&f, None).unwrap();
        assert_eq!(r.rank, 2);
        assert_eq!(r.theorem, Theorem::RectSingleChain);
        assert_eq!(r.verdict, Verdict::Equivalent);
    }

    #[test]
    fn univariate_in_first_variable() {
        let xyz = VarSet::new(["x", "y", "z"]).unwrap();
        let f = PolyMatrix::from_strs(&xyz, &[["x^2", "0"], ["1", "x"]]).unwrap();
        let r = check_equivalence(&f, None).unwrap();
        assert!(matches!(r.shape, DetShape::UnivariateDr { var: 0, .. }));
        assert_eq!(r.theorem, Theorem::UnivariateMinor);
    }

    #[test]
    fn trivial_witness() {
        let xy = VarSet::new(["x", "y"]).unwrap();
        let f = PolyMatrix::from_strs(&xy, &[["x", "y"], ["1", "x*y"]]).unwrap();
        let i = PolyMatrix::identity(&xy, 2);
        assert!(verify_witness(&f, &i, &i, &f, Orientation::Reduced).unwrap());
        assert!(verify_witness(&f, &i, &i, &f, Orientation::Factored).unwrap());
        let bad = PolyMatrix::diag(&xy, &[f.get(0, 0).clone(), Polynomial::one(&xy)]);
        assert!(!verify_witness(&f, &bad, &i, &f, Orientation::Reduced).unwrap());
        assert!(verify_witness(&f, &PolyMatrix::identity(&xy, 3), &i, &f, Orientation::Reduced).is_err());
    }
}
