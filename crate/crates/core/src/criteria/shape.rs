use std::fmt;

use crate::error::{usage, Result};
use crate::linalg;
use crate::polyring::{Coefficient, Polynomial, VarSet};

/// Affine form `a_1 z_1 + ... + a_{n-1} z_{n-1} + b` free of the last
/// variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<Coefficient>,
    pub constant: Coefficient,
}

impl LinearForm {
    /// Read a polynomial of total degree at most one that does not involve
    /// the last variable and is not constant.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let n = p.nvars();
        if p.total_degree().unwrap_or(0) > 1 {
            return Err(usage(format!("`{p}` is not linear")));
        }
        if p.contains_var(n - 1) {
            return Err(usage(format!(
                "linear form `{p}` involves the last variable `{}`",
                p.vars().name(n - 1)
            )));
        }
        let mut coeffs = vec![Coefficient::default(); n - 1];
        let mut constant = Coefficient::default();
        for (m, c) in p.terms() {
            match m.exponents().iter().position(|&e| e > 0) {
                Some(v) => coeffs[v] = c.clone(),
                None => constant = c.clone(),
            }
        }
        let form = LinearForm { coeffs, constant };
        if form.coeffs.iter().all(|c| c == &Coefficient::default()) {
            return Err(usage(format!("`{p}` is constant, not a linear form")));
        }
        Ok(form)
    }

    pub fn to_polynomial(&self, vars: &VarSet) -> Polynomial {
        let mut p = Polynomial::constant(vars, self.constant.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            p += &Polynomial::var(vars, i).scale(c);
        }
        p
    }
}

/// A chain factor `z_var - f` with `f` in the later variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainFactor {
    pub var: usize,
    pub f: Polynomial,
}

impl ChainFactor {
    pub fn polynomial(&self) -> Polynomial {
        &Polynomial::var(self.f.vars(), self.var) - &self.f
    }
}

/// Classification of a determinant or of `d_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DetShape {
    /// `prod (z_i - f_i) * tail` with `tail` in the last variable (or
    /// constant). Chains may skip variables.
    Chain {
        factors: Vec<ChainFactor>,
        tail: Polynomial,
        tail_var: usize,
    },
    /// `prod g_i * tail` with independent affine forms `g_i` in the first
    /// `n - 1` variables and `tail` in the last.
    Linear {
        forms: Vec<LinearForm>,
        tail: Polynomial,
    },
    /// A polynomial in the single variable `var`.
    UnivariateDr { var: usize, poly: Polynomial },
    Unsupported { reason: String },
}

impl DetShape {
    pub fn is_supported(&self) -> bool {
        !matches!(self, DetShape::Unsupported { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            DetShape::Chain { .. } => "chain",
            DetShape::Linear { .. } => "linear",
            DetShape::UnivariateDr { .. } => "univariate",
            DetShape::Unsupported { .. } => "unsupported",
        }
    }

    /// Product of all factors; equals the classified polynomial.
    pub fn reconstruct(&self, vars: &VarSet) -> Option<Polynomial> {
        match self {
            DetShape::Chain { factors, tail, .. } => Some(
                factors
                    .iter()
                    .fold(tail.clone(), |acc, f| &acc * &f.polynomial()),
            ),
            DetShape::Linear { forms, tail } => Some(
                forms
                    .iter()
                    .fold(tail.clone(), |acc, g| &acc * &g.to_polynomial(vars)),
            ),
            DetShape::UnivariateDr { poly, .. } => Some(poly.clone()),
            DetShape::Unsupported { .. } => None,
        }
    }
}

impl fmt::Display for DetShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetShape::Chain { factors, tail, .. } => {
                write!(f, "chain")?;
                for c in factors {
                    write!(f, " ({})", c.polynomial())?;
                }
                write!(f, " tail ({tail})")
            }
            DetShape::Linear { forms, tail } => {
                write!(f, "linear")?;
                for g in forms {
                    write!(f, " ({})", g.to_polynomial(tail.vars()))?;
                }
                write!(f, " tail ({tail})")
            }
            DetShape::UnivariateDr { var, poly } => {
                write!(f, "univariate in {} ({poly})", poly.vars().name(*var))
            }
            DetShape::Unsupported { reason } => write!(f, "unsupported: {reason}"),
        }
    }
}

fn unsupported(reason: impl Into<String>) -> DetShape {
    DetShape::Unsupported {
        reason: reason.into(),
    }
}

/// Greedy chain detection in declared variable order.
///
/// For each of the first `n - 1` variables in which the residual has degree
/// one, split off `z_i - f_i` with `f_i = -c_0 / c_1`; the residual must end
/// up in the last variable alone.
pub fn detect_chain_shape(p: &Polynomial) -> DetShape {
    if p.is_zero() {
        return unsupported("the zero polynomial has no shape");
    }
    let n = p.nvars();
    let vars = p.vars();
    let mut residual = p.clone();
    let mut factors = Vec::new();
    for i in 0..n.saturating_sub(1) {
        match residual.degree_in(i).unwrap_or(0) {
            0 => continue,
            1 => {
                let c = residual.univar_view(i);
                let Ok(minus_f) = c[0].exact_div(&c[1]) else {
                    return unsupported(format!(
                        "no factor {} - f with f in later variables",
                        vars.name(i)
                    ));
                };
                if (0..=i).any(|v| minus_f.contains_var(v)) {
                    return unsupported(format!(
                        "factor in {} depends on earlier variables",
                        vars.name(i)
                    ));
                }
                residual = c[1].clone();
                factors.push(ChainFactor {
                    var: i,
                    f: -minus_f,
                });
            }
            d => {
                return unsupported(format!("degree {d} in {}", vars.name(i)));
            }
        }
    }
    if (0..n - 1).any(|v| residual.contains_var(v)) {
        return unsupported(format!("residual ({residual}) is not univariate in the last variable"));
    }
    DetShape::Chain {
        factors,
        tail: residual,
        tail_var: n - 1,
    }
}

/// Check `p = g_1 ... g_m * h` (up to a constant absorbed into `h`) with
/// independent forms and `h` in the last variable.
pub fn verify_linear_shape(p: &Polynomial, g: &[LinearForm], h: &Polynomial) -> Result<DetShape> {
    let n = p.nvars();
    if g.is_empty() || g.len() > n.saturating_sub(1) {
        return Err(usage(format!(
            "expected between 1 and {} linear forms, got {}",
            n.saturating_sub(1),
            g.len()
        )));
    }
    if g.iter().any(|f| f.coeffs.len() != n - 1) {
        return Err(usage("linear form arity does not match the variable set"));
    }
    if p.vars() != h.vars() {
        return Err(usage("tail uses a different variable set"));
    }
    let rows: linalg::QMatrix = g.iter().map(|f| f.coeffs.clone()).collect();
    if linalg::rank(&rows) < g.len() {
        return Ok(unsupported("linear forms are not linearly independent"));
    }
    if (0..n - 1).any(|v| h.contains_var(v)) {
        return Ok(unsupported(format!("tail ({h}) is not univariate in the last variable")));
    }
    let vars = p.vars();
    let prod = g.iter().fold(h.clone(), |acc, f| &acc * &f.to_polynomial(vars));
    let ratio = match p.exact_div(&prod) {
        Ok(r) if r.is_nonzero_constant() => r,
        _ => return Ok(unsupported("product of the linear forms and tail differs from the polynomial")),
    };
    Ok(DetShape::Linear {
        forms: g.to_vec(),
        tail: h * &ratio,
    })
}

/// Linear shape from hints alone: the tail is `p / prod g_i`.
pub fn linear_shape_from_hints(p: &Polynomial, g: &[LinearForm]) -> Result<DetShape> {
    let vars = p.vars();
    let prod = g
        .iter()
        .fold(Polynomial::one(vars), |acc, f| &acc * &f.to_polynomial(vars));
    let h = p.exact_div(&prod).unwrap_or_else(|_| p.clone());
    verify_linear_shape(p, g, &h)
}

/// `UnivariateDr` when `p` involves exactly one variable.
pub fn detect_univariate(p: &Polynomial) -> Option<DetShape> {
    p.sole_variable().map(|var| DetShape::UnivariateDr {
        var,
        poly: p.clone(),
    })
}
