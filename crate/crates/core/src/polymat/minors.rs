use rayon::prelude::*;

use super::{combinations, PolyMatrix};
use crate::error::{internal, usage, Error, Result};
use crate::groebner::{is_unit_ideal, IdealGens};
use crate::polyring::{gcd_all, MonomialOrder, Polynomial};

/// All `k x k` minors with their gcd `d_k` and the reduced minors.
#[derive(Debug, Clone, PartialEq)]
pub struct MinorReport {
    pub k: usize,
    /// Minors ordered by row index set (outer) then column index set
    /// (inner), both lexicographic.
    pub minors: Vec<Polynomial>,
    pub dk: Polynomial,
    pub reduced: Vec<Polynomial>,
}

/// Invariant factors `Phi_1 | Phi_2 | ... | Phi_r` of a matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantFactorList {
    pub factors: Vec<Polynomial>,
    pub rank: usize,
    pub ambient: (usize, usize),
}

impl InvariantFactorList {
    /// The Smith form `(diag(Phi) | 0)` in the ambient shape.
    pub fn to_matrix(&self, like: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::rect_diag(like.vars(), self.ambient.0, self.ambient.1, &self.factors)
    }
}

impl PolyMatrix {
    /// All `k x k` minors in the documented order, evaluated in parallel.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(usage(format!(
                "minor order {k} out of range for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let index: Vec<(&Vec<usize>, &Vec<usize>)> = row_sets
            .iter()
            .flat_map(|r| col_sets.iter().map(move |c| (r, c)))
            .collect();
        index
            .par_iter()
            .map(|(r, c)| self.submatrix(r, c).determinant())
            .collect()
    }

    pub fn minor_report(&self, k: usize) -> Result<MinorReport> {
        let minors = self.minors(k)?;
        let dk = gcd_all(&self.vars, &minors);
        let reduced = if dk.is_zero() {
            minors.clone()
        } else {
            minors
                .par_iter()
                .map(|m| {
                    m.exact_div(&dk)
                        .map_err(|e| internal(format!("reduced minor: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(MinorReport {
            k,
            minors,
            dk,
            reduced,
        })
    }

    /// `d_k`, the monic gcd of the `k x k` minors (zero when all vanish).
    pub fn dk(&self, k: usize) -> Result<Polynomial> {
        Ok(self.minor_report(k)?.dk)
    }

    /// Whether the reduced `k x k` minors generate the unit ideal.
    pub fn jk_is_unit(&self, k: usize, order: &MonomialOrder) -> Result<bool> {
        jk_from_report(&self.minor_report(k)?, order)
    }

    pub fn theoretical_smith(&self) -> Result<InvariantFactorList> {
        let r = self.rank()?;
        let mut factors = Vec::with_capacity(r);
        let mut prev = Polynomial::one(&self.vars);
        for i in 1..=r {
            let di = self.dk(i)?;
            if di.is_zero() {
                return Err(internal(format!("d_{i} vanishes below the rank {r}")));
            }
            let phi = di
                .exact_div(&prev)
                .map_err(|e| internal(format!("d_{} does not divide d_{i}: {e}", i - 1)))?
                .monic();
            if let Some(last) = factors.last() {
                if !phi.is_divisible_by(last) {
                    return Err(internal(format!(
                        "divisibility chain broken: ({last}) does not divide ({phi})"
                    )));
                }
            }
            factors.push(phi);
            prev = di;
        }
        Ok(InvariantFactorList {
            factors,
            rank: r,
            ambient: (self.rows, self.cols),
        })
    }

    /// Zero left prime: the maximal minors of a wide matrix of full row
    /// rank generate the unit ideal.
    pub fn is_zlp(&self) -> Result<bool> {
        if self.rows > self.cols {
            return Err(Error::Shape(format!(
                "ZLP test needs rows <= cols, got {}x{}",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(true);
        }
        let report = self.minor_report(self.rows)?;
        if report.dk.is_zero() {
            return Err(Error::Rank("matrix does not have full row rank".into()));
        }
        if !report.dk.is_nonzero_constant() {
            return Ok(false);
        }
        jk_from_report(&report, &MonomialOrder::degrevlex(self.vars.len()))
    }

    /// Zero right prime: the transpose is zero left prime.
    pub fn is_zrp(&self) -> Result<bool> {
        self.transpose().is_zlp()
    }
}

/// Unit-ideal test on the reduced minors of a report.
pub fn jk_from_report(report: &MinorReport, order: &MonomialOrder) -> Result<bool> {
    if report.dk.is_zero() {
        return Err(Error::Rank(format!(
            "all {0}x{0} minors vanish; J_{0} is undefined above the rank",
            report.k
        )));
    }
    if report.reduced.iter().any(Polynomial::is_nonzero_constant) {
        return Ok(true);
    }
    let gens = IdealGens::new(report.reduced.clone())?;
    Ok(is_unit_ideal(&gens, order))
}
