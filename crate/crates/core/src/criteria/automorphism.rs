use num_traits::{One, Zero};

use super::LinearForm;
use crate::error::{usage, Error, Result};
use crate::linalg::{self, QMatrix};
use crate::polymat::PolyMatrix;
use crate::polyring::{Coefficient, Polynomial, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// The ring automorphism `z_i -> g_i` (`i < n`), `z_n -> z_n`, stored as an
/// invertible `(n+1) x (n+1)` matrix acting on `(z_1, ..., z_n, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Automorphism {
    vars: VarSet,
    a: QMatrix,
    a_inv: QMatrix,
}

impl Automorphism {
    pub fn matrix(&self) -> &QMatrix {
        &self.a
    }

    pub fn inverse_matrix(&self) -> &QMatrix {
        &self.a_inv
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Image of each variable under the map in `direction`.
    pub fn images(&self, direction: Direction) -> Vec<Polynomial> {
        let m = match direction {
            Direction::Forward => &self.a,
            Direction::Inverse => &self.a_inv,
        };
        let n = self.vars.len();
        (0..n)
            .map(|i| {
                let mut p = Polynomial::constant(&self.vars, m[i][n].clone());
                for (j, c) in m[i][..n].iter().enumerate() {
                    if !c.is_zero() {
                        p += &Polynomial::var(&self.vars, j).scale(c);
                    }
                }
                p
            })
            .collect()
    }

    pub fn apply_poly(&self, p: &Polynomial, direction: Direction) -> Result<Polynomial> {
        let assignments: Vec<(usize, Polynomial)> =
            self.images(direction).into_iter().enumerate().collect();
        p.substitute_indexed(&assignments)
    }

    pub fn apply(&self, f: &PolyMatrix, direction: Direction) -> Result<PolyMatrix> {
        if f.vars() != &self.vars {
            return Err(usage("matrix and automorphism use different variable sets"));
        }
        let assignments: Vec<(usize, Polynomial)> =
            self.images(direction).into_iter().enumerate().collect();
        f.substitute_indexed(&assignments)
    }
}

/// Build the automorphism sending `z_i` to `g_i`. Fewer than `n - 1` forms
/// are completed with standard basis rows outside their span.
pub fn build_automorphism(g: &[LinearForm], vars: &VarSet) -> Result<Automorphism> {
    let n = vars.len();
    if n == 0 || g.len() > n - 1 {
        return Err(usage(format!(
            "at most {} linear forms over {} variables",
            n.saturating_sub(1),
            n
        )));
    }
    if g.iter().any(|f| f.coeffs.len() != n - 1) {
        return Err(usage("linear form arity does not match the variable set"));
    }
    let coeff_rows: QMatrix = g.iter().map(|f| f.coeffs.clone()).collect();
    if linalg::rank(&coeff_rows) < g.len() {
        return Err(Error::Independence(
            g.iter()
                .map(|f| f.to_polynomial(vars).to_string())
                .collect::<Vec<_>>()
                .join(", "),
        ));
    }
    let mut basis = coeff_rows;
    let unit = |j: usize, len: usize| -> Vec<Coefficient> {
        (0..len)
            .map(|k| if k == j { Coefficient::one() } else { Coefficient::zero() })
            .collect()
    };
    let mut a: QMatrix = Vec::with_capacity(n + 1);
    for f in g {
        let mut row = f.coeffs.clone();
        row.push(Coefficient::zero());
        row.push(f.constant.clone());
        a.push(row);
    }
    for j in 0..n - 1 {
        if a.len() == n - 1 {
            break;
        }
        let e = unit(j, n - 1);
        let mut trial = basis.clone();
        trial.push(e.clone());
        if linalg::rank(&trial) == trial.len() {
            basis = trial;
            let mut row = e;
            row.push(Coefficient::zero());
            row.push(Coefficient::zero());
            a.push(row);
        }
    }
    a.push(unit(n - 1, n + 1));
    a.push(unit(n, n + 1));
    let a_inv = linalg::inverse(&a).expect("completed system is invertible");
    Ok(Automorphism {
        vars: vars.clone(),
        a,
        a_inv,
    })
}
