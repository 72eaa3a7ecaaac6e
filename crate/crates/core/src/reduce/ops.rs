use std::fmt;

use crate::polymat::PolyMatrix;
use crate::polyring::{Coefficient, Polynomial, VarSet};

/// A single elementary row or column operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementaryOp {
    RowSwap(usize, usize),
    ColSwap(usize, usize),
    /// Multiply a row by a nonzero constant.
    RowScale(usize, Coefficient),
    ColScale(usize, Coefficient),
    /// `row[dst] += multiplier * row[src]`.
    RowAdd {
        dst: usize,
        src: usize,
        multiplier: Polynomial,
    },
    /// `col[dst] += multiplier * col[src]`.
    ColAdd {
        dst: usize,
        src: usize,
        multiplier: Polynomial,
    },
}

impl ElementaryOp {
    pub fn is_row_op(&self) -> bool {
        matches!(
            self,
            ElementaryOp::RowSwap(..) | ElementaryOp::RowScale(..) | ElementaryOp::RowAdd { .. }
        )
    }

    pub fn apply(&self, m: &mut PolyMatrix) {
        match self {
            ElementaryOp::RowSwap(a, b) => m.swap_rows(*a, *b),
            ElementaryOp::ColSwap(a, b) => m.swap_cols(*a, *b),
            ElementaryOp::RowScale(i, c) => m.scale_row(*i, c),
            ElementaryOp::ColScale(j, c) => m.scale_col(*j, c),
            ElementaryOp::RowAdd { dst, src, multiplier } => m.add_row_multiple(*dst, *src, multiplier),
            ElementaryOp::ColAdd { dst, src, multiplier } => m.add_col_multiple(*dst, *src, multiplier),
        }
    }

    /// The `n x n` matrix `E` with `E * M` (row ops) or `M * E` (column
    /// ops) equal to the operation applied to `M`.
    pub fn matrix(&self, vars: &VarSet, n: usize) -> PolyMatrix {
        let mut e = PolyMatrix::identity(vars, n);
        self.apply(&mut e);
        e
    }
}

impl fmt::Display for ElementaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryOp::RowSwap(a, b) => write!(f, "swap rows {} and {}", a + 1, b + 1),
            ElementaryOp::ColSwap(a, b) => write!(f, "swap columns {} and {}", a + 1, b + 1),
            ElementaryOp::RowScale(i, c) => write!(f, "scale row {} by {c}", i + 1),
            ElementaryOp::ColScale(j, c) => write!(f, "scale column {} by {c}", j + 1),
            ElementaryOp::RowAdd { dst, src, multiplier } => {
                write!(f, "row {} += ({multiplier}) * row {}", dst + 1, src + 1)
            }
            ElementaryOp::ColAdd { dst, src, multiplier } => {
                write!(f, "column {} += ({multiplier}) * column {}", dst + 1, src + 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{integer, parse_polynomial};

    #[test]
    fn realizations_are_unimodular() {
        let vs = VarSet::new(["x", "y"]).unwrap();
        let ops = [
            ElementaryOp::RowSwap(0, 2),
            ElementaryOp::ColScale(1, integer(-3)),
            ElementaryOp::RowAdd {
                dst: 1,
                src: 0,
                multiplier: parse_polynomial("x*y - 2", &vs).unwrap(),
            },
        ];
        for op in &ops {
            assert!(op.matrix(&vs, 3).is_unimodular().unwrap(), "{op}");
        }
    }

    #[test]
    fn row_and_column_realizations_agree() {
        let vs = VarSet::new(["x", "y"]).unwrap();
        let m = PolyMatrix::from_strs(&vs, &[["x", "1"], ["y", "x + y"]]).unwrap();
        let row = ElementaryOp::RowAdd {
            dst: 0,
            src: 1,
            multiplier: parse_polynomial("x", &vs).unwrap(),
        };
        let mut direct = m.clone();
        row.apply(&mut direct);
        assert_eq!(direct, &row.matrix(&vs, 2) * &m);
        let col = ElementaryOp::ColSwap(0, 1);
        let mut direct = m.clone();
        col.apply(&mut direct);
        assert_eq!(direct, &m * &col.matrix(&vs, 2));
        assert!(row.is_row_op() && !col.is_row_op());
    }
}
