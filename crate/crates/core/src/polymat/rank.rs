use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyMatrix;
use crate::error::{internal, Error, Result};
use crate::polyring::{gcd_all, Polynomial};

/// Rank together with a nonsingular pivot minor `F[rows, cols]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    /// Pivot rows, increasing.
    pub rows: Vec<usize>,
    /// Pivot columns, increasing.
    pub cols: Vec<usize>,
}

impl PolyMatrix {
    pub fn rank(&self) -> Result<usize> {
        Ok(self.rank_profile()?.rank)
    }

    /// Fraction-free echelon form with column skipping. The pivot minor is
    /// recomputed from the original entries and checked to be nonzero.
    pub fn rank_profile(&self) -> Result<RankProfile> {
        let vars = &self.vars;
        let mut a = self.to_rows();
        let mut order: Vec<usize> = (0..self.rows).collect();
        let mut prev = Polynomial::one(vars);
        let mut r = 0;
        let mut pivot_cols = Vec::new();
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let pivot = (r..self.rows)
                .filter(|&i| !a[i][c].is_zero())
                .min_by_key(|&i| (a[i][c].total_degree(), a[i][c].num_terms()));
            let Some(p) = pivot else { continue };
            a.swap(p, r);
            order.swap(p, r);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &(&a[i][j] * &a[r][c]) - &(&a[i][c] * &a[r][j]);
                    a[i][j] = num
                        .exact_div(&prev)
                        .map_err(|e| internal(format!("fraction-free elimination: {e}")))?;
                }
                a[i][c] = Polynomial::zero(vars);
            }
            prev = a[r][c].clone();
            pivot_cols.push(c);
            r += 1;
        }
        let mut rows: Vec<usize> = order[..r].to_vec();
        rows.sort_unstable();
        if r > 0 && self.submatrix(&rows, &pivot_cols).determinant()?.is_zero() {
            return Err(internal("pivot minor of the echelon form vanishes"));
        }
        Ok(RankProfile {
            rank: r,
            rows,
            cols: pivot_cols,
        })
    }

    /// Left kernel over the fraction field, one row per non-pivot row.
    ///
    /// With pivot rows `I` and columns `J`, the row for `i` not in `I` has
    /// entry `(-1)^pos(j) det F[(I + i) - j, J]` at each `j` in `I + i`.
    /// Rows are divided by the gcd of their entries and scaled to integer
    /// content 1 with the first nonzero entry's leading coefficient positive.
    pub fn left_kernel_fracfield(&self) -> Result<PolyMatrix> {
        let profile = self.rank_profile()?;
        self.left_kernel_with(&profile.rows, &profile.cols)
    }

    /// Left kernel built from an explicit nonsingular pivot minor.
    pub fn left_kernel_with(&self, pivot_rows: &[usize], pivot_cols: &[usize]) -> Result<PolyMatrix> {
        let r = pivot_rows.len();
        if r == self.rows {
            return Err(Error::EmptyKernel(format!(
                "a {}x{} matrix of rank {r} has no left kernel",
                self.rows, self.cols
            )));
        }
        let vars = &self.vars;
        let mut out = Vec::new();
        for i in (0..self.rows).filter(|i| !pivot_rows.contains(i)) {
            let mut set: Vec<usize> = pivot_rows.to_vec();
            set.push(i);
            set.sort_unstable();
            let mut row = vec![Polynomial::zero(vars); self.rows];
            for (pos, &j) in set.iter().enumerate() {
                let rest: Vec<usize> = set.iter().copied().filter(|&x| x != j).collect();
                let m = self.submatrix(&rest, pivot_cols).determinant()?;
                row[j] = if pos % 2 == 1 { -m } else { m };
            }
            out.push(normalize_row(row));
        }
        let w = PolyMatrix::from_rows(vars, out)?;
        debug_assert!(w.try_mul(self).map(|p| p.is_zero()).unwrap_or(false));
        Ok(w)
    }
}

/// Divide by the gcd of the entries and fix the sign and integer content.
pub(crate) fn normalize_row(row: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(first) = row.iter().find(|p| !p.is_zero()) else {
        return row;
    };
    let vars = first.vars().clone();
    let g = gcd_all(&vars, &row);
    let row: Vec<Polynomial> = row
        .iter()
        .map(|p| p.exact_div(&g).expect("gcd divides"))
        .collect();
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for (_, c) in row.iter().flat_map(|p| p.terms()) {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    let mut scale = BigRational::new(den, num);
    let lead = row.iter().find(|p| !p.is_zero()).expect("nonzero row");
    if lead.leading_coeff().is_negative() {
        scale = -scale;
    }
    row.iter().map(|p| p.scale(&scale)).collect()
}
