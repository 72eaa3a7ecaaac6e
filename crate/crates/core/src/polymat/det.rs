use num_traits::Zero;

use super::PolyMatrix;
use crate::error::{internal, usage, Result};
use crate::polyring::Polynomial;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl PolyMatrix {
    /// Exact determinant. Small or sparse matrices use cofactor expansion,
    /// the rest fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(usage(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let zeros = self.entries.iter().filter(|e| e.is_zero()).count();
        if self.rows <= 3 || 2 * zeros >= self.entries.len() {
            Ok(self.det_cofactor())
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along the row or column with the most zeros.
    pub fn det_cofactor(&self) -> Polynomial {
        assert!(self.is_square());
        let n = self.rows;
        let idx: Vec<usize> = (0..n).collect();
        cofactor(self, &idx, &idx)
    }

    /// Fraction-free Bareiss elimination with row pivoting.
    pub fn det_bareiss(&self) -> Result<Polynomial> {
        assert!(self.is_square());
        let n = self.rows;
        let vars = &self.vars;
        if n == 0 {
            return Ok(Polynomial::one(vars));
        }
        let mut a = self.to_rows();
        let mut prev = Polynomial::one(vars);
        let mut negate = false;
        for k in 0..n - 1 {
            let pivot = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| (a[i][k].total_degree(), a[i][k].num_terms()));
            let Some(p) = pivot else {
                return Ok(Polynomial::zero(vars));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .exact_div(&prev)
                        .map_err(|e| internal(format!("Bareiss step: {e}")))?;
                }
                a[i][k] = Polynomial::zero(vars);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Adjugate, so that `self * adj = det * I`.
    pub fn adjugate(&self) -> Result<PolyMatrix> {
        if !self.is_square() {
            return Err(usage("adjugate of a non-square matrix"));
        }
        let n = self.rows;
        let mut adj = PolyMatrix::zeros(&self.vars, n, n);
        if n == 1 {
            adj.set(0, 0, Polynomial::one(&self.vars));
            return Ok(adj);
        }
        let all: Vec<usize> = (0..n).collect();
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = all.iter().copied().filter(|&r| r != i).collect();
                let cols: Vec<usize> = all.iter().copied().filter(|&c| c != j).collect();
                let m = self.submatrix(&rows, &cols).determinant()?;
                let m = if (i + j) % 2 == 1 { -m } else { m };
                adj.set(j, i, m);
            }
        }
        Ok(adj)
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.determinant()?.is_nonzero_constant())
    }

    /// Inverse of a unimodular matrix; a usage error otherwise.
    pub fn inverse_unimodular(&self) -> Result<PolyMatrix> {
        let d = self.determinant()?;
        let c = d
            .constant_value()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| usage(format!("matrix is not unimodular (det = {d})")))?;
        Ok(self.adjugate()?.scale(&c.recip()))
    }
}

fn cofactor(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    let n = rows.len();
    let vars = &m.vars;
    match n {
        0 => return Polynomial::one(vars),
        1 => return m.get(rows[0], cols[0]).clone(),
        2 => {
            let (a, b) = (m.get(rows[0], cols[0]), m.get(rows[0], cols[1]));
            let (c, d) = (m.get(rows[1], cols[0]), m.get(rows[1], cols[1]));
            return &(a * d) - &(b * c);
        }
        _ => {}
    }
    let row_zeros = |r: usize| cols.iter().filter(|&&c| m.get(rows[r], c).is_zero()).count();
    let col_zeros = |c: usize| rows.iter().filter(|&&r| m.get(r, cols[c]).is_zero()).count();
    let best_row = (0..n).max_by_key(|&r| (row_zeros(r), usize::MAX - r)).unwrap();
    let best_col = (0..n).max_by_key(|&c| (col_zeros(c), usize::MAX - c)).unwrap();
    let mut parts = Vec::new();
    if row_zeros(best_row) >= col_zeros(best_col) {
        let r = best_row;
        let sub_rows: Vec<usize> = rows.iter().enumerate().filter(|(i, _)| *i != r).map(|(_, &x)| x).collect();
        for c in 0..n {
            let e = m.get(rows[r], cols[c]);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|(i, _)| *i != c).map(|(_, &x)| x).collect();
            let t = e * &cofactor(m, &sub_rows, &sub_cols);
            parts.push(if (r + c) % 2 == 1 { -t } else { t });
        }
    } else {
        let c = best_col;
        let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|(i, _)| *i != c).map(|(_, &x)| x).collect();
        for r in 0..n {
            let e = m.get(rows[r], cols[c]);
            if e.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows.iter().enumerate().filter(|(i, _)| *i != r).map(|(_, &x)| x).collect();
            let t = e * &cofactor(m, &sub_rows, &sub_cols);
            parts.push(if (r + c) % 2 == 1 { -t } else { t });
        }
    }
    crate::polyring::sum(vars, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, VarSet};

    fn vs() -> VarSet {
        VarSet::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), vec![
            vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]
        ]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn identity_and_non_square() {
        assert!(PolyMatrix::identity(&vs(), 4).determinant().unwrap().is_one());
        assert!(PolyMatrix::zeros(&vs(), 2, 3).determinant().is_err());
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let f = PolyMatrix::from_strs(
            &vs(),
            &[
                ["x + 1", "y", "z^2", "1"],
                ["x*y", "0", "z - 1", "y"],
                ["2", "x - z", "y*z", "x^2"],
                ["z", "1", "x + y", "0"],
            ],
        )
        .unwrap();
        assert_eq!(f.det_bareiss().unwrap(), f.det_cofactor());
        // pivot column with a leading zero forces a swap
        let g = PolyMatrix::from_strs(&vs(), &[["0", "x"], ["y", "1"]]).unwrap();
        assert_eq!(g.det_bareiss().unwrap(), parse_polynomial("-x*y", &vs()).unwrap());
    }

    #[test]
    fn adjugate_identity() {
        let f = PolyMatrix::from_strs(&vs(), &[["x", "1", "0"], ["y", "z", "1"], ["1", "0", "x - y"]]).unwrap();
        let d = f.determinant().unwrap();
        let adj = f.adjugate().unwrap();
        let expect = PolyMatrix::diag(&vs(), &[d.clone(), d.clone(), d]);
        assert_eq!(&f * &adj, expect);
    }

    #[test]
    fn unimodular_inverse() {
        let u = PolyMatrix::from_strs(&vs(), &[["1", "x"], ["y", "x*y + 2"]]).unwrap();
        let inv = u.inverse_unimodular().unwrap();
        assert_eq!(&u * &inv, PolyMatrix::identity(&vs(), 2));
        assert!(PolyMatrix::diag(&vs(), &[parse_polynomial("x", &vs()).unwrap(), Polynomial::one(&vs())])
            .inverse_unimodular()
            .is_err());
    }
}
