//! Matrices of polynomials over a shared variable set.

mod det;
mod minors;
mod rank;

use std::fmt;
use std::ops::Mul;

use crate::error::{usage, Error, Result};
use crate::polyring::{parse_polynomial_at, Coefficient, Polynomial, VarSet};

pub use det::combinations;
pub use minors::{jk_from_report, InvariantFactorList, MinorReport};
pub use rank::RankProfile;

/// A dense `rows x cols` matrix stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    vars: VarSet,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(vars: &VarSet, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(usage(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.vars() != vars) {
            return Err(usage("matrix entries use a different variable set"));
        }
        Ok(PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(vars: &VarSet, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(usage("rows have different lengths"));
        }
        Self::new(vars, r, c, rows.into_iter().flatten().collect())
    }

    /// Build from rows of expressions in the polynomial text grammar.
    pub fn from_strs<R, S>(vars: &VarSet, rows: &[R]) -> Result<Self>
    where
        R: AsRef<[S]>,
        S: AsRef<str>,
    {
        let parsed = rows
            .iter()
            .map(|row| {
                row.as_ref()
                    .iter()
                    .map(|s| parse_polynomial_at(s.as_ref(), vars, 1, 1))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(vars, parsed)
    }

    pub fn zeros(vars: &VarSet, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(vars); rows * cols],
        }
    }

    pub fn identity(vars: &VarSet, n: usize) -> Self {
        let mut m = Self::zeros(vars, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(vars));
        }
        m
    }

    pub fn diag(vars: &VarSet, d: &[Polynomial]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(vars, n, n);
        for (i, p) in d.iter().enumerate() {
            m.set(i, i, p.clone());
        }
        m
    }

    /// `rows x cols` matrix with `d` on the main diagonal and zeros
    /// elsewhere.
    pub fn rect_diag(vars: &VarSet, rows: usize, cols: usize, d: &[Polynomial]) -> Self {
        let mut m = Self::zeros(vars, rows, cols);
        for (i, p) in d.iter().enumerate().take(rows.min(cols)) {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        assert!(p.vars() == &self.vars, "entry over a different variable set");
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Polynomial> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            vars: self.vars.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(usage(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.vars != other.vars {
            return Err(usage("matrices use different variable sets"));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.vars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn try_add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) || self.vars != other.vars {
            return Err(usage("matrix sum of mismatched shapes"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(PolyMatrix {
            entries,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Coefficient) -> PolyMatrix {
        self.map(|p| p.scale(c))
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<PolyMatrix> {
        Ok(PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Entrywise substitution by variable index.
    pub fn substitute_indexed(&self, assignments: &[(usize, Polynomial)]) -> Result<PolyMatrix> {
        self.try_map(|p| p.substitute_indexed(assignments))
    }

    /// Entrywise substitution by variable name.
    pub fn substitute(&self, assignments: &[(&str, Polynomial)]) -> Result<PolyMatrix> {
        self.try_map(|p| p.substitute(assignments))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            vars: self.vars.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Re-express over another variable set by name.
    pub fn rebase(&self, target: &VarSet) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.rebase(target))
            .collect::<Result<_>>()?;
        PolyMatrix::new(target, self.rows, self.cols, entries)
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &PolyMatrix) -> PolyMatrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let mut m = PolyMatrix::zeros(&self.vars, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += f * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, f: &Polynomial) {
        assert_ne!(dst, src);
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = self.get(src, j) * f;
            if !t.is_zero() {
                let v = self.get(dst, j) + &t;
                self.set(dst, j, v);
            }
        }
    }

    /// `col[dst] += f * col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, f: &Polynomial) {
        assert_ne!(dst, src);
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = self.get(i, src) * f;
            if !t.is_zero() {
                let v = self.get(i, dst) + &t;
                self.set(i, dst, v);
            }
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &Coefficient) {
        for j in 0..self.cols {
            let v = self.get(i, j).scale(c);
            self.set(i, j, v);
        }
    }

    pub fn scale_col(&mut self, j: usize, c: &Coefficient) {
        for i in 0..self.rows {
            let v = self.get(i, j).scale(c);
            self.set(i, j, v);
        }
    }

    /// Parse the bracketed text form produced by `Display`, e.g.
    /// `[[x, 1], [0, y - 1]]`.
    pub fn parse_text(text: &str, vars: &VarSet) -> Result<PolyMatrix> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("matrix text: {msg}"),
        };
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| bad("expected outer brackets"))?
            .trim();
        if inner.is_empty() {
            return Ok(PolyMatrix::zeros(vars, 0, 0));
        }
        let mut rows = Vec::new();
        let mut rest = inner;
        loop {
            let body_start = rest.strip_prefix('[').ok_or_else(|| bad("expected `[`"))?;
            let close = body_start.find(']').ok_or_else(|| bad("unclosed row"))?;
            let body = &body_start[..close];
            let row = if body.trim().is_empty() {
                Vec::new()
            } else {
                body.split(',')
                    .map(|e| parse_polynomial_at(e.trim(), vars, 1, 1))
                    .collect::<Result<Vec<_>>>()?
            };
            rows.push(row);
            rest = body_start[close + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            rest = rest
                .strip_prefix(',')
                .ok_or_else(|| bad("expected `,` between rows"))?
                .trim_start();
        }
        PolyMatrix::from_rows(vars, rows).map_err(|e| bad(&e.to_string()))
    }
}

impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<PolyMatrix> for PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: PolyMatrix) -> PolyMatrix {
        &self * &rhs
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} over [{}]", self.rows, self.cols, self.vars)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
