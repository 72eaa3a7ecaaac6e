use num_traits::One;

use super::completion::unimodular_completion;
use super::{fail, ElementaryOp, FailureKind, ReduceError};
use crate::error::internal;
use crate::groebner::{is_unit_ideal, IdealGens};
use crate::polymat::PolyMatrix;
use crate::polyring::{gcd_all, Coefficient, MonomialOrder, Polynomial};

type Outcome<T> = std::result::Result<T, ReduceError>;

/// One move of a fold: an elementary operation or a unimodular transform
/// applied on one side.
#[derive(Debug, Clone, PartialEq)]
pub enum FoldMove {
    Elementary(ElementaryOp),
    Left(PolyMatrix),
    Right(PolyMatrix),
}

/// `left * input * right = result`, with `result` diagonal, monic and
/// satisfying the divisibility chain.
#[derive(Debug, Clone, PartialEq)]
pub struct Fold {
    pub moves: Vec<FoldMove>,
    pub left: PolyMatrix,
    pub right: PolyMatrix,
    pub result: PolyMatrix,
}

impl Fold {
    /// The elementary operations, if no general transform was needed.
    pub fn elementary_ops(&self) -> Option<Vec<ElementaryOp>> {
        self.moves
            .iter()
            .map(|m| match m {
                FoldMove::Elementary(op) => Some(op.clone()),
                _ => None,
            })
            .collect()
    }
}

struct Engine {
    cur: PolyMatrix,
    left: PolyMatrix,
    right: PolyMatrix,
    moves: Vec<FoldMove>,
}

impl Engine {
    fn op(&mut self, op: ElementaryOp) {
        op.apply(&mut self.cur);
        if op.is_row_op() {
            op.apply(&mut self.left);
        } else {
            op.apply(&mut self.right);
        }
        self.moves.push(FoldMove::Elementary(op));
    }

    fn left_transform(&mut self, t: PolyMatrix) {
        self.cur = &t * &self.cur;
        self.left = &t * &self.left;
        self.moves.push(FoldMove::Left(t));
    }

    fn right_transform(&mut self, t: PolyMatrix) {
        self.cur = &self.cur * &t;
        self.right = &self.right * &t;
        self.moves.push(FoldMove::Right(t));
    }
}

/// Diagonalize `B` into its Smith form by unimodular row and column moves.
///
/// At step `t` the pivot is the gcd `g` of the trailing block. An entry
/// equal to `g` up to a constant is used directly; otherwise a row or
/// column of the block whose entries divided by `g` generate the unit ideal
/// is completed to a unimodular transform that produces one. Rows and
/// columns are then cleared by exact quotients.
pub fn fold_diagonal(b: &PolyMatrix, degree_bound: u32) -> Outcome<Fold> {
    let vars = b.vars().clone();
    let (l, m) = (b.rows(), b.cols());
    let mut e = Engine {
        cur: b.clone(),
        left: PolyMatrix::identity(&vars, l),
        right: PolyMatrix::identity(&vars, m),
        moves: Vec::new(),
    };
    for t in 0..l.min(m) {
        let block: Vec<Polynomial> = (t..l)
            .flat_map(|i| (t..m).map(move |j| (i, j)))
            .map(|(i, j)| e.cur.get(i, j).clone())
            .collect();
        let g = gcd_all(&vars, &block);
        if g.is_zero() {
            break;
        }
        let (pi, pj) = match find_pivot(&e.cur, t, &g) {
            Some(p) => p,
            None => make_pivot(&mut e, t, &g, degree_bound)?,
        };
        if pi != t {
            e.op(ElementaryOp::RowSwap(t, pi));
        }
        if pj != t {
            e.op(ElementaryOp::ColSwap(t, pj));
        }
        let c = e.cur.get(t, t).leading_coeff();
        if !c.is_one() {
            e.op(ElementaryOp::RowScale(t, c.recip()));
        }
        for i in t + 1..l {
            let q = quotient(e.cur.get(i, t), &g)?;
            if !q.is_zero() {
                e.op(ElementaryOp::RowAdd {
                    dst: i,
                    src: t,
                    multiplier: -q,
                });
            }
        }
        for j in t + 1..m {
            let q = quotient(e.cur.get(t, j), &g)?;
            if !q.is_zero() {
                e.op(ElementaryOp::ColAdd {
                    dst: j,
                    src: t,
                    multiplier: -q,
                });
            }
        }
    }
    let diag = e.cur.diagonal();
    if !e.cur.is_diagonal() || diag.windows(2).any(|w| !w[1].is_zero() && !w[1].is_divisible_by(&w[0])) {
        return Err(internal("fold did not reach a diagonal divisibility chain").into());
    }
    Ok(Fold {
        moves: e.moves,
        left: e.left,
        right: e.right,
        result: e.cur,
    })
}

fn quotient(p: &Polynomial, g: &Polynomial) -> Outcome<Polynomial> {
    p.exact_div(g)
        .map_err(|err| internal(format!("block gcd does not divide an entry: {err}")).into())
}

/// An entry of the trailing block equal to `g` times a nonzero constant,
/// preferring the diagonal position and then row-major order.
fn find_pivot(cur: &PolyMatrix, t: usize, g: &Polynomial) -> Option<(usize, usize)> {
    let is_pivot = |i: usize, j: usize| {
        let e = cur.get(i, j);
        !e.is_zero() && e.exact_div(g).map(|q| q.is_nonzero_constant()).unwrap_or(false)
    };
    if is_pivot(t, t) {
        return Some((t, t));
    }
    (t..cur.rows())
        .flat_map(|i| (t..cur.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| is_pivot(i, j))
}

fn generates_unit(v: &[Polynomial]) -> crate::Result<bool> {
    if v.iter().any(Polynomial::is_nonzero_constant) {
        return Ok(true);
    }
    let nonzero: Vec<Polynomial> = v.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(false);
    }
    let vars = nonzero[0].vars().clone();
    Ok(is_unit_ideal(&IdealGens::new(nonzero)?, &MonomialOrder::degrevlex(vars.len())))
}

/// Produce an entry equal to `g` in the trailing block and return its
/// position.
fn make_pivot(e: &mut Engine, t: usize, g: &Polynomial, bound: u32) -> Outcome<(usize, usize)> {
    let (l, m) = (e.cur.rows(), e.cur.cols());
    let reduced_col = |cur: &PolyMatrix, j: usize| -> Outcome<Vec<Polynomial>> {
        (t..l).map(|i| quotient(cur.get(i, j), g)).collect()
    };
    let reduced_row = |cur: &PolyMatrix, i: usize| -> Outcome<Vec<Polynomial>> {
        (t..m).map(|j| quotient(cur.get(i, j), g)).collect()
    };
    for j in t..m {
        let col = reduced_col(&e.cur, j)?;
        if generates_unit(&col)? {
            return pivot_from_column(e, t, j, col, bound);
        }
    }
    for i in t..l {
        let row = reduced_row(&e.cur, i)?;
        if generates_unit(&row)? {
            return pivot_from_row(e, t, i, row, bound);
        }
    }
    let one = Polynomial::one(e.cur.vars());
    for j in t..m {
        for k in t..m {
            if j == k {
                continue;
            }
            for mult in [one.clone(), -one.clone()] {
                let mut trial = e.cur.clone();
                trial.add_col_multiple(j, k, &mult);
                let col = reduced_col(&trial, j)?;
                if generates_unit(&col)? {
                    e.op(ElementaryOp::ColAdd {
                        dst: j,
                        src: k,
                        multiplier: mult,
                    });
                    return pivot_from_column(e, t, j, col, bound);
                }
            }
        }
    }
    Err(fail(
        FailureKind::CompletionNotFound,
        format!("no row or column of the trailing block at step {} reaches the pivot {g}", t + 1),
    ))
}

fn pivot_from_column(
    e: &mut Engine,
    t: usize,
    j: usize,
    col: Vec<Polynomial>,
    bound: u32,
) -> Outcome<(usize, usize)> {
    let vars = e.cur.vars().clone();
    let s = col.len();
    let row = PolyMatrix::from_rows(&vars, vec![col])?;
    let c = unimodular_completion(&row, bound)?.transpose();
    let inv = c.inverse_unimodular()?;
    let t_mat = PolyMatrix::identity(&vars, t).block_diag(&inv);
    e.left_transform(t_mat);
    Ok((t + s - 1, j))
}

fn pivot_from_row(
    e: &mut Engine,
    t: usize,
    i: usize,
    row: Vec<Polynomial>,
    bound: u32,
) -> Outcome<(usize, usize)> {
    let vars = e.cur.vars().clone();
    let s = row.len();
    let w = PolyMatrix::from_rows(&vars, vec![row])?;
    let c = unimodular_completion(&w, bound)?;
    let inv = c.inverse_unimodular()?;
    let t_mat = PolyMatrix::identity(&vars, t).block_diag(&inv);
    e.right_transform(t_mat);
    Ok((i, t + s - 1))
}

/// Scale each diagonal entry to be monic by row scalings.
pub(crate) fn monic_rows(d: &[Polynomial]) -> Vec<Coefficient> {
    d.iter()
        .map(|p| {
            if p.is_zero() {
                Coefficient::one()
            } else {
                p.leading_coeff().recip()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarSet;

    fn xyz() -> VarSet {
        VarSet::new(["x", "y", "z"]).unwrap()
    }

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_strs(&xyz(), rows).unwrap()
    }

    fn check(b: &PolyMatrix, fold: &Fold) {
        assert_eq!(&(&fold.left * b) * &fold.right, fold.result);
        assert!(fold.left.is_unimodular().unwrap());
        assert!(fold.right.is_unimodular().unwrap());
        let det_b = b.determinant().unwrap();
        let det_c = fold.result.determinant().unwrap();
        let scale = &fold.left.determinant().unwrap() * &fold.right.determinant().unwrap();
        assert_eq!(det_c, &scale * &det_b);
    }

    #[test]
    fn diagonal_input_needs_no_moves() {
        let b = m(&[&["1", "0"], &["0", "z + 1"]]);
        let fold = fold_diagonal(&b, 3).unwrap();
        assert!(fold.moves.is_empty());
        assert_eq!(fold.result, b);
    }

    #[test]
    fn first_fold_of_the_chain_example() {
        let a = m(&[
            &["1", "0", "0"],
            &["y*(z + 1)", "z + 1", "0"],
            &["x*(z + 1)", "0", "(z + 1)*(z - 1)"],
        ]);
        let fold = fold_diagonal(&a, 3).unwrap();
        check(&a, &fold);
        assert_eq!(fold.result, m(&[&["1", "0", "0"], &["0", "z + 1", "0"], &["0", "0", "z^2 - 1"]]));
        assert_eq!(fold.right, PolyMatrix::identity(&xyz(), 3));
        assert_eq!(
            fold.left,
            m(&[&["1", "0", "0"], &["-y*(z + 1)", "1", "0"], &["-x*(z + 1)", "0", "1"]])
        );
        assert_eq!(fold.elementary_ops().unwrap().len(), 2);
    }

    #[test]
    fn coprime_diagonal_needs_a_bezout_transform() {
        let b = m(&[&["x", "0"], &["0", "1 - x"]]);
        let fold = fold_diagonal(&b, 3).unwrap();
        check(&b, &fold);
        assert_eq!(fold.result, m(&[&["1", "0"], &["0", "x^2 - x"]]));
    }

    #[test]
    fn swaps_bring_the_unit_forward() {
        let b = m(&[&["z^2", "0"], &["0", "z"]]);
        let fold = fold_diagonal(&b, 3).unwrap();
        check(&b, &fold);
        assert_eq!(fold.result, m(&[&["z", "0"], &["0", "z^2"]]));
    }

    #[test]
    fn non_unit_block_fails() {
        let b = m(&[&["x", "0"], &["0", "y"]]);
        let err = fold_diagonal(&b, 3).unwrap_err();
        assert!(matches!(err, ReduceError::Failure(ref f) if f.kind == FailureKind::CompletionNotFound));
    }
}
