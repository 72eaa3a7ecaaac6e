use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{fail, FailureKind, ReduceError};
use crate::error::{usage, Error};
use crate::linalg;
use crate::polymat::{combinations, PolyMatrix};
use crate::polyring::{gcd_all, Coefficient, Monomial, Polynomial};

type Outcome<T> = std::result::Result<T, ReduceError>;

/// A zero left prime `W` with `W * F(sub) = 0`, where `F(sub)` is `F` after
/// the substitution. `W` has `l - rank(F(sub))` rows.
///
/// The normalized cofactor kernel of the echelon pivot minor is tried
/// first, then the kernels of the other nonsingular maximal minors. As a
/// last resort, `k` independent columns `A` that are zero right prime are
/// completed to a unimodular `V` ending in `A`; the leading rows of `V^-1`
/// then annihilate the column space.
pub fn zlp_annihilator(f: &PolyMatrix, sub: &[(usize, Polynomial)], degree_bound: u32) -> Outcome<PolyMatrix> {
    let f1 = f.substitute_indexed(sub)?;
    let profile = f1.rank_profile()?;
    let k = profile.rank;
    if k == f1.rows() {
        return Err(Error::Rank(format!(
            "the substituted matrix keeps full row rank {k}; nothing to annihilate"
        ))
        .into());
    }
    let w = f1.left_kernel_with(&profile.rows, &profile.cols)?;
    if w.is_zlp()? {
        return Ok(w);
    }
    for rows in combinations(f1.rows(), k) {
        for cols in combinations(f1.cols(), k) {
            if rows == profile.rows && cols == profile.cols {
                continue;
            }
            if f1.submatrix(&rows, &cols).determinant()?.is_zero() {
                continue;
            }
            let w = f1.left_kernel_with(&rows, &cols)?;
            if w.is_zlp()? {
                return Ok(w);
            }
        }
    }
    if let Some(w) = column_space_annihilator(&f1, k, degree_bound)? {
        return Ok(w);
    }
    Err(fail(
        FailureKind::KernelNotZlp,
        format!("no normalized kernel basis of the rank-{k} substituted matrix is zero left prime"),
    ))
}

fn column_space_annihilator(f1: &PolyMatrix, k: usize, bound: u32) -> Outcome<Option<PolyMatrix>> {
    let (l, m) = (f1.rows(), f1.cols());
    let all_rows: Vec<usize> = (0..l).collect();
    for cols in combinations(m, k) {
        let mut a = f1.submatrix(&all_rows, &cols);
        if a.rank()? < k {
            continue;
        }
        if k == 1 {
            let g = gcd_all(a.vars(), a.entries());
            a = a.try_map(|p| p.exact_div(&g))?;
        }
        let at = a.transpose();
        if !at.is_zlp()? {
            continue;
        }
        let c = match unimodular_completion(&at, bound) {
            Ok(c) => c,
            Err(ReduceError::Failure(_)) => continue,
            Err(e) => return Err(e),
        };
        let vinv = c.transpose().inverse_unimodular()?;
        let w = vinv.submatrix(&(0..l - k).collect::<Vec<_>>(), &all_rows);
        if (&w * f1).is_zero() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// A unimodular matrix whose last rows are `W`.
///
/// Unit rows are tried first. Otherwise all but one of the missing rows are
/// fixed constant vectors and the remaining row is an undetermined
/// polynomial row in the variables of `W`; `det = 1` is then a linear
/// system in its coefficients. Degrees `0..=degree_bound` are tried in
/// turn and the first solution wins.
pub fn unimodular_completion(w: &PolyMatrix, degree_bound: u32) -> Outcome<PolyMatrix> {
    let (r, l) = (w.rows(), w.cols());
    if r == 0 || r > l {
        return Err(usage(format!("cannot complete a {r}x{l} matrix to a square one")).into());
    }
    if r == l {
        return if w.is_unimodular()? {
            Ok(w.clone())
        } else {
            Err(fail(FailureKind::CompletionNotFound, "square input is not unimodular"))
        };
    }
    if !w.is_zlp()? {
        return Err(fail(
            FailureKind::CompletionNotFound,
            "rows are not zero left prime, so no completion exists",
        ));
    }
    if let Some(u) = unit_completion(w)? {
        return Ok(u);
    }
    let pool = constant_rows(l);
    let choices = combinations(pool.len(), l - r - 1);
    let mut support: Vec<usize> = w.entries().iter().flat_map(Polynomial::support).collect();
    support.sort_unstable();
    support.dedup();
    for d in 0..=degree_bound {
        let monos = monomials_up_to(w.vars().len(), &support, d);
        for choice in &choices {
            let fixed: Vec<&Vec<Coefficient>> = choice.iter().map(|&i| &pool[i]).collect();
            if let Some(u) = solve_free_row(w, &fixed, &monos)? {
                return Ok(u);
            }
        }
    }
    Err(fail(
        FailureKind::CompletionNotFound,
        format!("no completion with entries of total degree <= {degree_bound}"),
    ))
}

fn stack(w: &PolyMatrix, top: Vec<Vec<Polynomial>>) -> crate::Result<PolyMatrix> {
    let mut rows = top;
    rows.extend(w.to_rows());
    PolyMatrix::from_rows(w.vars(), rows)
}

fn unit_completion(w: &PolyMatrix) -> crate::Result<Option<PolyMatrix>> {
    let (r, l) = (w.rows(), w.cols());
    let all: Vec<usize> = (0..l).collect();
    for cols in combinations(l, r) {
        if !w.submatrix(&all[..r], &cols).determinant()?.is_nonzero_constant() {
            continue;
        }
        let top = (0..l)
            .filter(|j| !cols.contains(j))
            .map(|j| unit_row(w, j))
            .collect();
        return Ok(Some(stack(w, top)?));
    }
    Ok(None)
}

fn unit_row(w: &PolyMatrix, j: usize) -> Vec<Polynomial> {
    (0..w.cols())
        .map(|c| {
            if c == j {
                Polynomial::one(w.vars())
            } else {
                Polynomial::zero(w.vars())
            }
        })
        .collect()
}

/// Unit vectors, then `e_i + e_j` and `e_i - e_j` for `i < j`.
fn constant_rows(l: usize) -> Vec<Vec<Coefficient>> {
    let unit = |i: usize| -> Vec<Coefficient> {
        (0..l)
            .map(|k| if k == i { Coefficient::one() } else { Coefficient::zero() })
            .collect()
    };
    let mut pool: Vec<Vec<Coefficient>> = (0..l).map(unit).collect();
    for i in 0..l {
        for j in i + 1..l {
            for sign in [Coefficient::one(), -Coefficient::one()] {
                let mut v = unit(i);
                v[j] = sign;
                pool.push(v);
            }
        }
    }
    pool
}

/// Monomials in the given variables with total degree at most `d`, by
/// increasing degree.
fn monomials_up_to(nvars: usize, support: &[usize], d: u32) -> Vec<Monomial> {
    fn rec(
        support: &[usize],
        remaining: u32,
        exps: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        match support.split_first() {
            None => {
                if remaining == 0 {
                    out.push(exps.clone());
                }
            }
            Some((&v, rest)) => {
                for e in (0..=remaining).rev() {
                    exps[v] = e;
                    rec(rest, remaining - e, exps, out);
                }
                exps[v] = 0;
            }
        }
    }
    let mut out = Vec::new();
    for total in 0..=d {
        let mut exps = vec![0; nvars];
        rec(support, total, &mut exps, &mut out);
    }
    out.into_iter().map(Monomial::from_exponents).collect()
}

fn solve_free_row(
    w: &PolyMatrix,
    fixed: &[&Vec<Coefficient>],
    monos: &[Monomial],
) -> crate::Result<Option<PolyMatrix>> {
    let vars = w.vars();
    let l = w.cols();
    let pos = fixed.len();
    let mut top: Vec<Vec<Polynomial>> = fixed
        .iter()
        .map(|row| row.iter().map(|c| Polynomial::constant(vars, c.clone())).collect())
        .collect();
    top.push(vec![Polynomial::zero(vars); l]);
    let m = stack(w, top)?;
    let other_rows: Vec<usize> = (0..l).filter(|&i| i != pos).collect();
    let mut cofactors = Vec::with_capacity(l);
    for j in 0..l {
        let cols: Vec<usize> = (0..l).filter(|&c| c != j).collect();
        let minor = m.submatrix(&other_rows, &cols).determinant()?;
        cofactors.push(if (pos + j) % 2 == 1 { -minor } else { minor });
    }
    let unknowns: Vec<(usize, &Monomial)> = monos
        .iter()
        .flat_map(|mono| (0..l).filter(|&j| !cofactors[j].is_zero()).map(move |j| (j, mono)))
        .collect();
    if unknowns.is_empty() {
        return Ok(None);
    }
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    let one = Monomial::one(vars.len());
    index.insert(one.clone(), 0);
    let mut columns: Vec<Vec<(usize, Coefficient)>> = Vec::with_capacity(unknowns.len());
    for (j, mono) in &unknowns {
        let b = cofactors[*j].mul_monomial(mono, &Coefficient::one());
        let mut col = Vec::with_capacity(b.num_terms());
        for (m, c) in b.terms() {
            let next = index.len();
            let e = *index.entry(m.clone()).or_insert(next);
            col.push((e, c.clone()));
        }
        columns.push(col);
    }
    let mut a = vec![vec![Coefficient::zero(); unknowns.len()]; index.len()];
    for (u, col) in columns.into_iter().enumerate() {
        for (e, c) in col {
            a[e][u] = c;
        }
    }
    let mut rhs = vec![Coefficient::zero(); index.len()];
    rhs[index[&one]] = Coefficient::one();
    let Some(x) = linalg::solve(&a, &rhs) else {
        return Ok(None);
    };
    let mut row = vec![Polynomial::zero(vars); l];
    for ((j, mono), c) in unknowns.iter().zip(x) {
        if !c.is_zero() {
            row[*j] += &Polynomial::monomial(vars, (*mono).clone(), c);
        }
    }
    let mut u = m;
    for (j, p) in row.into_iter().enumerate() {
        u.set(pos, j, p);
    }
    Ok(if u.is_unimodular()? { Some(u) } else { None })
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

    fn check_completion(w: &PolyMatrix, u: &PolyMatrix) {
        assert!(u.is_unimodular().unwrap());
        let r = w.rows();
        let l = w.cols();
        let last: Vec<usize> = (l - r..l).collect();
        let all: Vec<usize> = (0..l).collect();
        assert_eq!(&u.submatrix(&last, &all), w);
    }

    #[test]
    fn annihilator_of_bezout_column() {
        let f = m(&[&["x"], &["1 - x"]]);
        let w = zlp_annihilator(&f, &[], 3).unwrap();
        assert_eq!(w, m(&[&["x - 1", "x"]]));
        assert!(w.is_zlp().unwrap());
    }

    #[test]
    fn annihilator_of_unit_column() {
        let f = m(&[&["1"], &["0"]]);
        assert_eq!(zlp_annihilator(&f, &[], 3).unwrap(), m(&[&["0", "1"]]));
    }

    #[test]
    fn annihilator_after_substitution() {
        let f = m(&[&["z + 1", "x"], &["0", "y"]]);
        let w = zlp_annihilator(&f, &[(1, Polynomial::zero(&xyz()))], 3).unwrap();
        assert_eq!(w, m(&[&["0", "1"]]));
        assert!(matches!(
            zlp_annihilator(&f, &[(0, Polynomial::zero(&xyz()))], 3),
            Err(ReduceError::Core(Error::Rank(_)))
        ));
    }

    #[test]
    fn non_zlp_kernel_is_reported() {
        let f = m(&[&["y"], &["x"]]);
        let err = zlp_annihilator(&f, &[], 3).unwrap_err();
        assert!(matches!(err, ReduceError::Failure(ref e) if e.kind == FailureKind::KernelNotZlp));
    }

    #[test]
    fn annihilator_from_the_column_space() {
        let f = m(&[&["x"], &["y"], &["1 - x*y"]]);
        let w = zlp_annihilator(&f, &[], 3).unwrap();
        assert_eq!(w.rows(), 2);
        assert!((&w * &f).is_zero());
        assert!(w.is_zlp().unwrap());
    }

    #[test]
    fn completion_examples() {
        let w = m(&[&["0", "1"]]);
        assert_eq!(unimodular_completion(&w, 3).unwrap(), m(&[&["1", "0"], &["0", "1"]]));
        let w = m(&[&["x - 1", "x"]]);
        let u = unimodular_completion(&w, 3).unwrap();
        assert_eq!(u, m(&[&["1", "1"], &["x - 1", "x"]]));
        assert!(u.determinant().unwrap().is_one());
    }

    #[test]
    fn completion_of_two_rows() {
        let w = m(&[&["x", "1", "0"], &["-1", "0", "0"]]);
        let u = unimodular_completion(&w, 1).unwrap();
        check_completion(&w, &u);
    }

    #[test]
    fn completion_needs_a_polynomial_row() {
        let w = m(&[&["x*y + 1", "x^2", "y^2"]]);
        let u = unimodular_completion(&w, 3).unwrap();
        check_completion(&w, &u);
        let w = m(&[&["1 - x*y", "x", "y"]]);
        check_completion(&w, &unimodular_completion(&w, 2).unwrap());
    }

    #[test]
    fn completion_failures() {
        let w = m(&[&["x", "y"]]);
        let err = unimodular_completion(&w, 3).unwrap_err();
        assert!(matches!(err, ReduceError::Failure(ref e) if e.kind == FailureKind::CompletionNotFound));
        let w = m(&[&["x*y + 1", "x^2"]]);
        assert!(w.is_zlp().unwrap());
        let err = unimodular_completion(&w, 1).unwrap_err();
        assert!(matches!(err, ReduceError::Failure(ref e) if e.kind == FailureKind::CompletionNotFound));
        check_completion(&w, &unimodular_completion(&w, 2).unwrap());
    }

    #[test]
    fn monomial_enumeration() {
        let monos = monomials_up_to(3, &[0, 2], 2);
        assert_eq!(monos.len(), 6);
        assert!(monos[0].is_one());
        assert!(monos.iter().all(|m| m.exponents()[1] == 0));
    }
}
