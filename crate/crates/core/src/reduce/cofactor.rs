use std::cmp::Reverse;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{internal, Result};
use crate::polymat::PolyMatrix;
use crate::polyring::{gcd, Coefficient, Monomial, Polynomial, VarSet};

/// Term-over-position key: degree reverse lexicographic on the monomial,
/// then lower positions first. Larger keys lead.
type Key = (u32, Vec<i64>, Reverse<usize>);

fn key(m: &Monomial, pos: usize) -> Key {
    let rev = m.exponents().iter().rev().map(|&e| -(e as i64)).collect();
    (m.total_degree(), rev, Reverse(pos))
}

#[derive(Clone)]
struct Element {
    terms: BTreeMap<Key, (Monomial, Coefficient)>,
}

impl Element {
    fn from_row(row: &[Polynomial]) -> Self {
        let mut terms = BTreeMap::new();
        for (pos, p) in row.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.insert(key(m, pos), (m.clone(), c.clone()));
            }
        }
        Element { terms }
    }

    fn leading(&self) -> Option<(usize, &Monomial, &Coefficient)> {
        self.terms
            .iter()
            .next_back()
            .map(|(k, (m, c))| (k.2 .0, m, c))
    }

    /// `self -= c * m * other`.
    fn sub_scaled(&mut self, other: &Element, m: &Monomial, c: &Coefficient) {
        for (k, (om, oc)) in &other.terms {
            let nm = om.mul(m);
            let nk = key(&nm, k.2 .0);
            let delta = oc * c;
            match self.terms.get_mut(&nk) {
                Some(entry) => {
                    entry.1 -= &delta;
                    if entry.1.is_zero() {
                        self.terms.remove(&nk);
                    }
                }
                None => {
                    self.terms.insert(nk, (nm, -delta));
                }
            }
        }
    }

    fn to_row(&self, vars: &VarSet, width: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coefficient)>> = vec![Vec::new(); width];
        for (k, (m, c)) in &self.terms {
            parts[k.2 .0].push((m.clone(), c.clone()));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_terms(vars, t))
            .collect()
    }
}

fn size(row: &[Polynomial]) -> (usize, u32) {
    let terms = row.iter().map(Polynomial::num_terms).sum();
    let degree = row.iter().filter_map(Polynomial::total_degree).sum();
    (terms, degree)
}

/// Full reduction of `f` by `divisors`, returning the remainder and one
/// quotient per divisor.
fn divide(f: &Element, divisors: &[Element], vars: &VarSet) -> (Element, Vec<Polynomial>) {
    let mut p = f.clone();
    let mut rem = Element { terms: BTreeMap::new() };
    let mut quotients: Vec<Vec<(Monomial, Coefficient)>> = vec![Vec::new(); divisors.len()];
    while let Some((pos, m, c)) = p.leading() {
        let (m, c) = (m.clone(), c.clone());
        let hit = divisors.iter().enumerate().find_map(|(idx, d)| {
            let (dpos, dm, dc) = d.leading()?;
            (dpos == pos && dm.divides(&m)).then(|| (idx, dm.quotient_of(&m), &c / dc))
        });
        match hit {
            Some((idx, qm, qc)) => {
                p.sub_scaled(&divisors[idx], &qm, &qc);
                quotients[idx].push((qm, qc));
            }
            None => {
                let k = key(&m, pos);
                let entry = p.terms.remove(&k).expect("leading term is present");
                rem.terms.insert(k, entry);
            }
        }
    }
    let quotients = quotients
        .into_iter()
        .map(|t| Polynomial::from_terms(vars, t))
        .collect();
    (rem, quotients)
}

/// Shrink the cofactor `G` of a state `diag(d) * G` by row operations that
/// keep it of that form.
///
/// Row `i` of `G` may absorb any multiple of `a * G_j` with
/// `a = d_j / gcd(d_i, d_j)`. Returns `(N, G')` with `N` unimodular and
/// `N * diag(d) * G = diag(d) * G'`.
pub fn size_reduce(d: &[Polynomial], g: &PolyMatrix) -> Result<(PolyMatrix, PolyMatrix)> {
    let vars = g.vars().clone();
    let l = g.rows();
    let width = g.cols();
    if d.len() != l {
        return Err(internal("diagonal and cofactor sizes differ"));
    }
    let mut rows = g.to_rows();
    let mut n = PolyMatrix::identity(&vars, l);
    let mut left_mult = vec![vec![Polynomial::zero(&vars); l]; l];
    let mut state_mult = vec![vec![Polynomial::zero(&vars); l]; l];
    for i in 0..l {
        for j in 0..l {
            if i == j || d[i].is_zero() || d[j].is_zero() {
                continue;
            }
            let h = gcd(&d[i], &d[j]);
            left_mult[i][j] = d[j].exact_div(&h)?;
            state_mult[i][j] = d[i].exact_div(&h)?;
        }
    }
    const MAX_PASSES: usize = 64;
    for _ in 0..MAX_PASSES {
        let mut changed = false;
        for i in 0..l {
            let others: Vec<usize> = (0..l)
                .filter(|&j| j != i && !left_mult[i][j].is_zero() && rows[j].iter().any(|p| !p.is_zero()))
                .collect();
            if others.is_empty() {
                continue;
            }
            let divisors: Vec<Element> = others
                .iter()
                .map(|&j| {
                    let scaled: Vec<Polynomial> = rows[j].iter().map(|p| p * &left_mult[i][j]).collect();
                    Element::from_row(&scaled)
                })
                .collect();
            let (rem, quotients) = divide(&Element::from_row(&rows[i]), &divisors, &vars);
            let candidate = rem.to_row(&vars, width);
            if size(&candidate) >= size(&rows[i]) {
                continue;
            }
            let mut op = PolyMatrix::identity(&vars, l);
            for (&j, q) in others.iter().zip(&quotients) {
                if !q.is_zero() {
                    op.set(i, j, -(q * &state_mult[i][j]));
                }
            }
            n = &op * &n;
            rows[i] = candidate;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    Ok((n, PolyMatrix::from_rows(&vars, rows)?))
}
