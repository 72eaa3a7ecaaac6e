use std::cmp::Ordering;

use num_traits::Zero;

use super::{Coefficient, Monomial, MonomialOrder, Polynomial};
use crate::error::{usage, Result};

/// Exact lex division by a single divisor. `None` when a remainder is left.
pub(super) fn exact_div_lex(p: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    if p.is_zero() {
        return Some(Polynomial::zero(p.vars()));
    }
    let (dm, dc) = d.leading_term()?;
    if let Some(c) = d.constant_value() {
        return Some(p.scale(&c.recip()));
    }
    // cheap degree screen before doing any arithmetic
    for v in 0..p.nvars() {
        if d.degree_in(v) > p.degree_in(v) {
            return None;
        }
    }
    let dinv = dc.recip();
    let mut rem = p.clone();
    let mut quotient = Vec::new();
    while let Some((rm, rc)) = rem.leading_term() {
        if !dm.divides(rm) {
            return None;
        }
        let qm = dm.quotient_of(rm);
        let qc = rc * &dinv;
        rem = &rem - &d.mul_monomial(&qm, &qc);
        quotient.push((qm, qc));
    }
    Some(Polynomial::from_terms(p.vars(), quotient))
}

/// Terms sorted in decreasing order under `order`.
pub(crate) fn terms_under(p: &Polynomial, order: &MonomialOrder) -> Vec<(Monomial, Coefficient)> {
    let mut t = p.terms().to_vec();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

/// `a - c * m * b` for term lists sorted decreasingly under `order`.
pub(crate) fn sub_scaled(
    a: &[(Monomial, Coefficient)],
    b: &[(Monomial, Coefficient)],
    m: &Monomial,
    c: &Coefficient,
    order: &MonomialOrder,
) -> Vec<(Monomial, Coefficient)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(bm, bc)| (bm.mul(m), bc * c)).peekable();
    while i < a.len() {
        let Some((bm, _)) = bi.peek() else { break };
        match order.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (bm, bc) = bi.next().unwrap();
                out.push((bm, -bc));
            }
            Ordering::Equal => {
                let (bm, bc) = bi.next().unwrap();
                let v = &a[i].1 - bc;
                if !v.is_zero() {
                    out.push((bm, v));
                }
                i += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(bi.map(|(m, c)| (m, -c)));
    out
}

/// Multivariate division of `p` by `divisors` under `order`.
///
/// Returns quotients `q_i` and a remainder `r` with
/// `p = sum q_i * divisors_i + r`, where no term of `r` is divisible by the
/// leading monomial of any divisor.
pub fn divrem_multi(
    p: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    if divisors.is_empty() {
        return Err(usage("divrem_multi needs at least one divisor"));
    }
    if order.nvars() != p.nvars() {
        return Err(usage("monomial order arity does not match the variable set"));
    }
    for d in divisors {
        if d.is_zero() {
            return Err(usage("divrem_multi divisor is zero"));
        }
        if d.vars() != p.vars() {
            return Err(usage("divrem_multi divisors use a different variable set"));
        }
    }
    let divs: Vec<Vec<(Monomial, Coefficient)>> =
        divisors.iter().map(|d| terms_under(d, order)).collect();
    let inv_lc: Vec<Coefficient> = divs.iter().map(|d| d[0].1.recip()).collect();
    let mut quotients: Vec<Vec<(Monomial, Coefficient)>> = vec![Vec::new(); divs.len()];
    let mut remainder = Vec::new();
    let mut work = terms_under(p, order);
    while !work.is_empty() {
        let (lm, lc) = work[0].clone();
        let hit = divs.iter().position(|d| d[0].0.divides(&lm));
        match hit {
            Some(i) => {
                let qm = divs[i][0].0.quotient_of(&lm);
                let qc = &lc * &inv_lc[i];
                work = sub_scaled(&work, &divs[i], &qm, &qc, order);
                quotients[i].push((qm, qc));
            }
            None => {
                remainder.push(work.remove(0));
            }
        }
    }
    let vars = p.vars();
    Ok((
        quotients
            .into_iter()
            .map(|q| Polynomial::from_terms(vars, q))
            .collect(),
        Polynomial::from_terms(vars, remainder),
    ))
}
