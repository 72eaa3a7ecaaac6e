//! Rational roots of univariate polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Coefficient, Polynomial};

/// `p = lead * prod (v - root)^mult * residual`, where `residual` has no
/// rational root and leading coefficient 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSplit {
    pub var: Option<usize>,
    pub lead: Coefficient,
    pub roots: Vec<(Coefficient, u32)>,
    pub residual: Polynomial,
}

impl LinearSplit {
    pub fn splits(&self) -> bool {
        self.residual.is_constant()
    }
}

/// Rational roots with multiplicity of a polynomial in at most one
/// variable, in increasing order. `None` if `p` is zero or involves more
/// than one variable.
pub fn rational_roots(p: &Polynomial) -> Option<LinearSplit> {
    if p.is_zero() {
        return None;
    }
    let support = p.support();
    if support.len() > 1 {
        return None;
    }
    let lead = p.leading_coeff();
    let Some(&v) = support.first() else {
        return Some(LinearSplit {
            var: None,
            lead,
            roots: Vec::new(),
            residual: Polynomial::one(p.vars()),
        });
    };
    let mut coeffs: Vec<Coefficient> = p
        .univar_view(v)
        .iter()
        .map(|c| c.constant_value().expect("univariate"))
        .collect();
    let mut roots: Vec<(Coefficient, u32)> = Vec::new();
    let mut zero_mult = 0;
    while coeffs[0].is_zero() {
        coeffs.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Coefficient::zero(), zero_mult));
    }
    for cand in candidates(&coeffs) {
        let mut mult = 0;
        while coeffs.len() > 1 && eval(&coeffs, &cand).is_zero() {
            coeffs = deflate(&coeffs, &cand);
            mult += 1;
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let vars = p.vars();
    let residual: Vec<Polynomial> = coeffs
        .iter()
        .map(|c| Polynomial::constant(vars, c.clone()))
        .collect();
    Some(LinearSplit {
        var: Some(v),
        lead,
        roots,
        residual: Polynomial::from_univar(vars, v, &residual).monic(),
    })
}

fn eval(coeffs: &[Coefficient], x: &Coefficient) -> Coefficient {
    coeffs
        .iter()
        .rev()
        .fold(Coefficient::zero(), |acc, c| acc * x + c)
}

/// Synthetic division by `(v - r)`, assuming `r` is a root.
fn deflate(coeffs: &[Coefficient], r: &Coefficient) -> Vec<Coefficient> {
    let d = coeffs.len() - 1;
    let mut out = vec![Coefficient::zero(); d];
    let mut carry = Coefficient::zero();
    for i in (1..=d).rev() {
        carry = &carry * r + &coeffs[i];
        out[i - 1] = carry.clone();
    }
    out
}

/// Candidates `±a/b` with `a | c_0` and `b | c_d` after clearing
/// denominators.
fn candidates(coeffs: &[Coefficient]) -> Vec<Coefficient> {
    if coeffs.len() < 2 {
        return Vec::new();
    }
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let nums = divisors(&ints[0]);
    let dens = divisors(&ints[ints.len() - 1]);
    let mut out = Vec::new();
    for a in &nums {
        for b in &dens {
            for s in [a.clone(), -a.clone()] {
                let c = BigRational::new(s, b.clone());
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out.sort();
    out
}

/// Positive divisors by trial division. Coefficients at the scale handled
/// here are small; very large values fall back to the trivial divisors.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let Some(m) = n.to_u64().filter(|&m| m <= 1_000_000_000_000) else {
        return vec![BigInt::one(), n];
    };
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(BigInt::from(d));
            if d * d != m {
                large.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{integer, parse_polynomial, rational, VarSet};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &VarSet::new(["x", "y", "z"]).unwrap()).unwrap()
    }

    #[test]
    fn cubic_tail_splits() {
        let s = rational_roots(&p("z^3 + z^2 - z - 1")).unwrap();
        assert_eq!(s.var, Some(2));
        assert_eq!(s.roots, vec![(integer(-1), 2), (integer(1), 1)]);
        assert!(s.splits());
    }

    #[test]
    fn fractional_roots_and_residual() {
        let s = rational_roots(&p("(2*x - 1) * x^2 * (x^2 + 1)")).unwrap();
        assert_eq!(s.roots, vec![(integer(0), 2), (rational(1, 2), 1)]);
        assert_eq!(s.residual, p("x^2 + 1"));
        assert_eq!(s.lead, integer(2));
        assert!(!s.splits());
    }

    #[test]
    fn rejects_multivariate_and_zero() {
        assert!(rational_roots(&p("x + y")).is_none());
        assert!(rational_roots(&p("0")).is_none());
        assert!(rational_roots(&p("5")).unwrap().roots.is_empty());
    }
}
