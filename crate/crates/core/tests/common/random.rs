//! Seeded generators for randomized tests.

#![allow(dead_code)]

use polysmith::polyring::integer;
use polysmith::{Monomial, PolyMatrix, Polynomial, VarSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `max_terms` terms of total degree at most `max_degree`, with
/// integer coefficients in `-bound..=bound`.
pub fn poly<R: Rng>(rng: &mut R, vars: &VarSet, max_degree: u32, max_terms: usize, bound: i64) -> Polynomial {
    let n = vars.len();
    let count = rng.gen_range(0..=max_terms);
    let terms = (0..count)
        .map(|_| {
            let total = rng.gen_range(0..=max_degree);
            let mut exps = vec![0u32; n];
            for _ in 0..total {
                exps[rng.gen_range(0..n)] += 1;
            }
            let c = rng.gen_range(-bound..=bound);
            (Monomial::from_exponents(exps), integer(c))
        })
        .collect();
    Polynomial::from_terms(vars, terms)
}

pub fn nonzero_poly<R: Rng>(rng: &mut R, vars: &VarSet, max_degree: u32, max_terms: usize, bound: i64) -> Polynomial {
    loop {
        let p = poly(rng, vars, max_degree, max_terms, bound);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn matrix<R: Rng>(rng: &mut R, vars: &VarSet, rows: usize, cols: usize, max_degree: u32) -> PolyMatrix {
    let entries = (0..rows * cols)
        .map(|_| poly(rng, vars, max_degree, 3, 3))
        .collect();
    PolyMatrix::new(vars, rows, cols, entries).unwrap()
}

/// A product of `ops` random elementary operations with multipliers of
/// degree at most `multiplier_degree`, plus occasional swaps and scalings.
pub fn unimodular<R: Rng>(rng: &mut R, vars: &VarSet, n: usize, ops: usize, multiplier_degree: u32) -> PolyMatrix {
    let mut u = PolyMatrix::identity(vars, n);
    for _ in 0..ops {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        match rng.gen_range(0..10) {
            0 => u.swap_rows(a, b),
            1 => {
                let c: i64 = *[-2, -1, 2, 3].choose(rng).unwrap();
                u.scale_row(a, &integer(c));
            }
            _ => {
                let q = nonzero_poly(rng, vars, multiplier_degree, 2, 2);
                u.add_row_multiple(a, b, &q);
            }
        }
    }
    u
}

/// `z - c` for a small integer `c`, in the last variable.
fn tail_root<R: Rng>(rng: &mut R, vars: &VarSet) -> Polynomial {
    let z = Polynomial::var(vars, vars.len() - 1);
    &z - &Polynomial::from_int(vars, rng.gen_range(-3..=3))
}

/// A chain factor `z_i - f` with `f` of degree at most one in the later
/// variables.
fn chain_factor<R: Rng>(rng: &mut R, vars: &VarSet, i: usize) -> Polynomial {
    let n = vars.len();
    let mut f = Polynomial::from_int(vars, rng.gen_range(-2..=2));
    for j in i + 1..n {
        let c = rng.gen_range(-1..=1);
        if c != 0 {
            f = &f + &Polynomial::var(vars, j).scale(&integer(c));
        }
    }
    &Polynomial::var(vars, i) - &f
}

/// Invariant factors `1 | s_2 | s_3` of a qualifying 3x3 Smith form whose
/// determinant is a chain times a product of rational linear factors in the
/// last variable.
pub fn chain_smith<R: Rng>(rng: &mut R, vars: &VarSet) -> Vec<Polynomial> {
    let one = Polynomial::one(vars);
    let s2 = if rng.gen_bool(0.5) { tail_root(rng, vars) } else { one.clone() };
    let mut s3 = s2.clone();
    for i in 0..vars.len() - 1 {
        if rng.gen_bool(0.7) {
            s3 = &s3 * &chain_factor(rng, vars, i);
        }
    }
    if rng.gen_bool(0.5) {
        s3 = &s3 * &tail_root(rng, vars);
    }
    if s3.is_constant() {
        s3 = &s3 * &chain_factor(rng, vars, 0);
    }
    vec![one, s2, s3]
}
