//! Multivariate gcd over Q by content/primitive-part recursion and
//! subresultant pseudo-remainder sequences.

use super::{Polynomial, VarSet};

/// Greatest common divisor, normalised to leading coefficient 1.
/// `gcd(p, 0)` is `p` made monic and `gcd(0, 0) = 0`.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    assert!(p.vars() == q.vars(), "gcd of polynomials over different variable sets");
    gcd_rec(p, q).monic()
}

/// Gcd of a sequence; zero for an empty or all-zero sequence.
pub fn gcd_all<'a, I>(vars: &VarSet, items: I) -> Polynomial
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut g = Polynomial::zero(vars);
    for p in items {
        if p.is_zero() {
            continue;
        }
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

fn gcd_rec(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return Polynomial::one(p.vars());
    }
    if p == q {
        return p.clone();
    }
    let v = (0..p.nvars())
        .find(|&v| p.contains_var(v) || q.contains_var(v))
        .expect("nonconstant polynomial has a variable");
    if !p.contains_var(v) {
        return gcd_rec(&content(q, v), p);
    }
    if !q.contains_var(v) {
        return gcd_rec(&content(p, v), q);
    }
    let cp = content(p, v);
    let cq = content(q, v);
    let pp = p.exact_div(&cp).expect("content divides");
    let qq = q.exact_div(&cq).expect("content divides");
    let c = gcd_rec(&cp, &cq);
    let g = subresultant_gcd(&pp, &qq, v);
    (&c * &g).monic()
}

/// Gcd of the coefficients of `p` viewed in `v`.
fn content(p: &Polynomial, v: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.vars());
    for c in p.univar_view(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, &c).monic();
        if g.is_constant() {
            return Polynomial::one(p.vars());
        }
    }
    g
}

fn primitive_in(p: &Polynomial, v: usize) -> Polynomial {
    let c = content(p, v);
    p.exact_div(&c).expect("content divides")
}

type Dense = Vec<Polynomial>;

fn degree(a: &Dense) -> usize {
    a.len() - 1
}

fn trim(a: &mut Dense) {
    while a.len() > 1 && a.last().is_some_and(Polynomial::is_zero) {
        a.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &Dense, b: &Dense) -> Dense {
    let db = degree(b);
    let lcb = &b[db];
    let mut r = a.clone();
    let mut e = degree(a) as i64 - db as i64 + 1;
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = degree(&r);
        let t = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&t * bc);
        }
        r.pop();
        if r.is_empty() {
            r.push(Polynomial::zero(lcb.vars()));
        }
        trim(&mut r);
        e -= 1;
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    if e > 0 {
        let f = lcb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Primitive gcd of two polynomials that are primitive in `v` and both
/// involve `v`.
fn subresultant_gcd(p: &Polynomial, q: &Polynomial, v: usize) -> Polynomial {
    let vars = p.vars();
    let (mut a, mut b) = (p.univar_view(v), q.univar_view(v));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Polynomial::one(vars);
    let mut h = Polynomial::one(vars);
    loop {
        let delta = (degree(&a) - degree(&b)) as u32;
        let r = prem(&a, &b);
        if r.len() == 1 && r[0].is_zero() {
            return primitive_in(&Polynomial::from_univar(vars, v, &b), v);
        }
        if r.len() == 1 {
            return Polynomial::one(vars);
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = r
            .iter()
            .map(|c| c.exact_div(&divisor).expect("subresultant division is exact"))
            .collect();
        g = a[degree(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn vs() -> VarSet {
        VarSet::new(["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &vs()).unwrap()
    }

    #[test]
    fn difference_of_squares_and_square() {
        let g = gcd(&p("x^2 - y^2"), &p("(x - y)^2"));
        assert_eq!(g, p("x - y"));
        assert!(p("x^2 - y^2").is_divisible_by(&g));
        assert!(p("(x - y)^2").is_divisible_by(&g));
    }

    #[test]
    fn degree_one_brute_force_maximality() {
        // every monic common divisor of total degree <= 1 with small
        // coefficients divides the computed gcd
        let (a, b) = (p("x^2 - y^2"), p("(x - y)^2"));
        let g = gcd(&a, &b);
        for cx in -2..=2 {
            for cy in -2..=2 {
                for c0 in -2..=2 {
                    let d = p(&format!("{cx}*x + {cy}*y + {c0}"));
                    if d.is_zero() || d.is_constant() {
                        continue;
                    }
                    if a.is_divisible_by(&d) && b.is_divisible_by(&d) {
                        assert!(g.is_divisible_by(&d), "{d}");
                    }
                }
            }
        }
    }

    #[test]
    fn zero_conventions() {
        assert_eq!(gcd(&p("2*x + 4"), &p("0")), p("x + 2"));
        assert!(gcd(&p("0"), &p("0")).is_zero());
        assert_eq!(gcd(&p("0"), &p("-3")), p("1"));
    }

    #[test]
    fn shared_factor_over_three_variables() {
        let common = p("x*y - z^2 + 1");
        let a = &common * &p("x + z");
        let b = &common * &p("y^2 - z");
        assert_eq!(gcd(&a, &b), common.monic());
    }

    #[test]
    fn content_in_main_variable() {
        let a = p("(y + z) * (x^2 + 1)");
        let b = p("(y + z) * (y - 1) * x");
        assert_eq!(gcd(&a, &b), p("y + z"));
    }

    #[test]
    fn univariate_high_degree() {
        let a = p("(z + 1)^2 * (z - 1) * (z^2 + 3)");
        let b = p("(z + 1) * (z^2 + 3) * (z - 5)");
        assert_eq!(gcd(&a, &b), p("(z + 1) * (z^2 + 3)"));
    }
}
