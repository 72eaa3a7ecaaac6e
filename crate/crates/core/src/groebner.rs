//! Reduced Gröbner bases by Buchberger's algorithm.
//!
//! The engine works on integer-coefficient term lists sorted under the
//! requested order and reduces fraction free, removing the integer content
//! after each reduction. Pairs are chosen by the normal strategy (smallest
//! lcm first) and pruned with Buchberger's coprime and chain criteria. As
//! soon as a nonzero constant appears the basis is `{1}`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{usage, Result};
use crate::polyring::{divrem_multi, Monomial, MonomialOrder, Polynomial, VarSet};

/// Nonzero generators of an ideal over a shared variable set.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealGens {
    vars: VarSet,
    gens: Vec<Polynomial>,
}

impl IdealGens {
    /// Zero generators are dropped; an empty or all-zero list is rejected.
    pub fn new(gens: Vec<Polynomial>) -> Result<Self> {
        let vars = gens
            .first()
            .map(|g| g.vars().clone())
            .ok_or_else(|| usage("an ideal needs at least one generator"))?;
        if gens.iter().any(|g| g.vars() != &vars) {
            return Err(usage("ideal generators use different variable sets"));
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(usage("the zero ideal is not a valid generator set"));
        }
        Ok(IdealGens { vars, gens })
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }
}

/// The unique reduced Gröbner basis of an ideal under `order`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedGB {
    vars: VarSet,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
}

impl ReducedGB {
    /// Basis elements, monic and sorted by decreasing leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }
}

/// Leading monomial of `p` under `order`.
pub fn leading_monomial(p: &Polynomial, order: &MonomialOrder) -> Option<Monomial> {
    p.terms()
        .iter()
        .map(|t| &t.0)
        .max_by(|a, b| order.cmp(a, b))
        .cloned()
}

/// S-polynomial of `f` and `g` under `order`, with rational coefficients.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let lead = |p: &Polynomial| {
        p.terms()
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .cloned()
            .expect("nonzero")
    };
    let (fm, fc) = lead(f);
    let (gm, gc) = lead(g);
    let l = fm.lcm(&gm);
    &f.mul_monomial(&fm.quotient_of(&l), &fc.recip())
        - &g.mul_monomial(&gm.quotient_of(&l), &gc.recip())
}

/// Remainder of `p` on division by the basis; zero iff `p` is in the ideal.
pub fn normal_form(p: &Polynomial, gb: &ReducedGB) -> Polynomial {
    assert!(p.vars() == &gb.vars, "normal_form over a different variable set");
    divrem_multi(p, &gb.basis, &gb.order)
        .expect("basis is nonempty and nonzero")
        .1
}

/// True iff the generators span the whole ring.
pub fn is_unit_ideal(gens: &IdealGens, order: &MonomialOrder) -> bool {
    buchberger_reduced(gens, order).is_unit()
}

pub fn buchberger_reduced(gens: &IdealGens, order: &MonomialOrder) -> ReducedGB {
    assert_eq!(order.nvars(), gens.vars.len(), "order arity mismatch");
    let vars = gens.vars.clone();
    let unit = || ReducedGB {
        vars: vars.clone(),
        order: order.clone(),
        basis: vec![Polynomial::one(&vars)],
    };
    let engine = Engine { order };
    let mut g: Vec<Terms> = Vec::new();
    for p in &gens.gens {
        if p.is_nonzero_constant() {
            return unit();
        }
        let t = engine.reduce(engine.from_poly(p), &g);
        if t.is_empty() {
            continue;
        }
        if t[0].0.is_one() {
            return unit();
        }
        g.push(t);
    }

    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    while let Some(pair) = engine.select(&pairs, &g) {
        pairs.remove(&pair);
        let (i, j) = pair;
        let (mi, mj) = (&g[i][0].0, &g[j][0].0);
        if mi.is_coprime(mj) {
            continue;
        }
        let l = mi.lcm(mj);
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k][0].0.divides(&l)
                && !pairs.contains(&ordered(i, k))
                && !pairs.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        let s = engine.spoly(&g[i], &g[j]);
        let h = engine.reduce(s, &g);
        if h.is_empty() {
            continue;
        }
        if h[0].0.is_one() {
            return unit();
        }
        let t = g.len();
        g.push(h);
        for k in 0..t {
            pairs.insert((k, t));
        }
    }

    // minimal basis: drop elements whose leading monomial is divisible by
    // another's (keeping the earliest among equal leading monomials)
    let mut keep: Vec<Terms> = Vec::new();
    for (idx, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(o, q)| {
            o != idx && q[0].0.divides(&p[0].0) && (q[0].0 != p[0].0 || o < idx)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Terms> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let r = engine.reduce(keep[i].clone(), &others);
        reduced.push(engine.to_monic_poly(&vars, r));
    }
    reduced.sort_by(|a, b| {
        let la = leading_monomial(a, order).expect("nonzero");
        let lb = leading_monomial(b, order).expect("nonzero");
        order.cmp(&lb, &la)
    });
    ReducedGB {
        vars,
        order: order.clone(),
        basis: reduced,
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

type Terms = Vec<(Monomial, BigInt)>;

struct Engine<'a> {
    order: &'a MonomialOrder,
}

impl Engine<'_> {
    fn from_poly(&self, p: &Polynomial) -> Terms {
        let den = p
            .terms()
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut t: Terms = p
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
            .collect();
        t.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        make_primitive(&mut t);
        t
    }

    fn to_monic_poly(&self, vars: &VarSet, t: Terms) -> Polynomial {
        let lc = t[0].1.clone();
        Polynomial::from_terms(
            vars,
            t.into_iter()
                .map(|(m, c)| (m, BigRational::new(c, lc.clone())))
                .collect(),
        )
    }

    fn select(&self, pairs: &BTreeSet<(usize, usize)>, g: &[Terms]) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), Monomial)> = None;
        for &(i, j) in pairs {
            let l = g[i][0].0.lcm(&g[j][0].0);
            let better = match &best {
                None => true,
                Some((_, bl)) => self.order.cmp(&l, bl) == Ordering::Less,
            };
            if better {
                best = Some(((i, j), l));
            }
        }
        best.map(|b| b.0)
    }

    fn spoly(&self, f: &Terms, g: &Terms) -> Terms {
        let (fm, fc) = &f[0];
        let (gm, gc) = &g[0];
        let l = fm.lcm(gm);
        let d = fc.gcd(gc);
        let a = gc / &d;
        let b = fc / &d;
        let left = scale_shift(f, &fm.quotient_of(&l), &a);
        let mut out = self.sub_scaled(&left, g, &gm.quotient_of(&l), &b);
        make_primitive(&mut out);
        out
    }

    /// `a - c * m * b`.
    fn sub_scaled(&self, a: &Terms, b: &Terms, m: &Monomial, c: &BigInt) -> Terms {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut bi = b.iter().map(|(bm, bc)| (bm.mul(m), bc * c)).peekable();
        while i < a.len() {
            let Some((bm, _)) = bi.peek() else { break };
            match self.order.cmp(&a[i].0, bm) {
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

    /// Full fraction-free reduction of `p` modulo `basis`; the result is
    /// primitive with positive leading coefficient.
    fn reduce(&self, p: Terms, basis: &[Terms]) -> Terms {
        let mut rem: Terms = Vec::new();
        let mut work = p;
        let mut steps = 0usize;
        while !work.is_empty() {
            let hit = basis.iter().find(|g| g[0].0.divides(&work[0].0));
            match hit {
                Some(g) => {
                    let (lm, lc) = &work[0];
                    let d = lc.gcd(&g[0].1);
                    let a = &g[0].1 / &d;
                    let b = lc / &d;
                    let m = g[0].0.quotient_of(lm);
                    if !a.is_one() {
                        for t in rem.iter_mut().chain(work.iter_mut()) {
                            t.1 *= &a;
                        }
                    }
                    work = self.sub_scaled(&work, g, &m, &b);
                    steps += 1;
                    if steps % 8 == 0 {
                        remove_joint_content(&mut rem, &mut work);
                    }
                }
                None => rem.push(work.remove(0)),
            }
        }
        make_primitive(&mut rem);
        rem
    }
}

fn scale_shift(p: &Terms, m: &Monomial, c: &BigInt) -> Terms {
    p.iter().map(|(pm, pc)| (pm.mul(m), pc * c)).collect()
}

fn make_primitive(t: &mut Terms) {
    if t.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, c) in t.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if t[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for e in t.iter_mut() {
            e.1 = &e.1 / &g;
        }
    }
}

fn remove_joint_content(a: &mut Terms, b: &mut Terms) {
    let mut g = BigInt::zero();
    for (_, c) in a.iter().chain(b.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for e in a.iter_mut().chain(b.iter_mut()) {
        e.1 = &e.1 / &g;
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

    fn ideal(gs: &[&str]) -> IdealGens {
        IdealGens::new(gs.iter().map(|s| p(s)).collect()).unwrap()
    }

    fn lex() -> MonomialOrder {
        MonomialOrder::lex(3)
    }

    fn assert_buchberger_criterion(gb: &ReducedGB) {
        for (i, f) in gb.basis().iter().enumerate() {
            for g in &gb.basis()[i + 1..] {
                let s = s_polynomial(f, g, gb.order());
                assert!(normal_form(&s, gb).is_zero(), "S({f}, {g}) does not reduce");
            }
        }
    }

    #[test]
    fn complementary_pair_is_unit() {
        let gb = buchberger_reduced(&ideal(&["x", "1 - x"]), &lex());
        assert_eq!(gb.basis(), &[p("1")]);
        assert!(is_unit_ideal(&ideal(&["x", "1 - x"]), &lex()));
    }

    #[test]
    fn coordinate_ideal_is_already_reduced() {
        let gb = buchberger_reduced(&ideal(&["y", "x"]), &lex());
        assert_eq!(gb.basis(), &[p("x"), p("y")]);
        assert!(!gb.is_unit());
    }

    #[test]
    fn normal_forms() {
        let gx = buchberger_reduced(&ideal(&["x"]), &lex());
        assert!(normal_form(&p("x^2 + x*y"), &gx).is_zero());
        let gxy = buchberger_reduced(&ideal(&["x", "y"]), &lex());
        assert_eq!(normal_form(&p("1"), &gxy), p("1"));
        let gq = buchberger_reduced(&ideal(&["x^2 - 1"]), &lex());
        assert!(normal_form(&p("x^2*y - y"), &gq).is_zero());
    }

    #[test]
    fn twisted_cubic_lex() {
        // ideal of the twisted cubic (t, t^2, t^3)
        let gb = buchberger_reduced(&ideal(&["y - x^2", "z - x^3"]), &lex());
        assert_eq!(gb.basis(), &[p("x^2 - y"), p("x*y - z"), p("x*z - y^2"), p("y^3 - z^2")]);
        assert_buchberger_criterion(&gb);
    }

    #[test]
    fn reduced_basis_invariants_degrevlex() {
        let order = MonomialOrder::degrevlex(3);
        let gb = buchberger_reduced(&ideal(&["x^2*y - z", "x*y^2 - x", "y*z^2 + 3*x"]), &order);
        assert_buchberger_criterion(&gb);
        for (i, f) in gb.basis().iter().enumerate() {
            assert!(f.terms().iter().all(|t| !t.1.is_zero()));
            let lf = leading_monomial(f, &order).unwrap();
            let lc = f.terms().iter().find(|t| t.0 == lf).unwrap().1.clone();
            assert!(lc.is_one());
            for (j, g) in gb.basis().iter().enumerate() {
                if i != j {
                    let lg = leading_monomial(g, &order).unwrap();
                    assert!(f.terms().iter().all(|t| !lg.divides(&t.0)));
                }
            }
        }
    }

    #[test]
    fn zero_ideal_rejected() {
        assert!(IdealGens::new(vec![]).is_err());
        assert!(IdealGens::new(vec![p("0")]).is_err());
    }
}
