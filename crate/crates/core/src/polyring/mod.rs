//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every [`Polynomial`] carries the [`VarSet`] it lives over. Terms are
//! stored in strictly decreasing lexicographic order with respect to the
//! declared variable order, which is also the "global" order used for
//! normalisation (leading coefficient 1) of gcds and minors.

mod divide;
mod gcd;
mod order;
mod parse;
mod univariate;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{usage, Error, Result};

pub use divide::divrem_multi;
pub use gcd::{gcd, gcd_all};
pub use order::{MonomialOrder, OrderKind};
pub use parse::{parse_polynomial, parse_polynomial_at};
pub use univariate::{rational_roots, LinearSplit};

/// Exact field element. `BigRational` is always kept in lowest terms with a
/// positive denominator.
pub type Coefficient = BigRational;

pub fn rational(num: i64, den: i64) -> Coefficient {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Ordered, pairwise distinct variable names.
#[derive(Clone)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(usage("a variable set needs at least one variable"));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(usage(format!("`{name}` is not a valid variable name")));
            }
            if names[..i].contains(name) {
                return Err(usage(format!("variable `{name}` declared twice")));
            }
        }
        Ok(VarSet(names.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn lex(&self) -> MonomialOrder {
        MonomialOrder::lex(self.len())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet{:?}", &*self.0)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(" "))
    }
}

/// Exponent vector. The derived `Ord` is lexicographic in declared order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e.into())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(self.0.iter()).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A polynomial in `Q[vars]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: VarSet,
    terms: Vec<(Monomial, Coefficient)>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Coefficient::one())
    }

    pub fn constant(vars: &VarSet, c: Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero(vars);
        }
        Polynomial {
            vars: vars.clone(),
            terms: vec![(Monomial::one(vars.len()), c)],
        }
    }

    pub fn from_int(vars: &VarSet, c: i64) -> Self {
        Self::constant(vars, integer(c))
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        Polynomial {
            vars: vars.clone(),
            terms: vec![(Monomial::var(vars.len(), i), Coefficient::one())],
        }
    }

    /// Look a variable up by name.
    pub fn var_named(vars: &VarSet, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| usage(format!("unknown variable `{name}`")))?;
        Ok(Self::var(vars, i))
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: Coefficient) -> Self {
        assert_eq!(m.exponents().len(), vars.len());
        if c.is_zero() {
            return Self::zero(vars);
        }
        Polynomial {
            vars: vars.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Canonicalise an arbitrary list of terms (merging duplicates and
    /// dropping zeros).
    pub fn from_terms(vars: &VarSet, mut terms: Vec<(Monomial, Coefficient)>) -> Self {
        for (m, _) in &terms {
            assert_eq!(m.exponents().len(), vars.len(), "monomial arity mismatch");
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Coefficient)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Polynomial {
            vars: vars.clone(),
            terms: out,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in strictly decreasing lexicographic order.
    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// True for nonzero constants as well as zero.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn constant_value(&self) -> Option<Coefficient> {
        match self.terms.as_slice() {
            [] => Some(Coefficient::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coefficient)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Leading coefficient under the global (lex) order; zero for zero.
    pub fn leading_coeff(&self) -> Coefficient {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(Coefficient::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// Degree in variable `v`; `None` for the zero polynomial.
    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponents()[v]).max()
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[v] > 0)
    }

    /// Indices of variables that occur in at least one term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&v| self.contains_var(v)).collect()
    }

    /// `Some(v)` when the polynomial is nonconstant and involves only `v`.
    pub fn sole_variable(&self) -> Option<usize> {
        match self.support().as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        // multiplying by a monomial preserves lex order
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Scale so that the leading coefficient (lex) is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() || self.leading_coeff().is_one() {
            return self.clone();
        }
        let inv = self.leading_coeff().recip();
        self.scale(&inv)
    }

    /// Scale to integer coefficients with content 1 and positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            let scaled = c.numer() * (&den / c.denom());
            num = num.gcd(&scaled);
        }
        let mut factor = BigRational::new(den, num);
        if self.leading_coeff().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.vars != other.vars {
            return Err(usage(format!(
                "variable sets differ: [{}] vs [{}]",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m, c);
        }
        let mut acc: HashMap<Monomial, Coefficient> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coefficient)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Exact quotient `self / divisor`; errors unless the division leaves
    /// no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_same(divisor)?;
        if divisor.is_zero() {
            return Err(Error::Divisibility("division by zero".into()));
        }
        divide::exact_div_lex(self, divisor).ok_or_else(|| {
            Error::Divisibility(format!("({divisor}) does not divide ({self})"))
        })
    }

    /// True if `divisor` divides `self` exactly (zero divides only zero).
    pub fn is_divisible_by(&self, divisor: &Polynomial) -> bool {
        if divisor.is_zero() {
            return self.is_zero();
        }
        self.vars == divisor.vars && divide::exact_div_lex(self, divisor).is_some()
    }

    /// Substitute polynomials for variables (by index). Unassigned
    /// variables map to themselves.
    pub fn substitute_indexed(&self, assignments: &[(usize, Polynomial)]) -> Result<Polynomial> {
        let n = self.nvars();
        let mut images: Vec<Option<&Polynomial>> = vec![None; n];
        for (v, img) in assignments {
            if *v >= n {
                return Err(usage(format!("variable index {v} out of range")));
            }
            self.check_same(img)?;
            images[*v] = Some(img);
        }
        if images.iter().all(Option::is_none) {
            return Ok(self.clone());
        }
        // the part of each monomial on unassigned variables is carried over
        // directly; powers of images are cached per variable
        let mut power_cache: Vec<Vec<Polynomial>> = vec![Vec::new(); n];
        let mut acc: Vec<Polynomial> = Vec::new();
        for (m, c) in &self.terms {
            let mut kept = m.exponents().to_vec();
            let mut term = Polynomial::one(&self.vars);
            for v in 0..n {
                if let Some(img) = images[v] {
                    let e = kept[v] as usize;
                    kept[v] = 0;
                    if e == 0 {
                        continue;
                    }
                    let cache = &mut power_cache[v];
                    if cache.is_empty() {
                        cache.push(Polynomial::one(&self.vars));
                    }
                    while cache.len() <= e {
                        let next = &cache[cache.len() - 1] * img;
                        cache.push(next);
                    }
                    term = &term * &cache[e];
                }
            }
            acc.push(term.mul_monomial(&Monomial::from_exponents(kept), c));
        }
        Ok(sum(&self.vars, acc))
    }

    /// Substitute by variable name.
    pub fn substitute(&self, assignments: &[(&str, Polynomial)]) -> Result<Polynomial> {
        let mut indexed = Vec::with_capacity(assignments.len());
        for (name, img) in assignments {
            let v = self
                .vars
                .index_of(name)
                .ok_or_else(|| usage(format!("unknown variable `{name}`")))?;
            indexed.push((v, img.clone()));
        }
        self.substitute_indexed(&indexed)
    }

    /// Coefficients `c_0..c_d` (free of `v`) with `self = sum c_i v^i`.
    /// The zero polynomial gives an empty vector.
    pub fn univar_view(&self, v: usize) -> Vec<Polynomial> {
        let d = match self.degree_in(v) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut buckets: Vec<Vec<(Monomial, Coefficient)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let mut e = m.exponents().to_vec();
            let k = e[v] as usize;
            e[v] = 0;
            buckets[k].push((Monomial::from_exponents(e), c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.vars, t))
            .collect()
    }

    /// Inverse of [`Polynomial::univar_view`].
    pub fn from_univar(vars: &VarSet, v: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut parts = Vec::with_capacity(coeffs.len());
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = vec![0u32; vars.len()];
            e[v] = k as u32;
            parts.push(c.mul_monomial(&Monomial::from_exponents(e), &Coefficient::one()));
        }
        sum(vars, parts)
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, point: &[Coefficient]) -> Result<Coefficient> {
        if point.len() != self.nvars() {
            return Err(usage(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.nvars()
            )));
        }
        let mut total = Coefficient::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Re-express over another variable set by name. Fails if a variable
    /// that occurs is missing from `target`.
    pub fn rebase(&self, target: &VarSet) -> Result<Polynomial> {
        let map: Vec<Option<usize>> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (v, &k) in m.exponents().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let t = map[v].ok_or_else(|| {
                    usage(format!("variable `{}` not in target set", self.vars.name(v)))
                })?;
                e[t] = k;
            }
            terms.push((Monomial::from_exponents(e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }
}

/// Sum of a sequence of polynomials over `vars`.
pub fn sum(vars: &VarSet, parts: Vec<Polynomial>) -> Polynomial {
    let mut all = Vec::new();
    for p in parts {
        all.extend(p.terms);
    }
    Polynomial::from_terms(vars, all)
}

pub fn product<'a, I>(vars: &VarSet, factors: I) -> Polynomial
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    factors
        .into_iter()
        .fold(Polynomial::one(vars), |acc, f| &acc * f)
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = format_monomial(&self.vars, m);
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

fn format_monomial(vars: &VarSet, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(v).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(v), e)),
        }
    }
    parts.join("*")
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                if let Err(e) = self.check_same(rhs) {
                    panic!("{e}");
                }
                $body(self, rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Polynomial, b: &Polynomial| a.add_unchecked(b, false));
forward_binop!(Sub, sub, |a: &Polynomial, b: &Polynomial| a.add_unchecked(b, true));
forward_binop!(Mul, mul, |a: &Polynomial, b: &Polynomial| a.mul_unchecked(b));

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        *self = &*self - rhs;
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
