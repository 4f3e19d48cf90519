//! Sparse multivariate polynomials over a fixed variable list.
//!
//! A homogeneous polynomial `P` of degree `k` doubles as the symmetric
//! `k`-linear form `φ` with `φ(w, …, w) = P(w)`. Contraction uses the
//! normalization `ι_v P = (1/k)·D_v P`, so that `ι_w^k P = P(w)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Ordered list of variable names, i.e. a chosen dual basis of `W`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

impl VarContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("at least one variable is required".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!("`{name}` is not an identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidContext(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    /// `x1, …, xn`.
    pub fn standard(n: usize) -> Arc<Self> {
        Self::with_prefix("x", n)
    }

    pub fn with_prefix(prefix: &str, n: usize) -> Arc<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("valid standard context")
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// A context with `name` prepended as variable 0.
    pub fn prepend(&self, name: &str) -> Arc<Self> {
        let mut fresh = name.to_string();
        while self.names.contains(&fresh) {
            fresh.push('_');
        }
        let mut names = vec![fresh];
        names.extend(self.names.iter().cloned());
        Arc::new(Self { names })
    }

    fn describe(&self) -> String {
        self.names.join(" ")
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn check_context(a: &Arc<VarContext>, b: &Arc<VarContext>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch {
            left: a.describe(),
            right: b.describe(),
        })
    }
}

/// Exponent vector of a monomial. The derived ordering is lexicographic on
/// the exponent vector and only serves as a storage key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        self.divides(other)
            .then(|| Self(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The pure power `x_i^e` when the monomial is one.
    pub fn pure_power(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::one();
        for (x, &e) in point.iter().zip(&self.0) {
            if e > 0 {
                acc *= scalar::pow(x, e as usize);
            }
        }
        acc
    }
}

/// All monomials of total degree `degree` in `n` variables, in lexicographic
/// order of exponent vectors (largest first).
pub fn monomials_of_degree(n: usize, degree: usize) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, n: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            fill(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(n), n, degree as u32, &mut out);
    out
}

/// A point of `W`, written in the basis dual to the context variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zero(n: usize) -> Self {
        Self(vec![Scalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self(values.iter().map(|&v| scalar::int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self(self.0.iter().map(|a| a * c).collect())
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: n,
                found: self.0.len(),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Arc<VarContext>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Arc<VarContext>, c: Scalar) -> Self {
        Self::term(ctx, Monomial::one(ctx.n()), c)
    }

    pub fn var(ctx: &Arc<VarContext>, i: usize) -> Self {
        Self::term(ctx, Monomial::var(ctx.n(), i), Scalar::one())
    }

    pub fn term(ctx: &Arc<VarContext>, monomial: Monomial, c: Scalar) -> Self {
        assert_eq!(monomial.0.len(), ctx.n(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(monomial, c);
        }
        Self {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Sums repeated monomials and drops zero coefficients.
    pub fn from_terms(ctx: &Arc<VarContext>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), ctx.n(), "monomial arity");
            *map.entry(m).or_insert_with(Scalar::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self {
            ctx: ctx.clone(),
            terms: map,
        }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms. The zero polynomial has none.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Degree-`d` homogeneous part.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Smallest degree carrying a nonzero term.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_context(&self.ctx, &other.ctx)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m, c);
        }
        Ok(Self {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_context(&self.ctx, &other.ctx)?;
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                accumulate(&mut terms, &a.mul(b), &(ca * cb));
            }
        }
        Ok(Self {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    fn neg_ref(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(&self.ctx, Scalar::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, w: &Vector) -> Result<Scalar> {
        w.check_len(self.ctx.n())?;
        Ok(self
            .terms
            .iter()
            .fold(Scalar::zero(), |acc, (m, c)| acc + c * m.evaluate(&w.0)))
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.0[i];
            (e > 0).then(|| {
                let mut exps = m.0.clone();
                exps[i] -= 1;
                (Monomial(exps), c * scalar::int(e as i64))
            })
        });
        Self::from_terms(&self.ctx, terms)
    }

    /// `D_v P = Σ v_i ∂P/∂x_i`.
    pub fn directional_derivative(&self, v: &Vector) -> Result<Self> {
        v.check_len(self.ctx.n())?;
        let mut acc = Self::zero(&self.ctx);
        for (i, vi) in v.0.iter().enumerate() {
            if !vi.is_zero() {
                acc = &acc + &self.partial_derivative(i).scale(vi);
            }
        }
        Ok(acc)
    }

    /// `ι_v^j P` for homogeneous `P`. Contracting a constant gives zero.
    pub fn contract(&self, v: &Vector, j: usize) -> Result<Self> {
        v.check_len(self.ctx.n())?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        let k = self.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if j > k {
            return Ok(Self::zero(&self.ctx));
        }
        let mut acc = self.clone();
        for step in 0..j {
            let deg = k - step;
            acc = acc.directional_derivative(v)?.scale(&scalar::ratio(1, deg as i64));
        }
        Ok(acc)
    }

    /// The value `φ(w_1, …, w_k)` of the symmetric multilinear form of `P`.
    pub fn polarize(&self, ws: &[Vector]) -> Result<Scalar> {
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        let k = self.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if ws.len() != k {
            return Err(Error::Arity {
                degree: k,
                given: ws.len(),
            });
        }
        let mut acc = self.clone();
        for w in ws.iter().rev() {
            acc = acc.contract(w, 1)?;
        }
        Ok(acc.coefficient(&Monomial::one(self.ctx.n())))
    }

    /// Composition `P(q_1, …, q_n)`; all `q_i` share one context.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Self> {
        if images.len() != self.ctx.n() {
            return Err(Error::DimensionMismatch {
                expected: self.ctx.n(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(q) => q.ctx.clone(),
            None => return Ok(self.clone()),
        };
        for q in images {
            check_context(&target, &q.ctx)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|q| vec![Self::constant(&target, Scalar::one()), q.clone()])
            .collect();
        let mut acc = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut product = Self::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    product = &product * &powers[i][e];
                }
            }
            acc = &acc + &product;
        }
        Ok(acc)
    }

    /// `P(x + p)`.
    pub fn translate(&self, p: &Vector) -> Result<Self> {
        p.check_len(self.ctx.n())?;
        let images: Vec<Polynomial> = (0..self.ctx.n())
            .map(|i| &Self::var(&self.ctx, i) + &Self::constant(&self.ctx, p.0[i].clone()))
            .collect();
        self.substitute(&images)
    }

    /// Reinterprets the polynomial in `ctx`, whose variables `offset..offset+n`
    /// are this polynomial's variables.
    pub fn embed(&self, ctx: &Arc<VarContext>, offset: usize) -> Self {
        assert!(offset + self.ctx.n() <= ctx.n(), "embedding out of range");
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; ctx.n()];
            e[offset..offset + m.0.len()].copy_from_slice(&m.0);
            (Monomial(e), c.clone())
        });
        Self::from_terms(ctx, terms)
    }

    /// Inverse of [`Polynomial::embed`]; `None` if a dropped variable occurs.
    pub fn restrict(&self, ctx: &Arc<VarContext>, offset: usize) -> Option<Self> {
        let n = ctx.n();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let outside = m.0[..offset].iter().chain(&m.0[offset + n..]).any(|&e| e > 0);
            if outside {
                return None;
            }
            terms.push((Monomial(m.0[offset..offset + n].to_vec()), c.clone()));
        }
        Some(Self::from_terms(ctx, terms))
    }

    /// Divides by the leading coefficient in the storage ordering; used only
    /// to pick a canonical representative of a line.
    pub fn monic_by_last(&self) -> Self {
        match self.terms.values().next_back() {
            Some(c) => self.scale(&(Scalar::one() / c)),
            None => self.clone(),
        }
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, Scalar>, m: &Monomial, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(m) {
        Some(existing) => {
            *existing += c;
            if existing.is_zero() {
                terms.remove(m);
            }
        }
        None => {
            terms.insert(m.clone(), c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the text syntax accepted by [`crate::text::parse_polynomial`],
    /// highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        for (idx, (m, c)) in ordered.into_iter().enumerate() {
            let negative = scalar::is_negative(c);
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        let name = &self.ctx.names[i];
                        if e == 1 {
                            name.clone()
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
            let coeff = scalar::format_scalar(&magnitude);
            if factors.is_empty() {
                write!(f, "{coeff}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::text::parse_polynomial;

    fn ctx2() -> Arc<VarContext> {
        VarContext::standard(2)
    }

    fn p(ctx: &Arc<VarContext>, s: &str) -> Polynomial {
        parse_polynomial(ctx, s).unwrap()
    }

    #[test]
    fn context_validation() {
        assert!(VarContext::new(Vec::<String>::new()).is_err());
        assert!(VarContext::new(["x", "x"]).is_err());
        assert!(VarContext::new(["x", "2y"]).is_err());
        assert_eq!(VarContext::new(["a", "b"]).unwrap().n(), 2);
    }

    #[test]
    fn ring_operations() {
        let c = ctx2();
        let sum = p(&c, "x1 + x2");
        let diff = p(&c, "x1 - x2");
        assert_eq!(&sum * &diff, p(&c, "x1^2 - x2^2"));
        assert_eq!(&sum + &Polynomial::zero(&c), sum);
        assert_eq!(p(&c, "2*x1").scale(&ratio(1, 2)), p(&c, "x1"));
        assert!((&sum - &sum).is_zero());
        assert_eq!((&sum - &sum).num_terms(), 0);
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = Polynomial::var(&VarContext::standard(2), 0);
        let b = Polynomial::var(&VarContext::standard(3), 0);
        assert!(matches!(a.checked_add(&b), Err(Error::ContextMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn evaluation() {
        let c = ctx2();
        assert_eq!(p(&c, "x1^2*x2").evaluate(&Vector::from_ints(&[2, 3])).unwrap(), int(12));
        assert_eq!(p(&c, "x1^2*x2 - 4*x2^3").evaluate(&Vector::zero(2)).unwrap(), int(0));
        let c1 = VarContext::new(["x"]).unwrap();
        assert_eq!(p(&c1, "x^3").evaluate(&Vector::from_ints(&[5])).unwrap(), int(125));
        assert!(p(&c, "x1").evaluate(&Vector::from_ints(&[1])).is_err());
    }

    #[test]
    fn contraction_examples() {
        let c1 = VarContext::new(["x"]).unwrap();
        assert_eq!(
            p(&c1, "x^3").contract(&Vector::from_ints(&[1]), 1).unwrap(),
            p(&c1, "x^2")
        );
        let c = ctx2();
        assert_eq!(
            p(&c, "x1*x2").contract(&Vector::basis(2, 0), 1).unwrap(),
            p(&c, "1/2*x2")
        );
        let full = p(&c, "x1^2*x2").contract(&Vector::from_ints(&[2, 3]), 3).unwrap();
        assert_eq!(full, Polynomial::constant(&c, int(12)));
        assert!(p(&c, "x1^2").contract(&Vector::basis(2, 0), 3).unwrap().is_zero());
        assert!(Polynomial::constant(&c, int(3))
            .contract(&Vector::basis(2, 0), 1)
            .unwrap()
            .is_zero());
        assert!(Polynomial::zero(&c)
            .contract(&Vector::basis(2, 0), 1)
            .unwrap()
            .is_zero());
        assert_eq!(
            p(&c, "x1^2 + x2").contract(&Vector::basis(2, 0), 1),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn polarization_examples() {
        let c = ctx2();
        let form = p(&c, "x1*x2");
        assert_eq!(
            form.polarize(&[Vector::basis(2, 0), Vector::basis(2, 1)]).unwrap(),
            ratio(1, 2)
        );
        let w = Vector::from_ints(&[3, -2]);
        assert_eq!(
            form.polarize(&[w.clone(), w.clone()]).unwrap(),
            form.evaluate(&w).unwrap()
        );
        assert_eq!(
            form.polarize(std::slice::from_ref(&w)),
            Err(Error::Arity { degree: 2, given: 1 })
        );
    }

    #[test]
    fn substitution_and_translation() {
        let c = ctx2();
        let q = p(&c, "x1*x2");
        let shifted = q.translate(&Vector::from_ints(&[1, 2])).unwrap();
        assert_eq!(shifted, p(&c, "x1*x2 + 2*x1 + x2 + 2"));
        assert_eq!(shifted.order(), Some(0));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 4), vec![Monomial::new(vec![4])]);
        assert_eq!(monomials_of_degree(4, 0), vec![Monomial::one(4)]);
    }

    #[test]
    fn display_round_trips() {
        let c = VarContext::standard(3);
        let poly = p(&c, "3/2*x1^2*x2 - x3 + 1 - 2/3*x2*x3");
        assert_eq!(p(&c, &poly.to_string()), poly);
    }
}
