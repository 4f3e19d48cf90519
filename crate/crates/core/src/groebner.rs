//! A small Buchberger engine over the rationals.
//!
//! Enough to decide emptiness of projective base loci, saturate a
//! homogeneous ideal by the irrelevant ideal, and read off graded pieces.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{check_context, monomials_of_degree, Monomial, Polynomial, VarContext};
use crate::scalar::Scalar;
use crate::space::FormSpace;

pub const DEFAULT_DEGREE_CAP: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Largest allowed degree of an S-pair lcm.
    pub degree_cap: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        Self {
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

type Term = (Monomial, Scalar);

/// Terms sorted decreasingly in the active order.
fn sorted_terms(p: &Polynomial, order: MonomialOrder) -> Vec<Term> {
    let mut terms: Vec<Term> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    terms
}

/// `p - c·shift·g`, both inputs sorted.
fn sub_multiple(p: &[Term], c: &Scalar, shift: &Monomial, g: &[Term], order: MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut gi = g.iter().map(|(m, gc)| (m.mul(shift), gc * c)).peekable();
    let mut pi = p.iter().peekable();
    loop {
        match (pi.peek(), gi.peek()) {
            (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                Ordering::Greater => out.push(pi.next().unwrap().clone()),
                Ordering::Less => {
                    let (m, v) = gi.next().unwrap();
                    out.push((m, -v));
                }
                Ordering::Equal => {
                    let (m, a) = pi.next().unwrap().clone();
                    let (_, b) = gi.next().unwrap();
                    let v = a - b;
                    if !v.is_zero() {
                        out.push((m, v));
                    }
                }
            },
            (Some(_), None) => out.push(pi.next().unwrap().clone()),
            (None, Some(_)) => {
                let (m, v) = gi.next().unwrap();
                out.push((m, -v));
            }
            (None, None) => break,
        }
    }
    out
}

/// Full reduction of `p` by `basis` (whose elements are monic).
fn normal_form(p: Vec<Term>, basis: &[Vec<Term>], order: MonomialOrder) -> Vec<Term> {
    let mut rest = p;
    let mut done: Vec<Term> = Vec::new();
    while let Some((lead, coeff)) = rest.first().cloned() {
        let divisor = basis.iter().find(|g| g[0].0.divides(&lead));
        match divisor {
            Some(g) => {
                let shift = g[0].0.quotient_of(&lead).expect("divides");
                rest = sub_multiple(&rest, &coeff, &shift, g, order);
            }
            None => {
                done.push(rest.remove(0));
            }
        }
    }
    done
}

fn make_monic(mut p: Vec<Term>) -> Vec<Term> {
    if let Some((_, lc)) = p.first() {
        if !lc.is_one() {
            let inv = Scalar::one() / lc;
            for (_, c) in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
    p
}

fn s_polynomial(f: &[Term], g: &[Term], order: MonomialOrder) -> Vec<Term> {
    let lcm = f[0].0.lcm(&g[0].0);
    let sf = f[0].0.quotient_of(&lcm).unwrap();
    let sg = g[0].0.quotient_of(&lcm).unwrap();
    let left = sub_multiple(&[], &-Scalar::one(), &sf, f, order);
    sub_multiple(&left, &Scalar::one(), &sg, g, order)
}

/// The reduced Gröbner basis of an ideal for a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ctx: Arc<VarContext>,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Monic generators sorted by decreasing leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| sorted_terms(g, self.order)[0].0.clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].degree() == Some(0)
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        check_context(&self.ctx, p.context())?;
        let basis: Vec<Vec<Term>> = self.generators.iter().map(|g| sorted_terms(g, self.order)).collect();
        let nf = normal_form(sorted_terms(p, self.order), &basis, self.order);
        Ok(Polynomial::from_terms(&self.ctx, nf))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }
}

pub fn buchberger(ctx: &Arc<VarContext>, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ctx, gens, order, &GroebnerConfig::default())
}

/// Buchberger's algorithm with normal pair selection and the coprime and
/// chain criteria. Output is the reduced basis, sorted.
pub fn buchberger_with(
    ctx: &Arc<VarContext>,
    gens: &[Polynomial],
    order: MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Vec<Term>> = Vec::new();
    for g in gens {
        check_context(ctx, g.context())?;
        let nf = normal_form(sorted_terms(g, order), &basis, order);
        if !nf.is_empty() {
            basis.push(make_monic(nf));
        }
    }
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = basis[a.0][0].0.lcm(&basis[a.1][0].0);
                let lb = basis[b.0][0].0.lcm(&basis[b.1][0].0);
                la.degree()
                    .cmp(&lb.degree())
                    .then_with(|| order.cmp(&la, &lb))
                    .then_with(|| a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        if lcm.degree() > config.degree_cap {
            return Err(Error::DegreeCap {
                degree: lcm.degree(),
                cap: config.degree_cap,
            });
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let nf = normal_form(s, &basis, order);
        if !nf.is_empty() {
            let fresh = basis.len();
            basis.push(make_monic(nf));
            for k in 0..fresh {
                pending.insert((k, fresh));
            }
        }
    }
    Ok(GroebnerBasis {
        ctx: ctx.clone(),
        order,
        generators: reduce_basis(ctx, basis, order),
    })
}

fn reduce_basis(ctx: &Arc<VarContext>, basis: Vec<Vec<Term>>, order: MonomialOrder) -> Vec<Polynomial> {
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(other, h)| other != idx && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || other < idx));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Vec<Term>> = minimal
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = minimal[idx][0].clone();
        let mut tail = normal_form(minimal[idx][1..].to_vec(), &others, order);
        tail.insert(0, lead);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    reduced.into_iter().map(|t| Polynomial::from_terms(ctx, t)).collect()
}

/// True iff the forms in `space` have no common zero in projective space,
/// i.e. the leading terms of a grevlex basis contain a pure power of every
/// variable. The zero space gives false.
pub fn is_zero_dimensional(space: &FormSpace) -> Result<bool> {
    if space.is_zero() {
        return Ok(false);
    }
    let gb = buchberger(space.context(), space.basis(), MonomialOrder::GrevLex)?;
    Ok(leading_terms_cover_all_variables(&gb))
}

pub(crate) fn leading_terms_cover_all_variables(gb: &GroebnerBasis) -> bool {
    if gb.is_unit() {
        return true;
    }
    let n = gb.ctx.n();
    let mut covered = vec![false; n];
    for m in gb.leading_monomials() {
        if let Some(i) = m.pure_power() {
            covered[i] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// `⟨gens⟩ : x_i^∞` by eliminating `y` from `gens + ⟨y·x_i − 1⟩`.
pub fn colon_by_variable_power(ctx: &Arc<VarContext>, gens: &[Polynomial], i: usize) -> Result<GroebnerBasis> {
    let big = ctx.prepend("y");
    let mut lifted: Vec<Polynomial> = gens.iter().map(|g| g.embed(&big, 1)).collect();
    let y_xi = &Polynomial::var(&big, 0) * &Polynomial::var(&big, i + 1);
    lifted.push(&y_xi - &Polynomial::constant(&big, Scalar::one()));
    eliminate_first(ctx, &big, &lifted)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect_ideals(ctx: &Arc<VarContext>, a: &[Polynomial], b: &[Polynomial]) -> Result<GroebnerBasis> {
    let big = ctx.prepend("t");
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::constant(&big, Scalar::one()) - &t;
    let mut lifted: Vec<Polynomial> = a.iter().map(|f| &t * &f.embed(&big, 1)).collect();
    lifted.extend(b.iter().map(|g| &one_minus_t * &g.embed(&big, 1)));
    eliminate_first(ctx, &big, &lifted)
}

fn eliminate_first(ctx: &Arc<VarContext>, big: &Arc<VarContext>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let gb = buchberger(big, gens, MonomialOrder::Elimination { split: 1 })?;
    let kept: Vec<Polynomial> = gb.generators().iter().filter_map(|g| g.restrict(ctx, 1)).collect();
    buchberger(ctx, &kept, MonomialOrder::GrevLex)
}

/// Saturation `I : (x_1, …, x_n)^∞ = ⋂_i (I : x_i^∞)` of a homogeneous ideal,
/// as a reduced grevlex basis.
pub fn saturate_ideal(ctx: &Arc<VarContext>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        check_context(ctx, g.context())?;
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return buchberger(ctx, &[], MonomialOrder::GrevLex);
    }
    let mut acc: Option<GroebnerBasis> = None;
    for i in 0..ctx.n() {
        let colon = colon_by_variable_power(ctx, &nonzero, i)?;
        acc = Some(match acc {
            None => colon,
            Some(prev) if prev.is_unit() => colon,
            Some(prev) if colon.is_unit() => prev,
            Some(prev) => intersect_ideals(ctx, prev.generators(), colon.generators())?,
        });
    }
    Ok(acc.expect("at least one variable"))
}

/// The degree-`d` forms of a homogeneous ideal.
pub fn graded_component(gb: &GroebnerBasis, d: usize) -> Result<FormSpace> {
    let ctx = gb.context();
    let mut products = Vec::new();
    for g in gb.generators() {
        let e = g.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if e > d {
            continue;
        }
        for m in monomials_of_degree(ctx.n(), d - e) {
            products.push(g.mul_monomial(&m));
        }
    }
    FormSpace::span(ctx, d, &products)
}
