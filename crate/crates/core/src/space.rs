//! Linear subspaces of `Sym^k W*` in the monomial basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, Row};
use crate::order::MonomialOrder;
use crate::poly::{check_context, monomials_of_degree, Monomial, Polynomial, VarContext};
use crate::scalar::{binomial, Scalar};

/// Degree-`k` monomials sorted decreasingly in grevlex, with an index.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, degree: usize) -> Self {
        let mut monomials = monomials_of_degree(n, degree);
        monomials.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b, a));
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coefficient row of a homogeneous polynomial of this degree.
    pub fn coords(&self, p: &Polynomial) -> Row {
        let mut row = vec![Scalar::zero(); self.len()];
        for (m, c) in p.terms() {
            row[self.index[m]] = c.clone();
        }
        row
    }

    pub fn polynomial(&self, ctx: &Arc<VarContext>, row: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(
            ctx,
            self.monomials
                .iter()
                .zip(row)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

/// A subspace of degree-`k` forms, stored as its reduced row-echelon basis
/// under grevlex. Equality of values is equality of subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpace {
    ctx: Arc<VarContext>,
    degree: usize,
    basis: Vec<Polynomial>,
}

impl FormSpace {
    pub fn zero(ctx: &Arc<VarContext>, degree: usize) -> Self {
        Self {
            ctx: ctx.clone(),
            degree,
            basis: Vec::new(),
        }
    }

    /// All of `Sym^degree W*`.
    pub fn full(ctx: &Arc<VarContext>, degree: usize) -> Self {
        let basis = MonomialBasis::new(ctx.n(), degree)
            .monomials
            .into_iter()
            .map(|m| Polynomial::term(ctx, m, Scalar::from_integer(1.into())))
            .collect();
        Self {
            ctx: ctx.clone(),
            degree,
            basis,
        }
    }

    pub fn span(ctx: &Arc<VarContext>, degree: usize, polys: &[Polynomial]) -> Result<Self> {
        let mb = MonomialBasis::new(ctx.n(), degree);
        let mut rows = Vec::with_capacity(polys.len());
        for p in polys {
            check_context(ctx, p.context())?;
            if p.is_zero() {
                continue;
            }
            match p.homogeneous_degree() {
                Some(d) if d == degree => rows.push(mb.coords(p)),
                Some(d) => {
                    return Err(Error::DegreeMismatch {
                        expected: degree,
                        found: d,
                    })
                }
                None => return Err(Error::NotHomogeneous),
            }
        }
        Ok(Self::from_rows(ctx, degree, &mb, rows))
    }

    /// Span of nonempty `polys`, taking the degree from the first nonzero one.
    pub fn span_of(ctx: &Arc<VarContext>, polys: &[Polynomial]) -> Result<Self> {
        let degree = polys
            .iter()
            .find_map(|p| {
                if p.is_zero() {
                    None
                } else {
                    Some(p.homogeneous_degree())
                }
            })
            .ok_or_else(|| Error::Precondition("span of zero forms has no degree".into()))?
            .ok_or(Error::NotHomogeneous)?;
        Self::span(ctx, degree, polys)
    }

    fn from_rows(ctx: &Arc<VarContext>, degree: usize, mb: &MonomialBasis, rows: Vec<Row>) -> Self {
        let (reduced, _) = linalg::rref(rows, mb.len());
        let basis = reduced.iter().map(|r| mb.polynomial(ctx, r)).collect();
        Self {
            ctx: ctx.clone(),
            degree,
            basis,
        }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// `dim Sym^k W* = C(n+k-1, k)`.
    pub fn ambient_dim(&self) -> usize {
        full_dimension(self.ctx.n(), self.degree)
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Leading (grevlex-largest) monomial of each basis row.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|p| leading_monomial(p).expect("nonzero basis row"))
            .collect()
    }

    fn check_compatible(&self, p: &Polynomial) -> Result<()> {
        check_context(&self.ctx, p.context())?;
        if p.is_zero() {
            return Ok(());
        }
        match p.homogeneous_degree() {
            Some(d) if d == self.degree => Ok(()),
            Some(d) => Err(Error::DegreeMismatch {
                expected: self.degree,
                found: d,
            }),
            None => Err(Error::NotHomogeneous),
        }
    }

    /// Remainder of `p` after eliminating every pivot monomial.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(p)?;
        let mut rest = p.clone();
        for (row, lead) in self.basis.iter().zip(self.leading_monomials()) {
            let c = rest.coefficient(&lead);
            if !c.is_zero() {
                rest = &rest - &row.scale(&c);
            }
        }
        Ok(rest)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Coordinates of `p` against the echelon basis.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Vec<Scalar>> {
        self.check_compatible(p)?;
        let coords: Vec<Scalar> = self.leading_monomials().iter().map(|m| p.coefficient(m)).collect();
        let mut rebuilt = Polynomial::zero(&self.ctx);
        for (b, c) in self.basis.iter().zip(&coords) {
            rebuilt = &rebuilt + &b.scale(c);
        }
        if rebuilt == *p {
            Ok(coords)
        } else {
            Err(Error::NotInSpace)
        }
    }

    fn check_pair(&self, other: &Self) -> Result<()> {
        check_context(&self.ctx, &other.ctx)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(&self.ctx, self.degree, &all)
    }

    /// Intersection from the left kernel of the stacked coordinate matrix.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        let mb = MonomialBasis::new(self.ctx.n(), self.degree);
        let stacked: Vec<Row> = self.basis.iter().chain(&other.basis).map(|p| mb.coords(p)).collect();
        let relations = linalg::kernel(linalg::transpose(&stacked, mb.len()), stacked.len());
        let common: Vec<Polynomial> = relations
            .iter()
            .map(|rel| {
                self.basis
                    .iter()
                    .zip(rel)
                    .fold(Polynomial::zero(&self.ctx), |acc, (b, c)| &acc + &b.scale(c))
            })
            .collect();
        Self::span(&self.ctx, self.degree, &common)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_pair(other)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal(&self, other: &Self) -> Result<bool> {
        self.check_pair(other)?;
        Ok(self.basis == other.basis)
    }

    /// The space of degree-`degree` forms whose image under a linear map is
    /// zero. `images[m]` lists the image of monomial `m` as a sequence of
    /// coordinate vectors; all lists must have the same shape. Monomials
    /// without an entry map to zero.
    pub fn kernel(ctx: &Arc<VarContext>, degree: usize, images: &BTreeMap<Monomial, Vec<Row>>) -> Result<Self> {
        let mb = MonomialBasis::new(ctx.n(), degree);
        let shape: Option<Vec<usize>> = images.values().next().map(|v| v.iter().map(Vec::len).collect());
        let shape = shape.unwrap_or_default();
        let mut columns: Vec<Row> = vec![Vec::new(); mb.len()];
        for (m, blocks) in images {
            let Some(col) = mb.position(m) else {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: m.degree(),
                });
            };
            let lens: Vec<usize> = blocks.iter().map(Vec::len).collect();
            if lens != shape {
                return Err(Error::DimensionMismatch {
                    expected: shape.iter().sum(),
                    found: lens.iter().sum(),
                });
            }
            columns[col] = blocks.iter().flatten().cloned().collect();
        }
        let height: usize = shape.iter().sum();
        for column in columns.iter_mut() {
            if column.is_empty() {
                *column = vec![Scalar::zero(); height];
            }
        }
        let rows = linalg::transpose(&columns, height);
        let kernel = linalg::kernel(rows, mb.len());
        Ok(Self::from_rows(ctx, degree, &mb, kernel))
    }
}

pub fn full_dimension(n: usize, degree: usize) -> usize {
    let d = binomial(n + degree - 1, degree);
    usize::try_from(d).expect("dimension fits in usize")
}

pub(crate) fn leading_monomial(p: &Polynomial) -> Option<Monomial> {
    p.terms()
        .map(|(m, _)| m)
        .max_by(|a, b| MonomialOrder::GrevLex.cmp(a, b))
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;
    use crate::text::parse_polynomial;
    use num_traits::One;

    fn ps(ctx: &Arc<VarContext>, items: &[&str]) -> Vec<Polynomial> {
        items.iter().map(|s| parse_polynomial(ctx, s).unwrap()).collect()
    }

    fn sp(ctx: &Arc<VarContext>, items: &[&str]) -> FormSpace {
        FormSpace::span_of(ctx, &ps(ctx, items)).unwrap()
    }

    #[test]
    fn span_examples() {
        let c = VarContext::standard(3);
        assert_eq!(sp(&c, &["x1^2", "2*x1^2"]).dim(), 1);
        assert_eq!(FormSpace::span(&c, 2, &[]).unwrap().dim(), 0);
        assert_eq!(sp(&c, &["x1^2", "x1*x2", "x1*x3"]).dim(), 3);
        assert!(matches!(
            FormSpace::span(&c, 2, &ps(&c, &["x1^2", "x2^3"])),
            Err(Error::DegreeMismatch { .. })
        ));
        assert_eq!(FormSpace::full(&c, 3).dim(), 10);
    }

    #[test]
    fn echelon_invariants() {
        let c = VarContext::standard(3);
        let s = sp(&c, &["x1*x2 + x3^2", "x1^2 - x2*x3", "x1^2 + x1*x2 + x2^2", "x2^2"]);
        let leads = s.leading_monomials();
        for pair in leads.windows(2) {
            assert_eq!(
                MonomialOrder::GrevLex.cmp(&pair[0], &pair[1]),
                std::cmp::Ordering::Greater
            );
        }
        for (i, b) in s.basis().iter().enumerate() {
            assert!(b.coefficient(&leads[i]).is_one());
            for (j, lead) in leads.iter().enumerate() {
                if i != j {
                    assert!(b.coefficient(lead).is_zero());
                }
            }
        }
    }

    #[test]
    fn membership() {
        let c = VarContext::standard(3);
        let s = sp(&c, &["x1^2", "x1*x2", "x1*x3"]);
        assert!(s.contains(&ps(&c, &["x1*x3"])[0]).unwrap());
        assert!(!sp(&c, &["x1^2"]).contains(&ps(&c, &["x2^2"])[0]).unwrap());
        assert!(FormSpace::zero(&c, 2).contains(&Polynomial::zero(&c)).unwrap());
        assert!(s.contains(&ps(&c, &["x1"])[0]).is_err());
        assert_eq!(s.coordinates(&ps(&c, &["2*x1^2 - x1*x3"])[0]).unwrap().len(), 3);
        assert_eq!(s.coordinates(&ps(&c, &["x2^2"])[0]), Err(Error::NotInSpace));
    }

    #[test]
    fn combine_examples() {
        let c = VarContext::standard(2);
        assert_eq!(sp(&c, &["x1^2"]).sum(&sp(&c, &["x1*x2"])).unwrap().dim(), 2);
        let meet = sp(&c, &["x1^2", "x1*x2"])
            .intersect(&sp(&c, &["x1*x2", "x2^2"]))
            .unwrap();
        assert_eq!(meet, sp(&c, &["x1*x2"]));
        let s = sp(&c, &["x1^2 + x2^2"]);
        assert!(s.equal(&s).unwrap());
        assert!(s.sum(&FormSpace::zero(&c, 3)).is_err());
    }

    #[test]
    fn kernel_extremes() {
        let c = VarContext::standard(2);
        let zero_map: BTreeMap<Monomial, Vec<Row>> = BTreeMap::new();
        assert!(FormSpace::kernel(&c, 3, &zero_map).unwrap().is_full());
        let mb = MonomialBasis::new(2, 2);
        let identity: BTreeMap<Monomial, Vec<Row>> = mb
            .monomials()
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let mut row = vec![Scalar::zero(); mb.len()];
                row[i] = Scalar::one();
                (m.clone(), vec![row])
            })
            .collect();
        assert!(FormSpace::kernel(&c, 2, &identity).unwrap().is_zero());
        let mut bad = identity.clone();
        bad.insert(mb.monomials()[0].clone(), vec![vec![Scalar::one()]]);
        assert!(FormSpace::kernel(&c, 2, &bad).is_err());
    }

    #[test]
    fn dimension_formula_and_span_idempotence() {
        let mut sampler = Sampler::new(11);
        for trial in 0..20 {
            let n = 1 + trial % 3;
            let c = VarContext::standard(n);
            let k = 1 + trial % 4;
            let polys: Vec<Polynomial> = (0..3).map(|_| sampler.form(&c, k, 3)).collect();
            let s = FormSpace::span(&c, k, &polys[..2]).unwrap();
            let t = FormSpace::span(&c, k, &polys[1..]).unwrap();
            let sum = s.sum(&t).unwrap();
            let meet = s.intersect(&t).unwrap();
            assert_eq!(sum.dim() + meet.dim(), s.dim() + t.dim());
            assert!(meet.is_subspace_of(&s).unwrap() && meet.is_subspace_of(&t).unwrap());
            assert_eq!(FormSpace::span(&c, k, s.basis()).unwrap(), s);
            assert!(full_dimension(n, k) >= sum.dim());
        }
    }

    /// Membership by solving `Σ a_i b_i = P` directly on monomial coordinates.
    fn brute_contains(s: &FormSpace, p: &Polynomial) -> bool {
        let mb = MonomialBasis::new(s.context().n(), s.degree());
        let cols: Vec<Row> = s.basis().iter().map(|b| mb.coords(b)).collect();
        let mut augmented = cols.clone();
        augmented.push(mb.coords(p));
        linalg::rank(cols, mb.len()) == linalg::rank(augmented, mb.len())
    }

    #[test]
    fn contains_matches_linear_solve() {
        let mut sampler = Sampler::new(5);
        let c = VarContext::standard(3);
        for trial in 0..30 {
            let k = 2 + trial % 2;
            let gens: Vec<Polynomial> = (0..3).map(|_| sampler.form(&c, k, 2)).collect();
            let s = FormSpace::span(&c, k, &gens).unwrap();
            let inside = &gens[0].scale(&sampler.scalar()) + &gens[2];
            let probe = if trial % 2 == 0 { inside } else { sampler.form(&c, k, 4) };
            assert_eq!(s.contains(&probe).unwrap(), brute_contains(&s, &probe));
        }
    }
}
