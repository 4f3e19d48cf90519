//! Graded systems `F = F^0 ⊕ F^1 ⊕ … ⊕ F^r` closed under contraction.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::linalg::Row;
use crate::poly::{Polynomial, VarContext, Vector};
use crate::scalar::Scalar;
use crate::space::{FormSpace, MonomialBasis};

/// A single reason a candidate fails to be a symbol system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Component `index` has degree `found`.
    WrongDegree {
        index: usize,
        found: usize,
    },
    ContextMismatch {
        index: usize,
    },
    RankTooSmall,
    ConstantsMissing,
    LinearNotFull {
        dim: usize,
        n: usize,
    },
    TopComponentZero {
        rank: usize,
    },
    /// `ι_{e_direction} form = contraction ∉ F^{k-1}` with `form ∈ F^k`.
    Closure {
        k: usize,
        direction: usize,
        form: Polynomial,
        contraction: Polynomial,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongDegree { index, found } => {
                write!(f, "component F{index} has degree {found}")
            }
            Violation::ContextMismatch { index } => write!(f, "component F{index} uses another variable list"),
            Violation::RankTooSmall => write!(f, "rank must be at least 1"),
            Violation::ConstantsMissing => write!(f, "F0 must be the constants"),
            Violation::LinearNotFull { dim, n } => write!(f, "F1 has dimension {dim}, expected all {n} linear forms"),
            Violation::TopComponentZero { rank } => write!(f, "top component F{rank} is zero"),
            Violation::Closure {
                k,
                direction,
                form,
                contraction,
            } => write!(
                f,
                "closure fails in degree {k}: contracting {form} by e{} gives {contraction}, not in F{}",
                direction + 1,
                k - 1
            ),
        }
    }
}

/// A certified symbol system of rank `r = components.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolSystem {
    ctx: Arc<VarContext>,
    components: Vec<FormSpace>,
}

/// Outcome of the saturation test for an order-one system.
#[derive(Debug, Clone)]
pub struct SaturationReport {
    pub saturated: bool,
    /// Reduced basis of the saturation of `⟨F^2⟩`.
    pub saturated_ideal: GroebnerBasis,
    /// Degree-2 part of the saturated ideal.
    pub ideal_quadrics: FormSpace,
    pub quadrics_match: bool,
    pub gaps: Vec<ProlongationGap>,
}

/// `prolong(F^k)` is strictly larger than `F^{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProlongationGap {
    pub k: usize,
    pub prolong_dim: usize,
    pub next_dim: usize,
    /// A basis form of `prolong(F^k)` outside `F^{k+1}`.
    pub witness: Polynomial,
}

impl SaturationReport {
    pub fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.quadrics_match {
            out.push(format!(
                "degree-2 part of the saturated base-locus ideal has dimension {}, F2 differs",
                self.ideal_quadrics.dim()
            ));
        }
        for gap in &self.gaps {
            let next = if gap.next_dim == 0 {
                format!("F{} = 0", gap.k + 1)
            } else {
                format!("F{}", gap.k + 1)
            };
            out.push(format!(
                "prolong(F{}) strictly contains {} (dim {} > {}; e.g. {})",
                gap.k, next, gap.prolong_dim, gap.next_dim, gap.witness
            ));
        }
        out
    }
}

/// `prolong(S)`: the forms of degree `k+1` all of whose contractions by basis
/// vectors lie in `S`.
pub fn prolong(space: &FormSpace) -> Result<FormSpace> {
    let k = space.degree();
    if k == 0 {
        return Err(Error::Precondition(
            "prolongation needs a component of degree at least 1".into(),
        ));
    }
    let ctx = space.context();
    let n = ctx.n();
    let source = MonomialBasis::new(n, k + 1);
    let target = MonomialBasis::new(n, k);
    let directions: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let mut images: BTreeMap<_, Vec<Row>> = BTreeMap::new();
    for m in source.monomials() {
        let mono = Polynomial::term(ctx, m.clone(), Scalar::one());
        let mut blocks = Vec::with_capacity(n);
        for e in &directions {
            let residue = space.reduce(&mono.contract(e, 1)?)?;
            blocks.push(target.coords(&residue));
        }
        images.insert(m.clone(), blocks);
    }
    FormSpace::kernel(ctx, k + 1, &images)
}

impl SymbolSystem {
    /// Certifies `components` (indexed by degree `0..=r`) or lists every
    /// violation found.
    pub fn validate(ctx: &Arc<VarContext>, components: Vec<FormSpace>) -> std::result::Result<Self, Vec<Violation>> {
        let mut violations = Vec::new();
        if components.len() < 2 {
            violations.push(Violation::RankTooSmall);
            return Err(violations);
        }
        for (index, c) in components.iter().enumerate() {
            if c.degree() != index {
                violations.push(Violation::WrongDegree {
                    index,
                    found: c.degree(),
                });
            }
            if c.context() != ctx {
                violations.push(Violation::ContextMismatch { index });
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        if components[0].dim() != 1 {
            violations.push(Violation::ConstantsMissing);
        }
        if !components[1].is_full() {
            violations.push(Violation::LinearNotFull {
                dim: components[1].dim(),
                n: ctx.n(),
            });
        }
        let rank = components.len() - 1;
        if components[rank].is_zero() {
            violations.push(Violation::TopComponentZero { rank });
        }
        for k in 2..=rank {
            for form in components[k].basis() {
                for i in 0..ctx.n() {
                    let contraction = form.contract(&Vector::basis(ctx.n(), i), 1).expect("homogeneous basis");
                    if !components[k - 1].contains(&contraction).expect("same degree") {
                        violations.push(Violation::Closure {
                            k,
                            direction: i,
                            form: form.clone(),
                            contraction,
                        });
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(Self {
                ctx: ctx.clone(),
                components,
            })
        } else {
            Err(violations)
        }
    }

    /// `F^0 = constants`, `F^1 = W*`, followed by `higher = [F^2, …, F^r]`.
    pub fn candidate(ctx: &Arc<VarContext>, higher: Vec<FormSpace>) -> Vec<FormSpace> {
        let mut components = vec![FormSpace::full(ctx, 0), FormSpace::full(ctx, 1)];
        components.extend(higher);
        components
    }

    pub fn full_system(ctx: &Arc<VarContext>, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Precondition("rank must be at least 1".into()));
        }
        let components = (0..=rank).map(|k| FormSpace::full(ctx, k)).collect();
        Ok(Self {
            ctx: ctx.clone(),
            components,
        })
    }

    /// The system generated by one form: `F^r = ⟨P⟩` and each lower
    /// component spanned by contractions of the one above.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Precondition("the generating form must be nonzero".into()));
        }
        let rank = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if rank < 2 {
            return Err(Error::Precondition(
                "the generating form must have degree at least 2".into(),
            ));
        }
        let ctx = p.context();
        let n = ctx.n();
        let mut descending = vec![FormSpace::span(ctx, rank, std::slice::from_ref(p))?];
        for k in (2..rank).rev() {
            let above = descending.last().expect("nonempty");
            let mut contractions = Vec::new();
            for b in above.basis() {
                for i in 0..n {
                    contractions.push(b.contract(&Vector::basis(n, i), 1)?);
                }
            }
            descending.push(FormSpace::span(ctx, k, &contractions)?);
        }
        descending.reverse();
        Self::validate(ctx, Self::candidate(ctx, descending))
            .map_err(|v| Error::Precondition(format!("generated system failed validation: {}", v[0])))
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn rank(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[FormSpace] {
        &self.components
    }

    /// `F^k`, which is zero above the rank.
    pub fn component(&self, k: usize) -> FormSpace {
        self.components
            .get(k)
            .cloned()
            .unwrap_or_else(|| FormSpace::zero(&self.ctx, k))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(FormSpace::dim).collect()
    }

    /// Whether `Bs(F^k)` is empty in `PW`.
    pub fn base_locus_empty(&self, k: usize) -> Result<bool> {
        if k == 0 {
            return Ok(true);
        }
        groebner::is_zero_dimensional(&self.component(k))
    }

    /// Largest `m` with `Bs(F^m)` empty. Base loci grow with `k`, so the
    /// scan stops at the first nonempty one.
    pub fn order(&self) -> Result<usize> {
        let mut m = 1;
        for k in 2..=self.rank() {
            if !self.base_locus_empty(k)? {
                break;
            }
            m = k;
        }
        Ok(m)
    }

    /// Saturation test for systems of order one.
    pub fn is_saturated(&self) -> Result<SaturationReport> {
        let order = self.order()?;
        if order != 1 {
            return Err(Error::Precondition(format!(
                "saturation is defined for systems of rank r and of order 1; this system has order {order}"
            )));
        }
        let f2 = self.component(2);
        let saturated_ideal = groebner::saturate_ideal(&self.ctx, f2.basis())?;
        let ideal_quadrics = groebner::graded_component(&saturated_ideal, 2)?;
        let quadrics_match = ideal_quadrics == f2;
        let mut gaps = Vec::new();
        for k in 2..=self.rank() {
            let current = self.component(k);
            let next = self.component(k + 1);
            let p = prolong(&current)?;
            if p.dim() > next.dim() {
                let witness = p
                    .basis()
                    .iter()
                    .find(|b| !next.contains(b).unwrap_or(false))
                    .cloned()
                    .expect("strictly larger space has a witness");
                gaps.push(ProlongationGap {
                    k,
                    prolong_dim: p.dim(),
                    next_dim: next.dim(),
                    witness,
                });
            }
        }
        Ok(SaturationReport {
            saturated: quadrics_match && gaps.is_empty(),
            saturated_ideal,
            ideal_quadrics,
            quadrics_match,
            gaps,
        })
    }
}
