//! The Euler-symmetric model `M(F) ⊂ P(C ⊕ W ⊕ (F²)* ⊕ … ⊕ (F^r)*)`.
//!
//! Each dual space `(F^k)*` is coordinatized against the echelon basis
//! `b^k_1, …, b^k_{d_k}` of `F^k`, so `ι_w^k` has coordinates `b^k_i(w)` and
//! the parametrization `φ_F` is a vector of polynomial evaluations.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Row};
use crate::poly::{Polynomial, VarContext, Vector};
use crate::sample::Sampler;
use crate::scalar::{self, binomial_scalar, Scalar};
use crate::space::{FormSpace, MonomialBasis};
use crate::symbol::SymbolSystem;

/// A point of projective space; equality is proportionality.
#[derive(Debug, Clone)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::Precondition("projective point with all coordinates zero".into()));
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Representative with first nonzero coordinate equal to one.
    pub fn normalized(&self) -> Vec<Scalar> {
        let lead = self.coords.iter().find(|c| !c.is_zero()).expect("nonzero point");
        self.coords.iter().map(|c| c / lead).collect()
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let Some(f) = self.coords.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let (a, b) = (&self.coords[f], &other.coords[f]);
        if b.is_zero() {
            return false;
        }
        self.coords.iter().zip(&other.coords).all(|(x, y)| x * b == y * a)
    }
}

impl Eq for ProjectivePoint {}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(scalar::format_scalar).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// Block layout of `V_F` and the fixed bases of the `F^k`.
#[derive(Debug, Clone)]
pub struct EulerModel {
    system: SymbolSystem,
    /// Start of block `k` in ambient coordinates, `k = 0..=r`, plus the end.
    offsets: Vec<usize>,
}

impl EulerModel {
    pub fn new(system: SymbolSystem) -> Self {
        let mut offsets = vec![0, 1];
        for k in 1..=system.rank() {
            let width = if k == 1 {
                system.context().n()
            } else {
                system.component(k).dim()
            };
            offsets.push(offsets[k] + width);
        }
        Self { system, offsets }
    }

    pub fn system(&self) -> &SymbolSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn n(&self) -> usize {
        self.system.context().n()
    }

    pub fn ambient_dim(&self) -> usize {
        *self.offsets.last().expect("offsets")
    }

    /// Coordinate range of block `k` (`0` is the `t` slot, `1` the `W` slot).
    pub fn block_range(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k]..self.offsets[k + 1]
    }

    /// Ambient variable names: `z0`, `w1..wn`, then `u{k}_{i}` per block.
    pub fn ambient_context(&self) -> Arc<VarContext> {
        let mut names = vec!["z0".to_string()];
        names.extend((1..=self.n()).map(|i| format!("w{i}")));
        for k in 2..=self.rank() {
            names.extend((1..=self.system.component(k).dim()).map(|i| format!("u{k}_{i}")));
        }
        VarContext::new(names).expect("distinct ambient names")
    }

    /// Coordinate functions of the chart `t = 1`: `w` followed by the basis
    /// forms of `F^2, …, F^r`.
    pub fn chart_coordinates(&self) -> Vec<Polynomial> {
        let ctx = self.system.context();
        let mut coords: Vec<Polynomial> = (0..self.n()).map(|i| Polynomial::var(ctx, i)).collect();
        for k in 2..=self.rank() {
            coords.extend(self.system.component(k).basis().iter().cloned());
        }
        coords
    }

    fn check_point(&self, z: &ProjectivePoint) -> Result<()> {
        if z.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: z.len(),
            });
        }
        Ok(())
    }

    /// `φ_F([t:w]) = [t^r : t^{r-1}w : t^{r-2}ι_w² : … : ι_w^r]`.
    pub fn phi_eval(&self, t: &Scalar, w: &Vector) -> Result<ProjectivePoint> {
        w.check_len(self.n())?;
        if t.is_zero() && w.is_zero() {
            return Err(Error::Precondition("[t:w] must not be zero".into()));
        }
        let r = self.rank();
        let mut coords = Vec::with_capacity(self.ambient_dim());
        coords.push(scalar::pow(t, r));
        let t_pow = scalar::pow(t, r - 1);
        coords.extend(w.coords().iter().map(|x| x * &t_pow));
        for k in 2..=r {
            let t_pow = scalar::pow(t, r - k);
            for b in self.system.component(k).basis() {
                coords.push(b.evaluate(w)? * &t_pow);
            }
        }
        ProjectivePoint::new(coords)
    }

    /// `g_v · z` for any point `z = [t : w : f² : … : f^r]` of `P(V_F)`:
    /// block `k` becomes
    /// `Σ_{l=2}^{k} C(k,l) f^l∘ι_v^{k-l} + k ι_w∘ι_v^{k-1} + t ι_v^k`.
    pub fn group_act(&self, v: &Vector, z: &ProjectivePoint) -> Result<ProjectivePoint> {
        v.check_len(self.n())?;
        self.check_point(z)?;
        let n = self.n();
        let t = &z.coords[0];
        let w = Vector(z.coords[self.block_range(1)].to_vec());
        let mut out = Vec::with_capacity(self.ambient_dim());
        out.push(t.clone());
        out.extend(w.add(&v.scale(t)).0);
        for k in 2..=self.rank() {
            let k_scalar = scalar::int(k as i64);
            for b in self.system.component(k).basis() {
                let mut value = Scalar::zero();
                // ladder[j] = ι_v^j b, of degree k - j
                let mut ladder = vec![b.clone()];
                for _ in 0..k {
                    let next = ladder.last().expect("nonempty").contract(v, 1)?;
                    ladder.push(next);
                }
                for (j, form) in ladder.iter().enumerate().take(k - 1) {
                    let l = k - j;
                    let coords =
                        self.system.component(l).coordinates(form).map_err(|_| {
                            Error::Precondition(format!("contraction left F{l}; the system is not closed"))
                        })?;
                    let f_l = &z.coords[self.block_range(l)];
                    let pairing = coords.iter().zip(f_l).fold(Scalar::zero(), |acc, (a, b)| acc + a * b);
                    value += binomial_scalar(k, l) * pairing;
                }
                debug_assert_eq!(ladder[k - 1].degree().unwrap_or(1), 1);
                value += &k_scalar * ladder[k - 1].evaluate(&w)?;
                let top = ladder[k].coefficient(&crate::poly::Monomial::one(n));
                value += t * top;
                out.push(value);
            }
        }
        ProjectivePoint::new(out)
    }

    /// The Euler action: block `k` scaled by `λ^k`.
    pub fn euler_act(&self, lambda: &Scalar, z: &ProjectivePoint) -> Result<ProjectivePoint> {
        self.check_point(z)?;
        if lambda.is_zero() {
            return Err(Error::Precondition("the Euler action needs a nonzero scalar".into()));
        }
        let mut coords = z.coords.clone();
        for k in 1..=self.rank() {
            let weight = scalar::pow(lambda, k);
            for c in &mut coords[self.block_range(k)] {
                *c *= &weight;
            }
        }
        ProjectivePoint::new(coords)
    }

    /// Degree of the closure of the orbit curve `λ ↦ [1 : λw : λ²ι_w² : …]`,
    /// the largest `k` whose block `(b^k_i(w))` is nonzero.
    pub fn orbit_curve_degree(&self, w: &Vector) -> Result<usize> {
        w.check_len(self.n())?;
        if w.is_zero() {
            return Err(Error::Precondition("orbit curves need a nonzero direction".into()));
        }
        for k in (2..=self.rank()).rev() {
            for b in self.system.component(k).basis() {
                if !b.evaluate(w)?.is_zero() {
                    return Ok(k);
                }
            }
        }
        Ok(1)
    }

    /// Smallest and largest orbit-curve degree over `samples` sparse random
    /// directions (see [`Sampler::sparse_vector`]).
    pub fn orbit_degree_range(&self, samples: usize, seed: u64) -> Result<(usize, usize)> {
        let mut sampler = Sampler::new(seed);
        let mut lo = usize::MAX;
        let mut hi = 0;
        for _ in 0..samples.max(1) {
            let d = self.orbit_curve_degree(&sampler.sparse_vector(self.n()))?;
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Ok((lo, hi))
    }

    /// Rebuilds the symbol system from evaluations of `φ_F` on the chart
    /// `t = 1`: each coordinate of block `k` is interpolated as a degree-`k`
    /// form in `w`, and `F^k` is their span.
    pub fn recover_symbols(&self) -> Result<SymbolSystem> {
        let ctx = self.system.context();
        let n = self.n();
        let mut sampler = Sampler::new(0x5eed);
        let mut higher = Vec::new();
        for k in 2..=self.rank() {
            let mb = MonomialBasis::new(n, k);
            let points: Vec<Vector> = (0..mb.len() + 4).map(|_| sampler.vector(n)).collect();
            let rows: Vec<Row> = points
                .iter()
                .map(|p| mb.monomials().iter().map(|m| m.evaluate(p.coords())).collect())
                .collect();
            let images: Vec<Vec<Scalar>> = points
                .iter()
                .map(|p| self.phi_eval(&Scalar::one(), p).map(|z| z.normalized()))
                .collect::<Result<_>>()?;
            let mut forms = Vec::new();
            for idx in self.block_range(k) {
                let values: Vec<Scalar> = images.iter().map(|z| z[idx].clone()).collect();
                let coeffs = linalg::solve_unique(&rows, &values, mb.len())
                    .ok_or_else(|| Error::Sampling(format!("interpolation of block {k} failed")))?;
                forms.push(mb.polynomial(ctx, &coeffs));
            }
            higher.push(FormSpace::span(ctx, k, &forms)?);
        }
        SymbolSystem::validate(ctx, SymbolSystem::candidate(ctx, higher))
            .map_err(|v| Error::Precondition(format!("recovered system is invalid: {}", v[0])))
    }

    /// Degree-`d` forms on `P(V_F)` vanishing on `M(F)`, from the kernel of
    /// the evaluation matrix at `samples` random image points, then checked
    /// against `2·samples` fresh points.
    pub fn implicitize(&self, d: usize, samples: usize, seed: u64) -> Result<FormSpace> {
        if d == 0 {
            return Err(Error::Precondition("implicitization degree must be at least 1".into()));
        }
        let ambient = self.ambient_context();
        let mb = MonomialBasis::new(ambient.n(), d);
        if samples < mb.len() {
            return Err(Error::Precondition(format!(
                "need at least {} samples for {} degree-{d} monomials",
                mb.len(),
                mb.len()
            )));
        }
        let mut sampler = Sampler::new(seed);
        let image_point = |sampler: &mut Sampler| -> Result<Vec<Scalar>> {
            let t = sampler.nonzero_scalar();
            let w = sampler.vector(self.n());
            Ok(self.phi_eval(&t, &w)?.coords)
        };
        let mut rows = Vec::with_capacity(samples);
        for _ in 0..samples {
            let z = image_point(&mut sampler)?;
            rows.push(mb.monomials().iter().map(|m| m.evaluate(&z)).collect());
        }
        let kernel = linalg::kernel(rows, mb.len());
        let forms: Vec<Polynomial> = kernel.iter().map(|row| mb.polynomial(&ambient, row)).collect();
        for _ in 0..2 * samples {
            let z = Vector(image_point(&mut sampler)?);
            for f in &forms {
                if !f.evaluate(&z)?.is_zero() {
                    return Err(Error::Sampling(format!(
                        "degree-{d} form {f} does not vanish on a fresh point (seed {seed}); use more samples"
                    )));
                }
            }
        }
        FormSpace::span(&ambient, d, &forms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::text::parse_polynomial;

    fn sp(ctx: &Arc<VarContext>, items: &[&str]) -> FormSpace {
        let polys: Vec<Polynomial> = items.iter().map(|s| parse_polynomial(ctx, s).unwrap()).collect();
        FormSpace::span_of(ctx, &polys).unwrap()
    }

    fn epr() -> EulerModel {
        let ctx = VarContext::standard(3);
        let sys = SymbolSystem::validate(
            &ctx,
            SymbolSystem::candidate(&ctx, vec![sp(&ctx, &["x1^2", "x1*x2", "x1*x3"]), sp(&ctx, &["x1^3"])]),
        )
        .unwrap();
        EulerModel::new(sys)
    }

    fn rnc() -> EulerModel {
        EulerModel::new(SymbolSystem::full_system(&VarContext::standard(1), 3).unwrap())
    }

    fn quadric() -> EulerModel {
        let ctx = VarContext::standard(2);
        EulerModel::new(
            SymbolSystem::validate(&ctx, SymbolSystem::candidate(&ctx, vec![sp(&ctx, &["x1*x2"])])).unwrap(),
        )
    }

    fn point(values: &[i64]) -> ProjectivePoint {
        ProjectivePoint::new(values.iter().map(|&v| int(v)).collect()).unwrap()
    }

    #[test]
    fn projective_equality() {
        assert_eq!(point(&[1, 2, 0]), point(&[-2, -4, 0]));
        assert_ne!(point(&[1, 2, 0]), point(&[1, 2, 1]));
        assert_ne!(point(&[0, 1]), point(&[1, 1]));
        assert!(ProjectivePoint::new(vec![Scalar::zero(); 3]).is_err());
    }

    #[test]
    fn ambient_dimensions() {
        assert_eq!(rnc().ambient_dim(), 4);
        assert_eq!(epr().ambient_dim(), 8);
        assert_eq!(quadric().ambient_dim(), 4);
        assert_eq!(epr().block_range(2), 4..7);
    }

    #[test]
    fn phi_examples() {
        let m = rnc();
        let lambda = scalar::ratio(-3, 2);
        let z = m.phi_eval(&Scalar::one(), &Vector(vec![lambda.clone()])).unwrap();
        let expected = (0..4).map(|k| scalar::pow(&lambda, k)).collect();
        assert_eq!(z, ProjectivePoint::new(expected).unwrap());
        let origin = epr().phi_eval(&Scalar::one(), &Vector::zero(3)).unwrap();
        assert_eq!(origin, point(&[1, 0, 0, 0, 0, 0, 0, 0]));
        let z = epr().phi_eval(&Scalar::one(), &Vector::from_ints(&[1, 1, 0])).unwrap();
        assert_eq!(z, point(&[1, 1, 1, 0, 1, 1, 0, 1]));
        assert!(epr().phi_eval(&Scalar::zero(), &Vector::zero(3)).is_err());
    }

    #[test]
    fn identity_elements() {
        let m = epr();
        let z = point(&[3, 1, -2, 5, 7, 0, 1, -4]);
        assert_eq!(m.group_act(&Vector::zero(3), &z).unwrap(), z);
        assert_eq!(m.euler_act(&Scalar::one(), &z).unwrap(), z);
        assert!(m.euler_act(&Scalar::zero(), &z).is_err());
        assert!(m.group_act(&Vector::zero(2), &z).is_err());
        let o = m.phi_eval(&Scalar::one(), &Vector::zero(3)).unwrap();
        assert_eq!(m.euler_act(&int(5), &o).unwrap(), o);
    }

    #[test]
    fn group_law_on_arbitrary_points() {
        let m = epr();
        let mut sampler = Sampler::new(99);
        for _ in 0..20 {
            let z = ProjectivePoint::new(sampler.nonzero_vector(m.ambient_dim()).0).unwrap();
            let (u, v) = (sampler.vector(3), sampler.vector(3));
            let lhs = m.group_act(&u.add(&v), &z).unwrap();
            let rhs = m.group_act(&u, &m.group_act(&v, &z).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn orbit_degrees() {
        let m = epr();
        assert_eq!(m.orbit_curve_degree(&Vector::from_ints(&[0, 1, 0])).unwrap(), 1);
        assert_eq!(m.orbit_curve_degree(&Vector::from_ints(&[1, 0, 0])).unwrap(), 3);
        assert_eq!(rnc().orbit_curve_degree(&Vector::from_ints(&[-2])).unwrap(), 3);
        assert!(m.orbit_curve_degree(&Vector::zero(3)).is_err());
    }

    #[test]
    fn symbols_survive_the_round_trip() {
        for m in [epr(), rnc(), quadric()] {
            assert_eq!(&m.recover_symbols().unwrap(), m.system());
        }
    }

    #[test]
    fn quadric_and_curve_equations() {
        let q = quadric();
        let eqs = q.implicitize(2, 20, 1).unwrap();
        assert_eq!(eqs.dim(), 1);
        let amb = q.ambient_context();
        let expected = parse_polynomial(&amb, "z0*u2_1 - w1*w2").unwrap();
        assert_eq!(eqs, FormSpace::span(&amb, 2, &[expected]).unwrap());
        assert!(q.implicitize(1, 8, 1).unwrap().is_zero());
        assert_eq!(rnc().implicitize(2, 12, 3).unwrap().dim(), 3);
        assert!(rnc().implicitize(2, 5, 3).is_err());
    }
}
