//! Fundamental forms of a polynomial parametrization at a point.
//!
//! The span of `{1} ∪ {coordinate functions}` recentered at the base point is
//! filtered by vanishing order. Row reduction with columns sorted by
//! increasing degree makes the filtration visible: rows whose pivot has
//! degree `k` vanish to order exactly `k`, and their degree-`k` parts span
//! the `k`-th graded piece.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, Row};
use crate::poly::{Monomial, Polynomial, VarContext, Vector};
use crate::sample::Sampler;
use crate::scalar::{format_scalar, Scalar};
use crate::space::{FormSpace, MonomialBasis};
use crate::symbol::{SymbolSystem, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametrization {
    ctx: Arc<VarContext>,
    coords: Vec<Polynomial>,
    truncation: usize,
}

impl Parametrization {
    /// `truncation` defaults to the largest total degree of the coordinates.
    pub fn new(ctx: &Arc<VarContext>, coords: Vec<Polynomial>, truncation: Option<usize>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Precondition(
                "a parametrization needs at least one coordinate function".into(),
            ));
        }
        for c in &coords {
            crate::poly::check_context(ctx, c.context())?;
        }
        let top = coords.iter().filter_map(Polynomial::degree).max().unwrap_or(0).max(1);
        Ok(Self {
            ctx: ctx.clone(),
            coords,
            truncation: truncation.unwrap_or(top),
        })
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }
}

/// Graded pieces of the jet filtration at one point.
#[derive(Debug, Clone)]
pub struct JetFiltration {
    pub base_point: Vector,
    /// `dims[k]` = dimension of the `k`-th graded piece.
    pub dims: Vec<usize>,
    /// Degree-`k` leading forms in parameter coordinates, per degree.
    pub leading: Vec<Vec<Polynomial>>,
    /// Indices of the coordinate functions used as chart coordinates.
    pub chart: Vec<usize>,
    /// Linear parts of the chart coordinates, `y = A z`.
    pub chart_matrix: Vec<Row>,
}

/// The system of fundamental forms `G^0, G^1, …` in chart coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFSystem {
    components: Vec<FormSpace>,
}

impl FFSystem {
    pub fn components(&self) -> &[FormSpace] {
        &self.components
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(FormSpace::dim).collect()
    }

    /// Highest degree with a nonzero form.
    pub fn rank(&self) -> usize {
        self.components.len() - 1
    }

    /// Degrees `2 ≤ k < rank` carrying no form.
    pub fn gaps(&self) -> Vec<usize> {
        (2..self.rank()).filter(|&k| self.components[k].is_zero()).collect()
    }

    pub fn to_symbol_system(&self) -> std::result::Result<SymbolSystem, Vec<Violation>> {
        let ctx = self.components[0].context().clone();
        SymbolSystem::validate(&ctx, self.components.clone())
    }
}

/// Monomials of degree `0..=top`, increasing degree, grevlex-decreasing
/// within a degree.
fn graded_columns(n: usize, top: usize) -> Vec<Monomial> {
    (0..=top)
        .flat_map(|d| MonomialBasis::new(n, d).monomials().to_vec())
        .collect()
}

pub fn jet_filtration(p: &Parametrization, base_point: &Vector) -> Result<JetFiltration> {
    let ctx = &p.ctx;
    let n = ctx.n();
    base_point.check_len(n)?;
    let translated: Vec<Polynomial> = p
        .coords
        .iter()
        .map(|c| c.translate(base_point))
        .collect::<Result<_>>()?;
    let top = translated
        .iter()
        .filter_map(Polynomial::degree)
        .max()
        .unwrap_or(0)
        .max(1);
    let columns = graded_columns(n, top);
    let index: std::collections::HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let row_of = |f: &Polynomial| -> Row {
        let mut row = vec![Scalar::zero(); columns.len()];
        for (m, c) in f.terms() {
            row[index[m]] = c.clone();
        }
        row
    };
    let mut rows = vec![row_of(&Polynomial::constant(ctx, Scalar::from_integer(1.into())))];
    rows.extend(translated.iter().map(row_of));
    let (reduced, pivots) = linalg::rref(rows, columns.len());

    let mut leading: Vec<Vec<Polynomial>> = vec![Vec::new(); top + 1];
    for (row, &pivot) in reduced.iter().zip(&pivots) {
        let k = columns[pivot].degree();
        if k > p.truncation {
            return Err(Error::Truncation {
                degree: p.truncation,
                needed: k,
            });
        }
        let form = Polynomial::from_terms(
            ctx,
            columns
                .iter()
                .zip(row)
                .filter(|(m, c)| m.degree() == k && !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        );
        leading[k].push(form);
    }

    let linear_parts: Vec<Row> = translated
        .iter()
        .map(|f| (0..n).map(|i| f.coefficient(&Monomial::var(n, i))).collect())
        .collect();
    if leading[1].len() < n {
        let degenerate = linalg::kernel(linear_parts, n);
        let described: Vec<String> = degenerate
            .iter()
            .map(|v| format!("({})", v.iter().map(format_scalar).collect::<Vec<_>>().join(", ")))
            .collect();
        return Err(Error::Immersion(format!(
            "tangent rank {} < {n}; degenerate directions {}",
            leading[1].len(),
            described.join(", ")
        )));
    }
    let mut chart = Vec::new();
    let mut chosen: Vec<Row> = Vec::new();
    for (i, lin) in linear_parts.iter().enumerate() {
        if chosen.len() == n {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(lin.clone());
        if linalg::rank(trial.clone(), n) == trial.len() {
            chosen = trial;
            chart.push(i);
        }
    }
    while leading.len() > 2 && leading.last().is_some_and(Vec::is_empty) {
        leading.pop();
    }
    Ok(JetFiltration {
        base_point: base_point.clone(),
        dims: leading.iter().map(Vec::len).collect(),
        leading,
        chart,
        chart_matrix: chosen,
    })
}

/// Fundamental forms at `base_point`, expressed in the chart coordinates
/// `y = A z` given by the linear parts of the chart coordinate functions.
pub fn extract_fundamental_forms(p: &Parametrization, base_point: &Vector) -> Result<FFSystem> {
    let filtration = jet_filtration(p, base_point)?;
    let ctx = &p.ctx;
    let n = ctx.n();
    let inverse = linalg::inverse(&filtration.chart_matrix).expect("chart matrix has full rank");
    // z_i = Σ_l inverse[i][l] y_l
    let back: Vec<Polynomial> = inverse
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                ctx,
                row.iter().enumerate().map(|(l, c)| (Monomial::var(n, l), c.clone())),
            )
        })
        .collect();
    let mut components = vec![FormSpace::full(ctx, 0), FormSpace::full(ctx, 1)];
    for (k, forms) in filtration.leading.iter().enumerate().skip(2) {
        let converted: Vec<Polynomial> = forms.iter().map(|f| f.substitute(&back)).collect::<Result<_>>()?;
        components.push(FormSpace::span(ctx, k, &converted)?);
    }
    Ok(FFSystem { components })
}

#[derive(Debug, Clone)]
pub struct CartanTrial {
    pub base_point: Vector,
    pub dims: Vec<usize>,
    pub passed: bool,
    pub gaps: Vec<usize>,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct CartanReport {
    pub seed: u64,
    pub trials: Vec<CartanTrial>,
    /// Base points where extraction failed, with the reason.
    pub degenerate: Vec<(Vector, String)>,
}

impl CartanReport {
    pub fn passed(&self) -> usize {
        self.trials.iter().filter(|t| t.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.trials.iter().all(|t| t.passed)
    }

    /// The dimension vector shared by all trials, if they agree.
    pub fn generic_dims(&self) -> Option<Vec<usize>> {
        let first = self.trials.first()?.dims.clone();
        self.trials.iter().all(|t| t.dims == first).then_some(first)
    }
}

/// Extracts and validates the fundamental forms at `trials` random points.
pub fn cartan_check(p: &Parametrization, trials: usize, seed: u64) -> Result<CartanReport> {
    let mut sampler = Sampler::new(seed);
    let mut report = CartanReport {
        seed,
        trials: Vec::new(),
        degenerate: Vec::new(),
    };
    for _ in 0..trials {
        let point = sampler.vector(p.ctx.n());
        match extract_fundamental_forms(p, &point) {
            Ok(system) => {
                let (passed, violations) = match system.to_symbol_system() {
                    Ok(_) => (true, Vec::new()),
                    Err(v) => (false, v.iter().map(ToString::to_string).collect()),
                };
                report.trials.push(CartanTrial {
                    base_point: point,
                    dims: system.dims(),
                    passed,
                    gaps: system.gaps(),
                    violations,
                });
            }
            Err(e @ (Error::Immersion(_) | Error::Truncation { .. })) => report.degenerate.push((point, e.to_string())),
            Err(e) => return Err(e),
        }
    }
    if trials > 0 && report.trials.is_empty() {
        return Err(Error::Precondition(format!(
            "all {trials} sampled base points were degenerate"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn param(names: &[&str], coords: &[&str]) -> Parametrization {
        let ctx = VarContext::new(names.iter().copied()).unwrap();
        let coords = coords.iter().map(|s| parse_polynomial(&ctx, s).unwrap()).collect();
        Parametrization::new(&ctx, coords, None).unwrap()
    }

    #[test]
    fn filtration_dimensions() {
        let graph = param(&["z1", "z2"], &["z1", "z2", "z1^2 + z2^2"]);
        assert_eq!(jet_filtration(&graph, &Vector::zero(2)).unwrap().dims, vec![1, 2, 1]);
        let rnc = param(&["z"], &["z", "z^2", "z^3"]);
        assert_eq!(jet_filtration(&rnc, &Vector::zero(1)).unwrap().dims, vec![1, 1, 1, 1]);
        let linear = param(&["z1", "z2"], &["z1", "z2"]);
        let f = jet_filtration(&linear, &Vector::zero(2)).unwrap();
        assert_eq!(f.dims, vec![1, 2]);
        assert_eq!(extract_fundamental_forms(&linear, &Vector::zero(2)).unwrap().rank(), 1);
    }

    #[test]
    fn immersion_failure_names_directions() {
        let cusp = param(&["z"], &["z^2", "z^3"]);
        match jet_filtration(&cusp, &Vector::zero(1)) {
            Err(Error::Immersion(msg)) => assert!(msg.contains("(1)"), "{msg}"),
            other => panic!("expected immersion failure, got {other:?}"),
        }
    }

    #[test]
    fn truncation_too_small() {
        let ctx = VarContext::new(["z"]).unwrap();
        let coords = ["z", "z^3"]
            .iter()
            .map(|s| parse_polynomial(&ctx, s).unwrap())
            .collect();
        let p = Parametrization::new(&ctx, coords, Some(2)).unwrap();
        assert_eq!(
            jet_filtration(&p, &Vector::zero(1)).unwrap_err(),
            Error::Truncation { degree: 2, needed: 3 }
        );
    }

    #[test]
    fn quadric_graph() {
        let p = param(&["z1", "z2"], &["z1", "z2", "z1*z2"]);
        let ff = extract_fundamental_forms(&p, &Vector::zero(2)).unwrap();
        let ctx = p.context();
        assert_eq!(
            ff.components()[2],
            FormSpace::span_of(ctx, &[parse_polynomial(ctx, "z1*z2").unwrap()]).unwrap()
        );
        assert!(ff.to_symbol_system().is_ok());
    }

    #[test]
    fn plane_cubic_at_origin_has_a_gap() {
        let p = param(&["z"], &["z", "z^3"]);
        let ff = extract_fundamental_forms(&p, &Vector::zero(1)).unwrap();
        assert_eq!(ff.dims(), vec![1, 1, 0, 1]);
        assert_eq!(ff.gaps(), vec![2]);
        let violations = ff.to_symbol_system().unwrap_err();
        assert!(matches!(violations[0], Violation::Closure { k: 3, .. }));
        // away from the flex the curve looks like a conic
        let ff = extract_fundamental_forms(&p, &Vector::from_ints(&[2])).unwrap();
        assert_eq!(ff.dims(), vec![1, 1, 1]);
    }

    #[test]
    fn chart_change_uses_linear_parts() {
        // y = 2z, so z^2 = y^2/4 still spans <y^2>
        let p = param(&["z"], &["2*z", "z^2 + z"]);
        let ff = extract_fundamental_forms(&p, &Vector::zero(1)).unwrap();
        assert_eq!(ff.dims(), vec![1, 1, 1]);
        let sheared = param(&["a", "b"], &["a + b", "a - b", "a*b"]);
        let ff = extract_fundamental_forms(&sheared, &Vector::zero(2)).unwrap();
        let ctx = sheared.context();
        // a = (y1 + y2)/2, b = (y1 - y2)/2, so ab = (y1^2 - y2^2)/4
        assert_eq!(
            ff.components()[2],
            FormSpace::span_of(ctx, &[parse_polynomial(ctx, "a^2 - b^2").unwrap()]).unwrap()
        );
    }

    #[test]
    fn cartan_on_plane_cubic() {
        let p = param(&["z"], &["z", "z^3"]);
        let report = cartan_check(&p, 5, 4).unwrap();
        assert_eq!(report.trials.len() + report.degenerate.len(), 5);
        assert!(report.all_passed());
        assert_eq!(report.generic_dims(), Some(vec![1, 1, 1]));
    }

    #[test]
    fn cartan_all_degenerate_is_an_error() {
        let p = param(&["z1", "z2"], &["z1 + z2", "z1^2 + 2*z1*z2 + z2^2"]);
        assert!(cartan_check(&p, 3, 0).is_err());
    }
}
