//! Subcommand implementations. Each one fills a [`Report`]; `report` runs
//! the whole battery into a single document.

use serde_json::{json, Value};

use eulersym_core::forms::{cartan_check, extract_fundamental_forms};
use eulersym_core::groebner::{graded_component, saturate_ideal};
use eulersym_core::linalg;
use eulersym_core::sample::Sampler;
use eulersym_core::scalar::{format_scalar, int};
use eulersym_core::space::MonomialBasis;
use eulersym_core::{
    prolong, EulerModel, FormSpace, Parametrization, Polynomial, ProjectivePoint, Scalar, SymbolSystem, Vector,
};

use crate::files::{self, FileError, ParamFile};
use crate::report::{Outcome, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Prolong,
    Order,
    BaseLocus,
    Saturated,
    Model,
    ActCheck,
    CurveDegrees,
    Implicitize,
    Ff,
    Cartan,
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Prolong => "prolong",
            Command::Order => "order",
            Command::BaseLocus => "baselocus",
            Command::Saturated => "saturated",
            Command::Model => "model",
            Command::ActCheck => "act-check",
            Command::CurveDegrees => "curve-degrees",
            Command::Implicitize => "implicitize",
            Command::Ff => "ff",
            Command::Cartan => "cartan",
            Command::Report => "report",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub seed: u64,
    pub trials: Option<usize>,
    pub degree: Option<usize>,
    pub samples: Option<usize>,
    /// Contents of a points file.
    pub points: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] FileError),
    #[error("{0}")]
    Usage(String),
    #[error("{anchor}: {source}")]
    Algebra {
        anchor: &'static str,
        #[source]
        source: eulersym_core::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Algebra { .. } => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

trait Anchored<T> {
    fn anchor(self, anchor: &'static str) -> Result<T>;
}

impl<T> Anchored<T> for eulersym_core::Result<T> {
    fn anchor(self, anchor: &'static str) -> Result<T> {
        self.map_err(|source| CliError::Algebra { anchor, source })
    }
}

/// A loaded input file.
#[derive(Debug, Clone)]
pub enum Input {
    Symbol(files::SymbolFile),
    Param(ParamFile),
}

impl Input {
    /// Parametrization files are the ones with a `coords:` line.
    pub fn parse(text: &str) -> std::result::Result<Self, FileError> {
        let is_param = text
            .lines()
            .any(|l| l.split('#').next().unwrap_or("").trim_start().starts_with("coords"));
        if is_param {
            files::parse_param_file(text).map(Input::Param)
        } else {
            files::parse_symbol_file(text).map(Input::Symbol)
        }
    }
}

fn poly_list(polys: &[Polynomial]) -> Value {
    Value::Array(polys.iter().map(|p| Value::String(p.to_string())).collect())
}

fn vector_value(v: &Vector) -> Value {
    Value::Array(v.coords().iter().map(|c| Value::String(format_scalar(c))).collect())
}

pub fn run(command: Command, input_name: &str, contents: &str, options: &Options) -> Result<Report> {
    let mut report = Report::new(command.name(), input_name, contents.as_bytes(), options.seed);
    let input = Input::parse(contents)?;
    match input {
        Input::Param(file) => match command {
            Command::Ff => ff(&mut report, &file.parametrization, file.base_point.as_ref())?,
            Command::Cartan => cartan(&mut report, &file.parametrization, options)?,
            Command::Report => {
                ff(&mut report, &file.parametrization, file.base_point.as_ref())?;
                cartan(&mut report, &file.parametrization, options)?;
                let again = files::parse_param_file(&files::render_param_file(&file))?;
                report.check(
                    "file-round-trip",
                    "print and re-parse",
                    again.parametrization.coords() == file.parametrization.coords()
                        && again.base_point == file.base_point,
                    "",
                );
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "`{}` needs a symbol file; parametrizations support `ff`, `cartan` and `report`",
                    command.name()
                )))
            }
        },
        Input::Symbol(file) => {
            let system = match file.validate() {
                Ok(s) => s,
                Err(violations) => {
                    let listed: Vec<String> = violations.iter().map(ToString::to_string).collect();
                    report.check("contraction-closure", "symbol system", false, json!(listed));
                    for v in listed {
                        report.diagnose(v);
                    }
                    return Ok(report);
                }
            };
            match command {
                Command::Validate => validate(&mut report, &system),
                Command::Prolong => prolongations(&mut report, &system)?,
                Command::Order => order(&mut report, &system)?,
                Command::BaseLocus => base_locus(&mut report, &system, options)?,
                Command::Saturated => saturated(&mut report, &system, options, false)?,
                Command::Model => model(&mut report, &system)?,
                Command::ActCheck => act_check(&mut report, &system, options.trials.unwrap_or(100), options.seed)?,
                Command::CurveDegrees => {
                    curve_degrees(&mut report, &system, options.trials.unwrap_or(50), options.seed)?
                }
                Command::Implicitize => implicitize(
                    &mut report,
                    &system,
                    options.degree.unwrap_or(2),
                    options.samples,
                    options.seed,
                )?,
                Command::Ff => {
                    let chart = model_chart(&system)?;
                    ff(&mut report, &chart, None)?;
                    let extracted = extract_fundamental_forms(&chart, &Vector::zero(system.context().n()))
                        .anchor("fundamental-forms")?;
                    report.check(
                        "fundamental-forms",
                        "model chart at 0 reproduces the system",
                        extracted.components() == system.components(),
                        json!(extracted.dims()),
                    );
                }
                Command::Cartan => cartan(&mut report, &model_chart(&system)?, options)?,
                Command::Report => battery(&mut report, &system, &file, options)?,
            }
        }
    }
    Ok(report)
}

fn model_chart(system: &SymbolSystem) -> Result<Parametrization> {
    let model = EulerModel::new(system.clone());
    Parametrization::new(system.context(), model.chart_coordinates(), None).anchor("model-chart")
}

fn validate(report: &mut Report, system: &SymbolSystem) {
    report.check(
        "contraction-closure",
        "symbol system",
        true,
        json!({ "dims": system.dims() }),
    );
    report.info("rank", "rank", system.rank());
}

fn prolongations(report: &mut Report, system: &SymbolSystem) -> Result<()> {
    for k in 1..=system.rank() {
        let p = prolong(&system.component(k)).anchor("prolongation")?;
        let next = system.component(k + 1);
        let contained = next.is_subspace_of(&p).anchor("prolongation")?;
        report.check(
            "prolongation",
            &format!("F{} within prolong(F{k})", k + 1),
            contained,
            json!({ "dim": p.dim(), "next_dim": next.dim(), "equal": contained && p.dim() == next.dim(), "basis": poly_list(p.basis()) }),
        );
    }
    Ok(())
}

fn order(report: &mut Report, system: &SymbolSystem) -> Result<()> {
    let m = system.order().anchor("order")?;
    let r = system.rank();
    report.info("rank", "rank", r);
    report.info("order", "order", m);
    report.check("order", "order at most rank", m <= r, json!({ "order": m, "rank": r }));
    report.info("order-equals-rank", "order equals rank", m == r);
    if m == r {
        report.diagnose("order = rank: all base loci below the top are empty, as for a Veronese-type system");
    } else {
        report.diagnose(format!("order {m} < rank {r}: Bs(F{}) is nonempty", m + 1));
    }
    Ok(())
}

fn base_locus(report: &mut Report, system: &SymbolSystem, options: &Options) -> Result<()> {
    let r = system.rank();
    let mut empties = Vec::new();
    for k in 1..=r {
        let empty = system.base_locus_empty(k).anchor("base-locus")?;
        report.info("base-locus", &format!("Bs(F{k}) empty"), empty);
        empties.push(empty);
    }
    let monotone = empties.windows(2).all(|w| w[0] || !w[1]);
    report.check("base-locus", "Bs(F^k) grows with k", monotone, json!(empties));
    let m = system.order().anchor("order")?;
    if m < r {
        let ideal = saturate_ideal(system.context(), system.component(m + 1).basis()).anchor("saturation")?;
        report.info(
            "base-locus",
            &format!("saturated ideal of F{}", m + 1),
            poly_list(ideal.generators()),
        );
        points_cross_check(
            report,
            system,
            options,
            m + 1,
            &graded_component(&ideal, 2).anchor("saturation")?,
        )?;
    }
    Ok(())
}

/// Compares the quadrics of the saturated ideal with the quadrics through
/// user-supplied points of the base locus.
fn points_cross_check(
    report: &mut Report,
    system: &SymbolSystem,
    options: &Options,
    k: usize,
    ideal_quadrics: &FormSpace,
) -> Result<()> {
    let Some(text) = &options.points else { return Ok(()) };
    let ctx = system.context();
    let points = files::parse_points(text, ctx.n())?;
    let component = system.component(k);
    let mut on_locus = true;
    for p in &points {
        for b in component.basis() {
            if b.evaluate(p).anchor("base-locus")? != int(0) {
                on_locus = false;
                report.diagnose(format!("point ({}) is not on Bs(F{k}): {b} does not vanish", join(p)));
                break;
            }
        }
    }
    report.check("base-locus", &format!("points lie on Bs(F{k})"), on_locus, points.len());
    let mb = MonomialBasis::new(ctx.n(), 2);
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| mb.monomials().iter().map(|m| m.evaluate(p.coords())).collect())
        .collect();
    let through: Vec<Polynomial> = linalg::kernel(rows, mb.len())
        .iter()
        .map(|row| mb.polynomial(ctx, row))
        .collect();
    let through = FormSpace::span(ctx, 2, &through).anchor("saturation")?;
    let inside = ideal_quadrics.is_subspace_of(&through).anchor("saturation")?;
    report.check(
        "saturation",
        "saturated quadrics vanish on the points",
        inside,
        json!({ "ideal_dim": ideal_quadrics.dim(), "through_points_dim": through.dim() }),
    );
    let agree = inside && through.dim() == ideal_quadrics.dim();
    report.info("saturation", "point interpolation agrees", agree);
    if inside && !agree {
        report.diagnose(format!(
            "quadrics through the points have dimension {} > {}; add points or the saturation is not radical",
            through.dim(),
            ideal_quadrics.dim()
        ));
    }
    Ok(())
}

fn join(v: &Vector) -> String {
    v.coords().iter().map(format_scalar).collect::<Vec<_>>().join(", ")
}

/// `in_battery` turns the verdict into an informational entry, since an
/// unsaturated system is not a failure of the software.
fn saturated(report: &mut Report, system: &SymbolSystem, options: &Options, in_battery: bool) -> Result<()> {
    let s = system.is_saturated().anchor("saturation")?;
    report.info(
        "saturation",
        "saturated ideal of F2",
        poly_list(s.saturated_ideal.generators()),
    );
    report.push(
        "saturation",
        "degree-2 part equals F2",
        if in_battery {
            Outcome::Info
        } else {
            Outcome::from_bool(s.quadrics_match)
        },
        json!({ "dim": s.ideal_quadrics.dim(), "basis": poly_list(s.ideal_quadrics.basis()) }),
    );
    for k in 2..=system.rank() {
        let gap = s.gaps.iter().find(|g| g.k == k);
        let outcome = match (gap, in_battery) {
            (_, true) => Outcome::Info,
            (g, false) => Outcome::from_bool(g.is_none()),
        };
        let value = match gap {
            Some(g) => {
                json!({ "prolong_dim": g.prolong_dim, "next_dim": g.next_dim, "witness": g.witness.to_string() })
            }
            None => json!({ "equal": true }),
        };
        report.push("prolongation", &format!("prolong(F{k}) = F{}", k + 1), outcome, value);
    }
    let verdict = if s.saturated { "TRUE" } else { "FALSE" };
    report.push(
        "saturation",
        "saturated",
        if in_battery {
            Outcome::Info
        } else {
            Outcome::from_bool(s.saturated)
        },
        verdict,
    );
    for d in s.diagnostics() {
        report.diagnose(d);
    }
    points_cross_check(report, system, options, 2, &s.ideal_quadrics)
}

fn model(report: &mut Report, system: &SymbolSystem) -> Result<()> {
    let m = EulerModel::new(system.clone());
    report.info("model-construction", "ambient dimension", m.ambient_dim());
    let blocks: Vec<Value> = (0..=m.rank())
        .map(|k| {
            let r = m.block_range(k);
            json!({ "block": k, "start": r.start, "end": r.end })
        })
        .collect();
    report.info("model-construction", "blocks", blocks);
    report.info(
        "model-construction",
        "ambient variables",
        json!(m.ambient_context().names()),
    );
    let o = m.phi_eval(&int(1), &Vector::zero(m.n())).anchor("model-construction")?;
    let mut base = vec![int(0); m.ambient_dim()];
    base[0] = int(1);
    let expected = ProjectivePoint::new(base).anchor("model-construction")?;
    report.check(
        "model-construction",
        "phi([1:0]) is the base point",
        o == expected,
        o.to_string(),
    );
    report.info(
        "model-construction",
        "chart coordinates",
        poly_list(&m.chart_coordinates()),
    );
    Ok(())
}

fn act_check(report: &mut Report, system: &SymbolSystem, trials: usize, seed: u64) -> Result<()> {
    let m = EulerModel::new(system.clone());
    let n = m.n();
    let mut sampler = Sampler::new(seed);
    let (mut group, mut equivariant, mut euler, mut intertwine) = (0, 0, 0, 0);
    for _ in 0..trials {
        let (u, v, w) = (sampler.vector(n), sampler.vector(n), sampler.vector(n));
        let t = sampler.nonzero_scalar();
        let lambda = sampler.nonzero_scalar();
        let z = ProjectivePoint::new(sampler.nonzero_vector(m.ambient_dim()).0).anchor("group-law")?;
        let act = |v: &Vector, z: &ProjectivePoint| m.group_act(v, z).anchor("group-law");
        if act(&u.add(&v), &z)? == act(&u, &act(&v, &z)?)? {
            group += 1;
        }
        let image = m.phi_eval(&t, &w).anchor("equivariance")?;
        if act(&v, &image)? == m.phi_eval(&t, &w.add(&v.scale(&t))).anchor("equivariance")? {
            equivariant += 1;
        }
        let scaled = m.euler_act(&lambda, &image).anchor("euler-compatibility")?;
        if scaled == m.phi_eval(&t, &w.scale(&lambda)).anchor("euler-compatibility")? {
            euler += 1;
        }
        let left = act(
            &v.scale(&lambda),
            &m.euler_act(&lambda, &z).anchor("euler-compatibility")?,
        )?;
        let right = m.euler_act(&lambda, &act(&v, &z)?).anchor("euler-compatibility")?;
        if left == right {
            intertwine += 1;
        }
    }
    let ratio = |k: usize| format!("{k}/{trials}");
    report.check("group-law", "g(u+v) = g(u) g(v)", group == trials, ratio(group));
    report.check(
        "equivariance",
        "g(v) phi([t:w]) = phi([t:w+tv])",
        equivariant == trials,
        ratio(equivariant),
    );
    report.check(
        "euler-compatibility",
        "euler(l) phi([t:w]) = phi([t:lw])",
        euler == trials,
        ratio(euler),
    );
    report.check(
        "euler-compatibility",
        "g(lv) euler(l) = euler(l) g(v)",
        intertwine == trials,
        ratio(intertwine),
    );
    Ok(())
}

fn curve_degrees(report: &mut Report, system: &SymbolSystem, samples: usize, seed: u64) -> Result<()> {
    let m = EulerModel::new(system.clone());
    let order = system.order().anchor("order")?;
    let mut sampler = Sampler::new(seed);
    let mut histogram = vec![0usize; m.rank() + 1];
    for _ in 0..samples.max(1) {
        let d = m
            .orbit_curve_degree(&sampler.sparse_vector(m.n()))
            .anchor("orbit-curve-degree")?;
        histogram[d] += 1;
    }
    let lo = histogram.iter().position(|&c| c > 0).expect("at least one sample");
    let hi = histogram.iter().rposition(|&c| c > 0).expect("at least one sample");
    report.info(
        "orbit-curve-degree",
        "degree counts",
        Value::Object(
            histogram
                .iter()
                .enumerate()
                .filter(|(_, c)| **c > 0)
                .map(|(d, c)| (d.to_string(), json!(c)))
                .collect(),
        ),
    );
    report.check("orbit-curve-degree", "minimum is at least the order", lo >= order, lo);
    report.check(
        "orbit-curve-degree",
        "minimum equals the order",
        lo == order,
        json!({ "min": lo, "order": order }),
    );
    report.check(
        "orbit-curve-degree",
        "maximum equals the rank",
        hi == m.rank(),
        json!({ "max": hi, "rank": m.rank() }),
    );
    if lo > order {
        report.diagnose(format!(
            "no sampled direction met Bs(F{}); the sampled minimum {lo} is only an upper bound for the order",
            order + 1
        ));
    }
    Ok(())
}

fn implicitize(
    report: &mut Report,
    system: &SymbolSystem,
    degree: usize,
    samples: Option<usize>,
    seed: u64,
) -> Result<()> {
    let m = EulerModel::new(system.clone());
    let monomials = MonomialBasis::new(m.ambient_dim(), degree).len();
    let samples = samples.unwrap_or(monomials + 8);
    let equations = m.implicitize(degree, samples, seed).anchor("implicit-equations")?;
    report.info(
        "implicit-equations",
        &format!("degree-{degree} equations"),
        json!({ "dim": equations.dim(), "samples": samples, "fresh_points": 2 * samples, "basis": poly_list(equations.basis()) }),
    );
    if degree == 1 {
        report.check(
            "nondegeneracy",
            "no linear equations",
            equations.is_zero(),
            equations.dim(),
        );
    }
    Ok(())
}

fn ff(report: &mut Report, p: &Parametrization, at: Option<&Vector>) -> Result<()> {
    let base = at.cloned().unwrap_or_else(|| Vector::zero(p.context().n()));
    let system = extract_fundamental_forms(p, &base).anchor("fundamental-forms")?;
    let chart = eulersym_core::forms::jet_filtration(p, &base)
        .anchor("fundamental-forms")?
        .chart;
    report.info("fundamental-forms", "base point", vector_value(&base));
    report.info("fundamental-forms", "chart coordinate functions", json!(chart));
    report.info("fundamental-forms", "dims", json!(system.dims()));
    for (k, c) in system.components().iter().enumerate().skip(2) {
        report.info("fundamental-forms", &format!("F{k}"), poly_list(c.basis()));
    }
    report.info("fundamental-forms", "gaps", json!(system.gaps()));
    let closure = system.to_symbol_system();
    report.info("contraction-closure", "closure at the base point", closure.is_ok());
    if let Err(violations) = closure {
        report.diagnose("the forms at this point fail closure; the point is special, try `cartan` for random points");
        for v in violations {
            report.diagnose(v.to_string());
        }
    }
    Ok(())
}

fn cartan(report: &mut Report, p: &Parametrization, options: &Options) -> Result<()> {
    let trials = options.trials.unwrap_or(5);
    let result = cartan_check(p, trials, options.seed).anchor("cartan-general-point")?;
    for (i, t) in result.trials.iter().enumerate() {
        report.check(
            "cartan-general-point",
            &format!("trial {}", i + 1),
            t.passed,
            json!({ "base_point": vector_value(&t.base_point), "dims": t.dims, "gaps": t.gaps }),
        );
        for v in &t.violations {
            report.diagnose(format!("trial {}: {v}", i + 1));
        }
    }
    for (point, reason) in &result.degenerate {
        report.diagnose(format!("skipped ({}): {reason}", join(point)));
    }
    report.info(
        "cartan-general-point",
        "passed",
        format!("{}/{}", result.passed(), result.trials.len()),
    );
    report.info("cartan-general-point", "generic dims", json!(result.generic_dims()));
    Ok(())
}

fn battery(report: &mut Report, system: &SymbolSystem, file: &files::SymbolFile, options: &Options) -> Result<()> {
    validate(report, system);
    prolongations(report, system)?;
    order(report, system)?;
    base_locus(report, system, options)?;
    if system.order().anchor("order")? == 1 {
        saturated(report, system, options, true)?;
    } else {
        report.info("saturation", "saturated", "not applicable: order is not 1");
    }
    model(report, system)?;
    act_check(report, system, options.trials.unwrap_or(100), options.seed)?;
    curve_degrees(report, system, 50, options.seed)?;
    implicitize(report, system, 1, None, options.seed)?;
    let m = EulerModel::new(system.clone());
    report.check(
        "model-round-trip",
        "symbols recovered from the model",
        m.recover_symbols().anchor("model-round-trip")? == *system,
        json!(system.dims()),
    );
    let chart = model_chart(system)?;
    let extracted =
        extract_fundamental_forms(&chart, &Vector::zero(system.context().n())).anchor("fundamental-forms")?;
    report.check(
        "fundamental-forms",
        "model chart at 0 reproduces the system",
        extracted.components() == system.components(),
        json!(extracted.dims()),
    );
    cartan(
        report,
        &chart,
        &Options {
            trials: Some(5),
            ..options.clone()
        },
    )?;
    let reparsed = files::parse_symbol_file(&files::render_symbol_file(system))?;
    report.check(
        "file-round-trip",
        "print and re-parse",
        reparsed.validate().ok().as_ref() == Some(system) && file.validate().ok().as_ref() == Some(system),
        "",
    );
    Ok(())
}
