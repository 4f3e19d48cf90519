//! The two line-oriented input formats and their printers.
//!
//! Symbol files:
//!
//! ```text
//! vars: x1 x2 x3
//! rank: 3
//! F2: x1^2, x1*x2, x1*x3
//! F3: x1^3
//! ```
//!
//! Parametrization files:
//!
//! ```text
//! vars: z1 z2
//! coords: z1, z2, z1*z2
//! at: 1, 2          # optional base point
//! truncation: 6     # optional
//! ```
//!
//! `#` starts a comment. Positions in errors are 1-based lines and
//! character columns.

use std::collections::BTreeMap;
use std::sync::Arc;

use eulersym_core::scalar::parse_scalar;
use eulersym_core::text::parse_polynomial;
use eulersym_core::{Error, FormSpace, Parametrization, Polynomial, SymbolSystem, VarContext, Vector, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, FileError> {
    Err(FileError {
        line,
        column,
        message: message.into(),
    })
}

/// Value of a `key: value` line together with where it starts.
#[derive(Debug, Clone)]
struct Field {
    line: usize,
    key_column: usize,
    value_column: usize,
    value: String,
}

/// Splits into `key -> Field`, rejecting duplicates and lines without `:`.
fn fields(text: &str) -> Result<Vec<(String, Field)>, FileError> {
    let mut out: Vec<(String, Field)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let key_column = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
        let Some(colon) = content.find(':') else {
            return err(line, key_column, "expected `key: value`");
        };
        let key = content[..colon].trim().to_string();
        if key.is_empty() {
            return err(line, key_column, "missing key before `:`");
        }
        if out.iter().any(|(k, _)| *k == key) {
            return err(line, key_column, format!("duplicate key `{key}`"));
        }
        let value_column = content[..colon].chars().count() + 2;
        out.push((
            key,
            Field {
                line,
                key_column,
                value_column,
                value: content[colon + 1..].to_string(),
            },
        ));
    }
    Ok(out)
}

/// Comma-separated items with the column of each item's first character.
fn items(field: &Field) -> Vec<(usize, String)> {
    if field.value.trim().is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut column = field.value_column;
    for piece in field.value.split(',') {
        out.push((column, piece.to_string()));
        column += piece.chars().count() + 1;
    }
    out
}

fn parse_vars(field: &Field) -> Result<Arc<VarContext>, FileError> {
    let names: Vec<&str> = field
        .value
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if names.is_empty() {
        return err(field.line, field.value_column, "no variables declared");
    }
    VarContext::new(names).map_err(|e| FileError {
        line: field.line,
        column: field.value_column,
        message: e.to_string(),
    })
}

fn parse_poly(ctx: &Arc<VarContext>, line: usize, column: usize, text: &str) -> Result<Polynomial, FileError> {
    if text.trim().is_empty() {
        return err(line, column, "empty entry");
    }
    parse_polynomial(ctx, text).map_err(|e| match e {
        Error::Parse { column: c, message } => FileError {
            line,
            column: column + c - 1,
            message,
        },
        other => FileError {
            line,
            column,
            message: other.to_string(),
        },
    })
}

fn parse_count(field: &Field, what: &str) -> Result<usize, FileError> {
    field.value.trim().parse::<usize>().map_err(|_| FileError {
        line: field.line,
        column: field.value_column,
        message: format!("{what} must be a nonnegative integer"),
    })
}

fn required(fields: &[(String, Field)], key: &str) -> Result<Field, FileError> {
    fields
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, f)| f.clone())
        .ok_or_else(|| FileError {
            line: 1,
            column: 1,
            message: format!("missing `{key}:` line"),
        })
}

/// A parsed symbol file: the declared variables, rank and higher components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolFile {
    pub context: Arc<VarContext>,
    pub rank: usize,
    /// `F^k` for the written `k ≥ 2`; the rest are zero.
    pub components: BTreeMap<usize, FormSpace>,
}

impl SymbolFile {
    /// `[F^0, …, F^r]` with the forced `F^0`, `F^1` and zero fill-ins.
    pub fn candidate(&self) -> Vec<FormSpace> {
        let higher = (2..=self.rank)
            .map(|k| {
                self.components
                    .get(&k)
                    .cloned()
                    .unwrap_or_else(|| FormSpace::zero(&self.context, k))
            })
            .collect();
        SymbolSystem::candidate(&self.context, higher)
    }

    pub fn validate(&self) -> Result<SymbolSystem, Vec<Violation>> {
        SymbolSystem::validate(&self.context, self.candidate())
    }
}

pub fn parse_symbol_file(text: &str) -> Result<SymbolFile, FileError> {
    let fields = fields(text)?;
    let vars = required(&fields, "vars")?;
    let context = parse_vars(&vars)?;
    let rank_field = required(&fields, "rank")?;
    let rank = parse_count(&rank_field, "rank")?;
    if rank == 0 {
        return err(rank_field.line, rank_field.value_column, "rank must be at least 1");
    }
    let mut components = BTreeMap::new();
    for (key, field) in &fields {
        if key == "vars" || key == "rank" {
            continue;
        }
        let k = key
            .strip_prefix('F')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| FileError {
                line: field.line,
                column: field.key_column,
                message: format!("unknown key `{key}`"),
            })?;
        if k < 2 {
            return err(
                field.line,
                field.key_column,
                format!("F{k} is fixed and must not be written"),
            );
        }
        if k > rank {
            return err(
                field.line,
                field.key_column,
                format!("F{k} exceeds the declared rank {rank}"),
            );
        }
        let mut gens = Vec::new();
        for (column, item) in items(field) {
            let p = parse_poly(&context, field.line, column, &item)?;
            let start = column + item.chars().take_while(|c| c.is_whitespace()).count();
            match p.homogeneous_degree() {
                Some(d) if d == k => gens.push(p),
                Some(d) => return err(field.line, start, format!("generator of degree {d} listed under F{k}")),
                None if p.is_zero() => {}
                None => return err(field.line, start, format!("generator under F{k} is not homogeneous")),
            }
        }
        let space = FormSpace::span(&context, k, &gens).map_err(|e| FileError {
            line: field.line,
            column: field.value_column,
            message: e.to_string(),
        })?;
        components.insert(k, space);
    }
    Ok(SymbolFile {
        context,
        rank,
        components,
    })
}

/// Canonical text for a symbol system; parses back to the same system.
pub fn render_symbol_file(system: &SymbolSystem) -> String {
    let mut out = format!(
        "vars: {}\nrank: {}\n",
        system.context().names().join(" "),
        system.rank()
    );
    for k in 2..=system.rank() {
        let c = system.component(k);
        if c.is_zero() {
            continue;
        }
        let gens: Vec<String> = c.basis().iter().map(ToString::to_string).collect();
        out.push_str(&format!("F{k}: {}\n", gens.join(", ")));
    }
    out
}

/// A parsed parametrization file.
#[derive(Debug, Clone)]
pub struct ParamFile {
    pub parametrization: Parametrization,
    pub base_point: Option<Vector>,
}

fn parse_rationals(field: &Field) -> Result<Vec<eulersym_core::Scalar>, FileError> {
    items(field)
        .into_iter()
        .map(|(column, item)| {
            parse_scalar(item.trim()).ok_or_else(|| FileError {
                line: field.line,
                column: column + item.chars().take_while(|c| c.is_whitespace()).count(),
                message: format!("`{}` is not a rational number", item.trim()),
            })
        })
        .collect()
}

pub fn parse_param_file(text: &str) -> Result<ParamFile, FileError> {
    let fields = fields(text)?;
    for (key, field) in &fields {
        if !["vars", "coords", "at", "truncation"].contains(&key.as_str()) {
            return err(field.line, field.key_column, format!("unknown key `{key}`"));
        }
    }
    let context = parse_vars(&required(&fields, "vars")?)?;
    let coords_field = required(&fields, "coords")?;
    let coords = items(&coords_field)
        .into_iter()
        .map(|(column, item)| parse_poly(&context, coords_field.line, column, &item))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.is_empty() {
        return err(
            coords_field.line,
            coords_field.value_column,
            "empty embedding: no coordinate functions",
        );
    }
    let truncation = match fields.iter().find(|(k, _)| k == "truncation") {
        Some((_, f)) => Some(parse_count(f, "truncation")?),
        None => None,
    };
    let base_point = match fields.iter().find(|(k, _)| k == "at") {
        Some((_, f)) => {
            let values = parse_rationals(f)?;
            if values.len() != context.n() {
                return err(
                    f.line,
                    f.value_column,
                    format!("base point has {} entries, expected {}", values.len(), context.n()),
                );
            }
            Some(Vector(values))
        }
        None => None,
    };
    let parametrization = Parametrization::new(&context, coords, truncation).map_err(|e| FileError {
        line: coords_field.line,
        column: coords_field.value_column,
        message: e.to_string(),
    })?;
    Ok(ParamFile {
        parametrization,
        base_point,
    })
}

/// Canonical text for a parametrization file.
pub fn render_param_file(file: &ParamFile) -> String {
    let p = &file.parametrization;
    let coords: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
    let mut out = format!(
        "vars: {}\ncoords: {}\n",
        p.context().names().join(" "),
        coords.join(", ")
    );
    if let Some(at) = &file.base_point {
        let values: Vec<String> = at.coords().iter().map(eulersym_core::scalar::format_scalar).collect();
        out.push_str(&format!("at: {}\n", values.join(", ")));
    }
    out.push_str(&format!("truncation: {}\n", p.truncation()));
    out
}

/// One point per line, coordinates separated by commas.
pub fn parse_points(text: &str, n: usize) -> Result<Vec<Vector>, FileError> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let field = Field {
            line: i + 1,
            key_column: 1,
            value_column: 1,
            value: content.to_string(),
        };
        let values = parse_rationals(&field)?;
        if values.len() != n {
            return err(
                i + 1,
                1,
                format!("point has {} coordinates, expected {n}", values.len()),
            );
        }
        points.push(Vector(values));
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPR: &str = "# the hyperplane example\nvars: x1 x2 x3\nrank: 3\nF2: x1^2, x1*x2, x1*x3\nF3: x1^3\n";

    #[test]
    fn epr_file() {
        let file = parse_symbol_file(EPR).unwrap();
        assert_eq!(file.validate().unwrap().dims(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn unknown_variable_is_positioned() {
        let e = parse_symbol_file("vars: x1 x2\nrank: 2\nF2: x1^2 + y\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 12));
        assert!(e.message.contains("unknown variable `y`"), "{e}");
    }

    #[test]
    fn degree_mismatch_is_positioned() {
        let e = parse_symbol_file("vars: x1 x2\nrank: 3\nF2: x1^2,  x1^3\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 12));
        assert!(e.message.contains("degree 3"), "{e}");
    }

    #[test]
    fn structural_errors() {
        for (text, line) in [
            ("vars: x1\nrank: 2\nF1: x1\n", 3),
            ("vars: x1\nrank: 2\nF3: x1^3\n", 3),
            ("vars: x1\nrank: 2\nG2: x1^2\n", 3),
            ("vars: x1\nrank: two\n", 2),
            ("vars: x1\nvars: x2\n", 2),
            ("vars: x1 x1\nrank: 1\n", 1),
            ("vars: x1\nrank: 2\nF2: x1^2,\n", 3),
            ("vars: x1\nrank: 2\nF2: x1^2 + x1\n", 3),
        ] {
            assert_eq!(parse_symbol_file(text).unwrap_err().line, line, "{text}");
        }
        assert!(parse_symbol_file("rank: 2\n").unwrap_err().message.contains("vars"));
    }

    #[test]
    fn omitted_components_are_zero() {
        let file = parse_symbol_file("vars: x1 x2\nrank: 3\nF3: x1^3\n").unwrap();
        let candidate = file.candidate();
        assert!(candidate[2].is_zero());
        // zero F2 under a nonzero F3 breaks closure
        assert!(file.validate().is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let sys = parse_symbol_file(EPR).unwrap().validate().unwrap();
        let text = render_symbol_file(&sys);
        assert_eq!(parse_symbol_file(&text).unwrap().validate().unwrap(), sys);
        let skip = parse_symbol_file("vars: a b\nrank: 3\nF2: a^2\nF3: a^3\n")
            .unwrap()
            .validate()
            .unwrap();
        assert_eq!(
            parse_symbol_file(&render_symbol_file(&skip))
                .unwrap()
                .validate()
                .unwrap(),
            skip
        );
    }

    #[test]
    fn param_files() {
        let file = parse_param_file("vars: z1 z2\ncoords: z1, z2, z1*z2\nat: 1, 2\n").unwrap();
        assert_eq!(file.parametrization.coords().len(), 3);
        assert_eq!(file.base_point, Some(Vector::from_ints(&[1, 2])));
        let again = parse_param_file(&render_param_file(&file)).unwrap();
        assert_eq!(again.parametrization.coords(), file.parametrization.coords());
        assert_eq!(again.base_point, file.base_point);
        let half = parse_param_file("vars: z\ncoords: z\nat: -1/2\n").unwrap();
        assert_eq!(half.base_point.unwrap().0[0], eulersym_core::scalar::ratio(-1, 2));
    }

    #[test]
    fn param_errors() {
        assert!(parse_param_file("vars: z\ncoords:\n")
            .unwrap_err()
            .message
            .contains("empty embedding"));
        assert_eq!(parse_param_file("vars: z\ncoords: z\nat: 1, 2\n").unwrap_err().line, 3);
        assert_eq!(parse_param_file("vars: z\ncoords: z\nat: q\n").unwrap_err().column, 5);
        assert_eq!(parse_param_file("vars: z\ncoords: z, w\n").unwrap_err().column, 12);
    }

    #[test]
    fn points() {
        let pts = parse_points("# Bs\n0, 1, 2\n0, -1/3, 5\n", 3).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(parse_points("0, 1\n", 3).unwrap_err().line, 1);
    }
}
