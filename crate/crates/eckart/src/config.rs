//! Run configuration for the command-line driver: a flat INI-like text
//! format and an equivalent JSON form. Both map onto [`RunConfig`].
//!
//! ```text
//! [model]
//! alpha = 1/a          # "1/a" or a positive number
//! beta = 0.0001
//! a = 40.0
//! hbar = 1.0           # optional, default 1
//! mu = 1.0             # optional, default 1
//!
//! [states]
//! n_r = 0,1,2
//! ell = 1,2,3
//! d = 3
//!
//! [schemes]            # name = spec, order preserved
//! f1 = f1
//! f2 = f2 1.1 0.98
//! f3 = f3
//! f4 = f4              # optional reference radius: f4 1.6
//! f5c = f5 0.5 0.2 0.2 0.1 xi 1.1 0.98
//!
//! [solver]             # optional, defaults scale with the model
//! n_points = 40000
//!
//! [output]
//! format = csv         # csv | json
//! precision = 7
//!
//! [profile]            # error-profile command only
//! ell = 2
//! d = 3
//! near_origin = 0.01 5.0 500
//! near_r0 = 0.05 0.6 200
//!
//! [degeneracy]         # degeneracy command only
//! alpha = 1/a
//! beta = 0.0001
//! pairs = (0,2,3)-(1,1,3) (0,3,3)-(1,2,3)
//! zero_energy = (0,1,3) (1,1,3)
//! bracket = 1.0 100.0
//! n_samples = 200
//! ```

use crate::centrifugal::SchemeSpec;
use crate::degeneracy::AlphaLaw;
use crate::model::{EckartModel, PhysicalConstants, QuantumNumbers};
use crate::numerov::RadialSolverConfig;
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("invalid JSON config: {0}")]
    Json(#[from] serde_json::Error),
}

fn invalid(msg: impl Into<String>) -> ConfigError {
    ConfigError::Invalid(msg.into())
}

/// Depth parameter: either a fixed value or the `1/a` coupling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlphaSpec {
    Value(f64),
    Law(String),
}

impl AlphaSpec {
    pub fn resolve(&self, a: f64) -> Result<f64, ConfigError> {
        Ok(self.law()?.value(a))
    }

    pub fn law(&self) -> Result<AlphaLaw, ConfigError> {
        match self {
            AlphaSpec::Value(v) => Ok(AlphaLaw::Constant(*v)),
            AlphaSpec::Law(s) if s.trim() == "1/a" => Ok(AlphaLaw::InverseA),
            AlphaSpec::Law(s) => Err(invalid(format!("unknown alpha law {s:?}; use \"1/a\" or a number"))),
        }
    }
}

fn default_one() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSection {
    pub alpha: AlphaSpec,
    pub beta: f64,
    pub a: f64,
    #[serde(default = "default_one")]
    pub hbar: f64,
    #[serde(default = "default_one")]
    pub mu: f64,
}

impl ModelSection {
    pub fn build(&self) -> Result<EckartModel, ConfigError> {
        let constants = PhysicalConstants::new(self.hbar, self.mu)
            .map_err(|e| invalid(e.to_string()))?;
        EckartModel::with_constants(self.alpha.resolve(self.a)?, self.beta, self.a, constants)
            .map_err(|e| invalid(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct StatesSection {
    #[serde(default)]
    pub n_r: Vec<u32>,
    #[serde(default)]
    pub ell: Vec<u32>,
    #[serde(default)]
    pub d: Vec<u32>,
}

impl StatesSection {
    /// Cartesian expansion in row order `n_r`, then `ell`, then `d`.
    pub fn expand(&self) -> Result<Vec<QuantumNumbers>, ConfigError> {
        let mut out = Vec::new();
        for &n in &self.n_r {
            for &ell in &self.ell {
                for &d in &self.d {
                    out.push(QuantumNumbers::new(n, ell, d).map_err(|e| invalid(e.to_string()))?);
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedScheme {
    pub name: String,
    pub spec: SchemeSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SolverSection {
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub n_points: Option<usize>,
    pub energy_tol: Option<f64>,
    pub max_bisections: Option<u32>,
}

impl SolverSection {
    pub fn build(&self, model: &EckartModel) -> RadialSolverConfig {
        let mut cfg = RadialSolverConfig::for_model(model);
        if let Some(v) = self.r_min {
            cfg.r_min = v;
        }
        if let Some(v) = self.r_max {
            cfg.r_max = v;
        }
        if let Some(v) = self.n_points {
            cfg.n_points = v;
        }
        if let Some(v) = self.energy_tol {
            cfg.energy_tol = v;
        }
        if let Some(v) = self.max_bisections {
            cfg.max_bisections = v;
        }
        cfg
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputSection {
    #[serde(default)]
    pub format: OutputFormat,
    #[serde(default = "default_precision")]
    pub precision: usize,
}

fn default_precision() -> usize {
    7
}

impl Default for OutputSection {
    fn default() -> Self {
        Self { format: OutputFormat::Csv, precision: 7 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn points(&self) -> Result<Vec<f64>, ConfigError> {
        if !(self.start > 0.0 && self.stop > self.start && self.n >= 2) {
            return Err(invalid(format!(
                "grid needs 0 < start < stop and n >= 2, got {self:?}"
            )));
        }
        let h = (self.stop - self.start) / (self.n - 1) as f64;
        Ok((0..self.n).map(|i| self.start + i as f64 * h).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileSection {
    pub ell: u32,
    #[serde(default = "default_d3")]
    pub d: u32,
    pub near_origin: GridSpec,
    pub near_r0: GridSpec,
}

fn default_d3() -> u32 {
    3
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegeneracySection {
    #[serde(default)]
    pub alpha: Option<AlphaSpec>,
    #[serde(default)]
    pub beta: Option<f64>,
    #[serde(default)]
    pub pairs: Vec<(QuantumNumbers, QuantumNumbers)>,
    #[serde(default)]
    pub zero_energy: Vec<QuantumNumbers>,
    pub bracket: (f64, f64),
    #[serde(default = "default_samples")]
    pub n_samples: usize,
}

fn default_samples() -> usize {
    200
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub model: ModelSection,
    #[serde(default)]
    pub states: StatesSection,
    #[serde(default)]
    pub schemes: Vec<NamedScheme>,
    #[serde(default)]
    pub solver: SolverSection,
    #[serde(default)]
    pub output: OutputSection,
    #[serde(default)]
    pub profile: Option<ProfileSection>,
    #[serde(default)]
    pub degeneracy: Option<DegeneracySection>,
}

impl RunConfig {
    /// Every configured scheme must be constructible for the model.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let model = self.model.build()?;
        for s in &self.schemes {
            s.spec
                .build(&model)
                .map_err(|e| invalid(format!("scheme {:?}: {e}", s.name)))?;
        }
        self.states.expand()?;
        Ok(())
    }
}

/// Load a configuration; `.json` selects the JSON form, anything else the
/// INI form.
pub fn load(path: &Path) -> Result<RunConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let cfg = if path.extension().is_some_and(|e| e == "json") {
        parse_json(&text)?
    } else {
        parse_ini(&text)?
    };
    cfg.validate()?;
    Ok(cfg)
}

pub fn parse_json(text: &str) -> Result<RunConfig, ConfigError> {
    Ok(serde_json::from_str(text)?)
}

// ---------------------------------------------------------------------
// INI-like parser
// ---------------------------------------------------------------------

struct Entry {
    key: String,
    value: String,
    line: usize,
}

fn split_sections(text: &str) -> Result<Vec<(String, Vec<Entry>)>, ConfigError> {
    let mut sections: Vec<(String, Vec<Entry>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.split_once(['#', ';']) {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or(ConfigError::Parse { line, message: "unterminated section header".into() })?;
            sections.push((name.trim().to_string(), Vec::new()));
            continue;
        }
        let (key, value) = content.split_once('=').ok_or(ConfigError::Parse {
            line,
            message: format!("expected key = value, got {content:?}"),
        })?;
        let section = sections.last_mut().ok_or(ConfigError::Parse {
            line,
            message: "key before any [section] header".into(),
        })?;
        section.1.push(Entry {
            key: key.trim().to_string(),
            value: value.trim().to_string(),
            line,
        });
    }
    Ok(sections)
}

fn parse_f64(e: &Entry) -> Result<f64, ConfigError> {
    e.value.parse().map_err(|_| ConfigError::Parse {
        line: e.line,
        message: format!("{}: expected a number, got {:?}", e.key, e.value),
    })
}

fn parse_list<T: std::str::FromStr>(e: &Entry) -> Result<Vec<T>, ConfigError> {
    let v = e.value.trim();
    if v.is_empty() {
        return Ok(Vec::new());
    }
    v.split(',')
        .map(|p| {
            p.trim().parse().map_err(|_| ConfigError::Parse {
                line: e.line,
                message: format!("{}: cannot parse list item {:?}", e.key, p.trim()),
            })
        })
        .collect()
}

fn parse_numbers(e: &Entry, expected: usize) -> Result<Vec<f64>, ConfigError> {
    let parts: Vec<f64> = e
        .value
        .split_whitespace()
        .map(|p| {
            p.parse().map_err(|_| ConfigError::Parse {
                line: e.line,
                message: format!("{}: cannot parse {:?}", e.key, p),
            })
        })
        .collect::<Result<_, _>>()?;
    if parts.len() != expected {
        return Err(ConfigError::Parse {
            line: e.line,
            message: format!("{}: expected {} numbers, got {}", e.key, expected, parts.len()),
        });
    }
    Ok(parts)
}

fn parse_scheme_spec(e: &Entry) -> Result<SchemeSpec, ConfigError> {
    let tokens: Vec<&str> = e.value.split_whitespace().collect();
    let err = |message: String| ConfigError::Parse { line: e.line, message };
    let num = |t: &str| -> Result<f64, ConfigError> {
        t.parse().map_err(|_| err(format!("cannot parse number {t:?}")))
    };
    match tokens.split_first() {
        Some((&"f1", rest)) if rest.is_empty() => Ok(SchemeSpec::F1),
        Some((&"f2", rest)) if rest.len() == 2 => {
            Ok(SchemeSpec::F2 { xi1: num(rest[0])?, xi2: num(rest[1])? })
        }
        Some((&"f3", rest)) if rest.is_empty() => Ok(SchemeSpec::F3),
        Some((&"f4", rest)) => match rest {
            [] => Ok(SchemeSpec::F4 { r0: None }),
            [r0] => Ok(SchemeSpec::F4 { r0: Some(num(r0)?) }),
            _ => Err(err("f4 takes at most one reference radius".into())),
        },
        Some((&"f5", rest)) if rest.len() >= 4 => {
            let lambdas = [num(rest[0])?, num(rest[1])?, num(rest[2])?, num(rest[3])?];
            let mut xi = None;
            let mut r0 = None;
            let mut i = 4;
            while i < rest.len() {
                match rest[i] {
                    "xi" => {
                        if rest.len() < i + 3 {
                            return Err(err("xi needs two values".into()));
                        }
                        xi = Some((num(rest[i + 1])?, num(rest[i + 2])?));
                        i += 3;
                    }
                    "r0" => {
                        if rest.len() < i + 2 {
                            return Err(err("r0 needs a value".into()));
                        }
                        r0 = Some(num(rest[i + 1])?);
                        i += 2;
                    }
                    other => return Err(err(format!("unexpected token {other:?} in f5 spec"))),
                }
            }
            let (xi1, xi2) = match xi {
                Some(pair) => pair,
                None if lambdas[1] == 0.0 => (1.0, 1.0),
                None => {
                    return Err(err("f5 with nonzero second weight needs xi <xi1> <xi2>".into()))
                }
            };
            Ok(SchemeSpec::F5 { lambdas, xi1, xi2, r0 })
        }
        _ => Err(err(format!("cannot parse scheme spec {:?}", e.value))),
    }
}

fn parse_state_triple(text: &str, line: usize) -> Result<QuantumNumbers, ConfigError> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or(ConfigError::Parse {
            line,
            message: format!("expected (n_r,ell,d), got {text:?}"),
        })?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(ConfigError::Parse {
            line,
            message: format!("expected three components in {text:?}"),
        });
    }
    let parse = |p: &str| -> Result<u32, ConfigError> {
        p.parse().map_err(|_| ConfigError::Parse {
            line,
            message: format!("cannot parse quantum number {p:?}"),
        })
    };
    QuantumNumbers::new(parse(parts[0])?, parse(parts[1])?, parse(parts[2])?)
        .map_err(|e| ConfigError::Parse { line, message: e.to_string() })
}

pub fn parse_ini(text: &str) -> Result<RunConfig, ConfigError> {
    let sections = split_sections(text)?;
    let mut model: Option<ModelSection> = None;
    let mut states = StatesSection::default();
    let mut schemes = Vec::new();
    let mut solver = SolverSection::default();
    let mut output = OutputSection::default();
    let mut profile: Option<ProfileSection> = None;
    let mut degeneracy: Option<DegeneracySection> = None;

    for (name, entries) in sections {
        match name.as_str() {
            "model" => {
                let mut alpha = None;
                let mut beta = None;
                let mut a = None;
                let mut hbar = 1.0;
                let mut mu = 1.0;
                for e in &entries {
                    match e.key.as_str() {
                        "alpha" => {
                            alpha = Some(match e.value.parse::<f64>() {
                                Ok(v) => AlphaSpec::Value(v),
                                Err(_) => AlphaSpec::Law(e.value.clone()),
                            })
                        }
                        "beta" => beta = Some(parse_f64(e)?),
                        "a" => a = Some(parse_f64(e)?),
                        "hbar" => hbar = parse_f64(e)?,
                        "mu" => mu = parse_f64(e)?,
                        other => {
                            return Err(ConfigError::Parse {
                                line: e.line,
                                message: format!("unknown model key {other:?}"),
                            })
                        }
                    }
                }
                model = Some(ModelSection {
                    alpha: alpha.ok_or(invalid("[model] needs alpha"))?,
                    beta: beta.ok_or(invalid("[model] needs beta"))?,
                    a: a.ok_or(invalid("[model] needs a"))?,
                    hbar,
                    mu,
                });
            }
            "states" => {
                for e in &entries {
                    match e.key.as_str() {
                        "n_r" => states.n_r = parse_list(e)?,
                        "ell" => states.ell = parse_list(e)?,
                        "d" => states.d = parse_list(e)?,
                        other => {
                            return Err(ConfigError::Parse {
                                line: e.line,
                                message: format!("unknown states key {other:?}"),
                            })
                        }
                    }
                }
            }
            "schemes" => {
                for e in &entries {
                    schemes.push(NamedScheme { name: e.key.clone(), spec: parse_scheme_spec(e)? });
                }
            }
            "solver" => {
                for e in &entries {
                    match e.key.as_str() {
                        "r_min" => solver.r_min = Some(parse_f64(e)?),
                        "r_max" => solver.r_max = Some(parse_f64(e)?),
                        "n_points" => {
                            solver.n_points = Some(parse_f64(e)? as usize);
                        }
                        "energy_tol" => solver.energy_tol = Some(parse_f64(e)?),
                        "max_bisections" => solver.max_bisections = Some(parse_f64(e)? as u32),
                        other => {
                            return Err(ConfigError::Parse {
                                line: e.line,
                                message: format!("unknown solver key {other:?}"),
                            })
                        }
                    }
                }
            }
            "output" => {
                for e in &entries {
                    match e.key.as_str() {
                        "format" => {
                            output.format = match e.value.as_str() {
                                "csv" => OutputFormat::Csv,
                                "json" => OutputFormat::Json,
                                other => {
                                    return Err(ConfigError::Parse {
                                        line: e.line,
                                        message: format!("unknown format {other:?}"),
                                    })
                                }
                            }
                        }
                        "precision" => output.precision = parse_f64(e)? as usize,
                        other => {
                            return Err(ConfigError::Parse {
                                line: e.line,
                                message: format!("unknown output key {other:?}"),
                            })
                        }
                    }
                }
            }
            "profile" => {
                let mut ell = None;
                let mut d = 3;
                let mut near_origin = None;
                let mut near_r0 = None;
                for e in &entries {
                    match e.key.as_str() {
                        "ell" => ell = Some(parse_f64(e)? as u32),
                        "d" => d = parse_f64(e)? as u32,
                        "near_origin" | "near_r0" => {
                            let v = parse_numbers(e, 3)?;
                            let spec = GridSpec { start: v[0], stop: v[1], n: v[2] as usize };
                            if e.key == "near_origin" {
                                near_origin = Some(spec);
                            } else {
                                near_r0 = Some(spec);
                            }
                        }
                        other => {
                            return Err(ConfigError::Parse {
                                line: e.line,
                                message: format!("unknown profile key {other:?}"),
                            })
                        }
                    }
                }
                profile = Some(ProfileSection {
                    ell: ell.ok_or(invalid("[profile] needs ell"))?,
                    d,
                    near_origin: near_origin.ok_or(invalid("[profile] needs near_origin"))?,
                    near_r0: near_r0.ok_or(invalid("[profile] needs near_r0"))?,
                });
            }
            "degeneracy" => {
                let mut alpha = None;
                let mut beta = None;
                let mut pairs = Vec::new();
                let mut zero_energy = Vec::new();
                let mut bracket = None;
                let mut n_samples = default_samples();
                for e in &entries {
                    match e.key.as_str() {
                        "alpha" => {
                            alpha = Some(match e.value.parse::<f64>() {
                                Ok(v) => AlphaSpec::Value(v),
                                Err(_) => AlphaSpec::Law(e.value.clone()),
                            })
                        }
                        "beta" => beta = Some(parse_f64(e)?),
                        "pairs" => {
                            for part in e.value.split_whitespace() {
                                let (s1, s2) = part.split_once(")-(").ok_or(ConfigError::Parse {
                                    line: e.line,
                                    message: format!(
                                        "expected (n,ell,d)-(n,ell,d), got {part:?}"
                                    ),
                                })?;
                                pairs.push((
                                    parse_state_triple(&format!("{s1})"), e.line)?,
                                    parse_state_triple(&format!("({s2}"), e.line)?,
                                ));
                            }
                        }
                        "zero_energy" => {
                            for part in e.value.split_whitespace() {
                                zero_energy.push(parse_state_triple(part, e.line)?);
                            }
                        }
                        "bracket" => {
                            let v = parse_numbers(e, 2)?;
                            bracket = Some((v[0], v[1]));
                        }
                        "n_samples" => n_samples = parse_f64(e)? as usize,
                        other => {
                            return Err(ConfigError::Parse {
                                line: e.line,
                                message: format!("unknown degeneracy key {other:?}"),
                            })
                        }
                    }
                }
                degeneracy = Some(DegeneracySection {
                    alpha,
                    beta,
                    pairs,
                    zero_energy,
                    bracket: bracket.ok_or(invalid("[degeneracy] needs bracket"))?,
                    n_samples,
                });
            }
            other => return Err(invalid(format!("unknown section [{other}]"))),
        }
    }

    Ok(RunConfig {
        model: model.ok_or(invalid("missing [model] section"))?,
        states,
        schemes,
        solver,
        output,
        profile,
        degeneracy,
    })
}
