//! Command-line flags and the equivalent JSON run configuration.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use desitter_monopole::angular::{Delta, HalfInt};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "ds-monopole", version, about = "Dirac monopole modes on static de Sitter space")]
pub struct Cli {
    /// JSON file holding a full run configuration (`"mode"` plus the flag names).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Output file; standard output when absent.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// A complete run, as read from `--config`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Command {
    /// Check (k, j, m) against the quantization lattice.
    Validate(ValidateArgs),
    /// Tabulate one radial solution pair on a grid.
    Radial(RadialArgs),
    /// Connection coefficients between origin and horizon bases.
    Horizon(HorizonArgs),
    /// Sample the four-component wavefunction along a radial grid.
    Spinor(SpinorArgs),
    /// Flat-space limit convergence study.
    Limit(LimitArgs),
    /// Compare a closed-form pair with adaptive integration.
    Oracle(OracleArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Radial(_) => "radial",
            Command::Horizon(_) => "horizon",
            Command::Spinor(_) => "spinor",
            Command::Limit(_) => "limit",
            Command::Oracle(_) => "oracle",
        }
    }
}

/// Integer or half-integer given as `3`, `-3/2` or `.5` (or a JSON number).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StrOrNum", into = "String")]
pub struct Half(pub HalfInt);

#[derive(Deserialize)]
#[serde(untagged)]
enum StrOrNum {
    Str(String),
    Num(f64),
}

impl StrOrNum {
    fn into_string(self) -> String {
        match self {
            StrOrNum::Str(s) => s,
            StrOrNum::Num(x) => x.to_string(),
        }
    }
}

impl FromStr for Half {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.parse::<HalfInt>().map(Half).map_err(|e| format!("`{s}`: {e}"))
    }
}

impl TryFrom<StrOrNum> for Half {
    type Error = String;

    fn try_from(v: StrOrNum) -> Result<Self, String> {
        v.into_string().parse()
    }
}

impl From<Half> for String {
    fn from(h: Half) -> String {
        h.0.to_string()
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `delta = +1` or `-1`; accepts `1`, `+1`, `-1`, `+`, `-`, `plus`, `minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StrOrNum", into = "String")]
pub struct DeltaArg(pub Delta);

impl Default for DeltaArg {
    fn default() -> Self {
        DeltaArg(Delta::Plus)
    }
}

impl FromStr for DeltaArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "1" | "+1" | "+" | "plus" | "1.0" | "+1.0" => Ok(DeltaArg(Delta::Plus)),
            "-1" | "-" | "minus" | "-1.0" => Ok(DeltaArg(Delta::Minus)),
            other => Err(format!("delta must be +1 or -1, got `{other}`")),
        }
    }
}

impl TryFrom<StrOrNum> for DeltaArg {
    type Error = String;

    fn try_from(v: StrOrNum) -> Result<Self, String> {
        v.into_string().parse()
    }
}

impl From<DeltaArg> for String {
    fn from(d: DeltaArg) -> String {
        match d.0 {
            Delta::Plus => "+1".into(),
            Delta::Minus => "-1".into(),
        }
    }
}

impl fmt::Display for DeltaArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from(*self))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridVar {
    R,
    Z,
    Rho,
}

impl GridVar {
    pub fn name(self) -> &'static str {
        match self {
            GridVar::R => "r",
            GridVar::Z => "z",
            GridVar::Rho => "rho",
        }
    }
}

/// `var:start:end:count`, e.g. `z:0.05:0.9:50`, equally spaced and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct GridSpec {
    pub var: GridVar,
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    self.end
                } else {
                    self.start + (self.end - self.start) * i as f64 / (n - 1) as f64
                }
            })
            .collect()
    }

    /// Upper end of the open domain of the grid variable.
    pub fn upper(&self) -> f64 {
        match self.var {
            GridVar::R | GridVar::Z => 1.0,
            GridVar::Rho => std::f64::consts::FRAC_PI_2,
        }
    }

    /// `z = r^2 = sin^2 rho` at a grid value.
    pub fn to_z(&self, x: f64) -> f64 {
        match self.var {
            GridVar::Z => x,
            GridVar::R => x * x,
            GridVar::Rho => x.sin().powi(2),
        }
    }

    /// `r` at a grid value.
    pub fn to_r(&self, x: f64) -> f64 {
        match self.var {
            GridVar::Z => x.sqrt(),
            GridVar::R => x,
            GridVar::Rho => x.sin(),
        }
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [var, start, end, count] = parts.as_slice() else {
            return Err(format!("grid `{s}`: expected var:start:end:count"));
        };
        let var = GridVar::from_str(var, true).map_err(|_| format!("grid `{s}`: variable must be r, z or rho"))?;
        let num = |x: &str| x.trim().parse::<f64>().map_err(|_| format!("grid `{s}`: `{x}` is not a number"));
        let count = count
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("grid `{s}`: count must be a positive integer"))?;
        let g = GridSpec { var, start: num(start)?, end: num(end)?, count };
        if g.count < 2 {
            return Err(format!("grid `{s}`: count must be at least 2"));
        }
        if !(g.start > 0.0 && g.end < g.upper() && g.start < g.end) {
            return Err(format!(
                "grid `{s}`: need 0 < start < end < {} for {}",
                g.upper(),
                g.var.name()
            ));
        }
        Ok(g)
    }
}

impl TryFrom<String> for GridSpec {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<GridSpec> for String {
    fn from(g: GridSpec) -> String {
        format!("{}:{}:{}:{}", g.var.name(), g.start, g.end, g.count)
    }
}

/// Radial solution families. The last two exist only at `j = j_min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KindArg {
    #[value(alias = "regular")]
    #[serde(alias = "regular")]
    Reg,
    #[value(alias = "singular")]
    #[serde(alias = "singular")]
    Sing,
    In,
    Out,
    /// `F` non-vanishing at the origin, paired with the vanishing `G`.
    FNonzero,
    /// `G` non-vanishing at the origin, paired with the vanishing `F`.
    GNonzero,
}

impl KindArg {
    pub fn name(self) -> &'static str {
        match self {
            KindArg::Reg => "reg",
            KindArg::Sing => "sing",
            KindArg::In => "in",
            KindArg::Out => "out",
            KindArg::FNonzero => "f-nonzero",
            KindArg::GNonzero => "g-nonzero",
        }
    }
}

fn default_delta() -> DeltaArg {
    DeltaArg::default()
}

fn default_kind() -> KindArg {
    KindArg::Reg
}

/// Energy, mass and either `nu` directly or the harmonic `(k, j)`.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ModeSpec {
    /// Energy in units of the inverse curvature radius.
    #[arg(long, allow_hyphen_values = true)]
    pub eps: f64,

    /// Mass in units of the inverse curvature radius.
    #[arg(long, allow_hyphen_values = true)]
    pub mass: f64,

    /// Angular coupling; give this or `--k`/`--j`.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub nu: Option<f64>,

    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub k: Option<Half>,

    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub j: Option<Half>,

    #[arg(long, allow_hyphen_values = true, default_value = "+1")]
    #[serde(default = "default_delta")]
    pub delta: DeltaArg,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ValidateArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k: Half,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Half,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Half,
}

fn default_radial_grid() -> GridSpec {
    "z:0.05:0.9:50".parse().expect("valid default grid")
}

fn default_radial_tol() -> f64 {
    1e-8
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct RadialArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub spec: ModeSpec,

    #[arg(long, value_enum, default_value = "reg")]
    #[serde(default = "default_kind")]
    pub kind: KindArg,

    #[arg(long, default_value = "z:0.05:0.9:50")]
    #[serde(default = "default_radial_grid")]
    pub grid: GridSpec,

    /// Largest acceptable relative residual.
    #[arg(long, default_value_t = 1e-8)]
    #[serde(default = "default_radial_tol")]
    pub tol: f64,
}

fn default_horizon_tol() -> f64 {
    1e-9
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct HorizonArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub spec: ModeSpec,

    /// Largest acceptable reconstruction residual.
    #[arg(long, default_value_t = 1e-9)]
    #[serde(default = "default_horizon_tol")]
    pub tol: f64,
}

fn default_spinor_grid() -> GridSpec {
    "r:0.1:0.9:9".parse().expect("valid default grid")
}

fn default_spinor_tol() -> f64 {
    1e-5
}

fn default_theta() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SpinorArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub eps: f64,

    #[arg(long, allow_hyphen_values = true)]
    pub mass: f64,

    #[arg(long, allow_hyphen_values = true)]
    pub k: Half,

    #[arg(long, allow_hyphen_values = true)]
    pub j: Half,

    #[arg(long, allow_hyphen_values = true)]
    pub m: Half,

    #[arg(long, allow_hyphen_values = true, default_value = "+1")]
    #[serde(default = "default_delta")]
    pub delta: DeltaArg,

    #[arg(long, value_enum, default_value = "reg")]
    #[serde(default = "default_kind")]
    pub kind: KindArg,

    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    #[serde(default)]
    pub t: f64,

    #[arg(long, default_value_t = 1.0)]
    #[serde(default = "default_theta")]
    pub theta: f64,

    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    #[serde(default)]
    pub phi: f64,

    #[arg(long, default_value = "r:0.1:0.9:9")]
    #[serde(default = "default_spinor_grid")]
    pub grid: GridSpec,

    /// Include the `r^{-1} (1 - r^2)^{-1/4}` factor of the full wavefunction.
    #[arg(long)]
    #[serde(default)]
    pub full_prefactor: bool,

    /// Largest acceptable Dirac-operator residual.
    #[arg(long, default_value_t = 1e-5)]
    #[serde(default = "default_spinor_tol")]
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct LimitArgs {
    /// Particle energy.
    #[arg(long = "E")]
    #[serde(rename = "E")]
    pub energy: f64,

    /// Particle mass.
    #[arg(long = "m")]
    #[serde(rename = "m")]
    pub mass: f64,

    /// Observation radius.
    #[arg(long = "R")]
    #[serde(rename = "R")]
    pub radius: f64,

    /// Curvature radii, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub rho: Vec<f64>,
}

fn default_oracle_grid() -> GridSpec {
    "z:0.05:0.9:18".parse().expect("valid default grid")
}

fn default_oracle_tol() -> f64 {
    1e-12
}

fn default_oracle_max() -> f64 {
    1e-6
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct OracleArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub spec: ModeSpec,

    #[arg(long, value_enum, default_value = "reg")]
    #[serde(default = "default_kind")]
    pub kind: KindArg,

    #[arg(long, default_value = "z:0.05:0.9:18")]
    #[serde(default = "default_oracle_grid")]
    pub grid: GridSpec,

    /// Integrator tolerance.
    #[arg(long, default_value_t = 1e-12)]
    #[serde(default = "default_oracle_tol")]
    pub tol: f64,

    /// Largest acceptable relative disagreement.
    #[arg(long, default_value_t = 1e-6)]
    #[serde(default = "default_oracle_max")]
    pub max_error: f64,
}
