//! Execution of the subcommands.

use desitter_monopole::angular::{validate, Delta, QuantumNumbers};
use desitter_monopole::flat_limit::{limit_check, FlatRegime};
use desitter_monopole::horizon::{
    compose, composition_residual, decompose, decomposition_residual, fitted_horizon_exponent, wave_family,
    OriginKind, WaveDirection,
};
use desitter_monopole::jmin::{jmin_radial_params, JminPair, JminPairing, KSign};
use desitter_monopole::ode::{integrate_at, SystemSpec};
use desitter_monopole::radial::{relative_first_order_residual, Channel, FamilyKind, RadialPair, RadialParams};
use desitter_monopole::special::{kummer_u, KummerIndex};
use desitter_monopole::spinor::{assemble, assemble_jmin, dirac_residual, SpacetimePoint, SpinorSample};
use desitter_monopole::{Result as CoreResult, C64, VERSION};

use crate::args::{
    Command, GridSpec, GridVar, HorizonArgs, KindArg, LimitArgs, ModeSpec, OracleArgs, RadialArgs, SpinorArgs,
    ValidateArgs,
};
use crate::error::CliError;
use crate::output::{Cell, Report, ToleranceCheck};

/// Points used for the in-wave exponent fit at the horizon.
pub const HORIZON_FIT_Z: [f64; 3] = [1.0 - 1e-4, 1.0 - 1e-5, 1.0 - 1e-6];
/// Point at which the out-wave hypergeometric factor is compared with 1.
pub const HORIZON_PROBE_Z: f64 = 1.0 - 1e-6;
/// Interior points at which connection formulas are re-checked.
const RECONSTRUCT_Z: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

/// Radial content of a mode: the generic system or the `j_min` one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sector {
    Generic(RadialParams),
    Jmin { eps: f64, mass: f64, sign_k: KSign },
}

impl ModeSpec {
    pub fn sector(&self) -> Result<Sector, CliError> {
        match (self.nu, self.k, self.j) {
            (Some(nu), None, None) => Ok(Sector::Generic(RadialParams::new(self.eps, self.mass, nu, self.delta.0)?)),
            (None, Some(k), Some(j)) => {
                let h = validate(k.0, j.0, j.0).map_err(desitter_monopole::Error::from)?;
                if h.is_jmin() {
                    let sign_k = KSign::of(k.0).expect("nonzero k");
                    Ok(Sector::Jmin { eps: self.eps, mass: self.mass, sign_k })
                } else {
                    let nu = desitter_monopole::angular::nu(j.0, k.0);
                    Ok(Sector::Generic(RadialParams::new(self.eps, self.mass, nu, self.delta.0)?))
                }
            }
            (Some(_), _, _) => Err(CliError::Usage("give either --nu or --k with --j, not both".into())),
            _ => Err(CliError::Usage("give --nu, or both --k and --j".into())),
        }
    }
}

fn family_kind(kind: KindArg) -> Result<FamilyKind, CliError> {
    match kind {
        KindArg::Reg => Ok(FamilyKind::Regular),
        KindArg::Sing => Ok(FamilyKind::Singular),
        KindArg::In => Ok(FamilyKind::In),
        KindArg::Out => Ok(FamilyKind::Out),
        KindArg::FNonzero | KindArg::GNonzero => Err(CliError::Usage(format!(
            "kind {} exists only at j = j_min; use reg, sing, in or out",
            kind.name()
        ))),
    }
}

fn jmin_pairing(kind: KindArg) -> Result<JminPairing, CliError> {
    match kind {
        KindArg::FNonzero => Ok(JminPairing::FNonZeroGZero),
        KindArg::GNonzero => Ok(JminPairing::GNonZeroFZero),
        _ => Err(CliError::Usage(format!(
            "at j = j_min the kind must be f-nonzero or g-nonzero, not {}",
            kind.name()
        ))),
    }
}

/// A radial pair of either sector behind one interface.
enum Pair {
    Generic(RadialPair),
    Jmin(JminPair),
}

impl Pair {
    fn new(sector: Sector, kind: KindArg) -> Result<Self, CliError> {
        Ok(match sector {
            Sector::Generic(p) => Pair::Generic(RadialPair::new(family_kind(kind)?, p)?),
            Sector::Jmin { eps, mass, sign_k } => Pair::Jmin(JminPair::new(jmin_pairing(kind)?, eps, mass, sign_k)?),
        })
    }

    fn eval(&self, z: f64) -> CoreResult<(C64, C64)> {
        match self {
            Pair::Generic(p) => p.eval(z),
            Pair::Jmin(p) => p.eval(z),
        }
    }

    fn residual(&self, z: f64) -> CoreResult<[f64; 2]> {
        match self {
            Pair::Generic(p) => relative_first_order_residual(p, z),
            Pair::Jmin(p) => p.relative_residual(z),
        }
    }

    fn system(&self) -> SystemSpec {
        match self {
            Pair::Generic(p) => SystemSpec::ZForm(p.params),
            Pair::Jmin(p) => SystemSpec::JminZForm { eps: p.eps, mass: p.mass, sign_k: p.sign_k },
        }
    }
}

fn header(cmd: &Command) -> Report {
    let mut r = Report::default();
    r.meta("program", format!("ds-monopole {}", env!("CARGO_PKG_VERSION")));
    r.meta("library_version", VERSION);
    r.meta("mode", cmd.name());
    if let Ok(serde_json::Value::Object(map)) = serde_json::to_value(cmd) {
        for (k, v) in map {
            if k == "mode" || v.is_null() {
                continue;
            }
            let text = match v {
                serde_json::Value::String(s) => s,
                serde_json::Value::Array(xs) => xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                other => other.to_string(),
            };
            r.meta(&k, text);
        }
    }
    r
}

fn grid_columns(grid: &GridSpec) -> Vec<String> {
    match grid.var {
        GridVar::Z => vec!["z".into()],
        v => vec![v.name().into(), "z".into()],
    }
}

fn grid_cells(grid: &GridSpec, x: f64) -> Vec<Cell> {
    match grid.var {
        GridVar::Z => vec![x.into()],
        _ => vec![x.into(), grid.to_z(x).into()],
    }
}

fn columns(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| (*s).to_owned()).collect()
}

fn describe_sector(r: &mut Report, sector: &Sector) {
    match sector {
        Sector::Generic(p) => {
            r.meta("sector", "generic");
            r.meta_num("nu_value", p.nu);
        }
        Sector::Jmin { sign_k, .. } => {
            r.meta("sector", "j_min");
            r.meta("sign_k", if *sign_k == KSign::Positive { "+" } else { "-" });
        }
    }
}

pub fn run(cmd: &Command) -> Result<Report, CliError> {
    let mut report = header(cmd);
    match cmd {
        Command::Validate(a) => run_validate(a, &mut report)?,
        Command::Radial(a) => run_radial(a, &mut report)?,
        Command::Horizon(a) => run_horizon(a, &mut report)?,
        Command::Spinor(a) => run_spinor(a, &mut report)?,
        Command::Limit(a) => run_limit(a, &mut report)?,
        Command::Oracle(a) => run_oracle(a, &mut report)?,
    }
    Ok(report)
}

fn run_validate(a: &ValidateArgs, r: &mut Report) -> Result<(), CliError> {
    let h = validate(a.k.0, a.j.0, a.m.0).map_err(desitter_monopole::Error::from)?;
    let nu = desitter_monopole::angular::nu(h.j, h.k);
    r.meta("status", "valid");
    r.meta("class", if h.is_jmin() { "j_min" } else { "generic" });
    r.meta("j_min", h.j_min());
    r.meta_num("nu_value", nu);
    for delta in [Delta::Plus, Delta::Minus] {
        let qn = QuantumNumbers::new(0.0, 0.0, h.k, h.j, h.m, delta).expect("validated");
        let key = if delta == Delta::Plus { "lambda_delta_plus" } else { "lambda_delta_minus" };
        r.meta_num(key, qn.lambda());
    }
    r.notes.push(format!(
        "k={} j={} m={}: valid, {}",
        h.k,
        h.j,
        h.m,
        if h.is_jmin() { "j = j_min sector" } else { "generic sector (j > j_min)" }
    ));
    Ok(())
}

fn run_radial(a: &RadialArgs, r: &mut Report) -> Result<(), CliError> {
    let sector = a.spec.sector()?;
    describe_sector(r, &sector);
    let pair = Pair::new(sector, a.kind)?;
    r.columns = grid_columns(&a.grid);
    r.columns.extend(columns(&["re_F", "im_F", "re_G", "im_G", "res1", "res2"]));
    let mut worst: f64 = 0.0;
    for x in a.grid.points() {
        let z = a.grid.to_z(x);
        let (f, g) = pair.eval(z)?;
        let res = pair.residual(z)?;
        worst = worst.max(res[0]).max(res[1]);
        let mut row = grid_cells(&a.grid, x);
        row.extend([f.re, f.im, g.re, g.im, res[0], res[1]].map(Cell::from));
        r.rows.push(row);
    }
    r.check = Some(ToleranceCheck { what: "max relative residual".into(), value: worst, tol: a.tol });
    Ok(())
}

fn run_horizon(a: &HorizonArgs, r: &mut Report) -> Result<(), CliError> {
    let sector = a.spec.sector()?;
    describe_sector(r, &sector);
    let p = match sector {
        Sector::Generic(p) => p,
        Sector::Jmin { eps, mass, sign_k } => jmin_radial_params(eps, mass, sign_k)?,
    };
    r.columns = columns(&["channel", "basis", "onto", "re_c1", "im_c1", "re_c2", "im_c2", "residual"]);
    let mut worst: f64 = 0.0;
    for ch in [Channel::F, Channel::G] {
        let cname = if ch == Channel::F { "F" } else { "G" };
        for (kind, name) in [(OriginKind::Regular, "regular"), (OriginKind::Singular, "singular")] {
            let d = decompose(ch, kind, &p)?;
            let mut res: f64 = 0.0;
            for z in RECONSTRUCT_Z {
                res = res.max(decomposition_residual(&d, &p, z)?);
            }
            worst = worst.max(res);
            r.rows.push(vec![
                cname.into(),
                name.into(),
                "out/in".into(),
                d.coeff_out.re.into(),
                d.coeff_out.im.into(),
                d.coeff_in.re.into(),
                d.coeff_in.im.into(),
                res.into(),
            ]);
        }
        for (dir, name) in [(WaveDirection::Out, "out"), (WaveDirection::In, "in")] {
            let d = compose(ch, dir, &p)?;
            let mut res: f64 = 0.0;
            for z in RECONSTRUCT_Z {
                res = res.max(composition_residual(&d, &p, z)?);
            }
            worst = worst.max(res);
            r.rows.push(vec![
                cname.into(),
                name.into(),
                "regular/singular".into(),
                d.coeff_regular.re.into(),
                d.coeff_regular.im.into(),
                d.coeff_singular.re.into(),
                d.coeff_singular.im.into(),
                res.into(),
            ]);
        }
    }
    let inn = wave_family(Channel::F, WaveDirection::In, &p)?;
    r.meta_num("in_wave_F_exponent_fit", fitted_horizon_exponent(&inn, &HORIZON_FIT_Z)?);
    let (_, _, base) = p.base(Channel::F)?;
    let u2 = kummer_u(KummerIndex::U2, base, HORIZON_PROBE_Z)?;
    r.meta_num("out_wave_F_hyp_modulus_minus_one", u2.norm() - 1.0);
    r.check = Some(ToleranceCheck { what: "max reconstruction residual".into(), value: worst, tol: a.tol });
    Ok(())
}

fn run_spinor(a: &SpinorArgs, r: &mut Report) -> Result<(), CliError> {
    let qn = QuantumNumbers::new(a.eps, a.mass, a.k.0, a.j.0, a.m.0, a.delta.0).map_err(desitter_monopole::Error::from)?;
    r.meta("class", if qn.is_jmin() { "j_min" } else { "generic" });
    r.meta_num("lambda", qn.lambda());
    let pair = if qn.is_jmin() {
        let sign_k = KSign::of(qn.k).expect("nonzero k");
        Pair::Jmin(JminPair::new(jmin_pairing(a.kind)?, a.eps, a.mass, sign_k)?)
    } else {
        let p = RadialParams::new(a.eps, a.mass, qn.nu(), a.delta.0)?;
        Pair::Generic(RadialPair::new(family_kind(a.kind)?, p)?)
    };
    r.columns = grid_columns(&a.grid);
    r.columns.push("r_used".into());
    for i in 1..=4 {
        r.columns.push(format!("re_psi{i}"));
        r.columns.push(format!("im_psi{i}"));
    }
    r.columns.push("dirac_res".into());
    let mut worst: f64 = 0.0;
    for x in a.grid.points() {
        let point = SpacetimePoint::new(a.t, a.grid.to_r(x), a.theta, a.phi);
        let (s, res): (SpinorSample, _) = match &pair {
            Pair::Generic(p) => (assemble(&qn, p, point, a.full_prefactor)?, dirac_residual(&qn, p, point)),
            Pair::Jmin(p) => (assemble_jmin(&qn, p, point, a.full_prefactor)?, dirac_residual(&qn, p, point)),
        };
        if s.clamped {
            r.warnings.push(format!("r = {} clamped to {}", point.r, s.r));
        }
        let res = match res {
            Ok(v) => {
                worst = worst.max(v);
                v
            }
            Err(desitter_monopole::Error::Domain { .. }) => {
                r.warnings.push(format!("r = {}: too close to an endpoint for the residual", s.r));
                f64::NAN
            }
            Err(e) => return Err(e.into()),
        };
        let mut row = grid_cells(&a.grid, x);
        row.push(s.r.into());
        for c in s.components {
            row.push(c.re.into());
            row.push(c.im.into());
        }
        row.push(res.into());
        r.rows.push(row);
    }
    r.check = Some(ToleranceCheck { what: "max Dirac-operator residual".into(), value: worst, tol: a.tol });
    Ok(())
}

fn run_limit(a: &LimitArgs, r: &mut Report) -> Result<(), CliError> {
    let reg = FlatRegime::classify(a.energy, a.mass);
    r.meta("regime", format!("{:?}", reg.regime).to_lowercase());
    let study = limit_check(a.energy, a.mass, a.radius, &a.rho)?;
    r.meta_num("p", study.p);
    r.meta_num("order_cos", study.order_cos);
    r.meta_num("order_sin", study.order_sin);
    r.meta_num("order_cos_re", study.order_cos_re);
    r.meta_num("order_sin_re", study.order_sin_re);
    r.columns = columns(&["rho", "err_cos", "err_sin", "err_cos_re", "err_sin_re"]);
    for row in &study.rows {
        r.rows.push([row.rho, row.err_cos, row.err_sin, row.err_cos_re, row.err_sin_re].map(Cell::from).to_vec());
    }
    r.notes.push(format!(
        "fitted order in 1/rho: modulus cos {:.3} sin {:.3}, real part cos {:.3} sin {:.3}",
        study.order_cos, study.order_sin, study.order_cos_re, study.order_sin_re
    ));
    Ok(())
}

fn run_oracle(a: &OracleArgs, r: &mut Report) -> Result<(), CliError> {
    let sector = a.spec.sector()?;
    describe_sector(r, &sector);
    let pair = Pair::new(sector, a.kind)?;
    let xs = a.grid.points();
    let zs: Vec<f64> = xs.iter().map(|&x| a.grid.to_z(x)).collect();
    let (f0, g0) = pair.eval(zs[0])?;
    let traj = integrate_at(&pair.system(), &zs, [f0, g0], a.tol).map_err(CliError::Integration)?;
    r.meta("steps", traj.steps);
    r.meta("rejected", traj.rejected);
    r.columns = grid_columns(&a.grid);
    r.columns.extend(columns(&[
        "re_F_ode", "im_F_ode", "re_G_ode", "im_G_ode", "re_F", "im_F", "re_G", "im_G", "rel_err",
    ]));
    let mut worst: f64 = 0.0;
    for ((x, z), y) in xs.iter().zip(&zs).zip(&traj.values) {
        let (f, g) = pair.eval(*z)?;
        let scale = f.norm().max(g.norm());
        let err = (y[0] - f).norm().max((y[1] - g).norm()) / scale;
        worst = worst.max(err);
        let mut row = grid_cells(&a.grid, *x);
        row.extend([y[0].re, y[0].im, y[1].re, y[1].im, f.re, f.im, g.re, g.im, err].map(Cell::from));
        r.rows.push(row);
    }
    r.check = Some(ToleranceCheck { what: "max relative disagreement".into(), value: worst, tol: a.max_error });
    Ok(())
}
