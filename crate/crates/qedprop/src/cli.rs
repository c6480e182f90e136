//! Command-line front end.
//!
//! Five subcommands drive the library: `check` runs every identity suite,
//! `propagator` tabulates propagator coefficients over a `k^2` grid,
//! `potential` produces a static potential curve, `sweep` compares spectra
//! across the bare gauge parameter, and `falloff` reports large-momentum
//! exponents. Configuration is a flat `key = value` text file plus flag
//! overrides (flags win). All floating output is printed with 17 significant
//! digits, and random draws are seeded, so identical configurations produce
//! byte-identical output.
//!
//! Exit codes: 0 success, 1 identity or computation failure, 2 configuration
//! error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::checks::{run_all, CheckContext, CheckReport};
use crate::coulomb::{
    corrected_spectrum, gauge_independence_sweep, radial_fourier, GridSpacing, RadialGrid,
    StaticSource, SweepReport,
};
use crate::error::{Error, Result};
use crate::propagators::{
    bare_propagator, falloff_exponent, falloff_exponent_exact, massive_qed_integrand,
    operator_symbol, renormalized_propagator, GaugeParams, MassiveQEDParams, PropagatorModel,
    SymbolComponent,
};
use crate::renorm::{PhysicalParams, RenormConstants};
use crate::scalarfield::{
    parse_rational, rat, rational_from_f64, to_f64, Polynomial, Rational, RationalFn,
};
use crate::tensoralg::RankTwoSymbol;

/// Environment variable capping the worker-thread count used for potential
/// curves.
pub const THREADS_ENV: &str = "QEDPROP_THREADS";

#[derive(Parser)]
#[command(
    name = "qedprop",
    version,
    about = "Exact momentum-space photon propagator algebra: identity checks, \
             propagator tables, potential curves, gauge sweeps"
)]
struct Cli {
    /// Flat `key = value` configuration file; flags override its entries.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output file (stdout when omitted).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Machine-readable JSON for report commands (check, sweep, falloff).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct ModelArgs {
    /// Bare gauge parameter alpha_B (rational token, e.g. 2 or 1/2).
    #[arg(long = "alpha-b", value_name = "RAT")]
    alpha_b: Option<String>,

    /// Effective photon mass square mtilde2 (rational token).
    #[arg(long, value_name = "RAT")]
    mtilde2: Option<String>,

    /// Comma-separated rational coefficients of f's numerator (c0,c1,...).
    #[arg(long = "f-num", value_name = "LIST", allow_hyphen_values = true)]
    f_num: Option<String>,

    /// Comma-separated rational coefficients of f's denominator.
    #[arg(long = "f-den", value_name = "LIST", allow_hyphen_values = true)]
    f_den: Option<String>,
}

#[derive(Args, Default)]
struct K2GridArgs {
    #[arg(long = "k2-min", value_name = "NUM")]
    k2_min: Option<String>,
    #[arg(long = "k2-max", value_name = "NUM")]
    k2_max: Option<String>,
    #[arg(long = "k2-steps", value_name = "N")]
    k2_steps: Option<String>,
}

#[derive(Args, Default)]
struct RGridArgs {
    #[arg(long = "r-min", value_name = "NUM")]
    r_min: Option<String>,
    #[arg(long = "r-max", value_name = "NUM")]
    r_max: Option<String>,
    #[arg(long = "r-steps", value_name = "N")]
    r_steps: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every identity suite and report one pass/fail line each.
    Check(ModelArgs),

    /// Tabulate propagator coefficients over a k^2 grid as CSV
    /// (bare propagator, or the renormalized one when f is given).
    Propagator {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        grid: K2GridArgs,
    },

    /// Static potential V(r) from a momentum-space spectrum, as CSV.
    Potential {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        grid: RGridArgs,
        /// Spectrum selector: `corrected` (the dressed Coulomb source) or
        /// `yukawa` (the massive reference q/(k^2 + m^2)).
        #[arg(long, value_name = "KIND")]
        spectrum: Option<String>,
        /// Mass square of the yukawa reference spectrum.
        #[arg(long = "yukawa-m2", value_name = "RAT")]
        yukawa_m2: Option<String>,
        /// Source charge q.
        #[arg(long, value_name = "RAT", allow_hyphen_values = true)]
        q: Option<String>,
    },

    /// Sweep alpha_B at fixed (mtilde2, f); spectra must agree exactly.
    Sweep {
        #[command(flatten)]
        model: ModelArgs,
        /// Comma-separated alpha_B values, e.g. 1/2,1,2,5.
        #[arg(long, value_name = "LIST")]
        alphas: Option<String>,
    },

    /// Large-momentum falloff exponent of a symbol coefficient.
    Falloff {
        #[command(flatten)]
        model: ModelArgs,
        /// Which symbol: bare | renormalized | operator | massive.
        #[arg(long, value_name = "KIND")]
        target: Option<String>,
        /// Which coefficient: u1 | u2-times-s | transverse | longitudinal.
        #[arg(long, value_name = "COMP")]
        component: Option<String>,
        /// Proca mass square for the massive target.
        #[arg(long, value_name = "RAT")]
        m2: Option<String>,
    },
}

const KNOWN_KEYS: &[&str] = &[
    "alpha_b", "mtilde2", "f_num", "f_den", "q", "normalization", "spectrum", "yukawa_m2",
    "k2_min", "k2_max", "k2_steps", "r_min", "r_max", "r_steps", "spacing", "alphas", "z_A",
    "z_psi", "z_m", "z_e", "z_alpha", "rho", "alpha", "beta", "e", "m", "seed", "lattice_n",
    "target", "component", "m2", "out", "json",
];

/// Merged configuration: file entries overridden by flags.
struct Settings {
    map: BTreeMap<String, String>,
}

impl Settings {
    fn load(config: Option<&Path>) -> Result<Settings> {
        let mut map = BTreeMap::new();
        if let Some(path) = config {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidInput(format!("cannot read config {}: {e}", path.display()))
            })?;
            for (lineno, raw) in text.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line.split_once('=').ok_or_else(|| {
                    Error::Parse(format!(
                        "config line {} is not `key = value`: `{raw}`",
                        lineno + 1
                    ))
                })?;
                let key = key.trim().to_string();
                if !KNOWN_KEYS.contains(&key.as_str()) {
                    return Err(Error::Parse(format!(
                        "unknown config key `{key}` on line {}",
                        lineno + 1
                    )));
                }
                map.insert(key, value.trim().to_string());
            }
        }
        Ok(Settings { map })
    }

    fn override_with(&mut self, key: &str, value: Option<&String>) {
        if let Some(v) = value {
            self.map.insert(key.to_string(), v.clone());
        }
    }

    fn apply_model_flags(&mut self, model: &ModelArgs) {
        self.override_with("alpha_b", model.alpha_b.as_ref());
        self.override_with("mtilde2", model.mtilde2.as_ref());
        self.override_with("f_num", model.f_num.as_ref());
        self.override_with("f_den", model.f_den.as_ref());
    }

    fn rational(&self, key: &str, default: Rational) -> Result<Rational> {
        match self.map.get(key) {
            Some(v) => parse_rational(v).map_err(|e| Error::Parse(format!("key `{key}`: {e}"))),
            None => Ok(default),
        }
    }

    fn f64_value(&self, key: &str, default: f64) -> Result<f64> {
        match self.map.get(key) {
            Some(v) => v
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("key `{key}`: expected a number, got `{v}`"))),
            None => Ok(default),
        }
    }

    fn usize_value(&self, key: &str, default: usize) -> Result<usize> {
        match self.map.get(key) {
            Some(v) => v
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("key `{key}`: expected an integer, got `{v}`"))),
            None => Ok(default),
        }
    }

    fn u64_value(&self, key: &str, default: u64) -> Result<u64> {
        match self.map.get(key) {
            Some(v) => v
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("key `{key}`: expected an integer, got `{v}`"))),
            None => Ok(default),
        }
    }

    fn string(&self, key: &str, default: &str) -> String {
        self.map.get(key).cloned().unwrap_or_else(|| default.to_string())
    }

    fn coeff_list(&self, key: &str) -> Result<Option<Vec<Rational>>> {
        match self.map.get(key) {
            None => Ok(None),
            Some(v) => v
                .split(',')
                .map(|tok| parse_rational(tok.trim()))
                .collect::<Result<Vec<_>>>()
                .map(Some)
                .map_err(|e| Error::Parse(format!("key `{key}`: {e}"))),
        }
    }

    /// The model function f, when configured. Numerator alone defaults the
    /// denominator to 1.
    fn model_f(&self) -> Result<Option<RationalFn>> {
        let num = self.coeff_list("f_num")?;
        let den = self.coeff_list("f_den")?;
        match (num, den) {
            (None, None) => Ok(None),
            (Some(num), den) => {
                let den = den.unwrap_or_else(|| vec![Rational::new(1.into(), 1.into())]);
                RationalFn::new(Polynomial::from_coeffs(num), Polynomial::from_coeffs(den))
                    .map(Some)
            }
            (None, Some(_)) => Err(Error::Parse(
                "f_den given without f_num; supply both coefficient lists".into(),
            )),
        }
    }

    fn alphas(&self) -> Result<Vec<Rational>> {
        match self.map.get("alphas") {
            None => Ok(vec![rat(1, 2), rat(1, 1), rat(2, 1), rat(5, 1)]),
            Some(v) => v
                .split(',')
                .map(|tok| parse_rational(tok.trim()))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Parse(format!("key `alphas`: {e}"))),
        }
    }

    fn model(&self, default_f: RationalFn) -> Result<PropagatorModel> {
        let alpha_b = self.rational("alpha_b", rat(2, 1))?;
        let mtilde2 = self.rational("mtilde2", rat(1, 1))?;
        let f = self.model_f()?.unwrap_or(default_f);
        PropagatorModel::new(alpha_b, mtilde2, f)
    }

    fn renorm_constants(&self) -> Result<RenormConstants> {
        let z_a = self.rational("z_A", rat(1, 1))?;
        let z_psi = self.rational("z_psi", rat(1, 1))?;
        let z_m = self.rational("z_m", rat(1, 1))?;
        let z_e = self.rational("z_e", rat(1, 1))?;
        let z_alpha = self.rational("z_alpha", rat(1, 1))?;
        match self.map.get("rho") {
            Some(v) => {
                let rho = parse_rational(v)?;
                RenormConstants::new(z_a, z_psi, z_m, z_e, z_alpha, rho)
            }
            None => RenormConstants::with_lorenz_rho(z_a, z_psi, z_m, z_e, z_alpha),
        }
    }

    fn physical_params(&self) -> Result<PhysicalParams> {
        PhysicalParams::new(
            self.rational("e", rat(1, 1))?,
            self.rational("m", rat(1, 1))?,
            self.rational("alpha", rat(1, 1))?,
            self.rational("beta", rat(1, 1))?,
        )
    }
}

/// 17 significant digits; fixed format makes regression goldens exact.
fn fmt_g17(x: f64) -> String {
    format!("{x:.16e}")
}

fn coeff_list_id(p: &Polynomial) -> String {
    let toks: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    if toks.is_empty() {
        "0".to_string()
    } else {
        toks.join(";")
    }
}

fn write_output(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| {
            Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn default_check_f() -> RationalFn {
    // s/(s + 1): a bounded self-energy model exercising the generic paths
    RationalFn::new(
        Polynomial::from_coeffs(vec![rat(0, 1), rat(1, 1)]),
        Polynomial::from_coeffs(vec![rat(1, 1), rat(1, 1)]),
    )
    .expect("well formed")
}

fn cmd_check(settings: &Settings, out: Option<&Path>, json: bool) -> Result<i32> {
    let ctx = CheckContext {
        seed: settings.u64_value("seed", 0x0051_ECCA)?,
        renorm: settings.renorm_constants()?,
        physical: settings.physical_params()?,
        model: settings.model(default_check_f())?,
        alphas: settings.alphas()?,
        lattice_points: settings.usize_value("lattice_n", 16)?,
    };
    let report = run_all(&ctx);
    let content = if json {
        render_check_json(&report)?
    } else {
        render_check_text(&report)
    };
    write_output(out, &content)?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn render_check_text(report: &CheckReport) -> String {
    let mut out = String::new();
    for o in &report.outcomes {
        let tag = if o.passed { "[PASS]" } else { "[FAIL]" };
        let _ = writeln!(out, "{tag} {:<34} {} — {}", o.id, o.description, o.detail);
    }
    let _ = writeln!(
        out,
        "{} checks: {} passed, {} failed",
        report.outcomes.len(),
        report.passed,
        report.failed
    );
    out
}

fn render_check_json(report: &CheckReport) -> Result<String> {
    serde_json::to_string_pretty(report)
        .map(|s| s + "\n")
        .map_err(|e| Error::InvalidInput(format!("json encoding failed: {e}")))
}

fn k2_grid(settings: &Settings) -> Result<Vec<f64>> {
    let min = settings.f64_value("k2_min", 1.0)?;
    let max = settings.f64_value("k2_max", 10.0)?;
    let steps = settings.usize_value("k2_steps", 10)?;
    if steps == 0 {
        return Err(Error::InvalidInput("k2 grid is empty (k2_steps = 0)".into()));
    }
    if !(min.is_finite() && max.is_finite() && max >= min) {
        return Err(Error::InvalidInput("k2 grid needs k2_min <= k2_max".into()));
    }
    Ok((0..steps)
        .map(|i| {
            if steps == 1 {
                min
            } else {
                min + (max - min) * i as f64 / (steps - 1) as f64
            }
        })
        .collect())
}

fn cmd_propagator(settings: &Settings, out: Option<&Path>) -> Result<i32> {
    let grid = k2_grid(settings)?;
    let f = settings.model_f()?;
    let renormalized = f.is_some();
    let model = settings.model(RationalFn::var())?;
    let symbol: RankTwoSymbol = if renormalized {
        renormalized_propagator(&model)?
    } else {
        bare_propagator(&model)?
    };
    let decomp = symbol.decompose();

    let mut csv = String::from("k2,d1,d2,transverse,longitudinal\n");
    for &k2 in &grid {
        let s = rational_from_f64(k2)?;
        let d1 = symbol.u1().eval(&s)?;
        let d2 = symbol.u2().eval(&s)?;
        let tr = decomp.transverse.eval(&s)?;
        let lo = decomp.longitudinal.eval(&s)?;
        let _ = writeln!(
            csv,
            "{},{},{},{},{}",
            fmt_g17(k2),
            fmt_g17(to_f64(&d1)),
            fmt_g17(to_f64(&d2)),
            fmt_g17(to_f64(&tr)),
            fmt_g17(to_f64(&lo))
        );
    }
    write_output(out, &csv)?;
    Ok(0)
}

fn r_grid(settings: &Settings) -> Result<RadialGrid> {
    let spacing: GridSpacing = settings.string("spacing", "log").parse()?;
    RadialGrid::new(
        settings.f64_value("r_min", 0.1)?,
        settings.f64_value("r_max", 10.0)?,
        settings.usize_value("r_steps", 20)?,
        spacing,
    )
}

fn cmd_potential(settings: &Settings, out: Option<&Path>) -> Result<i32> {
    let grid = r_grid(settings)?;
    let q = settings.rational("q", rat(1, 1))?;
    let normalization = settings.rational("normalization", rat(1, 1))?;
    let source = StaticSource::new(q.clone(), normalization);
    let kind = settings.string("spectrum", "corrected");
    let (spectrum, model_id) = match kind.as_str() {
        "corrected" => {
            // without f the source is undressed: f = s gives the pure
            // Coulomb spectrum
            let model = settings.model(RationalFn::var())?;
            let spec = corrected_spectrum(&model, &source)?;
            let id = format!(
                "corrected(alpha_b={};mtilde2={};q={};f=[{}]/[{}])",
                model.alpha_b(),
                model.mtilde2(),
                q,
                coeff_list_id(model.f().num()),
                coeff_list_id(model.f().den()),
            );
            (spec, id)
        }
        "yukawa" => {
            let m2 = settings.rational("yukawa_m2", rat(1, 1))?;
            let spec = RationalFn::new(
                Polynomial::constant(q.clone()),
                Polynomial::from_coeffs(vec![m2.clone(), rat(1, 1)]),
            )?;
            (spec, format!("yukawa(m2={m2};q={q})"))
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown spectrum `{other}` (expected corrected or yukawa)"
            )));
        }
    };

    let curve = radial_fourier(&spectrum, &grid, model_id)?;
    let mut csv = String::from("r,V,model_id\n");
    for (r, v) in &curve.samples {
        let _ = writeln!(csv, "{},{},{}", fmt_g17(*r), fmt_g17(*v), curve.model_id);
    }
    write_output(out, &csv)?;
    Ok(0)
}

#[derive(Serialize)]
struct SweepJson {
    alphas: Vec<String>,
    spectra_identical: bool,
    polarizations_identical: bool,
    max_spectrum_deviation: String,
    d2: Vec<String>,
    d2_pairwise_distinct: bool,
    verdict: String,
}

fn sweep_verdict(report: &SweepReport) -> &'static str {
    if report.spectra_identical && report.polarizations_identical {
        "IDENTICAL SPECTRA"
    } else {
        "SPECTRA DIFFER"
    }
}

fn cmd_sweep(settings: &Settings, out: Option<&Path>, json: bool) -> Result<i32> {
    let mtilde2 = settings.rational("mtilde2", rat(1, 1))?;
    let f = settings.model_f()?.unwrap_or_else(RationalFn::zero);
    let alphas = settings.alphas()?;
    let report = gauge_independence_sweep(mtilde2.clone(), f.clone(), &alphas)?;
    let verdict = sweep_verdict(&report);

    let content = if json {
        let payload = SweepJson {
            alphas: report.alphas.iter().map(|a| a.to_string()).collect(),
            spectra_identical: report.spectra_identical,
            polarizations_identical: report.polarizations_identical,
            max_spectrum_deviation: report.max_spectrum_deviation.to_string(),
            d2: report.d2.iter().map(|d| d.to_string()).collect(),
            d2_pairwise_distinct: report.d2_pairwise_distinct,
            verdict: verdict.to_string(),
        };
        serde_json::to_string_pretty(&payload)
            .map(|s| s + "\n")
            .map_err(|e| Error::InvalidInput(format!("json encoding failed: {e}")))?
    } else {
        let alpha_list: Vec<String> = report.alphas.iter().map(|a| a.to_string()).collect();
        let mut text = String::new();
        let _ = writeln!(
            text,
            "gauge sweep: alpha_B in {{{}}}, mtilde2 = {}, f = {}",
            alpha_list.join(", "),
            mtilde2,
            f
        );
        let _ = writeln!(
            text,
            "polarization symbols identical: {}",
            report.polarizations_identical
        );
        let _ = writeln!(text, "corrected spectra identical: {}", report.spectra_identical);
        let _ = writeln!(
            text,
            "max spectrum deviation: {}",
            report.max_spectrum_deviation
        );
        let _ = writeln!(
            text,
            "d2 coefficients pairwise distinct: {}",
            report.d2_pairwise_distinct
        );
        for (alpha, d2) in report.alphas.iter().zip(&report.d2) {
            let _ = writeln!(text, "  alpha_B = {alpha}: d2 = {d2}");
        }
        let _ = writeln!(text, "verdict: {verdict}");
        text
    };
    write_output(out, &content)?;
    Ok(if report.spectra_identical && report.polarizations_identical { 0 } else { 1 })
}

#[derive(Serialize)]
struct FalloffJson {
    target: String,
    component: String,
    regression_exponent: f64,
    exact_exponent: i64,
}

fn cmd_falloff(
    settings: &Settings,
    out: Option<&Path>,
    json: bool,
) -> Result<i32> {
    let target = settings.string("target", "bare");
    let component: SymbolComponent = settings.string("component", "u1").parse()?;
    let symbol = match target.as_str() {
        "bare" => bare_propagator(&settings.model(RationalFn::var())?)?,
        "renormalized" => renormalized_propagator(&settings.model(default_check_f())?)?,
        "operator" => {
            let gp = GaugeParams::new(
                settings.rational("alpha", rat(1, 1))?,
                settings.rational("beta", rat(1, 1))?,
            )?;
            operator_symbol(&gp)
        }
        "massive" => {
            let mp = MassiveQEDParams::new(settings.rational("m2", rat(1, 1))?, rat(1, 1))?;
            massive_qed_integrand(&mp)
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown falloff target `{other}` (expected bare, renormalized, operator or massive)"
            )));
        }
    };
    let regression = falloff_exponent(&symbol, component)?;
    let exact = falloff_exponent_exact(&symbol, component)?;
    let content = if json {
        let payload = FalloffJson {
            target: target.clone(),
            component: component.name().to_string(),
            regression_exponent: regression,
            exact_exponent: exact,
        };
        serde_json::to_string_pretty(&payload)
            .map(|s| s + "\n")
            .map_err(|e| Error::InvalidInput(format!("json encoding failed: {e}")))?
    } else {
        format!(
            "falloff: target = {target}, component = {}\n\
             regression exponent: {regression:.2}\n\
             exact exponent: {exact}\n",
            component.name()
        )
    };
    write_output(out, &content)?;
    Ok(0)
}

fn configure_threads() {
    let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|raw| raw.parse::<usize>().ok())
        .filter(|&n| n >= 1)
    else {
        return;
    };
    // a second build_global is rejected, which is fine
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::QuadratureNotConverged { .. } => 1,
        _ => 2,
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let mut settings = Settings::load(cli.config.as_deref())?;
    let out = cli
        .out
        .clone()
        .or_else(|| settings.map.get("out").map(PathBuf::from));
    let json = cli.json
        || settings
            .map
            .get("json")
            .is_some_and(|v| v == "true" || v == "1");
    match &cli.command {
        Command::Check(model) => {
            settings.apply_model_flags(model);
            cmd_check(&settings, out.as_deref(), json)
        }
        Command::Propagator { model, grid } => {
            settings.apply_model_flags(model);
            settings.override_with("k2_min", grid.k2_min.as_ref());
            settings.override_with("k2_max", grid.k2_max.as_ref());
            settings.override_with("k2_steps", grid.k2_steps.as_ref());
            cmd_propagator(&settings, out.as_deref())
        }
        Command::Potential { model, grid, spectrum, yukawa_m2, q } => {
            settings.apply_model_flags(model);
            settings.override_with("r_min", grid.r_min.as_ref());
            settings.override_with("r_max", grid.r_max.as_ref());
            settings.override_with("r_steps", grid.r_steps.as_ref());
            settings.override_with("spectrum", spectrum.as_ref());
            settings.override_with("yukawa_m2", yukawa_m2.as_ref());
            settings.override_with("q", q.as_ref());
            cmd_potential(&settings, out.as_deref())
        }
        Command::Sweep { model, alphas } => {
            settings.apply_model_flags(model);
            settings.override_with("alphas", alphas.as_ref());
            cmd_sweep(&settings, out.as_deref(), json)
        }
        Command::Falloff { model, target, component, m2 } => {
            settings.apply_model_flags(model);
            settings.override_with("target", target.as_ref());
            settings.override_with("component", component.as_ref());
            settings.override_with("m2", m2.as_ref());
            cmd_falloff(&settings, out.as_deref(), json)
        }
    }
}

/// Entry point for the `qedprop` binary. Returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    configure_threads();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings_from(pairs: &[(&str, &str)]) -> Settings {
        let map = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        Settings { map }
    }

    #[test]
    fn config_file_parsing() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(&path, "# comment\nalpha_b = 3/2\n\nmtilde2 = 1\nf_num = 0,1\n").unwrap();
        let settings = Settings::load(Some(&path)).unwrap();
        assert_eq!(settings.rational("alpha_b", rat(1, 1)).unwrap(), rat(3, 2));
        let f = settings.model_f().unwrap().unwrap();
        assert_eq!(f, RationalFn::var());

        std::fs::write(&path, "nonsense_key = 1\n").unwrap();
        assert!(Settings::load(Some(&path)).is_err());
        std::fs::write(&path, "just a line\n").unwrap();
        assert!(Settings::load(Some(&path)).is_err());
    }

    #[test]
    fn model_f_requires_numerator() {
        let settings = settings_from(&[("f_den", "1,1")]);
        assert!(settings.model_f().is_err());
        let settings = settings_from(&[("f_num", "0,1"), ("f_den", "1,1")]);
        let f = settings.model_f().unwrap().unwrap();
        assert_eq!(f.num(), &Polynomial::from_coeffs(vec![rat(0, 1), rat(1, 1)]));
    }

    #[test]
    fn empty_k2_grid_is_a_config_error() {
        let settings = settings_from(&[("k2_steps", "0")]);
        assert!(matches!(k2_grid(&settings), Err(Error::InvalidInput(_))));
        let settings = settings_from(&[("k2_min", "1"), ("k2_max", "1"), ("k2_steps", "1")]);
        assert_eq!(k2_grid(&settings).unwrap(), vec![1.0]);
    }

    #[test]
    fn g17_formatting_is_fixed_width_science() {
        assert_eq!(fmt_g17(0.5), "5.0000000000000000e-1");
        assert_eq!(fmt_g17(1.0 / 6.0), "1.6666666666666666e-1");
    }

    #[test]
    fn default_rho_needs_square_z_alpha() {
        let settings = settings_from(&[("z_alpha", "2")]);
        assert!(settings.renorm_constants().is_err());
        let settings = settings_from(&[("z_alpha", "4")]);
        let rc = settings.renorm_constants().unwrap();
        assert_eq!(rc.rho(), &rat(1, 2));
        // explicit rho wins over the default
        let settings = settings_from(&[("z_alpha", "4"), ("rho", "1")]);
        let rc = settings.renorm_constants().unwrap();
        assert_eq!(rc.rho(), &rat(1, 1));
    }
}
