//! Command-line front end behind the `vbs` binary.
//!
//! Output is CSV (default) or one JSON document per run with `request`,
//! `results`, `tolerances` and `versions`. Exit codes: 0 success, 1 failed
//! verification or numerical error, 2 invalid arguments.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::closed_forms::{self, z_of};
use crate::effective_rho::{self, EffectiveDensityOperator};
use crate::error::{Error, Result};
use crate::linalg::{SpectrumReport, CLAMP_TOL, HERMITICITY_TOL};
use crate::sphere_mc;
use crate::verify::{self, VerifyConfig};

/// Display grouping of degenerate eigenvalues.
pub const GROUP_TOL: f64 = 1e-9;
pub const SIGNIFICANT_DIGITS: usize = 12;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug, Clone, Serialize)]
#[command(name = "vbs", version, about = "Entanglement of the spin-1 valence-bond-solid chain")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Which spectrum replaces the measures table in CSV output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Rho,
    Pt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum McKind {
    /// VBS norm of an open chain of `--length` sites.
    Norm,
    /// All 16 block overlaps for a block of `--length` sites.
    Overlap,
    /// Singlet overlap against both sign readings of the channel weights.
    Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    Pure,
    Disjoint,
    Adjacent,
    Pbc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepParam {
    Length,
    La,
    Lb,
    Gap,
    Lc,
    Ld,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// One block of `--length` sites against the rest of an infinite chain.
    Pure {
        #[arg(long)]
        length: u32,
        #[arg(long, value_enum)]
        spectrum: Option<SpectrumKind>,
    },
    /// Cut across a single valence bond.
    Bipartition0 {
        #[arg(long, value_enum)]
        spectrum: Option<SpectrumKind>,
    },
    /// Two blocks separated by `--gap` sites of an open chain.
    Disjoint {
        #[arg(long, default_value_t = 1)]
        la: u32,
        #[arg(long, default_value_t = 1)]
        gap: u32,
        #[arg(long, default_value_t = 1)]
        lb: u32,
        #[arg(long, value_enum)]
        spectrum: Option<SpectrumKind>,
    },
    /// Two neighbouring blocks.
    Adjacent {
        #[arg(long, default_value_t = 1)]
        la: u32,
        #[arg(long, default_value_t = 1)]
        lb: u32,
        #[arg(long, value_enum)]
        spectrum: Option<SpectrumKind>,
    },
    /// Two blocks on a ring A, D, B, C. `--ring N` fixes `L_D = N - L_A - L_B - L_C`.
    Pbc {
        #[arg(long, default_value_t = 1)]
        la: u32,
        #[arg(long, default_value_t = 1)]
        lb: u32,
        #[arg(long, default_value_t = 1)]
        lc: u32,
        #[arg(long, conflicts_with = "ring")]
        ld: Option<u32>,
        #[arg(long)]
        ring: Option<u32>,
        #[arg(long, value_enum)]
        spectrum: Option<SpectrumKind>,
    },
    /// Finite-block mutual information next to its semi-infinite limit.
    MutualInfo {
        #[arg(long, default_value_t = 6)]
        la: u32,
        #[arg(long, default_value_t = 6)]
        lb: u32,
        #[arg(long, default_value_t = 1)]
        gap: u32,
    },
    /// Monte Carlo over the sphere representation.
    Mc {
        #[arg(long, value_enum, default_value_t = McKind::Overlap)]
        kind: McKind,
        #[arg(long, default_value_t = 1)]
        length: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Every formula-versus-oracle suite.
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(5..=9))]
        max_sites: u64,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = VerifyConfig::default().samples)]
        samples: usize,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
    /// One measures row per value of `--over` from `--from` to `--to`.
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepKind,
        #[arg(long, value_enum)]
        over: SweepParam,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[command(flatten)]
        base: SweepBase,
    },
}

/// Fixed geometry parameters of a sweep.
#[derive(Args, Debug, Clone, Copy, Serialize)]
pub struct SweepBase {
    #[arg(long, default_value_t = 1)]
    pub length: u32,
    #[arg(long, default_value_t = 1)]
    pub la: u32,
    #[arg(long, default_value_t = 1)]
    pub lb: u32,
    #[arg(long, default_value_t = 1)]
    pub gap: u32,
    #[arg(long, default_value_t = 1)]
    pub lc: u32,
    #[arg(long, default_value_t = 1)]
    pub ld: u32,
}

/// Row of the measures table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasureRow {
    pub geometry: String,
    pub negativity: f64,
    pub log_negativity: f64,
    pub entropy: f64,
    pub purity: f64,
    pub mutual_information: f64,
}

/// Row of a spectrum table; degenerate eigenvalues share a row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub geometry: String,
    pub index: usize,
    pub eigenvalue: f64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MutualInfoRow {
    pub geometry: String,
    pub mutual_information: f64,
    pub asymptotic: f64,
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McRow {
    pub kind: String,
    pub mu: Option<usize>,
    pub nu: Option<usize>,
    pub length: usize,
    pub mean_re: f64,
    pub mean_im: f64,
    pub standard_error: f64,
    pub target: f64,
    pub z_score: f64,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRow {
    pub suite: u8,
    pub title: String,
    pub check: String,
    pub status: String,
    pub observed: f64,
    pub expected: f64,
    pub tol: f64,
}

/// Rounds to [`SIGNIFICANT_DIGITS`] and flushes values below the clamp to zero.
pub fn display_value(x: f64) -> f64 {
    if x.abs() < CLAMP_TOL {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .unwrap_or(x)
}

pub fn spectrum_rows(geometry: &str, report: &SpectrumReport) -> Vec<SpectrumRow> {
    report
        .grouped(GROUP_TOL)
        .into_iter()
        .enumerate()
        .map(|(index, (eigenvalue, multiplicity))| SpectrumRow {
            geometry: geometry.to_string(),
            index,
            eigenvalue: display_value(eigenvalue),
            multiplicity,
        })
        .collect()
}

/// Measures, both spectra and geometry-specific extras of one evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct GeometryResult {
    pub measures: MeasureRow,
    pub spectrum: Vec<SpectrumRow>,
    pub pt_spectrum: Vec<SpectrumRow>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

fn measure_row(
    geometry: &str,
    rho: &SpectrumReport,
    pt: &SpectrumReport,
    entropy: f64,
    mutual_information: f64,
) -> MeasureRow {
    MeasureRow {
        geometry: geometry.to_string(),
        negativity: display_value(pt.negativity),
        log_negativity: display_value(pt.log_negativity),
        entropy: display_value(entropy),
        purity: display_value(rho.purity),
        mutual_information: display_value(mutual_information),
    }
}

fn geometry_result(geometry: &str, rho: &SpectrumReport, pt: &SpectrumReport, entropy: f64, mi: f64) -> GeometryResult {
    GeometryResult {
        measures: measure_row(geometry, rho, pt, entropy, mi),
        spectrum: spectrum_rows(geometry, rho),
        pt_spectrum: spectrum_rows(geometry, pt),
        extra: Map::new(),
    }
}

/// Block of `length` sites against the rest; `entropy` is the block entropy
/// and the mutual information is twice that.
pub fn eval_pure(length: u32) -> Result<GeometryResult> {
    let label = format!("pure:{length}");
    let rho = closed_forms::pure_block_spectrum(length)?;
    let pt = closed_forms::pure_pt_spectrum(length)?;
    let mut r = geometry_result(&label, &rho, &pt, rho.entropy, 2.0 * rho.entropy);
    let (xi1, xi2) = closed_forms::pure_entanglement_spectrum(length)?;
    r.extra.insert("entanglement_spectrum".into(), json!([display_value(xi1), display_value(xi2)]));
    Ok(r)
}

pub fn eval_bipartition0() -> GeometryResult {
    let rho = SpectrumReport::from_eigenvalues(vec![0.5, 0.5]);
    let pt = closed_forms::bipartition_l0_pt_spectrum();
    geometry_result("bond", &rho, &pt, rho.entropy, 2.0 * rho.entropy)
}

fn eval_two_block(op: &EffectiveDensityOperator) -> Result<GeometryResult> {
    let m = effective_rho::measures(op)?;
    let label = op.geometry.label();
    let mut r = geometry_result(&label, &m.rho, &m.partial_transpose, m.rho.entropy, m.mutual_information);
    r.extra.insert("entropy_a".into(), json!(display_value(m.entropy_a)));
    r.extra.insert("entropy_b".into(), json!(display_value(m.entropy_b)));
    Ok(r)
}

pub fn eval_disjoint(la: u32, gap: u32, lb: u32) -> Result<GeometryResult> {
    let mut r = eval_two_block(&effective_rho::rho_ab_open(la, gap, lb)?)?;
    let roots: Vec<Value> = closed_forms::disjoint_char_polys(la, gap, lb)?
        .roots()?
        .iter()
        .map(|&(root, mult)| json!({"root": display_value(root), "multiplicity": mult}))
        .collect();
    r.extra.insert("characteristic_roots".into(), Value::Array(roots));
    Ok(r)
}

pub fn eval_adjacent(la: u32, lb: u32) -> Result<GeometryResult> {
    let mut r = eval_two_block(&effective_rho::rho_ab_adjacent(la, lb)?)?;
    let n = closed_forms::adjacent_pt_negativity(la, lb)?;
    r.extra.insert(
        "negative_eigenvalues".into(),
        json!({"y1": display_value(n.y1), "y2": display_value(n.y2), "y2_multiplicity": 3}),
    );
    r.extra.insert(
        "asymptotic_negativity".into(),
        json!(display_value(closed_forms::adjacent_negativity_asymptotic(la, lb))),
    );
    Ok(r)
}

pub fn eval_pbc(la: u32, lb: u32, lc: u32, ld: u32) -> Result<GeometryResult> {
    eval_two_block(&effective_rho::rho_ab_pbc(la, lb, lc, ld)?)
}

pub fn eval_mutual_info(la: u32, lb: u32, gap: u32) -> Result<MutualInfoRow> {
    let op = effective_rho::rho_ab_open(la, gap, lb)?;
    let finite = effective_rho::measures(&op)?.mutual_information;
    let asymptotic = closed_forms::mutual_information(z_of(gap));
    Ok(MutualInfoRow {
        geometry: op.geometry.label(),
        mutual_information: display_value(finite),
        asymptotic: display_value(asymptotic),
        gap: display_value(finite - asymptotic),
    })
}

fn mc_row(kind: &str, mu: Option<usize>, nu: Option<usize>, length: usize, e: &sphere_mc::McEstimate, target: f64) -> McRow {
    McRow {
        kind: kind.to_string(),
        mu,
        nu,
        length,
        mean_re: display_value(e.mean.re),
        mean_im: display_value(e.mean.im),
        standard_error: display_value(e.standard_error),
        target: display_value(target),
        z_score: display_value(e.z_score(Complex64::new(target, 0.0))),
        samples: e.samples,
        seed: e.seed,
    }
}

pub fn eval_mc(kind: McKind, length: usize, samples: usize, seed: u64) -> Result<Vec<McRow>> {
    match kind {
        McKind::Norm => {
            let e = sphere_mc::estimate_vbs_norm(length, samples, seed)?;
            Ok(vec![mc_row("norm", None, None, length, &e, 1.0)])
        }
        McKind::Overlap => {
            let l = length_u32(length)?;
            (0..16)
                .map(|k| {
                    let (mu, nu) = (k / 4, k % 4);
                    let e = sphere_mc::estimate_block_overlap(mu, nu, length, samples, seed)?;
                    let target = sphere_mc::overlap_target(mu, nu, l, 1.0);
                    Ok(mc_row("overlap", Some(mu), Some(nu), length, &e, target))
                })
                .collect()
        }
        McKind::Sign => {
            let l = length_u32(length)?;
            let e = sphere_mc::estimate_block_overlap(2, 2, length, samples, seed)?;
            Ok(vec![
                mc_row("sign-plus", Some(2), Some(2), length, &e, sphere_mc::overlap_target(2, 2, l, 1.0)),
                mc_row("sign-minus", Some(2), Some(2), length, &e, sphere_mc::overlap_target(2, 2, l, -1.0)),
            ])
        }
    }
}

fn length_u32(length: usize) -> Result<u32> {
    u32::try_from(length).map_err(|_| Error::InvalidArgument(format!("length {length} too large")))
}

fn ring_ld(la: u32, lb: u32, lc: u32, ld: Option<u32>, ring: Option<u32>) -> Result<u32> {
    match (ld, ring) {
        (Some(ld), _) => Ok(ld),
        (None, Some(n)) => n.checked_sub(la + lb + lc).ok_or_else(|| {
            Error::InvalidGeometry(format!("ring of {n} sites is shorter than L_A + L_B + L_C"))
        }),
        (None, None) => Ok(1),
    }
}

/// One sweep point: the measures row with `over` set to `value`.
pub fn eval_sweep_point(kind: SweepKind, over: SweepParam, value: u32, base: SweepBase) -> Result<MeasureRow> {
    let mut p = base;
    match over {
        SweepParam::Length => p.length = value,
        SweepParam::La => p.la = value,
        SweepParam::Lb => p.lb = value,
        SweepParam::Gap => p.gap = value,
        SweepParam::Lc => p.lc = value,
        SweepParam::Ld => p.ld = value,
    }
    let r = match kind {
        SweepKind::Pure => eval_pure(p.length)?,
        SweepKind::Disjoint => eval_disjoint(p.la, p.gap, p.lb)?,
        SweepKind::Adjacent => eval_adjacent(p.la, p.lb)?,
        SweepKind::Pbc => eval_pbc(p.la, p.lb, p.lc, p.ld)?,
    };
    Ok(r.measures)
}

fn sweep_applies(kind: SweepKind, over: SweepParam) -> bool {
    use SweepParam::*;
    match kind {
        SweepKind::Pure => over == Length,
        SweepKind::Disjoint => matches!(over, La | Lb | Gap),
        SweepKind::Adjacent => matches!(over, La | Lb),
        SweepKind::Pbc => matches!(over, La | Lb | Lc | Ld),
    }
}

fn tolerances(verify_cfg: Option<&VerifyConfig>) -> Value {
    let mut t = json!({
        "display_grouping": GROUP_TOL,
        "eigenvalue_clamp": CLAMP_TOL,
        "hermiticity": HERMITICITY_TOL,
        "significant_digits": SIGNIFICANT_DIGITS,
    });
    if let Some(cfg) = verify_cfg {
        let pinned = |v: f64| cfg.tol.unwrap_or(v);
        t["verify"] = json!({
            "override": cfg.tol,
            "exact": pinned(verify::TOL_EXACT),
            "oracle": pinned(verify::TOL_ORACLE),
            "psd": pinned(verify::TOL_PSD),
            "mc_sigmas": verify::MC_SIGMAS,
        });
    }
    t
}

fn versions() -> Value {
    json!({ "vbs-entanglement": env!("CARGO_PKG_VERSION"), "schema": 1 })
}

fn write_csv<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()
}

fn write_json(out: &mut dyn Write, cli: &Cli, results: Value, verify_cfg: Option<&VerifyConfig>) -> std::io::Result<()> {
    let doc = json!({
        "request": cli,
        "results": results,
        "tolerances": tolerances(verify_cfg),
        "versions": versions(),
    });
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)
}

fn emit_geometry(out: &mut dyn Write, cli: &Cli, r: &GeometryResult, spectrum: Option<SpectrumKind>) -> std::io::Result<()> {
    match cli.format {
        Format::Json => write_json(out, cli, json!(r), None),
        Format::Csv => match spectrum {
            None => write_csv(out, std::slice::from_ref(&r.measures)),
            Some(SpectrumKind::Rho) => write_csv(out, &r.spectrum),
            Some(SpectrumKind::Pt) => write_csv(out, &r.pt_spectrum),
        },
    }
}

fn emit_rows<T: Serialize>(out: &mut dyn Write, cli: &Cli, rows: &[T]) -> std::io::Result<()> {
    match cli.format {
        Format::Json => write_json(out, cli, json!(rows), None),
        Format::Csv => write_csv(out, rows),
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Numeric(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGeometry(_)
            | Error::InvalidArgument(_)
            | Error::InvalidSite { .. }
            | Error::DuplicateSite(_)
            | Error::StateTooLarge { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Numeric(format!("output: {e}"))
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<(), Failure> {
    match cli.command {
        Command::Pure { length, spectrum } => emit_geometry(out, cli, &eval_pure(length)?, spectrum)?,
        Command::Bipartition0 { spectrum } => emit_geometry(out, cli, &eval_bipartition0(), spectrum)?,
        Command::Disjoint { la, gap, lb, spectrum } => {
            emit_geometry(out, cli, &eval_disjoint(la, gap, lb)?, spectrum)?
        }
        Command::Adjacent { la, lb, spectrum } => emit_geometry(out, cli, &eval_adjacent(la, lb)?, spectrum)?,
        Command::Pbc { la, lb, lc, ld, ring, spectrum } => {
            let ld = ring_ld(la, lb, lc, ld, ring)?;
            emit_geometry(out, cli, &eval_pbc(la, lb, lc, ld)?, spectrum)?
        }
        Command::MutualInfo { la, lb, gap } => emit_rows(out, cli, &[eval_mutual_info(la, lb, gap)?])?,
        Command::Mc { kind, length, samples, seed } => emit_rows(out, cli, &eval_mc(kind, length, samples, seed)?)?,
        Command::Verify { max_sites, tol, samples, seed } => {
            if tol.is_some_and(|t| !(t > 0.0 && t.is_finite())) {
                return Err(Failure::Usage("--tol must be positive and finite".into()));
            }
            let cfg = VerifyConfig { max_sites: max_sites as usize, tol, samples, seed };
            let suites = verify::run_all(&cfg);
            match cli.format {
                Format::Json => write_json(out, cli, json!(suites), Some(&cfg))?,
                Format::Csv => {
                    let rows: Vec<CheckRow> = suites
                        .iter()
                        .flat_map(|s| {
                            s.checks.iter().map(|c| CheckRow {
                                suite: s.id,
                                title: s.title.clone(),
                                check: c.name.clone(),
                                status: c.status().to_string(),
                                observed: c.observed,
                                expected: c.expected,
                                tol: c.tol,
                            })
                        })
                        .collect();
                    write_csv(out, &rows)?;
                }
            }
            let mut failed = false;
            for s in &suites {
                for c in s.checks.iter().filter(|c| !c.passed && !c.known_failure) {
                    failed = true;
                    writeln!(
                        err,
                        "suite {} ({}): {} failed: observed {:e}, expected {:e}, tol {:e}",
                        s.id, s.title, c.name, c.observed, c.expected, c.tol
                    )?;
                }
            }
            let passed = suites.iter().filter(|s| s.passed()).count();
            writeln!(err, "{passed}/{} suites passed", suites.len())?;
            if failed {
                return Err(Failure::Verification);
            }
        }
        Command::Sweep { kind, over, from, to, base } => {
            if !sweep_applies(kind, over) {
                return Err(Failure::Usage(format!(
                    "--over {} does not apply to --kind {}",
                    over.to_possible_value().map_or_else(String::new, |v| v.get_name().to_string()),
                    kind.to_possible_value().map_or_else(String::new, |v| v.get_name().to_string()),
                )));
            }
            if from > to {
                return Err(Failure::Usage(format!("--from {from} exceeds --to {to}")));
            }
            let rows: Vec<MeasureRow> = (from..=to)
                .into_par_iter()
                .map(|v| eval_sweep_point(kind, over, v, base))
                .collect::<Result<_>>()?;
            emit_rows(out, cli, &rows)?;
        }
    }
    Ok(())
}

/// Runs a parsed command and returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match dispatch(cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAILURE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numeric(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_from(std::iter::once("vbs").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn display_rounds_to_twelve_digits() {
        assert_eq!(display_value(4.0 / 27.0), 0.148148148148);
        assert_eq!(display_value(3e-17), 0.0);
        assert_eq!(display_value(-0.5), -0.5);
    }

    #[test]
    fn pure_length_one() {
        let (code, out, _) = call(&["pure", "--length", "1"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("geometry,negativity,log_negativity,entropy,purity,mutual_information"));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "pure:1");
        assert_eq!(row[1].parse::<f64>().unwrap(), 1.0);
    }

    #[test]
    fn disjoint_json_spectrum() {
        let (code, out, _) = call(&["disjoint", "--la", "1", "--gap", "1", "--lb", "1", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        for key in ["request", "results", "tolerances", "versions"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        let spectrum: Vec<(f64, u64)> = v["results"]["spectrum"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| (r["eigenvalue"].as_f64().unwrap(), r["multiplicity"].as_u64().unwrap()))
            .collect();
        assert_eq!(
            spectrum,
            vec![(0.0, 7), (0.037037037037, 1), (0.0740740740741, 3), (0.148148148148, 5)]
        );
        assert_eq!(v["results"]["measures"]["negativity"], json!(0.0));
    }

    #[test]
    fn spectrum_table_header() {
        let (_, out, _) = call(&["adjacent", "--spectrum", "pt"]);
        assert!(out.starts_with("geometry,index,eigenvalue,multiplicity\n"));
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(call(&["disjoint", "--gap", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["pure", "--length", "1", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["pure", "--length", "1", "--la", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["pbc", "--ld", "1", "--ring", "5"]).0, EXIT_USAGE);
        assert_eq!(call(&["pbc", "--ring", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["sweep", "--kind", "pure", "--over", "gap", "--from", "1", "--to", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["mc", "--samples", "10"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--max-sites", "12"]).0, EXIT_USAGE);
    }

    #[test]
    fn ring_flag_sets_last_gap() {
        let (_, a, _) = call(&["pbc", "--la", "2", "--lb", "1", "--lc", "1", "--ring", "6"]);
        let (_, b, _) = call(&["pbc", "--la", "2", "--lb", "1", "--lc", "1", "--ld", "2"]);
        assert_eq!(a, b);
        assert!(a.contains("ring:2-2-1-1"));
    }

    #[test]
    fn sweep_rows_in_order() {
        let (code, out, _) = call(&["sweep", "--kind", "disjoint", "--over", "gap", "--from", "1", "--to", "4"]);
        assert_eq!(code, 0);
        let geoms: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
        assert_eq!(geoms, ["open:1-1-1", "open:1-2-1", "open:1-3-1", "open:1-4-1"]);
    }

    #[test]
    fn mutual_info_row() {
        let (_, out, _) = call(&["mutual-info", "--gap", "1"]);
        let row = out.lines().nth(1).unwrap();
        let fields: Vec<f64> = row.split(',').skip(1).map(|f| f.parse().unwrap()).collect();
        assert!((fields[1] - (4f64 / 3.0).ln()).abs() < 1e-11);
        assert!(fields[2].abs() < 0.01);
    }

    #[test]
    fn mc_is_reproducible() {
        let args = ["mc", "--kind", "sign", "--samples", "2000", "--seed", "3"];
        let (code, a, _) = call(&args);
        assert_eq!(code, 0);
        assert_eq!(a, call(&args).1);
        assert_eq!(a.lines().count(), 3);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("bipartition0") && out.contains("mutual-info"));
    }
}
