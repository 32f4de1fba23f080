//! Formula-versus-oracle verification suites.
//!
//! Each suite compares closed forms against the exact state, the mode-space
//! operators or the Monte Carlo estimator and reports one [`Check`] per
//! comparison. Tolerances are pinned per check; [`VerifyConfig::tol`]
//! overrides all of them at once.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{self, z_of};
use crate::effective_rho::{self, ConvexityWeights};
use crate::error::Result;
use crate::linalg::{spectrum_distance, SpectrumReport};
use crate::mps_oracle::{self, Boundary, StateVector};
use crate::pauli_algebra::{self, SigmaBasis};
use crate::sphere_mc;

/// Exact identities and closed-form self-consistency.
pub const TOL_EXACT: f64 = 1e-12;
/// Agreement between closed forms and exact diagonalization.
pub const TOL_ORACLE: f64 = 1e-10;
/// Lower bound on partial-transpose eigenvalues that counts as non-negative.
pub const TOL_PSD: f64 = 1e-12;
/// Eigenvalue grouping when counting multiplicities.
pub const TOL_GROUP: f64 = 1e-9;
/// Monte Carlo acceptance in standard errors.
pub const MC_SIGMAS: f64 = 4.0;
pub const MI_GAP_L1: f64 = 0.01;
pub const MI_GAP_L2: f64 = 0.002;
/// Adjacent-block decay over `l = 2..5`: log-linear slope against `-ln 9`, and
/// the `x^2` coefficient of `1/2 - N = a x^2 + b x^3` against 3/2.
pub const FIT_SLOPE_TOL: f64 = 0.05;
pub const FIT_QUADRATIC_TOL: f64 = 0.01;
/// Bounds on `|purity - 1/16| / (x1^2 + x2^2 + z^2)` for equal lengths.
pub const PURITY_RATIO_RANGE: (f64, f64) = (0.1, 2.0);
/// Largest spread max/min of that ratio across lengths.
pub const PURITY_RATIO_SPREAD: f64 = 1.5;

/// Suite identifiers and titles, in run order.
pub const SUITES: [(u8, &str); 12] = [
    (1, "pure bipartition"),
    (2, "single bond cut"),
    (3, "disjoint blocks"),
    (4, "positive partial transpose, open chain"),
    (5, "adjacent blocks"),
    (6, "periodic ring"),
    (7, "mutual information"),
    (8, "maximal mixing"),
    (9, "Pauli identities"),
    (10, "Hamiltonian ground state"),
    (11, "Monte Carlo"),
    (12, "spin correlations"),
];

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    /// Largest spin-1 chain or ring used for exact diagonalization.
    pub max_sites: usize,
    /// Overrides every pinned tolerance when set.
    pub tol: Option<f64>,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_sites: 8,
            tol: None,
            samples: 100_000,
            seed: 20_240_601,
        }
    }
}

impl VerifyConfig {
    fn tol(&self, pinned: f64) -> f64 {
        self.tol.unwrap_or(pinned)
    }
}

/// One comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub observed: f64,
    pub expected: f64,
    pub tol: f64,
    pub passed: bool,
    /// Compares against a published form that is known to be wrong; a failure
    /// here is reported but does not fail the suite.
    pub known_failure: bool,
}

impl Check {
    pub fn close(name: impl Into<String>, observed: f64, expected: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            observed,
            expected,
            tol,
            passed: (observed - expected).abs() <= tol,
            known_failure: false,
        }
    }

    /// `observed <= tol`, for residuals and distances.
    pub fn small(name: impl Into<String>, observed: f64, tol: f64) -> Self {
        Self {
            passed: observed <= tol,
            ..Self::close(name, observed, 0.0, tol)
        }
    }

    /// `observed >= bound`.
    pub fn at_least(name: impl Into<String>, observed: f64, bound: f64) -> Self {
        Self {
            passed: observed >= bound,
            ..Self::close(name, observed, bound, 0.0)
        }
    }

    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Self::close(name, f64::from(u8::from(ok)), 1.0, 0.0)
    }

    pub fn expect_failure(mut self) -> Self {
        self.known_failure = true;
        self
    }

    pub fn status(&self) -> &'static str {
        match (self.passed, self.known_failure) {
            (true, _) => "PASS",
            (false, true) => "FAIL [expected]",
            (false, false) => "FAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Suite {
    pub id: u8,
    pub title: String,
    pub checks: Vec<Check>,
}

impl Suite {
    /// All checks pass, apart from known failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.known_failure)
    }

    pub fn known_failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed && c.known_failure)
    }
}

/// Largest value seen and where.
struct Worst {
    value: f64,
    at: String,
    count: usize,
}

impl Worst {
    fn max() -> Self {
        Self { value: f64::NEG_INFINITY, at: String::new(), count: 0 }
    }

    fn min() -> Self {
        Self { value: f64::INFINITY, at: String::new(), count: 0 }
    }

    fn above(&mut self, v: f64, at: impl FnOnce() -> String) {
        self.count += 1;
        if v > self.value || v.is_nan() {
            self.value = v;
            self.at = at();
        }
    }

    fn below(&mut self, v: f64, at: impl FnOnce() -> String) {
        self.count += 1;
        if v < self.value || v.is_nan() {
            self.value = v;
            self.at = at();
        }
    }

    fn label(&self, what: &str) -> String {
        format!("{what} ({} cases, worst {})", self.count, self.at)
    }
}

fn open_chain(n: usize) -> Result<StateVector> {
    mps_oracle::build_open_chain(n)
}

/// Layout indices of `len` consecutive spin-1 sites starting at chain site `start`.
fn sites(state: &StateVector, start: usize, len: usize) -> Vec<usize> {
    (start..start + len).map(|k| state.bulk_site(k)).collect()
}

/// Multiplicities of `values` grouped at [`TOL_GROUP`], sorted descending.
fn multiplicities(values: &[f64]) -> Vec<usize> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mut m: Vec<usize> = crate::linalg::group_values(&v, TOL_GROUP)
        .into_iter()
        .map(|(_, k)| k)
        .collect();
    m.sort_unstable_by(|a, b| b.cmp(a));
    m
}

fn pure_bipartition(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (tol_rho, tol_pt) = (cfg.tol(TOL_EXACT), cfg.tol(TOL_ORACLE));
    let mut rho_err = Worst::max();
    let mut pt_err = Worst::max();
    let mut mult_ok = true;
    for l in 1..=4usize {
        for n in l + 1..=cfg.max_sites {
            let state = open_chain(n)?;
            let block = sites(&state, 1, l);
            let rho = SpectrumReport::of(&mps_oracle::reduced_density(&state, &block)?)?;
            let want = closed_forms::pure_block_spectrum(l as u32)?;
            rho_err.above(spectrum_distance(&rho.eigenvalues, &want.eigenvalues), || {
                format!("L={l} N={n}")
            });
            let pt = mps_oracle::pure_bipartition_pt(&state, &block)?;
            let want = closed_forms::pure_pt_spectrum(l as u32)?;
            pt_err.above(spectrum_distance(&pt.eigenvalues, &want.eigenvalues), || {
                format!("L={l} N={n}")
            });
            // At L = 1 the singlet weight vanishes and the groups merge.
            if l >= 2 {
                mult_ok &= multiplicities(&pt.nonzero(TOL_GROUP)) == [6, 3, 3, 3, 1];
            }
        }
    }
    let state = open_chain(4)?;
    let pt = mps_oracle::pure_bipartition_pt(&state, &sites(&state, 1, 1))?;
    Ok(vec![
        Check::small(rho_err.label("block spectrum, exact vs closed form"), rho_err.value, tol_rho),
        Check::small(pt_err.label("PT spectrum, exact vs closed form"), pt_err.value, tol_pt),
        Check::holds("PT multiplicities (6,3,3,3,1) for L = 2..4", mult_ok),
        Check::close("negativity at L = 1, exact", pt.negativity, 1.0, cfg.tol(TOL_EXACT)),
        Check::close(
            "negativity at L = 1, closed form",
            closed_forms::pure_negativity(1)?,
            1.0,
            cfg.tol(TOL_EXACT),
        ),
    ])
}

fn bond_cut(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tol(TOL_EXACT);
    let closed = closed_forms::bipartition_l0_pt_spectrum();
    let want = [-0.5, 0.5, 0.5, 0.5];
    let mut ed = Worst::max();
    for n in 2..=cfg.max_sites {
        let state = open_chain(n)?;
        for cut in 1..n {
            // The smaller side of the cut, including its boundary spin.
            let side: Vec<usize> = if 2 * cut <= n {
                (0..=cut).collect()
            } else {
                (cut + 1..n + 2).collect()
            };
            let pt = mps_oracle::pure_bipartition_pt(&state, &side)?;
            ed.above(spectrum_distance(&pt.eigenvalues, &want), || format!("N={n} cut={cut}"));
        }
    }
    Ok(vec![
        Check::small(
            "closed-form PT spectrum {1/2 x3, -1/2}",
            spectrum_distance(&closed.eigenvalues, &want),
            tol,
        ),
        Check::close("closed-form negativity", closed.negativity, 0.5, tol),
        Check::small(ed.label("exact PT spectrum across a bond"), ed.value, tol),
    ])
}

/// `(la, gap, lb)` with all parts positive and `la + gap + lb <= total`.
fn open_triples(total: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for la in 1..=total {
        for gap in 1..=total {
            for lb in 1..=total {
                if la + gap + lb <= total {
                    out.push((la, gap, lb));
                }
            }
        }
    }
    out
}

fn exact_open_pair(la: u32, gap: u32, lb: u32) -> Result<(SpectrumReport, SpectrumReport)> {
    let state = open_chain((la + gap + lb) as usize)?;
    mps_oracle::entanglement_report(
        &state,
        &sites(&state, 0, la as usize),
        &sites(&state, (la + gap) as usize, lb as usize),
    )
}

fn disjoint_blocks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tol(TOL_ORACLE);
    let mut mode_vs_poly = Worst::max();
    let mut mode_vs_exact = Worst::max();
    let mut poly_vs_exact = Worst::max();
    let mut mult_ok = true;
    for (la, gap, lb) in open_triples(6.min(cfg.max_sites as u32)) {
        let at = || format!("({la},{gap},{lb})");
        let mode = effective_rho::rho_ab_open(la, gap, lb)?.spectrum()?;
        let polys = closed_forms::disjoint_char_polys(la, gap, lb)?;
        let poly = polys.spectrum()?;
        mult_ok &= polys
            .roots()?
            .iter()
            .map(|r| r.1)
            .eq(closed_forms::ROOT_MULTIPLICITIES);
        let (exact, _) = exact_open_pair(la, gap, lb)?;
        mode_vs_poly.above(spectrum_distance(&mode.eigenvalues, &poly), at);
        mode_vs_exact.above(spectrum_distance(&mode.eigenvalues, &exact.eigenvalues), at);
        poly_vs_exact.above(spectrum_distance(&poly, &exact.eigenvalues), at);
    }
    let mut anchor = vec![4.0 / 27.0; 5];
    anchor.extend([2.0 / 27.0; 3]);
    anchor.push(1.0 / 27.0);
    let at_111 = effective_rho::rho_ab_open(1, 1, 1)?.spectrum()?;
    Ok(vec![
        Check::small(mode_vs_poly.label("mode space vs characteristic roots"), mode_vs_poly.value, tol),
        Check::small(mode_vs_exact.label("mode space vs exact"), mode_vs_exact.value, tol),
        Check::small(poly_vs_exact.label("characteristic roots vs exact"), poly_vs_exact.value, tol),
        Check::holds("root multiplicities (5,1,1,3,3,3)", mult_ok),
        Check::small(
            "(1,1,1) spectrum {4/27 x5, 2/27 x3, 1/27, 0 x7}",
            spectrum_distance(&at_111.eigenvalues, &anchor),
            tol,
        ),
    ])
}

fn open_ppt(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let bound = -cfg.tol(TOL_PSD);
    let mut mode = Worst::min();
    for la in 1..=8 {
        for gap in 1..=8 {
            for lb in 1..=8 {
                let pt = effective_rho::mode_partial_transpose(&effective_rho::rho_ab_open(la, gap, lb)?);
                mode.below(pt.spectrum()?.min_eigenvalue(), || format!("({la},{gap},{lb})"));
            }
        }
    }
    let triples: Vec<_> = open_triples(cfg.max_sites as u32)
        .into_iter()
        .filter(|&(la, _, lb)| la + lb <= 6)
        .collect();
    let mins: Vec<f64> = triples
        .par_iter()
        .map(|&(la, gap, lb)| Ok(exact_open_pair(la, gap, lb)?.1.min_eigenvalue()))
        .collect::<Result<_>>()?;
    let mut exact = Worst::min();
    for (&(la, gap, lb), &m) in triples.iter().zip(&mins) {
        exact.below(m, || format!("({la},{gap},{lb})"));
    }
    Ok(vec![
        Check::at_least(mode.label("min PT eigenvalue, mode space"), mode.value, bound),
        Check::at_least(exact.label("min PT eigenvalue, exact"), exact.value, bound),
    ])
}

fn adjacent_blocks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tol(TOL_ORACLE);
    let mut vs_exact = Worst::max();
    let mut vs_mode = Worst::max();
    for la in 1..=3u32 {
        for lb in 1..=3u32 {
            if (la + lb) as usize > cfg.max_sites {
                continue;
            }
            let closed = closed_forms::adjacent_pt_negativity(la, lb)?.negativity;
            let state = open_chain((la + lb) as usize)?;
            let (_, pt) = mps_oracle::entanglement_report(
                &state,
                &sites(&state, 0, la as usize),
                &sites(&state, la as usize, lb as usize),
            )?;
            let mode = effective_rho::mode_partial_transpose(&effective_rho::rho_ab_adjacent(la, lb)?)
                .spectrum()?
                .negativity;
            vs_exact.above((closed - pt.negativity).abs(), || format!("({la},{lb})"));
            vs_mode.above((closed - mode).abs(), || format!("({la},{lb})"));
        }
    }
    let mut equal = Worst::max();
    let mut printed = Worst::max();
    for l in 1..=6 {
        let general = closed_forms::adjacent_pt_negativity(l, l)?.negativity;
        equal.above((closed_forms::adjacent_negativity_equal(l)? - general).abs(), || {
            format!("l={l}")
        });
        printed.above(
            (closed_forms::adjacent_negativity_equal_with(l, 0.75)? - general).abs(),
            || format!("l={l}"),
        );
    }
    // 1/2 - N(l, l) = (3/2) x^2 + O(x^3) with x = (-1/3)^l.
    let decay: Vec<(f64, f64)> = (2..=5)
        .map(|l| Ok((z_of(l), 0.5 - closed_forms::adjacent_pt_negativity(l, l)?.negativity)))
        .collect::<Result<_>>()?;
    let log_pts: Vec<(f64, f64)> = decay
        .iter()
        .zip(2..)
        .map(|(&(_, d), l)| (f64::from(l), d.ln()))
        .collect();
    let (slope, _) = linear_fit(&log_pts);
    let ratio_pts: Vec<(f64, f64)> = decay.iter().map(|&(x, d)| (x, d / (x * x))).collect();
    let (_, quadratic) = linear_fit(&ratio_pts);
    Ok(vec![
        Check::small(vs_exact.label("negativity from (y1, y2) vs exact"), vs_exact.value, tol),
        Check::small(vs_mode.label("negativity from (y1, y2) vs mode space"), vs_mode.value, tol),
        Check::close(
            "N(1,1) = 1/9",
            closed_forms::adjacent_pt_negativity(1, 1)?.negativity,
            1.0 / 9.0,
            cfg.tol(TOL_EXACT),
        ),
        Check::small(equal.label("equal-block formula vs general"), equal.value, cfg.tol(TOL_EXACT)),
        Check::small(
            printed.label("equal-block formula with radical coefficient 3/4 vs general"),
            printed.value,
            cfg.tol(TOL_EXACT),
        )
        .expect_failure(),
        Check::close("decay fit slope over l = 2..5", slope, -(9f64.ln()), FIT_SLOPE_TOL),
        Check::close("x^2 coefficient of 1/2 - N(l, l) over l = 2..5", quadratic, 1.5, FIT_QUADRATIC_TOL),
    ])
}

/// Least-squares `(slope, intercept)`.
fn linear_fit(pts: &[(f64, f64)]) -> (f64, f64) {
    let n = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
    let (mx, my) = (sx / n, sy / n);
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

fn periodic_ring(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tol(TOL_ORACLE);
    let bound = -cfg.tol(TOL_PSD);
    let mut partitions = Vec::new();
    for n in 4..=cfg.max_sites.min(8) as u32 {
        for la in 1..n {
            for lb in 1..n - la + 1 {
                for lc in 0..=n - la - lb {
                    partitions.push((la, lb, lc, n - la - lb - lc));
                }
            }
        }
    }
    let mut mode_min = Worst::min();
    for &(la, lb, lc, ld) in partitions.iter().filter(|p| p.2 >= 1 && p.3 >= 1) {
        let pt = effective_rho::mode_partial_transpose(&effective_rho::rho_ab_pbc(la, lb, lc, ld)?);
        mode_min.below(pt.spectrum()?.min_eigenvalue(), || format!("{la}-{ld}-{lb}-{lc}"));
    }
    let exact: Vec<_> = partitions.iter().filter(|p| p.0 + p.1 <= 6).copied().collect();
    let results: Vec<(f64, f64)> = exact
        .par_iter()
        .map(|&(la, lb, lc, ld)| {
            let ring = mps_oracle::build_ring((la + lb + lc + ld) as usize)?;
            let a: Vec<usize> = (0..la as usize).collect();
            let b: Vec<usize> = ((la + ld) as usize..(la + ld + lb) as usize).collect();
            let (rho, pt) = mps_oracle::entanglement_report(&ring, &a, &b)?;
            let mode = effective_rho::rho_ab_pbc(la, lb, lc, ld)?.spectrum()?;
            Ok((spectrum_distance(&mode.eigenvalues, &rho.eigenvalues), pt.min_eigenvalue()))
        })
        .collect::<Result<_>>()?;
    let mut vs_exact = Worst::max();
    let mut exact_min = Worst::min();
    for (&(la, lb, lc, ld), &(d, m)) in exact.iter().zip(&results) {
        let at = || format!("{la}-{ld}-{lb}-{lc}");
        vs_exact.above(d, at);
        if lc >= 1 && ld >= 1 {
            exact_min.below(m, at);
        }
    }
    let mut published = Worst::min();
    let mut bilinear = Worst::min();
    let mut residual = Worst::max();
    for lc in 1..=6 {
        for ld in 1..=6 {
            let at = || format!("L_C={lc} L_D={ld}");
            let p = ConvexityWeights::published(lc, ld);
            published.below(unit_interval_margin(&p.as_array()[..3]), at);
            let w = ConvexityWeights::bilinear(lc, ld);
            bilinear.below(unit_interval_margin(&w.as_array()), at);
            residual.above(
                effective_rho::convexity_residual(&w, lc, ld).max(w.moment_error(lc, ld)),
                at,
            );
        }
    }
    Ok(vec![
        Check::at_least(mode_min.label("min PT eigenvalue, mode space"), mode_min.value, bound),
        Check::at_least(exact_min.label("min PT eigenvalue, exact ring"), exact_min.value, bound),
        Check::small(vs_exact.label("ring operator vs exact ring"), vs_exact.value, tol),
        Check::at_least(
            published.label("published alpha, beta, gamma inside [0, 1] (margin)"),
            published.value,
            0.0,
        )
        .expect_failure(),
        Check::at_least(
            bilinear.label("bilinear corner weights inside [0, 1] (margin)"),
            bilinear.value,
            0.0,
        ),
        Check::small(
            residual.label("bilinear corner mixture reproduces the transpose"),
            residual.value,
            cfg.tol(TOL_EXACT),
        ),
    ])
}

/// Smallest distance of any value to the outside of [0, 1]; negative when outside.
fn unit_interval_margin(w: &[f64]) -> f64 {
    w.iter().map(|&v| v.min(1.0 - v)).fold(f64::INFINITY, f64::min)
}

fn mutual_information(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let finite = |gap| -> Result<f64> {
        Ok(effective_rho::measures(&effective_rho::rho_ab_open(6, gap, 6)?)?.mutual_information)
    };
    let (i1, i2) = (finite(1)?, finite(2)?);
    Ok(vec![
        Check::close("I(z(1)) = ln(4/3)", closed_forms::mutual_information(z_of(1)), (4f64 / 3.0).ln(), cfg.tol(TOL_EXACT)),
        Check::close("I(z(2))", closed_forms::mutual_information(z_of(2)), 0.017_372, 1e-6),
        Check::close("finite blocks L_A = L_B = 6, L = 1", i1, closed_forms::mutual_information(z_of(1)), MI_GAP_L1),
        Check::close("finite blocks L_A = L_B = 6, L = 2", i2, closed_forms::mutual_information(z_of(2)), MI_GAP_L2),
        Check::close("I(z = 0)", closed_forms::mutual_information(0.0), 0.0, 0.0),
    ])
}

fn maximal_mixing(_cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut ratios = Vec::new();
    let mut deviations = Vec::new();
    for l in 3..=6 {
        let purity = effective_rho::rho_ab_open(l, l, l)?.spectrum()?.purity;
        let x = z_of(l);
        let deviation = (purity - 1.0 / 16.0).abs();
        deviations.push(deviation);
        ratios.push(deviation / (3.0 * x * x));
    }
    let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().copied().fold(0.0, f64::max);
    let decreasing = deviations.windows(2).all(|w| w[1] < w[0]);
    Ok(vec![
        Check::at_least("smallest ratio to x1^2 + x2^2 + z^2, L = 3..6", lo, PURITY_RATIO_RANGE.0),
        Check::at_least("largest ratio (negated) against upper bound", -hi, -PURITY_RATIO_RANGE.1),
        Check::small("ratio spread max/min", hi / lo, PURITY_RATIO_SPREAD),
        Check::holds("|purity - 1/16| decreases with L", decreasing),
    ])
}

fn pauli_identities(_cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = vec![
        Check::holds(
            "bilinear completeness",
            pauli_algebra::verify_bilinear_completeness().holds,
        ),
        Check::holds(
            "sigma2 conjugation, Tr(sigma sigma_bar) = 2 delta, anticommutator",
            SigmaBasis::default().check_invariants().is_ok(),
        ),
        Check::holds(
            "calibrated four-trace formula",
            pauli_algebra::orientation_mismatches(pauli_algebra::epsilon_orientation()).is_empty(),
        ),
        Check::holds(
            "Lorentz generator algebra",
            pauli_algebra::verify_lorentz_algebra().holds,
        ),
    ];
    for n in 2..=4 {
        let id = pauli_algebra::verify_boundary_identity(n)?;
        let (p, q) = id.prefactor;
        checks.push(Check::holds(
            format!("boundary identity n = {n}, prefactor {p}/{q}"),
            id.corrected.holds,
        ));
        if n > 2 {
            checks.push(Check::holds(
                format!("boundary identity n = {n}: conventional prefactor off by sign only"),
                id.printed_differs_by_sign,
            ));
        }
    }
    Ok(checks)
}

fn ground_state(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tol(TOL_EXACT);
    let mut open = Worst::max();
    for n in 1..=cfg.max_sites {
        let r = mps_oracle::hamiltonian_residual(&open_chain(n)?, Boundary::Open)?;
        open.above(r.abs(), || format!("N={n}"));
    }
    let mut ring = Worst::max();
    for n in 3..=cfg.max_sites {
        let r = mps_oracle::hamiltonian_residual(&mps_oracle::build_ring(n)?, Boundary::Ring)?;
        ring.above(r.abs(), || format!("N={n}"));
    }
    let mut checks = vec![
        Check::small(open.label("<H>, open chains"), open.value, tol),
        Check::small(ring.label("<H>, rings"), ring.value, tol),
    ];
    for n in 1..=4.min(cfg.max_sites) {
        checks.push(Check::close(
            format!("null space dimension, open N = {n}"),
            mps_oracle::null_space_dimension(n, Boundary::Open, 1e-9)? as f64,
            1.0,
            0.0,
        ));
    }
    for n in 3..=4.min(cfg.max_sites) {
        checks.push(Check::close(
            format!("null space dimension, ring N = {n}"),
            mps_oracle::null_space_dimension(n, Boundary::Ring, 1e-9)? as f64,
            1.0,
            0.0,
        ));
    }
    Ok(checks)
}

fn monte_carlo(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut norm = Worst::max();
    for n in 1..=4 {
        let e = sphere_mc::estimate_vbs_norm(n, cfg.samples, cfg.seed + n as u64)?;
        norm.above(e.z_score(Complex64::new(1.0, 0.0)), || format!("N={n}"));
    }
    checks.push(Check::small(norm.label("VBS norm, standard errors from 1"), norm.value, MC_SIGMAS));
    let mut overlap = Worst::max();
    for length in 1..=3u32 {
        for mu in 0..4 {
            for nu in 0..4 {
                let seed = cfg.seed ^ ((length as u64) << 8 | (mu as u64) << 4 | nu as u64);
                let e = sphere_mc::estimate_block_overlap(mu, nu, length as usize, cfg.samples, seed)?;
                let target = sphere_mc::overlap_target(mu, nu, length, 1.0);
                overlap.above(e.z_score(Complex64::new(target, 0.0)), || {
                    format!("mu={mu} nu={nu} L={length}")
                });
            }
        }
    }
    checks.push(Check::small(
        overlap.label("block overlaps, standard errors from target"),
        overlap.value,
        MC_SIGMAS,
    ));
    let e = sphere_mc::estimate_block_overlap(2, 2, 1, cfg.samples, cfg.seed)?;
    let minus = sphere_mc::overlap_target(2, 2, 1, -1.0);
    checks.push(Check::small(
        "mu = 2, L = 1: standard errors from the plus-sign target",
        e.z_score(Complex64::new(sphere_mc::overlap_target(2, 2, 1, 1.0), 0.0)),
        MC_SIGMAS,
    ));
    checks.push(Check::at_least(
        "mu = 2, L = 1: standard errors from the minus-sign target",
        e.z_score(Complex64::new(minus, 0.0)),
        MC_SIGMAS,
    ));
    Ok(checks)
}

fn correlations(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tol(TOL_ORACLE);
    let mut nearest = Worst::max();
    let mut next = Worst::max();
    for n in 5..=cfg.max_sites {
        let state = open_chain(n)?;
        let c = |i: usize, j: usize| -> Result<f64> {
            Ok(mps_oracle::spin_correlation(&state, state.bulk_site(i), state.bulk_site(j))?.value)
        };
        for i in 0..n - 1 {
            nearest.above((c(i, i + 1)? + 4.0 / 9.0).abs(), || format!("N={n} i={i}"));
            if i + 2 < n {
                next.above((c(i, i + 2)? - 4.0 / 27.0).abs(), || format!("N={n} i={i}"));
            }
        }
    }
    Ok(vec![
        Check::small(nearest.label("<Sz_i Sz_i+1> = -4/9"), nearest.value, tol),
        Check::small(next.label("<Sz_i Sz_i+2> = 4/27"), next.value, tol),
    ])
}

/// Runs one suite; an evaluation error becomes a failing check.
pub fn run_suite(id: u8, cfg: &VerifyConfig) -> Suite {
    let body = match id {
        1 => pure_bipartition(cfg),
        2 => bond_cut(cfg),
        3 => disjoint_blocks(cfg),
        4 => open_ppt(cfg),
        5 => adjacent_blocks(cfg),
        6 => periodic_ring(cfg),
        7 => mutual_information(cfg),
        8 => maximal_mixing(cfg),
        9 => pauli_identities(cfg),
        10 => ground_state(cfg),
        11 => monte_carlo(cfg),
        12 => correlations(cfg),
        _ => Err(crate::Error::InvalidArgument(format!("unknown suite {id}"))),
    };
    let title = SUITES
        .iter()
        .find(|s| s.0 == id)
        .map_or("unknown", |s| s.1)
        .to_string();
    let checks = body.unwrap_or_else(|e| {
        vec![Check { known_failure: false, ..Check::holds(format!("error: {e}"), false) }]
    });
    Suite { id, title, checks }
}

/// All suites, in parallel, reported in id order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<Suite> {
    SUITES.par_iter().map(|&(id, _)| run_suite(id, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_constructors() {
        assert!(Check::close("a", 1.0, 1.0 + 1e-13, 1e-12).passed);
        assert!(!Check::small("b", 2e-12, 1e-12).passed);
        assert!(Check::at_least("c", -1e-13, -1e-12).passed);
        let c = Check::holds("d", false).expect_failure();
        assert_eq!(c.status(), "FAIL [expected]");
    }

    #[test]
    fn known_failures_do_not_fail_a_suite() {
        let s = Suite {
            id: 0,
            title: "t".into(),
            checks: vec![Check::holds("ok", true), Check::holds("bad", false).expect_failure()],
        };
        assert!(s.passed());
        assert_eq!(s.known_failures().count(), 1);
    }

    #[test]
    fn fit_recovers_line() {
        let pts: Vec<(f64, f64)> = (0..5).map(|k| (k as f64, 2.0 - 0.5 * k as f64)).collect();
        let (m, b) = linear_fit(&pts);
        assert!((m + 0.5).abs() < 1e-14 && (b - 2.0).abs() < 1e-14);
    }

    #[test]
    fn fast_suites_pass() {
        let cfg = VerifyConfig { max_sites: 5, ..Default::default() };
        for id in [2, 7, 9] {
            let s = run_suite(id, &cfg);
            assert!(s.passed(), "{s:#?}");
        }
    }

    #[test]
    fn tolerance_override_applies() {
        let cfg = VerifyConfig { tol: Some(0.5), ..Default::default() };
        let s = run_suite(2, &cfg);
        assert!(s.checks.iter().all(|c| c.tol == 0.5));
    }

    #[test]
    fn unknown_suite_fails() {
        assert!(!run_suite(99, &VerifyConfig::default()).passed());
    }
}
