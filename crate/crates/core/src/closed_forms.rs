//! Analytic block spectra, negativities and entropies.
//!
//! Lengths count spin-1 sites. The bulk decay parameter of a length-`L`
//! segment is `z(L) = (-1/3)^L`.

use std::f64::consts::{FRAC_PI_6, LN_2, PI};

use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::linalg::SpectrumReport;

/// `s_μ` in `w_μ = (1 + s_μ z) / 4`.
pub const CHANNEL_SIGNS: [i64; 4] = [-1, -1, 3, -1];

/// Index of the singlet channel.
pub const SINGLET: usize = 2;

/// `|p|`, relative to the squared coefficient scale, below which a cubic is
/// treated as having a triple root.
pub const TRIPLE_ROOT_TOL: f64 = 1e-14;

/// Slack allowed on the arccos argument before it is clamped to [-1, 1].
pub const ARCCOS_CLAMP_TOL: f64 = 1e-12;

/// Cap on Newton steps when polishing characteristic roots.
const NEWTON_MAX_STEPS: usize = 64;

/// `(-1/3)^length`, from the exact integer `3^length`.
pub fn z_of(length: u32) -> f64 {
    let sign = if length.is_multiple_of(2) { 1.0 } else { -1.0 };
    if length <= 80 {
        sign / 3u128.pow(length) as f64
    } else {
        sign * (1.0 / 3.0f64).powi(length as i32)
    }
}

fn require_positive(name: &str, value: u32) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidGeometry(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Norms of the four block ground states `T_μ^† |block>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelWeights {
    pub z: f64,
    pub w: [f64; 4],
}

impl ChannelWeights {
    pub fn from_z(z: f64) -> Self {
        let w = CHANNEL_SIGNS.map(|s| 0.25 * (1.0 + s as f64 * z));
        Self { z, w }
    }

    pub fn for_length(length: u32) -> Self {
        Self::from_z(z_of(length))
    }

    pub fn singlet(&self) -> f64 {
        self.w[SINGLET]
    }

    pub fn triplet(&self) -> f64 {
        self.w[0]
    }
}

/// Products of singlet/triplet weights of two blocks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairWeights {
    pub l00: f64,
    pub l10: f64,
    pub l11: f64,
    /// `(-3)^-L1`
    pub x1: f64,
    /// `(-3)^-L2`
    pub x2: f64,
}

impl PairWeights {
    pub fn new(l1: u32, l2: u32) -> Result<Self> {
        require_positive("L1", l1)?;
        require_positive("L2", l2)?;
        Ok(Self::from_x(z_of(l1), z_of(l2)))
    }

    pub fn from_x(x1: f64, x2: f64) -> Self {
        let (a, b) = (ChannelWeights::from_z(x1), ChannelWeights::from_z(x2));
        Self {
            l00: a.singlet() * b.singlet(),
            l11: a.triplet() * b.triplet(),
            l10: a.singlet() * b.triplet() + b.singlet() * a.triplet(),
            x1,
            x2,
        }
    }
}

/// Monic cubic `y^3 + b y^2 + c y + d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicCoefficients {
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl CubicCoefficients {
    pub fn p(&self) -> f64 {
        (3.0 * self.c - self.b * self.b) / 3.0
    }

    pub fn q(&self) -> f64 {
        (2.0 * self.b.powi(3) - 9.0 * self.b * self.c + 27.0 * self.d) / 27.0
    }

    pub fn eval(&self, y: f64) -> f64 {
        ((y + self.b) * y + self.c) * y + self.d
    }

    /// `arccos` argument of the trigonometric solution, clamped when within
    /// [`ARCCOS_CLAMP_TOL`] of the boundary. The band widens with the
    /// cancellation in `p` and `q` when `b^2 >> |p|` (nearly double roots).
    fn arccos_argument(&self) -> Result<f64> {
        let p = self.p();
        let arg = 3.0 * self.q() / (2.0 * p) * (-3.0 / p).sqrt();
        let conditioning = (1.0 + self.b * self.b / p.abs()).powf(1.5);
        let band = ARCCOS_CLAMP_TOL.max(64.0 * f64::EPSILON * conditioning);
        if arg.abs() > 1.0 + band {
            return Err(Error::ComplexCubicRoots { p, argument: arg });
        }
        Ok(arg.clamp(-1.0, 1.0))
    }

    /// `p` against the squared root scale: positive means complex roots, and
    /// within [`TRIPLE_ROOT_TOL`] of zero means a triple root.
    fn classify(&self) -> Result<Option<f64>> {
        let p = self.p();
        let scale2 = (self.b * self.b).max(self.c.abs()).max(self.d.abs().powf(2.0 / 3.0));
        let tol = TRIPLE_ROOT_TOL * scale2;
        if p > tol {
            return Err(Error::ComplexCubicRoots { p, argument: f64::NAN });
        }
        Ok((p.abs() > tol).then_some(p))
    }
}

/// The three real roots of a cubic, ascending, by the trigonometric formula.
pub fn cubic_roots_trig(coeffs: &CubicCoefficients) -> Result<[f64; 3]> {
    let shift = -coeffs.b / 3.0;
    let Some(p) = coeffs.classify()? else {
        return Ok([shift; 3]);
    };
    let theta = coeffs.arccos_argument()?.acos() / 3.0;
    let r = 2.0 * (-p / 3.0).sqrt();
    let trig = [0, 1, 2].map(|k| r * (theta + 2.0 * PI * k as f64 / 3.0).cos() + shift);
    // Near a double root the arccos loses half the digits; keep only the most
    // isolated root and recover the pair from Vieta's relations.
    let gap = |k: usize| {
        (0..3)
            .filter(|&j| j != k)
            .map(|j| (trig[j] - trig[k]).abs())
            .fold(f64::INFINITY, f64::min)
    };
    let k = (0..3).max_by(|&a, &b| gap(a).total_cmp(&gap(b))).unwrap_or(0);
    let r1 = trig[k];
    let sum = -coeffs.b - r1;
    let product = coeffs.c - r1 * sum;
    let disc = pair_discriminant(sum, product);
    let mut roots = [r1, 0.5 * (sum - disc), 0.5 * (sum + disc)];
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// `sqrt(sum^2 - 4 product)`, set to zero when it lies within rounding error of zero.
fn pair_discriminant(sum: f64, product: f64) -> f64 {
    let disc = sum * sum - 4.0 * product;
    let noise = 8.0 * f64::EPSILON * (sum * sum + 4.0 * product.abs());
    if disc <= noise {
        0.0
    } else {
        disc.sqrt()
    }
}

/// The smallest root of a cubic with three real roots, in the sine form.
pub fn cubic_smallest_root(coeffs: &CubicCoefficients) -> Result<f64> {
    let shift = -coeffs.b / 3.0;
    let Some(p) = coeffs.classify()? else {
        return Ok(shift);
    };
    let theta = coeffs.arccos_argument()?.acos() / 3.0;
    Ok(-2.0 * (-p / 3.0).sqrt() * (theta + FRAC_PI_6).sin() + shift)
}

/// Factors of the characteristic polynomial `p1^5 p2 p3^3` of the two-block
/// density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharPolys {
    /// Root of the linear factor `Y - p1_root`.
    pub p1_root: f64,
    /// `(b, c)` of the quadratic `Y^2 + b Y + c`.
    pub p2: (f64, f64),
    pub p3: CubicCoefficients,
    /// The quadratic in `u = 16 Y - (1 - z)`, `u^2 + B u + C`, as `(B, C)`.
    pub p2_centered: (f64, f64),
    /// The cubic in `u = 16 Y - (1 - z)`.
    pub p3_centered: CubicCoefficients,
    /// Separation parameter the factors were built for.
    pub z: f64,
    // The centered coefficients in double-double, `[B, C]` and `[b, c, d]`.
    p2_dd: [TwoFloat; 2],
    p3_dd: [TwoFloat; 3],
}

/// `(c, i, j, k)` for the term `c x1^i x2^j z^k`.
type Monomial = (i64, i32, i32, i32);

// Coefficients of p2 and p3 in `u = 16 Y - (1 - z)` (times 16^2 and 16^3),
// expanded in x1, x2, z. For long blocks p3 has a nearly double root at
// `Y = (1 - z)/16`; centering there keeps the constant and linear
// coefficients small and free of cancellation.
const P2_U0: &[Monomial] = &[(8, 0, 1, 1), (-8, 0, 1, 2), (-3, 0, 2, 0), (-6, 0, 2, 1), (9, 0, 2, 2), (8, 1, 0, 1), (-8, 1, 0, 2), (-6, 1, 1, 0), (16, 1, 1, 1), (-10, 1, 1, 2), (-6, 1, 2, 0), (-12, 1, 2, 1), (18, 1, 2, 2), (-3, 2, 0, 0), (-6, 2, 0, 1), (9, 2, 0, 2), (-6, 2, 1, 0), (-12, 2, 1, 1), (18, 2, 1, 2), (9, 2, 2, 0), (18, 2, 2, 1), (-27, 2, 2, 2)];
const P2_U1: &[Monomial] = &[(-4, 0, 0, 1), (-2, 0, 1, 0), (2, 0, 1, 1), (-2, 1, 0, 0), (2, 1, 0, 1), (-10, 1, 1, 0), (-2, 1, 1, 1)];
const P3_U0: &[Monomial] = &[(8, 0, 2, 1), (-16, 0, 2, 2), (8, 0, 2, 3), (-3, 0, 3, 0), (-3, 0, 3, 1), (15, 0, 3, 2), (-9, 0, 3, 3), (-16, 1, 1, 1), (32, 1, 1, 2), (-16, 1, 1, 3), (7, 1, 2, 0), (11, 1, 2, 1), (-43, 1, 2, 2), (25, 1, 2, 3), (-3, 1, 3, 0), (-3, 1, 3, 1), (15, 1, 3, 2), (-9, 1, 3, 3), (8, 2, 0, 1), (-16, 2, 0, 2), (8, 2, 0, 3), (7, 2, 1, 0), (11, 2, 1, 1), (-43, 2, 1, 2), (25, 2, 1, 3), (-22, 2, 2, 0), (-34, 2, 2, 1), (134, 2, 2, 2), (-78, 2, 2, 3), (15, 2, 3, 0), (15, 2, 3, 1), (-75, 2, 3, 2), (45, 2, 3, 3), (-3, 3, 0, 0), (-3, 3, 0, 1), (15, 3, 0, 2), (-9, 3, 0, 3), (-3, 3, 1, 0), (-3, 3, 1, 1), (15, 3, 1, 2), (-9, 3, 1, 3), (15, 3, 2, 0), (15, 3, 2, 1), (-75, 3, 2, 2), (45, 3, 2, 3), (-9, 3, 3, 0), (-9, 3, 3, 1), (45, 3, 3, 2), (-27, 3, 3, 3)];
const P3_U1: &[Monomial] = &[(4, 0, 1, 1), (-4, 0, 1, 2), (-5, 0, 2, 0), (-2, 0, 2, 1), (7, 0, 2, 2), (4, 1, 0, 1), (-4, 1, 0, 2), (6, 1, 1, 0), (-20, 1, 1, 1), (14, 1, 1, 2), (2, 1, 2, 0), (8, 1, 2, 1), (-10, 1, 2, 2), (-5, 2, 0, 0), (-2, 2, 0, 1), (7, 2, 0, 2), (2, 2, 1, 0), (8, 2, 1, 1), (-10, 2, 1, 2), (3, 2, 2, 0), (-6, 2, 2, 1), (3, 2, 2, 2)];
const P3_U2: &[Monomial] = &[(-4, 0, 0, 1), (-1, 0, 1, 0), (1, 0, 1, 1), (-1, 1, 0, 0), (1, 1, 0, 1), (5, 1, 1, 0), (-1, 1, 1, 1)];

fn eval_monomials(terms: &[Monomial], x1: f64, x2: f64, z: f64) -> f64 {
    terms
        .iter()
        .map(|&(c, i, j, k)| c as f64 * x1.powi(i) * x2.powi(j) * z.powi(k))
        .sum()
}

fn eval_monomials_dd(terms: &[Monomial], x1: f64, x2: f64, z: f64) -> TwoFloat {
    let (x1, x2, z) = (TwoFloat::from(x1), TwoFloat::from(x2), TwoFloat::from(z));
    terms.iter().fold(TwoFloat::from(0.0), |acc, &(c, i, j, k)| {
        acc + x1.powi(i) * x2.powi(j) * z.powi(k) * c as f64
    })
}

/// Roots of `u^2 + b u + c`, ascending, with the discriminant formed in
/// double-double so that close pairs keep their splitting.
fn quadratic_roots_dd(b: TwoFloat, c: TwoFloat) -> [TwoFloat; 2] {
    let disc = b * b - c * 4.0;
    let noise = 64.0 * f64::EPSILON * f64::EPSILON * (b.hi() * b.hi() + 4.0 * c.hi().abs());
    let root = if disc.hi() <= noise { TwoFloat::from(0.0) } else { disc.sqrt() };
    [(-b - root) * 0.5, (-b + root) * 0.5]
}

/// Refines trigonometric roots of the cubic `[b, c, d]`: Newton on the most
/// isolated root with double-double residuals, then the remaining pair from
/// the deflated quadratic.
fn polish_cubic_roots(coeffs: [TwoFloat; 3], trig: [f64; 3]) -> [f64; 3] {
    let [b, c, d] = coeffs;
    let gap = |k: usize| {
        (0..3)
            .filter(|&j| j != k)
            .map(|j| (trig[j] - trig[k]).abs())
            .fold(f64::INFINITY, f64::min)
    };
    let k = (0..3).max_by(|&x, &y| gap(x).total_cmp(&gap(y))).unwrap_or(0);
    let mut r = TwoFloat::from(trig[k]);
    let scale = trig.iter().fold(b.hi().abs(), |m, t| m.max(t.abs()));
    for _ in 0..NEWTON_MAX_STEPS {
        let value = ((r + b) * r + c) * r + d;
        let u = r.hi();
        let slope = (3.0 * u + 2.0 * b.hi()) * u + c.hi();
        if slope == 0.0 {
            break;
        }
        let step = value / slope;
        r -= step;
        if step.hi().abs() <= f64::EPSILON * f64::EPSILON * scale {
            break;
        }
    }
    let sum = -b - r;
    let [lo, hi] = quadratic_roots_dd(-sum, c - r * sum);
    let mut roots = [r.hi(), lo.hi(), hi.hi()];
    roots.sort_by(f64::total_cmp);
    roots
}

fn from_centered(u: f64, z: f64) -> f64 {
    ((1.0 - z) + u) / 16.0
}

/// Multiplicities of the p1 root, the two p2 roots and the three p3 roots.
pub const ROOT_MULTIPLICITIES: [usize; 6] = [5, 1, 1, 3, 3, 3];

impl CharPolys {
    /// Factors for block weights `pair` and an arbitrary separation parameter `z`.
    /// `z = (-1/3)^L` gives the density matrix, `z = -1` the partial transpose of adjacent blocks.
    pub fn for_z(pair: &PairWeights, z: f64) -> Self {
        let PairWeights { l00, l10, l11, x1, x2 } = *pair;
        let m = |t: &[Monomial]| eval_monomials(t, x1, x2, z);
        let dd = |t: &[Monomial]| eval_monomials_dd(t, x1, x2, z);
        Self {
            z,
            p2_dd: [dd(P2_U1), dd(P2_U0)],
            p3_dd: [dd(P3_U2), dd(P3_U1), dd(P3_U0)],
            p2_centered: (m(P2_U1), m(P2_U0)),
            p3_centered: CubicCoefficients {
                b: m(P3_U2),
                c: m(P3_U1),
                d: m(P3_U0),
            },
            p1_root: (1.0 - z) * l11,
            p2: (
                -(l00 + (1.0 + 2.0 * z) * l11),
                (1.0 - z) * (1.0 + 3.0 * z) * l00 * l11,
            ),
            p3: CubicCoefficients {
                b: -(l10 + l11 * (1.0 + z)),
                c: ((1.0 + z) * l00 + (1.0 + 2.0 * z) * l10) * (1.0 - z) * l11,
                d: -(1.0 - z).powi(2) * (1.0 + 3.0 * z) * l00 * l11 * l11,
            },
        }
    }

    /// Both roots of the quadratic factor, ascending.
    pub fn p2_roots(&self) -> [f64; 2] {
        let [b, c] = self.p2_dd;
        quadratic_roots_dd(b, c).map(|u| from_centered(u.hi(), self.z))
    }

    /// Roots of p3, ascending: the trigonometric solution in the centered
    /// variable, polished against the double-double coefficients.
    pub fn p3_roots(&self) -> Result<[f64; 3]> {
        let trig = cubic_roots_trig(&self.p3_centered)?;
        Ok(polish_cubic_roots(self.p3_dd, trig).map(|u| from_centered(u, self.z)))
    }

    /// Roots with multiplicities, in the order of [`ROOT_MULTIPLICITIES`].
    pub fn roots(&self) -> Result<[(f64, usize); 6]> {
        let [a, b] = self.p2_roots();
        let [c, d, e] = self.p3_roots()?;
        let r = [self.p1_root, a, b, c, d, e];
        Ok(std::array::from_fn(|k| (r[k], ROOT_MULTIPLICITIES[k])))
    }

    /// All 16 eigenvalues, ascending.
    pub fn spectrum(&self) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(16);
        for (root, mult) in self.roots()? {
            out.extend(std::iter::repeat_n(root, mult));
        }
        out.sort_by(f64::total_cmp);
        Ok(out)
    }
}

pub fn disjoint_char_polys(l1: u32, gap: u32, l2: u32) -> Result<CharPolys> {
    require_positive("gap", gap)?;
    Ok(CharPolys::for_z(&PairWeights::new(l1, l2)?, z_of(gap)))
}

/// Spectrum of two blocks of lengths `l1`, `l2` separated by `gap` sites.
pub fn disjoint_spectrum(l1: u32, gap: u32, l2: u32) -> Result<SpectrumReport> {
    Ok(SpectrumReport::from_eigenvalues(
        disjoint_char_polys(l1, gap, l2)?.spectrum()?,
    ))
}

/// Spectrum of one block of length `length` in an infinite chain:
/// the singlet weight once and the triplet weight three times.
pub fn pure_block_spectrum(length: u32) -> Result<SpectrumReport> {
    require_positive("L", length)?;
    let w = ChannelWeights::for_length(length);
    Ok(SpectrumReport::from_eigenvalues(vec![
        w.singlet(),
        w.triplet(),
        w.triplet(),
        w.triplet(),
    ]))
}

/// `(ξ1, ξ2)`: singlet and (triply degenerate) triplet entanglement energies.
pub fn pure_entanglement_spectrum(length: u32) -> Result<(f64, f64)> {
    require_positive("L", length)?;
    let x = z_of(length);
    Ok(((4.0 / (1.0 + 3.0 * x)).ln(), (4.0 / (1.0 - x)).ln()))
}

/// Partial-transpose spectrum of the bipartition block|rest.
pub fn pure_pt_spectrum(length: u32) -> Result<SpectrumReport> {
    require_positive("L", length)?;
    let w = ChannelWeights::for_length(length);
    let (ls, lt) = (w.singlet(), w.triplet());
    let g = (ls * lt).sqrt();
    let mut ev = vec![lt; 6];
    ev.extend([-lt; 3]);
    ev.extend([g; 3]);
    ev.extend([-g; 3]);
    ev.push(ls);
    Ok(SpectrumReport::from_eigenvalues(ev))
}

/// `3(λ_t + sqrt(λ_t λ_s))`.
pub fn pure_negativity(length: u32) -> Result<f64> {
    require_positive("L", length)?;
    let w = ChannelWeights::for_length(length);
    Ok(3.0 * (w.triplet() + (w.triplet() * w.singlet()).sqrt()))
}

/// Second-order expansion `(3/2)(1 - x^2)` of [`pure_negativity`], `x = (-1/3)^L`.
pub fn pure_negativity_asymptotic(length: u32) -> f64 {
    1.5 * (1.0 - z_of(length).powi(2))
}

/// Partial transpose of a single valence bond cut: eigenvalues {1/2 x3, -1/2}.
pub fn bipartition_l0_pt_spectrum() -> SpectrumReport {
    SpectrumReport::from_eigenvalues(vec![-0.5, 0.5, 0.5, 0.5])
}

/// First-order expansion of the two-block spectrum for long blocks and gaps.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticSpectrum {
    /// Eleven, three, then the split pair.
    pub eigenvalues: Vec<f64>,
    /// `-ln λ` of `eigenvalues`.
    pub xi: Vec<f64>,
    /// Expansion of `xi` to first order in `x1, x2, z`.
    pub xi_first_order: Vec<f64>,
}

pub fn asymptotic_disjoint_spectrum(x1: f64, x2: f64, z: f64) -> Result<AsymptoticSpectrum> {
    for (name, v) in [("x1", x1), ("x2", x2), ("z", z)] {
        if v.abs() > 1.0 / 3.0 + 1e-15 {
            return Err(Error::InvalidArgument(format!("|{name}| must be at most 1/3")));
        }
    }
    let s = x1 + x2;
    let root = (z * z + s * (s - z)).max(0.0).sqrt();
    let mut eigenvalues = vec![(1.0 - s - z) / 16.0; 11];
    eigenvalues.extend([(1.0 + 3.0 * s + 3.0 * z) / 16.0; 3]);
    let mid = (1.0 + s + z) / 16.0;
    eigenvalues.extend([mid + root / 8.0, mid - root / 8.0]);
    let base = 4.0 * LN_2;
    let mut xi_first_order = vec![base + s + z; 11];
    xi_first_order.extend([base - 3.0 * s - 3.0 * z; 3]);
    xi_first_order.extend([base - s - z - root, base - s - z + root]);
    Ok(AsymptoticSpectrum {
        xi: eigenvalues.iter().map(|l| -l.ln()).collect(),
        eigenvalues,
        xi_first_order,
    })
}

/// Negative eigenvalues of the partial transpose of two adjacent blocks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdjacentNegativity {
    /// Non-degenerate negative eigenvalue.
    pub y1: f64,
    /// Triply degenerate negative eigenvalue.
    pub y2: f64,
    pub negativity: f64,
    pub log_negativity: f64,
}

pub fn adjacent_pt_negativity(l1: u32, l2: u32) -> Result<AdjacentNegativity> {
    let pair = PairWeights::new(l1, l2)?;
    let PairWeights { l00, l11, .. } = pair;
    let y1 = 0.5 * (l00 - l11 - (l00 * l00 + 14.0 * l00 * l11 + l11 * l11).sqrt());
    let y2 = cubic_smallest_root(&CharPolys::for_z(&pair, -1.0).p3)?;
    let sum = y1 + 3.0 * y2;
    Ok(AdjacentNegativity {
        y1,
        y2,
        negativity: -sum,
        log_negativity: (1.0 - 2.0 * sum).log2(),
    })
}

/// Coefficient of the second radical in [`adjacent_negativity_equal`].
pub const EQUAL_BLOCK_RADICAL_COEFF: f64 = 1.5;

/// Negativity of two adjacent blocks of equal length `l`:
/// `-(1/4)(x + x^2 - sqrt(P(x))/2 - (3/2) sqrt((1+3x)(1-x)^3))`, `x = (-1/3)^l`.
pub fn adjacent_negativity_equal(l: u32) -> Result<f64> {
    adjacent_negativity_equal_with(l, EQUAL_BLOCK_RADICAL_COEFF)
}

/// [`adjacent_negativity_equal`] with an arbitrary second-radical coefficient.
/// Only 3/2 reproduces the general result; other values agree at `l = 1` only,
/// where the radical vanishes.
pub fn adjacent_negativity_equal_with(l: u32, radical_coeff: f64) -> Result<f64> {
    require_positive("l", l)?;
    let x = z_of(l);
    let r1 = (1.0 + 4.0 * x + 2.0 * x * x - 4.0 * x.powi(3) + 13.0 * x.powi(4)).sqrt();
    let r2 = ((1.0 + 3.0 * x) * (1.0 - x).powi(3)).max(0.0).sqrt();
    Ok(-0.25 * (x + x * x - 0.5 * r1 - radical_coeff * r2))
}

/// Large-block limit `1/2 - (3/4)(x1^2 + x2^2)` of the adjacent negativity.
pub fn adjacent_negativity_asymptotic(l1: u32, l2: u32) -> f64 {
    0.5 - 0.75 * (z_of(l1).powi(2) + z_of(l2).powi(2))
}

fn xlnx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Mutual information of two semi-infinite blocks at separation parameter `z`.
pub fn mutual_information(z: f64) -> f64 {
    0.75 * xlnx(1.0 - z) + 0.25 * xlnx(1.0 + 3.0 * z)
}

/// Joint entropy of two semi-infinite blocks at separation parameter `z`.
pub fn joint_entropy(z: f64) -> f64 {
    let a = 1.0 - z;
    let b = 1.0 + 3.0 * z;
    2.0 * LN_2 - 0.75 * a * if a > 0.0 { (a / 4.0).ln() } else { 0.0 }
        - 0.25 * b * if b > 0.0 { (b / 4.0).ln() } else { 0.0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(0), 1.0);
        assert_eq!(z_of(1), -1.0 / 3.0);
        assert_eq!(z_of(2), 1.0 / 9.0);
        assert!(close(z_of(100), (1.0f64 / 3.0).powi(100), 1e-60));
    }

    #[test]
    fn channel_weights() {
        let w = ChannelWeights::for_length(1);
        assert_eq!(w.singlet(), 0.0);
        assert!(close(w.triplet(), 1.0 / 3.0, 1e-16));
        for l in 0..10 {
            let w = ChannelWeights::for_length(l);
            assert!(close(w.w.iter().sum(), 1.0, 1e-15));
            assert!(w.w.iter().all(|&x| (0.0..=1.0).contains(&x)));
        }
    }

    #[test]
    fn pure_block_examples() {
        let r = pure_block_spectrum(1).unwrap();
        assert!(close(r.entropy, 3f64.ln(), 1e-14));
        let r = pure_block_spectrum(2).unwrap();
        let want = [2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0, 1.0 / 3.0];
        for (a, b) in r.eigenvalues.iter().zip(want) {
            assert!(close(*a, b, 1e-15));
        }
        assert!(close(r.entropy, 1.368_922_360_7, 1e-9));
        let r = pure_block_spectrum(60).unwrap();
        assert!(close(r.entropy, 4f64.ln(), 1e-12));
        assert!(pure_block_spectrum(0).is_err());
    }

    #[test]
    fn pure_entanglement_spectrum_matches_report() {
        let (xi1, xi2) = pure_entanglement_spectrum(3).unwrap();
        let w = ChannelWeights::for_length(3);
        assert!(close(xi1, -w.singlet().ln(), 1e-14));
        assert!(close(xi2, -w.triplet().ln(), 1e-14));
    }

    #[test]
    fn pure_pt_examples() {
        let r = pure_pt_spectrum(1).unwrap();
        assert!(close(r.negativity, 1.0, 1e-14));
        assert!(close(r.trace, 1.0, 1e-14));
        let n2 = pure_negativity(2).unwrap();
        assert!(close(n2, 3.0 * (2.0 / 9.0 + (2.0f64 / 27.0).sqrt()), 1e-15));
        assert!(close(n2, 1.483_163_2, 1e-7));
        for l in 1..12 {
            let r = pure_pt_spectrum(l).unwrap();
            let trace_norm: f64 = r.eigenvalues.iter().map(|x| x.abs()).sum();
            assert!(close(r.negativity, (trace_norm - 1.0) / 2.0, 1e-14));
            assert!(close(r.negativity, pure_negativity(l).unwrap(), 1e-14));
        }
    }

    #[test]
    fn pure_negativity_expansion_is_second_order() {
        for l in 3..8 {
            let x = z_of(l);
            let err = (pure_negativity(l).unwrap() - pure_negativity_asymptotic(l)).abs();
            assert!(err < 2.0 * x.abs().powi(3), "l={l} err={err}");
        }
    }

    #[test]
    fn l0_bipartition() {
        let r = bipartition_l0_pt_spectrum();
        assert_eq!(r.negativity, 0.5);
        assert_eq!(r.trace, 1.0);
    }

    #[test]
    fn cubic_solver_examples() {
        let roots = cubic_roots_trig(&CubicCoefficients { b: 0.0, c: -1.0, d: 0.0 }).unwrap();
        for (a, b) in roots.iter().zip([-1.0, 0.0, 1.0]) {
            assert!(close(*a, b, 1e-15));
        }
        let triple = CubicCoefficients { b: -3.0, c: 3.0, d: -1.0 };
        assert_eq!(cubic_roots_trig(&triple).unwrap(), [1.0; 3]);
        let complex = CubicCoefficients { b: 0.0, c: 1.0, d: 0.0 };
        assert!(matches!(
            cubic_roots_trig(&complex),
            Err(Error::ComplexCubicRoots { .. })
        ));
        let cubic = CubicCoefficients { b: -0.3, c: -0.02, d: 0.004 };
        let roots = cubic_roots_trig(&cubic).unwrap();
        assert!(roots.iter().all(|&r| cubic.eval(r).abs() < 1e-10));
        assert!(close(cubic_smallest_root(&cubic).unwrap(), roots[0], 1e-14));
    }

    #[test]
    fn char_polys_at_111() {
        let polys = disjoint_char_polys(1, 1, 1).unwrap();
        assert!(close(polys.p1_root, 4.0 / 27.0, 1e-15));
        let [a, b] = polys.p2_roots();
        assert!(close(a, 0.0, 1e-15) && close(b, 1.0 / 27.0, 1e-15));
        let r = polys.p3_roots().unwrap();
        for (x, y) in r.iter().zip([0.0, 0.0, 2.0 / 27.0]) {
            assert!(close(*x, y, 1e-12), "{r:?}");
        }
        let spec = disjoint_spectrum(1, 1, 1).unwrap();
        let nz: Vec<_> = spec.grouped(1e-9).into_iter().filter(|g| g.0.abs() > 1e-9).collect();
        assert_eq!(nz.len(), 3);
        assert!(close(nz[0].0, 1.0 / 27.0, 1e-12) && nz[0].1 == 1);
        assert!(close(nz[1].0, 2.0 / 27.0, 1e-12) && nz[1].1 == 3);
        assert!(close(nz[2].0, 4.0 / 27.0, 1e-12) && nz[2].1 == 5);
    }

    #[test]
    fn disjoint_spectra_are_states() {
        for l1 in 1..7 {
            for gap in 1..7 {
                for l2 in 1..7 {
                    let r = disjoint_spectrum(l1, gap, l2).unwrap();
                    assert_eq!(r.eigenvalues.len(), 16);
                    assert!(close(r.trace, 1.0, 1e-13));
                    assert!(r.min_eigenvalue() >= -1e-12);
                }
            }
        }
    }

    #[test]
    fn long_blocks_limit() {
        let r = disjoint_spectrum(60, 1, 60).unwrap();
        let z = -1.0 / 3.0;
        let g = r.grouped(1e-12);
        assert_eq!(g.len(), 2);
        assert!(close(g[0].0, (1.0 + 3.0 * z) / 16.0, 1e-14) && g[0].1 == 4);
        assert!(close(g[1].0, (1.0 - z) / 16.0, 1e-14) && g[1].1 == 12);
        let r = disjoint_spectrum(60, 60, 60).unwrap();
        assert!(r.eigenvalues.iter().all(|&l| close(l, 1.0 / 16.0, 1e-14)));
    }

    #[test]
    fn asymptotic_spectrum_sums_to_one() {
        let a = asymptotic_disjoint_spectrum(0.0, 0.0, 0.0).unwrap();
        assert!(a.eigenvalues.iter().all(|&l| l == 1.0 / 16.0));
        let a = asymptotic_disjoint_spectrum(0.01, -0.02, 0.03).unwrap();
        assert!(close(a.eigenvalues.iter().sum(), 1.0, 1e-15));
        assert!(asymptotic_disjoint_spectrum(0.5, 0.0, 0.0).is_err());
    }

    #[test]
    fn asymptotic_spectrum_exact_in_z_alone() {
        for gap in 1..6 {
            let z = z_of(gap);
            let mut asym = asymptotic_disjoint_spectrum(0.0, 0.0, z).unwrap().eigenvalues;
            asym.sort_by(f64::total_cmp);
            let exact = disjoint_spectrum(80, gap, 80).unwrap().eigenvalues;
            for (a, b) in asym.iter().zip(&exact) {
                assert!(close(*a, *b, 1e-14));
            }
        }
    }

    #[test]
    fn adjacent_examples() {
        let a = adjacent_pt_negativity(1, 1).unwrap();
        assert!(close(a.negativity, 1.0 / 9.0, 1e-14));
        assert!(close(adjacent_negativity_equal(1).unwrap(), 1.0 / 9.0, 1e-14));
        for l in 1..7 {
            let general = adjacent_pt_negativity(l, l).unwrap().negativity;
            assert!(close(general, adjacent_negativity_equal(l).unwrap(), 1e-12));
        }
        let literal = adjacent_negativity_equal_with(2, 0.75).unwrap();
        assert!(close(adjacent_negativity_equal_with(1, 0.75).unwrap(), 1.0 / 9.0, 1e-14));
        assert!((literal - adjacent_negativity_equal(2).unwrap()).abs() > 0.1);
        assert!(close(adjacent_pt_negativity(2, 1).unwrap().negativity, 0.326_843, 1e-6));
        assert!(close(adjacent_pt_negativity(2, 2).unwrap().negativity, 0.483_352, 1e-6));
        let far = adjacent_pt_negativity(30, 30).unwrap();
        assert!(close(far.negativity, 0.5, 1e-12));
        assert!(close(far.log_negativity, 1.0, 1e-12));
    }

    #[test]
    fn mutual_information_values() {
        assert_eq!(mutual_information(0.0), 0.0);
        assert!(close(mutual_information(-1.0 / 3.0), (4.0f64 / 3.0).ln(), 1e-15));
        assert!(close(mutual_information(1.0 / 9.0), 0.017_372, 1e-6));
        for z in [-1.0 / 3.0, -0.1, 0.0, 1.0 / 9.0, 0.5, 1.0] {
            assert!(close(mutual_information(z), 4.0 * LN_2 - joint_entropy(z), 1e-12));
        }
    }

    #[test]
    fn centered_factors_match_plain_ones() {
        for (x1, x2, z) in [(-1.0 / 3.0, 1.0 / 9.0, -1.0 / 27.0), (0.1, -0.2, 0.3), (1.0 / 9.0, 1.0 / 9.0, -1.0)] {
            let cp = CharPolys::for_z(&PairWeights::from_x(x1, x2), z);
            for y in [0.0, 0.05, 0.1, 0.3] {
                let u = 16.0 * y - (1.0 - z);
                let plain = 4096.0 * cp.p3.eval(y);
                assert!((cp.p3_centered.eval(u) - plain).abs() < 1e-12);
                let (b, c) = cp.p2;
                let (bu, cu) = cp.p2_centered;
                assert!((u * u + bu * u + cu - 256.0 * (y * y + b * y + c)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn nearly_degenerate_long_blocks() {
        let cp = disjoint_char_polys(5, 15, 12).unwrap();
        let r = cp.p3_roots().unwrap();
        // Two roots split by about 5e-7; each satisfies the plain cubic to rounding.
        assert!(r[2] - r[1] > 4e-7 && r[2] - r[1] < 6e-7);
        for y in r {
            assert!(cp.p3.eval(y).abs() < 1e-18);
        }
    }

    #[test]
    fn close_pairs_near_one_twelfth() {
        // One long and one short or widely separated block: two roots of p3
        // split by about 1e-8 near 1/12.
        for (la, gap, lb) in [(16, 1, 17), (16, 19, 1)] {
            let r = disjoint_char_polys(la, gap, lb).unwrap().p3_roots().unwrap();
            let split = r[2] - r[1];
            assert!(split > 5e-9 && split < 1e-8, "({la},{gap},{lb}) {split}");
        }
        let r = disjoint_char_polys(16, 1, 17).unwrap().p3_roots().unwrap();
        assert!((r[1] - 0.083_333_330_271_697).abs() < 1e-15);
        assert!((r[2] - 0.083_333_337_685_557_2).abs() < 1e-15);
    }
}
