//! Two-block density operators in the 16-dimensional mode basis `|A_μ, B_ρ>`.
//!
//! Coefficients are stored as integer tensors of a polynomial bilinear in the
//! two decay parameters `(x, y)`, so the mode partial transpose is an exact
//! index permutation. Floating point enters only through the evaluation point
//! and the Gram weights `D = w(L_A) ⊗ w(L_B)`. Composite index `(μ, ρ) -> 4μ + ρ`.

use crate::closed_forms::{z_of, ChannelWeights, CHANNEL_SIGNS};
use crate::error::{Error, Result};
use crate::linalg::{HermitianOperator, SpectrumReport};
use crate::pauli_algebra::{Epsilon4, METRIC, PARITY};
use num_complex::Complex64;

/// Integer rank-4 tensor over mode indices, flattened as `((a*4+b)*4+c)*4+d`.
pub type Tensor4 = [i64; 256];

fn idx(a: usize, b: usize, c: usize, d: usize) -> usize {
    ((a * 4 + b) * 4 + c) * 4 + d
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn tensor(mut f: impl FnMut(usize, usize, usize, usize) -> i64) -> Tensor4 {
    let mut t = [0; 256];
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    t[idx(a, b, c, d)] = f(a, b, c, d);
                }
            }
        }
    }
    t
}

/// Which blocks are kept and which segments are traced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockGeometry {
    /// Open chain `½ … A (gap) B … ½` with infinitely long outer segments.
    Open { la: u32, gap: u32, lb: u32 },
    /// Ring traversed as A, D, B, C.
    Periodic { la: u32, lb: u32, lc: u32, ld: u32 },
}

impl BlockGeometry {
    pub fn validate(&self) -> Result<()> {
        let (la, lb) = match *self {
            BlockGeometry::Open { la, lb, .. } => (la, lb),
            BlockGeometry::Periodic { la, lb, .. } => (la, lb),
        };
        if la == 0 || lb == 0 {
            return Err(Error::InvalidGeometry("blocks A and B need at least one site".into()));
        }
        Ok(())
    }

    pub fn block_lengths(&self) -> (u32, u32) {
        match *self {
            BlockGeometry::Open { la, lb, .. } | BlockGeometry::Periodic { la, lb, .. } => {
                (la, lb)
            }
        }
    }

    /// Ring size for periodic geometries.
    pub fn ring_size(&self) -> Option<u32> {
        match *self {
            BlockGeometry::Periodic { la, lb, lc, ld } => Some(la + lb + lc + ld),
            BlockGeometry::Open { .. } => None,
        }
    }

    /// Whether the blocks are separated on every side, so that the partial
    /// transpose is expected to be positive.
    pub fn separated(&self) -> bool {
        match *self {
            BlockGeometry::Open { gap, .. } => gap >= 1,
            BlockGeometry::Periodic { lc, ld, .. } => lc >= 1 && ld >= 1,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            BlockGeometry::Open { la, gap, lb } => format!("open:{la}-{gap}-{lb}"),
            BlockGeometry::Periodic { la, lb, lc, ld } => format!("ring:{la}-{ld}-{lb}-{lc}"),
        }
    }
}

/// `T0 + x Tx + y Ty + xy Txy`, all divided by `scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearCoefficients {
    pub constant: Tensor4,
    pub x: Tensor4,
    pub y: Tensor4,
    pub xy: Tensor4,
    pub scale: i64,
}

impl BilinearCoefficients {
    pub fn eval(&self, x: f64, y: f64) -> [f64; 256] {
        let s = self.scale as f64;
        std::array::from_fn(|k| {
            (self.constant[k] as f64
                + x * self.x[k] as f64
                + y * self.y[k] as f64
                + x * y * self.xy[k] as f64)
                / s
        })
    }

    /// Swaps the A-mode indices `μ <-> α` of every term.
    pub fn swap_a_modes(&self) -> Self {
        let swap = |t: &Tensor4| tensor(|m, r, a, b| t[idx(a, r, m, b)]);
        Self {
            constant: swap(&self.constant),
            x: swap(&self.x),
            y: swap(&self.y),
            xy: swap(&self.xy),
            scale: self.scale,
        }
    }

    /// The same polynomial evaluated at `(-x, -y)`.
    pub fn negate_parameters(&self) -> Self {
        Self {
            constant: self.constant,
            x: self.x.map(|v| -v),
            y: self.y.map(|v| -v),
            xy: self.xy,
            scale: self.scale,
        }
    }
}

fn s_sign(m: usize) -> i64 {
    CHANNEL_SIGNS[m]
}

/// `S_μα = (s_μ + s_α) / 2`, always an integer.
pub fn s_matrix(m: usize, a: usize) -> i64 {
    (s_sign(m) + s_sign(a)) / 2
}

/// Coefficients of the open-chain operator, linear in `z` (`y` unused):
/// `δ_μα δ_ρβ - z[δ_μρ δ_αβ - δ_ρα δ_μβ] S_μα + z ε_αβμρ (S_ρβ - S_μα)/2`.
pub fn open_coefficients() -> BilinearCoefficients {
    let eps = Epsilon4::calibrated();
    BilinearCoefficients {
        constant: tensor(|m, r, a, b| delta(m, a) * delta(r, b)),
        x: tensor(|m, r, a, b| {
            -(delta(m, r) * delta(a, b) - delta(r, a) * delta(m, b)) * s_matrix(m, a)
                + eps.get(a, b, m, r) * (s_matrix(r, b) - s_matrix(m, a)) / 2
        }),
        y: [0; 256],
        xy: [0; 256],
        scale: 1,
    }
}

/// Ring coefficients in `x = z(L_D)`, `y = z(L_C)`, scaled by 4; the trace-one
/// operator additionally carries `1 / (1 + 3 z(N))`.
pub fn ring_coefficients() -> BilinearCoefficients {
    let eps = Epsilon4::calibrated();
    let s = s_sign;
    let exchange = |m: usize, r: usize, a: usize, b: usize| {
        2 * (s(a) + s(m)) * delta(a, r) * delta(m, b) - 2 * (s(m) + s(a)) * delta(m, r) * delta(a, b)
    };
    let antisym = |m: usize, r: usize, a: usize, b: usize| {
        eps.get(a, b, m, r) * (s(r) - s(m) + s(b) - s(a))
    };
    BilinearCoefficients {
        constant: tensor(|m, r, a, b| 4 * delta(m, a) * delta(r, b)),
        x: tensor(|m, r, a, b| exchange(m, r, a, b) + antisym(m, r, a, b)),
        y: tensor(|m, r, a, b| exchange(m, r, a, b) - antisym(m, r, a, b)),
        xy: tensor(|m, r, a, b| {
            4 * (s(a) * s(b) + s(a) + s(b)) * delta(m, a) * delta(r, b)
                - 4 * (s(a) + s(m)) * delta(a, r) * delta(m, b)
                - 4 * (s(m) + s(a)) * delta(m, r) * delta(a, b)
        }),
        scale: 4,
    }
}

/// Density operator of two blocks in the mode basis.
#[derive(Clone, Debug, PartialEq)]
pub struct EffectiveDensityOperator {
    pub geometry: BlockGeometry,
    pub terms: BilinearCoefficients,
    /// Evaluation point `(x, y)`.
    pub point: (f64, f64),
    /// Extra scalar factor on the coefficients.
    pub prefactor: f64,
    /// `w_μ(L_A) w_ρ(L_B)` at composite index `4μ + ρ`.
    pub gram: [f64; 16],
    /// Whether the A modes have been transposed.
    pub transposed: bool,
}

fn gram(la: u32, lb: u32) -> [f64; 16] {
    let (a, b) = (ChannelWeights::for_length(la).w, ChannelWeights::for_length(lb).w);
    std::array::from_fn(|k| a[k / 4] * b[k % 4])
}

impl EffectiveDensityOperator {
    /// The unnormalized-basis coefficient matrix `C[(μρ), (αβ)]`, row-major 16x16.
    pub fn coefficients(&self) -> [f64; 256] {
        let (x, y) = self.point;
        self.terms.eval(x, y).map(|v| v * self.prefactor)
    }

    /// `D^{1/2} C D^{1/2}` as a Hermitian operator on two 4-level sites.
    pub fn normalized(&self) -> HermitianOperator {
        let c = self.coefficients();
        let d = self.gram.map(f64::sqrt);
        HermitianOperator::from_fn(vec![4, 4], |i, j| {
            Complex64::new(d[i] * c[i * 16 + j] * d[j], 0.0)
        })
        .expect("coefficient tensors are symmetric")
    }

    pub fn spectrum(&self) -> Result<SpectrumReport> {
        SpectrumReport::of(&self.normalized())
    }
}

/// Blocks of lengths `la`, `lb` separated by `gap >= 1` sites of an open chain.
pub fn rho_ab_open(la: u32, gap: u32, lb: u32) -> Result<EffectiveDensityOperator> {
    let geometry = BlockGeometry::Open { la, gap, lb };
    geometry.validate()?;
    if gap == 0 {
        return Err(Error::InvalidGeometry(
            "gap 0 is the adjacent case; use rho_ab_adjacent".into(),
        ));
    }
    Ok(open_operator(geometry, z_of(gap)))
}

/// Adjacent blocks: the open-chain operator at `z = 1`.
pub fn rho_ab_adjacent(la: u32, lb: u32) -> Result<EffectiveDensityOperator> {
    let geometry = BlockGeometry::Open { la, gap: 0, lb };
    geometry.validate()?;
    Ok(open_operator(geometry, 1.0))
}

fn open_operator(geometry: BlockGeometry, z: f64) -> EffectiveDensityOperator {
    let (la, lb) = geometry.block_lengths();
    EffectiveDensityOperator {
        geometry,
        terms: open_coefficients(),
        point: (z, 0.0),
        prefactor: 1.0,
        gram: gram(la, lb),
        transposed: false,
    }
}

/// Blocks A and B on a ring `A, D, B, C`. Zero-length gaps are accepted.
pub fn rho_ab_pbc(la: u32, lb: u32, lc: u32, ld: u32) -> Result<EffectiveDensityOperator> {
    let geometry = BlockGeometry::Periodic { la, lb, lc, ld };
    geometry.validate()?;
    let zn = z_of(la + lb + lc + ld);
    Ok(EffectiveDensityOperator {
        geometry,
        terms: ring_coefficients(),
        point: (z_of(ld), z_of(lc)),
        prefactor: 1.0 / (1.0 + 3.0 * zn),
        gram: gram(la, lb),
        transposed: false,
    })
}

/// Transposes the A modes (`μ <-> α`) of the coefficient tensor; Gram weights
/// are unchanged.
pub fn mode_partial_transpose(op: &EffectiveDensityOperator) -> EffectiveDensityOperator {
    EffectiveDensityOperator {
        terms: op.terms.swap_a_modes(),
        transposed: !op.transposed,
        ..op.clone()
    }
}

/// Block to trace out in [`mode_partial_trace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    A,
    B,
}

/// Reduced 4x4 operator of the block that is kept.
pub fn mode_partial_trace(op: &EffectiveDensityOperator, over: Block) -> HermitianOperator {
    let full = op.normalized();
    HermitianOperator::from_fn(vec![4], |i, j| match over {
        Block::B => (0..4).map(|r| full.get(4 * i + r, 4 * j + r)).sum(),
        Block::A => (0..4).map(|m| full.get(4 * m + i, 4 * m + j)).sum(),
    })
    .expect("partial trace of a Hermitian operator")
}

/// Spectral measures of a two-block operator.
#[derive(Clone, Debug, PartialEq)]
pub struct Measures {
    pub rho: SpectrumReport,
    pub partial_transpose: SpectrumReport,
    pub entropy_a: f64,
    pub entropy_b: f64,
    /// `S[A] + S[B] - S[A,B]`.
    pub mutual_information: f64,
}

pub fn measures(op: &EffectiveDensityOperator) -> Result<Measures> {
    let rho = op.spectrum()?;
    let partial_transpose = mode_partial_transpose(op).spectrum()?;
    let entropy_a = SpectrumReport::of(&mode_partial_trace(op, Block::B))?.entropy;
    let entropy_b = SpectrumReport::of(&mode_partial_trace(op, Block::A))?.entropy;
    Ok(Measures {
        mutual_information: entropy_a + entropy_b - rho.entropy,
        rho,
        partial_transpose,
        entropy_a,
        entropy_b,
    })
}

/// Spectra of the two boundary spin-½'s with `l_mid` bulk sites traced out:
/// `{w_μ}` and, for the partial transpose, `{w_μ - (-1)^μ (w_2 - w_1)/2}`.
pub fn rho_ce_spectra(l_mid: u32) -> Result<(SpectrumReport, SpectrumReport)> {
    if l_mid == 0 {
        return Err(Error::InvalidGeometry(
            "l_mid = 0 is the pure bond bipartition".into(),
        ));
    }
    let w = ChannelWeights::for_length(l_mid).w;
    let half = (w[2] - w[1]) / 2.0;
    let pt = std::array::from_fn::<f64, 4, _>(|m| w[m] - PARITY[m] as f64 * half);
    Ok((
        SpectrumReport::from_eigenvalues(w.to_vec()),
        SpectrumReport::from_eigenvalues(pt.to_vec()),
    ))
}

/// `M_μνρσ = (-1)^ν g_ν (δ_μν δ_ρσ + δ_νρ δ_μσ - δ_νσ δ_μρ + ε_μνρσ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTensor {
    pub values: Tensor4,
}

impl Default for MTensor {
    fn default() -> Self {
        let eps = Epsilon4::calibrated();
        Self {
            values: tensor(|m, n, r, s| {
                PARITY[n]
                    * METRIC[n]
                    * (delta(m, n) * delta(r, s) + delta(n, r) * delta(m, s)
                        - delta(n, s) * delta(m, r)
                        + eps.get(m, n, r, s))
            }),
        }
    }
}

impl MTensor {
    pub fn get(&self, m: usize, n: usize, r: usize, s: usize) -> i64 {
        self.values[idx(m, n, r, s)]
    }

    /// `Σ_νσ M_μνρσ M_ανβσ u_ν v_σ`, flattened as `C[(μρ), (αβ)]`.
    pub fn contract(&self, u: [f64; 4], v: [f64; 4]) -> [f64; 256] {
        let mut out = [0.0; 256];
        for m in 0..4 {
            for r in 0..4 {
                for a in 0..4 {
                    for b in 0..4 {
                        let mut acc = 0.0;
                        for n in 0..4 {
                            for s in 0..4 {
                                acc += (self.get(m, n, r, s) * self.get(a, n, b, s)) as f64
                                    * u[n]
                                    * v[s];
                            }
                        }
                        out[idx(m, r, a, b)] = acc;
                    }
                }
            }
        }
        out
    }
}

/// Weights on the four corner operators `(x, y) ∈ {1, -1/3}^2`, ordered
/// `(1,1), (-1/3,1), (1,-1/3), (-1/3,-1/3)`, expressing the partial transpose
/// of a ring operator as a mixture of physical ones.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvexityWeights {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

/// Corner points matching the order of [`ConvexityWeights`].
pub const CORNERS: [(f64, f64); 4] = [
    (1.0, 1.0),
    (-1.0 / 3.0, 1.0),
    (1.0, -1.0 / 3.0),
    (-1.0 / 3.0, -1.0 / 3.0),
];

impl ConvexityWeights {
    /// Bilinear interpolation of `(-z_d, -z_c)` between the corners.
    pub fn bilinear(lc: u32, ld: u32) -> Self {
        let ax = (1.0 - 3.0 * z_of(ld)) / 4.0;
        let ay = (1.0 - 3.0 * z_of(lc)) / 4.0;
        Self {
            alpha: ax * ay,
            beta: (1.0 - ax) * ay,
            gamma: ax * (1.0 - ay),
            delta: (1.0 - ax) * (1.0 - ay),
        }
    }

    /// The closed-form alternative `α = 5/32 + 9(z_c z_d - z_c - z_d)/32`,
    /// `β = 3/32 + (9z_d - 15z_c + 9z_c z_d)/32`, `γ = 3/32 + (9z_c - 15z_d - 9z_c z_d)/32`,
    /// with `δ` fixed by normalization.
    pub fn published(lc: u32, ld: u32) -> Self {
        let (zc, zd) = (z_of(lc), z_of(ld));
        let alpha = 5.0 / 32.0 + 9.0 / 32.0 * (zc * zd - zc - zd);
        let beta = 3.0 / 32.0 + (9.0 * zd - 15.0 * zc + 9.0 * zc * zd) / 32.0;
        let gamma = 3.0 / 32.0 + (9.0 * zc - 15.0 * zd - 9.0 * zc * zd) / 32.0;
        Self {
            alpha,
            beta,
            gamma,
            delta: 1.0 - alpha - beta - gamma,
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }

    pub fn in_unit_interval(&self) -> bool {
        self.as_array().iter().all(|w| (0.0..=1.0).contains(w))
    }

    /// Largest deviation of the mixture's `(x, y, xy)` moments from those of
    /// the point `(-z_d, -z_c)`; zero when the mixture reproduces any
    /// bilinear function at that point.
    pub fn moment_error(&self, lc: u32, ld: u32) -> f64 {
        let (tx, ty) = (-z_of(ld), -z_of(lc));
        let w = self.as_array();
        let m = |f: &dyn Fn(f64, f64) -> f64| -> f64 {
            CORNERS.iter().zip(w).map(|(&(x, y), wk)| wk * f(x, y)).sum()
        };
        [
            (m(&|_, _| 1.0) - 1.0).abs(),
            (m(&|x, _| x) - tx).abs(),
            (m(&|_, y| y) - ty).abs(),
            (m(&|x, y| x * y) - tx * ty).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Largest elementwise gap between the transposed ring coefficients and the
/// weighted sum of corner coefficients.
pub fn convexity_residual(weights: &ConvexityWeights, lc: u32, ld: u32) -> f64 {
    let terms = ring_coefficients();
    let target = terms.swap_a_modes().eval(z_of(ld), z_of(lc));
    let corners: Vec<[f64; 256]> = CORNERS.iter().map(|&(x, y)| terms.eval(x, y)).collect();
    let w = weights.as_array();
    (0..256)
        .map(|k| {
            let mix: f64 = corners.iter().zip(w).map(|(c, wk)| wk * c[k]).sum();
            (mix - target[k]).abs()
        })
        .fold(0.0, f64::max)
}
