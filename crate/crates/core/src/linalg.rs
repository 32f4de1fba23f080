//! Dense Hermitian operators on tensor-product spaces.
//!
//! Multi-site indices are site-major: the leftmost site varies slowest.

use faer::{Mat, Side};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Maximum |A - A^dagger| accepted when constructing a [`HermitianOperator`].
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Eigenvalues in (-CLAMP_TOL, CLAMP_TOL) are treated as zero by the spectral measures.
pub const CLAMP_TOL: f64 = 1e-12;

/// A Hermitian matrix acting on a tensor product of local spaces.
#[derive(Clone, Debug)]
pub struct HermitianOperator {
    matrix: Mat<Complex64>,
    site_dims: Vec<usize>,
}

impl HermitianOperator {
    /// Wraps `matrix`, checking shape against `site_dims` and Hermiticity.
    pub fn new(matrix: Mat<Complex64>, site_dims: Vec<usize>) -> Result<Self> {
        let dim: usize = site_dims.iter().product();
        if site_dims.contains(&0) {
            return Err(Error::InvalidArgument("site dimension 0".into()));
        }
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: matrix.nrows().max(matrix.ncols()),
            });
        }
        let (max_asymmetry, row, col) = max_asymmetry(&matrix);
        if max_asymmetry > HERMITICITY_TOL {
            return Err(Error::NotHermitian {
                max_asymmetry,
                row,
                col,
            });
        }
        Ok(Self { matrix, site_dims })
    }

    pub fn from_fn(
        site_dims: Vec<usize>,
        f: impl FnMut(usize, usize) -> Complex64,
    ) -> Result<Self> {
        let dim = site_dims.iter().product();
        Self::new(Mat::from_fn(dim, dim, f), site_dims)
    }

    /// Builds an operator from a real symmetric row-major matrix.
    pub fn from_real(site_dims: Vec<usize>, entries: &[f64]) -> Result<Self> {
        let dim: usize = site_dims.iter().product();
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        Self::from_fn(site_dims, |i, j| Complex64::new(entries[i * dim + j], 0.0))
    }

    pub fn identity(site_dims: Vec<usize>) -> Self {
        let dim = site_dims.iter().product();
        Self {
            matrix: Mat::identity(dim, dim),
            site_dims,
        }
    }

    pub fn diagonal(site_dims: Vec<usize>, diag: &[f64]) -> Result<Self> {
        let dim: usize = site_dims.iter().product();
        if diag.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: diag.len(),
            });
        }
        Self::from_fn(site_dims, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// The projector |psi><psi| (not normalized).
    pub fn projector(amplitudes: &[Complex64], site_dims: Vec<usize>) -> Result<Self> {
        let dim: usize = site_dims.iter().product();
        if amplitudes.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: amplitudes.len(),
            });
        }
        Ok(Self {
            matrix: Mat::from_fn(dim, dim, |i, j| amplitudes[i] * amplitudes[j].conj()),
            site_dims,
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn site_dims(&self) -> &[usize] {
        &self.site_dims
    }

    pub fn matrix(&self) -> &Mat<Complex64> {
        &self.matrix
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.matrix[(i, i)].re).sum()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            matrix: Mat::from_fn(self.dim(), self.dim(), |i, j| self.matrix[(i, j)] * factor),
            site_dims: self.site_dims.clone(),
        }
    }

    /// Kronecker product `self ⊗ other`; site lists are concatenated.
    pub fn kron(&self, other: &Self) -> Self {
        let db = other.dim();
        let dim = self.dim() * db;
        let mut site_dims = self.site_dims.clone();
        site_dims.extend_from_slice(&other.site_dims);
        Self {
            matrix: Mat::from_fn(dim, dim, |i, j| {
                self.matrix[(i / db, j / db)] * other.matrix[(i % db, j % db)]
            }),
            site_dims,
        }
    }

    /// Conjugation `U A U^dagger`; `u` must be unitary of the same dimension.
    pub fn conjugated(&self, u: &Mat<Complex64>) -> Result<Self> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: u.nrows(),
            });
        }
        let m = u * &self.matrix * u.adjoint();
        Ok(Self {
            matrix: hermitize(m),
            site_dims: self.site_dims.clone(),
        })
    }

    /// Largest absolute elementwise difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                worst = worst.max((self.matrix[(i, j)] - other.matrix[(i, j)]).norm());
            }
        }
        worst
    }
}

fn max_asymmetry(m: &Mat<Complex64>) -> (f64, usize, usize) {
    let mut worst = (0.0, 0, 0);
    for j in 0..m.ncols() {
        for i in 0..=j.min(m.nrows().saturating_sub(1)) {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            if d > worst.0 {
                worst = (d, i, j);
            }
        }
    }
    worst
}

/// Averages `m` with its adjoint to remove round-off asymmetry.
fn hermitize(m: Mat<Complex64>) -> Mat<Complex64> {
    let n = m.nrows();
    Mat::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5)
}

/// Eigenvalues (ascending) and orthonormal eigenvectors, one per column.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Mat<Complex64>,
}

impl Eigen {
    /// `V diag(values) V^dagger`.
    pub fn reconstruct(&self) -> Mat<Complex64> {
        let n = self.values.len();
        let scaled = Mat::from_fn(n, n, |i, j| self.vectors[(i, j)] * self.values[j]);
        scaled * self.vectors.adjoint()
    }
}

pub fn hermitian_eig(op: &HermitianOperator) -> Result<Eigen> {
    let evd = op
        .matrix
        .self_adjoint_eigen(Side::Lower)
        .map_err(|_| Error::EigenFailure)?;
    let s = evd.S().column_vector();
    let values = (0..op.dim()).map(|i| s[i].re).collect();
    Ok(Eigen {
        values,
        vectors: evd.U().to_owned(),
    })
}

/// Eigenvalues only, ascending.
pub fn eigenvalues(op: &HermitianOperator) -> Result<Vec<f64>> {
    op.matrix
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|_| Error::EigenFailure)
}

fn validate_sites(sites: &[usize], n: usize) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &s in sites {
        if s >= n {
            return Err(Error::InvalidSite { site: s, sites: n });
        }
        if mask[s] {
            return Err(Error::DuplicateSite(s));
        }
        mask[s] = true;
    }
    Ok(mask)
}

fn strides(site_dims: &[usize]) -> Vec<usize> {
    let mut strides = vec![1; site_dims.len()];
    for k in (0..site_dims.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * site_dims[k + 1];
    }
    strides
}

/// Full-space offsets of every basis state of the sub-register `sites`.
fn offsets(site_dims: &[usize], strides: &[usize], sites: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize];
    for &s in sites {
        let mut next = Vec::with_capacity(out.len() * site_dims[s]);
        for &o in &out {
            for d in 0..site_dims[s] {
                next.push(o + d * strides[s]);
            }
        }
        out = next;
    }
    out
}

/// Traces out every site not in `kept_sites`; the result lists kept sites in ascending order.
/// An empty kept set yields the 1x1 operator holding the trace.
pub fn partial_trace(op: &HermitianOperator, kept_sites: &[usize]) -> Result<HermitianOperator> {
    let n = op.site_dims.len();
    let mask = validate_sites(kept_sites, n)?;
    let kept: Vec<usize> = (0..n).filter(|&s| mask[s]).collect();
    let traced: Vec<usize> = (0..n).filter(|&s| !mask[s]).collect();
    let st = strides(&op.site_dims);
    let ko = offsets(&op.site_dims, &st, &kept);
    let to = offsets(&op.site_dims, &st, &traced);
    let m = &op.matrix;
    let matrix = Mat::from_fn(ko.len(), ko.len(), |i, j| {
        to.iter()
            .map(|&t| m[(ko[i] + t, ko[j] + t)])
            .sum::<Complex64>()
    });
    Ok(HermitianOperator {
        matrix,
        site_dims: kept.iter().map(|&s| op.site_dims[s]).collect(),
    })
}

/// Transposes the local indices of `transposed_sites` in the computational basis.
pub fn partial_transpose(
    op: &HermitianOperator,
    transposed_sites: &[usize],
) -> Result<HermitianOperator> {
    let n = op.site_dims.len();
    let mask = validate_sites(transposed_sites, n)?;
    let st = strides(&op.site_dims);
    let part: Vec<usize> = (0..op.dim())
        .map(|idx| {
            (0..n)
                .filter(|&s| mask[s])
                .map(|s| (idx / st[s]) % op.site_dims[s] * st[s])
                .sum()
        })
        .collect();
    let m = &op.matrix;
    let matrix = Mat::from_fn(op.dim(), op.dim(), |i, j| {
        m[(i - part[i] + part[j], j - part[j] + part[i])]
    });
    Ok(HermitianOperator {
        matrix,
        site_dims: op.site_dims.clone(),
    })
}

/// Spectral summary of a (possibly non-positive) unit-trace operator.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub trace: f64,
    /// Sum of |lambda| over lambda < -CLAMP_TOL.
    pub negativity: f64,
    /// log2 of the trace norm.
    pub log_negativity: f64,
    /// Von Neumann entropy, natural log.
    pub entropy: f64,
    pub purity: f64,
}

impl SpectrumReport {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        let trace = eigenvalues.iter().sum();
        let negativity = eigenvalues
            .iter()
            .filter(|&&l| l < -CLAMP_TOL)
            .fold(0.0, |acc, l| acc - l);
        let trace_norm: f64 = eigenvalues
            .iter()
            .filter(|l| l.abs() >= CLAMP_TOL)
            .map(|l| l.abs())
            .sum();
        let entropy = eigenvalues
            .iter()
            .filter(|&&l| l > CLAMP_TOL)
            .fold(0.0, |acc, &l| acc - l * l.ln());
        let purity = eigenvalues.iter().map(|l| l * l).sum();
        Self {
            eigenvalues,
            trace,
            negativity,
            log_negativity: trace_norm.log2(),
            entropy,
            purity,
        }
    }

    pub fn of(op: &HermitianOperator) -> Result<Self> {
        Ok(Self::from_eigenvalues(eigenvalues(op)?))
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// Eigenvalues with |lambda| above `tol`, ascending.
    pub fn nonzero(&self, tol: f64) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .copied()
            .filter(|l| l.abs() > tol)
            .collect()
    }

    /// The entanglement spectrum `-ln lambda` over the eigenvalues above the clamp.
    pub fn entanglement_spectrum(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .rev()
            .filter(|&&l| l > CLAMP_TOL)
            .map(|l| -l.ln())
            .collect()
    }

    /// Runs of eigenvalues within `tol` of the run's first member, as (value, multiplicity).
    pub fn grouped(&self, tol: f64) -> Vec<(f64, usize)> {
        group_values(&self.eigenvalues, tol)
    }
}

/// Groups sorted values into (first value, run length) pairs.
pub fn group_values(sorted: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &v in sorted {
        match out.last_mut() {
            Some((head, count)) if (v - *head).abs() <= tol => *count += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Pads both lists with zeros to a common length, sorts, and returns the
/// largest elementwise difference.
pub fn spectrum_distance(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len().max(b.len());
    let pad = |v: &[f64]| {
        let mut out = v.to_vec();
        out.resize(n, 0.0);
        out.sort_by(f64::total_cmp);
        out
    };
    let (a, b) = (pad(a), pad(b));
    a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
