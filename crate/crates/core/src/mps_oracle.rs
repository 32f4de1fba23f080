//! Exact VBS states on small chains and rings, built from the AKLT
//! matrix-product tensors, and brute-force observables on them.
//!
//! Open chains carry a physical spin-½ at each end: site 0 and site `N+1`
//! have dimension 2 and sites `1..=N` are spin-1. Spin-1 basis order is
//! `m = +1, 0, -1`; spin-½ order is `up, down`.

use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, HermitianOperator, SpectrumReport};

/// Largest supported number of spin-1 sites.
pub const MAX_SITES: usize = 9;

/// Largest kept dimension for which a reduced density matrix is formed.
pub const MAX_KEPT_DIM: usize = 729;

/// Bulk tensors `A^m`, `m = +1, 0, -1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MpsChain {
    pub tensors: [[[f64; 2]; 2]; 3],
    /// Map applied to the left virtual index of an open chain.
    pub left_boundary: [[f64; 2]; 2],
}

impl Default for MpsChain {
    fn default() -> Self {
        let a = (2.0f64 / 3.0).sqrt();
        let b = (1.0f64 / 3.0).sqrt();
        Self {
            tensors: [
                [[0.0, a], [0.0, 0.0]],
                [[-b, 0.0], [0.0, b]],
                [[0.0, 0.0], [-a, 0.0]],
            ],
            left_boundary: [[0.0, 1.0], [-1.0, 0.0]],
        }
    }
}

impl MpsChain {
    /// `Σ_m A^m (A^m)^†`; the identity for the AKLT tensors.
    pub fn completeness(&self) -> [[f64; 2]; 2] {
        let mut out = [[0.0; 2]; 2];
        for a in &self.tensors {
            for (i, row) in out.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell += a[i][0] * a[j][0] + a[i][1] * a[j][1];
                }
            }
        }
        out
    }
}

fn mul2(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Open,
    Ring,
}

/// Normalized amplitudes in the site-major layout.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    pub amplitudes: Vec<Complex64>,
    pub site_dims: Vec<usize>,
    pub boundary: Boundary,
    /// Norm before normalization.
    pub raw_norm: f64,
}

impl StateVector {
    /// Number of spin-1 sites.
    pub fn bulk_sites(&self) -> usize {
        match self.boundary {
            Boundary::Open => self.site_dims.len() - 2,
            Boundary::Ring => self.site_dims.len(),
        }
    }

    /// Layout index of spin-1 site `k` (0-based along the chain).
    pub fn bulk_site(&self, k: usize) -> usize {
        match self.boundary {
            Boundary::Open => k + 1,
            Boundary::Ring => k,
        }
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }
}

fn check_size(n: usize, min: usize, extra: usize) -> Result<()> {
    if n < min || n > MAX_SITES {
        return Err(Error::StateTooLarge {
            sites: n,
            amplitudes: extra * 3usize.pow(n.min(20) as u32),
            limit: extra * 3usize.pow(MAX_SITES as u32),
        });
    }
    Ok(())
}

/// Depth-first products `P * A^{m_k} * ... * A^{m_n}` in lexicographic order of the configuration.
fn products(chain: &MpsChain, start: [[f64; 2]; 2], n: usize, out: &mut Vec<[[f64; 2]; 2]>) {
    if n == 0 {
        out.push(start);
        return;
    }
    for a in &chain.tensors {
        products(chain, mul2(&start, a), n - 1, out);
    }
}

fn normalize(mut amplitudes: Vec<Complex64>, site_dims: Vec<usize>, boundary: Boundary) -> Result<StateVector> {
    let raw_norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if !(raw_norm.is_finite() && raw_norm > 0.0) {
        return Err(Error::InvalidArgument(format!("state norm {raw_norm}")));
    }
    for a in &mut amplitudes {
        *a /= raw_norm;
    }
    Ok(StateVector {
        amplitudes,
        site_dims,
        boundary,
        raw_norm,
    })
}

/// Open chain `½ - 1^N - ½`, `1 <= n <= 9`.
pub fn build_open_chain(n: usize) -> Result<StateVector> {
    check_size(n, 1, 4)?;
    let chain = MpsChain::default();
    let mut prods = Vec::with_capacity(3usize.pow(n as u32));
    products(&chain, chain.left_boundary, n, &mut prods);
    let bulk = prods.len();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 4 * bulk];
    for a in 0..2 {
        for (c, p) in prods.iter().enumerate() {
            for b in 0..2 {
                amplitudes[(a * bulk + c) * 2 + b] = Complex64::new(p[a][b], 0.0);
            }
        }
    }
    let mut dims = vec![2];
    dims.extend(std::iter::repeat_n(3, n));
    dims.push(2);
    normalize(amplitudes, dims, Boundary::Open)
}

/// Periodic ring of `2 <= n <= 9` spin-1 sites.
pub fn build_ring(n: usize) -> Result<StateVector> {
    check_size(n, 2, 1)?;
    let chain = MpsChain::default();
    let mut prods = Vec::with_capacity(3usize.pow(n as u32));
    products(&chain, [[1.0, 0.0], [0.0, 1.0]], n, &mut prods);
    let amplitudes = prods
        .iter()
        .map(|p| Complex64::new(p[0][0] + p[1][1], 0.0))
        .collect();
    normalize(amplitudes, vec![3; n], Boundary::Ring)
}

/// Spin-1 operators `(S_x, S_y, S_z)`.
fn spin_one() -> [[[Complex64; 3]; 3]; 3] {
    let r = std::f64::consts::SQRT_2 / 2.0;
    let z = Complex64::new(0.0, 0.0);
    let re = |v: f64| Complex64::new(v, 0.0);
    let im = |v: f64| Complex64::new(0.0, v);
    [
        [[z, re(r), z], [re(r), z, re(r)], [z, re(r), z]],
        [[z, im(-r), z], [im(r), z, im(-r)], [z, im(r), z]],
        [[re(1.0), z, z], [z, z, z], [z, z, re(-1.0)]],
    ]
}

/// Spin-½ operators `(s_x, s_y, s_z)`.
fn spin_half() -> [[[Complex64; 2]; 2]; 3] {
    let z = Complex64::new(0.0, 0.0);
    let re = |v: f64| Complex64::new(v, 0.0);
    let im = |v: f64| Complex64::new(0.0, v);
    [
        [[z, re(0.5)], [re(0.5), z]],
        [[z, im(-0.5)], [im(0.5), z]],
        [[re(0.5), z], [z, re(-0.5)]],
    ]
}

/// Dense two-site operator on dimensions `(da, db)`, row-major over `a * db + b`.
#[derive(Clone, Debug)]
struct TwoSite {
    da: usize,
    db: usize,
    m: Vec<Complex64>,
}

fn spin_dot(a: &[Vec<Vec<Complex64>>], b: &[Vec<Vec<Complex64>>]) -> TwoSite {
    let (da, db) = (a[0].len(), b[0].len());
    let d = da * db;
    let mut m = vec![Complex64::new(0.0, 0.0); d * d];
    for k in 0..3 {
        for i in 0..d {
            for j in 0..d {
                m[i * d + j] += a[k][i / db][j / db] * b[k][i % db][j % db];
            }
        }
    }
    TwoSite { da, db, m }
}

fn as_vecs<const D: usize>(ops: [[[Complex64; D]; D]; 3]) -> Vec<Vec<Vec<Complex64>>> {
    ops.iter().map(|o| o.iter().map(|r| r.to_vec()).collect()).collect()
}

/// `(1/6)(3 S·S + (S·S)^2 + 2)`: the projector onto total spin 2 of two spin-1's.
fn bulk_term() -> TwoSite {
    let s = as_vecs(spin_one());
    let ss = spin_dot(&s, &s);
    let d = 9;
    let mut m = vec![Complex64::new(0.0, 0.0); d * d];
    for i in 0..d {
        for j in 0..d {
            let sq: Complex64 = (0..d).map(|k| ss.m[i * d + k] * ss.m[k * d + j]).sum();
            let id = if i == j { 2.0 } else { 0.0 };
            m[i * d + j] = (ss.m[i * d + j] * 3.0 + sq + id) / 6.0;
        }
    }
    TwoSite { da: 3, db: 3, m }
}

/// `(2/3)(1 + s·S)`: the projector onto total spin 3/2 of a spin-½ and a spin-1.
fn boundary_term(half_first: bool) -> TwoSite {
    let (h, s) = (as_vecs(spin_half()), as_vecs(spin_one()));
    let mut t = if half_first { spin_dot(&h, &s) } else { spin_dot(&s, &h) };
    let d = 6;
    for i in 0..d {
        for j in 0..d {
            let id = if i == j { 1.0 } else { 0.0 };
            t.m[i * d + j] = (t.m[i * d + j] + id) * (2.0 / 3.0);
        }
    }
    t
}

fn strides(site_dims: &[usize]) -> Vec<usize> {
    let mut st = vec![1; site_dims.len()];
    for k in (0..site_dims.len().saturating_sub(1)).rev() {
        st[k] = st[k + 1] * site_dims[k + 1];
    }
    st
}

/// `op` acting on sites `(i, j)` of `psi`, accumulated into `out`.
fn apply_two_site(psi: &[Complex64], dims: &[usize], op: &TwoSite, i: usize, j: usize, out: &mut [Complex64]) {
    let st = strides(dims);
    let (si, sj) = (st[i], st[j]);
    let d = op.da * op.db;
    let mut local = vec![Complex64::new(0.0, 0.0); d];
    for base in 0..psi.len() {
        if (base / si) % dims[i] != 0 || (base / sj) % dims[j] != 0 {
            continue;
        }
        for a in 0..op.da {
            for b in 0..op.db {
                local[a * op.db + b] = psi[base + a * si + b * sj];
            }
        }
        for a in 0..op.da {
            for b in 0..op.db {
                let row = a * op.db + b;
                let v: Complex64 = (0..d).map(|k| op.m[row * d + k] * local[k]).sum();
                out[base + a * si + b * sj] += v;
            }
        }
    }
}

/// Terms of the Hamiltonian as (operator, site pair).
fn hamiltonian_terms(dims: &[usize], boundary: Boundary) -> Result<Vec<(TwoSite, usize, usize)>> {
    let n = dims.len();
    let mut terms = Vec::new();
    match boundary {
        Boundary::Open => {
            if n < 3 || dims[0] != 2 || dims[n - 1] != 2 || dims[1..n - 1].iter().any(|&d| d != 3) {
                return Err(Error::InvalidArgument(format!(
                    "site dims {dims:?} are not an open chain"
                )));
            }
            terms.push((boundary_term(true), 0, 1));
            for k in 1..n - 2 {
                terms.push((bulk_term(), k, k + 1));
            }
            terms.push((boundary_term(false), n - 2, n - 1));
        }
        Boundary::Ring => {
            if n < 2 || dims.iter().any(|&d| d != 3) {
                return Err(Error::InvalidArgument(format!(
                    "site dims {dims:?} are not a spin-1 ring"
                )));
            }
            for k in 0..n {
                let next = (k + 1) % n;
                if n == 2 && k == 1 {
                    terms.push((bulk_term(), 0, 1));
                } else {
                    terms.push((bulk_term(), k, next));
                }
            }
        }
    }
    Ok(terms)
}

/// `H |psi>`.
pub fn apply_hamiltonian(psi: &[Complex64], dims: &[usize], boundary: Boundary) -> Result<Vec<Complex64>> {
    let dim: usize = dims.iter().product();
    if psi.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: psi.len(),
        });
    }
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (op, i, j) in hamiltonian_terms(dims, boundary)? {
        if i < j {
            apply_two_site(psi, dims, &op, i, j, &mut out);
        } else {
            let swapped = swap_sites(&op);
            apply_two_site(psi, dims, &swapped, j, i, &mut out);
        }
    }
    Ok(out)
}

fn swap_sites(op: &TwoSite) -> TwoSite {
    let d = op.da * op.db;
    let mut m = vec![Complex64::new(0.0, 0.0); d * d];
    let sw = |k: usize| (k % op.db) * op.da + k / op.db;
    for i in 0..d {
        for j in 0..d {
            m[sw(i) * d + sw(j)] = op.m[i * d + j];
        }
    }
    TwoSite { da: op.db, db: op.da, m }
}

/// `<psi|H|psi>` with bulk spin-2 projectors and spin-3/2 boundary projectors.
pub fn hamiltonian_residual(state: &StateVector, boundary: Boundary) -> Result<f64> {
    let h = apply_hamiltonian(&state.amplitudes, &state.site_dims, boundary)?;
    let e: Complex64 = state.amplitudes.iter().zip(&h).map(|(a, b)| a.conj() * b).sum();
    Ok(e.re / state.norm().powi(2))
}

/// Dense Hamiltonian on `n` spin-1 sites; limited to dimension 729.
pub fn hamiltonian_matrix(n: usize, boundary: Boundary) -> Result<HermitianOperator> {
    let dims = match boundary {
        Boundary::Open => {
            let mut d = vec![2];
            d.extend(std::iter::repeat_n(3, n));
            d.push(2);
            d
        }
        Boundary::Ring => vec![3; n],
    };
    let dim: usize = dims.iter().product();
    if dim > MAX_KEPT_DIM {
        return Err(Error::StateTooLarge {
            sites: n,
            amplitudes: dim * dim,
            limit: MAX_KEPT_DIM * MAX_KEPT_DIM,
        });
    }
    let mut m = Mat::<Complex64>::zeros(dim, dim);
    let mut e = vec![Complex64::new(0.0, 0.0); dim];
    for j in 0..dim {
        e[j] = Complex64::new(1.0, 0.0);
        let col = apply_hamiltonian(&e, &dims, boundary)?;
        for (i, v) in col.into_iter().enumerate() {
            m[(i, j)] = v;
        }
        e[j] = Complex64::new(0.0, 0.0);
    }
    HermitianOperator::new(m, dims)
}

/// Number of eigenvalues of the dense Hamiltonian below `tol`.
pub fn null_space_dimension(n: usize, boundary: Boundary, tol: f64) -> Result<usize> {
    let ev = linalg::eigenvalues(&hamiltonian_matrix(n, boundary)?)?;
    Ok(ev.iter().filter(|&&l| l.abs() < tol).count())
}

/// `<S^z_i S^z_j>` on layout sites `i`, `j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Correlation {
    pub value: f64,
    /// A spin-½ end site was involved and spin-½ operators were used there.
    pub spin_half: bool,
}

pub fn spin_correlation(state: &StateVector, i: usize, j: usize) -> Result<Correlation> {
    let n = state.site_dims.len();
    for s in [i, j] {
        if s >= n {
            return Err(Error::InvalidSite { site: s, sites: n });
        }
    }
    let st = strides(&state.site_dims);
    let sz = |site: usize, digit: usize| -> f64 {
        match state.site_dims[site] {
            2 => 0.5 - digit as f64,
            _ => 1.0 - digit as f64,
        }
    };
    let value = state
        .amplitudes
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let di = (k / st[i]) % state.site_dims[i];
            let dj = (k / st[j]) % state.site_dims[j];
            a.norm_sqr() * sz(i, di) * sz(j, dj)
        })
        .sum::<f64>();
    Ok(Correlation {
        value,
        spin_half: state.site_dims[i] == 2 || state.site_dims[j] == 2,
    })
}

fn kept_mask(n: usize, kept: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &s in kept {
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

/// The state as a matrix `Ψ[kept, rest]`, with kept sites in ascending order.
fn split(state: &StateVector, kept: &[usize]) -> Result<(Mat<Complex64>, Vec<usize>)> {
    let dims = &state.site_dims;
    let mask = kept_mask(dims.len(), kept)?;
    let kd: Vec<usize> = (0..dims.len()).filter(|&s| mask[s]).map(|s| dims[s]).collect();
    let dim_k: usize = kd.iter().product();
    if dim_k > MAX_KEPT_DIM {
        return Err(Error::StateTooLarge {
            sites: kd.len(),
            amplitudes: dim_k * dim_k,
            limit: MAX_KEPT_DIM * MAX_KEPT_DIM,
        });
    }
    let dim_r = state.amplitudes.len() / dim_k;
    let mut m = Mat::<Complex64>::zeros(dim_k, dim_r);
    for (idx, a) in state.amplitudes.iter().enumerate() {
        let (mut rem, mut ki, mut ri) = (idx, 0, 0);
        let mut digits = vec![0; dims.len()];
        for s in (0..dims.len()).rev() {
            digits[s] = rem % dims[s];
            rem /= dims[s];
        }
        for s in 0..dims.len() {
            if mask[s] {
                ki = ki * dims[s] + digits[s];
            } else {
                ri = ri * dims[s] + digits[s];
            }
        }
        m[(ki, ri)] = *a;
    }
    Ok((m, kd))
}

/// Reduced density matrix of the layout sites `kept`.
pub fn reduced_density(state: &StateVector, kept: &[usize]) -> Result<HermitianOperator> {
    let (m, kd) = split(state, kept)?;
    let rho = &m * m.adjoint();
    let n = rho.nrows();
    let rho = Mat::from_fn(n, n, |i, j| (rho[(i, j)] + rho[(j, i)].conj()) * 0.5);
    HermitianOperator::new(rho, kd)
}

/// `(ρ_AB, ρ_AB^{T_A})` spectra for two disjoint sets of layout sites.
pub fn entanglement_report(
    state: &StateVector,
    block_a: &[usize],
    block_b: &[usize],
) -> Result<(SpectrumReport, SpectrumReport)> {
    if let Some(&s) = block_a.iter().find(|s| block_b.contains(s)) {
        return Err(Error::DuplicateSite(s));
    }
    let mut kept: Vec<usize> = block_a.iter().chain(block_b).copied().collect();
    kept.sort_unstable();
    let rho = reduced_density(state, &kept)?;
    let positions: Vec<usize> = block_a
        .iter()
        .map(|s| kept.iter().position(|k| k == s).expect("block site is kept"))
        .collect();
    let pt = linalg::partial_transpose(&rho, &positions)?;
    Ok((SpectrumReport::of(&rho)?, SpectrumReport::of(&pt)?))
}

/// Partial-transpose spectrum of the pure state split into `block` and its
/// complement. The complement is compressed onto its Schmidt support, an
/// isometry that leaves the nonzero spectrum unchanged; `block` stays in the
/// computational basis.
pub fn pure_bipartition_pt(state: &StateVector, block: &[usize]) -> Result<SpectrumReport> {
    let rho = reduced_density(state, block)?;
    let eig = linalg::hermitian_eig(&rho)?;
    let support: Vec<usize> = (0..eig.values.len())
        .filter(|&k| eig.values[k] > 1e-14)
        .collect();
    let (da, r) = (rho.dim(), support.len());
    let mut psi = vec![Complex64::new(0.0, 0.0); da * r];
    for a in 0..da {
        for (i, &k) in support.iter().enumerate() {
            psi[a * r + i] = eig.vectors[(a, k)] * eig.values[k].sqrt();
        }
    }
    let pure = HermitianOperator::projector(&psi, vec![da, r])?;
    SpectrumReport::of(&linalg::partial_transpose(&pure, &[0])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms;
    use crate::linalg::spectrum_distance;

    #[test]
    fn tensors_are_complete() {
        let c = MpsChain::default().completeness();
        assert!((c[0][0] - 1.0).abs() < 1e-15 && (c[1][1] - 1.0).abs() < 1e-15);
        assert!(c[0][1].abs() < 1e-15 && c[1][0].abs() < 1e-15);
    }

    #[test]
    fn open_chain_single_site_is_maximally_mixed() {
        let s = build_open_chain(1).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-14);
        let rho = reduced_density(&s, &[1]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 / 3.0 } else { 0.0 };
                assert!((rho.get(i, j).re - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn size_guard() {
        assert!(matches!(build_open_chain(0), Err(Error::StateTooLarge { .. })));
        assert!(matches!(build_open_chain(10), Err(Error::StateTooLarge { .. })));
        assert!(build_ring(1).is_err());
    }

    #[test]
    fn ground_state_energy_vanishes() {
        for n in 1..6 {
            let s = build_open_chain(n).unwrap();
            assert!(hamiltonian_residual(&s, Boundary::Open).unwrap().abs() < 1e-12);
        }
        for n in 3..6 {
            let s = build_ring(n).unwrap();
            assert!(hamiltonian_residual(&s, Boundary::Ring).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn random_state_has_positive_energy() {
        let s = build_open_chain(3).unwrap();
        let mut other = s.clone();
        for (k, a) in other.amplitudes.iter_mut().enumerate() {
            *a = Complex64::new(((k * 7919) % 13) as f64 - 6.0, ((k * 104729) % 7) as f64 - 3.0);
        }
        assert!(hamiltonian_residual(&other, Boundary::Open).unwrap() > 0.1);
        assert!(hamiltonian_residual(&s, Boundary::Ring).is_err());
    }

    #[test]
    fn unique_ground_state() {
        for n in 1..4 {
            assert_eq!(null_space_dimension(n, Boundary::Open, 1e-9).unwrap(), 1);
        }
        assert_eq!(null_space_dimension(4, Boundary::Ring, 1e-9).unwrap(), 1);
    }

    #[test]
    fn ring_norm_structure() {
        for n in 2..8 {
            let s = build_ring(n).unwrap();
            let want = (1.0 + 3.0 * closed_forms::z_of(n as u32)).sqrt();
            assert!((s.raw_norm - want).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn correlations() {
        let s = build_open_chain(5).unwrap();
        let c = |i, j| spin_correlation(&s, s.bulk_site(i), s.bulk_site(j)).unwrap().value;
        assert!((c(1, 2) + 4.0 / 9.0).abs() < 1e-12);
        assert!((c(1, 3) - 4.0 / 27.0).abs() < 1e-12);
        assert!((c(2, 2) - 2.0 / 3.0).abs() < 1e-12);
        assert!(spin_correlation(&s, 0, 1).unwrap().spin_half);
    }

    #[test]
    fn disjoint_single_sites() {
        let s = build_open_chain(3).unwrap();
        let (rho, pt) = entanglement_report(&s, &[1], &[3]).unwrap();
        let mut want = vec![4.0 / 27.0; 5];
        want.extend([2.0 / 27.0; 3]);
        want.push(1.0 / 27.0);
        assert!(spectrum_distance(&rho.eigenvalues, &want) < 1e-12);
        assert!(pt.min_eigenvalue() >= -1e-12);
        assert!(entanglement_report(&s, &[1, 2], &[2]).is_err());
    }

    #[test]
    fn adjacent_single_sites() {
        let s = build_open_chain(2).unwrap();
        let (_, pt) = entanglement_report(&s, &[1], &[2]).unwrap();
        assert!((pt.negativity - 1.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn bond_cut() {
        for n in 2..5 {
            let s = build_open_chain(n).unwrap();
            let pt = pure_bipartition_pt(&s, &[0, 1]).unwrap();
            assert!(spectrum_distance(&pt.eigenvalues, &[-0.5, 0.5, 0.5, 0.5]) < 1e-12);
        }
    }
}
