//! Exact σ-matrix algebra over the Gaussian integers.
//!
//! `σ = (iI, σ1, σ2, σ3)` and `σ̄ = (-iI, σ1, σ2, σ3)`. All checks are exact:
//! residuals are integers and a passing identity has residual 0.

use std::fmt;
use std::sync::OnceLock;

use num_complex::Complex;

use crate::error::{Error, Result};

/// Gaussian integer.
pub type Gi = Complex<i64>;

/// 2x2 matrix over the Gaussian integers, row-major.
pub type Mat2 = [[Gi; 2]; 2];

/// The sign `(-1)^μ` realised as an explicit vector.
pub const PARITY: [i64; 4] = [1, -1, 1, -1];

/// Diagonal of the metric `g`.
pub const METRIC: [i64; 4] = [-1, 1, 1, 1];

const ZERO: Gi = Complex::new(0, 0);
const ONE: Gi = Complex::new(1, 0);
const I: Gi = Complex::new(0, 1);

fn g(re: i64, im: i64) -> Gi {
    Complex::new(re, im)
}

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn mat_sub(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [a[0][0] - b[0][0], a[0][1] - b[0][1]],
        [a[1][0] - b[1][0], a[1][1] - b[1][1]],
    ]
}

fn mat_scale(a: &Mat2, s: Gi) -> Mat2 {
    [[a[0][0] * s, a[0][1] * s], [a[1][0] * s, a[1][1] * s]]
}

fn mat_trace(a: &Mat2) -> Gi {
    a[0][0] + a[1][1]
}

fn identity2() -> Mat2 {
    [[ONE, ZERO], [ZERO, ONE]]
}

/// The two four-vectors of 2x2 matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaBasis {
    pub sigma: [Mat2; 4],
    pub sigma_bar: [Mat2; 4],
}

impl Default for SigmaBasis {
    fn default() -> Self {
        let s1 = [[ZERO, ONE], [ONE, ZERO]];
        let s2 = [[ZERO, -I], [I, ZERO]];
        let s3 = [[ONE, ZERO], [ZERO, -ONE]];
        let i2 = identity2();
        Self {
            sigma: [mat_scale(&i2, I), s1, s2, s3],
            sigma_bar: [mat_scale(&i2, -I), s1, s2, s3],
        }
    }
}

impl SigmaBasis {
    /// Checks `Tr(σ_μ σ̄_ν) = 2δ`, `σ2 σ_μ σ2 = (-1)^μ σ_μ` and
    /// `σ_μ σ̄_ν + σ_ν σ̄_μ = 2δ I`, all exactly.
    pub fn check_invariants(&self) -> Result<()> {
        let i2 = identity2();
        for mu in 0..4 {
            let conj = mat_mul(&mat_mul(&self.sigma[2], &self.sigma[mu]), &self.sigma[2]);
            if conj != mat_scale(&self.sigma[mu], g(PARITY[mu], 0)) {
                return Err(Error::IdentityMismatch(format!(
                    "sigma2 conjugation fails at mu={mu}"
                )));
            }
            for nu in 0..4 {
                let delta = i64::from(mu == nu);
                let tr = mat_trace(&mat_mul(&self.sigma[mu], &self.sigma_bar[nu]));
                if tr != g(2 * delta, 0) {
                    return Err(Error::IdentityMismatch(format!(
                        "Tr(sigma_{mu} sigma_bar_{nu}) = {tr}"
                    )));
                }
                let a = mat_mul(&self.sigma[mu], &self.sigma_bar[nu]);
                let b = mat_mul(&self.sigma[nu], &self.sigma_bar[mu]);
                let sum = [
                    [a[0][0] + b[0][0], a[0][1] + b[0][1]],
                    [a[1][0] + b[1][0], a[1][1] + b[1][1]],
                ];
                if sum != mat_scale(&i2, g(2 * delta, 0)) {
                    return Err(Error::IdentityMismatch(format!(
                        "anticommutator fails at ({mu}, {nu})"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn basis() -> &'static SigmaBasis {
    static BASIS: OnceLock<SigmaBasis> = OnceLock::new();
    BASIS.get_or_init(SigmaBasis::default)
}

/// Sign convention for `ε_0123`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.sign())
    }
}

/// Totally antisymmetric rank-4 symbol with a chosen orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Epsilon4 {
    pub orientation: Orientation,
}

impl Epsilon4 {
    pub fn new(orientation: Orientation) -> Self {
        Self { orientation }
    }

    /// The calibrated symbol used throughout the crate.
    pub fn calibrated() -> Self {
        Self::new(epsilon_orientation())
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> i64 {
        permutation_sign([a, b, c, d]) * self.orientation.sign()
    }
}

/// Sign of `idx` as a permutation of (0,1,2,3), or 0 when an index repeats.
fn permutation_sign(idx: [usize; 4]) -> i64 {
    let mut sign = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if idx[i] == idx[j] {
                return 0;
            }
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `Tr(σ_μ σ̄_ν σ_ρ σ̄_λ)` by direct multiplication.
pub fn trace4(mu: usize, nu: usize, rho: usize, lam: usize) -> Gi {
    let b = basis();
    let p = mat_mul(
        &mat_mul(&b.sigma[mu], &b.sigma_bar[nu]),
        &mat_mul(&b.sigma[rho], &b.sigma_bar[lam]),
    );
    mat_trace(&p)
}

/// `2(δ_μν δ_ρλ + δ_μλ δ_ρν - δ_μρ δ_νλ + ε_μνρλ)`.
pub fn closed_form_trace4(
    mu: usize,
    nu: usize,
    rho: usize,
    lam: usize,
    orientation: Orientation,
) -> Gi {
    let d = |a: usize, b: usize| i64::from(a == b);
    let eps = Epsilon4::new(orientation).get(mu, nu, rho, lam);
    g(
        2 * (d(mu, nu) * d(rho, lam) + d(mu, lam) * d(rho, nu) - d(mu, rho) * d(nu, lam) + eps),
        0,
    )
}

fn all_tuples4() -> impl Iterator<Item = [usize; 4]> {
    (0..256).map(|k| [k >> 6, (k >> 4) & 3, (k >> 2) & 3, k & 3])
}

/// Index tuples on which the closed form disagrees with direct multiplication.
pub fn orientation_mismatches(orientation: Orientation) -> Vec<[usize; 4]> {
    all_tuples4()
        .filter(|t| trace4(t[0], t[1], t[2], t[3]) != closed_form_trace4(t[0], t[1], t[2], t[3], orientation))
        .collect()
}

/// The unique orientation for which the closed-form trace is exact on all 256 tuples.
pub fn decide_epsilon_orientation() -> Result<Orientation> {
    let pos = orientation_mismatches(Orientation::Positive);
    let neg = orientation_mismatches(Orientation::Negative);
    match (pos.is_empty(), neg.is_empty()) {
        (true, false) => Ok(Orientation::Positive),
        (false, true) => Ok(Orientation::Negative),
        _ => Err(Error::IdentityMismatch(format!(
            "no unique epsilon orientation: +1 mismatches {:?}, -1 mismatches {:?}",
            pos, neg
        ))),
    }
}

/// Cached result of [`decide_epsilon_orientation`].
pub fn epsilon_orientation() -> Orientation {
    static ORIENTATION: OnceLock<Orientation> = OnceLock::new();
    *ORIENTATION.get_or_init(|| {
        decide_epsilon_orientation().expect("the four-trace formula admits one orientation")
    })
}

/// Outcome of an exhaustive coefficient-level identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Largest |LHS - RHS| after clearing denominators.
    pub max_residual: i64,
    pub tuples_checked: usize,
    /// First failing tuple with both sides, if any.
    pub first_failure: Option<(Vec<usize>, Gi, Gi)>,
}

impl IdentityCheck {
    fn run(arity: usize, mut sides: impl FnMut(&[usize]) -> (Gi, Gi)) -> Self {
        let mut idx = vec![0usize; arity];
        let total = 1usize << arity;
        let mut max_residual = 0;
        let mut first_failure = None;
        for k in 0..total {
            for (pos, slot) in idx.iter_mut().enumerate() {
                *slot = (k >> (arity - 1 - pos)) & 1;
            }
            let (lhs, rhs) = sides(&idx);
            let r = (lhs - rhs).l1_norm();
            if r > 0 && first_failure.is_none() {
                first_failure = Some((idx.clone(), lhs, rhs));
            }
            max_residual = max_residual.max(r);
        }
        Self {
            holds: max_residual == 0,
            max_residual,
            tuples_checked: total,
            first_failure,
        }
    }
}

/// `Σ_μ (-1)^μ (σ_μ)_ab (σ_μ)_cd = -2 δ_ac δ_bd` over all 16 tuples.
pub fn verify_bilinear_completeness() -> IdentityCheck {
    let s = &basis().sigma;
    IdentityCheck::run(4, |t| {
        let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
        let lhs: Gi = (0..4).map(|m| s[m][a][b] * s[m][c][d] * PARITY[m]).sum();
        let rhs = g(-2 * i64::from(a == c && b == d), 0);
        (lhs, rhs)
    })
}

/// Integer coefficient `(-1)^ν g_ν Tr(σ_μ σ̄_ν σ_ρ σ̄_λ)` evaluated with the calibrated
/// closed form.
pub fn ring_coefficient(mu: usize, nu: usize, rho: usize, lam: usize) -> i64 {
    let t = closed_form_trace4(mu, nu, rho, lam, epsilon_orientation());
    PARITY[nu] * METRIC[nu] * t.re
}

/// Result of checking a product of `n` boundary singlets against its expansion in
/// ring monomials of σ matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryIdentity {
    pub n: usize,
    /// The identity with the prefactor that makes it exact.
    pub corrected: IdentityCheck,
    /// Exact prefactor as (numerator, denominator).
    pub prefactor: (i64, i64),
    /// The identity with the conventional printed prefactor.
    pub printed: IdentityCheck,
    pub printed_prefactor: (i64, i64),
    /// The printed form equals the exact one up to an overall sign.
    pub printed_differs_by_sign: bool,
}

/// Checks `(σ2)_ab (σ2)_cd ...` (n factors) against its ring-monomial expansion,
/// exhaustively over all `2^(2n)` boundary index tuples.
///
/// * n = 2: `(σ2)_ab (σ2)_cd = -1/2 Σ_μ (σ_μ)_bc (σ_μ)_ad`
/// * n = 3: `Π = k Σ (-1)^ν g_ν Tr(σ_μ σ̄_ν σ_2 σ̄_λ) (σ_μ)_bc (σ_ν)_de (σ_λ)_af`
/// * n = 4: `Π = k Σ (-1)^ν g_ν Tr(σ_μ σ̄_ν σ_ρ σ̄_λ) (σ_μ)_bc (σ_ν)_de (σ_ρ)_fg (σ_λ)_ah`
pub fn verify_boundary_identity(n: usize) -> Result<BoundaryIdentity> {
    let s = &basis().sigma;
    let y = &s[2];
    // Each side returns (denominator * LHS, numerator * sum) so that the check is integral.
    let (prefactor, printed_prefactor) = match n {
        2 => ((-1, 2), (-1, 2)),
        3 => ((1, 8), (-1, 8)),
        4 => ((-1, 16), (1, 16)),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "boundary identity defined for n = 2, 3, 4, not {n}"
            )))
        }
    };
    let monomial_sum = |t: &[usize]| -> Gi {
        match n {
            2 => (0..4).map(|m| s[m][t[1]][t[2]] * s[m][t[0]][t[3]]).sum(),
            3 => {
                let mut acc = ZERO;
                for mu in 0..4 {
                    for nu in 0..4 {
                        for la in 0..4 {
                            let c = ring_coefficient(mu, nu, 2, la);
                            if c != 0 {
                                acc += s[mu][t[1]][t[2]] * s[nu][t[3]][t[4]] * s[la][t[0]][t[5]] * c;
                            }
                        }
                    }
                }
                acc
            }
            _ => {
                let mut acc = ZERO;
                for mu in 0..4 {
                    for nu in 0..4 {
                        for rho in 0..4 {
                            for la in 0..4 {
                                let c = ring_coefficient(mu, nu, rho, la);
                                if c != 0 {
                                    acc += s[mu][t[1]][t[2]]
                                        * s[nu][t[3]][t[4]]
                                        * s[rho][t[5]][t[6]]
                                        * s[la][t[0]][t[7]]
                                        * c;
                                }
                            }
                        }
                    }
                }
                acc
            }
        }
    };
    let lhs = |t: &[usize]| -> Gi { (0..n).map(|k| y[t[2 * k]][t[2 * k + 1]]).product() };
    let check = |(num, den): (i64, i64)| {
        IdentityCheck::run(2 * n, |t| (lhs(t) * den, monomial_sum(t) * num))
    };
    let corrected = check(prefactor);
    let printed = check(printed_prefactor);
    let flipped = check((-printed_prefactor.0, printed_prefactor.1));
    Ok(BoundaryIdentity {
        n,
        printed_differs_by_sign: !printed.holds && flipped.holds,
        corrected,
        prefactor,
        printed,
        printed_prefactor,
    })
}

/// `2σ_μν = σ_μ σ̄_ν - σ_ν σ̄_μ`, integral.
pub fn lorentz_generator_doubled(mu: usize, nu: usize) -> Mat2 {
    let b = basis();
    mat_sub(
        &mat_mul(&b.sigma[mu], &b.sigma_bar[nu]),
        &mat_mul(&b.sigma[nu], &b.sigma_bar[mu]),
    )
}

/// Checks `[σ_μν, σ_αβ] = 2(δ_να σ_μβ - δ_νβ σ_μα + δ_μβ σ_να - δ_μα σ_νβ)` for all
/// index choices, in the doubled integral form `[K, K] = 4(...)` with `K = 2σ`.
pub fn verify_lorentz_algebra() -> IdentityCheck {
    let d = |a: usize, b: usize| g(i64::from(a == b), 0);
    let mut max_residual = 0;
    let mut first_failure = None;
    let mut count = 0;
    for t in all_tuples4() {
        let [mu, nu, al, be] = t;
        let k1 = lorentz_generator_doubled(mu, nu);
        let k2 = lorentz_generator_doubled(al, be);
        let lhs = mat_sub(&mat_mul(&k1, &k2), &mat_mul(&k2, &k1));
        let terms = [
            mat_scale(&lorentz_generator_doubled(mu, be), d(nu, al)),
            mat_scale(&lorentz_generator_doubled(mu, al), -d(nu, be)),
            mat_scale(&lorentz_generator_doubled(nu, al), d(mu, be)),
            mat_scale(&lorentz_generator_doubled(nu, be), -d(mu, al)),
        ];
        let mut rhs = [[ZERO; 2]; 2];
        for term in &terms {
            for i in 0..2 {
                for j in 0..2 {
                    rhs[i][j] += term[i][j] * 4;
                }
            }
        }
        for i in 0..2 {
            for j in 0..2 {
                count += 1;
                let r = (lhs[i][j] - rhs[i][j]).l1_norm();
                if r > 0 && first_failure.is_none() {
                    first_failure = Some((vec![mu, nu, al, be, i, j], lhs[i][j], rhs[i][j]));
                }
                max_residual = max_residual.max(r);
            }
        }
    }
    IdentityCheck {
        holds: max_residual == 0,
        max_residual,
        tuples_checked: count,
        first_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_invariants_hold() {
        SigmaBasis::default().check_invariants().unwrap();
    }

    #[test]
    fn trace4_examples() {
        assert_eq!(trace4(1, 1, 1, 1), g(2, 0));
        assert_eq!(trace4(0, 0, 0, 0), g(2, 0));
        assert_eq!(trace4(0, 1, 2, 3), g(-2, 0));
    }

    #[test]
    fn trace4_is_real_integer_and_two_cyclic() {
        for [a, b, c, d] in all_tuples4() {
            let t = trace4(a, b, c, d);
            assert_eq!(t.im, 0);
            assert_eq!(t, trace4(c, d, a, b));
        }
    }

    #[test]
    fn closed_form_examples() {
        for o in [Orientation::Positive, Orientation::Negative] {
            assert_eq!(closed_form_trace4(1, 1, 2, 2, o), g(2, 0));
            assert_eq!(closed_form_trace4(1, 2, 1, 2, o), g(-2, 0));
        }
        assert_eq!(closed_form_trace4(0, 1, 2, 3, Orientation::Positive), g(2, 0));
    }

    #[test]
    fn orientation_calibration_is_unique() {
        let o = decide_epsilon_orientation().unwrap();
        assert_eq!(o, Orientation::Negative);
        assert!(orientation_mismatches(o).is_empty());
        let wrong = orientation_mismatches(o.opposite());
        assert!(wrong.contains(&[0, 1, 2, 3]));
        assert_eq!(wrong.len(), 24);
    }

    #[test]
    fn epsilon_is_antisymmetric() {
        let e = Epsilon4::new(Orientation::Positive);
        assert_eq!(e.get(0, 1, 2, 3), 1);
        assert_eq!(e.get(1, 0, 2, 3), -1);
        assert_eq!(e.get(3, 2, 1, 0), 1);
        assert_eq!(e.get(0, 0, 2, 3), 0);
    }

    #[test]
    fn bilinear_completeness() {
        let check = verify_bilinear_completeness();
        assert!(check.holds, "{check:?}");
        assert_eq!(check.tuples_checked, 16);
    }

    #[test]
    fn boundary_identity_two_as_printed() {
        let id = verify_boundary_identity(2).unwrap();
        assert!(id.corrected.holds && id.printed.holds);
        assert!(!id.printed_differs_by_sign);
    }

    #[test]
    fn boundary_identities_three_and_four_up_to_sign() {
        for n in [3, 4] {
            let id = verify_boundary_identity(n).unwrap();
            assert!(id.corrected.holds, "n={n}: {:?}", id.corrected);
            assert_eq!(id.corrected.tuples_checked, 1 << (2 * n));
            assert!(id.printed_differs_by_sign);
        }
    }

    #[test]
    fn boundary_identity_rejects_other_n() {
        assert!(verify_boundary_identity(5).is_err());
    }

    #[test]
    fn lorentz_algebra() {
        let check = verify_lorentz_algebra();
        assert!(check.holds, "{check:?}");
    }
}
