//! Reference values: published limits, and numbers frozen from an independent
//! dense evaluation of the explicit state.

use vbs_entanglement::closed_forms::{self, z_of};
use vbs_entanglement::effective_rho::{self, Block};
use vbs_entanglement::linalg::{spectrum_distance, SpectrumReport};
use vbs_entanglement::mps_oracle;

fn repeated(pairs: &[(f64, usize)]) -> Vec<f64> {
    pairs.iter().flat_map(|&(v, k)| std::iter::repeat_n(v, k)).collect()
}

#[test]
fn single_site_block() {
    let s = closed_forms::pure_block_spectrum(1).unwrap();
    assert!(spectrum_distance(&s.eigenvalues, &[0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]) < 1e-15);
    assert!((s.entropy - 3f64.ln()).abs() < 1e-14);
}

#[test]
fn long_block_is_maximally_mixed() {
    let s = closed_forms::pure_block_spectrum(60).unwrap();
    assert!(s.eigenvalues.iter().all(|l| (l - 0.25).abs() < 1e-15));
    assert!((s.entropy - 2.0 * 2f64.ln()).abs() < 1e-14);
}

#[test]
fn two_site_block_entropy() {
    let s = closed_forms::pure_block_spectrum(2).unwrap();
    assert!(spectrum_distance(&s.eigenvalues, &[2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0, 1.0 / 3.0]) < 1e-15);
    assert!((s.entropy - 1.368_922_360_740_219_4).abs() < 1e-13);
    assert!((closed_forms::pure_block_spectrum(3).unwrap().entropy - 1.384_182_423_577_295_3).abs() < 1e-13);
}

#[test]
fn pure_negativities() {
    assert!((closed_forms::pure_negativity(1).unwrap() - 1.0).abs() < 1e-15);
    assert!((closed_forms::pure_negativity(2).unwrap() - 1.483_163_247_594_392_8).abs() < 1e-13);
    assert!((closed_forms::pure_negativity(40).unwrap() - 1.5).abs() < 1e-14);
}

#[test]
fn bond_cut_negativity() {
    let s = closed_forms::bipartition_l0_pt_spectrum();
    assert_eq!(s.eigenvalues, vec![-0.5, 0.5, 0.5, 0.5]);
    assert_eq!(s.negativity, 0.5);
}

#[test]
fn single_site_pair_roots() {
    let polys = closed_forms::disjoint_char_polys(1, 1, 1).unwrap();
    assert!((polys.p1_root - 4.0 / 27.0).abs() < 1e-15);
    let p2 = polys.p2_roots();
    assert!(p2[0].abs() < 1e-15 && (p2[1] - 1.0 / 27.0).abs() < 1e-15);
    let p3 = polys.p3_roots().unwrap();
    assert!(spectrum_distance(&p3, &[0.0, 0.0, 2.0 / 27.0]) < 1e-15);
}

#[test]
fn long_blocks_split_four_and_twelve() {
    for gap in 1..4 {
        let z = z_of(gap);
        let s = closed_forms::disjoint_spectrum(40, gap, 40).unwrap();
        let want = repeated(&[((1.0 + 3.0 * z) / 16.0, 4), ((1.0 - z) / 16.0, 12)]);
        assert!(spectrum_distance(&s.eigenvalues, &want) < 1e-14, "gap {gap}");
    }
    let far = closed_forms::disjoint_spectrum(40, 40, 40).unwrap();
    assert!((far.purity - 1.0 / 16.0).abs() < 1e-15);
}

#[test]
fn two_site_blocks_top_eigenvalue() {
    let s = effective_rho::rho_ab_open(2, 2, 2).unwrap().spectrum().unwrap();
    assert!((s.eigenvalues[15] - 0.114_841_008_469_030_06).abs() < 1e-13);
}

#[test]
fn adjacent_values() {
    assert!((closed_forms::adjacent_pt_negativity(1, 1).unwrap().negativity - 1.0 / 9.0).abs() < 1e-15);
    let n2 = closed_forms::adjacent_pt_negativity(2, 2).unwrap().negativity;
    assert!((n2 - 0.483_352_192_413_943_1).abs() < 1e-13);
    assert!((closed_forms::adjacent_pt_negativity(30, 30).unwrap().negativity - 0.5).abs() < 1e-14);
}

#[test]
fn mutual_information_values() {
    assert!((closed_forms::mutual_information(z_of(1)) - (4f64 / 3.0).ln()).abs() < 1e-15);
    assert!((closed_forms::mutual_information(z_of(2)) - 0.017_372_000_379_671_28).abs() < 1e-15);
    assert!((closed_forms::mutual_information(z_of(3)) - 0.002_111_937_542_595_192).abs() < 1e-15);
    assert_eq!(closed_forms::mutual_information(0.0), 0.0);
}

#[test]
fn boundary_pair_spectra() {
    let (rho, pt) = effective_rho::rho_ce_spectra(1).unwrap();
    assert!(spectrum_distance(&rho.eigenvalues, &[0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]) < 1e-15);
    assert!(spectrum_distance(&pt.eigenvalues, &[1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 0.5]) < 1e-15);
    assert_eq!(pt.negativity, 0.0);
    let (_, far) = effective_rho::rho_ce_spectra(40).unwrap();
    assert!(far.eigenvalues.iter().all(|l| (l - 0.25).abs() < 1e-15));
}

#[test]
fn traced_pair_recovers_single_block() {
    let op = effective_rho::rho_ab_open(1, 1, 1).unwrap();
    let a = SpectrumReport::of(&effective_rho::mode_partial_trace(&op, Block::B)).unwrap();
    assert!(spectrum_distance(&a.eigenvalues, &[0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]) < 1e-14);
}

#[test]
fn ring_spectra() {
    let s = effective_rho::rho_ab_pbc(1, 1, 1, 1).unwrap().spectrum().unwrap();
    assert!(spectrum_distance(&s.eigenvalues, &repeated(&[(4.0 / 21.0, 5), (1.0 / 21.0, 1)])) < 1e-14);
    let s = effective_rho::rho_ab_pbc(2, 1, 1, 1).unwrap().spectrum().unwrap();
    let want = repeated(&[(2.0 / 15.0, 5), (0.1, 3), (1.0 / 30.0, 1)]);
    assert!(spectrum_distance(&s.eigenvalues, &want) < 1e-14);
}

#[test]
fn maximally_mixed_pair() {
    let s = SpectrumReport::from_eigenvalues(vec![1.0 / 16.0; 16]);
    assert!((s.entropy - 4.0 * 2f64.ln()).abs() < 1e-14);
    assert!((s.purity - 1.0 / 16.0).abs() < 1e-16);
}

#[test]
fn chain_correlations() {
    let s = mps_oracle::build_open_chain(6).unwrap();
    let c = |i, j| mps_oracle::spin_correlation(&s, s.bulk_site(i), s.bulk_site(j)).unwrap().value;
    assert!((c(2, 3) + 4.0 / 9.0).abs() < 1e-13);
    assert!((c(1, 3) - 4.0 / 27.0).abs() < 1e-13);
    assert!((c(0, 3) + 4.0 / 81.0).abs() < 1e-13);
    assert!((c(3, 3) - 2.0 / 3.0).abs() < 1e-13);
}
