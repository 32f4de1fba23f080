use proptest::prelude::*;
use vbs_entanglement::closed_forms::{self, z_of, CubicCoefficients};
use vbs_entanglement::effective_rho::{self, ConvexityWeights};
use vbs_entanglement::linalg::{self, spectrum_distance, HermitianOperator, SpectrumReport};
use vbs_entanglement::sphere_mc;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn open_pair_is_a_state_with_positive_transpose(la in 1u32..25, gap in 1u32..25, lb in 1u32..25) {
        let op = effective_rho::rho_ab_open(la, gap, lb).unwrap();
        let s = op.spectrum().unwrap();
        prop_assert!((s.trace - 1.0).abs() < 1e-12);
        prop_assert!(s.min_eigenvalue() >= -1e-12);
        let pt = effective_rho::mode_partial_transpose(&op).spectrum().unwrap();
        prop_assert!(pt.min_eigenvalue() >= -1e-12);
        prop_assert!((pt.trace - 1.0).abs() < 1e-12);
    }

    #[test]
    fn characteristic_roots_match_mode_space(la in 1u32..40, gap in 1u32..40, lb in 1u32..40) {
        let mode = effective_rho::rho_ab_open(la, gap, lb).unwrap().spectrum().unwrap();
        let roots = closed_forms::disjoint_spectrum(la, gap, lb).unwrap();
        prop_assert!(spectrum_distance(&mode.eigenvalues, &roots.eigenvalues) < 1e-10);
    }

    #[test]
    fn ring_pair_has_positive_transpose(la in 1u32..12, lb in 1u32..12, lc in 1u32..12, ld in 1u32..12) {
        let op = effective_rho::rho_ab_pbc(la, lb, lc, ld).unwrap();
        prop_assert!((op.spectrum().unwrap().trace - 1.0).abs() < 1e-12);
        let pt = effective_rho::mode_partial_transpose(&op).spectrum().unwrap();
        prop_assert!(pt.min_eigenvalue() >= -1e-12);
    }

    #[test]
    fn bilinear_weights_are_convex(lc in 1u32..40, ld in 1u32..40) {
        let w = ConvexityWeights::bilinear(lc, ld);
        prop_assert!(w.in_unit_interval());
        prop_assert!((w.as_array().iter().sum::<f64>() - 1.0).abs() < 1e-15);
        prop_assert!(effective_rho::convexity_residual(&w, lc, ld) < 1e-12);
    }

    #[test]
    fn adjacent_forms_agree(l1 in 1u32..40, l2 in 1u32..40) {
        let n = closed_forms::adjacent_pt_negativity(l1, l2).unwrap();
        prop_assert!(n.negativity > 0.0 && n.negativity <= 0.5 + 1e-12);
        let mode = effective_rho::mode_partial_transpose(&effective_rho::rho_ab_adjacent(l1, l2).unwrap())
            .spectrum()
            .unwrap();
        prop_assert!((mode.negativity - n.negativity).abs() < 1e-10);
        if l1 == l2 {
            prop_assert!((closed_forms::adjacent_negativity_equal(l1).unwrap() - n.negativity).abs() < 1e-12);
        }
    }

    #[test]
    fn pure_spectra_are_consistent(length in 1u32..60) {
        let rho = closed_forms::pure_block_spectrum(length).unwrap();
        let pt = closed_forms::pure_pt_spectrum(length).unwrap();
        prop_assert!((rho.trace - 1.0).abs() < 1e-14 && (pt.trace - 1.0).abs() < 1e-14);
        prop_assert!((pt.negativity - closed_forms::pure_negativity(length).unwrap()).abs() < 1e-13);
        // Trace norm of the transpose of a pure state is (Σ sqrt λ)^2.
        let root_sum: f64 = rho.eigenvalues.iter().map(|l| l.max(0.0).sqrt()).sum();
        prop_assert!((1.0 + 2.0 * pt.negativity - root_sum * root_sum).abs() < 1e-12);
    }

    #[test]
    fn mutual_information_is_nonnegative(la in 1u32..15, gap in 1u32..15, lb in 1u32..15) {
        let m = effective_rho::measures(&effective_rho::rho_ab_open(la, gap, lb).unwrap()).unwrap();
        prop_assert!(m.mutual_information >= -1e-12);
        prop_assert!(m.rho.entropy <= m.entropy_a + m.entropy_b + 1e-12);
    }

    #[test]
    fn trig_roots_solve_real_cubics(r in prop::array::uniform3(-1.0f64..1.0)) {
        let c = CubicCoefficients {
            b: -(r[0] + r[1] + r[2]),
            c: r[0] * r[1] + r[1] * r[2] + r[0] * r[2],
            d: -r[0] * r[1] * r[2],
        };
        let roots = closed_forms::cubic_roots_trig(&c).unwrap();
        prop_assert!(spectrum_distance(&roots, &r) < 1e-6);
        for y in roots {
            prop_assert!(c.eval(y).abs() < 1e-12);
        }
    }

    #[test]
    fn partial_transpose_is_an_involution(seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let entries: Vec<f64> = (0..36).map(|_| rng.random::<f64>() - 0.5).collect();
        let sym: Vec<f64> = (0..36).map(|k| entries[k] + entries[(k % 6) * 6 + k / 6]).collect();
        let op = HermitianOperator::from_real(vec![2, 3], &sym).unwrap();
        let twice = linalg::partial_transpose(&linalg::partial_transpose(&op, &[1]).unwrap(), &[1]).unwrap();
        prop_assert!(twice.max_abs_diff(&op) < 1e-15);
        let t = SpectrumReport::of(&linalg::partial_transpose(&op, &[0, 1]).unwrap()).unwrap();
        prop_assert!(spectrum_distance(&t.eigenvalues, &SpectrumReport::of(&op).unwrap().eigenvalues) < 1e-12);
    }

    #[test]
    fn channel_weights_sum_to_one(length in 0u32..70) {
        let w = closed_forms::ChannelWeights::for_length(length);
        prop_assert!((w.w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        prop_assert!(w.w.iter().all(|&x| x >= 0.0));
        prop_assert!(z_of(length).abs() <= 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn monte_carlo_is_seed_deterministic(seed in any::<u64>(), length in 1usize..4) {
        let a = sphere_mc::estimate_block_overlap(1, 1, length, 1_500, seed).unwrap();
        let b = sphere_mc::estimate_block_overlap(1, 1, length, 1_500, seed).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(a.standard_error > 0.0);
    }
}
