//! Sphere integrals by Monte Carlo: the chain norm and block overlaps, which
//! pin down the sign of the channel weights.

use num_complex::Complex64;
use vbs_entanglement::sphere_mc;

fn main() -> vbs_entanglement::Result<()> {
    let (samples, seed) = (200_000, 7);
    let norm = sphere_mc::estimate_vbs_norm(3, samples, seed)?;
    println!("norm: {:.5} +- {:.5}", norm.mean.re, norm.standard_error);

    for length in 1..=3 {
        for mu in 0..4 {
            let est = sphere_mc::estimate_block_overlap(mu, mu, length, samples, seed)?;
            let plus = sphere_mc::overlap_target(mu, mu, length as u32, 1.0);
            let minus = sphere_mc::overlap_target(mu, mu, length as u32, -1.0);
            println!(
                "L={length} mu={mu}: {:.5} +- {:.5}  z(+)={:+.2} z(-)={:+.2}",
                est.mean.re,
                est.standard_error,
                est.z_score(Complex64::new(plus, 0.0)),
                est.z_score(Complex64::new(minus, 0.0))
            );
        }
    }
    Ok(())
}
