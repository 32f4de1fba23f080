//! Two blocks on a ring, separated on both sides. The partial transpose is a
//! mixture of physical operators, so it stays positive.

use vbs_entanglement::effective_rho::{self, ConvexityWeights};
use vbs_entanglement::linalg::spectrum_distance;
use vbs_entanglement::mps_oracle;

fn main() -> vbs_entanglement::Result<()> {
    let op = effective_rho::rho_ab_pbc(1, 1, 1, 1)?;
    let m = effective_rho::measures(&op)?;
    println!("ring of 4, single sites: {:.12?}", m.rho.grouped(1e-9));
    println!("PT min eigenvalue {:.3e}", m.partial_transpose.min_eigenvalue());

    let ring = mps_oracle::build_ring(4)?;
    let (rho, _) = mps_oracle::entanglement_report(&ring, &[0], &[2])?;
    println!("vs exact ring: {:.1e}", spectrum_distance(&rho.nonzero(1e-12), &m.rho.nonzero(1e-12)));

    println!("\nlc ld  alpha     beta      gamma     delta     residual");
    for (lc, ld) in [(1, 1), (1, 2), (2, 3), (4, 4)] {
        let w = ConvexityWeights::bilinear(lc, ld);
        let r = effective_rho::convexity_residual(&w, lc, ld);
        let [a, b, c, d] = w.as_array();
        println!("{lc:<2} {ld:<2}  {a:.6}  {b:.6}  {c:.6}  {d:.6}  {r:.1e}");
    }
    Ok(())
}
