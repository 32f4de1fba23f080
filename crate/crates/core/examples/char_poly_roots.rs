//! The trigonometric cubic solver on nearly degenerate factors.

use vbs_entanglement::closed_forms::{self, CubicCoefficients};
use vbs_entanglement::effective_rho;
use vbs_entanglement::linalg::spectrum_distance;

fn main() -> vbs_entanglement::Result<()> {
    let c = CubicCoefficients { b: -6.0, c: 11.0, d: -6.0 };
    println!("roots of (y-1)(y-2)(y-3): {:?}", closed_forms::cubic_roots_trig(&c)?);

    // Long blocks push pairs of roots within 1e-8 of each other.
    for (la, gap, lb) in [(3, 2, 4), (5, 15, 12), (16, 1, 17), (16, 19, 1), (30, 30, 30)] {
        let polys = closed_forms::disjoint_char_polys(la, gap, lb)?;
        let roots = closed_forms::disjoint_spectrum(la, gap, lb)?;
        let mode = effective_rho::rho_ab_open(la, gap, lb)?.spectrum()?;
        let p3 = polys.p3_roots()?;
        println!(
            "({la},{gap},{lb}) p3 roots {p3:.15?}  vs mode space {:.1e}",
            spectrum_distance(&roots.eigenvalues, &mode.eigenvalues)
        );
    }
    Ok(())
}
