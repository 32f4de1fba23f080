//! Mutual information of two long blocks decays with the gap as the weights
//! (1 - z)/16 and (1 + 3z)/16 approach uniform.

use vbs_entanglement::closed_forms::{self, z_of};
use vbs_entanglement::effective_rho;

fn main() -> vbs_entanglement::Result<()> {
    println!("gap  I(closed form)   I(blocks of 12)  ratio to 3z^2/2");
    for gap in 1..=6 {
        let z = z_of(gap);
        let limit = closed_forms::mutual_information(z);
        let finite = effective_rho::measures(&effective_rho::rho_ab_open(12, gap, 12)?)?.mutual_information;
        println!("{gap:<4} {limit:<16.12} {finite:<16.12} {:.6}", limit / (1.5 * z * z));
    }
    Ok(())
}
