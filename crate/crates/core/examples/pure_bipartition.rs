//! Reduced spectrum and partial-transpose negativity of a block cut from an
//! infinite chain, against the exact state of a short open chain. The
//! entanglement energies are -ln of the singlet and triplet weights.

use vbs_entanglement::closed_forms;
use vbs_entanglement::linalg::{spectrum_distance, SpectrumReport};
use vbs_entanglement::mps_oracle;

fn main() -> vbs_entanglement::Result<()> {
    println!("L  xi_singlet      xi_triplet      negativity      (3/2)(1-x^2)    exact-chain err");
    let chain = mps_oracle::build_open_chain(7)?;
    for length in 1..=8u32 {
        let (xs, xt) = closed_forms::pure_entanglement_spectrum(length)?;
        let n = closed_forms::pure_negativity(length)?;
        let approx = closed_forms::pure_negativity_asymptotic(length);
        // Bulk sites 0..L of a 7-site chain, compared where the block fits.
        let err = if length <= 4 {
            let block: Vec<usize> = (0..length as usize).map(|k| chain.bulk_site(k + 1)).collect();
            let exact = mps_oracle::reduced_density(&chain, &block)?;
            let exact = SpectrumReport::of(&exact)?;
            let want = closed_forms::pure_block_spectrum(length)?;
            format!("{:.1e}", spectrum_distance(&exact.nonzero(1e-12), &want.nonzero(1e-12)))
        } else {
            "-".into()
        };
        println!("{length:<2} {xs:<15.12} {xt:<15.12} {n:<15.12} {approx:<15.12} {err}");
    }
    Ok(())
}
