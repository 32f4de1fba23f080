//! Cutting a single valence bond: the partial transpose has spectrum
//! {1/2 x3, -1/2} wherever the cut is made.

use vbs_entanglement::closed_forms;
use vbs_entanglement::mps_oracle;

fn main() -> vbs_entanglement::Result<()> {
    let closed = closed_forms::bipartition_l0_pt_spectrum();
    println!("closed form: {:?}, negativity {}", closed.eigenvalues, closed.negativity);

    let n = 5;
    let state = mps_oracle::build_open_chain(n)?;
    for cut in 1..n {
        // Left part: boundary spin plus `cut` bulk sites.
        let left: Vec<usize> = (0..=cut).collect();
        let pt = mps_oracle::pure_bipartition_pt(&state, &left)?;
        let nonzero = pt.nonzero(1e-12);
        println!("N={n} cut after bulk site {cut}: {nonzero:.12?}");
    }
    Ok(())
}
