//! Exact integer checks of the four-component sigma algebra.

use vbs_entanglement::pauli_algebra;

fn main() -> vbs_entanglement::Result<()> {
    let orientation = pauli_algebra::decide_epsilon_orientation()?;
    println!("epsilon orientation {orientation:?} (sign {})", orientation.sign());
    println!(
        "opposite orientation fails on {} index tuples",
        pauli_algebra::orientation_mismatches(orientation.opposite()).len()
    );

    let c = pauli_algebra::verify_bilinear_completeness();
    println!("completeness: holds {} over {} tuples", c.holds, c.tuples_checked);
    let l = pauli_algebra::verify_lorentz_algebra();
    println!("Lorentz algebra: holds {} over {} tuples", l.holds, l.tuples_checked);

    for n in 2..=4 {
        let b = pauli_algebra::verify_boundary_identity(n)?;
        println!(
            "boundary n={n}: prefactor {}/{} holds {}; printed {}/{} holds {}",
            b.prefactor.0, b.prefactor.1, b.corrected.holds, b.printed_prefactor.0, b.printed_prefactor.1, b.printed.holds
        );
    }
    Ok(())
}
