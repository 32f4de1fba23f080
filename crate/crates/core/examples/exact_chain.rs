//! The explicit ground state: zero energy, a unique null vector of the
//! Hamiltonian, and exponentially decaying spin correlations.

use vbs_entanglement::mps_oracle::{self, Boundary};

fn main() -> vbs_entanglement::Result<()> {
    let n = 5;
    let chain = mps_oracle::build_open_chain(n)?;
    println!("open chain N={n}: dims {:?}", chain.site_dims);
    println!("<H> = {:.1e}", mps_oracle::hamiltonian_residual(&chain, Boundary::Open)?);
    println!("N=3 null space dimension {}", mps_oracle::null_space_dimension(3, Boundary::Open, 1e-10)?);

    let ring = mps_oracle::build_ring(4)?;
    println!("ring N=4: <H> = {:.1e}", mps_oracle::hamiltonian_residual(&ring, Boundary::Ring)?);

    for d in 1..n {
        let c = mps_oracle::spin_correlation(&chain, chain.bulk_site(0), chain.bulk_site(d))?.value;
        let want = 4.0 / 3.0 * (-1.0f64 / 3.0).powi(d as i32);
        println!("<Sz_0 Sz_{d}> = {c:+.12} (4/3)(-1/3)^{d} = {want:+.12}");
    }
    Ok(())
}
