//! Two blocks separated by a gap: the 16 eigenvalues from the factored
//! characteristic polynomial, the mode-space operator, and an exact chain.

use vbs_entanglement::closed_forms;
use vbs_entanglement::effective_rho;
use vbs_entanglement::linalg::spectrum_distance;
use vbs_entanglement::mps_oracle;

fn main() -> vbs_entanglement::Result<()> {
    let (la, gap, lb) = (2, 1, 2);
    let polys = closed_forms::disjoint_char_polys(la, gap, lb)?;
    println!("blocks ({la}, {lb}) with gap {gap}");
    for (root, mult) in polys.roots()? {
        println!("  root {root:.15} x{mult}");
    }

    let roots = closed_forms::disjoint_spectrum(la, gap, lb)?;
    let op = effective_rho::rho_ab_open(la, gap, lb)?;
    let m = effective_rho::measures(&op)?;
    println!("roots vs mode space: {:.1e}", spectrum_distance(&roots.eigenvalues, &m.rho.eigenvalues));

    let n = (la + gap + lb) as usize;
    let chain = mps_oracle::build_open_chain(n)?;
    let a: Vec<usize> = (0..la as usize).map(|k| chain.bulk_site(k)).collect();
    let b: Vec<usize> = (0..lb as usize).map(|k| chain.bulk_site(k + (la + gap) as usize)).collect();
    let (rho, pt) = mps_oracle::entanglement_report(&chain, &a, &b)?;
    let exact = rho.nonzero(1e-12);
    let mode = m.rho.nonzero(1e-12);
    println!("exact chain vs mode space: {:.1e}", spectrum_distance(&exact, &mode));

    println!(
        "PT min eigenvalue {:.6} (mode space); negativity {} (exact chain)",
        m.partial_transpose.min_eigenvalue(),
        pt.negativity
    );
    println!("entropy {:.12}, purity {:.12}", m.rho.entropy, m.rho.purity);

    println!("\nlong blocks approach {{(1+3z)/16 x4, (1-z)/16 x12}}:");
    for gap in 1..=3 {
        let s = closed_forms::disjoint_spectrum(30, gap, 30)?;
        let z = closed_forms::z_of(gap);
        println!("  gap {gap}: {:.12?}", s.grouped(1e-9));
        println!("         {:.12} x4, {:.12} x12", (1.0 + 3.0 * z) / 16.0, (1.0 - z) / 16.0);
    }
    Ok(())
}
