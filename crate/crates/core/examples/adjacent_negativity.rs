//! Negativity of two touching blocks, from the closed forms and from the
//! mode-space partial transpose.

use vbs_entanglement::closed_forms;
use vbs_entanglement::effective_rho;

fn main() -> vbs_entanglement::Result<()> {
    println!("l1 l2 negativity      log-negativity  mode space      1/2 - N");
    for (l1, l2) in [(1, 1), (1, 2), (2, 2), (2, 5), (3, 3), (4, 4), (6, 6), (10, 10)] {
        let n = closed_forms::adjacent_pt_negativity(l1, l2)?;
        let op = effective_rho::rho_ab_adjacent(l1, l2)?;
        let mode = effective_rho::mode_partial_transpose(&op).spectrum()?;
        println!(
            "{l1:<2} {l2:<2} {:<15.12} {:<15.12} {:<15.12} {:.3e}",
            n.negativity,
            n.log_negativity,
            mode.negativity,
            0.5 - n.negativity
        );
    }

    // Equal blocks: 1/2 - N(l, l) falls off like (3/2) x^2.
    for l in 2..=6 {
        let x = closed_forms::z_of(l);
        let deficit = 0.5 - closed_forms::adjacent_negativity_equal(l)?;
        println!("l={l}: (1/2 - N) / x^2 = {:.6}", deficit / (x * x));
    }
    Ok(())
}
