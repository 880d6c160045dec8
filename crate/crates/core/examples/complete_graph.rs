//! The interchange process on the complete graph: every S_n irrep of
//! `Σ (ij)` has a single eigenvalue, and the standard irrep gives `n`.

use bngap::partitions::{enumerate_partitions, Partition};
use bngap::spectral::{complete_graph, psi_sn};

fn main() -> bngap::Result<()> {
    for n in 3..=7 {
        let w = complete_graph(n)?;
        let standard = psi_sn(&w, &Partition::hook_standard(n)?)?;
        println!("n = {n}: psi([{},1]) = {:.12}", n - 1, standard.psi);
        for lambda in enumerate_partitions(n).into_iter().skip(1) {
            let g = psi_sn(&w, &lambda)?;
            println!("    {:<16} {:>10.6}  (multiplicity {})", lambda.to_string(), g.psi, g.multiplicity_hint);
        }
    }
    Ok(())
}
