//! Brute force on the whole group: the regular representation's Laplacian
//! agrees with the irrep-by-irrep computation.

use bngap::constructions::{random_weights, sub_seed, TrialOptions};
use bngap::group::build_weight_element;
use bngap::spectral::cayley_oracle_psi;
use bngap::psi_global;

fn main() -> bngap::Result<()> {
    for (n, count) in [(2, 4), (3, 8), (4, 2)] {
        for t in 0..count {
            let (tw, dw) = random_weights(n, sub_seed(42, t), TrialOptions::default());
            let w = build_weight_element(n, tw, dw)?;
            let oracle = cayley_oracle_psi(&w, n)?.psi;
            let (gap, label) = psi_global(&w, n)?;
            println!("n = {n} set {t}: oracle {oracle:.12}  irreps {:.12} at {label}  diff {:.1e}", gap.psi, (oracle - gap.psi).abs());
        }
    }
    Ok(())
}
