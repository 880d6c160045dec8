//! Random weights on transpositions and sign changes: the gap over all
//! irreps always equals the gap over F_n.

use bngap::constructions::{randomized_main_theorem_trial, TrialOptions};
use bngap::report::report_text;

fn main() -> bngap::Result<()> {
    for (n, trials) in [(3, 25), (4, 10), (5, 5)] {
        for odd_only in [false, true] {
            let r = randomized_main_theorem_trial(n, 2024, trials, TrialOptions { odd_only, sparse: None })?;
            print!("{}", report_text(&r));
            for t in &r.trials {
                println!("    trial {:>2}: psi = {:.9} at {}", t.index, t.psi_global, t.global_argmin);
            }
        }
    }
    Ok(())
}
