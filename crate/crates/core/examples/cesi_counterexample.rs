//! The 2n-dimensional representation P_n does not always carry the gap.

use bngap::constructions::cesi_counterexample;
use bngap::report::report_text;

fn main() -> bngap::Result<()> {
    for (n, k) in [(3, 2), (4, 2), (4, 3), (5, 2), (6, 3), (8, 4)] {
        let r = cesi_counterexample(n, k)?;
        print!("{}", report_text(&r));
    }
    if let Err(e) = cesi_counterexample(4, 1) {
        println!("k = 1: {e}");
    }
    Ok(())
}
