//! Each member of F_n is the unique minimizer for a suitable weighting, so
//! none of them can be dropped from the family.

use bngap::constructions::{rayleigh_certificate, verify_separation, witness_std, witness_vnk};
use bngap::report::report_text;

fn main() -> bngap::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let mut specs: Vec<_> = (1..n).map(|k| witness_vnk(n, k)).collect::<bngap::Result<_>>()?;
    specs.push(witness_std(n)?);
    for spec in &specs {
        let r = verify_separation(spec)?;
        print!("{}", report_text(&r));
        if let Ok(c) = rayleigh_certificate(spec) {
            println!("    Rayleigh quotient of v: {} (defect angle {:.3} rad)", c.quotient, c.defect_angle);
        }
    }
    match witness_vnk(n, n) {
        Ok(_) => println!("k = n witness built"),
        Err(e) => println!("k = n: {e}"),
    }
    Ok(())
}
