//! Irreps of B_n with their dimensions, membership in F_n, and how many
//! S_n- and N_n-invariant vectors each one has.

use bngap::partitions::enumerate_bipartitions;
use bngap::reps::{family, in_family, trivial_multiplicity_on_subgroup, Subgroup};

fn main() -> bngap::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let labels = enumerate_bipartitions(n);
    println!("{} irreps of B_{n}", labels.len());
    println!("{:<20} {:>6} {:>5} {:>5} {:>5}", "label", "dim", "F_n", "S_n", "N_n");
    let mut squares = 0u128;
    for l in &labels {
        squares += l.dimension().pow(2);
        println!(
            "{:<20} {:>6} {:>5} {:>5} {:>5}",
            l.to_string(),
            l.dimension(),
            if in_family(l) { "yes" } else { "" },
            trivial_multiplicity_on_subgroup(l, Subgroup::Sn)?,
            trivial_multiplicity_on_subgroup(l, Subgroup::Nn)?
        );
    }
    println!("sum of squared dimensions = {squares}");
    let f: u128 = family(n)?.iter().map(|l| l.dimension()).sum();
    println!("dim F_{n} = {f} = 2^{n} + {n} - 2");
    Ok(())
}
