//! Diagonal Laplacians are diagonalized by the Walsh-Hadamard transform,
//! which reaches sizes far beyond dense matrices.

use bngap::constructions::witness_vnk;
use bngap::group::{build_weight_element, SubsetMask};
use bngap::spectral::{diagonal_fourier_psi, laplacian_fourier};

fn main() -> bngap::Result<()> {
    let (n, k) = (5, 3);
    let spec = witness_vnk(n, k)?;
    let table = laplacian_fourier(&spec.diagonal_element()?)?;
    println!("Fourier transform of the witness Laplacian, n = {n}, k = {k}; 2^n = {} except at", 1 << n);
    for bits in 0u32..(1 << n) {
        let s = SubsetMask::new(n, bits)?;
        if table.get(&s) != (1u32 << n) as f64 {
            println!("    {} {:>4}", s.to_bitstring(), table.get(&s));
        }
    }

    println!("psi(n * sum of singletons, V_n^i) = 2ni:");
    for n in [8, 12, 16] {
        let w = build_weight_element(n, [], (1..=n).map(|j| (SubsetMask::from_elements(n, &[j]).unwrap(), n as f64)))?;
        let values: Vec<String> = (1..=n)
            .map(|i| diagonal_fourier_psi(&w, n, i).map(|g| g.psi.to_string()))
            .collect::<bngap::Result<_>>()?;
        println!("    n = {n:>2}: {}", values.join(" "));
    }
    Ok(())
}
