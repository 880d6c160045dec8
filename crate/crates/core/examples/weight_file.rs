//! Reading and writing weight files.

use bngap::constructions::witness_vnk;
use bngap::weightfile::WeightFile;
use bngap::psi_family;

fn main() -> bngap::Result<()> {
    let text = WeightFile::from(&witness_vnk(3, 2)?).emit();
    print!("{text}");
    let parsed = WeightFile::parse(&text)?;
    let (gap, label) = psi_family(&parsed.to_element()?, parsed.n)?;
    println!("psi = {} at {label}", gap.psi);

    let custom = "# a path with one sign change\nn 4\nT 1 2 1\nT 2 3 1\nT 3 4 1\nD 1000 0.5\n";
    let w = WeightFile::parse(custom)?.to_element()?;
    let (gap, label) = bngap::psi_global(&w, 4)?;
    println!("path on 4 points: psi = {} at {label}", gap.psi);

    match WeightFile::parse("n 3\nD 0010 1") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
