use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bngap::constructions::{cesi_counterexample, randomized_main_theorem_trial, witness_std, witness_vnk, TrialOptions};
use bngap::partitions::enumerate_bipartitions;
use bngap::report::{gap_rows_tsv, gap_table_tsv, report_records, report_text};
use bngap::reps::{in_family, trivial_multiplicity_on_subgroup, Subgroup};
use bngap::spectral::{argmin, cayley_oracle_psi, family_table, nontrivial_labels, psi_irrep, psi_pn, psi_table};
use bngap::weightfile::WeightFile;
use bngap::{Bipartition, Error, VerificationReport};

#[derive(Parser)]
#[command(name = "bngap", version, about = "Spectral gaps of weighted Laplacians on the hyperoctahedral group")]
struct Cli {
    /// Worker threads for label evaluation (output order does not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gap table for a weight file.
    Gap(GapArgs),
    /// Write the weight file of a separating witness.
    Witness(WitnessArgs),
    /// Randomized check that the gap comes from F_n.
    Verify(VerifyArgs),
    /// Counterexample to the P_n conjecture.
    Cesi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Dimensions, F_n membership and branching multiplicities.
    IrrepInfo {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        label: Option<String>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct GapMode {
    /// One irrep: `[3,1]|[2]`, `vni:n:i` or `pn`.
    #[arg(long)]
    irrep: Option<String>,
    #[arg(long)]
    family: bool,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    pn: bool,
    /// Regular representation (n <= 4).
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct GapArgs {
    #[arg(long)]
    weights: PathBuf,
    #[command(flatten)]
    mode: GapMode,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with = "std", required_unless_present = "std")]
    k: Option<usize>,
    #[arg(long)]
    std: bool,
    /// Output file (stdout when absent).
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    trials: usize,
    #[arg(long)]
    odd_only: bool,
    /// Zero each weight with this probability.
    #[arg(long)]
    sparse: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Text,
}

enum LabelArg {
    Irrep(Bipartition),
    Pn,
}

fn parse_label(s: &str, n: usize) -> Result<LabelArg, Error> {
    if s == "pn" {
        return Ok(LabelArg::Pn);
    }
    if let Some(rest) = s.strip_prefix("vni:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let parsed: Option<(usize, usize)> = match parts.as_slice() {
            [a, b] => a.parse().ok().zip(b.parse().ok()),
            _ => None,
        };
        return match parsed {
            Some((m, i)) if m == n && (1..=n).contains(&i) => Ok(LabelArg::Irrep(Bipartition::two_rows(n, i))),
            _ => Err(Error::InvalidLabel(format!("{s} (expected vni:{n}:i with 1 <= i <= {n})"))),
        };
    }
    let label: Bipartition = s.parse()?;
    if label.n() != n {
        return Err(Error::SizeMismatch(label.n(), n));
    }
    Ok(LabelArg::Irrep(label))
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn print_report(r: &VerificationReport, format: Format) -> Result<(), Failure> {
    match format {
        Format::Tsv => print!("{}", report_records(r)),
        Format::Text => print!("{}", report_text(r)),
    }
    eprintln!("wall time {:.3}s", r.wall_time.as_secs_f64());
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn gap(args: GapArgs) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&args.weights)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", args.weights.display())))?;
    let file = WeightFile::parse(&text)?;
    let n = file.n;
    let w = file.to_element()?;
    let mode = args.mode;
    let label = mode.irrep.as_deref().map(|s| parse_label(s, n)).transpose()?;
    let out = if mode.pn || matches!(label, Some(LabelArg::Pn)) {
        let (g, l) = psi_pn(&w)?;
        let rows = vec![("pn".to_string(), g.psi)];
        gap_rows_tsv(&rows, Some((g.psi, l.to_string())))
    } else if let Some(LabelArg::Irrep(l)) = label {
        let g = psi_irrep(&w, &l)?;
        gap_table_tsv(&[(l.clone(), g.clone())], Some((&g, &l)))
    } else if mode.oracle {
        let g = cayley_oracle_psi(&w, n)?;
        gap_rows_tsv(&[("regular".to_string(), g.psi)], Some((g.psi, "regular".into())))
    } else if mode.family || (!mode.all && n > bngap::group::MAX_ENUMERATION_N) {
        let table = family_table(&w)?;
        let (g, l) = argmin(&table).expect("nonempty");
        gap_table_tsv(&table, Some((&g, &l)))
    } else {
        if n > bngap::group::MAX_ENUMERATION_N {
            return Err(Error::GroupTooLarge(n, bngap::group::MAX_ENUMERATION_N).into());
        }
        let table = psi_table(&w, &nontrivial_labels(n))?;
        let (g, l) = argmin(&table).expect("nonempty");
        gap_table_tsv(&table, Some((&g, &l)))
    };
    print!("{out}");
    Ok(())
}

fn witness(args: WitnessArgs) -> Result<(), Failure> {
    let spec = match args.k {
        Some(k) => witness_vnk(args.n, k)?,
        None => witness_std(args.n)?,
    };
    let text = WeightFile::from(&spec).emit();
    match args.emit {
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            eprintln!("target {}", spec.target);
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn irrep_info(n: usize, label: Option<String>) -> Result<(), Failure> {
    let labels = match label {
        Some(s) => match parse_label(&s, n)? {
            LabelArg::Irrep(l) => vec![l],
            LabelArg::Pn => bngap::reps::pn_components(n)?,
        },
        None => enumerate_bipartitions(n),
    };
    let branching = n <= bngap::group::MAX_ENUMERATION_N;
    println!("LABEL\tDIM\tIN_F\tMULT_SN\tMULT_NN");
    for l in labels {
        let (sn, nn) = if branching {
            (
                trivial_multiplicity_on_subgroup(&l, Subgroup::Sn)?.to_string(),
                trivial_multiplicity_on_subgroup(&l, Subgroup::Nn)?.to_string(),
            )
        } else {
            ("-".into(), "-".into())
        };
        println!("{l}\t{}\t{}\t{sn}\t{nn}", l.dimension(), if in_family(&l) { "yes" } else { "no" });
    }
    if !branching {
        eprintln!("branching multiplicities need n <= {}", bngap::group::MAX_ENUMERATION_N);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gap(args) => gap(args),
        Command::Witness(args) => witness(args),
        Command::Verify(a) => {
            let options = TrialOptions { odd_only: a.odd_only, sparse: a.sparse };
            let r = randomized_main_theorem_trial(a.n, a.seed, a.trials, options)?;
            print_report(&r, a.format)
        }
        Command::Cesi { n, k, format } => print_report(&cesi_counterexample(n, k)?, format),
        Command::IrrepInfo { n, label } => irrep_info(n, label),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
