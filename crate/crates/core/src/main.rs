use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use positroid_lab::constructions::{
    catalog, extremal_family, uniform, whirl_like, whirl_like_plus, CatalogId,
};
use positroid_lab::io::{read_file, to_text, to_text_stream};
use positroid_lab::minors::{find_catalog_minor, has_minor, has_uniform_line_minor};
use positroid_lab::oriented::{
    chirotope_from_matrix, monochromatic_line_minor, ramsey_scan, IntMatrix, Polarity,
};
use positroid_lab::positroid::{enumerate_positroids, positroid_ordering, PositroidFilter};
use positroid_lab::verify::{self, ClaimId, Outcome, RunConfig};
use positroid_lab::{Error, Result};

#[derive(Parser)]
#[command(
    name = "positroid-lab",
    version,
    about = "Matroid and positroid computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named family member or catalog matroid.
    Construct(ConstructArgs),
    /// Search a host matroid for a minor.
    Minor(MinorArgs),
    /// Test or enumerate positroids.
    Positroid(PositroidArgs),
    /// Oriented line-minor searches on a matrix.
    Oriented(OrientedArgs),
    /// Run verification checks and write reports.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Extremal,
    Whirl,
    Uniform,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("what").required(true).args(["family", "catalog"]))]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// One of M1..M8 or FIG2.
    #[arg(long)]
    catalog: Option<CatalogId>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Ground-set size for the uniform family.
    #[arg(long)]
    n: Option<usize>,
    /// Whirl-like variant with one extra point.
    #[arg(long)]
    plus: bool,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("against").required(true).args(["target", "uniform_line", "catalog"]))]
struct MinorArgs {
    #[arg(long)]
    host: PathBuf,
    #[arg(long)]
    target: Option<PathBuf>,
    /// Look for a U(2,k) minor.
    #[arg(long, value_name = "K")]
    uniform_line: Option<usize>,
    /// Look for any catalog matroid as a minor.
    #[arg(long)]
    catalog: bool,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["check", "enumerate"]))]
struct PositroidArgs {
    #[arg(long, value_name = "FILE")]
    check: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    simple: bool,
    #[arg(long)]
    connected: bool,
    #[arg(long = "3connected")]
    three_connected: bool,
    /// Drop positroids with a U(2,k) minor.
    #[arg(long, value_name = "K")]
    no_line_minor: Option<usize>,
    #[arg(long)]
    count_only: bool,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("query").required(true).args(["mono", "ramsey"]))]
struct OrientedArgs {
    /// Comma-separated rows of integers or fractions p/q.
    #[arg(long, value_name = "FILE")]
    matrix: PathBuf,
    /// Size of the monochromatic line to look for.
    #[arg(long, value_name = "K", requires = "polarity")]
    mono: Option<usize>,
    #[arg(long)]
    polarity: Option<Polarity>,
    #[arg(long, value_name = "L")]
    ramsey: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    All,
    TheoremMain,
    ExcludedCatalog,
    Prop31,
    Prop32,
    Lemma43,
    Conj61,
    Whirl,
    Oracle,
    MinorEquivalence,
    Ramsey,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    /// Rank for theorem-main; largest rank for lemma43 and whirl.
    #[arg(long)]
    r: Option<usize>,
    /// Line size for theorem-main and conj61; largest for lemma43 and whirl.
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "POSITROID_LAB_THREADS")]
    threads: Option<usize>,
    /// Allow the n = 9 linear-space corpus.
    #[arg(long)]
    long_run: bool,
    /// Report path; the manifest and reproducers are written beside it.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn construct(args: ConstructArgs) -> Result<ExitCode> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::InvalidParameters(format!("--{name} is required for this family")))
    };
    let m = match (args.catalog, args.family) {
        (Some(id), _) => catalog(id),
        (None, Some(Family::Extremal)) => extremal_family(need(args.r, "r")?, need(args.l, "l")?)?,
        (None, Some(Family::Whirl)) if args.plus => {
            whirl_like_plus(need(args.r, "r")?, need(args.l, "l")?)?
        }
        (None, Some(Family::Whirl)) => whirl_like(need(args.r, "r")?, need(args.l, "l")?)?,
        (None, Some(Family::Uniform)) => uniform(need(args.r, "r")?, need(args.n, "n")?)?,
        (None, None) => unreachable!("clap requires one of the two"),
    };
    print!("{}", to_text(&m));
    Ok(ExitCode::SUCCESS)
}

fn minor(args: MinorArgs) -> Result<ExitCode> {
    let host = read_file(&args.host)?;
    let found = if let Some(path) = args.target {
        has_minor(&host, &read_file(&path)?).map(|w| w.to_string())
    } else if let Some(k) = args.uniform_line {
        if has_uniform_line_minor(&host, k) {
            let w = has_minor(&host, &uniform(2, k)?).expect("the flat scan found a line minor");
            Some(w.to_string())
        } else {
            None
        }
    } else {
        find_catalog_minor(&host).map(|(id, w)| format!("{id} {w}"))
    };
    println!("{}", found.as_deref().unwrap_or("none"));
    Ok(ExitCode::SUCCESS)
}

fn positroid(args: PositroidArgs) -> Result<ExitCode> {
    if let Some(path) = args.check {
        let m = read_file(&path)?;
        match positroid_ordering(&m) {
            Some(order) => println!("{order}"),
            None => println!("NOT_POSITROID"),
        }
        return Ok(ExitCode::SUCCESS);
    }
    let n = args.enumerate.expect("clap requires one of the two");
    let filter = PositroidFilter {
        rank: args.rank,
        simple: args.simple,
        connected: args.connected,
        three_connected: args.three_connected,
        no_uniform_line_minor: args.no_line_minor,
    };
    let found = enumerate_positroids(n, &filter)?;
    if args.count_only {
        println!("{}", found.len());
    } else {
        print!("{}", to_text_stream(&found));
    }
    Ok(ExitCode::SUCCESS)
}

fn oriented(args: OrientedArgs) -> Result<ExitCode> {
    let matrix = IntMatrix::parse(&std::fs::read_to_string(&args.matrix)?)?;
    let chi = chirotope_from_matrix(&matrix)?;
    let out = if let Some(k) = args.mono {
        let polarity = args.polarity.expect("clap requires polarity with mono");
        let witness = monochromatic_line_minor(&chi, k, polarity)?;
        json!({ "k": k, "polarity": polarity, "found": witness.is_some(), "witness": witness })
    } else {
        let l = args.ramsey.expect("clap requires one of the two");
        serde_json::to_value(ramsey_scan(&chi, l)?)?
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode> {
    let mut config = RunConfig {
        seed: args.seed,
        threads: args.threads,
        allow_long_run: args.long_run,
        ..RunConfig::default()
    };
    if let Some(s) = args.samples {
        config.rank4_samples = s;
        config.ramsey_samples = s;
    }
    if let Some(n) = args.max_n {
        config.rank3_max_n = n;
        config.oracle_max_n = n;
        config.minor_equivalence_max_n = n;
    }
    match (args.r, args.l) {
        (Some(r), Some(l)) => config.size_bound_cases = vec![(r, l)],
        (None, None) => {}
        _ if args.check == Check::TheoremMain => {
            return Err(Error::InvalidParameters(
                "theorem-main takes both --r and --l or neither".into(),
            ))
        }
        _ => {}
    }
    if let Some(r) = args.r {
        config.tree_r_max = r;
        config.whirl_r_max = r;
    }
    if let Some(l) = args.l {
        config.tree_l_max = l;
        config.whirl_l_max = l;
        config.three_connected_l = vec![l];
    }
    let claims: Vec<ClaimId> = match args.check {
        Check::All => verify::ALL_CLAIMS.to_vec(),
        Check::TheoremMain => vec![ClaimId::ThmMain],
        Check::ExcludedCatalog => vec![ClaimId::ExcludedMinimality],
        Check::Prop31 => vec![ClaimId::Prop31],
        Check::Prop32 => vec![ClaimId::Prop32],
        Check::Lemma43 => vec![ClaimId::Lemma43],
        Check::Conj61 => vec![ClaimId::Conj61R3],
        Check::Whirl => vec![ClaimId::WhirlFamily],
        Check::Oracle => vec![ClaimId::OracleAgreement],
        Check::MinorEquivalence => vec![ClaimId::MinorTestEquivalence],
        Check::Ramsey => vec![ClaimId::RamseyL1],
    };
    let (reports, manifest) = verify::run_selected(&config, &claims)?;
    match &args.out {
        Some(path) => {
            let written = verify::write_outputs(&reports, Some(&manifest), path)?;
            for rep in &reports {
                let outcome = serde_json::to_value(rep.outcome)?;
                println!(
                    "{} {} {}",
                    rep.claim_id,
                    outcome.as_str().unwrap_or("?"),
                    serde_json::to_string(&rep.params)?
                );
            }
            for p in &written.reproducers {
                println!("reproducer {}", p.display());
            }
        }
        None => println!("{}", verify::reports_to_json(&reports)?),
    }
    if reports.iter().any(|r| r.outcome == Outcome::Counterexample) {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Minor(a) => minor(a),
        Command::Positroid(a) => positroid(a),
        Command::Oriented(a) => oriented(a),
        Command::Verify(a) => verify_cmd(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
