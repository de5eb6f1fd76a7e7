//! Thin command line frontend; all logic lives in the library.
//!
//! Exit codes: 0 on success, 1 on usage or parse problems, 2 when an
//! internal invariant failed (an integrity error, the tripwire for bugs).

use cherednik::report::{self, Format, QuotientKind};
use cherednik::Error;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "cherednik",
    version,
    about = "Exact computations with lowest weight representations of rational Cherednik algebras"
)]
struct Cli {
    /// Output format: text, json or csv
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Truncation degree override (defaults depend on the computation)
    #[arg(long, global = true)]
    cutoff: Option<u32>,
    /// Seed for randomized sampling
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for sweeps
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dunkl operator actions
    Dunkl {
        #[command(subcommand)]
        which: DunklCmd,
    },
    /// Closed-form singular vectors
    Singular {
        #[command(subcommand)]
        which: SingularCmd,
    },
    /// Quotient by the submodule generated by the degree-r singular vectors
    Quotient(QuotientArgs),
    /// Quotient by the per-degree radicals of the contravariant form
    Radical {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: Option<String>,
        #[arg(long, value_delimiter = ',')]
        c: Vec<String>,
        /// For S(n): fixes k = r/n
        #[arg(long)]
        r: Option<u32>,
    },
    /// Hilbert series of the closure or radical quotient
    Hilbert {
        #[command(flatten)]
        args: QuotientArgs,
        /// Which quotient: closure or radical
        #[arg(long, default_value = "closure")]
        of: String,
    },
    /// Character table of the quotient over conjugacy class representatives
    Character {
        #[command(flatten)]
        args: QuotientArgs,
        #[arg(long, default_value = "closure")]
        of: String,
    },
    /// Gorenstein and radical-vanishing tests for a finite quotient
    Gorenstein(QuotientArgs),
    /// Parameter loci
    Locus {
        #[command(subcommand)]
        which: LocusCmd,
    },
    /// Support predicates and the residue lemma oracle
    Support {
        #[command(subcommand)]
        which: SupportCmd,
    },
    /// Rank one multiplicities and characters, closed form vs brute force
    Rank1 {
        #[arg(long)]
        l: u32,
        #[arg(long, value_delimiter = ',')]
        c: Vec<String>,
    },
    /// Parameter sweeps with isolated per-point failures
    Sweep {
        #[command(subcommand)]
        which: SweepCmd,
    },
    /// Verify the Euler characteristic identity per conjugacy class
    EulerCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: Option<String>,
        #[arg(long, value_delimiter = ',')]
        c: Vec<String>,
        /// Truncation order of the identity
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
}

#[derive(clap::Args)]
struct QuotientArgs {
    /// Group descriptor: S(n), Z(l) or G(l,1,n)
    #[arg(long)]
    group: String,
    /// Degree of the singular vectors
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    k: Option<String>,
    #[arg(long, value_delimiter = ',')]
    c: Vec<String>,
}

#[derive(Subcommand)]
enum DunklCmd {
    /// Apply the Dunkl operator in one coordinate direction
    Apply {
        /// Group descriptor: S(n), Z(l) or G(l,1,n)
        #[arg(long)]
        group: String,
        /// Swap-reflection parameter k (exact rational or cyclotomic)
        #[arg(long)]
        k: Option<String>,
        /// Diagonal parameters c_1..c_{l-1}
        #[arg(long, value_delimiter = ',')]
        c: Vec<String>,
        /// Polynomial, e.g. "3/2*x1^2*x2 - x3"
        #[arg(long)]
        poly: String,
        /// Coordinate direction, 1-based
        #[arg(long)]
        direction: usize,
    },
}

#[derive(Subcommand)]
enum SingularCmd {
    /// Type A: S(n) at k = r/n
    #[command(alias = "typeA")]
    TypeA {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
    },
    /// Wreath product G(l,1,n) on the locus E_r
    Wreath {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: String,
        #[arg(long, value_delimiter = ',')]
        c: Vec<String>,
    },
}

#[derive(Subcommand)]
enum LocusCmd {
    /// Membership of k in Sigma_r
    Sigma {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: String,
    },
    /// Residual of the hyperplane equation of E_r
    Er {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: String,
        #[arg(long, value_delimiter = ',')]
        c: Vec<String>,
    },
}

#[derive(Subcommand)]
enum SupportCmd {
    /// Evaluate both support predicates at one point
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        /// Comma separated exact rationals
        #[arg(long)]
        point: String,
    },
    /// Randomized agreement sweep of the two predicates
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Randomized sweep of the residue lemma oracle
    Lemma {
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum SweepCmd {
    /// Wreath quotient finiteness over a list of k values
    Quotient {
        #[arg(long)]
        group: String,
        #[arg(long)]
        r: u32,
        /// Comma separated rational k values
        #[arg(long, value_delimiter = ',')]
        k: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        c: Vec<String>,
    },
    /// Rank one multiplicity tables over parameter points
    Rank1 {
        #[arg(long)]
        l: u32,
        /// Semicolon separated points, each a comma list of l-1 scalars
        #[arg(long, value_delimiter = ';')]
        points: Vec<String>,
    },
}

fn dispatch(cli: Cli) -> cherednik::Result<String> {
    let format: Format = cli.format.parse()?;
    let cutoff = cutoff_override(cli.cutoff)?;
    match cli.cmd {
        Cmd::Dunkl {
            which:
                DunklCmd::Apply {
                    group,
                    k,
                    c,
                    poly,
                    direction,
                },
        } => report::run_dunkl(&group, k.as_deref(), &c, &poly, direction, format),
        Cmd::Singular { which } => match which {
            SingularCmd::TypeA { n, r } => report::run_singular_type_a(n, r, format),
            SingularCmd::Wreath { l, n, r, k, c } => {
                report::run_singular_wreath(l, n, r, &k, &c, format)
            }
        },
        Cmd::Quotient(args) => {
            let setup = report::setup(&args.group, args.r, args.k.as_deref(), &args.c)?;
            let cutoff = cutoff.unwrap_or_else(|| report::default_cutoff(&setup));
            let rep = report::quotient_report(&setup, QuotientKind::Closure, cutoff, false)?;
            report::render_quotient(&rep, format)
        }
        Cmd::Radical { group, k, c, r } => {
            let setup = report::setup(&group, r, k.as_deref(), &c)?;
            let cutoff = cutoff.unwrap_or_else(|| report::default_cutoff(&setup));
            let rep = report::quotient_report(&setup, QuotientKind::Radical, cutoff, false)?;
            report::render_quotient(&rep, format)
        }
        Cmd::Hilbert { args, of } => {
            let kind = parse_kind(&of)?;
            let setup = report::setup(&args.group, args.r, args.k.as_deref(), &args.c)?;
            let cutoff = cutoff.unwrap_or_else(|| report::default_cutoff(&setup));
            let rep = report::quotient_report(&setup, kind, cutoff, false)?;
            report::render_quotient(&rep, format)
        }
        Cmd::Character { args, of } => {
            let kind = parse_kind(&of)?;
            let setup = report::setup(&args.group, args.r, args.k.as_deref(), &args.c)?;
            let cutoff = cutoff.unwrap_or_else(|| report::default_cutoff(&setup));
            report::run_character(&setup, kind, cutoff, format)
        }
        Cmd::Gorenstein(args) => {
            let setup = report::setup(&args.group, args.r, args.k.as_deref(), &args.c)?;
            let cutoff = cutoff.unwrap_or_else(|| report::default_cutoff(&setup));
            let rep = report::quotient_report(&setup, QuotientKind::Closure, cutoff, true)?;
            report::render_quotient(&rep, format)
        }
        Cmd::Locus { which } => match which {
            LocusCmd::Sigma { l, n, r, k } => report::run_locus_sigma(l, n, r, &k, format),
            LocusCmd::Er { l, n, r, k, c } => report::run_locus_er(l, n, r, &k, &c, format),
        },
        Cmd::Support { which } => match which {
            SupportCmd::Check { n, r, point } => report::run_support_check(n, r, &point, format),
            SupportCmd::Sample { n, r, count } => {
                report::run_support_sample(n, r, count, cli.seed, format)
            }
            SupportCmd::Lemma { count } => report::run_support_lemma(count, cli.seed, format),
        },
        Cmd::Rank1 { l, c } => {
            let cutoff = cutoff.unwrap_or(24);
            let rep = report::rank1_report(l, &c, cutoff)?;
            report::render_rank1(&rep, format)
        }
        Cmd::Sweep { which } => match which {
            SweepCmd::Quotient { group, r, k, c } => report::run_sweep_quotient(
                &group, r, &k, &c, cutoff, cli.jobs, format,
            ),
            SweepCmd::Rank1 { l, points } => {
                report::run_sweep_rank1(l, &points, cutoff.unwrap_or(24), format)
            }
        },
        Cmd::EulerCheck {
            group,
            r,
            k,
            c,
            order,
        } => {
            let setup = report::setup(&group, Some(r), k.as_deref(), &c)?;
            report::run_euler_check(&setup, r, order, format)
        }
    }
}

/// The effective cutoff override: the flag wins, then the CHEREDNIK_CUTOFF
/// environment variable, then each computation's own default.
fn cutoff_override(flag: Option<u32>) -> cherednik::Result<Option<u32>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("CHEREDNIK_CUTOFF") {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Error::domain("CHEREDNIK_CUTOFF must be a nonnegative integer")),
        Err(_) => Ok(None),
    }
}

fn parse_kind(s: &str) -> cherednik::Result<QuotientKind> {
    match s {
        "closure" => Ok(QuotientKind::Closure),
        "radical" => Ok(QuotientKind::Radical),
        other => Err(Error::domain(format!(
            "unknown quotient kind '{other}', expected closure or radical"
        ))),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match dispatch(cli) {
        Ok(out) => println!("{out}"),
        Err(Error::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(Error::Integrity(msg)) => {
            eprintln!("integrity error: {msg}");
            std::process::exit(2);
        }
    }
}
