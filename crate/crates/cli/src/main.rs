mod conjecture;
mod render;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use dyck_atlas::bijection::{dtr, dtr_inverse, dts, dts_inverse};
use dyck_atlas::dyckpath::{DyckPath, SkewShape};
use dyck_atlas::matching::{match_of, min_word};
use dyck_atlas::permstat::Permutation;
use dyck_atlas::poly::IntPolynomial;
use dyck_atlas::tiling::{enumerate_all, enumerate_tilings, genfun, DyckTiling};
use dyck_atlas::treeposet::{
    descent_polynomial, growth_sequence, labeling_of_sigma, q_hook_polynomial, sigma_of_labeling,
    tree_from_growth, ChordPoset, GrowthSequence,
};
use dyck_atlas::MAX_EXHAUSTIVE_ORDER;

use verify::Suite;

#[derive(Parser)]
#[command(
    name = "dyck-atlas",
    version,
    about = "Dyck tilings, chord posets and the DTS/DTR bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the cover-inclusive tilings with lower path LAMBDA
    Enumerate {
        #[arg(long)]
        lambda: DyckPath,
        /// Fix the upper path; otherwise every upper path is allowed
        #[arg(long)]
        mu: Option<DyckPath>,
        #[arg(long, value_enum, default_value_t = EnumFormat::Text)]
        format: EnumFormat,
    },
    /// Build a tiling from a linear extension or a growth sequence
    #[command(group(ArgGroup::new("source").required(true).args(["sigma", "p"])))]
    Apply {
        #[arg(value_enum)]
        map: MapKind,
        #[arg(long)]
        lambda: Option<DyckPath>,
        /// Linear extension in one-line notation, e.g. 2,3,1,4
        #[arg(long, requires = "lambda")]
        sigma: Option<Permutation>,
        /// Growth sequence, e.g. 0,1,0,5
        #[arg(long)]
        p: Option<GrowthSequence>,
        /// Write the tiling here; without it the tiling goes to stdout and
        /// the stats line to stderr
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the growth sequence and linear extension of a tiling file
    Invert {
        #[arg(value_enum)]
        map: MapKind,
        input: PathBuf,
    },
    /// Run exhaustive checks of the counting identities
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Run every suite at MAX_N even past the default sweep limits
        #[arg(long)]
        unsafe_max_n: bool,
    },
    /// Print a generating function of the tilings with lower path LAMBDA
    Genfun {
        #[arg(long)]
        lambda: DyckPath,
        #[arg(long)]
        mu: Option<DyckPath>,
        /// q: art, z: discrepancy, x: (area - tiles) / 2, t: tiles
        #[arg(long, value_enum, default_value_t = Variable::Q)]
        variable: Variable,
    },
    /// Compare tiling statistics across paths with isomorphic chord trees
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        unsafe_max_n: bool,
    },
    /// Draw a tiling file
    Render {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFormat {
    Text,
    Count,
    Stats,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Dts,
    Dtr,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variable {
    Q,
    Z,
    X,
    T,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<dyck_atlas::Error> for CliError {
    fn from(e: dyck_atlas::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

/// Order limits; `DYCK_ATLAS_MAX_N` replaces every one of them.
struct Limits {
    shapes: usize,
    permutations: usize,
    cap: usize,
    conjecture: usize,
}

impl Limits {
    fn from_env() -> CliResult<Limits> {
        let Ok(raw) = std::env::var("DYCK_ATLAS_MAX_N") else {
            return Ok(Limits {
                shapes: 5,
                permutations: 6,
                cap: 7,
                conjecture: 6,
            });
        };
        let n: usize = raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("DYCK_ATLAS_MAX_N={raw:?} is not a number")))?;
        if n > MAX_EXHAUSTIVE_ORDER {
            return Err(CliError::Usage(format!(
                "DYCK_ATLAS_MAX_N={n} exceeds the hard limit {MAX_EXHAUSTIVE_ORDER}"
            )));
        }
        Ok(Limits {
            shapes: n,
            permutations: n,
            cap: n,
            conjecture: n,
        })
    }
}

fn check_order(n: usize, limit: usize, unsafe_max_n: bool) -> CliResult {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(CliError::Usage(format!(
            "order {n} exceeds the hard limit {MAX_EXHAUSTIVE_ORDER}"
        )));
    }
    if n > limit && !unsafe_max_n {
        return Err(CliError::Usage(format!(
            "order {n} exceeds the limit {limit}; pass --unsafe-max-n to run it anyway"
        )));
    }
    Ok(())
}

fn read_tiling(path: &Path) -> CliResult<DyckTiling> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    Ok(text.parse()?)
}

fn write_or_print(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn tilings(lambda: &DyckPath, mu: Option<&DyckPath>) -> CliResult<Vec<DyckTiling>> {
    Ok(match mu {
        Some(mu) => enumerate_tilings(&SkewShape::new(lambda.clone(), mu.clone())?)?,
        None => enumerate_all(lambda)?,
    })
}

fn stats_line(t: &DyckTiling) -> String {
    format!(
        "lower {} upper {} area {} tiles {} art {} dis {}",
        t.lower(),
        t.upper(),
        t.area(),
        t.tile_count(),
        t.art(),
        t.dis()
    )
}

fn enumerate(lambda: &DyckPath, mu: Option<&DyckPath>, format: EnumFormat) -> CliResult {
    let all = tilings(lambda, mu)?;
    match format {
        EnumFormat::Count => println!("{}", all.len()),
        EnumFormat::Text => {
            let blocks: Vec<String> = all.iter().map(DyckTiling::to_string).collect();
            print!("{}", blocks.join("\n"));
        }
        EnumFormat::Stats => {
            println!("upper area tiles art dis");
            for t in &all {
                println!(
                    "{} {} {} {} {}",
                    t.upper(),
                    t.area(),
                    t.tile_count(),
                    t.art(),
                    t.dis()
                );
            }
        }
    }
    Ok(())
}

fn apply(
    map: MapKind,
    lambda: Option<DyckPath>,
    sigma: Option<Permutation>,
    p: Option<GrowthSequence>,
    out: Option<&Path>,
) -> CliResult {
    let p = match (sigma, p) {
        (Some(sigma), _) => {
            let lambda = lambda.expect("clap requires --lambda with --sigma");
            let poset = ChordPoset::new(&lambda);
            growth_sequence(&poset, &labeling_of_sigma(&poset, &sigma)?)?
        }
        (None, Some(p)) => {
            let (tree, _) = tree_from_growth(&p);
            if let Some(lambda) = lambda {
                if tree != lambda {
                    return Err(CliError::Domain(format!(
                        "growth sequence {p} builds the path {tree}, not {lambda}"
                    )));
                }
            }
            p
        }
        (None, None) => unreachable!("clap requires --sigma or --p"),
    };
    let t = match map {
        MapKind::Dts => dts(&p),
        MapKind::Dtr => dtr(&p),
    };
    match out {
        Some(_) => {
            write_or_print(out, &t.to_string())?;
            println!("{}", stats_line(&t));
        }
        None => {
            print!("{t}");
            eprintln!("{}", stats_line(&t));
        }
    }
    Ok(())
}

fn invert(map: MapKind, input: &Path) -> CliResult {
    let t = read_tiling(input)?;
    let p = match map {
        MapKind::Dts => dts_inverse(&t)?,
        MapKind::Dtr => dtr_inverse(&t)?,
    };
    let (lambda, labeling) = tree_from_growth(&p);
    let sigma = sigma_of_labeling(&ChordPoset::new(&lambda), &labeling)?;
    println!("lambda {lambda}");
    println!("p {p}");
    println!("sigma {sigma}");
    println!("min-word {}", min_word(&match_of(&p)));
    Ok(())
}

fn run_verify(max_n: usize, suite: Suite, unsafe_max_n: bool, limits: &Limits) -> CliResult<bool> {
    check_order(max_n, limits.cap, unsafe_max_n)?;
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut ok = true;
    for s in suites {
        let limit = if s.is_permutation_sweep() {
            limits.permutations
        } else {
            limits.shapes
        };
        let n = if unsafe_max_n {
            max_n
        } else {
            max_n.min(limit)
        };
        let (passed, line) = s.report(n, (n < max_n).then_some(max_n));
        println!("{line}");
        ok &= passed;
    }
    Ok(ok)
}

fn run_genfun(lambda: &DyckPath, mu: Option<&DyckPath>, variable: Variable) -> CliResult<String> {
    let poly = match (variable, mu) {
        (Variable::Q, None) => q_hook_polynomial(&ChordPoset::new(lambda)),
        (Variable::Z, None) => descent_polynomial(&ChordPoset::new(lambda))?,
        (Variable::X, Some(mu)) => genfun(&SkewShape::new(lambda.clone(), mu.clone())?),
        (Variable::X, None) => lambda
            .paths_above()
            .into_iter()
            .map(|mu| genfun(&SkewShape::new(lambda.clone(), mu).expect("paths_above stays above")))
            .fold(IntPolynomial::zero(), |acc, f| &acc + &f),
        (Variable::Q, Some(mu)) => {
            IntPolynomial::from_exponents(tilings(lambda, Some(mu))?.iter().map(DyckTiling::art))
        }
        (Variable::Z, Some(mu)) => {
            IntPolynomial::from_exponents(tilings(lambda, Some(mu))?.iter().map(DyckTiling::dis))
        }
        (Variable::T, mu) => {
            IntPolynomial::from_exponents(tilings(lambda, mu)?.iter().map(DyckTiling::tile_count))
        }
    };
    let var = match variable {
        Variable::Q => "q",
        Variable::Z => "z",
        Variable::X => "x",
        Variable::T => "t",
    };
    Ok(poly.format_with(var))
}

fn run(cli: Cli) -> CliResult<bool> {
    let limits = Limits::from_env()?;
    match cli.command {
        Command::Enumerate { lambda, mu, format } => enumerate(&lambda, mu.as_ref(), format)?,
        Command::Apply {
            map,
            lambda,
            sigma,
            p,
            out,
        } => apply(map, lambda, sigma, p, out.as_deref())?,
        Command::Invert { map, input } => invert(map, &input)?,
        Command::Verify {
            max_n,
            suite,
            unsafe_max_n,
        } => return run_verify(max_n, suite, unsafe_max_n, &limits),
        Command::Genfun {
            lambda,
            mu,
            variable,
        } => println!("{}", run_genfun(&lambda, mu.as_ref(), variable)?),
        Command::Conjecture { n, unsafe_max_n } => {
            check_order(n, limits.conjecture, unsafe_max_n)?;
            print!("{}", conjecture::report(n)?);
        }
        Command::Render { input, format, out } => {
            let t = read_tiling(&input)?;
            let text = match format {
                RenderFormat::Ascii => render::ascii(&t),
                RenderFormat::Svg => render::svg(&t),
            };
            write_or_print(out.as_deref(), &text)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
