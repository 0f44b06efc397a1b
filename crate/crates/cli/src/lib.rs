//! Command-line interface for the `polysat` library.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use polysat::construct::{
    build_pj, feasible_nca, from_delta_with_realizer, realize_nca, FeasibilityVerdict,
};
use polysat::graphdual::{
    conjugate, feasible_dual_nac, find_realizer, is_co_polyunsaturated, pj_realizer, Realizer,
};
use polysat::io::{export_dot, read_poset, write_poset};
use polysat::kfamily::{d_sequence, DeltaSequence};
use polysat::poset::enumerate_posets;
use polysat::saturation::{is_polyunsaturated, min_sum_norm};
use polysat::{Error, Limits, Poset};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "polysat",
    version,
    about = "Saturated chain partitions and polyunsaturated posets"
)]
pub struct Cli {
    /// Largest poset accepted by the exhaustive searches.
    #[arg(long, global = true, default_value_t = 16)]
    pub limit_n: usize,
    /// Wall-clock budget for a single search; 0 disables it.
    #[arg(long, global = true, default_value_t = 600)]
    pub budget_seconds: u64,
    /// Worker threads for the parallel searches.
    #[arg(long, global = true, env = "POLYSAT_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a poset and print it as JSON (or DOT).
    Construct {
        #[command(subcommand)]
        what: Construct,
        /// Print Graphviz DOT instead of JSON.
        #[arg(long, global = true)]
        dot: bool,
    },
    /// Print d_k and Δd_k for every k up to the height.
    DkTable {
        #[command(flatten)]
        input: Input,
        /// CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Decide polyunsaturation; exits 0 if polyunsaturated, 1 if not.
    Certify {
        #[command(flatten)]
        input: Input,
    },
    /// Look for a chain partition saturated for every listed k; exits 1 if none.
    Saturate {
        #[command(flatten)]
        input: Input,
        /// Comma-separated values of k, e.g. 1,3.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
    },
    /// Questions about the complement of the comparability graph.
    Dual {
        #[command(subcommand)]
        what: Dual,
    },
    /// Print every poset on n elements up to isomorphism, one JSON per line.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Check the feasibility conditions; exits 0 if feasible, 1 if not.
    Feasible {
        #[arg(long)]
        n: usize,
        /// Height, or clique number with --dual.
        #[arg(long)]
        c: usize,
        /// Width, or independence number with --dual.
        #[arg(long)]
        a: usize,
        #[arg(long)]
        dual: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// The poset P_j.
    Pj {
        #[arg(long)]
        j: usize,
    },
    /// A polyunsaturated poset with the given difference sequence.
    Delta {
        #[arg(long)]
        b: DeltaSequence,
    },
    /// A polyunsaturated poset with n elements, height c and width a.
    Nca {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        a: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Dual {
    /// Co-polyunsaturation, certified on the conjugate; exits 1 if it fails.
    Certify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        realizer: RealizerArg,
    },
    /// d_k of the conjugate, i.e. ω_k of the comparability graph.
    DkTable {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        realizer: RealizerArg,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Poset JSON file, or `-` for standard input.
    #[arg(conflicts_with = "inline")]
    pub path: Option<PathBuf>,
    /// Poset JSON given on the command line.
    #[arg(long)]
    pub inline: Option<String>,
}

#[derive(Debug, Args)]
pub struct RealizerArg {
    /// Two comma-separated linear extensions, in the input's labels.
    #[arg(long, num_args = 2, value_names = ["EXT1", "EXT2"])]
    pub realizer: Option<Vec<String>>,
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            max_n: self.limit_n,
            budget: (self.budget_seconds > 0).then(|| Duration::from_secs(self.budget_seconds)),
        }
    }
}

/// Runs a parsed command, returning the process exit code.
pub fn run(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => e.fmt(f),
            Failure::Io(e) => e.fmt(f),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn execute(cli: &Cli, out: &mut impl Write) -> Outcome {
    let limits = cli.limits();
    match &cli.command {
        Command::Construct { what, dot } => {
            let (p, r) = match *what {
                Construct::Pj { j } => {
                    if j == 0 {
                        return Err(Error::BadParameters("j must be at least 1".into()).into());
                    }
                    (build_pj(j).0, pj_realizer(j))
                }
                Construct::Delta { ref b } => from_delta_with_realizer(b)?,
                Construct::Nca { n, c, a } => realize_nca(n, c, a)?,
            };
            if *dot {
                out.write_all(export_dot(&p).as_bytes())?;
            } else {
                out.write_all(write_poset(&p, Some(&r)).as_bytes())?;
            }
            Ok(EXIT_OK)
        }
        Command::DkTable { input, csv } => {
            let (p, _) = load(input)?;
            dk_table(&p, *csv, out)?;
            Ok(EXIT_OK)
        }
        Command::Certify { input } => {
            let (p, _) = load(input)?;
            let report = is_polyunsaturated(&p, &limits)?;
            print_json(out, &report)?;
            Ok(if report.polyunsaturated {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Saturate { input, k } => {
            let (p, _) = load(input)?;
            let d = d_sequence(&p)?;
            let floor: usize = k.iter().map(|&k| d.get(k)).sum();
            let (value, partition) = min_sum_norm(&p, k, &limits)?;
            let saturated = value == floor;
            print_json(
                out,
                &SaturateReport {
                    ks: k,
                    d: k.iter().map(|&k| d.get(k)).collect(),
                    min_sum_norm: value,
                    saturated,
                    partition: saturated.then_some(&partition),
                },
            )?;
            Ok(if saturated { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Dual { what } => match what {
            Dual::Certify { input, realizer } => {
                let (p, r) = load_with_realizer(input, realizer)?;
                let report = is_co_polyunsaturated(&p, &r, &limits)?;
                print_json(out, &report)?;
                Ok(if report.polyunsaturated {
                    EXIT_OK
                } else {
                    EXIT_NEGATIVE
                })
            }
            Dual::DkTable {
                input,
                realizer,
                csv,
            } => {
                let (p, r) = load_with_realizer(input, realizer)?;
                dk_table(&conjugate(&p, &r)?.poset, *csv, out)?;
                Ok(EXIT_OK)
            }
        },
        Command::Enumerate { n } => {
            for p in enumerate_posets(*n)? {
                out.write_all(write_poset(&p, None).as_bytes())?;
            }
            Ok(EXIT_OK)
        }
        Command::Feasible { n, c, a, dual } => {
            let verdict: FeasibilityVerdict = if *dual {
                feasible_dual_nac(*n, *a, *c)?
            } else {
                feasible_nca(*n, *c, *a)?
            };
            print_json(out, &verdict)?;
            Ok(if verdict.feasible {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}

#[derive(Serialize)]
struct SaturateReport<'a, P: Serialize> {
    ks: &'a [usize],
    d: Vec<usize>,
    min_sum_norm: usize,
    saturated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    partition: Option<P>,
}

#[derive(Serialize)]
struct DkTable {
    n: usize,
    height: usize,
    d: Vec<usize>,
    delta: Vec<usize>,
}

fn dk_table(p: &Poset, csv: bool, out: &mut impl Write) -> Outcome {
    let d = d_sequence(p)?;
    let delta = d.delta();
    if csv {
        writeln!(out, "k,d_k,delta_k")?;
        for (i, (dk, bk)) in d.as_slice().iter().zip(delta.as_slice()).enumerate() {
            writeln!(out, "{},{dk},{bk}", i + 1)?;
        }
    } else {
        print_json(
            out,
            &DkTable {
                n: p.n(),
                height: d.len(),
                d: d.as_slice().to_vec(),
                delta: delta.as_slice().to_vec(),
            },
        )?;
    }
    Ok(EXIT_OK)
}

fn print_json(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn read_input(input: &Input) -> io::Result<String> {
    match (&input.inline, &input.path) {
        (Some(json), _) => Ok(json.clone()),
        (None, Some(path)) if path.as_os_str() != "-" => std::fs::read_to_string(path),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn load(input: &Input) -> std::result::Result<(Poset, Option<Realizer>), Failure> {
    Ok(read_poset(&read_input(input)?)?)
}

/// Loads a poset with a realizer: the one given on the command line, else
/// the one carried by the file, else one found by search.
fn load_with_realizer(
    input: &Input,
    arg: &RealizerArg,
) -> std::result::Result<(Poset, Realizer), Failure> {
    let mut json = read_input(input)?;
    if let Some(exts) = &arg.realizer {
        let r = Realizer::parse(&exts[0], &exts[1])?;
        let mut value: serde_json::Value =
            serde_json::from_str(&json).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = value
            .as_object_mut()
            .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        obj.insert(
            "realizer".into(),
            serde_json::to_value(r).expect("plain data"),
        );
        json = value.to_string();
    }
    let (p, r) = read_poset(&json)?;
    let r = match r {
        Some(r) => r,
        None => find_realizer(&p)?.ok_or_else(|| {
            Error::InvalidRealizer("the poset has dimension greater than two".into())
        })?,
    };
    Ok((p, r))
}
