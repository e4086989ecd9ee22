use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use intertwining::matrix::{adjacency_matrix, rank_control};
use intertwining::partition::{enumerate, enumerate_with_prefix, rgs_prefixes};
use intertwining::poset::Poset;
use intertwining::qpoly::{self, generating_polynomial, h_polynomial, Statistic};
use intertwining::stats::{dual_major_index, intertwining, parviainen_phi, IntertwiningMethod};
use intertwining::verify::{self, Check, VerifyConfig};
use intertwining::{ExportFormat, IntPolynomial, SetPartition, StatReport};

#[derive(Parser)]
#[command(
    name = "intertwining",
    version,
    about = "Set-partition statistics, rank-control matrices and q-polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of {1..n} in RGS order.
    Enumerate(EnumerateArgs),
    /// All statistics of one partition.
    Stats {
        #[arg(long)]
        partition: SetPartition,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Image of a partition under the Parviainen bijection.
    Phi {
        #[arg(long)]
        partition: SetPartition,
    },
    /// Adjacency and rank-control matrices with the D and E statistics.
    Matrix {
        #[arg(long)]
        partition: SetPartition,
    },
    /// The Bruhat-Chevalley-Renner order on partitions of {1..n}.
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PosetFormat::Json)]
        format: PosetFormat,
    },
    /// q-Stirling, q-Bell, H and X/Y polynomials.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Run identity checks exhaustively over small n.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Only partitions with this many blocks.
    #[arg(long)]
    blocks: Option<usize>,
    #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
    format: ListFormat,
    /// Attach statistics; always on for csv.
    #[arg(long)]
    with_stats: bool,
}

#[derive(Subcommand)]
enum PolyCommand {
    /// S_q(n, k).
    Stirling {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// B_n(q) = Σ_k S_q(n, k), or its value at an integer.
    Bell {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<i64>,
    },
    /// H_n(q, t) = Σ_k S_q(n, k) t^k.
    H {
        #[arg(long)]
        n: usize,
        /// Check Σ_k S_q(n,k)(1−q)^(n−k) = 1 instead of printing.
        #[arg(long)]
        check_identity: bool,
    },
    /// X_n(q), the depth-index generating function.
    Xn {
        #[arg(long)]
        n: usize,
    },
    /// Y_n(q), the intertwining-number generating function.
    Yn {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(
        long,
        required_unless_present = "all",
        conflicts_with = "all",
        value_parser = PossibleValuesParser::new(Check::ALL.map(Check::name)).map(|s| s.parse::<Check>().expect("listed"))
    )]
    check: Option<Check>,
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = intertwining::matrix::DEFAULT_PRIME)]
    prime: u64,
    /// Random trials per partition for randomized checks.
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Csv,
    Lines,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
}

enum Failure {
    Usage(String),
    Verification,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate(args) => run_enumerate(args, out),
        Command::Stats { partition, format } => {
            let report = stats_json(&partition);
            match format {
                ReportFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("json")
                )?,
                ReportFormat::Text => {
                    for (key, value) in report.as_object().expect("object") {
                        writeln!(out, "{key}: {}", plain(value))?;
                    }
                }
            }
            Ok(())
        }
        Command::Phi { partition } => {
            let image = parviainen_phi(&partition);
            let doc = json!({
                "partition": partition.to_short_string(),
                "image": image.to_short_string(),
                "intertwining": intertwining(&partition.to_arc_diagram(), IntertwiningMethod::ExtendedArcs),
                "image_dual_major": dual_major_index(&image),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
            Ok(())
        }
        Command::Matrix { partition } => {
            let m = adjacency_matrix(&partition.to_arc_diagram());
            let r = rank_control(&m).expect("adjacency matrices are partial permutations");
            let doc = json!({
                "partition": partition.to_short_string(),
                "arcs": partition.to_arc_diagram().arcs(),
                "M": m.rows(),
                "R": r.rows(),
                "D": r.d_statistic(),
                "E": r.e_statistic(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
            Ok(())
        }
        Command::Poset { n, format } => {
            let poset = Poset::build(n).map_err(usage)?;
            let format = match format {
                PosetFormat::Dot => ExportFormat::Dot,
                PosetFormat::Json => ExportFormat::Json,
            };
            let text = poset.export(format);
            write!(out, "{text}")?;
            if !text.ends_with('\n') {
                writeln!(out)?;
            }
            Ok(())
        }
        Command::Poly(cmd) => run_poly(cmd, out),
        Command::Verify(args) => run_verify(args, out),
    }
}

fn plain(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn stats_json(p: &SetPartition) -> Value {
    let mut doc = json!({
        "partition": p.to_short_string(),
        "rgs": p.to_rgs().as_slice(),
        "blocks": p.num_blocks(),
        "arcs": p.n() - p.num_blocks(),
    });
    let report = serde_json::to_value(StatReport::new(p)).expect("json");
    let map = doc.as_object_mut().expect("object");
    for (key, value) in report.as_object().expect("object") {
        map.insert(key.clone(), value.clone());
    }
    doc
}

#[derive(Serialize)]
struct CsvRow {
    rgs: String,
    partition: String,
    blocks: usize,
    arcs: usize,
    i: usize,
    t: usize,
    dualmaj: usize,
    dimexp: usize,
    nestings: usize,
    crossings: usize,
}

impl CsvRow {
    fn new(p: &SetPartition) -> Self {
        let s = StatReport::new(p);
        CsvRow {
            rgs: p.to_rgs().to_string(),
            partition: p.to_short_string(),
            blocks: p.num_blocks(),
            arcs: p.n() - p.num_blocks(),
            i: s.intertwining,
            t: s.depth_index,
            dualmaj: s.dual_major,
            dimexp: s.dimension_exponent,
            nestings: s.nestings,
            crossings: s.crossings,
        }
    }
}

/// Applies `f` to every partition, in parallel over RGS prefixes, and
/// returns the results in RGS order.
fn map_partitions<T: Send>(
    n: usize,
    blocks: Option<usize>,
    f: impl Fn(&SetPartition) -> T + Sync,
) -> Vec<T> {
    rgs_prefixes(n, 4)
        .par_iter()
        .map(|prefix| {
            enumerate_with_prefix(n, blocks, prefix)
                .expect("validated")
                .map(|p| f(&p))
                .collect::<Vec<T>>()
        })
        .collect::<Vec<Vec<T>>>()
        .into_iter()
        .flatten()
        .collect()
}

fn run_enumerate(args: EnumerateArgs, out: &mut impl Write) -> Result<(), Failure> {
    let EnumerateArgs {
        n,
        blocks,
        format,
        with_stats,
    } = args;
    // Validates n and k before any output.
    let stream = enumerate(n, blocks).map_err(usage)?;
    match format {
        ListFormat::Lines if !with_stats => {
            for p in stream {
                writeln!(out, "{p}")?;
            }
        }
        ListFormat::Lines => {
            let lines = map_partitions(n, blocks, |p| {
                let s = StatReport::new(p);
                format!("{p}\ti={}\tt={}", s.intertwining, s.depth_index)
            });
            for line in lines {
                writeln!(out, "{line}")?;
            }
        }
        ListFormat::Csv => {
            let rows = map_partitions(n, blocks, CsvRow::new);
            let mut writer = csv::Writer::from_writer(out);
            for row in rows {
                writer.serialize(row)?;
            }
            writer.flush()?;
        }
        ListFormat::Json => {
            let items: Vec<Value> = if with_stats {
                map_partitions(n, blocks, stats_json)
            } else {
                stream
                    .map(|p| json!({ "partition": p.to_short_string(), "rgs": p.to_rgs().as_slice() }))
                    .collect()
            };
            let doc =
                json!({ "n": n, "blocks": blocks, "count": items.len(), "partitions": items });
            writeln!(out, "{}", serde_json::to_string(&doc).expect("json"))?;
        }
    }
    Ok(())
}

fn q_bell(n: usize) -> IntPolynomial {
    (0..=n).fold(IntPolynomial::zero(), |acc, k| {
        &acc + &qpoly::q_stirling(n, k)
    })
}

fn run_poly(cmd: PolyCommand, out: &mut impl Write) -> Result<(), Failure> {
    match cmd {
        PolyCommand::Stirling { n, k } => writeln!(out, "{}", qpoly::q_stirling(n, k))?,
        PolyCommand::Bell { n, eval: None } => writeln!(out, "{}", q_bell(n))?,
        PolyCommand::Bell { n, eval: Some(x) } => writeln!(out, "{}", q_bell(n).eval_i64(x))?,
        PolyCommand::H {
            n,
            check_identity: false,
        } => writeln!(out, "{}", h_polynomial(n))?,
        PolyCommand::H {
            n,
            check_identity: true,
        } => {
            let lhs = qpoly::h_identity_lhs(n);
            if lhs.is_one() {
                writeln!(out, "PASS h-identity n={n}")?;
            } else {
                writeln!(out, "FAIL h-identity n={n}: sum is {lhs}")?;
                return Err(Failure::Verification);
            }
        }
        PolyCommand::Xn { n } | PolyCommand::Yn { n } if n == 0 => {
            return Err(usage("n must be positive"));
        }
        PolyCommand::Xn { n } => {
            writeln!(out, "{}", generating_polynomial(n, Statistic::DepthIndex))?
        }
        PolyCommand::Yn { n } => {
            writeln!(out, "{}", generating_polynomial(n, Statistic::Intertwining))?
        }
    }
    Ok(())
}

fn run_verify(args: VerifyArgs, out: &mut impl Write) -> Result<(), Failure> {
    if args.max_n == 0 {
        return Err(usage("--max-n must be positive"));
    }
    let config = VerifyConfig {
        max_n: args.max_n,
        seed: args.seed,
        prime: args.prime,
        trials: args.trials,
    };
    let outcomes = match args.check {
        Some(check) => vec![verify::run(check, &config)],
        None => verify::run_all(&config),
    };
    match args.format {
        ReportFormat::Text => {
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
        }
        ReportFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&outcomes).expect("json")
        )?,
    }
    if outcomes.iter().all(|o| o.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
