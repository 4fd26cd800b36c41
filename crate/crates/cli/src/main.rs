//! Command-line front end: identity verification runs, wall enumeration,
//! per-wall statistics, folding/unfolding of Kostant expressions, and
//! orbit-intersection queries.
//!
//! Exit codes: 0 for success (and verified identities), 1 for an identity
//! mismatch, 2 for malformed input or configuration.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gyw::gk::{self, VerificationReport};
use gyw::kostant::{wall_to_kostant, KostantExpr};
use gyw::young_wall::{enumerate_reduced_proper, enumerate_y0};
use gyw::{CartanData, RootVector, Wall};

#[derive(Parser)]
#[command(
    name = "gyw",
    version,
    about = "Generalized Young wall combinatorics and affine Gindikin-Karpelevich identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Gindikin-Karpelevich product/sum identity up to a degree.
    VerifyGk {
        #[arg(long)]
        n: usize,
        /// Total-height cutoff; defaults to a desk-scale bound per rank.
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Verify the correction-factor product/sum identity up to a degree.
    VerifyCorrection {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Verify the combined intersection generating-function identity.
    VerifyIg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Stream reduced proper walls with at most the given number of boxes.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        boxes: u64,
        /// Restrict to walls with empty class-(n+1) rows.
        #[arg(long)]
        y0: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the statistics of one wall (inline JSON or a file path).
    Stats {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        wall: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Fold or unfold a Kostant expression given in JSON form.
    Kostant {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "unfold")]
        fold: Option<String>,
        #[arg(long)]
        unfold: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the orbit-intersection counting polynomial for gamma.
    Intersections {
        #[arg(long)]
        n: usize,
        /// Comma-separated coefficients a_0,a_1,...,a_n of gamma.
        #[arg(long)]
        gamma: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cartan(n: usize) -> Result<CartanData, String> {
    CartanData::new(n).map_err(|e| format!("--n: {e}"))
}

/// Default cutoffs sized for sub-minute runs.
fn default_degree(n: usize) -> u32 {
    match n {
        1 => 10,
        2 => 9,
        _ => 8,
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::VerifyGk { n, degree, format } => {
            let cartan = cartan(n)?;
            let degree = degree.unwrap_or_else(|| default_degree(n));
            report_outcome(gk::verify_main(cartan, degree), "gk", format)
        }
        Command::VerifyCorrection { n, degree, format } => {
            let cartan = cartan(n)?;
            let degree = degree.unwrap_or_else(|| default_degree(n));
            report_outcome(gk::verify_correction(cartan, degree), "correction", format)
        }
        Command::VerifyIg { n, degree, format } => {
            let cartan = cartan(n)?;
            let degree = degree.unwrap_or_else(|| default_degree(n));
            report_outcome(gk::verify_ig(cartan, degree), "ig", format)
        }
        Command::Enumerate {
            n,
            boxes,
            y0,
            format,
        } => {
            let cartan = cartan(n)?;
            let walls = if y0 {
                enumerate_y0(cartan, boxes)
            } else {
                enumerate_reduced_proper(cartan, boxes)
            };
            for wall in walls {
                match format {
                    Format::Json => println!("{}", wall.to_json()),
                    Format::Table => println!("{wall}"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { n, wall, format } => {
            let cartan = cartan(n)?;
            let wall = load_wall(cartan, &wall)?;
            let text = stats_output(&wall, format)?;
            println!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Kostant {
            n,
            fold,
            unfold,
            format,
        } => {
            let cartan = cartan(n)?;
            let (input, folding) = match (fold, unfold) {
                (Some(text), None) => (text, true),
                (None, Some(text)) => (text, false),
                _ => return Err("exactly one of --fold or --unfold is required".into()),
            };
            let expr = KostantExpr::from_json(cartan, &input)
                .map_err(|e| format!("--fold/--unfold: {e}"))?;
            let result = if folding { expr.fold() } else { expr.unfold() };
            match format {
                Format::Json => println!("{}", result.to_json()),
                Format::Table => println!("{result}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Intersections { n, gamma, format } => {
            let cartan = cartan(n)?;
            let gamma = parse_gamma(cartan, &gamma)?;
            let poly = gk::intersection_polynomial(cartan, &gamma);
            match format {
                Format::Json => {
                    let negative_powers = poly.min_exp().is_some_and(|e| e < 0);
                    println!(
                        "{}",
                        serde_json::json!({
                            "n": cartan.n(),
                            "gamma": gamma.coeffs(),
                            "polynomial": poly.to_string(),
                            "negative_powers": negative_powers,
                        })
                    );
                }
                Format::Table => println!("{poly}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn report_outcome(
    report: VerificationReport,
    identity: &str,
    format: Format,
) -> Result<ExitCode, String> {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "identity    {identity}").unwrap();
            writeln!(out, "n           {}", report.n).unwrap();
            writeln!(out, "degree      {}", report.cutoff).unwrap();
            writeln!(out, "walls       {}", report.wall_count).unwrap();
            writeln!(out, "factors     {}", report.root_count).unwrap();
            write!(out, "equal       {}", report.equal).unwrap();
            if let Some(m) = &report.first_mismatch {
                writeln!(out).unwrap();
                writeln!(out, "gamma       {}", m.gamma).unwrap();
                writeln!(out, "lhs         {}", m.lhs).unwrap();
                write!(out, "rhs         {}", m.rhs).unwrap();
            }
            println!("{out}");
        }
    }
    if report.equal {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

/// Accepts inline JSON (anything starting with '{') or a path to a file
/// holding the same JSON.
fn load_wall(cartan: CartanData, input: &str) -> Result<Wall, String> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("--wall: cannot read {input}: {e}"))?
    };
    let wall = Wall::from_json(&text).map_err(|e| format!("--wall: {e}"))?;
    if wall.cartan().n() != cartan.n() {
        return Err(format!(
            "--n: flag says {}, wall JSON says {}",
            cartan.n(),
            wall.cartan().n()
        ));
    }
    Ok(wall)
}

fn parse_gamma(cartan: CartanData, text: &str) -> Result<RootVector, String> {
    let coeffs: Vec<u32> = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| format!("--gamma: invalid coefficient {part:?}"))
        })
        .collect::<Result<_, _>>()?;
    RootVector::from_coeffs(cartan, coeffs).map_err(|e| format!("--gamma: {e}"))
}

/// Serializes the full statistics bundle for one wall. The JSON field order
/// is written out by hand so golden output stays byte-stable.
fn stats_output(wall: &Wall, format: Format) -> Result<String, String> {
    let stats = wall.stat_components().map_err(|e| format!("--wall: {e}"))?;
    let n_stat = wall.stat_n().expect("membership already checked");
    let split = wall.split_rows().expect("membership already checked");
    let n_via_split = split.len() as u64;
    let psi = wall_to_kostant(wall).expect("membership already checked");
    let unfolded = psi.unfold();
    let distinct = unfolded.distinct_parts();
    let m_stat = wall
        .is_in_y0()
        .then(|| wall.stat_m().expect("membership already checked"));
    let split_triples: Vec<(usize, u32, u64)> = split
        .iter()
        .map(|(&(class, len), &mult)| (class, len, mult))
        .collect();
    match format {
        Format::Json => {
            // Values are pre-rendered strings so the expression sub-objects
            // keep their canonical real/imag/delta key order.
            let fields: Vec<(&str, String)> = vec![
                ("n", serde_json::json!(wall.cartan().n()).to_string()),
                ("rows", serde_json::json!(wall.rows()).to_string()),
                (
                    "weight",
                    serde_json::json!(wall.weight().coeffs()).to_string(),
                ),
                ("boxes", serde_json::json!(wall.box_count()).to_string()),
                (
                    "S",
                    serde_json::json!(stats
                        .s_sets
                        .iter()
                        .map(|s| s.iter().copied().collect::<Vec<_>>())
                        .collect::<Vec<_>>())
                    .to_string(),
                ),
                ("pq", serde_json::json!(stats.pq).to_string()),
                (
                    "Q",
                    serde_json::json!(stats.q_set.iter().copied().collect::<Vec<_>>()).to_string(),
                ),
                ("P", serde_json::json!(stats.p_stat).to_string()),
                ("N", serde_json::json!(n_stat).to_string()),
                ("split_rows", serde_json::json!(split_triples).to_string()),
                ("N_via_split", serde_json::json!(n_via_split).to_string()),
                ("psi", psi.to_json()),
                ("psi_text", serde_json::json!(psi.to_string()).to_string()),
                ("unfolded", unfolded.to_json()),
                (
                    "unfolded_text",
                    serde_json::json!(unfolded.to_string()).to_string(),
                ),
                ("distinct_parts", serde_json::json!(distinct).to_string()),
                ("M", serde_json::json!(m_stat).to_string()),
            ];
            let mut out = String::from("{");
            for (idx, (key, value)) in fields.iter().enumerate() {
                if idx > 0 {
                    out.push(',');
                }
                write!(out, "\"{key}\":{value}").unwrap();
            }
            out.push('}');
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "wall            {wall}").unwrap();
            writeln!(out, "weight          {}", wall.weight()).unwrap();
            writeln!(out, "boxes           {}", wall.box_count()).unwrap();
            for (idx, set) in stats.s_sets.iter().enumerate() {
                let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
                writeln!(out, "S_{}             {{{}}}", idx + 1, items.join(",")).unwrap();
            }
            let pq: Vec<String> = stats.pq.iter().map(|(p, q)| format!("({p},{q})")).collect();
            writeln!(out, "pq              [{}]", pq.join(",")).unwrap();
            let q_items: Vec<String> = stats.q_set.iter().map(|v| v.to_string()).collect();
            writeln!(out, "Q               {{{}}}", q_items.join(",")).unwrap();
            writeln!(out, "P               {}", stats.p_stat).unwrap();
            writeln!(out, "N               {n_stat}").unwrap();
            let rows: Vec<String> = split_triples
                .iter()
                .map(|(class, len, mult)| format!("(class {class}, len {len}) x{mult}"))
                .collect();
            writeln!(out, "split rows      {}", rows.join(", ")).unwrap();
            writeln!(out, "N via split     {n_via_split}").unwrap();
            writeln!(out, "psi             {psi}").unwrap();
            writeln!(out, "unfolded        {unfolded}").unwrap();
            writeln!(out, "distinct parts  {distinct}").unwrap();
            match m_stat {
                Some(m) => write!(out, "M               {m}").unwrap(),
                None => write!(out, "M               - (not in Y_0)").unwrap(),
            }
            Ok(out)
        }
    }
}
