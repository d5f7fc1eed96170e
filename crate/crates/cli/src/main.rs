use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use serde_json::json;

use qpart::diagrams::{self, Diagram};
use qpart::identities::{self, CaseId, VerificationReport};
use qpart::involutions;
use qpart::mocktheta;
use qpart::partitions::{self, Partition, PartitionFamily};
use qpart::sweeps::{self, InvolutionName};
use qpart::{DiagramStyle, TruncatedSeries};

const DEFAULT_MAX_ORDER: usize = 200;
const MAX_N: u32 = 60;
const MAX_ORDER_VAR: &str = "QPART_MAX_ORDER";

#[derive(Parser)]
#[command(name = "qpart", version, about = "Exact checks of sum-of-tails partition identities")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    Odd,
    Even,
}

impl From<Style> for DiagramStyle {
    fn from(s: Style) -> Self {
        match s {
            Style::Odd => DiagramStyle::OddRestricted,
            Style::Even => DiagramStyle::EvenRestricted,
        }
    }
}

#[derive(Clone, Copy)]
enum CaseSelector {
    One(CaseId),
    All,
    Mock9,
    Rank,
}

impl FromStr for CaseSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(CaseSelector::All),
            "mock9" => Ok(CaseSelector::Mock9),
            "rank" => Ok(CaseSelector::Rank),
            other => other
                .parse::<CaseId>()
                .map(CaseSelector::One)
                .map_err(|_| format!("unknown case {:?} (expected i..vi, all, mock9 or rank)", other)),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compare every route for one identity (or all of them).
    Verify {
        #[arg(long)]
        case: CaseSelector,
        #[arg(long, default_value_t = 60)]
        order: usize,
    },
    /// Exhaustively check one of the pairings on all partitions up to a size.
    Involution {
        #[arg(long, value_parser = parse_involution)]
        name: InvolutionName,
        #[arg(long = "max-n", default_value_t = 30)]
        max_n: u32,
    },
    /// Render the 2/1 diagram of a partition.
    Diagram {
        /// Parts, e.g. 8,7,5,4,4.
        #[arg(long, allow_hyphen_values = true)]
        parts: Partition,
        #[arg(long, value_enum)]
        style: Style,
        /// Also show the partner under the pairing for this style.
        #[arg(long)]
        pair: bool,
    },
    /// List both sides of the rank identity at one size.
    Catalog {
        #[arg(long)]
        n: u32,
    },
    /// List the partitions of n in a family.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "all")]
        family: PartitionFamily,
    },
    /// Randomized consistency checks of the series ring and partition maps.
    Selftest {
        #[arg(long, default_value_t = 200)]
        trials: u32,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
}

fn parse_involution(s: &str) -> Result<InvolutionName, String> {
    s.parse()
}

enum Failure {
    /// Bad input, guard violation or arithmetic overflow: exit 2.
    Input(String),
    /// A check ran and found a discrepancy: exit 1.
    Mismatch,
}

impl<E: fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn max_order() -> Result<usize, Failure> {
    match std::env::var(MAX_ORDER_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{} must be a nonnegative integer, got {:?}", MAX_ORDER_VAR, v))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn check_order(order: usize) -> Outcome {
    let limit = max_order()?;
    if order > limit {
        return Err(Failure::Input(format!(
            "order {} exceeds the limit {} (set {} to raise it)",
            order, limit, MAX_ORDER_VAR
        )));
    }
    Ok(())
}

fn check_n(n: u32, flag: &str) -> Outcome {
    if n > MAX_N {
        return Err(Failure::Input(format!("{} {} exceeds the limit {}", flag, n, MAX_N)));
    }
    Ok(())
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn verdict(passed: bool) -> Outcome {
    if passed {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn cmd_verify(case: CaseSelector, order: usize, format: Format) -> Outcome {
    check_order(order)?;
    let reports: Vec<VerificationReport> = match case {
        CaseSelector::One(c) => vec![identities::verify(c, order)?],
        CaseSelector::Mock9 => vec![mocktheta::verify_identity9(order)?],
        CaseSelector::Rank => vec![mocktheta::verify_rank(order)?],
        CaseSelector::All => {
            let jobs: Vec<Box<dyn Fn() -> qpart::series::Result<VerificationReport> + Send + Sync>> = CaseId::ALL
                .into_iter()
                .map(|c| Box::new(move || identities::verify(c, order)) as Box<_>)
                .chain([
                    Box::new(move || mocktheta::verify_identity9(order)) as Box<_>,
                    Box::new(move || mocktheta::verify_rank(order)) as Box<_>,
                ])
                .collect();
            let results: Vec<_> = std::thread::scope(|s| {
                let handles: Vec<_> = jobs.iter().map(|job| s.spawn(job)).collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("verification thread panicked"))
                    .collect()
            });
            results.into_iter().collect::<Result<_, _>>()?
        }
    };
    match (format, case) {
        (Format::Json, CaseSelector::All) => print_json(&reports),
        (Format::Json, _) => print_json(&reports[0]),
        (Format::Text, _) => reports.iter().for_each(|r| println!("{}", r)),
    }
    verdict(reports.iter().all(|r| r.equal))
}

fn cmd_involution(name: InvolutionName, max_n: u32, format: Format) -> Outcome {
    check_n(max_n, "--max-n")?;
    let report = sweeps::run(name, max_n);
    match format {
        Format::Json => print_json(&report),
        Format::Text => println!("{}", report),
    }
    verdict(report.passed())
}

fn partner(lambda: &Partition, style: DiagramStyle) -> Result<Option<Partition>, Failure> {
    let image = match style {
        DiagramStyle::OddRestricted => involutions::sigma_odd(lambda),
        DiagramStyle::EvenRestricted => involutions::sigma_even(lambda),
    };
    match image {
        Ok(p) => Ok(Some(p)),
        Err(involutions::InvolutionError::Exceptional { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn to_diagram(lambda: &Partition, style: DiagramStyle) -> Result<Diagram, Failure> {
    Ok(match style {
        DiagramStyle::OddRestricted => diagrams::to_odd_diagram(lambda)?,
        DiagramStyle::EvenRestricted => diagrams::to_even_diagram(lambda)?,
    })
}

fn cmd_diagram(parts: &Partition, style: Style, pair: bool, format: Format) -> Outcome {
    let style = DiagramStyle::from(style);
    let diagram = to_diagram(parts, style)?;
    let paired = if pair {
        match partner(parts, style)? {
            Some(p) => Some((to_diagram(&p, style)?, p)),
            None => None,
        }
    } else {
        None
    };
    match format {
        Format::Json => {
            let mut value = json!({ "partition": parts, "diagram": diagram });
            if pair {
                value["partner"] = match &paired {
                    Some((d, p)) => json!({ "partition": p, "diagram": d }),
                    None => serde_json::Value::Null,
                };
            }
            print_json(&value);
        }
        Format::Text => {
            println!("{} ({})", parts, style);
            println!("{}", diagram.render());
            if pair {
                match &paired {
                    Some((d, p)) => {
                        println!("\npaired with {}", p);
                        println!("{}", d.render());
                    }
                    None => println!("\nexceptional: left unpaired"),
                }
            }
        }
    }
    Ok(())
}

fn cmd_catalog(n: u32, format: Format) -> Outcome {
    check_n(n, "--n")?;
    let catalog = mocktheta::catalog(n);
    match format {
        Format::Json => print!("{}", catalog.to_json_lines()),
        Format::Text => print!("{}", catalog.to_table()),
    }
    verdict(catalog.left_total() == catalog.right_total())
}

fn cmd_enumerate(n: u32, family: PartitionFamily, format: Format) -> Outcome {
    check_n(n, "--n")?;
    match format {
        Format::Json => {
            let all = partitions::enumerate(n, family);
            print_json(&json!({ "n": n, "family": family, "count": all.len(), "partitions": all }));
        }
        Format::Text => {
            let mut count = 0usize;
            partitions::for_each(n, family, |l| {
                count += 1;
                println!("{}", l);
            });
            println!("{} partitions of {} in {}", count, n, family);
        }
    }
    Ok(())
}

fn random_series(rng: &mut StdRng, order: usize, unit: bool) -> TruncatedSeries {
    // Unit coefficients stay small so the inverse fits in i64 at the default order.
    let bound = if unit { 2 } else { 9 };
    let mut coeffs: Vec<i64> = (0..=order).map(|_| rng.random_range(-bound..=bound)).collect();
    if unit {
        coeffs[0] = if rng.random_bool(0.5) { 1 } else { -1 };
    }
    TruncatedSeries::from_coeffs(order, coeffs).expect("length matches order")
}

fn random_partition(rng: &mut StdRng) -> Partition {
    let len = rng.random_range(0..12);
    let parts = (0..len).map(|_| rng.random_range(1..=16)).collect();
    Partition::from_unsorted(parts).expect("parts are positive")
}

fn selftest_failures(trials: u32, order: usize, seed: u64) -> Result<Vec<String>, Failure> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let one = TruncatedSeries::one(order);
    for t in 0..trials {
        let a = random_series(&mut rng, order, false);
        let b = random_series(&mut rng, order, false);
        let c = random_series(&mut rng, order, false);
        let u = random_series(&mut rng, order, true);
        let checks = [
            ("commutative", a.mul(&b)? == b.mul(&a)?),
            ("associative", a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?),
            ("distributive", a.mul(&b.add(&c)?)? == a.mul(&b)?.add(&a.mul(&c)?)?),
            ("inverse", u.mul(&u.invert_unit()?)? == one),
        ];
        let l = random_partition(&mut rng);
        let mut partition_checks = vec![("conjugate", l.conjugate().conjugate() == l)];
        if PartitionFamily::NoRepeatedOdd.contains(&l) {
            let d = diagrams::to_odd_diagram(&l)?;
            partition_checks.push(("odd diagram", diagrams::from_odd_diagram(&d)? == l));
            let back = involutions::sigma_odd(&involutions::sigma_odd(&l)?)?;
            partition_checks.push(("sigma-odd", back == l));
        }
        if PartitionFamily::Distinct.contains(&l) {
            match involutions::franklin(&l) {
                Ok(m) => partition_checks.push(("franklin", involutions::franklin(&m)? == l)),
                Err(involutions::InvolutionError::Exceptional { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }
        for (name, ok) in checks.into_iter().chain(partition_checks) {
            if !ok {
                failures.push(format!("trial {}: {} failed", t, name));
            }
        }
    }
    Ok(failures)
}

fn cmd_selftest(trials: u32, order: usize, seed: u64, format: Format) -> Outcome {
    check_order(order)?;
    let failures = selftest_failures(trials, order, seed)?;
    match format {
        Format::Json => print_json(&json!({ "seed": seed, "trials": trials, "order": order, "failures": failures })),
        Format::Text => {
            println!(
                "seed {}: {} trials at order {}, {} failures",
                seed,
                trials,
                order,
                failures.len()
            );
            failures.iter().for_each(|f| println!("  {}", f));
        }
    }
    verdict(failures.is_empty())
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Verify { case, order } => cmd_verify(case, order, format),
        Command::Involution { name, max_n } => cmd_involution(name, max_n, format),
        Command::Diagram { parts, style, pair } => cmd_diagram(&parts, style, pair, format),
        Command::Catalog { n } => cmd_catalog(n, format),
        Command::Enumerate { n, family } => cmd_enumerate(n, family, format),
        Command::Selftest { trials, order } => cmd_selftest(trials, order, cli.seed, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
