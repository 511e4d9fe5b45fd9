//! The `parking` command line.
//!
//! Exit codes: 0 success or verified, 1 a valid input with a negative
//! result (a car fails to park, a count mismatch, a failed check), 2 usage
//! error, 3 budget refusal. Results go to the output stream, diagnostics
//! to the error stream. With `--json` every invocation prints one JSON
//! document with `command`, `sizes` and `flavor` at the top level; counts
//! are decimal strings.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::count::{count_circular, count_linear};
use crate::error::Error;
use crate::oracle::{
    check_bijection, verify_sweep, verify_with, BijectionReport, EnumerationReport, VerifyOptions,
    DEFAULT_BUDGET,
};
use crate::park::{parse_list, simulate, Flavor, ParkResult, PrefSequence, SizeVector};
use crate::pollak::{sample_circular, sample_linear};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "parking",
    version,
    about = "Parking sequences for cars of different sizes"
)]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct LotArgs {
    /// Car sizes, comma separated (e.g. 2,2,1).
    #[arg(long, value_parser = parse_sizes)]
    pub sizes: SizeVector,

    /// Park on a circle of T + 1 spots instead of a line of T spots.
    #[arg(long)]
    pub circular: bool,
}

impl LotArgs {
    fn flavor(&self) -> Flavor {
        flavor(self.circular)
    }
}

fn flavor(circular: bool) -> Flavor {
    if circular {
        Flavor::Circular
    } else {
        Flavor::Linear
    }
}

fn parse_sizes(s: &str) -> Result<SizeVector, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Comma-separated preferred spots.
#[derive(Debug, Clone)]
pub struct Prefs(pub Vec<usize>);

fn parse_prefs(s: &str) -> Result<Prefs, String> {
    parse_list(s).map(Prefs).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the parking rule on one preference tuple.
    Simulate {
        #[command(flatten)]
        lot: LotArgs,
        /// Preferred spots, comma separated.
        #[arg(long, value_parser = parse_prefs)]
        prefs: Prefs,
    },
    /// Print the exact number of parking sequences.
    Count {
        #[command(flatten)]
        lot: LotArgs,
    },
    /// Brute-force the count and compare it with the product formula.
    Verify {
        /// Car sizes of a single instance.
        #[arg(long, value_parser = parse_sizes, conflicts_with_all = ["max_cars", "max_total"])]
        sizes: Option<SizeVector>,
        /// Sweep every composition with at most this many cars.
        #[arg(long, requires = "max_total")]
        max_cars: Option<usize>,
        /// Sweep every composition with total size at most this.
        #[arg(long, requires = "max_cars")]
        max_total: Option<usize>,
        /// Count circular parking sequences instead of linear ones.
        #[arg(long)]
        circular: bool,
        /// Maximum number of tuples simulated per instance.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Number of lexicographic blocks processed in parallel.
        #[arg(long)]
        partitions: Option<usize>,
    },
    /// Check the divider decoding, restriction and rotation correspondences.
    Bijection {
        #[arg(long, value_parser = parse_sizes)]
        sizes: SizeVector,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Draw parking sequences uniformly at random.
    Sample {
        #[command(flatten)]
        lot: LotArgs,
        /// Number of sequences to draw.
        #[arg(long)]
        count: usize,
        /// Seed of the random generator.
        #[arg(long)]
        seed: u64,
    },
}

/// Output of one invocation.
struct Report {
    code: i32,
    text: String,
    json: Value,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let written = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("json")
                )
            } else {
                out.write_all(report.text.as_bytes())
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Simulate { lot, prefs } => cmd_simulate(lot, &prefs.0),
        Command::Count { lot } => Ok(cmd_count(lot)),
        Command::Verify {
            sizes,
            max_cars,
            max_total,
            circular,
            budget,
            partitions,
        } => {
            let mut opts = VerifyOptions::default().with_budget(*budget);
            if let Some(p) = partitions {
                opts = opts.with_partitions(*p);
            }
            let sweep = match (max_cars, max_total) {
                (Some(n), Some(t)) => Some((*n, *t)),
                _ => None,
            };
            cmd_verify(sizes.as_ref(), sweep, flavor(*circular), &opts)
        }
        Command::Bijection { sizes, budget } => cmd_bijection(sizes, *budget),
        Command::Sample { lot, count, seed } => Ok(cmd_sample(lot, *count, *seed)),
    }
}

fn header(
    command: &str,
    sizes: Option<&SizeVector>,
    flavor: Flavor,
) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("command".into(), json!(command));
    map.insert("sizes".into(), json!(sizes));
    map.insert("flavor".into(), json!(flavor));
    map
}

fn span(start: usize, end: usize) -> String {
    if start == end {
        start.to_string()
    } else {
        format!("{start}-{end}")
    }
}

fn cmd_simulate(lot: &LotArgs, prefs: &[usize]) -> Result<Report, Error> {
    let flavor = lot.flavor();
    let prefs = PrefSequence::new(prefs.to_vec(), flavor);
    let result = simulate(&lot.sizes, &prefs)?;
    let mut doc = header("simulate", Some(&lot.sizes), flavor);
    doc.insert("prefs".into(), json!(prefs.as_slice()));
    let (code, text) = match &result {
        ParkResult::Parked(layout) => {
            let cars: Vec<Value> = (1..=layout.placed())
                .map(|car| {
                    json!({
                        "car": car,
                        "start": layout.start(car),
                        "end": layout.end(car),
                    })
                })
                .collect();
            let empty = match flavor {
                Flavor::Circular => layout.empty_spots().first().copied(),
                Flavor::Linear => None,
            };
            doc.insert("result".into(), json!("parked"));
            doc.insert("cars".into(), Value::Array(cars));
            doc.insert("empty_spot".into(), json!(empty));
            let mut line = String::from("parked:");
            for (car, start, end) in layout.blocks_by_spot() {
                line.push_str(&format!(" C{car}@{}", span(start, end)));
            }
            if let Some(spot) = empty {
                line.push_str(&format!(" empty@{spot}"));
            }
            (EXIT_OK, line + "\n")
        }
        ParkResult::Collision {
            car,
            first_empty,
            blocked,
        } => {
            doc.insert("result".into(), json!("collision"));
            doc.insert("car".into(), json!(car));
            doc.insert("first_empty".into(), json!(first_empty));
            doc.insert("blocked".into(), json!(blocked));
            (
                EXIT_NEGATIVE,
                format!("collision: car {car} blocked at spot {blocked} (first empty spot {first_empty})\n"),
            )
        }
        ParkResult::PastEnd { car } => {
            doc.insert("result".into(), json!("past_end"));
            doc.insert("car".into(), json!(car));
            (EXIT_NEGATIVE, format!("past end: car {car}\n"))
        }
    };
    Ok(Report {
        code,
        text,
        json: Value::Object(doc),
    })
}

fn cmd_count(lot: &LotArgs) -> Report {
    let flavor = lot.flavor();
    let count = match flavor {
        Flavor::Linear => count_linear(&lot.sizes),
        Flavor::Circular => count_circular(&lot.sizes),
    };
    let mut doc = header("count", Some(&lot.sizes), flavor);
    doc.insert("count".into(), json!(count));
    Report {
        code: EXIT_OK,
        text: format!("{count}\n"),
        json: Value::Object(doc),
    }
}

fn report_line(r: &EnumerationReport) -> String {
    format!(
        "{} {}: {} tuples, {} parked, {} collisions, {} past end, formula {}, {}\n",
        r.sizes,
        r.flavor,
        r.total_tuples,
        r.parked,
        r.collisions,
        r.past_end,
        r.formula_value,
        if r.matches { "MATCH" } else { "MISMATCH" }
    )
}

fn cmd_verify(
    sizes: Option<&SizeVector>,
    sweep: Option<(usize, usize)>,
    flavor: Flavor,
    opts: &VerifyOptions,
) -> Result<Report, Error> {
    let reports = match (sizes, sweep) {
        (Some(sizes), _) => vec![verify_with(sizes, flavor, opts)?],
        (None, Some((max_n, max_total))) => verify_sweep(max_n, max_total, flavor, opts)?,
        (None, None) => {
            return Err(Error::Parse {
                input: String::new(),
                reason: "verify needs --sizes or --max-cars with --max-total".into(),
            })
        }
    };
    let all_match = reports.iter().all(|r| r.matches);
    let mut text: String = reports.iter().map(report_line).collect();
    if sweep.is_some() {
        let mismatches = reports.iter().filter(|r| !r.matches).count();
        text.push_str(&format!(
            "{} instances, {}\n",
            reports.len(),
            if all_match {
                "all MATCH".to_string()
            } else {
                format!("{mismatches} MISMATCH")
            }
        ));
    }
    let mut doc = header("verify", sizes, flavor);
    if let Some((max_n, max_total)) = sweep {
        doc.insert("max_cars".into(), json!(max_n));
        doc.insert("max_total".into(), json!(max_total));
    }
    doc.insert("reports".into(), json!(reports));
    doc.insert("all_match".into(), json!(all_match));
    Ok(Report {
        code: if all_match { EXIT_OK } else { EXIT_NEGATIVE },
        text,
        json: Value::Object(doc),
    })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn bijection_text(r: &BijectionReport) -> String {
    let mut text = format!("sizes {} (M = {})\n", r.sizes, r.sizes.circle());
    text.push_str(&format!(
        "decode: {} option sequences, {} distinct, {} replay to the decoded layout: {}\n",
        r.option_sequences,
        r.distinct_decodes,
        r.valid_decodes,
        verdict(r.decode_pass)
    ));
    text.push_str(&format!(
        "cardinality: {} decoded, {} circular parking sequences, formula {}: {}\n",
        r.distinct_decodes,
        r.circular_parking_sequences,
        r.formula_value,
        verdict(r.cardinality_pass)
    ));
    text.push_str(&format!(
        "restriction: {} with spot M empty, {} linear parking sequences: {}\n",
        r.restricted,
        r.linear_parking_sequences,
        verdict(r.restriction_pass)
    ));
    if let Some(set) = &r.restriction_set {
        let listed: Vec<String> = set
            .iter()
            .map(|p| {
                format!(
                    "({})",
                    p.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        text.push_str(&format!("restriction set: {}\n", listed.join(" ")));
    }
    text.push_str(&format!(
        "rotation: {} orbits of size {}, closed and empty-spot equivariant: {}\n",
        r.rotation_orbits,
        r.sizes.circle(),
        verdict(r.rotation_pass)
    ));
    text
}

fn cmd_bijection(sizes: &SizeVector, budget: u64) -> Result<Report, Error> {
    let report = check_bijection(sizes, budget)?;
    let mut doc = header("bijection", Some(sizes), Flavor::Circular);
    doc.insert("report".into(), json!(report));
    doc.insert("pass".into(), json!(report.passed()));
    Ok(Report {
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        },
        text: bijection_text(&report),
        json: Value::Object(doc),
    })
}

fn cmd_sample(lot: &LotArgs, count: usize, seed: u64) -> Report {
    let flavor = lot.flavor();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<PrefSequence> = (0..count)
        .map(|_| match flavor {
            Flavor::Linear => sample_linear(&lot.sizes, &mut rng),
            Flavor::Circular => sample_circular(&lot.sizes, &mut rng),
        })
        .collect();
    let text = samples.iter().map(|p| format!("{p}\n")).collect();
    let mut doc = header("sample", Some(&lot.sizes), flavor);
    doc.insert("seed".into(), json!(seed));
    doc.insert("count".into(), json!(count));
    doc.insert(
        "samples".into(),
        json!(samples
            .iter()
            .map(PrefSequence::as_slice)
            .collect::<Vec<_>>()),
    );
    Report {
        code: EXIT_OK,
        text,
        json: Value::Object(doc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("parking").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn simulate_text() {
        let (code, out, _) = call(&["simulate", "--sizes", "2,2,1", "--prefs", "2,3,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "parked: C3@1 C1@2-3 C2@4-5\n");
        let (code, out, _) = call(&["simulate", "--sizes", "2,2", "--prefs", "1,4", "--circular"]);
        assert_eq!(code, 0);
        assert_eq!(out, "parked: C1@1-2 C2@4-5 empty@3\n");
    }

    #[test]
    fn usage_errors() {
        let (code, out, err) = call(&["simulate", "--sizes", "2,2", "--prefs", "9,1"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("outside [1, 4]"), "{err}");
        assert_eq!(call(&["simulate", "--sizes", "2,0", "--prefs", "1,1"]).0, 2);
        assert_eq!(call(&["count"]).0, 2);
        assert_eq!(call(&["sample", "--sizes", "2,2", "--count", "1"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
