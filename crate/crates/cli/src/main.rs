//! `lucky-cars`: tables, sweeps, and cross-checks for the lucky-car /
//! Quicksort identity, on the command line.
//!
//! Exit codes: 0 on success (including empty query results), 1 when a
//! verification-style command finds a mismatch, 2 on usage errors or
//! refused resource caps.

mod checks;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lucky_cars::{enumeration, parking, quicksort, sequences, Count, Rational};

/// Largest `n` the enumeration commands accept without `--allow-big`:
/// `7^7` is 823,543 lists, comfortably instant.
const DEFAULT_ENUM_CAP: usize = 7;

/// Largest `n` for the sequence-side sweeps (`table` rows, `verify`
/// identities). Everything is exact big-number arithmetic; this cap keeps
/// accidental `--max-n 10000` runs from looking like a hang.
const MAX_SEQ_N: usize = 200;

#[derive(Parser)]
#[command(
    name = "lucky-cars",
    version,
    about = "Count lucky cars in parking preference lists and tie the counts \
             to Quicksort comparison totals, exactly",
    propagate_version = true
)]
struct Cli {
    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long, global = true, value_name = "T")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate L_n, A_n and Q_n next to their brute-force counterparts.
    Table {
        /// Last row of the table (rows run from n = 2).
        #[arg(long, default_value_t = 8)]
        max_n: usize,

        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,

        /// Populate the brute-force column up to n = 9 instead of 7.
        #[arg(long)]
        allow_big: bool,
    },

    /// Run every cross-check and print a JSON report.
    Verify {
        /// Largest n for the exhaustive n^n-list sweeps.
        #[arg(long, default_value_t = 7)]
        max_enum_n: usize,

        /// Largest n for the sequence identities.
        #[arg(long, default_value_t = 100)]
        max_seq_n: usize,

        /// Allow enumeration sweeps at n = 8 and 9.
        #[arg(long)]
        allow_big: bool,
    },

    /// Stream preference lists with lucky counts and parking assignments.
    Enumerate {
        /// List length n.
        n: usize,

        /// Keep only lists with exactly this many lucky cars.
        #[arg(long, value_name = "K")]
        lucky: Option<usize>,

        /// Keep only parking functions.
        #[arg(long)]
        pf_only: bool,

        /// Allow n = 8 and 9.
        #[arg(long)]
        allow_big: bool,
    },

    /// Sort the given keys with rightmost-pivot Quicksort, counting
    /// pivot comparisons.
    Quicksort {
        /// Comma-separated distinct integer keys, e.g. "2,5,3,1,8,7,6,4".
        /// Negative keys are fine.
        #[arg(allow_hyphen_values = true)]
        keys: String,

        /// Show each recursion level before the count.
        #[arg(long)]
        trace: bool,
    },

    /// Print the parking-function lucky polynomial, brute-forced and in
    /// product form, side by side.
    Poly {
        /// List length n.
        n: usize,

        /// Allow n = 8 and 9.
        #[arg(long)]
        allow_big: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command)),
            Err(err) => Err(format!("could not build a {threads}-thread pool: {err}")),
        },
        None => dispatch(cli.command),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Runs one subcommand. `Ok(false)` means "ran fine, but a verification
/// failed" (exit 1); `Err` is a usage or input problem (exit 2).
fn dispatch(command: Command) -> Result<bool, String> {
    match command {
        Command::Table {
            max_n,
            format,
            allow_big,
        } => cmd_table(max_n, format, allow_big),
        Command::Verify {
            max_enum_n,
            max_seq_n,
            allow_big,
        } => cmd_verify(max_enum_n, max_seq_n, allow_big),
        Command::Enumerate {
            n,
            lucky,
            pf_only,
            allow_big,
        } => cmd_enumerate(n, lucky, pf_only, allow_big),
        Command::Quicksort { keys, trace } => cmd_quicksort(&keys, trace),
        Command::Poly { n, allow_big } => cmd_poly(n, allow_big),
    }
}

/// Refuses sizes the enumeration engine will not sweep, and big sweeps
/// the user did not explicitly ask for.
fn enumeration_gate(n: usize, allow_big: bool) -> Result<(), String> {
    if !(1..=enumeration::MAX_ENUM_N).contains(&n) {
        return Err(format!(
            "n = {n} is outside the supported range 1..={}",
            enumeration::MAX_ENUM_N
        ));
    }
    if n > DEFAULT_ENUM_CAP && !allow_big {
        return Err(format!(
            "n = {n} means sweeping {} lists; pass --allow-big if you mean it",
            enumeration::list_count(n)
        ));
    }
    Ok(())
}

/// One `table` row. Counts are serialized as decimal strings because they
/// outgrow every machine integer (A_21 already exceeds 2^64); absent
/// brute-force columns serialize as empty CSV fields / JSON nulls.
#[derive(Serialize)]
struct TableRow {
    n: usize,
    l_closed: String,
    a_total: String,
    q_expected: String,
    l_brute: Option<String>,
    quicksort_total: Option<String>,
}

fn cmd_table(max_n: usize, format: Format, allow_big: bool) -> Result<bool, String> {
    if max_n < 2 {
        return Err("--max-n must be at least 2".into());
    }
    if max_n > MAX_SEQ_N {
        return Err(format!("--max-n {max_n} exceeds the cap of {MAX_SEQ_N}"));
    }
    let enum_cap = if allow_big {
        enumeration::MAX_ENUM_N
    } else {
        DEFAULT_ENUM_CAP
    };
    let mut rows = Vec::with_capacity(max_n - 1);
    for n in 2..=max_n {
        let l_closed = sequences::l_closed_form::<Count>(n).map_err(|e| e.to_string())?;
        let a_total = sequences::a_total::<Count>(n).map_err(|e| e.to_string())?;
        let q = sequences::q_expected_closed::<Rational>(n);
        let l_brute = if n <= enum_cap {
            Some(
                enumeration::count_lucky_n_minus_1(n)
                    .map_err(|e| e.to_string())?
                    .to_string(),
            )
        } else {
            None
        };
        let quicksort_total = if n <= quicksort::MAX_SORT_N {
            Some(
                quicksort::total_over_all_permutations(n)
                    .map_err(|e| e.to_string())?
                    .to_string(),
            )
        } else {
            None
        };
        rows.push(TableRow {
            n,
            l_closed: l_closed.to_string(),
            a_total: a_total.to_string(),
            q_expected: render::ratio(&q),
            l_brute,
            quicksort_total,
        });
    }
    match format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout().lock());
            for row in &rows {
                writer.serialize(row).map_err(|e| e.to_string())?;
            }
            writer.flush().map_err(|e| e.to_string())?;
        }
        Format::Json => {
            let rendered = serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())?;
            println!("{rendered}");
        }
    }
    Ok(true)
}

fn cmd_verify(max_enum_n: usize, max_seq_n: usize, allow_big: bool) -> Result<bool, String> {
    if !(2..=enumeration::MAX_ENUM_N).contains(&max_enum_n) {
        return Err(format!(
            "--max-enum-n must be in 2..={}",
            enumeration::MAX_ENUM_N
        ));
    }
    if max_enum_n > DEFAULT_ENUM_CAP && !allow_big {
        return Err(format!(
            "--max-enum-n {max_enum_n} means sweeping {} lists; pass --allow-big if you mean it",
            enumeration::list_count(max_enum_n)
        ));
    }
    if !(1..=MAX_SEQ_N).contains(&max_seq_n) {
        return Err(format!("--max-seq-n must be in 1..={MAX_SEQ_N}"));
    }
    let report = checks::run_all(max_enum_n, max_seq_n);
    let rendered = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    println!("{rendered}");
    Ok(report.passed())
}

fn cmd_enumerate(
    n: usize,
    lucky: Option<usize>,
    pf_only: bool,
    allow_big: bool,
) -> Result<bool, String> {
    enumeration_gate(n, allow_big)?;
    // Rows only, no header: a filtered-to-nothing query prints nothing.
    let mut writer = csv::Writer::from_writer(std::io::stdout().lock());
    let lists = enumeration::enumerate_lists(n).map_err(|e| e.to_string())?;
    for list in lists {
        let outcome = parking::simulate(&list);
        let lucky_count = outcome.lucky_count();
        if lucky.is_some_and(|k| k != lucky_count) {
            continue;
        }
        if pf_only && !outcome.is_pf {
            continue;
        }
        writer
            .write_record([
                render::join(list.prefs()),
                lucky_count.to_string(),
                outcome.is_pf.to_string(),
                render::join_assignment(&outcome.assignment),
            ])
            .map_err(|e| e.to_string())?;
    }
    writer.flush().map_err(|e| e.to_string())?;
    Ok(true)
}

fn cmd_quicksort(raw_keys: &str, trace: bool) -> Result<bool, String> {
    let keys = parse_keys(raw_keys)?;
    let result = quicksort::count_comparisons(&keys).map_err(|e| e.to_string())?;
    let mut stdout = std::io::stdout().lock();
    if trace {
        let tree = quicksort::sort_tree(&keys).map_err(|e| e.to_string())?;
        for line in render::trace_lines(&tree) {
            writeln!(stdout, "{line}").map_err(|e| e.to_string())?;
        }
        writeln!(stdout, "sorted: {}", render::join(&result.output)).map_err(|e| e.to_string())?;
    }
    writeln!(stdout, "comparisons: {}", result.comparisons).map_err(|e| e.to_string())?;
    Ok(true)
}

fn parse_keys(raw: &str) -> Result<Vec<i64>, String> {
    raw.split(',')
        .map(|token| {
            let token = token.trim();
            token
                .parse::<i64>()
                .map_err(|_| format!("{token:?} is not an integer key"))
        })
        .collect()
}

fn cmd_poly(n: usize, allow_big: bool) -> Result<bool, String> {
    enumeration_gate(n, allow_big)?;
    let brute = enumeration::pf_lucky_polynomial(n).map_err(|e| e.to_string())?;
    let product = sequences::gessel_seo_rhs::<Count>(n);
    println!("pf lucky polynomial (enumerated):   {brute}");
    println!("pf lucky polynomial (product form): {product}");
    let equal = brute == product;
    println!("equal: {equal}");
    Ok(equal)
}
