use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};

use partition_meter::composition::{iterate, SacParams};
use partition_meter::counting::{CountError, MemoTable};
use partition_meter::identity::{eq1_row, eq6_literal_rows, eq6_rows};
use partition_meter::render::box_diagram;
use partition_meter::report::ReportRow;
use partition_meter::suffix::{sfl_measured, theorem1_rows};

const MEMO_LIMIT_VAR: &str = "PARTITION_METER_MEMO_LIMIT";

#[derive(Parser)]
#[command(
    name = "partition-meter",
    version,
    about = "Generate, count, and write-meter ascending compositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DataFormat {
    Lines,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoxFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    /// Main identity: large-parts sum over sac(n) equals 2p(n) - 1
    Eq1,
    /// Triple agreement of the suffix-length routes with 2nac(n, m) - 1
    Theorem1,
    /// General identity, sum over sac(n, m)
    Eq6,
    /// General identity with the literal sac(n) sum; fails by design for m >= 2
    Eq6Literal,
}

#[derive(Subcommand)]
enum Command {
    /// List sac(n, m) in lexicographic order
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, value_enum, default_value_t = DataFormat::Lines)]
        format: DataFormat,
    },
    /// Count sac(n, m) exactly
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        m: u64,
        /// Cross-check against the pentagonal-number recurrence (m = 1 only)
        #[arg(long)]
        oracle: bool,
    },
    /// Run an identity sweep and report per-row results
    Verify {
        #[arg(value_enum)]
        which: VerifyTarget,
        #[arg(long = "max-n")]
        max_n: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Render the adjacency-box diagram of sac(n, m)
    Boxes {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, value_enum, default_value_t = BoxFormat::Ascii)]
        format: BoxFormat,
        /// Largest n the diagram will render
        #[arg(long = "render-cap", default_value_t = 30)]
        render_cap: u64,
    },
    /// Measure generation cost: total writes and the amortized ratio
    Meter {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        m: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Enumerate { n, m, format } => cmd_enumerate(n, m, format),
        Command::Count { n, m, oracle } => cmd_count(n, m, oracle),
        Command::Verify { which, max_n, jobs } => cmd_verify(which, max_n, jobs),
        Command::Boxes {
            n,
            m,
            format,
            render_cap,
        } => cmd_boxes(n, m, format, render_cap),
        Command::Meter { n, m } => cmd_meter(n, m),
    };
    ExitCode::from(code)
}

fn params_or_usage(n: u64, m: u64) -> Result<SacParams, u8> {
    SacParams::new(n, m).map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

fn memo_limit() -> Result<Option<usize>, u8> {
    match std::env::var(MEMO_LIMIT_VAR) {
        Ok(raw) => raw.parse::<usize>().map(Some).map_err(|_| {
            eprintln!("error: {MEMO_LIMIT_VAR} must be a nonnegative integer (got {raw:?})");
            2
        }),
        Err(_) => Ok(None),
    }
}

fn new_table(limit: Option<usize>) -> MemoTable {
    MemoTable::new().with_entry_limit(limit)
}

fn count_failure(e: CountError) -> u8 {
    eprintln!("error: {e}");
    1
}

fn cmd_enumerate(n: u64, m: u64, format: DataFormat) -> u8 {
    let params = match params_or_usage(n, m) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match format {
        DataFormat::Lines => {
            for c in iterate(params) {
                println!("{c}");
            }
        }
        DataFormat::Json => {
            let all: Vec<Vec<u64>> = iterate(params).map(|c| c.into_parts()).collect();
            println!(
                "{}",
                serde_json::to_string(&all).expect("arrays of integers serialize")
            );
        }
        DataFormat::Csv => {
            let width = (n / m) as usize;
            let header: Vec<String> = (1..=width).map(|i| format!("part{i}")).collect();
            println!("{}", header.join(","));
            for c in iterate(params) {
                let mut cells: Vec<String> = c.parts().iter().map(u64::to_string).collect();
                cells.resize(width, String::new());
                println!("{}", cells.join(","));
            }
        }
    }
    0
}

fn cmd_count(n: u64, m: u64, oracle: bool) -> u8 {
    let params = match params_or_usage(n, m) {
        Ok(p) => p,
        Err(code) => return code,
    };
    if oracle && m != 1 {
        eprintln!("error: --oracle requires m = 1 (the oracle computes p(n))");
        return 2;
    }
    let limit = match memo_limit() {
        Ok(l) => l,
        Err(code) => return code,
    };
    let mut table = new_table(limit);
    let count = match table.nac(params) {
        Ok(v) => v,
        Err(e) => return count_failure(e),
    };
    if oracle {
        let expected = match partition_meter::pentagonal_oracle(n) {
            Ok(v) => v,
            Err(e) => return count_failure(e),
        };
        let verdict = if count == expected { "MATCH" } else { "MISMATCH" };
        println!("{count} {expected} {verdict}");
        if count != expected {
            return 1;
        }
    } else {
        println!("{count}");
    }
    0
}

fn verify_rows_for(
    which: VerifyTarget,
    table: &mut MemoTable,
    n: u64,
) -> Result<Vec<ReportRow>, CountError> {
    match which {
        VerifyTarget::Eq1 => Ok(vec![eq1_row(table, n)?]),
        VerifyTarget::Theorem1 => theorem1_rows(table, n),
        VerifyTarget::Eq6 => eq6_rows(table, n),
        VerifyTarget::Eq6Literal => eq6_literal_rows(table, n),
    }
}

fn cmd_verify(which: VerifyTarget, max_n: u64, jobs: usize) -> u8 {
    if max_n < 1 {
        eprintln!("error: --max-n must be at least 1");
        return 2;
    }
    if jobs < 1 {
        eprintln!("error: --jobs must be at least 1");
        return 2;
    }
    let limit = match memo_limit() {
        Ok(l) => l,
        Err(code) => return code,
    };
    let result: Result<Vec<ReportRow>, CountError> = if jobs == 1 {
        let mut table = new_table(limit);
        let mut rows = Vec::new();
        (1..=max_n).try_for_each(|n| {
            rows.extend(verify_rows_for(which, &mut table, n)?);
            Ok(())
        })
        .map(|()| rows)
    } else {
        // Round-robin n values across workers; each owns its memo table.
        // Results are merged back into (n, m) order, so output is
        // deterministic regardless of the worker count.
        thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    scope.spawn(move || {
                        let mut table = new_table(limit);
                        let mut rows = Vec::new();
                        for n in (1..=max_n).skip(w).step_by(jobs) {
                            rows.extend(verify_rows_for(which, &mut table, n)?);
                        }
                        Ok(rows)
                    })
                })
                .collect();
            let mut rows: Vec<ReportRow> = Vec::new();
            for h in handles {
                rows.extend(h.join().expect("verify worker panicked")?);
            }
            rows.sort_by_key(|r| (r.n, r.m));
            Ok(rows)
        })
    };
    let rows = match result {
        Ok(rows) => rows,
        Err(e) => return count_failure(e),
    };
    println!("n,m,lhs,rhs,pass");
    for r in &rows {
        println!("{},{},{},{},{}", r.n, r.m, r.lhs, r.rhs, r.pass);
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    eprintln!("{passed}/{} rows pass", rows.len());
    if passed == rows.len() {
        0
    } else {
        1
    }
}

fn cmd_boxes(n: u64, m: u64, format: BoxFormat, render_cap: u64) -> u8 {
    let params = match params_or_usage(n, m) {
        Ok(p) => p,
        Err(code) => return code,
    };
    if n > render_cap {
        eprintln!("error: n={n} exceeds the render cap {render_cap}; raise --render-cap to override");
        return 2;
    }
    let limit = match memo_limit() {
        Ok(l) => l,
        Err(code) => return code,
    };
    let diagram = box_diagram(params);
    let nac = match new_table(limit).nac(params) {
        Ok(v) => v,
        Err(e) => return count_failure(e),
    };
    let expected = match nac.double_minus_one() {
        Ok(v) => v,
        Err(e) => return count_failure(e),
    };
    let footer = format!("boxes={} = 2*{nac}-1", diagram.box_count());
    match format {
        BoxFormat::Ascii => {
            println!("{}", diagram.to_ascii());
            println!("{footer}");
        }
        BoxFormat::Svg => {
            print!("{}", diagram.to_svg());
            eprintln!("{footer}");
        }
    }
    if u128::from(diagram.box_count()) != expected.get() {
        eprintln!(
            "error: rendered {} boxes but expected {expected}",
            diagram.box_count()
        );
        return 1;
    }
    0
}

fn cmd_meter(n: u64, m: u64) -> u8 {
    let params = match params_or_usage(n, m) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let trace = match sfl_measured(params) {
        Ok(t) => t,
        Err(e) => return count_failure(e),
    };
    let writes = trace.total().get();
    let visited = trace.compositions_visited.get();
    let ratio = writes as f64 / visited as f64;
    println!(
        "writes={writes} compositions={visited} amortized={writes}/{visited} \
         = 2 - {}/{visited} (~{ratio:.6})",
        2 * visited - writes
    );
    0
}
