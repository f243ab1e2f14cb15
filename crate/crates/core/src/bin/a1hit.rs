use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use a1hit_core::a1::pn_dump;
use a1hit_core::hit::{cell_spaces, sweep, BidegreeTable, SWEEP_LIMITS};
use a1hit_core::poly::Limits;
use a1hit_core::series::{named_series, CATALOG};
use a1hit_core::verify::{run_suite, Window, SUITES};
use a1hit_core::Error;

#[derive(Parser)]
#[command(name = "a1hit", version, about = "Hit problems over A(0) and A(1) in F2[x1..xn]")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Size of the worker thread pool.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Lift the default n <= 8, d <= 32 window guard.
    #[arg(long, global = true)]
    unsafe_limits: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep dim P, I(k), D(k), U(k) over a window.
    Table {
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        d_max: usize,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 1)]
        d_min: usize,
        /// Include coset representatives of U(k).
        #[arg(long)]
        reps: bool,
    },
    /// Expand a catalogued generating function.
    Series {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 6)]
        s_order: u32,
        #[arg(long, default_value_t = 20)]
        t_order: i32,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        d_max: Option<usize>,
    },
    /// Dump the truncated A(1)-module P_n.
    Pn {
        #[arg(long)]
        n: usize,
        #[arg(long = "D", default_value_t = 40)]
        top: i32,
    },
    /// Coset representatives of U(k) in one bidegree.
    Rep {
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardLimit { .. }
            | Error::TruncationTooSmall { .. }
            | Error::UnknownSeries(_)
            | Error::MissingIndex { .. }
            | Error::Invalid(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn table_csv(table: &BidegreeTable, reps: bool) -> String {
    if !reps {
        return table.to_csv();
    }
    let mut out = String::from("n,d,dimP,dimI,dimD,dimU,degenerate,reps\n");
    for c in &table.cells {
        let r: Vec<String> = c.representatives.iter().flatten().map(ToString::to_string).collect();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},\"{}\"\n",
            c.n,
            c.d,
            c.dim_p,
            c.dim_i,
            c.dim_d,
            c.dim_u,
            c.degenerate,
            r.join("; ")
        ));
    }
    out
}

fn run(cli: &Cli, limits: Limits) -> Result<(String, bool), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Table { k, n_max, d_max, n_min, d_min, reps } => {
            let table = sweep(*k, *n_min..=*n_max, *d_min..=*d_max, *reps, limits)?;
            let out = match fmt.unwrap_or(Format::Csv) {
                Format::Json => table.to_json() + "\n",
                Format::Csv | Format::Text => table_csv(&table, *reps),
            };
            Ok((out, true))
        }
        Command::Series { name, n, s_order, t_order } => {
            let series = named_series(name, *n).map_err(|e| match e {
                Error::UnknownSeries(_) => {
                    Failure::Usage(format!("unknown series '{name}'; catalog: {}", CATALOG.join(", ")))
                }
                other => other.into(),
            })?;
            let s_rows = if series.is_univariate_t() { 0 } else { *s_order };
            let coeffs = series.expand(s_rows, *t_order)?;
            let out = match fmt.unwrap_or(Format::Text) {
                Format::Csv => coeffs.to_csv(s_rows),
                Format::Json => {
                    let entries: Vec<_> = coeffs
                        .entries(s_rows)
                        .into_iter()
                        .map(|(n, d, c)| serde_json::json!({"n": n, "d": d, "coeff": c}))
                        .collect();
                    let v = serde_json::json!({
                        "name": name,
                        "n": n,
                        "expression": series.to_string(),
                        "coefficients": entries,
                    });
                    serde_json::to_string_pretty(&v).expect("json") + "\n"
                }
                Format::Text => format!("{series}\n"),
            };
            Ok((out, true))
        }
        Command::Verify { suite, n_max, d_max } => {
            let report = run_suite(suite, Window { n_max: *n_max, d_max: *d_max }, limits)?;
            let out = match fmt.unwrap_or(Format::Text) {
                Format::Json => report.to_json() + "\n",
                Format::Csv | Format::Text => format!("{report}\n"),
            };
            Ok((out, report.passed))
        }
        Command::Pn { n, top } => {
            let dump = pn_dump(*n, *top)?;
            let out = match fmt.unwrap_or(Format::Json) {
                Format::Json => serde_json::to_string_pretty(&dump).expect("json") + "\n",
                Format::Csv | Format::Text => {
                    let mut s = format!("P_{} truncated at D = {}\n", dump.n, dump.top);
                    for (i, b) in dump.basis.iter().enumerate() {
                        s.push_str(&format!("{i}\t{}\t{}\n", b.degree, b.label));
                    }
                    for (op, arrows) in [("Sq1", &dump.sq1), ("Sq2", &dump.sq2)] {
                        for [a, b] in arrows {
                            s.push_str(&format!(
                                "{op}\t{} -> {}\n",
                                dump.basis[*a].label, dump.basis[*b].label
                            ));
                        }
                    }
                    s
                }
            };
            Ok((out, true))
        }
        Command::Rep { k, n, d } => {
            let spaces = cell_spaces(*k, *n, *d, limits)?;
            spaces.kernel.check_contains(&spaces.hit)?;
            let reps = spaces.kernel.coset_reps(&spaces.hit)?;
            let polys = reps
                .iter()
                .map(|r| spaces.module.row_to_element(*d, r).map(|p| p.to_string()))
                .collect::<a1hit_core::Result<Vec<_>>>()?;
            let out = match fmt.unwrap_or(Format::Text) {
                Format::Json => {
                    let v = serde_json::json!({"k": k, "n": n, "d": d, "dimU": polys.len(), "reps": polys});
                    serde_json::to_string_pretty(&v).expect("json") + "\n"
                }
                Format::Csv | Format::Text if polys.is_empty() => "trivial\n".to_string(),
                Format::Csv | Format::Text => polys.join("\n") + "\n",
            };
            Ok((out, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let limits = if cli.unsafe_limits { Limits { max_n: 63, max_d: 1 << 20 } } else { SWEEP_LIMITS };
    let result = run(&cli, limits).and_then(|(text, ok)| {
        let written = match &cli.out {
            Some(path) => fs::write(path, &text),
            None => io::stdout().write_all(text.as_bytes()),
        };
        written.map_err(|e| Failure::Compute(e.to_string()))?;
        if ok {
            Ok(())
        } else {
            Err(Failure::Verification)
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
