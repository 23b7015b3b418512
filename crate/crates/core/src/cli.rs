//! Command-line front end. [`run`] takes explicit streams so the binary and
//! the tests drive exactly the same code.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand};

use crate::corpusgen::{time_compare, CorpusGenerator, WeightTable};
use crate::error::Error;
use crate::output::{
    CompareRecord, Format, GenRecord, PairRecord, RankRecord, Record, TableRecord, TimingRecord,
    TraceRecord,
};
use crate::ranking::{dedup_pairs, rank};
use crate::similarity::{similarity_str, Mode};
use crate::table::{all_pass, run_table, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_TABLE_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fieldsim",
    version,
    about = "Field similarity with contracting window patterns"
)]
pub struct Cli {
    /// Emit JSON lines instead of tab-separated text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score two strings.
    Compare {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Mode::Mmcwpa)]
        mode: Mode,
        /// Also print every window match.
        #[arg(long)]
        trace: bool,
    },
    /// Rank candidate lines against a query.
    Rank {
        #[arg(long)]
        query: String,
        /// One candidate per line; `-` reads stdin.
        #[arg(long)]
        candidates: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Mmcwpa)]
        mode: Mode,
        #[arg(long)]
        top: Option<usize>,
    },
    /// List pairs of lines scoring at or above a threshold.
    Dedup {
        /// One record per line; `-` reads stdin.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        threshold: f64,
        #[arg(long, value_enum, default_value_t = Mode::Mmcwpa)]
        mode: Mode,
    },
    /// Check the built-in reference score table.
    Table {
        #[arg(long, value_enum, default_value_t = Mode::Mmcwpa)]
        mode: Mode,
    },
    /// Generate weighted random strings.
    Gen {
        /// `TOKEN<TAB>WEIGHT` lines.
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time comparisons of random fields at several lengths.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Output(#[from] io::Error),
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = write!(out, "{}", e.render());
                return e.exit_code();
            }
            let rendered = e.render().to_string();
            let _ = write!(err, "{rendered}");
            if !rendered.contains("Usage:") {
                let _ = writeln!(err, "\n{}", Cli::command().render_usage());
            }
            return e.exit_code();
        }
    };
    let format = if cli.json { Format::Json } else { Format::Tsv };
    let code = match execute(cli.command, format, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "fieldsim: {e}");
            EXIT_USAGE
        }
    };
    match out.flush() {
        Ok(()) => code,
        Err(e) => {
            let _ = writeln!(err, "fieldsim: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(
    command: Command,
    format: Format,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    match command {
        Command::Compare { a, b, mode, trace } => {
            let result = similarity_str(&a, &b, mode);
            let record = CompareRecord {
                score: result.score,
                trace: trace.then(|| result.trace.iter().map(TraceRecord::from).collect()),
            };
            record.write(format, out)?;
        }
        Command::Rank {
            query,
            candidates,
            mode,
            top,
        } => {
            let lines = read_lines(&candidates, stdin)?;
            for c in rank(&query, &lines, mode, top)? {
                RankRecord {
                    rank: c.rank,
                    index: c.index,
                    score: c.score,
                    text: c.text,
                }
                .write(format, out)?;
            }
        }
        Command::Dedup {
            input,
            threshold,
            mode,
        } => {
            let lines = read_lines(&input, stdin)?;
            for p in dedup_pairs(&lines, mode, threshold)? {
                PairRecord {
                    i: p.i,
                    j: p.j,
                    score: p.score,
                }
                .write(format, out)?;
            }
        }
        Command::Table { mode } => {
            let rows = run_table(mode);
            for row in &rows {
                TableRecord {
                    fx: row.fixture.fx.to_owned(),
                    fy: row.fixture.fy.to_owned(),
                    expected: row.expected(),
                    computed: row.computed,
                    status: row.status.to_string(),
                }
                .write(format, out)?;
            }
            let count = |s| rows.iter().filter(|r| r.status == s).count();
            writeln!(
                err,
                "{} PASS, {} KNOWN-DIFF, {} FAIL",
                count(Status::Pass),
                count(Status::KnownDiff),
                count(Status::Fail)
            )?;
            if !all_pass(&rows) {
                return Ok(EXIT_TABLE_FAILED);
            }
        }
        Command::Gen {
            weights,
            length,
            count,
            seed,
        } => {
            let table = WeightTable::load(&weights)?;
            let mut generator = CorpusGenerator::new(&table, seed);
            for index in 0..count {
                GenRecord {
                    index,
                    text: generator.generate(length),
                }
                .write(format, out)?;
            }
        }
        Command::Bench {
            lengths,
            trials,
            seed,
        } => {
            for row in time_compare(&lengths, trials, seed)? {
                TimingRecord {
                    n: row.n,
                    mean_seconds: row.mean.as_secs_f64(),
                }
                .write(format, out)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn read_lines(path: &Path, stdin: &mut dyn BufRead) -> Result<Vec<String>, Error> {
    let io_error = |source| Error::Io {
        path: path.to_owned(),
        source,
    };
    if path == Path::new("-") {
        return stdin.lines().collect::<io::Result<_>>().map_err(io_error);
    }
    let file = File::open(path).map_err(io_error)?;
    BufReader::new(file)
        .lines()
        .collect::<io::Result<_>>()
        .map_err(io_error)
}
