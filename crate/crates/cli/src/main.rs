//! `triple-lattice`: generate, invert, enumerate and classify Pythagorean
//! triples on the odd/even series lattice.
//!
//! Exit codes: 0 success, 2 argument error, 3 overflow, 4 triple not in
//! class C, 5 verification discrepancy.

mod output;
mod records;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use triple_lattice::{
    classify, lattice_from_triple, platonic_family, pythagorean_family,
    triple_from_lattice, verify_chain, ClassCFailure, EnumBound, Error, LatticeIndex, Oracle,
    SeriesId, SeriesKind, Triple,
};

use output::{Format, Sink};
use records::{ClassRecord, ExtendedRecord, IndexRecord, LatticeRecord, Record, VerifyRecord};

#[derive(Debug, Parser)]
#[command(name = "triple-lattice", version, about = "Pythagorean triples on the odd/even series lattice")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, env = "TRIPLE_LATTICE_FORMAT", default_value = "json-lines")]
    format: Format,

    /// Inclusive hypotenuse bound for enum, series and verify.
    #[arg(long, global = true)]
    c_max: Option<u64>,

    /// Largest bound the brute-force oracle accepts.
    #[arg(long, global = true, default_value_t = Oracle::DEFAULT_CEILING)]
    oracle_ceiling: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Class C over (m, n).
    Lattice,
    /// All Euclidean triples over (mu, n).
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// (2n+1, 2n²+2n, 2n²+2n+1), the column m = 1.
    Pythagorean,
    /// (4m²−1, 4m, 4m²+1), the row n = 1.
    Platonic,
}

fn positive(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be at least 1".to_owned()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Triple at lattice point (m, n).
    Gen {
        #[arg(value_parser = positive)]
        m: u64,
        #[arg(value_parser = positive)]
        n: u64,
    },
    /// Lattice point (m, n) of a class-C triple.
    Inv {
        #[arg(value_parser = positive)]
        a: u64,
        #[arg(value_parser = positive)]
        b: u64,
        #[arg(value_parser = positive)]
        c: u64,
    },
    /// Every triple of the lattice up to --c-max, ordered by (c, a).
    Enum {
        #[arg(long, value_enum, default_value = "lattice")]
        mode: Mode,
    },
    /// One odd(m) column or even(n) row up to --c-max.
    Series {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(value_parser = positive)]
        index: u64,
    },
    /// Membership in P ⊃ E ⊃ C ⊃ P0 for three integers in any order.
    Classify {
        #[arg(value_parser = positive)]
        a: u64,
        #[arg(value_parser = positive)]
        b: u64,
        #[arg(value_parser = positive)]
        c: u64,
    },
    /// Cross-check the set chain against the brute-force oracle.
    Verify,
    /// First --count members of the Pythagorean or Platonic family.
    Family {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 10, value_parser = positive)]
        count: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Overflow,
    NotInClassC(ClassCFailure),
    Discrepancies(usize),
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Overflow => 3,
            Failure::NotInClassC(_) => 4,
            Failure::Discrepancies(_) => 5,
            Failure::Io(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow => Failure::Overflow,
            Error::NotInClassC(why) => Failure::NotInClassC(why),
            Error::NotPythagorean { .. } => Failure::NotInClassC(ClassCFailure::NotPythagorean),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn require_bound(cli: &Cli, command: &str) -> Result<EnumBound, Failure> {
    cli.c_max
        .map(EnumBound::new)
        .ok_or_else(|| Failure::Usage(format!("{command} requires --c-max")))
}

fn write_all<R: Record, W: Write>(
    format: Format,
    out: W,
    records: impl IntoIterator<Item = Result<R, Failure>>,
) -> Result<(), Failure> {
    let mut sink = Sink::new::<R>(format, out)?;
    for rec in records {
        sink.emit(&rec?)?;
    }
    sink.finish()?;
    Ok(())
}

fn lattice_record(idx: LatticeIndex) -> Result<LatticeRecord, Failure> {
    Ok(LatticeRecord::new(idx, triple_from_lattice(idx)?))
}

fn run<W: Write>(cli: &Cli, out: W) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Gen { m, n } => {
            let idx = LatticeIndex::new(m, n)?;
            write_all(format, out, [lattice_record(idx)])
        }
        Command::Inv { a, b, c } => {
            let t = Triple::new(a, b, c)?.canonicalize();
            let idx = lattice_from_triple(t)?;
            write_all(format, out, [Ok(IndexRecord { m: idx.m(), n: idx.n() })])
        }
        Command::Enum { mode } => {
            let bound = require_bound(cli, "enum")?;
            match mode {
                Mode::Lattice => write_all(
                    format,
                    out,
                    triple_lattice::enumerate::lattice_points(bound)
                        .map(|(idx, t)| Ok(LatticeRecord::new(idx, t))),
                ),
                Mode::Extended => write_all(
                    format,
                    out,
                    triple_lattice::enumerate::extended_points(bound)
                        .map(|(idx, t)| Ok(ExtendedRecord::new(idx, t))),
                ),
            }
        }
        Command::Series { kind, index } => {
            let bound = require_bound(cli, "series")?;
            let kind = match kind {
                Kind::Odd => SeriesKind::Odd,
                Kind::Even => SeriesKind::Even,
            };
            let id = SeriesId::new(kind, index)?;
            write_all(
                format,
                out,
                triple_lattice::enumerate::series_points(id, bound)
                    .map(|(idx, t)| Ok(LatticeRecord::new(idx, t))),
            )
        }
        Command::Classify { a, b, c } => {
            let report = classify(a, b, c)?;
            write_all(format, out, [Ok(ClassRecord::from(&report))])
        }
        Command::Verify => {
            let bound = EnumBound::checked(require_bound(cli, "verify")?.c_max())?;
            let report = verify_chain(bound, &Oracle::with_ceiling(cli.oracle_ceiling))?;
            for d in &report.discrepancies {
                eprintln!("discrepancy: {d}");
            }
            write_all(format, out, [Ok(VerifyRecord::from(&report))])?;
            match report.discrepancies.len() {
                0 => Ok(()),
                k => Err(Failure::Discrepancies(k)),
            }
        }
        Command::Family { family, count } => {
            // Members grow with the index, so checking the last one up front
            // reports overflow before any output.
            match family {
                Family::Pythagorean => pythagorean_family(count)?,
                Family::Platonic => platonic_family(count)?,
            };
            let records = (1..=count).map(move |k| {
                let (idx, t) = match family {
                    Family::Pythagorean => (LatticeIndex::new(1, k)?, pythagorean_family(k)?),
                    Family::Platonic => (LatticeIndex::new(k, 1)?, platonic_family(k)?),
                };
                Ok(LatticeRecord::new(idx, t))
            });
            write_all(format, out, records)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(&cli, io::BufWriter::new(stdout.lock())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Overflow => eprintln!("error: result does not fit in 64-bit unsigned integers"),
                Failure::NotInClassC(why) => eprintln!("error: not in class C: {why}"),
                Failure::Discrepancies(k) => eprintln!("error: {k} discrepancies found"),
                Failure::Io(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
