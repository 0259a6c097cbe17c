use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tropical_abelian::commands::{self, EnumerateArgs, Format};

#[derive(Parser)]
#[command(name = "tropab", about = "Exact computations with tropical curves in tropical tori")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: OutFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Args)]
struct EnumerateFlags {
    #[arg(long)]
    torus: PathBuf,
    /// Row-major class matrix `a,b,c,d`.
    #[arg(long, allow_hyphen_values = true)]
    class: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Winding box half-width; defaults to the certified bound.
    #[arg(long)]
    bound: Option<i64>,
    /// Directory for the solution files.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Structural checks of a curve file.
    Check { file: PathBuf },
    /// Multiplicities of a curve file, optionally with marks `edge:t`.
    Mult {
        file: PathBuf,
        #[arg(long, num_args = 1..)]
        marks: Option<Vec<String>>,
    },
    /// Genus-2 curves through two sampled points.
    Enumerate(EnumerateFlags),
    /// Invariant table of the same enumeration.
    Invariants(EnumerateFlags),
    /// Closed-form counts against the series identity.
    Series {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        nmax: usize,
    },
    /// Draw a curve file.
    Svg {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutFormat::Text => Format::Text,
        OutFormat::Json => Format::Json,
    };
    let enumerate_args = |f: EnumerateFlags| EnumerateArgs {
        torus: f.torus,
        class: f.class,
        seed: f.seed,
        bound: f.bound,
        out: f.out,
        format,
    };
    let out = match cli.command {
        Command::Check { file } => commands::cmd_check(&file, format),
        Command::Mult { file, marks } => commands::cmd_mult(&file, marks.as_deref(), format),
        Command::Enumerate(f) => commands::cmd_enumerate(&enumerate_args(f)),
        Command::Invariants(f) => commands::cmd_invariants(&enumerate_args(f)),
        Command::Series { genus, nmax } => commands::cmd_series(genus, nmax, format),
        Command::Svg { file, out } => commands::cmd_svg(&file, &out),
    };
    if out.code == 0 {
        print!("{}", out.text);
    } else {
        eprint!("{}", out.text);
    }
    ExitCode::from(out.code as u8)
}
