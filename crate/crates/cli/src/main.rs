use std::path::PathBuf;
use std::process::ExitCode;

use bisyz::{BiDeg, InputTriple, InstanceClass};
use bisyz_cli::*;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bisyz", version, about = "Syzygies and resolutions of three bidegree (2,1) forms")]
struct Cli {
    /// Print the run report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Instance file: three rows of six coefficients.
    file: PathBuf,
}

#[derive(Args)]
struct BoxArg {
    /// Bidegree box MxN.
    #[arg(long = "box", value_parser = parse_box, default_value = "9x6")]
    bx: BiDeg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Generic,
    Nongeneric,
}

#[derive(Subcommand)]
enum Command {
    /// Resultant and generic / non-generic / degenerate class.
    Classify(Input),
    /// Minimal generators of the syzygy module.
    Syzygies(Input),
    /// Predicted and computed Hilbert functions.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        bx: BoxArg,
        #[arg(long)]
        csv: bool,
    },
    /// Grid of where syzygies live.
    Picture {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        bx: BoxArg,
    },
    /// Minimal free resolution of R/I.
    Resolution {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        bx: BoxArg,
        #[arg(long)]
        verify: bool,
    },
    /// Seeded random instance of a given class.
    Gen {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        bound: i64,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Every check on one instance.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        bx: BoxArg,
    },
}

fn load(input: &Input) -> Result<InputTriple, String> {
    let text = std::fs::read_to_string(&input.file).map_err(|e| format!("{}: {e}", input.file.display()))?;
    parse_instance(&text).map_err(|e| format!("{}: {e}", input.file.display()))
}

fn run(cli: &Cli) -> Outcome {
    let with = |input: &Input, f: &dyn Fn(&InputTriple) -> Outcome| match load(input) {
        Ok(p) => f(&p),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_PARSE);
        }
    };
    match &cli.command {
        Command::Classify(i) => with(i, &cmd_classify),
        Command::Syzygies(i) => with(i, &cmd_syzygies),
        Command::Hilbert { input, bx, csv } => with(input, &|p| cmd_hilbert(p, bx.bx, *csv)),
        Command::Picture { input, bx } => with(input, &|p| cmd_picture(p, bx.bx)),
        Command::Resolution { input, bx, verify } => with(input, &|p| cmd_resolution(p, bx.bx, *verify)),
        Command::Verify { input, bx } => with(input, &|p| cmd_verify(p, bx.bx)),
        Command::Gen { class, seed, bound, out } => {
            let cls = match class {
                ClassArg::Generic => InstanceClass::Generic,
                ClassArg::Nongeneric => InstanceClass::NonGeneric,
            };
            let mut o = cmd_gen(cls, *seed, *bound);
            if let (Some(path), EXIT_PASS) = (out, o.code) {
                if let Err(e) = std::fs::write(path, &o.text) {
                    eprintln!("error: {}: {e}", path.display());
                    std::process::exit(EXIT_PARSE);
                }
                o.text = String::new();
            }
            o
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = run(&cli);
    if cli.json {
        println!("{}", o.report.to_json());
    } else if o.code == EXIT_PASS || o.code == EXIT_MISMATCH || o.report.error.is_none() {
        print!("{}", o.text);
    } else {
        eprint!("{}", o.text);
    }
    ExitCode::from(o.code as u8)
}
