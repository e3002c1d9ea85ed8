//! Dispatches the `fa` subcommands.  Exit status: 0 on pass, 1 on a failing
//! verdict, 2 on usage or parse errors.

use clap::{Parser, Subcommand};
use fa::commands::{self, Ctx, OrderChoice, UsageError};
use fa::report::Format;
use ncfilt::DEFAULT_CAP;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fa", version, about = "exact computation on filtered algebras of finite type")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Degree cap for all capped computations (FA_CAP overrides the default).
    #[arg(long, global = true)]
    cap: Option<u32>,
    /// Monomial order used where a command completes a rewrite system itself.
    #[arg(long, global = true, value_enum, default_value_t = OrderChoice::Weights)]
    order: OrderChoice,
    /// Which report sections to print.
    #[arg(long, global = true, value_enum, default_value_t = Format::Both)]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a presentation file from flags.
    New {
        file: PathBuf,
        #[arg(long)]
        name: String,
        /// Comma-separated name:degree pairs.
        #[arg(long)]
        gens: String,
        /// A relation polynomial; repeatable.
        #[arg(long = "rel")]
        rels: Vec<String>,
        /// Comma-separated names of central generators.
        #[arg(long)]
        central: Option<String>,
    },
    /// Associated graded presentation and its graded dimensions.
    Gr {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Rees presentation over the filtration carried by the file.
    Rees {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Specialize the central parameter (default: the last central
    /// degree-1 generator) to a rational value.
    Sp {
        file: PathBuf,
        #[arg(long)]
        lambda: String,
        /// Name of the parameter generator to substitute.
        #[arg(long)]
        t: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Two-filtrations pipeline: exponents, the new filtration G, and the
    /// commutative-connected verification of gr under G.
    Twofilt { file: PathBuf },
    /// Tensor product of two presentations.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Opposite presentation.
    Op {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Enveloping presentation A tensor A-opposite, second factor primed.
    Env {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Gelfand-Kirillov dimension of a cyclic module.
    Gkdim {
        file: PathBuf,
        /// Semicolon-separated relation polynomials; omitted means the free
        /// rank-1 module.
        #[arg(long)]
        module: Option<String>,
    },
    /// Canonical dimension of a cyclic module, certified through the
    /// two-filtrations construction.
    Cdim {
        file: PathBuf,
        #[arg(long)]
        module: Option<String>,
    },
    /// Graded dimensions and their partial sums.
    Hilbert { file: PathBuf },
    /// Ore witness search for a*s^k in A*s, or verification of a proposed
    /// witness given --k and --aprime.
    Ore {
        file: PathBuf,
        #[arg(long)]
        s: String,
        #[arg(long)]
        a: String,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        aprime: Option<String>,
    },
    /// Differential-filtration check against the named central generators.
    Diffcheck {
        file: PathBuf,
        /// Comma-separated generator names spanning C.
        #[arg(long)]
        central: String,
    },
    /// Diagonal-support check of a bimodule over the enveloping algebra of
    /// the (commutative) presentation in the file.
    Diagsupp {
        file: PathBuf,
        /// Semicolon-separated module relations over the enveloping algebra;
        /// omitted means the diagonal bimodule.
        #[arg(long)]
        module: Option<String>,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// Full property suite on one file: well-formedness, round trip,
    /// completion, confluence, relation reduction.
    Check { file: PathBuf },
}

fn resolve_cap(flag: Option<u32>) -> Result<u32, UsageError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("FA_CAP") {
        Ok(text) => text
            .parse()
            .map_err(|_| UsageError(format!("FA_CAP={text:?} is not a degree cap"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn dispatch(cli: Cli) -> Result<(fa::report::Report, Format), UsageError> {
    let ctx = Ctx { cap: resolve_cap(cli.cap)?, order: cli.order };
    let report = match &cli.cmd {
        Cmd::New { file, name, gens, rels, central } => {
            commands::new_cmd(file, name, gens, rels, central.as_deref())?
        }
        Cmd::Gr { file, out } => commands::gr_cmd(&ctx, file, out.as_deref())?,
        Cmd::Rees { file, out } => commands::rees_cmd(file, out.as_deref())?,
        Cmd::Sp { file, lambda, t, out } => {
            commands::sp_cmd(file, lambda, t.as_deref(), out.as_deref())?
        }
        Cmd::Twofilt { file } => commands::twofilt_cmd(&ctx, file)?,
        Cmd::Tensor { left, right, out } => commands::tensor_cmd(left, right, out.as_deref())?,
        Cmd::Op { file, out } => commands::op_cmd(file, out.as_deref())?,
        Cmd::Env { file, out } => commands::env_cmd(file, out.as_deref())?,
        Cmd::Gkdim { file, module } => commands::gkdim_cmd(&ctx, file, module.as_deref())?,
        Cmd::Cdim { file, module } => commands::cdim_cmd(&ctx, file, module.as_deref())?,
        Cmd::Hilbert { file } => commands::hilbert_cmd(&ctx, file)?,
        Cmd::Ore { file, s, a, kmax, k, aprime } => {
            commands::ore_cmd(&ctx, file, s, a, *kmax, *k, aprime.as_deref())?
        }
        Cmd::Diffcheck { file, central } => commands::diffcheck_cmd(&ctx, file, central)?,
        Cmd::Diagsupp { file, module, kmax } => {
            commands::diagsupp_cmd(&ctx, file, module.as_deref(), *kmax)?
        }
        Cmd::Check { file } => commands::check_cmd(&ctx, file)?,
    };
    Ok((report, cli.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
