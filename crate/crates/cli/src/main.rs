use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skewpbw::commands::{self, exit_code};
use skewpbw::dsl::Document;
use skewpbw::{Report, Side};

/// Exact computations in skew PBW extensions.
///
/// INPUT is a `.spbw` file, `-` for stdin, or `@name` for a built-in preset
/// (see `spbw catalog list`).
#[derive(Parser)]
#[command(name = "spbw", version)]
struct Cli {
    /// Print the report as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the parallel parts (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Input {
    input: String,
    /// Ring to use when the document declares several
    #[arg(long)]
    ring: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check relation shapes, the σ-derivation law and associativity
    Validate { input: String },
    /// Normal form of a polynomial expression
    Normalize {
        #[command(flatten)]
        src: Input,
        expr: String,
    },
    /// Product of the given factors, left to right
    Mul {
        #[command(flatten)]
        src: Input,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Truncated Hilbert series dim A_0, …, dim A_N
    Hilbert {
        #[command(flatten)]
        src: Input,
        #[arg(long = "N", default_value_t = 2)]
        n: u32,
    },
    /// GK dimension estimate from dim F_m, m ≤ M
    Gk {
        #[command(flatten)]
        src: Input,
        #[arg(long = "M", default_value_t = 50)]
        m: u32,
    },
    /// Ideal membership with a re-multiplied certificate
    Member {
        #[command(flatten)]
        src: Input,
        element: String,
        /// Ideal generator (repeatable)
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Bounded Gröbner basis of a one-sided ideal
    Gb {
        #[command(flatten)]
        src: Input,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Check F*F = F for a declared matrix
    IdemCheck {
        input: String,
        /// Matrix name (default: the first declared)
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Certificate U with U*F*U^-1 = diag(0, I_r) over a univariate Ore ring
    QsDiagonalize {
        input: String,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Check a declared left complex resolves the trivial module
    ResolutionVerify {
        input: String,
        #[arg(long)]
        complex: Option<String>,
    },
    /// SAS verdict from the declared resolution
    SasCheck {
        input: String,
        #[arg(long)]
        complex: Option<String>,
        #[arg(long, default_value_t = skewpbw::homology::DEFAULT_PROBE_BOUND)]
        probe_bound: u32,
    },
    /// Basis of the center up to a degree
    Center {
        #[command(flatten)]
        src: Input,
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
    /// Built-in presets
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
}

fn with_doc(input: &str, f: impl FnOnce(&Document) -> skewpbw::Result<Report>) -> skewpbw::Result<Report> {
    f(&commands::load(input)?)
}

fn run(cmd: Cmd) -> skewpbw::Result<Report> {
    match cmd {
        Cmd::Validate { input } => with_doc(&input, commands::validate),
        Cmd::Normalize { src, expr } => with_doc(&src.input, |d| commands::normalize(d, src.ring.as_deref(), &expr)),
        Cmd::Mul { src, factors } => with_doc(&src.input, |d| commands::mul(d, src.ring.as_deref(), &factors)),
        Cmd::Hilbert { src, n } => with_doc(&src.input, |d| commands::hilbert(d, src.ring.as_deref(), n)),
        Cmd::Gk { src, m } => with_doc(&src.input, |d| commands::gk(d, src.ring.as_deref(), m)),
        Cmd::Member {
            src,
            element,
            gens,
            side,
            degree_bound,
        } => with_doc(&src.input, |d| {
            commands::member(d, src.ring.as_deref(), side.into(), &element, &gens, degree_bound)
        }),
        Cmd::Gb {
            src,
            gens,
            side,
            degree_bound,
        } => with_doc(&src.input, |d| commands::gb(d, src.ring.as_deref(), side.into(), &gens, degree_bound)),
        Cmd::IdemCheck { input, matrix } => with_doc(&input, |d| commands::idem_check(d, matrix.as_deref())),
        Cmd::QsDiagonalize { input, matrix } => with_doc(&input, |d| commands::qs_diagonalize(d, matrix.as_deref())),
        Cmd::ResolutionVerify { input, complex } => {
            with_doc(&input, |d| commands::resolution_verify(d, complex.as_deref()))
        }
        Cmd::SasCheck {
            input,
            complex,
            probe_bound,
        } => with_doc(&input, |d| Ok(commands::sas_check(d, complex.as_deref(), probe_bound)?.1)),
        Cmd::Center { src, degree } => with_doc(&src.input, |d| commands::center(d, src.ring.as_deref(), degree)),
        Cmd::Catalog { action: CatalogCmd::List } => commands::catalog_list(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("spbw: --jobs: {}", e);
            return ExitCode::from(3);
        }
    }
    let outcome = run(cli.cmd);
    match &outcome {
        Ok(rep) if cli.json => println!("{}", rep.to_json()),
        Ok(rep) => print!("{}", rep.render_text()),
        Err(e) => eprintln!("spbw: {}", e),
    }
    ExitCode::from(exit_code(&outcome) as u8)
}
