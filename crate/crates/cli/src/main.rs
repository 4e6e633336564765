use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use operad_groebner::cli::{run, CaseStudy, Command, Format, Input, RunConfig};
use operad_groebner::presentations::{ClieParams, GdConvention, OrderChoice};

#[derive(Parser)]
#[command(
    name = "operad",
    version,
    about = "Gröbner bases for shuffle operads and Lie conformal checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Complete the relations to a Gröbner basis up to the degree bound.
    Gb(Common),
    /// Check whether the relations already form a Gröbner basis.
    Confluence(Common),
    /// Priddy criterion: certify Koszulity from a quadratic Gröbner basis.
    Koszul(Common),
    /// Dimensions of the operad in arities 1..=upto.
    Dims {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        upto: usize,
    },
    /// Check a conformal module or a finite (Hom-)GD algebra given by --file.
    Conformal(Common),
    /// Reproduce a case study: `hom-table` (default degree 5) or `clie`.
    Casestudy {
        #[arg(value_enum)]
        name: Study,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Study {
    #[value(alias = "hom_table")]
    HomTable,
    Clie,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    PathLex,
    ForestLex,
    Clie,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectArg {
    Confluent,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Right,
    Left,
}

#[derive(Args)]
struct Common {
    /// Name of a built-in presentation (e.g. ass, hom_ass_II0, lie, gd, clie).
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
    /// Presentation, module or algebra file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Tree degree bound for ambiguities and completion (default: at least 4, raised to reach every overlap).
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Exit with status 1 on a NOT-CONFLUENT verdict.
    #[arg(long, value_enum)]
    expect: Option<ExpectArg>,
    /// Conformal truncation: products vanish above k.
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    nmax: usize,
    #[arg(long, default_value_t = 2)]
    jmax: usize,
    /// Reading of the GD relation list (gd and novikov builtins).
    #[arg(long, value_enum, default_value = "right")]
    convention: ConventionArg,
}

fn config(command: Command, c: Common) -> RunConfig {
    let input = match (c.builtin, c.file) {
        (Some(b), _) => Input::Builtin(b),
        (None, Some(f)) => Input::File(f),
        (None, None) => Input::None,
    };
    RunConfig {
        command,
        input,
        max_degree: c.max_degree,
        order: c.order.map(|o| match o {
            OrderArg::PathLex => OrderChoice::PathLex,
            OrderArg::ForestLex => OrderChoice::ForestLex,
            OrderArg::Clie => OrderChoice::Clie,
        }),
        format: match c.format {
            FormatArg::Text => Format::Text,
            FormatArg::Machine => Format::Machine,
        },
        expect_confluent: c.expect.is_some(),
        clie: ClieParams {
            k: c.k,
            nmax: c.nmax,
            jmax: c.jmax,
        },
        convention: match c.convention {
            ConventionArg::Right => GdConvention::Right,
            ConventionArg::Left => GdConvention::Left,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.command {
        Sub::Gb(c) => config(Command::Gb, c),
        Sub::Confluence(c) => config(Command::Confluence, c),
        Sub::Koszul(c) => config(Command::Koszul, c),
        Sub::Dims { common, upto } => config(Command::Dims { upto }, common),
        Sub::Conformal(c) => config(Command::Conformal, c),
        Sub::Casestudy { name, common } => {
            let study = match name {
                Study::HomTable => CaseStudy::HomTable,
                Study::Clie => CaseStudy::Clie,
            };
            config(Command::Casestudy(study), common)
        }
    };
    let outcome = run(&cfg);
    if outcome.code == 2 {
        eprint!("{}", outcome.report);
    } else {
        print!("{}", outcome.report);
    }
    ExitCode::from(outcome.code as u8)
}
