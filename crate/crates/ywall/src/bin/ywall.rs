//! Command line front end: generate wall crystals, print energy data,
//! list reduced adjacencies, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or data error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ywall::cartan::{level, AffineType, Weight};
use ywall::column::class_label;
use ywall::energy::{fixture_table, ground_pair, solve_energy};
use ywall::exec::Parallelism;
use ywall::perfect::build;
use ywall::verify;
use ywall::wall::WallModel;

#[derive(Parser)]
#[command(
    name = "ywall",
    about = "Young wall crystals for the affine types d4_3 and g2_1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Run sweeps and generation sequentially instead of data-parallel.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the wall crystal of a highest weight down to a depth.
    Gen {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, value_enum, default_value = "L0")]
        weight: WeightArg,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: FormatArg,
    },
    /// Print the energy table, or its difference against the fixture.
    Energy {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, value_enum, default_value = "table")]
        emit: EmitArg,
    },
    /// List the reduced adjacent column pairs with their 0-block offsets.
    Adjacent {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        /// Print only the number of pairs.
        #[arg(long)]
        count: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "d4_3")]
    D4_3,
    #[value(name = "g2_1")]
    G2_1,
}

impl From<TypeArg> for AffineType {
    fn from(t: TypeArg) -> AffineType {
        match t {
            TypeArg::D4_3 => AffineType::D4_3,
            TypeArg::G2_1 => AffineType::G2_1,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightArg {
    #[value(name = "L0")]
    L0,
    #[value(name = "L2")]
    L2,
}

impl From<WeightArg> for Weight {
    fn from(w: WeightArg) -> Weight {
        match w {
            WeightArg::L0 => Weight::fundamental(0),
            WeightArg::L2 => Weight::fundamental(2),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
    Mult,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Table,
    Diff,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Energy,
    Perfect,
    Rmatrix,
    Walls,
    Paths,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = if cli.sequential {
        Parallelism::Sequential
    } else {
        Parallelism::default()
    };

    match cli.command {
        Command::Gen {
            ty,
            weight,
            depth,
            format,
        } => {
            let ty = AffineType::from(ty);
            let lambda = Weight::from(weight);
            if level(ty, &lambda) != 1 {
                eprintln!("error: {lambda} is not a level-1 weight for {ty}");
                return ExitCode::from(2);
            }
            let model = match WallModel::new(ty, lambda) {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let wc = model.generate(depth, mode);
            match format {
                FormatArg::Dot => print!("{}", wc.export_dot(&model)),
                FormatArg::Json => println!("{}", wc.export_json(&model)),
                FormatArg::Mult => {
                    println!("depth\tweight\tmultiplicity");
                    for (depth, wt, m) in wc.multiplicities(&model) {
                        println!("{depth}\t{wt}\t{m}");
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Energy { ty, emit } => {
            let ty = AffineType::from(ty);
            let p = build(ty);
            let solved = match solve_energy(&p, ground_pair(&p)) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            match emit {
                EmitArg::Table => {
                    print!("{}", solved.render(&p));
                    ExitCode::SUCCESS
                }
                EmitArg::Diff => {
                    let diff = solved.diff(&fixture_table(ty));
                    if diff.is_empty() {
                        println!("0 differences against the fixture table");
                        ExitCode::SUCCESS
                    } else {
                        for (x, y, a, b) in &diff {
                            println!(
                                "{} (x) {}: solved {a}, fixture {b}",
                                p.graph().label(*x),
                                p.graph().label(*y)
                            );
                        }
                        ExitCode::from(1)
                    }
                }
            }
        }
        Command::Adjacent { ty, count } => {
            let ty = AffineType::from(ty);
            let model = WallModel::new(ty, Weight::fundamental(0)).expect("Lambda_0 has level 1");
            let pairs = model.enumerate_reduced_adjacent_pairs();
            if count {
                println!("{}", pairs.len());
            } else {
                let p = model.perfect_crystal();
                println!("left\tright\toffset");
                for (l, r, h) in pairs {
                    println!("{}\t{}\t{h}", class_label(p, l), class_label(p, r));
                }
            }
            ExitCode::SUCCESS
        }
        Command::Verify { suite } => {
            let report = match suite {
                SuiteArg::All => verify::full_suite(mode),
                SuiteArg::Energy => verify::energy_suite(),
                SuiteArg::Perfect => verify::perfect_suite(),
                SuiteArg::Rmatrix => verify::rmatrix_suite(3, mode),
                SuiteArg::Walls => verify::walls_suite(8, mode),
                SuiteArg::Paths => verify::paths_suite(8, mode),
            };
            print!("{report}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
