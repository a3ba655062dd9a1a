use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use yangian::catalog::{enumerate_catalog, run_catalog, run_info, Group, Selection};
use yangian::workspace::Backend;
use yangian::{Kind, Status};

#[derive(Parser)]
#[command(name = "yangian", version, about = "Exact verification of extended Yangian identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a group of checks (or all of them).
    Verify(VerifyArgs),
    /// List the family keys of a group.
    Families {
        #[arg(value_enum, default_value = "all")]
        what: What,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Ybe,
    Fusion,
    Rtt,
    Relations,
    Center,
    Embeddings,
    Drinfeld,
    Symmetries,
    Lowrank,
    Pbw,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Abstract,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    A,
    B,
    C,
    D,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    what: What,
    /// Algebra type; without --n all default ranks of this type are used.
    #[arg(long = "type", value_enum, ignore_case = true)]
    kind: Option<TypeArg>,
    /// Rank n (matrix size N = 2n+1 for B, 2n for C and D, n for A).
    #[arg(long, requires = "kind")]
    n: Option<usize>,
    /// Truncation order K for both backends (default 3 abstract, 4 oracle).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
    order: Option<u64>,
    #[arg(long, value_enum, default_value = "both")]
    backend: BackendArg,
    /// Comma-separated family keys, e.g. `hihj,drinfeld/kikj`.
    #[arg(long, value_delimiter = ',')]
    families: Vec<String>,
    /// Worker threads (0 = one per core).
    #[arg(long, env = "YANGIAN_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Write a JSON report to this path.
    #[arg(long)]
    report: Option<std::path::PathBuf>,
    /// Seed for the random-word property checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print only failures and the summary.
    #[arg(long, short)]
    quiet: bool,
}

fn groups(w: What) -> Vec<Group> {
    match w {
        What::Ybe => vec![Group::Ybe],
        What::Fusion => vec![Group::Fusion],
        What::Rtt => vec![Group::Rtt],
        What::Relations => vec![Group::Relations],
        What::Center => vec![Group::Center],
        What::Embeddings => vec![Group::Embeddings],
        What::Drinfeld => vec![Group::Drinfeld],
        What::Symmetries => vec![Group::Symmetries],
        What::Lowrank => vec![Group::Lowrank],
        What::Pbw => vec![Group::Pbw],
        What::All => Group::ALL.to_vec(),
    }
}

fn kind(t: TypeArg) -> Kind {
    match t {
        TypeArg::A => Kind::A,
        TypeArg::B => Kind::B,
        TypeArg::C => Kind::C,
        TypeArg::D => Kind::D,
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn verify(args: VerifyArgs) -> ExitCode {
    let gs = groups(args.what);
    let mut sel = Selection::new(gs.clone());
    sel.order = args.order.map(|k| k as usize);
    sel.families = args.families;
    sel.seed = args.seed;
    sel.backends = match args.backend {
        BackendArg::Abstract => vec![Backend::Abstract],
        BackendArg::Oracle => vec![Backend::Oracle],
        BackendArg::Both => vec![Backend::Abstract, Backend::Oracle],
    };
    if let Some(t) = args.kind {
        let k = kind(t);
        sel.algebras = match args.n {
            Some(n) => {
                if let Err(e) = yangian::AlgebraContext::new(k, n, 1) {
                    return usage_error(e);
                }
                vec![(k, n)]
            }
            None => {
                let mut v: Vec<_> = gs.iter().flat_map(|g| g.default_algebras()).filter(|(x, _)| *x == k).collect();
                v.sort();
                v.dedup();
                if v.is_empty() {
                    return usage_error(format!("no default ranks of type {k}; pass --n"));
                }
                v
            }
        };
    }
    let cases = match enumerate_catalog(&sel) {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };
    let report = match run_catalog(&cases, args.jobs, run_info(&sel, &cases)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    for c in &report.cases {
        let failed = matches!(c.status, Status::Fail | Status::Error);
        if args.quiet && !failed {
            continue;
        }
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!("{:<5} {} {} ({} ms)", c.status, c.id, params.join(" "), c.millis);
        if let Some(w) = &c.witness {
            line.push_str(&format!("\n      {w}"));
        }
        println!("{line}");
    }
    let s = report.summary();
    println!("{} cases: {} pass, {} fail, {} skip, {} error", report.cases.len(), s.pass, s.fail, s.skip, s.error);
    if let Some(path) = args.report {
        if let Err(e) = std::fs::write(&path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Families { what } => {
            for g in groups(what) {
                for f in g.families() {
                    println!("{f}");
                }
            }
            ExitCode::SUCCESS
        }
    }
}
