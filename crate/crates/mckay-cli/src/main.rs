//! `mckay`: exact orbifold cohomology of symplectic quotient singularities
//! from a finite matrix group, with exhaustive desk-scale verification.

mod report;
mod spec_file;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mckay_core::families::{self, FamilySpec, InnerFamily};
use mckay_core::group::{close_generators, Caps, FiniteMatrixGroup};
use mckay_core::orbifold::{AssocMode, OrbifoldAnalysis};

use report::{Check, Format, Report};

#[derive(Parser)]
#[command(
    name = "mckay",
    version,
    about = "Exact orbifold cohomology of symplectic quotient singularities",
    after_help = "Verification failures exit with code 1; usage, parse and \
                  computation errors exit with code 2."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Append wall-clock timing to the report (off by default so that
    /// repeated runs are byte-identical)
    #[arg(long, global = true)]
    timing: bool,

    /// Cap on the number of group elements materialized by closure
    #[arg(long, global = true, value_name = "N")]
    max_group_order: Option<usize>,

    /// Cap on element orders probed during closure
    #[arg(long, global = true, value_name = "N")]
    max_element_order: Option<u64>,

    /// Associativity sweep mode; default is elements up to order 400 and
    /// classes beyond
    #[arg(long, global = true, value_enum)]
    assoc_mode: Option<AssocModeArg>,

    /// Skip a verification check (repeatable): age-codim, transversality,
    /// associativity, betti-paths, filtration
    #[arg(long, global = true, value_name = "CHECK")]
    skip: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Betti tables in both gradings (2*age and codim)
    Betti(TargetArgs),
    /// Structure constants of the graded center ring
    Ring(TargetArgs),
    /// Conjugacy class table with ages and codimensions
    Classes(TargetArgs),
    /// Age-1 classes and the number of deformation parameters
    Reflections(TargetArgs),
    /// Run every verification sweep
    Verify(TargetArgs),
    /// Everything: classes, betti tables, ring, reflections, verification
    Report(TargetArgs),
}

impl Command {
    fn target(&self) -> &TargetArgs {
        match self {
            Command::Betti(t)
            | Command::Ring(t)
            | Command::Classes(t)
            | Command::Reflections(t)
            | Command::Verify(t)
            | Command::Report(t) => t,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Betti(_) => "betti",
            Command::Ring(_) => "ring",
            Command::Classes(_) => "classes",
            Command::Reflections(_) => "reflections",
            Command::Verify(_) => "verify",
            Command::Report(_) => "report",
        }
    }
}

#[derive(Args)]
struct TargetArgs {
    /// Path to a group specification file
    #[arg(long, value_name = "PATH", conflicts_with = "family")]
    file: Option<PathBuf>,

    /// Built-in family
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,

    /// Family parameter m (cyclic, binary-dihedral; inner order for wreath)
    #[arg(short)]
    m: Option<u64>,

    /// Family parameter n (symmetric, wreath)
    #[arg(short)]
    n: Option<u64>,

    /// Inner family of a wreath product
    #[arg(long, value_enum)]
    inner: Option<InnerArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cyclic,
    BinaryDihedral,
    Symmetric,
    Wreath,
}

#[derive(Clone, Copy, ValueEnum)]
enum InnerArg {
    Cyclic,
    BinaryDihedral,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum AssocModeArg {
    Elements,
    Classes,
}

fn resolve_target(args: &TargetArgs, cli: &Cli) -> anyhow::Result<(String, FiniteMatrixGroup)> {
    let default_caps = Caps::default();
    let cli_caps = Caps {
        closure: cli.max_group_order.unwrap_or(default_caps.closure),
        element_order: cli.max_element_order.unwrap_or(default_caps.element_order),
    };
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let spec = spec_file::parse_group_spec(&text)
            .map_err(|e| anyhow!("{}: {e}", path.display()))?;
        let caps = spec.caps(cli.max_group_order, cli.max_element_order);
        let group = close_generators(&spec.generators, &spec.omega, &caps)?;
        debug_assert_eq!(group.dim(), spec.dim);
        debug_assert_eq!(group.conductor() % spec.conductor, 0);
        return Ok((format!("file:{}", path.display()), group));
    }
    let Some(family) = args.family else {
        bail!("specify a target: --file <PATH> or --family <FAMILY>");
    };
    let need = |v: Option<u64>, what: &str| {
        v.ok_or_else(|| anyhow!("family requires the parameter {what}"))
    };
    let (label, spec) = match family {
        FamilyArg::Cyclic => {
            let m = need(args.m, "-m")?;
            (format!("family:cyclic(m={m})"), FamilySpec::CyclicSl2 { m })
        }
        FamilyArg::BinaryDihedral => {
            let m = need(args.m, "-m")?;
            (
                format!("family:binary-dihedral(m={m})"),
                FamilySpec::BinaryDihedral { m },
            )
        }
        FamilyArg::Symmetric => {
            let n = need(args.n, "-n")?;
            (format!("family:symmetric(n={n})"), FamilySpec::Symmetric { n })
        }
        FamilyArg::Wreath => {
            let n = need(args.n, "-n")?;
            let m = need(args.m, "-m")?;
            let inner = match args.inner.ok_or_else(|| {
                anyhow!("wreath requires --inner (cyclic or binary-dihedral)")
            })? {
                InnerArg::Cyclic => InnerFamily::CyclicSl2 { m },
                InnerArg::BinaryDihedral => InnerFamily::BinaryDihedral { m },
            };
            let inner_label = match &inner {
                InnerFamily::CyclicSl2 { m } => format!("cyclic(m={m})"),
                InnerFamily::BinaryDihedral { m } => format!("binary-dihedral(m={m})"),
            };
            (
                format!("family:wreath({inner_label}, n={n})"),
                FamilySpec::Wreath { inner, n },
            )
        }
    };
    let group = families::build(&spec, &cli_caps)?;
    Ok((label, group))
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let started = Instant::now();
    let mut skip = BTreeSet::new();
    for name in &cli.skip {
        let check = Check::from_name(name).ok_or_else(|| {
            anyhow!(
                "unknown check `{name}`; known checks: {}",
                Check::ALL.map(|c| c.name()).join(", ")
            )
        })?;
        skip.insert(check);
    }
    let assoc_mode = cli.assoc_mode.map(|m| match m {
        AssocModeArg::Elements => AssocMode::Elements,
        AssocModeArg::Classes => AssocMode::Classes,
    });

    let (target, group) = resolve_target(cli.command.target(), cli)?;
    let analysis = OrbifoldAnalysis::new(group)?;
    let command = cli.command.name();

    let report = match &cli.command {
        Command::Betti(_) => Report::new(command, target, &analysis).with_betti(&analysis)?,
        Command::Ring(_) => Report::new(command, target, &analysis).with_ring(&analysis)?,
        Command::Classes(_) => Report::new(command, target, &analysis).with_classes(&analysis),
        Command::Reflections(_) => {
            Report::new(command, target, &analysis).with_reflections(&analysis)
        }
        Command::Verify(_) => {
            Report::new(command, target, &analysis).with_verify(&analysis, &skip, assoc_mode)?
        }
        Command::Report(_) => Report::new(command, target, &analysis)
            .with_classes(&analysis)
            .with_betti(&analysis)?
            .with_ring(&analysis)?
            .with_reflections(&analysis)
            .with_verify(&analysis, &skip, assoc_mode)?,
    };
    let report = report.with_timing(started.elapsed(), cli.timing);

    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    print!("{}", report.render(format));
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
