//! The `coxdet` command line.
//!
//! [`run`] parses arguments and writes to the given streams so the whole
//! surface can be driven in-process by tests. Exit codes: 0 success,
//! 1 verification failure, 2 usage or input error.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use coxdet::binmath::log2_big;
use coxdet::other::{d_report, det_d, dihedral_counts, exceptional_counts_by_name, Half, TypeDIrrep};
use coxdet::partition::{partition_count, Partition};
use coxdet::report::{CountReport, GroupTag, Method, MultChar};
use coxdet::sn::count_b_or_zero;
use coxdet::tower::{build_tower, CoreTower, TowerPos};
use coxdet::typeb::{closed_counts, det_b, enumerated_counts, BCounts, Bipartition, MultCharB};
use coxdet::Error;

mod verify;

pub use verify::{run_verify, Check, Formulas, VerifyOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "coxdet", version, about = "Determinants of irreducible representations of finite Coxeter groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    A,
    B,
    D,
    I2,
    Exceptional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Enumerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TowerFormat {
    Json,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HalfArg {
    Plus,
    Minus,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinant of one irreducible representation.
    Det {
        #[arg(long = "type", value_enum, ignore_case = true)]
        kind: TypeArg,
        /// Partition for type A, e.g. 3,1,1
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Which half of a type D pair with α = β
        #[arg(long, value_enum)]
        half: Option<HalfArg>,
    },
    /// Number of irreducibles per determinant, as JSON.
    Count {
        #[arg(long = "type", value_enum, ignore_case = true)]
        kind: TypeArg,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        /// Largest n allowed for enumeration
        #[arg(long, default_value_t = 30)]
        limit: u64,
    },
    /// Type B count table.
    Table {
        #[arg(long = "type", value_enum, ignore_case = true)]
        kind: TypeArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Closed formulas checked against enumeration.
    Verify {
        #[arg(long)]
        max_n: usize,
    },
    /// 2-core tower of a partition.
    Tower {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "json")]
        format: TowerFormat,
    },
    /// Base-2 logarithms of the type B counts.
    PlotData {
        #[arg(long = "type", value_enum, ignore_case = true)]
        kind: TypeArg,
        #[arg(long)]
        max_n: usize,
    },
}

/// A failure that maps to an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<String, Failure>;

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    run_command(cli.command, &Formulas::default(), out, err)
}

pub fn run_command(cmd: Command, formulas: &Formulas, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cmd {
        Command::Det {
            kind,
            lambda,
            alpha,
            beta,
            half,
        } => cmd_det(kind, lambda, alpha, beta, half),
        Command::Count {
            kind,
            n,
            p,
            name,
            method,
            limit,
        } => cmd_count(kind, n, p, name, method, limit),
        Command::Table { kind, max_n, .. } => cmd_table(kind, max_n),
        Command::Verify { max_n } => cmd_verify(max_n, formulas),
        Command::Tower { lambda, format } => cmd_tower(&lambda, format),
        Command::PlotData { kind, max_n } => cmd_plot_data(kind, max_n),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verify(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_VERIFY
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> std::result::Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn parse_partition(flag: &str, value: Option<String>) -> std::result::Result<Partition, Failure> {
    match value {
        Some(v) => Ok(v.parse()?),
        None => usage(format!("--{flag} is required")),
    }
}

fn cmd_det(
    kind: TypeArg,
    lambda: Option<String>,
    alpha: Option<String>,
    beta: Option<String>,
    half: Option<HalfArg>,
) -> CmdResult {
    let name = match kind {
        TypeArg::A => parse_partition("lambda", lambda)?.sn_determinant()?.to_string(),
        TypeArg::B => {
            let bp = Bipartition::new(parse_partition("alpha", alpha)?, parse_partition("beta", beta)?);
            if bp.n() == 0 {
                return usage("type B needs n ≥ 1");
            }
            det_b(&bp).to_string()
        }
        TypeArg::D => {
            let (a, b) = (parse_partition("alpha", alpha)?, parse_partition("beta", beta)?);
            let n = a.size() + b.size();
            let irrep = if a == b {
                let h = match half {
                    Some(HalfArg::Plus) => Half::Plus,
                    Some(HalfArg::Minus) => Half::Minus,
                    None => return usage("α = β splits in two; pick one with --half"),
                };
                TypeDIrrep::TypeII(a, h)
            } else {
                TypeDIrrep::type_i(a, b)?
            };
            det_d(&irrep, n)?.to_string()
        }
        TypeArg::I2 | TypeArg::Exceptional => {
            return usage("det supports --type A, B or D");
        }
    };
    Ok(format!("{name}\n"))
}

fn b_counts(n: usize, method: MethodArg, limit: u64) -> std::result::Result<(BCounts, Method), Failure> {
    if n == 0 {
        return usage("type B needs n ≥ 1");
    }
    // The closed formulas start at n = 2.
    if method == MethodArg::Enumerate || n == 1 {
        if n as u64 > limit {
            return usage(format!("enumeration of B_{n} exceeds --limit {limit}"));
        }
        return Ok((enumerated_counts(n), Method::Enumeration));
    }
    Ok((closed_counts(n)?, Method::Closed))
}

fn cmd_count(
    kind: TypeArg,
    n: Option<u64>,
    p: Option<u64>,
    name: Option<String>,
    method: MethodArg,
    limit: u64,
) -> CmdResult {
    let need_n = || n.ok_or_else(|| Failure::Usage("--n is required".into()));
    let report = match kind {
        TypeArg::A => {
            let n = need_n()?;
            if n == 0 {
                return usage("type A needs n ≥ 1");
            }
            let (sgn, m) = if method == MethodArg::Enumerate {
                if n > limit {
                    return usage(format!("enumeration of S_{n} exceeds --limit {limit}"));
                }
                (coxdet::sn::enumerate_chiral(n as usize), Method::Enumeration)
            } else {
                (count_b_or_zero(n), Method::Closed)
            };
            CountReport {
                group: GroupTag::A,
                n,
                method: m,
                counts: vec![
                    (MultChar::Triv, partition_count(n as usize) - &sgn),
                    (MultChar::Sgn, sgn),
                ],
            }
        }
        TypeArg::B => {
            let n = need_n()?;
            let (counts, m) = b_counts(n as usize, method, limit)?;
            counts.report(n as usize, m)
        }
        TypeArg::D => {
            let n = need_n()?;
            if n < 4 {
                return usage("type D needs n ≥ 4");
            }
            if method == MethodArg::Enumerate {
                if n > limit {
                    return usage(format!("enumeration of D_{n} exceeds --limit {limit}"));
                }
                d_report(n as usize, Method::Enumeration)?
            } else {
                d_report(n as usize, Method::Closed)?
            }
        }
        TypeArg::I2 => {
            let p = p.ok_or_else(|| Failure::Usage("--p is required".into()))?;
            if p < 3 {
                return usage("I2(p) needs p ≥ 3");
            }
            dihedral_counts(p)?
        }
        TypeArg::Exceptional => {
            if method == MethodArg::Enumerate {
                return usage("exceptional counts come from a table; --method enumerate is not available");
            }
            let name = name.ok_or_else(|| Failure::Usage("--name is required".into()))?;
            exceptional_counts_by_name(&name)?
        }
    };
    Ok(format!("{}\n", report.to_json()))
}

fn require_b(kind: TypeArg, cmd: &str) -> std::result::Result<(), Failure> {
    if kind != TypeArg::B {
        return usage(format!("{cmd} supports --type B only"));
    }
    Ok(())
}

fn table_rows(max_n: usize, from: usize) -> std::result::Result<Vec<(usize, BCounts)>, Failure> {
    (from..=max_n)
        .map(|n| Ok((n, b_counts(n, MethodArg::Closed, u64::MAX)?.0)))
        .collect()
}

fn cmd_table(kind: TypeArg, max_n: usize) -> CmdResult {
    require_b(kind, "table")?;
    if max_n < 1 {
        return usage("--max-n must be at least 1");
    }
    let mut s = String::from("n,N_triv,N_sgn0,N_sgn1,N_eps\n");
    for (n, c) in table_rows(max_n, 1)? {
        let cells: Vec<String> = MultCharB::ALL.iter().map(|w| c.get(*w).to_string()).collect();
        let _ = writeln!(s, "{n},{}", cells.join(","));
    }
    Ok(s)
}

fn cmd_plot_data(kind: TypeArg, max_n: usize) -> CmdResult {
    require_b(kind, "plot-data")?;
    if max_n < 2 {
        return usage("--max-n must be at least 2");
    }
    let mut s = String::from("n,log2_N_triv,log2_N_sgn0,log2_N_sgn1,log2_N_eps\n");
    for (n, c) in table_rows(max_n, 2)? {
        let cells: Vec<String> = MultCharB::ALL
            .iter()
            .map(|w| format!("{:.6}", log2_big(c.get(*w))))
            .collect();
        let _ = writeln!(s, "{n},{}", cells.join(","));
    }
    Ok(s)
}

/// Rows `0..=4` are drawn in full; deeper rows list their nonempty
/// positions only.
pub fn render_tower_ascii(tower: &CoreTower) -> String {
    let mut s = String::new();
    let last = tower.max_row().unwrap_or(0);
    for i in 0..=last {
        let cells: Vec<String> = if i <= 4 {
            (0..1u64 << i)
                .map(|bits| coxdet::partition::pretty(&tower.label(TowerPos { row: i, bits })))
                .collect()
        } else {
            tower
                .row(i)
                .map(|(pos, l)| format!("{}={}", pos.bit_string(), coxdet::partition::pretty(l)))
                .collect()
        };
        let _ = writeln!(s, "row {i}: {}", cells.join(","));
    }
    s
}

fn cmd_tower(lambda: &str, format: TowerFormat) -> CmdResult {
    let lambda: Partition = lambda.parse()?;
    let tower = build_tower(&lambda);
    Ok(match format {
        TowerFormat::Json => format!("{}\n", tower.to_json()),
        TowerFormat::Ascii => render_tower_ascii(&tower),
    })
}

fn cmd_verify(max_n: usize, formulas: &Formulas) -> CmdResult {
    if max_n < 2 {
        return usage("--max-n must be at least 2");
    }
    let outcome = run_verify(max_n, formulas);
    let text = outcome.render();
    if outcome.passed() {
        Ok(text)
    } else {
        Err(Failure::Verify(text))
    }
}
