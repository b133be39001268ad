use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kostka_core::factor::{solve_factorization, Block, Table};
use kostka_core::fixtures;
use kostka_core::omega::{omega_matrix, omega_matrix_bruteforce, WREATH_BOUND};
use kostka_core::rpart::{default_total_order, OrderedIndex};
use kostka_core::verify::{run_suite, verify_fixtures, verify_orders, SuiteParams, SUITES};
use kostka_core::Error;

/// Largest `n` the coset route accepts without `--no-guard`.
const COSET_GUARD_N: u32 = 6;

#[derive(Parser)]
#[command(name = "kostka", version, about = "Kostka functions for G(r,1,n)")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the r-partitions of n with their statistics.
    Enumerate(Common),
    /// Build the fake-degree matrix.
    Omega {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Cosets)]
        method: Method,
    },
    /// Solve the triangular factorization and emit selected blocks.
    Solve {
        #[command(flatten)]
        common: Common,
        /// Comma-separated blocks, or `all`.
        #[arg(long, default_value = "p-minus,p-plus,lambda")]
        emit: String,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Comma-separated integer q values for numeric checks.
        #[arg(long, value_delimiter = ',')]
        q: Vec<i64>,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Compare fixtures after applying their recorded errata.
        #[arg(long)]
        errata: bool,
    },
    /// Compare Kostka matrices across sampled dominance-compatible orders.
    Orders {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 2)]
    n: u32,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
    /// default, fixture:ID or file:PATH
    #[arg(long, default_value = "default")]
    order: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Lift the size guards on both routes.
    #[arg(long)]
    no_guard: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Cosets,
    Wreath,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::InvalidRPartition(_) | Error::Parse { .. } | Error::BoundExceeded(_) => 2,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

impl Common {
    fn r(&self) -> usize {
        self.r as usize
    }

    fn resolve_order(&self) -> Result<OrderedIndex, Failure> {
        let o = match self.order.split_once(':') {
            None if self.order == "default" => default_total_order(self.n, self.r()),
            Some(("fixture", id)) => {
                let all = fixtures::load(id)?;
                let f = if all.len() == 1 {
                    &all[0]
                } else {
                    all.iter()
                        .find(|f| f.order().r() == self.r())
                        .ok_or_else(|| usage(format!("fixture {id} has no member with r = {}", self.r)))?
                };
                f.order().clone()
            }
            Some(("file", path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
                OrderedIndex::parse_lines(&text)?
            }
            _ => return Err(usage(format!("bad --order {:?}; expected default, fixture:ID or file:PATH", self.order))),
        };
        Ok(o)
    }

    fn guard_cosets(&self, n: u32) -> Result<(), Failure> {
        if !self.no_guard && n > COSET_GUARD_N {
            return Err(usage(format!("n = {n} exceeds the coset guard {COSET_GUARD_N}; pass --no-guard")));
        }
        Ok(())
    }

    fn wreath_bound(&self) -> u64 {
        if self.no_guard {
            u64::MAX
        } else {
            WREATH_BOUND
        }
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(p) => std::fs::write(p, text).map_err(|e| Failure { code: 1, msg: format!("{}: {e}", p.display()) }),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn render(format: Format, named: &[(&str, Table)], json_override: Option<Value>) -> String {
    match format {
        Format::Json => {
            let v = json_override.unwrap_or_else(|| {
                Value::Object(named.iter().map(|(k, t)| (k.to_string(), t.to_json_value())).collect())
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Csv => named
            .iter()
            .map(|(k, t)| if named.len() > 1 { format!("# {k}\n{}", t.to_csv()) } else { t.to_csv() })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => named
            .iter()
            .map(|(k, t)| if named.len() > 1 { format!("% {k}\n{}", t.to_latex()) } else { t.to_latex() })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn cmd_enumerate(c: &Common) -> Result<bool, Failure> {
    let o = c.resolve_order()?;
    let rows: Vec<Vec<String>> = o
        .items()
        .iter()
        .map(|l| {
            vec![
                l.to_string(),
                l.n_value().to_string(),
                l.a_value().to_string(),
                l.tau().to_string(),
                l.dim_x().to_string(),
            ]
        })
        .collect();
    let header = ["lambda", "n", "a", "tau", "dim_x"].map(String::from).to_vec();
    let table = Table { header, rows };
    let json = json!(o
        .items()
        .iter()
        .map(|l| json!({"lambda": l.to_string(), "n": l.n_value(), "a": l.a_value(), "tau": l.tau().to_string(), "dim_x": l.dim_x()}))
        .collect::<Vec<_>>());
    c.emit(&render(c.format, &[("enumerate", table)], Some(json)))?;
    Ok(true)
}

fn cmd_omega(c: &Common, method: Method) -> Result<bool, Failure> {
    let o = c.resolve_order()?;
    let (om, verdict) = match method {
        Method::Cosets => {
            c.guard_cosets(o.n())?;
            (omega_matrix(&o)?, None)
        }
        Method::Wreath => (omega_matrix_bruteforce(&o, c.wreath_bound())?, None),
        Method::Both => {
            c.guard_cosets(o.n())?;
            let a = omega_matrix(&o)?;
            let b = omega_matrix_bruteforce(&o, c.wreath_bound())?;
            let eq = a.entries == b.entries;
            (a, Some(eq))
        }
    };
    let json = match verdict {
        None => om.to_json_value(),
        Some(eq) => {
            let mut v = om.to_json_value();
            v["verdict"] = json!(if eq { "equal" } else { "different" });
            v
        }
    };
    c.emit(&render(c.format, &[("omega", om.table())], Some(json)))?;
    if let (Some(eq), false) = (verdict, c.format == Format::Json) {
        eprintln!("verdict: {}", if eq { "equal" } else { "different" });
    }
    Ok(verdict.unwrap_or(true))
}

fn cmd_solve(c: &Common, emit: &str) -> Result<bool, Failure> {
    let o = c.resolve_order()?;
    c.guard_cosets(o.n())?;
    let blocks: Vec<Block> = if emit == "all" {
        Block::ALL.to_vec()
    } else {
        emit.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?
    };
    let res = solve_factorization(&omega_matrix(&o)?)?;
    let named: Vec<(&str, Table)> = blocks.iter().map(|&b| (b.name(), res.table(b))).collect();
    let json = (emit == "all").then(|| res.to_json_value());
    c.emit(&render(c.format, &named, json))?;
    Ok(true)
}

fn report_out(c: &Common, rep: &kostka_core::verify::Report) -> Result<bool, Failure> {
    c.emit(&(rep.to_json() + "\n"))?;
    Ok(rep.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.cmd {
        Command::Enumerate(c) => cmd_enumerate(c),
        Command::Omega { common, method } => cmd_omega(common, *method),
        Command::Solve { common, emit } => cmd_solve(common, emit),
        Command::Verify { common, suite, q, samples, seed, errata } => (|| {
            if suite != "fixtures" && suite != "classical-r1" && suite != "lemma59" {
                common.guard_cosets(common.n)?;
            }
            if q.iter().any(|&x| x < 2) {
                return Err(usage("q values must be integers >= 2"));
            }
            let rep = if suite == "fixtures" {
                verify_fixtures(&fixtures::load_all()?, *errata)?
            } else {
                let p = SuiteParams {
                    n: common.n,
                    r: common.r(),
                    q: q.clone(),
                    samples: *samples,
                    seed: *seed,
                    wreath_bound: common.wreath_bound(),
                };
                run_suite(suite, &p)?
            };
            report_out(common, &rep)
        })(),
        Command::Orders { common, samples, seed } => (|| {
            common.guard_cosets(common.n)?;
            report_out(common, &verify_orders(common.n, common.r(), *samples, *seed)?)
        })(),
    };
    match out {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
