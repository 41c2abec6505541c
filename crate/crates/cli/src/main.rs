use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use cab_core::boundary::{algebraic_boundary, curve_boundary_degree_bound, plucker_bitangent_count, surface_degree_oracles, BoundaryOptions};
use cab_core::duality::{dual, ProjectiveVariety};
use cab_core::idealops::Ideal;
use cab_core::tangency::{k_tangency, k_tangency_singular};
use cab_core::{format, Budget, Error, MonomialOrder, Polynomial};

mod problem;
mod report;

use problem::{parse_order, ProblemFile};
use report::{BoundaryJson, CommandJson};

#[derive(Parser, Debug)]
#[command(name = "cab", version, about = "Duals, k-tangency varieties and convex hull boundaries over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Monomial order: lex, grevlex or elim:N.
    #[arg(long, global = true, value_parser = order_arg)]
    order: Option<MonomialOrder>,
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Use the variant that allows isolated singular points.
    #[arg(long, global = true)]
    singular: bool,
    #[arg(long, global = true, env = "CAB_BUDGET_SECONDS")]
    budget_seconds: Option<f64>,
    /// Also write a JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Report only the lower bound for r(X).
    #[arg(long, global = true)]
    bound_only_r: bool,
    /// Compute the k values of `boundary` concurrently.
    #[arg(long, global = true)]
    parallel_k: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis.
    Gb { file: PathBuf },
    /// Elimination ideal; `--vars` takes variable or block names.
    Eliminate {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
    },
    /// Saturation of the first ideal by the second.
    Saturate { file: PathBuf, by: PathBuf },
    Intersect { file: PathBuf, other: PathBuf },
    Dim { file: PathBuf },
    Degree { file: PathBuf },
    /// Dual variety.
    Dual { file: PathBuf },
    /// The k-tangency variety X^[k].
    Tangency { file: PathBuf },
    /// Candidate algebraic boundary of the convex hull.
    Boundary { file: PathBuf },
    /// Closed-form degree counts.
    Oracle {
        #[arg(long)]
        plucker: Option<i64>,
        #[arg(long)]
        surface: Option<i64>,
        #[arg(long)]
        curve_bound: Option<i64>,
    },
}

fn order_arg(s: &str) -> Result<MonomialOrder, String> {
    parse_order(s).ok_or_else(|| format!("unknown order '{s}'"))
}

enum Failure {
    Input(String),
    Timeout(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Timeout { .. } => Failure::Timeout(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<ProblemFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    ProblemFile::parse(&text).map_err(|e| Failure::Input(format!("{}:{e}", path.display())))
}

fn variety(p: &ProblemFile, budget: &Budget) -> Result<ProjectiveVariety, Failure> {
    let ideal = p.ideal()?;
    if p.homogeneous {
        return Ok(ProjectiveVariety::new(ideal)?);
    }
    match &p.homogenize {
        Some(w) => Ok(ProjectiveVariety::closure(&ideal, w, budget)?),
        None => Err(Failure::Input("affine input: add a 'homogenize:' header for projective commands".into())),
    }
}

/// Prints one polynomial per line, leading monomials descending.
fn print_polys(polys: &[Polynomial]) -> Vec<String> {
    let mut polys: Vec<&Polynomial> = polys.iter().collect();
    polys.sort_by(|a, b| match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => a.order().compare(y, x).unwrap_or(std::cmp::Ordering::Equal),
        _ => std::cmp::Ordering::Equal,
    });
    let out: Vec<String> = polys.into_iter().map(format).collect();
    for line in &out {
        println!("{line}");
    }
    out
}

fn write_json<T: serde::Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), Failure> {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
        text.push('\n');
        fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn same_ring(a: &Ideal, b: &Ideal) -> Result<(), Failure> {
    if a.ring().vars() != b.ring().vars() {
        return Err(Failure::Input("both files must declare the same variables".into()));
    }
    Ok(())
}

/// Returns `true` when results are partial because a budget ran out.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let file = match &cli.command {
        Command::Oracle { .. } => None,
        Command::Gb { file }
        | Command::Eliminate { file, .. }
        | Command::Saturate { file, .. }
        | Command::Intersect { file, .. }
        | Command::Dim { file }
        | Command::Degree { file }
        | Command::Dual { file }
        | Command::Tangency { file }
        | Command::Boundary { file } => Some(load(file)?),
    };
    let seconds = cli.budget_seconds.or(file.as_ref().and_then(|p| p.budget_seconds));
    let budget = match seconds {
        Some(s) if s.is_finite() && s >= 0.0 => Budget::with_time(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure::Input(format!("invalid budget {s}"))),
        None => Budget::unlimited(),
    };
    let command = |name: &str, p: &ProblemFile, generators: Vec<String>, value: Option<serde_json::Value>| CommandJson {
        command: name.into(),
        vars: p.ring.vars().to_vec(),
        generators,
        value,
    };

    match &cli.command {
        Command::Gb { .. } => {
            let p = file.unwrap();
            let order = cli.order.or(p.order).unwrap_or_default();
            let gb = p.ideal()?.groebner_with(order, &budget)?;
            let lines = print_polys(gb.generators());
            write_json(&cli.json, &command("gb", &p, lines, None))?;
        }
        Command::Eliminate { vars, .. } => {
            let p = file.unwrap();
            let mut idx = Vec::new();
            for name in vars {
                match (p.ring.index_of(name), p.ring.block(name)) {
                    (Some(i), _) => idx.push(i),
                    (None, Some(b)) => idx.extend(b.range()),
                    (None, None) => return Err(Failure::Input(format!("unknown variable or block '{name}'"))),
                }
            }
            let out = p.ideal()?.eliminate(&idx, &budget)?;
            let lines = print_polys(out.generators());
            write_json(&cli.json, &command("eliminate", &p, lines, None))?;
        }
        Command::Saturate { by, .. } | Command::Intersect { other: by, .. } => {
            let p = file.unwrap();
            let q = load(by)?;
            let (a, b) = (p.ideal()?, q.ideal()?);
            same_ring(&a, &b)?;
            let b = b.rename_into(a.ring())?;
            let (name, out) = match cli.command {
                Command::Saturate { .. } => ("saturate", a.saturate(&b, &budget)?),
                _ => ("intersect", a.intersect(&b, &budget)?),
            };
            let lines = print_polys(out.reduced(&budget)?.generators());
            write_json(&cli.json, &command(name, &p, lines, None))?;
        }
        Command::Dim { .. } | Command::Degree { .. } => {
            let p = file.unwrap();
            let ideal = p.ideal()?;
            let (name, value) = match cli.command {
                Command::Dim { .. } => ("dim", ideal.dimension(&budget)?),
                _ => ("degree", ideal.degree(&budget)? as i64),
            };
            println!("{value}");
            write_json(&cli.json, &command(name, &p, vec![], Some(value.into())))?;
        }
        Command::Dual { .. } => {
            let p = file.unwrap();
            let v = variety(&p, &budget)?;
            let d = dual(&v, &budget)?;
            let lines = print_polys(d.ideal.generators());
            let mut out = command("dual", &p, lines, None);
            out.vars = d.ring().vars().to_vec();
            write_json(&cli.json, &out)?;
        }
        Command::Tangency { .. } => {
            let p = file.unwrap();
            let k = cli.k.or(p.k).ok_or_else(|| Failure::Input("tangency needs --k or a 'k:' header".into()))?;
            let v = variety(&p, &budget)?;
            let singular = cli.singular || p.singular.unwrap_or(false);
            let t = if singular { k_tangency_singular(&v, k, &budget)? } else { k_tangency(&v, k, &budget)? };
            let lines = print_polys(t.ideal.generators());
            let mut out = command("tangency", &p, lines, Some((t.dim(&budget)?).into()));
            out.vars = t.ring().vars().to_vec();
            write_json(&cli.json, &out)?;
        }
        Command::Boundary { .. } => {
            let p = file.unwrap();
            let v = variety(&p, &budget)?;
            let options = BoundaryOptions {
                singular: if cli.singular { Some(true) } else { p.singular },
                bound_only_r: cli.bound_only_r.then_some(true),
                budget_per_k: None,
                parallel: cli.parallel_k,
            };
            let rep = algebraic_boundary(&v, &options, &budget)?;
            for c in &rep.components {
                let body: Vec<String> = c.ideal.generators().iter().map(format).collect();
                println!("k={} codim={} degree={}: {}", c.k, c.codim, c.degree, body.join(", "));
            }
            if let Some(prod) = &rep.product_poly {
                println!("product degree={}: {}", rep.total_degree(), format(prod));
            }
            for d in rep.diagnostics.iter().filter(|d| d.status.name() == "timeout") {
                eprintln!("k={}: budget exhausted", d.k);
            }
            write_json(&cli.json, &BoundaryJson::from(&rep))?;
            return Ok(rep.timed_out());
        }
        Command::Oracle { plucker, surface, curve_bound } => {
            let mut any = false;
            if let Some(d) = plucker {
                println!("{}", plucker_bitangent_count(*d)?);
                any = true;
            }
            if let Some(d) = surface {
                let (a, b, c) = surface_degree_oracles(*d);
                println!("{a} {b} {c}");
                any = true;
            }
            if let Some(d) = curve_bound {
                println!("{}", curve_boundary_degree_bound(*d)?);
                any = true;
            }
            if !any {
                return Err(Failure::Input("oracle needs --plucker, --surface or --curve-bound".into()));
            }
        }
    }
    Ok(false)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Timeout(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
