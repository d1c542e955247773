//! The `ncweyl` command line.
//!
//! Exit status is 0 on success, 1 when the engine rejects the input
//! (poles, non-admissible roots, elements outside `U`), and 2 for usage
//! errors, which include expression syntax errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::central::{function as cf, poly, CentralFunction, CentralPoly};
use crate::derivative::act;
use crate::error::Error;
use crate::expr::{parse_central, parse_element};
use crate::lattice::{GridFunction, LatticeConfig, LatticeGrid, LatticeOp};
use crate::models::{kg_dispersion_residual, kg_energy_branches, solve_ground_state};
use crate::numfmt::{g17, g17_complex};
use crate::scalar::GaussRational;
use crate::selftest;
use crate::weyl::WeylElement;

#[derive(Debug, Parser)]
#[command(name = "ncweyl", version, about = "Weyl algebra over U(u(2)_hbar): normal ordering, derivatives, radial calculus and models")]
pub struct Cli {
    /// Numeric value of hbar.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    /// JSON output.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// CSV output.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Lattice configuration file.
    #[arg(long, global = true)]
    pub grid: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal-order an expression.
    Normalize { expr: String },
    /// Apply a derivative expression to an element of U.
    Act { derivative: String, element: String },
    /// Apply a radial operator to f(tau, r); numeric when --tau and --r are given.
    #[command(allow_negative_numbers = true)]
    Radial {
        /// dtau | dtau_tilde | dr | q | ix | laplacian | laplacian_via_derivative | boost
        op: String,
        f: String,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long)]
        r: Option<f64>,
    },
    /// Restrict an operator to the lattice given by --grid.
    Lattice {
        /// radial_laplacian | d_tau | radial_derivative
        op: String,
        f: String,
    },
    /// Klein-Gordon energy branches; comma lists scan.
    #[command(allow_negative_numbers = true)]
    Kg {
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<f64>,
    },
    /// Hydrogen-type ground state.
    #[command(allow_negative_numbers = true)]
    Hydrogen {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        q: f64,
        /// Scan over these hbar values instead of --hbar.
        #[arg(long, value_delimiter = ',')]
        hbars: Vec<f64>,
    },
    /// Run the randomized property suite (seed from NCWEYL_SEED).
    Selftest {
        #[arg(long, default_value_t = 50)]
        rounds: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let (text, failed) = match execute(&cli) {
        Ok(v) => v,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            return 2;
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            return 1;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    i32::from(failed)
}

fn format_of(cli: &Cli) -> Format {
    if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    }
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Domain(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Domain(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_text(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn complex_json(z: Complex64) -> Value {
    if z.im == 0.0 {
        json!(z.re)
    } else {
        json!([z.re, z.im])
    }
}

fn element_output(fmt: Format, input: &str, e: &WeylElement) -> Result<String, Failure> {
    Ok(match fmt {
        Format::Text => format!("{e}\n"),
        Format::Json => json_text(&json!({"input": input, "result": e.to_string()})),
        Format::Csv => {
            let rows: Vec<Vec<String>> = e
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| vec![m.to_string(), c.to_string()])
                .collect();
            csv_text(&["monomial", "coefficient"], &rows)?
        }
    })
}

fn specialize(e: WeylElement, hbar: Option<f64>) -> Result<WeylElement, Failure> {
    match hbar {
        None => Ok(e),
        Some(h) => {
            let q = GaussRational::from_f64(h)
                .ok_or_else(|| Failure::Usage(format!("hbar = {h} is not finite")))?;
            Ok(e.specialize(&q)?)
        }
    }
}

type Exact = fn(&CentralPoly) -> crate::Result<CentralPoly>;
type Numeric = fn(&CentralFunction, f64) -> crate::Result<CentralFunction>;

fn radial_op(name: &str) -> Option<(Option<Exact>, Numeric)> {
    Some(match name {
        "dtau" => (Some(poly::act_dtau as Exact), cf::act_dtau as Numeric),
        "dtau_tilde" => (Some(poly::act_dtau_tilde), cf::act_dtau_tilde),
        "dr" | "radial_derivative" => (Some(poly::radial_derivative), cf::radial_derivative),
        "q" => (Some(poly::radial_q), cf::radial_q),
        "ix" => (None, cf::act_ix_factor),
        "laplacian" => (Some(poly::radial_laplacian), cf::radial_laplacian),
        "laplacian_via_derivative" => (
            Some(poly::radial_laplacian_via_derivative),
            cf::radial_laplacian_via_derivative,
        ),
        "boost" => (Some(poly::radial_boost), cf::radial_boost),
        _ => return None,
    })
}

fn execute(cli: &Cli) -> Result<(String, bool), Failure> {
    let fmt = format_of(cli);
    let text = match &cli.command {
        Command::Normalize { expr } => {
            let e = specialize(parse_element(expr)?, cli.hbar)?;
            element_output(fmt, expr, &e)?
        }
        Command::Act { derivative, element } => {
            let d = parse_element(derivative)?;
            let u = parse_element(element)?;
            let e = specialize(act(&d, &u)?, cli.hbar)?;
            element_output(fmt, &format!("{derivative} |> {element}"), &e)?
        }
        Command::Radial { op, f, tau, r } => radial(fmt, cli.hbar, op, f, *tau, *r)?,
        Command::Lattice { op, f } => lattice(fmt, cli, op, f)?,
        Command::Kg { p, m } => kg(fmt, cli.hbar.unwrap_or(0.0), p, m)?,
        Command::Hydrogen { a, b, q, hbars } => {
            let hs = if hbars.is_empty() {
                vec![cli.hbar.unwrap_or(0.0)]
            } else {
                hbars.clone()
            };
            hydrogen(fmt, *a, *b, *q, &hs)?
        }
        Command::Selftest { rounds } => {
            let seed = selftest::seed_from_env();
            let checks = selftest::run(seed, *rounds);
            let failed = checks.iter().any(|c| !c.passed);
            let text = match fmt {
                Format::Json => json_text(&json!({
                    "seed": seed,
                    "checks": checks.iter().map(|c| json!({
                        "name": c.name, "passed": c.passed, "detail": c.detail
                    })).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = checks
                        .iter()
                        .map(|c| vec![c.name.to_string(), c.passed.to_string(), c.detail.clone()])
                        .collect();
                    csv_text(&["name", "passed", "detail"], &rows)?
                }
                Format::Text => {
                    let mut s = String::new();
                    for c in &checks {
                        if c.passed {
                            s.push_str(&format!("PASS {}\n", c.name));
                        } else {
                            s.push_str(&format!("FAIL {}: {}\n", c.name, c.detail));
                        }
                    }
                    let n = checks.iter().filter(|c| c.passed).count();
                    s.push_str(&format!("seed={seed} passed={n}/{}\n", checks.len()));
                    s
                }
            };
            return Ok((text, failed));
        }
    };
    Ok((text, false))
}

fn radial(
    fmt: Format,
    hbar: Option<f64>,
    op: &str,
    f: &str,
    tau: Option<f64>,
    r: Option<f64>,
) -> Result<String, Failure> {
    let (exact, numeric) =
        radial_op(op).ok_or_else(|| Failure::Usage(format!("unknown radial operator '{op}'")))?;
    let fp = parse_central(f)?;
    match (tau, r) {
        (None, None) => {
            let exact = exact.ok_or_else(|| {
                Failure::Usage(format!("'{op}' is numeric only; pass --tau, --r and --hbar"))
            })?;
            let g = exact(&fp)?;
            Ok(match fmt {
                Format::Text => format!("{g}\n"),
                Format::Json => json_text(&json!({"op": op, "f": f, "result": g.to_string()})),
                Format::Csv => csv_text(&["op", "f", "result"], &[vec![op.into(), f.into(), g.to_string()]])?,
            })
        }
        (Some(t), Some(rv)) => {
            let h = hbar.ok_or_else(|| Failure::Usage("numeric evaluation needs --hbar".into()))?;
            let g = numeric(&CentralFunction::from_poly(fp, h), h)?;
            let v = g.eval_real(t, rv)?;
            Ok(match fmt {
                Format::Text => format!("{}\n", g17_complex(v)),
                Format::Json => json_text(&json!({
                    "op": op, "f": f, "tau": t, "r": rv, "hbar": h, "value": complex_json(v)
                })),
                Format::Csv => {
                    let mut row = vec![g17(t), g17(rv), g17(v.re)];
                    let mut header = vec!["tau", "r", "value"];
                    if v.im != 0.0 {
                        header.push("value_im");
                        row.push(g17(v.im));
                    }
                    csv_text(&header, &[row])?
                }
            })
        }
        _ => Err(Failure::Usage("--tau and --r go together".into())),
    }
}

fn lattice(fmt: Format, cli: &Cli, op: &str, f: &str) -> Result<String, Failure> {
    let path = cli
        .grid
        .as_ref()
        .ok_or_else(|| Failure::Usage("lattice needs --grid <file.json>".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut cfg: LatticeConfig = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if let Some(h) = cli.hbar {
        cfg.hbar = h;
    }
    let grid = LatticeGrid::from_config(&cfg)?;
    let lop = LatticeOp::parse(op).ok_or_else(|| Failure::Usage(format!("unknown lattice operator '{op}'")))?;
    let fp = parse_central(f)?;
    let g = GridFunction::<Complex64>::sample(&grid, |t, r| {
        fp.eval(Complex64::new(t, 0.0), Complex64::new(r, 0.0), grid.hbar)
    })?;
    let out = g.restrict(lop)?;
    Ok(match fmt {
        Format::Csv => {
            let mut buf = Vec::new();
            out.write_csv(&mut buf)?;
            String::from_utf8(buf).expect("csv output is utf-8")
        }
        Format::Json => {
            let nodes: Vec<Value> = out
                .nodes()
                .map(|(j, l, v)| json!({"tau": grid.tau(l), "r": grid.r(j), "value": complex_json(*v)}))
                .collect();
            json_text(&json!({"op": lop.to_string(), "f": f, "hbar": grid.hbar, "max_abs": out.max_abs(), "nodes": nodes}))
        }
        Format::Text => {
            let mut s = format!("op={lop} nodes={} max_abs={}\n", out.len(), g17(out.max_abs()));
            for (j, l, v) in out.nodes() {
                s.push_str(&format!("tau={} r={} value={}\n", g17(grid.tau(l)), g17(grid.r(j)), g17_complex(*v)));
            }
            s
        }
    })
}

fn kg(fmt: Format, hbar: f64, ps: &[f64], ms: &[f64]) -> Result<String, Failure> {
    let mut recs = Vec::new();
    for &p in ps {
        for &m in ms {
            let (ep, em) = kg_energy_branches(p, m, hbar);
            let res = kg_dispersion_residual(ep, p, m, hbar)
                .norm()
                .max(kg_dispersion_residual(em, p, m, hbar).norm());
            recs.push((p, m, ep, em, res));
        }
    }
    Ok(match fmt {
        Format::Text => recs
            .iter()
            .map(|(p, m, ep, em, res)| {
                let head = if recs.len() > 1 { format!("p={} m={} ", g17(*p), g17(*m)) } else { String::new() };
                format!("{head}E_plus={}\n{head}E_minus={}\n{head}residual={}\n", g17_complex(*ep), g17_complex(*em), g17(*res))
            })
            .collect(),
        Format::Json => {
            let v: Vec<Value> = recs
                .iter()
                .map(|(p, m, ep, em, res)| json!({
                    "model": "kg", "p": p, "m": m, "hbar": hbar,
                    "E_plus": complex_json(*ep), "E_minus": complex_json(*em), "residual": res
                }))
                .collect();
            json_text(&if v.len() == 1 { v[0].clone() } else { Value::Array(v) })
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = recs
                .iter()
                .map(|(p, m, ep, em, res)| vec![g17(*p), g17(*m), g17(hbar), g17_complex(*ep), g17_complex(*em), g17(*res)])
                .collect();
            csv_text(&["p", "m", "hbar", "E_plus", "E_minus", "residual"], &rows)?
        }
    })
}

fn hydrogen(fmt: Format, a: f64, b: f64, q: f64, hbars: &[f64]) -> Result<String, Failure> {
    let mut states = Vec::new();
    for &h in hbars {
        if h < 0.0 {
            return Err(Failure::Domain(format!("hbar must be non-negative, got {h}")));
        }
        states.push(solve_ground_state(a, b, q, h)?);
    }
    Ok(match fmt {
        Format::Text => states
            .iter()
            .map(|g| {
                let head = if states.len() > 1 { format!("hbar={} ", g17(g.hbar)) } else { String::new() };
                format!(
                    "{head}sigma={}\n{head}E={}\n{head}y={}\n{head}residuals={},{}\n",
                    g17(g.sigma),
                    g17(g.e),
                    g17(g.y),
                    g17(g.residuals[0]),
                    g17(g.residuals[1])
                )
            })
            .collect(),
        Format::Json => {
            let v: Vec<Value> = states
                .iter()
                .map(|g| json!({
                    "model": "hydrogen", "a": a, "b": b, "q": q, "hbar": g.hbar,
                    "sigma": g.sigma, "E": g.e, "residuals": g.residuals
                }))
                .collect();
            json_text(&if v.len() == 1 { v[0].clone() } else { Value::Array(v) })
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = states
                .iter()
                .map(|g| {
                    [a, b, q, g.hbar, g.sigma, g.e, g.residuals[0], g.residuals[1]]
                        .iter()
                        .map(|v| g17(*v))
                        .collect()
                })
                .collect();
            csv_text(&["a", "b", "q", "hbar", "sigma", "E", "residual_1", "residual_2"], &rows)?
        }
    })
}
