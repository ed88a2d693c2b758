//! `tnp`: command-line front end for the tropical polynomial toolkit.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative one, 2 for
//! malformed input. Yes/no results are reported through the exit code.

mod doc;
mod svg;

use clap::{Parser, Subcommand};
use doc::{inline_poly, inline_rational, parse_document, print_document, Document, Payload};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tnp_core::curve::{
    build_curve, enumerate_resolutions, pl_to_np, resolve_curve, resolve_curve_rational,
};
use tnp_core::divide::divide;
use tnp_core::geom::{extract_skeleton, prevariety, reduce_poly, EdgeGeometry};
use tnp_core::poly::{NpPoly, PolyInY};
use tnp_core::rat::{format_rat, parse_rat, Rat};
use tnp_core::resolve::{
    brute_force_resolutions, minimal_resolution_monic, minimal_resolution_rational,
    verify_rational_resolution, verify_resolution,
};
use tnp_core::sat::{parse_dimacs, reduce_3sat, system_as_polys, Cnf3};

#[derive(Parser)]
#[command(name = "tnp", version, about = "Exact tropical polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a polynomial at a rational point
    Eval {
        file: PathBuf,
        /// Comma-separated rational coordinates, e.g. "1,-2/3"
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Print the reduced polynomial (essential monomials only)
    Reduce { file: PathBuf },
    /// Test divisibility f1 ⊗ y = f0 and print the reduced quotient
    Divide { f0: PathBuf, f1: PathBuf },
    /// Verify a resolution of a polynomial in y
    VerifyResolution {
        f: PathBuf,
        y: PathBuf,
        /// Read Y as a rational function (difference of two polynomials)
        #[arg(long)]
        rational: bool,
    },
    /// Minimal resolution of a monic polynomial in y
    ResolveMonic { f: PathBuf },
    /// Minimal rational-function resolution of a polynomial in y
    ResolveRational { f: PathBuf },
    /// Construct the tropical prevariety of a system
    Prevariety {
        system: PathBuf,
        /// Write an SVG plot (planar systems only)
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Resolve a tropical curve over variables (x, y1, ..)
    ResolveCurve {
        system: PathBuf,
        /// Resolve by rational functions (no convexity requirement)
        #[arg(long)]
        rational: bool,
        /// Enumerate up to N resolutions
        #[arg(long, value_name = "N")]
        enumerate: Option<usize>,
    },
    /// Reduce a 3-CNF (tnp or DIMACS format) to a tropical system
    #[command(name = "reduce-3sat")]
    Reduce3sat { cnf: PathBuf },
    /// All resolutions found by the candidate search
    BruteResolve {
        f: PathBuf,
        #[arg(long)]
        max_support: usize,
    },
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn load(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn expect_polynomial(path: &Path) -> Result<(Vec<String>, String, NpPoly), CliError> {
    match load(path)?.payload {
        Payload::Polynomial { vars, name, poly } => Ok((vars, name, poly)),
        other => Err(CliError(format!(
            "{}: expected a polynomial document, found {}",
            path.display(),
            kind_name(&other)
        ))),
    }
}

fn expect_poly_in_y(path: &Path) -> Result<(Vec<String>, PolyInY), CliError> {
    match load(path)?.payload {
        Payload::PolynomialInY { vars, poly } => Ok((vars, poly)),
        other => Err(CliError(format!(
            "{}: expected a polynomial-in-y document, found {}",
            path.display(),
            kind_name(&other)
        ))),
    }
}

fn expect_system(path: &Path) -> Result<(Vec<String>, Vec<(String, NpPoly)>), CliError> {
    match load(path)?.payload {
        Payload::System { vars, polys } => Ok((vars, polys)),
        other => Err(CliError(format!(
            "{}: expected a system document, found {}",
            path.display(),
            kind_name(&other)
        ))),
    }
}

fn kind_name(p: &Payload) -> &'static str {
    match p {
        Payload::Polynomial { .. } => "polynomial",
        Payload::PolynomialInY { .. } => "polynomial-in-y",
        Payload::System { .. } => "system",
        Payload::RationalFunction { .. } => "rational-function",
        Payload::Cnf { .. } => "cnf",
    }
}

fn parse_point(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',')
        .map(|tok| parse_rat(tok).map_err(|e| CliError(format!("--point: {e}"))))
        .collect()
}

fn fmt_point(p: &[Rat]) -> String {
    let parts: Vec<String> = p.iter().map(format_rat).collect();
    format!("({})", parts.join(", "))
}

fn poly_doc(vars: Vec<String>, name: &str, poly: NpPoly) -> String {
    print_document(&Document {
        format_version: doc::FORMAT_VERSION.to_string(),
        payload: Payload::Polynomial { vars, name: name.to_string(), poly },
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Eval { file, point } => {
            let (vars, _, poly) = expect_polynomial(&file)?;
            let point = parse_point(&point)?;
            if point.len() != vars.len() {
                return Err(CliError(format!(
                    "--point: expected {} coordinates, found {}",
                    vars.len(),
                    point.len()
                )));
            }
            println!("{}", format_rat(&poly.eval(&point)?));
            Ok(0)
        }
        Command::Reduce { file } => {
            let (vars, name, poly) = expect_polynomial(&file)?;
            print!("{}", poly_doc(vars, &name, reduce_poly(&poly)));
            Ok(0)
        }
        Command::Divide { f0, f1 } => {
            let (vars0, _, p0) = expect_polynomial(&f0)?;
            let (vars1, _, p1) = expect_polynomial(&f1)?;
            if vars0 != vars1 {
                return Err(CliError("divide: variable lists differ".to_string()));
            }
            match divide(&p0, &p1)? {
                Some(q) => {
                    print!("{}", poly_doc(vars0, "q", q));
                    Ok(0)
                }
                None => {
                    println!("not divisible");
                    Ok(1)
                }
            }
        }
        Command::VerifyResolution { f, y, rational } => {
            let (fvars, fpoly) = expect_poly_in_y(&f)?;
            let outcome = if rational {
                let func = match load(&y)?.payload {
                    Payload::RationalFunction { vars, func } if vars == fvars => func,
                    Payload::RationalFunction { .. } => {
                        return Err(CliError("verify-resolution: variable lists differ".into()))
                    }
                    other => {
                        return Err(CliError(format!(
                            "{}: expected a rational-function document, found {}",
                            y.display(),
                            kind_name(&other)
                        )))
                    }
                };
                verify_rational_resolution(&fpoly, &func)?
            } else {
                let (yvars, _, ypoly) = expect_polynomial(&y)?;
                if yvars != fvars {
                    return Err(CliError("verify-resolution: variable lists differ".into()));
                }
                verify_resolution(&fpoly, &ypoly)?
            };
            if outcome.ok {
                println!("ok");
                Ok(0)
            } else {
                println!("violation at {}", fmt_point(&outcome.witness.expect("present")));
                Ok(1)
            }
        }
        Command::ResolveMonic { f } => {
            let (vars, fpoly) = expect_poly_in_y(&f)?;
            let y = minimal_resolution_monic(&fpoly)?;
            print!("{}", poly_doc(vars, "y", y));
            Ok(0)
        }
        Command::ResolveRational { f } => {
            let (vars, fpoly) = expect_poly_in_y(&f)?;
            let y = minimal_resolution_rational(&fpoly)?;
            print!(
                "{}",
                print_document(&Document {
                    format_version: doc::FORMAT_VERSION.to_string(),
                    payload: Payload::RationalFunction { vars, func: y },
                })
            );
            Ok(0)
        }
        Command::Prevariety { system, svg } => {
            let (vars, named) = expect_system(&system)?;
            let polys: Vec<NpPoly> = named.iter().map(|(_, p)| p.clone()).collect();
            let t = prevariety(&polys)?;
            let in_t: Vec<_> = t.in_t_cells().collect();
            println!(
                "prevariety: {} polynomials, {} cells, {} in T",
                polys.len(),
                t.cells.len(),
                in_t.len()
            );
            let curve_like = in_t.iter().all(|(_, c)| c.dim <= 1);
            if curve_like {
                let sk = extract_skeleton(&t)?;
                for v in &sk.vertices {
                    println!("T vertex {} [cell {}]", fmt_point(&v.point), v.cell_index);
                }
                for e in &sk.edges {
                    match &e.geometry {
                        EdgeGeometry::Segment { a, b } => println!(
                            "T segment {} - {} [cell {}]",
                            fmt_point(a),
                            fmt_point(b),
                            e.cell_index
                        ),
                        EdgeGeometry::Ray { base, direction } => println!(
                            "T ray base {} dir {} [cell {}]",
                            fmt_point(base),
                            fmt_point(direction),
                            e.cell_index
                        ),
                        EdgeGeometry::Line { base, direction } => println!(
                            "T line base {} dir {} [cell {}]",
                            fmt_point(base),
                            fmt_point(direction),
                            e.cell_index
                        ),
                    }
                }
                if let Some(out) = svg {
                    if vars.len() != 2 {
                        return Err(CliError(format!(
                            "--svg: needs exactly 2 variables, found {}",
                            vars.len()
                        )));
                    }
                    std::fs::write(&out, svg::render_skeleton(&sk))
                        .map_err(|e| CliError(format!("{}: {e}", out.display())))?;
                }
            } else {
                for (i, c) in &in_t {
                    println!(
                        "T cell {}: dim {} witness {}",
                        i,
                        c.dim,
                        fmt_point(&c.cell.witness)
                    );
                }
                if svg.is_some() {
                    return Err(CliError(
                        "--svg: the prevariety has cells of dimension above 1".to_string(),
                    ));
                }
            }
            Ok(0)
        }
        Command::ResolveCurve { system, rational, enumerate } => {
            let (vars, named) = expect_system(&system)?;
            let polys: Vec<NpPoly> = named.iter().map(|(_, p)| p.clone()).collect();
            let t = prevariety(&polys)?;
            let model = build_curve(&t)?;
            let x_var = vec![vars[0].clone()];
            if let Some(limit) = enumerate {
                let all = enumerate_resolutions(&model, limit);
                println!("resolutions: {}", all.len());
                for (k, ys) in all.iter().enumerate() {
                    for (j, y) in ys.iter().enumerate() {
                        let np = pl_to_np(y)?;
                        println!("resolution {k}: {} = {}", vars[j + 1], inline_poly(&np, &x_var));
                    }
                }
                return Ok(if all.is_empty() { 1 } else { 0 });
            }
            if rational {
                match resolve_curve_rational(&model) {
                    Some(ys) => {
                        for (j, y) in ys.iter().enumerate() {
                            println!("{} = {}", vars[j + 1], inline_rational(y, &x_var));
                        }
                        Ok(0)
                    }
                    None => {
                        println!("not resolvable");
                        Ok(1)
                    }
                }
            } else {
                match resolve_curve(&model) {
                    Some(ys) => {
                        for (j, y) in ys.iter().enumerate() {
                            let np = pl_to_np(y)?;
                            println!("{} = {}", vars[j + 1], inline_poly(&np, &x_var));
                        }
                        Ok(0)
                    }
                    None => {
                        println!("not resolvable");
                        Ok(1)
                    }
                }
            }
        }
        Command::Reduce3sat { cnf } => {
            let text = std::fs::read_to_string(&cnf)
                .map_err(|e| CliError(format!("{}: {e}", cnf.display())))?;
            let parsed: Cnf3 = if text.contains("format:") {
                match parse_document(&text)
                    .map_err(|e| CliError(format!("{}: {e}", cnf.display())))?
                    .payload
                {
                    Payload::Cnf { cnf } => cnf,
                    other => {
                        return Err(CliError(format!(
                            "{}: expected a cnf document, found {}",
                            cnf.display(),
                            kind_name(&other)
                        )))
                    }
                }
            } else {
                parse_dimacs(&text)?
            };
            let sys = reduce_3sat(&parsed)?;
            let (vars, polys) = system_as_polys(&sys);
            print!(
                "{}",
                print_document(&Document {
                    format_version: doc::FORMAT_VERSION.to_string(),
                    payload: Payload::System { vars, polys },
                })
            );
            Ok(0)
        }
        Command::BruteResolve { f, max_support } => {
            let (vars, fpoly) = expect_poly_in_y(&f)?;
            let found = brute_force_resolutions(&fpoly, max_support)?;
            println!("resolutions: {}", found.len());
            for y in &found {
                println!("y = {}", inline_poly(y, &vars));
            }
            Ok(if found.is_empty() { 1 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
