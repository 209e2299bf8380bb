//! Command-line surface for the library: every computation, the validation
//! suite, and table/series emitters in machine- and human-readable formats.
//!
//! Exit status: 0 on success, 1 on usage errors, 2 on internal cross-check
//! failures (validation discrepancies, interpolation verification failures,
//! negative chi1).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use anchi::euler::{self, json_int};
use anchi::exact::{Int, QuasiPolynomial, Rational, RationalFunction};
use anchi::hyperbolicity::{self, labs_check, miyaoka_max, rdn_table, SurfaceProfile};
use anchi::polytopes::an_pieces;

#[derive(Parser)]
#[command(
    name = "anchi",
    version,
    about = "Exact local Euler characteristics of symmetric cotangent powers at A_n surface \
             singularities, and big-cotangent-bundle thresholds for nodal surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
    Tex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChiLocMethod {
    /// Closed-form quasi-polynomial
    Closed,
    /// Series coefficient of the rational generating function
    Genfun,
    /// Telescoping sum of toric recursion increments
    Delta,
    /// Weighted planar lattice count
    Weighted,
}

#[derive(Clone, Copy, ValueEnum)]
enum Chi0Method {
    /// Direct enumeration of pointwise defect counts
    Direct,
    /// Lattice-point counts of the dilated pieces
    Polytopes,
    /// Evaluation of the assembled quasi-polynomial
    Qpoly,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    ChiLoc,
    Chi0,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenfunKind {
    /// Generating function of chi_loc(n, -)
    ChiLoc,
    /// Generating function of the n-th wedge piece counts
    Wedge,
    /// Generating function of the central piece counts
    Central,
}

#[derive(Subcommand)]
enum Command {
    /// Local Euler characteristic chi_loc(n, m)
    #[command(name = "chi-loc")]
    ChiLoc {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "closed")]
        method: ChiLocMethod,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Extension-defect count chi0(n, m)
    Chi0 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "direct")]
        method: Chi0Method,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// First-cohomology contribution chi1(n, m) = chi_loc - chi0
    Chi1 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Quasi-polynomial in m for chi-loc or chi0
    Qpoly {
        #[arg(long)]
        n: u32,
        #[arg(long = "of", value_enum, default_value = "chi-loc")]
        of: SeriesKind,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Rational generating functions
    Genfun {
        #[arg(long)]
        n: u32,
        #[arg(long = "of", value_enum, default_value = "chi-loc")]
        of: GenfunKind,
        /// Emit sum of Q(m + shift) t^m for piece generating functions
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=1))]
        shift: Option<u64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Ehrhart quasi-polynomial of one piece (c, or p1..pn)
    Ehrhart {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        piece: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Emit the polytope pieces (vertices and removed faces)
    Describe {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Threshold table r(d, n) for d = 5..dmax, n = 1..nmax
    Rdn {
        #[arg(long)]
        dmax: u32,
        #[arg(long)]
        nmax: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Assess one surface profile (degree d, r singularities of type A_n)
    #[command(name = "check-surface")]
    CheckSurface {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u64,
        /// Also evaluate the section lower bound at this symmetric power
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Degree-2k family with 4k^2 singularities of type A_(k-1)
    Labs {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Cross-validate all computation methods on a grid
    Validate {
        #[arg(long, default_value_t = 4)]
        nmax: u32,
        #[arg(long, default_value_t = 20)]
        mmax: u32,
    },
}

enum CliError {
    Usage(String),
    Check(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(1),
            CliError::Check(_) => ExitCode::from(2),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Check(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check(msg: impl std::fmt::Display) -> CliError {
    CliError::Check(msg.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn require_positive_n(n: u32) -> Result<(), CliError> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    Ok(())
}

fn emit_value(label: &str, n: u32, m: u32, value: &Int, format: Format) -> Result<(), CliError> {
    match format {
        Format::Plain => println!("{value}"),
        Format::Json => {
            let payload = json!({"n": n, "m": m, label: json_int(value)});
            println!("{payload}");
        }
        _ => return Err(usage("this command supports --format plain or json")),
    }
    Ok(())
}

fn qpoly_plain(q: &QuasiPolynomial) -> String {
    let mut out = format!("period {}, degree {}\n", q.period(), q.degree());
    for (r, row) in q.rows().iter().enumerate() {
        let terms: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c}) m"),
                _ => format!("({c}) m^{k}"),
            })
            .collect();
        out.push_str(&format!(
            "m = {r} mod {}: {}\n",
            q.period(),
            terms.join(" + ")
        ));
    }
    out
}

fn emit_qpoly(q: &QuasiPolynomial, format: Format) -> Result<(), CliError> {
    match format {
        Format::Plain => print!("{}", qpoly_plain(q)),
        Format::Json => println!("{}", q.to_json()),
        _ => return Err(usage("this command supports --format plain or json")),
    }
    Ok(())
}

fn emit_genfun(f: &RationalFunction, format: Format) -> Result<(), CliError> {
    match format {
        Format::Plain => println!("{f}"),
        Format::Json => {
            let coeffs = |p: &anchi::Polynomial| -> Vec<String> {
                p.coeffs().iter().map(Rational::to_string).collect()
            };
            println!("{}", json!({"num": coeffs(f.num()), "den": coeffs(f.den())}));
        }
        _ => return Err(usage("this command supports --format plain or json")),
    }
    Ok(())
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::ChiLoc {
            n,
            m,
            method,
            format,
        } => {
            require_positive_n(n)?;
            let value = match method {
                ChiLocMethod::Closed => euler::chi_loc_closed(n, m as u64),
                ChiLocMethod::Genfun => {
                    let series = euler::chi_loc_genfun(n)
                        .series_coefficients(m as usize + 1)
                        .map_err(check)?;
                    series[m as usize].to_integer()
                }
                ChiLocMethod::Delta => Int::from(euler::chi_loc_delta(n, m).map_err(check)?),
                ChiLocMethod::Weighted => Int::from(euler::chi_loc_weighted(n, m)),
            };
            emit_value("chi_loc", n, m, &value, format)
        }
        Command::Chi0 {
            n,
            m,
            method,
            format,
        } => {
            require_positive_n(n)?;
            let value = match method {
                Chi0Method::Direct => Int::from(euler::chi0_direct(n, m)),
                Chi0Method::Polytopes => Int::from(euler::chi0_polytopes(n, m)),
                Chi0Method::Qpoly => euler::chi0_qpoly(n)
                    .map_err(check)?
                    .eval(m as u64)
                    .to_integer(),
            };
            emit_value("chi0", n, m, &value, format)
        }
        Command::Chi1 { n, m, format } => {
            require_positive_n(n)?;
            let report = euler::chi_report(n, m).map_err(check)?;
            if !report.methods_agreed {
                return Err(CliError::Check(format!(
                    "method disagreement in chi report at n = {n}, m = {m}"
                )));
            }
            match format {
                Format::Plain => println!("{}", report.chi1),
                Format::Json => println!("{}", report.to_json()),
                _ => return Err(usage("this command supports --format plain or json")),
            }
            Ok(())
        }
        Command::Qpoly { n, of, format } => {
            require_positive_n(n)?;
            let q = match of {
                SeriesKind::ChiLoc => euler::chi_loc_qpoly(n),
                SeriesKind::Chi0 => euler::chi0_qpoly(n).map_err(check)?,
            };
            emit_qpoly(&q, format)
        }
        Command::Genfun {
            n,
            of,
            shift,
            format,
        } => {
            require_positive_n(n)?;
            let f = match of {
                GenfunKind::ChiLoc => {
                    if shift.is_some() {
                        return Err(usage(
                            "--shift applies to piece generating functions, not chi-loc",
                        ));
                    }
                    euler::chi_loc_genfun(n)
                }
                GenfunKind::Wedge | GenfunKind::Central => {
                    let pieces = an_pieces(n);
                    let piece = match of {
                        GenfunKind::Wedge => &pieces.p_pieces[n as usize - 1],
                        _ => &pieces.c_piece,
                    };
                    let q = piece.ehrhart().map_err(check)?;
                    q.to_genfun(shift.unwrap_or(1)).map_err(check)?
                }
            };
            emit_genfun(&f, format)
        }
        Command::Ehrhart { n, piece, format } => {
            require_positive_n(n)?;
            let pieces = an_pieces(n);
            let body = if piece == "c" {
                &pieces.c_piece
            } else if let Some(ix) = piece.strip_prefix('p') {
                let ix: usize = ix
                    .parse()
                    .map_err(|_| usage(format!("unknown piece '{piece}'; use c or p1..p{n}")))?;
                if ix == 0 || ix > n as usize {
                    return Err(usage(format!(
                        "piece index out of range; use c or p1..p{n}"
                    )));
                }
                &pieces.p_pieces[ix - 1]
            } else {
                return Err(usage(format!("unknown piece '{piece}'; use c or p1..p{n}")));
            };
            let q = body.ehrhart().map_err(check)?;
            emit_qpoly(&q, format)
        }
        Command::Describe { n, format } => {
            require_positive_n(n)?;
            let pieces = an_pieces(n);
            match format {
                Format::Json => {
                    let payload = json!({
                        "n": n,
                        "c": pieces.c_piece.to_json(),
                        "p": pieces
                            .p_pieces
                            .iter()
                            .map(|p| p.to_json())
                            .collect::<Vec<_>>(),
                    });
                    println!("{payload}");
                }
                Format::Plain => {
                    let show = |name: String, p: &anchi::polytopes::HalfOpenPolytope| {
                        println!("{name}:");
                        for v in p.vertices() {
                            println!("  vertex {v}");
                        }
                        for f in p.removed_faces() {
                            println!("  removed face {f:?}");
                        }
                    };
                    show("c".to_string(), &pieces.c_piece);
                    for (i, p) in pieces.p_pieces.iter().enumerate() {
                        show(format!("p{}", i + 1), p);
                    }
                }
                _ => return Err(usage("this command supports --format plain or json")),
            }
            Ok(())
        }
        Command::Rdn { dmax, nmax, format } => {
            if dmax < 5 {
                return Err(usage("--dmax must be at least 5"));
            }
            if nmax < 1 {
                return Err(usage("--nmax must be at least 1"));
            }
            let table = rdn_table(dmax, nmax);
            if nmax >= 6 {
                eprintln!("note: the (d, n) = (5, 6) entry has no cross-checked reference value");
            }
            match format {
                Format::Plain => print!("{}", table.to_markdown()),
                Format::Csv => print!("{}", table.to_csv()),
                Format::Tex => print!("{}", table.to_tex()),
                Format::Json => println!("{}", table.to_json()),
            }
            Ok(())
        }
        Command::CheckSurface { d, n, r, m, format } => {
            require_positive_n(n)?;
            let profile = SurfaceProfile::new(d, n, r).map_err(|e| usage(e.to_string()))?;
            let report = hyperbolicity::surface_report(&profile, m).map_err(|e| match e {
                hyperbolicity::HyperbolicityError::SymmetricPowerTooSmall { .. } => {
                    usage(e.to_string())
                }
                other => check(other),
            })?;
            match format {
                Format::Json => println!("{report}"),
                Format::Plain => {
                    println!(
                        "degree {d} surface with {r} singularities of type A_{n}: threshold r_min = {}, Miyaoka cap = {}",
                        report["r_min"], report["miyaoka_max"]
                    );
                    if report["exceeds_miyaoka"].as_bool() == Some(true) {
                        println!("count exceeds the Miyaoka bound; no such surface exists");
                    } else if report["big_cotangent"].as_bool() == Some(true) {
                        println!("big cotangent bundle: yes (r >= r_min)");
                    } else {
                        println!("big cotangent bundle: not settled by this criterion");
                    }
                    if let Some(h0) = report.get("h0_lower_bound") {
                        println!("h0(S^{} Omega) >= {h0}", report["m"]);
                    }
                }
                _ => return Err(usage("this command supports --format plain or json")),
            }
            Ok(())
        }
        Command::Labs { k, format } => {
            if k < 2 {
                return Err(usage("--k must be at least 2"));
            }
            let report = labs_check(k).map_err(|e| usage(e.to_string()))?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Plain => {
                    println!(
                        "degree {} surface, {} singularities of type A_{}; required: {}; verdict: {}",
                        report.degree,
                        report.available,
                        report.singularity_index,
                        report.required,
                        if report.verdict {
                            "big cotangent bundle"
                        } else {
                            "not settled by this criterion"
                        }
                    );
                    eprintln!(
                        "note: Miyaoka cap for (d, n) = ({}, {}) is {}",
                        report.degree,
                        report.singularity_index,
                        miyaoka_max(report.degree, report.singularity_index)
                    );
                }
                _ => return Err(usage("this command supports --format plain or json")),
            }
            Ok(())
        }
        Command::Validate { nmax, mmax } => {
            if nmax < 1 {
                return Err(usage("--nmax must be at least 1"));
            }
            let report = euler::validate(nmax, mmax).map_err(check)?;
            println!(
                "validated {} cells (n 1..{}, m 0..{}), {} tabulated generating functions matched",
                report.cells, report.n_max, report.m_max, report.reference_rows
            );
            Ok(())
        }
    }
}
