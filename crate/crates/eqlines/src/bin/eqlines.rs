//! Command-line front end: bound computation, certificate verification,
//! switching-class enumeration, configuration checking, and strongly
//! regular graph extraction, all in exact rational arithmetic with
//! deterministic text output.

use clap::{Parser, Subcommand};
use eqlines::certificate::{certify_bound, d4_floor, d4_interval, CertifyOutcome};
use eqlines::constraints::{build_reduced, lp_value};
use eqlines::constructions::{
    format_configuration, gen28, lambda_identity_check, load_configuration, rank1_audit,
    srg_extract, Rank1Audit,
};
use eqlines::distributions::Configuration;
use eqlines::exactmath::matrix::PsdVerdict;
use eqlines::exactmath::{int, parse_rat, rat, to_decimal, Rat, RatMatrix};
use eqlines::gram::enumerate_classes;
use num::ToPrimitive;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "eqlines",
    about = "Exact bounds and certificates for equiangular line configurations"
)]
struct Cli {
    /// emit machine-readable key = value lines
    #[arg(long, global = true)]
    machine: bool,
    /// decimal digits for approximate renderings
    #[arg(long, global = true, default_value_t = 2)]
    precision: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension limits and the cardinality bound for a given odd a
    Bound { a: i64 },
    /// Verify the dual certificate at (a, d)
    Certificate { a: i64, d: i64 },
    /// Tabulate dimension limits for a = 3, 5, 7, 9, 11
    Table3,
    /// Enumerate switching classes of sign patterns on n points
    Classes { n: usize },
    /// Validate a Gram file and test its constraint matrices
    Check {
        file: PathBuf,
        /// common inner product magnitude, as p/q
        #[arg(long)]
        alpha: String,
        /// largest polynomial degree to test
        #[arg(long, default_value_t = 6)]
        max_k: usize,
    },
    /// Emit the 28-line configuration in dimension 7
    Gen28 {
        /// write the Gram file here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract and verify the strongly regular graph of an extremal file
    Srg {
        file: PathBuf,
        /// common inner product magnitude, as p/q
        #[arg(long)]
        alpha: String,
    },
}

/// A verification or input failure: exit code 1 with a message.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(text) => text,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    print!("{out}");
    ExitCode::SUCCESS
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.cmd {
        Cmd::Bound { a } => cmd_bound(*a, cli),
        Cmd::Certificate { a, d } => cmd_certificate(*a, *d, cli),
        Cmd::Table3 => cmd_table3(cli),
        Cmd::Classes { n } => cmd_classes(*n, cli),
        Cmd::Check { file, alpha, max_k } => cmd_check(file, alpha, *max_k, cli),
        Cmd::Gen28 { out } => cmd_gen28(out.as_deref(), cli),
        Cmd::Srg { file, alpha } => cmd_srg(file, alpha, cli),
    }
}

/// Width small enough that half-up rendering at `digits` decimals is
/// unambiguous for every value not astronomically close to a tie.
fn isolation_width(digits: usize) -> Rat {
    rat(1, 10i64.pow(digits as u32 + 6))
}

fn d4_decimal(a: i64, digits: usize) -> Result<(Rat, Rat, String), Failure> {
    let (lo, hi) = d4_interval(a, &isolation_width(digits))?;
    let mid = (&lo + &hi) / int(2);
    Ok((lo, hi, to_decimal(&mid, digits)))
}

fn cmd_bound(a: i64, cli: &Cli) -> Result<String, Failure> {
    let d3 = 3 * a * a - 16;
    let floor = d4_floor(a)?;
    let (lo, hi, dec) = d4_decimal(a, cli.precision)?;
    let bound = (a * a - 1) * (a * a - 2) / 2;
    let lo_dec = to_decimal(&lo, cli.precision + 4);
    let hi_dec = to_decimal(&hi, cli.precision + 4);
    if cli.machine {
        return Ok(format!(
            "a = {a}\nd3 = {d3}\nd4_lo = {lo}\nd4_hi = {hi}\nd4 = {dec}\nd4_floor = {floor}\nbound = {bound}\n"
        ));
    }
    Ok(format!(
        "a = {a}\n\
         largest dimension, three-point bound: D3(a) = 3a^2 - 16 = {d3}\n\
         largest dimension, four-point bound:  D4(a) = {dec} (in ({lo_dec}, {hi_dec}])\n\
         floor(D4(a)) = {floor}\n\
         cardinality bound: N <= (a^2 - 1)(a^2 - 2)/2 = {bound}\n"
    ))
}

fn cmd_certificate(a: i64, d: i64, cli: &Cli) -> Result<String, Failure> {
    let outcome = certify_bound(a, d)?;
    match outcome {
        CertifyOutcome::Certified { bound, boundary } => {
            let cert = eqlines::certificate::solve_certificate(a, &int(d))?;
            let mut s = String::new();
            if cli.machine {
                s.push_str(&format!("a = {a}\nd = {d}\nstatus = certified\n"));
                s.push_str(&format!("bound = {bound}\nboundary = {boundary}\n"));
                s.push_str(&format!("f1 = {}\nf2 = {}\n", cert.f1, cert.f2));
                for (name, value) in &cert.minors {
                    let key = name
                        .replace([' ', '*'], "")
                        .replace('^', "")
                        .replace('-', "_minus_");
                    s.push_str(&format!("minor_{key} = {value}\n"));
                }
            } else {
                s.push_str(&format!("Certified: N <= {bound}\n"));
                s.push_str(&format!(
                    "f1 = {} ({})\nf2 = {} ({})\n",
                    cert.f1,
                    to_decimal(&cert.f1, cli.precision),
                    cert.f2,
                    to_decimal(&cert.f2, cli.precision)
                ));
                for (name, value) in &cert.minors {
                    s.push_str(&format!(
                        "{name} = {value} ({})\n",
                        to_decimal(value, cli.precision)
                    ));
                }
                s.push_str(&format!("boundary case: {boundary}\n"));
            }
            Ok(s)
        }
        CertifyOutcome::NotCertified { reason } => {
            Err(Failure(format!("not certified at (a, d) = ({a}, {d}): {reason}")))
        }
    }
}

fn cmd_table3(cli: &Cli) -> Result<String, Failure> {
    let mut s = String::new();
    if !cli.machine {
        s.push_str("  a |   D3 |      D4\n");
    }
    for a in [3i64, 5, 7, 9, 11] {
        let d3 = 3 * a * a - 16;
        let (_, _, dec) = d4_decimal(a, cli.precision)?;
        if cli.machine {
            s.push_str(&format!("a = {a}\nd3 = {d3}\nd4 = {dec}\n"));
        } else {
            s.push_str(&format!("{a:>3} | {d3:>4} | {dec:>7}\n"));
        }
    }
    Ok(s)
}

fn cmd_classes(n: usize, cli: &Cli) -> Result<String, Failure> {
    let classes = enumerate_classes(n)?;
    let mut s = String::new();
    if cli.machine {
        s.push_str(&format!("n = {n}\ncount = {}\n", classes.len()));
        for key in &classes {
            s.push_str(&format!("class = {}\n", key.pattern().to_triangle_string()));
        }
    } else {
        s.push_str(&format!("{} classes\n", classes.len()));
        for key in &classes {
            s.push_str(&format!("  {}\n", key.pattern().to_triangle_string()));
        }
    }
    Ok(s)
}

fn check_constraints(x: &Configuration, max_k: usize, cli: &Cli) -> Result<String, Failure> {
    let alpha = x.alpha().expect("equiangular").clone();
    let mut s = String::new();
    let mut all_psd = true;
    for m in 1..=2usize {
        let g = RatMatrix::from_fn(m, m, |i, j| if i == j { int(1) } else { alpha.clone() });
        for k in 0..=max_k {
            let cm = build_reduced(x, m, k, &g)?;
            let verdict = cm.matrix.psd_check().expect("symmetric");
            let psd = matches!(verdict, PsdVerdict::Psd);
            all_psd &= psd;
            let rank = cm.matrix.rank();
            if cli.machine {
                s.push_str(&format!(
                    "m = {m}\nk = {k}\npsd = {psd}\nrank = {rank}\n"
                ));
            } else {
                s.push_str(&format!(
                    "(m, k) = ({m}, {k}): {} rank {rank}\n",
                    if psd { "PSD," } else { "NOT PSD," }
                ));
                for i in 0..cm.matrix.rows() {
                    let row: Vec<String> = (0..cm.matrix.cols())
                        .map(|j| cm.matrix.get(i, j).to_string())
                        .collect();
                    s.push_str(&format!("    [{}]\n", row.join(", ")));
                }
            }
        }
    }
    let mut lp_ok = true;
    for k in 0..=max_k {
        let v = lp_value(x, k);
        lp_ok &= !v.lt(&int(0));
        if cli.machine {
            s.push_str(&format!("lp_{k} = {v}\n"));
        } else {
            s.push_str(&format!(
                "lp value, degree {k}: {v} ({})\n",
                to_decimal(&v, cli.precision)
            ));
        }
    }
    if !all_psd || !lp_ok {
        return Err(Failure(format!(
            "{s}constraint verification failed"
        )));
    }
    Ok(s)
}

fn cmd_check(file: &std::path::Path, alpha: &str, max_k: usize, cli: &Cli) -> Result<String, Failure> {
    let alpha = parse_rat(alpha)?;
    let x = load_configuration(file, &alpha)?;
    let mut s = if cli.machine {
        format!("n = {}\nd = {}\nalpha = {alpha}\n", x.len(), x.dim())
    } else {
        format!(
            "loaded {} lines in dimension {} at alpha = {alpha}\n",
            x.len(),
            x.dim()
        )
    };
    s.push_str(&check_constraints(&x, max_k, cli)?);
    match rank1_audit(&x)? {
        Rank1Audit::Rank1(w) => {
            let ws: Vec<String> = w.iter().map(|r| r.to_string()).collect();
            if cli.machine {
                s.push_str(&format!("rank1 = true\nrank1_vector = {}\n", ws.join(" ")));
            } else {
                s.push_str(&format!(
                    "order-0 reduced matrix: rank 1, vector ({})\n",
                    ws.join(", ")
                ));
            }
        }
        Rank1Audit::HigherRank(r) => {
            if cli.machine {
                s.push_str(&format!("rank1 = false\nrank = {r}\n"));
            } else {
                s.push_str(&format!("order-0 reduced matrix: rank {r}\n"));
            }
        }
    }
    Ok(s)
}

fn cmd_gen28(out: Option<&std::path::Path>, cli: &Cli) -> Result<String, Failure> {
    let x = gen28();
    let text = format_configuration(&x);
    match out {
        Some(path) => {
            std::fs::write(path, &text)?;
            if cli.machine {
                Ok(format!("file = {}\n", path.display()))
            } else {
                Ok(format!("wrote {}\n", path.display()))
            }
        }
        None => Ok(text),
    }
}

fn cmd_srg(file: &std::path::Path, alpha: &str, cli: &Cli) -> Result<String, Failure> {
    let alpha = parse_rat(alpha)?;
    let x = load_configuration(file, &alpha)?;
    let report = srg_extract(&x, 0)?;
    let a = (int(1) / &alpha).to_integer().to_i64().unwrap();
    if !lambda_identity_check(&report, a) {
        return Err(Failure("parameter identities failed".into()));
    }
    let render_spectrum = |s: &[(Rat, usize)]| -> String {
        s.iter()
            .map(|(ev, m)| format!("{ev}^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    if cli.machine {
        Ok(format!(
            "v = {}\nk = {}\nlambda = {}\nmu = {}\nadjacency_spectrum = {}\ngram_spectrum = {}\n",
            report.v,
            report.k,
            report.lambda,
            report.mu,
            render_spectrum(&report.adjacency_spectrum),
            render_spectrum(&report.gram_spectrum)
        ))
    } else {
        Ok(format!(
            "SRG({}, {}, {}, {})\n\
             adjacency spectrum: {}\n\
             derived-code Gram spectrum: {}\n\
             parameter identities (lambda = (3k - v - 1)/2, mu = k/2): verified\n",
            report.v,
            report.k,
            report.lambda,
            report.mu,
            render_spectrum(&report.adjacency_spectrum),
            render_spectrum(&report.gram_spectrum)
        ))
    }
}
