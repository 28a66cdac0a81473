//! The `mfv` command line.
//!
//! Exit status is 0 when every executed check passes, 1 when a check fails
//! and 2 on usage, I/O or parse errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cases::{verify_case, CaseId, Certificate, DeformationCase, DeformationOptions, TorsionType};
use crate::error::{Error, Result};
use crate::groebner::{hilbert_series, Ideal, RingMap};
use crate::polyring::{
    format_ideal_file, parse_polynomial, parse_ring_header, read_ideal_file, MonomialOrder, Polynomial,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mfv", version, about = "Exact verification of semi-invariant rings and deformation ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grevlex => MonomialOrder::GrevLex,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify one fiber case: generic, p-torsion, l-torsion or both-torsion.
    VerifyFiber {
        #[arg(long = "case")]
        case: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify one deformation case: half, mixed or full.
    VerifyDeformation {
        #[arg(long = "case")]
        case: String,
        /// Skip the large eliminations; they are reported as skipped.
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify every case, in case-id order.
    VerifyAll {
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the reduced Gröbner basis of an ideal file.
    Gb {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        order: Option<OrderArg>,
    },
    /// Print the Hilbert series of the quotient by a homogeneous ideal.
    Hilbert {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        order: Option<OrderArg>,
    },
    /// Pull an ideal back along a ring map.
    Preimage {
        /// Map file: a `ring:` header for the source, then `name = image` lines.
        #[arg(long)]
        map: PathBuf,
        /// Ideal in the target ring.
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Decide whether a polynomial lies in an ideal.
    Membership {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        poly: String,
        /// Test membership in the radical instead.
        #[arg(long)]
        radical: bool,
    },
}

/// Parses a map file against the target ring.
///
/// ```text
/// ring: t1, t2
/// t1 = z1*z2
/// t2 = z3
/// ```
/// Every source variable needs exactly one image.
pub fn parse_map_file(text: &str, target: &crate::polyring::Ring) -> Result<RingMap> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let syntax = |pos: usize, msg: String| Error::Syntax { pos, msg: format!("line {pos}: {msg}") };
    let (first, header) = lines.next().ok_or_else(|| syntax(0, "missing `ring:` header".into()))?;
    let source = parse_ring_header(header).map_err(|e| syntax(first, e.to_string()))?;
    let mut images: Vec<Option<Polynomial>> = vec![None; source.nvars()];
    for (pos, line) in lines {
        let (name, expr) = line.split_once('=').ok_or_else(|| syntax(pos, "expected `name = image`".into()))?;
        let idx = source.require_index(name.trim()).map_err(|e| syntax(pos, e.to_string()))?;
        if images[idx].is_some() {
            return Err(syntax(pos, format!("`{}` assigned twice", name.trim())));
        }
        let image = parse_polynomial(expr, target).map_err(|e| match e {
            Error::Syntax { pos: col, msg } => syntax(pos, format!("column {col}: {msg}")),
            other => syntax(pos, other.to_string()),
        })?;
        images[idx] = Some(image);
    }
    let images = images
        .into_iter()
        .zip(source.variables())
        .map(|(img, v)| img.ok_or_else(|| Error::InvalidMap(format!("no image for `{v}`"))))
        .collect::<Result<Vec<_>>>()?;
    RingMap::new(&source, target, images)
}

fn load_ideal(path: &Path, order: Option<OrderArg>) -> Result<Ideal> {
    let file = read_ideal_file(path)?;
    let ideal = Ideal::new(&file.ring, file.generators)?;
    match order {
        Some(o) => ideal.with_order(o.into()),
        None => Ok(ideal),
    }
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<()> {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| Error::InvalidArgument(format!("serialising JSON: {e}")))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

/// Number of worker threads, from `MFV_THREADS` or the available parallelism.
pub fn worker_count() -> Result<usize> {
    match std::env::var("MFV_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Error::InvalidArgument(format!("MFV_THREADS must be a positive integer, got `{v}`"))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

/// Runs the cases on a bounded pool and returns certificates in the input order.
pub fn run_cases(cases: &[CaseId], opts: DeformationOptions, threads: usize) -> Result<Vec<Certificate>> {
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<Certificate>>>> = Mutex::new((0..cases.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..threads.clamp(1, cases.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(&case) = cases.get(i) else { break };
                let outcome = verify_case(case, opts);
                results.lock().unwrap_or_else(|p| p.into_inner())[i] = Some(outcome);
            });
        }
    });
    results.into_inner().unwrap_or_else(|p| p.into_inner()).into_iter().map(|r| r.expect("every case ran")).collect()
}

fn certificates_exit(certs: &[Certificate]) -> i32 {
    if certs.iter().all(Certificate::passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Io { path: "<stdout>".into(), source: e };
    match command {
        Command::VerifyFiber { case, json } => {
            let torsion: TorsionType = case.parse()?;
            let cert = verify_case(CaseId::Fiber(torsion), DeformationOptions::default())?;
            write!(out, "{cert}").map_err(io)?;
            if let Some(p) = json {
                write_json(&p, &cert)?;
            }
            Ok(certificates_exit(std::slice::from_ref(&cert)))
        }
        Command::VerifyDeformation { case, fast, json } => {
            let def: DeformationCase = case.parse()?;
            let cert = verify_case(CaseId::Deformation(def), DeformationOptions { fast })?;
            write!(out, "{cert}").map_err(io)?;
            if let Some(p) = json {
                write_json(&p, &cert)?;
            }
            Ok(certificates_exit(std::slice::from_ref(&cert)))
        }
        Command::VerifyAll { fast, json } => {
            let cases = CaseId::all();
            let certs = run_cases(&cases, DeformationOptions { fast }, worker_count()?)?;
            for c in &certs {
                write!(out, "{c}").map_err(io)?;
            }
            let failed = certs.iter().filter(|c| !c.passed()).count();
            writeln!(out, "{} of {} cases passed", certs.len() - failed, certs.len()).map_err(io)?;
            if let Some(p) = json {
                write_json(&p, &certs)?;
            }
            Ok(certificates_exit(&certs))
        }
        Command::Gb { ideal, order } => {
            let ideal = load_ideal(&ideal, order)?;
            write!(out, "{}", format_ideal_file(ideal.ring(), ideal.groebner_basis())).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Hilbert { ideal, order } => {
            let ideal = load_ideal(&ideal, order)?;
            let h = hilbert_series(&ideal)?;
            writeln!(out, "{h}").map_err(io)?;
            writeln!(out, "dimension {} degree {}", h.dimension(), h.degree()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Preimage { map, ideal } => {
            let ideal = load_ideal(&ideal, None)?;
            let text = std::fs::read_to_string(&map)
                .map_err(|source| Error::Io { path: map.display().to_string(), source })?;
            let rho = parse_map_file(&text, ideal.ring())?;
            let pre = rho.preimage(&ideal)?;
            write!(out, "{}", format_ideal_file(pre.ring(), pre.groebner_basis())).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Membership { ideal, poly, radical } => {
            let ideal = load_ideal(&ideal, None)?;
            let f = parse_polynomial(&poly, ideal.ring())?;
            let member = if radical { ideal.radical_contains(&f)? } else { ideal.contains(&f)? };
            writeln!(out, "{member}").map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line with explicit output streams and returns the exit status.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::UnknownCase(_)) {
                let fibers: Vec<&str> = TorsionType::ALL.iter().map(|t| t.id()).collect();
                let defs: Vec<&str> = DeformationCase::ALL.iter().map(|d| d.id()).collect();
                let _ = writeln!(err, "fiber cases: {}; deformation cases: {}", fibers.join(", "), defs.join(", "));
            }
            EXIT_USAGE
        }
    }
}

/// Runs the command line against the process's standard streams.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
