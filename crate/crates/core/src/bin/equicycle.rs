use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use equicycle::assembly::{construct, Budget, Options};
use equicycle::certificate::{self, Format};
use equicycle::design::CycleSystem;
use equicycle::difference::audit_coverage;
use equicycle::verify::verify_certificate;
use equicycle::Error;

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

/// Equitably 2-coloured odd cycle decompositions of complete graphs.
#[derive(Parser)]
#[command(name = "equicycle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certificate for K_v with cycle length l.
    Construct {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        v: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "text", value_parser = ["text", "structured"])]
        format: String,
        /// Wall-clock allowance for searches, in milliseconds.
        #[arg(long, env = "EQUICYCLE_BUDGET_MS")]
        budget_ms: Option<u64>,
    },
    /// Check a certificate and print one record per check.
    Verify { path: PathBuf },
    /// Summarise a certificate.
    Inspect {
        path: PathBuf,
        /// Print which base cycle supplies each difference class.
        #[arg(long)]
        differences: bool,
    },
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::BudgetExhausted(_) => BUDGET,
        Error::InvariantViolation(_) => FAIL,
        _ => USAGE,
    }
}

fn load(path: &Path) -> Result<CycleSystem, u8> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        USAGE
    })?;
    certificate::read(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        USAGE
    })
}

fn summary(sys: &CycleSystem) -> String {
    let (red, blue) = sys.colouring.class_sizes();
    format!(
        "route={} ell={} v={} cycles={} red={red} blue={blue}",
        sys.provenance.route,
        sys.provenance.ell,
        sys.provenance.v,
        sys.cycle_count()
    )
}

fn run_construct(
    ell: u32,
    v: u32,
    seed: u64,
    out: Option<PathBuf>,
    format: Format,
    budget_ms: Option<u64>,
) -> u8 {
    let options = Options {
        seed,
        budget: budget_ms.map_or_else(Budget::unlimited, Budget::millis),
    };
    let sys = match construct(ell, v, &options) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    let verdict = verify_certificate(&sys);
    let body = certificate::write(&sys, format);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return USAGE;
            }
            println!("{}", summary(&sys));
        }
        None => {
            print!("{body}");
            eprintln!("{}", summary(&sys));
        }
    }
    if verdict.passed() {
        PASS
    } else {
        eprintln!("{verdict}");
        FAIL
    }
}

fn run_verify(path: &Path) -> u8 {
    let sys = match load(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let verdict = verify_certificate(&sys);
    println!("{verdict}");
    if verdict.passed() {
        PASS
    } else {
        FAIL
    }
}

fn run_inspect(path: &Path, differences: bool) -> u8 {
    let sys = match load(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if !differences {
        println!("{}", summary(&sys));
        println!(
            "graph={}",
            certificate::write_text(&sys)
                .lines()
                .nth(2)
                .unwrap_or("")
                .trim_start_matches("graph=")
        );
        for b in &sys.provenance.base_cycles {
            println!("base {} length={}", b.name, b.cycle.len());
        }
        return PASS;
    }
    let Some(n) = sys
        .provenance
        .modulus
        .filter(|_| !sys.provenance.base_cycles.is_empty())
    else {
        eprintln!(
            "error: unsupported: difference ledgers need a rotational certificate with base cycles"
        );
        return USAGE;
    };
    let report = match audit_coverage(&sys.provenance.base_cycles, n) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    println!("modulus={n}");
    for (name, len) in &report.orbit_lengths {
        println!("orbit {name} length={len}");
    }
    for e in &report.entries {
        println!(
            "class {:<14} supplied={}/{} status={} from={}",
            e.class.to_string(),
            e.supplied,
            e.required,
            e.status,
            e.suppliers.join(",")
        );
    }
    for i in &report.infinity {
        println!(
            "infinity {}_{} status={} from={}",
            i.residue,
            i.part,
            i.status,
            i.suppliers.join(",")
        );
    }
    if report.passed() {
        println!("overall=pass");
        PASS
    } else {
        for f in report.failures() {
            println!("failure {f}");
        }
        println!("overall=fail");
        FAIL
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { PASS });
        }
    };
    let code = match cli.command {
        Command::Construct {
            ell,
            v,
            seed,
            out,
            format,
            budget_ms,
        } => {
            let format = format.parse().unwrap_or(Format::Text);
            run_construct(ell, v, seed, out, format, budget_ms)
        }
        Command::Verify { path } => run_verify(&path),
        Command::Inspect { path, differences } => run_inspect(&path, differences),
    };
    ExitCode::from(code)
}
