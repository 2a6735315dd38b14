//! Command-line surface for the repeated-root cyclic code toolkit.
//!
//! Exit codes: 0 success, 1 verification failure (a claim was contradicted),
//! 2 usage error, 3 search-budget exhaustion.

use std::fs::File;
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use repcyc::bounds::classify;
use repcyc::catalog::{all_rows_verified, emit, table1, CodeRecord, EmitFormat, OptimalityLabel};
use repcyc::code::CodeJson;
use repcyc::cyclo::{coset_leaders, delta_h};
use repcyc::dist::{min_weight_upto, Budget};
use repcyc::error::Error;
use repcyc::families::{build_family, verify_family, CheckStatus, FamilyId, VerifyOpts};

/// Environment variable overriding the default subset-visit budget.
const BUDGET_ENV: &str = "REPCYC_BUDGET";

#[derive(Parser)]
#[command(name = "repcyc", version, about = "Repeated-root cyclic codes from BCH components: construction, distance search, bounds, and the results table")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family tag (T31, T32, T33, T34, T35, T37, T41, T42, T51, T52, T53, T61, T62, T71, T72)
    #[arg(long)]
    family: String,
    /// Field size q (a power of 2)
    #[arg(long)]
    q: u64,
    /// Family parameter m
    #[arg(long)]
    m: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family instance and print its record as JSON
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Build a family instance and check dimensions, distances, and claims
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Subset-visit budget for distance searches
        #[arg(long)]
        budget: Option<u64>,
        /// Deepest weight level the combined-code search may exhaust
        #[arg(long, default_value_t = 8)]
        wmax: u32,
    },
    /// Compute the minimum distance of a code given as a JSON file
    Mindist {
        /// Path to a JSON file {"q":..,"N":..,"generator":[..],"k":..}
        #[arg(long)]
        code: String,
        /// Largest weight to search
        #[arg(long, default_value_t = 9)]
        wmax: u32,
        /// Subset-visit budget
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the classical bounds on (n, k, d, q) and classify optimality
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: u64,
    },
    /// Reproduce the results table (28 printed rows)
    Table1 {
        /// Also compute each row's distance and bound verdict
        #[arg(long)]
        verify: bool,
        /// Output format: csv, json, or markdown
        #[arg(long, default_value = "markdown")]
        format: String,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<String>,
        /// Subset-visit budget for distance searches
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List the q-cyclotomic coset leaders modulo n
    Cosets {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
    },
    /// The coset-leader statistic delta_h for prime m
    Deltah {
        #[arg(long)]
        m: u32,
    },
}

fn budget_from(cli_value: Option<u64>) -> Budget {
    let mut b = Budget::default();
    if let Ok(env) = std::env::var(BUDGET_ENV) {
        if let Ok(v) = env.parse::<u64>() {
            b.max_visits = v;
        }
    }
    if let Some(v) = cli_value {
        b.max_visits = v;
    }
    b
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Budget { .. } | Error::Resource(_) => 3,
        Error::Internal(_) | Error::Io(_) => 1,
        _ => 2,
    }
}

fn family_record(tag: &str, q: u64, m: u32) -> Result<CodeRecord, Error> {
    let id = FamilyId::from_str(tag)?;
    let fam = build_family(id, q, m)?;
    Ok(CodeRecord {
        q,
        n: fam.length(),
        k: fam.dimension(),
        d_claimed: fam.claim.as_str(),
        d_status: "not_computed".into(),
        d_value: String::new(),
        optimality_label: OptimalityLabel::Unlabeled,
        verdict: "not_computed".into(),
        family: format!("{id}(q={q},m={m})"),
        generator: fam.code().generator().to_index_list(),
        notes: if fam.in_theorem_range {
            String::new()
        } else {
            "outside the family hypotheses".into()
        },
    })
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Construct { family } => {
            let record = family_record(&family.family, family.q, family.m)?;
            println!("{}", serde_json::to_string_pretty(&record).map_err(|e| Error::Internal(e.to_string()))?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { family, budget, wmax } => {
            let id = FamilyId::from_str(&family.family)?;
            let fam = build_family(id, family.q, family.m)?;
            let opts = VerifyOpts {
                budget: budget_from(budget),
                combined_wmax_cap: wmax,
                ..VerifyOpts::default()
            };
            let report = verify_family(&fam, &opts)?;
            for check in &report.checks {
                let status = match check.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "SKIP",
                };
                println!("{status} {}: {}", check.name, check.detail);
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Mindist { code, wmax, budget } => {
            let text = std::fs::read_to_string(&code)?;
            let json: CodeJson = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidParameters(format!("bad code file {code}: {e}")))?;
            let c = json.into_code()?;
            let r = min_weight_upto(&c, wmax, &budget_from(budget))?;
            println!(
                "[{},{}]_{}: {} {}",
                c.length(),
                c.dimension(),
                c.q(),
                r.status_str(),
                r.value_str()
            );
            if let Some(w) = r.witness() {
                let support: Vec<String> = w
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(i, &v)| format!("{i}:{v}"))
                    .collect();
                println!("witness support: {}", support.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { n, k, d, q } => {
            if k < 1 || k > n || d < 1 || d > n {
                return Err(Error::InvalidParameters(format!(
                    "need 1 <= k <= n and 1 <= d <= n, got (n,k,d) = ({n},{k},{d})"
                )));
            }
            let v = classify(n, k, d, q);
            for check in &v.per_bound {
                println!(
                    "{}: {} (lhs {}, rhs {})",
                    check.bound,
                    if check.admits { "admits" } else { "rejects" },
                    check.lhs,
                    check.rhs
                );
            }
            println!("smallest rejected d' = {}", v.smallest_rejected);
            println!("verdict: {}", v.verdict_str());
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 { verify, format, out, budget } => {
            let fmt = EmitFormat::from_str(&format)?;
            let records = table1(verify, &budget_from(budget))?;
            match out {
                Some(path) => {
                    let mut f = File::create(&path)?;
                    emit(&records, fmt, &mut f)?;
                    f.flush()?;
                }
                None => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    emit(&records, fmt, &mut lock)?;
                }
            }
            if verify && !all_rows_verified(&records) {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cosets { q, n } => {
            let profile = coset_leaders(q, n)?;
            println!("q = {q}, n = {n}: {} nonzero cosets", profile.leaders.len());
            for (leader, size) in profile.leaders.iter().zip(profile.sizes.iter()) {
                println!("leader {leader}: size {size}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Deltah { m } => {
            let d = delta_h(m)?;
            println!("m = {m}: h = {}, delta_h = {} (h-th smallest nonzero coset leader)", d.h, d.delta);
            println!("h-th largest would be {}", d.delta_largest);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
