//! The `tower-lrc` command line.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{self, sig12, Theorem, TradeoffLine};
use crate::construct::{construct_lrc, ConstructOptions, LrcCode};
use crate::error::{Error, Result};
use crate::field::{square_field, FieldElement};
use crate::group::{build_recovery_group, combine, GroupKind, GroupParams, RecoveryGroup};
use crate::repair::{repair, ErasurePattern};
use crate::tower::{TowerSpec, Variant};
use crate::verify::{self, enum_cap_from_env, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "tower-lrc", version, about = "Locally repairable codes with two recovery sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and write its descriptor.
    Construct(ConstructArgs),
    /// Check locality, repair and distance of a descriptor.
    Verify(VerifyArgs),
    /// Erase one symbol of a random codeword and repair it.
    RepairDemo(RepairDemoArgs),
    /// Evaluate the distance upper bounds.
    Bounds(BoundsArgs),
    /// List admissible locality pairs for one l.
    Regimes(RegimesArgs),
    /// Evaluate one rate/distance trade-off line.
    Tradeoff(TradeoffArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub variant: Variant,
    #[arg(long)]
    pub ell: u32,
    #[arg(long)]
    pub m: usize,
    /// add:kernel, add:gens=a,b, mul:ORDER or norm1:ORDER
    #[arg(long)]
    pub group1: String,
    #[arg(long)]
    pub group2: String,
    #[arg(long)]
    pub distance: usize,
    /// Per-generator degree caps, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub caps: Option<Vec<u64>>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub path: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random codewords for repair checks on large codes.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Fail instead of skipping when the code is too large to enumerate.
    #[arg(long)]
    pub exact_distance: bool,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    pub timings: bool,
    /// Also run the exhaustive locality check.
    #[arg(long)]
    pub exhaustive: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RepairDemoArgs {
    pub path: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub coord: usize,
    #[arg(long, default_value_t = 1)]
    pub set: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: i64,
    #[arg(long)]
    pub k: i64,
    #[arg(long)]
    pub t: i64,
    #[arg(long, value_delimiter = ',', required = true)]
    pub r: Vec<i64>,
}

#[derive(Debug, Args)]
pub struct RegimesArgs {
    #[arg(long)]
    pub ell: u64,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TradeoffArgs {
    #[arg(long)]
    pub ell: u64,
    #[arg(long)]
    pub r1: u64,
    #[arg(long)]
    pub r2: u64,
    /// btv, thm33, thm34 or thm35 (or a single case such as thm35(2))
    #[arg(long)]
    pub variant: String,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

/// Parses a group SPEC for the given tower. `partner` is the other SPEC,
/// needed to pick the scalar field of an additive span.
pub fn parse_group(spec: &TowerSpec, text: &str, partner: &str) -> Result<RecoveryGroup> {
    let bad = || Error::GroupSpec(format!("{text:?}"));
    let (kind, arg) = text.split_once(':').ok_or_else(bad)?;
    let order = |s: &str| s.parse::<u32>().map_err(|_| bad());
    let params = match (kind, spec.variant()) {
        ("add", _) if arg == "kernel" => GroupParams::AdditiveKernel,
        ("add", _) => {
            let gens = arg.strip_prefix("gens=").ok_or_else(bad)?;
            let generators = gens
                .split(',')
                .map(|g| {
                    let v = g.trim().parse::<u32>().map_err(|_| bad())?;
                    spec.field().element(v)
                })
                .collect::<Result<Vec<_>>>()?;
            let scalar_order = match partner.split_once(':') {
                Some(("mul", o)) => o.parse().map_err(|_| Error::GroupSpec(format!("{partner:?}")))?,
                _ => 1,
            };
            GroupParams::Additive {
                generators,
                scalar_order,
            }
        }
        ("mul", Variant::Gs96) | ("norm1", Variant::Gs95) => GroupParams::Multiplicative {
            order: order(arg)?,
        },
        ("mul", Variant::Gs95) => {
            return Err(Error::GroupSpec("gs95 uses norm1:ORDER for scalar groups".into()))
        }
        ("norm1", Variant::Gs96) => {
            return Err(Error::GroupSpec("gs96 uses mul:ORDER for scalar groups".into()))
        }
        _ => return Err(bad()),
    };
    build_recovery_group(spec, &params)
}

/// The theorem whose regime a group pair falls under, with the locality of
/// each group in the theorem's `(r1, r2)` order.
pub fn regime_for(variant: Variant, h1: &RecoveryGroup, h2: &RecoveryGroup) -> Result<(Theorem, u64, u64)> {
    use GroupKind::*;
    let (r1, r2) = (h1.locality() as u64, h2.locality() as u64);
    let pair = (variant, h1.kind(), h2.kind());
    Ok(match pair {
        (Variant::Gs96, Additive, Multiplicative) => (Theorem::Thm33, r1, r2),
        (Variant::Gs96, Multiplicative, Additive) => (Theorem::Thm33, r2, r1),
        (Variant::Gs96, Multiplicative, Multiplicative) => (Theorem::Thm34Case1, r1, r2),
        (Variant::Gs96, Additive, Additive) => (Theorem::Thm34Case2, r1, r2),
        (Variant::Gs95, Multiplicative, Multiplicative) => (Theorem::Thm35Case1, r1, r2),
        (Variant::Gs95, Additive, Additive) => (Theorem::Thm35Case2, r1, r2),
        _ => {
            return Err(Error::GroupSpec(
                "gs95 pairs must be two norm1 groups or two additive groups".into(),
            ))
        }
    })
}

/// Builds the code described by construct flags, validating the regime
/// first.
pub fn build_code(args: &ConstructArgs) -> Result<LrcCode> {
    let field = Arc::new(square_field(args.ell)?);
    let spec = TowerSpec::new(args.variant, field, args.m)?;
    let h1 = parse_group(&spec, &args.group1, &args.group2)?;
    let h2 = parse_group(&spec, &args.group2, &args.group1)?;
    combine(&spec, &h1, &h2)?;
    let (theorem, r1, r2) = regime_for(args.variant, &h1, &h2)?;
    if let Some(condition) = theorem.violation(args.ell as u64, r1, r2) {
        return Err(Error::RegimeViolation {
            theorem: theorem.name(),
            condition,
        });
    }
    let options = ConstructOptions {
        caps: args.caps.clone(),
    };
    construct_lrc(&spec, &h1, &h2, args.distance, &options)
}

fn write_file(path: &PathBuf, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Descriptor(format!("{}: {e}", path.display())))
}

fn cmd_construct(args: &ConstructArgs) -> Result<ExitCode> {
    let code = build_code(args)?;
    if let Some(out) = &args.out {
        code.write_json(out)?;
    }
    let p = code.params;
    println!("{} {} {} {} {}", p.n, p.k, p.d_designed, p.r1, p.r2);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let code = LrcCode::read_json(&args.path)?;
    let options = VerifyOptions {
        seed: args.seed,
        random_trials: args.trials,
        enum_cap: enum_cap_from_env(),
        exact_distance: args.exact_distance,
        timings: args.timings,
    };
    let mut report = verify::verify(&code, &options)?;
    if args.exhaustive {
        let slow = verify::verify_definition1_exhaustive(&code, options.enum_cap)?;
        if !slow.passed {
            report.locality = slow;
            report.passed = false;
        }
    }
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    match &args.report {
        Some(path) => write_file(path, &json)?,
        None => println!("{json}"),
    }
    match report.first_failure() {
        None => {
            eprintln!("verify: all checks passed");
            Ok(ExitCode::SUCCESS)
        }
        Some(why) => {
            eprintln!("verify: FAILED: {why}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_repair_demo(args: &RepairDemoArgs) -> Result<ExitCode> {
    let code = LrcCode::read_json(&args.path)?;
    let f = code.spec.field();
    if args.coord >= code.n() || !(1..=2).contains(&args.set) {
        return Err(Error::InvalidQuery(format!(
            "coordinate must be below {} and set 1 or 2",
            code.n()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let msg: Vec<FieldElement> = (0..code.k())
        .map(|_| f.el(rng.gen_range(0..f.order())))
        .collect();
    let word = code.encode(&msg);
    let show = |v: &[FieldElement]| {
        v.iter().map(|x| x.value().to_string()).collect::<Vec<_>>().join(" ")
    };
    let set = code.recovery_sets[args.coord].set(args.set).to_vec();
    println!("codeword: {}", show(&word));
    println!("erased: coordinate {} (symbol {})", args.coord, word[args.coord]);
    println!(
        "recovery set {}: {}",
        args.set,
        set.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(" ")
    );
    println!(
        "w-values: {} -> {}",
        show(&set.iter().map(|&h| code.w_value(h, args.set)).collect::<Vec<_>>()),
        code.w_value(args.coord, args.set)
    );
    let mut received = word.clone();
    received[args.coord] = FieldElement::ZERO;
    let pattern = ErasurePattern {
        received,
        erased: args.coord,
        set: args.set,
    };
    let got = repair(&code, &pattern, true)?;
    let ok = got == word[args.coord];
    println!("repaired: {} ({})", got, if ok { "ok" } else { "MISMATCH" });
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_bounds(args: &BoundsArgs) -> Result<ExitCode> {
    let table = bounds::all_bounds(args.n, args.k, args.t, &args.r)?;
    for (name, value) in table.labeled() {
        println!("{name} {value}");
    }
    Ok(ExitCode::SUCCESS)
}

fn line_text(l: &TradeoffLine) -> String {
    format!(
        "slope {}/{} ({}) intercept {}/{} ({}){}",
        l.slope.numer(),
        l.slope.denom(),
        sig12(l.slope),
        l.intercept.numer(),
        l.intercept.denom(),
        sig12(l.intercept),
        if l.vacuous { " vacuous" } else { "" }
    )
}

fn cmd_regimes(args: &RegimesArgs) -> Result<ExitCode> {
    let rows = bounds::regimes(args.ell)?;
    let mut undefined = false;
    for row in &rows {
        match &row.line {
            Some(l) => println!("{} r1={} r2={} {}", row.theorem, row.r1, row.r2, line_text(l)),
            None => {
                undefined = true;
                println!("{} r1={} r2={} line undefined*", row.theorem, row.r1, row.r2);
            }
        }
    }
    if undefined {
        println!("* r1 = r2 = 1: the denominator r1*r2 - 1 vanishes");
    }
    if let Some(path) = &args.csv {
        write_file(path, &bounds::regimes_csv(&rows))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tradeoff(args: &TradeoffArgs) -> Result<ExitCode> {
    let line = bounds::gs_line_any_case(args.ell, args.r1, args.r2, &args.variant)?;
    println!("{} {}", line.theorem, line_text(&line));
    if let Some(path) = &args.csv {
        let row = bounds::RegimeRow {
            ell: line.ell,
            r1: line.r1,
            r2: line.r2,
            theorem: line.theorem,
            line: Some(line),
        };
        write_file(path, &bounds::regimes_csv(&[row]))?;
    }
    Ok(ExitCode::SUCCESS)
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::RepairDemo(a) => cmd_repair_demo(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Regimes(a) => cmd_regimes(a),
        Command::Tradeoff(a) => cmd_tradeoff(a),
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
