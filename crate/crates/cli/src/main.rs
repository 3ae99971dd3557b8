//! `detideal`: command-line front end for the determinantal-ideal toolkit.
//!
//! Every command prints a report bundle (JSON by default) and exits with
//! 0 when all checks pass, 1 on a failed check, 2 on a usage or input error
//! and 3 when the Gröbner step budget is exhausted.

use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};
use detideal::coeff::CoeffField;
use detideal::constructions::{analyze_hn, northcott_build, northcott_report, toric_kernel, HNSpec};
use detideal::groebner::{set_step_budget, Ideal};
use detideal::invariants::{
    codim, krull_dim, length_artinian, length_formula_lhs, min_gens_graded, standard_base_levels,
    LengthFormulaCase, StandardBaseCase,
};
use detideal::poly::{parse_poly, RingContext};
use detideal::report::{elapsed_ms, render, CertReport, Clause, Format, Verdict};
use detideal::repro::{exit_code, run_reproduction_suite, specialization_reports, SuiteConfig};
use detideal::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "detideal", version, about = "Certify determinantal ideals of monomial curves")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: Format,

    /// Reduction steps allowed per Gröbner basis computation.
    #[arg(long, global = true)]
    step_budget: Option<u64>,

    /// Record wall-clock milliseconds in reports.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// HN ideal of the exponent triples a, b: generators, m(a,b), primality, codim, μ.
    Hn {
        #[arg(long, value_parser = parse_triple)]
        a: [u32; 3],
        #[arg(long, value_parser = parse_triple)]
        b: [u32; 3],
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: CoeffField,
    },
    /// Kernel of x -> t^m1, y -> t^m2, z -> t^m3.
    Toric {
        #[arg(long, value_parser = parse_weights)]
        weights: [u64; 3],
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: CoeffField,
    },
    /// Length of R/I for an ideal read from a file.
    Length {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: CoeffField,
    },
    /// Length formula for (x^p, y^q, x^r y^s) over all cases up to the bounds.
    LengthFormula {
        #[arg(long, default_value_t = 4)]
        pmax: u32,
        #[arg(long, default_value_t = 4)]
        qmax: u32,
    },
    /// Standard-base identity for monomials in designated variables.
    Stdbase {
        /// Comma-separated monomials, e.g. "x^2,y^3,x*y".
        #[arg(long)]
        monomials: String,
        #[arg(long)]
        dmax: u32,
        /// Designated variables; defaults to those occurring in the monomials.
        #[arg(long)]
        vars: Option<String>,
    },
    /// Colon construction over A[X,Y] and seeded specializations.
    Northcott {
        /// Variables of A; the first three play x, y, z.
        #[arg(long, default_value = "x,y,z,w")]
        vars: String,
        #[arg(long, default_value = "p:32003", value_parser = parse_field)]
        field: CoeffField,
        /// Seed range `a..b` (inclusive) or comma-separated list.
        #[arg(long, default_value = "1..20", value_parser = parse_seeds)]
        seeds: Seeds,
    },
    /// Run the whole reproduction suite.
    Repro {
        #[arg(long)]
        out: Option<PathBuf>,
        /// Prime for the sweep and specialization stages.
        #[arg(long, default_value_t = 32003)]
        prime: u64,
        #[arg(long, default_value = "1..20", value_parser = parse_seeds)]
        seeds: Seeds,
        /// Cutoff for the standard-base stage.
        #[arg(long, default_value_t = 8)]
        dmax: u32,
    },
}

#[derive(Clone, Debug)]
struct Seeds(Vec<u64>);

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    Format::from_str(s).map_err(|e| e.to_string())
}

fn parse_field(s: &str) -> std::result::Result<CoeffField, String> {
    CoeffField::from_str(s).map_err(|e| e.to_string())
}

fn parse_list<T: FromStr>(s: &str) -> std::result::Result<Vec<T>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| format!("bad entry `{}`", p.trim())))
        .collect()
}

fn parse_triple(s: &str) -> std::result::Result<[u32; 3], String> {
    parse_list::<u32>(s)?
        .try_into()
        .map_err(|_| format!("expected three comma-separated integers, got `{s}`"))
}

fn parse_weights(s: &str) -> std::result::Result<[u64; 3], String> {
    parse_list::<u64>(s)?
        .try_into()
        .map_err(|_| format!("expected three comma-separated integers, got `{s}`"))
}

fn parse_seeds(s: &str) -> std::result::Result<Seeds, String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| format!("bad seed range `{s}`"))?;
        let b: u64 = b.trim().parse().map_err(|_| format!("bad seed range `{s}`"))?;
        let r: RangeInclusive<u64> = a..=b;
        if r.is_empty() {
            return Err(format!("empty seed range `{s}`"));
        }
        return Ok(Seeds(r.collect()));
    }
    parse_list::<u64>(s).map(Seeds)
}

/// Reads `vars x:3 y:4 z:5` followed by one polynomial per line; `#` starts a comment.
fn read_ideal_file(path: &PathBuf, field: CoeffField) -> Result<Ideal> {
    let text = fs::read_to_string(path)?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::invalid(format!("{}: empty ideal file", path.display())))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("vars") {
        return Err(Error::invalid(format!("line {hl}: header must start with `vars`")));
    }
    let mut names = Vec::new();
    let mut weights = Vec::new();
    for w in words {
        let (name, weight) = match w.split_once(':') {
            Some((n, k)) => (
                n,
                k.parse::<u32>()
                    .map_err(|_| Error::invalid(format!("line {hl}: bad weight in `{w}`")))?,
            ),
            None => (w, 1),
        };
        names.push(name.to_string());
        weights.push(weight);
    }
    let ctx = RingContext::with_weights(&names, &weights, field)?;
    let gens = lines
        .map(|(i, l)| {
            parse_poly(l, &ctx).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::invalid(format!("line {i}, column {}: {msg}", pos + 1)),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ctx, gens)
}

fn gens_text(i: &Ideal) -> String {
    let g: Vec<String> = i.gens().iter().map(|p| p.to_string()).collect();
    format!("({})", g.join(", "))
}

fn toric_report(weights: [u64; 3], field: CoeffField) -> Result<CertReport> {
    let kernel = toric_kernel(weights, field, ["x", "y", "z"])?;
    let mg = min_gens_graded(&kernel)?;
    let c = codim(&kernel)?;
    let shape = match mg.count {
        2 => "complete intersection",
        3 => "determinantal",
        _ => "other",
    };
    let clauses = vec![
        Clause::new("kernel", true, gens_text(&kernel)),
        Clause::new("codim", c == 2, format!("codim {c}")),
        Clause::new("mu", true, format!("mu={} ({shape}) degrees {:?}", mg.count, mg.degrees)),
    ];
    Ok(CertReport::new("toric", field.to_string(), clauses, Verdict::Certified))
}

fn length_report(ideal: &Ideal) -> Result<CertReport> {
    let dim = krull_dim(ideal)?;
    if dim != 0 {
        return Err(Error::invalid(format!("R/I has dimension {dim}, not Artinian")));
    }
    let len = length_artinian(ideal)?;
    let clauses = vec![
        Clause::new("ideal", true, gens_text(ideal)),
        Clause::new("length", true, len.to_string()),
    ];
    Ok(CertReport::new("length", ideal.ctx().field().to_string(), clauses, Verdict::Certified))
}

fn length_formula_report(pmax: u32, qmax: u32) -> Result<CertReport> {
    let cases = LengthFormulaCase::all_up_to(pmax, qmax);
    if cases.is_empty() {
        return Err(Error::invalid("need pmax >= 2 and qmax >= 2"));
    }
    let clauses = cases
        .iter()
        .map(|c| {
            let l = length_formula_lhs(c)?;
            Ok(Clause::new(
                format!("p={},q={},r={},s={}", c.p, c.q, c.r, c.s),
                l == c.predicted(),
                format!("length {l}, pq-(p-r)(q-s) = {}", c.predicted()),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CertReport::new("length-formula", "Q", clauses, Verdict::Certified))
}

fn identifiers(s: &str) -> Vec<String> {
    let mut out: Vec<String> = s
        .split(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .filter(|w| w.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_'))
        .map(String::from)
        .collect();
    out.sort();
    out.dedup();
    out
}

fn stdbase_report(monomials: &str, dmax: u32, vars: Option<&str>) -> Result<CertReport> {
    let names: Vec<String> = match vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
        None => identifiers(monomials),
    };
    let ctx = RingContext::new(&names, CoeffField::Rationals)?;
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mons: Vec<&str> = monomials.split(',').map(str::trim).collect();
    let case = StandardBaseCase::from_strs(&ctx, &refs, &mons, dmax)?;
    let clauses = standard_base_levels(&case)?
        .into_iter()
        .map(|(d, ok)| Clause::new(format!("d={d}"), ok, "J ∩ I^d = Σ J_i I^(d-δ_i)"))
        .collect();
    Ok(CertReport::new("standard-base", "Q", clauses, Verdict::Certified))
}

fn northcott_reports(vars: &str, field: CoeffField, seeds: &[u64]) -> Result<Vec<CertReport>> {
    let names: Vec<&str> = vars.split(',').map(str::trim).collect();
    if names.len() < 3 {
        return Err(Error::invalid("need at least three variables"));
    }
    let base = RingContext::new(&names, CoeffField::Rationals)?;
    let ctx = northcott_build(&base, [names[0], names[1], names[2]])?;
    let mut out = vec![northcott_report(&ctx)?];
    out.extend(specialization_reports(&ctx, seeds, field)?);
    Ok(out)
}

fn run(cli: &Cli) -> Result<(Vec<CertReport>, Option<PathBuf>)> {
    if let Some(b) = cli.step_budget {
        set_step_budget(b);
    }
    let start = Instant::now();
    let stamp = |mut rs: Vec<CertReport>| {
        if cli.timings {
            let ms = elapsed_ms(start);
            rs.iter_mut().for_each(|r| r.ms = ms);
        }
        rs
    };
    Ok(match &cli.command {
        Command::Hn { a, b, field } => (stamp(vec![analyze_hn(&HNSpec::new(*a, *b)?, *field)?]), None),
        Command::Toric { weights, field } => (stamp(vec![toric_report(*weights, *field)?]), None),
        Command::Length { ideal, field } => (stamp(vec![length_report(&read_ideal_file(ideal, *field)?)?]), None),
        Command::LengthFormula { pmax, qmax } => (stamp(vec![length_formula_report(*pmax, *qmax)?]), None),
        Command::Stdbase { monomials, dmax, vars } => {
            (stamp(vec![stdbase_report(monomials, *dmax, vars.as_deref())?]), None)
        }
        Command::Northcott { vars, field, seeds } => (stamp(northcott_reports(vars, *field, &seeds.0)?), None),
        Command::Repro { out, prime, seeds, dmax } => {
            let cfg = SuiteConfig {
                prime: *prime,
                seeds: seeds.0.clone(),
                d_max: *dmax,
                timings: cli.timings,
                ..SuiteConfig::default()
            };
            (run_reproduction_suite(&cfg)?.reports, out.clone())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((reports, out)) => {
            let text = render(&reports, cli.format);
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(exit_code(&reports) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Resource { .. } => 3,
                Error::Inconsistency(_) => 1,
                _ => 2,
            })
        }
    }
}
