//! The full reproduction suite: every construction and certificate, run as
//! independent stages and merged into one report bundle.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::coeff::CoeffField;
use crate::constructions::{
    analyze_hn, certify_hn_prime, generic_specialize, hn_ideal, m_vector, northcott_build, northcott_report, toric_kernel, HNSpec, NorthcottContext, XYZ,
};
use crate::error::{Error, Result};
use crate::groebner::{audit_stats, set_audit, Ideal};
use crate::invariants::{
    length_artinian, length_formula_lhs, standard_base_levels, LengthFormulaCase, StandardBaseCase,
};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, RingContext};
use crate::report::{elapsed_ms, CertReport, Clause, Verdict};
use crate::rng::ScalarSource;

/// Smallest modulus treated as a generic field for specialization.
pub const GENERIC_FIELD_MIN: u64 = 1000;

/// Stage name of per-seed specialization reports. They are informational:
/// the `specialization` stage aggregates them against the pass threshold.
pub const TRIAL_STAGE: &str = "specialization-trial";

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Prime for the sweep, specialization and uniqueness stages.
    pub prime: u64,
    pub seeds: Vec<u64>,
    /// HN sweep covers every exponent in `1..=sweep_max`.
    pub sweep_max: u32,
    pub standard_base_trials: u64,
    pub d_max: u32,
    pub length_pmax: u32,
    pub length_qmax: u32,
    pub uniqueness_trials: u64,
    /// Record per-stage milliseconds (otherwise `ms` is 0).
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            prime: 32003,
            seeds: (1..=20).collect(),
            sweep_max: 3,
            standard_base_trials: 10,
            d_max: 8,
            length_pmax: 4,
            length_qmax: 4,
            uniqueness_trials: 20,
            timings: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub reports: Vec<CertReport>,
    pub exit_code: i32,
}

/// Reports that decide the exit code.
pub fn is_mandatory(report: &CertReport) -> bool {
    report.stage != TRIAL_STAGE
}

/// 0 when every mandatory report succeeded, 1 otherwise.
pub fn exit_code(reports: &[CertReport]) -> i32 {
    if reports.iter().filter(|r| is_mandatory(r)).all(CertReport::passed) {
        0
    } else {
        1
    }
}

fn guarded(stage: &str, field: &str, timings: bool, f: impl FnOnce() -> Result<Vec<CertReport>>) -> Vec<CertReport> {
    let start = Instant::now();
    let mut out = match f() {
        Ok(r) => r,
        Err(e) => vec![CertReport::new(stage, field, vec![Clause::new("error", false, e.to_string())], Verdict::Failed)],
    };
    if timings {
        let ms = elapsed_ms(start);
        for r in out.iter_mut().filter(|r| r.stage == stage) {
            r.ms = ms;
        }
    }
    out
}

fn example_stage() -> Result<Vec<CertReport>> {
    let spec = HNSpec::new([1, 1, 1], [2, 1, 1])?;
    let mut report = analyze_hn(&spec, CoeffField::Rationals)?;
    report.stage = "hn-example".into();
    Ok(vec![report])
}

fn toric_stage() -> Result<Vec<CertReport>> {
    let q = CoeffField::Rationals;
    let kernel = toric_kernel([3, 4, 5], q, XYZ)?;
    let hn = hn_ideal(&HNSpec::new([1, 1, 1], [2, 1, 1])?, q, XYZ)?;
    let ci = toric_kernel([2, 3, 4], q, XYZ)?;
    let ci_expected = Ideal::from_strs(ci.ctx(), &["z - x^2", "y^2 - x^3"])?;
    let clauses = vec![
        Clause::new("kernel-3-4-5-equals-hn", kernel.equals(&hn)?, format!("kernel {kernel}")),
        Clause::new("kernel-2-3-4", ci.equals(&ci_expected)?, format!("kernel {ci}")),
    ];
    Ok(vec![CertReport::new("toric-kernel", "Q", clauses, Verdict::Certified)])
}

fn length_formula_stage(cfg: &SuiteConfig) -> Result<Vec<CertReport>> {
    let cases = LengthFormulaCase::all_up_to(cfg.length_pmax, cfg.length_qmax);
    let results = cases
        .par_iter()
        .map(|c| Ok((*c, length_formula_lhs(c)?)))
        .collect::<Result<Vec<_>>>()?;
    let bad: Vec<String> = results
        .iter()
        .filter(|(c, l)| *l != c.predicted())
        .map(|(c, l)| format!("({},{},{},{}) length {l} vs {}", c.p, c.q, c.r, c.s, c.predicted()))
        .collect();
    let clauses = vec![Clause::new(
        "all-cases",
        bad.is_empty() && !cases.is_empty(),
        if bad.is_empty() {
            format!("{} cases with p<={} q<={}", cases.len(), cfg.length_pmax, cfg.length_qmax)
        } else {
            bad.join("; ")
        },
    )];
    Ok(vec![CertReport::new("length-formula", "Q", clauses, Verdict::Certified)])
}

fn cut_length(spec: &HNSpec, field: CoeffField) -> Result<u64> {
    let hn = hn_ideal(spec, field, XYZ)?;
    let x = Ideal::of_variables(hn.ctx(), &[0]);
    length_artinian(&hn.sum(&x)?)
}

fn length_identity_stage() -> Result<Vec<CertReport>> {
    let spec = HNSpec::new([1, 1, 1], [2, 1, 1])?;
    let len = cut_length(&spec, CoeffField::Rationals)?;
    let m1 = spec.m()[0];
    let clauses = vec![Clause::new(
        "length-equals-m1",
        len == m1,
        format!("length((x)+I) = {len}, m1 = {m1}"),
    )];
    Ok(vec![CertReport::new("length-identity", "Q", clauses, Verdict::Certified)])
}

struct SweepRow {
    spec: HNSpec,
    report: CertReport,
    cut_length: u64,
}

fn hn_sweep_stage(cfg: &SuiteConfig, field: CoeffField) -> Result<Vec<CertReport>> {
    let specs = HNSpec::sweep(cfg.sweep_max);
    let rows = specs
        .par_iter()
        .map(|s| {
            Ok(SweepRow {
                spec: *s,
                report: analyze_hn(s, field)?,
                cut_length: cut_length(s, field)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let failing = |name: &str| -> Vec<String> {
        rows.iter()
            .filter(|r| r.report.clause(name).is_some_and(|c| !c.pass))
            .map(|r| r.spec.to_string())
            .collect()
    };
    let summarize = |name: &str, label: &str| {
        let bad = failing(name);
        Clause::new(
            label,
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} specs", rows.len())
            } else {
                format!("failing: {}", bad.join("; "))
            },
        )
    };
    let coprime = rows.iter().filter(|r| m_vector(&r.spec).gcd == 1).count();
    let inconsistent: Vec<String> = rows
        .iter()
        .filter(|r| r.report.verdict == Verdict::Inconsistent)
        .map(|r| r.spec.to_string())
        .collect();
    let certified = rows.iter().filter(|r| r.report.verdict == Verdict::PrimeCertified).count();
    let bad_len: Vec<String> = rows
        .iter()
        .filter(|r| r.cut_length != r.spec.m()[0])
        .map(|r| format!("{} length {}", r.spec, r.cut_length))
        .collect();
    let clauses = vec![
        summarize("m-vector", "m-at-least-3"),
        summarize("homogeneous", "homogeneous"),
        summarize("codim", "codim-2"),
        summarize("mu", "mu-3"),
        summarize("hb-syzygy", "hilbert-burch-syzygy"),
        Clause::new(
            "no-inconsistency",
            inconsistent.is_empty(),
            if inconsistent.is_empty() {
                format!("{certified} of {coprime} gcd-1 specs prime-certified")
            } else {
                format!("inconsistent: {}", inconsistent.join("; "))
            },
        ),
        Clause::new(
            "length-identity",
            bad_len.is_empty(),
            if bad_len.is_empty() {
                "length((x)+I) = m1 for every spec".to_string()
            } else {
                bad_len.join("; ")
            },
        ),
    ];
    Ok(vec![CertReport::new("hn-sweep", field.to_string(), clauses, Verdict::Certified)])
}

/// Seeded monomial set in at most three variables, degrees at most 6.
pub fn random_standard_base_case(seed: u64, d_max: u32) -> Result<StandardBaseCase> {
    let mut src = ScalarSource::new(seed, CoeffField::prime(2)?)?;
    let names = ["x", "y", "z"];
    let n = 1 + src.below(3) as usize;
    let ctx = RingContext::new(&names[..n], CoeffField::Rationals)?;
    let count = 1 + src.below(4);
    let mut ms = Vec::new();
    for _ in 0..count {
        let deg = 1 + src.below(6);
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[src.below(n as u64) as usize] += 1;
        }
        let m = Monomial::from_exponents(&exps);
        if !ms.contains(&m) {
            ms.push(m);
        }
    }
    StandardBaseCase::new(&ctx, &names[..n], ms, d_max)
}

fn standard_base_stage(cfg: &SuiteConfig) -> Result<Vec<CertReport>> {
    let r = RingContext::new(&["x", "y"], CoeffField::Rationals)?;
    let mut cases = vec![("hand".to_string(), StandardBaseCase::from_strs(&r, &["x", "y"], &["x^2", "y^3", "x*y"], cfg.d_max)?)];
    for seed in 1..=cfg.standard_base_trials {
        cases.push((format!("seed-{seed}"), random_standard_base_case(seed, cfg.d_max)?));
    }
    let clauses = cases
        .par_iter()
        .map(|(name, case)| {
            let levels = standard_base_levels(case)?;
            let bad: Vec<u32> = levels.iter().filter(|(_, ok)| !ok).map(|(d, _)| *d).collect();
            let gens: Vec<String> = case.ideal().gens().iter().map(|g| g.to_string()).collect();
            Ok(Clause::new(
                name.clone(),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("J=({}) d=0..{}", gens.join(", "), case.d_max())
                } else {
                    format!("J=({}) fails at d={bad:?}", gens.join(", "))
                },
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(vec![CertReport::new("standard-base", "Q", clauses, Verdict::Certified)])
}

fn northcott_base(field: CoeffField) -> Result<Arc<RingContext>> {
    RingContext::new(&["x", "y", "z", "w4"], field)
}

fn northcott_stage() -> Result<Vec<CertReport>> {
    let ctx = northcott_build(&northcott_base(CoeffField::Rationals)?, XYZ)?;
    Ok(vec![northcott_report(&ctx)?])
}

/// Failures tolerated among `n` trials: one per twenty, at least one.
pub fn allowed_failures(n: usize) -> usize {
    n.div_ceil(20).max(1)
}

/// Per-seed trial reports and the aggregate `specialization` report.
pub fn specialization_reports(
    ctx: &NorthcottContext,
    seeds: &[u64],
    field: CoeffField,
) -> Result<Vec<CertReport>> {
    let trials = seeds
        .par_iter()
        .map(|&s| match generic_specialize(ctx, s, field) {
            Ok(t) => Ok(t.report),
            Err(e @ Error::Randomness(_)) => Ok(CertReport::new(
                TRIAL_STAGE,
                field.to_string(),
                vec![Clause::new("draw", false, e.to_string())],
                Verdict::Certified,
            )
            .with_seed(s)),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>>>()?;
    let failed: Vec<u64> = trials.iter().filter(|t| !t.passed()).filter_map(|t| t.seed).collect();
    let allowed = allowed_failures(seeds.len());
    let p = field.characteristic();
    let clauses = vec![
        Clause::new(
            "trials",
            !seeds.is_empty() && failed.len() <= allowed,
            format!(
                "{} of {} trials pass (at most {allowed} failures allowed); failing seeds {failed:?}",
                seeds.len() - failed.len(),
                seeds.len()
            ),
        ),
        Clause::new(
            "field-generic",
            p > GENERIC_FIELD_MIN,
            format!("p = {p}, generic needs p > {GENERIC_FIELD_MIN}"),
        ),
    ];
    let mut out = vec![CertReport::new("specialization", field.to_string(), clauses, Verdict::Certified)];
    out.extend(trials);
    Ok(out)
}

fn specialization_stage(cfg: &SuiteConfig, field: CoeffField) -> Result<Vec<CertReport>> {
    let ctx = northcott_build(&northcott_base(CoeffField::Rationals)?, XYZ)?;
    specialization_reports(&ctx, &cfg.seeds, field)
}

fn negative_control_stage() -> Result<Vec<CertReport>> {
    let spec = HNSpec::new([1, 1, 1], [1, 1, 1])?;
    let mut report = certify_hn_prime(&spec, CoeffField::Rationals)?;
    report.stage = "negative-control".into();
    let expected = report.verdict == Verdict::NotCertified;
    report.clauses.push(Clause::new(
        "verdict-not-certified",
        expected,
        format!("verdict {}", report.verdict.as_str()),
    ));
    if !expected && report.verdict.is_success() {
        report.verdict = Verdict::Failed;
    }
    Ok(vec![report])
}

fn random_form(src: &mut ScalarSource, ctx: &Arc<RingContext>, degree: u64) -> Result<Polynomial> {
    let basis = monomials_of_degree(ctx.weights(), degree);
    let nterms = 2 + src.below(3);
    let mut f = Polynomial::zero(ctx);
    for _ in 0..nterms {
        let m = basis[src.below(basis.len() as u64) as usize].clone();
        f = &f + &Polynomial::monomial(ctx, m, src.nonzero_scalar()?);
    }
    Ok(f)
}

/// Reduced bases of a random ideal and of a reshuffled, invertibly recombined
/// generating set of it agree.
pub fn uniqueness_trial(seed: u64, field: CoeffField) -> Result<bool> {
    let ctx = RingContext::new(&["x", "y", "z"], field)?;
    let mut src = ScalarSource::new(seed, field)?;
    let k = 2 + src.below(2) as usize;
    let mut gens = Vec::with_capacity(k);
    for _ in 0..k {
        let d = 2 + src.below(2);
        gens.push(random_form(&mut src, &ctx, d)?);
    }
    let mut shuffled = gens.clone();
    for i in (1..k).rev() {
        let j = src.below(i as u64 + 1) as usize;
        shuffled.swap(i, j);
    }
    // Unitriangular recombination with a nonzero diagonal.
    let mut mixed: Vec<Polynomial> = Vec::with_capacity(k);
    for i in 0..k {
        let mut g = shuffled[i].scale(&src.nonzero_scalar()?);
        for h in &shuffled[..i] {
            let gap = g.max_weighted_degree().unwrap_or(0).saturating_sub(h.max_weighted_degree().unwrap_or(0));
            let shifts = monomials_of_degree(ctx.weights(), gap);
            let mult = &shifts[src.below(shifts.len() as u64) as usize];
            g = &g + &h.mul_monomial(mult).scale(&src.scalar());
        }
        mixed.push(g);
    }
    let a = Ideal::new(&ctx, gens)?;
    let b = Ideal::new(&ctx, mixed)?;
    Ok(a.groebner()?.elements() == b.groebner()?.elements())
}

fn audit_stage(cfg: &SuiteConfig, field: CoeffField) -> Result<Vec<CertReport>> {
    let failing: Vec<u64> = (1..=cfg.uniqueness_trials)
        .into_par_iter()
        .map(|s| Ok((s, uniqueness_trial(s, field)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(s, _)| s)
        .collect();
    let stats = audit_stats();
    let clauses = vec![
        Clause::new(
            "s-pair-audit",
            stats.audited > 0 && stats.failures == 0,
            format!("{} bases audited, {} failures", stats.audited, stats.failures),
        ),
        Clause::new(
            "reduced-basis-uniqueness",
            failing.is_empty(),
            format!("{} random ideals, failing seeds {failing:?}", cfg.uniqueness_trials),
        ),
    ];
    Ok(vec![CertReport::new("engine-audit", field.to_string(), clauses, Verdict::Certified)])
}

/// Runs every stage (in parallel), merges reports ordered by stage name and
/// seed, and appends the engine audit.
pub fn run_reproduction_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let field = CoeffField::prime(cfg.prime)?;
    let fname = field.to_string();
    set_audit(true);
    type Stage<'a> = (&'static str, String, Box<dyn Fn() -> Result<Vec<CertReport>> + Send + Sync + 'a>);
    let stages: Vec<Stage> = vec![
        ("hn-example", "Q".into(), Box::new(example_stage)),
        ("toric-kernel", "Q".into(), Box::new(toric_stage)),
        ("length-formula", "Q".into(), Box::new(|| length_formula_stage(cfg))),
        ("length-identity", "Q".into(), Box::new(length_identity_stage)),
        ("hn-sweep", fname.clone(), Box::new(move || hn_sweep_stage(cfg, field))),
        ("standard-base", "Q".into(), Box::new(|| standard_base_stage(cfg))),
        ("northcott", "Q".into(), Box::new(northcott_stage)),
        ("specialization", fname.clone(), Box::new(move || specialization_stage(cfg, field))),
        ("negative-control", "Q".into(), Box::new(negative_control_stage)),
    ];
    let mut reports: Vec<CertReport> = stages
        .par_iter()
        .flat_map(|(name, f, run)| guarded(name, f, cfg.timings, run))
        .collect();
    reports.sort_by(|a, b| a.stage.cmp(&b.stage).then(a.seed.cmp(&b.seed)));
    reports.extend(guarded("engine-audit", &fname, cfg.timings, || audit_stage(cfg, field)));
    let exit_code = exit_code(&reports);
    Ok(SuiteOutcome { reports, exit_code })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_allowance() {
        assert_eq!(allowed_failures(20), 1);
        assert_eq!(allowed_failures(1), 1);
        assert_eq!(allowed_failures(40), 2);
    }

    #[test]
    fn random_cases_respect_bounds() {
        for seed in 1..=10 {
            let c = random_standard_base_case(seed, 8).unwrap();
            assert!(c.ctx().nvars() <= 3);
            assert!(c.degrees().iter().all(|&d| (1..=6).contains(&d)));
        }
    }

    #[test]
    fn uniqueness_on_a_few_seeds() {
        let f = CoeffField::prime(32003).unwrap();
        for seed in 1..=5 {
            assert!(uniqueness_trial(seed, f).unwrap());
        }
    }

    #[test]
    fn exit_code_ignores_trial_reports() {
        let bad_trial = CertReport::new(TRIAL_STAGE, "F_7", vec![Clause::new("mu-3", false, "")], Verdict::Certified);
        let good = CertReport::new("x", "Q", vec![], Verdict::Certified);
        assert_eq!(exit_code(&[good.clone(), bad_trial]), 0);
        let bad = CertReport::new("y", "Q", vec![Clause::new("c", false, "")], Verdict::Certified);
        assert_eq!(exit_code(&[good, bad]), 1);
    }
}
