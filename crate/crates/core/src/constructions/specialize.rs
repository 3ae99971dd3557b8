use crate::coeff::{Coeff, CoeffField};
use crate::constructions::northcott::NorthcottContext;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants::{codim, hilbert_burch_certify, min_gens_graded, HilbertBurchWitness};
use crate::poly::Polynomial;
use crate::report::{CertReport, Clause, Verdict};
use crate::rng::ScalarSource;

/// One seeded substitution of `X`, `Y` by linear forms of `A` over `F_p`.
#[derive(Clone, Debug)]
pub struct SpecializationTrial {
    pub seed: u64,
    pub field: CoeffField,
    /// `α_1..α_{n+2}`, with `α_{n+2} != 0`.
    pub alpha: Vec<Coeff>,
    /// `β_1..β_{n+1}`, with `β_{n+1} != 0`.
    pub beta: Vec<Coeff>,
    /// `X' = -(β_1 x_1 + ... + β_n x_n) / β_{n+1}`.
    pub x_prime: Polynomial,
    /// `Y'' = -(α_1 x_1 + ... + α_n x_n + α_{n+1} X') / α_{n+2}`.
    pub y_second: Polynomial,
    /// `(u + xX', v + xY'', w - yX' - zY'')` in `A` over `F_p`.
    pub k2: Ideal,
    pub report: CertReport,
}

impl SpecializationTrial {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Draws `α` then `β` from the seeded generator: each leading block of
/// scalars as drawn, the last scalar redrawn until nonzero.
fn draw(src: &mut ScalarSource, len: usize) -> Result<Vec<Coeff>> {
    let mut out: Vec<Coeff> = (0..len - 1).map(|_| src.scalar()).collect();
    out.push(src.nonzero_scalar()?);
    Ok(out)
}

/// `-(Σ c_i x_i + extra) / last` over the base ring.
fn linear_form(
    ctx: &std::sync::Arc<crate::poly::RingContext>,
    coeffs: &[Coeff],
    extra: Option<(&Coeff, &Polynomial)>,
    last: &Coeff,
) -> Result<Polynomial> {
    let mut sum = Polynomial::zero(ctx);
    for (i, c) in coeffs.iter().enumerate() {
        sum = &sum + &Polynomial::var_at(ctx, i).scale(c);
    }
    if let Some((c, f)) = extra {
        sum = &sum + &f.scale(c);
    }
    let neg_inv = -&last.inv()?;
    Ok(sum.scale(&neg_inv))
}

/// Runs one trial: `K''` must have codim 2, three minimal generators, `x`
/// regular modulo `K''`, and a Hilbert-Burch certificate for the specialized
/// matrix.
pub fn generic_specialize(ctx: &NorthcottContext, seed: u64, field: CoeffField) -> Result<SpecializationTrial> {
    if field.characteristic() == 0 {
        return Err(Error::invalid("specialization runs over a prime field"));
    }
    let a = ctx.base.with_field(field);
    let n = a.nvars();
    let mut src = ScalarSource::new(seed, field)?;
    let alpha = draw(&mut src, n + 2)?;
    let beta = draw(&mut src, n + 1)?;
    let x_prime = linear_form(&a, &beta[..n], None, &beta[n])?;
    let y_second = linear_form(&a, &alpha[..n], Some((&alpha[n], &x_prime)), &alpha[n + 1])?;

    let v = |name: &str| Polynomial::var(&a, name);
    let (x, y, z) = (v(&ctx.xyz[0])?, v(&ctx.xyz[1])?, v(&ctx.xyz[2])?);
    let (u, vv, w) = (ctx.u.map_into(&a)?, ctx.v.map_into(&a)?, ctx.w.map_into(&a)?);
    let f1 = &u + &(&x * &x_prime);
    let f2 = &vv + &(&x * &y_second);
    let f3 = &(&w - &(&y * &x_prime)) - &(&z * &y_second);
    let k2 = Ideal::new(&a, vec![f1.clone(), f2.clone(), f3.clone()])?;

    let mut clauses = Vec::new();
    let c = if k2.is_unit()? { 0 } else { codim(&k2)? };
    clauses.push(Clause::new("codim-2", c == 2, format!("codim {c}")));
    let mu = min_gens_graded(&k2)?;
    clauses.push(Clause::new("mu-3", mu.count == 3, format!("mu={}", mu.count)));
    let regular = k2.colon(&x)?.equals(&k2)?;
    clauses.push(Clause::new("x-regular", regular, format!("(K'' : {}) = K''", ctx.xyz[0])));
    let matrix = [
        [x.clone(), z.clone(), -&y],
        [y.clone(), &x + &x_prime, &(-&z) + &y_second],
    ];
    let hb = hilbert_burch_certify(&HilbertBurchWitness::new(matrix, [f3, f2, -&f1], k2.clone())?)?;
    let failed: Vec<&str> = hb.clauses.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    clauses.push(Clause::new(
        "hilbert-burch",
        failed.is_empty(),
        if failed.is_empty() {
            "all five clauses pass".to_string()
        } else {
            format!("failing: {}", failed.join(", "))
        },
    ));
    clauses.push(Clause::new(
        "forms",
        true,
        format!("X' = {x_prime}; Y'' = {y_second}"),
    ));
    let report = CertReport::new("specialization-trial", field.to_string(), clauses, Verdict::Certified).with_seed(seed);
    Ok(SpecializationTrial {
        seed,
        field,
        alpha,
        beta,
        x_prime,
        y_second,
        k2,
        report,
    })
}
