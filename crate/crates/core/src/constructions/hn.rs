use std::sync::Arc;

use num_integer::Integer;

use crate::coeff::CoeffField;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants::{codim, min_gens_graded, HilbertBurchWitness};
use crate::poly::{Polynomial, RingContext};
use crate::report::{CertReport, Clause, Verdict};

/// Default variable names for the three designated variables.
pub const XYZ: [&str; 3] = ["x", "y", "z"];

/// Exponent triples `a`, `b` (all entries at least 1) of the 2×3 matrix
/// `[[x1^a1, x2^a2, x3^a3], [x2^b2, x3^b3, x1^b1]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HNSpec {
    a: [u32; 3],
    b: [u32; 3],
}

/// The weight triple `m(a,b)` and its gcd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MVector {
    pub m: [u64; 3],
    pub gcd: u64,
}

impl HNSpec {
    pub fn new(a: [u32; 3], b: [u32; 3]) -> Result<Self> {
        if a.iter().chain(&b).any(|&e| e == 0) {
            return Err(Error::invalid(format!(
                "exponents must be positive, got a={a:?} b={b:?}"
            )));
        }
        let spec = HNSpec { a, b };
        let m = spec.m();
        if m.iter().any(|&mi| mi < 3) {
            return Err(Error::Inconsistency(format!("m(a,b)={m:?} has an entry below 3")));
        }
        Ok(spec)
    }

    pub fn a(&self) -> [u32; 3] {
        self.a
    }

    pub fn b(&self) -> [u32; 3] {
        self.b
    }

    /// `c = a + b`.
    pub fn c(&self) -> [u32; 3] {
        [self.a[0] + self.b[0], self.a[1] + self.b[1], self.a[2] + self.b[2]]
    }

    /// `(c2 c3 - a2 b3, c1 c3 - a3 b1, c1 c2 - a1 b2)`.
    pub fn m(&self) -> [u64; 3] {
        let [a1, a2, a3] = self.a.map(u64::from);
        let [b1, b2, b3] = self.b.map(u64::from);
        let [c1, c2, c3] = self.c().map(u64::from);
        [c2 * c3 - a2 * b3, c1 * c3 - a3 * b1, c1 * c2 - a1 * b2]
    }

    /// All specs with every exponent in `1..=max`.
    pub fn sweep(max: u32) -> Vec<HNSpec> {
        let mut out = Vec::new();
        let r = 1..=max;
        for a1 in r.clone() {
            for a2 in r.clone() {
                for a3 in r.clone() {
                    for b1 in r.clone() {
                        for b2 in r.clone() {
                            for b3 in r.clone() {
                                out.push(HNSpec::new([a1, a2, a3], [b1, b2, b3]).expect("positive"));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for HNSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a1, a2, a3] = self.a;
        let [b1, b2, b3] = self.b;
        write!(f, "a=({a1},{a2},{a3}) b=({b1},{b2},{b3})")
    }
}

pub fn m_vector(spec: &HNSpec) -> MVector {
    let m = spec.m();
    MVector {
        m,
        gcd: m[0].gcd(&m[1]).gcd(&m[2]),
    }
}

fn weights_of(m: [u64; 3]) -> Result<[u32; 3]> {
    let mut w = [0u32; 3];
    for (wi, &mi) in w.iter_mut().zip(&m) {
        *wi = u32::try_from(mi).map_err(|_| Error::invalid(format!("weight {mi} too large")))?;
    }
    Ok(w)
}

/// `k[x1,x2,x3]` graded by `m(a,b)`.
pub fn hn_ring(spec: &HNSpec, field: CoeffField, names: [&str; 3]) -> Result<Arc<RingContext>> {
    RingContext::with_weights(&names, &weights_of(spec.m())?, field)
}

/// The matrix `[[x1^a1, x2^a2, x3^a3], [x2^b2, x3^b3, x1^b1]]` in `ctx`,
/// whose first three variables are `x1, x2, x3`.
pub fn hn_matrix(spec: &HNSpec, ctx: &Arc<RingContext>) -> [[Polynomial; 3]; 2] {
    let x = |i: usize, e: u32| Polynomial::var_at(ctx, i).pow(e);
    let [a1, a2, a3] = spec.a;
    let [b1, b2, b3] = spec.b;
    [[x(0, a1), x(1, a2), x(2, a3)], [x(1, b2), x(2, b3), x(0, b1)]]
}

/// `(v1, v2, D)` with `v1 = x1^c1 - x2^b2 x3^a3`, `v2 = x2^c2 - x1^a1 x3^b3`,
/// `D = x3^c3 - x1^b1 x2^a2`.
pub fn hn_generators(spec: &HNSpec, ctx: &Arc<RingContext>) -> [Polynomial; 3] {
    let x = |i: usize, e: u32| Polynomial::var_at(ctx, i).pow(e);
    let [a1, a2, a3] = spec.a;
    let [b1, b2, b3] = spec.b;
    let [c1, c2, c3] = spec.c();
    let v1 = &x(0, c1) - &(&x(1, b2) * &x(2, a3));
    let v2 = &x(1, c2) - &(&x(0, a1) * &x(2, b3));
    let d_minor = &x(2, c3) - &(&x(0, b1) * &x(1, a2));
    [v1, v2, d_minor]
}

/// The ideal `(v1, v2, D)` in `k[x1,x2,x3]` with weights `m(a,b)`.
pub fn hn_ideal(spec: &HNSpec, field: CoeffField, names: [&str; 3]) -> Result<Ideal> {
    let ctx = hn_ring(spec, field, names)?;
    Ideal::new(&ctx, hn_generators(spec, &ctx).to_vec())
}

/// Hilbert-Burch witness for the HN matrix: signed row `(D, v1, v2)`.
pub fn hn_witness(spec: &HNSpec, ideal: &Ideal) -> Result<HilbertBurchWitness> {
    let ctx = ideal.ctx();
    let [v1, v2, d_minor] = hn_generators(spec, ctx);
    HilbertBurchWitness::new(hn_matrix(spec, ctx), [d_minor, v1, v2], ideal.clone())
}

/// Kernel of `x -> t^m1, y -> t^m2, z -> t^m3`, by eliminating `t`.
/// The ring is graded by `m`, so the result lives in the same ring as the
/// matching HN ideal.
pub fn toric_kernel(m: [u64; 3], field: CoeffField, names: [&str; 3]) -> Result<Ideal> {
    if m.contains(&0) {
        return Err(Error::invalid(format!("weights must be positive, got {m:?}")));
    }
    let w = weights_of(m)?;
    let ctx = RingContext::with_weights(&names, &w, field)?;
    let t = ctx.fresh_name("t");
    let ext = ctx.extend(&[(t.as_str(), 1)])?;
    let tv = Polynomial::var(&ext, &t)?;
    let gens = names
        .iter()
        .zip(&w)
        .map(|(n, &wi)| Ok(&Polynomial::var(&ext, n)? - &tv.pow(wi)))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ext, gens)?
        .eliminate(&[t.as_str()])?
        .map_into(&ctx)?
        .reduced()
}

/// Primality certificate: when `gcd(m) = 1` the HN ideal must equal the
/// toric kernel of `m` (verdict `prime-certified`, or `inconsistent` if not).
/// Otherwise the containment of the HN ideal in the kernel is reported
/// (verdict `not-certified`).
pub fn certify_hn_prime(spec: &HNSpec, field: CoeffField) -> Result<CertReport> {
    let ideal = hn_ideal(spec, field, XYZ)?;
    let kernel = toric_kernel(spec.m(), field, XYZ)?;
    certify_with(spec, &ideal, &kernel)
}

fn certify_with(spec: &HNSpec, ideal: &Ideal, kernel: &Ideal) -> Result<CertReport> {
    let mv = m_vector(spec);
    let field = ideal.ctx().field().to_string();
    let [m1, m2, m3] = mv.m;
    let mut clauses = vec![Clause::new(
        "m-vector",
        mv.m.iter().all(|&mi| mi >= 3),
        format!("m=({m1},{m2},{m3}) gcd={}", mv.gcd),
    )];
    if mv.gcd == 1 {
        let equal = ideal.equals(kernel)?;
        clauses.push(Clause::new(
            "hn-equals-toric-kernel",
            equal,
            format!("kernel basis {kernel}"),
        ));
        let mut report = CertReport::new("hn", field, clauses, Verdict::PrimeCertified);
        if !equal {
            report.verdict = Verdict::Inconsistent;
        }
        return Ok(report);
    }
    let contained = ideal.is_subset_of(kernel)?;
    let reverse = kernel.is_subset_of(ideal)?;
    clauses.push(Clause::new(
        "hn-in-toric-kernel",
        contained,
        format!("kernel basis {kernel}"),
    ));
    clauses.push(Clause::new(
        "containment-strict",
        contained && !reverse,
        format!("kernel in hn: {reverse}"),
    ));
    Ok(CertReport::new("hn", field, clauses, Verdict::NotCertified))
}

/// Full HN analysis: generators, homogeneity under `m(a,b)`, codim, μ,
/// Hilbert-Burch certificate and the primality certificate.
pub fn analyze_hn(spec: &HNSpec, field: CoeffField) -> Result<CertReport> {
    let ideal = hn_ideal(spec, field, XYZ)?;
    let kernel = toric_kernel(spec.m(), field, XYZ)?;
    let mut report = certify_with(spec, &ideal, &kernel)?;
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    let mut extra = vec![
        Clause::new("generators", true, format!("({})", gens.join(", "))),
        Clause::new(
            "homogeneous",
            ideal.is_homogeneous(),
            format!("weights {:?}", ideal.ctx().weights()),
        ),
    ];
    let c = codim(&ideal)?;
    extra.push(Clause::new("codim", c == 2, format!("codim {c}")));
    let mg = min_gens_graded(&ideal)?;
    extra.push(Clause::new(
        "mu",
        mg.count == 3,
        format!("mu={} degrees {:?}", mg.count, mg.degrees),
    ));
    let hb = crate::invariants::hilbert_burch_certify(&hn_witness(spec, &ideal)?)?;
    extra.extend(hb.clauses.into_iter().map(|mut cl| {
        cl.name = format!("hb-{}", cl.name);
        cl
    }));
    if extra.iter().any(|cl| !cl.pass) && report.verdict != Verdict::Inconsistent {
        report.verdict = Verdict::Failed;
    }
    report.clauses.extend(extra);
    Ok(report)
}
