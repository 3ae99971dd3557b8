//! Dimension, length, minimal generators and the Hilbert-Burch certificate.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial, RingContext, WeightedDegree};
use crate::report::{CertReport, Clause, Verdict};

/// Largest `d_max` accepted by [`StandardBaseCase`].
pub const MAX_STANDARD_BASE_DEGREE: u32 = 12;

fn support_mask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, i| acc | (1 << i))
}

fn leading_monomials(ideal: &Ideal, order: &MonomialOrder) -> Result<Vec<Monomial>> {
    if ideal.is_zero() {
        return Ok(Vec::new());
    }
    Ok(ideal.groebner_with(order)?.leading_monomials())
}

/// Lexicographically first maximal-size set of variables containing the
/// support of no leading monomial. Its size is the Krull dimension of `R/I`.
pub fn max_independent_set(ideal: &Ideal) -> Result<Vec<usize>> {
    let n = ideal.ctx().nvars();
    if n > 63 {
        return Err(Error::invalid("dimension needs at most 63 variables"));
    }
    let lms = leading_monomials(ideal, &ideal.ctx().default_order())?;
    if lms.iter().any(Monomial::is_one) {
        return Err(Error::invalid("dimension of R/I is undefined for the unit ideal"));
    }
    let masks: Vec<u64> = lms.iter().map(support_mask).collect();
    let mut best: Option<u64> = None;
    for s in 0u64..(1 << n) {
        if masks.iter().any(|&mask| mask & !s == 0) {
            continue;
        }
        best = match best {
            None => Some(s),
            Some(b) if s.count_ones() > b.count_ones() => Some(s),
            // Among equal sizes prefer the set whose smallest differing index is present.
            Some(b) if s.count_ones() == b.count_ones() && (s & !b).trailing_zeros() < (b & !s).trailing_zeros() => Some(s),
            keep => keep,
        };
    }
    let best = best.expect("empty set is independent in a proper ideal");
    Ok((0..n).filter(|i| best & (1 << i) != 0).collect())
}

/// Krull dimension of `R/I`.
pub fn krull_dim(ideal: &Ideal) -> Result<usize> {
    Ok(max_independent_set(ideal)?.len())
}

/// Height of `I`: number of variables minus `krull_dim`.
pub fn codim(ideal: &Ideal) -> Result<usize> {
    Ok(ideal.ctx().nvars() - krull_dim(ideal)?)
}

/// Number of standard monomials of `I`, i.e. `dim_k R/I`, under the default order.
pub fn length_artinian(ideal: &Ideal) -> Result<u64> {
    length_artinian_with(ideal, &ideal.ctx().default_order())
}

pub fn length_artinian_with(ideal: &Ideal, order: &MonomialOrder) -> Result<u64> {
    let n = ideal.ctx().nvars();
    let lms = leading_monomials(ideal, order)?;
    let mut bounds = vec![None; n];
    for m in &lms {
        if let Some(i) = m.pure_power_of() {
            let e = m.exponent(i);
            bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
        } else if m.is_one() {
            return Ok(0);
        }
    }
    let Some(bounds) = bounds.into_iter().collect::<Option<Vec<u32>>>() else {
        return Err(Error::invalid("quotient is not Artinian"));
    };
    let mut exps = vec![0u32; n];
    let mut count = 0u64;
    count_standard(&lms, &bounds, 0, &mut exps, &mut count);
    Ok(count)
}

fn count_standard(lms: &[Monomial], bounds: &[u32], i: usize, exps: &mut [u32], count: &mut u64) {
    if i == bounds.len() {
        let m = Monomial::from_exponents(exps);
        if !lms.iter().any(|g| g.divides(&m)) {
            *count += 1;
        }
        return;
    }
    for e in 0..bounds[i] {
        exps[i] = e;
        count_standard(lms, bounds, i + 1, exps, count);
    }
    exps[i] = 0;
}

/// `(p, q, r, s)` with `1 <= r < p` and `1 <= s < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthFormulaCase {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub s: u32,
}

impl LengthFormulaCase {
    pub fn new(p: u32, q: u32, r: u32, s: u32) -> Result<Self> {
        if !(1 <= r && r < p && 1 <= s && s < q) {
            return Err(Error::invalid(format!(
                "need 1 <= r < p and 1 <= s < q, got (p,q,r,s)=({p},{q},{r},{s})"
            )));
        }
        Ok(LengthFormulaCase { p, q, r, s })
    }

    /// `pq - (p-r)(q-s)`.
    pub fn predicted(&self) -> u64 {
        let (p, q, r, s) = (self.p as u64, self.q as u64, self.r as u64, self.s as u64);
        p * q - (p - r) * (q - s)
    }

    /// Every valid case with `p <= pmax` and `q <= qmax`.
    pub fn all_up_to(pmax: u32, qmax: u32) -> Vec<LengthFormulaCase> {
        let mut out = Vec::new();
        for p in 2..=pmax {
            for q in 2..=qmax {
                for r in 1..p {
                    for s in 1..q {
                        out.push(LengthFormulaCase { p, q, r, s });
                    }
                }
            }
        }
        out
    }
}

/// Length of `k[x,y]/(x^p, y^q, x^r y^s)` computed from a Gröbner basis.
pub fn length_formula_lhs(case: &LengthFormulaCase) -> Result<u64> {
    let ctx = RingContext::new(&["x", "y"], crate::coeff::CoeffField::Rationals)?;
    let ideal = Ideal::from_strs(
        &ctx,
        &[
            &format!("x^{}", case.p),
            &format!("y^{}", case.q),
            &format!("x^{}*y^{}", case.r, case.s),
        ],
    )?;
    length_artinian(&ideal)
}

pub fn verify_length_formula(case: &LengthFormulaCase) -> Result<bool> {
    Ok(length_formula_lhs(case)? == case.predicted())
}

/// Minimal generator count and the weighted degrees of a minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalGenerators {
    pub count: usize,
    pub degrees: Vec<u64>,
}

// Row-echelon span keyed by leading monomial under a fixed order.
struct Span {
    order: MonomialOrder,
    rows: HashMap<Monomial, Vec<(Monomial, Coeff)>>,
}

impl Span {
    fn new(order: MonomialOrder) -> Self {
        Span {
            order,
            rows: HashMap::new(),
        }
    }

    /// Adds `f` to the span; returns whether the rank grew.
    fn insert(&mut self, f: &Polynomial) -> bool {
        let mut v: BTreeMap<OrdKey, Coeff> = BTreeMap::new();
        for (m, c) in f.terms() {
            v.insert(OrdKey::new(m, &self.order), c.clone());
        }
        loop {
            let Some((lead, c)) = v.iter().next_back().map(|(k, c)| (k.0.clone(), c.clone())) else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(row) => {
                    for (m, d) in row {
                        let key = OrdKey::new(m, &self.order);
                        let scaled = &c * d;
                        let nc = match v.get(&key) {
                            Some(x) => x - &scaled,
                            None => -&scaled,
                        };
                        if nc.is_zero() {
                            v.remove(&key);
                        } else {
                            v.insert(key, nc);
                        }
                    }
                }
                None => {
                    let inv = c.inv().expect("nonzero pivot");
                    let row = v.iter().rev().map(|(k, d)| (k.0.clone(), d * &inv)).collect();
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }
}

// Monomial ordered by a monomial order, for use as a BTreeMap key.
#[derive(Clone)]
struct OrdKey(Monomial, MonomialOrder);

impl OrdKey {
    fn new(m: &Monomial, order: &MonomialOrder) -> Self {
        OrdKey(m.clone(), order.clone())
    }
}

impl PartialEq for OrdKey {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for OrdKey {}

impl PartialOrd for OrdKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.1.cmp(&self.0, &other.0)
    }
}

/// Graded Nakayama count `sum_d dim I_d - dim (M I)_d` for an ideal homogeneous
/// under the ring weights.
pub fn min_gens_graded(ideal: &Ideal) -> Result<MinimalGenerators> {
    let ctx = ideal.ctx();
    let mut by_degree: BTreeMap<u64, Vec<&Polynomial>> = BTreeMap::new();
    for g in ideal.gens() {
        match g.weighted_degree()? {
            WeightedDegree::Homogeneous(d) => by_degree.entry(d).or_default().push(g),
            WeightedDegree::Inhomogeneous => {
                return Err(Error::invalid(format!(
                    "generator {g} is not homogeneous for weights {:?}",
                    ctx.weights()
                )))
            }
        }
    }
    if by_degree.contains_key(&0) {
        // A nonzero constant generates the unit ideal, which needs one generator.
        return Ok(MinimalGenerators {
            count: 1,
            degrees: vec![0],
        });
    }
    let order = ctx.default_order();
    let mut degrees = Vec::new();
    for (&d, gens_d) in &by_degree {
        let mut span = Span::new(order.clone());
        for (&e, gens_e) in by_degree.range(..d) {
            for m in monomials_of_degree(ctx.weights(), d - e) {
                for g in gens_e {
                    span.insert(&g.mul_monomial(&m));
                }
            }
        }
        for g in gens_d {
            if span.insert(g) {
                degrees.push(d);
            }
        }
    }
    Ok(MinimalGenerators {
        count: degrees.len(),
        degrees,
    })
}

/// Monomials `m_1..m_s` in designated variables, grouped by their degree, with
/// a cutoff `d_max` for the standard-base identity.
#[derive(Clone, Debug)]
pub struct StandardBaseCase {
    ctx: Arc<RingContext>,
    vars: Vec<usize>,
    monomials: Vec<Monomial>,
    d_max: u32,
}

impl StandardBaseCase {
    pub fn new(
        ctx: &Arc<RingContext>,
        vars: &[&str],
        monomials: Vec<Monomial>,
        d_max: u32,
    ) -> Result<Self> {
        let vars = vars
            .iter()
            .map(|v| ctx.require_index(v))
            .collect::<Result<Vec<_>>>()?;
        if vars.is_empty() {
            return Err(Error::invalid("no designated variables"));
        }
        if monomials.is_empty() {
            return Err(Error::invalid("no monomials"));
        }
        if d_max > MAX_STANDARD_BASE_DEGREE {
            return Err(Error::invalid(format!(
                "d_max {d_max} exceeds the cap {MAX_STANDARD_BASE_DEGREE}"
            )));
        }
        for m in &monomials {
            if m.nvars() != ctx.nvars() {
                return Err(Error::ContextMismatch(format!("monomial has {} variables", m.nvars())));
            }
            if m.is_one() {
                return Err(Error::invalid("the monomial 1 is not allowed"));
            }
            if m.support().any(|i| !vars.contains(&i)) {
                return Err(Error::invalid("monomial uses a variable outside the designated set"));
            }
        }
        Ok(StandardBaseCase {
            ctx: ctx.clone(),
            vars,
            monomials,
            d_max,
        })
    }

    /// Parses monomials such as `x^2`, `x*y` in `ctx`.
    pub fn from_strs(ctx: &Arc<RingContext>, vars: &[&str], monomials: &[&str], d_max: u32) -> Result<Self> {
        let mut ms = Vec::with_capacity(monomials.len());
        for s in monomials {
            let p = crate::poly::parse_poly(s, ctx)?;
            match p.terms() {
                [(m, c)] if c.is_one() => ms.push(m.clone()),
                _ => return Err(Error::invalid(format!("`{s}` is not a monomial"))),
            }
        }
        Self::new(ctx, vars, ms, d_max)
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn d_max(&self) -> u32 {
        self.d_max
    }

    /// Degree `alpha_i` of each monomial.
    pub fn degrees(&self) -> Vec<u32> {
        self.monomials.iter().map(|m| m.total_degree() as u32).collect()
    }

    /// Strictly increasing distinct degrees `delta_1 < ... < delta_t`.
    pub fn distinct_degrees(&self) -> Vec<u32> {
        let mut d = self.degrees();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `(delta_j, J_j)` where `J_j` is generated by the monomials of degree `delta_j`.
    pub fn groups(&self) -> Vec<(u32, Ideal)> {
        let one = self.ctx.field().one();
        self.distinct_degrees()
            .into_iter()
            .map(|delta| {
                let gens = self
                    .monomials
                    .iter()
                    .filter(|m| m.total_degree() as u32 == delta)
                    .map(|m| Polynomial::monomial(&self.ctx, m.clone(), one.clone()))
                    .collect();
                (delta, Ideal::new(&self.ctx, gens).expect("same ring"))
            })
            .collect()
    }

    pub fn ideal(&self) -> Ideal {
        let one = self.ctx.field().one();
        let gens = self
            .monomials
            .iter()
            .map(|m| Polynomial::monomial(&self.ctx, m.clone(), one.clone()))
            .collect();
        Ideal::new(&self.ctx, gens).expect("same ring")
    }

    pub fn designated_ideal(&self) -> Ideal {
        Ideal::of_variables(&self.ctx, &self.vars)
    }
}

/// Checks `J ∩ I^d = J_1 I^(d-δ_1) + ... + J_t I^(d-δ_t)` for each `0 <= d <= d_max`,
/// with `I^r = R` for `r <= 0`. Returns the outcome per `d`.
pub fn standard_base_levels(case: &StandardBaseCase) -> Result<Vec<(u32, bool)>> {
    let i = case.designated_ideal();
    let j = case.ideal();
    let groups = case.groups();
    let mut powers: Vec<Ideal> = vec![Ideal::unit(case.ctx())];
    for _ in 0..case.d_max {
        let next = powers.last().unwrap().product(&i)?.reduced()?;
        powers.push(next);
    }
    let mut out = Vec::with_capacity(case.d_max as usize + 1);
    for d in 0..=case.d_max {
        let lhs = j.intersect(&powers[d as usize])?;
        let mut rhs = Ideal::zero(case.ctx());
        for (delta, jj) in &groups {
            let k = d.saturating_sub(*delta) as usize;
            rhs = rhs.sum(&jj.product(&powers[k])?)?;
        }
        out.push((d, lhs.equals(&rhs)?));
    }
    Ok(out)
}

pub fn standard_base_check(case: &StandardBaseCase) -> Result<bool> {
    Ok(standard_base_levels(case)?.iter().all(|&(_, ok)| ok))
}

/// For `F` homogeneous of degree `d` in the `slack` variables: if
/// `F(z) ∈ I^(d+i)` then every coefficient of `F` lies in `I^i`. Returns the
/// truth of that implication. `z` and `ideal` live in the coefficient ring
/// (the ring of `F` minus the slack variables, matched by name).
pub fn rees_coefficient_check(
    f: &Polynomial,
    slack: &[&str],
    z: &[Polynomial],
    ideal: &Ideal,
    i: u32,
) -> Result<bool> {
    if slack.len() != z.len() {
        return Err(Error::invalid(format!(
            "{} slack variables but {} values",
            slack.len(),
            z.len()
        )));
    }
    let fctx = f.ctx();
    let base = ideal.ctx();
    let slack_idx = slack
        .iter()
        .map(|s| fctx.require_index(s))
        .collect::<Result<Vec<_>>>()?;
    let base_idx: Vec<usize> = (0..fctx.nvars()).filter(|k| !slack_idx.contains(k)).collect();
    for &k in &base_idx {
        base.require_index(fctx.name(k))?;
    }
    if f.is_zero() {
        return Ok(true);
    }
    // Coefficients of F grouped by slack monomial.
    let mut coeffs: BTreeMap<Vec<u32>, Vec<(Monomial, Coeff)>> = BTreeMap::new();
    let mut degree = None;
    for (m, c) in f.terms() {
        let zexp: Vec<u32> = slack_idx.iter().map(|&k| m.exponent(k)).collect();
        let dz: u32 = zexp.iter().sum();
        if *degree.get_or_insert(dz) != dz {
            return Err(Error::invalid(format!("{f} is not homogeneous in the slack variables")));
        }
        let mut bexp = vec![0u32; base.nvars()];
        for &k in &base_idx {
            bexp[base.index_of(fctx.name(k)).unwrap()] = m.exponent(k);
        }
        coeffs
            .entry(zexp)
            .or_default()
            .push((Monomial::from_exponents(&bexp), base.field().convert(c)?));
    }
    let d = degree.unwrap();
    let assignments: Vec<(&str, Polynomial)> = slack.iter().copied().zip(z.iter().cloned()).collect();
    let fz = f.substitute(&assignments)?.map_into(base)?;
    if !ideal.pow(d + i)?.contains(&fz)? {
        return Ok(true);
    }
    let target = ideal.pow(i)?;
    for terms in coeffs.into_values() {
        if !target.contains(&Polynomial::from_terms(base, terms))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A 2×3 matrix (the transpose of the second map of a Hilbert-Burch
/// resolution), the row of signed minors spanning its kernel, and the ideal the
/// minors should generate.
#[derive(Clone, Debug)]
pub struct HilbertBurchWitness {
    pub matrix: [[Polynomial; 3]; 2],
    pub signed_minors: [Polynomial; 3],
    pub target: Ideal,
}

/// 2×2 minor of `m` on columns `i < j`.
pub fn minor(m: &[[Polynomial; 3]; 2], i: usize, j: usize) -> Polynomial {
    &(&m[0][i] * &m[1][j]) - &(&m[0][j] * &m[1][i])
}

impl HilbertBurchWitness {
    /// Witness with the cofactor row `(Δ23, -Δ13, Δ12)`.
    pub fn from_matrix(matrix: [[Polynomial; 3]; 2], target: Ideal) -> Result<Self> {
        let signed = [minor(&matrix, 1, 2), -&minor(&matrix, 0, 2), minor(&matrix, 0, 1)];
        Self::new(matrix, signed, target)
    }

    /// Witness with an explicit row; each entry must be `±` the complementary minor.
    pub fn new(matrix: [[Polynomial; 3]; 2], signed_minors: [Polynomial; 3], target: Ideal) -> Result<Self> {
        let ctx = target.ctx();
        for e in matrix.iter().flatten().chain(signed_minors.iter()) {
            if !e.ctx().same_as(ctx) {
                return Err(Error::ContextMismatch(format!("{e} is not in {ctx}")));
            }
        }
        let complementary = [minor(&matrix, 1, 2), minor(&matrix, 0, 2), minor(&matrix, 0, 1)];
        for (s, c) in signed_minors.iter().zip(&complementary) {
            if s != c && *s != -c {
                return Err(Error::invalid(format!("{s} is not ± the minor {c}")));
            }
        }
        Ok(HilbertBurchWitness {
            matrix,
            signed_minors,
            target,
        })
    }

    pub fn minors_ideal(&self) -> Ideal {
        let gens = vec![minor(&self.matrix, 0, 1), minor(&self.matrix, 0, 2), minor(&self.matrix, 1, 2)];
        Ideal::new(self.target.ctx(), gens).expect("same ring")
    }
}

/// Checks the five Hilbert-Burch clauses: syzygy, minors generate the target,
/// target has codim 2, minors of the matrix have codim at least 2, and no
/// matrix entry is a nonzero constant.
pub fn hilbert_burch_certify(w: &HilbertBurchWitness) -> Result<CertReport> {
    let field = w.target.ctx().field().to_string();
    let mut clauses = Vec::with_capacity(5);

    let products: Vec<Polynomial> = w
        .matrix
        .iter()
        .map(|row| {
            row.iter()
                .zip(&w.signed_minors)
                .fold(Polynomial::zero(w.target.ctx()), |acc, (a, b)| &acc + &(a * b))
        })
        .collect();
    let syz = products.iter().all(Polynomial::is_zero);
    clauses.push(Clause::new(
        "syzygy",
        syz,
        format!("psi1*psi2 = ({}, {})", products[0], products[1]),
    ));

    let minors = w.minors_ideal();
    let row = Ideal::new(w.target.ctx(), w.signed_minors.to_vec())?;
    let eq_minors = minors.equals(&w.target)?;
    let eq_row = row.equals(&w.target)?;
    clauses.push(Clause::new(
        "minors-generate-target",
        eq_minors && eq_row,
        format!("I2(matrix)=target: {eq_minors}; (psi1)=target: {eq_row}"),
    ));

    let target_codim = if w.target.is_unit()? { None } else { Some(codim(&w.target)?) };
    clauses.push(Clause::new(
        "target-codim-2",
        target_codim == Some(2),
        match target_codim {
            Some(c) => format!("codim {c}"),
            None => "unit ideal".to_string(),
        },
    ));

    let minors_codim = if minors.is_unit()? {
        w.target.ctx().nvars()
    } else {
        codim(&minors)?
    };
    clauses.push(Clause::new(
        "rank-condition",
        minors_codim >= 2,
        format!("codim I2(psi2) = {minors_codim}"),
    ));

    let units: Vec<String> = w
        .matrix
        .iter()
        .flatten()
        .filter(|e| e.is_unit())
        .map(|e| e.to_string())
        .collect();
    clauses.push(Clause::new(
        "minimality",
        units.is_empty(),
        if units.is_empty() {
            "no unit entries".to_string()
        } else {
            format!("unit entries: {}", units.join(", "))
        },
    ));

    Ok(CertReport::new("hilbert-burch", field, clauses, Verdict::Certified))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffField;
    use crate::poly::parse_poly;

    fn ring(names: &[&str]) -> Arc<RingContext> {
        RingContext::new(names, CoeffField::Rationals).unwrap()
    }

    fn weighted(names: &[&str], w: &[u32]) -> Arc<RingContext> {
        RingContext::with_weights(names, w, CoeffField::Rationals).unwrap()
    }

    fn ideal(ctx: &Arc<RingContext>, gens: &[&str]) -> Ideal {
        Ideal::from_strs(ctx, gens).unwrap()
    }

    // Brute-force count of monomials x^i y^j outside a monomial ideal given by exponent pairs.
    fn staircase_oracle(gens: &[(u32, u32)], bound: u32) -> u64 {
        let mut n = 0;
        for i in 0..bound {
            for j in 0..bound {
                if !gens.iter().any(|&(a, b)| a <= i && b <= j) {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn dimensions() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(krull_dim(&Ideal::zero(&r)).unwrap(), 3);
        assert_eq!(krull_dim(&ideal(&r, &["x", "y", "z"])).unwrap(), 0);
        let c = weighted(&["x", "y", "z"], &[3, 4, 5]);
        let hn = ideal(&c, &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]);
        assert_eq!(krull_dim(&hn).unwrap(), 1);
        assert_eq!(codim(&hn).unwrap(), 2);
        assert!(krull_dim(&Ideal::unit(&r)).is_err());
        assert_eq!(max_independent_set(&ideal(&r, &["x*y"])).unwrap(), vec![0, 2]);
    }

    #[test]
    fn lengths() {
        let r = ring(&["x", "y"]);
        assert_eq!(length_artinian(&ideal(&r, &["x", "y"])).unwrap(), 1);
        assert_eq!(length_artinian(&ideal(&r, &["x^2", "y^3", "x*y^2"])).unwrap(), 5);
        assert_eq!(staircase_oracle(&[(2, 0), (0, 3), (1, 2)], 10), 5);
        assert!(length_artinian(&ideal(&r, &["x^2"])).is_err());
        assert_eq!(length_artinian(&Ideal::unit(&r)).unwrap(), 0);
        let c = weighted(&["x", "y", "z"], &[3, 4, 5]);
        let cut = ideal(&c, &["x", "x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]);
        assert_eq!(length_artinian(&cut).unwrap(), 3);
    }

    #[test]
    fn length_of_non_monomial_quotient() {
        // k[x,y]/(x^2 - y, y^2): basis 1, x, y, xy.
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - y", "y^2"]);
        assert_eq!(length_artinian(&i).unwrap(), 4);
        assert_eq!(length_artinian_with(&i, &MonomialOrder::Lex).unwrap(), 4);
    }

    #[test]
    fn length_formula_cases() {
        for (p, q, r, s) in [(2, 3, 1, 2), (2, 2, 1, 1)] {
            let case = LengthFormulaCase::new(p, q, r, s).unwrap();
            assert!(verify_length_formula(&case).unwrap());
        }
        assert_eq!(LengthFormulaCase::new(2, 3, 1, 2).unwrap().predicted(), 5);
        assert!(LengthFormulaCase::new(2, 2, 2, 1).is_err());
        assert!(LengthFormulaCase::new(2, 2, 0, 1).is_err());
        let all = LengthFormulaCase::all_up_to(4, 4);
        assert_eq!(all.len(), 36);
        for case in &all {
            let oracle = staircase_oracle(&[(case.p, 0), (0, case.q), (case.r, case.s)], 8);
            assert_eq!(length_formula_lhs(case).unwrap(), oracle);
            assert_eq!(oracle, case.predicted());
        }
    }

    #[test]
    fn minimal_generators() {
        let c = weighted(&["x", "y", "z"], &[3, 4, 5]);
        let hn = ideal(&c, &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]);
        let mg = min_gens_graded(&hn).unwrap();
        assert_eq!(mg.count, 3);
        let mut d = mg.degrees.clone();
        d.sort();
        assert_eq!(d, vec![8, 9, 10]);

        let r = ring(&["x", "y", "z"]);
        let m = ideal(&r, &["x", "y", "z", "x*y", "x + y"]);
        assert_eq!(min_gens_graded(&m).unwrap(), MinimalGenerators { count: 3, degrees: vec![1, 1, 1] });
        assert!(min_gens_graded(&ideal(&r, &["x - y^2"])).is_err());

        let a = ring(&["x", "y", "z", "t"]);
        let i = ideal(&a, &["x^2 - y*z", "y^2 - x*z", "z^2 - x*y", "x*z^2 - y^2*z"]);
        assert_eq!(min_gens_graded(&i).unwrap().count, 3);
    }

    #[test]
    fn standard_base_examples() {
        let r = ring(&["x", "y"]);
        let case = StandardBaseCase::from_strs(&r, &["x", "y"], &["x^2", "y^3", "x*y"], 2).unwrap();
        assert_eq!(case.distinct_degrees(), vec![2, 3]);
        assert!(standard_base_check(&case).unwrap());
        let case4 = StandardBaseCase::from_strs(&r, &["x", "y"], &["x^2", "y^3", "x*y"], 4).unwrap();
        assert_eq!(standard_base_levels(&case4).unwrap().len(), 5);
        assert!(standard_base_check(&case4).unwrap());
        let square = StandardBaseCase::from_strs(&r, &["x", "y"], &["x^2", "x*y", "y^2"], 5).unwrap();
        assert!(standard_base_check(&square).unwrap());
        let zero = StandardBaseCase::from_strs(&r, &["x", "y"], &["x"], 0).unwrap();
        assert_eq!(standard_base_levels(&zero).unwrap(), vec![(0, true)]);
        assert!(StandardBaseCase::from_strs(&r, &["x"], &["y"], 2).is_err());
        assert!(StandardBaseCase::from_strs(&r, &["x"], &["1"], 2).is_err());
        assert!(StandardBaseCase::from_strs(&r, &["x"], &["2*x"], 2).is_err());
        assert!(StandardBaseCase::from_strs(&r, &["x"], &["x"], 13).is_err());
    }

    #[test]
    fn rees_check_examples() {
        let fz = ring(&["x", "y", "Z1", "Z2"]);
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x", "y"]);
        let z = vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()];
        let f = parse_poly("x*Z1", &fz).unwrap();
        assert!(rees_coefficient_check(&f, &["Z1", "Z2"], &z, &i, 1).unwrap());
        let zero = parse_poly("Z1*Z2 - Z2*Z1", &fz).unwrap();
        assert!(rees_coefficient_check(&zero, &["Z1", "Z2"], &z, &i, 1).unwrap());
        // F = y*Z1 - x*Z2 has F(z) = 0 in every power but coefficients only in I^1.
        let koszul = parse_poly("y*Z1 - x*Z2", &fz).unwrap();
        assert!(rees_coefficient_check(&koszul, &["Z1", "Z2"], &z, &i, 1).unwrap());
        assert!(!rees_coefficient_check(&koszul, &["Z1", "Z2"], &z, &i, 2).unwrap());
        let inhom = parse_poly("Z1 + Z1*Z2", &fz).unwrap();
        assert!(rees_coefficient_check(&inhom, &["Z1", "Z2"], &z, &i, 1).is_err());
    }

    #[test]
    fn hilbert_burch_examples() {
        let c = weighted(&["x", "y", "z"], &[3, 4, 5]);
        let p = |s: &str| parse_poly(s, &c).unwrap();
        let matrix = [[p("x"), p("y"), p("z")], [p("y"), p("z"), p("x^2")]];
        let target = ideal(&c, &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]);
        let w = HilbertBurchWitness::from_matrix(matrix.clone(), target.clone()).unwrap();
        let rep = hilbert_burch_certify(&w).unwrap();
        assert_eq!(rep.verdict, Verdict::Certified, "{rep:?}");
        assert_eq!(rep.clauses.len(), 5);

        let r = ring(&["x", "y", "z"]);
        let q = |s: &str| parse_poly(s, &r).unwrap();
        let unit = [[q("1"), q("0"), q("0")], [q("0"), q("x"), q("y")]];
        let t = ideal(&r, &["x", "y"]);
        let rep = hilbert_burch_certify(&HilbertBurchWitness::from_matrix(unit, t).unwrap()).unwrap();
        assert_eq!(rep.verdict, Verdict::Failed);
        assert!(!rep.clause("minimality").unwrap().pass);
        assert!(rep.clause("syzygy").unwrap().pass);

        let wrong = [p("x^3 - y*z"), p("y^2 - x*z"), p("z^2 - x^2*y")];
        assert!(HilbertBurchWitness::new(matrix, wrong, target).is_err());
    }
}
