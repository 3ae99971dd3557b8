//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod ideal;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, RingContext, Term};

pub use ideal::Ideal;

pub(crate) use buchberger::Budget;

/// Default cap on reduction steps per Buchberger run.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

static STEP_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_STEP_BUDGET);
static AUDIT_ENABLED: AtomicBool = AtomicBool::new(false);
static AUDITED: AtomicU64 = AtomicU64::new(0);
static AUDIT_FAILURES: AtomicU64 = AtomicU64::new(0);

/// Sets the process-wide reduction step budget for subsequent Buchberger runs.
pub fn set_step_budget(steps: u64) {
    STEP_BUDGET.store(steps, AtomicOrdering::Relaxed);
}

pub fn step_budget() -> u64 {
    STEP_BUDGET.load(AtomicOrdering::Relaxed)
}

/// Counters of the post-hoc S-pair audit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuditStats {
    pub audited: u64,
    pub failures: u64,
}

/// When enabled, every basis returned by [`buchberger`] is re-checked against
/// Buchberger's criterion and the outcome is tallied in [`audit_stats`].
pub fn set_audit(enabled: bool) {
    AUDIT_ENABLED.store(enabled, AtomicOrdering::Relaxed);
}

pub fn audit_stats() -> AuditStats {
    AuditStats {
        audited: AUDITED.load(AtomicOrdering::Relaxed),
        failures: AUDIT_FAILURES.load(AtomicOrdering::Relaxed),
    }
}

/// Reduced Gröbner basis of an ideal under a fixed order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ctx: Arc<RingContext>,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    // Elements as term vectors sorted descending under `order`.
    sorted: Vec<Vec<Term>>,
    reduced: bool,
    steps: u64,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

/// Computes the reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    let ctx = ideal.ctx().clone();
    let gens: Vec<Vec<Term>> = ideal.gens().iter().map(|g| g.sorted_terms(order)).collect();
    let (sorted, steps) = buchberger::reduced_basis(gens, order, ctx.weights(), step_budget())?;
    let gb = GroebnerBasis::from_sorted(ctx, order.clone(), sorted, steps);
    if cfg!(test) || AUDIT_ENABLED.load(AtomicOrdering::Relaxed) {
        let ok = gb.audit();
        AUDITED.fetch_add(1, AtomicOrdering::Relaxed);
        if !ok {
            AUDIT_FAILURES.fetch_add(1, AtomicOrdering::Relaxed);
        }
        debug_assert!(ok, "Buchberger criterion violated");
    }
    Ok(gb)
}

/// Remainder of `f` modulo the basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

impl GroebnerBasis {
    fn from_sorted(
        ctx: Arc<RingContext>,
        order: MonomialOrder,
        sorted: Vec<Vec<Term>>,
        steps: u64,
    ) -> Self {
        let elements = sorted
            .iter()
            .map(|t| Polynomial::from_terms(&ctx, t.clone()))
            .collect();
        GroebnerBasis {
            ctx,
            order,
            elements,
            sorted,
            reduced: true,
            steps,
        }
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Monic elements in descending order of leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Reduction steps spent computing this basis.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t[0].0.clone()).collect()
    }

    /// True when the basis generates the whole ring.
    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|t| t[0].0.is_one())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ctx().same_as(&self.ctx) {
            return Err(Error::ContextMismatch(format!(
                "{} vs {}",
                f.ctx(),
                self.ctx
            )));
        }
        let basis: Vec<&[Term]> = self.sorted.iter().map(|t| t.as_slice()).collect();
        let r = buchberger::reduce(
            &f.sorted_terms(&self.order),
            &basis,
            &self.order,
            &mut Budget::unlimited(),
        )?;
        Ok(Polynomial::from_terms(&self.ctx, r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Re-checks Buchberger's criterion and the reduced shape.
    pub fn audit(&self) -> bool {
        buchberger::satisfies_criterion(&self.sorted, &self.order)
            && (!self.reduced || buchberger::is_reduced_shape(&self.sorted))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffField;
    use crate::poly::parse_poly;

    fn ring(names: &[&str]) -> Arc<RingContext> {
        RingContext::new(names, CoeffField::Rationals).unwrap()
    }

    fn ideal(ctx: &Arc<RingContext>, gens: &[&str]) -> Ideal {
        Ideal::from_strs(ctx, gens).unwrap()
    }

    #[test]
    fn hand_computed_lex_basis() {
        let r = ring(&["x", "y", "z"]);
        let gb = buchberger(&ideal(&r, &["x - y", "x - z"]), &MonomialOrder::Lex).unwrap();
        let got: Vec<String> = gb
            .elements()
            .iter()
            .map(|p| p.format_with(&MonomialOrder::Lex))
            .collect();
        assert_eq!(got, vec!["x - z", "y - z"]);
        assert!(gb.audit());
    }

    #[test]
    fn single_generator_becomes_monic() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&ideal(&r, &["3*x^2 - 6*y"]), &r.default_order()).unwrap();
        assert_eq!(gb.elements(), &[parse_poly("x^2 - 2*y", &r).unwrap()]);
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y", "z"]);
        let gb = buchberger(&ideal(&r, &["x^3 - y*z"]), &r.default_order()).unwrap();
        assert!(gb.normal_form(&parse_poly("x^3 - y*z", &r).unwrap()).unwrap().is_zero());
        assert_eq!(
            gb.normal_form(&Polynomial::one(&r)).unwrap(),
            Polynomial::one(&r)
        );
        let other = ring(&["x"]);
        assert!(gb.normal_form(&Polynomial::one(&other)).is_err());
    }

    #[test]
    fn step_budget_is_enforced() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x^5 - y*z^3", "y^4 - x^2*z", "z^5 - x*y^2 + x^3"]);
        // Call the engine directly so the process-wide budget stays untouched.
        let gens = i
            .gens()
            .iter()
            .map(|g| g.sorted_terms(&MonomialOrder::Lex))
            .collect();
        let e = buchberger::reduced_basis(gens, &MonomialOrder::Lex, r.weights(), 5).unwrap_err();
        assert_eq!(e, Error::Resource { budget: 5 });
    }

    #[test]
    fn unit_ideal_basis() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&ideal(&r, &["x", "x + 1"]), &r.default_order()).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.len(), 1);
    }
}
