use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::context::RingContext;
use crate::poly::monomial::Monomial;
use crate::poly::order::MonomialOrder;

pub type Term = (Monomial, Coeff);

/// Sparse polynomial over the field of its ring context.
///
/// Terms are stored without zero coefficients, sorted in descending default
/// order of the context, so structural equality is polynomial equality.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ctx: Arc<RingContext>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

/// Result of [`Polynomial::weighted_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    Homogeneous(u64),
    Inhomogeneous,
}

/// Sorts descending under `order`, merges equal monomials and drops zeros.
pub(crate) fn normalize_terms(mut terms: Vec<Term>, order: &MonomialOrder) -> Vec<Term> {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
            _ => out.push((m, c)),
        }
        if out.last().is_some_and(|(_, c)| c.is_zero()) {
            out.pop();
        }
    }
    out
}

/// Merges two term lists sorted descending under `order`, computing `a + b`.
pub(crate) fn merge_add(a: &[Term], b: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 + &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Polynomial {
    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: &Arc<RingContext>, c: Coeff) -> Self {
        Self::from_terms(ctx, vec![(Monomial::one(ctx.nvars()), c)])
    }

    pub fn one(ctx: &Arc<RingContext>) -> Self {
        Self::constant(ctx, ctx.field().one())
    }

    pub fn from_i64(ctx: &Arc<RingContext>, n: i64) -> Self {
        Self::constant(ctx, ctx.field().from_i64(n))
    }

    pub fn var(ctx: &Arc<RingContext>, name: &str) -> Result<Self> {
        let i = ctx.require_index(name)?;
        Ok(Self::var_at(ctx, i))
    }

    pub fn var_at(ctx: &Arc<RingContext>, i: usize) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Monomial::var(ctx.nvars(), i), ctx.field().one())],
        }
    }

    pub fn monomial(ctx: &Arc<RingContext>, m: Monomial, c: Coeff) -> Self {
        Self::from_terms(ctx, vec![(m, c)])
    }

    /// Builds from arbitrary terms; like monomials are combined.
    pub fn from_terms(ctx: &Arc<RingContext>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .iter()
            .all(|(m, c)| m.nvars() == ctx.nvars() && ctx.field().contains(c)));
        Polynomial {
            ctx: ctx.clone(),
            terms: normalize_terms(terms, &ctx.default_order()),
        }
    }

    /// Builds from terms already sorted by the context's default order and free of zeros.
    pub(crate) fn from_sorted_terms(ctx: &Arc<RingContext>, terms: Vec<Term>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    /// Terms in descending default order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms sorted descending under an arbitrary order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<Term> {
        if *order == self.ctx.default_order() {
            return self.terms.clone();
        }
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<&Term> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.ctx, other.ctx
            )))
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let terms = merge_add(&self.terms, &other.terms, &self.ctx.default_order());
        Ok(Self::from_sorted_terms(&self.ctx, terms))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e = &*e + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_terms(
            &self.ctx,
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        ))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self::from_sorted_terms(
            &self.ctx,
            self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        )
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Self::from_sorted_terms(
            &self.ctx,
            self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn weighted_degree_with(&self, weights: &[u32]) -> Result<WeightedDegree> {
        let mut degs = self.terms.iter().map(|(m, _)| m.weighted_degree(weights));
        let first = degs
            .next()
            .ok_or_else(|| Error::invalid("degree of the zero polynomial is undefined"))?;
        if degs.all(|d| d == first) {
            Ok(WeightedDegree::Homogeneous(first))
        } else {
            Ok(WeightedDegree::Inhomogeneous)
        }
    }

    /// Common weighted degree of all terms under the context weights.
    pub fn weighted_degree(&self) -> Result<WeightedDegree> {
        self.weighted_degree_with(self.ctx.weights())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero()
            || matches!(self.weighted_degree(), Ok(WeightedDegree::Homogeneous(_)))
    }

    /// Highest weighted degree of a term.
    pub fn max_weighted_degree(&self) -> Option<u64> {
        self.terms
            .iter()
            .map(|(m, _)| m.weighted_degree(self.ctx.weights()))
            .max()
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ctx(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.ctx.default_order();
        let (glm, glc) = &g.terms[0];
        let ginv = glc.inv()?;
        let mut rest = self.terms.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.first() {
            let Some(qm) = m.div(glm) else {
                return Ok(None);
            };
            let qc = c * &ginv;
            let sub: Vec<Term> = g
                .terms
                .iter()
                .map(|(t, d)| (t.mul(&qm), -&(d * &qc)))
                .collect();
            rest = merge_add(&rest, &sub, &order);
            quotient.push((qm, qc));
        }
        Ok(Some(Self::from_sorted_terms(&self.ctx, quotient)))
    }

    /// Re-expresses the polynomial in another ring by matching variable names;
    /// coefficients are mapped into the target field.
    pub fn map_into(&self, target: &Arc<RingContext>) -> Result<Polynomial> {
        let mut pos = Vec::with_capacity(self.ctx.nvars());
        for name in self.ctx.names() {
            pos.push(target.index_of(name));
        }
        let field = target.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match pos[i] {
                    Some(j) => e[j] = x,
                    None => {
                        return Err(Error::ContextMismatch(format!(
                            "variable `{}` does not exist in {target}",
                            self.ctx.name(i)
                        )))
                    }
                }
            }
            terms.push((Monomial::from_exponents(&e), field.convert(c)?));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Simultaneous substitution of variables by polynomials.
    ///
    /// All images must share one ring context, which becomes the ring of the
    /// result; variables without an image are mapped to the same-named variable
    /// of that ring. With no assignments the result is `self`.
    pub fn substitute(&self, assignments: &[(&str, Polynomial)]) -> Result<Polynomial> {
        let Some((_, first)) = assignments.first() else {
            return Ok(self.clone());
        };
        let target = first.ctx.clone();
        let mut images: Vec<Option<Polynomial>> = vec![None; self.ctx.nvars()];
        for (name, img) in assignments {
            if !img.ctx.same_as(&target) {
                return Err(Error::ContextMismatch(
                    "substitution images live in different rings".into(),
                ));
            }
            let i = self.ctx.require_index(name)?;
            images[i] = Some(img.clone());
        }
        for (i, slot) in images.iter_mut().enumerate() {
            if slot.is_none() {
                let used = self.terms.iter().any(|(m, _)| m.exponent(i) > 0);
                if used {
                    *slot = Some(Polynomial::var(&target, self.ctx.name(i))?);
                }
            }
        }
        let field = target.field();
        // powers[i][k] = image_i^k, filled on demand
        let mut powers: Vec<Vec<Polynomial>> =
            vec![vec![Polynomial::one(&target)]; self.ctx.nvars()];
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, field.convert(c)?);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[i].as_ref().expect("image for used variable");
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * img;
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Renders with terms in descending `order`.
    pub fn format_with(&self, order: &MonomialOrder) -> String {
        crate::poly::parse::format_terms(&self.ctx, &self.sorted_terms(order))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::poly::parse::format_terms(&self.ctx, &self.terms))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_sorted_terms(
            &self.ctx,
            self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        )
    }
}
