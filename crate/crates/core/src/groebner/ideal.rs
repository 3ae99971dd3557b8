use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::poly::{parse_poly, MonomialOrder, Polynomial, RingContext};

/// Colon iterations allowed before [`Ideal::saturate`] gives up.
const SATURATION_LIMIT: usize = 64;

/// Ideal given by generators in one ring; zero generators are dropped.
///
/// The reduced basis under the default order of the ring is computed lazily
/// and cached.
#[derive(Clone)]
pub struct Ideal {
    ctx: Arc<RingContext>,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    pub fn new(ctx: &Arc<RingContext>, gens: Vec<Polynomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| !g.ctx().same_as(ctx)) {
            return Err(Error::ContextMismatch(format!(
                "generator {g} is not in {ctx}"
            )));
        }
        Ok(Ideal {
            ctx: ctx.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn from_strs(ctx: &Arc<RingContext>, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| parse_poly(s, ctx))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, polys)
    }

    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Ideal {
            ctx: ctx.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ctx: &Arc<RingContext>) -> Self {
        Self::new(ctx, vec![Polynomial::one(ctx)]).expect("same ring")
    }

    /// The ideal generated by the variables at `indices`.
    pub fn of_variables(ctx: &Arc<RingContext>, indices: &[usize]) -> Self {
        let gens = indices.iter().map(|&i| Polynomial::var_at(ctx, i)).collect();
        Self::new(ctx, gens).expect("same ring")
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.ctx, other.ctx
            )))
        }
    }

    /// Reduced Gröbner basis under the default order of the ring (cached).
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(self, &self.ctx.default_order())?;
        Ok(self.gb.get_or_init(|| gb))
    }

    pub fn groebner_with(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        if *order == self.ctx.default_order() {
            return self.groebner().cloned();
        }
        buchberger(self, order)
    }

    /// The same ideal presented by its reduced basis.
    pub fn reduced(&self) -> Result<Ideal> {
        let gb = self.groebner()?;
        let out = Ideal::new(&self.ctx, gb.elements().to_vec())?;
        let _ = out.gb.set(gb.clone());
        Ok(out)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    /// Ideal membership: `f` reduces to zero modulo the basis.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner()?.contains(f)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals: identical reduced bases under the default order.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.groebner()?.elements() == other.groebner()?.elements())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ctx, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ctx, gens)
    }

    /// `k`-th power, with `I^0 = R`.
    pub fn pow(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ctx);
        for _ in 0..k {
            acc = acc.product(self)?.reduced()?;
        }
        Ok(acc)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn map_into(&self, target: &Arc<RingContext>) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_into(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Intersection with the subring of the variables not in `vars`, computed
    /// from a basis under an elimination order. The result lives in the ring
    /// with those variables dropped.
    pub fn eliminate(&self, vars: &[&str]) -> Result<Ideal> {
        let mut idx = Vec::with_capacity(vars.len());
        for v in vars {
            let i = self.ctx.require_index(v)?;
            if !idx.contains(&i) {
                idx.push(i);
            }
        }
        if idx.is_empty() {
            return Ok(self.clone());
        }
        let perm: Vec<usize> = idx
            .iter()
            .copied()
            .chain((0..self.ctx.nvars()).filter(|i| !idx.contains(i)))
            .collect();
        let elim_ctx = self.ctx.permuted(&perm);
        let order = MonomialOrder::elimination(elim_ctx.weights(), idx.len());
        let gb = buchberger(&self.map_into(&elim_ctx)?, &order)?;
        let sub = self.ctx.without(&idx);
        let k = idx.len();
        let kept = gb
            .elements()
            .iter()
            .filter(|g| {
                g.terms()
                    .iter()
                    .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
            })
            .map(|g| g.map_into(&sub))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&sub, kept)
    }

    /// `I ∩ J` as the elimination of `t` from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ctx));
        }
        let t = self.ctx.fresh_name("t");
        let ext = self.ctx.extend(&[(t.as_str(), 1)])?;
        let tv = Polynomial::var(&ext, &t)?;
        let one_minus_t = &Polynomial::one(&ext) - &tv;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&tv * &f.map_into(&ext)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.map_into(&ext)?);
        }
        Ideal::new(&ext, gens)?
            .eliminate(&[t.as_str()])?
            .map_into(&self.ctx)
    }

    /// `I : f = { g : g·f ∈ I }`, via `(I ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::invalid("colon by the zero polynomial"));
        }
        if !f.ctx().same_as(&self.ctx) {
            return Err(Error::ContextMismatch(format!("{f} is not in {}", self.ctx)));
        }
        if f.is_unit() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ctx, vec![f.clone()])?;
        let inter = self.intersect(&principal)?;
        let mut quotients = Vec::with_capacity(inter.gens.len());
        for g in &inter.gens {
            let q = g.div_exact(f)?.ok_or_else(|| {
                Error::Inconsistency(format!("{g} in (f) is not divisible by {f}"))
            })?;
            quotients.push(q);
        }
        Ideal::new(&self.ctx, quotients)?.reduced()
    }

    /// `I : f^∞`, iterating the colon until it stabilizes.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        let mut cur = self.reduced()?;
        for _ in 0..SATURATION_LIMIT {
            let next = cur.colon(f)?;
            if next.equals(&cur)? {
                return Ok(next);
            }
            cur = next;
        }
        Err(Error::Inconsistency(format!(
            "saturation did not stabilize after {SATURATION_LIMIT} steps"
        )))
    }

    /// Monomial ideal of leading monomials of the reduced basis under `order`.
    pub fn leading_term_ideal(&self, order: &MonomialOrder) -> Result<Ideal> {
        if self.is_zero() {
            return Ok(Ideal::zero(&self.ctx));
        }
        let gb = self.groebner_with(order)?;
        let one = self.ctx.field().one();
        let gens = gb
            .leading_monomials()
            .into_iter()
            .map(|m| Polynomial::monomial(&self.ctx, m, one.clone()))
            .collect();
        Ideal::new(&self.ctx, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffField;

    fn ring(names: &[&str]) -> Arc<RingContext> {
        RingContext::new(names, CoeffField::Rationals).unwrap()
    }

    fn ideal(ctx: &Arc<RingContext>, gens: &[&str]) -> Ideal {
        Ideal::from_strs(ctx, gens).unwrap()
    }

    fn p(ctx: &Arc<RingContext>, s: &str) -> Polynomial {
        parse_poly(s, ctx).unwrap()
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["t", "x", "y", "z"]);
        let curve = ideal(&r, &["x - t^3", "y - t^4", "z - t^5"]);
        let k = curve.eliminate(&["t"]).unwrap();
        assert_eq!(k.ctx().names(), &["x", "y", "z"]);
        let expected = ideal(k.ctx(), &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]);
        assert!(k.equals(&expected).unwrap());

        let r2 = ring(&["t", "x", "y"]);
        let par = ideal(&r2, &["x - t", "y - t^2"]);
        let k2 = par.eliminate(&["t"]).unwrap();
        assert!(k2.equals(&ideal(k2.ctx(), &["y - x^2"])).unwrap());

        assert!(curve.eliminate(&[]).unwrap().equals(&curve).unwrap());
        assert!(curve.eliminate(&["nope"]).is_err());
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(i.equals(&ideal(&r, &["x*y"])).unwrap());
        assert!(ideal(&r, &["x"])
            .intersect(&Ideal::zero(&r))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "x*y"]);
        assert!(i.colon(&p(&r, "x")).unwrap().equals(&ideal(&r, &["x", "y"])).unwrap());
        assert!(i.colon(&Polynomial::one(&r)).unwrap().equals(&i).unwrap());
        assert!(i.colon(&Polynomial::zero(&r)).is_err());
        let sat = i.saturate(&p(&r, "x")).unwrap();
        assert!(sat.is_unit().unwrap());
        let sat_y = i.saturate(&p(&r, "y")).unwrap();
        assert!(sat_y.equals(&ideal(&r, &["x"])).unwrap());
    }

    #[test]
    fn colon_laws() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x^2*y - z^3", "x*z^2 - y^2"]);
        let f = p(&r, "x*y");
        let c1 = i.colon(&f).unwrap();
        let c2 = c1.colon(&f).unwrap();
        assert!(i.is_subset_of(&c1).unwrap());
        assert!(c1.is_subset_of(&c2).unwrap());
        for g in c1.gens() {
            assert!(i.contains(&(g * &f)).unwrap());
        }
    }

    #[test]
    fn leading_terms() {
        let r = ring(&["x", "y"]);
        let lt = ideal(&r, &["x - y"]).leading_term_ideal(&MonomialOrder::Lex).unwrap();
        assert_eq!(lt.gens(), &[p(&r, "x")]);
        let mono = ideal(&r, &["x^2", "x*y"]);
        assert!(mono
            .leading_term_ideal(&r.default_order())
            .unwrap()
            .equals(&mono)
            .unwrap());
        assert!(Ideal::zero(&r)
            .leading_term_ideal(&MonomialOrder::Lex)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn membership_and_equality() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x - y", "x - z"]);
        assert!(i.contains(&p(&r, "y - z")).unwrap());
        assert!(!i.contains(&p(&r, "x")).unwrap());
        assert!(i.equals(&i).unwrap());
        let hn = ideal(&r, &["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]);
        assert!(hn.is_subset_of(&i).unwrap());
        assert!(!hn.equals(&i).unwrap());
        let other = ring(&["x", "y"]);
        assert!(i.equals(&Ideal::zero(&other)).is_err());
    }

    #[test]
    fn powers() {
        let r = ring(&["x", "y"]);
        let m = Ideal::of_variables(&r, &[0, 1]);
        assert!(m.pow(0).unwrap().is_unit().unwrap());
        assert_eq!(m.pow(3).unwrap().gens().len(), 4);
    }
}
