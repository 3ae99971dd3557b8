use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants::{hilbert_burch_certify, min_gens_graded, HilbertBurchWitness};
use crate::poly::{MonomialOrder, Polynomial, RingContext};
use crate::report::{CertReport, Clause, Verdict};

/// `u = x^2 - yz`, `v = y^2 - xz`, `w = z^2 - xy` in a ring `A`, the extension
/// `D = A[X,Y]`, `K = (u + xX, v + xY) :_D x` and `L = (u + xX, v + xY, w - yX - zY)`.
#[derive(Clone, Debug)]
pub struct NorthcottContext {
    pub base: Arc<RingContext>,
    pub ext_ring: Arc<RingContext>,
    pub xyz: [String; 3],
    /// Names of the adjoined variables `X`, `Y` in `ext_ring`.
    pub new_vars: [String; 2],
    pub u: Polynomial,
    pub v: Polynomial,
    pub w: Polynomial,
    /// `(u, v, w)` in `A`.
    pub i_ideal: Ideal,
    pub k: Ideal,
    pub l: Ideal,
    /// `[[x, z], [-z, -y]]`: `Φ·(x, -y)ᵀ = (u, v)` and `det Φ = w`.
    pub phi: [[Polynomial; 2]; 2],
    /// `[[x + X, -z], [-z + Y, y]]`: `Ψ·(x, y)ᵀ = (u + xX, v + xY)`.
    pub psi: [[Polynomial; 2]; 2],
    /// `ψ₂ᵀ = [[x, z, -y], [y, x + X, -z + Y]]` over `D`.
    pub psi2_t: [[Polynomial; 3]; 2],
    /// `ψ₁ = (w - yX - zY, v + xY, -(u + xX))`.
    pub psi1: [Polynomial; 3],
}

fn det2(m: &[[Polynomial; 2]; 2]) -> Polynomial {
    &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
}

/// Builds the construction in `base` on the variables `xyz`. The base ring
/// needs at least four variables and `x, y, z` of weight 1.
pub fn northcott_build(base: &Arc<RingContext>, xyz: [&str; 3]) -> Result<NorthcottContext> {
    if base.nvars() < 4 {
        return Err(Error::invalid(format!(
            "the base ring needs at least 4 variables, {base} has {}",
            base.nvars()
        )));
    }
    if xyz[0] == xyz[1] || xyz[0] == xyz[2] || xyz[1] == xyz[2] {
        return Err(Error::invalid("x, y, z must be distinct"));
    }
    for n in xyz {
        let i = base.require_index(n)?;
        if base.weights()[i] != 1 {
            return Err(Error::invalid(format!("`{n}` must have weight 1")));
        }
    }
    let var = |c: &Arc<RingContext>, n: &str| Polynomial::var(c, n);
    let (x, y, z) = (var(base, xyz[0])?, var(base, xyz[1])?, var(base, xyz[2])?);
    let u = &(&x * &x) - &(&y * &z);
    let v = &(&y * &y) - &(&x * &z);
    let w = &(&z * &z) - &(&x * &y);
    let identity = &(&(&x * &w) + &(&y * &u)) + &(&z * &v);
    if !identity.is_zero() {
        return Err(Error::Inconsistency(format!("xw + yu + zv = {identity}")));
    }
    let i_ideal = Ideal::new(base, vec![u.clone(), v.clone(), w.clone()])?;

    let xn = base.fresh_name("X");
    let yn = {
        let tmp = base.extend(&[(xn.as_str(), 1)])?;
        tmp.fresh_name("Y")
    };
    let ext = base.extend(&[(xn.as_str(), 1), (yn.as_str(), 1)])?;
    let (xd, yd, zd) = (var(&ext, xyz[0])?, var(&ext, xyz[1])?, var(&ext, xyz[2])?);
    let (bx, by) = (var(&ext, &xn)?, var(&ext, &yn)?);
    let (ud, vd, wd) = (u.map_into(&ext)?, v.map_into(&ext)?, w.map_into(&ext)?);
    let f1 = &ud + &(&xd * &bx);
    let f2 = &vd + &(&xd * &by);
    let f3 = &(&wd - &(&yd * &bx)) - &(&zd * &by);
    let k = Ideal::new(&ext, vec![f1.clone(), f2.clone()])?.colon(&xd)?;
    let l = Ideal::new(&ext, vec![f1.clone(), f2.clone(), f3.clone()])?;

    let phi = [[x.clone(), z.clone()], [-&z, -&y]];
    let psi = [[&xd + &bx, -&zd], [&(-&zd) + &by, yd.clone()]];
    let psi2_t = [[xd.clone(), zd.clone(), -&yd], [yd.clone(), &xd + &bx, &(-&zd) + &by]];
    let psi1 = [f3, f2, -&f1];
    Ok(NorthcottContext {
        base: base.clone(),
        ext_ring: ext,
        xyz: xyz.map(String::from),
        new_vars: [xn, yn],
        u,
        v,
        w,
        i_ideal,
        k,
        l,
        phi,
        psi,
        psi2_t,
        psi1,
    })
}

impl NorthcottContext {
    fn ext_var(&self, name: &str) -> Polynomial {
        Polynomial::var(&self.ext_ring, name).expect("variable of the extension")
    }

    fn xyz_ext(&self) -> [Polynomial; 3] {
        [self.ext_var(&self.xyz[0]), self.ext_var(&self.xyz[1]), self.ext_var(&self.xyz[2])]
    }

    /// `xw + yu + zv` in `A`.
    pub fn identity_residual(&self) -> Polynomial {
        let v = |n: &str| Polynomial::var(&self.base, n).expect("base variable");
        let (x, y, z) = (v(&self.xyz[0]), v(&self.xyz[1]), v(&self.xyz[2]));
        &(&(&x * &self.w) + &(&y * &self.u)) + &(&z * &self.v)
    }

    /// `w - yX - zY`.
    pub fn w_shift(&self) -> Polynomial {
        self.psi1[0].clone()
    }

    pub fn w_shift_in_k(&self) -> Result<bool> {
        self.k.contains(&self.w_shift())
    }

    /// `det Ψ + (w - yX - zY)`, zero when `det Ψ = -(w - yX - zY)`.
    pub fn det_psi_residual(&self) -> Polynomial {
        &det2(&self.psi) + &self.w_shift()
    }

    /// `Ψ·(x, y)ᵀ - (u + xX, v + xY)`, both entries zero when the relation holds.
    pub fn psi_relation_residual(&self) -> [Polynomial; 2] {
        let [x, y, _] = self.xyz_ext();
        let f1 = -&self.psi1[2];
        let f2 = self.psi1[1].clone();
        [
            &(&(&self.psi[0][0] * &x) + &(&self.psi[0][1] * &y)) - &f1,
            &(&(&self.psi[1][0] * &x) + &(&self.psi[1][1] * &y)) - &f2,
        ]
    }

    /// `Φ·(x, -y)ᵀ - (u, v)` and `det Φ - w`.
    pub fn phi_residuals(&self) -> [Polynomial; 3] {
        let v = |n: &str| Polynomial::var(&self.base, n).expect("base variable");
        let (x, y) = (v(&self.xyz[0]), v(&self.xyz[1]));
        let ny = -&y;
        [
            &(&(&self.phi[0][0] * &x) + &(&self.phi[0][1] * &ny)) - &self.u,
            &(&(&self.phi[1][0] * &x) + &(&self.phi[1][1] * &ny)) - &self.v,
            &det2(&self.phi) - &self.w,
        ]
    }

    /// Leading monomials of `u + xX` and `v + xY` under the default order of `D` are coprime.
    pub fn leading_terms_coprime(&self) -> bool {
        let order = self.ext_ring.default_order();
        let f1 = -&self.psi1[2];
        let lm = |f: &Polynomial, o: &MonomialOrder| f.leading_monomial(o).cloned();
        match (lm(&f1, &order), lm(&self.psi1[1], &order)) {
            (Some(a), Some(b)) => a.is_coprime(&b),
            _ => false,
        }
    }

    pub fn witness(&self) -> Result<HilbertBurchWitness> {
        HilbertBurchWitness::new(self.psi2_t.clone(), self.psi1.clone(), self.k.clone())
    }
}

/// `K = L` as ideals of `D`.
pub fn verify_k_equals_l(ctx: &NorthcottContext) -> Result<bool> {
    ctx.k.equals(&ctx.l)
}

/// All Step-1 checks of the construction as one report.
pub fn northcott_report(ctx: &NorthcottContext) -> Result<CertReport> {
    let field = ctx.base.field().to_string();
    let mut clauses = Vec::new();
    let id = ctx.identity_residual();
    clauses.push(Clause::new("identity-xw+yu+zv", id.is_zero(), format!("xw + yu + zv = {id}")));
    let phi = ctx.phi_residuals();
    clauses.push(Clause::new(
        "phi-relations",
        phi.iter().all(Polynomial::is_zero),
        format!("residuals ({}, {}, {})", phi[0], phi[1], phi[2]),
    ));
    let psi = ctx.psi_relation_residual();
    clauses.push(Clause::new(
        "psi-relations",
        psi.iter().all(Polynomial::is_zero),
        format!("residuals ({}, {})", psi[0], psi[1]),
    ));
    let det = ctx.det_psi_residual();
    clauses.push(Clause::new("det-psi", det.is_zero(), format!("det(Psi) + (w - yX - zY) = {det}")));
    clauses.push(Clause::new(
        "leading-terms-coprime",
        ctx.leading_terms_coprime(),
        "u + xX, v + xY",
    ));
    clauses.push(Clause::new(
        "w-shift-in-K",
        ctx.w_shift_in_k()?,
        format!("{} in K", ctx.w_shift()),
    ));
    let proper = !ctx.k.is_unit()?;
    clauses.push(Clause::new("K-proper", proper, format!("K = {}", ctx.k.reduced()?)));
    clauses.push(Clause::new("K-equals-L", verify_k_equals_l(ctx)?, format!("L = {}", ctx.l)));
    let mu = min_gens_graded(&ctx.k)?;
    clauses.push(Clause::new(
        "mu-K",
        mu.count == 3,
        format!("mu={} degrees {:?}", mu.count, mu.degrees),
    ));
    let mu_i = min_gens_graded(&ctx.i_ideal)?;
    clauses.push(Clause::new("mu-I", mu_i.count == 3, format!("mu={}", mu_i.count)));
    let hb = hilbert_burch_certify(&ctx.witness()?)?;
    clauses.extend(hb.clauses.into_iter().map(|mut c| {
        c.name = format!("hb-{}", c.name);
        c
    }));
    Ok(CertReport::new("northcott", field, clauses, Verdict::Certified))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffField;
    use crate::poly::parse_poly;

    fn build() -> NorthcottContext {
        let a = RingContext::new(&["x", "y", "z", "w4"], CoeffField::Rationals).unwrap();
        northcott_build(&a, ["x", "y", "z"]).unwrap()
    }

    #[test]
    fn relations_hold_symbolically() {
        let c = build();
        assert!(c.identity_residual().is_zero());
        assert!(c.phi_residuals().iter().all(Polynomial::is_zero));
        assert!(c.psi_relation_residual().iter().all(Polynomial::is_zero));
        assert!(c.det_psi_residual().is_zero());
        assert!(c.leading_terms_coprime());
        assert_eq!(c.new_vars, ["X".to_string(), "Y".to_string()]);
    }

    #[test]
    fn colon_contains_the_shifted_w() {
        let c = build();
        assert!(c.w_shift_in_k().unwrap());
        assert_eq!(c.w_shift(), parse_poly("z^2 - x*y - y*X - z*Y", &c.ext_ring).unwrap());
        // x(w - yX - zY) lies in (u + xX, v + xY) already.
        let base = Ideal::new(&c.ext_ring, vec![-&c.psi1[2], c.psi1[1].clone()]).unwrap();
        let xd = Polynomial::var(&c.ext_ring, "x").unwrap();
        assert!(base.contains(&(&xd * &c.w_shift())).unwrap());
        assert!(!base.contains(&c.w_shift()).unwrap());
    }

    #[test]
    fn k_equals_l() {
        let c = build();
        assert!(c.l.is_subset_of(&c.k).unwrap());
        assert!(verify_k_equals_l(&c).unwrap());
        assert!(!c.k.is_unit().unwrap());
    }

    #[test]
    fn full_report_certifies() {
        let r = northcott_report(&build()).unwrap();
        assert_eq!(r.verdict, Verdict::Certified, "{r:?}");
    }

    #[test]
    fn rejects_small_rings() {
        let a = RingContext::new(&["x", "y", "z"], CoeffField::Rationals).unwrap();
        assert!(northcott_build(&a, ["x", "y", "z"]).is_err());
        let a = RingContext::new(&["x", "y", "z", "t"], CoeffField::Rationals).unwrap();
        assert!(northcott_build(&a, ["x", "x", "z"]).is_err());
        assert!(northcott_build(&a, ["x", "y", "q"]).is_err());
    }

    #[test]
    fn fresh_names_avoid_clashes() {
        let a = RingContext::new(&["x", "y", "z", "X"], CoeffField::Rationals).unwrap();
        let c = northcott_build(&a, ["x", "y", "z"]).unwrap();
        assert_ne!(c.new_vars[0], "X");
        assert!(verify_k_equals_l(&c).unwrap());
    }
}
