//! Buchberger's algorithm on raw term vectors.
//!
//! Pairs are pruned with the Gebauer-Möller installation of Buchberger's
//! product and chain criteria and selected by the normal strategy: smallest
//! weighted degree of the lcm first, then the order on the lcm, then the pair
//! indices. Every reduction step (one cancellation of a leading term) is
//! charged against a step budget.

use std::cmp::Ordering;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Term};

pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    fn charge(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Resource { budget: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

// Merge of two ascending term lists.
fn merge_ascending(a: &[Term], b: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
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

/// Full normal form of `f` (descending terms) modulo monic `basis` elements
/// (descending terms). Returns descending terms.
pub(crate) fn reduce(
    f: &[Term],
    basis: &[&[Term]],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Vec<Term>> {
    let mut work: Vec<Term> = f.iter().rev().cloned().collect();
    let mut rem: Vec<Term> = Vec::new();
    while let Some((m, c)) = work.pop() {
        let reducer = basis
            .iter()
            .find_map(|g| m.div(&g[0].0).map(|q| (q, *g)));
        match reducer {
            None => rem.push((m, c)),
            Some((q, g)) => {
                budget.charge()?;
                let neg = -&c;
                // g is monic, so the leading terms cancel exactly.
                let tail: Vec<Term> = g[1..]
                    .iter()
                    .rev()
                    .map(|(t, d)| (t.mul(&q), d * &neg))
                    .collect();
                work = merge_ascending(&work, &tail, order);
            }
        }
    }
    Ok(rem)
}

pub(crate) fn make_monic(f: Vec<Term>) -> Vec<Term> {
    let Some((_, lc)) = f.first() else {
        return f;
    };
    if lc.is_one() {
        return f;
    }
    let inv = lc.inv().expect("nonzero leading coefficient");
    f.into_iter().map(|(m, c)| (m, &c * &inv)).collect()
}

pub(crate) fn s_polynomial(f: &[Term], g: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let l = f[0].0.lcm(&g[0].0);
    let qf = l.div(&f[0].0).unwrap();
    let qg = l.div(&g[0].0).unwrap();
    let cf = f[0].1.inv().expect("nonzero");
    let cg = -&g[0].1.inv().expect("nonzero");
    let a: Vec<Term> = f[1..]
        .iter()
        .rev()
        .map(|(m, c)| (m.mul(&qf), c * &cf))
        .collect();
    let b: Vec<Term> = g[1..]
        .iter()
        .rev()
        .map(|(m, c)| (m.mul(&qg), c * &cg))
        .collect();
    let mut s = merge_ascending(&a, &b, order);
    s.reverse();
    s
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

struct Engine<'a> {
    order: &'a MonomialOrder,
    weights: &'a [u32],
    polys: Vec<Vec<Term>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    budget: Budget,
}

impl<'a> Engine<'a> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    // Reduces `f` modulo the currently active elements.
    fn reduce_active(&mut self, f: &[Term]) -> Result<Vec<Term>> {
        let basis: Vec<&[Term]> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p.as_slice())
            .collect();
        reduce(f, &basis, self.order, &mut self.budget)
    }

    fn insert(&mut self, f: Vec<Term>) -> Result<()> {
        let h = self.reduce_active(&f)?;
        if h.is_empty() {
            return Ok(());
        }
        self.polys.push(make_monic(h));
        self.active.push(false);
        self.update(self.polys.len() - 1);
        Ok(())
    }

    // Gebauer-Möller update for the new element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.lm(h).clone();
        let c: Vec<usize> = (0..h).filter(|&g| self.active[g]).collect();
        let lcms: Vec<Monomial> = c.iter().map(|&g| lm_h.lcm(self.lm(g))).collect();
        let mut d: Vec<usize> = Vec::new();
        for k in 0..c.len() {
            let g1 = c[k];
            if lm_h.is_coprime(self.lm(g1)) {
                d.push(k);
                continue;
            }
            let dominated = (k + 1..c.len())
                .chain(d.iter().copied())
                .any(|k2| lcms[k2].divides(&lcms[k]));
            if !dominated {
                d.push(k);
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let lcm_ih = polys[p.i][0].0.lcm(&lm_h);
            let lcm_jh = polys[p.j][0].0.lcm(&lm_h);
            !(lm_h.divides(&p.lcm) && lcm_ih != p.lcm && lcm_jh != p.lcm)
        });
        for k in d {
            let g = c[k];
            if lm_h.is_coprime(self.lm(g)) {
                continue;
            }
            let lcm = lcms[k].clone();
            let degree = lcm.weighted_degree(self.weights);
            self.pairs.push(Pair {
                i: g,
                j: h,
                lcm,
                degree,
            });
        }
        for g in c {
            if lm_h.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.degree
                .cmp(&q.degree)
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) -> Result<()> {
        while let Some(p) = self.select() {
            let s = s_polynomial(&self.polys[p.i], &self.polys[p.j], self.order);
            if s.is_empty() {
                continue;
            }
            let h = self.reduce_active(&s)?;
            if !h.is_empty() {
                self.polys.push(make_monic(h));
                self.active.push(false);
                self.update(self.polys.len() - 1);
            }
        }
        Ok(())
    }
}

/// Reduced Gröbner basis of the span of `gens` (each descending under `order`).
/// Output elements are monic and sorted by descending leading monomial.
pub(crate) fn reduced_basis(
    gens: Vec<Vec<Term>>,
    order: &MonomialOrder,
    weights: &[u32],
    step_budget: u64,
) -> Result<(Vec<Vec<Term>>, u64)> {
    let mut gens: Vec<Vec<Term>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_by(|a, b| {
        order
            .cmp(&a[0].0, &b[0].0)
            .then_with(|| a.len().cmp(&b.len()))
    });
    let mut engine = Engine {
        order,
        weights,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        budget: Budget::new(step_budget),
    };
    for g in gens {
        engine.insert(g)?;
    }
    engine.run()?;

    let mut minimal: Vec<Vec<Term>> = engine
        .polys
        .iter()
        .zip(&engine.active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p.clone())
        .collect();
    minimal.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&[Term]> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p.as_slice())
            .collect();
        let (head, tail) = minimal[k].split_first().unwrap();
        let mut r = vec![head.clone()];
        r.extend(reduce(tail, &others, order, &mut engine.budget)?);
        reduced.push(r);
    }
    Ok((reduced, engine.budget.used()))
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub(crate) fn satisfies_criterion(basis: &[Vec<Term>], order: &MonomialOrder) -> bool {
    let refs: Vec<&[Term]> = basis.iter().map(|p| p.as_slice()).collect();
    let monic: Vec<Vec<Term>> = basis.iter().map(|p| make_monic(p.clone())).collect();
    let monic_refs: Vec<&[Term]> = monic.iter().map(|p| p.as_slice()).collect();
    let mut budget = Budget::unlimited();
    for i in 0..refs.len() {
        for j in i + 1..refs.len() {
            let s = s_polynomial(refs[i], refs[j], order);
            match reduce(&s, &monic_refs, order, &mut budget) {
                Ok(r) if r.is_empty() => {}
                _ => return false,
            }
        }
    }
    true
}

/// Checks the reduced-basis shape: monic, and no term of any element divisible
/// by the leading monomial of another.
pub(crate) fn is_reduced_shape(basis: &[Vec<Term>]) -> bool {
    basis.iter().enumerate().all(|(i, f)| {
        f.first().is_some_and(|(_, c): &(Monomial, Coeff)| c.is_one())
            && basis.iter().enumerate().all(|(j, g)| {
                i == j || f.iter().all(|(m, _)| !g[0].0.divides(m))
            })
    })
}
