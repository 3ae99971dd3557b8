use smallvec::SmallVec;

/// Exponent vector over the variables of a ring context.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// `Some(i)` when the monomial is a positive power of the single variable `i`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut sup = self.support();
        match (sup.next(), sup.next()) {
            (Some(i), None) => Some(i),
            _ => None,
        }
    }
}

/// All monomials in `nvars` variables of weighted degree exactly `degree`.
pub fn monomials_of_degree(weights: &[u32], degree: u64) -> Vec<Monomial> {
    fn go(weights: &[u32], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(cur));
            }
            return;
        }
        let w = weights[i] as u64;
        let mut e = 0u32;
        while (e as u64) * w <= left {
            cur.push(e);
            go(weights, i + 1, left - e as u64 * w, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    go(weights, 0, degree, &mut Vec::new(), &mut out);
    out
}
