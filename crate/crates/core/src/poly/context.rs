use std::fmt;
use std::sync::Arc;

use crate::coeff::CoeffField;
use crate::error::{Error, Result};
use crate::poly::order::MonomialOrder;

/// Variables, their grading weights and the coefficient field of a polynomial ring.
///
/// Contexts are shared behind `Arc`; two polynomials are compatible when their
/// contexts compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
    weights: Vec<u32>,
    field: CoeffField,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    /// Standard-graded ring (all weights 1).
    pub fn new<S: AsRef<str>>(names: &[S], field: CoeffField) -> Result<Arc<Self>> {
        let weights = vec![1; names.len()];
        Self::with_weights(names, &weights, field)
    }

    pub fn with_weights<S: AsRef<str>>(
        names: &[S],
        weights: &[u32],
        field: CoeffField,
    ) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        Self::build(names, weights.to_vec(), field).map(Arc::new)
    }

    fn build(names: Vec<String>, weights: Vec<u32>, field: CoeffField) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::invalid(format!(
                "{} variables but {} weights",
                names.len(),
                weights.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::invalid(format!("`{n}` is not a valid variable name")));
            }
            if names[..i].contains(n) {
                return Err(Error::invalid(format!("duplicate variable `{n}`")));
            }
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::invalid(format!(
                "weight of `{}` must be positive",
                names[i]
            )));
        }
        Ok(RingContext {
            names,
            weights,
            field,
        })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn field(&self) -> CoeffField {
        self.field
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require_index(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::ContextMismatch(format!("unknown variable `{name}`")))
    }

    /// The default term order: weighted graded reverse lexicographic with the ring weights.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::WeightedGrevlex(self.weights.clone())
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: CoeffField) -> Arc<Self> {
        Arc::new(RingContext {
            field,
            ..self.clone()
        })
    }

    /// Same variables and field with new weights.
    pub fn reweighted(&self, weights: &[u32]) -> Result<Arc<Self>> {
        Self::build(self.names.clone(), weights.to_vec(), self.field).map(Arc::new)
    }

    /// Appends variables after the existing ones.
    pub fn extend<S: AsRef<str>>(&self, extra: &[(S, u32)]) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        for (n, w) in extra {
            names.push(n.as_ref().to_string());
            weights.push(*w);
        }
        Self::build(names, weights, self.field).map(Arc::new)
    }

    /// Drops the variables at `indices`.
    pub fn without(&self, indices: &[usize]) -> Arc<Self> {
        let (names, weights) = (0..self.nvars())
            .filter(|i| !indices.contains(i))
            .map(|i| (self.names[i].clone(), self.weights[i]))
            .unzip();
        Arc::new(RingContext {
            names,
            weights,
            field: self.field,
        })
    }

    /// Same variables listed in the order given by `perm` (new position -> old index).
    pub fn permuted(&self, perm: &[usize]) -> Arc<Self> {
        Arc::new(RingContext {
            names: perm.iter().map(|&i| self.names[i].clone()).collect(),
            weights: perm.iter().map(|&i| self.weights[i]).collect(),
            field: self.field,
        })
    }

    /// A variable name not used by this ring, derived from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (0..)
            .map(|k| format!("{stem}_{k}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for (i, (n, w)) in self.names.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *w == 1 {
                write!(f, "{n}")?;
            } else {
                write!(f, "{n}:{w}")?;
            }
        }
        write!(f, "]")
    }
}
