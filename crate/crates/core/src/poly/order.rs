use std::cmp::Ordering;

use crate::poly::monomial::Monomial;

/// Global monomial orders.
///
/// `Block` compares the first `split` variables with `first` and breaks ties
/// on the remaining variables with `second`; with the eliminated variables in
/// the first block this is an elimination order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    WeightedGrevlex(Vec<u32>),
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Elimination order for a ring whose first `split` variables are to be removed;
    /// weighted grevlex inside each block.
    pub fn elimination(weights: &[u32], split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(MonomialOrder::WeightedGrevlex(weights[..split].to_vec())),
            second: Box::new(MonomialOrder::WeightedGrevlex(weights[split..].to_vec())),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| revlex_tiebreak(a, b))
            }
            MonomialOrder::WeightedGrevlex(w) => {
                debug_assert_eq!(w.len(), a.len());
                let deg = |e: &[u32]| -> u64 {
                    e.iter().zip(w).map(|(&x, &y)| x as u64 * y as u64).sum()
                };
                deg(a).cmp(&deg(b)).then_with(|| revlex_tiebreak(a, b))
            }
            MonomialOrder::Block {
                split,
                first,
                second,
            } => first
                .cmp_exps(&a[..*split], &b[..*split])
                .then_with(|| second.cmp_exps(&a[*split..], &b[*split..])),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::WeightedGrevlex(w) => format!("wgrevlex{w:?}"),
            MonomialOrder::Block {
                split,
                first,
                second,
            } => format!("block({split}; {}, {})", first.name(), second.name()),
        }
    }
}

// Larger monomial has the smaller exponent at the last differing position.
fn revlex_tiebreak(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::WeightedGrevlex(vec![3, 4, 5]),
            MonomialOrder::elimination(&[1, 2, 1], 1),
            MonomialOrder::Block {
                split: 2,
                first: Box::new(MonomialOrder::Lex),
                second: Box::new(MonomialOrder::Grevlex),
            },
        ]
    }

    #[test]
    fn known_comparisons() {
        use Ordering::*;
        // x > y > z in every order on single variables of equal weight.
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Greater);
        // grevlex: x*z < y^2
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Less);
        // weights (3,4,5): x^3 and yz both degree 9; yz has positive z exponent so it is smaller.
        let w = MonomialOrder::WeightedGrevlex(vec![3, 4, 5]);
        assert_eq!(w.cmp(&m(&[3, 0, 0]), &m(&[0, 1, 1])), Greater);
        let e = MonomialOrder::elimination(&[1, 1, 1], 1);
        assert_eq!(e.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Greater);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..5, 3).prop_map(|v| Monomial::from_exponents(&v))
    }

    proptest! {
        #[test]
        fn order_axioms(a in arb_mono(), b in arb_mono(), n in arb_mono()) {
            let one = Monomial::one(3);
            for o in orders() {
                // totality: antisymmetric and Equal only for identical monomials
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
                // global: 1 is the minimum
                prop_assert_ne!(o.cmp(&one, &a), Ordering::Greater);
                // multiplicative
                if o.cmp(&a, &b) != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&a.mul(&n), &b.mul(&n)), Ordering::Greater);
                }
            }
        }

        #[test]
        fn order_transitive(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            for o in orders() {
                if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
                }
            }
        }
    }
}
