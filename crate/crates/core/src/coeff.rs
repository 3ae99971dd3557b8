//! Exact coefficient fields: arbitrary-precision rationals and prime fields `F_p`.
//!
//! A [`Coeff`] is a tagged element of one of the two field kinds. Mixing
//! elements of different fields is a programming error; every polynomial
//! operation checks field compatibility on the ring context first, so the
//! arithmetic here panics instead of returning an error on a mismatch.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field. Products are taken in `u128`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

/// Reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Normalizes `n/d`: gcd removed, sign carried by the numerator, zero is `0/1`.
    pub fn new(n: BigInt, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(Rational(BigRational::new(n, d)))
    }

    pub fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Checks the storage invariant: reduced, positive denominator.
    pub fn is_normalized(&self) -> bool {
        self.denom().is_positive() && self.numer().gcd(self.denom()).is_one()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// The prime field `F_p` for a word-sized prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Validates primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::invalid(format!("modulus {p} is not prime")));
        }
        if p > MAX_MODULUS {
            return Err(Error::invalid(format!(
                "modulus {p} exceeds the supported maximum {MAX_MODULUS}"
            )));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::invalid(format!("modulus {p} is not prime")));
            }
            d += 1;
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, value: i64) -> Fp {
        let p = self.p as i128;
        let r = (value as i128).rem_euclid(p) as u64;
        Fp {
            residue: r,
            modulus: self.p,
        }
    }

    pub fn from_u64(&self, value: u64) -> Fp {
        Fp {
            residue: value % self.p,
            modulus: self.p,
        }
    }

    fn reduce_bigint(&self, n: &BigInt) -> Fp {
        let r = n.mod_floor(&BigInt::from(self.p));
        Fp {
            residue: r.to_u64().expect("residue fits"),
            modulus: self.p,
        }
    }
}

/// Element of a prime field; the residue always lies in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    residue: u64,
    modulus: u64,
}

impl Fp {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn check(&self, other: &Fp) {
        assert_eq!(self.modulus, other.modulus, "mixed prime fields");
    }

    pub fn add(&self, other: &Fp) -> Fp {
        self.check(other);
        let s = self.residue + other.residue;
        Fp {
            residue: if s >= self.modulus { s - self.modulus } else { s },
            modulus: self.modulus,
        }
    }

    pub fn sub(&self, other: &Fp) -> Fp {
        self.check(other);
        let r = if self.residue >= other.residue {
            self.residue - other.residue
        } else {
            self.residue + self.modulus - other.residue
        };
        Fp {
            residue: r,
            modulus: self.modulus,
        }
    }

    pub fn mul(&self, other: &Fp) -> Fp {
        self.check(other);
        let r = (self.residue as u128 * other.residue as u128) % self.modulus as u128;
        Fp {
            residue: r as u64,
            modulus: self.modulus,
        }
    }

    pub fn neg(&self) -> Fp {
        Fp {
            residue: if self.residue == 0 {
                0
            } else {
                self.modulus - self.residue
            },
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<Fp> {
        if self.residue == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.modulus as i128, self.residue as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Fp {
            residue: t0.rem_euclid(self.modulus as i128) as u64,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// Descriptor of the coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffField {
    Rationals,
    Prime(PrimeField),
}

impl CoeffField {
    pub fn prime(p: u64) -> Result<Self> {
        Ok(CoeffField::Prime(PrimeField::new(p)?))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffField::Rationals => 0,
            CoeffField::Prime(f) => f.p,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            CoeffField::Rationals => Coeff::Rational(Rational::from_i64(n)),
            CoeffField::Prime(f) => Coeff::Prime(f.elem(n)),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            CoeffField::Rationals => Coeff::Rational(Rational::from_integer(n.clone())),
            CoeffField::Prime(f) => Coeff::Prime(f.reduce_bigint(n)),
        }
    }

    /// Maps a rational into this field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &Rational) -> Result<Coeff> {
        match self {
            CoeffField::Rationals => Ok(Coeff::Rational(q.clone())),
            CoeffField::Prime(f) => {
                let d = f.reduce_bigint(q.denom());
                let inv = d.inv().map_err(|_| {
                    Error::invalid(format!("{q} is not defined in F_{}", f.p))
                })?;
                Ok(Coeff::Prime(f.reduce_bigint(q.numer()).mul(&inv)))
            }
        }
    }

    /// Maps a coefficient of any field into this one (rationals reduce mod p).
    pub fn convert(&self, c: &Coeff) -> Result<Coeff> {
        match (self, c) {
            (_, Coeff::Rational(q)) => self.from_rational(q),
            (CoeffField::Prime(f), Coeff::Prime(x)) if f.p == x.modulus => Ok(c.clone()),
            _ => Err(Error::ContextMismatch(format!(
                "cannot map {c} from F_{} into {self}",
                c.characteristic()
            ))),
        }
    }

    pub fn contains(&self, c: &Coeff) -> bool {
        match (self, c) {
            (CoeffField::Rationals, Coeff::Rational(_)) => true,
            (CoeffField::Prime(f), Coeff::Prime(x)) => f.p == x.modulus,
            _ => false,
        }
    }
}

impl fmt::Display for CoeffField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffField::Rationals => write!(f, "Q"),
            CoeffField::Prime(pf) => write!(f, "F_{}", pf.p),
        }
    }
}

/// Accepts `q`/`Q` for the rationals and `p:P` for `F_P`.
impl FromStr for CoeffField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(CoeffField::Rationals);
        }
        if let Some(rest) = s.strip_prefix("p:").or_else(|| s.strip_prefix("P:")) {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad modulus `{rest}`")))?;
            return CoeffField::prime(p);
        }
        Err(Error::invalid(format!(
            "unknown field `{s}` (expected `q` or `p:P`)"
        )))
    }
}

/// A field element tagged with its field kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(Rational),
    Prime(Fp),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Prime(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Prime(x) => x.residue == 1,
        }
    }

    /// True only for negative rationals; prime-field residues print as non-negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_negative(),
            Coeff::Prime(_) => false,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Coeff::Rational(_) => 0,
            Coeff::Prime(x) => x.modulus,
        }
    }

    pub fn inv(&self) -> Result<Coeff> {
        match self {
            Coeff::Rational(q) => q.inv().map(Coeff::Rational),
            Coeff::Prime(x) => x.inv().map(Coeff::Prime),
        }
    }

    pub fn div(&self, other: &Coeff) -> Result<Coeff> {
        Ok(self * &other.inv()?)
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Rational(q) => Coeff::Rational(q.abs()),
            Coeff::Prime(_) => self.clone(),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => q.fmt(f),
            Coeff::Prime(x) => x.fmt(f),
        }
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &'a Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(Rational(&a.0 + &b.0)),
            (Coeff::Prime(a), Coeff::Prime(b)) => Coeff::Prime(a.add(b)),
            _ => panic!("mixed coefficient fields"),
        }
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &'a Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(Rational(&a.0 - &b.0)),
            (Coeff::Prime(a), Coeff::Prime(b)) => Coeff::Prime(a.sub(b)),
            _ => panic!("mixed coefficient fields"),
        }
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &'a Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(Rational(&a.0 * &b.0)),
            (Coeff::Prime(a), Coeff::Prime(b)) => Coeff::Prime(a.mul(b)),
            _ => panic!("mixed coefficient fields"),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(Rational(-&a.0)),
            Coeff::Prime(a) => Coeff::Prime(a.neg()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn rational_normalization() {
        let r = q(-4, -6);
        assert_eq!((r.numer().clone(), r.denom().clone()), (2.into(), 3.into()));
        let z = q(0, 5);
        assert_eq!((z.numer().clone(), z.denom().clone()), (0.into(), 1.into()));
        let i = q(7, 1);
        assert_eq!(i.to_string(), "7");
        assert_eq!(q(3, -9).to_string(), "-1/3");
    }

    #[test]
    fn rational_zero_denominator() {
        assert!(matches!(
            Rational::new(1.into(), 0.into()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn prime_field_inverse() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.elem(3).inv().unwrap().residue(), 5);
        let big = PrimeField::new(32003).unwrap();
        assert_eq!(big.elem(1).inv().unwrap().residue(), 1);
        assert_eq!(big.elem(2).inv().unwrap().residue(), 16002);
        assert_eq!(f7.elem(0).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn extended_euclid_oracle_for_two_mod_32003() {
        // Brute-force search stands in for the closed-form answer.
        let want = (1..32003u64).find(|k| (2 * k) % 32003 == 1).unwrap();
        assert_eq!(want, 16002);
        assert_eq!(PrimeField::new(32003).unwrap().elem(2).inv().unwrap().residue(), want);
    }

    #[test]
    fn field_construction_rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(MAX_MODULUS + 1).is_err());
    }

    #[test]
    fn field_descriptor_parsing() {
        assert_eq!("q".parse::<CoeffField>().unwrap(), CoeffField::Rationals);
        assert_eq!(
            "p:32003".parse::<CoeffField>().unwrap(),
            CoeffField::prime(32003).unwrap()
        );
        assert!("p:12".parse::<CoeffField>().is_err());
        assert!("z".parse::<CoeffField>().is_err());
    }

    #[test]
    fn rational_into_prime_field() {
        let f7 = CoeffField::prime(7).unwrap();
        assert_eq!(f7.from_rational(&q(1, 2)).unwrap(), f7.from_i64(4));
        assert!(f7.from_rational(&q(1, 7)).is_err());
        assert_eq!(f7.from_i64(-1), f7.from_i64(6));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            let (a, b, c) = (Coeff::Rational(a), Coeff::Rational(b), Coeff::Rational(c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            for x in [&a + &b, &a * &c, &a - &c, -&b] {
                if let Coeff::Rational(r) = &x {
                    prop_assert!(r.is_normalized());
                }
            }
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn prime_field_axioms(a in 0u64..32003, b in 0u64..32003, c in 0u64..32003) {
            let f = PrimeField::new(32003).unwrap();
            let (a, b, c) = (f.from_u64(a), f.from_u64(b), f.from_u64(c));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&b).add(&b), a);
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()).residue(), 1);
            }
        }
    }
}
