//! Exact arithmetic: semirings, finite-support distributions, linear algebra
//! over `Z/d`, and exact rational LP feasibility.

mod dist;
mod group;
mod lp;
mod zmod;

pub use dist::{delta, pushforward, Dist};
pub use group::{FiniteGroup, MAX_GROUP_ORDER};
pub use lp::{lp_feasible, LpOutcome};
pub use zmod::{solve_linear_zmod, ZModMatrix};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

pub type Rational = num_rational::BigRational;

/// Commutative semiring used as the value domain of distributions.
pub trait Semiring: Clone + PartialEq + Debug {
    /// `a + b = 0` implies `a = b = 0`.
    const ZERO_SUM_FREE: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// Membership test for the carrier (e.g. nonnegativity for `Q>=0`).
    fn is_admissible(&self) -> bool {
        true
    }

    /// The order `a <= b` iff some `c` has `a + c = b`.
    fn leq(&self, other: &Self) -> bool;
}

impl Semiring for Rational {
    const ZERO_SUM_FREE: bool = true;
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_admissible(&self) -> bool {
        !self.is_negative()
    }
    fn leq(&self, other: &Self) -> bool {
        self <= other
    }
}

/// The natural numbers; distributions over `N` are exactly the deltas.
impl Semiring for u64 {
    const ZERO_SUM_FREE: bool = true;
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn leq(&self, other: &Self) -> bool {
        self <= other
    }
}

/// Boolean semiring (or, and): possibilistic distributions.
impl Semiring for bool {
    const ZERO_SUM_FREE: bool = true;
    fn zero() -> Self {
        false
    }
    fn one() -> Self {
        true
    }
    fn add(&self, other: &Self) -> Self {
        *self || *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self && *other
    }
    fn leq(&self, other: &Self) -> bool {
        !*self || *other
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` exactly.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn laws<R: Semiring>(a: R, b: R, c: R) {
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.add(&R::zero()), a);
        assert_eq!(a.mul(&R::one()), a);
        assert!(a.mul(&R::zero()).is_zero());
        if R::ZERO_SUM_FREE && a.add(&b).is_zero() {
            assert!(a.is_zero() && b.is_zero());
        }
    }

    proptest! {
        #[test]
        fn rational_laws(a in 0i64..50, b in 0i64..50, c in 0i64..50, d in 1i64..7) {
            laws(rational(a, d), rational(b, d + 1), rational(c, 3));
        }

        #[test]
        fn natural_laws(a in 0u64..1000, b in 0u64..1000, c in 0u64..1000) {
            laws(a, b, c);
        }

        #[test]
        fn boolean_laws(a: bool, b: bool, c: bool) {
            laws(a, b, c);
        }

        #[test]
        fn order_is_usual_on_naturals(a in 0u64..100, b in 0u64..100) {
            let exists = (0..=100u64).any(|c| a + c == b);
            prop_assert_eq!(a.leq(&b), exists);
        }

        #[test]
        fn order_is_usual_on_rationals(a in 0i64..40, b in 0i64..40, d in 1i64..6) {
            let (x, y) = (rational(a, d), rational(b, d));
            // c = y - x is the witness when it is admissible.
            let witness = &y - &x;
            prop_assert_eq!(x.leq(&y), witness.is_admissible());
        }
    }

    #[test]
    fn boolean_order() {
        assert!(false.leq(&true));
        assert!(!true.leq(&false));
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/6"), Some(rational(1, 2)));
        assert_eq!(parse_rational("-2"), Some(rational(-2, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&rational(2, 4)), "1/2");
    }
}
