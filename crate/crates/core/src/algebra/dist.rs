use super::Semiring;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Finite-support distribution with values in a semiring. Zero entries are
/// never stored and the total mass is one.
#[derive(Clone, Debug, PartialEq)]
pub struct Dist<U: Ord + Clone, R: Semiring> {
    support: BTreeMap<U, R>,
}

impl<U: Ord + Clone, R: Semiring> Dist<U, R> {
    pub fn new(entries: impl IntoIterator<Item = (U, R)>) -> Result<Self> {
        let mut support: BTreeMap<U, R> = BTreeMap::new();
        for (u, r) in entries {
            if !r.is_admissible() {
                return Err(Error::InvalidDistribution(format!("inadmissible weight {r:?}")));
            }
            let slot = support.entry(u).or_insert_with(R::zero);
            *slot = slot.add(&r);
        }
        support.retain(|_, r| !r.is_zero());
        let total = support.values().fold(R::zero(), |acc, r| acc.add(r));
        if total != R::one() {
            return Err(Error::InvalidDistribution(format!("total mass {total:?} is not one")));
        }
        Ok(Self { support })
    }

    pub fn get(&self, u: &U) -> R {
        self.support.get(u).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&U, &R)> {
        self.support.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &U> {
        self.support.keys()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn total(&self) -> R {
        self.support.values().fold(R::zero(), |acc, r| acc.add(r))
    }

    pub fn is_delta(&self) -> Option<&U> {
        if self.support.len() == 1 {
            self.support.keys().next()
        } else {
            None
        }
    }
}

/// Image of `p` under `f`: `v -> sum of p(u) over u in f^{-1}(v)`.
pub fn pushforward<U, V, R, F>(f: F, p: &Dist<U, R>) -> Dist<V, R>
where
    U: Ord + Clone,
    V: Ord + Clone,
    R: Semiring,
    F: Fn(&U) -> V,
{
    let mut out: BTreeMap<V, R> = BTreeMap::new();
    for (u, r) in p.iter() {
        let slot = out.entry(f(u)).or_insert_with(R::zero);
        *slot = slot.add(r);
    }
    out.retain(|_, r| !r.is_zero());
    Dist { support: out }
}

pub fn delta<U: Ord + Clone, R: Semiring>(u: U) -> Dist<U, R> {
    let mut support = BTreeMap::new();
    support.insert(u, R::one());
    Dist { support }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, Rational};
    use proptest::prelude::*;

    fn uniform_z2z2() -> Dist<(u8, u8), Rational> {
        Dist::new((0..2u8).flat_map(|a| (0..2u8).map(move |b| ((a, b), rational(1, 4))))).unwrap()
    }

    #[test]
    fn identity_pushforward() {
        let p = uniform_z2z2();
        assert_eq!(pushforward(|u: &(u8, u8)| *u, &p), p);
    }

    #[test]
    fn sum_map_gives_uniform() {
        let q = pushforward(|&(a, b): &(u8, u8)| (a + b) % 2, &uniform_z2z2());
        assert_eq!(q.get(&0), rational(1, 2));
        assert_eq!(q.get(&1), rational(1, 2));
    }

    #[test]
    fn constant_map_gives_delta() {
        let q = pushforward(|_: &(u8, u8)| 7u8, &uniform_z2z2());
        assert_eq!(q, delta(7u8));
    }

    #[test]
    fn delta_is_natural_and_injective() {
        let p: Dist<u8, Rational> = delta(0);
        assert_eq!(p.get(&0), rational(1, 1));
        assert_eq!(pushforward(|u: &u8| u + 3, &p), delta(3u8));
        for a in 0..4u8 {
            for b in 0..4u8 {
                assert_eq!(delta::<u8, u64>(a) == delta(b), a == b);
            }
        }
    }

    #[test]
    fn rejects_bad_mass_and_negative_weights() {
        assert!(Dist::<u8, Rational>::new([(0, rational(1, 2))]).is_err());
        assert!(Dist::<u8, Rational>::new([(0, rational(3, 2)), (1, rational(-1, 2))]).is_err());
        assert!(Dist::<u8, u64>::new([(0, 1), (1, 1)]).is_err());
        assert!(Dist::<u8, bool>::new([(0, true), (1, true)]).is_ok());
    }

    #[test]
    fn zeros_are_not_stored() {
        let p = Dist::new([(0u8, rational(1, 1)), (1, rational(0, 1))]).unwrap();
        assert_eq!(p.len(), 1);
    }

    proptest! {
        #[test]
        fn pushforward_preserves_mass(
            weights in proptest::collection::vec(1u64..20, 1..=8),
            f in proptest::collection::vec(0u8..8, 8),
        ) {
            let total: u64 = weights.iter().sum();
            let p: Dist<u8, Rational> = Dist::new(
                weights.iter().enumerate().map(|(i, w)| (i as u8, rational(*w as i64, total as i64))),
            ).unwrap();
            let q = pushforward(|u: &u8| f[*u as usize], &p);
            prop_assert_eq!(q.total(), rational(1, 1));

            let b: Dist<u8, bool> = Dist::new(weights.iter().enumerate().map(|(i, _)| (i as u8, true))).unwrap();
            prop_assert_eq!(pushforward(|u: &u8| f[*u as usize], &b).total(), true);

            let n: Dist<u8, u64> = delta(f[0]);
            prop_assert_eq!(pushforward(|u: &u8| f[*u as usize], &n).total(), 1);
        }
    }
}
