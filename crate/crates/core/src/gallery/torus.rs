use crate::algebra::{Dist, Rational};
use crate::error::Result;
use crate::gaction::SimplicialGAction;
use crate::sdist::{Relative, SimplicialDistribution, Target};
use crate::simplicial::{self, Nd, SSet};
use num_traits::One;

/// The torus `S¹ × S¹` with the swap action and outcomes in the circle of `Z/2`.
#[derive(Clone, Debug)]
pub struct Torus {
    pub space: SSet,
    pub action: SimplicialGAction,
    pub target: Target,
    /// The diagonal edge `x` sent to the nontrivial label.
    pub relative: Relative,
}

impl Torus {
    pub fn new(truncation: usize) -> Result<Self> {
        let space = simplicial::torus(truncation)?;
        let f = |a: &str| space.find(a).expect("torus simplex");
        let mut perm: Vec<Vec<usize>> = (0..=space.truncation()).map(|n| (0..space.nd_count(n)).collect()).collect();
        for (a, b) in [("x0", "x1"), ("sigma0", "sigma1")] {
            let (a, b) = (f(a), f(b));
            perm[a.dim][a.idx] = b.idx;
            perm[b.dim][b.idx] = a.idx;
        }
        let action = SimplicialGAction::from_generators(&space, vec![perm])?;
        let relative = Relative { fixed: vec![(f("x").idx, 1)] };
        Ok(Self { space, action, target: Target::circle(2, 1), relative })
    }

    pub fn nd(&self, name: &str) -> Nd {
        self.space.find(name).expect("torus simplex")
    }

    /// Distribution with `P(x0 = 1) = t1` and `P(x1 = 1) = t2`. The
    /// triangle `sigma0` has spine `(x0, x1)` and `sigma1` has `(x1, x0)`.
    pub fn distribution(&self, t1: &Rational, t2: &Rational) -> Result<SimplicialDistribution> {
        let one = Rational::one();
        let rest = &one - t1 - t2;
        let s0 = Nd::new(2, self.nd("sigma0").idx);
        let edge = |p: &Rational| Dist::new([(vec![1], p.clone()), (vec![0], &one - p)]);
        SimplicialDistribution::from_fn(&self.space, self.target, |s| match (s.dim, self.space.name(s)) {
            (1, "x0") => edge(t1),
            (1, "x1") => edge(t2),
            (1, _) => edge(&(t1 + t2)),
            (2, _) => {
                let (a, b) = if s == s0 { (t1, t2) } else { (t2, t1) };
                Dist::new([(vec![0, 0], rest.clone()), (vec![1, 0], a.clone()), (vec![0, 1], b.clone())])
            }
            _ => Dist::new([(vec![0; s.dim], Rational::one())]),
        })
    }

    /// The equivariant distribution `t1 = t2 = t`.
    pub fn equivariant(&self, t: &Rational) -> Result<SimplicialDistribution> {
        self.distribution(t, t)
    }
}
