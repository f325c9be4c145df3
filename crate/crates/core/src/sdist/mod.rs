//! Simplicial distributions with outcomes in the nerve of `Z/d` (or the
//! circle `S¹_(a)` inside it), deterministic distributions, the map Θ, and
//! contextuality decided by exact LP.

use crate::algebra::{lp_feasible, pushforward, Dist, LpOutcome, Rational};
use crate::error::{Error, Result};
use crate::gaction::{borel, BorelSpace, SimplicialGAction};
use crate::simplicial::{Nd, SSet, SimplexWord};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type Outcome = Vec<usize>;

/// Outcome space: `N(Z/d)`, or its circle generated by the edge `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Target {
    pub modulus: usize,
    pub circle: Option<usize>,
}

impl Target {
    pub fn nerve(modulus: usize) -> Self {
        Self { modulus, circle: None }
    }

    pub fn circle(modulus: usize, a: usize) -> Self {
        Self { modulus, circle: Some(a % modulus) }
    }

    pub fn contains(&self, t: &[usize]) -> bool {
        t.iter().all(|&v| v < self.modulus)
            && match self.circle {
                None => true,
                Some(a) => {
                    let nz: Vec<usize> = t.iter().copied().filter(|&v| v != 0).collect();
                    nz.is_empty() || (nz.len() == 1 && nz[0] == a)
                }
            }
    }

    pub fn edge_labels(&self) -> Vec<usize> {
        match self.circle {
            None => (0..self.modulus).collect(),
            Some(a) if a == 0 => vec![0],
            Some(a) => vec![0, a],
        }
    }

    /// All outcome tuples of dimension `n`, lexicographically.
    pub fn tuples(&self, n: usize) -> Vec<Outcome> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|t: Outcome| {
                    (0..self.modulus).map(move |v| {
                        let mut u = t.clone();
                        u.push(v);
                        u
                    })
                })
                .collect();
        }
        out.retain(|t| self.contains(t));
        out
    }

    pub fn face(&self, i: usize, t: &[usize]) -> Outcome {
        let n = t.len();
        let mut u = t.to_vec();
        if i == 0 {
            u.remove(0);
        } else if i == n {
            u.pop();
        } else {
            u[i - 1] = (t[i - 1] + t[i]) % self.modulus;
            u.remove(i);
        }
        u
    }
}

/// Outcome tuple of `θ^* x` given the tuple of `x`.
pub fn pull_outcome(theta: &[u8], t: &[usize]) -> Outcome {
    (1..theta.len()).map(|k| if theta[k - 1] == theta[k] { 0 } else { t[theta[k] as usize - 1] }).collect()
}

/// A simplicial distribution, stored on nondegenerate simplices of positive
/// dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplicialDistribution {
    pub target: Target,
    dists: Vec<Vec<Dist<Outcome, Rational>>>,
}

impl SimplicialDistribution {
    /// `dists[n][i]` is the distribution on the `i`-th nondegenerate
    /// `n`-simplex; level 0 is ignored.
    pub fn new(target: Target, mut dists: Vec<Vec<Dist<Outcome, Rational>>>) -> Self {
        if let Some(l0) = dists.first_mut() {
            l0.clear();
        }
        Self { target, dists }
    }

    /// Builds a distribution from one function per nondegenerate simplex.
    pub fn from_fn(x: &SSet, target: Target, mut f: impl FnMut(Nd) -> Result<Dist<Outcome, Rational>>) -> Result<Self> {
        let mut dists = vec![Vec::new()];
        for n in 1..=x.truncation() {
            dists.push(x.nd_ids(n).map(&mut f).collect::<Result<Vec<_>>>()?);
        }
        Ok(Self { target, dists })
    }

    pub fn at(&self, x: Nd) -> &Dist<Outcome, Rational> {
        &self.dists[x.dim][x.idx]
    }

    /// Distribution on any simplex of positive dimension.
    pub fn eval(&self, w: &SimplexWord) -> Dist<Outcome, Rational> {
        let base = w.base();
        if base.dim == 0 {
            return crate::algebra::delta(vec![0; w.dim()]);
        }
        pushforward(|t: &Outcome| pull_outcome(w.theta(), t), self.at(base))
    }

    /// Checks shapes, target membership and face compatibility, reporting
    /// the first violation.
    pub fn validate(&self, x: &SSet) -> Result<()> {
        if self.dists.len() != x.truncation() + 1 {
            return Err(Error::InvalidDistribution("distribution truncation differs from the space".into()));
        }
        for n in 1..=x.truncation() {
            if self.dists[n].len() != x.nd_count(n) {
                return Err(Error::InvalidDistribution(format!("wrong number of {n}-simplex distributions")));
            }
            for s in x.nd_ids(n) {
                let p = self.at(s);
                for (t, _) in p.iter() {
                    if t.len() != n || !self.target.contains(t) {
                        return Err(Error::InvalidDistribution(format!(
                            "outcome {t:?} on {} lies outside the target",
                            x.name(s)
                        )));
                    }
                }
                if n >= 2 {
                    for i in 0..=n {
                        let pushed = pushforward(|t: &Outcome| self.target.face(i, t), p);
                        let face = self.eval(&x.faces(s)[i]);
                        if pushed != face {
                            return Err(Error::InvalidDistribution(format!(
                                "marginal d{i} of {} disagrees with {}",
                                x.name(s),
                                x.describe(&x.faces(s)[i])
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `p_{g x} = p_x` for every element (outcomes carry the trivial action).
    pub fn is_equivariant(&self, x: &SSet, action: &SimplicialGAction) -> bool {
        action
            .group()
            .elements()
            .all(|g| (1..=x.truncation()).all(|n| x.nd_ids(n).all(|s| self.at(action.act_nd(g, s)) == self.at(s))))
    }

    /// Edges of the relative subspace carry point masses at their labels.
    pub fn is_relative(&self, rel: &Relative) -> bool {
        rel.fixed.iter().all(|&(e, a)| self.at(Nd::new(1, e)).is_delta() == Some(&vec![a]))
    }
}

/// Relative condition: listed nondegenerate edges must take fixed labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relative {
    pub fixed: Vec<(usize, usize)>,
}

/// A simplicial map to the target, stored by its labels on nondegenerate edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeterministicMap {
    pub labels: Vec<usize>,
}

impl DeterministicMap {
    pub fn label(&self, edge: &SimplexWord) -> usize {
        if edge.is_degenerate() {
            0
        } else {
            self.labels[edge.base().idx]
        }
    }

    pub fn outcome(&self, x: &SSet, w: &SimplexWord) -> Outcome {
        (1..=w.dim()).map(|k| self.label(&x.spine_edge(w, k))).collect()
    }

    pub fn delta(&self, x: &SSet, target: Target) -> SimplicialDistribution {
        SimplicialDistribution::from_fn(x, target, |s| Ok(crate::algebra::delta(self.outcome(x, &SimplexWord::nd(s)))))
            .expect("infallible")
    }

    /// Triangle relation and target membership on every nondegenerate simplex.
    pub fn is_valid(&self, x: &SSet, target: Target) -> bool {
        (1..=x.truncation()).all(|n| {
            x.nd_ids(n).all(|s| {
                let w = SimplexWord::nd(s);
                let t = self.outcome(x, &w);
                target.contains(&t) && (n < 2 || (0..=n).all(|i| target.face(i, &t) == self.outcome(x, &x.faces(s)[i])))
            })
        })
    }

    pub fn is_equivariant(&self, action: &SimplicialGAction) -> bool {
        action
            .group()
            .elements()
            .all(|g| (0..self.labels.len()).all(|e| self.labels[action.act_nd(g, Nd::new(1, e)).idx] == self.labels[e]))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions<'a> {
    pub equivariant: Option<&'a SimplicialGAction>,
    pub relative: Option<&'a Relative>,
}

/// All deterministic distributions, by backtracking over edge labels in
/// increasing edge order and increasing label order.
pub fn enumerate_deterministic(x: &SSet, target: Target, opts: EnumerateOptions<'_>) -> Vec<DeterministicMap> {
    let ne = x.nd_count(1);
    let mut fixed: Vec<Option<usize>> = vec![None; ne];
    if let Some(rel) = opts.relative {
        for &(e, a) in &rel.fixed {
            if fixed[e].is_some_and(|b| b != a) {
                return Vec::new();
            }
            fixed[e] = Some(a);
        }
    }
    // Triangles grouped by the largest nondegenerate edge they involve, so each
    // is checked as soon as all its edges are labeled.
    let mut check_at: Vec<Vec<Nd>> = vec![Vec::new(); ne];
    let mut free_triangles = Vec::new();
    for t in x.nd_ids(2) {
        match x.faces(t).iter().filter(|f| !f.is_degenerate()).map(|f| f.base().idx).max() {
            Some(m) => check_at[m].push(t),
            None => free_triangles.push(t),
        }
    }
    let mut orbits: Vec<Vec<usize>> = vec![Vec::new(); ne];
    if let Some(a) = opts.equivariant {
        for e in 0..ne {
            orbits[e] = a.group().elements().map(|g| a.act_nd(g, Nd::new(1, e)).idx).collect();
        }
    }
    let labels_allowed = target.edge_labels();
    let mut out = Vec::new();
    let mut cur = DeterministicMap { labels: vec![0; ne] };
    let tri_ok = |m: &DeterministicMap, t: Nd| {
        let f = x.faces(t);
        let tuple = vec![m.label(&f[2]), m.label(&f[0])];
        target.contains(&tuple) && m.label(&f[1]) == (tuple[0] + tuple[1]) % target.modulus
    };
    fn rec(
        e: usize,
        cur: &mut DeterministicMap,
        ctx: &(&[Option<usize>], &[usize], &[Vec<Nd>], &[Vec<usize>]),
        tri_ok: &dyn Fn(&DeterministicMap, Nd) -> bool,
        done: &mut dyn FnMut(&DeterministicMap),
    ) {
        let (fixed, allowed, check_at, orbits) = *ctx;
        if e == fixed.len() {
            done(cur);
            return;
        }
        for &a in allowed {
            if fixed[e].is_some_and(|b| b != a) {
                continue;
            }
            if orbits[e].iter().any(|&o| o < e && cur.labels[o] != a) {
                continue;
            }
            cur.labels[e] = a;
            if check_at[e].iter().all(|&t| tri_ok(cur, t)) {
                rec(e + 1, cur, ctx, tri_ok, done);
            }
        }
        cur.labels[e] = 0;
    }
    if free_triangles.iter().all(|&t| tri_ok(&cur, t)) {
        let ctx = (&fixed[..], &labels_allowed[..], &check_at[..], &orbits[..]);
        rec(0, &mut cur, &ctx, &tri_ok, &mut |m| {
            if m.is_valid(x, target) {
                out.push(m.clone());
            }
        });
    }
    out
}

/// Θ: mixtures of deterministic maps to simplicial distributions.
pub fn theta(x: &SSet, target: Target, weights: &[(DeterministicMap, Rational)]) -> Result<SimplicialDistribution> {
    SimplicialDistribution::from_fn(x, target, |s| {
        let w = SimplexWord::nd(s);
        let mut acc: BTreeMap<Outcome, Rational> = BTreeMap::new();
        for (m, c) in weights {
            *acc.entry(m.outcome(x, &w)).or_insert_with(Rational::zero) += c;
        }
        Dist::new(acc)
    })
}

/// Distribution on `X // G` induced by an equivariant one on `X`.
pub fn induced_borel(
    p: &SimplicialDistribution,
    x: &SSet,
    action: &SimplicialGAction,
    b: &BorelSpace,
) -> Result<SimplicialDistribution> {
    if !p.is_equivariant(x, action) {
        return Err(Error::NotEquivariant("distribution is not equivariant".into()));
    }
    SimplicialDistribution::from_fn(b.space(), p.target, |s| Ok(p.eval(&b.space_part(&SimplexWord::nd(s)))))
}

/// Relative data transported to `X // G`: an edge `[(1,g), y]` is fixed
/// whenever `y` is.
pub fn induced_relative(rel: &Relative, b: &BorelSpace) -> Relative {
    let w = b.space();
    let fixed = w
        .nd_ids(1)
        .filter_map(|e| {
            let y = b.space_part(&SimplexWord::nd(e));
            if y.is_degenerate() {
                return None;
            }
            rel.fixed.iter().find(|&&(f, _)| f == y.base().idx).map(|&(_, a)| (e.idx, a))
        })
        .collect();
    Relative { fixed }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ContextualityOptions<'a> {
    pub equivariant: Option<&'a SimplicialGAction>,
    pub relative: Option<&'a Relative>,
    pub via_borel: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub contextual: bool,
    /// Mixture reproducing the distribution; empty when contextual.
    pub weights: Vec<(DeterministicMap, Rational)>,
    /// Number of deterministic maps the LP ranged over.
    pub candidates: usize,
}

/// Decides whether `p` lies in the image of Θ (restricted to equivariant or
/// relative deterministic maps as requested).
pub fn check_contextual(p: &SimplicialDistribution, x: &SSet, opts: ContextualityOptions<'_>) -> Result<Certificate> {
    p.validate(x)?;
    if let Some(a) = opts.equivariant {
        if !p.is_equivariant(x, a) {
            return Err(Error::NotEquivariant("distribution is not equivariant".into()));
        }
    }
    if let Some(rel) = opts.relative {
        if !p.is_relative(rel) {
            return Err(Error::InvalidDistribution("distribution is not a point mass on the relative edges".into()));
        }
    }
    if opts.via_borel {
        let a = opts.equivariant.ok_or_else(|| Error::Prerequisite("the Borel route needs a group action".into()))?;
        let b = borel(a, x, x.truncation())?;
        let pb = induced_borel(p, x, a, &b)?;
        let rel = opts.relative.map(|r| induced_relative(r, &b));
        let plain = ContextualityOptions { equivariant: None, relative: rel.as_ref(), via_borel: false };
        return check_contextual(&pb, b.space(), plain);
    }
    let eopts = EnumerateOptions { equivariant: opts.equivariant, relative: opts.relative };
    let cert = solve_mixture(p, x, enumerate_deterministic(x, p.target, eopts), None)?;
    if let Some(rel) = opts.relative {
        // Same question with the relative condition imposed in the LP instead.
        let all = enumerate_deterministic(x, p.target, EnumerateOptions { relative: None, ..eopts });
        let by_constraint = solve_mixture(p, x, all, Some(rel))?;
        if by_constraint.contextual != cert.contextual {
            return Err(Error::Internal("relative filter and relative LP constraints disagree".into()));
        }
    }
    Ok(cert)
}

fn solve_mixture(
    p: &SimplicialDistribution,
    x: &SSet,
    maps: Vec<DeterministicMap>,
    relative: Option<&Relative>,
) -> Result<Certificate> {
    let k = maps.len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    rows.push(vec![Rational::one(); k]);
    rhs.push(Rational::one());
    for n in 1..=x.truncation() {
        let tuples = p.target.tuples(n);
        for s in x.nd_ids(n) {
            let w = SimplexWord::nd(s);
            let outs: Vec<Outcome> = maps.iter().map(|m| m.outcome(x, &w)).collect();
            for t in &tuples {
                rows.push(outs.iter().map(|o| if o == t { Rational::one() } else { Rational::zero() }).collect());
                rhs.push(p.at(s).get(t));
            }
        }
    }
    if let Some(rel) = relative {
        for &(e, a) in &rel.fixed {
            rows.push(maps.iter().map(|m| if m.labels[e] != a { Rational::one() } else { Rational::zero() }).collect());
            rhs.push(Rational::zero());
        }
    }
    match lp_feasible(&rows, &rhs, k)? {
        LpOutcome::Infeasible => Ok(Certificate { contextual: true, weights: Vec::new(), candidates: k }),
        LpOutcome::Feasible(w) => {
            let weights: Vec<(DeterministicMap, Rational)> =
                maps.into_iter().zip(w).filter(|(_, c)| !c.is_zero()).collect();
            if theta(x, p.target, &weights)? != *p {
                return Err(Error::Internal("certificate does not reproduce the distribution".into()));
            }
            Ok(Certificate { contextual: false, weights, candidates: k })
        }
    }
}

#[cfg(test)]
mod tests;
