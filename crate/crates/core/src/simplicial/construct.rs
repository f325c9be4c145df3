use super::map::SimplicialMap;
use super::model::{realize, GroupNerve, Product, Realized, StandardSimplex};
use super::sset::{SSet, SSetBuilder};
use super::word::{Nd, SimplexWord};
use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};
use std::collections::HashSet;

/// One vertex and one nondegenerate edge `theta`.
pub fn circle(truncation: usize) -> Result<SSet> {
    let mut b = SSetBuilder::new(truncation)?;
    let pt = SimplexWord::nd(b.add("*", vec![])?);
    b.add("theta", vec![pt.clone(), pt])?;
    b.finish()
}

pub fn point(truncation: usize) -> Result<SSet> {
    Ok(realize(&StandardSimplex(0), truncation)?.space)
}

pub fn standard_simplex(k: usize, truncation: usize) -> Result<SSet> {
    Ok(realize(&StandardSimplex(k), truncation)?.space)
}

/// Nerve of a finite group; simplices are tuples of element ids.
pub fn nerve(group: &FiniteGroup, truncation: usize) -> Result<Realized<Vec<usize>>> {
    realize(&GroupNerve::full(group.clone()), truncation)
}

/// Nerve of an abelian group.
pub fn nerve_abelian(group: &FiniteGroup, truncation: usize) -> Result<Realized<Vec<usize>>> {
    if !group.is_abelian() {
        return Err(Error::InvalidGroup("group is not abelian".into()));
    }
    nerve(group, truncation)
}

/// The circle `S¹_(a)` inside `N(Z/d)`: generated by the edge `a`.
pub fn circle_in_nerve(d: usize, a: usize, truncation: usize) -> Result<Realized<Vec<usize>>> {
    let g = FiniteGroup::cyclic(d);
    let gen = super::model::Generated::new(GroupNerve::full(g), &[vec![a % d]], |s| s.len(), truncation);
    realize(&gen, truncation)
}

pub fn product(x: &SSet, y: &SSet) -> Result<Realized<(SimplexWord, SimplexWord)>> {
    let n = x.truncation().min(y.truncation());
    realize(&Product { left: x, right: y }, n)
}

/// `X / Z` with `Z` collapsed to a basepoint, plus the quotient map.
#[derive(Clone, Debug)]
pub struct Cofiber {
    pub space: SSet,
    pub basepoint: Nd,
    pub quotient: SimplicialMap,
    lift: Vec<Vec<Option<Nd>>>,
}

impl Cofiber {
    /// The simplex of `X` a nondegenerate simplex of the cofiber came from.
    pub fn lift(&self, y: Nd) -> Option<Nd> {
        self.lift[y.dim][y.idx]
    }
}

pub fn cofiber(x: &SSet, z: &[Nd]) -> Result<Cofiber> {
    let zs: HashSet<Nd> = z.iter().copied().collect();
    for &s in z {
        if s.dim > x.truncation() || s.idx >= x.nd_count(s.dim) {
            return Err(Error::InvalidSpace("subspace refers to an unknown simplex".into()));
        }
        if x.faces(s).iter().any(|f| !zs.contains(&f.base())) {
            return Err(Error::InvalidSpace(format!("subspace is not closed under faces at {}", x.name(s))));
        }
    }
    let mut b = SSetBuilder::new(x.truncation())?;
    let star = b.add("*", vec![])?;
    let mut new_id: Vec<Vec<Option<Nd>>> = vec![Vec::new(); x.truncation() + 1];
    let mut lift: Vec<Vec<Option<Nd>>> = vec![vec![None]; 1];
    lift.resize(x.truncation() + 1, Vec::new());
    let collapse = |w: &SimplexWord, new_id: &Vec<Vec<Option<Nd>>>| -> SimplexWord {
        match new_id[w.base().dim][w.base().idx] {
            Some(y) => SimplexWord::new(w.theta().to_vec(), y),
            None => SimplexWord::new(vec![0; w.dim() + 1], star),
        }
    };
    for n in 0..=x.truncation() {
        for s in x.nd_ids(n) {
            if zs.contains(&s) {
                new_id[n].push(None);
                continue;
            }
            let faces = x.faces(s).iter().map(|w| collapse(w, &new_id)).collect();
            let y = b.add(x.name(s), faces)?;
            new_id[n].push(Some(y));
            lift[n].push(Some(s));
        }
    }
    let space = b.finish()?;
    let quotient = SimplicialMap::from_fn(x, |s| Ok(collapse(&SimplexWord::nd(s), &new_id)))?;
    Ok(Cofiber { space, basepoint: star, quotient, lift })
}

/// Face-closure of a set of nondegenerate simplices.
pub fn face_closure(x: &SSet, gens: &[Nd]) -> Vec<Nd> {
    let mut seen: HashSet<Nd> = HashSet::new();
    let mut stack: Vec<Nd> = gens.to_vec();
    while let Some(s) = stack.pop() {
        if seen.insert(s) {
            stack.extend(x.faces(s).iter().map(SimplexWord::base));
        }
    }
    let mut out: Vec<Nd> = seen.into_iter().collect();
    out.sort();
    out
}

/// `S¹ × S¹` with edges `x0 = (theta, s0 *)`, `x1 = (s0 *, theta)`,
/// `x = (theta, theta)` and triangles `sigma0 = (s1 theta, s0 theta)`,
/// `sigma1 = (s0 theta, s1 theta)`.
pub fn torus(truncation: usize) -> Result<SSet> {
    let c = circle(truncation)?;
    let p = product(&c, &c)?;
    let th = c.word("theta").expect("circle edge");
    let pt = c.word("*").expect("circle vertex").degeneracy(0);
    let named = [
        ((th.clone(), pt.clone()), "x0"),
        ((pt, th.clone()), "x1"),
        ((th.clone(), th.clone()), "x"),
        ((th.degeneracy(1), th.degeneracy(0)), "sigma0"),
        ((th.degeneracy(0), th.degeneracy(1)), "sigma1"),
    ];
    Ok(p.space.renamed(|nd, _| {
        if nd.dim == 0 {
            return Some("*".into());
        }
        named.iter().find(|(s, _)| p.rep(nd) == s).map(|(_, n)| n.to_string())
    }))
}
