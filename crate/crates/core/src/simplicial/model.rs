use super::sset::{check_truncation, SSet, SSetBuilder};
use super::word::{Nd, SimplexWord};
use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

/// A simplicial set given by explicit simplices in every dimension, with
/// degenerate simplices listed alongside nondegenerate ones.
pub trait ExplicitModel {
    type S: Clone + Eq + Hash + Debug;

    /// Every `n`-simplex, in a fixed order.
    fn simplices(&self, n: usize) -> Vec<Self::S>;
    fn face(&self, i: usize, s: &Self::S) -> Self::S;
    fn degeneracy(&self, j: usize, s: &Self::S) -> Self::S;
    fn label(&self, s: &Self::S) -> String;
}

/// A presented simplicial set together with the dictionary back to the
/// explicit model it came from.
#[derive(Clone, Debug)]
pub struct Realized<S> {
    pub space: SSet,
    index: HashMap<S, SimplexWord>,
    reps: Vec<Vec<S>>,
}

impl<S: Clone + Eq + Hash + Debug> Realized<S> {
    pub fn word_of(&self, s: &S) -> Option<&SimplexWord> {
        self.index.get(s)
    }

    pub fn try_word_of(&self, s: &S) -> Result<SimplexWord> {
        self.index.get(s).cloned().ok_or_else(|| Error::InvalidMap(format!("{s:?} is not a simplex of the target")))
    }

    /// Explicit simplex behind a nondegenerate id.
    pub fn rep(&self, x: Nd) -> &S {
        &self.reps[x.dim][x.idx]
    }

    pub fn contains(&self, s: &S) -> bool {
        self.index.contains_key(s)
    }
}

/// Classifies the simplices of `model` up to `truncation`: an `n`-simplex is
/// degenerate exactly when it is `s_j` of some `(n-1)`-simplex.
pub fn realize<M: ExplicitModel>(model: &M, truncation: usize) -> Result<Realized<M::S>> {
    check_truncation(truncation)?;
    let mut b = SSetBuilder::new(truncation)?;
    let mut index: HashMap<M::S, SimplexWord> = HashMap::new();
    let mut reps: Vec<Vec<M::S>> = vec![Vec::new(); truncation + 1];
    for n in 0..=truncation {
        let level = model.simplices(n);
        for s in &level {
            if index.contains_key(s) {
                continue;
            }
            let faces = if n == 0 {
                Vec::new()
            } else {
                (0..=n)
                    .map(|i| {
                        let f = model.face(i, s);
                        index.get(&f).cloned().ok_or_else(|| {
                            Error::InvalidSpace(format!("face d{i} of {s:?} is not among the listed simplices"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            let id = b.add(model.label(s), faces)?;
            index.insert(s.clone(), SimplexWord::nd(id));
            reps[n].push(s.clone());
        }
        if n < truncation {
            for s in &level {
                let w = index[s].clone();
                for j in 0..=n {
                    let t = model.degeneracy(j, s);
                    let tw = w.degeneracy(j);
                    match index.get(&t) {
                        Some(prev) if *prev != tw => {
                            return Err(Error::InvalidSpace(format!("{t:?} arises from two different degeneracies")))
                        }
                        Some(_) => {}
                        None => {
                            index.insert(t, tw);
                        }
                    }
                }
            }
        }
    }
    Ok(Realized { space: b.finish()?, index, reps })
}

/// Nerve of a finite group, optionally restricted to tuples of allowed
/// elements that pairwise commute.
#[derive(Clone, Debug)]
pub struct GroupNerve {
    pub group: FiniteGroup,
    allowed: Vec<usize>,
    commuting: bool,
}

impl GroupNerve {
    pub fn full(group: FiniteGroup) -> Self {
        let allowed = group.elements().collect();
        Self { group, allowed, commuting: false }
    }

    /// Tuples of pairwise commuting elements drawn from `allowed` (which
    /// must contain the identity).
    pub fn commuting(group: FiniteGroup, allowed: Vec<usize>) -> Self {
        Self { group, allowed, commuting: true }
    }
}

impl ExplicitModel for GroupNerve {
    type S = Vec<usize>;

    fn simplices(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for t in &out {
                for &a in &self.allowed {
                    if !self.commuting || t.iter().all(|&b| self.group.commute(a, b)) {
                        let mut u = t.clone();
                        u.push(a);
                        next.push(u);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn face(&self, i: usize, s: &Vec<usize>) -> Vec<usize> {
        nerve_face(&self.group, i, s)
    }

    fn degeneracy(&self, j: usize, s: &Vec<usize>) -> Vec<usize> {
        let mut t = s.clone();
        t.insert(j, self.group.identity());
        t
    }

    fn label(&self, s: &Vec<usize>) -> String {
        tuple_label(&self.group, s)
    }
}

pub fn nerve_face(g: &FiniteGroup, i: usize, s: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut t = s.to_vec();
    if i == 0 {
        t.remove(0);
    } else if i == n {
        t.pop();
    } else {
        t[i - 1] = g.mul(s[i - 1], s[i]);
        t.remove(i);
    }
    t
}

pub fn tuple_label(g: &FiniteGroup, s: &[usize]) -> String {
    match s.len() {
        0 => "*".to_string(),
        1 => g.name(s[0]).to_string(),
        _ => format!("({})", s.iter().map(|&a| g.name(a)).collect::<Vec<_>>().join(",")),
    }
}

/// Smallest simplicial subset of `inner` containing the given simplices.
#[derive(Clone, Debug)]
pub struct Generated<M: ExplicitModel> {
    inner: M,
    levels: Vec<Vec<M::S>>,
    names: HashMap<M::S, String>,
}

impl<M: ExplicitModel> Generated<M> {
    /// `generators` may have mixed dimensions; `dim_of` reports each one's.
    pub fn new(inner: M, generators: &[M::S], dim_of: impl Fn(&M::S) -> usize, truncation: usize) -> Self {
        let mut levels: Vec<Vec<M::S>> = vec![Vec::new(); truncation + 1];
        let mut seen: HashSet<M::S> = HashSet::new();
        for g in generators {
            let d = dim_of(g);
            if d <= truncation && seen.insert(g.clone()) {
                levels[d].push(g.clone());
            }
        }
        for n in (1..=truncation).rev() {
            let mut k = 0;
            while k < levels[n].len() {
                let s = levels[n][k].clone();
                for i in 0..=n {
                    let f = inner.face(i, &s);
                    if seen.insert(f.clone()) {
                        levels[n - 1].push(f);
                    }
                }
                k += 1;
            }
        }
        for n in 0..truncation {
            let cur = levels[n].clone();
            for s in &cur {
                for j in 0..=n {
                    let t = inner.degeneracy(j, s);
                    if seen.insert(t.clone()) {
                        levels[n + 1].push(t);
                    }
                }
            }
        }
        Self { inner, levels, names: HashMap::new() }
    }

    pub fn with_names(mut self, names: HashMap<M::S, String>) -> Self {
        self.names = names;
        self
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: ExplicitModel> ExplicitModel for Generated<M> {
    type S = M::S;

    fn simplices(&self, n: usize) -> Vec<M::S> {
        self.levels.get(n).cloned().unwrap_or_default()
    }
    fn face(&self, i: usize, s: &M::S) -> M::S {
        self.inner.face(i, s)
    }
    fn degeneracy(&self, j: usize, s: &M::S) -> M::S {
        self.inner.degeneracy(j, s)
    }
    fn label(&self, s: &M::S) -> String {
        self.names.get(s).cloned().unwrap_or_else(|| self.inner.label(s))
    }
}

/// Degreewise product of two presented spaces.
#[derive(Clone, Copy, Debug)]
pub struct Product<'a> {
    pub left: &'a SSet,
    pub right: &'a SSet,
}

impl ExplicitModel for Product<'_> {
    type S = (SimplexWord, SimplexWord);

    fn simplices(&self, n: usize) -> Vec<Self::S> {
        let r = self.right.words(n);
        let mut out = Vec::new();
        for a in self.left.words(n) {
            for b in &r {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }
    fn face(&self, i: usize, s: &Self::S) -> Self::S {
        (self.left.face(i, &s.0), self.right.face(i, &s.1))
    }
    fn degeneracy(&self, j: usize, s: &Self::S) -> Self::S {
        (s.0.degeneracy(j), s.1.degeneracy(j))
    }
    fn label(&self, s: &Self::S) -> String {
        format!("({}, {})", self.left.describe(&s.0), self.right.describe(&s.1))
    }
}

/// The standard simplex `Δ[k]`: simplices are monotone maps `[n] -> [k]`.
#[derive(Clone, Copy, Debug)]
pub struct StandardSimplex(pub usize);

impl ExplicitModel for StandardSimplex {
    type S = Vec<u8>;

    fn simplices(&self, n: usize) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for _ in 0..=n {
            let mut next = Vec::new();
            for t in &out {
                let lo = t.last().copied().unwrap_or(0);
                for v in lo..=self.0 as u8 {
                    let mut u = t.clone();
                    u.push(v);
                    next.push(u);
                }
            }
            out = next;
        }
        out
    }
    fn face(&self, i: usize, s: &Vec<u8>) -> Vec<u8> {
        let mut t = s.clone();
        t.remove(i);
        t
    }
    fn degeneracy(&self, j: usize, s: &Vec<u8>) -> Vec<u8> {
        let mut t = s.clone();
        t.insert(j, s[j]);
        t
    }
    fn label(&self, s: &Vec<u8>) -> String {
        s.iter().map(|v| v.to_string()).collect()
    }
}
