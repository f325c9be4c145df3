//! Finite groups acting on simplicial sets and the Borel construction.

pub use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};
use crate::simplicial::{realize, Cofiber, ExplicitModel, Nd, Realized, SSet, SimplexWord, SimplicialMap};

/// Action of a finite group on a presented space by permutations of the
/// nondegenerate simplices in each dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialGAction {
    group: FiniteGroup,
    /// `perms[g][dim][idx]` is the index of `g · (dim, idx)`.
    perms: Vec<Vec<Vec<usize>>>,
}

impl SimplicialGAction {
    /// Checks that every element acts by a simplicial automorphism, the
    /// identity acts trivially, and composition follows the table.
    pub fn new(group: FiniteGroup, space: &SSet, perms: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if perms.len() != group.order() {
            return Err(Error::NotEquivariant(format!(
                "{} permutations for a group of order {}",
                perms.len(),
                group.order()
            )));
        }
        for (g, p) in perms.iter().enumerate() {
            if p.len() != space.truncation() + 1 {
                return Err(Error::NotEquivariant(format!("element {} has the wrong number of levels", group.name(g))));
            }
            for (n, level) in p.iter().enumerate() {
                let mut seen = vec![false; space.nd_count(n)];
                if level.len() != seen.len()
                    || level.iter().any(|&v| v >= seen.len() || std::mem::replace(&mut seen[v], true))
                {
                    return Err(Error::NotEquivariant(format!(
                        "element {} does not permute the {n}-simplices",
                        group.name(g)
                    )));
                }
            }
        }
        let action = Self { group, perms };
        let e = action.group.identity();
        if action.perms[e].iter().any(|lvl| lvl.iter().enumerate().any(|(i, &v)| i != v)) {
            return Err(Error::NotEquivariant("identity acts nontrivially".into()));
        }
        for g in action.group.elements() {
            action.as_map(g).validate(space, space).map_err(|e| {
                Error::NotEquivariant(format!("element {} is not simplicial: {e}", action.group.name(g)))
            })?;
            for h in action.group.elements() {
                let gh = action.group.mul(g, h);
                for (n, level) in action.perms[h].iter().enumerate() {
                    for (i, &hi) in level.iter().enumerate() {
                        if action.perms[g][n][hi] != action.perms[gh][n][i] {
                            return Err(Error::NotEquivariant("action does not respect the group law".into()));
                        }
                    }
                }
            }
        }
        Ok(action)
    }

    /// Group generated by the given automorphisms, acting on `space`.
    pub fn from_generators(space: &SSet, gens: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let offsets: Vec<usize> = (0..=space.truncation())
            .scan(0, |acc, n| {
                let o = *acc;
                *acc += space.nd_count(n);
                Some(o)
            })
            .collect();
        let total: usize = (0..=space.truncation()).map(|n| space.nd_count(n)).sum();
        let offs = &offsets;
        let flat: Vec<Vec<usize>> = gens
            .iter()
            .map(|g| {
                if g.len() != space.truncation() + 1 || (0..g.len()).any(|n| g[n].len() != space.nd_count(n)) {
                    return Err(Error::NotEquivariant("generator has the wrong shape".into()));
                }
                Ok(g.iter().enumerate().flat_map(|(n, lvl)| lvl.iter().map(move |&v| v + offs[n])).collect())
            })
            .collect::<Result<_>>()?;
        if gens.is_empty() {
            let perms = vec![(0..=space.truncation()).map(|n| (0..space.nd_count(n)).collect()).collect()];
            return Self::new(FiniteGroup::cyclic(1), space, perms);
        }
        let degree = total;
        for f in &flat {
            let mut seen = vec![false; degree];
            for &v in f {
                if v >= degree || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotEquivariant("generator is not a permutation".into()));
                }
            }
        }
        let (group, elems) = FiniteGroup::from_permutations(&flat)?;
        let perms = elems
            .iter()
            .map(|p| {
                (0..=space.truncation())
                    .map(|n| (0..space.nd_count(n)).map(|i| p[offsets[n] + i] - offsets[n]).collect())
                    .collect()
            })
            .collect();
        Self::new(group, space, perms)
    }

    /// `group` acting trivially.
    pub fn trivial(group: FiniteGroup, space: &SSet) -> Self {
        let id: Vec<Vec<usize>> = (0..=space.truncation()).map(|n| (0..space.nd_count(n)).collect()).collect();
        Self { perms: vec![id; group.order()], group }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn act_nd(&self, g: usize, x: Nd) -> Nd {
        Nd::new(x.dim, self.perms[g][x.dim][x.idx])
    }

    pub fn act(&self, g: usize, w: &SimplexWord) -> SimplexWord {
        SimplexWord::new(w.theta().to_vec(), self.act_nd(g, w.base()))
    }

    pub fn as_map(&self, g: usize) -> SimplicialMap {
        SimplicialMap::new(
            self.perms[g]
                .iter()
                .enumerate()
                .map(|(n, lvl)| lvl.iter().map(|&i| SimplexWord::nd(Nd::new(n, i))).collect())
                .collect(),
        )
    }

    pub fn is_invariant(&self, subset: &[Nd]) -> bool {
        self.group.elements().all(|g| subset.iter().all(|&x| subset.contains(&self.act_nd(g, x))))
    }

    /// The induced action on `X / Z` for an invariant subspace `Z`.
    pub fn descend(&self, cof: &Cofiber) -> Result<Self> {
        let y = &cof.space;
        let mut perms = Vec::with_capacity(self.group.order());
        for g in self.group.elements() {
            let mut lvls = Vec::new();
            for n in 0..=y.truncation() {
                let mut lvl = Vec::new();
                for s in y.nd_ids(n) {
                    let img = match cof.lift(s) {
                        None => s,
                        Some(orig) => {
                            let w = cof.quotient.apply(&SimplexWord::nd(self.act_nd(g, orig)));
                            if w.is_degenerate() || w.dim() != n {
                                return Err(Error::NotEquivariant("collapsed subspace is not invariant".into()));
                            }
                            w.base()
                        }
                    };
                    lvl.push(img.idx);
                }
                lvls.push(lvl);
            }
            perms.push(lvls);
        }
        Self::new(self.group.clone(), y, perms)
    }

    /// The same group acting on a product by the given action on each factor.
    pub fn on_product(left: &Self, right: &Self, prod: &Realized<(SimplexWord, SimplexWord)>) -> Result<Self> {
        if left.group != right.group {
            return Err(Error::NotEquivariant("factors carry different groups".into()));
        }
        let y = &prod.space;
        let perms = left
            .group
            .elements()
            .map(|g| {
                (0..=y.truncation())
                    .map(|n| {
                        y.nd_ids(n)
                            .map(|s| {
                                let (a, b) = prod.rep(s);
                                prod.try_word_of(&(left.act(g, a), right.act(g, b))).map(|w| w.base().idx)
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(left.group.clone(), y, perms)
    }
}

/// `f(g · x) = g · f(x)` for every element and nondegenerate simplex.
pub fn is_equivariant_map(ax: &SimplicialGAction, ay: &SimplicialGAction, x: &SSet, f: &SimplicialMap) -> bool {
    ax.group == ay.group
        && ax.group.elements().all(|g| {
            (0..=x.truncation()).all(|n| x.nd_ids(n).all(|s| f.image(ax.act_nd(g, s)) == &ay.act(g, f.image(s))))
        })
}

/// Explicit model of the Borel construction: simplices `[(1, g_1, …, g_n), x]`.
#[derive(Clone, Copy, Debug)]
pub struct BorelModel<'a> {
    pub action: &'a SimplicialGAction,
    pub space: &'a SSet,
}

pub type BorelSimplex = (Vec<usize>, SimplexWord);

impl ExplicitModel for BorelModel<'_> {
    type S = BorelSimplex;

    fn simplices(&self, n: usize) -> Vec<BorelSimplex> {
        let g = self.action.group();
        let mut tuples = vec![Vec::new()];
        for _ in 0..n {
            tuples = tuples
                .into_iter()
                .flat_map(|t: Vec<usize>| {
                    g.elements().map(move |a| {
                        let mut u = t.clone();
                        u.push(a);
                        u
                    })
                })
                .collect();
        }
        let words = self.space.words(n);
        let mut out = Vec::with_capacity(tuples.len() * words.len());
        for t in &tuples {
            for w in &words {
                out.push((t.clone(), w.clone()));
            }
        }
        out
    }

    fn face(&self, i: usize, s: &BorelSimplex) -> BorelSimplex {
        let g = self.action.group();
        let (gs, x) = s;
        let n = gs.len();
        let dx = self.space.face(i, x);
        let mut t = gs.clone();
        if i == 0 {
            let g1 = t.remove(0);
            (t, self.action.act(g.inv(g1), &dx))
        } else if i == n {
            t.pop();
            (t, dx)
        } else {
            t[i - 1] = g.mul(gs[i - 1], gs[i]);
            t.remove(i);
            (t, dx)
        }
    }

    fn degeneracy(&self, j: usize, s: &BorelSimplex) -> BorelSimplex {
        let mut t = s.0.clone();
        t.insert(j, self.action.group().identity());
        (t, s.1.degeneracy(j))
    }

    fn label(&self, s: &BorelSimplex) -> String {
        let g = self.action.group();
        let mut parts = vec![g.name(g.identity()).to_string()];
        parts.extend(s.0.iter().map(|&a| g.name(a).to_string()));
        format!("[({}),{}]", parts.join(","), self.space.describe(&s.1))
    }
}

/// Truncated Borel construction `X // G` with the inclusion of `X`.
#[derive(Clone, Debug)]
pub struct BorelSpace {
    pub realized: Realized<BorelSimplex>,
    pub inclusion: SimplicialMap,
}

impl BorelSpace {
    pub fn space(&self) -> &SSet {
        &self.realized.space
    }

    pub fn rep(&self, y: Nd) -> &BorelSimplex {
        self.realized.rep(y)
    }

    pub fn word(&self, gs: &[usize], x: &SimplexWord) -> Option<&SimplexWord> {
        self.realized.word_of(&(gs.to_vec(), x.clone()))
    }

    /// The `X`-coordinate of any simplex, i.e. the composite to `X` that an
    /// equivariant map into a trivial-action target factors through.
    pub fn space_part(&self, w: &SimplexWord) -> SimplexWord {
        self.rep(w.base()).1.precompose(w.theta())
    }

    /// The group coordinates of any simplex.
    pub fn group_part(&self, w: &SimplexWord, identity: usize) -> Vec<usize> {
        let gs = &self.rep(w.base()).0;
        // Pulling back along θ: group entry k is the product over the steps
        // θ(k-1) -> θ(k); equal values give the identity.
        (1..=w.dim())
            .map(|k| {
                let (a, b) = (w.theta()[k - 1] as usize, w.theta()[k] as usize);
                if a == b {
                    identity
                } else {
                    gs[b - 1]
                }
            })
            .collect()
    }
}

pub fn borel(action: &SimplicialGAction, space: &SSet, truncation: usize) -> Result<BorelSpace> {
    let n = truncation.min(space.truncation());
    let realized = realize(&BorelModel { action, space }, n)?;
    let e = action.group().identity();
    let inclusion = SimplicialMap::from_fn(space, |x| {
        if x.dim > n {
            return Err(Error::Dimension("space exceeds the Borel truncation".into()));
        }
        realized.try_word_of(&(vec![e; x.dim], SimplexWord::nd(x)))
    })?;
    Ok(BorelSpace { realized, inclusion })
}
