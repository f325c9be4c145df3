//! Central extensions of partial groups `NA ×_β M`, pseudo-sections, the
//! cocycles `β`, `Φ`, `β_G`, and the spaces `N(Z_d, K) -> N̄(Z_d, K)`.

mod action;

pub use action::{beta_table, phi_value, BorelRoutes, ExtensionAction, SemidirectIso, SemidirectModel};

use crate::algebra::FiniteGroup;
use crate::cohomology::{class_zero, coboundary, Cochain};
use crate::error::{Error, Result};
use crate::simplicial::{
    edge_label, edge_relation_holds, nerve_face, realize, tuple_label, ExplicitModel, Generated, GroupNerve, Nd,
    Realized, SSet, SimplexWord, SimplicialMap,
};
use std::collections::{HashMap, HashSet};

/// A central group extension `Z_d -> K -> K̄` given by a central element `J`
/// of order `d`.
#[derive(Clone, Debug)]
pub struct GroupExtension {
    group: FiniteGroup,
    j: usize,
    d: u64,
    quotient: FiniteGroup,
    proj: Vec<usize>,
    cosets: Vec<Vec<usize>>,
}

impl GroupExtension {
    pub fn new(group: FiniteGroup, j: usize) -> Result<Self> {
        let d = group.element_order(j);
        if d < 2 {
            return Err(Error::InvalidGroup("the central element must be nontrivial".into()));
        }
        let (quotient, proj, cosets) = group.quotient_by_central(j)?;
        Ok(Self { group, j, d: d as u64, quotient, proj, cosets })
    }

    /// As [`GroupExtension::new`], also checking that `J` has order `d`.
    pub fn with_modulus(group: FiniteGroup, j: usize, d: u64) -> Result<Self> {
        let ext = Self::new(group, j)?;
        if ext.d != d {
            return Err(Error::InvalidGroup(format!("{} has order {}, not {d}", ext.group.name(j), ext.d)));
        }
        Ok(ext)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn quotient(&self) -> &FiniteGroup {
        &self.quotient
    }

    pub fn central(&self) -> usize {
        self.j
    }

    pub fn modulus(&self) -> u64 {
        self.d
    }

    pub fn project(&self, k: usize) -> usize {
        self.proj[k]
    }

    pub fn lifts(&self, kbar: usize) -> &[usize] {
        &self.cosets[kbar]
    }

    /// `J^a`.
    pub fn fiber(&self, a: u64) -> usize {
        self.group.pow(self.j, (a % self.d) as usize)
    }

    /// The `a` with `k = J^a`, if `k` lies in the fiber.
    pub fn fiber_coord(&self, k: usize) -> Option<u64> {
        self.group.log(self.j, k).map(|a| a as u64)
    }

    fn is_torsion(&self, k: usize) -> bool {
        self.group.pow(k, self.d as usize) == self.group.identity()
    }

    /// Whether the lifts of `kbar` are `d`-torsion (independent of the lift).
    pub fn is_torsion_bar(&self, kbar: usize) -> bool {
        self.is_torsion(self.cosets[kbar][0])
    }

    pub fn lifts_commute(&self, a: usize, b: usize) -> bool {
        self.group.commute(self.cosets[a][0], self.cosets[b][0])
    }

    /// `d`-torsion elements of `K`.
    pub fn torsion_elements(&self) -> Vec<usize> {
        self.group.elements().filter(|&k| self.is_torsion(k)).collect()
    }

    fn check_bar_tuple(&self, t: &[usize]) -> Result<()> {
        for (i, &a) in t.iter().enumerate() {
            if a >= self.quotient.order() || !self.is_torsion_bar(a) {
                return Err(Error::InvalidSpace(format!(
                    "{} is not d-torsion in the quotient",
                    tuple_label(&self.quotient, t)
                )));
            }
            if t[..i].iter().any(|&b| !self.lifts_commute(a, b)) {
                return Err(Error::InvalidSpace(format!("{} has non-commuting lifts", tuple_label(&self.quotient, t))));
            }
        }
        Ok(())
    }
}

/// `N̄(Z_d, K)`: tuples of `K̄` whose lifts are `d`-torsion and commute.
#[derive(Clone, Debug)]
pub struct BarNerve<'a> {
    ext: &'a GroupExtension,
    allowed: Vec<usize>,
}

impl<'a> BarNerve<'a> {
    pub fn new(ext: &'a GroupExtension) -> Self {
        let allowed = ext.quotient.elements().filter(|&a| ext.is_torsion_bar(a)).collect();
        Self { ext, allowed }
    }
}

impl ExplicitModel for BarNerve<'_> {
    type S = Vec<usize>;

    fn simplices(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for t in &out {
                for &a in &self.allowed {
                    if t.iter().all(|&b| self.ext.lifts_commute(a, b)) {
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
        nerve_face(&self.ext.quotient, i, s)
    }
    fn degeneracy(&self, j: usize, s: &Vec<usize>) -> Vec<usize> {
        let mut t = s.clone();
        t.insert(j, self.ext.quotient.identity());
        t
    }
    fn label(&self, s: &Vec<usize>) -> String {
        tuple_label(&self.ext.quotient, s)
    }
}

/// A subspace of a nerve listed level by level.
#[derive(Clone, Debug)]
pub struct TupleModel {
    group: FiniteGroup,
    levels: Vec<Vec<Vec<usize>>>,
    names: HashMap<Vec<usize>, String>,
}

impl TupleModel {
    pub fn from_model(group: &FiniteGroup, m: &impl ExplicitModel<S = Vec<usize>>, truncation: usize) -> Self {
        let levels = (0..=truncation).map(|n| m.simplices(n)).collect();
        let names = (0..=truncation).flat_map(|n| m.simplices(n)).map(|s| (s.clone(), m.label(&s))).collect();
        Self { group: group.clone(), levels, names }
    }

    pub fn levels(&self) -> &[Vec<Vec<usize>>] {
        &self.levels
    }
}

impl ExplicitModel for TupleModel {
    type S = Vec<usize>;

    fn simplices(&self, n: usize) -> Vec<Vec<usize>> {
        self.levels.get(n).cloned().unwrap_or_default()
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
        self.names.get(s).cloned().unwrap_or_else(|| tuple_label(&self.group, s))
    }
}

/// Reduced, with injective spine maps.
pub fn check_partial_group(x: &SSet) -> Result<()> {
    if !x.is_reduced() {
        return Err(Error::InvalidSpace("a partial group must have a single vertex".into()));
    }
    for n in 2..=x.truncation() {
        let mut seen = HashSet::new();
        for w in x.words(n) {
            let spine: Vec<SimplexWord> = (1..=n).map(|k| x.spine_edge(&w, k)).collect();
            if !seen.insert(spine) {
                return Err(Error::InvalidSpace(format!("spine map not injective at {}", x.describe(&w))));
            }
        }
    }
    Ok(())
}

/// A set-theoretic section `η: K̄ -> K` with `η(1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoSection {
    lift: Vec<usize>,
}

impl PseudoSection {
    pub fn new(ext: &GroupExtension, lift: Vec<usize>) -> Result<Self> {
        if lift.len() != ext.quotient.order() {
            return Err(Error::InvalidMap(format!("{} values for {} cosets", lift.len(), ext.quotient.order())));
        }
        for (kbar, &k) in lift.iter().enumerate() {
            if k >= ext.group.order() || ext.proj[k] != kbar {
                return Err(Error::InvalidMap(format!("η({}) is not a lift", ext.quotient.name(kbar))));
            }
        }
        if lift[ext.quotient.identity()] != ext.group.identity() {
            return Err(Error::InvalidMap("η(1) must be 1".into()));
        }
        Ok(Self { lift })
    }

    /// Smallest-index lift of every coset.
    pub fn canonical(ext: &GroupExtension) -> Self {
        Self { lift: ext.cosets.iter().map(|c| c[0]).collect() }
    }

    /// `k̄ ↦ J^{α(k̄)} η(k̄)`; `α` must vanish at the identity.
    pub fn shifted(&self, ext: &GroupExtension, alpha: &[u64]) -> Result<Self> {
        let lift = self.lift.iter().zip(alpha).map(|(&k, &a)| ext.group.mul(ext.fiber(a), k)).collect();
        Self::new(ext, lift)
    }

    pub fn at(&self, kbar: usize) -> usize {
        self.lift[kbar]
    }
}

/// `β(a, b)` with `η(a) η(b) η(ab)^{-1} = J^{β(a, b)}`.
pub fn beta_value(ext: &GroupExtension, eta: &PseudoSection, a: usize, b: usize) -> u64 {
    let g = &ext.group;
    let ab = ext.quotient.mul(a, b);
    let k = g.mul(g.mul(eta.at(a), eta.at(b)), g.inv(eta.at(ab)));
    ext.fiber_coord(k).expect("η is a section, so the product lies in the fiber")
}

/// A central extension of a partial group `M ⊂ N̄(Z_d, K)` by `N Z_d`,
/// with `M` and the total space realized.
#[derive(Clone, Debug)]
pub struct ExtensionScenario {
    pub ext: GroupExtension,
    pub base_model: TupleModel,
    pub base: Realized<Vec<usize>>,
    pub total: Realized<Vec<usize>>,
}

impl ExtensionScenario {
    /// `N Z_d -> N(Z_d, K) -> N̄(Z_d, K)` up to `truncation`.
    pub fn full(ext: GroupExtension, truncation: usize) -> Result<Self> {
        let base_model = TupleModel::from_model(&ext.quotient, &BarNerve::new(&ext), truncation);
        let base = realize(&base_model, truncation)?;
        let total = realize(&GroupNerve::commuting(ext.group.clone(), ext.torsion_elements()), truncation)?;
        Ok(Self { ext, base_model, base, total })
    }

    /// The sub-partial-group `M` generated by the given tuples, and the
    /// skeleton of the pulled-back total space in the dimensions of the
    /// generators.
    pub fn over(
        ext: GroupExtension,
        generators: &[Vec<usize>],
        names: HashMap<Vec<usize>, String>,
        truncation: usize,
    ) -> Result<Self> {
        for t in generators {
            ext.check_bar_tuple(t)?;
        }
        let gen_model = Generated::new(BarNerve::new(&ext), generators, Vec::len, truncation).with_names(names);
        let base_model = TupleModel::from_model(&ext.quotient, &gen_model, truncation);
        let base = realize(&base_model, truncation)?;
        check_partial_group(&base.space)?;
        let top = generators.iter().map(Vec::len).max().unwrap_or(0);
        let mut lifts = Vec::new();
        for level in base_model.levels.iter().take(top + 1) {
            for t in level {
                let mut acc = vec![Vec::new()];
                for &a in t {
                    acc = acc
                        .into_iter()
                        .flat_map(|u: Vec<usize>| {
                            ext.cosets[a].iter().map(move |&k| {
                                let mut v = u.clone();
                                v.push(k);
                                v
                            })
                        })
                        .collect();
                }
                lifts.extend(acc);
            }
        }
        let inner = GroupNerve::commuting(ext.group.clone(), ext.torsion_elements());
        let total = realize(&Generated::new(inner, &lifts, Vec::len, truncation), truncation)?;
        Ok(Self { ext, base_model, base, total })
    }

    pub fn modulus(&self) -> u64 {
        self.ext.d
    }

    /// `K̄`-label of a 1-simplex word of `M`.
    pub fn base_label(&self, w: &SimplexWord) -> usize {
        if w.is_degenerate() {
            self.ext.quotient.identity()
        } else {
            self.base.rep(w.base())[0]
        }
    }

    fn base_edge_labels(&self) -> Vec<usize> {
        self.base.space.nd_ids(1).map(|e| self.base.rep(e)[0]).collect()
    }

    /// The spine tuple of any simplex of `M`.
    pub fn base_tuple(&self, w: &SimplexWord) -> Vec<usize> {
        (1..=w.dim()).map(|k| self.base_label(&self.base.space.spine_edge(w, k))).collect()
    }

    /// `β` on `M` from the pseudo-section `η`; verified to be a cocycle.
    pub fn beta(&self, eta: &PseudoSection) -> Result<Cochain> {
        let m = &self.base.space;
        let c = Cochain::from_fn(m, 2, self.ext.d, |s| {
            let t = self.base.rep(s);
            beta_value(&self.ext, eta, t[0], t[1])
        });
        if m.truncation() > 2 && !coboundary(m, &c)?.is_zero() {
            return Err(Error::Internal("β is not a cocycle".into()));
        }
        Ok(c)
    }

    /// Sections of `π` over `M`, as `K`-labels of the nondegenerate edges,
    /// optionally required to commute with an action. Stops after `limit`.
    pub fn sections(&self, action: Option<&ExtensionAction>, limit: usize) -> Vec<Vec<usize>> {
        let m = &self.base.space;
        let bars = self.base_edge_labels();
        let ne = bars.len();
        // constraints become checkable once their largest edge is assigned
        let mut tri_at: Vec<Vec<Nd>> = vec![Vec::new(); ne];
        for t in m.nd_ids(2) {
            let last = m.faces(t).iter().filter(|f| !f.is_degenerate()).map(|f| f.base().idx).max();
            if let Some(l) = last {
                tri_at[l].push(t);
            }
        }
        let mut orbit_at: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); ne];
        if let Some(act) = action {
            for g in act.group().elements() {
                for (e, &kb) in bars.iter().enumerate() {
                    let ge = self.base.word_of(&vec![act.act_bar(g, kb)]);
                    if let Some(w) = ge.filter(|w| !w.is_degenerate()) {
                        let f = w.base().idx;
                        orbit_at[e.max(f)].push((g, e, f));
                    }
                }
            }
        }
        let group = &self.ext.group;
        let mut out = Vec::new();
        let mut labels = vec![group.identity(); ne];
        fn rec(
            s: &ExtensionScenario,
            k: usize,
            labels: &mut Vec<usize>,
            bars: &[usize],
            tri_at: &[Vec<Nd>],
            orbit_at: &[Vec<(usize, usize, usize)>],
            action: Option<&ExtensionAction>,
            limit: usize,
            out: &mut Vec<Vec<usize>>,
        ) {
            if out.len() >= limit {
                return;
            }
            if k == bars.len() {
                out.push(labels.clone());
                return;
            }
            let g = &s.ext.group;
            let m = &s.base.space;
            for &cand in &s.ext.cosets[bars[k]] {
                labels[k] = cand;
                let tri_ok = tri_at[k].iter().all(|&t| {
                    let f = m.faces(t);
                    let l = |i: usize| edge_label(g, labels, &f[i]);
                    l(1) == g.mul(l(2), l(0))
                });
                let orb_ok =
                    action.is_none_or(|a| orbit_at[k].iter().all(|&(h, e, f)| a.act(h, labels[e]) == labels[f]));
                if tri_ok && orb_ok {
                    rec(s, k + 1, labels, bars, tri_at, orbit_at, action, limit, out);
                }
            }
        }
        rec(self, 0, &mut labels, &bars, &tri_at, &orbit_at, action, limit, &mut out);
        debug_assert!(out.iter().all(|l| edge_relation_holds(m, group, l)));
        out
    }

    /// `[β] = 0` decided by solving `d s = β` and, independently, by looking
    /// for a section of `π`; errors if the two disagree.
    pub fn beta_class_zero(&self, eta: &PseudoSection) -> Result<bool> {
        let b = self.beta(eta)?;
        let by_cochain = class_zero(&self.base.space, &b)?.is_some();
        let by_section = !self.sections(None, 1).is_empty();
        if by_cochain != by_section {
            return Err(Error::Internal("class of β and existence of a section disagree".into()));
        }
        Ok(by_cochain)
    }

    /// The twisted product `NA ×_β M` (nerve of `A ×_β K̄` over `M`) and the
    /// map `((a_i), (m_i)) ↦ (J^{a_i} η(m_i))` into the total space.
    pub fn twisted_product(&self, eta: &PseudoSection) -> Result<(Realized<TwistedSimplex>, SimplicialMap)> {
        let model = TwistedProduct { scenario: self, eta };
        let tw = realize(&model, self.base.space.truncation())?;
        let g = &self.ext.group;
        let map = SimplicialMap::from_fn(&tw.space, |x| {
            let (a, m) = tw.rep(x);
            let t: Vec<usize> = a.iter().zip(m).map(|(&ai, &mi)| g.mul(self.ext.fiber(ai), eta.at(mi))).collect();
            self.total.try_word_of(&t)
        })?;
        map.validate(&tw.space, &self.total.space)?;
        Ok((tw, map))
    }
}

pub type TwistedSimplex = (Vec<u64>, Vec<usize>);

struct TwistedProduct<'a> {
    scenario: &'a ExtensionScenario,
    eta: &'a PseudoSection,
}

impl ExplicitModel for TwistedProduct<'_> {
    type S = TwistedSimplex;

    fn simplices(&self, n: usize) -> Vec<TwistedSimplex> {
        let d = self.scenario.ext.d;
        let mut out = Vec::new();
        for m in self.scenario.base_model.simplices(n) {
            let mut acc = vec![Vec::new()];
            for _ in 0..n {
                acc = acc
                    .into_iter()
                    .flat_map(|u: Vec<u64>| {
                        (0..d).map(move |a| {
                            let mut v = u.clone();
                            v.push(a);
                            v
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(|a| (a, m.clone())));
        }
        out
    }

    fn face(&self, i: usize, s: &TwistedSimplex) -> TwistedSimplex {
        let ext = &self.scenario.ext;
        let (a, m) = s;
        let n = m.len();
        let mut a2 = a.clone();
        if i == 0 {
            a2.remove(0);
        } else if i == n {
            a2.pop();
        } else {
            a2[i - 1] = (a[i - 1] + a[i] + beta_value(ext, self.eta, m[i - 1], m[i])) % ext.d;
            a2.remove(i);
        }
        (a2, nerve_face(&ext.quotient, i, m))
    }

    fn degeneracy(&self, j: usize, s: &TwistedSimplex) -> TwistedSimplex {
        let (mut a, mut m) = s.clone();
        a.insert(j, 0);
        m.insert(j, self.scenario.ext.quotient.identity());
        (a, m)
    }

    fn label(&self, s: &TwistedSimplex) -> String {
        let q = &self.scenario.ext.quotient;
        let parts: Vec<String> = s.0.iter().zip(&s.1).map(|(a, &m)| format!("({a},{})", q.name(m))).collect();
        format!("({})", parts.join(","))
    }
}
