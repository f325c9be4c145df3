use super::{beta_value, ExtensionScenario, GroupExtension, PseudoSection};
use crate::algebra::FiniteGroup;
use crate::cohomology::{as_vertical, class_zero, BiCochain, Cochain, DoubleComplex, Triple};
use crate::error::{Error, Result};
use crate::gaction::{borel, BorelSpace, SimplicialGAction};
use crate::simplicial::{realize, ExplicitModel, Realized, SimplexWord, SimplicialMap};

/// A finite group acting on `K` by automorphisms that fix `J`, hence on the
/// total space fixing the fiber and commuting with its translation.
#[derive(Clone, Debug)]
pub struct ExtensionAction {
    group: FiniteGroup,
    /// `perms[g][k] = g · k`.
    perms: Vec<Vec<usize>>,
    bar: Vec<Vec<usize>>,
}

impl ExtensionAction {
    pub fn new(ext: &GroupExtension, group: FiniteGroup, perms: Vec<Vec<usize>>) -> Result<Self> {
        let k = ext.group();
        if perms.len() != group.order() {
            return Err(Error::NotEquivariant("one permutation per group element is required".into()));
        }
        for (g, p) in perms.iter().enumerate() {
            if p.len() != k.order() {
                return Err(Error::NotEquivariant(format!("element {} does not permute K", group.name(g))));
            }
            for a in k.elements() {
                for b in k.elements() {
                    if p[k.mul(a, b)] != k.mul(p[a], p[b]) {
                        return Err(Error::NotEquivariant(format!("element {} is not an automorphism", group.name(g))));
                    }
                }
            }
            if p[ext.central()] != ext.central() {
                return Err(Error::NotEquivariant(format!("element {} moves the central element", group.name(g))));
            }
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                if k.elements().any(|a| perms[gh][a] != perms[g][perms[h][a]]) {
                    return Err(Error::NotEquivariant("action does not respect the group law".into()));
                }
            }
        }
        let bar = perms
            .iter()
            .map(|p| ext.quotient().elements().map(|kb| ext.project(p[ext.lifts(kb)[0]])).collect())
            .collect();
        Ok(Self { group, perms, bar })
    }

    /// The group generated by automorphisms of `K`, given as permutations.
    pub fn from_generators(ext: &GroupExtension, gens: &[Vec<usize>]) -> Result<Self> {
        let (group, perms) = FiniteGroup::from_permutations(gens)?;
        Self::new(ext, group, perms)
    }

    pub fn trivial(ext: &GroupExtension, group: FiniteGroup) -> Self {
        let id: Vec<usize> = ext.group().elements().collect();
        let idb: Vec<usize> = ext.quotient().elements().collect();
        Self { perms: vec![id; group.order()], bar: vec![idb; group.order()], group }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn act(&self, g: usize, k: usize) -> usize {
        self.perms[g][k]
    }

    pub fn act_bar(&self, g: usize, kbar: usize) -> usize {
        self.bar[g][kbar]
    }

    fn on_tuples(&self, g: usize, t: &[usize], bar: bool) -> Vec<usize> {
        t.iter().map(|&a| if bar { self.bar[g][a] } else { self.perms[g][a] }).collect()
    }

    fn induced(&self, space: &Realized<Vec<usize>>, bar: bool) -> Result<SimplicialGAction> {
        let x = &space.space;
        let perms = self
            .group
            .elements()
            .map(|g| {
                (0..=x.truncation())
                    .map(|n| {
                        x.nd_ids(n)
                            .map(|s| {
                                let t = self.on_tuples(g, space.rep(s), bar);
                                match space.word_of(&t) {
                                    Some(w) if !w.is_degenerate() => Ok(w.base().idx),
                                    _ => {
                                        Err(Error::NotEquivariant(format!("{} is moved outside the space", x.name(s))))
                                    }
                                }
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialGAction::new(self.group.clone(), x, perms)
    }

    /// The action on the total space; errors unless it is invariant.
    pub fn on_total(&self, s: &ExtensionScenario) -> Result<SimplicialGAction> {
        self.induced(&s.total, false)
    }

    /// The induced action on `M`; errors unless `M` is invariant.
    pub fn on_base(&self, s: &ExtensionScenario) -> Result<SimplicialGAction> {
        self.induced(&s.base, true)
    }
}

/// `Φ_g(x̄)` with `g · η(g^{-1} · x̄) · η(x̄)^{-1} = J^{Φ_g(x̄)}`.
pub fn phi_value(ext: &GroupExtension, eta: &PseudoSection, act: &ExtensionAction, g: usize, xbar: usize) -> u64 {
    let k = ext.group();
    let ginv = act.group().inv(g);
    let moved = act.act(g, eta.at(act.act_bar(ginv, xbar)));
    ext.fiber_coord(k.mul(moved, k.inv(eta.at(xbar)))).expect("both factors lie over the same coset")
}

/// Explicit model of `NG ⋉ M`: tuples `((g_1, y_1), …, (g_n, y_n))` with
/// `(y_1, g_1 y_2, g_1 g_2 y_3, …)` a simplex of `M`.
pub struct SemidirectModel<'a> {
    pub scenario: &'a ExtensionScenario,
    pub action: &'a ExtensionAction,
}

impl SemidirectModel<'_> {
    fn prefix_products(&self, gs: &[usize]) -> Vec<usize> {
        let g = self.action.group();
        let mut acc = g.identity();
        let mut out = Vec::with_capacity(gs.len());
        for &a in gs {
            out.push(acc);
            acc = g.mul(acc, a);
        }
        out
    }

    /// `T`: the Borel coordinates `(g_i), (y_1, g_1 y_2, …)`.
    pub fn to_borel(&self, s: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
        let gs: Vec<usize> = s.iter().map(|p| p.0).collect();
        let pre = self.prefix_products(&gs);
        let xs = s.iter().zip(&pre).map(|(&(_, y), &h)| self.action.act_bar(h, y)).collect();
        (gs, xs)
    }

    /// `S`: inverse of [`SemidirectModel::to_borel`].
    pub fn from_borel(&self, gs: &[usize], xs: &[usize]) -> Vec<(usize, usize)> {
        let g = self.action.group();
        let pre = self.prefix_products(gs);
        gs.iter().zip(xs).zip(&pre).map(|((&a, &x), &h)| (a, self.action.act_bar(g.inv(h), x))).collect()
    }
}

impl ExplicitModel for SemidirectModel<'_> {
    type S = Vec<(usize, usize)>;

    fn simplices(&self, n: usize) -> Vec<Vec<(usize, usize)>> {
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
        let mut out = Vec::new();
        for gs in &tuples {
            for xs in self.scenario.base_model.simplices(n) {
                out.push(self.from_borel(gs, &xs));
            }
        }
        out
    }

    fn face(&self, i: usize, s: &Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        let g = self.action.group();
        let q = self.scenario.ext.quotient();
        let n = s.len();
        let mut t = s.clone();
        if i == 0 {
            t.remove(0);
        } else if i == n {
            t.pop();
        } else {
            let ((g1, y1), (g2, y2)) = (s[i - 1], s[i]);
            t[i - 1] = (g.mul(g1, g2), q.mul(y1, self.action.act_bar(g1, y2)));
            t.remove(i);
        }
        t
    }

    fn degeneracy(&self, j: usize, s: &Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        let mut t = s.clone();
        t.insert(j, (self.action.group().identity(), self.scenario.ext.quotient().identity()));
        t
    }

    fn label(&self, s: &Vec<(usize, usize)>) -> String {
        let g = self.action.group();
        let q = self.scenario.ext.quotient();
        let parts: Vec<String> = s.iter().map(|&(a, y)| format!("({},{})", g.name(a), q.name(y))).collect();
        format!("({})", parts.join(","))
    }
}

/// `M // G ≅ NG ⋉ M` with both directions as simplicial maps.
#[derive(Clone, Debug)]
pub struct SemidirectIso {
    pub semidirect: Realized<Vec<(usize, usize)>>,
    /// `M // G -> NG ⋉ M`.
    pub s: SimplicialMap,
    /// `NG ⋉ M -> M // G`.
    pub t: SimplicialMap,
}

/// Verdicts of the three routes to `[β_G] = 0`.
#[derive(Clone, Debug)]
pub struct BorelRoutes {
    /// `s` with `d s = β_G` on the Borel truncation of `M`.
    pub direct: Option<Cochain>,
    /// `(r, s)` with `d(r, s) = (0, Φ, β)` in the total complex.
    pub joint: Option<(BiCochain, BiCochain)>,
    /// An equivariant section of `π`.
    pub section: Option<Vec<usize>>,
}

impl BorelRoutes {
    pub fn class_zero(&self) -> Result<bool> {
        let v = [self.direct.is_some(), self.joint.is_some(), self.section.is_some()];
        if v[0] != v[1] || v[1] != v[2] {
            return Err(Error::Internal(format!("routes to [β_G] disagree: {v:?}")));
        }
        Ok(v[0])
    }
}

impl ExtensionScenario {
    /// `Φ` as a `(1,1)`-cochain; verified to satisfy `d^v Φ = d^h β` and
    /// `d^h Φ = 0`.
    pub fn phi(
        &self,
        eta: &PseudoSection,
        act: &ExtensionAction,
        base_action: &SimplicialGAction,
    ) -> Result<BiCochain> {
        let dc = DoubleComplex::new(&self.base.space, base_action, self.modulus());
        let mut phi = BiCochain::zero(1, 1, self.modulus());
        for (gs, x) in dc.positions(1, 1) {
            let v = phi_value(&self.ext, eta, act, gs[0], self.base.rep(x)[0]);
            phi.set(gs, x, v);
        }
        let beta = as_vertical(&self.beta(eta)?, &self.base.space);
        if !dc.dh(&phi).is_zero() {
            return Err(Error::NotCocycle("d^h Φ is nonzero".into()));
        }
        if dc.dv(&phi) != dc.dh(&beta) {
            return Err(Error::NotCocycle("d^v Φ differs from d^h β".into()));
        }
        Ok(phi)
    }

    /// `β_G[(1, g_1, g_2), (x_1, x_2)] = η(x_1) · g_1 η(g_1^{-1} x_2) · η(x_1 x_2)^{-1}`.
    pub fn beta_g(&self, eta: &PseudoSection, act: &ExtensionAction, b: &BorelSpace) -> Cochain {
        let k = self.ext.group();
        let q = self.ext.quotient();
        Cochain::from_fn(b.space(), 2, self.modulus(), |s| {
            let (gs, w) = b.rep(s);
            let xs = self.base_tuple(w);
            let g1 = gs[0];
            let mid = act.act(g1, eta.at(act.act_bar(act.group().inv(g1), xs[1])));
            let prod = k.mul(k.mul(eta.at(xs[0]), mid), k.inv(eta.at(q.mul(xs[0], xs[1]))));
            self.ext.fiber_coord(prod).expect("product lies in the fiber")
        })
    }

    pub fn borel_base(&self, base_action: &SimplicialGAction) -> Result<BorelSpace> {
        borel(base_action, &self.base.space, self.base.space.truncation())
    }

    pub fn borel_semidirect_iso(&self, act: &ExtensionAction, b: &BorelSpace) -> Result<SemidirectIso> {
        let model = SemidirectModel { scenario: self, action: act };
        let n = b.space().truncation();
        let semidirect = realize(&model, n)?;
        let t = SimplicialMap::from_fn(&semidirect.space, |x| {
            let (gs, xs) = model.to_borel(semidirect.rep(x));
            let w = self.base.try_word_of(&xs)?;
            b.word(&gs, &w).cloned().ok_or_else(|| Error::Internal("T leaves the Borel truncation".into()))
        })?;
        let s = SimplicialMap::from_fn(b.space(), |y| {
            let (gs, w) = b.rep(y);
            semidirect.try_word_of(&model.from_borel(gs, &self.base_tuple(w)))
        })?;
        s.validate(b.space(), &semidirect.space)?;
        t.validate(&semidirect.space, b.space())?;
        let is_id = |f: &SimplicialMap, x: &crate::simplicial::SSet| {
            (0..=x.truncation()).all(|n| x.nd_ids(n).all(|y| *f.image(y) == SimplexWord::nd(y)))
        };
        if !is_id(&s.then(&t), b.space()) || !is_id(&t.then(&s), &semidirect.space) {
            return Err(Error::Internal("S and T are not mutually inverse".into()));
        }
        Ok(SemidirectIso { semidirect, s, t })
    }

    /// Decides `[β_G] = 0` directly on `M // G`, through `(0, Φ, β)` in the
    /// total complex, and by searching for an equivariant section.
    pub fn beta_g_routes(&self, eta: &PseudoSection, act: &ExtensionAction) -> Result<BorelRoutes> {
        let base_action = act.on_base(self)?;
        let b = self.borel_base(&base_action)?;
        let bg = self.beta_g(eta, act, &b);
        let direct = class_zero(b.space(), &bg)?;
        let dc = DoubleComplex::new(&self.base.space, &base_action, self.modulus());
        let target = Triple {
            c20: BiCochain::zero(2, 0, self.modulus()),
            c11: self.phi(eta, act, &base_action)?,
            c02: as_vertical(&self.beta(eta)?, &self.base.space),
        };
        let joint = dc.total_class_zero(&target)?;
        let section = self.sections(Some(act), 1).pop();
        Ok(BorelRoutes { direct, joint, section })
    }
}

/// `β` computed from pairs, for callers holding only group data.
pub fn beta_table(ext: &GroupExtension, eta: &PseudoSection) -> Vec<Vec<u64>> {
    let q = ext.quotient();
    q.elements().map(|a| q.elements().map(|b| beta_value(ext, eta, a, b)).collect()).collect()
}
