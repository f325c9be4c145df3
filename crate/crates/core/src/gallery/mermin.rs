use crate::error::{Error, Result};
use crate::gaction::SimplicialGAction;
use crate::pauli::{pauli_group, quantum_distribution, Clifford, PauliElement, PauliState};
use crate::pgext::{ExtensionAction, ExtensionScenario, GroupExtension, PseudoSection};
use crate::sdist::{Relative, SimplicialDistribution, Target};
use crate::simplicial::{Nd, SSet, SSetBuilder, SimplexWord};
use std::collections::HashMap;

/// Generators of the symmetry group `G`; the first is `V`.
pub const SYMMETRY: [[char; 3]; 3] = [['A', 'A', 'Y'], ['A', 'Y', 'A'], ['Y', 'A', 'A']];

/// Edges of the small space `X`, in order. `x` carries `-1`.
const SMALL_EDGES: [(&str, &str); 9] = [
    ("x", "-III"),
    ("XXI", "XXI"),
    ("-XXI", "-XXI"),
    ("IIX", "IIX"),
    ("-IIX", "-IIX"),
    ("XXX", "XXX"),
    ("YYI", "YYI"),
    ("-YYI", "-YYI"),
    ("-YYX", "-YYX"),
];

/// Triangles of `X` by name and spine `(d_2, d_0)`.
const SMALL_TRIANGLES: [(&str, &str, &str); 6] = [
    ("sigma1b''", "XXI", "IIX"),
    ("sigma1b'", "-XXI", "-IIX"),
    ("sigma2", "XXI", "x"),
    ("sigma4b''", "YYI", "-IIX"),
    ("sigma4b'", "-YYI", "IIX"),
    ("sigma3", "YYI", "x"),
];

/// The edges `x_0, x_1, x_2` carrying the trivialization of `γ`.
pub const WITNESS_EDGES: [&str; 3] = ["XXI", "IIX", "-YYI"];

/// The four lines through single-qubit operators, each as a chain
/// `(P_1, P_2) -> P_1 P_2`, `(P_1 P_2, P_3) -> P_1 P_2 P_3`.
const LINES: [[&str; 3]; 4] =
    [["XII", "IXI", "IIX"], ["XII", "IYI", "IIY"], ["YII", "IXI", "IIY"], ["YII", "IYI", "IIX"]];

/// The central line as two chained triangles.
const CENTRAL: [[&str; 2]; 2] = [["XXX", "XYY"], ["IZZ", "YXY"]];

/// Mermin's star over `P_3` with the `-1` extension, the symmetry group
/// `G = ⟨A⊗A⊗Y, A⊗Y⊗A, Y⊗A⊗A⟩`, its subgroup `H = ⟨V⟩`, the GHZ state, and
/// the small space `X` with its `H`-action.
#[derive(Clone, Debug)]
pub struct Mermin {
    pub elements: Vec<PauliElement>,
    pub ext: GroupExtension,
    pub g_action: ExtensionAction,
    pub h_action: ExtensionAction,
    pub state: PauliState,
    pub small: SSet,
    /// Observable on each nondegenerate edge of `small`.
    pub labels: Vec<PauliElement>,
    pub small_action: SimplicialGAction,
    pub relative: Relative,
    pub target: Target,
    index: HashMap<PauliElement, usize>,
}

fn parse(s: &str) -> PauliElement {
    PauliElement::parse(s).expect("built-in label")
}

impl Mermin {
    pub fn new() -> Result<Self> {
        let (k, elements) = pauli_group(3)?;
        let index: HashMap<PauliElement, usize> = elements.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let ext = GroupExtension::with_modulus(k, index[&parse("-III")], 2)?;
        let cliffords = SYMMETRY.map(|g| Clifford::local(&g).expect("built-in gates"));
        let perms = cliffords.iter().map(|u| u.permutation(&elements)).collect::<Result<Vec<_>>>()?;
        let g_action = ExtensionAction::from_generators(&ext, &perms)?;
        let h_action = ExtensionAction::from_generators(&ext, &perms[..1])?;
        let state = PauliState::ghz(3)?;
        let (small, labels) = small_space()?;
        let small_action = label_action(&small, &labels, &cliffords[..1])?;
        let x = small.find("x").expect("edge x");
        Ok(Self {
            elements,
            ext,
            g_action,
            h_action,
            state,
            small,
            labels,
            small_action,
            relative: Relative { fixed: vec![(x.idx, 1)] },
            target: Target::nerve(2),
            index,
        })
    }

    pub fn symmetry(&self) -> [Clifford; 3] {
        SYMMETRY.map(|g| Clifford::local(&g).expect("built-in gates"))
    }

    /// Index of a Pauli operator in `K = P_3`.
    pub fn index(&self, p: &PauliElement) -> usize {
        self.index[p]
    }

    /// Coset of a Pauli operator in `K̄ = P_3 / ⟨-1⟩`.
    pub fn class(&self, p: &PauliElement) -> usize {
        self.ext.project(self.index(p))
    }

    pub fn nd(&self, name: &str) -> Nd {
        self.small.find(name).expect("simplex of X")
    }

    /// `ρ_*` restricted to `X`.
    pub fn small_distribution(&self) -> Result<SimplicialDistribution> {
        quantum_distribution(&self.state, &self.small, &self.labels)
    }

    /// `η(a) = T_a` on Hermitian cosets, smallest lift elsewhere.
    pub fn t_section(&self) -> Result<PseudoSection> {
        let canonical = PseudoSection::canonical(&self.ext);
        let lift = self
            .ext
            .quotient()
            .elements()
            .map(|c| {
                let p = self.elements[canonical.at(c)];
                if p.is_hermitian() {
                    let (z, x) = p.vector();
                    self.index(&PauliElement::t(3, z, x).expect("three qubits"))
                } else {
                    canonical.at(c)
                }
            })
            .collect();
        PseudoSection::new(&self.ext, lift)
    }

    /// The section with `η[XXI] = -XXI`, `η[XXX] = -XXX` and `T_a` elsewhere,
    /// under which `β` vanishes on `X` and `Φ_V` is supported on the cosets
    /// of `XXI`, `YYI` and `IIX`.
    pub fn section(&self) -> Result<PseudoSection> {
        let t = self.t_section()?;
        let flip: Vec<usize> = ["XXI", "XXX"].iter().map(|s| self.class(&parse(s))).collect();
        let alpha: Vec<u64> = self.ext.quotient().elements().map(|c| u64::from(flip.contains(&c))).collect();
        t.shifted(&self.ext, &alpha)
    }

    /// The nontrivial element `V` of `H`.
    pub fn v(&self) -> usize {
        let h = self.h_action.group();
        h.elements().find(|&g| g != h.identity()).expect("H has order two")
    }

    fn pair(&self, a: &str, b: &str) -> Vec<usize> {
        vec![self.class(&parse(a)), self.class(&parse(b))]
    }

    fn scenario(&self, triangles: &[Vec<usize>], truncation: usize) -> Result<ExtensionScenario> {
        let q = self.ext.quotient();
        let mut names = HashMap::new();
        for t in triangles {
            for &a in t {
                names.insert(vec![a], q.name(a).trim_start_matches('-').to_string());
            }
            let prod = q.mul(t[0], t[1]);
            names.insert(vec![prod], q.name(prod).trim_start_matches('-').to_string());
        }
        ExtensionScenario::over(self.ext.clone(), triangles, names, truncation)
    }

    /// `M` over the images of `X`: the triangles `[XXI] [IIX]` and `[YYI] [IIX]`.
    pub fn small_base(&self, truncation: usize) -> Result<ExtensionScenario> {
        self.scenario(&[self.pair("XXI", "IIX"), self.pair("YYI", "IIX")], truncation)
    }

    fn line_triangles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for [a, b, c] in LINES {
            let ab = parse(a).mul(&parse(b));
            out.push(self.pair(a, b));
            out.push(vec![self.class(&ab), self.class(&parse(c))]);
        }
        out
    }

    /// The eight triangles of the four lines through single-qubit operators.
    pub fn four_lines(&self, truncation: usize) -> Result<ExtensionScenario> {
        self.scenario(&self.line_triangles(), truncation)
    }

    /// The four lines together with the central line `XXX, XYY, YXY, YYX`.
    pub fn full_star(&self, truncation: usize) -> Result<ExtensionScenario> {
        let mut t = self.line_triangles();
        t.extend(CENTRAL.iter().map(|[a, b]| self.pair(a, b)));
        self.scenario(&t, truncation)
    }

    /// `η(XXX) η(XYY) η(YXY) η(YYX)` for `η = T_a`.
    pub fn central_product(&self) -> Result<PauliElement> {
        let eta = self.t_section()?;
        let ps = ["XXX", "XYY", "YXY", "YYX"].map(|s| self.elements[eta.at(self.class(&parse(s)))]);
        Ok(ps.iter().fold(PauliElement::identity(3), |acc, p| acc.mul(p)))
    }
}

fn small_space() -> Result<(SSet, Vec<PauliElement>)> {
    let mut b = SSetBuilder::new(2)?;
    let v = SimplexWord::nd(b.add("v", vec![])?);
    let mut edges = HashMap::new();
    let mut labels = Vec::new();
    for (name, label) in SMALL_EDGES {
        edges.insert(name, b.add(name, vec![v.clone(), v.clone()])?);
        labels.push(parse(label));
    }
    let by_label: HashMap<PauliElement, Nd> = SMALL_EDGES.iter().map(|(n, l)| (parse(l), edges[n])).collect();
    for (name, d2, d0) in SMALL_TRIANGLES {
        let (e2, e0) = (edges[d2], edges[d0]);
        let prod = labels[e2.idx].mul(&labels[e0.idx]);
        let e1 = *by_label.get(&prod).ok_or_else(|| Error::Internal(format!("{name}: no edge for {prod}")))?;
        b.add(name, vec![SimplexWord::nd(e0), SimplexWord::nd(e1), SimplexWord::nd(e2)])?;
    }
    Ok((b.finish()?, labels))
}

/// The action generated by Cliffords on a space whose edges carry distinct
/// Pauli labels and whose triangles are determined by their spines.
pub fn label_action(x: &SSet, labels: &[PauliElement], gens: &[Clifford]) -> Result<SimplicialGAction> {
    let edge_of: HashMap<PauliElement, usize> = labels.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let spine = |t: Nd| {
        let f = x.faces(t);
        (f[2].base().idx, f[0].base().idx)
    };
    let tri_of: HashMap<(usize, usize), usize> = x.nd_ids(2).map(|t| (spine(t), t.idx)).collect();
    let vertices: Vec<usize> = (0..x.nd_count(0)).collect();
    let perms = gens
        .iter()
        .map(|u| {
            let edge_perm = labels
                .iter()
                .map(|p| {
                    edge_of
                        .get(&u.conjugate(p))
                        .copied()
                        .ok_or_else(|| Error::NotEquivariant(format!("{p} leaves the space")))
                })
                .collect::<Result<Vec<_>>>()?;
            let tri_perm = x
                .nd_ids(2)
                .map(|t| {
                    let (a, b) = spine(t);
                    tri_of
                        .get(&(edge_perm[a], edge_perm[b]))
                        .copied()
                        .ok_or_else(|| Error::NotEquivariant(format!("{} leaves the space", x.name(t))))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut levels = vec![vertices.clone(), edge_perm, tri_perm];
            for n in 3..=x.truncation() {
                if x.nd_count(n) > 0 {
                    return Err(Error::InvalidSpace("label actions need a space of dimension at most 2".into()));
                }
                levels.push(Vec::new());
            }
            Ok(levels)
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialGAction::from_generators(x, perms)
}
