//! Scenario files: a JSON document describing a space, its outcome target,
//! a group action, a distribution (given directly or through a quantum
//! state), relative edges, and optionally a central extension.

use crate::error::{input, CliError, CliResult};
use ctxlab::algebra::{format_rational, parse_rational, rational, Dist, FiniteGroup, Rational};
use ctxlab::gaction::SimplicialGAction;
use ctxlab::gallery::{Mermin, Torus, SYMMETRY, WITNESS_EDGES};
use ctxlab::pauli::{pauli_group, quantum_distribution, Clifford, PauliElement, PauliState};
use ctxlab::pgext::{ExtensionAction, ExtensionScenario, GroupExtension, PseudoSection};
use ctxlab::sdist::{Relative, SimplicialDistribution, Target};
use ctxlab::simplicial::{Nd, SSet, SSetBuilder, SimplexWord};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    /// Nondegenerate simplices in order; faces `d_0, …, d_n` are written as
    /// `"s1 s0 v"` for the degenerate simplex `s_1 s_0 v`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub space: Vec<SimplexSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<TargetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionSpec>,
    /// Simplex name to `{"0,1": "p/q"}`; vertices may be omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distribution: Option<BTreeMap<String, BTreeMap<String, String>>>,
    /// Edge name to its fixed label.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relative: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantum: Option<QuantumSpec>,
    /// A proposed trivialization of `γ`, by edge name.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplexSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub faces: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetSpec {
    pub modulus: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circle: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ActionSpec {
    /// One map per generator; unlisted simplices (or elements) are fixed.
    Permutations(Vec<BTreeMap<String, String>>),
    /// Local Clifford gates per generator, e.g. `"AAY"`.
    Clifford(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantumSpec {
    pub state: StateSpec,
    /// Edge name to Pauli observable.
    pub labels: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum StateSpec {
    Ghz(usize),
    MaximallyMixed(usize),
    Terms { qubits: usize, coefficients: BTreeMap<String, String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSpec {
    pub group: GroupSpec,
    pub central: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(default)]
    pub base: BaseSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionSpec>,
    /// Coset (named by any member) to its lift; other cosets use the default.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub section: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    /// Product of cyclic groups; elements are named `"(a,b)"`.
    Cyclic(Vec<usize>),
    /// `P_n`; elements are Pauli labels.
    Pauli(usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BaseSpec {
    #[default]
    Full,
    /// Generating triangles `(a, b)` by element names.
    Triangles(Vec<[String; 2]>),
}

#[derive(Clone, Debug)]
pub struct Quantum {
    pub state: PauliState,
    pub labels: Vec<PauliElement>,
}

#[derive(Clone, Debug)]
pub struct Extension {
    pub scenario: ExtensionScenario,
    pub eta: PseudoSection,
    pub action: Option<ExtensionAction>,
}

/// A loaded scenario with every reference resolved.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub space: Option<SSet>,
    pub target: Option<Target>,
    pub action: Option<SimplicialGAction>,
    pub distribution: Option<SimplicialDistribution>,
    pub relative: Option<Relative>,
    pub quantum: Option<Quantum>,
    pub witness: Option<BTreeMap<String, u64>>,
    pub extension: Option<Extension>,
}

impl ScenarioFile {
    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        serde_json::from_str(&text).map_err(|source| CliError::Schema { path: path.display().to_string(), source })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("scenario serializes");
        s.push('\n');
        s
    }

    pub fn load(&self, truncation: usize) -> CliResult<Scenario> {
        let space = if self.space.is_empty() { None } else { Some(parse_space(&self.space, truncation)?) };
        let need_space = |what: &str| space.as_ref().ok_or_else(|| input(format!("`{what}` requires a `space`")));
        let quantum = match &self.quantum {
            Some(q) => Some(parse_quantum(q, need_space("quantum")?)?),
            None => None,
        };
        let target = match (&self.target, &quantum) {
            (Some(t), _) => Some(parse_target(t)?),
            (None, Some(_)) => Some(Target::nerve(2)),
            (None, None) => None,
        };
        if quantum.is_some() && target != Some(Target::nerve(2)) {
            return Err(input("a quantum scenario has target {\"modulus\": 2}"));
        }
        let action = match &self.action {
            Some(a) => Some(parse_space_action(a, need_space("action")?, quantum.as_ref())?),
            None => None,
        };
        let distribution = match (&self.distribution, &quantum) {
            (Some(_), Some(_)) => return Err(input("give either `distribution` or `quantum`, not both")),
            (Some(d), None) => {
                let x = need_space("distribution")?;
                let target = target.ok_or_else(|| input("`distribution` requires a `target`"))?;
                Some(parse_distribution(d, x, target)?)
            }
            (None, Some(q)) => Some(quantum_distribution(&q.state, need_space("quantum")?, &q.labels)?),
            (None, None) => None,
        };
        if let (Some(p), Some(x)) = (&distribution, &space) {
            p.validate(x)?;
        }
        let relative = match &self.relative {
            Some(r) => Some(parse_relative(r, need_space("relative")?, target)?),
            None => None,
        };
        let extension = match &self.extension {
            Some(e) => Some(parse_extension(e, truncation)?),
            None => None,
        };
        Ok(Scenario {
            name: self.name.clone(),
            space,
            target,
            action,
            distribution,
            relative,
            quantum,
            witness: self.witness.clone(),
            extension,
        })
    }
}

fn find(x: &SSet, name: &str) -> CliResult<Nd> {
    x.find(name).ok_or_else(|| input(format!("unknown simplex {name:?}")))
}

fn find_edge(x: &SSet, name: &str) -> CliResult<Nd> {
    let e = find(x, name)?;
    if e.dim != 1 {
        return Err(input(format!("{name:?} is not an edge")));
    }
    Ok(e)
}

/// Parses `"s1 s0 v"`; degeneracies apply right to left.
pub fn parse_face(x: &SSet, s: &str) -> CliResult<SimplexWord> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    let (base, ops) = tokens.split_last().ok_or_else(|| input("empty face"))?;
    let mut w = SimplexWord::nd(find(x, base)?);
    for op in ops.iter().rev() {
        let j: usize = op
            .strip_prefix('s')
            .and_then(|j| j.parse().ok())
            .ok_or_else(|| input(format!("bad degeneracy {op:?} in face {s:?}")))?;
        if j > w.dim() {
            return Err(input(format!("s{j} does not apply to a {}-simplex in face {s:?}", w.dim())));
        }
        w = w.degeneracy(j);
    }
    Ok(w)
}

fn parse_space(specs: &[SimplexSpec], truncation: usize) -> CliResult<SSet> {
    let mut b = SSetBuilder::new(truncation)?;
    for spec in specs {
        if spec.name.is_empty() || spec.name.contains(char::is_whitespace) {
            return Err(input(format!("simplex name {:?} must be nonempty without spaces", spec.name)));
        }
        if b.current().find(&spec.name).is_some() {
            return Err(input(format!("duplicate simplex {:?}", spec.name)));
        }
        let dim = spec.faces.len().saturating_sub(1);
        if dim > truncation {
            return Err(input(format!("{} has dimension {dim} above the truncation {truncation}", spec.name)));
        }
        let faces = spec.faces.iter().map(|f| parse_face(b.current(), f)).collect::<CliResult<Vec<_>>>()?;
        b.add(spec.name.clone(), faces)?;
    }
    Ok(b.finish()?)
}

fn parse_target(t: &TargetSpec) -> CliResult<Target> {
    if t.modulus < 2 {
        return Err(input("target modulus must be at least 2"));
    }
    match t.circle {
        Some(a) if a == 0 || a >= t.modulus => Err(input(format!("circle generator {a} is not a nonzero residue"))),
        Some(a) => Ok(Target::circle(t.modulus, a)),
        None => Ok(Target::nerve(t.modulus)),
    }
}

fn cliffords(gens: &[String]) -> CliResult<Vec<Clifford>> {
    gens.iter().map(|g| Ok(Clifford::local(&g.chars().collect::<Vec<_>>())?)).collect()
}

fn parse_space_action(a: &ActionSpec, x: &SSet, quantum: Option<&Quantum>) -> CliResult<SimplicialGAction> {
    match a {
        ActionSpec::Permutations(gens) => {
            let mut perms = Vec::new();
            for map in gens {
                let mut perm: Vec<Vec<usize>> = (0..=x.truncation()).map(|n| (0..x.nd_count(n)).collect()).collect();
                for (from, to) in map {
                    let (a, b) = (find(x, from)?, find(x, to)?);
                    if a.dim != b.dim {
                        return Err(input(format!("{from} and {to} have different dimensions")));
                    }
                    perm[a.dim][a.idx] = b.idx;
                }
                perms.push(perm);
            }
            Ok(SimplicialGAction::from_generators(x, perms)?)
        }
        ActionSpec::Clifford(gens) => {
            let q = quantum.ok_or_else(|| input("a Clifford action on a space requires `quantum` labels"))?;
            Ok(ctxlab::gallery::label_action(x, &q.labels, &cliffords(gens)?)?)
        }
    }
}

fn parse_outcome(s: &str) -> CliResult<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|v| v.trim().parse().map_err(|_| input(format!("bad outcome {s:?}")))).collect()
}

fn parse_distribution(
    d: &BTreeMap<String, BTreeMap<String, String>>,
    x: &SSet,
    target: Target,
) -> CliResult<SimplicialDistribution> {
    for name in d.keys() {
        find(x, name)?;
    }
    let mut err = None;
    let p = SimplicialDistribution::from_fn(x, target, |s| {
        let name = x.name(s);
        let entries = match d.get(name) {
            Some(e) => e,
            None if s.dim == 0 => return Dist::new([(Vec::new(), Rational::from_integer(1.into()))]),
            None => {
                err = Some(input(format!("no distribution given on {name}")));
                return Err(ctxlab::Error::InvalidDistribution(name.into()));
            }
        };
        let mut parsed = Vec::new();
        for (o, v) in entries {
            let outcome = parse_outcome(o).and_then(|o| {
                if o.len() == s.dim && target.contains(&o) {
                    Ok(o)
                } else {
                    Err(input(format!("outcome {o:?} on {name} is not a {}-simplex of the target", s.dim)))
                }
            });
            let value = parse_rational(v).ok_or_else(|| input(format!("bad rational {v:?} on {name}")));
            match (outcome, value) {
                (Ok(o), Ok(v)) => parsed.push((o, v)),
                (Err(e), _) | (_, Err(e)) => {
                    err = Some(e);
                    return Err(ctxlab::Error::InvalidDistribution(name.into()));
                }
            }
        }
        Dist::new(parsed)
    });
    match (p, err) {
        (_, Some(e)) => Err(e),
        (p, None) => Ok(p?),
    }
}

fn parse_relative(r: &BTreeMap<String, usize>, x: &SSet, target: Option<Target>) -> CliResult<Relative> {
    let modulus = target.ok_or_else(|| input("`relative` requires a `target`"))?.modulus;
    let mut fixed = Vec::new();
    for (name, &a) in r {
        if a >= modulus {
            return Err(input(format!("label {a} on {name} exceeds the modulus")));
        }
        fixed.push((find_edge(x, name)?.idx, a));
    }
    fixed.sort_unstable();
    Ok(Relative { fixed })
}

fn parse_state(s: &StateSpec) -> CliResult<PauliState> {
    Ok(match s {
        StateSpec::Ghz(n) => PauliState::ghz(*n)?,
        StateSpec::MaximallyMixed(n) => PauliState::maximally_mixed(*n)?,
        StateSpec::Terms { qubits, coefficients } => {
            let mut terms = Vec::new();
            for (p, c) in coefficients {
                let c = parse_rational(c).ok_or_else(|| input(format!("bad rational {c:?} for {p}")))?;
                terms.push((p.as_str(), c));
            }
            PauliState::from_labels(*qubits, terms)?
        }
    })
}

fn parse_quantum(q: &QuantumSpec, x: &SSet) -> CliResult<Quantum> {
    let state = parse_state(&q.state)?;
    for name in q.labels.keys() {
        find_edge(x, name)?;
    }
    let labels = x
        .nd_ids(1)
        .map(|e| {
            let name = x.name(e);
            let l = q.labels.get(name).ok_or_else(|| input(format!("no observable on edge {name}")))?;
            Ok(PauliElement::parse(l)?)
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Quantum { state, labels })
}

struct Group {
    group: FiniteGroup,
    pauli: Option<Vec<PauliElement>>,
}

impl Group {
    fn element(&self, name: &str) -> CliResult<usize> {
        let key = match &self.pauli {
            Some(_) => PauliElement::parse(name)?.to_string(),
            None => name.to_string(),
        };
        self.group.find(&key).ok_or_else(|| input(format!("{name:?} is not a group element")))
    }
}

fn parse_group(g: &GroupSpec) -> CliResult<Group> {
    match g {
        GroupSpec::Cyclic(ds) => {
            let (first, rest) = ds.split_first().ok_or_else(|| input("cyclic group needs at least one factor"))?;
            if ds.iter().any(|&d| d < 2) {
                return Err(input("cyclic factors must have order at least 2"));
            }
            let group = rest.iter().fold(FiniteGroup::cyclic(*first), |acc, &d| {
                FiniteGroup::direct_product(&acc, &FiniteGroup::cyclic(d))
            });
            Ok(Group { group, pauli: None })
        }
        GroupSpec::Pauli(n) => {
            let (group, elements) = pauli_group(*n)?;
            Ok(Group { group, pauli: Some(elements) })
        }
    }
}

/// `T_a` on Hermitian cosets of `P_n / J`, the canonical lift elsewhere.
fn default_lift(ext: &GroupExtension, pauli: Option<&[PauliElement]>) -> Vec<usize> {
    let canonical = PseudoSection::canonical(ext);
    ext.quotient()
        .elements()
        .map(|c| {
            let k = canonical.at(c);
            match pauli {
                Some(el) if el[k].is_hermitian() => {
                    let (z, x) = el[k].vector();
                    let t = PauliElement::t(el[k].qubits(), z, x).expect("same qubit count");
                    ext.group().find(&t.to_string()).unwrap_or(k)
                }
                _ => k,
            }
        })
        .collect()
}

fn parse_extension(e: &ExtensionSpec, truncation: usize) -> CliResult<Extension> {
    let g = parse_group(&e.group)?;
    let j = g.element(&e.central)?;
    let ext = match e.modulus {
        Some(d) => GroupExtension::with_modulus(g.group.clone(), j, d)?,
        None => GroupExtension::new(g.group.clone(), j)?,
    };
    let mut lift = default_lift(&ext, g.pauli.as_deref());
    for (coset, to) in &e.section {
        let c = ext.project(g.element(coset)?);
        let k = g.element(to)?;
        if ext.project(k) != c {
            return Err(input(format!("section value {to} does not lie over {coset}")));
        }
        lift[c] = k;
    }
    let eta = PseudoSection::new(&ext, lift)?;
    let action = match &e.action {
        None => None,
        Some(ActionSpec::Permutations(gens)) => {
            let mut perms = Vec::new();
            for map in gens {
                let mut perm: Vec<usize> = g.group.elements().collect();
                for (from, to) in map {
                    perm[g.element(from)?] = g.element(to)?;
                }
                perms.push(perm);
            }
            Some(ExtensionAction::from_generators(&ext, &perms)?)
        }
        Some(ActionSpec::Clifford(gens)) => {
            let elements = g.pauli.as_ref().ok_or_else(|| input("a Clifford action needs a Pauli group"))?;
            let perms = cliffords(gens)?.iter().map(|u| u.permutation(elements)).collect::<Result<Vec<_>, _>>()?;
            Some(ExtensionAction::from_generators(&ext, &perms)?)
        }
    };
    let scenario = match &e.base {
        BaseSpec::Full => ExtensionScenario::full(ext, truncation)?,
        BaseSpec::Triangles(ts) => {
            let q = ext.quotient().clone();
            let mut tuples = Vec::new();
            let mut names = HashMap::new();
            let mut name = |c: usize| {
                names.insert(vec![c], q.name(c).trim_start_matches('-').to_string());
            };
            for [a, b] in ts {
                let (a, b) = (ext.project(g.element(a)?), ext.project(g.element(b)?));
                name(a);
                name(b);
                name(q.mul(a, b));
                tuples.push(vec![a, b]);
            }
            ExtensionScenario::over(ext, &tuples, names, truncation)?
        }
    };
    Ok(Extension { scenario, eta, action })
}

// Export of the built-in scenarios.

fn space_specs(x: &SSet) -> Vec<SimplexSpec> {
    (0..=x.truncation())
        .flat_map(|n| x.nd_ids(n))
        .map(|s| SimplexSpec {
            name: x.name(s).to_string(),
            faces: if s.dim == 0 { Vec::new() } else { x.faces(s).iter().map(|w| x.describe(w)).collect() },
        })
        .collect()
}

fn permutation_specs(x: &SSet, action: &SimplicialGAction) -> ActionSpec {
    let gens = action
        .group()
        .generators()
        .into_iter()
        .map(|g| {
            (0..=x.truncation())
                .flat_map(|n| x.nd_ids(n))
                .filter_map(|s| {
                    let t = action.act_nd(g, s);
                    (t != s).then(|| (x.name(s).to_string(), x.name(t).to_string()))
                })
                .collect()
        })
        .collect();
    ActionSpec::Permutations(gens)
}

fn distribution_spec(x: &SSet, p: &SimplicialDistribution) -> BTreeMap<String, BTreeMap<String, String>> {
    (1..=x.truncation())
        .flat_map(|n| x.nd_ids(n))
        .map(|s| {
            let entries = p
                .at(s)
                .iter()
                .map(|(o, v)| {
                    let key = o.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                    (key, format_rational(v))
                })
                .collect();
            (x.name(s).to_string(), entries)
        })
        .collect()
}

fn relative_spec(x: &SSet, rel: &Relative) -> BTreeMap<String, usize> {
    rel.fixed.iter().map(|&(e, a)| (x.name(Nd::new(1, e)).to_string(), a)).collect()
}

/// The torus with the swap action and the equivariant distribution `t1 = t2 = t`.
pub fn torus_file(t: &Rational) -> CliResult<ScenarioFile> {
    let torus = Torus::new(2)?;
    let p = torus.equivariant(t)?;
    Ok(ScenarioFile {
        name: format!("torus-t{}", format_rational(t).replace('/', "-")),
        description: Some(format!("S1 x S1 with the swap action, P(x0 = 1) = P(x1 = 1) = {}", format_rational(t))),
        space: space_specs(&torus.space),
        target: Some(TargetSpec { modulus: torus.target.modulus, circle: torus.target.circle }),
        action: Some(permutation_specs(&torus.space, &torus.action)),
        distribution: Some(distribution_spec(&torus.space, &p)),
        relative: Some(relative_spec(&torus.space, &torus.relative)),
        quantum: None,
        witness: Some(BTreeMap::from([("x1".to_string(), 1)])),
        extension: None,
    })
}

pub fn dihedral_file() -> ScenarioFile {
    let swap = BTreeMap::from([("(0,1)".to_string(), "(1,0)".to_string()), ("(1,0)".to_string(), "(0,1)".to_string())]);
    ScenarioFile {
        name: "dihedral".into(),
        description: Some("Z2 x Z2 over Z2 with fiber the diagonal and the swap action".into()),
        space: Vec::new(),
        target: None,
        action: None,
        distribution: None,
        relative: None,
        quantum: None,
        witness: None,
        extension: Some(ExtensionSpec {
            group: GroupSpec::Cyclic(vec![2, 2]),
            central: "(1,1)".into(),
            modulus: Some(2),
            base: BaseSpec::Full,
            action: Some(ActionSpec::Permutations(vec![swap])),
            section: BTreeMap::from([("(0,1)".to_string(), "(0,1)".to_string())]),
        }),
    }
}

pub fn mermin_file() -> CliResult<ScenarioFile> {
    let m = Mermin::new()?;
    let x = &m.small;
    let labels = x.nd_ids(1).map(|e| (x.name(e).to_string(), m.labels[e.idx].to_string())).collect();
    let v: String = SYMMETRY[0].iter().collect();
    let pair = |a: &str, b: &str| [a.to_string(), b.to_string()];
    Ok(ScenarioFile {
        name: "mermin".into(),
        description: Some("GHZ state on the three-qubit star, restricted to a small space with the symmetry V".into()),
        space: space_specs(x),
        target: Some(TargetSpec { modulus: 2, circle: None }),
        action: Some(ActionSpec::Clifford(vec![v.clone()])),
        distribution: None,
        relative: Some(relative_spec(x, &m.relative)),
        quantum: Some(QuantumSpec { state: StateSpec::Ghz(3), labels }),
        witness: Some(WITNESS_EDGES.iter().map(|e| (e.to_string(), 1)).collect()),
        extension: Some(ExtensionSpec {
            group: GroupSpec::Pauli(3),
            central: "-III".into(),
            modulus: Some(2),
            base: BaseSpec::Triangles(vec![pair("XXI", "IIX"), pair("YYI", "IIX")]),
            action: Some(ActionSpec::Clifford(vec![v])),
            section: BTreeMap::from([("XXI".to_string(), "-XXI".to_string()), ("XXX".to_string(), "-XXX".to_string())]),
        }),
    })
}

/// Built-in scenarios with their file names.
pub fn builtins() -> CliResult<Vec<(String, ScenarioFile)>> {
    let mut out = Vec::new();
    for (n, d) in [(0, 1), (1, 8), (1, 4), (1, 2)] {
        let f = torus_file(&rational(n, d))?;
        out.push((format!("{}.json", f.name), f));
    }
    out.push(("dihedral.json".into(), dihedral_file()));
    out.push(("mermin.json".into(), mermin_file()?));
    Ok(out)
}
