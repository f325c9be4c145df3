use crate::error::{input, CliError, CliResult};
use crate::report::Report;
use crate::scenario::{Extension, Scenario};
use ctxlab::algebra::format_rational;
use ctxlab::cohomology::{
    class_zero, coboundary, equivariant_obstruction, gamma, gamma_g, gamma_tilde_g, phi_from_trivialization,
    two_step_class_zero, BiCochain, Cochain, DoubleComplex, ObstructionReport,
};
use ctxlab::gaction::SimplicialGAction;
use ctxlab::gallery::anchors;
use ctxlab::sdist::{
    check_contextual, enumerate_deterministic, theta, ContextualityOptions, DeterministicMap, EnumerateOptions,
    Relative, SimplicialDistribution, Target,
};
use ctxlab::simplicial::SSet;
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    Gamma,
    #[value(name = "gammaG")]
    GammaG,
    Beta,
    #[value(name = "betaG")]
    BetaG,
    Phi,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Flags {
    pub equivariant: bool,
    pub relative: bool,
    pub via_borel: bool,
}

struct Parts<'a> {
    space: &'a SSet,
    target: Target,
    action: Option<&'a SimplicialGAction>,
    relative: Option<&'a Relative>,
}

fn parts<'a>(s: &'a Scenario, flags: Flags, command: &str) -> CliResult<Parts<'a>> {
    let space = s.space.as_ref().ok_or_else(|| input(format!("`{command}` needs a scenario with a space")))?;
    let target = s.target.ok_or_else(|| input(format!("`{command}` needs a target")))?;
    let action = match flags.equivariant {
        true => Some(s.action.as_ref().ok_or_else(|| input("--equivariant needs an `action`"))?),
        false => None,
    };
    let relative = match flags.relative {
        true => Some(s.relative.as_ref().ok_or_else(|| input("--relative needs `relative` edges"))?),
        false => None,
    };
    Ok(Parts { space, target, action, relative })
}

fn labels_json(x: &SSet, m: &DeterministicMap) -> Value {
    let labels: BTreeMap<&str, usize> = x.nd_ids(1).map(|e| (x.name(e), m.labels[e.idx])).collect();
    json!(labels)
}

fn respects(x: &SSet, m: &DeterministicMap, p: &Parts<'_>) -> bool {
    m.is_valid(x, p.target)
        && p.action.is_none_or(|a| m.is_equivariant(a))
        && p.relative.is_none_or(|r| r.fixed.iter().all(|&(e, a)| m.labels[e] == a))
}

pub fn check(s: &Scenario, flags: Flags) -> CliResult<Report> {
    let p = parts(s, flags, "check")?;
    let dist = s.distribution.as_ref().ok_or_else(|| input("`check` needs a distribution or a quantum state"))?;
    let x = p.space;
    let mut report = Report::new("check", &s.name);
    dist.validate(x)?;
    report.check("distribution is simplicial", true, "");
    if let Some(a) = p.action {
        let ok = dist.is_equivariant(x, a);
        report.check("distribution is equivariant", ok, "");
        if !ok {
            return Err(input("distribution is not equivariant under the action"));
        }
    }
    if let Some(r) = p.relative {
        let ok = dist.is_relative(r);
        report.check("distribution is relative", ok, "");
        if !ok {
            return Err(input("distribution is not a point mass on the relative edges"));
        }
    }
    let opts = ContextualityOptions { equivariant: p.action, relative: p.relative, via_borel: flags.via_borel };
    let cert = check_contextual(dist, x, opts)?;
    let route = if flags.via_borel { "via the Borel construction" } else { "directly" };
    if cert.contextual {
        report.verdict = "contextual".into();
        report.check(
            "no mixture of admissible deterministic distributions exists",
            true,
            format!("LP over {} candidates is infeasible, {route}", cert.candidates),
        );
    } else {
        report.verdict = "noncontextual".into();
        let rebuilt = theta(x, p.target, &cert.weights)?;
        if rebuilt != *dist {
            return Err(CliError::Verify("the mixture does not reproduce the distribution".into()));
        }
        if !cert.weights.iter().all(|(m, _)| respects(x, m, &p)) {
            return Err(CliError::Verify("a mixture component violates the requested constraints".into()));
        }
        report.check("mixture reproduces the distribution", true, format!("{} components", cert.weights.len()));
    }
    let mixture: Vec<Value> = cert
        .weights
        .iter()
        .map(|(m, w)| json!({ "weight": format_rational(w), "labels": labels_json(x, m) }))
        .collect();
    report.certificate = Some(json!({
        "contextual": cert.contextual,
        "equivariant": flags.equivariant,
        "relative": flags.relative,
        "via_borel": flags.via_borel,
        "candidates": cert.candidates,
        "mixture": mixture,
    }));
    Ok(report)
}

pub fn enumerate(s: &Scenario, flags: Flags) -> CliResult<Report> {
    let p = parts(s, flags, "enumerate")?;
    let x = p.space;
    let maps = enumerate_deterministic(x, p.target, EnumerateOptions { equivariant: p.action, relative: p.relative });
    if !maps.iter().all(|m| respects(x, m, &p)) {
        return Err(CliError::Verify("an enumerated map violates the requested constraints".into()));
    }
    let mut report = Report::new("enumerate", &s.name);
    report.verdict = format!("{} deterministic distributions", maps.len());
    report.check("every map is simplicial and admissible", true, "");
    report.certificate = Some(json!({
        "equivariant": flags.equivariant,
        "relative": flags.relative,
        "maps": maps.iter().map(|m| labels_json(x, m)).collect::<Vec<_>>(),
    }));
    Ok(report)
}

fn distribution_json(x: &SSet, p: &SimplicialDistribution) -> Value {
    let mut out = BTreeMap::new();
    for n in 1..=x.truncation() {
        for s in x.nd_ids(n) {
            let entries: BTreeMap<String, String> = p
                .at(s)
                .iter()
                .map(|(o, v)| (o.iter().map(ToString::to_string).collect::<Vec<_>>().join(","), format_rational(v)))
                .collect();
            out.insert(x.name(s).to_string(), entries);
        }
    }
    json!(out)
}

pub fn born(s: &Scenario) -> CliResult<Report> {
    let q = s.quantum.as_ref().ok_or_else(|| input("`born` needs a `quantum` section"))?;
    let x = s.space.as_ref().ok_or_else(|| input("`born` needs a space"))?;
    let dist = s.distribution.as_ref().ok_or_else(|| CliError::Verify("quantum distribution missing".into()))?;
    let mut report = Report::new("born", &s.name);
    dist.validate(x)?;
    report.verdict = format!("distribution of a {}-qubit state", q.state.qubits());
    report.check("distribution is simplicial", true, "");
    if let Some(r) = &s.relative {
        report.check("distribution is relative", dist.is_relative(r), "");
    }
    if let Some(a) = &s.action {
        report.check("distribution is equivariant", dist.is_equivariant(x, a), "");
    }
    report.certificate = Some(distribution_json(x, dist));
    Ok(report)
}

fn verify_witness(x: &SSet, value: &Cochain, w: &Cochain) -> CliResult<()> {
    if coboundary(x, w)? != *value {
        return Err(CliError::Verify("the witness does not trivialize the representative".into()));
    }
    Ok(())
}

fn obstruction_report(which: &str, x: &SSet, value: &Cochain, zero: bool, w: Option<Cochain>) -> CliResult<Value> {
    if zero != w.is_some() {
        return Err(CliError::Verify("class-zero verdict and witness disagree".into()));
    }
    if let Some(w) = &w {
        verify_witness(x, value, w)?;
    }
    Ok(json!(ObstructionReport::from_cochain(which, x, value, w.as_ref())))
}

fn bicochain_json(group: &ctxlab::algebra::FiniteGroup, x: &SSet, c: &BiCochain) -> Value {
    let mut entries: Vec<(String, u64)> = c
        .entries()
        .filter(|(_, &v)| v != 0)
        .map(|((gs, s), &v)| {
            let g: Vec<&str> = gs.iter().map(|&g| group.name(g)).collect();
            (format!("({}) {}", g.join(","), x.name(*s)), v)
        })
        .collect();
    entries.sort();
    json!(entries)
}

fn verdict(zero: bool) -> String {
    if zero { "class zero" } else { "class nonzero" }.into()
}

fn gamma_witness(
    s: &Scenario,
    x: &SSet,
    rel: &Relative,
    d: u64,
) -> CliResult<(ctxlab::cohomology::Connecting, Option<Cochain>)> {
    let g = gamma(x, rel, d)?;
    let xb = &g.cofiber.space;
    let w = match &s.witness {
        Some(map) => {
            for name in map.keys() {
                if !xb.nd_ids(1).any(|e| xb.name(e) == name) {
                    return Err(input(format!("witness edge {name:?} is not an edge of the quotient")));
                }
            }
            let w = Cochain::from_fn(xb, 1, d, |e| map.get(xb.name(e)).copied().unwrap_or(0) % d);
            if coboundary(xb, &w)? != g.value {
                return Err(input("the supplied witness does not trivialize γ"));
            }
            Some(w)
        }
        None => class_zero(xb, &g.value)?,
    };
    Ok((g, w))
}

fn extension(s: &Scenario) -> CliResult<&Extension> {
    s.extension.as_ref().ok_or_else(|| input("this obstruction needs an `extension` section"))
}

pub fn obstruction(s: &Scenario, which: Which) -> CliResult<Report> {
    let mut report = Report::new("obstruction", &s.name);
    let flags = Flags { equivariant: true, relative: true, via_borel: false };
    match which {
        Which::Gamma => {
            let p = parts(s, Flags { equivariant: false, ..flags }, "obstruction")?;
            let rel = p.relative.expect("requested");
            let d = p.target.modulus as u64;
            let (g, w) = gamma_witness(s, p.space, rel, d)?;
            let zero = w.is_some();
            report.verdict = verdict(zero);
            if s.witness.is_some() {
                report.check("supplied witness s satisfies ds = γ", true, "");
            }
            report.certificate = Some(obstruction_report("gamma", &g.cofiber.space, &g.value, zero, w)?);
        }
        Which::GammaG => {
            let p = parts(s, flags, "obstruction")?;
            let (a, rel) = (p.action.expect("requested"), p.relative.expect("requested"));
            let d = p.target.modulus as u64;
            let obs = equivariant_obstruction(p.space, a, rel, d)?;
            let zero = obs.class_zero()?;
            report.check("total complex and Borel cofiber agree", true, "");
            let gg = gamma_g(p.space, a, rel, d)?;
            report.verdict = verdict(zero);
            let cof = &gg.connecting.cofiber.space;
            report.certificate =
                Some(obstruction_report("gammaG", cof, &gg.connecting.value, zero, obs.direct_witness)?);
        }
        Which::Beta => {
            let e = extension(s)?;
            let b = e.scenario.beta(&e.eta)?;
            let m = &e.scenario.base.space;
            let w = class_zero(m, &b)?;
            report.verdict = verdict(w.is_some());
            report.certificate = Some(obstruction_report("beta", m, &b, w.is_some(), w)?);
        }
        Which::BetaG => {
            let e = extension(s)?;
            let act = e.action.as_ref().ok_or_else(|| input("betaG needs an extension `action`"))?;
            let base_action = act.on_base(&e.scenario)?;
            let b = e.scenario.borel_base(&base_action)?;
            let bg = e.scenario.beta_g(&e.eta, act, &b);
            let zero = e.scenario.beta_g_routes(&e.eta, act)?.class_zero()?;
            report.check("direct, total-complex and section routes agree", true, "");
            let w = class_zero(b.space(), &bg)?;
            report.verdict = verdict(zero);
            report.certificate = Some(obstruction_report("betaG", b.space(), &bg, zero, w)?);
        }
        Which::Phi => match &s.extension {
            Some(e) => phi_extension(s, e, &mut report)?,
            None => phi_space(s, &mut report)?,
        },
    }
    Ok(report)
}

fn phi_extension(s: &Scenario, e: &Extension, report: &mut Report) -> CliResult<()> {
    let act = e.action.as_ref().ok_or_else(|| input("phi needs an extension `action`"))?;
    if !e.scenario.beta_class_zero(&e.eta)? {
        return Err(ctxlab::Error::Prerequisite(format!("[β] is nonzero on {}; Φ is not defined", s.name)).into());
    }
    report.check("[β] = 0", true, "");
    let base_action = act.on_base(&e.scenario)?;
    let phi = e.scenario.phi(&e.eta, act, &base_action)?;
    let dc = DoubleComplex::new(&e.scenario.base.space, &base_action, e.scenario.modulus());
    if !dc.dh(&phi).is_zero() {
        return Err(CliError::Verify("d^h Φ is nonzero".into()));
    }
    report.check("d^h Φ = 0 and d^v Φ = d^h β", true, "");
    let zero = e.scenario.beta_g_routes(&e.eta, act)?.class_zero()?;
    report.verdict = verdict(zero);
    report.certificate = Some(json!({
        "which": "phi",
        "representative": bicochain_json(act.group(), &e.scenario.base.space, &phi),
        "class_zero": zero,
    }));
    Ok(())
}

fn phi_space(s: &Scenario, report: &mut Report) -> CliResult<()> {
    let p = parts(s, Flags { equivariant: true, relative: true, via_borel: false }, "obstruction")?;
    let (a, rel) = (p.action.expect("requested"), p.relative.expect("requested"));
    let d = p.target.modulus as u64;
    let (g, w) = gamma_witness(s, p.space, rel, d)?;
    let w = w.ok_or_else(|| ctxlab::Error::Prerequisite("[γ] is nonzero; φ is not defined".into()))?;
    report.check("[γ] = 0 with witness s", true, "");
    let tilde = gamma_tilde_g(p.space, a, rel, d)?;
    let xb = &tilde.quotient.space;
    let xg = &g.cofiber.space;
    let values: BTreeMap<&str, u64> = xg.nd_ids(1).map(|e| (xg.name(e), w.at(e))).collect();
    let s1 = Cochain::from_fn(xb, 1, d, |e| values.get(xb.name(e)).copied().unwrap_or(0));
    let dc = DoubleComplex::new(xb, &tilde.action, d);
    let phi = phi_from_trivialization(&dc, &s1);
    if !dc.dh(&phi).is_zero() {
        return Err(CliError::Verify("d^h φ is nonzero".into()));
    }
    report.check("d^h φ = 0", true, "");
    let zero = two_step_class_zero(&dc, &s1)?;
    report.verdict = verdict(zero);
    report.certificate = Some(json!({
        "which": "phi",
        "representative": bicochain_json(tilde.action.group(), xb, &phi),
        "class_zero": zero,
    }));
    Ok(())
}

pub fn example(name: &str, truncation: usize) -> CliResult<Report> {
    let checks = anchors::run(name, truncation)?;
    let mut report = Report::new("example", name);
    let failed = checks.iter().filter(|c| !c.passed).count();
    report.verdict = if failed == 0 { "all anchors pass".into() } else { format!("{failed} anchors fail") };
    report.checks = checks;
    Ok(report)
}
