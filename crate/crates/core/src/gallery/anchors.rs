use super::{Dihedral, Mermin, Torus, WITNESS_EDGES};
use crate::algebra::{rational, Rational};
use crate::cohomology::{
    class_zero, coboundary, equivariant_obstruction, gamma, gamma_g, phi_from_trivialization, two_step_class_zero,
    Cochain, DoubleComplex,
};
use crate::error::{Error, Result};
use crate::pauli::PauliElement;
use crate::sdist::{check_contextual, enumerate_deterministic, ContextualityOptions, EnumerateOptions};
use serde::Serialize;

/// One checked statement of a built-in example.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn anchor(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Anchor {
    match f() {
        Ok((passed, detail)) => Anchor { name: name.into(), passed, detail },
        Err(e) => Anchor { name: name.into(), passed: false, detail: format!("error: {e}") },
    }
}

pub fn run(name: &str, truncation: usize) -> Result<Vec<Anchor>> {
    match name {
        "torus" => torus(truncation),
        "dihedral" => dihedral(truncation),
        "mermin" => mermin(),
        _ => Err(Error::InvalidSpace(format!("unknown example {name:?}; expected torus, dihedral or mermin"))),
    }
}

pub fn torus(truncation: usize) -> Result<Vec<Anchor>> {
    let t = Torus::new(truncation)?;
    let r = |n, d| rational(n, d);
    let mut out = Vec::new();
    out.push(anchor("torus: distributions are the triangle t1, t2 >= 0, t1 + t2 <= 1", || {
        let inside = [(0, 0), (4, 0), (0, 4), (2, 2), (1, 3)]
            .iter()
            .all(|&(a, b)| t.distribution(&r(a, 4), &r(b, 4)).and_then(|p| p.validate(&t.space)).is_ok());
        let outside = [(3, 2), (-1, 2), (5, 0)]
            .iter()
            .all(|&(a, b)| t.distribution(&r(a, 4), &r(b, 4)).and_then(|p| p.validate(&t.space)).is_err());
        Ok((inside && outside, format!("inside accepted: {inside}, outside rejected: {outside}")))
    }));
    out.push(anchor("torus: equivariant exactly on t1 = t2", || {
        let diag = t.distribution(&r(1, 4), &r(1, 4))?.is_equivariant(&t.space, &t.action);
        let off = t.distribution(&r(1, 8), &r(1, 4))?.is_equivariant(&t.space, &t.action);
        Ok((diag && !off, format!("diagonal: {diag}, off-diagonal: {off}")))
    }));
    for (n, d) in [(0, 1), (1, 8), (1, 4), (1, 2)] {
        let tv = r(n, d);
        out.push(anchor(&format!("torus: equivariantly contextual iff t > 0 at t = {n}/{d}"), || {
            let p = t.equivariant(&tv)?;
            let opts = ContextualityOptions { equivariant: Some(&t.action), relative: None, via_borel: false };
            let direct = check_contextual(&p, &t.space, opts)?.contextual;
            let borel = check_contextual(&p, &t.space, ContextualityOptions { via_borel: true, ..opts })?.contextual;
            let expect = n > 0;
            Ok((direct == expect && borel == expect, format!("direct: {direct}, via Borel: {borel}")))
        }));
    }
    out.push(anchor("torus: the unique relative equivariant point t = 1/2 is contextual", || {
        let rel: Vec<Rational> = (0..=8)
            .map(|k| r(k, 16))
            .filter(|tv| t.equivariant(tv).is_ok_and(|p| p.is_relative(&t.relative)))
            .collect();
        let half = t.equivariant(&r(1, 2))?;
        let opts = ContextualityOptions { equivariant: Some(&t.action), relative: Some(&t.relative), via_borel: false };
        let ctx = check_contextual(&half, &t.space, opts)?.contextual;
        Ok((rel == [r(1, 2)] && ctx, format!("relative points on the grid: {}, contextual: {ctx}", rel.len())))
    }));
    out.push(anchor("torus: [γ] = 0 with witness s = 1 on x1", || {
        let g = gamma(&t.space, &t.relative, 2)?;
        let xb = &g.cofiber.space;
        let s = Cochain::from_fn(xb, 1, 2, |e| u64::from(xb.name(e) == "x1"));
        Ok((coboundary(xb, &s)? == g.value, format!("support {:?}", names(xb, &g.value))))
    }));
    out.push(anchor("torus: [γ_G] != 0, both routes", || {
        let obs = equivariant_obstruction(&t.space, &t.action, &t.relative, 2)?;
        Ok((!obs.class_zero()?, "total complex and cofiber of Y -> X // G agree".into()))
    }));
    out.push(anchor("torus: γ_G on σ-simplices is σ0, σ1 at (e,e) and (g,g)", || {
        let gg = gamma_g(&t.space, &t.action, &t.relative, 2)?;
        let cof = &gg.connecting.cofiber;
        let mut sig = Vec::new();
        for s in gg.connecting.value.support(&cof.space) {
            let (gs, w) = gg.borel.rep(cof.lift(s).expect("support lies off the basepoint"));
            if w.base().dim == 2 && !w.is_degenerate() {
                sig.push(format!("{}({}{})", t.space.describe(w), gs[0], gs[1]));
            }
        }
        sig.sort();
        let expect = ["sigma0(00)", "sigma0(11)", "sigma1(00)", "sigma1(11)"];
        Ok((sig == expect, sig.join(", ")))
    }));
    out.push(anchor("torus: φ(1, x_i) = 1, φ(0, ·) = 0, and the joint system is unsolvable", || {
        let tilde = crate::cohomology::gamma_tilde_g(&t.space, &t.action, &t.relative, 2)?;
        let xb = &tilde.quotient.space;
        let dc = DoubleComplex::new(xb, &tilde.action, 2);
        let s = Cochain::from_fn(xb, 1, 2, |e| u64::from(xb.name(e) == "x1"));
        let phi = phi_from_trivialization(&dc, &s);
        let mut ok = true;
        for name in ["x0", "x1"] {
            let e = xb.find(name).expect("torus edge");
            ok &= phi.get(&[1], e) == 1 && phi.get(&[0], e) == 0;
        }
        let solvable = two_step_class_zero(&dc, &s)?;
        Ok((ok && !solvable, format!("values: {ok}, joint system solvable: {solvable}")))
    }));
    Ok(out)
}

pub fn dihedral(truncation: usize) -> Result<Vec<Anchor>> {
    let dh = Dihedral::new(truncation)?;
    let s = &dh.scenario;
    let one = dh.generator();
    let base_action = dh.action.on_base(s)?;
    let g = dh.action.group().generators()[0];
    let mut out = Vec::new();
    out.push(anchor("dihedral: β = 0", || Ok((s.beta(&dh.eta)?.is_zero(), String::new()))));
    out.push(anchor("dihedral: Φ_a(b) = b·[a = 1]", || {
        let phi = s.phi(&dh.eta, &dh.action, &base_action)?;
        let e = s.base.word_of(&vec![one]).expect("generator edge").base();
        Ok((phi.get(&[g], e) == 1 && phi.entries().count() == 1, format!("{} nonzero entries", phi.entries().count())))
    }));
    out.push(anchor("dihedral: β_G((c,d),(c',d')) = c'·[d = 1]", || {
        let b = s.borel_base(&base_action)?;
        let bg = s.beta_g(&dh.eta, &dh.action, &b);
        let ok = b.space().nd_ids(2).all(|y| {
            let (gs, w) = b.rep(y);
            bg.at(y) == u64::from(gs[0] == g && s.base_tuple(w)[1] == one)
        });
        Ok((ok, format!("{} simplices checked", b.space().nd_count(2))))
    }));
    out.push(anchor("dihedral: ez2(β_G) = (0, Φ, 0)", || {
        let b = s.borel_base(&base_action)?;
        let bg = s.beta_g(&dh.eta, &dh.action, &b);
        let t = DoubleComplex::new(&s.base.space, &base_action, 2).ez2(&b, &bg)?;
        let phi = s.phi(&dh.eta, &dh.action, &base_action)?;
        Ok((t.c20.is_zero() && t.c11 == phi && t.c02.is_zero(), String::new()))
    }));
    out.push(anchor("dihedral: [β] = 0 and [β_G] != 0", || {
        let zero = s.beta_class_zero(&dh.eta)?;
        let routes = s.beta_g_routes(&dh.eta, &dh.action)?;
        Ok((zero && !routes.class_zero()?, "direct, total-complex and section routes agree".into()))
    }));
    Ok(out)
}

pub fn mermin() -> Result<Vec<Anchor>> {
    let m = Mermin::new()?;
    let mut out = Vec::new();
    out.push(anchor("mermin: X has no H-equivariant deterministic distribution", || {
        let opts = EnumerateOptions { equivariant: Some(&m.small_action), relative: Some(&m.relative) };
        let n = enumerate_deterministic(&m.small, m.target, opts).len();
        Ok((n == 0, format!("{n} found")))
    }));
    let g = gamma(&m.small, &m.relative, 2)?;
    let xb = &g.cofiber.space;
    let s = Cochain::from_fn(xb, 1, 2, |e| u64::from(WITNESS_EDGES.contains(&xb.name(e))));
    out.push(anchor("mermin: γ is supported on σ2, σ3 and ds = γ for s = 1 on x_0, x_1, x_2", || {
        let support = names(xb, &g.value);
        let ok = support == ["sigma2", "sigma3"] && coboundary(xb, &s)? == g.value;
        Ok((ok && class_zero(xb, &g.value)?.is_some(), support.join(", ")))
    }));
    out.push(anchor("mermin: Φ_V = 1 exactly on x_i, x_i' and equals φ = -d^h s", || {
        let action = m.small_action.descend(&g.cofiber)?;
        let dc = DoubleComplex::new(xb, &action, 2);
        let phi = phi_from_trivialization(&dc, &s);
        let base = m.small_base(2)?;
        let eta = m.section()?;
        let big = base.phi(&eta, &m.h_action, &m.h_action.on_base(&base)?)?;
        let v = m.v();
        let mut support = Vec::new();
        let mut agree = true;
        for e in xb.nd_ids(1) {
            let orig = g.cofiber.lift(e).expect("edge of X");
            let c = m.class(&m.labels[orig.idx]);
            let be = base.base.space.nd_ids(1).find(|&b| base.base.rep(b)[0] == c).expect("edge over M");
            let val = big.get(&[v], be);
            agree &= val == phi.get(&[1], e);
            if val == 1 {
                support.push(xb.name(e).to_string());
            }
        }
        support.sort();
        let mut expect: Vec<String> = WITNESS_EDGES
            .iter()
            .flat_map(|n| {
                let p = PauliElement::parse(n).expect("label");
                [p, m.symmetry()[0].conjugate(&p)].map(|q| q.to_string())
            })
            .collect();
        expect.sort();
        Ok((agree && support == expect, support.join(", ")))
    }));
    out.push(anchor("mermin: GHZ ρ_* on X is valid, relative, H-equivariant and contextual", || {
        let p = m.small_distribution()?;
        p.validate(&m.small)?;
        let rel = p.is_relative(&m.relative);
        let eq = p.is_equivariant(&m.small, &m.small_action);
        let opts =
            ContextualityOptions { equivariant: Some(&m.small_action), relative: Some(&m.relative), via_borel: false };
        let ctx = check_contextual(&p, &m.small, opts)?.contextual;
        let inv = m.symmetry().iter().map(|u| m.state.conjugate(u)).collect::<Result<Vec<_>>>()?;
        let g_inv = inv.iter().all(|r| *r == m.state);
        Ok((
            rel && eq && ctx && g_inv,
            format!("relative {rel}, equivariant {eq}, contextual {ctx}, G-invariant state {g_inv}"),
        ))
    }));
    out.push(anchor("mermin: central product is -1 and [β] != 0 on the full star", || {
        let c = m.central_product()?;
        let star = m.full_star(2)?;
        let zero = star.beta_class_zero(&m.t_section()?)?;
        Ok((c.to_string() == "-III" && !zero, format!("central product {c}, class zero {zero}")))
    }));
    Ok(out)
}

fn names(x: &crate::simplicial::SSet, c: &Cochain) -> Vec<String> {
    let mut v: Vec<String> = c.support(x).into_iter().map(|s| x.name(s).to_string()).collect();
    v.sort();
    v
}
