use ctxlab::cohomology::{class_zero, coboundary, gamma, phi_from_trivialization, Cochain, DoubleComplex};
use ctxlab::gallery::{Mermin, WITNESS_EDGES};
use ctxlab::pauli::PauliElement;
use ctxlab::sdist::{check_contextual, enumerate_deterministic, ContextualityOptions, EnumerateOptions};
use ctxlab::simplicial::SSet;
use std::sync::OnceLock;

fn mermin() -> &'static Mermin {
    static M: OnceLock<Mermin> = OnceLock::new();
    M.get_or_init(|| Mermin::new().unwrap())
}

fn names(x: &SSet, c: &Cochain) -> Vec<String> {
    let mut v: Vec<String> = c.support(x).into_iter().map(|s| x.name(s).to_string()).collect();
    v.sort();
    v
}

#[test]
fn symmetry_group_and_small_action() {
    let m = mermin();
    assert_eq!(m.h_action.group().order(), 2);
    let v = m.symmetry()[0].clone();
    let p = |s: &str| PauliElement::parse(s).unwrap();
    assert_eq!(v.conjugate(&p("XXI")), p("YYI"));
    assert_eq!(v.conjugate(&p("XXX")), p("-YYX"));
    assert_eq!(v.conjugate(&p("IIX")), p("-IIX"));
    let g = m.small_action.act_nd(1, m.nd("sigma2"));
    assert_eq!(m.small.name(g), "sigma3");
    assert_eq!(m.small.name(m.small_action.act_nd(1, m.nd("sigma1b''"))), "sigma4b''");
}

#[test]
fn no_equivariant_deterministic_distribution() {
    let m = mermin();
    let opts = EnumerateOptions { equivariant: Some(&m.small_action), relative: Some(&m.relative) };
    assert!(enumerate_deterministic(&m.small, m.target, opts).is_empty());
    let rel = EnumerateOptions { relative: Some(&m.relative), ..Default::default() };
    assert!(!enumerate_deterministic(&m.small, m.target, rel).is_empty());
    let eq = EnumerateOptions { equivariant: Some(&m.small_action), ..Default::default() };
    assert!(!enumerate_deterministic(&m.small, m.target, eq).is_empty());
}

#[test]
fn gamma_and_its_witness() {
    let m = mermin();
    let g = gamma(&m.small, &m.relative, 2).unwrap();
    let xb = &g.cofiber.space;
    assert_eq!(names(xb, &g.value), ["sigma2", "sigma3"]);
    assert!(class_zero(xb, &g.value).unwrap().is_some());
    let s = Cochain::from_fn(xb, 1, 2, |e| u64::from(WITNESS_EDGES.contains(&xb.name(e))));
    assert_eq!(coboundary(xb, &s).unwrap(), g.value);
}

#[test]
fn phi_matches_trivialization() {
    let m = mermin();
    let g = gamma(&m.small, &m.relative, 2).unwrap();
    let xb = &g.cofiber.space;
    let action = m.small_action.descend(&g.cofiber).unwrap();
    let s = Cochain::from_fn(xb, 1, 2, |e| u64::from(WITNESS_EDGES.contains(&xb.name(e))));
    let dc = DoubleComplex::new(xb, &action, 2);
    let phi = phi_from_trivialization(&dc, &s);
    let v = 1;
    let mut support: Vec<&str> = xb.nd_ids(1).filter(|&e| phi.get(&[v], e) == 1).map(|e| xb.name(e)).collect();
    support.sort();
    assert_eq!(support, ["-IIX", "-XXI", "-YYI", "IIX", "XXI", "YYI"]);

    // Φ_V from the extension, pulled back along the labels
    let base = m.small_base(2).unwrap();
    let eta = m.section().unwrap();
    let base_action = m.h_action.on_base(&base).unwrap();
    let big_phi = base.phi(&eta, &m.h_action, &base_action).unwrap();
    assert!(base.beta(&eta).unwrap().is_zero());
    let vbar = m.v();
    for e in xb.nd_ids(1) {
        let orig = g.cofiber.lift(e).unwrap();
        let c = m.class(&m.labels[orig.idx]);
        let be = base.base.space.nd_ids(1).find(|&b| base.base.rep(b)[0] == c).unwrap();
        assert_eq!(big_phi.get(&[vbar], be), phi.get(&[v], e), "{}", xb.name(e));
    }
}

#[test]
fn phi_under_t_section_differs_by_coboundary() {
    let m = mermin();
    let base = m.small_base(2).unwrap();
    let eta = m.t_section().unwrap();
    let base_action = m.h_action.on_base(&base).unwrap();
    let phi = base.phi(&eta, &m.h_action, &base_action).unwrap();
    let vbar = m.v();
    let mut support: Vec<String> = base
        .base
        .space
        .nd_ids(1)
        .filter(|&e| phi.get(&[vbar], e) == 1)
        .map(|e| base.base.space.name(e).to_string())
        .collect();
    support.sort();
    assert_eq!(support, ["IIX", "XXX", "YYX"]);
    let routes = base.beta_g_routes(&eta, &m.h_action).unwrap();
    assert!(!routes.class_zero().unwrap());
}

#[test]
fn ghz_distribution_on_small_space() {
    let m = mermin();
    let p = m.small_distribution().unwrap();
    p.validate(&m.small).unwrap();
    assert!(p.is_relative(&m.relative));
    assert!(p.is_equivariant(&m.small, &m.small_action));
    for via_borel in [false, true] {
        let opts = ContextualityOptions { equivariant: Some(&m.small_action), relative: Some(&m.relative), via_borel };
        assert!(check_contextual(&p, &m.small, opts).unwrap().contextual);
    }
    for u in m.symmetry() {
        assert_eq!(m.state.conjugate(&u).unwrap(), m.state);
    }
}

#[test]
fn star_classes() {
    let m = mermin();
    assert_eq!(m.central_product().unwrap(), PauliElement::parse("-III").unwrap());
    let eta = m.t_section().unwrap();
    let lines = m.four_lines(2).unwrap();
    assert_eq!(lines.base.space.nd_count(2), 8);
    assert!(lines.beta_class_zero(&eta).unwrap());
    m.g_action.on_base(&lines).unwrap();
    let star = m.full_star(2).unwrap();
    assert_eq!(star.base.space.nd_count(2), 10);
    assert!(!star.beta_class_zero(&eta).unwrap());
    assert!(star.sections(None, 1).is_empty());
}
