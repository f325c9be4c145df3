use super::*;
use crate::algebra::rational;
use crate::gallery::Torus;
use proptest::prelude::*;

fn r(n: i64, d: i64) -> Rational {
    rational(n, d)
}

#[test]
fn torus_validator_probes() {
    let t = Torus::new(3).unwrap();
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1), (1, 3), (2, 2)] {
        let p = t.distribution(&r(a, 4), &r(b, 4)).unwrap();
        assert!(p.validate(&t.space).is_ok(), "({a},{b})/4");
    }
    assert!(t.distribution(&r(3, 4), &r(1, 2)).is_err());
    assert!(t.distribution(&r(-1, 4), &r(1, 2)).is_err());
}

#[test]
fn inconsistent_marginal_rejected() {
    let t = Torus::new(3).unwrap();
    let good = t.distribution(&r(1, 4), &r(1, 4)).unwrap();
    let x = t.nd("x");
    let bad = SimplicialDistribution::from_fn(&t.space, t.target, |s| {
        if s == x {
            Dist::new([(vec![1], r(1, 4)), (vec![0], r(3, 4))])
        } else {
            Ok(good.at(s).clone())
        }
    })
    .unwrap();
    let err = bad.validate(&t.space).unwrap_err();
    assert!(matches!(err, Error::InvalidDistribution(_)));
}

#[test]
fn torus_deterministic_maps() {
    let t = Torus::new(3).unwrap();
    let maps = enumerate_deterministic(&t.space, t.target, EnumerateOptions::default());
    let idx = |s: &str| t.nd(s).idx;
    let mut triples: Vec<(usize, usize, usize)> =
        maps.iter().map(|m| (m.labels[idx("x0")], m.labels[idx("x1")], m.labels[idx("x")])).collect();
    triples.sort();
    assert_eq!(triples, vec![(0, 0, 0), (0, 1, 1), (1, 0, 1)]);
    // brute force over all 2^3 labelings
    let brute = (0..8)
        .filter(|c| {
            let m = DeterministicMap { labels: vec![c & 1, (c >> 1) & 1, c >> 2] };
            m.is_valid(&t.space, t.target)
        })
        .count();
    assert_eq!(brute, 3);
    let eq =
        enumerate_deterministic(&t.space, t.target, EnumerateOptions { equivariant: Some(&t.action), relative: None });
    assert_eq!(eq.len(), 1);
    assert!(eq[0].labels.iter().all(|&l| l == 0));
    let rel = EnumerateOptions { equivariant: Some(&t.action), relative: Some(&t.relative) };
    assert!(enumerate_deterministic(&t.space, t.target, rel).is_empty());
}

#[test]
fn full_nerve_target_allows_more_maps() {
    let t = Torus::new(3).unwrap();
    let maps = enumerate_deterministic(&t.space, Target::nerve(2), EnumerateOptions::default());
    assert_eq!(maps.len(), 4);
    let maps3 = enumerate_deterministic(&t.space, Target::nerve(3), EnumerateOptions::default());
    assert_eq!(maps3.len(), 9);
}

#[test]
fn theta_of_uniform_mixture() {
    let t = Torus::new(3).unwrap();
    let maps = enumerate_deterministic(&t.space, t.target, EnumerateOptions::default());
    let w: Vec<_> = maps.iter().map(|m| (m.clone(), r(1, 3))).collect();
    let p = theta(&t.space, t.target, &w).unwrap();
    p.validate(&t.space).unwrap();
    assert_eq!(p, t.distribution(&r(1, 3), &r(1, 3)).unwrap());
    let single = theta(&t.space, t.target, &[(maps[1].clone(), r(1, 1))]).unwrap();
    assert_eq!(single, maps[1].delta(&t.space, t.target));
}

#[test]
fn torus_equivariant_contextuality() {
    let t = Torus::new(3).unwrap();
    for (n, d) in [(0, 1), (1, 8), (1, 4), (1, 2)] {
        let p = t.equivariant(&r(n, d)).unwrap();
        let opts = ContextualityOptions { equivariant: Some(&t.action), relative: None, via_borel: false };
        let direct = check_contextual(&p, &t.space, opts).unwrap();
        let via = check_contextual(&p, &t.space, ContextualityOptions { via_borel: true, ..opts }).unwrap();
        assert_eq!(direct.contextual, n > 0, "t = {n}/{d}");
        assert_eq!(direct.contextual, via.contextual);
        let plain = check_contextual(&p, &t.space, ContextualityOptions::default()).unwrap();
        assert!(!plain.contextual);
    }
    let zero = t.equivariant(&r(0, 1)).unwrap();
    let c = check_contextual(
        &zero,
        &t.space,
        ContextualityOptions { equivariant: Some(&t.action), relative: None, via_borel: false },
    )
    .unwrap();
    assert_eq!(c.weights.len(), 1);
    assert!(c.weights[0].0.labels.iter().all(|&l| l == 0));
}

#[test]
fn torus_relative_point_is_contextual() {
    let t = Torus::new(3).unwrap();
    let half = t.equivariant(&r(1, 2)).unwrap();
    assert!(half.is_relative(&t.relative));
    for via_borel in [false, true] {
        let opts = ContextualityOptions { equivariant: Some(&t.action), relative: Some(&t.relative), via_borel };
        assert!(check_contextual(&half, &t.space, opts).unwrap().contextual);
    }
    let quarter = t.equivariant(&r(1, 4)).unwrap();
    let opts = ContextualityOptions { equivariant: None, relative: Some(&t.relative), via_borel: false };
    assert!(check_contextual(&quarter, &t.space, opts).is_err());
}

#[test]
fn non_equivariant_input_rejected() {
    let t = Torus::new(3).unwrap();
    let p = t.distribution(&r(1, 4), &r(1, 8)).unwrap();
    let opts = ContextualityOptions { equivariant: Some(&t.action), relative: None, via_borel: false };
    assert!(matches!(check_contextual(&p, &t.space, opts), Err(Error::NotEquivariant(_))));
    assert!(!p.is_equivariant(&t.space, &t.action));
}

#[test]
fn induced_borel_restricts_to_p() {
    let t = Torus::new(3).unwrap();
    let p = t.equivariant(&r(1, 4)).unwrap();
    let b = borel(&t.action, &t.space, 3).unwrap();
    let pb = induced_borel(&p, &t.space, &t.action, &b).unwrap();
    pb.validate(b.space()).unwrap();
    for n in 1..=2 {
        for s in t.space.nd_ids(n) {
            assert_eq!(pb.eval(&b.inclusion.apply(&SimplexWord::nd(s))), *p.at(s));
        }
    }
    // deterministic input gives the delta of the induced map
    let zero = t.equivariant(&r(0, 1)).unwrap();
    let zb = induced_borel(&zero, &t.space, &t.action, &b).unwrap();
    let m = DeterministicMap { labels: vec![0; b.space().nd_count(1)] };
    assert_eq!(zb, m.delta(b.space(), t.target));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn theta_round_trip(ws in proptest::collection::vec(0i64..5, 3)) {
        let t = Torus::new(3).unwrap();
        let total: i64 = ws.iter().sum::<i64>().max(1);
        let maps = enumerate_deterministic(&t.space, t.target, EnumerateOptions::default());
        let mut w: Vec<_> = maps.iter().zip(&ws).map(|(m, &c)| (m.clone(), r(c, total))).collect();
        if ws.iter().all(|&c| c == 0) {
            w[0].1 = r(1, 1);
        }
        let p = theta(&t.space, t.target, &w).unwrap();
        prop_assert!(p.validate(&t.space).is_ok());
        let cert = check_contextual(&p, &t.space, ContextualityOptions::default()).unwrap();
        prop_assert!(!cert.contextual);
        prop_assert_eq!(theta(&t.space, t.target, &cert.weights).unwrap(), p);
    }

    #[test]
    fn theta_is_affine(a in 0i64..4, b in 0i64..4, c in 0i64..4, d in 0i64..4, lam in 0i64..5) {
        let t = Torus::new(3).unwrap();
        let maps = enumerate_deterministic(&t.space, t.target, EnumerateOptions::default());
        let mix = |x: i64, y: i64| {
            let s = (x + y).max(1);
            let (x, y) = if x + y == 0 { (1, 0) } else { (x, y) };
            vec![(maps[0].clone(), r(x, s)), (maps[2].clone(), r(y, s))]
        };
        let (w1, w2) = (mix(a, b), mix(c, d));
        let l = r(lam, 4);
        let one_minus = r(1, 1) - &l;
        let mut comb: Vec<_> = w1.iter().map(|(m, v)| (m.clone(), v * &l)).collect();
        comb.extend(w2.iter().map(|(m, v)| (m.clone(), v * &one_minus)));
        let p = theta(&t.space, t.target, &comb).unwrap();
        let (p1, p2) = (theta(&t.space, t.target, &w1).unwrap(), theta(&t.space, t.target, &w2).unwrap());
        for s in t.space.nd_ids(2) {
            for o in t.target.tuples(2) {
                prop_assert_eq!(p.at(s).get(&o), &l * p1.at(s).get(&o) + &one_minus * p2.at(s).get(&o));
            }
        }
    }
}
