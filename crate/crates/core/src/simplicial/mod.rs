//! Truncated simplicial sets presented by nondegenerate simplices, words in
//! Eilenberg–Zilber normal form, constructors, and simplicial maps.

mod construct;
mod map;
mod model;
mod sset;
mod word;

pub use construct::{
    circle, circle_in_nerve, cofiber, face_closure, nerve, nerve_abelian, point, product, standard_simplex, torus,
    Cofiber,
};
pub use map::{edge_label, edge_relation_holds, map_from_edge_labels, SimplicialMap};
pub use model::{
    nerve_face, realize, tuple_label, ExplicitModel, Generated, GroupNerve, Product, Realized, StandardSimplex,
};
pub use sset::{check_truncation, NdSimplex, SSet, SSetBuilder, DEFAULT_TRUNCATION, MAX_TRUNCATION};
pub use word::{surjections, Nd, SimplexWord};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteGroup;

    fn z2() -> FiniteGroup {
        FiniteGroup::cyclic(2)
    }

    #[test]
    fn nerve_z2_counts() {
        let n = nerve_abelian(&z2(), 3).unwrap();
        let x = &n.space;
        assert_eq!((x.nd_count(0), x.nd_count(1), x.nd_count(2), x.nd_count(3)), (1, 1, 1, 1));
        assert_eq!(n.rep(Nd::new(2, 0)), &vec![1, 1]);
        assert!(n.word_of(&vec![0, 1]).unwrap().is_degenerate());
        assert!(n.word_of(&vec![1, 0]).unwrap().is_degenerate());
        // d1 (a, b) = a + b
        let w = n.word_of(&vec![1, 1]).unwrap();
        assert_eq!(x.face(1, w), n.word_of(&vec![0]).unwrap().clone());
        // s0 a = (0, a), s1 a = (a, 0)
        let a = n.word_of(&vec![1]).unwrap();
        assert_eq!(n.word_of(&vec![0, 1]).unwrap(), &a.degeneracy(0));
        assert_eq!(n.word_of(&vec![1, 0]).unwrap(), &a.degeneracy(1));
    }

    #[test]
    fn nerve_of_z3_has_more_simplices() {
        let n = nerve_abelian(&FiniteGroup::cyclic(3), 3).unwrap();
        assert_eq!(n.space.nd_count(1), 2);
        assert_eq!(n.space.nd_count(2), 4);
        assert_eq!(n.space.nd_count(3), 8);
        let (s3, _) = FiniteGroup::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert!(nerve_abelian(&s3, 2).is_err());
        assert!(nerve(&s3, 2).is_ok());
    }

    #[test]
    fn circle_structure() {
        let c = circle(3).unwrap();
        let th = c.word("theta").unwrap();
        assert_eq!(c.face(0, &th), c.word("*").unwrap());
        assert_eq!(c.face(1, &th), c.word("*").unwrap());
        assert_eq!((c.nd_count(0), c.nd_count(1), c.nd_count(2), c.nd_count(3)), (1, 1, 0, 0));
        // theta^n simplices: n of them in dimension n, all degenerate for n >= 2
        assert_eq!(c.words(3).iter().filter(|w| w.base().dim == 1).count(), 3);
    }

    #[test]
    fn circle_embeds_in_nerve_z2() {
        let c = circle(3).unwrap();
        let n = nerve_abelian(&z2(), 3).unwrap();
        let f = map_from_edge_labels(&c, &z2(), &n, &[1]).unwrap();
        assert!(f.is_valid(&c, &n.space));
        let s = circle_in_nerve(2, 1, 3).unwrap();
        assert_eq!(s.space.nd_count(1), 1);
        assert_eq!(s.space.nd_count(2), 0);
    }

    #[test]
    fn torus_structure() {
        let t = torus(3).unwrap();
        assert_eq!((t.nd_count(0), t.nd_count(1), t.nd_count(2), t.nd_count(3)), (1, 3, 2, 0));
        let s0 = t.find("sigma0").unwrap();
        let s1 = t.find("sigma1").unwrap();
        let names = |s: Nd| t.faces(s).iter().map(|w| t.describe(w)).collect::<Vec<_>>();
        assert_eq!(names(s0), ["x1", "x", "x0"]);
        assert_eq!(names(s1), ["x0", "x", "x1"]);
    }

    #[test]
    fn product_with_point() {
        let t = torus(3).unwrap();
        let p = point(3).unwrap();
        let tp = product(&t, &p).unwrap().space;
        for n in 0..=3 {
            assert_eq!(tp.nd_count(n), t.nd_count(n));
        }
    }

    #[test]
    fn torus_is_subnerve_of_z2_squared() {
        let k = FiniteGroup::direct_product(&z2(), &z2());
        let (e0, e1) = (k.find("(1,0)").unwrap(), k.find("(0,1)").unwrap());
        let gen = Generated::new(GroupNerve::full(k), &[vec![e0, e1], vec![e1, e0]], |s| s.len(), 3);
        let sub = realize(&gen, 3).unwrap().space;
        let t = torus(3).unwrap();
        for n in 0..=3 {
            assert_eq!(sub.nd_count(n), t.nd_count(n));
        }
    }

    #[test]
    fn cofiber_examples() {
        let t = torus(3).unwrap();
        let x = t.find("x").unwrap();
        let z = face_closure(&t, &[x]);
        let q = cofiber(&t, &z).unwrap();
        assert_eq!(q.space.nd_count(1), 2);
        assert_eq!(q.space.nd_count(2), 2);
        assert!(q.quotient.is_valid(&t, &q.space));
        let s0 = q.space.find("sigma0").unwrap();
        assert!(q.space.faces(s0)[1].is_degenerate());
        assert_eq!(q.lift(s0), t.find("sigma0"));

        let all: Vec<Nd> = (0..=3).flat_map(|n| t.nd_ids(n).collect::<Vec<_>>()).collect();
        let pt = cofiber(&t, &all).unwrap().space;
        assert_eq!((pt.nd_count(0), pt.nd_count(1), pt.nd_count(2)), (1, 0, 0));

        let same = cofiber(&t, &[Nd::new(0, 0)]).unwrap().space;
        for n in 0..=3 {
            assert_eq!(same.nd_count(n), t.nd_count(n));
        }
        assert!(cofiber(&t, &[x]).is_err());
    }

    #[test]
    fn torus_maps_to_nerve_z2() {
        let t = torus(3).unwrap();
        let n = nerve_abelian(&z2(), 3).unwrap();
        let idx = |s: &str| t.find(s).unwrap().idx;
        let mut labels = vec![0; 3];
        labels[idx("x0")] = 1;
        labels[idx("x")] = 1;
        assert!(edge_relation_holds(&t, &z2(), &labels));
        assert!(map_from_edge_labels(&t, &z2(), &n, &labels).unwrap().is_valid(&t, &n.space));
        labels[idx("x")] = 0;
        assert!(!edge_relation_holds(&t, &z2(), &labels));
        assert!(!map_from_edge_labels(&t, &z2(), &n, &labels).unwrap().is_valid(&t, &n.space));
    }

    #[test]
    fn edge_relation_agrees_with_map_validation() {
        let t = torus(3).unwrap();
        for d in [2usize, 3] {
            let g = FiniteGroup::cyclic(d);
            let n = nerve_abelian(&g, 3).unwrap();
            let mut valid = 0;
            for code in 0..d.pow(3) {
                let labels = vec![code % d, (code / d) % d, code / (d * d)];
                let rel = edge_relation_holds(&t, &g, &labels);
                let map = map_from_edge_labels(&t, &g, &n, &labels).unwrap().is_valid(&t, &n.space);
                assert_eq!(rel, map);
                valid += usize::from(rel);
            }
            assert_eq!(valid, d * d);
        }
    }

    #[test]
    fn identity_and_composition() {
        let t = torus(3).unwrap();
        let id = SimplicialMap::identity(&t);
        assert!(id.is_valid(&t, &t));
        assert_eq!(id.then(&id), id);
    }

    #[test]
    fn standard_simplex_counts() {
        let d2 = standard_simplex(2, 3).unwrap();
        assert_eq!((d2.nd_count(0), d2.nd_count(1), d2.nd_count(2), d2.nd_count(3)), (3, 3, 1, 0));
    }

    #[test]
    fn identities_hold_for_constructed_spaces() {
        let g = FiniteGroup::direct_product(&z2(), &FiniteGroup::cyclic(3));
        let spaces =
            [torus(3).unwrap(), nerve(&g, 3).unwrap().space, standard_simplex(3, 3).unwrap(), circle(4).unwrap()];
        for s in &spaces {
            s.check().unwrap();
        }
    }
}
