mod common;

use common::*;
use ctxlab::pauli::{Clifford, PauliElement, PauliState};

#[test]
fn oracle_agrees_on_arithmetic() {
    let checked = oracle_sweep(10_000, 7).unwrap();
    assert!(checked >= 10_000);
}

#[test]
fn every_local_gate_matches_dense_conjugation() {
    let elems = all_elements(1);
    for g in ['I', 'X', 'Y', 'Z', 'A'] {
        let u = Clifford::local(&[g]).unwrap();
        let du = Mat::single(g);
        for p in &elems {
            assert!(dense(&u.conjugate(p)).close(&du.mul(&dense(p)).mul(&du.adjoint())), "{g} on {p}");
        }
    }
}

#[test]
fn labels_are_physical_matrices() {
    for s in ["XYZ", "-YYX", "IZY"] {
        assert!(dense(&PauliElement::parse(s).unwrap()).close(
            &Mat::tensor(s.trim_start_matches('-')).scale(if s.starts_with('-') { i_pow(2) } else { i_pow(0) })
        ));
    }
}

#[test]
fn ghz_is_the_pure_state() {
    let rho = dense_state(&PauliState::ghz(3).unwrap());
    let mut psi = Mat { dim: 8, data: vec![i_pow(0) * 0.0; 64] };
    for (i, j) in [(0, 0), (0, 7), (7, 0), (7, 7)] {
        psi.data[i * 8 + j] = i_pow(0) * 0.5;
    }
    assert!(rho.close(&psi));
    assert!((rho.trace().re - 1.0).abs() < TOL);
}

#[test]
fn born_matches_projectors() {
    let rho = PauliState::ghz(3).unwrap();
    let dense_rho = dense_state(&rho);
    let p = |s: &str| PauliElement::parse(s).unwrap();
    let contexts = [
        vec![p("XXX")],
        vec![p("XII"), p("IXI"), p("IIX")],
        vec![p("XII"), p("IYI"), p("IIY")],
        vec![p("ZII"), p("IZI")],
        vec![p("XXX"), p("XYY"), p("YXY")],
        vec![p("YII"), p("IXI"), p("-YXI")],
    ];
    for ctx in contexts {
        let d = rho.born(&ctx).unwrap();
        for s in 0..(1usize << ctx.len()) {
            let out: Vec<usize> = (0..ctx.len()).map(|j| (s >> j) & 1).collect();
            let exact = num_traits::ToPrimitive::to_f64(&d.get(&out)).unwrap();
            assert!((exact - dense_born(&dense_rho, &ctx, &out)).abs() < TOL, "{ctx:?} {out:?}");
        }
    }
}
