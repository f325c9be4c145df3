//! Dense complex-matrix oracle for Pauli arithmetic.
#![allow(dead_code)]

use ctxlab::pauli::{beta_pauli, Clifford, PauliElement, PauliState};
use num_complex::Complex64;
use rand::{rngs::StdRng, Rng, SeedableRng};

pub const TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct Mat {
    pub dim: usize,
    pub data: Vec<Complex64>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl Mat {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![c(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = c(1.0, 0.0);
        }
        Self { dim, data }
    }

    pub fn single(label: char) -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let d = match label {
            'I' => [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
            'X' => [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            'Y' => [c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)],
            'Z' => [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
            'A' => [c(0.0, 0.0), c(s, -s), c(s, s), c(0.0, 0.0)],
            _ => panic!("unknown single-qubit label {label}"),
        };
        Self { dim: 2, data: d.to_vec() }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        let mut data = vec![c(0.0, 0.0); dim * dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        data[(i * other.dim + k) * dim + j * other.dim + l] =
                            self.data[i * self.dim + j] * other.data[k * other.dim + l];
                    }
                }
            }
        }
        Self { dim, data }
    }

    pub fn tensor(labels: &str) -> Self {
        labels.chars().fold(Self::identity(1), |m, l| m.kron(&Self::single(l)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut data = vec![c(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == c(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Self { dim: n, data }
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut data = vec![c(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        Self { dim: n, data }
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|v| v * z).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    pub fn close(&self, other: &Self) -> bool {
        self.dim == other.dim && self.data.iter().zip(&other.data).all(|(a, b)| (a - b).norm() < TOL)
    }
}

pub fn i_pow(k: u8) -> Complex64 {
    [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)][(k % 4) as usize]
}

/// Dense matrix of `i^λ T_a`, built from the definition of `T_a`.
pub fn dense(p: &PauliElement) -> Mat {
    let n = p.qubits();
    let (z, x) = p.vector();
    let zs: String = (0..n).map(|j| if (z >> j) & 1 == 1 { 'Z' } else { 'I' }).collect();
    let xs: String = (0..n).map(|j| if (x >> j) & 1 == 1 { 'X' } else { 'I' }).collect();
    let zx = (z & x).count_ones() as u8;
    Mat::tensor(&zs).mul(&Mat::tensor(&xs)).scale(i_pow(p.phase() + zx))
}

pub fn dense_state(rho: &PauliState) -> Mat {
    let dim = 1usize << rho.qubits();
    rho.terms().fold(Mat { dim, data: vec![c(0.0, 0.0); dim * dim] }, |acc, (p, coef)| {
        let v = num_traits::ToPrimitive::to_f64(&coef).unwrap();
        acc.add(&dense(&p).scale(c(v, 0.0)))
    })
}

/// `Tr(ρ Π_j (1 + (-1)^{s_j} A_j)/2)`.
pub fn dense_born(rho: &Mat, context: &[PauliElement], s: &[usize]) -> f64 {
    let mut m = rho.clone();
    for (p, &sj) in context.iter().zip(s) {
        let sign = if sj == 0 { 1.0 } else { -1.0 };
        let proj = Mat::identity(rho.dim).add(&dense(p).scale(c(sign, 0.0))).scale(c(0.5, 0.0));
        m = m.mul(&proj);
    }
    m.trace().re
}

pub fn all_elements(n: usize) -> Vec<PauliElement> {
    let m = 1u32 << n;
    let mut out = Vec::new();
    for l in 0..4 {
        for z in 0..m {
            for x in 0..m {
                out.push(PauliElement::new(n, l, z, x).unwrap());
            }
        }
    }
    out
}

pub fn random_element(rng: &mut StdRng, n: usize) -> PauliElement {
    let m = 1u32 << n;
    PauliElement::new(n, rng.gen_range(0..4), rng.gen_range(0..m), rng.gen_range(0..m)).unwrap()
}

pub fn random_local(rng: &mut StdRng, n: usize) -> (Vec<char>, Clifford) {
    let gates: Vec<char> = (0..n).map(|_| ['I', 'X', 'Y', 'Z', 'A'][rng.gen_range(0..5)]).collect();
    let u = Clifford::local(&gates).unwrap();
    (gates, u)
}

/// Checks multiply, conjugate and beta on one triple; returns a description
/// of the first disagreement.
pub fn check_triple(a: &PauliElement, b: &PauliElement, gates: &[char], u: &Clifford) -> Result<(), String> {
    let (da, db) = (dense(a), dense(b));
    if !dense(&a.mul(b)).close(&da.mul(&db)) {
        return Err(format!("multiply {a} {b}"));
    }
    let du = Mat::tensor(&gates.iter().collect::<String>());
    if !dense(&u.conjugate(a)).close(&du.mul(&da).mul(&du.adjoint())) {
        return Err(format!("conjugate {a} by {gates:?}"));
    }
    if a.commutes(b) {
        let (ta, tb) = (strip(a), strip(b));
        let tab = strip(&a.mul(b));
        let sign = if beta_pauli(a.vector(), b.vector()).unwrap() == 1 { -1.0 } else { 1.0 };
        if !dense(&ta).mul(&dense(&tb)).close(&dense(&tab).scale(c(sign, 0.0))) {
            return Err(format!("beta {a} {b}"));
        }
    } else if beta_pauli(a.vector(), b.vector()).is_ok() {
        return Err(format!("beta accepted non-commuting {a} {b}"));
    }
    Ok(())
}

fn strip(p: &PauliElement) -> PauliElement {
    PauliElement::t(p.qubits(), p.vector().0, p.vector().1).unwrap()
}

/// Exhaustive `n ≤ 2` and `count` random `n = 3` triples.
pub fn oracle_sweep(count: usize, seed: u64) -> Result<usize, String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checked = 0;
    for n in 1..=2 {
        let elems = all_elements(n);
        let gates = ['I', 'X', 'Y', 'Z', 'A'];
        for a in &elems {
            for b in &elems {
                let g: Vec<char> = (0..n).map(|_| gates[rng.gen_range(0..5)]).collect();
                let u = Clifford::local(&g).unwrap();
                check_triple(a, b, &g, &u)?;
                checked += 1;
            }
        }
    }
    for _ in 0..count {
        let a = random_element(&mut rng, 3);
        let b = random_element(&mut rng, 3);
        let (g, u) = random_local(&mut rng, 3);
        check_triple(&a, &b, &g, &u)?;
        checked += 1;
    }
    Ok(checked)
}
