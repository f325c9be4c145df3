//! Pauli group arithmetic in symplectic form, conjugation by Clifford-type
//! unitaries, states given by rational Pauli expansions, and the Born rule.

mod state;

pub use state::{quantum_distribution, PauliState};

use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};
use std::fmt;

pub const MAX_QUBITS: usize = 16;

/// `i^λ T_a` with `T_a = i^{a_z·a_x} Z(a_z) X(a_x)`; bit `j` of the masks is
/// qubit `j + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliElement {
    n: usize,
    phase: u8,
    z: u32,
    x: u32,
}

fn dot(a: u32, b: u32) -> u32 {
    (a & b).count_ones()
}

/// `ω(a, b) = a_z·b_x + a_x·b_z mod 2`.
pub fn omega(a: (u32, u32), b: (u32, u32)) -> u32 {
    (dot(a.0, b.1) + dot(a.1, b.0)) % 2
}

/// `β(a, b)` with `T_a T_b = (-1)^{β(a, b)} T_{a+b}` for commuting `a`, `b`.
/// The integer expression `(b_z·a_x - a_z·b_x)/2` is not always equal to it,
/// e.g. for `a = XX`, `b = YZ`.
pub fn beta_pauli(a: (u32, u32), b: (u32, u32)) -> Result<u64> {
    if omega(a, b) != 0 {
        return Err(Error::Pauli("β is only defined on commuting pairs".into()));
    }
    let n = MAX_QUBITS;
    let ta = PauliElement { n, phase: 0, z: a.0, x: a.1 };
    let tb = PauliElement { n, phase: 0, z: b.0, x: b.1 };
    Ok(u64::from(ta.mul(&tb).phase / 2))
}

impl PauliElement {
    pub fn new(n: usize, phase: u8, z: u32, x: u32) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Pauli(format!("qubit count {n} outside 1..={MAX_QUBITS}")));
        }
        let mask = (1u32 << n) - 1;
        if z & !mask != 0 || x & !mask != 0 {
            return Err(Error::Pauli(format!("vector does not fit {n} qubits")));
        }
        Ok(Self { n, phase: phase % 4, z, x })
    }

    pub fn identity(n: usize) -> Self {
        Self { n, phase: 0, z: 0, x: 0 }
    }

    /// `T_a`.
    pub fn t(n: usize, z: u32, x: u32) -> Result<Self> {
        Self::new(n, 0, z, x)
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn vector(&self) -> (u32, u32) {
        (self.z, self.x)
    }

    pub fn scaled(&self, lambda: u8) -> Self {
        Self { phase: (self.phase + lambda) % 4, ..*self }
    }

    pub fn neg(&self) -> Self {
        self.scaled(2)
    }

    /// `T_a T_b = i^e T_{a+b}`, `e = a_z·a_x + b_z·b_x + 2 a_x·b_z - (a+b)_z·(a+b)_x`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "qubit counts differ");
        let (z, x) = (self.z ^ other.z, self.x ^ other.x);
        let e = dot(self.z, self.x) as i64 + dot(other.z, other.x) as i64 + 2 * dot(self.x, other.z) as i64
            - dot(z, x) as i64;
        let phase = (self.phase as i64 + other.phase as i64 + e).rem_euclid(4) as u8;
        Self { n: self.n, phase, z, x }
    }

    pub fn inverse(&self) -> Self {
        Self { phase: (4 - self.phase) % 4, ..*self }
    }

    pub fn commutes(&self, other: &Self) -> bool {
        omega(self.vector(), other.vector()) == 0
    }

    /// Squares to the identity; equivalently `±T_a`.
    pub fn is_hermitian(&self) -> bool {
        self.phase.is_multiple_of(2)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Tensor factor on qubit `j` as the pair `(z, x)` of bits.
    fn bits(&self, j: usize) -> (u32, u32) {
        ((self.z >> j) & 1, (self.x >> j) & 1)
    }

    /// Parses a tensor product of `I, X, Y, Z` (the usual matrices) with an
    /// optional leading sign, e.g. `-YYX`.
    pub fn parse(s: &str) -> Result<Self> {
        let (neg, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let n = body.chars().count();
        let (mut z, mut x, mut ys) = (0u32, 0u32, 0u8);
        for (j, c) in body.chars().enumerate() {
            let (bz, bx) = match c {
                'I' => (0, 0),
                'X' => (0, 1),
                'Z' => (1, 0),
                'Y' => {
                    ys += 1;
                    (1, 1)
                }
                _ => return Err(Error::Pauli(format!("unexpected character {c:?} in {s:?}"))),
            };
            z |= bz << j;
            x |= bx << j;
        }
        // Y = -T_{(1,1)}
        Self::new(n, 2 * (ys % 2) + if neg { 2 } else { 0 }, z, x)
    }

    /// Single-qubit operator `p` on qubit `j` (0-based) of `n`.
    pub fn on_qubit(n: usize, j: usize, p: char) -> Result<Self> {
        let mut s: String = "I".repeat(n);
        s.replace_range(j..=j, &p.to_string());
        Self::parse(&s)
    }

    fn label_body(&self) -> (String, u8) {
        let mut ys = 0u8;
        let body = (0..self.n)
            .map(|j| match self.bits(j) {
                (0, 0) => 'I',
                (0, _) => 'X',
                (_, 0) => 'Z',
                _ => {
                    ys += 1;
                    'Y'
                }
            })
            .collect();
        (body, (2 * (ys % 2)) % 4)
    }
}

impl fmt::Display for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (body, yphase) = self.label_body();
        let prefix = match (self.phase + 4 - yphase) % 4 {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}{body}")
    }
}

/// The group `P_n` with its elements in group order (identity first).
pub fn pauli_group(n: usize) -> Result<(FiniteGroup, Vec<PauliElement>)> {
    let mut gens = vec![PauliElement::identity(n).scaled(1)];
    for j in 0..n {
        gens.push(PauliElement::on_qubit(n, j, 'X')?);
        gens.push(PauliElement::on_qubit(n, j, 'Z')?);
    }
    FiniteGroup::from_closure(&gens, PauliElement::identity(n), |a, b| a.mul(b), |p| p.to_string())
}

/// Conjugation `p ↦ U p U†` by a unitary normalizing `P_n`, stored through
/// the images of `X_j` and `Z_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clifford {
    n: usize,
    x_images: Vec<PauliElement>,
    z_images: Vec<PauliElement>,
}

impl Clifford {
    /// Images must be Hermitian and satisfy the Pauli commutation relations.
    pub fn new(n: usize, x_images: Vec<PauliElement>, z_images: Vec<PauliElement>) -> Result<Self> {
        if x_images.len() != n || z_images.len() != n {
            return Err(Error::Pauli("one image per qubit for X and for Z is required".into()));
        }
        for p in x_images.iter().chain(&z_images) {
            if p.n != n || !p.is_hermitian() || p.vector() == (0, 0) {
                return Err(Error::Pauli(format!("{p} is not a valid image")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ok = x_images[i].commutes(&x_images[j])
                    && z_images[i].commutes(&z_images[j])
                    && x_images[i].commutes(&z_images[j]) == (i != j);
                if !ok {
                    return Err(Error::Pauli("images violate the commutation relations".into()));
                }
            }
        }
        Ok(Self { n, x_images, z_images })
    }

    /// Tensor product of single-qubit gates named `I, X, Y, Z, A`, where
    /// `A = (X + Y)/√2`.
    pub fn local(gates: &[char]) -> Result<Self> {
        let n = gates.len();
        let mut xs = Vec::new();
        let mut zs = Vec::new();
        for (j, &g) in gates.iter().enumerate() {
            let (x, z) = match g {
                'I' => ("X", "Z"),
                'X' => ("X", "-Z"),
                'Y' => ("-X", "-Z"),
                'Z' => ("-X", "Z"),
                'A' => ("Y", "-Z"),
                _ => return Err(Error::Pauli(format!("unknown gate {g:?}"))),
            };
            let place = |s: &str| -> Result<PauliElement> {
                let (neg, c) = match s.strip_prefix('-') {
                    Some(r) => (true, r),
                    None => (false, s),
                };
                let p = PauliElement::on_qubit(n, j, c.chars().next().unwrap_or('I'))?;
                Ok(if neg { p.neg() } else { p })
            };
            xs.push(place(x)?);
            zs.push(place(z)?);
        }
        Self::new(n, xs, zs)
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn conjugate(&self, p: &PauliElement) -> PauliElement {
        assert_eq!(p.n, self.n, "qubit counts differ");
        let mut acc = PauliElement::identity(self.n).scaled(((p.phase as u32 + dot(p.z, p.x)) % 4) as u8);
        for j in 0..self.n {
            if (p.z >> j) & 1 == 1 {
                acc = acc.mul(&self.z_images[j]);
            }
        }
        for j in 0..self.n {
            if (p.x >> j) & 1 == 1 {
                acc = acc.mul(&self.x_images[j]);
            }
        }
        acc
    }

    /// The induced permutation of a list of group elements.
    pub fn permutation(&self, elements: &[PauliElement]) -> Result<Vec<usize>> {
        let index: std::collections::HashMap<PauliElement, usize> =
            elements.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        elements
            .iter()
            .map(|p| {
                index.get(&self.conjugate(p)).copied().ok_or_else(|| Error::Pauli(format!("{p} leaves the group")))
            })
            .collect()
    }
}
