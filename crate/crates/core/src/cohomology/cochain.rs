use crate::algebra::{solve_linear_zmod, ZModMatrix};
use crate::error::{Error, Result};
use crate::simplicial::{cofiber, Cofiber, Nd, SSet, SimplexWord};
use std::collections::HashSet;

/// Normalized `n`-cochain with values in `Z/d`, stored on nondegenerate simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub dim: usize,
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl Cochain {
    pub fn zero(x: &SSet, dim: usize, modulus: u64) -> Self {
        Self { dim, modulus, values: vec![0; x.nd_count(dim)] }
    }

    pub fn from_fn(x: &SSet, dim: usize, modulus: u64, mut f: impl FnMut(Nd) -> u64) -> Self {
        Self { dim, modulus, values: x.nd_ids(dim).map(|s| f(s) % modulus).collect() }
    }

    /// Value on any simplex; zero on degenerate ones.
    pub fn eval(&self, w: &SimplexWord) -> u64 {
        if w.is_degenerate() {
            0
        } else {
            debug_assert_eq!(w.dim(), self.dim);
            self.values[w.base().idx]
        }
    }

    pub fn at(&self, s: Nd) -> u64 {
        self.values[s.idx]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn support(&self, x: &SSet) -> Vec<Nd> {
        x.nd_ids(self.dim).filter(|s| self.at(*s) != 0).collect()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        let m = self.modulus;
        Cochain {
            dim: self.dim,
            modulus: m,
            values: self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % m).collect(),
        }
    }

    pub fn neg(&self) -> Cochain {
        let m = self.modulus;
        Cochain { dim: self.dim, modulus: m, values: self.values.iter().map(|&a| (m - a) % m).collect() }
    }

    /// Pullback along a simplicial map given as a word-level function.
    pub fn pullback(&self, source: &SSet, f: impl Fn(&SimplexWord) -> SimplexWord) -> Cochain {
        Cochain::from_fn(source, self.dim, self.modulus, |s| self.eval(&f(&SimplexWord::nd(s))))
    }
}

/// Signed sum of face values on every `(n+1)`-simplex.
pub fn coboundary(x: &SSet, c: &Cochain) -> Result<Cochain> {
    let n = c.dim;
    if n + 1 > x.truncation() {
        return Err(Error::Dimension(format!("coboundary of a {n}-cochain needs dimension {}", n + 1)));
    }
    let m = c.modulus;
    Ok(Cochain::from_fn(x, n + 1, m, |s| {
        x.faces(s).iter().enumerate().map(|(i, f)| if i % 2 == 0 { c.eval(f) } else { m - c.eval(f) }).sum::<u64>()
    }))
}

/// Matrix of `d: C^n -> C^{n+1}`.
pub fn coboundary_matrix(x: &SSet, n: usize, modulus: u64) -> ZModMatrix {
    let mut mat = ZModMatrix::zeros(x.nd_count(n + 1), x.nd_count(n), modulus);
    for s in x.nd_ids(n + 1) {
        for (i, f) in x.faces(s).iter().enumerate() {
            if !f.is_degenerate() {
                mat.add_to(s.idx, f.base().idx, if i % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    mat
}

/// A cochain `b` with `d b = c`, or `None` when the class of `c` is nonzero.
pub fn class_zero(x: &SSet, c: &Cochain) -> Result<Option<Cochain>> {
    if c.dim == 0 {
        return Err(Error::Dimension("0-cochains have no coboundary preimage".into()));
    }
    if c.dim < x.truncation() && !coboundary(x, c)?.is_zero() {
        return Err(Error::NotCocycle(format!("{}-cochain is not a cocycle", c.dim)));
    }
    let mat = coboundary_matrix(x, c.dim - 1, c.modulus);
    Ok(solve_linear_zmod(&mat, &c.values)?.map(|v| Cochain { dim: c.dim - 1, modulus: c.modulus, values: v }))
}

/// The connecting homomorphism applied to a 1-cocycle `r` on a subspace:
/// extend `r` by zero, take the coboundary, and read it on the cofiber.
#[derive(Clone, Debug)]
pub struct Connecting {
    pub cofiber: Cofiber,
    pub extended: Cochain,
    pub value: Cochain,
}

/// `z` is the face-closed subspace and `r` gives labels on its edges.
pub fn connecting_zeta(x: &SSet, z: &[Nd], r: impl Fn(Nd) -> u64, modulus: u64) -> Result<Connecting> {
    let zs: HashSet<Nd> = z.iter().copied().collect();
    let extended = Cochain::from_fn(x, 1, modulus, |e| if zs.contains(&e) { r(e) } else { 0 });
    let d = coboundary(x, &extended)?;
    for t in z.iter().filter(|t| t.dim == 2) {
        if d.at(*t) != 0 {
            return Err(Error::InvalidMap(format!("labels on the subspace are not a map at {}", x.name(*t))));
        }
    }
    let cof = cofiber(x, z)?;
    let value = Cochain::from_fn(&cof.space, 2, modulus, |s| cof.lift(s).map_or(0, |orig| d.at(orig)));
    Ok(Connecting { cofiber: cof, extended, value })
}
