use super::word::{split_face, surjections, FaceSplit, Nd, SimplexWord};
use crate::error::{Error, Result};

/// Default truncation level.
pub const DEFAULT_TRUNCATION: usize = 3;
/// Largest truncation accepted anywhere.
pub const MAX_TRUNCATION: usize = 4;

pub fn check_truncation(n: usize) -> Result<()> {
    if n > MAX_TRUNCATION {
        return Err(Error::Dimension(format!("truncation {n} exceeds the cap {MAX_TRUNCATION}")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdSimplex {
    pub name: String,
    /// `d_0 … d_n`; empty for vertices.
    pub faces: Vec<SimplexWord>,
}

/// A simplicial set truncated at some level `N`, presented by its
/// nondegenerate simplices and their faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSet {
    nd: Vec<Vec<NdSimplex>>,
}

/// Incremental construction; simplices must be added after their faces.
#[derive(Debug)]
pub struct SSetBuilder {
    inner: SSet,
}

impl SSetBuilder {
    pub fn new(truncation: usize) -> Result<Self> {
        check_truncation(truncation)?;
        Ok(Self { inner: SSet { nd: vec![Vec::new(); truncation + 1] } })
    }

    pub fn add(&mut self, name: impl Into<String>, faces: Vec<SimplexWord>) -> Result<Nd> {
        let name = name.into();
        let dim = if faces.is_empty() { 0 } else { faces.len() - 1 };
        if dim > self.inner.truncation() {
            return Err(Error::Dimension(format!("{name} has dimension {dim} above the truncation")));
        }
        for (i, w) in faces.iter().enumerate() {
            if w.dim() + 1 != dim {
                return Err(Error::InvalidSpace(format!("face d{i} of {name} has dimension {}", w.dim())));
            }
            let b = w.base();
            if b.idx >= self.inner.nd[b.dim].len() {
                return Err(Error::InvalidSpace(format!("face d{i} of {name} refers to an unknown simplex")));
            }
        }
        let nd = &mut self.inner.nd[dim];
        nd.push(NdSimplex { name, faces });
        Ok(Nd::new(dim, nd.len() - 1))
    }

    pub fn current(&self) -> &SSet {
        &self.inner
    }

    /// Verifies the simplicial identities and returns the space.
    pub fn finish(self) -> Result<SSet> {
        self.inner.check()?;
        Ok(self.inner)
    }
}

impl SSet {
    pub fn truncation(&self) -> usize {
        self.nd.len() - 1
    }

    pub fn nd(&self, dim: usize) -> &[NdSimplex] {
        self.nd.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn nd_count(&self, dim: usize) -> usize {
        self.nd(dim).len()
    }

    pub fn nd_ids(&self, dim: usize) -> impl Iterator<Item = Nd> + '_ {
        (0..self.nd_count(dim)).map(move |i| Nd::new(dim, i))
    }

    pub fn name(&self, x: Nd) -> &str {
        &self.nd[x.dim][x.idx].name
    }

    pub fn find(&self, name: &str) -> Option<Nd> {
        self.nd
            .iter()
            .enumerate()
            .find_map(|(d, level)| level.iter().position(|s| s.name == name).map(|i| Nd::new(d, i)))
    }

    /// Word of a named simplex, for readable tests and gallery code.
    pub fn word(&self, name: &str) -> Option<SimplexWord> {
        self.find(name).map(SimplexWord::nd)
    }

    pub fn faces(&self, x: Nd) -> &[SimplexWord] {
        &self.nd[x.dim][x.idx].faces
    }

    /// `d_i` of an arbitrary simplex, in normal form.
    pub fn face(&self, i: usize, w: &SimplexWord) -> SimplexWord {
        assert!(w.dim() >= 1 && i <= w.dim(), "d_{i} on a {}-simplex", w.dim());
        match split_face(w.theta(), i) {
            FaceSplit::Surjective(theta) => SimplexWord::new(theta, w.base()),
            FaceSplit::Misses { k, rest } => self.faces(w.base())[k].precompose(&rest),
        }
    }

    /// Iterated faces keeping only the listed (increasing) vertices.
    pub fn restrict(&self, w: &SimplexWord, vertices: &[usize]) -> SimplexWord {
        let mut cur = w.clone();
        for i in (0..=w.dim()).rev() {
            if !vertices.contains(&i) {
                cur = self.face(i, &cur);
            }
        }
        cur
    }

    /// The edge from vertex `k - 1` to vertex `k`, for `1 <= k <= dim`.
    pub fn spine_edge(&self, w: &SimplexWord, k: usize) -> SimplexWord {
        self.restrict(w, &[k - 1, k])
    }

    pub fn vertex(&self, w: &SimplexWord, k: usize) -> SimplexWord {
        self.restrict(w, &[k])
    }

    /// All simplices of dimension `n` (degenerate ones included), ordered by
    /// base dimension, then base index, then degeneracy.
    pub fn words(&self, n: usize) -> Vec<SimplexWord> {
        let mut out = Vec::new();
        for m in 0..=n.min(self.truncation()) {
            let surj = surjections(n, m);
            for x in self.nd_ids(m) {
                for t in &surj {
                    out.push(SimplexWord::new(t.clone(), x));
                }
            }
        }
        out
    }

    pub fn is_reduced(&self) -> bool {
        self.nd_count(0) == 1
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on every stored simplex and
    /// `d_i s_j` relations on every stored simplex of dimension below `N`.
    pub fn check(&self) -> Result<()> {
        for n in 1..=self.truncation() {
            for (idx, s) in self.nd[n].iter().enumerate() {
                if s.faces.len() != n + 1 {
                    return Err(Error::InvalidSpace(format!("{} has {} faces", s.name, s.faces.len())));
                }
                for w in &s.faces {
                    if w.dim() + 1 != n || w.base().idx >= self.nd_count(w.base().dim) {
                        return Err(Error::InvalidSpace(format!("{} has an ill-formed face", s.name)));
                    }
                }
                if n >= 2 {
                    let x = SimplexWord::nd(Nd::new(n, idx));
                    for j in 1..=n {
                        for i in 0..j {
                            let lhs = self.face(i, &self.face(j, &x));
                            let rhs = self.face(j - 1, &self.face(i, &x));
                            if lhs != rhs {
                                return Err(Error::InvalidSpace(format!("d{i} d{j} != d{} d{i} on {}", j - 1, s.name)));
                            }
                        }
                    }
                }
            }
        }
        for n in 0..self.truncation() {
            for w in self.words(n) {
                for j in 0..=n {
                    let sw = w.degeneracy(j);
                    for i in 0..=n + 1 {
                        let lhs = self.face(i, &sw);
                        let rhs = if i < j {
                            self.face(i, &w).degeneracy(j - 1)
                        } else if i == j || i == j + 1 {
                            w.clone()
                        } else {
                            self.face(i - 1, &w).degeneracy(j)
                        };
                        if lhs != rhs {
                            return Err(Error::InvalidSpace(format!("d{i} s{j} identity fails on {w}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Same space with some simplices renamed.
    pub fn renamed(&self, rename: impl Fn(Nd, &str) -> Option<String>) -> SSet {
        let mut out = self.clone();
        for (d, level) in out.nd.iter_mut().enumerate() {
            for (i, s) in level.iter_mut().enumerate() {
                if let Some(n) = rename(Nd::new(d, i), &s.name) {
                    s.name = n;
                }
            }
        }
        out
    }

    /// Human-readable name of a word, e.g. `s1 s0 x`.
    pub fn describe(&self, w: &SimplexWord) -> String {
        let mut s = String::new();
        for j in w.degeneracy_indices() {
            s.push_str(&format!("s{j} "));
        }
        s.push_str(self.name(w.base()));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> SSet {
        let mut b = SSetBuilder::new(3).unwrap();
        let v = b.add("*", vec![]).unwrap();
        let pt = SimplexWord::nd(v);
        b.add("theta", vec![pt.clone(), pt]).unwrap();
        b.finish().unwrap()
    }

    #[test]
    fn circle_faces_of_degenerate_simplices() {
        let c = circle();
        let th = c.word("theta").unwrap();
        let s0 = th.degeneracy(0);
        assert_eq!(c.face(0, &s0), th);
        assert_eq!(c.face(1, &s0), th);
        assert_eq!(c.face(2, &s0), c.word("*").unwrap().degeneracy(0));
        assert_eq!(c.words(2).len(), 1 + 2);
        assert_eq!(c.describe(&s0), "s0 theta");
    }

    #[test]
    fn bad_identities_rejected() {
        // A triangle whose faces do not glue: d0 d1 vs d0 d0 disagree.
        let mut b = SSetBuilder::new(2).unwrap();
        let u = b.add("u", vec![]).unwrap();
        let v = b.add("v", vec![]).unwrap();
        let (u, v) = (SimplexWord::nd(u), SimplexWord::nd(v));
        let e = SimplexWord::nd(b.add("e", vec![v.clone(), u.clone()]).unwrap());
        let f = SimplexWord::nd(b.add("f", vec![u.clone(), v.clone()]).unwrap());
        b.add("t", vec![e.clone(), e, f]).unwrap();
        assert!(b.finish().is_err());
    }

    #[test]
    fn faces_must_exist() {
        let mut b = SSetBuilder::new(1).unwrap();
        let bogus = SimplexWord::nd(Nd::new(0, 3));
        assert!(b.add("e", vec![bogus.clone(), bogus]).is_err());
        assert!(SSetBuilder::new(MAX_TRUNCATION + 1).is_err());
    }

    #[test]
    fn spine_of_degenerate_word() {
        let c = circle();
        let th = c.word("theta").unwrap();
        let w = th.degeneracy(1);
        assert_eq!(c.spine_edge(&w, 1), th);
        assert!(c.spine_edge(&w, 2).is_degenerate());
    }
}
