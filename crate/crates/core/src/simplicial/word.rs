use std::fmt;

/// Id of a nondegenerate simplex: its dimension and position at that level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nd {
    pub dim: usize,
    pub idx: usize,
}

impl Nd {
    pub fn new(dim: usize, idx: usize) -> Self {
        Self { dim, idx }
    }
}

/// A simplex `θ^* x` in Eilenberg–Zilber normal form: `x` nondegenerate and
/// `θ: [n] -> [m]` a monotone surjection, stored by its values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexWord {
    theta: Vec<u8>,
    base: Nd,
}

impl SimplexWord {
    /// The nondegenerate simplex itself.
    pub fn nd(base: Nd) -> Self {
        Self { theta: (0..=base.dim as u8).collect(), base }
    }

    /// `theta` must be a monotone surjection onto `[base.dim]`.
    pub fn new(theta: Vec<u8>, base: Nd) -> Self {
        debug_assert!(is_surjection(&theta, base.dim), "{theta:?} is not a surjection onto [{}]", base.dim);
        Self { theta, base }
    }

    pub fn dim(&self) -> usize {
        self.theta.len() - 1
    }
    pub fn base(&self) -> Nd {
        self.base
    }
    pub fn theta(&self) -> &[u8] {
        &self.theta
    }
    pub fn is_degenerate(&self) -> bool {
        self.theta.len() != self.base.dim + 1
    }

    /// Indices `j_k > … > j_1` with `self = s_{j_k} ⋯ s_{j_1} base`.
    pub fn degeneracy_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.dim()).filter(|&j| self.theta[j] == self.theta[j + 1]).collect();
        out.reverse();
        out
    }

    /// `s_j`, which never leaves normal form.
    pub fn degeneracy(&self, j: usize) -> Self {
        assert!(j <= self.dim(), "s_{j} on a {}-simplex", self.dim());
        let mut theta = self.theta.clone();
        theta.insert(j, self.theta[j]);
        Self { theta, base: self.base }
    }

    /// Pulls back along a further surjection: `(θ^* x)` becomes `(θ ∘ ψ)^* x`.
    pub fn precompose(&self, psi: &[u8]) -> Self {
        Self { theta: psi.iter().map(|&i| self.theta[i as usize]).collect(), base: self.base }
    }

    /// Replaces the base by a word for it: `θ^*(ψ^* z) = (ψ θ)^* z`.
    pub fn substitute(&self, base_word: &SimplexWord) -> Self {
        debug_assert_eq!(base_word.dim(), self.base.dim);
        base_word.precompose(&self.theta)
    }
}

/// Outcome of `θ ∘ δ^i` for a monotone surjection `θ`.
pub(crate) enum FaceSplit {
    /// Still surjective.
    Surjective(Vec<u8>),
    /// Equals `δ^k ∘ θ'`.
    Misses { k: usize, rest: Vec<u8> },
}

pub(crate) fn split_face(theta: &[u8], i: usize) -> FaceSplit {
    let v = theta[i];
    let mut rest: Vec<u8> = theta.to_vec();
    rest.remove(i);
    if rest.contains(&v) {
        FaceSplit::Surjective(rest)
    } else {
        for x in rest.iter_mut() {
            if *x > v {
                *x -= 1;
            }
        }
        FaceSplit::Misses { k: v as usize, rest }
    }
}

pub(crate) fn is_surjection(theta: &[u8], m: usize) -> bool {
    !theta.is_empty()
        && theta[0] == 0
        && theta.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
        && *theta.last().unwrap() as usize == m
}

/// All monotone surjections `[n] -> [m]`, in lexicographic order.
pub fn surjections(n: usize, m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if m > n {
        return out;
    }
    let mut cur = vec![0u8];
    fn rec(cur: &mut Vec<u8>, n: usize, m: usize, out: &mut Vec<Vec<u8>>) {
        let last = *cur.last().unwrap() as usize;
        if cur.len() == n + 1 {
            if last == m {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = n + 1 - cur.len();
        if m - last < remaining || m == last {
            cur.push(last as u8);
            rec(cur, n, m, out);
            cur.pop();
        }
        if last < m {
            cur.push(last as u8 + 1);
            rec(cur, n, m, out);
            cur.pop();
        }
    }
    rec(&mut cur, n, m, &mut out);
    out
}

impl fmt::Display for SimplexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in self.degeneracy_indices() {
            write!(f, "s{j} ")?;
        }
        write!(f, "#{}:{}", self.base.dim, self.base.idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn surjection_counts() {
        for n in 0..6 {
            for m in 0..=n {
                let s = surjections(n, m);
                assert_eq!(s.len(), binom(n, m), "n={n} m={m}");
                assert!(s.iter().all(|t| is_surjection(t, m)));
            }
        }
    }

    #[test]
    fn degeneracy_word_roundtrip() {
        let x = SimplexWord::nd(Nd::new(1, 0));
        let w = x.degeneracy(0).degeneracy(2);
        assert_eq!(w.theta(), &[0, 0, 1, 1]);
        assert_eq!(w.degeneracy_indices(), vec![2, 0]);
        assert!(w.is_degenerate());
        assert!(!x.is_degenerate());
    }

    #[test]
    fn degeneracy_identity() {
        // s_i s_j = s_{j+1} s_i for i <= j
        let x = SimplexWord::nd(Nd::new(2, 0));
        for j in 0..=2 {
            for i in 0..=j {
                assert_eq!(x.degeneracy(j).degeneracy(i), x.degeneracy(i).degeneracy(j + 1));
            }
        }
    }

    #[test]
    fn split_face_cases() {
        match split_face(&[0, 0, 1], 0) {
            FaceSplit::Surjective(r) => assert_eq!(r, vec![0, 1]),
            FaceSplit::Misses { .. } => panic!(),
        }
        match split_face(&[0, 1, 1], 0) {
            FaceSplit::Misses { k, rest } => {
                assert_eq!(k, 0);
                assert_eq!(rest, vec![0, 0]);
            }
            FaceSplit::Surjective(_) => panic!(),
        }
    }
}
