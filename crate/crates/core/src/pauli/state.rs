use super::{Clifford, PauliElement};
use crate::algebra::{Dist, Rational};
use crate::error::{Error, Result};
use crate::sdist::{Outcome, SimplicialDistribution, Target};
use crate::simplicial::{SSet, SimplexWord};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// `ρ = Σ_a c_a T_a` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliState {
    n: usize,
    terms: BTreeMap<(u32, u32), Rational>,
}

impl PauliState {
    /// Requires `c_0 = 2^{-n}` (trace one).
    pub fn new(n: usize, terms: impl IntoIterator<Item = (PauliElement, Rational)>) -> Result<Self> {
        let mut acc: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for (p, c) in terms {
            if p.qubits() != n {
                return Err(Error::Pauli(format!("{p} is not an operator on {n} qubits")));
            }
            if !p.is_hermitian() {
                return Err(Error::Pauli(format!("{p} is not Hermitian")));
            }
            let c = if p.phase() == 2 { -c } else { c };
            *acc.entry(p.vector()).or_insert_with(Rational::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        let s = Self { n, terms: acc };
        let expected = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << n));
        if s.coefficient((0, 0)) != expected {
            return Err(Error::Pauli("identity coefficient must be 2^-n".into()));
        }
        Ok(s)
    }

    /// From labels such as `("-XYY", c)`.
    pub fn from_labels<'a>(n: usize, terms: impl IntoIterator<Item = (&'a str, Rational)>) -> Result<Self> {
        let parsed =
            terms.into_iter().map(|(s, c)| PauliElement::parse(s).map(|p| (p, c))).collect::<Result<Vec<_>>>()?;
        Self::new(n, parsed)
    }

    /// `2^{-n} Σ_{s ∈ S} s` for the stabilizer group `S` generated by
    /// independent commuting Hermitian generators.
    pub fn stabilizer(gens: &[PauliElement]) -> Result<Self> {
        let n = gens.first().map_or(0, PauliElement::qubits);
        let mut group = vec![PauliElement::identity(n)];
        for g in gens {
            if !g.is_hermitian() || group.iter().any(|h| !h.commutes(g)) {
                return Err(Error::Pauli(format!("{g} is not a commuting Hermitian generator")));
            }
            let next: Vec<PauliElement> = group.iter().map(|h| h.mul(g)).collect();
            if next.iter().any(|p| p.vector() == (0, 0)) {
                return Err(Error::Pauli("stabilizer generators are dependent or contain -1".into()));
            }
            group.extend(next);
        }
        let c = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << n));
        Self::new(n, group.into_iter().map(|p| (p, c.clone())))
    }

    /// `(|0…0⟩ + |1…1⟩)/√2`, stabilized by `Z_j Z_{j+1}` and `X…X`.
    pub fn ghz(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for j in 0..n.saturating_sub(1) {
            let mut s = "I".repeat(n);
            s.replace_range(j..j + 2, "ZZ");
            gens.push(PauliElement::parse(&s)?);
        }
        gens.push(PauliElement::parse(&"X".repeat(n))?);
        Self::stabilizer(&gens)
    }

    pub fn maximally_mixed(n: usize) -> Result<Self> {
        let c = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << n));
        Self::new(n, [(PauliElement::identity(n), c)])
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    /// Coefficient of `T_a`.
    pub fn coefficient(&self, a: (u32, u32)) -> Rational {
        self.terms.get(&a).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms as `(±T_a, |c|)` pairs, read as usual Pauli labels.
    pub fn terms(&self) -> impl Iterator<Item = (PauliElement, Rational)> + '_ {
        self.terms.iter().map(|(&(z, x), c)| {
            let t = PauliElement::t(self.n, z, x).expect("stored vectors fit");
            if c.is_negative() {
                (t.neg(), -c.clone())
            } else {
                (t, c.clone())
            }
        })
    }

    /// `Tr(ρ q) = i^λ 2^n c_b` for `q = i^λ T_b`; errors on an imaginary value.
    pub fn expectation(&self, q: &PauliElement) -> Result<Rational> {
        let c = self.coefficient(q.vector()) * Rational::from_integer((1u64 << self.n).into());
        match q.phase() {
            _ if c.is_zero() => Ok(c),
            0 => Ok(c),
            2 => Ok(-c),
            _ => Err(Error::Pauli(format!("⟨{q}⟩ is imaginary"))),
        }
    }

    /// `U ρ U†`.
    pub fn conjugate(&self, u: &Clifford) -> Result<Self> {
        let terms: Vec<(PauliElement, Rational)> = self.terms().map(|(p, c)| (u.conjugate(&p), c)).collect();
        Self::new(self.n, terms)
    }

    /// Joint outcome distribution of a commuting context; outcome `s_j`
    /// stands for the eigenvalue `(-1)^{s_j}` of the `j`-th operator.
    pub fn born(&self, context: &[PauliElement]) -> Result<Dist<Outcome, Rational>> {
        for (i, p) in context.iter().enumerate() {
            if p.qubits() != self.n {
                return Err(Error::Pauli(format!("{p} is not an operator on {} qubits", self.n)));
            }
            if !p.is_hermitian() {
                return Err(Error::Pauli(format!("{p} is not an observable")));
            }
            if context[..i].iter().any(|q| !q.commutes(p)) {
                return Err(Error::Pauli(format!("{p} does not commute with the rest of the context")));
            }
        }
        let k = context.len();
        let mut corr = Vec::with_capacity(1 << k);
        for set in 0..(1usize << k) {
            let mut prod = PauliElement::identity(self.n);
            for (j, p) in context.iter().enumerate() {
                if (set >> j) & 1 == 1 {
                    prod = prod.mul(p);
                }
            }
            corr.push(self.expectation(&prod)?);
        }
        let scale = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << k));
        let mut entries = Vec::with_capacity(1 << k);
        for s in 0..(1usize << k) {
            let mut p = Rational::zero();
            for (set, c) in corr.iter().enumerate() {
                if (s & set).count_ones() % 2 == 0 {
                    p += c;
                } else {
                    p -= c;
                }
            }
            p *= &scale;
            if p.is_negative() {
                return Err(Error::Pauli("negative probability: the state is not positive".into()));
            }
            entries.push(((0..k).map(|j| (s >> j) & 1).collect::<Outcome>(), p));
        }
        Dist::new(entries)
    }
}

/// The distribution `ρ_*` on a space whose nondegenerate edges carry
/// observables, with `d_1 σ = d_2 σ · d_0 σ` on every triangle.
pub fn quantum_distribution(state: &PauliState, x: &SSet, labels: &[PauliElement]) -> Result<SimplicialDistribution> {
    if labels.len() != x.nd_count(1) {
        return Err(Error::Pauli(format!("{} labels for {} edges", labels.len(), x.nd_count(1))));
    }
    let id = PauliElement::identity(state.qubits());
    let label = |w: &SimplexWord| {
        if w.is_degenerate() {
            id
        } else {
            labels[w.base().idx]
        }
    };
    for t in x.nd_ids(2) {
        let f = x.faces(t);
        if label(&f[1]) != label(&f[2]).mul(&label(&f[0])) {
            return Err(Error::Pauli(format!("labeling is not multiplicative on {}", x.name(t))));
        }
    }
    SimplicialDistribution::from_fn(x, Target::nerve(2), |s| {
        let w = SimplexWord::nd(s);
        let ctx: Vec<PauliElement> = (1..=s.dim).map(|k| label(&x.spine_edge(&w, k))).collect();
        state.born(&ctx)
    })
}
